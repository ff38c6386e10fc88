"""Named fixture models and exhaustive enumeration of small orthoposets.

The enumerator walks strict orders on the non-bound elements directly,
keeping the relation transitively closed and closed under the involution
flip at every step, and pruning branches that break antisymmetry or the
complementation law.  Isomorph rejection minimises the relation matrix
over complement-compatible permutations (pairs map to pairs), guided by
degree invariants.
"""

from __future__ import annotations

import string
from itertools import permutations, product
from typing import Callable, Iterable, Iterator

from .core import (
    BOTTOM_LABEL,
    TOP_LABEL,
    Mask,
    OrthoPoset,
    SizeLimitError,
    from_covers,
    iter_bits,
    validate_order,
    validate_ortho,
)

CROWN_LIMIT = 31
POWER_SET_LIMIT = 6
ENUMERATION_LIMIT = 12


def _letters(n: int) -> list[str]:
    base = list(string.ascii_lowercase)
    out = []
    i = 0
    while len(out) < n:
        for c in base:
            out.append(c if i == 0 else f"{c}{i}")
            if len(out) == n:
                break
        i += 1
    return out


def crown(n: int) -> OrthoPoset:
    """Crown orthoposet: n atoms, n coatoms, each atom below every coatom
    except its own complement.

    Sizes 0, 1 and 3 give Boolean algebras; size 2 is a non-orthomodular
    lattice; sizes 4 and up are not even orthomodular posets, yet the
    whole family satisfies the strong skew orthomodular law.
    """
    if n < 0 or n > CROWN_LIMIT:
        raise SizeLimitError(f"crown size must be in 0..{CROWN_LIMIT}, got {n}")
    atoms = _letters(n)
    coatoms = [a + "'" for a in atoms]
    names = (BOTTOM_LABEL, *atoms, *coatoms, TOP_LABEL)
    size = len(names)
    bot, top = 0, size - 1

    def rel(i: int, j: int) -> bool:
        if i == j or i == bot or j == top:
            return True
        return 1 <= i <= n and n < j <= 2 * n and j - n != i

    leq = [[rel(i, j) for j in range(size)] for i in range(size)]
    poset = validate_order(names, leq)
    return validate_ortho(poset, list(zip(atoms, coatoms)), f"crown{n}")


def benzene() -> OrthoPoset:
    """The six-element hexagon: two chained complement pairs.

    This is the forbidden configuration for skew orthomodularity (a < b
    with a trivial relative meet), and the smallest lattice counterexample
    in the hierarchy.
    """
    return from_covers(
        ("a", "b", "b'", "a'"),
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "b'"), ("b'", "a'"), ("a'", "1")],
        [("a", "a'"), ("b", "b'")],
        "benzene",
    )


def nonlattice12() -> OrthoPoset:
    """A twelve-element orthoposet fixture that is not a lattice.

    Shipped exactly as transcribed from its source diagram; its
    distributivity verdict is computed by the checker and frozen as a
    regression expectation rather than assumed (see KNOWN_ISSUES).
    """
    covers = [
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
        ("a", "d'"), ("a", "b'"),
        ("b", "e"), ("b", "a'"),
        ("c", "d'"), ("c", "e'"),
        ("d", "c'"), ("d", "a'"),
        ("e", "c'"), ("e'", "b'"),
        ("d'", "1"), ("c'", "1"), ("b'", "1"), ("a'", "1"),
    ]
    return from_covers(
        ("a", "b", "c", "d", "e", "e'", "d'", "c'", "b'", "a'"),
        covers,
        [("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'"), ("e", "e'")],
        "nonlattice12",
    )


def power_set(k: int) -> OrthoPoset:
    """Boolean algebra of all subsets of a k-element set, primed by complement.

    The canonical distributive reference model; ``power_set(0)`` is
    rejected because the single element would be its own complement.
    """
    if k < 0 or k > POWER_SET_LIMIT:
        raise SizeLimitError(f"power set exponent must be in 0..{POWER_SET_LIMIT}, got {k}")
    subsets = sorted(range(1 << k), key=lambda s: (s.bit_count(), s))
    full = (1 << k) - 1

    def name_of(s: int) -> str:
        if s == 0:
            return BOTTOM_LABEL
        if s == full:
            return TOP_LABEL
        return "s" + "".join(str(i + 1) for i in iter_bits(s))

    names = tuple(name_of(s) for s in subsets)
    leq = [[(a & b) == a for b in subsets] for a in subsets]
    poset = validate_order(names, leq)
    pairs = [
        (name_of(s), name_of(full ^ s))
        for s in subsets
        if s not in (0, full) and s < (full ^ s)
    ]
    return validate_ortho(poset, pairs, f"powerset{k}")


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------
# Middle elements are indexed 0..2k-1 with complement partner i^1; the
# search decides orbit representatives (u<v together with its flip
# v'<u') one at a time, so every relation reached is flip-closed.


def _orbit_list(k: int) -> list[tuple[int, int]]:
    m = 2 * k
    orbits = []
    seen = set()
    for u in range(m):
        for v in range(m):
            if u == v or v == (u ^ 1) or (u, v) in seen:
                continue
            seen.add((u, v))
            seen.add((v ^ 1, u ^ 1))
            orbits.append((u, v))
    return orbits


def _raw_middle_relations(k: int) -> Iterator[tuple[int, ...]]:
    """Yield every labeled strict order on the 2k middle elements that
    extends to an orthoposet (as a tuple of strict down-set masks)."""
    m = 2 * k
    if k == 0:
        yield ()
        return
    orbits = _orbit_list(k)
    sdown = [0] * m
    sup = [0] * m
    out = [0] * m  # out[a] bit b: pair (a,b) decided absent

    def add_edge(u: int, v: int) -> list[tuple[int, int]] | None:
        lows = sdown[u] | (1 << u)
        highs = sup[v] | (1 << v)
        cand: list[tuple[int, int]] = []
        for a in iter_bits(lows):
            for b in iter_bits(highs):
                cand.append((a, b))
                cand.append((b ^ 1, a ^ 1))
        added: list[tuple[int, int]] = []
        ok = True
        for a, b in cand:
            if sup[a] >> b & 1:
                continue
            if b == (a ^ 1) or sup[b] >> a & 1 or out[a] >> b & 1:
                ok = False
                break
            sup[a] |= 1 << b
            sdown[b] |= 1 << a
            added.append((a, b))
        if ok:
            for _, b in added:
                if sdown[b] & sdown[b ^ 1]:
                    ok = False
                    break
        if not ok:
            for a, b in added:
                sup[a] &= ~(1 << b)
                sdown[b] &= ~(1 << a)
            return None
        return added

    def rec(oi: int) -> Iterator[tuple[int, ...]]:
        if oi == len(orbits):
            yield tuple(sdown)
            return
        u, v = orbits[oi]
        if sup[u] >> v & 1:
            yield from rec(oi + 1)
            return
        fu, fv = v ^ 1, u ^ 1
        out[u] |= 1 << v
        out[fu] |= 1 << fv
        yield from rec(oi + 1)
        out[u] &= ~(1 << v)
        out[fu] &= ~(1 << fv)
        added = add_edge(u, v)
        if added is not None:
            yield from rec(oi + 1)
            for a, b in added:
                sup[a] &= ~(1 << b)
                sdown[b] &= ~(1 << a)

    yield from rec(0)


def _middle_certificate(k: int, sdown: tuple[int, ...]) -> bytes:
    """Canonical form of a flip-closed middle relation.

    The relation matrix is minimised over relabelings that respect a
    degree-refinement invariant: slots are laid out by sorted pair
    invariant, each pair may only move to a slot of its own invariant
    class, and within a pair the orientation must match the slot's
    element invariants.  That map family is defined purely from
    isomorphism invariants, so isomorphic relations minimise over the
    same matrix set and get equal certificates; only symmetric models pay
    for a large class.
    """
    m = 2 * k
    if m == 0:
        return b""
    sup = [0] * m
    for b in range(m):
        for a in iter_bits(sdown[b]):
            sup[a] |= 1 << b

    base = [(sdown[e].bit_count(), sup[e].bit_count()) for e in range(m)]
    iv = []
    for e in range(m):
        below = tuple(sorted(base[x] for x in iter_bits(sdown[e])))
        above = tuple(sorted(base[x] for x in iter_bits(sup[e])))
        iv.append((base[e], below, above))
    pair_inv = [tuple(sorted((iv[2 * p], iv[2 * p + 1]))) for p in range(k)]

    # canonical slot layout: pair slots ordered by invariant
    slot_layout = sorted(range(k), key=lambda p: pair_inv[p])
    classes: dict[tuple, tuple[list[int], list[int]]] = {}
    for q, p in enumerate(slot_layout):
        classes.setdefault(pair_inv[p], ([], []))[1].append(q)
    for p in range(k):
        classes[pair_inv[p]][0].append(p)

    rel_pairs = [(a, b) for b in range(m) for a in iter_bits(sdown[b])]
    nbytes = (m * m + 7) // 8
    best: bytes | None = None

    class_items = sorted(classes.items())
    slot_perms = [permutations(slots) for _, (_, slots) in class_items]
    for combo in product(*slot_perms):
        pair_slot = {}
        for (_, (pairs, _)), perm in zip(class_items, combo):
            for p, q in zip(pairs, perm):
                pair_slot[p] = q
        # orientation: slot 2q takes the lexicographically smaller element
        # invariant; symmetric pairs contribute both orientations
        flip_options = []
        for p in range(k):
            lo, hi = pair_inv[p]
            opts = []
            if (iv[2 * p], iv[2 * p + 1]) == (lo, hi):
                opts.append(False)
            if (iv[2 * p + 1], iv[2 * p]) == (lo, hi):
                opts.append(True)
            flip_options.append(opts)
        for flips in product(*flip_options):
            pos = [0] * m
            for p in range(k):
                q = pair_slot[p]
                if flips[p]:
                    pos[2 * p] = 2 * q + 1
                    pos[2 * p + 1] = 2 * q
                else:
                    pos[2 * p] = 2 * q
                    pos[2 * p + 1] = 2 * q + 1
            matrix = 0
            for a, b in rel_pairs:
                matrix |= 1 << (pos[a] * m + pos[b])
            cand = matrix.to_bytes(nbytes, "big")
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def canonical_certificate(o: OrthoPoset) -> bytes:
    """Isomorphism certificate of a validated orthoposet.

    Two orthoposets have equal certificates iff there is an order
    isomorphism between them commuting with the complementation.
    """
    middles = [i for i in range(o.n) if i not in (o.bottom, o.top)]
    pairs = [(x, o.prime[x]) for x in middles if x < o.prime[x]]
    k = len(pairs)
    pos = {}
    for p, (x, px) in enumerate(pairs):
        pos[x] = 2 * p
        pos[px] = 2 * p + 1
    m = 2 * k
    sdown = [0] * m
    for x in middles:
        for y in iter_bits(o.down[x] & ~(1 << x)):
            if y not in (o.bottom, o.top):
                sdown[pos[x]] |= 1 << pos[y]
    return bytes([k]) + _middle_certificate(k, tuple(sdown))


def isomorphic(a: OrthoPoset, b: OrthoPoset) -> bool:
    return canonical_certificate(a) == canonical_certificate(b)


def _enum_names(k: int) -> tuple[str, ...]:
    letters = _letters(k)
    labels = []
    for p in range(k):
        labels.append(letters[p])
        labels.append(letters[p] + "'")
    return (BOTTOM_LABEL, *labels, TOP_LABEL)


def _middle_relation_to_orthoposet(k: int, sdown: tuple[int, ...], name: str) -> OrthoPoset:
    """Direct construction from an enumerator-produced middle relation.

    The search tree only reaches relations that satisfy every axiom, so
    the rows are assembled without re-running the validators; the test
    suite re-validates enumerated models through the public pipeline as
    an oracle.
    """
    m = 2 * k
    names = _enum_names(k)
    size = m + 2
    full = (1 << size) - 1
    top_bit = 1 << (size - 1)
    down = [0] * size
    up = [0] * size
    down[0] = 1
    up[0] = full
    down[size - 1] = full
    up[size - 1] = top_bit
    for e in range(m):
        i = e + 1
        down[i] = 1 | (sdown[e] << 1) | (1 << i)
        up[i] = top_bit | (1 << i)
    for e in range(m):
        for x in iter_bits(sdown[e]):
            up[x + 1] |= 1 << (e + 1)
    prime = [0] * size
    prime[0] = size - 1
    prime[size - 1] = 0
    for p in range(k):
        prime[2 * p + 1] = 2 * p + 2
        prime[2 * p + 2] = 2 * p + 1
    return OrthoPoset(names, tuple(down), tuple(up), 0, size - 1, tuple(prime), name)


def raw_data(o: OrthoPoset):
    """The (names, leq matrix, prime pairs) triple for validator re-checks."""
    leq = [[bool(o.up[i] >> j & 1) for j in range(o.n)] for i in range(o.n)]
    pairs = [
        (o.names[x], o.names[o.prime[x]])
        for x in range(o.n)
        if x < o.prime[x] and x != o.bottom
    ]
    return o.names, leq, pairs


class ModelStream:
    """Iterator over generated orthoposets with bookkeeping.

    ``yielded`` counts the models handed out so far.  With ``dedup`` the
    stream never repeats an isomorphism class; the optional filter runs
    before deduplication so rejected models never pay the certificate
    cost.
    """

    def __init__(self, source: str, models: Iterator[OrthoPoset],
                 filter: Callable[[OrthoPoset], bool] | None = None):
        self.source = source
        self.filter = filter
        self.yielded = 0
        self._models = models

    def __iter__(self) -> Iterator[OrthoPoset]:
        for model in self._models:
            self.yielded += 1
            yield model


def enumerate_orthoposets(
    max_n: int,
    dedup: bool = True,
    filter: Callable[[OrthoPoset], bool] | None = None,
    sizes: Iterable[int] | None = None,
) -> ModelStream:
    """Stream every orthoposet with at most ``max_n`` elements.

    Sizes are necessarily even (the complementation is a fixed-point-free
    involution).  With ``dedup`` (default) exactly one representative per
    isomorphism class is yielded; ``filter`` is applied to each candidate
    first.
    """
    if max_n > ENUMERATION_LIMIT:
        raise SizeLimitError(f"enumeration capped at {ENUMERATION_LIMIT} elements, got {max_n}")
    if sizes is None:
        sizes = range(2, max_n + 1, 2)
    size_list = [n for n in sizes if n <= max_n]

    def generate() -> Iterator[OrthoPoset]:
        for n in size_list:
            if n % 2 or n < 2:
                continue
            k = (n - 2) // 2
            seen: set[bytes] = set()
            index = 0
            for sdown in _raw_middle_relations(k):
                if filter is None and dedup:
                    # nothing to evaluate before dedup: certify first,
                    # build only class representatives
                    cert = _middle_certificate(k, sdown)
                    if cert in seen:
                        continue
                    seen.add(cert)
                    yield _middle_relation_to_orthoposet(k, sdown, f"size{n}-{index}")
                    index += 1
                    continue
                model = _middle_relation_to_orthoposet(k, sdown, f"size{n}-{index}")
                if filter is not None and not filter(model):
                    continue
                if dedup:
                    cert = _middle_certificate(k, sdown)
                    if cert in seen:
                        continue
                    seen.add(cert)
                yield model.with_name(f"size{n}-{index}")
                index += 1

    return ModelStream(f"enumerate(max_n={max_n}, dedup={dedup})", generate(), filter)


FACTORIES: dict[str, Callable[..., OrthoPoset]] = {
    "crown": crown,
    "benzene": benzene,
    "nonlattice12": nonlattice12,
    "powerset": power_set,
}
