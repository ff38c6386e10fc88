"""Structural classification of orthoposets with counterexample witnesses.

Each check decides one axiom of the hierarchy (lattice, orthomodular,
skew orthomodular, strong skew orthomodular, Boolean/distributive, the
residuation conditions, freedom from the benzene obstruction) and reports
either success or the first violating tuple in canonical index order.
Full witness lists are available behind ``all_witnesses``.
"""

from __future__ import annotations

import time
from typing import Iterator

from .core import Mask, OrthoPoset, SizeLimitError, iter_bits
from .reports import CheckReport, Witness

LATTICE = "lattice"
ORTHOMODULAR = "orthomodular"
SKEW_OMP = "skew_omp"
STRONG_SKEW_OMP = "strong_skew_omp"
BOOLEAN = "boolean"
ADJOINT_CONDITIONS = "adjoint_conditions"
BENZENE_FREE = "benzene_free"

MODE_ANTICHAINS = "antichains"
MODE_SUBSETS = "subsets"

SUBSET_SCAN_LIMIT = 14


def _report(property_id, witnesses, t0, mode=""):
    return CheckReport(
        property_id=property_id,
        holds=not witnesses,
        witnesses=tuple(witnesses),
        mode=mode,
        elapsed=time.perf_counter() - t0,
    )


def check_lattice(o: OrthoPoset, *, all_witnesses: bool = False) -> CheckReport:
    """Every pair has a least upper bound and a greatest lower bound."""
    t0 = time.perf_counter()
    wits: list[Witness] = []
    for x in range(o.n):
        for y in range(x + 1, o.n):
            mins = o.minimal(o.up[x] & o.up[y])
            if mins.bit_count() != 1:
                wits.append(Witness((o.names[x], o.names[y]), "join-missing",
                                    (("minimal_upper_bounds", o.labels(mins)),)))
                if not all_witnesses:
                    return _report(LATTICE, wits, t0)
            maxs = o.maximal(o.down[x] & o.down[y])
            if maxs.bit_count() != 1:
                wits.append(Witness((o.names[x], o.names[y]), "meet-missing",
                                    (("maximal_lower_bounds", o.labels(maxs)),)))
                if not all_witnesses:
                    return _report(LATTICE, wits, t0)
    return _report(LATTICE, wits, t0)


def check_orthomodular(o: OrthoPoset, *, all_witnesses: bool = False) -> CheckReport:
    """Orthogonal pairs have joins, and x <= y forces y = x v (y ^ x').

    Witnesses name the failing clause: a two-minimal-upper-bound pair for
    a missing orthogonal join, or the triple (x, y, x') for a broken
    orthomodular law.
    """
    t0 = time.perf_counter()
    wits: list[Witness] = []
    for x in range(o.n):
        for y in range(o.n):
            if y >= x and o.orthogonal(x, y):
                mins = o.minimal(o.up[x] & o.up[y])
                if mins.bit_count() != 1:
                    wits.append(Witness((o.names[x], o.names[y]), "orthogonal-join-missing",
                                        (("minimal_upper_bounds", o.labels(mins)),)))
                    if not all_witnesses:
                        return _report(ORTHOMODULAR, wits, t0)
            if o.leq(x, y):
                px = o.prime[x]
                meet = o.maximal(o.down[y] & o.down[px])
                if meet.bit_count() != 1:
                    wits.append(Witness((o.names[x], o.names[y], o.names[px]),
                                        "complement-meet-missing",
                                        (("maximal_lower_bounds", o.labels(meet)),)))
                    if not all_witnesses:
                        return _report(ORTHOMODULAR, wits, t0)
                    continue
                rejoin = o.minimal(o.upper_cone((1 << x) | meet))
                if rejoin != 1 << y:
                    wits.append(Witness((o.names[x], o.names[y], o.names[px]), "law-violated",
                                        (("complement_meet", o.labels(meet)),
                                         ("rejoin", o.labels(rejoin)))))
                    if not all_witnesses:
                        return _report(ORTHOMODULAR, wits, t0)
    return _report(ORTHOMODULAR, wits, t0)


def _skew_witness(o: OrthoPoset, x: int, y: int) -> Witness | None:
    got = o.upper_cone((1 << x) | (o.down[y] & o.down[o.prime[x]]))
    if got != o.up[y]:
        return Witness((o.names[x], o.names[y]), "upper-form",
                       (("expected", o.labels(o.up[y])), ("computed", o.labels(got))))
    return None


def check_skew_omp(o: OrthoPoset, *, all_witnesses: bool = False) -> CheckReport:
    """x <= y forces U(y) = U(x, L(y,x')); only the upper form is tested per pair.

    The lower form is its image under the involution and is exercised
    once as a cross-property on the test fleet, not per call.
    """
    t0 = time.perf_counter()
    wits: list[Witness] = []
    for x in range(o.n):
        for y in iter_bits(o.up[x]):
            w = _skew_witness(o, x, y)
            if w is not None:
                wits.append(w)
                if not all_witnesses:
                    return _report(SKEW_OMP, wits, t0)
    return _report(SKEW_OMP, wits, t0)


def subset_cone_tables(o: OrthoPoset) -> tuple[list[Mask], list[Mask]]:
    """Upper/lower cones of every subset, indexed by subset mask (2^n entries)."""
    if o.n > SUBSET_SCAN_LIMIT:
        raise SizeLimitError(f"subset tables need n <= {SUBSET_SCAN_LIMIT}, got {o.n}")
    cached = o._cache.get("subset_cones")
    if cached is not None:
        return cached
    size = 1 << o.n
    usub = [0] * size
    lsub = [0] * size
    usub[0] = lsub[0] = o.full_mask
    for s in range(1, size):
        low = s & -s
        i = low.bit_length() - 1
        rest = s ^ low
        usub[s] = usub[rest] & o.up[i]
        lsub[s] = lsub[rest] & o.down[i]
    o._cache["subset_cones"] = (usub, lsub)
    return usub, lsub


def antichain_masks(o: OrthoPoset) -> Iterator[Mask]:
    """All antichains (as masks, empty set included), depth-first in index order.

    Extension candidates are pruned to elements incomparable with the
    chosen prefix, so the walk never touches a comparable pair.
    """
    full = o.full_mask
    incomp = [~(o.down[i] | o.up[i]) & full for i in range(o.n)]

    def rec(acc: Mask, cand: Mask) -> Iterator[Mask]:
        yield acc
        rest = cand
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            yield from rec(acc | low, rest & incomp[i])

    return rec(0, full)


def _strong_skew_witness(o, a_mask, y, upper_a, lower_a_primed) -> Witness | None:
    got = upper_a & o.upper_cone(o.down[y] & lower_a_primed)
    if got != o.up[y]:
        return Witness((*o.labels(a_mask), o.names[y]), "upper-form",
                       (("subset", o.labels(a_mask)),
                        ("expected", o.labels(o.up[y])),
                        ("computed", o.labels(got))))
    return None


def check_strong_skew_omp(
    o: OrthoPoset, mode: str = MODE_ANTICHAINS, *, all_witnesses: bool = False
) -> CheckReport:
    """A <= y forces U(y) = U(A, L(y,A')) for the selected quantification.

    ``antichains`` mode (the default) quantifies over antichains only,
    which decides the same property; ``subsets`` mode is the independent
    full-powerset oracle and is capped at 14 elements.
    """
    t0 = time.perf_counter()
    wits: list[Witness] = []
    if mode == MODE_SUBSETS:
        usub, lsub = subset_cone_tables(o)
        for a_mask in range(1 << o.n):
            upper_a = usub[a_mask]
            lower_ap = lsub[o.involute(a_mask)]
            for y in iter_bits(upper_a):
                got = upper_a & usub[o.down[y] & lower_ap]
                if got != o.up[y]:
                    wits.append(Witness((*o.labels(a_mask), o.names[y]), "upper-form",
                                        (("subset", o.labels(a_mask)),
                                         ("expected", o.labels(o.up[y])),
                                         ("computed", o.labels(got)))))
                    if not all_witnesses:
                        return _report(STRONG_SKEW_OMP, wits, t0, mode)
    elif mode == MODE_ANTICHAINS:
        for a_mask in antichain_masks(o):
            upper_a = o.upper_cone(a_mask)
            lower_ap = o.lower_cone(o.involute(a_mask))
            for y in iter_bits(upper_a):
                w = _strong_skew_witness(o, a_mask, y, upper_a, lower_ap)
                if w is not None:
                    wits.append(w)
                    if not all_witnesses:
                        return _report(STRONG_SKEW_OMP, wits, t0, mode)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _report(STRONG_SKEW_OMP, wits, t0, mode)


def _distributive_sides(o: OrthoPoset, k: int, x: int, y: int, z: int) -> tuple[Mask, Mask]:
    d, u = o.down, o.up
    if k == 1:
        left = o.lower_cone(u[x] & u[y]) & d[z]
        right = o.lower_cone(o.upper_cone((d[x] & d[z]) | (d[y] & d[z])))
    elif k == 2:
        left = o.upper_cone(o.lower_cone(u[x] & u[y]) & d[z])
        right = o.upper_cone((d[x] & d[z]) | (d[y] & d[z]))
    elif k == 3:
        left = o.upper_cone(d[x] & d[y]) & u[z]
        right = o.upper_cone(o.lower_cone((u[x] & u[z]) | (u[y] & u[z])))
    elif k == 4:
        left = o.lower_cone(o.upper_cone(d[x] & d[y]) & u[z])
        right = o.lower_cone((u[x] & u[z]) | (u[y] & u[z]))
    else:
        raise ValueError(f"identity index must be 1..4, got {k}")
    return left, right


def _identity_scan(o, k, all_witnesses):
    wits = []
    for x in range(o.n):
        for y in range(o.n):
            for z in range(o.n):
                left, right = _distributive_sides(o, k, x, y, z)
                if left != right:
                    wits.append(Witness((o.names[x], o.names[y], o.names[z]), f"identity-{k}",
                                        (("left", o.labels(left)), ("right", o.labels(right)))))
                    if not all_witnesses:
                        return wits
    return wits


def check_boolean(o: OrthoPoset, which_identity: int | str = "all", *,
                  all_witnesses: bool = False) -> CheckReport:
    """Distributivity in cone form, for one of the four identities or all.

    In ``all`` mode each identity is evaluated and the report's mode field
    records whether the four verdicts agree (they are equivalent on
    posets, so disagreement would flag an implementation fault).
    """
    t0 = time.perf_counter()
    if which_identity == "all":
        verdicts = []
        wits: list[Witness] = []
        for k in (1, 2, 3, 4):
            kw = _identity_scan(o, k, all_witnesses)
            verdicts.append(not kw)
            wits.extend(kw)
        agree = "agree" if len(set(verdicts)) == 1 else "disagree"
        return _report(BOOLEAN, wits, t0, f"all:{agree}")
    k = int(which_identity)
    wits = _identity_scan(o, k, all_witnesses)
    return _report(BOOLEAN, wits, t0, f"identity-{k}")


def check_adjoint_conditions(o: OrthoPoset, *, all_witnesses: bool = False) -> CheckReport:
    """The two residuation inclusions behind the conjunction/implication adjunction.

    Lower form: L(U(L(x,y), y'), y) within L(x); upper form dually.  The
    report distinguishes the failing form per witness.
    """
    t0 = time.perf_counter()
    d, u = o.down, o.up
    wits: list[Witness] = []
    for x in range(o.n):
        for y in range(o.n):
            py = o.prime[y]
            low = o.lower_cone(o.upper_cone(d[x] & d[y]) & u[py]) & d[y]
            if low & ~d[x]:
                wits.append(Witness((o.names[x], o.names[y]), "lower-inclusion",
                                    (("left", o.labels(low)), ("bound", o.labels(d[x])))))
                if not all_witnesses:
                    return _report(ADJOINT_CONDITIONS, wits, t0)
            high = o.upper_cone(o.lower_cone(u[x] & u[y]) & d[py]) & u[y]
            if high & ~u[x]:
                wits.append(Witness((o.names[x], o.names[y]), "upper-inclusion",
                                    (("left", o.labels(high)), ("bound", o.labels(u[x])))))
                if not all_witnesses:
                    return _report(ADJOINT_CONDITIONS, wits, t0)
    return _report(ADJOINT_CONDITIONS, wits, t0)


def find_benzene_obstruction(o: OrthoPoset, *, all_witnesses: bool = False) -> CheckReport:
    """Search for the hexagon obstruction: a < b with L(b,a') = {0} (or its dual).

    A strict pair with a trivial relative meet (or trivial relative join
    in the dual form) is exactly the configuration that skew
    orthomodularity forbids.
    """
    t0 = time.perf_counter()
    bot = 1 << o.bottom
    top = 1 << o.top
    wits: list[Witness] = []
    for a in range(o.n):
        for b in iter_bits(o.up[a] & ~(1 << a)):
            if o.down[b] & o.down[o.prime[a]] == bot:
                wits.append(Witness((o.names[a], o.names[b]), "meet-form",
                                    (("relative_meet_cone", o.labels(bot)),)))
                if not all_witnesses:
                    return _report(BENZENE_FREE, wits, t0)
            if o.up[a] & o.up[o.prime[b]] == top:
                wits.append(Witness((o.names[a], o.names[b]), "join-form",
                                    (("relative_join_cone", o.labels(top)),)))
                if not all_witnesses:
                    return _report(BENZENE_FREE, wits, t0)
    return _report(BENZENE_FREE, wits, t0)


CHECKS = {
    LATTICE: check_lattice,
    ORTHOMODULAR: check_orthomodular,
    SKEW_OMP: check_skew_omp,
    STRONG_SKEW_OMP: check_strong_skew_omp,
    BOOLEAN: check_boolean,
    ADJOINT_CONDITIONS: check_adjoint_conditions,
    BENZENE_FREE: find_benzene_obstruction,
}


def property_holds(o: OrthoPoset, property_id: str) -> bool:
    """Verdict-only evaluation used by search filters.

    Same boolean as the corresponding report, but free to scan in any
    order: triples of non-bound elements are tried first (violations live
    there), and for the distributivity conjunction the remaining
    identities are skipped once one fails, which cannot change the
    conjunction's value.
    """
    if property_id == BOOLEAN:
        order = [i for i in range(o.n) if i not in (o.bottom, o.top)]
        order += [o.bottom, o.top]
        for k in (1, 2, 3, 4):
            for x in order:
                for y in order:
                    for z in order:
                        left, right = _distributive_sides(o, k, x, y, z)
                        if left != right:
                            return False
        return True
    if property_id == STRONG_SKEW_OMP:
        return check_strong_skew_omp(o, MODE_ANTICHAINS).holds
    return CHECKS[property_id](o).holds
