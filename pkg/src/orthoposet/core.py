"""Finite bounded posets with an antitone involutive complementation.

Elements are integer indices into a tuple of labels.  Subsets of the
universe are plain ``int`` bitmasks (bit ``i`` set means element ``i`` is
a member), so cone computations reduce to bitwise AND/OR over precomputed
relation rows: ``down[x]`` is the principal lower cone ``{y | y <= x}``
and ``up[x]`` the principal upper cone ``{y | x <= y}``.

The relation is stored as its full reflexive-transitive closure; cover
lists are an input/output format only.  Validated values are immutable
and safe to share between threads; every operation is a pure function of
its inputs.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Mask = int

BOTTOM_LABEL = "0"
TOP_LABEL = "1"


def iter_bits(mask: Mask) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class OposetError(ValueError):
    """Base class for every validation, size-limit and input error."""


class SizeLimitError(OposetError):
    """A requested computation exceeds the configured size cap."""


@dataclass(frozen=True)
class Violation:
    """One broken axiom, with the elements that witness the break."""

    code: str
    elements: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        head = f"{self.code}({', '.join(self.elements)})"
        return f"{head}: {self.detail}" if self.detail else head


class ValidationError(OposetError):
    """Raised with the full list of axiom violations found."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """A validated finite bounded poset.

    ``down``/``up`` rows double as the cone table: the lower/upper cone of
    a subset is the intersection of its members' rows.
    """

    names: tuple[str, ...]
    down: tuple[Mask, ...]
    up: tuple[Mask, ...]
    bottom: int
    top: int
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.names)})

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> Mask:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise OposetError(f"unknown element label {label!r}") from None

    def label(self, i: int) -> str:
        return self.names[i]

    def mask(self, labels: Iterable[str]) -> Mask:
        m = 0
        for s in labels:
            m |= 1 << self.index(s)
        return m

    def labels(self, mask: Mask) -> tuple[str, ...]:
        return tuple(self.names[i] for i in iter_bits(mask))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lower_cone(self, subset: Mask) -> Mask:
        """Common lower bounds of ``subset``; the full universe for the empty set."""
        res = self.full_mask
        for i in iter_bits(subset):
            res &= self.down[i]
        return res

    def upper_cone(self, subset: Mask) -> Mask:
        """Common upper bounds of ``subset``; the full universe for the empty set."""
        res = self.full_mask
        for i in iter_bits(subset):
            res &= self.up[i]
        return res

    def minimal(self, subset: Mask) -> Mask:
        """Antichain of minimal elements of ``subset``."""
        res = 0
        for i in iter_bits(subset):
            if self.down[i] & subset == 1 << i:
                res |= 1 << i
        return res

    def maximal(self, subset: Mask) -> Mask:
        """Antichain of maximal elements of ``subset``."""
        res = 0
        for i in iter_bits(subset):
            if self.up[i] & subset == 1 << i:
                res |= 1 << i
        return res

    def set_leq(self, a: Mask, b: Mask) -> bool:
        """Every element of ``a`` below every element of ``b`` (vacuously true on empties)."""
        return self.upper_cone(a) & b == b

    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction as (lower, upper) index pairs, lexicographic order."""
        out = []
        for x in range(self.n):
            for y in iter_bits(self.up[x] & ~(1 << x)):
                if self.up[x] & self.down[y] == (1 << x) | (1 << y):
                    out.append((x, y))
        return out

    def heights(self) -> tuple[int, ...]:
        """Longest-chain height of each element above the bottom."""
        order = sorted(range(self.n), key=lambda i: self.down[i].bit_count())
        h = [0] * self.n
        for i in order:
            below = self.down[i] & ~(1 << i)
            h[i] = 1 + max((h[j] for j in iter_bits(below)), default=-1)
        return tuple(h)


@dataclass(frozen=True, eq=False)
class OrthoPoset(FinitePoset):
    """A finite poset with an antitone involutive complementation.

    ``prime[x]`` is the complement index of ``x``.  The cache dict holds
    memoized operator tables and subset-cone tables; filling it never
    changes any observable value.
    """

    prime: tuple[int, ...] = ()
    name: str = ""
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def involute(self, subset: Mask) -> Mask:
        """Elementwise image of ``subset`` under the complementation."""
        res = 0
        for i in iter_bits(subset):
            res |= 1 << self.prime[i]
        return res

    def orthogonal(self, x: int, y: int) -> bool:
        """True iff ``x`` is below the complement of ``y``."""
        return self.leq(x, self.prime[y])

    def with_name(self, name: str) -> "OrthoPoset":
        return dataclasses.replace(self, name=name)


def validate_order(
    names: Sequence[str],
    leq: Sequence[Sequence[bool | int]],
    bottom: str = BOTTOM_LABEL,
    top: str = TOP_LABEL,
) -> FinitePoset:
    """Check the bounded-poset axioms on a relation matrix.

    ``leq[i][j]`` states that ``names[i] <= names[j]``.  On failure raises
    :class:`ValidationError` carrying the complete list of violations
    (which pairs break reflexivity, antisymmetry, transitivity or the
    bounds).
    """
    names = tuple(names)
    n = len(names)
    if len(set(names)) != n:
        raise OposetError("element labels must be distinct")
    if len(leq) != n or any(len(row) != n for row in leq):
        raise OposetError("relation matrix must be square over the labels")
    if bottom not in names or top not in names:
        raise OposetError(f"bounds {bottom!r}/{top!r} must appear among the labels")
    bot = names.index(bottom)
    topi = names.index(top)

    up = [0] * n
    for i in range(n):
        row = 0
        for j in range(n):
            if leq[i][j]:
                row |= 1 << j
        up[i] = row

    violations: list[Violation] = []
    for i in range(n):
        if not up[i] >> i & 1:
            violations.append(Violation("not-reflexive", (names[i],)))
    for i in range(n):
        for j in iter_bits(up[i]):
            if j != i and up[j] >> i & 1:
                if i < j:
                    violations.append(Violation("not-antisymmetric", (names[i], names[j])))
    for i in range(n):
        for j in iter_bits(up[i]):
            missing = up[j] & ~up[i]
            for k in iter_bits(missing):
                violations.append(Violation("not-transitive", (names[i], names[j], names[k])))
    for x in range(n):
        if not up[bot] >> x & 1:
            violations.append(Violation("no-bottom", (names[x],), f"{bottom!r} is not below {names[x]!r}"))
        if not up[x] >> topi & 1:
            violations.append(Violation("no-top", (names[x],), f"{names[x]!r} is not below {top!r}"))
    if violations:
        raise ValidationError(violations)

    down = [0] * n
    for i in range(n):
        for j in iter_bits(up[i]):
            down[j] |= 1 << i
    return FinitePoset(names, tuple(down), tuple(up), bot, topi)


def validate_ortho(
    poset: FinitePoset,
    prime_pairs: Iterable[tuple[str, str]],
    name: str = "",
) -> OrthoPoset:
    """Attach and validate a complementation given as label pairs.

    Each non-bound element must appear in exactly one pair; the bounds are
    paired with each other implicitly.  Checks involutivity by
    construction, absence of fixed points, antitonicity and the
    complementation laws (lower cone of {x, x'} is the bottom, upper cone
    the top), reporting every violation with its witnessing cone.
    """
    n = poset.n
    names = poset.names
    violations: list[Violation] = []

    prime = [-1] * n
    if poset.bottom == poset.top:
        violations.append(
            Violation("fixed-point", (names[poset.bottom],), "single bound is its own complement")
        )
        raise ValidationError(violations)
    prime[poset.bottom] = poset.top
    prime[poset.top] = poset.bottom

    for a, b in prime_pairs:
        x, y = poset.index(a), poset.index(b)
        if x in (poset.bottom, poset.top) or y in (poset.bottom, poset.top):
            violations.append(Violation("involution-bound", (a, b), "bounds are paired implicitly"))
            continue
        if x == y:
            violations.append(Violation("fixed-point", (a,)))
            continue
        if prime[x] != -1 or prime[y] != -1:
            violations.append(Violation("involution-duplicate", (a, b)))
            continue
        prime[x] = y
        prime[y] = x
    for x in range(n):
        if prime[x] == -1:
            violations.append(Violation("involution-incomplete", (names[x],)))
    if violations:
        raise ValidationError(violations)

    for x in range(n):
        for y in iter_bits(poset.up[x]):
            if not poset.leq(prime[y], prime[x]):
                violations.append(Violation("not-antitone", (names[x], names[y])))
    for x in range(n):
        low = poset.down[x] & poset.down[prime[x]]
        if low != 1 << poset.bottom:
            witness = ", ".join(names[i] for i in iter_bits(low))
            violations.append(
                Violation("not-complementation", (names[x],), f"lower cone of {{x, x'}} is {{{witness}}}")
            )
        high = poset.up[x] & poset.up[prime[x]]
        if high != 1 << poset.top:
            witness = ", ".join(names[i] for i in iter_bits(high))
            violations.append(
                Violation("not-complementation", (names[x],), f"upper cone of {{x, x'}} is {{{witness}}}")
            )
    if violations:
        raise ValidationError(violations)

    return OrthoPoset(names, poset.down, poset.up, poset.bottom, poset.top, tuple(prime), name)


def closure_from_covers(n: int, covers: Iterable[tuple[int, int]]) -> list[list[bool]]:
    """Reflexive-transitive closure of a cover relation, as a boolean matrix."""
    up = [1 << i for i in range(n)]
    for x, y in covers:
        up[x] |= 1 << y
    # bitset Warshall: propagate whole reachability rows
    for j in range(n):
        row_j = up[j]
        for i in range(n):
            if up[i] >> j & 1:
                up[i] |= row_j
    return [[bool(up[i] >> j & 1) for j in range(n)] for i in range(n)]


def from_covers(
    elements: Sequence[str],
    covers: Iterable[tuple[str, str]],
    involution: Iterable[tuple[str, str]],
    name: str = "",
) -> OrthoPoset:
    """Build a validated orthoposet from middle labels, covers and prime pairs.

    The bounds are implicit: ``0`` sits below and ``1`` above every
    element whether or not the covers mention them.
    """
    names = (BOTTOM_LABEL, *elements, TOP_LABEL)
    index = {s: i for i, s in enumerate(names)}
    if len(index) != len(names):
        raise OposetError("element labels must be distinct and not reuse the bounds")
    n = len(names)
    pairs = []
    for a, b in covers:
        if a not in index or b not in index:
            raise OposetError(f"cover ({a!r}, {b!r}) references an unknown label")
        pairs.append((index[a], index[b]))
    for i in range(n):
        pairs.append((0, i))
        pairs.append((i, n - 1))
    leq = closure_from_covers(n, pairs)
    poset = validate_order(names, leq)
    return validate_ortho(poset, involution, name)
