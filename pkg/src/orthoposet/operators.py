"""Subset-valued operators derived from the cone algebra of an orthoposet.

The sharp and flat operators are disjunction/conjunction surrogates that
coincide with plain join and meet cones on compatible pairs; the
commutator and the compatibility relation measure how far a pair is from
commuting.  A Pixley-style ternary term and a residuated sharp
conjunction / sharp implication pair complete the set.

Results are cone sets (sharp, flat, commutator) or antichains (pixley,
conjunction, implication), exactly as the defining terms dictate.  A
singleton answer stays a one-bit mask and is never coerced to an element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .core import Mask, OrthoPoset

SHARP = "sharp"
FLAT = "flat"
COMMUTATOR = "commutator"
PIXLEY = "pixley"
CONJ = "conj"
IMPL = "impl"

OP_ARITY = {SHARP: 2, FLAT: 2, COMMUTATOR: 2, PIXLEY: 3, CONJ: 2, IMPL: 2}


def sharp(o: OrthoPoset, x: int, y: int) -> Mask:
    """Upper cone over the meets-cones of (x,y), (x,y') and (x',y); contains the top."""
    d, px, py = o.down, o.prime[x], o.prime[y]
    return o.upper_cone((d[x] & d[y]) | (d[x] & d[py]) | (d[px] & d[y]))


def flat(o: OrthoPoset, x: int, y: int) -> Mask:
    """Lower cone over the join-cones of (x,y), (x,y') and (x',y); contains the bottom."""
    u, px, py = o.up, o.prime[x], o.prime[y]
    return o.lower_cone((u[x] & u[y]) | (u[x] & u[py]) | (u[px] & u[y]))


def commutator(o: OrthoPoset, x: int, y: int) -> Mask:
    """Upper cone over all four meets-cones of {x, x'} against {y, y'}."""
    d, px, py = o.down, o.prime[x], o.prime[y]
    return o.upper_cone((d[x] & d[y]) | (d[x] & d[py]) | (d[px] & d[y]) | (d[px] & d[py]))


def compatible(o: OrthoPoset, x: int, y: int) -> bool:
    """True iff the upper cone of x equals the cone over L(x,y) and L(x,y')."""
    d, py = o.down, o.prime[y]
    return o.up[x] == o.upper_cone((d[x] & d[y]) | (d[x] & d[py]))


def pixley(o: OrthoPoset, x: int, y: int, z: int) -> Mask:
    """Min-antichain of the cone over L(x,z), L(x,y',z') and L(x',y',z)."""
    d = o.down
    px, py, pz = o.prime[x], o.prime[y], o.prime[z]
    parts = (d[x] & d[z]) | (d[x] & d[py] & d[pz]) | (d[px] & d[py] & d[z])
    return o.minimal(o.upper_cone(parts))


def sharp_conj(o: OrthoPoset, left: Mask, y: int) -> Mask:
    """Max-antichain of L(y, U(left, y')).

    ``left`` is a subset mask; a singleton recovers the binary operator.
    The set-valued form makes composing the implication into the
    conjunction well-typed when the implication is a non-singleton
    antichain (extended reading).
    """
    py = o.prime[y]
    return o.maximal(o.down[y] & o.lower_cone(o.upper_cone(left) & o.up[py]))


def sharp_impl(o: OrthoPoset, x: int, y: int) -> Mask:
    """Min-antichain of U(x', L(x,y))."""
    px = o.prime[x]
    return o.minimal(o.up[px] & o.upper_cone(o.down[x] & o.down[y]))


@dataclass(frozen=True)
class OperatorTable:
    """Full memoized table of one operator over the universe."""

    op_id: str
    arity: int
    entries: Mapping[tuple[int, ...], Mask]


_BINARY = {SHARP: sharp, FLAT: flat, COMMUTATOR: commutator, IMPL: sharp_impl}


def operator_table(o: OrthoPoset, op_id: str) -> OperatorTable:
    """Compute (or fetch the memoized) total table for ``op_id``.

    Tables are filled lazily per operator and cached on the orthoposet;
    regeneration is bit-identical because every entry is a pure function
    of the relation.
    """
    key = ("table", op_id)
    cached = o._cache.get(key)
    if cached is not None:
        return cached
    rng = range(o.n)
    if op_id in _BINARY:
        fn = _BINARY[op_id]
        entries = {(x, y): fn(o, x, y) for x, y in product(rng, rng)}
    elif op_id == CONJ:
        entries = {(x, y): sharp_conj(o, 1 << x, y) for x, y in product(rng, rng)}
    elif op_id == PIXLEY:
        entries = {(x, y, z): pixley(o, x, y, z) for x, y, z in product(rng, rng, rng)}
    else:
        raise ValueError(f"unknown operator id {op_id!r}")
    table = OperatorTable(op_id, OP_ARITY[op_id], entries)
    o._cache[key] = table
    return table
