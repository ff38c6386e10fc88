"""Quantified law suites: each algebraic law the operators satisfy, run as
an exhaustive test over one orthoposet.

Laws with hypotheses run gated by default (skipped when the hypothesis
fails, reported as not applicable and vacuously true).  An informational
run evaluates the body anyway and labels its witnesses
``outside-hypothesis``; those witnesses never make the law count as
failed.  All loops are in canonical index order, so reports are
deterministic.
"""

from __future__ import annotations

from .checks import (
    MODE_ANTICHAINS,
    check_adjoint_conditions,
    check_boolean,
    check_skew_omp,
    check_strong_skew_omp,
    subset_cone_tables,
)
from .core import OrthoPoset, iter_bits
from .operators import (
    COMMUTATOR,
    CONJ,
    FLAT,
    IMPL,
    SHARP,
    compatible,
    operator_table,
    pixley,
    sharp_conj,
    sharp_impl,
)
from .reports import LawReport, Witness

OUTSIDE = "outside-hypothesis"

BASICS_IDS = (
    "commutator_symmetry",
    "compat_prime_invariance",
    "sharp_flat_commutativity",
    "sharp_flat_duality",
    "sharp_absorption",
    "flat_absorption",
    "cone_bounds",
    "commutator_decomposition",
    "comparable_consequences",
    "orthogonal_reduction",
    "mutual_compat_sharp",
    "mutual_compat_flat",
    "compat_commutator_top",
)


def _compat_matrix(o: OrthoPoset) -> list[list[bool]]:
    cached = o._cache.get("compat")
    if cached is None:
        cached = [[compatible(o, x, y) for y in range(o.n)] for x in range(o.n)]
        o._cache["compat"] = cached
    return cached


def _law(law_id, applicable, witnesses, reading="") -> LawReport:
    effective = tuple(w for w in witnesses if w.clause.split(";")[0] != OUTSIDE)
    return LawReport(law_id, applicable, not effective, tuple(witnesses), reading)


def _pair_witness(o, x, y, clause, *cones) -> Witness:
    return Witness((o.names[x], o.names[y]), clause,
                   tuple((name, o.labels(mask)) for name, mask in cones))


def suite_operator_basics(o: OrthoPoset, *, all_witnesses: bool = False) -> list[LawReport]:
    """The thirteen unconditional identities tying sharp, flat, the
    commutator and compatibility together on any orthoposet."""
    S = operator_table(o, SHARP).entries
    F = operator_table(o, FLAT).entries
    C = operator_table(o, COMMUTATOR).entries
    compat = _compat_matrix(o)
    d, u, pr = o.down, o.up, o.prime
    bot, top = 1 << o.bottom, 1 << o.top
    reports = []

    def scan_pairs(law_id, fn):
        wits = []
        for x in range(o.n):
            for y in range(o.n):
                w = fn(x, y)
                if w is not None:
                    wits.append(w)
                    if not all_witnesses:
                        reports.append(_law(law_id, True, wits))
                        return
        reports.append(_law(law_id, True, wits))

    def scan_single(law_id, fn):
        wits = []
        for x in range(o.n):
            w = fn(x)
            if w is not None:
                wits.append(w)
                if not all_witnesses:
                    break
        reports.append(_law(law_id, True, wits))

    def basics_commutator_symmetry(a, b):
        pa, pb = pr[a], pr[b]
        ref = C[a, b]
        for other in ((a, pb), (pa, b), (pa, pb), (b, a), (b, pa), (pb, a), (pb, pa)):
            if C[other] != ref:
                return _pair_witness(o, a, b, "asymmetric",
                                     ("commutator", ref), ("variant", C[other]))
        return None

    def basics_compat_prime(a, b):
        if compat[a][b] != compat[a][pr[b]]:
            return _pair_witness(o, a, b, "prime-sensitivity")
        return None

    def basics_commutativity(a, b):
        if S[a, b] != S[b, a]:
            return _pair_witness(o, a, b, "sharp", ("left", S[a, b]), ("right", S[b, a]))
        if F[a, b] != F[b, a]:
            return _pair_witness(o, a, b, "flat", ("left", F[a, b]), ("right", F[b, a]))
        return None

    def basics_duality(a, b):
        pa, pb = pr[a], pr[b]
        if F[a, b] != o.involute(S[pa, pb]):
            return _pair_witness(o, a, b, "flat-from-sharp",
                                 ("flat", F[a, b]), ("primed_sharp", o.involute(S[pa, pb])))
        if S[a, b] != o.involute(F[pa, pb]):
            return _pair_witness(o, a, b, "sharp-from-flat",
                                 ("sharp", S[a, b]), ("primed_flat", o.involute(F[pa, pb])))
        return None

    def basics_sharp_absorption(a):
        pa = pr[a]
        if not (S[o.bottom, a] == S[a, o.bottom] == S[a, a] == u[a]):
            return Witness((o.names[a],), "unit", (("upper_cone", o.labels(u[a])),))
        if not (S[a, pa] == S[a, o.top] == S[o.top, a] == top):
            return Witness((o.names[a],), "top", (("sharp_with_complement", o.labels(S[a, pa])),))
        return None

    def basics_flat_absorption(a):
        pa = pr[a]
        if not (F[o.bottom, a] == F[a, o.bottom] == F[a, pa] == bot):
            return Witness((o.names[a],), "zero", (("flat_with_complement", o.labels(F[a, pa])),))
        if not (F[a, a] == F[a, o.top] == F[o.top, a] == d[a]):
            return Witness((o.names[a],), "unit", (("lower_cone", o.labels(d[a])),))
        return None

    def basics_cone_bounds(a, b):
        if (u[a] & u[b]) & ~S[a, b]:
            return _pair_witness(o, a, b, "sharp", ("upper_cone", u[a] & u[b]), ("sharp", S[a, b]))
        if (d[a] & d[b]) & ~F[a, b]:
            return _pair_witness(o, a, b, "flat", ("lower_cone", d[a] & d[b]), ("flat", F[a, b]))
        return None

    def basics_decomposition(a, b):
        pa, pb = pr[a], pr[b]
        if C[a, b] != S[a, b] & o.upper_cone(d[pa] & d[pb]):
            return _pair_witness(o, a, b, "commutator",
                                 ("commutator", C[a, b]),
                                 ("decomposed", S[a, b] & o.upper_cone(d[pa] & d[pb])))
        if o.involute(C[a, b]) != F[a, b] & o.lower_cone(u[pa] & u[pb]):
            return _pair_witness(o, a, b, "primed-commutator",
                                 ("primed_commutator", o.involute(C[a, b])),
                                 ("decomposed", F[a, b] & o.lower_cone(u[pa] & u[pb])))
        return None

    def basics_comparable(a, b):
        if not o.leq(a, b):
            return None
        pa, pb = pr[a], pr[b]
        if not compat[a][b] or not compat[pb][pa]:
            return _pair_witness(o, a, b, "compatibility")
        if C[a, b] != S[a, b] & u[pb]:
            return _pair_witness(o, a, b, "commutator",
                                 ("commutator", C[a, b]), ("expected", S[a, b] & u[pb]))
        if o.involute(C[a, b]) != F[a, b] & d[pa]:
            return _pair_witness(o, a, b, "primed-commutator",
                                 ("primed_commutator", o.involute(C[a, b])),
                                 ("expected", F[a, b] & d[pa]))
        return None

    def basics_orthogonal(a, b):
        if o.orthogonal(a, b) and S[a, b] != u[a] & u[b]:
            return _pair_witness(o, a, b, "sharp",
                                 ("sharp", S[a, b]), ("upper_cone", u[a] & u[b]))
        if o.leq(pr[a], b) and F[a, b] != d[a] & d[b]:
            return _pair_witness(o, a, b, "flat",
                                 ("flat", F[a, b]), ("lower_cone", d[a] & d[b]))
        return None

    def basics_mutual_sharp(a, b):
        if compat[a][b] and compat[b][a] and S[a, b] != u[a] & u[b]:
            return _pair_witness(o, a, b, "sharp",
                                 ("sharp", S[a, b]), ("upper_cone", u[a] & u[b]))
        return None

    def basics_mutual_flat(a, b):
        pa, pb = pr[a], pr[b]
        if compat[pa][pb] and compat[pb][pa] and F[a, b] != d[a] & d[b]:
            return _pair_witness(o, a, b, "flat",
                                 ("flat", F[a, b]), ("lower_cone", d[a] & d[b]))
        return None

    def basics_commutator_top(a, b):
        if compat[a][b] and compat[pr[a]][pr[b]] and C[a, b] != top:
            return _pair_witness(o, a, b, "commutator", ("commutator", C[a, b]))
        return None

    scan_pairs(BASICS_IDS[0], basics_commutator_symmetry)
    scan_pairs(BASICS_IDS[1], basics_compat_prime)
    scan_pairs(BASICS_IDS[2], basics_commutativity)
    scan_pairs(BASICS_IDS[3], basics_duality)
    scan_single(BASICS_IDS[4], basics_sharp_absorption)
    scan_single(BASICS_IDS[5], basics_flat_absorption)
    scan_pairs(BASICS_IDS[6], basics_cone_bounds)
    scan_pairs(BASICS_IDS[7], basics_decomposition)
    scan_pairs(BASICS_IDS[8], basics_comparable)
    scan_pairs(BASICS_IDS[9], basics_orthogonal)
    scan_pairs(BASICS_IDS[10], basics_mutual_sharp)
    scan_pairs(BASICS_IDS[11], basics_mutual_flat)
    scan_pairs(BASICS_IDS[12], basics_commutator_top)
    return reports


def suite_comparable_pairs(o: OrthoPoset, *, informational: bool = False,
                           all_witnesses: bool = False) -> LawReport:
    """In skew orthomodular posets comparable pairs collapse: a <= b gives
    sharp = U(b), flat = L(a) and commutator = top."""
    applicable = check_skew_omp(o).holds
    if not applicable and not informational:
        return _law("comparable_pairs", False, ())
    prefix = "" if applicable else OUTSIDE + ";"
    top = 1 << o.top
    wits = []
    S = operator_table(o, SHARP).entries
    F = operator_table(o, FLAT).entries
    C = operator_table(o, COMMUTATOR).entries
    for a in range(o.n):
        for b in iter_bits(o.up[a]):
            bad = None
            if S[a, b] != o.up[b]:
                bad = ("sharp", S[a, b], ("expected", o.up[b]))
            elif F[a, b] != o.down[a]:
                bad = ("flat", F[a, b], ("expected", o.down[a]))
            elif C[a, b] != top:
                bad = ("commutator", C[a, b], ("expected", top))
            if bad is not None:
                clause, got, (ename, expected) = bad
                wits.append(_pair_witness(o, a, b, prefix + clause,
                                          ("computed", got), (ename, expected)))
                if not all_witnesses:
                    return _law("comparable_pairs", applicable, wits)
    return _law("comparable_pairs", applicable, wits)


def suite_compat_equivalence(o: OrthoPoset, *, informational: bool = True,
                             all_witnesses: bool = False) -> LawReport:
    """On strong skew orthomodular posets, a C b, b C a and commutator = top
    are equivalent for every pair.

    The body is evaluated even when the hypothesis fails (informational by
    default): models outside the hypothesis demonstrate how the
    equivalence breaks, with witnesses labeled accordingly.
    """
    applicable = check_strong_skew_omp(o, MODE_ANTICHAINS).holds
    if not applicable and not informational:
        return _law("compat_equivalence", False, ())
    prefix = "" if applicable else OUTSIDE + ";"
    compat = _compat_matrix(o)
    C = operator_table(o, COMMUTATOR).entries
    top = 1 << o.top
    d = o.down
    wits = []
    for a in range(o.n):
        for b in range(o.n):
            ab, ba, comm = compat[a][b], compat[b][a], C[a, b] == top
            if ab == ba == comm:
                continue
            pa, pb = o.prime[a], o.prime[b]
            wits.append(Witness(
                (o.names[a], o.names[b]),
                prefix + f"ab={ab},ba={ba},commutator_top={comm}",
                (("commutator", o.labels(C[a, b])),
                 ("upper_cone_b", o.labels(o.up[b])),
                 ("b_compat_sides", o.labels(o.upper_cone((d[b] & d[a]) | (d[b] & d[pa])))),
                 ("upper_cone_a", o.labels(o.up[a])),
                 ("a_compat_sides", o.labels(o.upper_cone((d[a] & d[b]) | (d[a] & d[pb]))))),
            ))
            if not all_witnesses:
                return _law("compat_equivalence", applicable, wits)
    return _law("compat_equivalence", applicable, wits)


def suite_compat_symmetry(o: OrthoPoset, *, informational: bool = False,
                          all_witnesses: bool = False) -> LawReport:
    """A symmetric compatibility relation forces the skew orthomodular law."""
    compat = _compat_matrix(o)
    symmetric = all(compat[x][y] == compat[y][x] for x in range(o.n) for y in range(x + 1, o.n))
    if not symmetric and not informational:
        return _law("compat_symmetry", False, ())
    prefix = "" if symmetric else OUTSIDE + ";"
    skew = check_skew_omp(o, all_witnesses=all_witnesses)
    wits = tuple(
        Witness(w.elements, prefix + w.clause if prefix else w.clause, w.cones)
        for w in skew.witnesses
    )
    return _law("compat_symmetry", symmetric, wits)


def _pixley_term_witnesses(o: OrthoPoset, all_witnesses: bool) -> list[Witness]:
    wits = []
    for x in range(o.n):
        for z in range(o.n):
            if pixley(o, x, x, z) != 1 << z:
                wits.append(_pair_witness(o, x, z, "majority-left",
                                          ("computed", pixley(o, x, x, z))))
                if not all_witnesses:
                    return wits
            if pixley(o, x, z, z) != 1 << x:
                wits.append(_pair_witness(o, x, z, "majority-right",
                                          ("computed", pixley(o, x, z, z))))
                if not all_witnesses:
                    return wits
            if pixley(o, x, z, x) != 1 << x:
                wits.append(_pair_witness(o, x, z, "outer",
                                          ("computed", pixley(o, x, z, x))))
                if not all_witnesses:
                    return wits
    return wits


def _pixley_cone_witnesses(o: OrthoPoset, min_both: bool, all_witnesses: bool) -> list[Witness]:
    wits = []
    d = o.down
    for x in range(o.n):
        px = o.prime[x]
        for y in range(o.n):
            left = o.minimal(o.upper_cone(o.lower_cone(o.up[x] & o.up[px]) & d[y]))
            right = o.upper_cone((d[x] & d[y]) | (d[px] & d[y]))
            if min_both:
                right = o.minimal(right)
            if left != right:
                wits.append(_pair_witness(o, x, y, "cone-identity",
                                          ("left", left), ("right", right)))
                if not all_witnesses:
                    return wits
    return wits


def suite_pixley(o: OrthoPoset, *, all_witnesses: bool = False) -> list[LawReport]:
    """The Pixley-term identities, their cone characterization under both
    readings of the ambiguous side, and the Boolean corollary.

    The characterization applies the min operator to the left side only
    as written (``literal``) or to both sides (``min-both-sides``); each
    reading's report states whether it is equivalent to the term
    identities on this model.
    """
    term_wits = _pixley_term_witnesses(o, all_witnesses)
    term_holds = not term_wits
    reports = []
    for reading, min_both in (("literal", False), ("min-both-sides", True)):
        cone_wits = _pixley_cone_witnesses(o, min_both, all_witnesses)
        cone_holds = not cone_wits
        if term_holds == cone_holds:
            reports.append(_law("pixley_term", True, (), reading))
        else:
            side = "term-identities" if not term_holds else "cone-identity"
            wits = tuple(
                Witness(w.elements, f"equivalence-breaks:{side};{w.clause}", w.cones)
                for w in (term_wits if not term_holds else cone_wits)
            )
            reports.append(_law("pixley_term", True, wits, reading))
    boolean = check_boolean(o).holds
    reports.append(_law("pixley_boolean", boolean,
                        tuple(term_wits) if boolean else ()))
    return reports


def suite_adjointness(o: OrthoPoset, *, informational: bool = False,
                      all_witnesses: bool = False) -> LawReport:
    """Residuation: a (.) b <= c exactly when a <= b -> c, on every triple,
    provided the two adjunction conditions hold."""
    applicable = check_adjoint_conditions(o).holds
    if not applicable and not informational:
        return _law("adjunction", False, ())
    prefix = "" if applicable else OUTSIDE + ";"
    wits = []
    conj = operator_table(o, CONJ).entries
    impl = operator_table(o, IMPL).entries
    for a in range(o.n):
        bit_a = 1 << a
        for b in range(o.n):
            left_table = conj[a, b]
            for c in range(o.n):
                lhs = o.set_leq(left_table, 1 << c)
                rhs = o.set_leq(bit_a, impl[b, c])
                if lhs != rhs:
                    wits.append(Witness(
                        (o.names[a], o.names[b], o.names[c]),
                        prefix + f"conj_le={lhs},le_impl={rhs}",
                        (("conjunction", o.labels(left_table)),
                         ("implication", o.labels(impl[b, c]))),
                    ))
                    if not all_witnesses:
                        return _law("adjunction", applicable, wits)
    return _law("adjunction", applicable, wits)


def suite_modus_ponens(o: OrthoPoset, *, informational: bool = False,
                       all_witnesses: bool = False) -> LawReport:
    """(x -> y) (.) x <= y for all pairs, with the set-valued left operand.

    The implication may be a non-singleton antichain, so the conjunction
    is taken in its extended set-valued form; the report is flagged with
    that reading.
    """
    applicable = check_adjoint_conditions(o).holds
    if not applicable and not informational:
        return _law("modus_ponens", False, (), "extended")
    prefix = "" if applicable else OUTSIDE + ";"
    wits = []
    for x in range(o.n):
        for y in range(o.n):
            antecedent = sharp_impl(o, x, y)
            combined = sharp_conj(o, antecedent, x)
            if not o.set_leq(combined, 1 << y):
                wits.append(_pair_witness(o, x, y, prefix + "inequality",
                                          ("implication", antecedent),
                                          ("conjunction", combined)))
                if not all_witnesses:
                    return _law("modus_ponens", applicable, wits, "extended")
    return _law("modus_ponens", applicable, wits, "extended")


def suite_forced_join(o: OrthoPoset, *, informational: bool = False,
                      all_witnesses: bool = False) -> LawReport:
    """In strong skew orthomodular posets, A <= a with L(a,A') = {0} forces
    a to be the join of A.  Scans every subset, so capped like the
    subset-mode checker."""
    usub, lsub = subset_cone_tables(o)
    applicable = check_strong_skew_omp(o, MODE_ANTICHAINS).holds
    if not applicable and not informational:
        return _law("forced_join", False, ())
    prefix = "" if applicable else OUTSIDE + ";"
    bot = 1 << o.bottom
    wits = []
    for a_mask in range(1 << o.n):
        upper_a = usub[a_mask]
        lower_ap = lsub[o.involute(a_mask)]
        for a in iter_bits(upper_a):
            if o.down[a] & lower_ap != bot:
                continue
            if upper_a != o.up[a]:
                wits.append(Witness((*o.labels(a_mask), o.names[a]), prefix + "not-least",
                                    (("subset", o.labels(a_mask)),
                                     ("upper_cone", o.labels(upper_a)),
                                     ("candidate_cone", o.labels(o.up[a])))))
                if not all_witnesses:
                    return _law("forced_join", applicable, wits)
    return _law("forced_join", applicable, wits)


def suite_boolean_consequences(o: OrthoPoset, *, informational: bool = False,
                               all_witnesses: bool = False) -> LawReport:
    """Everything a Boolean poset must satisfy at once: the adjunction
    conditions, total compatibility, the skew orthomodular law and the
    Pixley term identities."""
    applicable = check_boolean(o).holds
    if not applicable and not informational:
        return _law("boolean_consequences", False, ())
    prefix = "" if applicable else OUTSIDE + ";"
    wits: list[Witness] = []

    def collect(tag, more):
        for w in more:
            wits.append(Witness(w.elements, f"{prefix}{tag};{w.clause}", w.cones))

    adj = check_adjoint_conditions(o, all_witnesses=all_witnesses)
    collect("adjoint-conditions", adj.witnesses)
    if adj.holds or all_witnesses:
        compat = _compat_matrix(o)
        for x in range(o.n):
            for y in range(o.n):
                if not compat[x][y]:
                    collect("total-compatibility", [_pair_witness(o, x, y, "incompatible")])
                    break
            else:
                continue
            break
        if not wits or all_witnesses:
            collect("skew-law", check_skew_omp(o, all_witnesses=all_witnesses).witnesses)
        if not wits or all_witnesses:
            collect("pixley-term", _pixley_term_witnesses(o, all_witnesses))
    return _law("boolean_consequences", applicable, wits)


SUITES = {
    "basics": suite_operator_basics,
    "comparable": suite_comparable_pairs,
    "compat-equivalence": suite_compat_equivalence,
    "symmetry": suite_compat_symmetry,
    "pixley": suite_pixley,
    "adjunction": suite_adjointness,
    "boolean": suite_boolean_consequences,
    "modus-ponens": suite_modus_ponens,
    "forced-join": suite_forced_join,
}

SUBSET_BOUND_SUITES = {"forced-join"}


def run_suites(o: OrthoPoset, names=None, *, informational: bool = False,
               all_witnesses: bool = False) -> list[LawReport]:
    """Run the selected suites (all size-appropriate ones by default).

    Returns a flat report list in registry order; the purely structural
    suites ignore the informational flag because they have no hypothesis.
    """
    from .checks import SUBSET_SCAN_LIMIT

    if names is None:
        names = [s for s in SUITES
                 if s not in SUBSET_BOUND_SUITES or o.n <= SUBSET_SCAN_LIMIT]
    reports: list[LawReport] = []
    for suite_name in names:
        fn = SUITES[suite_name]
        kwargs = {"all_witnesses": all_witnesses}
        # hypothesis-free suites take no informational flag; the others keep
        # their own default unless an informational run is requested
        if informational and suite_name not in ("basics", "pixley"):
            kwargs["informational"] = True
        result = fn(o, **kwargs)
        if isinstance(result, list):
            reports.extend(result)
        else:
            reports.append(result)
    return reports
