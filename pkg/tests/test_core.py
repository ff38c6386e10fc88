import pytest
from hypothesis import given, settings, strategies as st

import oracle
from orthoposet import (
    OposetError,
    ValidationError,
    benzene,
    crown,
    from_covers,
    power_set,
    validate_order,
    validate_ortho,
)
from orthoposet.core import closure_from_covers, iter_bits


def codes(exc):
    return {v.code for v in exc.value.violations}


class TestValidateOrder:
    def test_two_chain(self):
        p = validate_order(("0", "1"), [[1, 1], [0, 1]])
        assert p.n == 2 and p.bottom == 0 and p.top == 1

    def test_antisymmetry_violation(self):
        leq = [
            [1, 1, 1, 1],
            [0, 1, 1, 1],
            [0, 1, 1, 1],
            [0, 0, 0, 1],
        ]
        with pytest.raises(ValidationError) as exc:
            validate_order(("0", "a", "b", "1"), leq)
        assert codes(exc) == {"not-antisymmetric"}
        (v,) = exc.value.violations
        assert v.elements == ("a", "b")

    def test_transitivity_violation_reported_with_triple(self):
        leq = [
            [1, 1, 0, 1],
            [0, 1, 1, 1],
            [0, 0, 1, 1],
            [0, 0, 0, 1],
        ]
        with pytest.raises(ValidationError) as exc:
            validate_order(("0", "a", "b", "1"), leq)
        assert any(v.code == "not-transitive" and v.elements == ("0", "a", "b")
                   for v in exc.value.violations)

    def test_missing_reflexivity_collected(self):
        leq = [[1, 1], [0, 0]]
        with pytest.raises(ValidationError) as exc:
            validate_order(("0", "1"), leq)
        assert "not-reflexive" in codes(exc)

    def test_unbounded(self):
        # two incomparable elements, no top
        leq = [
            [1, 1, 1, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ]
        with pytest.raises(ValidationError) as exc:
            validate_order(("0", "a", "b", "t"), leq, top="t")
        assert "no-top" in codes(exc)

    def test_crown_cover_closure_is_valid(self):
        # covers of the 4-crown, closed transitively, validate to 10 elements
        names = ("0", "a", "b", "c", "d", "a'", "b'", "c'", "d'", "1")
        covers = []
        for atom in (1, 2, 3, 4):
            covers.append((0, atom))
            for coat in (5, 6, 7, 8):
                if coat - 4 != atom:
                    covers.append((atom, coat))
        for coat in (5, 6, 7, 8):
            covers.append((coat, 9))
        leq = closure_from_covers(10, covers)
        p = validate_order(names, leq)
        assert p.n == 10

    def test_duplicate_labels_rejected(self):
        with pytest.raises(OposetError):
            validate_order(("0", "a", "a", "1"), [[1] * 4] * 4)


class TestValidateOrtho:
    def test_benzene_data_accepted(self):
        o = benzene()
        assert o.prime[o.index("a")] == o.index("a'")
        assert o.prime[o.bottom] == o.top

    def test_comparable_complement_rejected(self):
        # 4-chain 0 < a < a' < 1: L(a,a') = {0,a} breaks complementation
        names = ("0", "a", "a'", "1")
        leq = [[i <= j for j in range(4)] for i in range(4)]
        p = validate_order(names, leq)
        with pytest.raises(ValidationError) as exc:
            validate_ortho(p, [("a", "a'")])
        bad = [v for v in exc.value.violations if v.code == "not-complementation"]
        assert bad and "0, a" in bad[0].detail

    def test_crown_pairing_accepted(self):
        o = crown(4)
        assert o.n == 10

    def test_one_element_poset_rejected(self):
        p = validate_order(("0",), [[1]], bottom="0", top="0")
        with pytest.raises(ValidationError) as exc:
            validate_ortho(p, [])
        assert "fixed-point" in codes(exc)

    def test_fixed_point_pair_rejected(self):
        names = ("0", "a", "b", "1")
        leq = [
            [1, 1, 1, 1],
            [0, 1, 0, 1],
            [0, 0, 1, 1],
            [0, 0, 0, 1],
        ]
        p = validate_order(names, leq)
        with pytest.raises(ValidationError) as exc:
            validate_ortho(p, [("a", "a"), ("b", "b")])
        assert "fixed-point" in codes(exc)

    def test_incomplete_involution_rejected(self):
        names = ("0", "a", "b", "1")
        leq = [
            [1, 1, 1, 1],
            [0, 1, 0, 1],
            [0, 0, 1, 1],
            [0, 0, 0, 1],
        ]
        p = validate_order(names, leq)
        with pytest.raises(ValidationError) as exc:
            validate_ortho(p, [])
        assert "involution-incomplete" in codes(exc)

    def test_antitone_violation_reported(self):
        # a < b with pairing (a,b') and (b,a') is fine; force a breakage by
        # pairing (a,a'),(b,b') on a poset where a < b but b' and a' are
        # incomparable in the wrong direction
        o = from_covers(("a", "b", "b'", "a'"),
                        [("a", "b"), ("b'", "a'")],
                        [("a", "a'"), ("b", "b'")])
        assert o.n == 6  # sanity: the hexagon assembles fine
        with pytest.raises(ValidationError) as exc:
            from_covers(("a", "b", "b'", "a'"),
                        [("a", "b"), ("a'", "b'")],
                        [("a", "a'"), ("b", "b'")])
        assert "not-antitone" in codes(exc)


class TestConeAlgebra:
    def test_lower_cone_of_two_atoms(self, crown4):
        m = crown4.mask(["a", "b"])
        assert crown4.labels(crown4.lower_cone(m)) == ("0",)

    def test_upper_cone_of_two_atoms(self, crown4):
        m = crown4.mask(["a", "b"])
        assert set(crown4.labels(crown4.upper_cone(m))) == {"c'", "d'", "1"}

    def test_empty_set_cones_are_universe(self, crown4):
        assert crown4.lower_cone(0) == crown4.full_mask
        assert crown4.upper_cone(0) == crown4.full_mask

    def test_max_of_universe_is_top(self, crown4):
        assert crown4.labels(crown4.maximal(crown4.full_mask)) == ("1",)

    def test_min_of_antichain_is_itself(self, crown4):
        m = crown4.mask(["a", "b", "c", "d"])
        assert crown4.minimal(m) == m

    def test_set_leq(self, crown4):
        zero = crown4.mask(["0"])
        assert crown4.set_leq(zero, crown4.full_mask)
        assert crown4.set_leq(crown4.mask(["a", "b"]), crown4.mask(["c'"]))
        assert not crown4.set_leq(crown4.mask(["a"]), crown4.mask(["a'"]))
        assert crown4.set_leq(0, crown4.full_mask)

    def test_involute_swaps_bounds(self, crown4):
        m = crown4.mask(["0", "1"])
        assert crown4.involute(m) == m
        assert set(crown4.labels(crown4.involute(crown4.mask(["a", "b"])))) == {"a'", "b'"}

    def test_orthogonality(self, crown4):
        a, b = crown4.index("a"), crown4.index("b")
        assert crown4.orthogonal(a, b) and crown4.orthogonal(b, a)
        for x in range(crown4.n):
            assert crown4.orthogonal(crown4.bottom, x)
            assert crown4.orthogonal(x, x) == (x == crown4.bottom)

    def test_cones_match_oracle_on_fixtures(self, crown4, benzene_model, p3):
        for o, m in ((crown4, oracle.crown_model(4)),
                     (benzene_model, oracle.benzene_model()),
                     (p3, oracle.power_set_model(3))):
            assert list(o.names) == m.elements
            for mask in range(min(1 << o.n, 1 << 10)):
                subset = set(o.labels(mask))
                assert set(o.labels(o.lower_cone(mask))) == m.lower(subset)
                assert set(o.labels(o.upper_cone(mask))) == m.upper(subset)
                assert set(o.labels(o.minimal(mask))) == m.minimal(subset)
                assert set(o.labels(o.maximal(mask))) == m.maximal(subset)


@st.composite
def fixture_and_mask(draw):
    name = draw(st.sampled_from(["crown2", "crown4", "benzene", "p3"]))
    o = {"crown2": crown(2), "crown4": crown(4),
         "benzene": benzene(), "p3": power_set(3)}[name]
    mask = draw(st.integers(min_value=0, max_value=o.full_mask))
    return o, mask


class TestConeIdentities:
    @given(fixture_and_mask())
    @settings(max_examples=300, deadline=None)
    def test_cone_of_extremal_elements(self, om):
        o, mask = om
        assert o.upper_cone(mask) == o.upper_cone(o.maximal(mask))
        assert o.lower_cone(mask) == o.lower_cone(o.minimal(mask))

    @given(fixture_and_mask())
    @settings(max_examples=300, deadline=None)
    def test_involution_swaps_extremes(self, om):
        o, mask = om
        assert o.involute(o.maximal(mask)) == o.minimal(o.involute(mask))
        assert o.involute(o.minimal(mask)) == o.maximal(o.involute(mask))

    @given(fixture_and_mask())
    @settings(max_examples=300, deadline=None)
    def test_de_morgan_for_cones(self, om):
        o, mask = om
        assert o.lower_cone(o.involute(mask)) == o.involute(o.upper_cone(mask))

    def test_galois_closure_exhaustive_on_small_models(self, small_fleet):
        for o in small_fleet:
            if o.n > 10:
                continue
            for mask in range(1 << o.n):
                low = o.lower_cone(mask)
                assert o.lower_cone(o.upper_cone(low)) == low

    def test_restriction_monotone(self, crown4):
        bp = crown4.down[crown4.index("b'")]
        for mask in range(0, crown4.full_mask, 97):
            assert crown4.maximal(bp & crown4.lower_cone(mask)) & ~bp == 0


class TestHelpers:
    def test_iter_bits(self):
        assert list(iter_bits(0b101001)) == [0, 3, 5]
        assert list(iter_bits(0)) == []

    def test_covers_of_diamond(self):
        p = power_set(2)
        names = [(p.names[x], p.names[y]) for x, y in p.covers()]
        assert names == [("0", "s1"), ("0", "s2"), ("s1", "1"), ("s2", "1")]

    def test_heights(self, benzene_model):
        h = {benzene_model.names[i]: v for i, v in enumerate(benzene_model.heights())}
        assert h == {"0": 0, "a": 1, "b": 2, "b'": 1, "a'": 2, "1": 3}

    def test_unknown_label(self, crown4):
        with pytest.raises(OposetError):
            crown4.index("zz")
