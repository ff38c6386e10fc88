import pytest

import oracle
from orthoposet import (
    SizeLimitError,
    benzene,
    check_adjoint_conditions,
    check_boolean,
    check_lattice,
    check_orthomodular,
    check_skew_omp,
    check_strong_skew_omp,
    crown,
    find_benzene_obstruction,
    power_set,
)
from orthoposet.checks import antichain_masks, property_holds


class TestLattice:
    def test_power_set_is_lattice(self, p3):
        assert check_lattice(p3).holds

    def test_crown4_two_minimal_upper_bounds(self, crown4):
        r = check_lattice(crown4)
        assert not r.holds
        w = r.witnesses[0]
        assert w.elements == ("a", "b") and w.clause == "join-missing"
        assert set(dict(w.cones)["minimal_upper_bounds"]) == {"c'", "d'"}

    def test_benzene_is_lattice(self, benzene_model):
        assert check_lattice(benzene_model).holds


class TestOrthomodular:
    def test_crown2_law_witness(self):
        r = check_orthomodular(crown(2))
        assert not r.holds
        assert r.witnesses[0].elements == ("a", "b'", "a'")
        assert r.witnesses[0].clause == "law-violated"

    def test_crown4_missing_orthogonal_join(self, crown4):
        r = check_orthomodular(crown4)
        assert not r.holds
        w = r.witnesses[0]
        assert w.elements == ("a", "b") and w.clause == "orthogonal-join-missing"
        assert set(dict(w.cones)["minimal_upper_bounds"]) == {"c'", "d'"}

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_power_sets_orthomodular(self, k):
        assert check_orthomodular(power_set(k)).holds


class TestSkew:
    def test_benzene_witness(self, benzene_model):
        r = check_skew_omp(benzene_model)
        assert not r.holds
        w = r.witnesses[0]
        assert w.elements == ("a", "b")
        assert set(dict(w.cones)["computed"]) == {"a", "b", "1"}
        assert set(dict(w.cones)["expected"]) == {"b", "1"}

    def test_crown4_holds(self, crown4):
        assert check_skew_omp(crown4).holds

    def test_boolean_fixtures_are_skew(self, small_fleet):
        for o in small_fleet:
            if check_boolean(o).holds:
                assert check_skew_omp(o).holds, o.name

    def test_lower_form_equivalent_on_fleet(self, small_fleet):
        # the checker tests only the upper form; its dual
        # (x <= y forces L(x) = L(y, U(x, y'))) must agree on every model
        for o in small_fleet:
            lower_form = all(
                (o.down[y] & o.lower_cone(o.up[x] & o.up[o.prime[y]])) == o.down[x]
                for x in range(o.n)
                for y in range(o.n)
                if o.leq(x, y)
            )
            assert lower_form == check_skew_omp(o).holds, o.name


class TestStrongSkew:
    @pytest.mark.parametrize("n", [0, 1, 3, 4, 5, 6])
    def test_crown_family_strong_skew(self, n):
        o = crown(n)
        assert check_strong_skew_omp(o, "antichains").holds
        if o.n <= 14:
            assert check_strong_skew_omp(o, "subsets").holds

    def test_crown2_fails_like_the_hexagon(self):
        # crown(2) is isomorphic to the hexagon, so the subset law breaks
        o = crown(2)
        assert not check_strong_skew_omp(o, "antichains").holds
        assert not check_strong_skew_omp(o, "subsets").holds

    def test_benzene_fails(self, benzene_model):
        r = check_strong_skew_omp(benzene_model)
        assert not r.holds
        assert len(r.witnesses[0].elements) >= 2

    def test_modes_agree_on_small_fleet(self, small_fleet):
        for o in small_fleet:
            a = check_strong_skew_omp(o, "antichains").holds
            s = check_strong_skew_omp(o, "subsets").holds
            assert a == s, o.name

    def test_subsets_mode_size_cap(self):
        with pytest.raises(SizeLimitError):
            check_strong_skew_omp(power_set(4), "subsets")

    def test_oracle_agreement(self, small_fleet):
        for o in small_fleet:
            if o.n <= 8:
                m = oracle.from_orthoposet(o)
                assert oracle.is_strong_skew(m) == check_strong_skew_omp(o).holds

    def test_antichain_walk_is_exactly_the_antichains(self, benzene_model):
        o = benzene_model
        seen = set(antichain_masks(o))
        assert len(seen) == sum(1 for _ in antichain_masks(o))  # no repeats
        for mask in range(1 << o.n):
            members = [i for i in range(o.n) if mask >> i & 1]
            is_antichain = all(
                not (o.leq(x, y) or o.leq(y, x))
                for i, x in enumerate(members) for y in members[i + 1:]
            )
            assert (mask in seen) == is_antichain


class TestBoolean:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_power_sets_boolean_all_identities_agree(self, k):
        r = check_boolean(power_set(k))
        assert r.holds and r.mode == "all:agree"

    def test_crown3_boolean(self):
        assert check_boolean(crown(3)).holds

    def test_crown2_not_boolean(self):
        r = check_boolean(crown(2))
        assert not r.holds and r.mode == "all:agree"

    def test_crown4_is_distributive(self, crown4):
        # the 10-element crown is a distributive orthoposet without being a
        # lattice; cross-checked against the naive oracle
        r = check_boolean(crown4)
        assert r.holds and r.mode == "all:agree"
        assert oracle.is_distributive(oracle.crown_model(4))

    def test_single_identity_mode(self, crown4):
        for k in (1, 2, 3, 4):
            r = check_boolean(crown4, k)
            assert r.holds and r.mode == f"identity-{k}"

    def test_twelve_element_fixture_not_boolean(self, twelve):
        r = check_boolean(twelve)
        assert not r.holds and r.mode == "all:agree"
        assert all(w.clause == f"identity-{k}" for k, w in enumerate(r.witnesses, start=1))
        assert not oracle.is_distributive(oracle.from_orthoposet(twelve))

    def test_verdict_matches_oracle_on_fleet(self, small_fleet):
        for o in small_fleet:
            assert check_boolean(o).holds == oracle.is_distributive(oracle.from_orthoposet(o))

    def test_property_holds_fast_path(self, small_fleet):
        for o in small_fleet:
            assert property_holds(o, "boolean") == check_boolean(o).holds


class TestAdjointConditions:
    def test_boolean_models_satisfy_conditions(self, small_fleet):
        for o in small_fleet:
            if check_boolean(o).holds:
                assert check_adjoint_conditions(o).holds, o.name

    def test_power_set4(self):
        assert check_adjoint_conditions(power_set(4)).holds

    def test_benzene_verdict_frozen(self, benzene_model):
        # computed once and pinned: the lower inclusion breaks at (a, b)
        r = check_adjoint_conditions(benzene_model)
        assert not r.holds
        w = r.witnesses[0]
        assert w.elements == ("a", "b") and w.clause == "lower-inclusion"
        assert set(dict(w.cones)["left"]) == {"0", "a", "b"}
        assert set(dict(w.cones)["bound"]) == {"0", "a"}

    def test_verdict_matches_oracle(self, small_fleet):
        for o in small_fleet:
            got = check_adjoint_conditions(o).holds
            assert got == oracle.satisfies_adjoint_conditions(oracle.from_orthoposet(o))


class TestBenzeneObstruction:
    def test_benzene_witness(self, benzene_model):
        r = find_benzene_obstruction(benzene_model)
        assert not r.holds
        assert r.witnesses[0].elements == ("a", "b")
        assert r.witnesses[0].clause == "meet-form"

    def test_crown4_free(self, crown4):
        assert find_benzene_obstruction(crown4).holds

    def test_power_set_free(self, p3):
        assert find_benzene_obstruction(p3).holds

    def test_skew_implies_free(self, small_fleet):
        for o in small_fleet:
            if check_skew_omp(o).holds:
                assert find_benzene_obstruction(o).holds, o.name


class TestReportShape:
    def test_all_witnesses_flag(self, benzene_model):
        few = check_skew_omp(benzene_model)
        many = check_skew_omp(benzene_model, all_witnesses=True)
        assert len(few.witnesses) == 1
        assert len(many.witnesses) >= len(few.witnesses)

    def test_holds_iff_no_witnesses(self, small_fleet):
        for o in small_fleet:
            for r in (check_lattice(o), check_skew_omp(o), check_boolean(o)):
                assert r.holds == (not r.witnesses)
