import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from cantorkit.errors import (
    FuelExhausted,
    MalformedMap,
    MalformedRelation,
    NotBijective,
    NotInjective,
    NotLinear,
    NotSubset,
    TooLarge,
)
from cantorkit.setcore import (
    CountableInjectionPair,
    FiniteMap,
    FiniteRelation,
    FiniteSet,
    characteristic_function,
    check_function_kind,
    check_order,
    compose,
    diagonal_witness,
    has_bijection_to_powerset,
    identity_map,
    invert_bijection,
    linear_order,
    order_isomorphism,
    powerset,
    sb_in_E,
    sb_point_countable,
    schroeder_bernstein_finite,
)


def fmap(pairs, domain=None, codomain=None):
    domain = FiniteSet(domain if domain is not None else [a for a, _ in pairs])
    codomain = FiniteSet(codomain if codomain is not None else [b for _, b in pairs])
    return FiniteMap(domain, codomain, pairs)


class TestAtoms:
    def test_integers_sort_before_symbols(self):
        assert FiniteSet(["b", 3, "a", -1]).elements == (-1, 3, "a", "b")

    def test_duplicates_removed(self):
        assert len(FiniteSet([1, 1, 2])) == 2

    def test_rejects_non_atoms(self):
        with pytest.raises(TypeError):
            FiniteSet([1.5])

    def test_text_forms(self):
        assert str(FiniteSet([2, "a", 1])) == "{1,2,a}"
        assert str(fmap([(0, 1), (1, 0)])) == "{0->1, 1->0}"
        assert str(FiniteRelation([1, 2], [(1, 2), (1, 1)])) == "[(1,1),(1,2)]"


class TestFunctionKind:
    def test_identity(self):
        assert check_function_kind(identity_map(FiniteSet([0, 1, 2]))) == {
            "injective": True, "surjective": True, "bijective": True}

    def test_strict_inclusion(self):
        f = fmap([(0, 0), (1, 1)], codomain=[0, 1, 2])
        assert check_function_kind(f) == {"injective": True, "surjective": False, "bijective": False}

    def test_collapse(self):
        f = fmap([(0, 0), (1, 0), (2, 1)])
        assert check_function_kind(f) == {"injective": False, "surjective": True, "bijective": False}

    def test_malformed(self):
        with pytest.raises(MalformedMap):
            FiniteMap(FiniteSet([0, 1]), FiniteSet([0]), [(0, 0)])
        with pytest.raises(MalformedMap):
            FiniteMap(FiniteSet([0]), FiniteSet([0]), [(0, 5)])
        with pytest.raises(MalformedMap):
            FiniteMap(FiniteSet([0]), FiniteSet([0, 1]), [(0, 0), (0, 1)])


class TestInvert:
    def test_identity(self):
        idm = identity_map(FiniteSet([0, 1, 2]))
        assert invert_bijection(idm) == idm

    def test_three_cycle(self):
        f = fmap([(0, 1), (1, 2), (2, 0)])
        g = invert_bijection(f)
        assert g.as_dict() == {1: 0, 2: 1, 0: 2}
        assert compose(g, f) == identity_map(f.domain)
        assert compose(f, g) == identity_map(f.codomain)

    def test_collision_witness(self):
        with pytest.raises(NotBijective) as exc:
            invert_bijection(fmap([(0, 0), (1, 0)]))
        assert exc.value.collision == (0, 1)

    def test_unhit_witness(self):
        with pytest.raises(NotBijective) as exc:
            invert_bijection(fmap([(0, 0)], codomain=[0, 7]))
        assert exc.value.unhit == 7

    @given(st.permutations(list(range(7))))
    def test_double_inverse(self, perm):
        f = fmap(list(enumerate(perm)))
        g = invert_bijection(f)
        assert invert_bijection(g) == f
        assert compose(g, f) == identity_map(f.domain)


class TestSchroederBernstein:
    def test_identity_pair(self):
        A = FiniteSet([0, 1])
        h = schroeder_bernstein_finite(A, A, identity_map(A), identity_map(A))
        assert h == identity_map(A)

    def test_swap(self):
        A = FiniteSet([0, 1])
        g = fmap([(0, 1), (1, 0)])
        h = schroeder_bernstein_finite(A, A, identity_map(A), g)
        assert h.as_dict() == {0: 1, 1: 0}

    def test_non_injective(self):
        A = FiniteSet([0, 1])
        f = FiniteMap(A, A, [(0, 0), (1, 0)])
        with pytest.raises(NotInjective) as exc:
            schroeder_bernstein_finite(A, A, f, identity_map(A))
        assert exc.value.name == "f"

    def test_distinct_sets(self):
        A, B = FiniteSet([1, 2, 3]), FiniteSet(["a", "b", "c"])
        f = FiniteMap(A, B, [(1, "b"), (2, "c"), (3, "a")])
        g = FiniteMap(B, A, [("a", 1), ("b", 3), ("c", 2)])
        h = schroeder_bernstein_finite(A, B, f, g)
        assert check_function_kind(h)["bijective"]

    @settings(max_examples=60)
    @given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.permutations(list(range(n))),
                                                         st.permutations(list(range(n))))))
    def test_agrees_with_f_on_E(self, pair):
        fp, gp = pair
        A = FiniteSet(range(len(fp)))
        B = FiniteSet(f"b{i}" for i in range(len(fp)))
        f = FiniteMap(A, B, [(i, f"b{fp[i]}") for i in range(len(fp))])
        g = FiniteMap(B, A, [(f"b{i}", gp[i]) for i in range(len(gp))])
        h = schroeder_bernstein_finite(A, B, f, g)
        assert check_function_kind(h)["bijective"]
        # finite injections are bijections, so E_0 is empty and h = g^{-1}
        assert h == invert_bijection(g)


def forward_E(f, g, window, reach):
    """E = union of E_n, enumerated forwards and cut to [0, window]."""
    image_g = {g(b) for b in range(reach)}
    layer = {a for a in range(reach) if a not in image_g}
    E = set(layer)
    while layer:
        layer = {g(f(a)) for a in layer if g(f(a)) < reach} - E
        E |= layer
    return {a for a in E if a <= window}


class TestCountable:
    pair = CountableInjectionPair(lambda n: 2 * n, lambda n: 2 * n, fuel=1024)

    def test_odd_point_in_E0(self):
        assert sb_point_countable(self.pair, 3) == 6

    def test_b_side_stop(self):
        assert sb_point_countable(self.pair, 2) == 1

    def test_cycle(self):
        assert sb_point_countable(self.pair, 0) == 0

    def test_injective_on_window(self):
        values = [sb_point_countable(self.pair, x) for x in range(513)]
        assert len(set(values)) == len(values)

    def test_backward_matches_forward(self):
        E = forward_E(self.pair.f, self.pair.g, 512, 4096)
        assert {x for x in range(513) if sb_in_E(self.pair, x)} == E

    def test_distinct_maps(self):
        p = CountableInjectionPair(lambda n: n + 1, lambda n: 2 * n + 1, fuel=600)
        E = forward_E(p.f, p.g, 200, 2000)
        assert {x for x in range(201) if sb_in_E(p, x)} == E
        values = [sb_point_countable(p, x) for x in range(201)]
        assert len(set(values)) == len(values)

    def test_fuel_exhaustion(self):
        p = CountableInjectionPair(lambda n: n, lambda n: n + 1, fuel=5)
        with pytest.raises(FuelExhausted):
            sb_point_countable(p, 4)

    def test_fuel_positive(self):
        with pytest.raises(ValueError):
            CountableInjectionPair(lambda n: n, lambda n: n, fuel=0)


class TestPowerset:
    def test_empty(self):
        assert powerset(FiniteSet()) == [FiniteSet()]

    def test_three(self):
        assert len(powerset(FiniteSet([1, 2, 3]))) == 8

    def test_order(self):
        assert powerset(FiniteSet([1, 2])) == [FiniteSet(), FiniteSet([1]), FiniteSet([2]), FiniteSet([1, 2])]

    @pytest.mark.parametrize("n", range(13))
    def test_counts(self, n):
        assert len(powerset(FiniteSet(range(n)))) == 2 ** n

    def test_bound(self):
        with pytest.raises(TooLarge):
            powerset(FiniteSet(range(17)))

    @pytest.mark.parametrize("n", range(4))
    def test_no_bijection_onto_powerset(self, n):
        assert not has_bijection_to_powerset(FiniteSet(range(n)))

    def test_diagonal_subset_is_missed(self):
        rng = random.Random(5)
        A = FiniteSet(range(4))
        subsets = powerset(A)
        for _ in range(200):
            f = {a: rng.choice(subsets) for a in A}
            assert diagonal_witness(A, f) not in f.values()

    def test_characteristic_functions_biject(self):
        X = FiniteSet([1, 2, 3])
        chis = {characteristic_function(X, S) for S in powerset(X)}
        assert len(chis) == 8


class TestCharacteristic:
    X = FiniteSet([1, 2, 3])

    def test_singleton(self):
        assert characteristic_function(self.X, FiniteSet([2])).as_dict() == {1: 0, 2: 1, 3: 0}

    def test_full_and_empty(self):
        assert set(characteristic_function(self.X, self.X).as_dict().values()) == {1}
        assert set(characteristic_function(self.X, FiniteSet()).as_dict().values()) == {0}

    def test_not_subset(self):
        with pytest.raises(NotSubset):
            characteristic_function(self.X, FiniteSet([4]))


def inclusion_relation(subsets):
    labels = list(range(len(subsets)))
    pairs = [(i, j) for i in labels for j in labels if subsets[i] <= subsets[j]]
    return FiniteRelation(labels, pairs)


class TestOrders:
    def test_inclusion_chain(self):
        r = inclusion_relation([set(), {1}, {1, 2}])
        assert check_order(r) == {"partial": True, "linear": True, "well": True}

    def test_inclusion_on_powerset(self):
        r = inclusion_relation([set(), {1}, {2}, {1, 2}])
        assert check_order(r) == {"partial": True, "linear": False, "well": False}

    def test_missing_reflexive_pair(self):
        assert check_order(FiniteRelation([1], []))["partial"] is False

    def test_malformed(self):
        with pytest.raises(MalformedRelation):
            FiniteRelation([1], [(1, 2)])

    @given(st.permutations(list(range(9))))
    def test_random_total_order_is_well(self, perm):
        r = linear_order(perm)
        assert check_order(r) == {"partial": True, "linear": True, "well": True}
        stripped = FiniteRelation(r.carrier, [(a, b) for a, b in r.pairs if a != b])
        assert check_order(stripped)["partial"] is False

    def test_large_carrier_uses_linearity(self):
        assert check_order(linear_order(range(20)))["well"] is True

    def test_exhaustive_and_shortcut_agree(self):
        rng = random.Random(1)
        for n in range(1, 9):
            for _ in range(10):
                pairs = {(a, a) for a in range(n)}
                pairs |= {(rng.randrange(n), rng.randrange(n)) for _ in range(n * 2)}
                flags = check_order(FiniteRelation(range(n), pairs))
                assert flags["well"] == flags["linear"]


class TestOrderIsomorphism:
    def test_named(self):
        iso = order_isomorphism(linear_order([0, 1, 2]), linear_order(["x", "y", "z"]))
        assert iso.as_dict() == {0: "x", 1: "y", 2: "z"}

    def test_identity(self):
        p = linear_order([3, 1, 2])
        assert order_isomorphism(p, p) == identity_map(p.carrier)

    def test_size_mismatch(self):
        assert order_isomorphism(linear_order([0, 1]), linear_order([0, 1, 2])) is None

    def test_requires_linear(self):
        with pytest.raises(NotLinear):
            order_isomorphism(FiniteRelation([1, 2], [(1, 1), (2, 2)]), linear_order([1, 2]))

    def test_unique_under_relabelling(self):
        ranks = ["a", "b", "c", "d"]
        for perm in permutations(range(4)):
            p = linear_order(perm)
            iso = order_isomorphism(p, linear_order(ranks))
            # the i-th least element always goes to the i-th least target
            assert [iso(x) for x in perm] == ranks
            # it is the only order-preserving bijection
            count = 0
            for cand in permutations(ranks):
                m = dict(zip(perm, cand))
                if all((m[a] <= m[b]) == ((a, b) in p.pairs) for a in perm for b in perm):
                    count += 1
            assert count == 1
