"""Groupoid data model: validators, stock constructions, pi0/pi1."""

import pytest

from groupoid_lab.base import (FINAB, FINPTDSET, FINSET, BaseMorphism,
                               CapabilityError, DiagramError, compose,
                               direct_sum, finptdset_object, finset_object,
                               identity, morphism_from_function, zmod)
from groupoid_lab.groupoid import (InternalFunctor, InternalGroupoid,
                                   NatTransformation, action_groupoid,
                                   compose_functors, cyclic_delooping,
                                   delooping, discrete_embedding,
                                   discrete_groupoid, full_subgroupoid,
                                   functor, groupoid_from_arrow, identity_cell,
                                   identity_functor, indiscrete_groupoid, pi0,
                                   pi0_induced, pi1, pi1_induced,
                                   product_groupoid, transformation,
                                   validate_functor, validate_groupoid,
                                   validate_transformation, whisker,
                                   zero_functor, zero_groupoid)


def embed_delta():
    """1 -> 2 inside Z4: components Z2, loops Z1."""
    return morphism_from_function(zmod(2), zmod(4), lambda n: 2 * n)


class TestValidators:
    def stock(self):
        return [
            discrete_groupoid(finset_object(["p", "q", "r"])),
            indiscrete_groupoid(finptdset_object(["*", "x"])),
            cyclic_delooping(FINSET, 3),
            cyclic_delooping(FINPTDSET, 4),
            delooping(direct_sum(zmod(2), zmod(2))),
            groupoid_from_arrow(embed_delta()),
        ]

    def test_stock_groupoids_valid(self):
        for g in self.stock():
            assert validate_groupoid(g) == []

    def test_broken_unit_named(self):
        g = cyclic_delooping(FINSET, 3)
        # send the unit to the loop 1 instead of 0
        bad_e = BaseMorphism(g.B0, g.B1, [1], _trusted=True)
        broken = InternalGroupoid(g.B0, g.B1, g.d, g.c, bad_e, g.m, g.i)
        bad = validate_groupoid(broken)
        assert "unit-law" in bad

    def test_broken_inverse_named(self):
        g = cyclic_delooping(FINSET, 3)
        bad_i = identity(g.B1)
        broken = InternalGroupoid(g.B0, g.B1, g.d, g.c, g.e, g.m, bad_i)
        assert "inverse-law" in validate_groupoid(broken)

    def test_broken_associativity_named(self):
        g = cyclic_delooping(FINSET, 4)
        # a magma table that is unital but not associative: twist one cell
        table = list(g.m.map)
        pairs = g.composition_pairs().apex.carrier
        k = pairs.index((1, 2))
        table[k] = (1 + 2 + 1) % 4
        broken = InternalGroupoid(g.B0, g.B1, g.d, g.c, g.e,
                                  BaseMorphism(g.m.dom, g.B1, table,
                                               _trusted=True), g.i)
        bad = validate_groupoid(broken)
        assert "associativity" in bad or "unit-law" in bad

    def test_mistyped_source_named(self):
        g = cyclic_delooping(FINSET, 3)
        wrong = morphism_from_function(g.B1, g.B1, lambda x: x)
        broken = InternalGroupoid(g.B0, g.B1, wrong, g.c, g.e, g.m, g.i)
        assert validate_groupoid(broken) == ["source-map"]

    def test_functor_validation(self):
        g = cyclic_delooping(FINSET, 4)
        h = cyclic_delooping(FINSET, 2)
        fun = functor(g, h, lambda _: "*", lambda j: j % 2)
        assert validate_functor(fun) == []
        bad = InternalFunctor(g, h, fun.F0,
                              BaseMorphism(g.B1, h.B1, [0, 0, 0, 1],
                                           _trusted=True))
        assert "functor-composition" in validate_functor(bad)

    def test_transformation_validation(self):
        g = cyclic_delooping(FINAB, 4)
        cell = identity_cell(identity_functor(g))
        assert validate_transformation(cell) == []
        gs = cyclic_delooping(FINSET, 4)
        shifted = NatTransformation(identity_functor(gs), identity_functor(gs),
                                    morphism_from_function(gs.B0, gs.B1,
                                                           lambda _: 2))
        # a central loop is natural for the identity pair, 2 + x = x + 2
        assert validate_transformation(shifted) == []
        off = NatTransformation(identity_functor(gs), identity_functor(gs),
                                morphism_from_function(gs.B0, gs.B1,
                                                       lambda _: 1))
        assert validate_transformation(off) == []  # still central in Z4


class TestStockShapes:
    def test_discrete_and_indiscrete_sizes(self):
        x = finset_object(range(3))
        assert discrete_groupoid(x).B1.size == 3
        assert indiscrete_groupoid(x).B1.size == 9

    def test_from_arrow_structure(self):
        g = groupoid_from_arrow(embed_delta())
        assert g.B0.size == 4 and g.B1.size == 8
        assert g.d((1, 1)) == 1 and g.c((1, 1)) == 3
        assert g.mul((1, 1), (3, 1)) == (1, 0)
        assert g.inv((1, 1)) == (3, 1)
        assert validate_groupoid(g) == []

    def test_action_groupoid(self):
        x = finset_object(range(4))
        swap = morphism_from_function(x, x, lambda j: j ^ 1)
        g = action_groupoid(swap)
        assert validate_groupoid(g) == []
        assert g.B1.size == 8  # 4 objects x order-2 group
        assert g.c((2, 1)) == 3

    def test_product_groupoid(self):
        g, pg, ph = product_groupoid(cyclic_delooping(FINSET, 2),
                                     discrete_groupoid(finset_object("ab")))
        assert validate_groupoid(g) == []
        assert validate_functor(pg) == [] and validate_functor(ph) == []

    def test_full_subgroupoid(self):
        g = groupoid_from_arrow(embed_delta())
        sub, incl = full_subgroupoid(g, [0, 2])
        assert validate_groupoid(sub) == []
        assert validate_functor(incl) == []
        assert sub.B1.size == 4  # arrows among {0,2}: (0,0),(0,1),(2,0),(2,1)

    def test_discrete_embedding_valid(self):
        g = groupoid_from_arrow(embed_delta())
        n = discrete_embedding(g)
        assert validate_functor(n) == []

    def test_zero_functor(self):
        a = cyclic_delooping(FINPTDSET, 3)
        b = cyclic_delooping(FINPTDSET, 2)
        assert validate_functor(zero_functor(a, b)) == []
        with pytest.raises(CapabilityError):
            zero_groupoid(FINSET)


class TestPi:
    def test_pi0_counts_components(self):
        g = groupoid_from_arrow(embed_delta())
        obj, proj = pi0(g)
        assert obj.size == 2  # Z4 / im(2): two cosets
        assert proj(0) == proj(2) and proj(1) != proj(0)

    def test_pi0_discrete(self):
        obj, _ = pi0(discrete_groupoid(finset_object(range(5))))
        assert obj.size == 5

    def test_pi1_is_kernel(self):
        delta = morphism_from_function(zmod(4), zmod(2), lambda n: n % 2)
        g = groupoid_from_arrow(delta)
        obj, incl = pi1(g)
        assert obj.size == 2  # ker(mod 2) = {0, 2}
        assert all(g.d(x) == 0 and g.c(x) == 0 for x in obj.carrier)
        assert incl.cod == g.B1

    def test_pi1_needs_pointed(self):
        with pytest.raises(CapabilityError):
            pi1(discrete_groupoid(finset_object([0])))

    def test_induced_maps_of_iso_functor(self):
        g = cyclic_delooping(FINAB, 4)
        fun = functor(g, g, lambda o: o, lambda j: (3 * j) % 4)
        assert set(pi1_induced(fun).map) == {0, 1, 2, 3}
        assert pi0_induced(fun).map == (0,)

    def test_induced_pi0_collapse(self):
        a = discrete_groupoid(zmod(2))
        b = groupoid_from_arrow(identity(zmod(2)))  # connected
        fun = functor(a, b, lambda o: o, lambda o: (o, 0))
        assert pi0_induced(fun).cod.size == 1


class TestTwoCells:
    def test_conjugation_transformation(self):
        g = groupoid_from_arrow(embed_delta())
        idf = identity_functor(g)
        # alpha(a) = (a, a mod 2): additive, sends a to a + 2(a mod 2)
        shifted = functor(g, g, lambda a: (a + 2 * (a % 2)) % 4,
                          lambda t: ((t[0] + 2 * (t[0] % 2)) % 4, t[1]))
        cell = transformation(idf, shifted, lambda a: (a, a % 2))
        assert validate_transformation(cell) == []

    def test_constant_family_rejected_in_finab(self):
        g = groupoid_from_arrow(embed_delta())
        idf = identity_functor(g)
        # components must be additive, so (a, 1) is not a legal family
        with pytest.raises(DiagramError):
            transformation(idf, idf, lambda a: (a, 1))

    def test_whisker(self):
        g = cyclic_delooping(FINAB, 2)
        cell = identity_cell(identity_functor(g))
        w = whisker(cell, identity_functor(g))
        assert validate_transformation(w) == []

    def test_functor_composition(self):
        g4 = cyclic_delooping(FINAB, 4)
        g2 = cyclic_delooping(FINAB, 2)
        f = functor(g4, g2, lambda _: 0, lambda j: j % 2)
        assert compose_functors(identity_functor(g4), f) == f
