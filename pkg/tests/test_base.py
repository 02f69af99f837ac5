"""Base-category operations against independent brute-force oracles."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupoid_lab.base import (
    FINAB, FINPTDSET, FINSET, BaseMorphism, CapabilityError, CompositionError,
    Diagram, DiagramError, NoMediatorError, additive_section, classify_morphism,
    compose, count_factorizations, direct_sum, enumerate_morphisms,
    finite_limit, finptdset_object, finset_object, generated_subgroup_indices,
    identity, image_indices, jointly_strongly_epi, kernel,
    morphism_from_function, pairing, parse_instance, product, pullback,
    quotient_by_subgroup, reflexive_coequalizer, split_section,
    subgroup_object, zero_morphism, zero_object, zmod)


def mod_map(m, n):
    return morphism_from_function(zmod(m), zmod(n), lambda x: x % n)


def scale_map(obj, k):
    n = obj.size
    return morphism_from_function(obj, obj, lambda x: (k * x) % n)


class TestInstances:
    def test_capability_flags(self):
        assert not FINSET.pointed and FINSET.regular and not FINSET.protomodular
        assert FINPTDSET.pointed and not FINPTDSET.protomodular
        assert FINAB.pointed and FINAB.regular and FINAB.protomodular
        assert all(i.has_reflexive_coequalizers for i in (FINSET, FINPTDSET, FINAB))

    def test_parse(self):
        assert parse_instance("FinAb") is FINAB
        with pytest.raises(DiagramError):
            parse_instance("fingrp")

    def test_zero_objects(self):
        assert zero_object(FINPTDSET).size == 1
        assert zero_object(FINAB).size == 1
        with pytest.raises(CapabilityError):
            zero_object(FINSET)


class TestObjects:
    def test_group_axioms_rejected(self):
        # corrupt one cell of the Z4 table: breaks commutativity or units
        add = [list(r) for r in zmod(4).add]
        add[1][2] = 0
        with pytest.raises(DiagramError):
            from groupoid_lab.base import finab_object
            finab_object(range(4), add, zmod(4).neg, 0)

    def test_duplicate_carrier_rejected(self):
        with pytest.raises(DiagramError):
            finset_object(["a", "a"])

    def test_pointed_map_must_fix_basepoint(self):
        x = finptdset_object(["*", "p"])
        with pytest.raises(DiagramError):
            BaseMorphism(x, x, [1, 0])

    def test_additivity_rejected(self):
        with pytest.raises(DiagramError):
            BaseMorphism(zmod(4), zmod(4), [0, 1, 3, 2])


class TestCompose:
    def test_diagram_order_on_all_elements(self):
        # double-then-project Z4 -> Z2 kills everything
        f = scale_map(zmod(4), 2)
        g = mod_map(4, 2)
        gf = compose(f, g)
        assert [gf(x) for x in range(4)] == [0, 0, 0, 0]

    def test_mismatch_raises(self):
        with pytest.raises(CompositionError):
            compose(mod_map(4, 2), mod_map(4, 2))


class TestPullback:
    def test_finset_cospan_to_point(self):
        # oracle: all pairs, since both maps are constant
        x = finset_object([0, 1])
        pt = finset_object(["*"])
        f = morphism_from_function(x, pt, lambda _: "*")
        pb = pullback(f, f)
        assert pb.apex.size == 4
        assert pb.apex.carrier == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_finab_mod2_square(self):
        f = mod_map(4, 2)
        pb = pullback(f, f)
        # oracle: same-parity pairs
        expected = [(a, b) for a in range(4) for b in range(4)
                    if a % 2 == b % 2]
        assert list(pb.apex.carrier) == expected
        assert pb.apex.size == 8
        # subgroup of Z4+Z4: closed under componentwise addition
        z44 = direct_sum(zmod(4), zmod(4))
        assert set(pb.apex.carrier) <= set(z44.carrier)

    def test_legs_and_mediator(self):
        f = mod_map(4, 2)
        pb = pullback(f, f)
        diag = pairing(pb, identity(zmod(4)), identity(zmod(4)))
        assert all(diag(x) == (x, x) for x in range(4))
        twisted = pairing(pb, identity(zmod(4)), scale_map(zmod(4), 3))
        assert twisted(1) == (1, 3)
        with pytest.raises(NoMediatorError):
            pb.mediate({"p1": identity(zmod(4)), "p2": scale_map(zmod(4), 0)})

    def test_pointed_pullback_keeps_basepoint(self):
        x = finptdset_object(["*", "a", "b"])
        y = finptdset_object(["*", "c"])
        f = morphism_from_function(x, y, lambda e: "*" if e == "*" else "c")
        pb = pullback(f, f)
        assert pb.apex.carrier[pb.apex.basepoint] == ("*", "*")


class TestFiniteLimit:
    def cospan_diagram(self, f, g):
        return Diagram(nodes={"x": f.dom, "y": g.dom, "z": f.cod},
                       edges=[("x", "z", f), ("y", "z", g)])

    def test_agrees_with_pullback_pairs(self):
        f = mod_map(4, 2)
        lim = finite_limit(self.cospan_diagram(f, f))
        pb = pullback(f, f)
        flattened = [(t[0], t[1]) for t in lim.apex.carrier]
        assert flattened == list(pb.apex.carrier)

    def test_two_cospans_full_tuples(self):
        # oracle: direct enumeration of 5-tuples
        f = mod_map(4, 2)
        d = Diagram(nodes={"a": zmod(4), "b": zmod(4), "l": zmod(2)},
                    edges=[("a", "l", f), ("b", "l", f)])
        lim = finite_limit(d)
        expected = [(a, b, a % 2) for a in range(4) for b in range(4)
                    if a % 2 == b % 2]
        assert list(lim.apex.carrier) == expected

    def test_empty_diagram_edge_case(self):
        x = finset_object([0, 1, 2])
        lim = finite_limit(Diagram(nodes={"x": x}, edges=[]))
        assert [t[0] for t in lim.apex.carrier] == [0, 1, 2]

    def test_mediator_derives_missing_legs(self):
        f = mod_map(4, 2)
        lim = finite_limit(self.cospan_diagram(f, f))
        med = lim.mediate({"x": identity(zmod(4)), "y": identity(zmod(4))})
        assert med(1) == (1, 1, 1)

    def test_mistyped_diagram_rejected(self):
        with pytest.raises(DiagramError):
            Diagram(nodes={"x": zmod(2)}, edges=[("x", "q", identity(zmod(2)))])


class TestKernel:
    def test_kernel_of_identity_is_zero(self):
        k = kernel(identity(zmod(4)))
        assert k.apex.size == 1

    def test_kernel_of_zero_is_whole(self):
        k = kernel(zero_morphism(zmod(4), zmod(2)))
        assert k.apex.size == 4

    def test_kernel_mod2(self):
        k = kernel(mod_map(4, 2))
        assert list(k.apex.carrier) == [0, 2]
        assert compose(k.legs["ker"], mod_map(4, 2)) == zero_morphism(k.apex, zmod(2))

    def test_needs_pointed(self):
        with pytest.raises(CapabilityError):
            kernel(morphism_from_function(finset_object([0]), finset_object([0]),
                                          lambda x: x))


class TestReflexiveCoequalizer:
    def test_finab_cokernel(self):
        # source/target of the one-object groupoid on Z4 with loops Z2 via 1->2
        b1 = direct_sum(zmod(4), zmod(2))
        b0 = zmod(4)
        d = morphism_from_function(b1, b0, lambda t: t[0])
        c = morphism_from_function(b1, b0, lambda t: (t[0] + 2 * t[1]) % 4)
        e = morphism_from_function(b0, b1, lambda a: (a, 0))
        q = reflexive_coequalizer(d, c, e)
        assert q.cod.size == 2  # Z4 / {0,2}

    def test_finset_connected_quotient(self):
        b0 = finset_object(["p", "q"])
        b1 = finset_object(["idp", "idq", "arc", "cra"])
        d = morphism_from_function(b1, b0,
                                   lambda a: {"idp": "p", "idq": "q",
                                              "arc": "p", "cra": "q"}[a])
        c = morphism_from_function(b1, b0,
                                   lambda a: {"idp": "p", "idq": "q",
                                              "arc": "q", "cra": "p"}[a])
        e = morphism_from_function(b0, b1, lambda o: "id" + o)
        q = reflexive_coequalizer(d, c, e)
        assert q.cod.size == 1

    def test_rejects_non_reflexive(self):
        b0 = zmod(2)
        b1 = direct_sum(zmod(2), zmod(2))
        d = morphism_from_function(b1, b0, lambda t: t[0])
        with pytest.raises(DiagramError):
            reflexive_coequalizer(d, d, zero_morphism(b0, b1))


class TestClassify:
    def test_pointed_inclusion(self):
        one = finptdset_object(["*"])
        two = finptdset_object(["*", "x"])
        f = morphism_from_function(one, two, lambda _: "*")
        flags = classify_morphism(f)
        assert flags.mono and not flags.regular_epi and not flags.iso

    def test_mod2_is_regular_but_not_split(self):
        flags = classify_morphism(mod_map(4, 2))
        assert flags.regular_epi and not flags.split_epi
        assert additive_section(mod_map(4, 2)) is None

    def test_projection_splits(self):
        z22 = direct_sum(zmod(2), zmod(2))
        p = morphism_from_function(z22, zmod(2), lambda t: t[0])
        flags = classify_morphism(p)
        assert flags.split_epi
        s = split_section(p)
        assert compose(s, p) == identity(zmod(2))

    def test_pointed_split_section_is_pointed(self):
        x = finptdset_object(["*", "a", "b"])
        y = finptdset_object(["*", "c"])
        f = morphism_from_function(x, y, lambda e: "*" if e == "*" else "c")
        s = split_section(f)
        assert s("*") == "*" and compose(s, f) == identity(y)

    def test_iso_flag(self):
        assert classify_morphism(scale_map(zmod(5), 2)).iso
        assert not classify_morphism(scale_map(zmod(4), 2)).iso


class TestJointlyStronglyEpi:
    def test_finab_even_images_fail(self):
        f = morphism_from_function(zmod(2), zmod(4), lambda x: 2 * x)
        assert not jointly_strongly_epi([f, f])

    def test_finab_generating_images(self):
        f = morphism_from_function(zmod(2), zmod(4), lambda x: 2 * x)
        g = identity(zmod(4))
        assert jointly_strongly_epi([f, g])
        # the two coordinate axes generate Z2+Z2; neither inclusion is epi
        z22 = direct_sum(zmod(2), zmod(2))
        ax = morphism_from_function(zmod(2), z22, lambda x: (x, 0))
        ay = morphism_from_function(zmod(2), z22, lambda x: (0, x))
        assert jointly_strongly_epi([ax, ay])
        assert not jointly_strongly_epi([ax, ax])

    def test_pointed_union(self):
        t = finptdset_object(["*", "x", "y"])
        fx = morphism_from_function(finptdset_object(["*", "a"]), t,
                                    lambda e: "*" if e == "*" else "x")
        fy = morphism_from_function(finptdset_object(["*", "a"]), t,
                                    lambda e: "*" if e == "*" else "y")
        assert jointly_strongly_epi([fx, fy])
        assert not jointly_strongly_epi([fx, fx])


class TestSubgroupMachinery:
    def test_generated_subgroup(self):
        assert generated_subgroup_indices(zmod(8), [2]) == [0, 2, 4, 6]

    def test_quotient(self):
        q_obj, proj = quotient_by_subgroup(zmod(8), [0, 4])
        assert q_obj.size == 4
        assert proj(5) == proj(1)

    def test_subgroup_object_not_closed(self):
        with pytest.raises(DiagramError):
            subgroup_object(zmod(4), [0, 1])


class TestEnumeration:
    def test_hom_count_z4_z2(self):
        homs = list(enumerate_morphisms(zmod(4), zmod(2)))
        assert len(homs) == 2  # zero and mod 2

    def test_hom_count_z2z2_z2(self):
        z22 = direct_sum(zmod(2), zmod(2))
        assert len(list(enumerate_morphisms(z22, zmod(2)))) == 4

    def test_pointed_maps_fix_base(self):
        x = finptdset_object(["*", "a"])
        maps = list(enumerate_morphisms(x, x))
        assert len(maps) == 2
        assert all(m("*") == "*" for m in maps)


class TestMediatorUniqueness:
    def test_pullback_factorization_is_unique(self):
        f = mod_map(4, 2)
        pb = pullback(f, f)
        cone = {"p1": identity(zmod(4)), "p2": identity(zmod(4))}
        assert count_factorizations(pb, cone) == 1

    def test_finset_limit_factorization_unique(self):
        x = finset_object([0, 1, 2])
        pt = finset_object(["*"])
        f = morphism_from_function(x, pt, lambda _: "*")
        pb = pullback(f, f)
        u = morphism_from_function(x, x, lambda a: (a + 1) % 3)
        assert count_factorizations(pb, {"p1": u, "p2": identity(x)}) == 1


@st.composite
def small_ab_maps(draw):
    orders = draw(st.sampled_from([1, 2, 3, 4, 5, 6, 8]))
    cod_order = draw(st.sampled_from([1, 2, 3, 4, 6]))
    dom, cod = zmod(orders), zmod(cod_order)
    homs = list(enumerate_morphisms(dom, cod))
    return draw(st.sampled_from(homs))


@settings(max_examples=60, deadline=None)
@given(small_ab_maps(), st.data())
def test_kernel_universal_property(f, data):
    k = kernel(f)
    sources = list(enumerate_morphisms(zmod(2), f.dom))
    good = [u for u in sources if compose(u, f) == zero_morphism(zmod(2), f.cod)]
    if not good:
        return
    u = data.draw(st.sampled_from(good))
    med = k.mediate({"ker": u})
    assert compose(med, k.legs["ker"]) == u


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 6, 8]), st.sampled_from([2, 3, 4]))
def test_product_projections_jointly_monic(m, n):
    prod = product(zmod(m), zmod(n))
    p1, p2 = prod.legs["p1"], prod.legs["p2"]
    seen = set(zip(p1.map, p2.map))
    assert len(seen) == prod.apex.size
