"""Functor classification: fibration levels, star levels, equivalences.

Frozen facts, each re-derivable by enumeration:

* the mod-2 collapse of cyclic deloopings Z4 -> Z2 is a fibration whose
  lifting map has no additive section, so the split label drops exactly in
  the abelian instance;
* the discrete embedding into a delooping hits the only object but misses
  every loop: essentially surjective, nowhere near fully faithful;
* the kernel-restricted lifting map of the discrete embedding into the
  Z2 -> Z4 graph groupoid is a map 1 -> 2, so that embedding is not a
  star fibration.
"""

import json

import pytest

from groupoid_lab.base import (
    FINAB,
    FINSET,
    CapabilityError,
    classify_morphism,
    compose,
    finset_object,
    identity,
    morphism_from_function,
    zmod,
)
from groupoid_lab.groupoid import (
    action_groupoid,
    cyclic_delooping,
    discrete_embedding,
    discrete_groupoid,
    functor,
    identity_functor,
    zero_functor,
    zero_groupoid,
)
from groupoid_lab.holim import arrow_groupoid, comparison_J, comparison_T
from groupoid_lab.classify import (
    FIBRATION_LABELS,
    STAR_LABELS,
    classification_report,
    classify_fibration,
    classify_star_fibration,
    essential_surjectivity_witness,
    fibration_at_least,
    fully_faithful_comparison,
    hat_tau_factorization,
    is_equivalence,
    is_essentially_surjective,
    is_faithful,
    is_full,
    is_fully_faithful,
    is_weak_equivalence,
    partial_zero,
    star_at_least,
    tau_factorization,
)


def delooping_pair():
    return cyclic_delooping(FINAB, 2), cyclic_delooping(FINAB, 4)


def mod2_collapse():
    b2, b4 = delooping_pair()
    return functor(b4, b2, lambda o: 0, lambda x: x % 2)


def doubling():
    b2, b4 = delooping_pair()
    return functor(b2, b4, lambda o: 0, lambda x: 2 * x % 4)


def graph_groupoid():
    from groupoid_lab.groupoid import groupoid_from_arrow
    delta = morphism_from_function(zmod(2), zmod(4), lambda n: 2 * n)
    return groupoid_from_arrow(delta)


class TestTauFactorization:
    def test_identity_gives_an_iso_on_both_sides(self):
        b = cyclic_delooping(FINAB, 3)
        for side in ("d", "c"):
            assert classify_morphism(tau_factorization(identity_functor(b),
                                                       side)).iso

    def test_factorization_laws(self):
        fun = mod2_collapse()
        from groupoid_lab.base import pullback
        lim = pullback(fun.F0, fun.cod.d)
        tau = tau_factorization(fun, "d")
        assert compose(tau, lim.legs["p1"]) == fun.dom.d
        assert compose(tau, lim.legs["p2"]) == fun.F1

    def test_zero_functor_gives_a_split_epi(self):
        b = cyclic_delooping(FINAB, 2)
        fun = zero_functor(b, zero_groupoid(FINAB))
        tau = tau_factorization(fun, "d")
        assert classify_morphism(tau).split_epi
        assert tau.cod.size == b.B0.size

    def test_discrete_embedding_misses_the_loops(self):
        b = cyclic_delooping(FINAB, 2)
        tau = tau_factorization(discrete_embedding(b), "d")
        assert not classify_morphism(tau).regular_epi
        assert len(set(tau.map)) == b.B0.size


class TestClassifyFibration:
    def test_frozen_labels(self):
        b = cyclic_delooping(FINAB, 2)
        assert classify_fibration(identity_functor(b)) == "discrete_fibration"
        assert classify_fibration(
            zero_functor(b, zero_groupoid(FINAB))) == "split_epi_fibration"
        assert classify_fibration(discrete_embedding(b)) == "not_fibration"
        assert classify_fibration(doubling()) == "not_fibration"

    def test_mod2_collapse_is_an_unsplit_fibration(self):
        # Z2 is not an additive retract of Z4
        assert classify_fibration(mod2_collapse()) == "fibration"

    def test_finset_surjections_always_split(self):
        a = cyclic_delooping(FINSET, 4)
        b = cyclic_delooping(FINSET, 2)
        fun = functor(a, b, lambda o: "*", lambda x: x % 2)
        assert classify_fibration(fun) == "split_epi_fibration"

    def test_label_order(self):
        assert FIBRATION_LABELS.index("fibration") < FIBRATION_LABELS.index(
            "split_epi_fibration")
        assert fibration_at_least("discrete_fibration", "fibration")
        assert not fibration_at_least("not_fibration", "fibration")


class TestStarFibration:
    def test_frozen_labels(self):
        b = cyclic_delooping(FINAB, 2)
        assert classify_star_fibration(
            identity_functor(b)) == "split_epi_star_fibration"
        assert classify_star_fibration(
            zero_functor(b, zero_groupoid(FINAB))) == "split_epi_star_fibration"
        assert classify_star_fibration(doubling()) == "not_star"

    def test_fibration_is_a_star_fibration_here(self):
        assert classify_star_fibration(mod2_collapse()) == "star_fibration"

    def test_embedding_into_the_graph_groupoid(self):
        fun = discrete_embedding(graph_groupoid())
        ht = hat_tau_factorization(fun, "d")
        assert (ht.dom.size, ht.cod.size) == (1, 2)
        assert classify_star_fibration(fun) == "not_star"

    def test_zero_functor_measurement_is_surjective(self):
        b = cyclic_delooping(FINAB, 2)
        fun = zero_functor(b, zero_groupoid(FINAB))
        assert classify_morphism(hat_tau_factorization(fun, "d")).regular_epi

    def test_capability_guard(self):
        b = cyclic_delooping(FINSET, 2)
        with pytest.raises(CapabilityError):
            classify_star_fibration(identity_functor(b))
        with pytest.raises(CapabilityError):
            hat_tau_factorization(identity_functor(b), "c")

    def test_label_order(self):
        assert star_at_least("split_epi_star_fibration", "star_fibration")
        assert not star_at_least("not_star", "star_fibration")


class TestFullyFaithful:
    def test_identity(self):
        b = cyclic_delooping(FINAB, 2)
        assert is_fully_faithful(identity_functor(b))

    def test_discrete_embedding_is_not(self):
        assert not is_fully_faithful(discrete_embedding(
            cyclic_delooping(FINAB, 2)))

    def test_square_evaluations_are_fully_faithful(self):
        data = arrow_groupoid(cyclic_delooping(FINAB, 2))
        assert is_fully_faithful(data.eval_dom)
        assert is_fully_faithful(data.eval_cod)

    def test_comparison_shape(self):
        b = cyclic_delooping(FINAB, 2)
        cmp = fully_faithful_comparison(identity_functor(b))
        assert cmp.dom.size == b.B1.size
        assert cmp.cod.size == 2
        assert classify_morphism(cmp).iso


class TestPartialZero:
    def test_identity_is_an_iso(self):
        b = cyclic_delooping(FINAB, 3)
        zero = partial_zero(identity_functor(b))
        assert classify_morphism(zero.morphism).iso
        assert zero.faithful and zero.full

    def test_legs_recover_the_data(self):
        fun = mod2_collapse()
        zero = partial_zero(fun)
        assert compose(zero.morphism, zero.to_dom) == fun.dom.d
        assert compose(zero.morphism, zero.to_arrow) == fun.F1
        assert compose(zero.morphism, zero.to_cod) == fun.dom.c

    def test_loop_collapse_is_not_faithful(self):
        # both loops land on the same endpoint-image triple
        b = cyclic_delooping(FINAB, 2)
        fun = functor(b, b, lambda o: 0, lambda x: 0)
        zero = partial_zero(fun)
        assert not zero.faithful
        assert not zero.full

    def test_zero_to_the_point_is_full_not_faithful(self):
        b = cyclic_delooping(FINAB, 2)
        fun = zero_functor(b, zero_groupoid(FINAB))
        zero = partial_zero(fun)
        assert zero.full and not zero.faithful
        assert is_full(fun) and not is_faithful(fun)

    def test_discrete_collapse_is_faithful_not_full(self):
        d2 = discrete_groupoid(finset_object(["p", "q"]))
        b = cyclic_delooping(FINSET, 2)
        fun = functor(d2, b, lambda o: "*", lambda x: 0)
        zero = partial_zero(fun)
        assert zero.faithful and not zero.full


class TestEquivalenceNotions:
    def test_identity_is_an_equivalence(self):
        b = cyclic_delooping(FINAB, 2)
        assert is_equivalence(identity_functor(b))
        assert is_weak_equivalence(identity_functor(b))

    def test_discrete_embedding_sees_every_object(self):
        fun = discrete_embedding(cyclic_delooping(FINAB, 2))
        assert is_essentially_surjective(fun)
        assert not is_weak_equivalence(fun)

    def test_square_evaluation_is_an_equivalence(self):
        data = arrow_groupoid(cyclic_delooping(FINAB, 2))
        assert is_equivalence(data.eval_dom)
        assert is_equivalence(data.eval_cod)

    def test_witness_reaches_objects_through_image_arrows(self):
        fun = discrete_embedding(cyclic_delooping(FINAB, 2))
        w = essential_surjectivity_witness(fun, "d")
        assert classify_morphism(w).regular_epi

    def test_fibration_comparison_tracks_the_label(self):
        # lifting exists unsplit: the comparison is weak but not strong
        t = comparison_T(mod2_collapse())
        assert is_weak_equivalence(t)
        assert not is_equivalence(t)
        assert not is_weak_equivalence(comparison_T(doubling()))

    def test_star_comparison_tracks_the_label(self):
        j = comparison_J(mod2_collapse())
        assert is_weak_equivalence(j)
        assert not is_equivalence(j)


class TestClassificationReport:
    def test_mod2_flags_frozen(self):
        rep = classification_report(mod2_collapse())
        assert rep.flags == {
            "faithful": False,
            "full": True,
            "fully_faithful": False,
            "essentially_surjective": True,
            "weak_equivalence": False,
            "equivalence": False,
            "fibration": True,
            "split_epi_fibration": False,
            "discrete_fibration": False,
            "star_fibration": True,
            "split_epi_star_fibration": False,
        }

    def test_payload_is_json_ready(self):
        rep = classification_report(mod2_collapse())
        payload = rep.payload()
        assert sorted(payload) == ["flags", "witness_sizes"]
        assert sorted(payload["witness_sizes"]) == [
            "J0", "J1", "T0", "T1", "essential_surjectivity",
            "hat_tau_c", "hat_tau_d", "partial_zero", "tau_c", "tau_d"]
        json.dumps(payload)

    def test_unpointed_report_skips_star_entries(self):
        perm = morphism_from_function(finset_object([0, 1, 2]),
                                      finset_object([0, 1, 2]),
                                      lambda x: (x + 1) % 3)
        rep = classification_report(identity_functor(action_groupoid(perm)))
        assert "star_fibration" not in rep.flags
        assert "J0" not in rep.payload()["witness_sizes"]
        assert rep.flags["equivalence"]
        assert rep.flags["discrete_fibration"]
