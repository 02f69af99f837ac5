"""Seeded generators and the verification suites behind the verify command.

Generators assemble small structures from hand-picked families so that
every classifier flag shows up on both sides somewhere in a run.  Each
suite checks one structural fact at desk scale and reports serialized
witnesses for whatever failed.  Two suites are bounded searches whose
expected outcome is a found witness rather than a clean pass; the
registry records which (instance, suite) pairs expect witnesses.

Determinism: every generator derives its stream from a string seed of the
form "<instance>:<seed>", and suites derive per-case seeds from the suite
name, the run seed, and the case index.  Search suites use no randomness
at all; they walk a fixed catalog in increasing size order, so the number
of examined candidates in the report is the explicit search bound.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import gcd, isqrt

from .arrow import (
    ArrowMorphism,
    ArrowObject,
    Diagonal,
    act_on_diagonal,
    classify_arrow_morphism,
    comparison_J_arr,
    compose_arr,
    graph_comparison,
    h_kernel_factorization,
    h_kernel_preservation_comparison,
    identity_arr,
    is_essentially_surjective_arr,
    kernel_arr,
    kernel_preservation_comparison,
    normalize,
    normalize_homotopy,
    partial_zero_arr,
    strong_h_kernel_arr,
)
from .base import (
    FINAB,
    FINPTDSET,
    FINSET,
    BaseMorphism,
    BaseObject,
    DiagramError,
    GroupoidLabError,
    NoMediatorError,
    classify_morphism,
    compose,
    count_factorizations,
    direct_sum,
    enumerate_morphisms,
    finptdset_object,
    finset_object,
    generated_subgroup_indices,
    identity,
    jointly_strongly_epi,
    kernel,
    morphism_from_function,
    product,
    pullback,
    quotient_by_subgroup,
    zero_morphism,
    zmod,
)
from .classify import (
    classify_fibration,
    classify_star_fibration,
    fibration_at_least,
    is_equivalence,
    is_essentially_surjective,
    is_fully_faithful,
    is_weak_equivalence,
    partial_zero,
    star_at_least,
)
from .groupoid import (
    InternalFunctor,
    InternalGroupoid,
    NatTransformation,
    action_groupoid,
    compose_functors,
    cyclic_delooping,
    delooping,
    discrete_groupoid,
    full_subgroupoid,
    functor,
    groupoid_from_arrow,
    identity_cell,
    identity_functor,
    indiscrete_groupoid,
    pi0,
    pi0_induced,
    pi1_induced,
    product_groupoid,
    transformation,
    validate_functor,
    validate_groupoid,
    validate_transformation,
    zero_functor,
    zero_groupoid,
)
from .holim import (
    comparison_J_data,
    comparison_T,
    comparison_T_data,
    is_levelwise_pullback_square,
    kernel_groupoid,
    mediate_h_pullback,
    pullback_groupoid,
    strong_h_kernel,
    strong_h_pullback,
)
from .serialize import value_to_data


# ---------------------------------------------------------------------------
# reports


@dataclass
class SuiteReport:
    """Outcome of one suite run on one instance."""

    suite: str
    instance: str
    seed: object
    cases: int
    failures: list
    elapsed_ms: int

    @property
    def expectation_met(self) -> bool:
        """Whether the run matches the suite's registered expectation.

        Ordinary suites expect an empty failure list; search suites expect
        at least one found witness on their witness instances.  A run that
        was skipped because the instance is inapplicable counts as met.
        """
        spec = SUITES[self.suite]
        if self.instance not in spec.instances:
            return True
        if self.instance in spec.witness_instances:
            return bool(self.failures)
        return not self.failures

    def payload(self, canonical_time: bool = False) -> dict:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "seed": self.seed,
            "cases": self.cases,
            "failures": self.failures,
            "elapsed_ms": 0 if canonical_time else self.elapsed_ms,
        }


def _witness(case, reason, **values) -> dict:
    data = {}
    for key, v in values.items():
        if isinstance(v, (str, int, float, bool)) or v is None:
            data[key] = v
            continue
        try:
            data[key] = value_to_data(v)
        except DiagramError:
            data[key] = repr(v)
    return {"case": case, "reason": reason, "witness": data}


# ---------------------------------------------------------------------------
# base-level generators


def _budget(instance, size_budget):
    if size_budget is not None:
        return size_budget
    return 16 if instance is FINAB else 8


def _zero_element(obj: BaseObject):
    if obj.instance is FINAB:
        return obj.carrier[obj.zero]
    return obj.carrier[obj.basepoint]


def _random_object(instance, rng, max_size) -> BaseObject:
    max_size = max(1, max_size)
    if instance is FINAB:
        shapes = [("cyclic", k) for k in range(1, max_size + 1)]
        shapes += [("sum", a, b)
                   for a in range(2, max_size + 1)
                   for b in range(2, max_size + 1) if a * b <= max_size]
        shape = rng.choice(shapes)
        if shape[0] == "cyclic":
            return zmod(shape[1])
        return direct_sum(zmod(shape[1]), zmod(shape[2]))
    n = rng.randint(1, max_size)
    if instance is FINPTDSET:
        return finptdset_object(["*"] + [f"x{i}" for i in range(1, n)], 0)
    return finset_object([f"a{i}" for i in range(n)])


def _random_map(dom: BaseObject, cod: BaseObject, rng) -> BaseMorphism:
    if dom.instance is FINAB:
        return rng.choice(list(enumerate_morphisms(dom, cod)))
    table = [rng.randrange(cod.size) for _ in range(dom.size)]
    if dom.instance is FINPTDSET:
        table[dom.basepoint] = cod.basepoint
    return BaseMorphism(dom, cod, table)


def _random_surjection(dom: BaseObject, rng) -> BaseMorphism:
    """A surjective map onto a fresh, weakly smaller object."""
    inst = dom.instance
    if inst is FINAB:
        seeds = rng.sample(range(dom.size), rng.randint(1, min(2, dom.size)))
        sub = generated_subgroup_indices(dom, seeds)
        _, proj = quotient_by_subgroup(dom, sub)
        return proj
    size = rng.randint(1, dom.size)
    if inst is FINPTDSET:
        cod = finptdset_object(["*"] + [f"q{i}" for i in range(1, size)], 0)
    else:
        cod = finset_object([f"q{i}" for i in range(size)])
    table = [i % size for i in range(dom.size)]
    rng.shuffle(table)
    # cover every target and keep the basepoint pinned
    for j in range(size):
        if j not in table:
            table[rng.choice([i for i in range(dom.size)
                              if table.count(table[i]) > 1])] = j
    if inst is FINPTDSET:
        base_pre = table.index(cod.basepoint)
        table[base_pre], table[dom.basepoint] = (table[dom.basepoint],
                                                 table[base_pre])
    return BaseMorphism(dom, cod, table)


# ---------------------------------------------------------------------------
# groupoid generators


def _fam_discrete(instance, rng, budget):
    return discrete_groupoid(_random_object(instance, rng, budget))


def _fam_indiscrete(instance, rng, budget):
    return indiscrete_groupoid(_random_object(instance, rng,
                                              max(1, isqrt(budget))))


def _fam_delooping(instance, rng, budget):
    if instance is FINAB:
        return delooping(_random_object(instance, rng, budget))
    return cyclic_delooping(instance, rng.randint(1, budget))


def _fam_action(instance, rng, budget):
    pairs = [(s, c) for s in range(1, budget + 1)
             for c in range(1, s + 1) if s * c <= budget]
    s, c = rng.choice(pairs)
    x = finset_object([f"a{i}" for i in range(s)])
    table = list(range(s))
    for i in range(c):
        table[i] = (i + 1) % c
    return action_groupoid(BaseMorphism(x, x, table))


def _fam_graph(instance, rng, budget):
    pairs = [(m, n) for m in range(1, budget + 1)
             for n in range(1, budget + 1) if m * n <= budget]
    m, n = rng.choice(pairs)
    g = gcd(m, n)
    t = (n // g) * rng.randrange(g) if g else 0
    delta = morphism_from_function(zmod(m), zmod(n), lambda x: (x * t) % n)
    return groupoid_from_arrow(delta)


def _basic_families(instance):
    fams = [_fam_discrete, _fam_indiscrete, _fam_delooping]
    if instance is FINSET:
        fams.append(_fam_action)
    if instance is FINAB:
        fams.append(_fam_graph)
    return fams


def _fam_product(instance, rng, budget):
    p = rng.randint(1, max(1, budget // 2))
    q = max(1, budget // max(p, 2))
    left = rng.choice(_basic_families(instance))(instance, rng, p)
    right = rng.choice(_basic_families(instance))(instance, rng, q)
    return product_groupoid(left, right)[0]


def _random_groupoid(instance, rng, budget) -> InternalGroupoid:
    fams = _basic_families(instance) + [_fam_product]
    return rng.choice(fams)(instance, rng, budget)


def gen_groupoid(instance, seed, size_budget=None) -> InternalGroupoid:
    """Seeded random groupoid drawn from the family mixture."""
    rng = random.Random(f"{instance.name}:{seed}")
    return _random_groupoid(instance, rng, _budget(instance, size_budget))


# ---------------------------------------------------------------------------
# functor generators


def _terminal_groupoid(instance):
    if instance is FINSET:
        return discrete_groupoid(finset_object(["*"]))
    return zero_groupoid(instance)


def _functor_into_indiscrete(instance, rng, budget):
    a = _random_groupoid(instance, rng, budget)
    y = _random_object(instance, rng, max(1, isqrt(budget)))
    b = indiscrete_groupoid(y)
    f0 = _random_map(a.B0, y, rng)
    return functor(a, b, f0, lambda x: (f0(a.d(x)), f0(a.c(x))))


def _functor_from_discrete(instance, rng, budget):
    a = discrete_groupoid(_random_object(instance, rng, budget))
    b = _random_groupoid(instance, rng, budget)
    f0 = _random_map(a.B0, b.B0, rng)
    return functor(a, b, f0, lambda o: b.e(f0(o)))


def _subgroupoid_inclusion(g: InternalGroupoid, rng) -> InternalFunctor:
    inst = g.instance
    if inst is FINAB:
        seeds = rng.sample(range(g.B0.size),
                           rng.randint(1, min(2, g.B0.size)))
        idx = generated_subgroup_indices(g.B0, seeds)
    else:
        pool = list(range(g.B0.size))
        take = rng.randint(1, g.B0.size)
        idx = set(rng.sample(pool, take))
        if inst is FINPTDSET:
            idx.add(g.B0.basepoint)
    return full_subgroupoid(g, idx)[1]


def _delooping_collapse(instance, rng, budget):
    k = rng.randint(2, max(2, budget))
    divisors = [l for l in range(1, k) if k % l == 0]
    l = rng.choice(divisors)
    dom = cyclic_delooping(instance, k)
    cod = cyclic_delooping(instance, l)
    if instance is FINAB:
        floor = ("split_epi_fibration" if gcd(l, k // l) == 1
                 else "fibration")
    else:
        floor = "split_epi_fibration"
    return functor(dom, cod, lambda o: cod.B0.carrier[0],
                   lambda x: x % l), floor


def _delooping_embedding(instance, rng, budget):
    factors = [(k, m) for k in range(1, budget + 1)
               for m in range(2, budget + 1) if k * m <= budget]
    if not factors:
        factors = [(1, 1)]
    k, m = rng.choice(factors)
    dom = cyclic_delooping(instance, k)
    cod = cyclic_delooping(instance, k * m)
    return functor(dom, cod, lambda o: cod.B0.carrier[0],
                   lambda x: (x * m) % (k * m))


def _random_functor(instance, rng, budget=None) -> InternalFunctor:
    budget = _budget(instance, budget)

    def s_identity():
        return identity_functor(_random_groupoid(instance, rng, budget))

    def s_projection():
        return _fibration_family(instance, rng, budget)[0]

    def s_inclusion():
        return _subgroupoid_inclusion(_random_groupoid(instance, rng, budget),
                                      rng)

    def s_indiscrete():
        return _functor_into_indiscrete(instance, rng, budget)

    def s_discrete():
        return _functor_from_discrete(instance, rng, budget)

    def s_embedding():
        return _delooping_embedding(instance, rng, budget)

    strategies = [s_identity, s_projection, s_inclusion, s_indiscrete,
                  s_discrete, s_embedding]
    if instance.pointed:
        def s_zero():
            if instance is FINAB and rng.random() < 0.5:
                dom = zero_groupoid(instance)
            else:
                dom = _random_groupoid(instance, rng, max(1, budget // 2))
            return zero_functor(dom, _random_groupoid(instance, rng, budget))
        strategies.append(s_zero)
    return rng.choice(strategies)()


def gen_functor(instance, seed) -> InternalFunctor:
    """Seeded random functor drawn from the strategy mixture."""
    rng = random.Random(f"{instance.name}:{seed}")
    return _random_functor(instance, rng)


def _fibration_family(instance, rng, budget):
    """A functor known to be a fibration by construction, with its floor.

    The floor is the weakest classification the construction guarantees:
    "fibration", "split_epi_fibration", or "discrete_fibration".
    """
    def f_projection():
        p = rng.randint(1, max(1, budget // 2))
        q = max(1, budget // max(p, 2))
        left = rng.choice(_basic_families(instance))(instance, rng, p)
        right = rng.choice(_basic_families(instance))(instance, rng, q)
        return product_groupoid(left, right)[1], "split_epi_fibration"

    def f_identity():
        g = _random_groupoid(instance, rng, budget)
        return identity_functor(g), "discrete_fibration"

    def f_terminal():
        g = _random_groupoid(instance, rng, budget)
        t = _terminal_groupoid(instance)
        return functor(g, t, lambda o: t.B0.carrier[0],
                       lambda x: t.B1.carrier[0]), "split_epi_fibration"

    def f_collapse():
        return _delooping_collapse(instance, rng, budget)

    def f_indiscrete():
        x = _random_object(instance, rng, max(1, isqrt(budget)))
        surj = _random_surjection(x, rng)
        dom = indiscrete_groupoid(x)
        cod = indiscrete_groupoid(surj.cod)
        fun = functor(dom, cod, surj,
                      lambda p: (surj(p[0]), surj(p[1])))
        floor = "fibration" if instance is FINAB else "split_epi_fibration"
        return fun, floor

    choices = [f_projection, f_identity, f_terminal, f_collapse,
               f_indiscrete]
    if instance is FINSET:
        def f_cover():
            g = _fam_action(instance, rng, budget)
            k = max(x[1] for x in g.B1.carrier) + 1
            cod = cyclic_delooping(FINSET, k)
            star = cod.B0.carrier[0]
            return functor(g, cod, lambda o: star,
                           lambda t: t[1]), "discrete_fibration"
        choices.append(f_cover)
    return rng.choice(choices)()


def gen_fibration(instance, seed) -> InternalFunctor:
    """Seeded fibration, checked against the classifier before returning."""
    rng = random.Random(f"{instance.name}:{seed}")
    fun, floor = _fibration_family(instance, rng, _budget(instance, None))
    label = classify_fibration(fun)
    if not fibration_at_least(label, "fibration"):
        raise GroupoidLabError(
            f"generator produced a non-fibration (classified {label})")
    return fun


def _tagged_functor(instance, rng, budget=None):
    """Either an untagged functor or a fibration with its floor tag."""
    if rng.random() < 0.5:
        return _random_functor(instance, rng, budget), None
    return _fibration_family(instance, rng, _budget(instance, budget))


def _discrete_fibration_into(base: InternalGroupoid, rng):
    """A functor into ``base`` expected to classify as a discrete fibration."""
    roll = rng.random()
    if roll < 0.35:
        return identity_functor(base)
    if roll < 0.75 or not base.instance.pointed:
        extra = discrete_groupoid(_random_object(base.instance, rng, 3))
        return product_groupoid(base, extra)[1]
    target = _random_groupoid(base.instance, rng, 4)
    return strong_h_kernel(zero_functor(base, target)).projection


def _weak_equivalence_into(base: InternalGroupoid, rng):
    """A functor into ``base`` expected to be a weak equivalence."""
    if rng.random() < 0.4:
        return identity_functor(base)
    for _ in range(4):
        incl = _meet_all_components(base, rng)
        if incl is not None and is_weak_equivalence(incl):
            return incl
    return identity_functor(base)


def _meet_all_components(g: InternalGroupoid, rng):
    inst = g.instance
    if inst is FINAB:
        seeds = rng.sample(range(g.B0.size),
                           rng.randint(1, min(2, g.B0.size)))
        idx = generated_subgroup_indices(g.B0, seeds)
        return full_subgroupoid(g, idx)[1]
    _, proj = pi0(g)
    reps = {}
    order = list(range(g.B0.size))
    rng.shuffle(order)
    for o in order:
        reps.setdefault(proj.map[o], o)
    idx = set(reps.values())
    if inst is FINPTDSET:
        idx.add(g.B0.basepoint)
    extras = [o for o in range(g.B0.size) if o not in idx]
    for o in extras:
        if rng.random() < 0.3:
            idx.add(o)
    return full_subgroupoid(g, idx)[1]


def _random_weak_equivalence(instance, rng, budget=None):
    budget = _budget(instance, budget)
    roll = rng.random()
    if roll < 0.25:
        return identity_functor(_random_groupoid(instance, rng, budget))
    if roll < 0.5:
        a = _random_groupoid(instance, rng, max(1, budget // 4))
        x = _random_object(instance, rng, 2)
        prod, proj, _ = product_groupoid(a, indiscrete_groupoid(x))
        if rng.random() < 0.5:
            return proj
        z = _zero_element(x) if instance is not FINSET else x.carrier[0]
        return functor(a, prod, lambda o: (o, z),
                       lambda f: (f, (z, z)))
    if roll < 0.75:
        k = rng.randint(1, min(budget, 8))
        g = cyclic_delooping(instance, k)
        units = [u for u in range(1, k + 1) if gcd(u, k) == 1]
        u = rng.choice(units)
        return functor(g, g, lambda o: o, lambda x: (x * u) % k)
    return _weak_equivalence_into(_random_groupoid(instance, rng, budget),
                                  rng)


def _random_fully_faithful(instance, rng, budget=None):
    budget = _budget(instance, budget)
    roll = rng.random()
    if roll < 0.3:
        return identity_functor(_random_groupoid(instance, rng, budget))
    if roll < 0.65:
        return _subgroupoid_inclusion(
            _random_groupoid(instance, rng, budget), rng)
    return _random_weak_equivalence(instance, rng, budget)


# ---------------------------------------------------------------------------
# transformation generators


def gen_transformation(instance, seed) -> NatTransformation:
    """Seeded random 2-cell drawn from a small family mixture."""
    rng = random.Random(f"{instance.name}:{seed}")
    return _random_transformation(instance, rng)


def _random_transformation(instance, rng, budget=None):
    budget = _budget(instance, budget)
    roll = rng.random()
    if roll < 0.4:
        return identity_cell(_random_functor(instance, rng, budget))
    if instance is FINSET and roll < 0.6:
        k = rng.randint(1, budget)
        g = cyclic_delooping(FINSET, k)
        z = rng.randrange(k)
        return transformation(identity_functor(g), identity_functor(g),
                              lambda o: z)
    a = _random_groupoid(instance, rng, max(1, budget // 2))
    y = _random_object(instance, rng, max(1, isqrt(budget)))
    b = indiscrete_groupoid(y)
    f0 = _random_map(a.B0, y, rng)
    g0 = _random_map(a.B0, y, rng)
    fun = functor(a, b, f0, lambda x: (f0(a.d(x)), f0(a.c(x))))
    gun = functor(a, b, g0, lambda x: (g0(a.d(x)), g0(a.c(x))))
    return transformation(fun, gun, lambda o: (f0(o), g0(o)))


# ---------------------------------------------------------------------------
# arrow-square generators


def _random_arrow_morphism(instance, rng, budget=None) -> ArrowMorphism:
    budget = _budget(instance, budget)

    def s_id_dom():
        a0 = _random_object(instance, rng, budget)
        b = _random_map(_random_object(instance, rng, budget),
                        _random_object(instance, rng, budget), rng)
        f = _random_map(a0, b.dom, rng)
        return ArrowMorphism(ArrowObject(identity(a0)), ArrowObject(b),
                             f, compose(f, b))

    def s_id_cod():
        a = _random_map(_random_object(instance, rng, budget),
                        _random_object(instance, rng, budget), rng)
        b0 = _random_object(instance, rng, budget)
        f0 = _random_map(a.cod, b0, rng)
        return ArrowMorphism(ArrowObject(a), ArrowObject(identity(b0)),
                             compose(a, f0), f0)

    def s_normalized():
        return normalize(_random_functor(instance, rng, budget))

    def s_identity():
        a = _random_map(_random_object(instance, rng, budget),
                        _random_object(instance, rng, budget), rng)
        return identity_arr(ArrowObject(a))

    def s_kernel():
        return kernel_arr(rng.choice([s_id_dom, s_id_cod])()).inclusion

    def s_comparison():
        return comparison_J_arr(rng.choice([s_id_dom, s_id_cod])())

    strategies = [s_id_dom, s_id_cod, s_normalized, s_identity, s_kernel,
                  s_comparison]
    if instance is FINAB:
        def s_graph():
            m = rng.randint(1, 4)
            n = rng.randint(1, 4)
            g = gcd(m, n)
            t = (n // g) * rng.randrange(g)
            delta = morphism_from_function(zmod(m), zmod(n),
                                           lambda x: (x * t) % n)
            return graph_comparison(delta)
        strategies.append(s_graph)
    return rng.choice(strategies)()


# ---------------------------------------------------------------------------
# corruption


def corrupt_groupoid(g: InternalGroupoid, rng):
    """A structurally valid but axiom-breaking copy, or None.

    Returns (corrupted groupoid, expected axiom name); the expected axiom
    is guaranteed to appear in validate_groupoid's report.
    """
    def retype_source():
        if g.B1 == g.B0:
            return None
        return InternalGroupoid(g.B0, g.B1, identity(g.B1), g.c, g.e, g.m,
                                g.i), "source-map"

    def retype_identity():
        if g.B1 == g.B0:
            return None
        return InternalGroupoid(g.B0, g.B1, g.d, g.c, identity(g.B0), g.m,
                                g.i), "identity-map"

    def drop_inverse():
        if g.d.map != g.c.map:
            return (InternalGroupoid(g.B0, g.B1, g.d, g.c, g.e, g.m,
                                     identity(g.B1)), "inverse-source")
        if any(g.i.map[k] != k for k in range(g.B1.size)):
            return (InternalGroupoid(g.B0, g.B1, g.d, g.c, g.e, g.m,
                                     identity(g.B1)), "inverse-law")
        return None

    def project_compose():
        pairs = g.composition_pairs()
        proj = pairs.legs["p1"]
        if proj.map == g.m.map:
            return None
        bad = InternalGroupoid(g.B0, g.B1, g.d, g.c, g.e, proj, g.i)
        for (x, y) in pairs.apex.carrier:
            if g.c(x) != g.c(y):
                return bad, "composition-target"
        if any(g.e.map[g.d.map[k]] != k for k in range(g.B1.size)):
            return bad, "unit-law"
        return None

    def zero_source():
        if not g.instance.pointed:
            return None
        d_bad = zero_morphism(g.B1, g.B0)
        if d_bad.map == g.d.map:
            return None
        bad = InternalGroupoid(g.B0, g.B1, d_bad, g.c, g.e, g.m, g.i)
        if pullback(g.c, d_bad).apex != g.m.dom:
            return bad, "composition-carrier"
        if g.B0.size > 1:
            return bad, "identity-source"
        return None

    strategies = [retype_source, retype_identity, drop_inverse,
                  project_compose, zero_source]
    rng.shuffle(strategies)
    for strategy in strategies:
        out = strategy()
        if out is not None:
            return out
    return None


def corrupt_functor(fun: InternalFunctor, rng):
    """A mistyped or law-breaking copy of a functor, or None."""
    a, b = fun.dom, fun.cod

    def collapse_arrows():
        f1 = compose(a.d, fun.F0, b.e)
        sources = compose(a.d, fun.F0)
        targets = compose(a.c, fun.F0)
        if sources.map == targets.map:
            return None
        return InternalFunctor(a, b, fun.F0, f1), "functor-target"

    def retype_arrows():
        if a.B1 == b.B1:
            return None
        return (InternalFunctor(a, b, fun.F0, identity(a.B1)),
                "functor-typing")

    def zero_objects():
        if not a.instance.pointed:
            return None
        f0 = zero_morphism(a.B0, b.B0)
        if compose(a.d, f0).map == compose(fun.F1, b.d).map:
            return None
        return InternalFunctor(a, b, f0, fun.F1), "functor-source"

    def scramble_objects():
        if a.instance is not FINSET or b.B0.size < 2:
            return None
        for _ in range(8):
            f0 = _random_map(a.B0, b.B0, rng)
            if f0.map != fun.F0.map:
                return InternalFunctor(a, b, f0, fun.F1), "functor-source"
        return None

    strategies = [collapse_arrows, retype_arrows, zero_objects,
                  scramble_objects]
    rng.shuffle(strategies)
    for strategy in strategies:
        out = strategy()
        if out is not None:
            return out
    return None


def corrupt_transformation(cell: NatTransformation, rng):
    """A mistyped or law-breaking copy of a 2-cell, or None."""
    f, g = cell.source, cell.target
    b = f.cod

    def invert_components():
        if f.F0.map == g.F0.map:
            return None
        return (NatTransformation(f, g, compose(cell.alpha, b.i)),
                "component-source")

    def unit_components():
        if f.F0.map == g.F0.map:
            return None
        return (NatTransformation(f, g, compose(f.F0, b.e)),
                "component-target")

    def retype_components():
        if f.dom.B0 == b.B1:
            return None
        return (NatTransformation(f, g, identity(f.dom.B0)),
                "transformation-typing")

    strategies = [invert_components, unit_components, retype_components]
    rng.shuffle(strategies)
    for strategy in strategies:
        out = strategy()
        if out is not None:
            return out
    return None


# ---------------------------------------------------------------------------
# search catalogs


def _finab_catalog(max_order):
    objs = [zmod(k) for k in range(1, max_order + 1)]
    if max_order >= 4:
        objs.append(direct_sum(zmod(2), zmod(2)))
    return sorted(objs, key=lambda o: o.size)


def _finptdset_catalog(max_size):
    return [finptdset_object(["*"] + [f"x{i}" for i in range(1, n)], 0)
            for n in range(1, max_size + 1)]


def _groupoid_catalog(max_arrows):
    """FinAb groupoids with at most ``max_arrows`` arrows, smallest first."""
    out = []
    for g in _finab_catalog(max_arrows):
        out.append(delooping(g))
        out.append(discrete_groupoid(g))
    out.append(indiscrete_groupoid(zmod(2)))
    for m in range(1, max_arrows + 1):
        for n in range(1, max_arrows // m + 1):
            g = gcd(m, n)
            for j in range(g):
                t = (n // g) * j
                delta = morphism_from_function(
                    zmod(m), zmod(n), lambda x, t=t, n=n: (x * t) % n)
                out.append(groupoid_from_arrow(delta))
    return sorted(out, key=lambda b: (b.B1.size, b.B0.size))


def _arrow_square_space(instance):
    """Deterministic stream of commutative squares, smallest carriers first."""
    if instance is FINAB:
        objs = _finab_catalog(8)
    else:
        objs = _finptdset_catalog(3)
    homs = {}

    def hom(x, y):
        key = (id(x), id(y))
        if key not in homs:
            homs[key] = list(enumerate_morphisms(x, y))
        return homs[key]

    quads = sorted(
        ((a, a0, b, b0) for a in objs for a0 in objs
         for b in objs for b0 in objs),
        key=lambda q: (sum(o.size for o in q),
                       tuple(o.size for o in q)))
    for a_obj, a0_obj, b_obj, b0_obj in quads:
        for bot in hom(b_obj, b0_obj):
            cod = ArrowObject(bot)
            composites = [(f, b_el) for f in hom(a_obj, b_obj)
                          for b_el in [compose(f, bot)]]
            for top in hom(a_obj, a0_obj):
                dom = ArrowObject(top)
                for f0 in hom(a0_obj, b0_obj):
                    lhs = compose(top, f0)
                    for f, rhs in composites:
                        if lhs.map == rhs.map:
                            yield ArrowMorphism(dom, cod, f, f0)


def _shrink_square(m: ArrowMorphism, still_bad) -> ArrowMorphism:
    """Greedy element removal on a pointed square while the defect persists."""
    changed = True
    while changed:
        changed = False
        for which in range(4):
            obj = [m.dom.top, m.dom.bottom, m.cod.top, m.cod.bottom][which]
            for drop in range(obj.size):
                if drop == obj.basepoint:
                    continue
                smaller = _remove_element(m, which, drop)
                if smaller is not None and still_bad(smaller):
                    m = smaller
                    changed = True
                    break
            if changed:
                break
    return m


def _remove_element(m: ArrowMorphism, which, drop):
    objs = [m.dom.top, m.dom.bottom, m.cod.top, m.cod.bottom]
    # removal must not strand an element some kept map still hits
    incoming = {1: [(m.dom.a, 0)], 2: [(m.f, 0)],
                3: [(m.f0, 1), (m.cod.a, 2)]}.get(which, [])
    for mor, src in incoming:
        keep = [i for i in range(objs[src].size)
                if src != which or i != drop]
        if any(mor.map[i] == drop for i in keep):
            return None
    old = objs[which]
    keep = [i for i in range(old.size) if i != drop]
    new_obj = finptdset_object([old.carrier[i] for i in keep],
                               keep.index(old.basepoint))
    objs = list(objs)
    objs[which] = new_obj
    reindex = {i: k for k, i in enumerate(keep)}

    def restrict(mor, src, dst):
        table = []
        for i in range(objs[src].size):
            j = mor.map[i if src != which else keep[i]]
            if dst == which:
                if j not in reindex:
                    return None
                j = reindex[j]
            table.append(j)
        return BaseMorphism(objs[src], objs[dst], table)

    a = restrict(m.dom.a, 0, 1)
    b = restrict(m.cod.a, 2, 3)
    f = restrict(m.f, 0, 2)
    f0 = restrict(m.f0, 1, 3)
    if None in (a, b, f, f0):
        return None
    try:
        return ArrowMorphism(ArrowObject(a), ArrowObject(b), f, f0)
    except DiagramError:
        return None


# ---------------------------------------------------------------------------
# suites


def _suite_axioms(instance, n, seed):
    failures = []
    validators = {"groupoid": validate_groupoid,
                  "functor": validate_functor,
                  "transformation": validate_transformation}
    for k in range(n):
        tag = f"axioms:{seed}:{k}"
        g = gen_groupoid(instance, tag)
        fun = gen_functor(instance, tag)
        cell = gen_transformation(instance, tag)
        triple = {"groupoid": g, "functor": fun, "transformation": cell}
        for kind, value in triple.items():
            bad = validators[kind](value)
            if bad:
                failures.append(_witness(
                    k, f"generated {kind} failed validation: {bad}",
                    value=value))
        if k % 5 == 4:
            rng = random.Random(f"{instance.name}:{tag}:corrupt")
            kind = ("groupoid", "functor", "transformation")[(k // 5) % 3]
            corrupter = {"groupoid": corrupt_groupoid,
                         "functor": corrupt_functor,
                         "transformation": corrupt_transformation}[kind]
            out = corrupter(triple[kind], rng)
            if out is None:
                continue
            bad_value, expected = out
            got = validators[kind](bad_value)
            if expected not in got:
                failures.append(_witness(
                    k, f"corrupted {kind} expected axiom {expected!r}, "
                       f"validator reported {got}", value=bad_value))
    return n, failures


def _refinement_square_holds(fun: InternalFunctor):
    """The proof-level square: arrows against the strict comparison.

    Sends an arrow x to the degenerate square on its image, mediates into
    the relaxed pullback's arrow level, and checks the resulting square
    over the comparison functor is a pullback at the object level.
    """
    data = comparison_T_data(fun)
    a, b = fun.dom, fun.cod
    v = data.relaxed

    def degenerate(x):
        u = b.e(fun.F0(a.d(x)))
        return ((u, fun.F1(x)), (u, fun.F1(x)))

    sq_map = morphism_from_function(a.B1, v.squares.groupoid.B1, degenerate)
    try:
        fbar = v.arrow_limit.mediate({"g_arr": compose(a.d, fun.F0),
                                      "squares": sq_map,
                                      "f_arr": identity(a.B1)})
        strict_iso = data.strict.object_limit.mediate(
            {"p1": fun.F0, "p2": identity(a.B0)})
    except NoMediatorError:
        return False, "refinement cone fails to mediate"
    t0 = compose(strict_iso, data.functor.F0)
    dv = v.groupoid.d
    if compose(fbar, dv) != compose(a.d, t0):
        return False, "refinement square does not commute"
    try:
        med = pullback(t0, dv).mediate({"p1": a.d, "p2": fbar})
    except NoMediatorError:
        return False, "refinement square has no mediator"
    if not classify_morphism(med).iso:
        return False, "refinement square is not a pullback"
    return True, ""


def _suite_prop_fibration_t(instance, n, seed):
    failures = []
    heavy = 8 if instance is FINAB else 6
    for k in range(n):
        rng = random.Random(f"{instance.name}:prop-fibration-T:{seed}:{k}")
        fun, floor = _tagged_functor(instance, rng, heavy)
        label = classify_fibration(fun)
        if floor and not fibration_at_least(label, floor):
            failures.append(_witness(
                k, f"generator floor {floor!r} disagrees with label {label!r}",
                functor=fun))
            continue
        t = comparison_T(fun)
        if fibration_at_least(label, "fibration") != is_weak_equivalence(t):
            failures.append(_witness(
                k, "fibration flag disagrees with weak equivalence of the "
                   "strict comparison", functor=fun, label=label))
        if (fibration_at_least(label, "split_epi_fibration")
                != is_equivalence(t)):
            failures.append(_witness(
                k, "split fibration flag disagrees with equivalence of the "
                   "strict comparison", functor=fun, label=label))
        if k % 4 == 0:
            ok, reason = _refinement_square_holds(fun)
            if not ok:
                failures.append(_witness(k, reason, functor=fun))
    return n, failures


def _suite_prop_star_fibration_j(instance, n, seed):
    failures = []
    heavy = 6 if instance is FINPTDSET else 8
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:prop-star-fibration-J:{seed}:{k}")
        fun, floor = _tagged_functor(instance, rng, heavy)
        label = classify_fibration(fun)
        if floor and not fibration_at_least(label, floor):
            failures.append(_witness(
                k, f"generator floor {floor!r} disagrees with label {label!r}",
                functor=fun))
            continue
        star = classify_star_fibration(fun)
        j = comparison_J_data(fun).functor
        if star_at_least(star, "star_fibration") != is_weak_equivalence(j):
            failures.append(_witness(
                k, "star flag disagrees with weak equivalence of the kernel "
                   "comparison", functor=fun, star=star))
        if (star_at_least(star, "split_epi_star_fibration")
                != is_equivalence(j)):
            failures.append(_witness(
                k, "split star flag disagrees with equivalence of the kernel "
                   "comparison", functor=fun, star=star))
    return n, failures


def _kernel_square_checks(fun: InternalFunctor):
    """The kernel comparison against the strict comparison, as one square."""
    tdata = comparison_T_data(fun)
    jdata = comparison_J_data(fun)
    kg, incl = jdata.kernel, jdata.inclusion
    b = fun.cod
    strict = tdata.strict
    try:
        l0 = strict.object_limit.mediate(
            {"p1": zero_morphism(kg.B0, b.B0), "p2": incl.F0})
        l1 = strict.arrow_limit.mediate(
            {"p1": zero_morphism(kg.B1, b.B0), "p2": incl.F1})
    except NoMediatorError:
        return "kernel cone misses the strict pullback"
    ell = InternalFunctor(kg, strict.groupoid, l0, l1)
    hk = jdata.h_kernel
    to_g = zero_functor(hk.groupoid, tdata.relaxed.g.dom)
    cell = NatTransformation(
        compose_functors(to_g, tdata.relaxed.g),
        compose_functors(hk.projection, fun), hk.cell.alpha)
    try:
        i_fun = mediate_h_pullback(tdata.relaxed, hk.projection, to_g, cell)
    except NoMediatorError:
        return "h-kernel cone misses the relaxed pullback"
    if compose_functors(jdata.functor, i_fun) != compose_functors(
            ell, tdata.functor):
        return "kernel square does not commute"
    if not is_levelwise_pullback_square(jdata.functor, ell, i_fun,
                                        tdata.functor):
        return "kernel square is not a level-wise pullback"
    if classify_fibration(i_fun) != "discrete_fibration":
        return "h-kernel inclusion is not a discrete fibration"
    return None


def _suite_cor_weak_equivalence_j(instance, n, seed):
    failures = []
    heavy = 6 if instance is FINPTDSET else 8
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:cor-weak-equivalence-J:{seed}:{k}")
        fun, floor = _fibration_family(instance, rng, heavy)
        label = classify_fibration(fun)
        if not fibration_at_least(label, floor):
            failures.append(_witness(
                k, f"generator floor {floor!r} disagrees with label {label!r}",
                functor=fun))
            continue
        j = comparison_J_data(fun).functor
        if not is_weak_equivalence(j):
            failures.append(_witness(
                k, "fibration whose kernel comparison is not a weak "
                   "equivalence", functor=fun, label=label))
        if (fibration_at_least(label, "split_epi_fibration")
                and not is_equivalence(j)):
            failures.append(_witness(
                k, "split fibration whose kernel comparison is not an "
                   "equivalence", functor=fun, label=label))
        if k % 3 == 0:
            reason = _kernel_square_checks(fun)
            if reason:
                failures.append(_witness(k, reason, functor=fun))
    return n, failures


def _suite_fibration_implies_star(instance, n, seed):
    failures = []
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:fibration-implies-star:{seed}:{k}")
        fun, floor = _fibration_family(instance, rng,
                                       _budget(instance, None))
        label = classify_fibration(fun)
        if not fibration_at_least(label, floor):
            failures.append(_witness(
                k, f"generator floor {floor!r} disagrees with label {label!r}",
                functor=fun))
            continue
        star = classify_star_fibration(fun)
        if not star_at_least(star, "star_fibration"):
            failures.append(_witness(
                k, "fibration that is not a star-fibration", functor=fun,
                label=label, star=star))
        if (fibration_at_least(label, "split_epi_fibration")
                and not star_at_least(star, "split_epi_star_fibration")):
            failures.append(_witness(
                k, "split fibration that is not a split star-fibration",
                functor=fun, label=label, star=star))
    return n, failures


def _suite_star_not_fibration_search(instance, n, seed):
    """Walk small groupoid pairs for a star-fibration that is no fibration."""
    del seed  # the sweep is deterministic
    catalog = _groupoid_catalog(8)
    homs = {}

    def hom(x, y):
        key = (id(x), id(y))
        if key not in homs:
            homs[key] = list(enumerate_morphisms(x, y))
        return homs[key]

    examined = 0
    witnesses = []
    pairs = sorted(
        ((a, b) for a in catalog for b in catalog),
        key=lambda p: (p[0].B1.size + p[1].B1.size,
                       p[0].B1.size, p[1].B1.size))
    for dom, cod in pairs:
        if examined >= n or len(witnesses) >= 3:
            break
        for f0 in hom(dom.B0, cod.B0):
            if examined >= n or len(witnesses) >= 3:
                break
            for f1 in hom(dom.B1, cod.B1):
                candidate = InternalFunctor(dom, cod, f0, f1)
                if validate_functor(candidate):
                    continue
                examined += 1
                label = classify_fibration(candidate)
                if label != "not_fibration":
                    continue
                star = classify_star_fibration(candidate)
                if star_at_least(star, "star_fibration"):
                    witnesses.append(_witness(
                        examined - 1,
                        "star-fibration that is not a fibration",
                        functor=candidate, label=label, star=star))
                if examined >= n or len(witnesses) >= 3:
                    break
    return examined, witnesses


def _suite_hkernel_discrete_fibration(instance, n, seed):
    failures = []
    heavy = 6 if instance is FINPTDSET else 8
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:hkernel-discrete-fibration:{seed}:{k}")
        fun = _random_functor(instance, rng, heavy)
        proj = strong_h_kernel(fun).projection
        label = classify_fibration(proj)
        if label != "discrete_fibration":
            failures.append(_witness(
                k, f"h-kernel projection classified {label!r}", functor=fun))
    return n, failures


def _suite_ff_normalization_pullback(instance, n, seed):
    failures = []
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:ff-normalization-pullback:{seed}:{k}")
        fun = _random_fully_faithful(instance, rng)
        if not is_fully_faithful(fun):
            failures.append(_witness(
                k, "generator produced a functor that is not fully faithful",
                functor=fun))
            continue
        if not classify_morphism(partial_zero_arr(normalize(fun))).iso:
            failures.append(_witness(
                k, "fully faithful functor whose normalized square is not "
                   "a pullback", functor=fun))
    return n, failures


def _suite_pullback_transfer(instance, n, seed):
    failures = []
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:pullback-discrete-fibration-transfer:"
            f"{seed}:{k}")
        base = _random_groupoid(instance, rng, 6)
        disc = _discrete_fibration_into(base, rng)
        if classify_fibration(disc) != "discrete_fibration":
            failures.append(_witness(
                k, "generator produced a non-discrete fibration leg",
                functor=disc))
            continue
        weq = _weak_equivalence_into(base, rng)
        if not is_weak_equivalence(weq):
            failures.append(_witness(
                k, "generator produced a non-weak-equivalence leg",
                functor=weq))
            continue
        pulled = pullback_groupoid(weq, disc).to_second
        if not is_weak_equivalence(pulled):
            failures.append(_witness(
                k, "weak equivalence fails to transfer across the pullback",
                functor=weq, along=disc))
        if is_equivalence(weq) and not is_equivalence(pulled):
            failures.append(_witness(
                k, "equivalence fails to transfer across the pullback",
                functor=weq, along=disc))
    return n, failures


def _suite_normalization_preserves_kernels(instance, n, seed):
    failures = []
    heavy = 5 if instance is FINPTDSET else 8
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:normalization-preserves-kernels:{seed}:{k}")
        fun = _random_functor(instance, rng, heavy)
        nf = normalize(fun)
        cmp_k = kernel_preservation_comparison(fun)
        kg, incl = kernel_groupoid(fun)
        karr = kernel_arr(nf)
        if not (classify_morphism(cmp_k.f).iso
                and classify_morphism(cmp_k.f0).iso):
            failures.append(_witness(
                k, "kernel comparison is not an isomorphism", functor=fun))
        elif compose_arr(cmp_k, karr.inclusion) != normalize(incl):
            failures.append(_witness(
                k, "kernel comparison does not commute with inclusions",
                functor=fun))
        hk = strong_h_kernel(fun)
        arr = strong_h_kernel_arr(nf)
        cmp_h = h_kernel_preservation_comparison(fun)
        if not (classify_morphism(cmp_h.f).iso
                and classify_morphism(cmp_h.f0).iso):
            failures.append(_witness(
                k, "h-kernel comparison is not an isomorphism", functor=fun))
            continue
        if compose_arr(cmp_h, arr.inclusion) != normalize(hk.projection):
            failures.append(_witness(
                k, "h-kernel comparison does not commute with projections",
                functor=fun))
            continue
        direct = normalize_homotopy(hk.cell)
        acted = act_on_diagonal(cmp_h, arr.diagonal,
                                identity_arr(arr.of.cod))
        if direct.d != acted.d:
            failures.append(_witness(
                k, "h-kernel comparison does not respect the diagonal",
                functor=fun))
    return n, failures


def _suite_kernel_pullback_rows(instance, n, seed):
    failures = []
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:kernel-pullback-rows:{seed}:{k}")
        fun = _random_functor(instance, rng)
        a = fun.dom
        pz = partial_zero(fun)
        nf = normalize(fun)
        npz = partial_zero_arr(nf)
        kd = kernel(a.d).legs["ker"]
        zero_a0 = _zero_element(a.B0)
        bottom = morphism_from_function(
            npz.cod, pz.morphism.cod,
            lambda p: ((zero_a0, p[1]), p[0]))
        if compose(pz.morphism, pz.to_dom) != a.d:
            failures.append(_witness(
                k, "partial map does not project back to the source",
                functor=fun))
            continue
        if compose(npz, bottom) != compose(kd, pz.morphism):
            failures.append(_witness(
                k, "restricted square does not commute", functor=fun))
            continue
        try:
            row = kernel(pz.to_dom).mediate({"ker": bottom})
            top = kernel(a.d).mediate({"ker": kd})
            med = pullback(pz.morphism, bottom).mediate(
                {"p1": kd, "p2": npz})
        except NoMediatorError:
            failures.append(_witness(
                k, "kernel rows fail to mediate", functor=fun))
            continue
        if not classify_morphism(top).iso:
            failures.append(_witness(
                k, "arrow-level row is not a kernel", functor=fun))
        if not classify_morphism(row).iso:
            failures.append(_witness(
                k, "restricted row is not a kernel", functor=fun))
        if not classify_morphism(med).iso:
            failures.append(_witness(
                k, "restriction square is not a pullback", functor=fun))
    return n, failures


def _suite_normalization_transfer(instance, n, seed):
    failures = []
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:normalization-transfer:{seed}:{k}")
        roll = rng.random()
        if roll < 0.4:
            fun, _ = _tagged_functor(instance, rng)
        elif roll < 0.7:
            fun = _random_fully_faithful(instance, rng)
        else:
            fun = _random_functor(instance, rng)
        pz = partial_zero(fun)
        ess = is_essentially_surjective(fun)
        fib = fibration_at_least(classify_fibration(fun), "fibration")
        ff = is_fully_faithful(fun)
        arrow_flags = classify_arrow_morphism(normalize(fun))
        items = [
            (1, pz.faithful, arrow_flags["faithful"]),
            (2, ff, arrow_flags["fully_faithful"]),
            (3, pz.full, arrow_flags["full"]),
            (8, arrow_flags["essentially_surjective"], ess),
            (9, fib, arrow_flags["fibration"]),
        ]
        if instance is FINAB:
            items += [
                (4, arrow_flags["faithful"], pz.faithful),
                (5, arrow_flags["fully_faithful"], ff),
                (6, arrow_flags["full"], pz.full),
                (7, ess, arrow_flags["essentially_surjective"]),
                (10, arrow_flags["fibration"], fib),
            ]
        for item, premise, conclusion in items:
            if premise and not conclusion:
                failures.append(_witness(
                    k, f"transfer item {item} fails", functor=fun,
                    item=item))
    return n, failures


def _suite_kernels_strong_arr(instance, n, seed):
    failures = []
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:kernels-strong-arr:{seed}:{k}")
        m = _random_arrow_morphism(instance, rng, 6)
        j = comparison_J_arr(m)
        if not classify_morphism(partial_zero_arr(j)).iso:
            failures.append(_witness(
                k, "kernel comparison of a square is not fully faithful",
                square=m))
            continue
        hk = strong_h_kernel_arr(m)
        if hk.diagonal.morphism != compose_arr(hk.inclusion, m):
            failures.append(_witness(
                k, "h-kernel diagonal sits on the wrong square", square=m))
            continue
        karr = kernel_arr(m)
        mu = Diagonal(compose_arr(karr.inclusion, m),
                      zero_morphism(karr.object.bottom, m.cod.top))
        try:
            factor = h_kernel_factorization(hk, karr.inclusion, mu)
        except NoMediatorError:
            failures.append(_witness(
                k, "kernel cone fails to factor through the h-kernel",
                square=m))
            continue
        if compose_arr(factor, hk.inclusion) != karr.inclusion:
            failures.append(_witness(
                k, "h-kernel factorization does not recover the inclusion",
                square=m))
        if factor != j:
            failures.append(_witness(
                k, "factorization disagrees with the kernel comparison",
                square=m))
        flags = classify_arrow_morphism(m)
        if flags["star_fibration"] != jointly_strongly_epi(
                [j.f0, j.cod.a]):
            failures.append(_witness(
                k, "star flag disagrees with the joint-epi oracle",
                square=m))
    return n, failures


def _suite_protomodularity_char(instance, n, seed):
    """Sweep fibration squares and test the kernel comparison.

    On FinAb the comparison must always be a weak equivalence (violations
    are failures); on FinPtdSet the sweep is a counterexample search and
    found witnesses are the expected outcome.
    """
    del seed  # the sweep is deterministic
    examined = 0
    failures = []
    for m in _arrow_square_space(instance):
        if examined >= n:
            break
        if not classify_morphism(m.f).regular_epi:
            continue
        examined += 1
        j = comparison_J_arr(m)
        ff = classify_morphism(partial_zero_arr(j)).iso
        ess = is_essentially_surjective_arr(j)
        if ff and ess:
            continue
        if instance is FINAB:
            failures.append(_witness(
                examined - 1,
                "fibration square whose kernel comparison fails weak "
                "equivalence", square=m))
        else:
            def still_bad(cand):
                if not classify_morphism(cand.f).regular_epi:
                    return False
                cj = comparison_J_arr(cand)
                return not (classify_morphism(partial_zero_arr(cj)).iso
                            and is_essentially_surjective_arr(cj))
            small = _shrink_square(m, still_bad)
            small_j = comparison_J_arr(small)
            failures.append(_witness(
                examined - 1,
                "fibration square whose kernel comparison fails the "
                "joint-epi oracle", square=small,
                joint_epi=is_essentially_surjective_arr(small_j),
                fully_faithful=classify_morphism(
                    partial_zero_arr(small_j)).iso))
            if len(failures) >= 3:
                break
    return examined, failures


def _suite_pi_invariance(instance, n, seed):
    failures = []
    for k in range(n):
        rng = random.Random(f"{instance.name}:pi-invariance:{seed}:{k}")
        fun = _random_weak_equivalence(instance, rng)
        if not is_weak_equivalence(fun):
            failures.append(_witness(
                k, "generator produced a non-weak-equivalence", functor=fun))
            continue
        if not classify_morphism(pi0_induced(fun)).iso:
            failures.append(_witness(
                k, "weak equivalence with non-isomorphic component map",
                functor=fun))
        if instance.pointed and not classify_morphism(
                pi1_induced(fun)).iso:
            failures.append(_witness(
                k, "weak equivalence with non-isomorphic loop map",
                functor=fun))
    return n, failures


def _test_source(instance, rng, apex_size, cap=60000):
    w = 1
    while apex_size ** (w + 1) <= cap and w < 3:
        w += 1
    if instance is FINAB:
        return zmod(w)
    if instance is FINPTDSET:
        return finptdset_object(["*"] + [f"w{i}" for i in range(1, w)], 0)
    return finset_object([f"w{i}" for i in range(w)])


def _suite_mediator_uniqueness(instance, n, seed):
    failures = []
    kinds = ["pullback", "product", "h-object", "h-arrow"]
    if instance.pointed:
        kinds.append("kernel")
    for k in range(n):
        rng = random.Random(
            f"{instance.name}:mediator-uniqueness:{seed}:{k}")
        kind = rng.choice(kinds)
        if kind in ("pullback", "product", "kernel"):
            x = _random_object(instance, rng, 5)
            z = _random_object(instance, rng, 5)
            if kind == "pullback":
                y = _random_object(instance, rng, 5)
                lim = pullback(_random_map(x, z, rng),
                               _random_map(y, z, rng))
            elif kind == "product":
                lim = product(x, z)
            else:
                lim = kernel(_random_map(x, z, rng))
        else:
            small = 3 if instance is not FINAB else 4
            b = _random_groupoid(instance, rng, small)
            f = _cospan_leg(b, rng)
            g = _cospan_leg(b, rng)
            hp = strong_h_pullback(f, g)
            lim = hp.object_limit if kind == "h-object" else hp.arrow_limit
        if lim.apex.size == 0:
            continue
        w = _test_source(instance, rng, lim.apex.size)
        h = _random_map(w, lim.apex, rng)
        cone = {name: compose(h, leg) for name, leg in lim.legs.items()}
        count = count_factorizations(lim, cone)
        if count != 1:
            failures.append(_witness(
                k, f"cone admits {count} factorizations", kind=kind,
                apex=lim.apex))
    return n, failures


def _cospan_leg(b: InternalGroupoid, rng) -> InternalFunctor:
    roll = rng.random()
    if roll < 0.4:
        return identity_functor(b)
    if roll < 0.7:
        return _subgroupoid_inclusion(b, rng)
    a = discrete_groupoid(_random_object(b.instance, rng, 2))
    f0 = _random_map(a.B0, b.B0, rng)
    return functor(a, b, f0, lambda o: b.e(f0(o)))


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class _Suite:
    run: object
    instances: tuple
    witness_instances: frozenset
    summary: str


_ALL = ("finset", "finptdset", "finab")
_POINTED = ("finptdset", "finab")

SUITES = {
    "axioms": _Suite(
        _suite_axioms, _ALL, frozenset(),
        "generated structures validate; corrupted ones name the broken "
        "axiom"),
    "prop-fibration-T": _Suite(
        _suite_prop_fibration_t, _ALL, frozenset(),
        "fibration flags match weak equivalence of the strict comparison, "
        "with the proof-level refinement square"),
    "prop-star-fibration-J": _Suite(
        _suite_prop_star_fibration_j, _POINTED, frozenset(),
        "star flags match weak equivalence of the kernel comparison"),
    "cor-weak-equivalence-J": _Suite(
        _suite_cor_weak_equivalence_j, _POINTED, frozenset(),
        "fibrations have weakly invertible kernel comparisons, through a "
        "pullback square of comparisons"),
    "fibration-implies-star": _Suite(
        _suite_fibration_implies_star, _POINTED, frozenset(),
        "every generated fibration is a star-fibration"),
    "star-not-fibration-search": _Suite(
        _suite_star_not_fibration_search, ("finab",), frozenset(("finab",)),
        "bounded search for a star-fibration that is not a fibration"),
    "hkernel-discrete-fibration": _Suite(
        _suite_hkernel_discrete_fibration, _POINTED, frozenset(),
        "h-kernel projections classify as discrete fibrations"),
    "ff-normalization-pullback": _Suite(
        _suite_ff_normalization_pullback, _POINTED, frozenset(),
        "normalized squares of fully faithful functors are pullbacks"),
    "pullback-discrete-fibration-transfer": _Suite(
        _suite_pullback_transfer, _ALL, frozenset(),
        "weak equivalence transfers across pullbacks along discrete "
        "fibrations"),
    "normalization-preserves-kernels": _Suite(
        _suite_normalization_preserves_kernels, _POINTED, frozenset(),
        "normalization commutes with kernels and strong h-kernels up to "
        "canonical isomorphism"),
    "kernel-pullback-rows": _Suite(
        _suite_kernel_pullback_rows, _POINTED, frozenset(),
        "kernel rows of the partial-map rectangle, with its pullback "
        "square"),
    "normalization-transfer": _Suite(
        _suite_normalization_transfer, _POINTED, frozenset(),
        "classification flags move along normalization, item by item"),
    "kernels-strong-arr": _Suite(
        _suite_kernels_strong_arr, _POINTED, frozenset(),
        "square-level kernel comparisons are fully faithful and factor "
        "kernel cones"),
    "protomodularity-char": _Suite(
        _suite_protomodularity_char, _POINTED, frozenset(("finptdset",)),
        "fibration squares have weakly invertible kernel comparisons "
        "exactly in the protomodular instance"),
    "pi-invariance": _Suite(
        _suite_pi_invariance, _ALL, frozenset(),
        "weak equivalences induce isomorphisms on components and loops"),
    "mediator-uniqueness": _Suite(
        _suite_mediator_uniqueness, _ALL, frozenset(),
        "limit mediators are unique, by exhaustive candidate enumeration"),
}


def suite_names():
    return list(SUITES)


def suite_instances(name):
    return SUITES[name].instances


def expects_witness(name, instance_name) -> bool:
    return instance_name in SUITES[name].witness_instances


def run_suite(name, instance, n_cases, seed) -> SuiteReport:
    """Run one registered suite on one instance and collect the report.

    Instances outside the suite's capability list produce an empty report
    with zero cases, so "all" loops can iterate uniformly.
    """
    spec = SUITES.get(name)
    if spec is None:
        raise DiagramError(f"unknown suite {name!r}")
    if n_cases < 1:
        raise DiagramError("a suite needs at least one case")
    start = time.perf_counter()
    if instance.name not in spec.instances:
        cases, failures = 0, []
    else:
        cases, failures = spec.run(instance, n_cases, seed)
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return SuiteReport(suite=name, instance=instance.name, seed=seed,
                       cases=cases, failures=failures, elapsed_ms=elapsed)
