"""Internal groupoids, functors, and transformations over a base instance.

An internal groupoid is a tuple (B0, B1, d, c, e, m, i) of base objects and
morphisms: arrows B1 over objects B0 with source d, target c, unit e,
composition m, and inverse i.  Composition is defined on the canonical
pullback of c against d, whose carrier consists of pairs (x, y) with
c(x) = d(y), and is written in diagram order: m(x, y) is "x then y".

Validators return lists of named axioms that fail instead of raising, so
corrupted structures can be diagnosed; constructors in this module always
produce valid structures.
"""

from __future__ import annotations

from .base import (FINAB, FINPTDSET, FINSET, BaseMorphism, BaseObject,
                   CapabilityError, DiagramError, LimitResult, compose,
                   direct_sum, finptdset_object, finset_object, identity,
                   morphism_from_function, product, pullback,
                   reflexive_coequalizer, subgroup_object, zero_morphism,
                   zero_object, zmod)


class InternalGroupoid:
    """Arrows B1 over objects B0 with the five structure maps.

    ``m.dom`` must be the canonical pullback carrier of composable pairs;
    helpers (``mul``, ``unit``, ``inv``) evaluate the structure maps on
    elements.

    >>> g = discrete_groupoid(finset_object(["p", "q"]))
    >>> g.unit("p")
    'p'
    """

    __slots__ = ("B0", "B1", "d", "c", "e", "m", "i", "_pairs")

    def __init__(self, B0, B1, d, c, e, m, i):
        self.B0 = B0
        self.B1 = B1
        self.d = d
        self.c = c
        self.e = e
        self.m = m
        self.i = i
        self._pairs = None

    @property
    def instance(self):
        return self.B0.instance

    def composition_pairs(self) -> LimitResult:
        """The canonical composable-pairs pullback (cached)."""
        if self._pairs is None:
            self._pairs = pullback(self.c, self.d)
        return self._pairs

    def mul(self, x, y):
        return self.m((x, y))

    def unit(self, obj):
        return self.e(obj)

    def inv(self, x):
        return self.i(x)

    def __eq__(self, other):
        return (isinstance(other, InternalGroupoid)
                and all(getattr(self, a) == getattr(other, a)
                        for a in ("B0", "B1", "d", "c", "e", "m", "i")))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.B0, self.B1, self.d.map, self.c.map))

    def __repr__(self):
        return (f"<groupoid {self.instance.name} |B0|={self.B0.size} "
                f"|B1|={self.B1.size}>")


def validate_groupoid(g: InternalGroupoid) -> list[str]:
    """Names of groupoid axioms that fail (empty list = valid groupoid).

    Typing problems are reported as "source-map" / "target-map" /
    "identity-map" / "inverse-map" / "composition-carrier" and abort the
    deeper checks they would crash.
    """
    bad: list[str] = []
    b0, b1 = g.B0, g.B1
    if g.d.dom != b1 or g.d.cod != b0:
        bad.append("source-map")
    if g.c.dom != b1 or g.c.cod != b0:
        bad.append("target-map")
    if g.e.dom != b0 or g.e.cod != b1:
        bad.append("identity-map")
    if g.i.dom != b1 or g.i.cod != b1:
        bad.append("inverse-map")
    if bad:
        return bad
    apex = pullback(g.c, g.d).apex
    if g.m.dom != apex or g.m.cod != b1:
        return ["composition-carrier"]

    d, c, e, m, i = g.d.map, g.c.map, g.e.map, g.m.map, g.i.map
    pair_index = {x: k for k, x in enumerate(apex.carrier)}
    carrier1 = b1.carrier

    if any(d[e[o]] != o for o in range(b0.size)):
        bad.append("identity-source")
    if any(c[e[o]] != o for o in range(b0.size)):
        bad.append("identity-target")

    comp_src = any(d[m[k]] != d[b1.index_of(x)]
                   for k, (x, _) in enumerate(apex.carrier))
    comp_tgt = any(c[m[k]] != c[b1.index_of(y)]
                   for k, (_, y) in enumerate(apex.carrier))
    if comp_src:
        bad.append("composition-source")
    if comp_tgt:
        bad.append("composition-target")

    unit_ok = True
    for fi in range(b1.size):
        f = carrier1[fi]
        left = m[pair_index[(carrier1[e[d[fi]]], f)]]
        right = m[pair_index[(f, carrier1[e[c[fi]]])]]
        if left != fi or right != fi:
            unit_ok = False
            break
    if not unit_ok:
        bad.append("unit-law")

    if not comp_src and not comp_tgt:
        assoc_ok = True
        by_source: list[list[int]] = [[] for _ in range(b0.size)]
        for hi in range(b1.size):
            by_source[d[hi]].append(hi)
        for k, (x, y) in enumerate(apex.carrier):
            xy = m[k]
            for hi in by_source[c[b1.index_of(y)]]:
                h = carrier1[hi]
                lhs = m[pair_index[(carrier1[xy], h)]]
                yh = m[pair_index[(y, h)]]
                rhs = m[pair_index[(x, carrier1[yh])]]
                if lhs != rhs:
                    assoc_ok = False
                    break
            if not assoc_ok:
                break
        if not assoc_ok:
            bad.append("associativity")

    if any(d[i[fi]] != c[fi] for fi in range(b1.size)):
        bad.append("inverse-source")
    if any(c[i[fi]] != d[fi] for fi in range(b1.size)):
        bad.append("inverse-target")
    inv_ok = True
    for fi in range(b1.size):
        f = carrier1[fi]
        fin = carrier1[i[fi]]
        if (fin, f) not in pair_index or (f, fin) not in pair_index:
            inv_ok = False
            break
        if (m[pair_index[(f, fin)]] != e[d[fi]]
                or m[pair_index[(fin, f)]] != e[c[fi]]):
            inv_ok = False
            break
    if not inv_ok:
        bad.append("inverse-law")
    return bad


class InternalFunctor:
    """A pair (F0, F1) of base morphisms commuting with all structure maps."""

    __slots__ = ("dom", "cod", "F0", "F1")

    def __init__(self, dom: InternalGroupoid, cod: InternalGroupoid,
                 F0: BaseMorphism, F1: BaseMorphism):
        self.dom = dom
        self.cod = cod
        self.F0 = F0
        self.F1 = F1

    def __eq__(self, other):
        return (isinstance(other, InternalFunctor) and self.dom == other.dom
                and self.cod == other.cod and self.F0 == other.F0
                and self.F1 == other.F1)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.F0.map, self.F1.map))

    def __repr__(self):
        return f"<functor {self.dom!r} -> {self.cod!r}>"


def validate_functor(fun: InternalFunctor) -> list[str]:
    """Names of functor axioms that fail (empty list = valid functor)."""
    a, b = fun.dom, fun.cod
    if (fun.F0.dom != a.B0 or fun.F0.cod != b.B0
            or fun.F1.dom != a.B1 or fun.F1.cod != b.B1):
        return ["functor-typing"]
    bad = []
    if compose(fun.F1, b.d) != compose(a.d, fun.F0):
        bad.append("functor-source")
    if compose(fun.F1, b.c) != compose(a.c, fun.F0):
        bad.append("functor-target")
    if compose(a.e, fun.F1) != compose(fun.F0, b.e):
        bad.append("functor-identity")
    if "functor-source" not in bad and "functor-target" not in bad:
        pair_index = {x: k
                      for k, x in enumerate(b.composition_pairs().apex.carrier)}
        f1 = fun.F1
        for (x, y) in a.composition_pairs().apex.carrier:
            lhs = f1(a.mul(x, y))
            rhs = b.m.cod.carrier[b.m.map[pair_index[(f1(x), f1(y))]]]
            if lhs != rhs:
                bad.append("functor-composition")
                break
    return bad


class NatTransformation:
    """A 2-cell between parallel functors: a map alpha of objects to arrows.

    alpha(x) runs from source-functor image to target-functor image;
    naturality is the usual exchange law stated internally on A1.
    """

    __slots__ = ("source", "target", "alpha")

    def __init__(self, source: InternalFunctor, target: InternalFunctor,
                 alpha: BaseMorphism):
        self.source = source
        self.target = target
        self.alpha = alpha

    def __eq__(self, other):
        return (isinstance(other, NatTransformation)
                and self.source == other.source and self.target == other.target
                and self.alpha == other.alpha)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "<2-cell>"


def validate_transformation(cell: NatTransformation) -> list[str]:
    """Names of 2-cell axioms that fail (empty list = valid)."""
    f, g = cell.source, cell.target
    if f.dom != g.dom or f.cod != g.cod:
        return ["transformation-typing"]
    a, b = f.dom, f.cod
    if cell.alpha.dom != a.B0 or cell.alpha.cod != b.B1:
        return ["transformation-typing"]
    bad = []
    if compose(cell.alpha, b.d) != f.F0:
        bad.append("component-source")
    if compose(cell.alpha, b.c) != g.F0:
        bad.append("component-target")
    if not bad:
        alpha = cell.alpha
        for x in a.B1.carrier:
            lhs = b.mul(alpha(a.d(x)), g.F1(x))
            rhs = b.mul(f.F1(x), alpha(a.c(x)))
            if lhs != rhs:
                bad.append("naturality")
                break
    return bad


# ---------------------------------------------------------------------------
# construction helpers


def make_groupoid(B0, B1, d, c, e, i, compose_fn) -> InternalGroupoid:
    """Assemble a groupoid, building m from an element-level pair function."""
    pairs = pullback(c, d)
    m = morphism_from_function(pairs.apex, B1, lambda p: compose_fn(p[0], p[1]))
    g = InternalGroupoid(B0, B1, d, c, e, m, i)
    g._pairs = pairs
    return g


def functor(dom, cod, f0_fn, f1_fn) -> InternalFunctor:
    """Assemble a functor from element-level functions (validated)."""
    fun = InternalFunctor(dom, cod,
                          morphism_from_function(dom.B0, cod.B0, f0_fn),
                          morphism_from_function(dom.B1, cod.B1, f1_fn))
    bad = validate_functor(fun)
    if bad:
        raise DiagramError(f"functor construction failed axioms {bad}")
    return fun


def transformation(source, target, alpha_fn) -> NatTransformation:
    cell = NatTransformation(source, target,
                             morphism_from_function(source.dom.B0,
                                                    source.cod.B1, alpha_fn))
    bad = validate_transformation(cell)
    if bad:
        raise DiagramError(f"2-cell construction failed axioms {bad}")
    return cell


def identity_functor(g: InternalGroupoid) -> InternalFunctor:
    return InternalFunctor(g, g, identity(g.B0), identity(g.B1))


def compose_functors(f: InternalFunctor, g: InternalFunctor) -> InternalFunctor:
    """Composite in diagram order (f then g)."""
    if f.cod != g.dom:
        raise DiagramError("functor composite is mistyped")
    return InternalFunctor(f.dom, g.cod, compose(f.F0, g.F0),
                           compose(f.F1, g.F1))


def whisker(cell: NatTransformation, fun: InternalFunctor) -> NatTransformation:
    """Post-compose a 2-cell with a functor out of its codomain groupoid."""
    if cell.source.cod != fun.dom:
        raise DiagramError("whisker is mistyped")
    return NatTransformation(compose_functors(cell.source, fun),
                             compose_functors(cell.target, fun),
                             compose(cell.alpha, fun.F1))


def whisker_left(fun: InternalFunctor, cell: NatTransformation) -> NatTransformation:
    """Pre-compose a 2-cell with a functor into its domain groupoid."""
    if fun.cod != cell.source.dom:
        raise DiagramError("whisker is mistyped")
    return NatTransformation(compose_functors(fun, cell.source),
                             compose_functors(fun, cell.target),
                             compose(fun.F0, cell.alpha))


def identity_cell(fun: InternalFunctor) -> NatTransformation:
    return NatTransformation(fun, fun, compose(fun.F0, fun.cod.e))


# ---------------------------------------------------------------------------
# stock groupoids


def discrete_groupoid(x: BaseObject) -> InternalGroupoid:
    """Only identity arrows: B1 = B0 with every structure map trivial."""
    idm = identity(x)
    return make_groupoid(x, x, idm, idm, idm, idm, lambda a, b: a)


def indiscrete_groupoid(x: BaseObject) -> InternalGroupoid:
    """Exactly one arrow between any two objects: B1 = B0 x B0."""
    b1 = product(x, x).apex
    d = morphism_from_function(b1, x, lambda p: p[0])
    c = morphism_from_function(b1, x, lambda p: p[1])
    e = morphism_from_function(x, b1, lambda o: (o, o))
    i = morphism_from_function(b1, b1, lambda p: (p[1], p[0]))
    return make_groupoid(x, b1, d, c, e, i, lambda p, q: (p[0], q[1]))


def cyclic_delooping(instance, k: int) -> InternalGroupoid:
    """One object with Z_k worth of loops, in any instance."""
    if instance is FINAB:
        return delooping(zmod(k))
    if instance is FINSET:
        b0 = finset_object(["*"])
        b1 = finset_object(range(k))
    else:
        b0 = finptdset_object(["*"])
        b1 = finptdset_object(range(k), 0)
    d = morphism_from_function(b1, b0, lambda _: "*")
    e = morphism_from_function(b0, b1, lambda _: 0)
    i = morphism_from_function(b1, b1, lambda j: (-j) % k)
    return make_groupoid(b0, b1, d, d, e, i, lambda a, b: (a + b) % k)


def delooping(group: BaseObject) -> InternalGroupoid:
    """One object whose loops are the given abelian group."""
    if group.instance is not FINAB:
        raise CapabilityError("delooping of a group object needs finab")
    b0 = zmod(1)
    d = zero_morphism(group, b0)
    e = zero_morphism(b0, group)
    i = morphism_from_function(group, group, group.neg_element)
    return make_groupoid(b0, group, d, d, e, i, group.add_elements)


def groupoid_from_arrow(delta: BaseMorphism) -> InternalGroupoid:
    """The groupoid with objects cod(delta) and arrows cod(delta)+dom(delta).

    An arrow (a, n) runs from a to a + delta(n); composition adds the
    N-components.  Connected components are the cosets of the image, and
    the loops at 0 form the kernel of delta.
    """
    if delta.dom.instance is not FINAB:
        raise CapabilityError("groupoid_from_arrow needs finab")
    a0, n = delta.cod, delta.dom
    b1 = direct_sum(a0, n)
    d = morphism_from_function(b1, a0, lambda t: t[0])
    c = morphism_from_function(b1, a0, lambda t: a0.add_elements(t[0], delta(t[1])))
    e = morphism_from_function(a0, b1, lambda a: (a, n.zero_element()))
    i = morphism_from_function(
        b1, b1, lambda t: (a0.add_elements(t[0], delta(t[1])), n.neg_element(t[1])))
    return make_groupoid(a0, b1, d, c, e, i,
                         lambda p, q: (p[0], n.add_elements(p[1], q[1])))


def action_groupoid(perm: BaseMorphism) -> InternalGroupoid:
    """Action groupoid of the cyclic group generated by a permutation (FINSET).

    Objects are the permuted set; an arrow (x, j) runs from x to perm^j(x).
    """
    if perm.dom.instance is not FINSET or perm.dom != perm.cod:
        raise CapabilityError("action_groupoid needs a finset permutation")
    if sorted(perm.map) != list(range(perm.dom.size)):
        raise DiagramError("action map must be a permutation")
    x = perm.dom
    k = 1
    power = list(perm.map)
    while power != list(range(x.size)):
        power = [perm.map[j] for j in power]
        k += 1
    orbit = [list(range(x.size))]
    for _ in range(k - 1):
        orbit.append([perm.map[j] for j in orbit[-1]])

    def act(xe, j):
        return x.carrier[orbit[j][x.index_of(xe)]]

    b1 = product(x, finset_object(range(k))).apex
    d = morphism_from_function(b1, x, lambda t: t[0])
    c = morphism_from_function(b1, x, lambda t: act(t[0], t[1]))
    e = morphism_from_function(x, b1, lambda o: (o, 0))
    i = morphism_from_function(b1, b1,
                               lambda t: (act(t[0], t[1]), (k - t[1]) % k))
    return make_groupoid(x, b1, d, c, e, i,
                         lambda p, q: (p[0], (p[1] + q[1]) % k))


def product_groupoid(g: InternalGroupoid, h: InternalGroupoid):
    """Componentwise product with the two projection functors."""
    b0 = product(g.B0, h.B0).apex
    b1 = product(g.B1, h.B1).apex
    d = morphism_from_function(b1, b0, lambda t: (g.d(t[0]), h.d(t[1])))
    c = morphism_from_function(b1, b0, lambda t: (g.c(t[0]), h.c(t[1])))
    e = morphism_from_function(b0, b1, lambda o: (g.e(o[0]), h.e(o[1])))
    i = morphism_from_function(b1, b1, lambda t: (g.i(t[0]), h.i(t[1])))
    prod = make_groupoid(b0, b1, d, c, e, i,
                         lambda p, q: (g.mul(p[0], q[0]), h.mul(p[1], q[1])))
    proj_g = InternalFunctor(prod, g,
                             morphism_from_function(b0, g.B0, lambda o: o[0]),
                             morphism_from_function(b1, g.B1, lambda t: t[0]))
    proj_h = InternalFunctor(prod, h,
                             morphism_from_function(b0, h.B0, lambda o: o[1]),
                             morphism_from_function(b1, h.B1, lambda t: t[1]))
    return prod, proj_g, proj_h


def full_subgroupoid(g: InternalGroupoid, object_indices):
    """Full subgroupoid on a subset of objects, with its inclusion functor.

    In FINAB the subset must be a subgroup; in FINPTDSET it must contain the
    basepoint.
    """
    idx = sorted(set(object_indices))
    inst = g.instance
    if inst is FINAB:
        b0 = subgroup_object(g.B0, idx)
    elif inst is FINPTDSET:
        if g.B0.basepoint not in idx:
            raise DiagramError("full subgroupoid must keep the basepoint")
        b0 = finptdset_object([g.B0.carrier[i] for i in idx],
                              idx.index(g.B0.basepoint))
    else:
        b0 = finset_object([g.B0.carrier[i] for i in idx])
    keep = set(idx)
    arr = [k for k in range(g.B1.size)
           if g.d.map[k] in keep and g.c.map[k] in keep]
    if inst is FINAB:
        b1 = subgroup_object(g.B1, arr)
    elif inst is FINPTDSET:
        b1 = finptdset_object([g.B1.carrier[k] for k in arr],
                              arr.index(g.B1.basepoint))
    else:
        b1 = finset_object([g.B1.carrier[k] for k in arr])
    d = morphism_from_function(b1, b0, g.d)
    c = morphism_from_function(b1, b0, g.c)
    e = morphism_from_function(b0, b1, g.e)
    i = morphism_from_function(b1, b1, g.i)
    sub = make_groupoid(b0, b1, d, c, e, i, g.mul)
    incl = InternalFunctor(sub, g,
                           BaseMorphism(b0, g.B0, idx, _trusted=True),
                           BaseMorphism(b1, g.B1, arr, _trusted=True))
    return sub, incl


def zero_groupoid(instance) -> InternalGroupoid:
    return discrete_groupoid(zero_object(instance))


def zero_functor(a: InternalGroupoid, b: InternalGroupoid) -> InternalFunctor:
    return InternalFunctor(a, b, zero_morphism(a.B0, b.B0),
                           zero_morphism(a.B1, b.B1))


def discrete_embedding(b: InternalGroupoid) -> InternalFunctor:
    """The identity-on-objects functor from the discrete groupoid on B0."""
    disc = discrete_groupoid(b.B0)
    return InternalFunctor(disc, b, identity(b.B0), b.e)


# ---------------------------------------------------------------------------
# connected components and loops


def pi0(g: InternalGroupoid):
    """Connected components: quotient object and projection from B0."""
    proj = reflexive_coequalizer(g.d, g.c, g.e)
    return proj.cod, proj


def pi1(g: InternalGroupoid):
    """Loops at the zero object, with their inclusion into B1 (pointed)."""
    inst = g.instance
    if not inst.pointed:
        raise CapabilityError("pi1 needs a pointed instance")
    z = g.B0.basepoint if inst is FINPTDSET else g.B0.zero
    idx = [k for k in range(g.B1.size)
           if g.d.map[k] == z and g.c.map[k] == z]
    if inst is FINAB:
        obj = subgroup_object(g.B1, idx)
    else:
        obj = finptdset_object([g.B1.carrier[k] for k in idx],
                               idx.index(g.B1.basepoint))
    return obj, BaseMorphism(obj, g.B1, idx, _trusted=True)


def pi0_induced(fun: InternalFunctor) -> BaseMorphism:
    """The map of component objects induced by a functor."""
    _, qa = pi0(fun.dom)
    _, qb = pi0(fun.cod)
    return morphism_from_function(qa.cod, qb.cod, lambda r: qb(fun.F0(r)))


def pi1_induced(fun: InternalFunctor) -> BaseMorphism:
    """The restriction of F1 to loops at zero."""
    la, _ = pi1(fun.dom)
    lb, _ = pi1(fun.cod)
    return morphism_from_function(la, lb, lambda x: fun.F1(x))
