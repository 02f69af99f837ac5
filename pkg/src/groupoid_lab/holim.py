"""Homotopy limits of internal groupoids.

Four constructions, all computed as finite limits in the base instance:

* ``pullback_groupoid`` -- strict (level-wise) pullbacks, which are
  automatically strong: every compatible pair of 2-cells into the legs
  factors through the apex (``mediate_pullback_cell``).
* ``arrow_groupoid`` -- the groupoid of commutative squares of B, built as
  the pullback of the composition map against itself, with its two
  evaluation functors and the tautological 2-cell between them.
* ``strong_h_pullback`` -- the homotopy pullback of a cospan of functors,
  realized as a pair of five-node finite limits (one per level), together
  with both halves of its universal property (``mediate_h_pullback`` for
  1-cells, ``mediate_h_pullback_cell`` for 2-cells).
* ``strong_h_kernel`` -- the pointed specialization along the zero functor,
  plus the canonical comparisons: ``comparison_T`` out of the strict
  pullback along the object inclusion, and ``comparison_J`` out of the
  level-wise kernel.

Squares are encoded as pairs of composable pairs: a square with sides
``left: x -> y``, ``right: x' -> y'``, ``top: x -> x'``, ``bottom: y -> y'``
and ``left . bottom = top . right`` is stored as
``((left, bottom), (top, right))``.  As an arrow of the square groupoid it
points from ``left`` to ``right``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import (
    CompositionError,
    Diagram,
    DiagramError,
    LimitResult,
    NoMediatorError,
    classify_morphism,
    compose,
    finite_limit,
    identity,
    kernel,
    morphism_from_function,
    pullback,
    zero_morphism,
)
from .groupoid import (
    InternalFunctor,
    InternalGroupoid,
    NatTransformation,
    compose_functors,
    discrete_embedding,
    make_groupoid,
    validate_transformation,
    zero_functor,
    zero_groupoid,
)
from .base import CapabilityError


# ---------------------------------------------------------------------------
# strict pullbacks


@dataclass
class GroupoidPullback:
    """A level-wise pullback of groupoids with its projection functors.

    ``to_first`` lands in the domain of the first cospan leg, ``to_second``
    in the domain of the second; the limit results are kept so strict cones
    can be mediated later.
    """

    groupoid: InternalGroupoid
    to_first: InternalFunctor
    to_second: InternalFunctor
    first: InternalFunctor
    second: InternalFunctor
    object_limit: LimitResult
    arrow_limit: LimitResult


def pullback_groupoid(f: InternalFunctor, g: InternalFunctor) -> GroupoidPullback:
    """Strict pullback of a cospan of functors, computed level-wise.

    Carrier elements are pairs (x, y) with f(x) = g(y), at both levels;
    structure maps act componentwise.
    """
    if f.cod != g.cod:
        raise DiagramError("pullback needs a common codomain groupoid")
    a, c = f.dom, g.dom
    lim0 = pullback(f.F0, g.F0)
    lim1 = pullback(f.F1, g.F1)
    l1 = lim1.legs
    d = lim0.mediate({"p1": compose(l1["p1"], a.d), "p2": compose(l1["p2"], c.d)})
    cc = lim0.mediate({"p1": compose(l1["p1"], a.c), "p2": compose(l1["p2"], c.c)})
    e = lim1.mediate({"p1": compose(lim0.legs["p1"], a.e),
                      "p2": compose(lim0.legs["p2"], c.e)})
    i = lim1.mediate({"p1": compose(l1["p1"], a.i), "p2": compose(l1["p2"], c.i)})
    grp = make_groupoid(lim0.apex, lim1.apex, d, cc, e, i,
                        lambda x, y: (a.mul(x[0], y[0]), c.mul(x[1], y[1])))
    return GroupoidPullback(
        groupoid=grp,
        to_first=InternalFunctor(grp, a, lim0.legs["p1"], l1["p1"]),
        to_second=InternalFunctor(grp, c, lim0.legs["p2"], l1["p2"]),
        first=f, second=g, object_limit=lim0, arrow_limit=lim1)


def mediate_pullback(pb: GroupoidPullback, u: InternalFunctor,
                     v: InternalFunctor) -> InternalFunctor:
    """The unique functor into a strict pullback recovering both legs."""
    if u.dom != v.dom:
        raise CompositionError("cone legs have different source groupoids")
    t0 = pb.object_limit.mediate({"p1": u.F0, "p2": v.F0})
    t1 = pb.arrow_limit.mediate({"p1": u.F1, "p2": v.F1})
    return InternalFunctor(u.dom, pb.groupoid, t0, t1)


def mediate_pullback_cell(pb: GroupoidPullback, left: InternalFunctor,
                          right: InternalFunctor, alpha: NatTransformation,
                          beta: NatTransformation) -> NatTransformation:
    """The 2-dimensional half of strictness for level-wise pullbacks.

    Given L, M into the pullback and 2-cells alpha: L.to_first => M.to_first,
    beta: L.to_second => M.to_second whose whiskered composites into the
    cospan codomain agree, returns the unique 2-cell L => M projecting to
    both.  The component at x is just the pair (alpha_x, beta_x).
    """
    amap = pb.arrow_limit.mediate({"p1": alpha.alpha, "p2": beta.alpha})
    cell = NatTransformation(left, right, amap)
    bad = validate_transformation(cell)
    if bad:
        raise NoMediatorError(f"paired cell fails {bad}")
    return cell


# ---------------------------------------------------------------------------
# the groupoid of commutative squares


@dataclass
class ArrowGroupoid:
    """The groupoid of commutative squares of a base groupoid.

    Objects are the arrows of B; an arrow from ``left`` to ``right`` is a
    commutative square as described in the module docstring.  ``eval_dom``
    and ``eval_cod`` send a square to its top and bottom side (and an object
    arrow to its source and target object); ``cell`` is the tautological
    transformation eval_dom => eval_cod whose component at an arrow is that
    arrow itself.  ``pairs`` is the defining pullback of m against m.
    """

    groupoid: InternalGroupoid
    eval_dom: InternalFunctor
    eval_cod: InternalFunctor
    cell: NatTransformation
    pairs: LimitResult


def arrow_groupoid(b: InternalGroupoid) -> ArrowGroupoid:
    """Build the square groupoid of ``b`` with its evaluation structure."""
    sq = pullback(b.m, b.m)
    squares = sq.apex
    d = morphism_from_function(squares, b.B1, lambda s: s[0][0])
    c = morphism_from_function(squares, b.B1, lambda s: s[1][1])
    e = morphism_from_function(
        b.B1, squares,
        lambda x: ((x, b.unit(b.c(x))), (b.unit(b.d(x)), x)))
    i = morphism_from_function(
        squares, squares,
        lambda s: ((s[1][1], b.inv(s[0][1])), (b.inv(s[1][0]), s[0][0])))

    def paste(s, t):
        # glue along the shared vertical side, composing tops and bottoms
        return ((s[0][0], b.mul(s[0][1], t[0][1])),
                (b.mul(s[1][0], t[1][0]), t[1][1]))

    grp = make_groupoid(b.B1, squares, d, c, e, i, paste)
    eval_dom = InternalFunctor(
        grp, b, b.d, morphism_from_function(squares, b.B1, lambda s: s[1][0]))
    eval_cod = InternalFunctor(
        grp, b, b.c, morphism_from_function(squares, b.B1, lambda s: s[0][1]))
    cell = NatTransformation(eval_dom, eval_cod, identity(b.B1))
    return ArrowGroupoid(grp, eval_dom, eval_cod, cell, sq)


def mediate_squares(data: ArrowGroupoid, mu: NatTransformation) -> InternalFunctor:
    """The functor into the square groupoid classifying a 2-cell.

    A transformation mu: K => H between functors X -> B corresponds to the
    functor sending an object x to the component mu_x and an arrow to the
    naturality square over it.  Composing the result with eval_dom gives
    back K, with eval_cod gives H, and whiskering the tautological cell
    recovers mu.
    """
    k, h = mu.source, mu.target
    if k.cod != data.eval_dom.cod:
        raise CompositionError("cell does not land in the square base")
    x = k.dom

    def build(arrow):
        return ((mu.alpha(x.d(arrow)), h.F1(arrow)),
                (k.F1(arrow), mu.alpha(x.c(arrow))))

    f1 = morphism_from_function(x.B1, data.groupoid.B1, build)
    return InternalFunctor(x, data.groupoid, mu.alpha, f1)


def twist_iso(b: InternalGroupoid, data: ArrowGroupoid | None = None) -> InternalFunctor:
    """The transposition isomorphism onto the square groupoid.

    Its domain is the transposed structure on the same carrier of squares
    (source = top side, target = bottom side); the functor is the identity
    on objects and swaps the two composable-pair halves of each square.
    It is an involution up to the transposition of structure.
    """
    if data is None:
        data = arrow_groupoid(b)
    squares = data.groupoid.B1
    d = morphism_from_function(squares, b.B1, lambda s: s[1][0])
    c = morphism_from_function(squares, b.B1, lambda s: s[0][1])
    e = morphism_from_function(
        b.B1, squares,
        lambda x: ((b.unit(b.d(x)), x), (x, b.unit(b.c(x)))))
    i = morphism_from_function(
        squares, squares,
        lambda s: ((b.inv(s[0][0]), s[1][0]), (s[0][1], b.inv(s[1][1]))))

    def paste(s, t):
        # stack vertically, composing lefts and rights
        return ((b.mul(s[0][0], t[0][0]), t[0][1]),
                (s[1][0], b.mul(s[1][1], t[1][1])))

    transposed = make_groupoid(b.B1, squares, d, c, e, i, paste)
    swap = morphism_from_function(squares, squares, lambda s: (s[1], s[0]))
    return InternalFunctor(transposed, data.groupoid, identity(b.B1), swap)


# ---------------------------------------------------------------------------
# strong h-pullbacks

# Node names of the two five-node limit diagrams; cone dictionaries passed
# to the mediators are keyed by these.
_OBJ_NODES = ("g_obj", "arrows", "f_obj", "base_d", "base_c")
_ARR_NODES = ("g_arr", "squares", "f_arr", "arr_d", "arr_c")


@dataclass
class HPullback:
    """A strong homotopy pullback of f against g.

    ``to_f_dom`` and ``to_g_dom`` are the projection functors to the two
    leg domains, and ``cell`` is the structural 2-cell
    to_g_dom . g => to_f_dom . f whose component at an apex object is its
    middle (arrow) coordinate.  Both finite-limit results and the square
    groupoid of the codomain are kept for the mediators.
    """

    groupoid: InternalGroupoid
    to_f_dom: InternalFunctor
    to_g_dom: InternalFunctor
    cell: NatTransformation
    f: InternalFunctor
    g: InternalFunctor
    object_limit: LimitResult
    arrow_limit: LimitResult
    squares: ArrowGroupoid


def strong_h_pullback(f: InternalFunctor, g: InternalFunctor) -> HPullback:
    """Homotopy pullback of a cospan, as two five-node finite limits.

    Level 0 consists of tuples (object of g.dom, arrow of the codomain,
    object of f.dom) where the middle arrow runs from the g-image to the
    f-image; level 1 is the analogous limit one dimension up, with the
    square groupoid in the middle slot.  Structure maps act componentwise.
    """
    if f.cod != g.cod:
        raise DiagramError("strong h-pullback needs a common codomain")
    b = f.cod
    a, c = f.dom, g.dom
    sq = arrow_groupoid(b)
    sqg = sq.groupoid

    lim0 = finite_limit(Diagram(
        nodes={"g_obj": c.B0, "arrows": b.B1, "f_obj": a.B0,
               "base_d": b.B0, "base_c": b.B0},
        edges=[("g_obj", "base_d", g.F0), ("arrows", "base_d", b.d),
               ("arrows", "base_c", b.c), ("f_obj", "base_c", f.F0)]))
    lim1 = finite_limit(Diagram(
        nodes={"g_arr": c.B1, "squares": sqg.B1, "f_arr": a.B1,
               "arr_d": b.B1, "arr_c": b.B1},
        edges=[("g_arr", "arr_d", g.F1),
               ("squares", "arr_d", sq.eval_dom.F1),
               ("squares", "arr_c", sq.eval_cod.F1),
               ("f_arr", "arr_c", f.F1)]))

    l0, l1 = lim0.legs, lim1.legs
    d = lim0.mediate({"g_obj": compose(l1["g_arr"], c.d),
                      "arrows": compose(l1["squares"], sqg.d),
                      "f_obj": compose(l1["f_arr"], a.d)})
    cc = lim0.mediate({"g_obj": compose(l1["g_arr"], c.c),
                       "arrows": compose(l1["squares"], sqg.c),
                       "f_obj": compose(l1["f_arr"], a.c)})
    e = lim1.mediate({"g_arr": compose(l0["g_obj"], c.e),
                      "squares": compose(l0["arrows"], sqg.e),
                      "f_arr": compose(l0["f_obj"], a.e)})
    i = lim1.mediate({"g_arr": compose(l1["g_arr"], c.i),
                      "squares": compose(l1["squares"], sqg.i),
                      "f_arr": compose(l1["f_arr"], a.i)})

    def paste(t, u):
        return (c.mul(t[0], u[0]), sqg.mul(t[1], u[1]), a.mul(t[2], u[2]),
                b.mul(t[3], u[3]), b.mul(t[4], u[4]))

    grp = make_groupoid(lim0.apex, lim1.apex, d, cc, e, i, paste)
    to_f = InternalFunctor(grp, a, l0["f_obj"], l1["f_arr"])
    to_g = InternalFunctor(grp, c, l0["g_obj"], l1["g_arr"])
    cell = NatTransformation(compose_functors(to_g, g),
                             compose_functors(to_f, f), l0["arrows"])
    return HPullback(groupoid=grp, to_f_dom=to_f, to_g_dom=to_g, cell=cell,
                     f=f, g=g, object_limit=lim0, arrow_limit=lim1,
                     squares=sq)


def mediate_h_pullback(hp: HPullback, to_f: InternalFunctor,
                       to_g: InternalFunctor,
                       cell: NatTransformation) -> InternalFunctor:
    """The unique functor into a strong h-pullback induced by a cone.

    The cone consists of functors to_f: X -> f.dom, to_g: X -> g.dom and a
    2-cell to_g . g => to_f . f.  The result T satisfies
    T . hp.to_f_dom = to_f, T . hp.to_g_dom = to_g, and recovers the cone
    cell when composed with the structural one.
    """
    f, g = hp.f, hp.g
    if to_f.cod != f.dom or to_g.cod != g.dom:
        raise CompositionError("cone legs do not match the cospan domains")
    if to_f.dom != to_g.dom:
        raise CompositionError("cone legs have different source groupoids")
    if (cell.source != compose_functors(to_g, g)
            or cell.target != compose_functors(to_f, f)):
        raise NoMediatorError("cone cell is mistyped for the cospan")
    x = to_f.dom
    mu0 = cell.alpha
    t0 = hp.object_limit.mediate({"g_obj": to_g.F0, "arrows": mu0,
                                  "f_obj": to_f.F0})

    def build(arrow):
        # naturality square of the cone cell over this arrow
        return ((mu0(x.d(arrow)), f.F1(to_f.F1(arrow))),
                (g.F1(to_g.F1(arrow)), mu0(x.c(arrow))))

    try:
        smap = morphism_from_function(x.B1, hp.squares.groupoid.B1, build)
    except DiagramError as exc:
        raise NoMediatorError("cone cell is not natural over the cospan") from exc
    t1 = hp.arrow_limit.mediate({"g_arr": to_g.F1, "squares": smap,
                                 "f_arr": to_f.F1})
    return InternalFunctor(x, hp.groupoid, t0, t1)


def mediate_h_pullback_cell(hp: HPullback, left: InternalFunctor,
                            right: InternalFunctor, g_cell: NatTransformation,
                            f_cell: NatTransformation) -> NatTransformation:
    """The 2-dimensional universal property of a strong h-pullback.

    Given functors L, M: X -> apex and transformations
    g_cell: L . to_g_dom => M . to_g_dom, f_cell: L . to_f_dom => M . to_f_dom
    that paste compatibly with the structural cell, returns the unique
    mu: L => M whiskering to both.  The component at x is the apex arrow
    assembled from the two given components and the pasting square.
    """
    f, g = hp.f, hp.g
    phi0 = hp.cell.alpha
    x = left.dom

    def build(obj):
        ax = g_cell.alpha(obj)
        bx = f_cell.alpha(obj)
        square = ((phi0(left.F0(obj)), f.F1(bx)),
                  (g.F1(ax), phi0(right.F0(obj))))
        return (ax, square, bx, g.F1(ax), f.F1(bx))

    try:
        amap = morphism_from_function(x.B0, hp.groupoid.B1, build)
    except DiagramError as exc:
        raise NoMediatorError("cells do not paste with the structural cell") from exc
    cell = NatTransformation(left, right, amap)
    bad = validate_transformation(cell)
    if bad:
        raise NoMediatorError(f"assembled cell fails {bad}")
    return cell


# ---------------------------------------------------------------------------
# kernels and strong h-kernels


def kernel_groupoid(fun: InternalFunctor):
    """Level-wise kernel of a functor, with its inclusion.

    Returns (kernel groupoid, inclusion functor).  Requires a pointed
    instance.
    """
    a = fun.dom
    if not a.instance.pointed:
        raise CapabilityError("kernels need a pointed instance")
    lim0 = kernel(fun.F0)
    lim1 = kernel(fun.F1)
    k0, k1 = lim0.legs["ker"], lim1.legs["ker"]
    d = lim0.mediate({"ker": compose(k1, a.d)})
    c = lim0.mediate({"ker": compose(k1, a.c)})
    e = lim1.mediate({"ker": compose(k0, a.e)})
    i = lim1.mediate({"ker": compose(k1, a.i)})
    grp = make_groupoid(lim0.apex, lim1.apex, d, c, e, i,
                        lambda p, q: a.mul(p, q))
    return grp, InternalFunctor(grp, a, k0, k1)


@dataclass
class HKernel:
    """A strong h-kernel: the h-pullback of a functor along zero.

    ``projection`` is the functor back to the domain groupoid and ``cell``
    the null-homotopy zero => projection . f; ``data`` keeps the full
    h-pullback bundle for mediation.
    """

    groupoid: InternalGroupoid
    projection: InternalFunctor
    cell: NatTransformation
    data: HPullback


def strong_h_kernel(fun: InternalFunctor) -> HKernel:
    """Strong h-kernel of a functor over a pointed instance.

    The level-0 carrier is, up to the redundant coordinates of the limit
    tuples, the set of pairs (object a0, arrow from zero to its image).
    """
    inst = fun.dom.instance
    if not inst.pointed:
        raise CapabilityError("strong h-kernels need a pointed instance")
    hp = strong_h_pullback(fun, zero_functor(zero_groupoid(inst), fun.cod))
    return HKernel(groupoid=hp.groupoid, projection=hp.to_f_dom,
                   cell=hp.cell, data=hp)


def h_kernel_into_pullback(hp: HPullback):
    """The mediator of the h-kernel cone into any strong h-pullback of f.

    Returns (h-kernel bundle of hp.f, mediating functor).  The mediator
    composes to zero on the g side, to the h-kernel projection on the f
    side, and its image is a kernel of the g-side projection (the check
    lives in the harness).
    """
    f, g = hp.f, hp.g
    hk = strong_h_kernel(f)
    kf = hk.groupoid
    to_g = zero_functor(kf, g.dom)
    cell = NatTransformation(compose_functors(to_g, g),
                             compose_functors(hk.projection, f),
                             hk.cell.alpha)
    ell = mediate_h_pullback(hp, hk.projection, to_g, cell)
    return hk, ell


# ---------------------------------------------------------------------------
# comparison functors


@dataclass
class TComparison:
    """The comparison from the strict pullback along the object inclusion.

    ``strict`` is the level-wise pullback of the object inclusion against
    f, ``relaxed`` the strong h-pullback of f along the same inclusion, and
    ``functor`` the mediating comparison between them.
    """

    strict: GroupoidPullback
    relaxed: HPullback
    functor: InternalFunctor


def comparison_T_data(fun: InternalFunctor) -> TComparison:
    b = fun.cod
    n = discrete_embedding(b)
    strict = pullback_groupoid(n, fun)
    relaxed = strong_h_pullback(fun, n)
    to_g = strict.to_first
    to_f = strict.to_second
    alpha = compose(strict.object_limit.legs["p1"], b.e)
    cell = NatTransformation(compose_functors(to_g, n),
                             compose_functors(to_f, fun), alpha)
    t = mediate_h_pullback(relaxed, to_f, to_g, cell)
    return TComparison(strict=strict, relaxed=relaxed, functor=t)


def comparison_T(fun: InternalFunctor) -> InternalFunctor:
    """Canonical comparison from the strict to the homotopy pullback.

    Its full faithfulness witnesses that level-wise pullbacks are strong;
    it is a weak equivalence exactly when the functor is a fibration.
    """
    return comparison_T_data(fun).functor


@dataclass
class JComparison:
    """The comparison from the level-wise kernel to the strong h-kernel."""

    kernel: InternalGroupoid
    inclusion: InternalFunctor
    h_kernel: HKernel
    functor: InternalFunctor


def comparison_J_data(fun: InternalFunctor) -> JComparison:
    hk = strong_h_kernel(fun)
    kg, incl = kernel_groupoid(fun)
    to_g = zero_functor(kg, hk.data.g.dom)
    alpha = zero_morphism(kg.B0, fun.cod.B1)
    cell = NatTransformation(compose_functors(to_g, hk.data.g),
                             compose_functors(incl, fun), alpha)
    j = mediate_h_pullback(hk.data, incl, to_g, cell)
    return JComparison(kernel=kg, inclusion=incl, h_kernel=hk, functor=j)


def comparison_J(fun: InternalFunctor) -> InternalFunctor:
    """Canonical comparison from the kernel to the strong h-kernel.

    Always fully faithful; a weak equivalence exactly when the functor is
    a star-fibration.
    """
    return comparison_J_data(fun).functor


# ---------------------------------------------------------------------------
# square checks


def is_levelwise_pullback_square(u: InternalFunctor, v: InternalFunctor,
                                 f: InternalFunctor,
                                 g: InternalFunctor) -> bool:
    """Whether a commutative square of functors is a level-wise pullback.

    The square reads u . f = v . g with u, v out of the candidate apex.
    Both levels are checked by classifying the induced base mediator.
    """
    if compose_functors(u, f) != compose_functors(v, g):
        return False
    for uu, vv, ff, gg in ((u.F0, v.F0, f.F0, g.F0),
                           (u.F1, v.F1, f.F1, g.F1)):
        lim = pullback(ff, gg)
        try:
            med = lim.mediate({"p1": uu, "p2": vv})
        except NoMediatorError:
            return False
        if not classify_morphism(med).iso:
            return False
    return True
