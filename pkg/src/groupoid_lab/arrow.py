"""The arrow category with null-homotopies, and the normalization functor.

An object is a single base morphism a: A -> A0, a morphism is a commutative
square (f, f0), and a null-homotopy of a square is a diagonal filler.  The
category carries kernels (levelwise) and strong h-kernels (built from one
pullback), giving classification notions that mirror the internal-functor
ones: the endpoint-image factorization of a square decides faithful / full /
fully faithful, joint surjectivity onto the base decides essential
surjectivity, and the top component decides fibrations.

``normalize`` translates internal groupoids and functors into this category
by restricting to kernel arrows of d; the comparison helpers at the bottom
exhibit the canonical isos showing the translation preserves kernels and
strong h-kernels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import (
    BaseMorphism,
    CapabilityError,
    DiagramError,
    LimitResult,
    NoMediatorError,
    classify_morphism,
    compose,
    identity,
    jointly_strongly_epi,
    kernel,
    morphism_from_function,
    pullback,
    zero_morphism,
)
from .groupoid import (
    InternalFunctor,
    InternalGroupoid,
    NatTransformation,
    zero_functor,
)


@dataclass
class ArrowObject:
    """A single base morphism, seen as an object of the arrow category."""

    a: BaseMorphism

    @property
    def top(self):
        return self.a.dom

    @property
    def bottom(self):
        return self.a.cod


@dataclass
class ArrowMorphism:
    """A commutative square between two arrow objects."""

    dom: ArrowObject
    cod: ArrowObject
    f: BaseMorphism
    f0: BaseMorphism

    def __post_init__(self):
        if self.f.dom != self.dom.top or self.f.cod != self.cod.top:
            raise DiagramError("top component is mistyped")
        if self.f0.dom != self.dom.bottom or self.f0.cod != self.cod.bottom:
            raise DiagramError("bottom component is mistyped")
        if compose(self.dom.a, self.f0) != compose(self.f, self.cod.a):
            raise DiagramError("square does not commute")


@dataclass
class Diagonal:
    """A null-homotopy: a diagonal filler of a commutative square."""

    morphism: ArrowMorphism
    d: BaseMorphism

    def __post_init__(self):
        m = self.morphism
        if self.d.dom != m.dom.bottom or self.d.cod != m.cod.top:
            raise DiagramError("diagonal is mistyped")
        if compose(m.dom.a, self.d) != m.f:
            raise DiagramError("diagonal misses the top triangle")
        if compose(self.d, m.cod.a) != m.f0:
            raise DiagramError("diagonal misses the bottom triangle")


def arrow_object(a: BaseMorphism) -> ArrowObject:
    return ArrowObject(a)


def identity_arr(obj: ArrowObject) -> ArrowMorphism:
    return ArrowMorphism(obj, obj, identity(obj.top), identity(obj.bottom))


def zero_arr(dom: ArrowObject, cod: ArrowObject) -> ArrowMorphism:
    return ArrowMorphism(dom, cod, zero_morphism(dom.top, cod.top),
                         zero_morphism(dom.bottom, cod.bottom))


def compose_arr(first: ArrowMorphism, second: ArrowMorphism) -> ArrowMorphism:
    if first.cod != second.dom:
        raise DiagramError("squares are not composable")
    return ArrowMorphism(first.dom, second.cod,
                         compose(first.f, second.f),
                         compose(first.f0, second.f0))


def act_on_diagonal(pre: ArrowMorphism, mu: Diagonal,
                    post: ArrowMorphism) -> Diagonal:
    """Paste a diagonal between squares composed on either side.

    The result fills pre . mu.morphism . post, running through the bottom
    of pre, the diagonal itself, then the top of post.
    """
    whole = compose_arr(compose_arr(pre, mu.morphism), post)
    return Diagonal(whole, compose(pre.f0, mu.d, post.f))


# ---------------------------------------------------------------------------
# kernels and strong h-kernels


@dataclass
class ArrowKernel:
    object: ArrowObject
    inclusion: ArrowMorphism


def kernel_arr(m: ArrowMorphism) -> ArrowKernel:
    """Levelwise kernel of a square, with the restricted vertical arrow."""
    top = kernel(m.f)
    bottom = kernel(m.f0)
    restricted = bottom.mediate(
        {"ker": compose(top.legs["ker"], m.dom.a)})
    obj = ArrowObject(restricted)
    incl = ArrowMorphism(obj, m.dom, top.legs["ker"], bottom.legs["ker"])
    return ArrowKernel(object=obj, inclusion=incl)


@dataclass
class ArrowHKernel:
    """Strong h-kernel triple, with the pullback kept for mediation."""

    of: ArrowMorphism
    object: ArrowObject
    inclusion: ArrowMorphism
    diagonal: Diagonal
    limit: LimitResult


def partial_zero_arr(m: ArrowMorphism) -> BaseMorphism:
    """The endpoint-image factorization of a square through one pullback."""
    lim = pullback(m.f0, m.cod.a)
    return lim.mediate({"p1": m.dom.a, "p2": m.f})


def strong_h_kernel_arr(m: ArrowMorphism) -> ArrowHKernel:
    if not m.dom.top.instance.pointed:
        raise CapabilityError("strong h-kernels need a pointed instance")
    lim = pullback(m.f0, m.cod.a)
    obj = ArrowObject(lim.mediate({"p1": m.dom.a, "p2": m.f}))
    incl = ArrowMorphism(obj, m.dom, identity(m.dom.top), lim.legs["p1"])
    diag = Diagonal(compose_arr(incl, m), lim.legs["p2"])
    return ArrowHKernel(of=m, object=obj, inclusion=incl, diagonal=diag,
                        limit=lim)


def h_kernel_factorization(hk: ArrowHKernel, g: ArrowMorphism,
                           mu: Diagonal) -> ArrowMorphism:
    """The unique square through the h-kernel inducing (g, mu).

    mu must fill the composite of g with the measured square; the result
    keeps the top of g and pairs its bottom with the diagonal.
    """
    if g.cod != hk.of.dom or mu.morphism != compose_arr(g, hk.of):
        raise NoMediatorError("triple is mistyped for the h-kernel")
    paired = hk.limit.mediate({"p1": g.f0, "p2": mu.d})
    factor = ArrowMorphism(g.dom, hk.object, g.f, paired)
    if compose_arr(factor, hk.inclusion) != g:
        raise NoMediatorError("factorization fails the projection law")
    recovered = act_on_diagonal(factor, hk.diagonal, identity_arr(hk.of.cod))
    if recovered.d != mu.d:
        raise NoMediatorError("factorization fails the homotopy law")
    return factor


def strong_lift(hk: ArrowHKernel, h: ArrowMorphism, mu: Diagonal) -> Diagonal:
    """The unique diagonal of h hiding behind a diagonal of h . inclusion.

    Requires the compatibility equation between mu pasted with the measured
    square and h pasted with the h-kernel's own diagonal; under it, the
    underlying map of mu already fills h itself.
    """
    if h.cod != hk.object or mu.morphism != compose_arr(h, hk.inclusion):
        raise NoMediatorError("triple is mistyped for the strong lift")
    via_square = act_on_diagonal(identity_arr(h.dom), mu, hk.of)
    via_kernel = act_on_diagonal(h, hk.diagonal, identity_arr(hk.of.cod))
    if via_square.d != via_kernel.d:
        raise NoMediatorError("lift condition fails")
    lifted = Diagonal(h, mu.d)
    assert act_on_diagonal(identity_arr(h.dom), lifted,
                           hk.inclusion).d == mu.d
    return lifted


def comparison_J_arr(m: ArrowMorphism) -> ArrowMorphism:
    """Canonical comparison from the kernel into the strong h-kernel."""
    ker = kernel_arr(m)
    hk = strong_h_kernel_arr(m)
    bottom = hk.limit.mediate(
        {"p1": kernel(m.f0).legs["ker"],
         "p2": zero_morphism(ker.object.bottom, m.cod.top)})
    return ArrowMorphism(ker.object, hk.object, ker.inclusion.f, bottom)


# ---------------------------------------------------------------------------
# classification


def is_essentially_surjective_arr(m: ArrowMorphism) -> bool:
    return jointly_strongly_epi([m.f0, m.cod.a])


def classify_arrow_morphism(m: ArrowMorphism) -> dict:
    """All square-level classification flags, decided by one factorization.

    Pointed instances only: the star flag needs the kernel comparison.
    """
    if not m.dom.top.instance.pointed:
        raise CapabilityError("square classification needs a pointed instance")
    flags = classify_morphism(partial_zero_arr(m))
    ff = flags.iso
    ess = is_essentially_surjective_arr(m)
    return {
        "faithful": flags.mono,
        "full": flags.regular_epi,
        "fully_faithful": ff,
        "essentially_surjective": ess,
        "weak_equivalence": ff and ess,
        "fibration": classify_morphism(m.f).regular_epi,
        "star_fibration": is_essentially_surjective_arr(comparison_J_arr(m)),
    }


# ---------------------------------------------------------------------------
# normalization


def normalize_obj(grp: InternalGroupoid) -> ArrowObject:
    """Restrict a groupoid to its arrows out of zero, as a single map.

    The object is the endpoint map: kernel arrows of d, sent to their
    codomain object.
    """
    lim = kernel(grp.d)
    return ArrowObject(compose(lim.legs["ker"], grp.c))


def normalize(fun: InternalFunctor) -> ArrowMorphism:
    """The square a functor induces between the normalized endpoint maps."""
    down = kernel(fun.dom.d)
    up = kernel(fun.cod.d)
    restricted = up.mediate({"ker": compose(down.legs["ker"], fun.F1)})
    return ArrowMorphism(normalize_obj(fun.dom), normalize_obj(fun.cod),
                         restricted, fun.F0)


def normalize_homotopy(cell: NatTransformation) -> Diagonal:
    """Translate a null-homotopy (a 2-cell out of zero) into a diagonal.

    The source must be the zero functor and the component map must land on
    kernel arrows of d; any other 2-cell is rejected.
    """
    fun = cell.target
    if cell.source != zero_functor(fun.dom, fun.cod):
        raise NoMediatorError("2-cell source is not the zero functor")
    lift = kernel(fun.cod.d).mediate({"ker": cell.alpha})
    return Diagonal(normalize(fun), lift)


def graph_comparison(delta: BaseMorphism) -> ArrowMorphism:
    """Canonical iso from the normalization of a graph groupoid back to it.

    Kernel arrows of the graph groupoid on delta are the pairs (0, n); the
    correspondence (0, n) -> n identifies the normalized object with delta
    itself.
    """
    from .groupoid import groupoid_from_arrow
    obj = normalize_obj(groupoid_from_arrow(delta))
    top = morphism_from_function(obj.top, delta.dom, lambda t: t[1])
    return ArrowMorphism(obj, ArrowObject(delta), top, identity(delta.cod))


def kernel_preservation_comparison(fun: InternalFunctor) -> ArrowMorphism:
    """Canonical iso: normalize the kernel, or take the square's kernel.

    Both sides carve the same arrows out of the domain (those killed by d
    and by the functor); the comparison re-indexes one carrier into the
    other and must be a levelwise iso.
    """
    from .holim import kernel_groupoid
    kg, incl = kernel_groupoid(fun)
    square = normalize(fun)
    karr = kernel_arr(square)
    inner = kernel(fun.dom.d).mediate(
        {"ker": compose(kernel(kg.d).legs["ker"], incl.F1)})
    top = kernel(square.f).mediate({"ker": inner})
    bottom = kernel(fun.F0).mediate({"ker": incl.F0})
    return ArrowMorphism(normalize_obj(kg), karr.object, top, bottom)


def h_kernel_preservation_comparison(fun: InternalFunctor) -> ArrowMorphism:
    """Canonical iso between the two strong h-kernels of a functor.

    Normalizing the groupoid-level strong h-kernel, or taking the square-
    level strong h-kernel of the normalization, gives the same object up to
    the comparison built here: the top re-indexes kernel arrows through the
    projection, the bottom pairs the projected object with the universal
    2-cell's component.
    """
    from .holim import strong_h_kernel
    hk = strong_h_kernel(fun)
    proj = hk.projection
    arr = strong_h_kernel_arr(normalize(fun))
    top = kernel(fun.dom.d).mediate(
        {"ker": compose(kernel(hk.groupoid.d).legs["ker"], proj.F1)})
    beta = kernel(fun.cod.d).mediate({"ker": hk.cell.alpha})
    bottom = arr.limit.mediate({"p1": proj.F0, "p2": beta})
    return ArrowMorphism(normalize_obj(hk.groupoid), arr.object, top, bottom)
