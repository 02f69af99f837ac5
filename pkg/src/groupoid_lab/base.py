"""Finite base categories: objects, morphisms, limits, and morphism classes.

Three concrete instances are supported, each regular and with all finite
limits computed by enumeration:

* ``FINSET`` -- finite sets.
* ``FINPTDSET`` -- finite pointed sets (zero object: the one-point set).
* ``FINAB`` -- finite abelian groups stored as explicit addition tables
  (zero object: the trivial group).  FINAB is the protomodular instance.

Everything is index-level: a carrier is an ordered tuple of hashable
elements, and a morphism stores, for each domain index, the codomain index
of its image.  All limit carriers are canonically ordered (lexicographically
by constituent indices), so "the same object built two ways" can be compared
by relabelling followed by equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GroupoidLabError(Exception):
    """Base class for all structured errors raised by this package."""


class CompositionError(GroupoidLabError):
    """Domain/codomain mismatch in a composite or a cone."""


class CapabilityError(GroupoidLabError):
    """Operation needs a capability (e.g. a zero object) the instance lacks."""


class NoMediatorError(GroupoidLabError):
    """A cone does not factor through the limit it was aimed at."""


class DiagramError(GroupoidLabError):
    """A diagram, object, or morphism is structurally ill-formed."""


@dataclass(frozen=True)
class BaseInstance:
    """One of the finite base categories, with its declared capabilities."""

    name: str
    pointed: bool
    regular: bool
    protomodular: bool
    has_reflexive_coequalizers: bool

    def __repr__(self) -> str:
        return self.name


FINSET = BaseInstance("finset", False, True, False, True)
FINPTDSET = BaseInstance("finptdset", True, True, False, True)
FINAB = BaseInstance("finab", True, True, True, True)

_INSTANCES = {i.name: i for i in (FINSET, FINPTDSET, FINAB)}


def parse_instance(name: str) -> BaseInstance:
    try:
        return _INSTANCES[name.lower()]
    except KeyError:
        raise DiagramError(f"unknown base instance {name!r}") from None


# Associativity of an addition table is checked exhaustively up to this
# carrier size; above it a deterministic strided sample of triples is used.
# Derived objects that exceed the cutoff (large limit apexes) are valid by
# construction, so the sample is a guard against table corruption only.
_ASSOC_EXHAUSTIVE_CUTOFF = 48

# Above this size, limit apexes get a lazy addition table; a dense table
# holds size^2 entries and dominates the memory of every holim pipeline.
_DENSE_ADD_CUTOFF = 512


class BaseObject:
    """A finite carrier with instance-specific structure.

    ``carrier`` is an ordered tuple of hashable elements; the order is the
    object's identity as much as the elements are.  FINPTDSET objects carry a
    ``basepoint`` index, FINAB objects carry ``add``/``neg`` tables and a
    ``zero`` index (validated abelian-group axioms).

    >>> X = finset_object(["a", "b"])
    >>> X.size
    2
    >>> Z4 = zmod(4)
    >>> Z4.add[1][3]
    0
    """

    __slots__ = ("instance", "carrier", "basepoint", "add", "neg", "zero",
                 "_index", "_gens")

    def __init__(self, instance, carrier, basepoint=None, add=None, neg=None,
                 zero=None, _trusted=False):
        self.instance = instance
        self.carrier = tuple(carrier)
        self.basepoint = basepoint
        self.add = add
        self.neg = neg
        self.zero = zero
        self._index = None
        self._gens = None
        if not _trusted:
            self._validate()

    # -- construction-time validation ------------------------------------

    def _validate(self) -> None:
        seen = set()
        for x in self.carrier:
            if x in seen:
                raise DiagramError("carrier has duplicate elements")
            seen.add(x)
        n = len(self.carrier)
        if self.instance is FINSET:
            if (self.basepoint, self.add) != (None, None):
                raise DiagramError("finset objects carry no extra structure")
        elif self.instance is FINPTDSET:
            if not (isinstance(self.basepoint, int) and 0 <= self.basepoint < n):
                raise DiagramError("finptdset object needs a basepoint index")
        elif self.instance is FINAB:
            self._validate_group()
        else:
            raise DiagramError(f"unknown instance {self.instance!r}")

    def _validate_group(self) -> None:
        n = len(self.carrier)
        if n == 0:
            raise DiagramError("a group carrier cannot be empty")
        add, neg, zero = self.add, self.neg, self.zero
        if add is None or neg is None or zero is None:
            raise DiagramError("finab object needs add/neg tables and zero")
        if len(add) != n or any(len(r) != n for r in add) or len(neg) != n:
            raise DiagramError("group table shape mismatch")
        rng = range(n)
        ok = all(0 <= add[i][j] < n for i in rng for j in rng)
        if not (ok and all(0 <= neg[i] < n for i in rng) and 0 <= zero < n):
            raise DiagramError("group table entry out of range")
        for i in rng:
            if add[i][zero] != i or add[zero][i] != i:
                raise DiagramError("zero is not a unit for the table")
            if add[i][neg[i]] != zero:
                raise DiagramError("neg table is not an inverse")
            for j in rng:
                if add[i][j] != add[j][i]:
                    raise DiagramError("addition table is not commutative")
        if n <= _ASSOC_EXHAUSTIVE_CUTOFF:
            triples = itertools.product(rng, rng, rng)
        else:
            total = n * n * n
            step = max(1, total // 2000)
            triples = ((t % n, (t // n) % n, (t // (n * n)) % n)
                       for t in range(0, total, step))
        for i, j, k in triples:
            if add[add[i][j]][k] != add[i][add[j][k]]:
                raise DiagramError("addition table is not associative")

    # -- basics -----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.carrier)

    def index_of(self, element) -> int:
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self.carrier)}
        try:
            return self._index[element]
        except KeyError:
            raise DiagramError(f"element {element!r} is not in the carrier") from None

    def __contains__(self, element) -> bool:
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self.carrier)}
        return element in self._index

    def __eq__(self, other) -> bool:
        return (isinstance(other, BaseObject)
                and self.instance is other.instance
                and self.carrier == other.carrier
                and self.basepoint == other.basepoint
                and self.add == other.add
                and self.neg == other.neg
                and self.zero == other.zero)

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return hash((self.instance.name, self.carrier))

    def __repr__(self) -> str:
        return f"<{self.instance.name}[{self.size}]>"

    # -- group helpers (FINAB) ---------------------------------------------

    def add_elements(self, x, y):
        return self.carrier[self.add[self.index_of(x)][self.index_of(y)]]

    def neg_element(self, x):
        return self.carrier[self.neg[self.index_of(x)]]

    def zero_element(self):
        if self.instance is FINAB:
            return self.carrier[self.zero]
        if self.instance is FINPTDSET:
            return self.carrier[self.basepoint]
        raise CapabilityError("finset objects have no distinguished point")

    def generating_sequence(self) -> list[int]:
        """Greedy generating sequence of indices (FINAB).

        Short (length <= log2 n), used for additivity checks and hom
        enumeration without any normal-form machinery.
        """
        if self._gens is not None:
            return self._gens
        if self.instance is not FINAB:
            raise CapabilityError("generating sequences exist only in finab")
        span = {self.zero}
        gens: list[int] = []
        for i in range(self.size):
            if i in span:
                continue
            gens.append(i)
            # adjoin <i>: walk the cosets span, span+i, span+2i, ... until
            # one lands back inside; the union is the enlarged subgroup
            layer = list(span)
            while True:
                layer = [self.add[x][i] for x in layer]
                fresh = [x for x in layer if x not in span]
                if not fresh:
                    break
                span.update(fresh)
        self._gens = gens
        return gens


class BaseMorphism:
    """A structure-preserving map, stored as a tuple of codomain indices.

    Composition is written in diagram order throughout the package:
    ``compose(f, g)`` is "f then g".

    >>> X = finset_object([0, 1]); Y = finset_object(["p"])
    >>> f = morphism_from_function(X, Y, lambda x: "p")
    >>> f(1)
    'p'
    """

    __slots__ = ("dom", "cod", "map", "_preimages")

    def __init__(self, dom: BaseObject, cod: BaseObject, map,
                 _trusted=False):
        self.dom = dom
        self.cod = cod
        self.map = tuple(map)
        self._preimages = None
        if not _trusted:
            self._validate()

    def _validate(self) -> None:
        if self.dom.instance is not self.cod.instance:
            raise DiagramError("morphism crosses base instances")
        if len(self.map) != self.dom.size:
            raise DiagramError("morphism table length mismatch")
        n = self.cod.size
        if any(not (0 <= j < n) for j in self.map):
            raise DiagramError("morphism image index out of range")
        inst = self.dom.instance
        if inst is FINPTDSET:
            if self.map[self.dom.basepoint] != self.cod.basepoint:
                raise DiagramError("map does not preserve the basepoint")
        elif inst is FINAB:
            dom, cod, f = self.dom, self.cod, self.map
            if f[dom.zero] != cod.zero:
                raise DiagramError("map does not preserve zero")
            # Additivity on (everything) x (generators) implies additivity.
            for g in dom.generating_sequence():
                fg = f[g]
                dadd_g = [row[g] for row in dom.add]
                for x in range(dom.size):
                    if f[dadd_g[x]] != cod.add[f[x]][fg]:
                        raise DiagramError("map is not additive")

    def __call__(self, element):
        return self.cod.carrier[self.map[self.dom.index_of(element)]]

    def apply_index(self, i: int) -> int:
        return self.map[i]

    def preimages(self) -> list[list[int]]:
        """Domain indices bucketed by image index (ascending in each bucket)."""
        if self._preimages is None:
            buckets: list[list[int]] = [[] for _ in range(self.cod.size)]
            for i, j in enumerate(self.map):
                buckets[j].append(i)
            self._preimages = buckets
        return self._preimages

    def __eq__(self, other) -> bool:
        return (isinstance(other, BaseMorphism) and self.dom == other.dom
                and self.cod == other.cod and self.map == other.map)

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return hash((hash(self.dom), hash(self.cod), self.map))

    def __repr__(self) -> str:
        return f"<map {self.dom!r}->{self.cod!r}>"


# ---------------------------------------------------------------------------
# constructors


def finset_object(elements) -> BaseObject:
    return BaseObject(FINSET, elements)


def finptdset_object(elements, basepoint_index: int = 0) -> BaseObject:
    return BaseObject(FINPTDSET, elements, basepoint=basepoint_index)


def finab_object(elements, add, neg, zero, _trusted=False) -> BaseObject:
    return BaseObject(FINAB, elements,
                      add=tuple(tuple(r) for r in add),
                      neg=tuple(neg), zero=zero, _trusted=_trusted)


def zmod(n: int) -> BaseObject:
    """The cyclic group of order n on carrier 0..n-1."""
    if n < 1:
        raise DiagramError("cyclic group order must be >= 1")
    rng = range(n)
    add = tuple(tuple((i + j) % n for j in rng) for i in rng)
    neg = tuple((-i) % n for i in rng)
    return finab_object(rng, add, neg, 0, _trusted=True)


def direct_sum(a: BaseObject, b: BaseObject) -> BaseObject:
    """Componentwise group structure on the pair carrier (lexicographic)."""
    if a.instance is not FINAB or b.instance is not FINAB:
        raise CapabilityError("direct_sum is a finab construction")
    carrier = [(x, y) for x in a.carrier for y in b.carrier]
    nb = b.size
    n = len(carrier)
    add = [[0] * n for _ in range(n)]
    for i in range(n):
        ia, ib = divmod(i, nb)
        for j in range(n):
            ja, jb = divmod(j, nb)
            add[i][j] = a.add[ia][ja] * nb + b.add[ib][jb]
    neg = [a.neg[i // nb] * nb + b.neg[i % nb] for i in range(n)]
    zero = a.zero * nb + b.zero
    return finab_object(carrier, add, neg, zero, _trusted=n > _ASSOC_EXHAUSTIVE_CUTOFF)


def subgroup_object(parent: BaseObject, indices) -> BaseObject:
    """The subgroup on a sum-closed subset of indices (parent order kept)."""
    idx = sorted(set(indices))
    pos = {p: k for k, p in enumerate(idx)}
    if parent.zero not in pos:
        raise DiagramError("subgroup must contain zero")
    try:
        add = [[pos[parent.add[i][j]] for j in idx] for i in idx]
        neg = [pos[parent.neg[i]] for i in idx]
    except KeyError:
        raise DiagramError("subset is not closed under the group structure") from None
    carrier = [parent.carrier[i] for i in idx]
    return finab_object(carrier, add, neg, pos[parent.zero],
                        _trusted=len(idx) > _ASSOC_EXHAUSTIVE_CUTOFF)


def generated_subgroup_indices(obj: BaseObject, seed_indices) -> list[int]:
    """Indices of the subgroup generated by a set of indices (FINAB)."""
    span = {obj.zero}
    frontier = [obj.zero]
    todo = list(seed_indices)
    for s in todo:
        if s not in span:
            span.add(s)
            frontier.append(s)
    while frontier:
        a = frontier.pop()
        for b in list(span):
            s = obj.add[a][b]
            if s not in span:
                span.add(s)
                frontier.append(s)
    return sorted(span)


def quotient_by_subgroup(obj: BaseObject, subgroup_indices):
    """Quotient group and projection; cosets named by least-index member."""
    sub = set(subgroup_indices)
    if obj.zero not in sub:
        raise DiagramError("subgroup must contain zero")
    rep = [-1] * obj.size
    reps: list[int] = []
    for i in range(obj.size):
        if rep[i] >= 0:
            continue
        reps.append(i)
        for s in sub:
            rep[obj.add[i][s]] = i
    pos = {r: k for k, r in enumerate(reps)}
    n = len(reps)
    add = [[pos[rep[obj.add[a][b]]] for b in reps] for a in reps]
    neg = [pos[rep[obj.neg[a]]] for a in reps]
    carrier = [obj.carrier[r] for r in reps]
    q_obj = finab_object(carrier, add, neg, pos[rep[obj.zero]],
                         _trusted=n > _ASSOC_EXHAUSTIVE_CUTOFF)
    proj = BaseMorphism(obj, q_obj, [pos[rep[i]] for i in range(obj.size)],
                        _trusted=True)
    return q_obj, proj


def zero_object(instance: BaseInstance) -> BaseObject:
    if instance is FINPTDSET:
        return finptdset_object(["*"], 0)
    if instance is FINAB:
        return zmod(1)
    raise CapabilityError("finset has no zero object")


def identity(obj: BaseObject) -> BaseMorphism:
    return BaseMorphism(obj, obj, range(obj.size), _trusted=True)


def zero_morphism(dom: BaseObject, cod: BaseObject) -> BaseMorphism:
    if dom.instance is FINSET:
        raise CapabilityError("finset has no zero morphisms")
    z = cod.basepoint if cod.instance is FINPTDSET else cod.zero
    return BaseMorphism(dom, cod, [z] * dom.size, _trusted=True)


def morphism_from_function(dom: BaseObject, cod: BaseObject, fn) -> BaseMorphism:
    """Build and validate the index table of an element-level function."""
    return BaseMorphism(dom, cod, [cod.index_of(fn(x)) for x in dom.carrier])


def compose(*morphisms: BaseMorphism) -> BaseMorphism:
    """Composite in diagram order: compose(f, g)(x) = g(f(x))."""
    if not morphisms:
        raise CompositionError("empty composite")
    out = morphisms[0]
    for g in morphisms[1:]:
        if out.cod != g.dom:
            raise CompositionError("codomain/domain mismatch in composite")
        out = BaseMorphism(out.dom, g.cod, [g.map[j] for j in out.map],
                           _trusted=True)
    return out


# ---------------------------------------------------------------------------
# limits


class _TupleAddRow:
    """One row of a lazy addition table (indexable and iterable)."""

    __slots__ = ("_table", "_i")

    def __init__(self, table, i):
        self._table = table
        self._i = i

    def __getitem__(self, j):
        return self._table.entry(self._i, j)

    def __len__(self):
        return self._table.size

    def __iter__(self):
        return (self._table.entry(self._i, j)
                for j in range(self._table.size))

    def __eq__(self, other):
        try:
            if len(other) != self._table.size:
                return False
        except TypeError:
            return NotImplemented
        return all(self[j] == other[j] for j in range(self._table.size))

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq


class _TupleAddTable:
    """Componentwise addition on an index-tuple carrier, computed on demand.

    A dense table holds size^2 entries; limit apexes routinely reach tens
    of thousands of elements, where the table would dominate the memory of
    the whole pipeline.  Rows behave like tuples for the access patterns
    used here (indexing, iteration, equality).
    """

    __slots__ = ("parts", "tuples", "lookup", "size")

    def __init__(self, parts, tuples, lookup):
        self.parts = tuple(parts)
        self.tuples = tuples
        self.lookup = lookup
        self.size = len(tuples)

    def entry(self, i, j):
        t, u = self.tuples[i], self.tuples[j]
        s = tuple(self.parts[k].add[t[k]][u[k]]
                  for k in range(len(self.parts)))
        try:
            return self.lookup[s]
        except KeyError:
            raise DiagramError("limit carrier is not sum-closed") from None

    def __getitem__(self, i):
        return _TupleAddRow(self, i)

    def __len__(self):
        return self.size

    def __iter__(self):
        return (self[i] for i in range(self.size))

    def __eq__(self, other):
        if other is self:
            return True
        if isinstance(other, _TupleAddTable):
            if (self.tuples == other.tuples
                    and len(self.parts) == len(other.parts)
                    and all(p.add == q.add
                            for p, q in zip(self.parts, other.parts))):
                return True
        try:
            if len(other) != self.size:
                return False
        except TypeError:
            return NotImplemented
        return all(self[i] == other[i] for i in range(self.size))

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq


def _structured_tuple_object(instance, parts: list[BaseObject], tuples):
    """Make a BaseObject on a list of index-tuples over the given parts."""
    carrier = [tuple(parts[k].carrier[i] for k, i in enumerate(t)) for t in tuples]
    n = len(tuples)
    if instance is FINSET:
        return BaseObject(FINSET, carrier, _trusted=True)
    if instance is FINPTDSET:
        base = tuple(p.basepoint for p in parts)
        lookup = {t: i for i, t in enumerate(tuples)}
        if base not in lookup:
            raise DiagramError("limit carrier lost the basepoint")
        return BaseObject(FINPTDSET, carrier, basepoint=lookup[base], _trusted=True)
    lookup = {t: i for i, t in enumerate(tuples)}
    tup = tuple(tuples)
    try:
        neg = [lookup[tuple(parts[k].neg[t[k]] for k in range(len(parts)))]
               for t in tup]
        zero = lookup[tuple(p.zero for p in parts)]
    except KeyError:
        raise DiagramError("limit carrier is not sum-closed") from None
    if n > _DENSE_ADD_CUTOFF:
        return BaseObject(FINAB, carrier,
                          add=_TupleAddTable(parts, tup, lookup),
                          neg=tuple(neg), zero=zero, _trusted=True)
    add = [[0] * n for _ in range(n)]
    for i, t in enumerate(tup):
        for j, u in enumerate(tup):
            s = tuple(parts[k].add[t[k]][u[k]] for k in range(len(parts)))
            try:
                add[i][j] = lookup[s]
            except KeyError:
                raise DiagramError("limit carrier is not sum-closed") from None
    return finab_object(carrier, add, neg, zero,
                        _trusted=n > _ASSOC_EXHAUSTIVE_CUTOFF)


class LimitResult:
    """A computed limit: apex object, named legs, and a mediator factory.

    ``legs`` maps leg names to projections out of the apex.  ``mediate``
    takes a cone (same names -> morphisms out of a common source) and returns
    the unique factorization through the apex; it raises NoMediatorError when
    the cone does not satisfy the defining equations.
    """

    def __init__(self, apex: BaseObject, legs: dict, recipe):
        self.apex = apex
        self.legs = dict(legs)
        self._recipe = recipe  # callable: cone dict -> element builder
        self._lookup = {x: i for i, x in enumerate(apex.carrier)}

    def mediate(self, cone: dict) -> BaseMorphism:
        builder, source = self._recipe(cone)
        table = []
        for i in range(source.size):
            el = builder(i)
            j = self._lookup.get(el)
            if j is None:
                raise NoMediatorError("cone does not land in the limit")
            table.append(j)
        med = BaseMorphism(source, self.apex, table)
        for name, leg in self.legs.items():
            if name in cone and compose(med, leg) != cone[name]:
                raise NoMediatorError(f"mediator fails to recover leg {name!r}")
        return med


def _common_source(cone: dict) -> BaseObject:
    sources = {id(f.dom): f.dom for f in cone.values()}
    if len(sources) != 1:
        vals = list(cone.values())
        src = vals[0].dom
        if any(f.dom != src for f in vals):
            raise CompositionError("cone legs have different sources")
        return src
    return next(iter(sources.values()))


def pullback(f: BaseMorphism, g: BaseMorphism) -> LimitResult:
    """Pullback of a cospan; apex carrier = pairs (x, y) with f(x) = g(y).

    Legs are named "p1" (to dom f) and "p2" (to dom g); pairs are ordered
    lexicographically by (index in dom f, index in dom g).
    """
    if f.cod != g.cod:
        raise CompositionError("pullback needs a common codomain")
    buckets = g.preimages()
    tuples = [(i, j) for i in range(f.dom.size) for j in buckets[f.map[i]]]
    apex = _structured_tuple_object(f.dom.instance, [f.dom, g.dom], tuples)
    p1 = BaseMorphism(apex, f.dom, [t[0] for t in tuples], _trusted=True)
    p2 = BaseMorphism(apex, g.dom, [t[1] for t in tuples], _trusted=True)

    def recipe(cone):
        u, v = cone["p1"], cone["p2"]
        src = _common_source({"p1": u, "p2": v})
        if compose(u, f) != compose(v, g):
            raise NoMediatorError("cone does not commute with the cospan")
        return (lambda i: (u.cod.carrier[u.map[i]], v.cod.carrier[v.map[i]]),
                src)

    return LimitResult(apex, {"p1": p1, "p2": p2}, recipe)


def product(a: BaseObject, b: BaseObject) -> LimitResult:
    """Binary product as the pullback over the terminal shape (all pairs)."""
    tuples = [(i, j) for i in range(a.size) for j in range(b.size)]
    apex = _structured_tuple_object(a.instance, [a, b], tuples)
    p1 = BaseMorphism(apex, a, [t[0] for t in tuples], _trusted=True)
    p2 = BaseMorphism(apex, b, [t[1] for t in tuples], _trusted=True)

    def recipe(cone):
        u, v = cone["p1"], cone["p2"]
        src = _common_source({"p1": u, "p2": v})
        return (lambda i: (u.cod.carrier[u.map[i]], v.cod.carrier[v.map[i]]),
                src)

    return LimitResult(apex, {"p1": p1, "p2": p2}, recipe)


def pairing(lim: LimitResult, u: BaseMorphism, v: BaseMorphism) -> BaseMorphism:
    """The mediator <u, v> into a binary pullback/product result."""
    return lim.mediate({"p1": u, "p2": v})


@dataclass
class Diagram:
    """A finite labelled diagram: named nodes and typed edges.

    ``nodes`` is an ordered mapping name -> BaseObject; ``edges`` is a list
    of (src, dst, morphism).  Node order fixes the canonical carrier order
    of the limit apex.
    """

    nodes: dict
    edges: list

    def __post_init__(self):
        insts = {o.instance for o in self.nodes.values()}
        if len(insts) > 1:
            raise DiagramError("diagram mixes base instances")
        for s, t, h in self.edges:
            if s not in self.nodes or t not in self.nodes:
                raise DiagramError(f"edge {s!r}->{t!r} references unknown node")
            if h.dom != self.nodes[s] or h.cod != self.nodes[t]:
                raise DiagramError(f"edge {s!r}->{t!r} morphism is mistyped")


def finite_limit(diagram: Diagram) -> LimitResult:
    """Limit of a finite diagram by constraint-propagating enumeration.

    The apex carrier consists of tuples over *all* nodes (in node order)
    satisfying every edge equation, lexicographically ordered by node
    indices; legs are the coordinate projections, one per node.
    """
    names = list(diagram.nodes)
    objs = [diagram.nodes[n] for n in names]
    pos = {n: k for k, n in enumerate(names)}
    incoming = [[] for _ in names]   # (src_pos, morphism) for edges src->node
    outgoing = [[] for _ in names]   # (dst_pos, morphism) for edges node->dst
    for s, t, h in diagram.edges:
        incoming[pos[t]].append((pos[s], h))
        outgoing[pos[s]].append((pos[t], h))

    tuples: list[tuple] = []
    assignment = [0] * len(names)

    def extend(k: int) -> None:
        if k == len(names):
            tuples.append(tuple(assignment))
            return
        forced = None
        for src, h in incoming[k]:
            if src < k:
                v = h.map[assignment[src]]
                if forced is None:
                    forced = v
                elif forced != v:
                    return
        if forced is not None:
            candidates = (forced,)
        else:
            candidates = None
            for dst, h in outgoing[k]:
                if dst < k:
                    bucket = h.preimages()[assignment[dst]]
                    if candidates is None or len(bucket) < len(candidates):
                        candidates = bucket
            if candidates is None:
                candidates = range(objs[k].size)
        for v in candidates:
            ok = True
            for src, h in incoming[k]:
                if src < k and h.map[assignment[src]] != v:
                    ok = False
                    break
            if ok:
                for dst, h in outgoing[k]:
                    if dst < k and h.map[v] != assignment[dst]:
                        ok = False
                        break
            if ok:
                assignment[k] = v
                extend(k + 1)

    extend(0)
    apex = _structured_tuple_object(objs[0].instance if objs else FINSET,
                                    objs, tuples)
    legs = {}
    for k, n in enumerate(names):
        legs[n] = BaseMorphism(apex, objs[k], [t[k] for t in tuples],
                               _trusted=True)

    def recipe(cone):
        cone = dict(cone)
        if not cone:
            raise NoMediatorError("empty cone")
        # Derive missing legs along edges until everything is pinned.
        changed = True
        while changed:
            changed = False
            for s, t, h in diagram.edges:
                if s in cone and t not in cone:
                    cone[t] = compose(cone[s], h)
                    changed = True
        missing = [n for n in names if n not in cone]
        if missing:
            raise NoMediatorError(f"cone does not determine nodes {missing}")
        src = _common_source(cone)
        for s, t, h in diagram.edges:
            if compose(cone[s], h) != cone[t]:
                raise NoMediatorError(f"cone breaks the edge {s!r}->{t!r}")
        picked = [cone[n] for n in names]

        def builder(i):
            return tuple(p.cod.carrier[p.map[i]] for p in picked)

        return builder, src

    return LimitResult(apex, legs, recipe)


def kernel(f: BaseMorphism) -> LimitResult:
    """Kernel of a morphism in a pointed instance, as a subobject.

    The apex keeps the domain's carrier order; the single leg is named
    "ker" (the inclusion).
    """
    inst = f.dom.instance
    if not inst.pointed:
        raise CapabilityError("kernels need a pointed instance")
    z = f.cod.basepoint if inst is FINPTDSET else f.cod.zero
    idx = [i for i, j in enumerate(f.map) if j == z]
    if inst is FINPTDSET:
        apex = BaseObject(FINPTDSET, [f.dom.carrier[i] for i in idx],
                          basepoint=idx.index(f.dom.basepoint), _trusted=True)
    else:
        apex = subgroup_object(f.dom, idx)
    incl = BaseMorphism(apex, f.dom, idx, _trusted=True)

    def recipe(cone):
        u = cone["ker"]
        if compose(u, f) != zero_morphism(u.dom, f.cod):
            raise NoMediatorError("cone composed with the map is not zero")
        lookup = {i: k for k, i in enumerate(idx)}
        return (lambda i: apex.carrier[lookup[u.map[i]]], u.dom)

    return LimitResult(apex, {"ker": incl}, recipe)


def reflexive_coequalizer(d: BaseMorphism, c: BaseMorphism,
                          e: BaseMorphism) -> BaseMorphism:
    """Coequalizer of a reflexive pair; returns the quotient projection.

    In FINSET/FINPTDSET this is the quotient of the codomain by the
    equivalence generated by d(x) ~ c(x) (union-find, least-index
    representatives).  In FINAB it is the cokernel of d - c.
    """
    if d.dom != c.dom or d.cod != c.cod:
        raise CompositionError("parallel pair is mistyped")
    if e.dom != d.cod or e.cod != d.dom:
        raise CompositionError("section is mistyped")
    if compose(e, d) != identity(d.cod) or compose(e, c) != identity(d.cod):
        raise DiagramError("the pair is not reflexive along the section")
    target = d.cod
    if target.instance is FINAB:
        diff = [target.add[d.map[i]][target.neg[c.map[i]]]
                for i in range(d.dom.size)]
        sub = generated_subgroup_indices(target, diff)
        _, proj = quotient_by_subgroup(target, sub)
        return proj
    parent = list(range(target.size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(d.dom.size):
        a, b = find(d.map[i]), find(c.map[i])
        if a != b:
            parent[max(a, b)] = min(a, b)
    rep = [find(i) for i in range(target.size)]
    reps = sorted(set(rep))
    pos = {r: k for k, r in enumerate(reps)}
    carrier = [target.carrier[r] for r in reps]
    if target.instance is FINPTDSET:
        q_obj = BaseObject(FINPTDSET, carrier,
                           basepoint=pos[rep[target.basepoint]], _trusted=True)
    else:
        q_obj = BaseObject(FINSET, carrier, _trusted=True)
    return BaseMorphism(target, q_obj, [pos[rep[i]] for i in range(target.size)],
                        _trusted=True)


# ---------------------------------------------------------------------------
# morphism classes


@dataclass(frozen=True)
class MorphismFlags:
    mono: bool
    regular_epi: bool
    split_epi: bool
    iso: bool


def image_indices(f: BaseMorphism) -> list[int]:
    return sorted(set(f.map))


def additive_section(f: BaseMorphism):
    """An additive section of a surjective FINAB map, or None.

    Exhaustive over images of a generating sequence of the codomain; each
    candidate tuple is closed into a homomorphism or rejected.
    """
    cod, dom = f.cod, f.dom
    if set(f.map) != set(range(cod.size)):
        return None
    gens = cod.generating_sequence()
    fibers = [[] for _ in range(cod.size)]
    for i, j in enumerate(f.map):
        fibers[j].append(i)

    def close(images):
        hom = {cod.zero: dom.zero}
        frontier = [cod.zero]
        pairs = list(zip(gens, images))
        while frontier:
            x = frontier.pop()
            for g, img in pairs:
                y = cod.add[x][g]
                v = dom.add[hom[x]][img]
                if y in hom:
                    if hom[y] != v:
                        return None
                else:
                    hom[y] = v
                    frontier.append(y)
        return hom

    for images in itertools.product(*(fibers[g] for g in gens)):
        hom = close(images)
        if hom is not None and len(hom) == cod.size:
            table = [hom[i] for i in range(cod.size)]
            section = BaseMorphism(cod, dom, table)
            if compose(section, f) == identity(cod):
                return section
    return None


def split_section(f: BaseMorphism):
    """A section of f (basepoint-respecting in pointed instances), or None."""
    if set(f.map) != set(range(f.cod.size)):
        return None
    inst = f.dom.instance
    if inst is FINAB:
        return additive_section(f)
    table = [-1] * f.cod.size
    for i, j in enumerate(f.map):
        if table[j] < 0:
            table[j] = i
    if inst is FINPTDSET:
        table[f.cod.basepoint] = f.dom.basepoint
    return BaseMorphism(f.cod, f.dom, table)


def classify_morphism(f: BaseMorphism) -> MorphismFlags:
    """Mono / regular-epi / split-epi / iso flags of a base morphism.

    In all three instances regular epi = surjective and mono = injective;
    split epi = surjective except in FINAB, where an additive section must
    exist (found by exhaustive search over generator images).
    """
    mono = len(set(f.map)) == len(f.map)
    epi = set(f.map) == set(range(f.cod.size))
    split = epi and (f.dom.instance is not FINAB
                     or additive_section(f) is not None)
    return MorphismFlags(mono=mono, regular_epi=epi, split_epi=split,
                         iso=mono and epi)


def jointly_strongly_epi(morphisms) -> bool:
    """Whether a family into a common codomain is jointly strongly epic.

    Union of images covers the codomain (FINSET/FINPTDSET); in FINAB the
    images must generate the codomain as a subgroup.
    """
    ms = list(morphisms)
    if not ms:
        raise CompositionError("empty family")
    cod = ms[0].cod
    if any(m.cod != cod for m in ms):
        raise CompositionError("family has mixed codomains")
    hit = set()
    for m in ms:
        hit.update(m.map)
    if cod.instance is FINAB:
        return len(generated_subgroup_indices(cod, hit)) == cod.size
    return len(hit) == cod.size


# ---------------------------------------------------------------------------
# morphism enumeration (small-scale oracles and searches)


def enumerate_morphisms(dom: BaseObject, cod: BaseObject):
    """Yield every base morphism dom -> cod (use only at desk scale)."""
    if dom.instance is not cod.instance:
        raise DiagramError("enumeration crosses base instances")
    inst = dom.instance
    if inst is FINAB:
        yield from _enumerate_homs(dom, cod)
        return
    slots = []
    for i in range(dom.size):
        if inst is FINPTDSET and i == dom.basepoint:
            slots.append((cod.basepoint,))
        else:
            slots.append(range(cod.size))
    for table in itertools.product(*slots):
        yield BaseMorphism(dom, cod, table, _trusted=True)


def _element_order(obj: BaseObject, i: int) -> int:
    n, x = 1, i
    while x != obj.zero:
        x = obj.add[x][i]
        n += 1
    return n


def _enumerate_homs(dom: BaseObject, cod: BaseObject):
    gens = dom.generating_sequence()
    if not gens:
        yield zero_morphism(dom, cod)
        return
    orders = [_element_order(dom, g) for g in gens]
    candidates = []
    for g, og in zip(gens, orders):
        candidates.append([b for b in range(cod.size)
                           if og % _element_order(cod, b) == 0])

    def close(images):
        hom = {dom.zero: cod.zero}
        frontier = [dom.zero]
        pairs = list(zip(gens, images))
        while frontier:
            x = frontier.pop()
            for g, img in pairs:
                y = dom.add[x][g]
                v = cod.add[hom[x]][img]
                if y in hom:
                    if hom[y] != v:
                        return None
                else:
                    hom[y] = v
                    frontier.append(y)
        return hom

    for images in itertools.product(*candidates):
        hom = close(images)
        if hom is not None and len(hom) == dom.size:
            yield BaseMorphism(dom, cod, [hom[i] for i in range(dom.size)])


def count_factorizations(limit: LimitResult, cone: dict) -> int:
    """Independent oracle: how many morphisms factor a cone through a limit.

    Scans, for every source element, which apex elements satisfy all leg
    equations; the count is the product of per-element choices intersected
    with structure preservation.  Used to certify mediator uniqueness.
    """
    src = _common_source(cone)
    named = [(limit.legs[k], v) for k, v in cone.items()]
    choices = []
    for i in range(src.size):
        ok = [j for j in range(limit.apex.size)
              if all(leg.map[j] == v.map[i] for leg, v in named)]
        choices.append(ok)
    count = 0
    for table in itertools.product(*choices):
        try:
            BaseMorphism(src, limit.apex, table)
        except DiagramError:
            continue
        count += 1
    return count
