"""Finite categories, functors between them, and the double category Span(Cat).

Categories are given intensionally: a :class:`FinCat` answers ``hom(x, y)``,
``then(f, g)`` and ``identity(x)``, and lists its objects.  Derived categories
(pullbacks, products, comma categories) are computed lazily from their
ingredients, so only the hom-sets that are actually inspected get built.

Functors compare extensionally: two functors are equal when they have equal
domains and codomains and agree on every object and morphism of the domain.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .dblcore import DoubleCategory
from .errors import BoundaryError, CyclicGraphError, FrameError
from .fincolim import Graph, GraphHom, Graphs

__all__ = [
    "FinCat", "Mor", "TableCat", "TERMINAL", "Path", "FreeCat", "free_cat",
    "PullbackCat", "product_cat", "CommaOb", "CommaMor", "CommaCat",
    "FinFunctor", "identity_functor", "bang_functor", "free_functor", "functors",
    "check_category", "check_functor", "CatSpan", "CatSpanMap", "SpanCatDouble",
    "SPAN_CAT", "FreeCats", "FREECAT", "is_acyclic", "random_table_cats",
]


class FinCat:
    """A finite category presented by hom-set enumeration."""

    name = "C"

    def objects(self) -> list:
        raise NotImplementedError

    def has_object(self, x) -> bool:
        return x in self.objects()

    def hom(self, x, y) -> list:
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def then(self, f, g):
        raise NotImplementedError

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def morphisms(self) -> list:
        cache = self.__dict__.get("_morphisms")
        if cache is None:
            obs = self.objects()
            cache = [f for x in obs for y in obs for f in self.hom(x, y)]
            self.__dict__["_morphisms"] = cache
        return cache

    def __repr__(self):
        return self.name


# ---------------------------------------------------------------------------
# Explicit categories


@dataclass(frozen=True)
class Mor:
    """A morphism of a :class:`TableCat`; ``label`` is None for identities."""

    dom: int
    cod: int
    label: int | None = None

    def __repr__(self):
        return f"id{self.dom}" if self.label is None else f"f{self.label}:{self.dom}->{self.cod}"


class TableCat(FinCat):
    """A category with objects ``0..n-1`` given by an explicit table.

    ``arrows`` lists the non-identity morphisms as ``(dom, cod)`` pairs and
    ``compose`` maps ``(i, j)`` to ``k`` when the composite of the ``i``-th
    and then the ``j``-th morphism is the ``k``-th; a value of None means the
    composite is an identity.  Every composable pair of non-identity
    morphisms must appear.  Associativity is checked at construction.
    """

    def __init__(self, n_objects: int, arrows: Iterable = (), compose: dict | None = None,
                 name: str | None = None):
        self.n = n_objects
        self.arrows = [tuple(a) for a in arrows]
        self.table = dict(compose or {})
        self.name = name or f"TableCat({n_objects}, {len(self.arrows)})"
        for d, c in self.arrows:
            if not (0 <= d < self.n and 0 <= c < self.n):
                raise BoundaryError(f"morphism {d}->{c} outside {self.n} objects")
        self._mors = [Mor(d, c, i) for i, (d, c) in enumerate(self.arrows)]
        for i, (d, c) in enumerate(self.arrows):
            for j, (d2, c2) in enumerate(self.arrows):
                if c != d2:
                    continue
                if (i, j) not in self.table:
                    raise BoundaryError(f"missing composite of morphisms {i} and {j}")
                k = self.table[(i, j)]
                got = (d, c2) if k is None else self.arrows[k]
                if got != (d, c2):
                    raise BoundaryError(f"composite of {i} and {j} has the wrong type")
        for f, g in itertools.product(self._mors, repeat=2):
            if f.cod != g.dom:
                continue
            for h in self._mors:
                if g.cod == h.dom and self.then(self.then(f, g), h) != self.then(f, self.then(g, h)):
                    raise BoundaryError(f"composition is not associative at {f}, {g}, {h}")

    def objects(self):
        return list(range(self.n))

    def has_object(self, x):
        return isinstance(x, int) and 0 <= x < self.n

    def hom(self, x, y):
        out = [Mor(x, x)] if x == y else []
        return out + [m for m in self._mors if m.dom == x and m.cod == y]

    def identity(self, x):
        return Mor(x, x)

    def then(self, f: Mor, g: Mor) -> Mor:
        if f.cod != g.dom:
            raise BoundaryError(f"cannot compose {f} with {g}")
        if f.label is None:
            return g
        if g.label is None:
            return f
        k = self.table[(f.label, g.label)]
        return Mor(f.dom, g.cod, k)

    def _key(self):
        return (self.n, tuple(self.arrows), tuple(sorted(self.table.items(), key=repr)))

    def __eq__(self, other):
        return self is other or (isinstance(other, TableCat) and self._key() == other._key())

    def __hash__(self):
        return hash((self.n, tuple(self.arrows)))

    def tabulate(self) -> dict:
        """The JSON form: object count, morphisms, sparse composition table."""
        return {"objects": self.n,
                "morphisms": [{"dom": d, "cod": c} for d, c in self.arrows],
                "compose": [[i, j, k] for (i, j), k in sorted(self.table.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "TableCat":
        arrows = [(m["dom"], m["cod"]) for m in data.get("morphisms", [])]
        table = {(i, j): k for i, j, k in data.get("compose", [])}
        return cls(data["objects"], arrows, table)

    @classmethod
    def poset(cls, n: int, relations: Iterable, name=None) -> "TableCat":
        """The preorder generated by ``relations`` (pairs ``x <= y``), as a category.

        The relation is closed reflexively and transitively; the result must be
        antisymmetric.
        """
        le = {(x, x) for x in range(n)} | set(relations)
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in itertools.product(list(le), repeat=2):
                if b == c and (a, d) not in le:
                    le.add((a, d))
                    changed = True
        arrows = sorted((a, b) for a, b in le if a != b)
        if any((b, a) in le for a, b in arrows):
            raise BoundaryError("relation is not antisymmetric")
        idx = {a: i for i, a in enumerate(arrows)}
        table = {}
        for (a, b), (c, d) in itertools.product(arrows, repeat=2):
            if b == c:
                table[(idx[(a, b)], idx[(c, d)])] = idx[(a, d)]
        return cls(n, arrows, table, name)

    @classmethod
    def monoid(cls, elements: int, mult: Callable[[int, int], int], name=None) -> "TableCat":
        """One-object category from a monoid on ``0..elements-1`` with unit 0."""
        arrows = [(0, 0)] * (elements - 1)
        table = {}
        for i in range(1, elements):
            for j in range(1, elements):
                k = mult(i, j)
                table[(i - 1, j - 1)] = None if k == 0 else k - 1
        return cls(1, arrows, table, name)


TERMINAL = TableCat(1, name="1")


# ---------------------------------------------------------------------------
# Free categories on acyclic graphs


@dataclass(frozen=True)
class Path:
    """A path of edges from ``dom`` to ``cod`` (empty for identities)."""

    dom: int
    cod: int
    edges: tuple = ()

    def __repr__(self):
        return f"Path({self.dom}->{self.cod}, {list(self.edges)})"


def is_acyclic(g: Graph) -> bool:
    indeg = [0] * g.vertices.size
    out = [[] for _ in range(g.vertices.size)]
    for s, t in g.edge_list:
        indeg[t] += 1
        out[s].append(t)
    stack = [v for v in range(g.vertices.size) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == g.vertices.size


class FreeCat(FinCat):
    """The free category on an acyclic graph: objects vertices, morphisms paths."""

    def __init__(self, graph: Graph, name: str | None = None):
        if not is_acyclic(graph):
            raise CyclicGraphError(f"graph {graph!r} has a directed cycle; "
                                   "its free category is infinite")
        self.graph = graph
        self.name = name or f"Free({graph!r})"
        self._out = [[] for _ in range(graph.vertices.size)]
        for e, (s, t) in enumerate(graph.edge_list):
            self._out[s].append((e, t))
        self._homs = {}

    def objects(self):
        return list(range(self.graph.vertices.size))

    def has_object(self, x):
        return isinstance(x, int) and 0 <= x < self.graph.vertices.size

    def hom(self, x, y):
        key = (x, y)
        if key not in self._homs:
            out = []

            def walk(v, edges):
                if v == y:
                    out.append(Path(x, y, tuple(edges)))
                for e, t in self._out[v]:
                    walk(t, edges + [e])
            walk(x, [])
            self._homs[key] = out
        return self._homs[key]

    def identity(self, x):
        return Path(x, x)

    def then(self, f: Path, g: Path) -> Path:
        if f.cod != g.dom:
            raise BoundaryError(f"cannot compose {f} with {g}")
        return Path(f.dom, g.cod, f.edges + g.edges)

    def generator(self, e: int) -> Path:
        s, t = self.graph.edge_list[e]
        return Path(s, t, (e,))

    def __eq__(self, other):
        return isinstance(other, FreeCat) and self.graph == other.graph

    def __hash__(self):
        return hash(self.graph)


@functools.lru_cache(maxsize=4096)
def free_cat(graph: Graph) -> FreeCat:
    return FreeCat(graph)


class FreeCats(Graphs):
    """Acyclic graphs as presentations of free categories.

    Arrows are graph homomorphisms (which induce functors sending generators
    to generators).  Pushouts are pushouts of graphs; since the free category
    functor is a left adjoint the result presents the pushout of categories,
    and a pushout that creates a directed cycle is rejected.
    """

    name = "FreeCat"

    def pushout(self, f, g):
        po = super().pushout(f, g)
        if not is_acyclic(po.apex):
            raise CyclicGraphError(f"pushout {po.apex!r} has a directed cycle")
        return po

    def objects(self, max_vertices: int = 2, max_edges: int = 1, **_):
        return [g for g in super().objects(max_vertices, max_edges) if is_acyclic(g)]


FREECAT = FreeCats()


# ---------------------------------------------------------------------------
# Functors


class FinFunctor:
    """A functor between finite categories given by two callables."""

    def __init__(self, dom: FinCat, cod: FinCat, on_ob: Callable, on_mor: Callable,
                 name: str = "F"):
        self.dom, self.cod = dom, cod
        self.on_ob, self.on_mor = on_ob, on_mor
        self.name = name

    def __call__(self, f):
        return self.on_mor(f)

    def then(self, G: "FinFunctor") -> "FinFunctor":
        if self.cod != G.dom:
            raise BoundaryError(f"cannot compose functors {self.name} and {G.name}")
        return FinFunctor(self.dom, G.cod, lambda x: G.on_ob(self.on_ob(x)),
                          lambda f: G.on_mor(self.on_mor(f)), f"{G.name}∘{self.name}")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinFunctor) or self.dom != other.dom or self.cod != other.cod:
            return False
        if self.cod == TERMINAL:
            return True
        return (all(self.on_ob(x) == other.on_ob(x) for x in self.dom.objects())
                and all(self.on_mor(f) == other.on_mor(f) for f in self.dom.morphisms()))

    def __hash__(self):
        return hash((self.dom, self.cod))

    def is_iso(self) -> bool:
        obs = [self.on_ob(x) for x in self.dom.objects()]
        mors = [self.on_mor(f) for f in self.dom.morphisms()]
        return (len(set(obs)) == len(obs) == len(self.cod.objects())
                and len(set(mors)) == len(mors) == len(self.cod.morphisms()))

    def __repr__(self):
        return f"FinFunctor({self.name}: {self.dom!r} -> {self.cod!r})"


def identity_functor(C: FinCat) -> FinFunctor:
    return FinFunctor(C, C, lambda x: x, lambda f: f, f"id_{C.name}")


def bang_functor(C: FinCat) -> FinFunctor:
    return FinFunctor(C, TERMINAL, lambda x: 0, lambda f: Mor(0, 0), f"!_{C.name}")


def free_functor(h: GraphHom, dom: FreeCat | None = None, cod: FreeCat | None = None) -> FinFunctor:
    """The functor between free categories induced by a graph homomorphism."""
    dom = dom or free_cat(h.dom)
    cod = cod or free_cat(h.cod)
    vm, em = h.vmap, h.emap
    return FinFunctor(dom, cod, vm,
                      lambda p: Path(vm(p.dom), vm(p.cod), tuple(em(e) for e in p.edges)),
                      "free(h)")


def check_category(C: FinCat) -> list:
    """Brute-force check of the category axioms; returns failures."""
    fails = []
    obs = C.objects()
    for x in obs:
        for y in obs:
            for f in C.hom(x, y):
                if C.dom(f) != x or C.cod(f) != y:
                    fails.append(("type", f))
                if C.then(C.identity(x), f) != f or C.then(f, C.identity(y)) != f:
                    fails.append(("unit", f))
                for z in obs:
                    for g in C.hom(y, z):
                        fg = C.then(f, g)
                        if fg not in C.hom(x, z):
                            fails.append(("closure", f, g))
                        for w in obs:
                            for h in C.hom(z, w):
                                if C.then(fg, h) != C.then(f, C.then(g, h)):
                                    fails.append(("assoc", f, g, h))
    return fails


def check_functor(F: FinFunctor) -> list:
    """Brute-force check that ``F`` preserves types, identities and composites."""
    C, D = F.dom, F.cod
    fails = []
    for x in C.objects():
        if not D.has_object(F.on_ob(x)):
            fails.append(("object", x))
        elif F.on_mor(C.identity(x)) != D.identity(F.on_ob(x)):
            fails.append(("identity", x))
    for f in C.morphisms():
        Ff = F.on_mor(f)
        if D.dom(Ff) != F.on_ob(C.dom(f)) or D.cod(Ff) != F.on_ob(C.cod(f)):
            fails.append(("type", f))
    for f in C.morphisms():
        for g in C.morphisms():
            if C.cod(f) == C.dom(g):
                try:
                    ok = F.on_mor(C.then(f, g)) == D.then(F.on_mor(f), F.on_mor(g))
                except BoundaryError:
                    ok = False
                if not ok:
                    fails.append(("composite", f, g))
    return fails


def functors(C: FinCat, D: FinCat) -> list:
    """Every functor ``C -> D``, by backtracking over object and morphism maps."""
    obs_c, obs_d = C.objects(), D.objects()
    nonid = [f for f in C.morphisms() if f != C.identity(C.dom(f))]
    out = []
    for obmap in itertools.product(obs_d, repeat=len(obs_c)):
        om = dict(zip(obs_c, obmap))
        choices = [D.hom(om[C.dom(f)], om[C.cod(f)]) for f in nonid]
        for pick in itertools.product(*choices):
            mm = dict(zip(nonid, pick))

            def on_mor(f, om=om, mm=mm):
                return mm[f] if f in mm else D.identity(om[C.dom(f)])
            F = FinFunctor(C, D, om.__getitem__, on_mor, "F")
            if not any(k == "composite" for k, *_ in check_functor(F)):
                out.append(F)
    return out


def random_table_cats(rng, count: int, max_objects: int = 3) -> list:
    """Small categories for randomised tests: posets, monoids and free categories."""
    out = []
    for _ in range(count):
        kind = rng.randrange(3)
        n = rng.randint(1, max_objects)
        if kind == 0:
            pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
            rel = [p for p in pairs if rng.random() < 0.5]
            out.append(TableCat.poset(n, rel, name=f"poset{n}{rel}"))
        elif kind == 1:
            k = rng.choice([2, 3])
            if rng.random() < 0.5:
                out.append(TableCat.monoid(k, lambda i, j, k=k: (i + j) % k, name=f"Z/{k}"))
            else:
                out.append(TableCat.monoid(k, lambda i, j: max(i, j), name=f"max{k}"))
        else:
            es = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.6]
            if es and rng.random() < 0.5:
                es.append(es[0])
            out.append(free_cat(Graph.from_edges(n, es)))
    return out


# ---------------------------------------------------------------------------
# Pullbacks, products, comma categories


class PullbackCat(FinCat):
    """The strict pullback ``S ×_B T`` of ``F: S -> B`` and ``G: T -> B``.

    Objects are pairs ``(s, t)`` with ``F(s) == G(t)`` and morphisms are pairs
    of morphisms with equal images.
    """

    def __init__(self, F: FinFunctor, G: FinFunctor, name: str | None = None):
        if F.cod != G.cod:
            raise BoundaryError("pullback needs functors with a common codomain")
        self.F, self.G = F, G
        self.left, self.right = F.dom, G.dom
        self.name = name or f"({F.dom!r} ×_{F.cod!r} {G.dom!r})"
        self._obs = None
        self._homs = {}

    def objects(self):
        if self._obs is None:
            self._obs = [(s, t) for s in self.left.objects() for t in self.right.objects()
                         if self.F.on_ob(s) == self.G.on_ob(t)]
        return self._obs

    def has_object(self, x):
        return (isinstance(x, tuple) and len(x) == 2 and self.left.has_object(x[0])
                and self.right.has_object(x[1]) and self.F.on_ob(x[0]) == self.G.on_ob(x[1]))

    def hom(self, x, y):
        key = (x, y)
        if key not in self._homs:
            self._homs[key] = [(f, g) for f in self.left.hom(x[0], y[0])
                               for g in self.right.hom(x[1], y[1])
                               if self.F.on_mor(f) == self.G.on_mor(g)]
        return self._homs[key]

    def identity(self, x):
        return (self.left.identity(x[0]), self.right.identity(x[1]))

    def then(self, f, g):
        return (self.left.then(f[0], g[0]), self.right.then(f[1], g[1]))

    def dom(self, f):
        return (self.left.dom(f[0]), self.right.dom(f[1]))

    def cod(self, f):
        return (self.left.cod(f[0]), self.right.cod(f[1]))

    def proj_left(self) -> FinFunctor:
        return FinFunctor(self, self.left, lambda x: x[0], lambda f: f[0], "π1")

    def proj_right(self) -> FinFunctor:
        return FinFunctor(self, self.right, lambda x: x[1], lambda f: f[1], "π2")

    def __eq__(self, other):
        return (isinstance(other, PullbackCat) and self.F == other.F and self.G == other.G)

    def __hash__(self):
        return hash((self.left, self.right))


def product_cat(A: FinCat, B: FinCat) -> PullbackCat:
    """``A × B`` as the pullback over the terminal category."""
    return PullbackCat(bang_functor(A), bang_functor(B), name=f"({A!r} × {B!r})")


@dataclass(frozen=True)
class CommaOb:
    a: object
    f: object
    b: object


@dataclass(frozen=True)
class CommaMor:
    src: CommaOb
    tgt: CommaOb
    h: object
    k: object

    @property
    def dom(self):
        return self.src

    @property
    def cod(self):
        return self.tgt


class CommaCat(FinCat):
    """The comma category ``i/o`` of ``i: A -> X`` and ``o: B -> X``.

    Objects ``(a, f: i(a) -> o(b), b)``; morphisms ``(h, k)`` with
    ``f ; o(k) == i(h) ; f'``.
    """

    def __init__(self, i: FinFunctor, o: FinFunctor, name: str | None = None):
        if i.cod != o.cod:
            raise BoundaryError("comma category needs functors with a common codomain")
        self.i, self.o = i, o
        self.A, self.B, self.X = i.dom, o.dom, i.cod
        self.name = name or f"({i.name}/{o.name})"
        self._obs = None
        self._homs = {}

    def objects(self):
        if self._obs is None:
            self._obs = [CommaOb(a, f, b) for a in self.A.objects() for b in self.B.objects()
                         for f in self.X.hom(self.i.on_ob(a), self.o.on_ob(b))]
        return self._obs

    def has_object(self, x):
        return (isinstance(x, CommaOb) and self.A.has_object(x.a) and self.B.has_object(x.b)
                and x.f in self.X.hom(self.i.on_ob(x.a), self.o.on_ob(x.b)))

    def hom(self, x, y):
        key = (x, y)
        if key not in self._homs:
            X = self.X
            self._homs[key] = [
                CommaMor(x, y, h, k) for h in self.A.hom(x.a, y.a) for k in self.B.hom(x.b, y.b)
                if X.then(x.f, self.o.on_mor(k)) == X.then(self.i.on_mor(h), y.f)]
        return self._homs[key]

    def identity(self, x):
        return CommaMor(x, x, self.A.identity(x.a), self.B.identity(x.b))

    def then(self, f: CommaMor, g: CommaMor) -> CommaMor:
        if f.tgt != g.src:
            raise BoundaryError("comma morphisms are not composable")
        return CommaMor(f.src, g.tgt, self.A.then(f.h, g.h), self.B.then(f.k, g.k))

    def proj_left(self) -> FinFunctor:
        return FinFunctor(self, self.A, lambda x: x.a, lambda m: m.h, "πA")

    def proj_right(self) -> FinFunctor:
        return FinFunctor(self, self.B, lambda x: x.b, lambda m: m.k, "πB")

    def __eq__(self, other):
        return isinstance(other, CommaCat) and self.i == other.i and self.o == other.o

    def __hash__(self):
        return hash((self.A, self.B, self.X))


# ---------------------------------------------------------------------------
# The double category of spans of finite categories


@dataclass(frozen=True, eq=False)
class CatSpan:
    """``src <-left- apex -right-> tgt``."""

    src: FinCat
    apex: FinCat
    tgt: FinCat
    left: FinFunctor
    right: FinFunctor

    def __eq__(self, other):
        return (isinstance(other, CatSpan) and self.src == other.src and self.tgt == other.tgt
                and self.apex == other.apex and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash((self.src, self.tgt))

    def __repr__(self):
        return f"CatSpan({self.src!r} <- {self.apex!r} -> {self.tgt!r})"


@dataclass(frozen=True, eq=False)
class CatSpanMap:
    top: CatSpan
    bottom: CatSpan
    left: FinFunctor
    right: FinFunctor
    apex_map: FinFunctor

    def __eq__(self, other):
        return (isinstance(other, CatSpanMap) and self.top == other.top
                and self.bottom == other.bottom and self.left == other.left
                and self.right == other.right and self.apex_map == other.apex_map)

    def __hash__(self):
        return hash((self.top, self.bottom))

    def __repr__(self):
        return f"CatSpanMap({self.top!r} => {self.bottom!r})"


class SpanCatDouble(DoubleCategory):
    """Spans of finite categories, composed by strict pullback."""

    name = "Span(Cat)"

    def span(self, left: FinFunctor, right: FinFunctor) -> CatSpan:
        if left.dom != right.dom:
            raise BoundaryError("span legs need a common apex")
        return CatSpan(left.cod, left.dom, right.cod, left, right)

    def span_map(self, top, bottom, left, right, apex_map) -> CatSpanMap:
        if (apex_map.dom != top.apex or apex_map.cod != bottom.apex
                or left.dom != top.src or left.cod != bottom.src
                or right.dom != top.tgt or right.cod != bottom.tgt):
            raise FrameError("span map has the wrong frame")
        if apex_map.then(bottom.left) != top.left.then(left) or \
                apex_map.then(bottom.right) != top.right.then(right):
            raise BoundaryError("span map squares do not commute")
        return CatSpanMap(top, bottom, left, right, apex_map)

    def arr_src(self, f):
        return f.dom

    def arr_tgt(self, f):
        return f.cod

    def arr_id(self, x):
        return identity_functor(x)

    def arr_then(self, f, g):
        return f.then(g)

    def arr_homs(self, x, y):
        return functors(x, y)

    def arr_inverse(self, f):
        if not f.is_iso():
            return None
        obs = {f.on_ob(x): x for x in f.dom.objects()}
        mors = {f.on_mor(m): m for m in f.dom.morphisms()}
        return FinFunctor(f.cod, f.dom, obs.__getitem__, mors.__getitem__, f"{f.name}⁻¹")

    def pro_src(self, m):
        return m.src

    def pro_tgt(self, m):
        return m.tgt

    def pro_id(self, x):
        one = identity_functor(x)
        return CatSpan(x, x, x, one, one)

    def composite_apex(self, m: CatSpan, n: CatSpan) -> PullbackCat:
        if m.tgt != n.src:
            raise BoundaryError("spans are not composable")
        return PullbackCat(m.right, n.left)

    def pro_compose(self, m, n):
        P = self.composite_apex(m, n)
        return CatSpan(m.src, P, n.tgt, P.proj_left().then(m.left), P.proj_right().then(n.right))

    def cell_id(self, m):
        return CatSpanMap(m, m, identity_functor(m.src), identity_functor(m.tgt),
                          identity_functor(m.apex))

    def cell_then(self, a, b):
        if a.bottom != b.top:
            raise FrameError("span maps are not vertically composable")
        return CatSpanMap(a.top, b.bottom, a.left.then(b.left), a.right.then(b.right),
                          a.apex_map.then(b.apex_map))

    def cell_pro_id(self, f):
        return CatSpanMap(self.pro_id(f.dom), self.pro_id(f.cod), f, f, f)

    def cell_compose(self, a, b):
        top, bottom = self.pro_compose(a.top, b.top), self.pro_compose(a.bottom, b.bottom)
        H, K = a.apex_map, b.apex_map
        h = FinFunctor(top.apex, bottom.apex, lambda x: (H.on_ob(x[0]), K.on_ob(x[1])),
                       lambda f: (H.on_mor(f[0]), K.on_mor(f[1])), "⊙")
        return CatSpanMap(top, bottom, a.left, b.right, h)

    def cell_inverse(self, a):
        inv = [self.arr_inverse(g) for g in (a.left, a.right, a.apex_map)]
        if any(g is None for g in inv):
            return None
        return CatSpanMap(a.bottom, a.top, *inv)

    def _globular(self, top, bottom, h):
        return CatSpanMap(top, bottom, identity_functor(top.src), identity_functor(top.tgt), h)

    def associator(self, m, n, p):
        top = self.pro_compose(self.pro_compose(m, n), p)
        bottom = self.pro_compose(m, self.pro_compose(n, p))
        h = FinFunctor(top.apex, bottom.apex, lambda x: (x[0][0], (x[0][1], x[1])),
                       lambda f: (f[0][0], (f[0][1], f[1])), "assoc")
        return self._globular(top, bottom, h)

    def associator_inv(self, m, n, p):
        top = self.pro_compose(m, self.pro_compose(n, p))
        bottom = self.pro_compose(self.pro_compose(m, n), p)
        h = FinFunctor(top.apex, bottom.apex, lambda x: ((x[0], x[1][0]), x[1][1]),
                       lambda f: ((f[0], f[1][0]), f[1][1]), "assoc⁻¹")
        return self._globular(top, bottom, h)

    def left_unitor(self, m):
        top = self.pro_compose(self.pro_id(m.src), m)
        return self._globular(top, m, FinFunctor(top.apex, m.apex, lambda x: x[1],
                                                 lambda f: f[1], "λ"))

    def left_unitor_inv(self, m):
        bottom = self.pro_compose(self.pro_id(m.src), m)
        L = m.left
        return self._globular(m, bottom, FinFunctor(
            m.apex, bottom.apex, lambda x: (L.on_ob(x), x), lambda f: (L.on_mor(f), f), "λ⁻¹"))

    def right_unitor(self, m):
        top = self.pro_compose(m, self.pro_id(m.tgt))
        return self._globular(top, m, FinFunctor(top.apex, m.apex, lambda x: x[0],
                                                 lambda f: f[0], "ρ"))

    def right_unitor_inv(self, m):
        bottom = self.pro_compose(m, self.pro_id(m.tgt))
        R = m.right
        return self._globular(m, bottom, FinFunctor(
            m.apex, bottom.apex, lambda x: (x, R.on_ob(x)), lambda f: (f, R.on_mor(f)), "ρ⁻¹"))


SPAN_CAT = SpanCatDouble()
