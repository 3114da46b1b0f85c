"""Finite sets and finite graphs with computed finite colimits.

Elements of a finite set of size ``n`` are the indices ``0..n-1``.  A graph is
a pair of finite sets (vertices, edges) with source and target functions, and
every colimit of graphs is computed pointwise on vertices and on edges.

Pushouts are computed as a disjoint union quotiented by a union-find
structure.  Equivalence classes are numbered in first-seen order over the
disjoint union (all elements of the first object, then all elements of the
second), so that composites are deterministic and can be compared table by
table.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Sequence

from .errors import BoundaryError, NotInvertibleError

__all__ = [
    "FinSet", "FinFunction", "Graph", "GraphHom", "UnionFind",
    "Coproduct", "Pushout", "coproduct", "copair", "initial", "bang",
    "pushout", "pushout_copair", "discrete", "discrete_on", "vertices",
    "vertices_on", "functions", "graph_homs", "finsets", "graphs",
    "FinSets", "Graphs", "FINSET", "GRAPH", "Functor", "identity_functor",
    "DISCRETE", "VERTICES",
]


# ---------------------------------------------------------------------------
# Finite sets


@dataclass(frozen=True)
class FinSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"negative size {self.size}")

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FinSet({self.size})"


@dataclass(frozen=True)
class FinFunction:
    """A function between finite sets stored as a lookup table."""

    dom: FinSet
    cod: FinSet
    table: tuple

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.dom.size:
            raise BoundaryError(
                f"table of length {len(table)} for domain of size {self.dom.size}")
        n = self.cod.size
        for v in table:
            if not 0 <= v < n:
                raise BoundaryError(f"value {v} outside codomain of size {n}")

    @classmethod
    def identity(cls, a: FinSet) -> "FinFunction":
        return cls(a, a, tuple(range(a.size)))

    @classmethod
    def make(cls, table: Sequence[int], cod: int) -> "FinFunction":
        return cls(FinSet(len(table)), FinSet(cod), tuple(table))

    def __call__(self, i: int) -> int:
        return self.table[i]

    def then(self, g: "FinFunction") -> "FinFunction":
        """Diagrammatic composite: first ``self``, then ``g``."""
        if self.cod != g.dom:
            raise BoundaryError(f"cannot compose {self.cod} with {g.dom}")
        t = g.table
        return FinFunction(self.dom, g.cod, tuple(t[i] for i in self.table))

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.size

    def is_iso(self) -> bool:
        return self.dom.size == self.cod.size and self.is_injective()

    def inverse(self) -> "FinFunction":
        if not self.is_iso():
            raise NotInvertibleError(f"{self} is not a bijection")
        inv = [0] * self.cod.size
        for i, j in enumerate(self.table):
            inv[j] = i
        return FinFunction(self.cod, self.dom, tuple(inv))

    def __repr__(self):
        return f"FinFunction({list(self.table)} -> {self.cod.size})"


# ---------------------------------------------------------------------------
# Graphs


@dataclass(frozen=True)
class Graph:
    vertices: FinSet
    edges: FinSet
    src: FinFunction
    tgt: FinFunction

    def __post_init__(self):
        for leg in (self.src, self.tgt):
            if leg.dom != self.edges or leg.cod != self.vertices:
                raise BoundaryError("source/target must map edges to vertices")

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Sequence[tuple] = ()) -> "Graph":
        V, E = FinSet(n_vertices), FinSet(len(edges))
        return cls(V, E, FinFunction(E, V, tuple(s for s, _ in edges)),
                   FinFunction(E, V, tuple(t for _, t in edges)))

    @property
    def edge_list(self) -> list:
        return list(zip(self.src.table, self.tgt.table))

    def __repr__(self):
        return f"Graph({self.vertices.size}, {self.edge_list})"


@dataclass(frozen=True)
class GraphHom:
    dom: Graph
    cod: Graph
    vmap: FinFunction
    emap: FinFunction

    def __post_init__(self):
        if self.vmap.dom != self.dom.vertices or self.vmap.cod != self.cod.vertices:
            raise BoundaryError("vertex map has the wrong type")
        if self.emap.dom != self.dom.edges or self.emap.cod != self.cod.edges:
            raise BoundaryError("edge map has the wrong type")
        if (self.dom.src.then(self.vmap) != self.emap.then(self.cod.src)
                or self.dom.tgt.then(self.vmap) != self.emap.then(self.cod.tgt)):
            raise BoundaryError("edge map does not respect sources and targets")

    @classmethod
    def identity(cls, g: Graph) -> "GraphHom":
        return cls(g, g, FinFunction.identity(g.vertices), FinFunction.identity(g.edges))

    def then(self, other: "GraphHom") -> "GraphHom":
        if self.cod != other.dom:
            raise BoundaryError("graph homomorphisms are not composable")
        return GraphHom(self.dom, other.cod, self.vmap.then(other.vmap),
                        self.emap.then(other.emap))

    def is_iso(self) -> bool:
        return self.vmap.is_iso() and self.emap.is_iso()

    def inverse(self) -> "GraphHom":
        return GraphHom(self.cod, self.dom, self.vmap.inverse(), self.emap.inverse())

    def __repr__(self):
        return f"GraphHom(v={list(self.vmap.table)}, e={list(self.emap.table)})"


# ---------------------------------------------------------------------------
# Colimits


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            if y < x:
                x, y = y, x
            self.parent[y] = x

    def classes(self) -> tuple[int, list]:
        """Number the classes in first-seen order; return (count, labels)."""
        labels, seen = [], {}
        for i in range(len(self.parent)):
            r = self.find(i)
            if r not in seen:
                seen[r] = len(seen)
            labels.append(seen[r])
        return len(seen), labels


class Coproduct(NamedTuple):
    sum: object
    inl: object
    inr: object


class Pushout(NamedTuple):
    apex: object
    ia: object
    ib: object
    f: object
    g: object
    parts: tuple = ()


def _set_coproduct(a: FinSet, b: FinSet) -> Coproduct:
    s = FinSet(a.size + b.size)
    return Coproduct(s, FinFunction(a, s, tuple(range(a.size))),
                     FinFunction(b, s, tuple(range(a.size, s.size))))


def coproduct(a, b) -> Coproduct:
    """Binary coproduct of two finite sets or two graphs."""
    if isinstance(a, FinSet) and isinstance(b, FinSet):
        return _set_coproduct(a, b)
    if isinstance(a, Graph) and isinstance(b, Graph):
        cv = _set_coproduct(a.vertices, b.vertices)
        ce = _set_coproduct(a.edges, b.edges)
        src = _set_copair(a.src.then(cv.inl), b.src.then(cv.inr), ce.sum)
        tgt = _set_copair(a.tgt.then(cv.inl), b.tgt.then(cv.inr), ce.sum)
        s = Graph(cv.sum, ce.sum, src, tgt)
        return Coproduct(s, GraphHom(a, s, cv.inl, ce.inl), GraphHom(b, s, cv.inr, ce.inr))
    raise TypeError(f"no coproduct for {type(a).__name__} and {type(b).__name__}")


def _set_copair(f: FinFunction, g: FinFunction, dom: FinSet) -> FinFunction:
    return FinFunction(dom, f.cod, f.table + g.table)


def copair(f, g, coprod: Coproduct | None = None):
    """The unique arrow ``a + b -> c`` restricting to ``f`` and ``g``."""
    if f.cod != g.cod:
        raise BoundaryError("copair needs arrows with a common codomain")
    if coprod is None:
        coprod = coproduct(f.dom, g.dom)
    elif coprod.inl.dom != f.dom or coprod.inr.dom != g.dom:
        raise BoundaryError("coproduct witness does not match the arrows")
    if isinstance(f, FinFunction):
        return _set_copair(f, g, coprod.sum)
    return GraphHom(coprod.sum, f.cod,
                    _set_copair(f.vmap, g.vmap, coprod.sum.vertices),
                    _set_copair(f.emap, g.emap, coprod.sum.edges))


EMPTY_GRAPH = Graph.from_edges(0)


def initial(kind=FinSet):
    """The initial finite set or the empty graph."""
    return FinSet(0) if kind is FinSet else EMPTY_GRAPH


def bang(x):
    """The unique arrow out of the initial object into ``x``."""
    if isinstance(x, FinSet):
        return FinFunction(FinSet(0), x, ())
    return GraphHom(EMPTY_GRAPH, x, FinFunction(FinSet(0), x.vertices, ()),
                    FinFunction(FinSet(0), x.edges, ()))


def _set_pushout(f: FinFunction, g: FinFunction) -> Pushout:
    a, b = f.cod.size, g.cod.size
    uf = UnionFind(a + b)
    for x, y in zip(f.table, g.table):
        uf.union(x, a + y)
    n, labels = uf.classes()
    apex = FinSet(n)
    return Pushout(apex, FinFunction(f.cod, apex, labels[:a]),
                   FinFunction(g.cod, apex, labels[a:]), f, g)


def pushout(f, g) -> Pushout:
    """Pushout of the span ``a <-f- c -g-> b``."""
    if f.dom != g.dom:
        raise BoundaryError("pushout needs a span with a common domain")
    if isinstance(f, FinFunction):
        return _set_pushout(f, g)
    pv = _set_pushout(f.vmap, g.vmap)
    pe = _set_pushout(f.emap, g.emap)
    a, b = f.cod, g.cod
    src = [0] * pe.apex.size
    tgt = [0] * pe.apex.size
    for e in range(a.edges.size):
        src[pe.ia(e)] = pv.ia(a.src(e))
        tgt[pe.ia(e)] = pv.ia(a.tgt(e))
    for e in range(b.edges.size):
        src[pe.ib(e)] = pv.ib(b.src(e))
        tgt[pe.ib(e)] = pv.ib(b.tgt(e))
    apex = Graph(pv.apex, pe.apex, FinFunction(pe.apex, pv.apex, src),
                 FinFunction(pe.apex, pv.apex, tgt))
    return Pushout(apex, GraphHom(a, apex, pv.ia, pe.ia), GraphHom(b, apex, pv.ib, pe.ib),
                   f, g, (pv, pe))


def _set_pushout_copair(po: Pushout, p: FinFunction, q: FinFunction) -> FinFunction:
    if p.dom != po.ia.dom or q.dom != po.ib.dom or p.cod != q.cod:
        raise BoundaryError("cocone legs do not match the pushout")
    if po.f.then(p) != po.g.then(q):
        raise BoundaryError("not a cocone: the square does not commute")
    out = [None] * po.apex.size
    for i, c in enumerate(po.ia.table):
        if out[c] is None:
            out[c] = p(i)
    for j, c in enumerate(po.ib.table):
        if out[c] is None:
            out[c] = q(j)
    return FinFunction(po.apex, p.cod, tuple(out))


def pushout_copair(po: Pushout, p, q):
    """The mediating arrow out of a pushout apex for the cocone ``(p, q)``."""
    if isinstance(p, FinFunction):
        return _set_pushout_copair(po, p, q)
    if po.f.then(p) != po.g.then(q):
        raise BoundaryError("not a cocone: the square does not commute")
    pv, pe = po.parts
    return GraphHom(po.apex, p.cod, _set_pushout_copair(pv, p.vmap, q.vmap),
                    _set_pushout_copair(pe, p.emap, q.emap))


# ---------------------------------------------------------------------------
# Discrete graphs and the vertex functor


def discrete(a: FinSet) -> Graph:
    return Graph.from_edges(a.size)


def discrete_on(f: FinFunction) -> GraphHom:
    return GraphHom(discrete(f.dom), discrete(f.cod), f,
                    FinFunction(FinSet(0), FinSet(0), ()))


def vertices(g: Graph) -> FinSet:
    return g.vertices


def vertices_on(h: GraphHom) -> FinFunction:
    return h.vmap


# ---------------------------------------------------------------------------
# Enumeration


def functions(a: FinSet, b: FinSet) -> Iterator[FinFunction]:
    """Every function ``a -> b``, in lexicographic order of tables."""
    for t in itertools.product(range(b.size), repeat=a.size):
        yield FinFunction(a, b, t)


def graph_homs(g: Graph, h: Graph) -> Iterator[GraphHom]:
    by_ends: dict = {}
    for e, ends in enumerate(h.edge_list):
        by_ends.setdefault(ends, []).append(e)
    g_edges = g.edge_list
    for vt in itertools.product(range(h.vertices.size), repeat=g.vertices.size):
        choices = [by_ends.get((vt[s], vt[t]), []) for s, t in g_edges]
        for et in itertools.product(*choices):
            yield GraphHom(g, h, FinFunction(g.vertices, h.vertices, vt),
                           FinFunction(g.edges, h.edges, et))


def finsets(max_size: int) -> list:
    return [FinSet(n) for n in range(max_size + 1)]


def graphs(max_vertices: int, max_edges: int) -> list:
    """All graphs with at most the given numbers of vertices and edges.

    Edges are indexed, so graphs differing only by an edge permutation are
    listed separately.
    """
    out = []
    for n in range(max_vertices + 1):
        pairs = [(s, t) for s in range(n) for t in range(n)]
        for k in range(max_edges + 1):
            if k and not pairs:
                break
            for es in itertools.product(pairs, repeat=k):
                out.append(Graph.from_edges(n, es))
    return out


# ---------------------------------------------------------------------------
# Categories with chosen finite colimits


class FinSets:
    """FinSet with its chosen coproducts, initial object and pushouts."""

    name = "FinSet"
    object_type = FinSet

    def identity(self, x):
        return FinFunction.identity(x)

    def then(self, f, g):
        return f.then(g)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def coproduct(self, a, b) -> Coproduct:
        return coproduct(a, b)

    def copair(self, f, g, coprod=None):
        return copair(f, g, coprod)

    def initial(self):
        return initial(self.object_type)

    def bang(self, x):
        return bang(x)

    def pushout(self, f, g) -> Pushout:
        return pushout(f, g)

    def pushout_copair(self, po, p, q):
        return pushout_copair(po, p, q)

    def homs(self, x, y):
        return functions(x, y)

    def objects(self, max_size: int = 2, **_):
        return finsets(max_size)

    def is_iso(self, f) -> bool:
        return f.is_iso()

    def inverse(self, f):
        return f.inverse()

    def __repr__(self):
        return self.name


class Graphs(FinSets):
    """Finite graphs, colimits computed on vertices and edges separately."""

    name = "Graph"
    object_type = Graph

    def identity(self, x):
        return GraphHom.identity(x)

    def homs(self, x, y):
        return graph_homs(x, y)

    def objects(self, max_vertices: int = 2, max_edges: int = 1, **_):
        return graphs(max_vertices, max_edges)


FINSET = FinSets()
GRAPH = Graphs()


class Functor:
    """A functor between two categories with chosen colimits.

    ``on_ob`` and ``on_arr`` are plain callables; equality of functors is not
    decidable in general, so functors compare by identity.
    """

    def __init__(self, dom, cod, on_ob: Callable, on_arr: Callable, name: str = "F"):
        self.dom, self.cod = dom, cod
        self.on_ob, self.on_arr = on_ob, on_arr
        self.name = name

    def __call__(self, x):
        if isinstance(x, self.dom.object_type):
            return self.on_ob(x)
        return self.on_arr(x)

    def then(self, other: "Functor") -> "Functor":
        return Functor(self.dom, other.cod,
                       lambda x: other.on_ob(self.on_ob(x)),
                       lambda f: other.on_arr(self.on_arr(f)),
                       f"{other.name}∘{self.name}")

    def __repr__(self):
        return f"Functor({self.name}: {self.dom} -> {self.cod})"


def identity_functor(cat) -> Functor:
    return Functor(cat, cat, lambda x: x, lambda f: f, f"id_{cat.name}")


DISCRETE = Functor(FINSET, GRAPH, discrete, discrete_on, "discrete")
VERTICES = Functor(GRAPH, FINSET, vertices, vertices_on, "vertices")
