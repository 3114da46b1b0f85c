import itertools

import pytest
from hypothesis import given, strategies as st

from opencat.errors import BoundaryError, NotInvertibleError
from opencat.fincolim import (DISCRETE, EMPTY_GRAPH, FINSET, GRAPH, VERTICES, FinFunction, FinSet,
                              Graph, GraphHom, UnionFind, bang, copair, coproduct, discrete,
                              discrete_on, functions, graph_homs, graphs, initial, pushout,
                              pushout_copair)

from strategies import functions as fn_st, graphs as graph_st, spans


def fn(table, cod):
    return FinFunction.make(table, cod)


def edge():
    return Graph.from_edges(2, [(0, 1)])


# -- finite sets and functions ------------------------------------------------

def test_function_validates_table():
    with pytest.raises(BoundaryError):
        FinFunction(FinSet(2), FinSet(1), (0, 1))
    with pytest.raises(BoundaryError):
        FinFunction(FinSet(2), FinSet(3), (0,))
    with pytest.raises(ValueError):
        FinSet(-1)


def test_then_is_diagrammatic():
    f, g = fn([1, 0, 1], 2), fn([2, 0], 3)
    assert f.then(g).table == (0, 2, 0)
    with pytest.raises(BoundaryError):
        f.then(f)


def test_inverse():
    f = fn([2, 0, 1], 3)
    assert f.then(f.inverse()) == FinFunction.identity(FinSet(3))
    with pytest.raises(NotInvertibleError):
        fn([0, 0], 2).inverse()


@pytest.mark.parametrize("a,b", [(0, 0), (0, 3), (2, 2), (3, 2)])
def test_function_enumeration_count(a, b):
    fs = list(functions(FinSet(a), FinSet(b)))
    assert len(fs) == b ** a
    assert len(set(fs)) == len(fs)


# -- coproducts ---------------------------------------------------------------

def test_coproduct_indexing():
    s, inl, inr = coproduct(FinSet(2), FinSet(3))
    assert s == FinSet(5)
    assert inl.table == (0, 1)
    assert inr.table == (2, 3, 4)


def test_coproduct_of_empties():
    assert coproduct(FinSet(0), FinSet(0)).sum == FinSet(0)


def test_graph_coproduct_edge_plus_vertex():
    s, inl, inr = coproduct(edge(), Graph.from_edges(1))
    assert (s.vertices.size, s.edges.size) == (3, 1)
    assert inr.vmap.table == (2,)


@pytest.mark.parametrize("f,g,cod,expected", [
    ([0], [0], 1, (0, 0)),
    ([1, 0], [0], 2, (1, 0, 0)),
])
def test_copair_examples(f, g, cod, expected):
    assert copair(fn(f, cod), fn(g, cod)).table == expected


def test_copair_of_coprojections_is_identity():
    cp = coproduct(FinSet(2), FinSet(1))
    assert copair(cp.inl, cp.inr) == FinFunction.identity(cp.sum)


def test_copair_needs_common_codomain():
    with pytest.raises(BoundaryError):
        copair(fn([0], 1), fn([0], 2))


def test_graph_coproduct_universal_property_by_enumeration():
    # every pair of maps out of the summands factors uniquely through the sum
    g, h = edge(), Graph.from_edges(1, [(0, 0)])
    s = coproduct(g, h)
    for z in graphs(2, 2):
        for p in graph_homs(g, z):
            for q in graph_homs(h, z):
                u = copair(p, q, s)
                assert s.inl.then(u) == p and s.inr.then(u) == q
                hits = [v for v in graph_homs(s.sum, z) if s.inl.then(v) == p and s.inr.then(v) == q]
                assert hits == [u]


# -- initial objects ----------------------------------------------------------

def test_bang_into_finset():
    assert bang(FinSet(3)).table == ()
    assert len(list(functions(FinSet(0), FinSet(3)))) == 1


def test_bang_into_empty_graph_is_identity():
    assert bang(EMPTY_GRAPH) == GraphHom.identity(EMPTY_GRAPH)
    assert initial(Graph) == EMPTY_GRAPH


# -- pushouts -----------------------------------------------------------------

def test_pushout_of_identities():
    i = FinFunction.identity(FinSet(1))
    po = pushout(i, i)
    assert po.apex == FinSet(1)
    assert po.ia == i and po.ib == i


def test_pushout_glues_one_point():
    po = pushout(fn([0], 2), fn([1], 2))
    assert po.apex == FinSet(3)
    assert po.ia(0) == po.ib(1)
    assert len({po.ia(0), po.ia(1), po.ib(0)}) == 3


def test_pushout_of_graphs_glues_edges_end_to_end():
    one = discrete(FinSet(1))
    to_end = GraphHom(one, edge(), fn([1], 2), FinFunction(FinSet(0), FinSet(1), ()))
    to_start = GraphHom(one, edge(), fn([0], 2), FinFunction(FinSet(0), FinSet(1), ()))
    po = pushout(to_end, to_start)
    assert (po.apex.vertices.size, po.apex.edges.size) == (3, 2)
    assert sorted(po.apex.edge_list) == [(0, 1), (1, 2)]


def test_pushout_requires_common_domain():
    with pytest.raises(BoundaryError):
        pushout(fn([0], 1), fn([0, 0], 1))


def _components(f, g):
    """Independent oracle: connected components of the gluing relation by search."""
    a, b = f.cod.size, g.cod.size
    adj = {v: set() for v in range(a + b)}
    for i in range(f.dom.size):
        x, y = f(i), a + g(i)
        adj[x].add(y)
        adj[y].add(x)
    seen, count = set(), 0
    for v in range(a + b):
        if v in seen:
            continue
        count += 1
        stack = [v]
        while stack:
            w = stack.pop()
            if w not in seen:
                seen.add(w)
                stack.extend(adj[w])
    return count


@given(spans())
def test_pushout_apex_counts_gluing_classes(span):
    f, g = span
    po = pushout(f, g)
    assert po.apex.size == _components(f, g)
    assert f.then(po.ia) == g.then(po.ib)


@given(spans(max_size=3), st.integers(0, 2))
def test_pushout_universal_property(span, d):
    f, g = span
    po = pushout(f, g)
    z = FinSet(d)
    for p in functions(f.cod, z):
        for q in functions(g.cod, z):
            if f.then(p) != g.then(q):
                continue
            u = pushout_copair(po, p, q)
            assert po.ia.then(u) == p and po.ib.then(u) == q
            assert sum(1 for v in functions(po.apex, z)
                       if po.ia.then(v) == p and po.ib.then(v) == q) == 1


def test_pushout_copair_rejects_non_cocone():
    po = pushout(fn([0], 1), fn([0], 1))
    with pytest.raises(BoundaryError):
        pushout_copair(po, fn([0], 2), fn([1], 2))


def test_graph_pushouts_universal_property_small():
    pts = [discrete(FinSet(k)) for k in range(2)]
    targets = graphs(2, 1)
    for c in pts:
        for x in targets:
            for y in targets:
                for f in graph_homs(c, x):
                    for g in graph_homs(c, y):
                        po = pushout(f, g)
                        for z in graphs(2, 1):
                            for p in graph_homs(x, z):
                                for q in graph_homs(y, z):
                                    if f.then(p) != g.then(q):
                                        continue
                                    hits = [v for v in graph_homs(po.apex, z)
                                            if po.ia.then(v) == p and po.ib.then(v) == q]
                                    assert hits == [pushout_copair(po, p, q)]


def test_union_find_classes_are_numbered_by_first_occurrence():
    uf = UnionFind(5)
    uf.union(3, 1)
    uf.union(4, 0)
    n, labels = uf.classes()
    assert n == 3
    assert labels == [0, 1, 2, 1, 0]


# -- discrete graphs ----------------------------------------------------------

def test_discrete_graph():
    g = discrete(FinSet(2))
    assert (g.vertices.size, g.edges.size) == (2, 0)
    assert discrete_on(FinFunction.identity(FinSet(3))) == GraphHom.identity(discrete(FinSet(3)))


@pytest.mark.parametrize("a,b", [(0, 0), (1, 2), (2, 2)])
def test_discrete_preserves_coproducts(a, b):
    A, B = FinSet(a), FinSet(b)
    cp = coproduct(A, B)
    gcp = coproduct(DISCRETE(A), DISCRETE(B))
    comparison = copair(DISCRETE.on_arr(cp.inl), DISCRETE.on_arr(cp.inr), gcp)
    back = GraphHom(DISCRETE(cp.sum), gcp.sum, FinFunction.identity(cp.sum),
                    FinFunction(FinSet(0), FinSet(0), ()))
    assert comparison.then(back) == GraphHom.identity(gcp.sum)
    assert back.then(comparison) == GraphHom.identity(DISCRETE(cp.sum))


@given(fn_st(), fn_st())
def test_discrete_and_vertices_are_functors(f, g):
    if f.cod != g.dom:
        return
    assert DISCRETE.on_arr(f.then(g)) == DISCRETE.on_arr(f).then(DISCRETE.on_arr(g))
    h = DISCRETE.on_arr(f)
    assert VERTICES.on_arr(h) == f


@given(graph_st(2, 2))
def test_graph_identity_laws(g):
    i = GRAPH.identity(g)
    for h in itertools.islice(graph_homs(g, g), 5):
        assert i.then(h) == h == h.then(i)


def test_categories_expose_homs():
    assert len(list(FINSET.homs(FinSet(2), FinSet(2)))) == 4
    assert len(list(GRAPH.homs(edge(), edge()))) == 1
