"""Hypothesis strategies for finite sets, functions, graphs and open graphs."""
from hypothesis import strategies as st

from opencat.fincolim import FinFunction, FinSet, Graph, GraphHom, discrete
from opencat.structured import SCSP_DISCRETE


def finsets(max_size=3):
    return st.integers(0, max_size).map(FinSet)


@st.composite
def functions(draw, dom=None, cod=None, max_size=3):
    a = dom if dom is not None else draw(finsets(max_size))
    if cod is None:
        lo = 1 if a.size else 0
        cod = FinSet(draw(st.integers(lo, max_size)))
    if cod.size == 0:
        assert a.size == 0
        return FinFunction(a, cod, ())
    table = draw(st.lists(st.integers(0, cod.size - 1), min_size=a.size, max_size=a.size))
    return FinFunction(a, cod, tuple(table))


@st.composite
def spans(draw, max_size=3):
    c = draw(finsets(max_size))
    return draw(functions(dom=c, max_size=max_size)), draw(functions(dom=c, max_size=max_size))


@st.composite
def graphs(draw, max_vertices=3, max_edges=3, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    if n == 0:
        return Graph.from_edges(0)
    v = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(v, v), max_size=max_edges))
    return Graph.from_edges(n, edges)


@st.composite
def open_graphs(draw, max_foot=2, max_vertices=3, max_edges=3, foot_l=None, foot_r=None):
    g = draw(graphs(max_vertices, max_edges, min_vertices=1))
    n = g.vertices.size
    a = foot_l if foot_l is not None else draw(st.integers(0, max_foot))
    b = foot_r if foot_r is not None else draw(st.integers(0, max_foot))
    legs = []
    for k in (a, b):
        table = draw(st.lists(st.integers(0, n - 1), min_size=k, max_size=k))
        legs.append(GraphHom(discrete(FinSet(k)), g, FinFunction(FinSet(k), g.vertices, tuple(table)),
                             FinFunction(FinSet(0), g.edges, ())))
    return SCSP_DISCRETE.cospan(FinSet(a), g, FinSet(b), *legs)
