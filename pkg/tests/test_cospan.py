import pytest
from hypothesis import given

from opencat.cospan import CSP_FINSET, Cospan, csp
from opencat.dblcore import check_cocartesian, check_pseudocategory, make_sample
from opencat.errors import BoundaryError, FrameError
from opencat.fincolim import GRAPH, FinFunction, FinSet, Graph
from opencat.structured import SCSP_DISCRETE

from strategies import open_graphs

D = CSP_FINSET
ONE, TWO = FinSet(1), FinSet(2)


def fn(table, cod):
    return FinFunction.make(table, cod)


def point():
    """``1 -> 1 <- 1``."""
    return D.pro_id(ONE)


def test_identity_cospan_has_identity_legs():
    m = D.pro_id(TWO)
    assert m.apex == TWO
    assert m.leg_l == m.leg_r == FinFunction.identity(TWO)


def test_compose_one_point_cospans():
    m = D.pro_compose(point(), point())
    assert m == point()


def test_compose_collapses_through_shared_foot():
    # 2 -> 2 <- 1 then 1 -> 1 <- 2: n adds no new points
    m = D.cospan(TWO, TWO, ONE, fn([0, 1], 2), fn([0], 2))
    n = D.cospan(ONE, ONE, TWO, fn([0], 1), fn([0, 0], 1))
    mn = D.pro_compose(m, n)
    assert mn.apex == TWO
    merge = D.cospan(TWO, ONE, ONE, fn([0, 0], 1), fn([0], 1))
    assert D.pro_compose(merge, D.pro_id(ONE)).apex == ONE


def test_mismatched_feet_raise():
    with pytest.raises(BoundaryError):
        D.pro_compose(D.pro_id(ONE), D.pro_id(TWO))


def test_constructor_validates_legs():
    with pytest.raises(BoundaryError):
        D.cospan(TWO, ONE, ONE, fn([0], 1), fn([0], 1))
    with pytest.raises(FrameError):
        D.cell(point(), point(), FinFunction.identity(TWO), FinFunction.identity(ONE),
               FinFunction.identity(ONE))


def test_unitors_are_inverse():
    m = D.cospan(TWO, FinSet(3), ONE, fn([0, 2], 3), fn([1], 3))
    for fwd, inv in [(D.left_unitor(m), D.left_unitor_inv(m)),
                     (D.right_unitor(m), D.right_unitor_inv(m))]:
        assert D.cell_then(fwd, inv) == D.cell_id(fwd.top)
        assert D.cell_then(inv, fwd) == D.cell_id(m)


def test_collapse_cells_compose_horizontally():
    # cells id_2 => id_1 glue to a cell whose apex map sends everything to 0
    collapse = D.cell(D.pro_id(TWO), D.pro_id(ONE), fn([0, 0], 1), fn([0, 0], 1), fn([0, 0], 1))
    m = D.cospan(TWO, FinSet(3), TWO, fn([0, 1], 3), fn([1, 2], 3))
    c = D.cell(m, D.pro_id(ONE), fn([0, 0], 1), fn([0, 0], 1), fn([0, 0, 0], 1))
    h = D.cell_compose(c, collapse)
    assert h.apex_map.table == (0, 0, 0)
    assert D.cell_compose(collapse, collapse).apex_map.table == (0, 0)
    with pytest.raises(FrameError):
        D.cell_compose(c, D.cell_id(D.pro_id(ONE)))


def test_restriction_precomposes_legs():
    m = D.cospan(ONE, TWO, ONE, fn([0], 2), fn([1], 2))
    res, cell = D.restrict(fn([0, 0], 1), FinFunction.identity(ONE), m)
    assert res.foot_l == TWO and res.leg_l.table == (0, 0) and res.leg_r == m.leg_r
    assert cell.apex_map == FinFunction.identity(TWO)
    empty, _ = D.restrict(FinFunction(FinSet(0), ONE, ()), FinFunction.identity(ONE), m)
    assert empty.foot_l == FinSet(0)
    with pytest.raises(FrameError):
        D.restrict(FinFunction.identity(TWO), FinFunction.identity(ONE), m)


def test_factor_through_empty_apex():
    zero = FinSet(0)
    m = D.pro_id(zero)
    res, cell = D.restrict(FinFunction.identity(zero), FinFunction.identity(zero), m)
    beta = D.factor(D.cell_id(m), FinFunction.identity(zero), FinFunction.identity(zero),
                    FinFunction.identity(zero), FinFunction.identity(zero))
    assert D.cell_then(beta, cell) == D.cell_id(m)


def test_coproduct_with_initial_is_unchanged():
    m = D.cospan(TWO, FinSet(3), ONE, fn([0, 2], 3), fn([1], 3))
    s, inl, _ = D.pro_coproduct(m, D.pro_initial())
    assert s == m
    assert inl == D.cell_id(m)


def test_open_graph_coproduct_is_disjoint_union():
    g = SCSP_DISCRETE
    e = Graph.from_edges(2, [(0, 1)])
    vs = GRAPH.homs(g.L(ONE), e)
    src, tgt = sorted(vs, key=lambda h: h.vmap.table)
    edge = g.cospan(ONE, e, ONE, src, tgt)
    s, _, _ = g.pro_coproduct(edge, edge)
    assert (s.apex.vertices.size, s.apex.edges.size) == (4, 2)
    assert s.foot_l == TWO and s.foot_r == TWO
    assert s.leg_l.vmap.table == (0, 2)


@given(open_graphs(max_foot=1, max_vertices=2, max_edges=1, foot_r=1),
       open_graphs(max_foot=1, max_vertices=2, max_edges=1, foot_l=1))
def test_open_graph_composition_counts(m, n):
    mn = SCSP_DISCRETE.pro_compose(m, n)
    # the shared foot identifies one vertex of m with one of n
    assert mn.apex.vertices.size == m.apex.vertices.size + n.apex.vertices.size - 1
    assert mn.apex.edges.size == m.apex.edges.size + n.apex.edges.size
    assert SCSP_DISCRETE.is_cospan(mn)


def test_small_laws():
    feet = [FinSet(n) for n in range(2)]
    pros = list(D.cospans(feet, feet))
    s = make_sample(D, objects=feet, pros=pros, cells=D.all_cells(pros), limit=200)
    assert check_pseudocategory(D, s).ok
    assert check_cocartesian(D, s).ok


def test_csp_of_graphs():
    G = csp(GRAPH)
    assert G.name == "Csp(Graph)"
    e = Graph.from_edges(2, [(0, 1)])
    m = G.pro_id(e)
    assert isinstance(m, Cospan) and G.pro_compose(m, m).apex == e
