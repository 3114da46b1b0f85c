import pytest
from hypothesis import given, strategies as st

from opencat.dblcore import check_lax_double_functor, make_sample
from opencat.decorated import (CSP, CSP_FREECAT, GraphFiber, apex_functor, dcsp,
                               decorated_compose, decorated_coproduct, decorated_identity,
                               decorated_restrict, graph_decoration, open_graph_equivalence,
                               process_theories, to_decorated, to_structured)
from opencat.errors import BoundaryError
from opencat.fincat import Path, check_functor, free_cat
from opencat.fincolim import FinFunction, FinSet, Graph, GraphHom, finsets, functions
from opencat.grothendieck import GrothPro
from opencat.structured import SCSP_DISCRETE

from strategies import functions as fn_st, graphs as graph_st, open_graphs

F = graph_decoration(2)
G = dcsp(F)


@pytest.mark.parametrize("n,max_edges,count", [(0, 1, 1), (1, 1, 2), (2, 1, 5), (1, 2, 3)])
def test_fibre_object_counts(n, max_edges, count):
    assert len(GraphFiber(n, max_edges).objects()) == count


def test_fibre_homs_fix_vertices():
    C = GraphFiber(2)
    e = Graph.from_edges(2, [(0, 1)])
    ee = Graph.from_edges(2, [(0, 1), (0, 1)])
    assert len(C.hom(e, ee)) == 2
    assert C.hom(ee, Graph.from_edges(2)) == []
    assert C.has_object(ee) and not C.has_object(Graph.from_edges(3))


@given(fn_st(max_size=2), fn_st(max_size=2))
def test_decoration_is_a_functor(f, g):
    if f.cod != g.dom:
        return
    Ff = F.on_arr(f)
    assert check_functor(Ff) == []
    for x in F.on_ob(f.dom).objects():
        assert F.on_arr(f.then(g)).on_ob(x) == F.on_arr(g).on_ob(Ff.on_ob(x))


@given(graph_st(2, 1), graph_st(2, 1), graph_st(2, 1))
def test_laxator_is_associative(x, y, z):
    a, b, c = x.vertices, y.vertices, z.vertices
    ab = FinSet(a.size + b.size)
    bc = FinSet(b.size + c.size)
    left = F.laxator(ab, c).on_ob((F.laxator(a, b).on_ob((x, y)), z))
    right = F.laxator(a, bc).on_ob((x, F.laxator(b, c).on_ob((y, z))))
    assert left == right
    empty = F.unit().on_ob(0)
    assert F.laxator(FinSet(0), a).on_ob((empty, x)) == x


def test_apex_laxator_is_the_surjection_onto_the_pushout():
    p = CSP.cospan(FinSet(1), FinSet(2), FinSet(1), FinFunction.make([0], 2),
                   FinFunction.make([1], 2))
    lax = apex_functor().laxator(p, p)
    assert lax.dom == FinSet(4) and lax.cod == FinSet(3)
    assert lax.is_surjective() and not lax.is_injective()
    assert apex_functor().unitor(FinSet(2)) == FinFunction(FinSet(0), FinSet(2), ())


def test_apex_functor_laws():
    pros = list(CSP.cospans(finsets(1), finsets(2)))
    s = make_sample(CSP, objects=finsets(1), pros=pros, cells=CSP.all_cells(pros, limit=100),
                    limit=100)
    r = check_lax_double_functor(apex_functor(), s)
    assert r.ok, str(r)
    assert not r.flags["pseudo"]


@given(open_graphs(max_foot=2, max_vertices=2, max_edges=1, foot_r=1),
       open_graphs(max_foot=2, max_vertices=2, max_edges=1, foot_l=1))
def test_closed_formula_matches_the_construction(m, n):
    p, q = to_decorated(m), to_decorated(n)
    composite = G.pro_compose(p, q)
    assert composite.dec == decorated_compose(F, p.base, p.dec, q.base, q.dec)
    assert composite == to_decorated(SCSP_DISCRETE.pro_compose(m, n))
    assert to_structured(p) == m


@given(st.integers(0, 3))
def test_identity_decoration_is_edgeless(k):
    a = FinSet(k)
    idd = G.pro_id(G.ob(a, 0))
    assert idd.base == CSP.pro_id(a)
    assert idd.dec == decorated_identity(F, a) == Graph.from_edges(k)


def test_translation_examples():
    e = Graph.from_edges(2, [(0, 1)])
    none = FinFunction(FinSet(0), FinSet(1), ())
    src = GraphHom(Graph.from_edges(1), e, FinFunction.make([0], 2), none)
    tgt = GraphHom(Graph.from_edges(1), e, FinFunction.make([1], 2), none)
    m = SCSP_DISCRETE.cospan(FinSet(1), e, FinSet(1), src, tgt)
    d = to_decorated(m)
    assert d.base.leg_l.table == (0,) and d.base.leg_r.table == (1,)
    assert d.dec == e
    with pytest.raises(BoundaryError):
        to_structured(GrothPro(d.base, Graph.from_edges(3)))


def test_restriction_and_coproduct_keep_decorations():
    e = Graph.from_edges(2, [(0, 1)])
    base = CSP.cospan(FinSet(1), FinSet(2), FinSet(1), FinFunction.make([0], 2),
                      FinFunction.make([1], 2))
    p = GrothPro(base, e)
    r = decorated_restrict(FinFunction.make([0, 0], 1), FinFunction.identity(FinSet(1)), p)
    assert r.dec == e and r.base.foot_l == FinSet(2)
    s = decorated_coproduct(F, p, p)
    assert s.dec == Graph.from_edges(4, [(0, 1), (2, 3)])
    assert s.base.foot_l == FinSet(2)


def test_small_equivalence_report():
    r = open_graph_equivalence(max_foot=1, max_vertices=2, max_edges=1, limit=100,
                               max_cells=200)
    assert r.ok, str(r)
    assert r.laws["composites"].checked > 0


# -- process theories ---------------------------------------------------------

def _walking_arrow_cospan():
    pt, e = Graph.from_edges(1), Graph.from_edges(2, [(0, 1)])
    none = FinFunction(FinSet(0), FinSet(1), ())
    start = GraphHom(pt, e, FinFunction.make([0], 2), none)
    end = GraphHom(pt, e, FinFunction.make([1], 2), none)
    return CSP_FREECAT.cospan(pt, e, pt, start, end)


def test_process_composite_is_a_two_step_path():
    P = process_theories()
    m = _walking_arrow_cospan()
    apex = P.apex(m)
    proc, = apex.objects()
    p = P.pro(m, proc)
    pp = P.pro_compose(p, p)
    assert pp.dec.f == Path(0, 2, (0, 1))
    assert P.pro_src(pp) == P.pro_src(p) and P.pro_tgt(pp) == P.pro_tgt(p)


def test_process_identity_is_identity_morphism():
    P = process_theories()
    a = Graph.from_edges(2, [(0, 1)])
    x = P.ob(a, 1)
    idp = P.pro_id(x)
    assert idp.base == CSP_FREECAT.pro_id(a)
    assert idp.dec.f == free_cat(a).identity(1)


def test_process_feet_must_match():
    P = process_theories()
    m = _walking_arrow_cospan()
    p = P.pro(m, P.apex(m).objects()[0])
    two = Graph.from_edges(2)
    q = P.pro_id(P.ob(two, 0))
    with pytest.raises(BoundaryError):
        P.pro_compose(p, q)


def test_functions_enumerated_for_decorations():
    # every relabelling of an edge between two points is again a decoration
    e = Graph.from_edges(2, [(0, 1)])
    images = {F.on_arr(f).on_ob(e) for f in functions(FinSet(2), FinSet(2))}
    assert len(images) == 4 and all(isinstance(g, Graph) for g in images)
