import random

import pytest
from hypothesis import given, strategies as st

from opencat.errors import BoundaryError, CyclicGraphError
from opencat.fincat import (FREECAT, SPAN_CAT, TERMINAL, CommaCat, FinFunctor, Path,
                            PullbackCat, TableCat, bang_functor, check_category, check_functor,
                            free_cat, free_functor, functors, identity_functor, product_cat,
                            random_table_cats)
from opencat.fincolim import FinFunction, FinSet, Graph, GraphHom, graph_homs

ARROW = free_cat(Graph.from_edges(2, [(0, 1)]))


def constant(C, D, x):
    return FinFunctor(C, D, lambda _: x, lambda f: D.identity(x), f"const{x}")


@pytest.mark.parametrize("n,edges,count", [
    (1, [], 1),
    (2, [(0, 1)], 3),
    (3, [(0, 1), (1, 2)], 6),
])
def test_free_category_morphism_counts(n, edges, count):
    C = free_cat(Graph.from_edges(n, edges))
    assert len(C.morphisms()) == count
    assert check_category(C) == []


def test_parallel_edges_give_distinct_paths():
    C = free_cat(Graph.from_edges(2, [(0, 1), (0, 1)]))
    assert len(C.hom(0, 1)) == 2


def test_cyclic_graph_is_rejected():
    with pytest.raises(CyclicGraphError):
        free_cat(Graph.from_edges(1, [(0, 0)]))
    with pytest.raises(CyclicGraphError):
        free_cat(Graph.from_edges(2, [(0, 1), (1, 0)]))


def test_freecat_pushout_rejects_cycles():
    one = Graph.from_edges(2)
    e = Graph.from_edges(2, [(0, 1)])
    ident = FinFunction.identity(FinSet(2))
    twist = FinFunction.make([1, 0], 2)
    none = FinFunction(FinSet(0), FinSet(1), ())
    f = GraphHom(one, e, ident, none)
    g = GraphHom(one, e, twist, none)
    with pytest.raises(CyclicGraphError):
        FREECAT.pushout(f, g)


def test_walking_arrow_squared():
    P = product_cat(ARROW, ARROW)
    assert len(P.objects()) == 4
    assert len(P.morphisms()) == 9
    assert check_category(P) == []


def test_empty_pullback():
    one = free_cat(Graph.from_edges(1))
    F = constant(one, ARROW, 0)
    G = constant(one, ARROW, 1)
    P = PullbackCat(F, G)
    assert P.objects() == [] and P.morphisms() == []


def test_comma_over_terminal_is_terminal():
    one = identity_functor(TERMINAL)
    C = CommaCat(one, one)
    assert len(C.objects()) == 1 and len(C.morphisms()) == 1


def test_comma_of_arrow_over_itself():
    i = identity_functor(ARROW)
    C = CommaCat(i, i)
    # objects are the three morphisms of the arrow category
    assert len(C.objects()) == 3
    assert check_category(C) == []
    assert check_functor(C.proj_left()) == [] and check_functor(C.proj_right()) == []


def _hom_sum(i, o):
    """Oracle: number of comma objects is the sum of |X(i a, o b)|."""
    return sum(len(i.cod.hom(i.on_ob(a), o.on_ob(b)))
               for a in i.dom.objects() for b in o.dom.objects())


@given(st.integers(0, 10_000))
def test_comma_object_count_matches_hom_sum(seed):
    rng = random.Random(seed)
    X = random_table_cats(rng, 1)[0]
    A, B = random_table_cats(rng, 2)
    Fs, Gs = functors(A, X), functors(B, X)
    if not Fs or not Gs:
        return
    i, o = rng.choice(Fs), rng.choice(Gs)
    C = CommaCat(i, o)
    assert len(C.objects()) == _hom_sum(i, o)
    assert check_category(C) == []


@given(st.integers(0, 10_000))
def test_functors_from_walking_arrow_are_morphisms(seed):
    C = random_table_cats(random.Random(seed), 1)[0]
    assert len(functors(ARROW, C)) == len(C.morphisms())


def test_table_round_trip_and_validation():
    C = TableCat.poset(3, [(0, 1), (1, 2)])
    assert len(C.morphisms()) == 6
    assert TableCat.from_json(C.tabulate()) == C
    with pytest.raises(BoundaryError):
        TableCat(2, [(0, 1), (1, 0)], {})
    with pytest.raises(BoundaryError):
        TableCat.poset(2, [(0, 1), (1, 0)])


def test_monoid_category():
    Z3 = TableCat.monoid(3, lambda i, j: (i + j) % 3)
    assert len(Z3.morphisms()) == 3
    assert check_category(Z3) == []
    assert len(functors(Z3, Z3)) == 3


def test_free_functor_maps_paths():
    two = Graph.from_edges(3, [(0, 1), (1, 2)])
    e = Graph.from_edges(2, [(0, 1)])
    hs = list(graph_homs(e, two))
    assert len(hs) == 2
    for h in hs:
        F = free_functor(h)
        assert check_functor(F) == []
        assert F(Path(0, 1, (0,))).edges == (h.emap(0),)


def test_span_composition_of_identities():
    S = SPAN_CAT
    m = S.pro_id(ARROW)
    mm = S.pro_compose(m, m)
    assert len(mm.apex.objects()) == 2
    lam = S.left_unitor(m)
    assert S.cell_then(S.left_unitor_inv(m), lam) == S.cell_id(m)
    assert bang_functor(ARROW).cod == TERMINAL


def test_unitor_and_laxator_of_comma():
    from opencat.decorated import CSP_FREECAT, comma_functor
    D = CSP_FREECAT
    F = comma_functor()
    e = Graph.from_edges(2, [(0, 1)])
    u = F.unitor(e)
    hit = {u.apex_map.on_ob(x) for x in ARROW.objects()}
    # two of the three comma objects over the walking arrow are identities
    assert len(hit) == 2 and len(u.bottom.apex.objects()) == 3
    pt = Graph.from_edges(1)
    none = FinFunction(FinSet(0), FinSet(1), ())
    end = GraphHom(pt, e, FinFunction.make([1], 2), none)
    start = GraphHom(pt, e, FinFunction.make([0], 2), none)
    m = D.cospan(pt, e, pt, start, end)
    lax = F.laxator(m, m)
    # the composite path through the glued vertex appears in the comma of m⊙m
    top_ob, = lax.top.apex.objects()
    img = lax.apex_map.on_ob(top_ob)
    assert len(img.f.edges) == 2
