import pytest

from opencat.cospan import Cospan
from opencat.dblcore import check_lax_double_functor, identity_lax, make_sample
from opencat.errors import NaturalityError, NotInvertibleError
from opencat.fincolim import (DISCRETE, FINSET, GRAPH, VERTICES, FinFunction, FinSet,
                              GraphHom, discrete, finsets, graphs, identity_functor)
from opencat.structured import (DISCRETE_TO_LOOPS, LOOPS, POINTED, SCSP_DISCRETE, NatTrans,
                                compare_lax, identity_nat, sc_map, sc_map_transform, scsp,
                                square_map)
from opencat.suites import instance_sample


def _sample(D, max_foot=1, max_vertices=2, max_edges=1, max_cells=150):
    return instance_sample(D, finsets(max_foot), graphs(max_vertices, max_edges),
                           max_cells=max_cells, limit=150, quad_limit=1, cell_limit=100)


def test_identity_map_is_strict():
    D = SCSP_DISCRETE
    F = sc_map(DISCRETE, DISCRETE, identity_functor(FINSET), identity_functor(GRAPH),
               identity_nat(DISCRETE))
    r = check_lax_double_functor(F, _sample(D))
    assert r.ok, str(r)
    assert r.flags == {"normal": True, "pseudo": True, "strict": True}


def test_transform_along_inclusion_is_lax_not_normal():
    F = sc_map_transform(DISCRETE_TO_LOOPS)
    D = scsp(LOOPS)
    r = check_lax_double_functor(F, _sample(D))
    assert r.ok, str(r)
    assert r.flags["normal"] is False and r.flags["pseudo"] is False
    a = FinSet(2)
    u = F.unitor(a)
    assert u.apex_map == DISCRETE_TO_LOOPS(a)


def test_swap_is_not_natural():
    def swap(a):
        t = tuple(reversed(range(a.size)))
        return GraphHom(discrete(a), discrete(a), FinFunction(a, a, t),
                        FinFunction(FinSet(0), FinSet(0), ()))
    with pytest.raises(NaturalityError):
        NatTrans(DISCRETE, DISCRETE, swap, check_on=[FinSet(n) for n in range(3)])


def test_composite_agrees_with_direct_formulas():
    D = scsp(LOOPS)
    s = _sample(D, max_cells=300)
    r = compare_lax(square_map(), square_map(direct=True), s)
    assert r.ok, str(r)
    assert r.laws["laxators"].checked > 0 and r.laws["cells"].checked > 0


def test_square_map_is_lax_but_not_pseudo():
    r = check_lax_double_functor(square_map(direct=True), _sample(scsp(LOOPS)))
    assert r.ok, str(r)
    assert r.flags["pseudo"] is False


def test_vertices_of_discrete_is_pseudo():
    # VERTICES ∘ DISCRETE is the identity, which preserves pushouts, so the
    # codomain step along VERTICES is a pseudo map on SCsp(discrete)
    from opencat.structured import sc_map_codomain
    F = sc_map_codomain(DISCRETE, VERTICES)
    r = check_lax_double_functor(F, _sample(SCSP_DISCRETE))
    assert r.ok, str(r)
    assert r.flags["pseudo"] is True


def test_pointed_feet_have_no_coproducts():
    D = scsp(POINTED)
    m = D.pro_id(FinSet(1))
    with pytest.raises(NotInvertibleError):
        D.pro_coproduct(m, m)


def test_loops_legs_hit_loop_edges():
    m = scsp(LOOPS).pro_id(FinSet(2))
    assert isinstance(m, Cospan)
    assert m.apex.edges.size == 2
    assert m.leg_l.emap == FinFunction.identity(FinSet(2))


def test_identity_lax_on_structured_cospans():
    D = SCSP_DISCRETE
    s = make_sample(D, objects=finsets(1), pros=list(D.cospans(finsets(1), graphs(1, 1))))
    assert check_lax_double_functor(identity_lax(D), s).flags["strict"]
