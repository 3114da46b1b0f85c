import pytest

from opencat.cospan import CSP_FINSET
from opencat.dblcore import check_lax_double_functor, check_pseudocategory, make_sample
from opencat.errors import BoundaryError
from opencat.fincat import Mor, TERMINAL
from opencat.fincolim import FinFunction, FinSet, finsets
from opencat.grothendieck import (GrothOb, GrothPro, Grothendieck, groth_cells, groth_pros,
                                  projection, section, trivial_functor)
from opencat.suites import instance_sample

C = CSP_FINSET
G = Grothendieck(trivial_functor(C))


def base_sample():
    return instance_sample(C, finsets(1), finsets(2), max_cells=150, limit=150)


def test_trivial_fibres_are_terminal():
    assert G.fiber(FinSet(2)) == TERMINAL
    assert G.ob(FinSet(1), 0) == GrothOb(FinSet(1), 0)
    with pytest.raises(BoundaryError):
        G.ob(FinSet(1), 1)


def test_identity_proarrow_lies_over_identity():
    x = G.ob(FinSet(2), 0)
    assert G.pro_id(x) == GrothPro(C.pro_id(FinSet(2)), 0)
    f = G.arr_id(x)
    assert f.base == FinFunction.identity(FinSet(2)) and f.fiber == Mor(0, 0)


def test_composition_mismatch_raises():
    m = G.pro_id(G.ob(FinSet(1), 0))
    n = G.pro_id(G.ob(FinSet(2), 0))
    with pytest.raises(BoundaryError):
        G.pro_compose(m, n)


def test_section_and_projection_are_inverse():
    base = base_sample()
    sec, proj = section(G), projection(G)
    for m in base.pros:
        assert proj.on_pro(sec.on_pro(m)) == m
    for c in base.cells:
        assert proj.on_cell(sec.on_cell(c)) == c
        assert sec.on_cell(proj.on_cell(sec.on_cell(c))) == sec.on_cell(c)
    r = check_lax_double_functor(sec, base)
    assert r.ok and r.flags["strict"]


def test_trivial_construction_is_a_pseudocategory_with_strict_projection():
    base = base_sample()
    pros = groth_pros(G, base.pros)
    assert len(pros) == len(base.pros)
    cells = groth_cells(G, base.cells, pros)
    assert len(cells) == len(base.cells)
    objs = [GrothOb(a, 0) for a in base.objects]
    s = make_sample(G, objects=objs, pros=pros, cells=cells, limit=150)
    assert check_pseudocategory(G, s).ok
    r = check_lax_double_functor(projection(G), s)
    assert r.ok and r.flags["strict"]


def test_lifted_coherence_cells_are_invertible():
    m = GrothPro(C.cospan(FinSet(1), FinSet(2), FinSet(1), FinFunction.make([0], 2),
                          FinFunction.make([1], 2)), 0)
    a = G.associator(m, m, m)
    assert G.cell_is_invertible(a)
    inv = G.cell_inverse(a)
    assert G.cell_then(a, inv) == G.cell_id(a.top)
    assert G.cell_then(G.left_unitor_inv(m), G.left_unitor(m)) == G.cell_id(m)
