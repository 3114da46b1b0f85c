"""Each mutation fixture is caught, and its unmutated counterpart is not."""
import pytest

from opencat.cospan import CSP_FINSET
from opencat.dblcore import check_cocartesian, check_pseudocategory, make_sample
from opencat.decorated import CSP_FREECAT
from opencat.fincat import free_cat
from opencat.fincolim import DISCRETE, FinFunction, FinSet, Graph, GraphHom, finsets, graphs
from opencat.mutants import MUTANTS, get_mutant
from opencat.structured import DISCRETE_TO_LOOPS, NatTrans, SCSP_DISCRETE, identity_nat
from opencat.suites import mutant_suite


@pytest.mark.parametrize("name", [m.name for m in MUTANTS])
def test_mutant_is_detected(name):
    detected, detail = get_mutant(name).run()
    assert detected, detail
    assert detail


def test_there_are_six_fixtures():
    assert len(MUTANTS) == 6
    r = mutant_suite()
    assert r.ok and len(r.laws) == 6
    with pytest.raises(KeyError):
        get_mutant("nope")


def test_control_associator():
    feet = finsets(2)
    pros = list(CSP_FINSET.cospans(feet, finsets(2)))
    s = make_sample(CSP_FINSET, objects=feet, pros=pros, limit=300)
    assert check_pseudocategory(CSP_FINSET, s).ok


def test_control_natural_transformations():
    NatTrans(DISCRETE, DISCRETE, lambda a: DISCRETE.on_arr(FinFunction.identity(a)),
             check_on=finsets(2))
    assert identity_nat(DISCRETE).name == "1_discrete"
    assert DISCRETE_TO_LOOPS(FinSet(1)).vmap == FinFunction.identity(FinSet(1))


def test_control_comparison_inverse():
    feet = finsets(1)
    pros = list(SCSP_DISCRETE.cospans(feet, graphs(1, 1)))
    s = make_sample(SCSP_DISCRETE, objects=feet, pros=pros, limit=30)
    assert check_cocartesian(SCSP_DISCRETE, s, uniqueness=False).ok


def test_control_acyclic_pushout():
    one, fwd = Graph.from_edges(1), Graph.from_edges(2, [(0, 1)])
    none = FinFunction(FinSet(0), FinSet(1), ())
    end = GraphHom(one, fwd, FinFunction.make([1], 2), none)
    start = GraphHom(one, fwd, FinFunction.make([0], 2), none)
    m = CSP_FREECAT.cospan(one, fwd, one, start, end)
    path = CSP_FREECAT.pro_compose(m, m).apex
    assert len(free_cat(path).hom(0, 2)) == 1


def test_report_detail_names_the_law():
    detected, detail = get_mutant("corrupted-associator").run()
    assert detected and "associat" in detail
