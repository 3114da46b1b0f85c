"""Deliberately broken variants of the constructions, used to show the checks bite.

Each fixture's ``run()`` returns ``(detected, detail)``: ``detected`` is true
when the expected error is raised or the expected law fails in the report.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cospan import CospanCell, CospanDouble
from .dblcore import Report, check_cocartesian, check_pseudocategory, make_sample
from .errors import BoundaryError, CyclicGraphError, NaturalityError
from .fincolim import (DISCRETE, FINSET, FinFunction, FinSet, Graph, GraphHom, finsets, graphs,
                       identity_functor)
from .fincat import FreeCat

__all__ = ["Mutant", "MUTANTS", "get_mutant"]


@dataclass
class Mutant:
    name: str
    description: str
    expect: str
    run: Callable[[], tuple]


def _swap_top(f: FinFunction) -> FinFunction:
    """Postcompose with the transposition of the last two elements."""
    n = f.cod.size
    if n < 2:
        return f
    sw = list(range(n))
    sw[-2], sw[-1] = sw[-1], sw[-2]
    return f.then(FinFunction(f.cod, f.cod, tuple(sw)))


class _CorruptAssociator(CospanDouble):
    def associator(self, m, n, p):
        c = super().associator(m, n, p)
        return CospanCell(c.top, c.bottom, c.left, c.right, _swap_top(c.apex_map))


class _BrokenComparison(CospanDouble):
    def cmp_compose_inv(self, m, n, m2, n2):
        return self.cmp_compose(m, n, m2, n2)


def _report_detail(r: Report, law_prefix: str = "") -> tuple:
    bad = {k: e for k, e in r.failures().items() if k.startswith(law_prefix)}
    if not bad:
        return False, "no failing law"
    k, e = next(iter(bad.items()))
    return True, f"{k}: {e.failed}/{e.checked} failed, witness {e.witnesses[0]}"


def _corrupted_associator():
    D = _CorruptAssociator(identity_functor(FINSET), "Csp(FinSet)*")
    feet = finsets(2)
    pros = list(D.cospans(feet, finsets(2)))
    s = make_sample(D, objects=feet, pros=pros, limit=300)
    return _report_detail(check_pseudocategory(D, s))


def _non_natural_alpha():
    from .structured import NatTrans

    def swap(a):
        t = tuple(reversed(range(a.size)))
        return DISCRETE.on_arr(FinFunction(a, a, t))
    try:
        NatTrans(DISCRETE, DISCRETE, swap, check_on=finsets(2), name="reverse")
    except NaturalityError as exc:
        return True, f"NaturalityError: {exc}"
    return False, "reversal accepted as natural"


def _non_pushout_preserving():
    from .structured import LOOPS, scsp, square_map
    F = square_map(direct=True)
    D = scsp(LOOPS)
    feet = finsets(1)
    pros = list(D.cospans(feet, graphs(2, 2)))
    r = Report(f"pseudo {F.name}")
    s = make_sample(D, objects=feet, pros=pros, limit=200)
    for m, n in s.pairs:
        r.check("laxator invertible", lambda: F.cod.cell_is_invertible(F.laxator(m, n)), (m, n))
    return _report_detail(r)


def _broken_comparison_inverse():
    D = _BrokenComparison(DISCRETE, "SCsp(discrete)*")
    feet = finsets(1)
    pros = list(D.cospans(feet, graphs(1, 1)))
    s = make_sample(D, objects=feet, pros=pros, limit=30)
    return _report_detail(check_cocartesian(D, s, uniqueness=False), "comparison (m⊙n)")


def _decoration_mismatch():
    from .decorated import CSP_FREECAT, process_theories
    P = process_theories()
    one, two = Graph.from_edges(1), Graph.from_edges(2)
    # b = two points; m ends at the first point of b, n starts at the second
    none = FinFunction(FinSet(0), FinSet(0), ())
    leg0 = GraphHom(one, two, FinFunction(FinSet(1), FinSet(2), (0,)), none)
    leg1 = GraphHom(one, two, FinFunction(FinSet(1), FinSet(2), (1,)), none)
    m = CSP_FREECAT.cospan(one, two, two, leg0, GraphHom.identity(two))
    n = CSP_FREECAT.cospan(two, two, one, GraphHom.identity(two), leg1)
    sm = next(x for x in P.apex(m).objects() if x.b == 0)
    sn = next(x for x in P.apex(n).objects() if x.a == 1)
    try:
        P.pro_compose(P.pro(m, sm), P.pro(n, sn))
    except BoundaryError as exc:
        return True, f"BoundaryError: {exc}"
    return False, "mismatched decorations composed"


def _cyclic_free_category():
    from .decorated import CSP_FREECAT
    errors = []
    try:
        FreeCat(Graph.from_edges(1, [(0, 0)]))
    except CyclicGraphError as exc:
        errors.append(f"loop: {exc}")
    one, two = Graph.from_edges(1), Graph.from_edges(2)
    fwd, bwd = Graph.from_edges(2, [(0, 1)]), Graph.from_edges(2, [(1, 0)])
    pt = lambda g, v: GraphHom(one, g, FinFunction(FinSet(1), FinSet(2), (v,)),
                               FinFunction(FinSet(0), g.edges, ()))
    on_vertices = lambda g: GraphHom(two, g, FinFunction.identity(FinSet(2)),
                                     FinFunction(FinSet(0), g.edges, ()))
    m = CSP_FREECAT.cospan(one, fwd, two, pt(fwd, 0), on_vertices(fwd))
    n = CSP_FREECAT.cospan(two, bwd, one, on_vertices(bwd), pt(bwd, 0))
    try:
        CSP_FREECAT.pro_compose(m, n)
    except CyclicGraphError as exc:
        errors.append(f"pushout: {exc}")
    return len(errors) == 2, "; ".join(errors) or "no error raised"


MUTANTS = [
    Mutant("corrupted-associator", "associator apex map postcomposed with a transposition",
           "pseudocategory report fails", _corrupted_associator),
    Mutant("non-natural-alpha", "reversal of finite sets offered as a transformation "
           "discrete => discrete", "NaturalityError", _non_natural_alpha),
    Mutant("non-pushout-preserving", "square functor on apexes, so laxators are not invertible",
           "pseudo check fails", _non_pushout_preserving),
    Mutant("broken-comparison-inverse", "inverse of the compose comparison returns the "
           "forward cell", "cocartesian report fails", _broken_comparison_inverse),
    Mutant("decoration-mismatch", "process-theory proarrows whose boundary objects differ",
           "BoundaryError", _decoration_mismatch),
    Mutant("cyclic-free-category", "free category on a loop, and a pushout of acyclic "
           "graphs that creates a cycle", "CyclicGraphError", _cyclic_free_category),
]


def get_mutant(name: str) -> Mutant:
    for m in MUTANTS:
        if m.name == name:
            return m
    raise KeyError(name)
