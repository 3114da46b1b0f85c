"""Structured cospans and the maps between their double categories.

``SCsp(L)`` for ``L: A -> X`` is :class:`opencat.cospan.CospanDouble`.  This
module adds example feet functors, natural transformations, and the lax
double functors induced by a square

    A  --L-->  X
    |F0        |F1        with  α: L'∘F0 ⇒ F1∘L
    A' --L'--> X'

built in two ways: as a composite of three elementary maps
(:func:`sc_map_codomain`, :func:`sc_map_transform`, :func:`sc_map_base`) and
directly (:func:`sc_map`).  The two agree on proarrows, cells and comparison
cells, which :func:`compare_lax` checks.
"""
from __future__ import annotations

from .cospan import Cospan, CospanCell, CospanDouble
from .dblcore import LaxDoubleFunctor, Report, compose_lax
from .errors import NaturalityError
from .fincolim import (DISCRETE, FINSET, GRAPH, FinFunction, FinSet, Functor, Graph,
                       GraphHom, discrete, discrete_on, functions, graph_homs)

__all__ = [
    "scsp", "LOOPS", "POINTED", "SQUARE", "GRAPH_SQUARE", "NatTrans", "identity_nat",
    "sc_map_base", "sc_map_codomain", "sc_map_transform", "sc_map_composite",
    "sc_map", "compare_lax", "SCSP_DISCRETE", "DISCRETE_TO_LOOPS", "SQUARE_INCL",
    "square_map",
]


def scsp(L: Functor, name: str | None = None) -> CospanDouble:
    """The structured cospan double category ``SCsp(L)``."""
    return CospanDouble(L, name)


SCSP_DISCRETE = scsp(DISCRETE)


# ---------------------------------------------------------------------------
# Example functors


def _loops(a: FinSet) -> Graph:
    return Graph.from_edges(a.size, [(i, i) for i in range(a.size)])


def _loops_on(f: FinFunction) -> GraphHom:
    return GraphHom(_loops(f.dom), _loops(f.cod), f, f)


LOOPS = Functor(FINSET, GRAPH, _loops, _loops_on, "loops")
"""Discrete graph with one loop at every vertex.  Preserves all colimits."""


def _pointed(a: FinSet) -> Graph:
    return discrete(FinSet(a.size + 1))


def _pointed_on(f: FinFunction) -> GraphHom:
    return discrete_on(FinFunction(FinSet(f.dom.size + 1), FinSet(f.cod.size + 1),
                                   f.table + (f.cod.size,)))


POINTED = Functor(FINSET, GRAPH, _pointed, _pointed_on, "pointed")
"""``a ↦ discrete(a + 1)``: preserves pushouts of nonempty spans, not coproducts."""


def _square(a: FinSet) -> FinSet:
    return FinSet(a.size * a.size)


def _square_on(f: FinFunction) -> FinFunction:
    n, m = f.dom.size, f.cod.size
    return FinFunction(_square(f.dom), _square(f.cod),
                       tuple(f(i) * m + f(j) for i in range(n) for j in range(n)))


SQUARE = Functor(FINSET, FINSET, _square, _square_on, "square")
"""``a ↦ a × a`` on finite sets; preserves neither coproducts nor pushouts."""


def _graph_square(g: Graph) -> Graph:
    n = g.vertices.size
    es = [(s1 * n + s2, t1 * n + t2) for s1, t1 in g.edge_list for s2, t2 in g.edge_list]
    return Graph.from_edges(n * n, es)


def _graph_square_on(h: GraphHom) -> GraphHom:
    return GraphHom(_graph_square(h.dom), _graph_square(h.cod), _square_on(h.vmap),
                    _square_on(h.emap))


GRAPH_SQUARE = Functor(GRAPH, GRAPH, _graph_square, _graph_square_on, "square")
"""The categorical product ``G × G`` of graphs."""


# ---------------------------------------------------------------------------
# Natural transformations


class NatTrans:
    """A natural transformation ``src ⇒ tgt`` given by its components.

    Naturality is verified at construction on every arrow between the
    objects in ``check_on`` (enumerated with the domain category's ``homs``).
    """

    def __init__(self, src: Functor, tgt: Functor, component, check_on=(), name="α"):
        self.src, self.tgt = src, tgt
        self.component = component
        self.name = name
        C, X = src.dom, src.cod
        check_on = list(check_on)
        for a in check_on:
            c = component(a)
            if X.dom(c) != src.on_ob(a) or X.cod(c) != tgt.on_ob(a):
                raise NaturalityError(f"component of {name} at {a!r} has the wrong type")
        for a in check_on:
            for b in check_on:
                for f in C.homs(a, b):
                    if X.then(src.on_arr(f), component(b)) != X.then(component(a), tgt.on_arr(f)):
                        raise NaturalityError(
                            f"{name} is not natural: square at {f!r} does not commute")

    def __call__(self, a):
        return self.component(a)


def identity_nat(F: Functor) -> NatTrans:
    return NatTrans(F, F, lambda a: F.cod.identity(F.on_ob(a)), (), name=f"1_{F.name}")


DISCRETE_TO_LOOPS = NatTrans(
    DISCRETE, LOOPS,
    lambda a: GraphHom(discrete(a), _loops(a), FinFunction.identity(a),
                       FinFunction(FinSet(0), FinSet(a.size), ())),
    check_on=[FinSet(n) for n in range(3)], name="incl")
"""Inclusion of the discrete graph into the graph with loops."""

SQUARE_INCL = NatTrans(
    SQUARE.then(DISCRETE), LOOPS.then(GRAPH_SQUARE),
    lambda a: GraphHom(discrete(_square(a)), _graph_square(_loops(a)),
                       FinFunction.identity(_square(a)), FinFunction(FinSet(0), _square(a), ())),
    check_on=[FinSet(n) for n in range(3)], name="incl²")
"""``discrete(a×a) -> loops(a)×loops(a)``, the identity on vertices."""


# ---------------------------------------------------------------------------
# The three elementary maps


def sc_map_base(F0: Functor, L2: Functor) -> LaxDoubleFunctor:
    """``SCsp(L2∘F0) -> SCsp(L2)``, applying ``F0`` to the feet.  Strict."""
    D = scsp(F0.then(L2))
    E = scsp(L2)
    return LaxDoubleFunctor(
        D, E,
        on_ob=F0.on_ob, on_arr=F0.on_arr,
        on_pro=lambda m: Cospan(F0.on_ob(m.foot_l), m.apex, F0.on_ob(m.foot_r), m.leg_l, m.leg_r),
        on_cell=lambda c: CospanCell(
            Cospan(F0.on_ob(c.top.foot_l), c.top.apex, F0.on_ob(c.top.foot_r), c.top.leg_l, c.top.leg_r),
            Cospan(F0.on_ob(c.bottom.foot_l), c.bottom.apex, F0.on_ob(c.bottom.foot_r),
                   c.bottom.leg_l, c.bottom.leg_r),
            F0.on_arr(c.left), F0.on_arr(c.right), c.apex_map),
        laxator=lambda m, n: E.cell_id(E.pro_compose(*(
            Cospan(F0.on_ob(p.foot_l), p.apex, F0.on_ob(p.foot_r), p.leg_l, p.leg_r)
            for p in (m, n)))),
        unitor=lambda a: E.cell_id(E.pro_id(F0.on_ob(a))),
        name=f"base({F0.name})")


def _push_pro(F1, m):
    return Cospan(m.foot_l, F1.on_ob(m.apex), m.foot_r, F1.on_arr(m.leg_l), F1.on_arr(m.leg_r))


def sc_map_codomain(L: Functor, F1: Functor) -> LaxDoubleFunctor:
    """``SCsp(L) -> SCsp(F1∘L)``, applying ``F1`` to apexes and legs.

    The laxator is the canonical map from the pushout of the images to the
    image of the pushout; it is invertible exactly when ``F1`` preserves the
    pushouts involved.  The unitor is an identity.
    """
    D = scsp(L)
    E = scsp(L.then(F1))
    X2 = F1.cod

    def on_cell(c):
        return CospanCell(_push_pro(F1, c.top), _push_pro(F1, c.bottom), c.left, c.right,
                          F1.on_arr(c.apex_map))

    def laxator(m, n):
        po = D.composite_pushout(m, n)
        top = E.pro_compose(_push_pro(F1, m), _push_pro(F1, n))
        top_po = E.composite_pushout(_push_pro(F1, m), _push_pro(F1, n))
        h = X2.pushout_copair(top_po, F1.on_arr(po.ia), F1.on_arr(po.ib))
        return CospanCell(top, _push_pro(F1, D.pro_compose(m, n)),
                          E.arr_id(m.foot_l), E.arr_id(n.foot_r), h)

    def unitor(a):
        return E.cell_id(E.pro_id(a))

    return LaxDoubleFunctor(D, E, on_ob=lambda a: a, on_arr=lambda f: f,
                            on_pro=lambda m: _push_pro(F1, m), on_cell=on_cell,
                            laxator=laxator, unitor=unitor, name=f"codomain({F1.name})")


def sc_map_transform(alpha: NatTrans) -> LaxDoubleFunctor:
    """``α*: SCsp(L) -> SCsp(L2)`` for ``α: L2 ⇒ L``, precomposing legs with ``α``.

    Comparison cells: the laxator is the canonical map from the pushout over
    ``L2(b)`` to the pushout over ``L(b)``; the unitor has apex map ``α_a``.
    """
    L2, L = alpha.src, alpha.tgt
    D, E = scsp(L), scsp(L2)
    X = L.cod

    def on_pro(m):
        return Cospan(m.foot_l, m.apex, m.foot_r, X.then(alpha(m.foot_l), m.leg_l),
                      X.then(alpha(m.foot_r), m.leg_r))

    def on_cell(c):
        return CospanCell(on_pro(c.top), on_pro(c.bottom), c.left, c.right, c.apex_map)

    def laxator(m, n):
        po = D.composite_pushout(m, n)
        top_po = E.composite_pushout(on_pro(m), on_pro(n))
        h = X.pushout_copair(top_po, po.ia, po.ib)
        return CospanCell(E.pro_compose(on_pro(m), on_pro(n)), on_pro(D.pro_compose(m, n)),
                          E.arr_id(m.foot_l), E.arr_id(n.foot_r), h)

    def unitor(a):
        return CospanCell(E.pro_id(a), on_pro(D.pro_id(a)), E.arr_id(a), E.arr_id(a), alpha(a))

    return LaxDoubleFunctor(D, E, on_ob=lambda a: a, on_arr=lambda f: f, on_pro=on_pro,
                            on_cell=on_cell, laxator=laxator, unitor=unitor,
                            name=f"{alpha.name}*")


def sc_map_composite(L: Functor, L2: Functor, F0: Functor, F1: Functor,
                     alpha: NatTrans) -> LaxDoubleFunctor:
    """The map ``SCsp(L) -> SCsp(L2)`` as ``base(F0) ∘ α* ∘ codomain(F1)``.

    ``alpha`` has components ``L2(F0 a) -> F1(L a)``.
    """
    step1 = sc_map_codomain(L, F1)
    step2 = sc_map_transform(alpha)
    step3 = sc_map_base(F0, L2)
    return compose_lax(compose_lax(step1, step2), step3, name="composite")


def sc_map(L: Functor, L2: Functor, F0: Functor, F1: Functor,
           alpha: NatTrans) -> LaxDoubleFunctor:
    """The same map as :func:`sc_map_composite`, defined by direct formulas.

    Proarrows ``(a, ℓ, x, r, b) ↦ (F0 a, α_a;F1 ℓ, F1 x, α_b;F1 r, F0 b)`` and
    cells ``(f, g, h) ↦ (F0 f, F0 g, F1 h)``.
    """
    D, E = scsp(L), scsp(L2)
    X2 = F1.cod

    def on_pro(m):
        return Cospan(F0.on_ob(m.foot_l), F1.on_ob(m.apex), F0.on_ob(m.foot_r),
                      X2.then(alpha(m.foot_l), F1.on_arr(m.leg_l)),
                      X2.then(alpha(m.foot_r), F1.on_arr(m.leg_r)))

    def on_cell(c):
        return CospanCell(on_pro(c.top), on_pro(c.bottom), F0.on_arr(c.left),
                          F0.on_arr(c.right), F1.on_arr(c.apex_map))

    def laxator(m, n):
        po = D.composite_pushout(m, n)
        fm, fn = on_pro(m), on_pro(n)
        top_po = E.composite_pushout(fm, fn)
        h = X2.pushout_copair(top_po, F1.on_arr(po.ia), F1.on_arr(po.ib))
        return CospanCell(E.pro_compose(fm, fn), on_pro(D.pro_compose(m, n)),
                          E.arr_id(fm.foot_l), E.arr_id(fn.foot_r), h)

    def unitor(a):
        fa = F0.on_ob(a)
        return CospanCell(E.pro_id(fa), on_pro(D.pro_id(a)), E.arr_id(fa), E.arr_id(fa), alpha(a))

    return LaxDoubleFunctor(D, E, on_ob=F0.on_ob, on_arr=F0.on_arr, on_pro=on_pro,
                            on_cell=on_cell, laxator=laxator, unitor=unitor,
                            name=f"map({F0.name}, {F1.name}, {alpha.name})")


def square_map(direct: bool = False) -> LaxDoubleFunctor:
    """Example map ``SCsp(loops) -> SCsp(discrete)`` squaring feet and apexes.

    Neither square functor preserves coproducts or pushouts, so the result
    is lax but not pseudo.
    """
    make = sc_map if direct else sc_map_composite
    return make(LOOPS, DISCRETE, SQUARE, GRAPH_SQUARE, SQUARE_INCL)


def compare_lax(F: LaxDoubleFunctor, G: LaxDoubleFunctor, sample,
                report: Report | None = None) -> Report:
    """Check that two lax double functors agree on every sampled datum."""
    r = report or Report(f"{F.name} = {G.name}")
    for x in sample.objects:
        r.check("objects", lambda: F.on_ob(x) == G.on_ob(x), x)
        r.check("unitors", lambda: F.unitor(x) == G.unitor(x), x)
    for f in sample.arrows:
        r.check("arrows", lambda: F.on_arr(f) == G.on_arr(f), f)
    for m in sample.pros:
        r.check("proarrows", lambda: F.on_pro(m) == G.on_pro(m), m)
    for c in sample.cells:
        r.check("cells", lambda: F.on_cell(c) == G.on_cell(c), c)
    for m, n in sample.pairs:
        r.check("laxators", lambda: F.laxator(m, n) == G.laxator(m, n), (m, n))
    return r
