"""Decorated cospans via the double Grothendieck construction.

A lax monoidal functor ``F: (FinSet, +) -> (Cat, ×)`` yields the lax double
functor

    Csp(FinSet) --Apex--> MonDbl(FinSet, +) --MonDbl(F)--> MonDbl(Cat, ×) --Apex_*--> Span(Cat)

and ``DCsp(F)`` is its Grothendieck construction.  The running example is
:func:`graph_decoration`, which decorates a finite set ``N`` with a graph on
vertex set ``N``; decorated cospans are then open graphs and
:func:`open_graph_equivalence` compares them with structured cospans over the
discrete-graph functor.

The module also builds the comma lax functor ``Csp(Cat) -> Span(Cat)``
restricted to free categories on acyclic graphs, and the double category of
process theories on top of it.
"""
from __future__ import annotations

import functools
import itertools
import random

from .cospan import Cospan, CospanCell, CospanDouble, csp
from .dblcore import DoubleCategory, Frame, LaxDoubleFunctor, Report, compose_lax, make_sample
from .errors import BoundaryError, FrameError
from .fincat import (FREECAT, SPAN_CAT, TERMINAL, CatSpan, CatSpanMap, CommaCat, CommaMor,
                     CommaOb, FinCat, FinFunctor, Mor, Path, bang_functor, free_cat,
                     free_functor, identity_functor, product_cat)
from .fincolim import (DISCRETE, EMPTY_GRAPH, FINSET, FinFunction, FinSet, Graph, GraphHom,
                       bang, copair, coproduct)
from .grothendieck import GrothCell, GrothPro, Grothendieck, groth_cells, groth_pros
from .structured import SCSP_DISCRETE

__all__ = [
    "GraphFiber", "LaxMonoidalFunctor", "graph_decoration", "MonoidalDouble",
    "MONDBL_FINSET", "MONDBL_CAT", "apex_functor", "mon_dbl", "apex_star",
    "decoration_functor", "dcsp", "decorated_compose", "decorated_identity",
    "decorated_restrict", "decorated_coproduct",
    "to_decorated", "to_structured", "open_graph_equivalence", "comma_functor",
    "process_theories", "CSP_FREECAT",
]


# ---------------------------------------------------------------------------
# Graph decorations


class GraphFiber(FinCat):
    """Graphs with vertex set ``N`` and edge maps fixing the vertices.

    The category is infinite; :meth:`objects` lists only the graphs with at
    most ``max_edges`` edges, while :meth:`has_object` and :meth:`hom` accept
    any graph on ``N``.
    """

    def __init__(self, n: int, max_edges: int = 1):
        self.n, self.max_edges = n, max_edges
        self.name = f"Gph[{n}]"
        self._obs = None

    def objects(self):
        if self._obs is None:
            pairs = [(s, t) for s in range(self.n) for t in range(self.n)]
            self._obs = [Graph.from_edges(self.n, es) for k in range(self.max_edges + 1)
                         for es in itertools.product(pairs, repeat=k)]
        return self._obs

    def has_object(self, g):
        return isinstance(g, Graph) and g.vertices.size == self.n

    def hom(self, g, h):
        ident = FinFunction.identity(FinSet(self.n))
        by_ends = {}
        for e, ends in enumerate(h.edge_list):
            by_ends.setdefault(ends, []).append(e)
        choices = [by_ends.get(ends, []) for ends in g.edge_list]
        return [GraphHom(g, h, ident, FinFunction(g.edges, h.edges, t))
                for t in itertools.product(*choices)]

    def identity(self, g):
        return GraphHom.identity(g)

    def then(self, f, g):
        return f.then(g)

    def __eq__(self, other):
        return isinstance(other, GraphFiber) and self.n == other.n

    def __hash__(self):
        return hash(("GraphFiber", self.n))


class LaxMonoidalFunctor:
    """A lax monoidal functor ``(FinSet, +) -> (Cat, ×)``.

    ``laxator(a, b)`` is a functor ``F(a) × F(b) -> F(a + b)`` and ``unit`` a
    functor ``1 -> F(0)``.
    """

    def __init__(self, on_ob, on_arr, laxator, unit, name="F"):
        self.on_ob, self.on_arr = on_ob, on_arr
        self.laxator, self.unit = laxator, unit
        self.name = name


def _push_graph(f: FinFunction, g: Graph) -> Graph:
    return Graph.from_edges(f.cod.size, [(f(s), f(t)) for s, t in g.edge_list])


def graph_decoration(max_edges: int = 1) -> LaxMonoidalFunctor:
    """Decorate a finite set with a graph on it.

    ``F(f)`` relabels vertices along ``f`` keeping the edges in order,
    ``F_{a,b}`` is disjoint union and ``F_0`` picks the empty graph.
    """
    fiber = functools.lru_cache(maxsize=None)(lambda n: GraphFiber(n, max_edges))

    def on_ob(a: FinSet):
        return fiber(a.size)

    def on_arr(f: FinFunction):
        def on_mor(h: GraphHom):
            return GraphHom(_push_graph(f, h.dom), _push_graph(f, h.cod),
                            FinFunction.identity(f.cod), h.emap)
        return FinFunctor(on_ob(f.dom), on_ob(f.cod), lambda g: _push_graph(f, g), on_mor,
                          "F(f)")

    def laxator(a: FinSet, b: FinSet):
        P = product_cat(on_ob(a), on_ob(b))

        def on_mor(pair):
            h, k = pair
            s = coproduct(h.dom, k.dom)
            t = coproduct(h.cod, k.cod)
            return copair(h.then(t.inl), k.then(t.inr), s)
        return FinFunctor(P, on_ob(FinSet(a.size + b.size)),
                          lambda gh: coproduct(gh[0], gh[1]).sum, on_mor, "F_{a,b}")

    unit = FinFunctor(TERMINAL, fiber(0), lambda _: EMPTY_GRAPH,
                      lambda _: GraphHom.identity(EMPTY_GRAPH), "F_0")
    return LaxMonoidalFunctor(on_ob, on_arr, laxator, lambda: unit, "graphs")


# ---------------------------------------------------------------------------
# Monoidal categories as one-object double categories


class MonoidalDouble(DoubleCategory):
    """A monoidal category seen as a double category with one object.

    Proarrows are objects of the monoidal category, cells are its morphisms,
    external composition is the monoidal product.
    """

    OB = "*"
    ARR = "1*"

    def __init__(self, name, *, identity, then, dom, cod, tensor, tensor_arr, unit,
                 assoc=None, assoc_inv=None, lunit=None, lunit_inv=None, runit=None,
                 runit_inv=None):
        self.name = name
        self._identity, self._then, self._dom, self._cod = identity, then, dom, cod
        self._tensor, self._tensor_arr, self._unit = tensor, tensor_arr, unit
        strict = lambda *ms: identity(functools.reduce(tensor, ms))
        self._assoc = assoc or (lambda m, n, p: strict(m, n, p))
        self._assoc_inv = assoc_inv or (lambda m, n, p: strict(m, n, p))
        self._lunit = lunit or (lambda m: identity(m))
        self._lunit_inv = lunit_inv or (lambda m: identity(m))
        self._runit = runit or (lambda m: identity(m))
        self._runit_inv = runit_inv or (lambda m: identity(m))

    def arr_src(self, f):
        return self.OB

    def arr_tgt(self, f):
        return self.OB

    def arr_id(self, x):
        return self.ARR

    def arr_then(self, f, g):
        return self.ARR

    def arr_homs(self, x, y):
        return [self.ARR]

    def arr_inverse(self, f):
        return self.ARR

    def pro_src(self, m):
        return self.OB

    def pro_tgt(self, m):
        return self.OB

    def pro_id(self, x):
        return self._unit

    def pro_compose(self, m, n):
        return self._tensor(m, n)

    def frame(self, a):
        return Frame(self._dom(a), self._cod(a), self.ARR, self.ARR)

    def cell_id(self, m):
        return self._identity(m)

    def cell_then(self, a, b):
        return self._then(a, b)

    def cell_pro_id(self, f):
        return self._identity(self._unit)

    def cell_compose(self, a, b):
        return self._tensor_arr(a, b)

    def associator(self, m, n, p):
        return self._assoc(m, n, p)

    def associator_inv(self, m, n, p):
        return self._assoc_inv(m, n, p)

    def left_unitor(self, m):
        return self._lunit(m)

    def left_unitor_inv(self, m):
        return self._lunit_inv(m)

    def right_unitor(self, m):
        return self._runit(m)

    def right_unitor_inv(self, m):
        return self._runit_inv(m)


def _sum_arr(f: FinFunction, g: FinFunction) -> FinFunction:
    s = coproduct(f.cod, g.cod)
    return copair(f.then(s.inl), g.then(s.inr))


MONDBL_FINSET = MonoidalDouble(
    "MonDbl(FinSet,+)", identity=FinFunction.identity, then=lambda f, g: f.then(g),
    dom=lambda f: f.dom, cod=lambda f: f.cod,
    tensor=lambda a, b: FinSet(a.size + b.size), tensor_arr=_sum_arr, unit=FinSet(0))
"""Disjoint union of finite sets is strictly associative and unital here."""


def _product_functor(H: FinFunctor, K: FinFunctor) -> FinFunctor:
    return FinFunctor(product_cat(H.dom, K.dom), product_cat(H.cod, K.cod),
                      lambda x: (H.on_ob(x[0]), K.on_ob(x[1])),
                      lambda f: (H.on_mor(f[0]), K.on_mor(f[1])), "×")


def _cat_assoc(m, n, p):
    return FinFunctor(product_cat(product_cat(m, n), p), product_cat(m, product_cat(n, p)),
                      lambda x: (x[0][0], (x[0][1], x[1])),
                      lambda f: (f[0][0], (f[0][1], f[1])), "assoc")


def _cat_assoc_inv(m, n, p):
    return FinFunctor(product_cat(m, product_cat(n, p)), product_cat(product_cat(m, n), p),
                      lambda x: ((x[0], x[1][0]), x[1][1]),
                      lambda f: ((f[0], f[1][0]), f[1][1]), "assoc⁻¹")


MONDBL_CAT = MonoidalDouble(
    "MonDbl(Cat,×)", identity=identity_functor, then=lambda F, G: F.then(G),
    dom=lambda F: F.dom, cod=lambda F: F.cod, tensor=product_cat,
    tensor_arr=_product_functor, unit=TERMINAL,
    assoc=_cat_assoc, assoc_inv=_cat_assoc_inv,
    lunit=lambda m: FinFunctor(product_cat(TERMINAL, m), m, lambda x: x[1], lambda f: f[1], "λ"),
    lunit_inv=lambda m: FinFunctor(m, product_cat(TERMINAL, m), lambda x: (0, x),
                                   lambda f: (Mor(0, 0), f), "λ⁻¹"),
    runit=lambda m: FinFunctor(product_cat(m, TERMINAL), m, lambda x: x[0], lambda f: f[0], "ρ"),
    runit_inv=lambda m: FinFunctor(m, product_cat(m, TERMINAL), lambda x: (x, 0),
                                   lambda f: (f, Mor(0, 0)), "ρ⁻¹"))


# ---------------------------------------------------------------------------
# The three lax functors and their composite


CSP = csp(FINSET)


def apex_functor(D: CospanDouble = CSP) -> LaxDoubleFunctor:
    """``Csp(FinSet) -> MonDbl(FinSet, +)``: keep only apexes."""
    M = MONDBL_FINSET

    def laxator(p, q):
        po = D.composite_pushout(p, q)
        return copair(po.ia, po.ib, coproduct(p.apex, q.apex))

    return LaxDoubleFunctor(
        D, M, on_ob=lambda a: M.OB, on_arr=lambda f: M.ARR, on_pro=lambda p: p.apex,
        on_cell=lambda c: c.apex_map, laxator=laxator, unitor=lambda a: bang(a), name="Apex")


def mon_dbl(F: LaxMonoidalFunctor) -> LaxDoubleFunctor:
    """``MonDbl(F): MonDbl(FinSet, +) -> MonDbl(Cat, ×)``."""
    M, N = MONDBL_FINSET, MONDBL_CAT
    return LaxDoubleFunctor(
        M, N, on_ob=lambda x: N.OB, on_arr=lambda f: N.ARR, on_pro=F.on_ob, on_cell=F.on_arr,
        laxator=F.laxator, unitor=lambda x: F.unit(), name=f"MonDbl({F.name})")


def _star_span(C: FinCat) -> CatSpan:
    b = bang_functor(C)
    return CatSpan(TERMINAL, C, TERMINAL, b, b)


def apex_star() -> LaxDoubleFunctor:
    """``Apex_*: MonDbl(Cat, ×) -> Span(Cat)``, ``C ↦ (1 <- C -> 1)``.  Strict."""
    S = SPAN_CAT
    one = identity_functor(TERMINAL)
    return LaxDoubleFunctor(
        MONDBL_CAT, S, on_ob=lambda x: TERMINAL, on_arr=lambda f: one, on_pro=_star_span,
        on_cell=lambda H: CatSpanMap(_star_span(H.dom), _star_span(H.cod), one, one, H),
        laxator=lambda C, D: S.cell_id(S.pro_compose(_star_span(C), _star_span(D))),
        unitor=lambda x: S.cell_id(S.pro_id(TERMINAL)), name="Apex_*")


def decoration_functor(F: LaxMonoidalFunctor, D: CospanDouble = CSP) -> LaxDoubleFunctor:
    """The composite ``Apex_* ∘ MonDbl(F) ∘ Apex: Csp(FinSet) -> Span(Cat)``."""
    return compose_lax(compose_lax(apex_functor(D), mon_dbl(F)), apex_star(),
                       name=f"~{F.name}")


def dcsp(F: LaxMonoidalFunctor) -> Grothendieck:
    """The double category of ``F``-decorated cospans."""
    return Grothendieck(decoration_functor(F), name=f"DCsp({F.name})")


def decorated_compose(F: LaxMonoidalFunctor, p: Cospan, s, q: Cospan, t):
    """Decoration of ``p ⊙ q``: ``F([ι_m, ι_n])(F_{m,n}(s, t))``."""
    po = CSP.composite_pushout(p, q)
    mediating = copair(po.ia, po.ib, coproduct(p.apex, q.apex))
    return F.on_arr(mediating).on_ob(F.laxator(p.apex, q.apex).on_ob((s, t)))


def decorated_identity(F: LaxMonoidalFunctor, a: FinSet):
    """Decoration of the identity cospan on ``a``: ``F(!)(F_0(*))``."""
    return F.on_arr(bang(a)).on_ob(F.unit().on_ob(0))


def decorated_restrict(f: FinFunction, g: FinFunction, p: GrothPro) -> GrothPro:
    """Restrict the underlying cospan along ``f`` and ``g``; the apex and decoration stay."""
    res, _ = CSP.restrict(f, g, p.base)
    return GrothPro(res, p.dec)


def decorated_coproduct(F: LaxMonoidalFunctor, p: GrothPro, q: GrothPro) -> GrothPro:
    """Coproduct of the cospans, decorated by ``F_{m,n}(s, t)``."""
    s, _, _ = CSP.pro_coproduct(p.base, q.base)
    return GrothPro(s, F.laxator(p.base.apex, q.base.apex).on_ob((p.dec, q.dec)))


# ---------------------------------------------------------------------------
# Open graphs two ways


def to_decorated(m: Cospan) -> GrothPro:
    """Structured cospan of discrete graphs -> graph-decorated cospan."""
    return GrothPro(Cospan(m.foot_l, m.apex.vertices, m.foot_r, m.leg_l.vmap, m.leg_r.vmap),
                    m.apex)


def to_structured(p: GrothPro) -> Cospan:
    """Graph-decorated cospan -> structured cospan of discrete graphs."""
    g, c = p.dec, p.base
    if g.vertices != c.apex:
        raise BoundaryError("decoration is not a graph on the apex")
    return SCSP_DISCRETE.cospan(
        c.foot_l, g, c.foot_r,
        GraphHom(DISCRETE.on_ob(c.foot_l), g, c.leg_l, FinFunction(FinSet(0), g.edges, ())),
        GraphHom(DISCRETE.on_ob(c.foot_r), g, c.leg_r, FinFunction(FinSet(0), g.edges, ())))


def cell_to_decorated(c: CospanCell) -> GrothCell:
    top, bottom = to_decorated(c.top), to_decorated(c.bottom)
    base = CospanCell(top.base, bottom.base, c.left, c.right, c.apex_map.vmap)
    nu = GraphHom(_push_graph(c.apex_map.vmap, c.top.apex), c.bottom.apex,
                  FinFunction.identity(c.bottom.apex.vertices), c.apex_map.emap)
    return GrothCell(top, bottom, base, nu)


def cell_to_structured(c: GrothCell) -> CospanCell:
    top, bottom = to_structured(c.top), to_structured(c.bottom)
    h = GraphHom(top.apex, bottom.apex, c.base.apex_map, c.fiber.emap)
    return SCSP_DISCRETE.cell(top, bottom, c.base.left, c.base.right, h)


def open_graph_equivalence(max_foot: int = 2, max_vertices: int = 3, max_edges: int = 1,
                           limit: int = 2000, max_cells: int = 3000, seed: int = 0) -> Report:
    """Compare open graphs as structured cospans and as decorated cospans.

    Both translations are checked to be mutually inverse and to preserve
    external composition, identities, restriction, coproducts, and both
    compositions of cells.  Every open graph within the bounds is used;
    cells are a seeded sample of at most ``max_cells``, and composable
    tuples, niches and coproduct pairs are sampled above ``limit``.
    """
    from .fincolim import finsets, graphs

    r = Report("open graphs: SCsp(discrete) ≅ DCsp(graphs)")
    rng = random.Random(seed)
    S = SCSP_DISCRETE
    F = graph_decoration(max_edges)
    G = dcsp(F)
    feet = finsets(max_foot)
    pros = list(S.cospans(feet, graphs(max_vertices, max_edges)))
    cells = S.all_cells(pros, limit=max_cells, seed=seed)
    arrows = [f for a in feet for b in feet for f in FINSET.homs(a, b)]
    sample = make_sample(S, objects=feet, arrows=arrows, pros=pros, cells=cells,
                         limit=limit, seed=seed)
    niches = [(f, g, m) for m in pros for f in arrows if f.cod == m.foot_l
              for g in arrows if g.cod == m.foot_r]
    for f, g, m in rng.sample(niches, min(limit, len(niches))):
        r.check("restriction", lambda: to_decorated(S.restrict(f, g, m)[0])
                == decorated_restrict(f, g, to_decorated(m)), (f, g, m))
    for _ in range(limit):
        m, n = rng.choice(pros), rng.choice(pros)
        r.check("coproducts", lambda: to_decorated(S.pro_coproduct(m, n)[0])
                == decorated_coproduct(F, to_decorated(m), to_decorated(n)), (m, n))
    for m in sample.pros:
        r.check("round trip on proarrows", lambda: to_structured(to_decorated(m)) == m, m)
        r.check("decorated image is well formed",
                lambda: G.pro(to_decorated(m).base, to_decorated(m).dec) == to_decorated(m), m)
    for a in feet:
        r.check("identities", lambda: to_decorated(S.pro_id(a)) == G.pro_id(G.ob(a, 0)), a)
        r.check("identity decoration matches the closed formula",
                lambda: G.pro_id(G.ob(a, 0)).dec
                == decorated_identity(graph_decoration(max_edges), a), a)
    for m, n in sample.pairs:
        r.check("composites", lambda: to_decorated(S.pro_compose(m, n))
                == G.pro_compose(to_decorated(m), to_decorated(n)), (m, n))
        r.check("composite decoration matches the closed formula",
                lambda: G.pro_compose(to_decorated(m), to_decorated(n)).dec
                == decorated_compose(graph_decoration(max_edges), *_unpack(m, n)), (m, n))
    for c in sample.cells:
        r.check("round trip on cells", lambda: cell_to_structured(cell_to_decorated(c)) == c, c)
    for c, d in sample.cell_vpairs:
        r.check("vertical composition of cells", lambda: cell_to_decorated(S.cell_then(c, d))
                == G.cell_then(cell_to_decorated(c), cell_to_decorated(d)), (c, d))
    for c, d in sample.cell_hpairs:
        r.check("external composition of cells", lambda: cell_to_decorated(S.cell_compose(c, d))
                == G.cell_compose(cell_to_decorated(c), cell_to_decorated(d)), (c, d))
    r.notes.append(f"{len(pros)} open graphs, {len(cells)} cells; exhaustive: {sample.exhaustive}")
    return r


def _unpack(m, n):
    dm, dn = to_decorated(m), to_decorated(n)
    return dm.base, dm.dec, dn.base, dn.dec


# ---------------------------------------------------------------------------
# Comma categories and process theories


CSP_FREECAT = csp(FREECAT)
"""Cospans of free categories on acyclic graphs, with generator-preserving functors."""


@functools.lru_cache(maxsize=4096)
def _comma(m: Cospan) -> CatSpan:
    C = CommaCat(free_functor(m.leg_l), free_functor(m.leg_r))
    return CatSpan(free_cat(m.foot_l), C, free_cat(m.foot_r), C.proj_left(), C.proj_right())


def _comma_cell(c: CospanCell) -> CatSpanMap:
    top, bottom = _comma(c.top), _comma(c.bottom)
    H, K, G = free_functor(c.left), free_functor(c.apex_map), free_functor(c.right)
    apex = FinFunctor(
        top.apex, bottom.apex,
        lambda x: CommaOb(H.on_ob(x.a), K.on_mor(x.f), G.on_ob(x.b)),
        lambda f: CommaMor(CommaOb(H.on_ob(f.src.a), K.on_mor(f.src.f), G.on_ob(f.src.b)),
                           CommaOb(H.on_ob(f.tgt.a), K.on_mor(f.tgt.f), G.on_ob(f.tgt.b)),
                           H.on_mor(f.h), G.on_mor(f.k)), "comma")
    return CatSpanMap(top, bottom, H, G, apex)


def comma_functor(D: CospanDouble = CSP_FREECAT) -> LaxDoubleFunctor:
    """The lax functor ``Csp(Cat) -> Span(Cat)`` sending a cospan to its comma span."""
    S = SPAN_CAT

    def laxator(m, n):
        po = D.composite_pushout(m, n)
        top = S.pro_compose(_comma(m), _comma(n))
        bottom = _comma(D.pro_compose(m, n))
        iX, iY = free_functor(po.ia), free_functor(po.ib)
        X = free_cat(po.apex)

        def ob(pair):
            x, y = pair
            return CommaOb(x.a, X.then(iX.on_mor(x.f), iY.on_mor(y.f)), y.b)

        def mor(pair):
            f, g = pair
            return CommaMor(ob((f.src, g.src)), ob((f.tgt, g.tgt)), f.h, g.k)
        return CatSpanMap(top, bottom, identity_functor(top.src), identity_functor(top.tgt),
                          FinFunctor(top.apex, bottom.apex, ob, mor, "Comma_{m,n}"))

    def unitor(a):
        A = free_cat(a)
        top, bottom = S.pro_id(A), _comma(D.pro_id(a))
        return CatSpanMap(top, bottom, identity_functor(A), identity_functor(A), FinFunctor(
            A, bottom.apex, lambda x: CommaOb(x, A.identity(x), x),
            lambda h: CommaMor(CommaOb(h.dom, A.identity(h.dom), h.dom),
                               CommaOb(h.cod, A.identity(h.cod), h.cod), h, h), "Comma_a"))

    return LaxDoubleFunctor(D, S, on_ob=free_cat, on_arr=free_functor, on_pro=_comma,
                            on_cell=_comma_cell, laxator=laxator, unitor=unitor, name="Comma")


def process_theories(D: CospanDouble = CSP_FREECAT) -> Grothendieck:
    """Open process theories: ``∫Comma`` over cospans of free categories."""
    return Grothendieck(comma_functor(D), name="ProcessTheories")
