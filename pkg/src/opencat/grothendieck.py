"""The double Grothendieck construction of a lax functor into Span(Cat).

For a lax double functor ``F: A -> Span(Cat)`` the double category ``∫F`` has

* objects ``(a, x)`` with ``x`` an object of ``F(a)``;
* arrows ``(f, φ): (a, x) -> (b, y)`` with ``φ: F(f)(x) -> y`` in ``F(b)``;
* proarrows ``(m, s): (a, x) ⇸ (b, y)`` with ``s`` an object of the apex of
  ``F(m)`` whose feet are ``x`` and ``y``;
* cells ``(α, ν)`` with ``ν: F(α)(s) -> t`` in the apex of ``F(n)``.

External composition applies the apex functor of the laxator, identities
apply the apex functor of the unitor.  Associators and unitors lie over those
of ``A`` with identity fibre components; the coherence of ``F`` is exactly
what makes these well typed, and it is verified whenever one is built.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dblcore import DoubleCategory, Frame, LaxDoubleFunctor
from .errors import BoundaryError, CoherenceError, FrameError
from .fincat import SPAN_CAT, TERMINAL, CatSpan, CatSpanMap, FinFunctor, Mor, identity_functor

__all__ = [
    "GrothOb", "GrothArr", "GrothPro", "GrothCell", "Grothendieck", "projection",
    "trivial_functor", "section", "groth_pros", "groth_cells",
]


@dataclass(frozen=True)
class GrothOb:
    base: object
    fiber: object

    def __repr__(self):
        return f"({self.base!r}, {self.fiber!r})"


@dataclass(frozen=True)
class GrothArr:
    src: GrothOb
    tgt: GrothOb
    base: object
    fiber: object


@dataclass(frozen=True)
class GrothPro:
    base: object
    dec: object

    def __repr__(self):
        return f"GrothPro({self.base!r}, {self.dec!r})"


@dataclass(frozen=True)
class GrothCell:
    top: GrothPro
    bottom: GrothPro
    base: object
    fiber: object

    def __repr__(self):
        return f"GrothCell({self.base!r}, {self.fiber!r})"


class Grothendieck(DoubleCategory):
    """``∫F`` for a lax double functor ``F`` into :data:`SPAN_CAT`."""

    def __init__(self, F: LaxDoubleFunctor, name: str | None = None):
        self.F = F
        self.A = F.dom
        self.name = name or f"∫{F.name}"

    # -- helpers -------------------------------------------------------------
    def apex(self, m):
        return self.F.on_pro(m).apex

    def fiber(self, a):
        return self.F.on_ob(a)

    # -- validated constructors ----------------------------------------------
    def ob(self, a, x) -> GrothOb:
        if not self.fiber(a).has_object(x):
            raise BoundaryError(f"{x!r} is not an object of the fibre over {a!r}")
        return GrothOb(a, x)

    def arr(self, src: GrothOb, tgt: GrothOb, f, phi) -> GrothArr:
        A, F = self.A, self.F
        if A.arr_src(f) != src.base or A.arr_tgt(f) != tgt.base:
            raise BoundaryError("base arrow does not connect the base objects")
        if phi not in self.fiber(tgt.base).hom(F.on_arr(f).on_ob(src.fiber), tgt.fiber):
            raise BoundaryError("fibre morphism has the wrong type")
        return GrothArr(src, tgt, f, phi)

    def pro(self, m, s) -> GrothPro:
        if not self.apex(m).has_object(s):
            raise BoundaryError(f"{s!r} is not a decoration of {m!r}")
        return GrothPro(m, s)

    def cell(self, top: GrothPro, bottom: GrothPro, alpha, nu) -> GrothCell:
        fr = self.A.frame(alpha)
        if fr.top != top.base or fr.bottom != bottom.base:
            raise FrameError("base cell does not have the given proarrows as frame")
        src = self.F.on_cell(alpha).apex_map.on_ob(top.dec)
        if nu not in self.apex(bottom.base).hom(src, bottom.dec):
            raise BoundaryError("decoration morphism has the wrong type")
        return GrothCell(top, bottom, alpha, nu)

    # -- arrows --------------------------------------------------------------
    def arr_src(self, f):
        return f.src

    def arr_tgt(self, f):
        return f.tgt

    def arr_id(self, x):
        return GrothArr(x, x, self.A.arr_id(x.base), self.fiber(x.base).identity(x.fiber))

    def arr_then(self, f, g):
        if f.tgt != g.src:
            raise BoundaryError("arrows are not composable")
        C = self.fiber(g.tgt.base)
        phi = C.then(self.F.on_arr(g.base).on_mor(f.fiber), g.fiber)
        return GrothArr(f.src, g.tgt, self.A.arr_then(f.base, g.base), phi)

    def arr_homs(self, x, y):
        C = self.fiber(y.base)
        for f in self.A.arr_homs(x.base, y.base):
            for phi in C.hom(self.F.on_arr(f).on_ob(x.fiber), y.fiber):
                yield GrothArr(x, y, f, phi)

    # -- proarrows -----------------------------------------------------------
    def pro_src(self, m):
        return GrothOb(self.A.pro_src(m.base), self.F.on_pro(m.base).left.on_ob(m.dec))

    def pro_tgt(self, m):
        return GrothOb(self.A.pro_tgt(m.base), self.F.on_pro(m.base).right.on_ob(m.dec))

    def pro_id(self, x):
        u = self.F.unitor(x.base)
        return GrothPro(self.A.pro_id(x.base), u.apex_map.on_ob(x.fiber))

    def pro_compose(self, m, n):
        if self.pro_tgt(m) != self.pro_src(n):
            raise BoundaryError(f"cannot compose: target {self.pro_tgt(m)!r} "
                                f"differs from source {self.pro_src(n)!r}")
        lax = self.F.laxator(m.base, n.base)
        return GrothPro(self.A.pro_compose(m.base, n.base), lax.apex_map.on_ob((m.dec, n.dec)))

    # -- cells ---------------------------------------------------------------
    def frame(self, c) -> Frame:
        fr = self.A.frame(c.base)
        span = self.F.on_pro(c.bottom.base)
        left = GrothArr(self.pro_src(c.top), self.pro_src(c.bottom), fr.left,
                        span.left.on_mor(c.fiber))
        right = GrothArr(self.pro_tgt(c.top), self.pro_tgt(c.bottom), fr.right,
                         span.right.on_mor(c.fiber))
        return Frame(c.top, c.bottom, left, right)

    def cell_id(self, m):
        return GrothCell(m, m, self.A.cell_id(m.base), self.apex(m.base).identity(m.dec))

    def cell_then(self, c, d):
        if c.bottom != d.top:
            raise FrameError("cells are not vertically composable")
        C = self.apex(d.bottom.base)
        nu = C.then(self.F.on_cell(d.base).apex_map.on_mor(c.fiber), d.fiber)
        return GrothCell(c.top, d.bottom, self.A.cell_then(c.base, d.base), nu)

    def cell_pro_id(self, f):
        u = self.F.unitor(f.tgt.base)
        return GrothCell(self.pro_id(f.src), self.pro_id(f.tgt), self.A.cell_pro_id(f.base),
                         u.apex_map.on_mor(f.fiber))

    def cell_compose(self, c, d):
        if self.frame(c).right != self.frame(d).left:
            raise FrameError("cells are not horizontally composable")
        lax = self.F.laxator(c.bottom.base, d.bottom.base)
        return GrothCell(self.pro_compose(c.top, d.top), self.pro_compose(c.bottom, d.bottom),
                         self.A.cell_compose(c.base, d.base),
                         lax.apex_map.on_mor((c.fiber, d.fiber)))

    def cells_with_frame(self, top, bottom, left, right):
        A = self.A
        span = self.F.on_pro(bottom.base)
        C = span.apex
        for alpha in A.cells_with_frame(top.base, bottom.base, left.base, right.base):
            src = self.F.on_cell(alpha).apex_map.on_ob(top.dec)
            for nu in C.hom(src, bottom.dec):
                if span.left.on_mor(nu) == left.fiber and span.right.on_mor(nu) == right.fiber:
                    yield GrothCell(top, bottom, alpha, nu)

    def cell_inverse(self, c):
        A = self.A
        inv = A.cell_inverse(c.base)
        if inv is None:
            return None
        C = self.apex(c.top.base)
        start = self.F.on_cell(inv).apex_map.on_ob(c.bottom.dec)
        pushed = self.F.on_cell(inv).apex_map.on_mor(c.fiber)
        for g in C.hom(start, c.top.dec):
            if (C.then(pushed, g) == C.identity(C.dom(pushed))
                    and C.then(g, pushed) == C.identity(start)):
                return GrothCell(c.bottom, c.top, inv, g)
        return None

    # -- coherence cells -----------------------------------------------------
    def _lift(self, base_cell, top, bottom, what):
        moved = self.F.on_cell(base_cell).apex_map.on_ob(top.dec)
        if moved != bottom.dec:
            raise CoherenceError(f"{what}: decoration {moved!r} differs from {bottom.dec!r}")
        return GrothCell(top, bottom, base_cell, self.apex(bottom.base).identity(bottom.dec))

    def associator(self, m, n, p):
        top = self.pro_compose(self.pro_compose(m, n), p)
        bottom = self.pro_compose(m, self.pro_compose(n, p))
        return self._lift(self.A.associator(m.base, n.base, p.base), top, bottom, "associator")

    def associator_inv(self, m, n, p):
        top = self.pro_compose(m, self.pro_compose(n, p))
        bottom = self.pro_compose(self.pro_compose(m, n), p)
        return self._lift(self.A.associator_inv(m.base, n.base, p.base), top, bottom,
                          "inverse associator")

    def left_unitor(self, m):
        top = self.pro_compose(self.pro_id(self.pro_src(m)), m)
        return self._lift(self.A.left_unitor(m.base), top, m, "left unitor")

    def left_unitor_inv(self, m):
        bottom = self.pro_compose(self.pro_id(self.pro_src(m)), m)
        return self._lift(self.A.left_unitor_inv(m.base), m, bottom, "inverse left unitor")

    def right_unitor(self, m):
        top = self.pro_compose(m, self.pro_id(self.pro_tgt(m)))
        return self._lift(self.A.right_unitor(m.base), top, m, "right unitor")

    def right_unitor_inv(self, m):
        bottom = self.pro_compose(m, self.pro_id(self.pro_tgt(m)))
        return self._lift(self.A.right_unitor_inv(m.base), m, bottom, "inverse right unitor")


def projection(G: Grothendieck) -> LaxDoubleFunctor:
    """The strict projection ``∫F -> A`` forgetting fibre data."""
    A = G.A
    return LaxDoubleFunctor(
        G, A, on_ob=lambda x: x.base, on_arr=lambda f: f.base, on_pro=lambda m: m.base,
        on_cell=lambda c: c.base,
        laxator=lambda m, n: A.cell_id(A.pro_compose(m.base, n.base)),
        unitor=lambda x: A.cell_id(A.pro_id(x.base)), name=f"π_{G.F.name}")


# ---------------------------------------------------------------------------
# Enumeration


def groth_pros(G: Grothendieck, base_pros, limit: int | None = None) -> list:
    """Every proarrow of ``∫F`` over the given base proarrows."""
    out = []
    for m in base_pros:
        for s in G.apex(m).objects():
            out.append(GrothPro(m, s))
            if limit and len(out) >= limit:
                return out
    return out


def groth_cells(G: Grothendieck, base_cells, pros, limit: int | None = None) -> list:
    """Every cell of ``∫F`` over ``base_cells`` between proarrows in ``pros``."""
    by_base = {}
    for p in pros:
        by_base.setdefault(p.base, []).append(p)
    out = []
    for alpha in base_cells:
        fr = G.A.frame(alpha)
        Fa = G.F.on_cell(alpha).apex_map
        C = G.apex(fr.bottom)
        for top in by_base.get(fr.top, ()):
            src = Fa.on_ob(top.dec)
            for bottom in by_base.get(fr.bottom, ()):
                for nu in C.hom(src, bottom.dec):
                    out.append(GrothCell(top, bottom, alpha, nu))
                    if limit and len(out) >= limit:
                        return out
    return out


# ---------------------------------------------------------------------------
# The trivial fibration


_ONE = identity_functor(TERMINAL)
_UNIT_SPAN = CatSpan(TERMINAL, TERMINAL, TERMINAL, _ONE, _ONE)


def trivial_functor(A: DoubleCategory) -> LaxDoubleFunctor:
    """The lax functor ``A -> Span(Cat)`` constant at the terminal category.

    Its Grothendieck construction is isomorphic to ``A`` (see :func:`section`).
    """
    S = SPAN_CAT

    def laxator(m, n):
        top = S.pro_compose(_UNIT_SPAN, _UNIT_SPAN)
        collapse = FinFunctor(top.apex, TERMINAL, lambda x: 0, lambda f: Mor(0, 0), "collapse")
        return CatSpanMap(top, _UNIT_SPAN, _ONE, _ONE, collapse)

    return LaxDoubleFunctor(
        A, S, on_ob=lambda a: TERMINAL, on_arr=lambda f: _ONE,
        on_pro=lambda m: _UNIT_SPAN, on_cell=lambda c: S.cell_id(_UNIT_SPAN),
        laxator=laxator, unitor=lambda a: S.cell_id(_UNIT_SPAN), name="1")


def section(G: Grothendieck) -> LaxDoubleFunctor:
    """Inverse of the projection when every fibre is the terminal category."""
    A = G.A
    star = Mor(0, 0)

    def on_arr(f):
        x, y = GrothOb(A.arr_src(f), 0), GrothOb(A.arr_tgt(f), 0)
        return GrothArr(x, y, f, star)

    def on_cell(c):
        fr = A.frame(c)
        return GrothCell(GrothPro(fr.top, 0), GrothPro(fr.bottom, 0), c, star)

    return LaxDoubleFunctor(
        A, G, on_ob=lambda a: GrothOb(a, 0), on_arr=on_arr,
        on_pro=lambda m: GrothPro(m, 0), on_cell=on_cell,
        laxator=lambda m, n: G.cell_id(GrothPro(A.pro_compose(m, n), 0)),
        unitor=lambda a: G.cell_id(GrothPro(A.pro_id(a), 0)), name="section")
