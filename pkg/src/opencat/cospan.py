"""Double categories of cospans and structured cospans.

Everything here is parameterised by a functor ``L: A -> X`` between
categories with chosen colimits (see :mod:`opencat.fincolim`).  A proarrow
``a ⇸ b`` is a cospan ``L(a) -> x <- L(b)`` in ``X``; the plain cospan double
category ``Csp(C)`` is the case ``L = id_C``.

External composition is the chosen pushout in ``X``.  Associators and unitors
are the mediating maps between iterated pushouts, each paired with a
designated inverse built from the universal property in the other direction.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .dblcore import Cocartesian, Equipment, Frame
from .errors import BoundaryError, FrameError, NotInvertibleError
from .fincolim import FINSET, Functor, identity_functor

__all__ = ["Cospan", "CospanCell", "CospanDouble", "csp", "CSP_FINSET"]


@dataclass(frozen=True)
class Cospan:
    """``L(foot_l) -leg_l-> apex <-leg_r- L(foot_r)``."""

    foot_l: object
    apex: object
    foot_r: object
    leg_l: object
    leg_r: object

    def __repr__(self):
        return f"Cospan({self.foot_l!r} -> {self.apex!r} <- {self.foot_r!r}; {self.leg_l!r}, {self.leg_r!r})"


@dataclass(frozen=True)
class CospanCell:
    """A map of cospans: foot maps ``left``/``right`` and an apex map."""

    top: Cospan
    bottom: Cospan
    left: object
    right: object
    apex_map: object

    def __repr__(self):
        return f"CospanCell(left={self.left!r}, right={self.right!r}, apex={self.apex_map!r})"


@functools.lru_cache(maxsize=1 << 16)
def _pushout(cat, f, g):
    return cat.pushout(f, g)


class CospanDouble(Equipment, Cocartesian):
    """Structured cospans ``SCsp(L)`` for a functor ``L: A -> X``."""

    def __init__(self, L: Functor, name: str | None = None):
        self.L = L
        self.A, self.X = L.dom, L.cod
        self.name = name or f"SCsp({L.name})"

    # -- constructors with validation ----------------------------------------
    def cospan(self, foot_l, apex, foot_r, leg_l, leg_r) -> Cospan:
        X, L = self.X, self.L
        if X.dom(leg_l) != L.on_ob(foot_l) or X.cod(leg_l) != apex:
            raise BoundaryError("left leg must map L(left foot) into the apex")
        if X.dom(leg_r) != L.on_ob(foot_r) or X.cod(leg_r) != apex:
            raise BoundaryError("right leg must map L(right foot) into the apex")
        return Cospan(foot_l, apex, foot_r, leg_l, leg_r)

    def cell(self, top: Cospan, bottom: Cospan, left, right, apex_map) -> CospanCell:
        A, X, L = self.A, self.X, self.L
        if (A.dom(left), A.cod(left)) != (top.foot_l, bottom.foot_l):
            raise FrameError("left foot map has the wrong type")
        if (A.dom(right), A.cod(right)) != (top.foot_r, bottom.foot_r):
            raise FrameError("right foot map has the wrong type")
        if (X.dom(apex_map), X.cod(apex_map)) != (top.apex, bottom.apex):
            raise FrameError("apex map has the wrong type")
        if X.then(top.leg_l, apex_map) != X.then(L.on_arr(left), bottom.leg_l):
            raise BoundaryError("left square does not commute")
        if X.then(top.leg_r, apex_map) != X.then(L.on_arr(right), bottom.leg_r):
            raise BoundaryError("right square does not commute")
        return CospanCell(top, bottom, left, right, apex_map)

    def is_cospan(self, m) -> bool:
        try:
            return isinstance(m, Cospan) and self.cospan(*_fields(m)) == m
        except BoundaryError:
            return False

    # -- arrows --------------------------------------------------------------
    def arr_src(self, f):
        return self.A.dom(f)

    def arr_tgt(self, f):
        return self.A.cod(f)

    def arr_id(self, x):
        return self.A.identity(x)

    def arr_then(self, f, g):
        return self.A.then(f, g)

    def arr_homs(self, x, y):
        return self.A.homs(x, y)

    def arr_inverse(self, f):
        return self.A.inverse(f) if self.A.is_iso(f) else None

    # -- proarrows -----------------------------------------------------------
    def pro_src(self, m):
        return m.foot_l

    def pro_tgt(self, m):
        return m.foot_r

    def pro_id(self, x):
        Lx = self.L.on_ob(x)
        one = self.X.identity(Lx)
        return Cospan(x, Lx, x, one, one)

    def composite_pushout(self, m: Cospan, n: Cospan):
        if m.foot_r != n.foot_l:
            raise BoundaryError(f"cannot compose: right foot {m.foot_r!r} "
                                f"differs from left foot {n.foot_l!r}")
        return _pushout(self.X, m.leg_r, n.leg_l)

    def pro_compose(self, m: Cospan, n: Cospan) -> Cospan:
        po = self.composite_pushout(m, n)
        X = self.X
        return Cospan(m.foot_l, po.apex, n.foot_r, X.then(m.leg_l, po.ia), X.then(n.leg_r, po.ib))

    # -- cells ---------------------------------------------------------------
    def frame(self, a) -> Frame:
        return Frame(a.top, a.bottom, a.left, a.right)

    def cell_id(self, m: Cospan) -> CospanCell:
        A = self.A
        return CospanCell(m, m, A.identity(m.foot_l), A.identity(m.foot_r), self.X.identity(m.apex))

    def cell_then(self, a: CospanCell, b: CospanCell) -> CospanCell:
        if a.bottom != b.top:
            raise FrameError("cells are not vertically composable")
        A, X = self.A, self.X
        return CospanCell(a.top, b.bottom, A.then(a.left, b.left), A.then(a.right, b.right),
                          X.then(a.apex_map, b.apex_map))

    def cell_pro_id(self, f) -> CospanCell:
        x, y = self.A.dom(f), self.A.cod(f)
        return CospanCell(self.pro_id(x), self.pro_id(y), f, f, self.L.on_arr(f))

    def cell_compose(self, a: CospanCell, b: CospanCell) -> CospanCell:
        if a.right != b.left:
            raise FrameError("cells are not horizontally composable")
        X = self.X
        top_po = self.composite_pushout(a.top, b.top)
        bot_po = self.composite_pushout(a.bottom, b.bottom)
        h = X.pushout_copair(top_po, X.then(a.apex_map, bot_po.ia), X.then(b.apex_map, bot_po.ib))
        top = self.pro_compose(a.top, b.top)
        bottom = self.pro_compose(a.bottom, b.bottom)
        return CospanCell(top, bottom, a.left, b.right, h)

    def cells_with_frame(self, top, bottom, left, right):
        X, L = self.X, self.L
        lsq = X.then(L.on_arr(left), bottom.leg_l)
        rsq = X.then(L.on_arr(right), bottom.leg_r)
        for h in X.homs(top.apex, bottom.apex):
            if X.then(top.leg_l, h) == lsq and X.then(top.leg_r, h) == rsq:
                yield CospanCell(top, bottom, left, right, h)

    def cell_inverse(self, a):
        A, X = self.A, self.X
        if not (A.is_iso(a.left) and A.is_iso(a.right) and X.is_iso(a.apex_map)):
            return None
        return CospanCell(a.bottom, a.top, A.inverse(a.left), A.inverse(a.right),
                          X.inverse(a.apex_map))

    def _globular(self, top, bottom, h):
        A = self.A
        return CospanCell(top, bottom, A.identity(top.foot_l), A.identity(top.foot_r), h)

    # -- coherence cells -----------------------------------------------------
    def _assoc_maps(self, m, n, p):
        """Apex maps between ``(m⊙n)⊙p`` and ``m⊙(n⊙p)`` in both directions."""
        X = self.X
        mn_po = self.composite_pushout(m, n)
        np_po = self.composite_pushout(n, p)
        mn, np_ = self.pro_compose(m, n), self.pro_compose(n, p)
        lhs_po = self.composite_pushout(mn, p)
        rhs_po = self.composite_pushout(m, np_)
        # (m⊙n)⊙p -> m⊙(n⊙p)
        q = X.pushout_copair(mn_po, rhs_po.ia, X.then(np_po.ia, rhs_po.ib))
        fwd = X.pushout_copair(lhs_po, q, X.then(np_po.ib, rhs_po.ib))
        # m⊙(n⊙p) -> (m⊙n)⊙p
        s = X.pushout_copair(np_po, X.then(mn_po.ib, lhs_po.ia), lhs_po.ib)
        bwd = X.pushout_copair(rhs_po, X.then(mn_po.ia, lhs_po.ia), s)
        return self.pro_compose(mn, p), self.pro_compose(m, np_), fwd, bwd

    def associator(self, m, n, p):
        top, bottom, fwd, _ = self._assoc_maps(m, n, p)
        return self._globular(top, bottom, fwd)

    def associator_inv(self, m, n, p):
        top, bottom, _, bwd = self._assoc_maps(m, n, p)
        return self._globular(bottom, top, bwd)

    def left_unitor(self, m):
        X = self.X
        idm = self.pro_id(m.foot_l)
        po = self.composite_pushout(idm, m)
        h = X.pushout_copair(po, m.leg_l, X.identity(m.apex))
        return self._globular(self.pro_compose(idm, m), m, h)

    def left_unitor_inv(self, m):
        po = self.composite_pushout(self.pro_id(m.foot_l), m)
        return self._globular(m, self.pro_compose(self.pro_id(m.foot_l), m), po.ib)

    def right_unitor(self, m):
        X = self.X
        idm = self.pro_id(m.foot_r)
        po = self.composite_pushout(m, idm)
        h = X.pushout_copair(po, X.identity(m.apex), m.leg_r)
        return self._globular(self.pro_compose(m, idm), m, h)

    def right_unitor_inv(self, m):
        po = self.composite_pushout(m, self.pro_id(m.foot_r))
        return self._globular(m, self.pro_compose(m, self.pro_id(m.foot_r)), po.ia)

    # -- equipment -----------------------------------------------------------
    def restrict(self, f, g, n: Cospan):
        """Restriction of ``n`` along ``f`` and ``g``: precompose the legs."""
        A, X, L = self.A, self.X, self.L
        if A.cod(f) != n.foot_l or A.cod(g) != n.foot_r:
            raise FrameError("niche arrows must land in the feet of the proarrow")
        res = Cospan(A.dom(f), n.apex, A.dom(g),
                     X.then(L.on_arr(f), n.leg_l), X.then(L.on_arr(g), n.leg_r))
        return res, CospanCell(res, n, f, g, X.identity(n.apex))

    def factor(self, alpha, f, g, h, k):
        res, _ = self.restrict(f, g, alpha.bottom)
        return self.cell(alpha.top, res, h, k, alpha.apex_map)

    # -- coproducts ----------------------------------------------------------
    def ob_coproduct(self, x, y):
        return self.A.coproduct(x, y)

    def ob_copair(self, f, g, cp=None):
        return self.A.copair(f, g, cp)

    def ob_initial(self):
        return self.A.initial()

    def ob_bang(self, x):
        return self.A.bang(x)

    def coproduct_comparison_inverse(self, a, b):
        """Inverse of ``[L(inl), L(inr)]: L(a)+L(b) -> L(a+b)``."""
        A, X, L = self.A, self.X, self.L
        s, ia, ib = A.coproduct(a, b)
        cp = X.coproduct(L.on_ob(a), L.on_ob(b))
        c = X.copair(L.on_arr(ia), L.on_arr(ib), cp)
        if not X.is_iso(c):
            raise NotInvertibleError(f"{L.name} does not preserve the coproduct {a!r} + {b!r}")
        return X.inverse(c), cp

    def pro_coproduct(self, m: Cospan, n: Cospan):
        X = self.X
        a, ia, ib = self.A.coproduct(m.foot_l, n.foot_l)
        b, ja, jb = self.A.coproduct(m.foot_r, n.foot_r)
        apex, ka, kb = X.coproduct(m.apex, n.apex)
        inv_l, cpl = self.coproduct_comparison_inverse(m.foot_l, n.foot_l)
        inv_r, cpr = self.coproduct_comparison_inverse(m.foot_r, n.foot_r)
        leg_l = X.then(inv_l, X.copair(X.then(m.leg_l, ka), X.then(n.leg_l, kb), cpl))
        leg_r = X.then(inv_r, X.copair(X.then(m.leg_r, ka), X.then(n.leg_r, kb), cpr))
        s = Cospan(a, apex, b, leg_l, leg_r)
        return s, CospanCell(m, s, ia, ja, ka), CospanCell(n, s, ib, jb, kb)

    def pro_copair(self, a: CospanCell, b: CospanCell, cp=None):
        if a.bottom != b.bottom:
            raise FrameError("copair needs cells with a common bottom proarrow")
        if cp is None:
            cp = self.pro_coproduct(a.top, b.top)
        s, ca, cb = cp
        A, X = self.A, self.X
        left = A.copair(a.left, b.left, A.coproduct(a.top.foot_l, b.top.foot_l))
        right = A.copair(a.right, b.right, A.coproduct(a.top.foot_r, b.top.foot_r))
        h = X.copair(a.apex_map, b.apex_map, X.coproduct(a.top.apex, b.top.apex))
        return CospanCell(s, a.bottom, left, right, h)

    def pro_initial(self):
        X, L = self.X, self.L
        zero = self.A.initial()
        z = X.initial()
        b = X.bang(L.on_ob(zero))
        if not X.is_iso(b):
            raise NotInvertibleError(f"{L.name} does not preserve the initial object")
        leg = X.inverse(b)
        return Cospan(zero, z, zero, leg, leg)

    def pro_bang(self, n: Cospan):
        A = self.A
        return CospanCell(self.pro_initial(), n, A.bang(n.foot_l), A.bang(n.foot_r),
                          self.X.bang(n.apex))

    def cmp_compose_inv(self, m, n, m2, n2):
        """Inverse of ``(m⊙n)+(m2⊙n2) => (m+m2)⊙(n+n2)`` from the pushout property."""
        X = self.X
        mm, _, _ = self.pro_coproduct(m, m2)
        nn, _, _ = self.pro_coproduct(n, n2)
        top = self.pro_compose(mm, nn)
        po = self.composite_pushout(mm, nn)
        p1, p2 = self.composite_pushout(m, n), self.composite_pushout(m2, n2)
        bottom, _, _ = self.pro_coproduct(self.pro_compose(m, n), self.pro_compose(m2, n2))
        _, ka, kb = X.coproduct(p1.apex, p2.apex)
        u = X.copair(X.then(p1.ia, ka), X.then(p2.ia, kb), X.coproduct(m.apex, m2.apex))
        v = X.copair(X.then(p1.ib, ka), X.then(p2.ib, kb), X.coproduct(n.apex, n2.apex))
        return self.cell(top, bottom, self.A.identity(top.foot_l), self.A.identity(top.foot_r),
                         X.pushout_copair(po, u, v))

    def _invert(self, c):
        inv = self.cell_inverse(c)
        if inv is None:
            raise NotInvertibleError(f"comparison cell {c!r} is not invertible")
        return inv

    def cmp_id_inv(self, x, x2):
        return self._invert(self.cmp_id(x, x2))

    def cmp_zero_compose_inv(self):
        return self._invert(self.cmp_zero_compose())

    def cmp_zero_id_inv(self):
        return self._invert(self.cmp_zero_id())

    # -- enumeration ---------------------------------------------------------
    def cospans(self, feet, apexes):
        """Every cospan with feet from ``feet`` and apex from ``apexes``."""
        X, L = self.X, self.L
        for a in feet:
            for b in feet:
                for x in apexes:
                    for l in X.homs(L.on_ob(a), x):
                        for r in X.homs(L.on_ob(b), x):
                            yield Cospan(a, x, b, l, r)

    def all_cells(self, pros, limit=None, seed=None):
        """Every cell between proarrows of ``pros``.

        With ``limit`` the enumeration stops early; with ``seed`` the pairs
        of proarrows are visited in a seeded random order, so a limited run
        gives a spread-out sample instead of the cells over the first few.
        """
        pairs = [(top, bottom) for top in pros for bottom in pros]
        if seed is not None:
            random.Random(seed).shuffle(pairs)
        out = []
        for top, bottom in pairs:
            for f in self.A.homs(top.foot_l, bottom.foot_l):
                for g in self.A.homs(top.foot_r, bottom.foot_r):
                    for c in self.cells_with_frame(top, bottom, f, g):
                        out.append(c)
                        if limit and len(out) >= limit:
                            return out
        return out


def _fields(m: Cospan):
    return (m.foot_l, m.apex, m.foot_r, m.leg_l, m.leg_r)


def csp(cat=FINSET) -> CospanDouble:
    """The double category ``Csp(cat)`` of plain cospans."""
    return CospanDouble(identity_functor(cat), name=f"Csp({cat.name})")


CSP_FINSET = csp(FINSET)
