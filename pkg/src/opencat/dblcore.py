"""Double categories, equipments, cocartesian structure and law checkers.

A double category here is a pseudocategory in Cat given by its operations:

* arrows compose with :meth:`DoubleCategory.arr_then` (diagrammatic order);
* cells compose *internally* with :meth:`cell_then` (``alpha`` on top of
  ``beta``) and *externally* with :meth:`cell_compose` (``alpha`` left of
  ``beta``), the latter written ``⊙``;
* proarrows compose externally with :meth:`pro_compose`.

Associators and unitors are globular cells supplied together with designated
inverses, so invertibility is an equation to check rather than a search.

The ``check_*`` functions evaluate laws on a :class:`Sample` and return a
:class:`Report`.  They never raise on a failed law; a construction error
raised while evaluating one side of an equation is recorded as a failure with
the offending tuple as witness.
"""
from __future__ import annotations

import itertools
import json
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from .errors import FactorizationError, FrameError, OpenCatError

__all__ = [
    "Frame", "DoubleCategory", "Equipment", "Cocartesian", "LaxDoubleFunctor",
    "compose_lax", "identity_lax", "Report", "Sample", "make_sample",
    "check_pseudocategory", "check_equipment", "factor_through_restriction",
    "is_restriction_cell", "check_cocartesian", "check_lax_double_functor",
    "check_cocartesian_functor", "check_restriction_preservation",
]


class Frame(NamedTuple):
    top: object
    bottom: object
    left: object
    right: object


class DoubleCategory:
    """Interface every concrete double category implements."""

    name = "D"

    # -- arrows --------------------------------------------------------------
    def arr_src(self, f):
        return f.dom

    def arr_tgt(self, f):
        return f.cod

    def arr_id(self, x):
        raise NotImplementedError

    def arr_then(self, f, g):
        raise NotImplementedError

    def arr_homs(self, x, y) -> Iterable:
        raise NotImplementedError(f"{self.name} cannot enumerate arrows")

    def arr_inverse(self, f):
        """Inverse of the arrow ``f``, or None."""
        return None

    # -- proarrows -----------------------------------------------------------
    def pro_src(self, m):
        raise NotImplementedError

    def pro_tgt(self, m):
        raise NotImplementedError

    def pro_id(self, x):
        raise NotImplementedError

    def pro_compose(self, m, n):
        raise NotImplementedError

    # -- cells ---------------------------------------------------------------
    def frame(self, a) -> Frame:
        return Frame(a.top, a.bottom, a.left, a.right)

    def cell_id(self, m):
        """Identity cell on the proarrow ``m`` (unit for :meth:`cell_then`)."""
        raise NotImplementedError

    def cell_then(self, a, b):
        raise NotImplementedError

    def cell_pro_id(self, f):
        """The cell ``id_f: id_x => id_y`` on an arrow ``f: x -> y``."""
        raise NotImplementedError

    def cell_compose(self, a, b):
        raise NotImplementedError

    def cells_with_frame(self, top, bottom, left, right) -> Iterable:
        raise NotImplementedError(f"{self.name} cannot enumerate cells")

    def cell_inverse(self, a):
        """Inverse of ``a`` for :meth:`cell_then`, or None if there is none."""
        return None

    # -- coherence cells -----------------------------------------------------
    def associator(self, m, n, p):
        raise NotImplementedError

    def associator_inv(self, m, n, p):
        raise NotImplementedError

    def left_unitor(self, m):
        raise NotImplementedError

    def left_unitor_inv(self, m):
        raise NotImplementedError

    def right_unitor(self, m):
        raise NotImplementedError

    def right_unitor_inv(self, m):
        raise NotImplementedError

    # -- conveniences --------------------------------------------------------
    def is_globular(self, a) -> bool:
        fr = self.frame(a)
        return (fr.left == self.arr_id(self.pro_src(fr.top))
                and fr.right == self.arr_id(self.pro_tgt(fr.top)))

    def is_identity_cell(self, a) -> bool:
        return a == self.cell_id(self.frame(a).top)

    def cell_is_invertible(self, a) -> bool:
        b = self.cell_inverse(a)
        if b is None:
            return False
        fr = self.frame(a)
        return (self.cell_then(a, b) == self.cell_id(fr.top)
                and self.cell_then(b, a) == self.cell_id(fr.bottom))

    def __repr__(self):
        return self.name


class Equipment(DoubleCategory):
    """A double category with restriction cells."""

    def restrict(self, f, g, n):
        """Return ``(res, cell)`` with ``cell: res => n`` over ``f`` and ``g``."""
        raise NotImplementedError

    def factor(self, alpha, f, g, h, k):
        """Factor ``alpha`` (sides ``h;f`` and ``k;g``) through the restriction."""
        return _factor_by_search(self, alpha, f, g, h, k)


def _factor_by_search(E, alpha, f, g, h, k):
    fr = E.frame(alpha)
    res, cell = E.restrict(f, g, fr.bottom)
    found = [b for b in E.cells_with_frame(fr.top, res, h, k)
             if E.cell_then(b, cell) == alpha]
    if len(found) != 1:
        raise FactorizationError(f"{len(found)} factorizations of {alpha!r}")
    return found[0]


def factor_through_restriction(E: Equipment, alpha, f, g, h, k):
    """The unique ``beta`` with ``beta ; res_cell == alpha``.

    ``alpha`` must sit over ``n = res`` bottom with sides ``h;f`` and ``k;g``.
    """
    fr = E.frame(alpha)
    if fr.left != E.arr_then(h, f) or fr.right != E.arr_then(k, g):
        raise FrameError("cell sides do not factor as h;f and k;g")
    return E.factor(alpha, f, g, h, k)


class Cocartesian(DoubleCategory):
    """Finite coproducts in both underlying categories.

    Subclasses supply coproducts/initial objects at both levels and the
    designated inverses of the four comparison cells; the comparison cells
    themselves are built here from the universal properties.
    """

    def ob_coproduct(self, x, y):
        raise NotImplementedError

    def ob_copair(self, f, g, cp=None):
        raise NotImplementedError

    def ob_initial(self):
        raise NotImplementedError

    def ob_bang(self, x):
        raise NotImplementedError

    def pro_coproduct(self, m, n):
        """Return ``(sum, inl, inr)`` with coprojection cells."""
        raise NotImplementedError

    def pro_copair(self, a, b, cp=None):
        raise NotImplementedError

    def pro_initial(self):
        raise NotImplementedError

    def pro_bang(self, n):
        raise NotImplementedError

    # comparison cells
    def cmp_compose(self, m, n, m2, n2):
        """``(m ⊙ n) + (m2 ⊙ n2) => (m + m2) ⊙ (n + n2)``."""
        _, im, im2 = self.pro_coproduct(m, m2)
        _, i_n, i_n2 = self.pro_coproduct(n, n2)
        return self.pro_copair(self.cell_compose(im, i_n), self.cell_compose(im2, i_n2))

    def cmp_id(self, x, x2):
        """``id_x + id_x2 => id_(x + x2)``."""
        _, ix, ix2 = self.ob_coproduct(x, x2)
        return self.pro_copair(self.cell_pro_id(ix), self.cell_pro_id(ix2))

    def cmp_zero_compose(self):
        """``0 => 0 ⊙ 0``."""
        z = self.pro_initial()
        return self.pro_bang(self.pro_compose(z, z))

    def cmp_zero_id(self):
        """``0 => id_0``."""
        return self.pro_bang(self.pro_id(self.ob_initial()))

    def cmp_compose_inv(self, m, n, m2, n2):
        raise NotImplementedError

    def cmp_id_inv(self, x, x2):
        raise NotImplementedError

    def cmp_zero_compose_inv(self):
        raise NotImplementedError

    def cmp_zero_id_inv(self):
        raise NotImplementedError


# ---------------------------------------------------------------------------
# Lax double functors


class LaxDoubleFunctor:
    """A lax double functor given by its actions and comparison cells.

    ``laxator(m, n)`` is a globular cell ``F(m) ⊙ F(n) => F(m ⊙ n)`` and
    ``unitor(x)`` a globular cell ``id_F(x) => F(id_x)``, both in ``cod``.
    """

    def __init__(self, dom: DoubleCategory, cod: DoubleCategory, *, on_ob, on_arr,
                 on_pro, on_cell, laxator, unitor, name="F"):
        self.dom, self.cod = dom, cod
        self.on_ob, self.on_arr = on_ob, on_arr
        self.on_pro, self.on_cell = on_pro, on_cell
        self.laxator, self.unitor = laxator, unitor
        self.name = name

    def __repr__(self):
        return f"LaxDoubleFunctor({self.name}: {self.dom} -> {self.cod})"


def compose_lax(F: LaxDoubleFunctor, G: LaxDoubleFunctor, name=None) -> LaxDoubleFunctor:
    """The composite ``G ∘ F`` with the standard composite comparison cells.

    ``(GF)_{m,n} = G_{Fm,Fn} ; G(F_{m,n})`` and ``(GF)_x = G_{Fx} ; G(F_x)``.
    """
    E = G.cod

    def laxator(m, n):
        return E.cell_then(G.laxator(F.on_pro(m), F.on_pro(n)), G.on_cell(F.laxator(m, n)))

    def unitor(x):
        return E.cell_then(G.unitor(F.on_ob(x)), G.on_cell(F.unitor(x)))

    return LaxDoubleFunctor(
        F.dom, E,
        on_ob=lambda x: G.on_ob(F.on_ob(x)),
        on_arr=lambda f: G.on_arr(F.on_arr(f)),
        on_pro=lambda m: G.on_pro(F.on_pro(m)),
        on_cell=lambda a: G.on_cell(F.on_cell(a)),
        laxator=laxator, unitor=unitor,
        name=name or f"{G.name}∘{F.name}")


def identity_lax(D: DoubleCategory) -> LaxDoubleFunctor:
    return LaxDoubleFunctor(
        D, D, on_ob=lambda x: x, on_arr=lambda f: f, on_pro=lambda m: m,
        on_cell=lambda a: a,
        laxator=lambda m, n: D.cell_id(D.pro_compose(m, n)),
        unitor=lambda x: D.cell_id(D.pro_id(x)), name=f"id_{D.name}")


# ---------------------------------------------------------------------------
# Reports


def _short(x, limit=300):
    s = repr(x)
    return s if len(s) <= limit else s[:limit] + "…"


@dataclass
class _Law:
    equation: str = ""
    checked: int = 0
    failed: int = 0
    witnesses: list = field(default_factory=list)


class Report:
    """Per-law pass/fail tallies with failure witnesses."""

    max_witnesses = 3

    def __init__(self, name: str):
        self.name = name
        self.laws: dict[str, _Law] = {}
        self.flags: dict[str, bool] = {}
        self.notes: list[str] = []

    def law(self, law: str, equation: str = "") -> _Law:
        entry = self.laws.setdefault(law, _Law(equation))
        if equation and not entry.equation:
            entry.equation = equation
        return entry

    def record(self, law: str, ok: bool, witness=None, equation: str = "") -> bool:
        entry = self.law(law, equation)
        entry.checked += 1
        if not ok:
            entry.failed += 1
            if len(entry.witnesses) < self.max_witnesses:
                entry.witnesses.append(_short(witness))
        return ok

    def check(self, law: str, fn: Callable[[], bool], witness=None, equation: str = "") -> bool:
        """Evaluate ``fn``; an opencat error counts as a failed law."""
        try:
            ok = bool(fn())
        except OpenCatError as exc:
            ok = False
            witness = (witness, f"{type(exc).__name__}: {exc}")
        return self.record(law, ok, witness, equation)

    @property
    def ok(self) -> bool:
        return all(e.failed == 0 for e in self.laws.values())

    def failures(self) -> dict:
        return {k: e for k, e in self.laws.items() if e.failed}

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for k, e in other.laws.items():
            mine = self.law(prefix + k, e.equation)
            mine.checked += e.checked
            mine.failed += e.failed
            mine.witnesses.extend(e.witnesses[: self.max_witnesses - len(mine.witnesses)])
        self.flags.update({prefix + k: v for k, v in other.flags.items()})
        self.notes.extend(other.notes)
        return self

    def to_json(self) -> list:
        return [{"law": k, "status": "fail" if e.failed else "pass",
                 "checked": e.checked, "failed": e.failed,
                 "witness": e.witnesses, "equation": e.equation}
                for k, e in self.laws.items()]

    def dumps(self) -> str:
        return json.dumps({"report": self.name, "ok": self.ok, "flags": self.flags,
                           "laws": self.to_json(), "notes": self.notes},
                          indent=2, sort_keys=True)

    def __str__(self):
        lines = [f"{self.name}: {'PASS' if self.ok else 'FAIL'}"]
        for k, e in self.laws.items():
            lines.append(f"  {'ok  ' if not e.failed else 'FAIL'} {k} "
                         f"({e.checked - e.failed}/{e.checked})")
            for w in e.witnesses:
                lines.append(f"       witness: {w}")
        for k, v in self.flags.items():
            lines.append(f"  flag {k} = {v}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Samples


@dataclass
class Sample:
    """Tuples of data on which laws are evaluated.

    ``exhaustive`` records, per field, whether every matching tuple of the
    generating lists is present or a seeded random subset was drawn.
    """

    objects: list = field(default_factory=list)
    arrows: list = field(default_factory=list)
    arrow_pairs: list = field(default_factory=list)
    arrow_triples: list = field(default_factory=list)
    pros: list = field(default_factory=list)
    pairs: list = field(default_factory=list)
    triples: list = field(default_factory=list)
    quads: list = field(default_factory=list)
    cells: list = field(default_factory=list)
    cell_vpairs: list = field(default_factory=list)
    cell_vtriples: list = field(default_factory=list)
    cell_hpairs: list = field(default_factory=list)
    cell_htriples: list = field(default_factory=list)
    squares: list = field(default_factory=list)
    exhaustive: dict = field(default_factory=dict)


def _chains(items, left_key, right_key, length, limit, rng):
    """Composable chains ``x1, ..., xn`` with ``right_key(xi) == left_key(xi+1)``.

    Returns ``(chains, exhaustive)``.  When the number of chains exceeds
    ``limit`` a random subset of size ``limit`` is drawn by random walks.
    """
    if not items:
        return [], True
    bucket = defaultdict(list)
    for x in items:
        bucket[left_key(x)].append(x)
    # count chains ending at each item, right to left
    counts = {id(x): 1 for x in items}
    for _ in range(length - 1):
        counts = {id(x): sum(counts[id(y)] for y in bucket.get(right_key(x), ()))
                  for x in items}
    total = sum(counts.values())
    if total <= limit:
        out = [[x] for x in items]
        for _ in range(length - 1):
            out = [c + [y] for c in out for y in bucket.get(right_key(c[-1]), ())]
        return [tuple(c) for c in out], True
    starts = [x for x in items if counts[id(x)]]
    out, seen, attempts = [], set(), 0
    while len(out) < limit and attempts < 20 * limit:
        attempts += 1
        chain = [rng.choice(starts)]
        while len(chain) < length:
            nxt = bucket.get(right_key(chain[-1]), ())
            if not nxt:
                break
            chain.append(rng.choice(nxt))
        if len(chain) == length:
            key = tuple(id(c) for c in chain)
            if key not in seen:
                seen.add(key)
                out.append(tuple(chain))
    return out, False


def make_sample(D: DoubleCategory, *, objects=(), arrows=(), pros=(), cells=(),
                limit: int = 2000, seed: int = 0, quad_limit: int | None = None,
                cell_limit: int | None = None) -> Sample:
    """Derive composable tuples of every kind from generating lists.

    ``limit`` caps each kind of tuple; ``quad_limit`` and ``cell_limit``
    override it for proarrow quadruples and for tuples of cells.
    """
    rng = random.Random(seed)
    s = Sample(objects=list(objects), arrows=list(arrows), pros=list(pros), cells=list(cells))
    ex = s.exhaustive
    asrc, atgt = D.arr_src, D.arr_tgt
    s.arrow_pairs, ex["arrow_pairs"] = _chains(s.arrows, asrc, atgt, 2, limit, rng)
    s.arrow_triples, ex["arrow_triples"] = _chains(s.arrows, asrc, atgt, 3, limit, rng)
    s.pairs, ex["pairs"] = _chains(s.pros, D.pro_src, D.pro_tgt, 2, limit, rng)
    s.triples, ex["triples"] = _chains(s.pros, D.pro_src, D.pro_tgt, 3, limit, rng)
    s.quads, ex["quads"] = _chains(s.pros, D.pro_src, D.pro_tgt, 4, quad_limit or limit, rng)
    top = lambda a: D.frame(a).top
    bottom = lambda a: D.frame(a).bottom
    left = lambda a: D.frame(a).left
    right = lambda a: D.frame(a).right
    climit = cell_limit or limit
    s.cell_vpairs, ex["cell_vpairs"] = _chains(s.cells, top, bottom, 2, climit, rng)
    s.cell_vtriples, ex["cell_vtriples"] = _chains(s.cells, top, bottom, 3, climit, rng)
    s.cell_hpairs, ex["cell_hpairs"] = _chains(s.cells, left, right, 2, climit, rng)
    s.cell_htriples, ex["cell_htriples"] = _chains(s.cells, left, right, 3, climit, rng)
    # interchange squares: a | b over c | d
    by_top_left = defaultdict(list)
    for c in s.cells:
        by_top_left[(top(c), left(c))].append(c)
    by_top = defaultdict(list)
    for c in s.cells:
        by_top[top(c)].append(c)
    squares, cap, truncated = [], 20 * climit, False
    for a, b in s.cell_hpairs:
        for c in by_top.get(bottom(a), ()):
            for d in by_top_left.get((bottom(b), right(c)), ()):
                squares.append((a, b, c, d))
        if len(squares) > cap:
            truncated = True
            break
    ex["squares"] = len(squares) <= climit and ex["cell_hpairs"] and not truncated
    if len(squares) > climit:
        squares = rng.sample(squares, climit)
    s.squares = squares
    return s


# ---------------------------------------------------------------------------
# Checkers


def check_pseudocategory(D: DoubleCategory, sample: Sample, report: Report | None = None) -> Report:
    """Check the pseudocategory axioms of ``D`` on ``sample``."""
    r = report or Report(f"pseudocategory {D.name}")
    then, comp = D.cell_then, D.cell_compose

    for f, g, h in sample.arrow_triples:
        r.check("arrows: associativity", lambda: D.arr_then(D.arr_then(f, g), h)
                == D.arr_then(f, D.arr_then(g, h)), (f, g, h), "(f;g);h = f;(g;h)")
    for f in sample.arrows:
        r.check("arrows: unit", lambda: D.arr_then(D.arr_id(D.arr_src(f)), f) == f
                == D.arr_then(f, D.arr_id(D.arr_tgt(f))), f, "id;f = f = f;id")
    for f, g in sample.arrow_pairs:
        r.check("external identity cells: functorial",
                lambda: D.cell_pro_id(D.arr_then(f, g))
                == D.cell_then(D.cell_pro_id(f), D.cell_pro_id(g)), (f, g),
                "id_(f;g) = id_f ; id_g")
    for x in sample.objects:
        r.check("external identity cells: unit",
                lambda: D.cell_pro_id(D.arr_id(x)) == D.cell_id(D.pro_id(x)), x,
                "id_(1_x) = 1_(id_x)")

    for a in sample.cells:
        def _units():
            fr = D.frame(a)
            return D.cell_then(D.cell_id(fr.top), a) == a == D.cell_then(a, D.cell_id(fr.bottom))
        r.check("cells: vertical unit", _units, a, "1;a = a = a;1")
    for a, b, c in sample.cell_vtriples:
        r.check("cells: vertical associativity", lambda: D.cell_then(D.cell_then(a, b), c)
                == D.cell_then(a, D.cell_then(b, c)), (a, b, c), "(a;b);c = a;(b;c)")

    for m, n in sample.pairs:
        def _frame():
            mn = D.pro_compose(m, n)
            return D.pro_src(mn) == D.pro_src(m) and D.pro_tgt(mn) == D.pro_tgt(n)
        r.check("external composition: boundary", _frame, (m, n),
                "src(m⊙n) = src m, tgt(m⊙n) = tgt n")
        r.check("external composition: preserves identity cells",
                lambda: comp(D.cell_id(m), D.cell_id(n)) == D.cell_id(D.pro_compose(m, n)),
                (m, n), "1_m ⊙ 1_n = 1_(m⊙n)")
    for a, b in sample.cell_hpairs:
        def _hframe():
            fa, fb, fab = D.frame(a), D.frame(b), D.frame(comp(a, b))
            return fab == Frame(D.pro_compose(fa.top, fb.top),
                                D.pro_compose(fa.bottom, fb.bottom), fa.left, fb.right)
        r.check("external composition of cells: frame", _hframe, (a, b))
    for a, b, c, d in sample.squares:
        r.check("interchange", lambda: comp(D.cell_then(a, c), D.cell_then(b, d))
                == D.cell_then(comp(a, b), comp(c, d)), (a, b, c, d),
                "(a;c) ⊙ (b;d) = (a⊙b) ; (c⊙d)")

    def _iso_pair(law, fwd, inv, top, bottom, witness):
        def _ok():
            ff, fi = D.frame(fwd()), D.frame(inv())
            return (ff.top == top and ff.bottom == bottom and D.is_globular(fwd())
                    and fi.top == bottom and fi.bottom == top
                    and D.cell_then(fwd(), inv()) == D.cell_id(top)
                    and D.cell_then(inv(), fwd()) == D.cell_id(bottom))
        r.check(law, _ok, witness, "globular, c ; c⁻¹ = 1 and c⁻¹ ; c = 1")

    for m, n, p in sample.triples:
        _iso_pair("associator: globular and invertible",
                  lambda: D.associator(m, n, p), lambda: D.associator_inv(m, n, p),
                  D.pro_compose(D.pro_compose(m, n), p), D.pro_compose(m, D.pro_compose(n, p)),
                  (m, n, p))
    for m in sample.pros:
        x, y = D.pro_src(m), D.pro_tgt(m)
        _iso_pair("left unitor: globular and invertible", lambda: D.left_unitor(m),
                  lambda: D.left_unitor_inv(m), D.pro_compose(D.pro_id(x), m), m, m)
        _iso_pair("right unitor: globular and invertible", lambda: D.right_unitor(m),
                  lambda: D.right_unitor_inv(m), D.pro_compose(m, D.pro_id(y)), m, m)

    for a, b, c in sample.cell_htriples:
        def _assoc_nat():
            fa, fb, fc = D.frame(a), D.frame(b), D.frame(c)
            lhs = D.cell_then(comp(comp(a, b), c), D.associator(fa.bottom, fb.bottom, fc.bottom))
            rhs = D.cell_then(D.associator(fa.top, fb.top, fc.top), comp(a, comp(b, c)))
            return lhs == rhs
        r.check("associator: naturality", _assoc_nat, (a, b, c),
                "((a⊙b)⊙c) ; assoc = assoc ; (a⊙(b⊙c))")
    for a in sample.cells:
        def _unit_nat():
            fr = D.frame(a)
            lhs = D.cell_then(comp(D.cell_pro_id(fr.left), a), D.left_unitor(fr.bottom))
            rhs = D.cell_then(D.left_unitor(fr.top), a)
            lhs2 = D.cell_then(comp(a, D.cell_pro_id(fr.right)), D.right_unitor(fr.bottom))
            rhs2 = D.cell_then(D.right_unitor(fr.top), a)
            return lhs == rhs and lhs2 == rhs2
        r.check("unitors: naturality", _unit_nat, a,
                "(id_f ⊙ a) ; λ = λ ; a and (a ⊙ id_g) ; ρ = ρ ; a")

    for m, n, p, q in sample.quads:
        def _pentagon():
            mn, np_, pq = D.pro_compose(m, n), D.pro_compose(n, p), D.pro_compose(p, q)
            lhs = D.cell_then(D.associator(mn, p, q), D.associator(m, n, pq))
            rhs = D.cell_then(
                D.cell_then(comp(D.associator(m, n, p), D.cell_id(q)), D.associator(m, np_, q)),
                comp(D.cell_id(m), D.associator(n, p, q)))
            return lhs == rhs
        r.check("pentagon", _pentagon, (m, n, p, q),
                "a(mn,p,q);a(m,n,pq) = (a(m,n,p)⊙1);a(m,np,q);(1⊙a(n,p,q))")
    for m, n in sample.pairs:
        def _triangle():
            y = D.pro_tgt(m)
            lhs = D.cell_then(D.associator(m, D.pro_id(y), n), comp(D.cell_id(m), D.left_unitor(n)))
            return lhs == comp(D.right_unitor(m), D.cell_id(n))
        r.check("triangle", _triangle, (m, n), "a(m,id,n);(1⊙λ) = ρ⊙1")
    r.notes.append(f"sample exhaustive: {sample.exhaustive}")
    return r


def check_lax_double_functor(F: LaxDoubleFunctor, sample: Sample,
                             report: Report | None = None) -> Report:
    """Check functoriality and coherence of a lax double functor.

    Tested pasting equations (all in the codomain, ``;`` internal, ``⊙`` external):

    * naturality of laxators: ``φ(m,n) ; F(a⊙b) = (Fa ⊙ Fb) ; φ(m',n')``
    * naturality of unitors: ``φ_x ; F(id_f) = id_Ff ; φ_y``
    * associativity: ``(φ(m,n)⊙1) ; φ(mn,p) ; F(assoc) = assoc ; (1⊙φ(n,p)) ; φ(m,np)``
    * left unit: ``(φ_x ⊙ 1) ; φ(id_x,m) ; F(λ_m) = λ_Fm``
    * right unit: ``(1 ⊙ φ_y) ; φ(m,id_y) ; F(ρ_m) = ρ_Fm``

    The flags ``normal``, ``pseudo`` and ``strict`` record whether every
    sampled unitor is an identity, every sampled comparison cell is
    invertible, and every sampled comparison cell is an identity.
    """
    D, E = F.dom, F.cod
    r = report or Report(f"lax double functor {F.name}")
    c = r.check

    for x in sample.objects:
        c("arrows: preserves identities", lambda: F.on_arr(D.arr_id(x)) == E.arr_id(F.on_ob(x)), x)
    for f, g in sample.arrow_pairs:
        c("arrows: preserves composition", lambda: F.on_arr(D.arr_then(f, g))
          == E.arr_then(F.on_arr(f), F.on_arr(g)), (f, g))
    for m in sample.pros:
        c("proarrows: boundary", lambda: E.pro_src(F.on_pro(m)) == F.on_ob(D.pro_src(m))
          and E.pro_tgt(F.on_pro(m)) == F.on_ob(D.pro_tgt(m)), m)
        c("cells: preserves identity cells", lambda: F.on_cell(D.cell_id(m))
          == E.cell_id(F.on_pro(m)), m)
    for a in sample.cells:
        def _frame():
            fr = D.frame(a)
            return E.frame(F.on_cell(a)) == Frame(F.on_pro(fr.top), F.on_pro(fr.bottom),
                                                  F.on_arr(fr.left), F.on_arr(fr.right))
        c("cells: frame", _frame, a)
    for a, b in sample.cell_vpairs:
        c("cells: preserves vertical composition", lambda: F.on_cell(D.cell_then(a, b))
          == E.cell_then(F.on_cell(a), F.on_cell(b)), (a, b))

    pseudo, normal, strict = True, True, True
    for m, n in sample.pairs:
        def _lax_frame():
            fr = E.frame(F.laxator(m, n))
            return (fr.top == E.pro_compose(F.on_pro(m), F.on_pro(n))
                    and fr.bottom == F.on_pro(D.pro_compose(m, n))
                    and E.is_globular(F.laxator(m, n)))
        c("laxator: frame", _lax_frame, (m, n))
        try:
            phi = F.laxator(m, n)
            inv = E.cell_is_invertible(phi)
            strict = strict and E.is_identity_cell(phi)
        except OpenCatError:
            inv = False
        if not inv and pseudo:
            r.notes.append(f"laxator not invertible at {_short((m, n))}")
        pseudo = pseudo and inv
    for x in sample.objects:
        def _unit_frame():
            fr = E.frame(F.unitor(x))
            return (fr.top == E.pro_id(F.on_ob(x)) and fr.bottom == F.on_pro(D.pro_id(x))
                    and E.is_globular(F.unitor(x)))
        c("unitor: frame", _unit_frame, x)
        try:
            u = F.unitor(x)
            ident = E.is_identity_cell(u)
            inv = ident or E.cell_is_invertible(u)
        except OpenCatError:
            ident = inv = False
        normal = normal and ident
        strict = strict and ident
        pseudo = pseudo and inv

    for a, b in sample.cell_hpairs:
        def _lax_nat():
            fa, fb = D.frame(a), D.frame(b)
            lhs = E.cell_then(F.laxator(fa.top, fb.top), F.on_cell(D.cell_compose(a, b)))
            rhs = E.cell_then(E.cell_compose(F.on_cell(a), F.on_cell(b)),
                              F.laxator(fa.bottom, fb.bottom))
            return lhs == rhs
        c("laxator: naturality", _lax_nat, (a, b), "φ(m,n);F(a⊙b) = (Fa⊙Fb);φ(m',n')")
    for f in sample.arrows:
        def _unit_nat():
            lhs = E.cell_then(F.unitor(D.arr_src(f)), F.on_cell(D.cell_pro_id(f)))
            rhs = E.cell_then(E.cell_pro_id(F.on_arr(f)), F.unitor(D.arr_tgt(f)))
            return lhs == rhs
        c("unitor: naturality", _unit_nat, f, "φ_x;F(id_f) = id_Ff;φ_y")
    for m, n, p in sample.triples:
        def _hexagon():
            Fm, Fn, Fp = F.on_pro(m), F.on_pro(n), F.on_pro(p)
            mn, np_ = D.pro_compose(m, n), D.pro_compose(n, p)
            lhs = E.cell_then(E.cell_then(E.cell_compose(F.laxator(m, n), E.cell_id(Fp)),
                                          F.laxator(mn, p)),
                              F.on_cell(D.associator(m, n, p)))
            rhs = E.cell_then(E.cell_then(E.associator(Fm, Fn, Fp),
                                          E.cell_compose(E.cell_id(Fm), F.laxator(n, p))),
                              F.laxator(m, np_))
            return lhs == rhs
        c("associativity coherence", _hexagon, (m, n, p),
          "(φ(m,n)⊙1);φ(mn,p);F(assoc) = assoc;(1⊙φ(n,p));φ(m,np)")
    for m in sample.pros:
        def _left():
            x = D.pro_src(m)
            lhs = E.cell_then(E.cell_then(E.cell_compose(F.unitor(x), E.cell_id(F.on_pro(m))),
                                          F.laxator(D.pro_id(x), m)),
                              F.on_cell(D.left_unitor(m)))
            return lhs == E.left_unitor(F.on_pro(m))
        def _right():
            y = D.pro_tgt(m)
            lhs = E.cell_then(E.cell_then(E.cell_compose(E.cell_id(F.on_pro(m)), F.unitor(y)),
                                          F.laxator(m, D.pro_id(y))),
                              F.on_cell(D.right_unitor(m)))
            return lhs == E.right_unitor(F.on_pro(m))
        c("left unit coherence", _left, m, "(φ_x⊙1);φ(id,m);F(λ) = λ")
        c("right unit coherence", _right, m, "(1⊙φ_y);φ(m,id);F(ρ) = ρ")
    r.flags.update(normal=normal, pseudo=pseudo, strict=strict)
    return r


def is_restriction_cell(D: DoubleCategory, cell, tops: Iterable) -> tuple[bool, object]:
    """Test the restriction universal property of ``cell`` by enumeration.

    For every proarrow ``m'`` in ``tops`` and arrows ``h, k`` into the feet
    of ``cell``'s top, every cell ``alpha: m' => bottom`` with sides ``h;f``
    and ``k;g`` must factor through ``cell`` in exactly one way.  Returns
    ``(ok, witness)``.
    """
    fr = D.frame(cell)
    x, y = D.pro_src(fr.top), D.pro_tgt(fr.top)
    for mp in tops:
        for h in D.arr_homs(D.pro_src(mp), x):
            for k in D.arr_homs(D.pro_tgt(mp), y):
                left, right = D.arr_then(h, fr.left), D.arr_then(k, fr.right)
                candidates = list(D.cells_with_frame(mp, fr.top, h, k))
                for alpha in D.cells_with_frame(mp, fr.bottom, left, right):
                    n = sum(1 for b in candidates if D.cell_then(b, cell) == alpha)
                    if n != 1:
                        return False, (mp, h, k, alpha, n)
    return True, None


def check_equipment(E: Equipment, niches: Iterable, tops: Iterable,
                    report: Report | None = None) -> Report:
    """Restriction cells and unique factorization on sampled niches.

    ``niches`` holds ``(f, g, n)`` triples; ``tops`` holds ``(m', h, k)``
    triples tried against every niche they fit.
    """
    r = report or Report(f"equipment {E.name}")
    tops = list(tops)
    for f, g, n in niches:
        def _res_frame():
            res, cell = E.restrict(f, g, n)
            return E.frame(cell) == Frame(res, n, f, g)
        r.check("restriction: frame", _res_frame, (f, g, n))
        try:
            res, cell = E.restrict(f, g, n)
        except OpenCatError:
            continue
        r.check("restriction: factors through itself", lambda: factor_through_restriction(
            E, cell, f, g, E.arr_id(E.arr_src(f)), E.arr_id(E.arr_src(g)))
            == E.cell_id(res), (f, g, n), "factor(res) = 1")
        x, y = E.arr_src(f), E.arr_src(g)
        for mp, h, k in tops:
            if E.arr_tgt(h) != x or E.arr_tgt(k) != y:
                continue
            left, right = E.arr_then(h, f), E.arr_then(k, g)
            candidates = list(E.cells_with_frame(mp, res, h, k))
            for alpha in E.cells_with_frame(mp, n, left, right):
                def _factor():
                    beta = factor_through_restriction(E, alpha, f, g, h, k)
                    return (E.cell_then(beta, cell) == alpha
                            and sum(1 for b in candidates if E.cell_then(b, cell) == alpha) == 1
                            and beta in candidates)
                r.check("restriction: unique factorization", _factor, (f, g, n, mp, h, k, alpha),
                        "exactly one b with b ; res = alpha, and factor returns it")
    return r


def check_cocartesian(C: Cocartesian, sample: Sample, *, uniqueness: bool = True,
                      report: Report | None = None) -> Report:
    """Coproducts at both levels and invertibility of the comparison cells."""
    r = report or Report(f"cocartesian {C.name}")
    obs, pros = sample.objects, sample.pros

    zero = C.ob_initial()
    for x in obs:
        r.check("objects: initial", lambda: C.arr_src(C.ob_bang(x)) == zero
                and (not uniqueness or len(list(C.arr_homs(zero, x))) == 1), x)
    for x, y in itertools.product(obs, repeat=2):
        cp = C.ob_coproduct(x, y)
        s, ix, iy = cp
        for z in obs:
            for f in C.arr_homs(x, z):
                for g in C.arr_homs(y, z):
                    def _copair():
                        u = C.ob_copair(f, g, cp)
                        if C.arr_then(ix, u) != f or C.arr_then(iy, u) != g:
                            return False
                        if not uniqueness:
                            return True
                        return sum(1 for v in C.arr_homs(s, z)
                                   if C.arr_then(ix, v) == f and C.arr_then(iy, v) == g) == 1
                    r.check("objects: coproduct universal property", _copair, (x, y, f, g))

    z1 = C.pro_initial()
    r.check("proarrows: initial has initial feet",
            lambda: C.pro_src(z1) == zero and C.pro_tgt(z1) == zero, z1)
    for n in pros:
        def _bang():
            b = C.pro_bang(n)
            fr = C.frame(b)
            if fr.top != z1 or fr.bottom != n:
                return False
            if not uniqueness:
                return True
            return len(list(C.cells_with_frame(z1, n, fr.left, fr.right))) == 1
        r.check("proarrows: initial", _bang, n)
    for m, m2 in itertools.product(pros, repeat=2):
        def _preserve():
            s, im, im2 = C.ob_coproduct(C.pro_src(m), C.pro_src(m2))
            t, jm, jm2 = C.ob_coproduct(C.pro_tgt(m), C.pro_tgt(m2))
            ps, cm, cm2 = C.pro_coproduct(m, m2)
            return (C.pro_src(ps) == s and C.pro_tgt(ps) == t
                    and C.frame(cm).left == im and C.frame(cm2).left == im2
                    and C.frame(cm).right == jm and C.frame(cm2).right == jm2)
        r.check("source/target preserve coproducts", _preserve, (m, m2))
    for a in sample.cells:
        for b in sample.cells:
            fa, fb = C.frame(a), C.frame(b)
            if fa.bottom != fb.bottom:
                continue
            def _pcopair():
                cp = C.pro_coproduct(fa.top, fb.top)
                u = C.pro_copair(a, b, cp)
                if C.cell_then(cp[1], u) != a or C.cell_then(cp[2], u) != b:
                    return False
                if not uniqueness:
                    return True
                fu = C.frame(u)
                return sum(1 for v in C.cells_with_frame(cp[0], fa.bottom, fu.left, fu.right)
                           if C.cell_then(cp[1], v) == a and C.cell_then(cp[2], v) == b) == 1
            r.check("proarrows: coproduct universal property", _pcopair, (a, b))

    def _iso(law, fwd, inv, witness):
        def _ok():
            c, d = fwd(), inv()
            fc = C.frame(c)
            return (C.is_globular(c) and C.cell_then(c, d) == C.cell_id(fc.top)
                    and C.cell_then(d, c) == C.cell_id(fc.bottom))
        r.check(law, _ok, witness, "c ; c⁻¹ = 1 and c⁻¹ ; c = 1")

    for (m, n), (m2, n2) in itertools.product(sample.pairs, repeat=2):
        _iso("comparison (m⊙n)+(m'⊙n') ≅ (m+m')⊙(n+n')",
             lambda: C.cmp_compose(m, n, m2, n2), lambda: C.cmp_compose_inv(m, n, m2, n2),
             (m, n, m2, n2))
    for x, x2 in itertools.product(obs, repeat=2):
        _iso("comparison id_x+id_x' ≅ id_(x+x')", lambda: C.cmp_id(x, x2),
             lambda: C.cmp_id_inv(x, x2), (x, x2))
    _iso("comparison 0 ≅ 0⊙0", C.cmp_zero_compose, C.cmp_zero_compose_inv, None)
    _iso("comparison 0 ≅ id_0", C.cmp_zero_id, C.cmp_zero_id_inv, None)
    return r


def check_cocartesian_functor(F: LaxDoubleFunctor, sample: Sample,
                              report: Report | None = None) -> Report:
    """Both underlying functors of ``F`` preserve the sampled finite coproducts.

    Preservation is tested through the canonical comparison maps
    ``F(x)+F(y) -> F(x+y)`` and ``0 -> F(0)``, which must be invertible
    (an arrow is invertible iff the image diagram is again a coproduct).
    """
    D, E = F.dom, F.cod
    r = report or Report(f"cocartesian functor {F.name}")

    def arr_iso(f):
        g = E.arr_inverse(f)
        return (g is not None and E.arr_then(f, g) == E.arr_id(E.arr_src(f))
                and E.arr_then(g, f) == E.arr_id(E.arr_tgt(f)))

    r.check("F0 preserves the initial object",
            lambda: arr_iso(E.ob_bang(F.on_ob(D.ob_initial()))), None)
    for x, y in itertools.product(sample.objects, repeat=2):
        def _ob():
            _, ix, iy = D.ob_coproduct(x, y)
            return arr_iso(E.ob_copair(F.on_arr(ix), F.on_arr(iy)))
        r.check("F0 preserves binary coproducts", _ob, (x, y))
    r.check("F1 preserves the initial proarrow",
            lambda: E.cell_is_invertible(E.pro_bang(F.on_pro(D.pro_initial()))), None)
    for m, n in itertools.product(sample.pros, repeat=2):
        def _pro():
            _, im, i_n = D.pro_coproduct(m, n)
            return E.cell_is_invertible(E.pro_copair(F.on_cell(im), F.on_cell(i_n)))
        r.check("F1 preserves binary coproducts", _pro, (m, n))
    return r


def check_restriction_preservation(F: LaxDoubleFunctor, niches: Iterable, tops: Iterable,
                                   report: Report | None = None) -> Report:
    """Images of restriction cells are restriction cells in the codomain."""
    r = report or Report(f"restriction preservation {F.name}")
    tops = list(tops)
    for f, g, n in niches:
        def _ok():
            _, cell = F.dom.restrict(f, g, n)
            ok, w = is_restriction_cell(F.cod, F.on_cell(cell), tops)
            return ok
        r.check("image of a restriction cell is a restriction cell", _ok, (f, g, n))
    return r
