"""Ready-made verification suites over bounded instances.

Each suite returns a :class:`~opencat.dblcore.Report`.  The bounds are
keyword arguments so the command line and the tests can trade coverage for
time; the defaults are the sizes the acceptance tests use.
"""
from __future__ import annotations

import itertools
import random

from .cospan import CSP_FINSET, CospanDouble
from .dblcore import (Report, check_cocartesian, check_equipment, check_lax_double_functor,
                      check_pseudocategory, make_sample)
from .errors import OpenCatError
from .fincat import (CommaCat, CommaOb, check_category, check_functor, functors,
                     random_table_cats)
from .fincolim import FINSET, FinFunction, FinSet, finsets, graphs, pushout, pushout_copair

__all__ = [
    "colimit_suite", "instance_sample", "pseudocategory_suite", "equipment_suite",
    "cocartesian_suite", "maps_suite", "grothendieck_suite", "equivalence_suite",
    "comma_suite", "mutant_suite", "SUITES",
]


# ---------------------------------------------------------------------------
# Finite colimits against enumeration


def _tables(n, m):
    return itertools.product(range(m), repeat=n)


def colimit_suite(max_size: int = 3, max_test: int | None = None) -> Report:
    """Pushouts of every span of finite sets of size at most ``max_size``.

    For every test object ``d`` (size at most ``max_test``, default
    ``max_size``) the cocones over the span are enumerated as raw tables and
    compared with the maps out of the computed pushout: the map ``u ↦ (ia;u,
    ib;u)`` must be a bijection onto the cocones, and ``pushout_copair``
    must return the preimage.
    """
    max_test = max_size if max_test is None else max_test
    r = Report(f"pushouts of finite sets, sizes <= {max_size}")
    sizes = range(max_size + 1)
    for c, a, b in itertools.product(sizes, repeat=3):
        for ft in _tables(c, a):
            for gt in _tables(c, b):
                f = FinFunction(FinSet(c), FinSet(a), ft)
                g = FinFunction(FinSet(c), FinSet(b), gt)
                po = pushout(f, g)
                ia, ib = po.ia.table, po.ib.table
                r.check("square commutes", lambda: all(ia[ft[i]] == ib[gt[i]] for i in range(c)),
                        (f, g))
                for d in range(max_test + 1):
                    cocones = [(p, q) for p in _tables(a, d) for q in _tables(b, d)
                               if all(p[ft[i]] == q[gt[i]] for i in range(c))]
                    images = {}
                    for u in _tables(po.apex.size, d):
                        key = (tuple(u[j] for j in ia), tuple(u[j] for j in ib))
                        images.setdefault(key, []).append(u)
                    r.record("mediating map exists and is unique",
                             len(images) == len(cocones)
                             and all(len(images.get(k, ())) == 1 for k in cocones),
                             (f, g, d))
                    for p, q in cocones:
                        u = pushout_copair(po, FinFunction(FinSet(a), FinSet(d), p),
                                           FinFunction(FinSet(b), FinSet(d), q))
                        r.record("pushout_copair returns the mediating map",
                                 images.get((p, q)) == [u.table], (f, g, p, q))
    return r


# ---------------------------------------------------------------------------
# Instances of the double category interface


def instance_sample(D: CospanDouble, feet, apexes, *, max_cells: int | None = None,
                    limit: int = 2000, quad_limit: int | None = None,
                    cell_limit: int | None = None, seed: int = 0):
    """Sample of every proarrow over ``feet``/``apexes`` and (a bounded number of) cells."""
    pros = list(D.cospans(feet, apexes))
    cells = D.all_cells(pros, limit=max_cells, seed=seed if max_cells else None)
    arrows = [f for a in feet for b in feet for f in D.arr_homs(a, b)]
    return make_sample(D, objects=list(feet), arrows=arrows, pros=pros, cells=cells,
                       limit=limit, seed=seed, quad_limit=quad_limit, cell_limit=cell_limit)


def _note_sample(r: Report, s) -> None:
    sizes = {k: len(getattr(s, k)) for k in ("pros", "pairs", "triples", "quads", "cells",
                                             "cell_vpairs", "cell_hpairs", "squares")}
    r.notes.append(f"sizes {sizes}; exhaustive {s.exhaustive}")


def pseudocategory_suite(max_foot: int = 2, max_apex: int = 2, *, quad_limit: int = 2000,
                         cell_limit: int = 2000, graphs_too: bool = False,
                         max_vertices: int = 2, max_edges: int = 1, seed: int = 0) -> Report:
    """Pseudocategory laws for ``Csp(FinSet)`` and (optionally) ``SCsp(discrete)``.

    Proarrows, composable pairs and triples and single cells are exhaustive
    at the bounds; quadruples and tuples of cells are seeded samples capped
    by ``quad_limit`` and ``cell_limit``.
    """
    from .structured import SCSP_DISCRETE

    r = Report("pseudocategory")
    feet = finsets(max_foot)
    s = instance_sample(CSP_FINSET, feet, finsets(max_apex), limit=10 ** 6,
                        quad_limit=quad_limit, cell_limit=cell_limit, seed=seed)
    _note_sample(r, s)
    r.merge(check_pseudocategory(CSP_FINSET, s), "Csp(FinSet): ")
    if graphs_too:
        s2 = instance_sample(SCSP_DISCRETE, feet, graphs(max_vertices, max_edges),
                             max_cells=4000, limit=5000, quad_limit=quad_limit,
                             cell_limit=cell_limit, seed=seed)
        _note_sample(r, s2)
        r.merge(check_pseudocategory(SCSP_DISCRETE, s2), "SCsp(discrete): ")
    return r


def _niches(D, pros, feet, count, rng):
    niches = [(f, g, n) for n in pros for a in feet for b in feet
              for f in D.arr_homs(a, n.foot_l) for g in D.arr_homs(b, n.foot_r)]
    if count is not None and len(niches) > count:
        niches = rng.sample(niches, count)
    return niches


def _tops(D, pros, feet):
    return [(m, h, k) for m in pros for a in feet for b in feet
            for h in D.arr_homs(m.foot_l, a) for k in D.arr_homs(m.foot_r, b)]


def equipment_suite(max_foot: int = 2, max_apex: int = 2, *, niches: int | None = 150,
                    max_vertices: int = 2, max_edges: int = 1, top_pros: int = 40,
                    seed: int = 0) -> Report:
    """Restriction cells and unique factorization for ``Csp(FinSet)`` and ``SCsp(discrete)``.

    Niches ``(f, g, n)`` are drawn (seeded) from all niches at the bounds.
    Every cell into the bottom with matching sides, from a proarrow among
    ``top_pros`` seeded choices, must factor exactly once among all
    enumerated candidate cells.
    """
    from .structured import SCSP_DISCRETE

    rng = random.Random(seed)
    r = Report("equipment")
    feet = finsets(max_foot)
    for D, apexes in ((CSP_FINSET, finsets(max_apex)),
                      (SCSP_DISCRETE, graphs(max_vertices, max_edges))):
        pros = list(D.cospans(feet, apexes))
        tops = pros if len(pros) <= top_pros else rng.sample(pros, top_pros)
        ns = _niches(D, pros, feet, niches, rng)
        r.merge(check_equipment(D, ns, _tops(D, tops, feet)), f"{D.name}: ")
        r.notes.append(f"{D.name}: {len(ns)} niches, {len(tops)} top proarrows")
    return r


def cocartesian_suite(max_foot: int = 2, max_vertices: int = 2, max_edges: int = 1, *,
                      pros: int = 60, cells: int = 150, seed: int = 0) -> Report:
    """Coproducts and the four comparison cells for ``SCsp(discrete)`` and ``Csp(FinSet)``.

    Objects are all finite sets up to ``max_foot``.  Proarrows (and pairs of
    composable proarrows) are seeded samples of size ``pros``; copair
    uniqueness is checked by enumeration on ``cells`` sampled cells.
    """
    from .structured import SCSP_DISCRETE

    rng = random.Random(seed)
    r = Report("cocartesian")
    feet = finsets(max_foot)
    for D, apexes in ((SCSP_DISCRETE, graphs(max_vertices, max_edges)),
                      (CSP_FINSET, finsets(max_vertices))):
        ps = list(D.cospans(feet, apexes))
        ps = ps if len(ps) <= pros else rng.sample(ps, pros)
        cs = D.all_cells(ps, limit=cells, seed=seed)
        s = make_sample(D, objects=feet, pros=ps, cells=cs, limit=pros, seed=seed)
        r.merge(check_cocartesian(D, s), f"{D.name}: ")
    return r


def maps_suite(max_foot: int = 2, max_vertices: int = 2, max_edges: int = 1, *,
               max_cells: int | None = None, limit: int = 300, seed: int = 0) -> Report:
    """The map ``SCsp(loops) -> SCsp(discrete)`` as a composite and by direct formulas.

    Every proarrow and cell at the bounds is compared (cells can be capped
    with ``max_cells``); laxators are compared on every composable pair.
    The direct map is also checked to be a lax double functor and is
    reported as not pseudo.
    """
    from .structured import LOOPS, compare_lax, scsp, square_map

    D = scsp(LOOPS)
    feet = finsets(max_foot)
    # only proarrows, pairs and cells are compared; skip the larger tuples
    s = instance_sample(D, feet, graphs(max_vertices, max_edges), max_cells=max_cells,
                        limit=10 ** 6, quad_limit=1, cell_limit=1, seed=seed)
    composite, direct = square_map(), square_map(direct=True)
    r = compare_lax(composite, direct, s, Report("maps: composite = direct"))
    r.notes.append(f"{len(s.pros)} proarrows, {len(s.pairs)} pairs, {len(s.cells)} cells")
    small = make_sample(D, objects=s.objects, arrows=s.arrows, pros=s.pros, cells=s.cells,
                        limit=limit, seed=seed)
    lax = check_lax_double_functor(direct, small)
    r.merge(lax, "direct map: ")
    r.record("direct map is lax but not pseudo", lax.flags.get("pseudo") is False,
             lax.flags)
    return r


def grothendieck_suite(*, max_foot: int = 2, max_apex: int = 3, max_edges: int = 2,
                       base_pros: int = 40, pros: int = 150, cells: int = 400,
                       limit: int = 100, seed: int = 0, comma: bool = True) -> Report:
    """``∫F`` for the trivial functor, the graph decoration and the comma functor.

    * trivial fibre over ``Csp(FinSet)`` (feet and apex at most 2): the
      pseudocategory laws and the isomorphism ``∫1 ≅ Csp(FinSet)``;
    * graph decorations at feet ``max_foot``, apex ``max_apex``, at most
      ``max_edges`` edges (seeded samples of the given sizes);
    * open process theories over cospans of small free categories.

    In each case the projection is checked to be a strict double functor.
    """
    from .decorated import CSP_FREECAT, dcsp, graph_decoration, process_theories
    from .grothendieck import (Grothendieck, groth_cells, groth_pros, projection, section,
                               trivial_functor)
    from .fincat import FREECAT, free_cat

    rng = random.Random(seed)
    r = Report("grothendieck")

    def strict(G, s, label):
        pr = check_lax_double_functor(projection(G), s)
        r.merge(pr, f"{label}: projection: ")
        r.record(f"{label}: projection is strict", pr.flags.get("strict") is True, pr.flags)

    # trivial fibre
    C = CSP_FINSET
    feet = finsets(2)
    base = instance_sample(C, feet, finsets(2), max_cells=600, limit=300, seed=seed)
    G1 = Grothendieck(trivial_functor(C))
    sec, proj = section(G1), projection(G1)
    s1 = make_sample(G1, objects=[sec.on_ob(a) for a in base.objects],
                     arrows=[sec.on_arr(f) for f in base.arrows],
                     pros=[sec.on_pro(m) for m in base.pros],
                     cells=[sec.on_cell(c) for c in base.cells], limit=300, seed=seed)
    r.merge(check_pseudocategory(G1, s1), "trivial: ")
    strict(G1, s1, "trivial")
    r.merge(check_lax_double_functor(sec, base), "trivial: section: ")
    for m in base.pros:
        r.check("trivial: section then projection is the identity on proarrows",
                lambda: proj.on_pro(sec.on_pro(m)) == m, m)
    for c in base.cells:
        r.check("trivial: section then projection is the identity on cells",
                lambda: proj.on_cell(sec.on_cell(c)) == c, c)
    for c in s1.cells:
        r.check("trivial: projection then section is the identity on cells",
                lambda: sec.on_cell(proj.on_cell(c)) == c, c)
    for x in s1.objects:
        for y in s1.objects:
            r.check("trivial: section is bijective on arrows",
                    lambda: sorted(map(repr, G1.arr_homs(x, y)))
                    == sorted(repr(sec.on_arr(f)) for f in C.arr_homs(x.base, y.base)), (x, y))

    # graph decorations
    G2 = dcsp(graph_decoration(max_edges))
    bps = list(C.cospans(finsets(max_foot), finsets(max_apex)))
    bps = bps if len(bps) <= base_pros else rng.sample(bps, base_pros)
    gp = groth_pros(G2, bps)
    gp = gp if len(gp) <= pros else rng.sample(gp, pros)
    gc = groth_cells(G2, C.all_cells(bps, limit=cells, seed=seed), gp, limit=cells)
    objs = [G2.ob(a, 0) for a in finsets(max_foot)]
    arrs = [f for x in objs for y in objs for f in G2.arr_homs(x, y)]
    s2 = make_sample(G2, objects=objs, arrows=arrs, pros=gp, cells=gc, limit=limit, seed=seed)
    _note_sample(r, s2)
    r.merge(check_pseudocategory(G2, s2), "graph decorations: ")
    strict(G2, s2, "graph decorations")

    if comma:
        P = process_theories()
        cfeet = FREECAT.objects(1, 1)
        cps = list(CSP_FREECAT.cospans(cfeet, FREECAT.objects(2, 1)))
        ccells = CSP_FREECAT.all_cells(cps, limit=300, seed=seed)
        pp = groth_pros(P, cps)
        pc = groth_cells(P, ccells, pp, limit=300)
        pobjs = [P.ob(a, x) for a in cfeet for x in free_cat(a).objects()]
        parr = [f for x in pobjs for y in pobjs for f in P.arr_homs(x, y)]
        s3 = make_sample(P, objects=pobjs, arrows=parr, pros=pp, cells=pc, limit=150, seed=seed)
        r.merge(check_pseudocategory(P, s3), "process theories: ")
        strict(P, s3, "process theories")
    return r


def equivalence_suite(**bounds) -> Report:
    """Open graphs as structured and as decorated cospans (see ``open_graph_equivalence``)."""
    from .decorated import open_graph_equivalence
    return open_graph_equivalence(**bounds)


def _comma_counts(C: CommaCat):
    """Independent counts of objects and morphisms of ``i/o`` by raw enumeration."""
    i, o, A, B, X = C.i, C.o, C.A, C.B, C.X
    n_obs = sum(len(X.hom(i.on_ob(a), o.on_ob(b))) for a in A.objects() for b in B.objects())
    n_mor = 0
    obs = [(a, f, b) for a in A.objects() for b in B.objects()
           for f in X.hom(i.on_ob(a), o.on_ob(b))]
    for (a, f, b), (a2, f2, b2) in itertools.product(obs, repeat=2):
        for h in A.hom(a, a2):
            for k in B.hom(b, b2):
                if X.then(f, o.on_mor(k)) == X.then(i.on_mor(h), f2):
                    n_mor += 1
    return n_obs, n_mor


def comma_suite(pairs: int = 50, max_objects: int = 3, *, seed: int = 0,
                lax_limit: int = 150) -> Report:
    """Comma categories of random functor pairs, and the comma lax functor.

    For ``pairs`` seeded pairs ``i: A -> X``, ``o: B -> X`` of functors
    between small categories, the comma category's object count must equal
    ``Σ_{a,b} |X(i a, o b)|`` and its morphism count a brute-force count of
    commuting squares; it must satisfy the category axioms and its
    projections must be functors.  The comma lax functor's laxator and
    unitor components are checked to be functors, and the lax functor laws
    are checked on cospans of small free categories.
    """
    from .decorated import CSP_FREECAT, _comma, comma_functor
    from .fincat import FREECAT

    rng = random.Random(seed)
    r = Report("comma")
    done, attempts = 0, 0
    while done < pairs and attempts < 50 * pairs:
        attempts += 1
        A, B, X = random_table_cats(rng, 3, max_objects)
        Fi, Fo = functors(A, X), functors(B, X)
        if not Fi or not Fo:
            continue
        i, o = rng.choice(Fi), rng.choice(Fo)
        C = CommaCat(i, o)
        n_obs, n_mor = _comma_counts(C)
        r.record("object count = Σ|Hom(i a, o b)|", len(C.objects()) == n_obs,
                 (A, B, X, len(C.objects()), n_obs))
        r.record("morphism count matches enumeration", len(C.morphisms()) == n_mor,
                 (A, B, X, len(C.morphisms()), n_mor))
        r.record("comma category axioms", not check_category(C), (A, B, X))
        r.record("projections are functors",
                 not check_functor(C.proj_left()) and not check_functor(C.proj_right()),
                 (A, B, X))
        done += 1
    r.notes.append(f"{done} functor pairs")

    Cm = comma_functor()
    feet = FREECAT.objects(1, 1)
    cps = list(CSP_FREECAT.cospans(feet, FREECAT.objects(2, 1)))
    cells = CSP_FREECAT.all_cells(cps, limit=300, seed=seed)
    arrows = [f for a in feet for b in feet for f in FREECAT.homs(a, b)]
    s = make_sample(CSP_FREECAT, objects=feet, arrows=arrows, pros=cps, cells=cells,
                    limit=lax_limit, seed=seed)
    for m, n in s.pairs:
        r.check("laxator components are functors",
                lambda: not check_functor(Cm.laxator(m, n).apex_map), (m, n))
    for a in feet:
        r.check("unitor components are functors",
                lambda: not check_functor(Cm.unitor(a).apex_map), a)
    for m in s.pros:
        r.check("comma spans: projections are functors",
                lambda: not check_functor(_comma(m).left) and not check_functor(_comma(m).right), m)
    r.merge(check_lax_double_functor(Cm, s), "Comma: ")
    return r


def mutant_suite(names=None) -> Report:
    """Run mutation fixtures; each law passes when the fixture is detected."""
    from .mutants import MUTANTS
    r = Report("mutants")
    for m in MUTANTS:
        if names and m.name not in names:
            continue
        try:
            detected, detail = m.run()
        except OpenCatError as exc:
            detected, detail = False, f"unexpected {type(exc).__name__}: {exc}"
        r.record(f"{m.name} detected ({m.expect})", detected, detail)
        r.notes.append(f"{m.name}: {detail}")
    return r


SUITES = {
    "pseudocat": pseudocategory_suite,
    "equipment": equipment_suite,
    "cocartesian": cocartesian_suite,
    "laxfunctor": maps_suite,
    "groth": grothendieck_suite,
    "equivalence": equivalence_suite,
}
