"""End-to-end acceptance checks, one per criterion.

Each test runs a verification suite at its default bounds, prints a single
``CRITERION n: PASS|FAIL`` line and asserts the outcome.  Run on its own with

    pytest tests/test_acceptance.py -s
"""
import time

import pytest

from opencat import suites


def _verdict(capsys, n, title, report, extra=""):
    line = f"CRITERION {n}: {'PASS' if report.ok else 'FAIL'} {title}"
    if extra:
        line += f" ({extra})"
    with capsys.disabled():
        print("\n" + line)
    assert report.ok, str(report)


def _timed(fn, **kw):
    t = time.perf_counter()
    r = fn(**kw)
    return r, time.perf_counter() - t


def test_criterion_1_colimits(capsys):
    r, dt = _timed(suites.colimit_suite, max_size=3)
    checked = sum(e.checked for e in r.laws.values())
    _verdict(capsys, 1, "pushouts of finite sets against enumeration", r,
             f"{checked} checks, {dt:.1f}s")
    assert dt < 60


def test_criterion_2_pseudocategory(capsys):
    r, dt = _timed(suites.pseudocategory_suite, max_foot=2, max_apex=2)
    _verdict(capsys, 2, "Csp(FinSet) pseudocategory laws at feet and apex <= 2", r,
             f"{dt:.1f}s")


def test_criterion_3_equipment(capsys):
    r, dt = _timed(suites.equipment_suite, max_foot=2, max_apex=2)
    counts = [r.laws[f"{name}: restriction: unique factorization"].checked
              for name in ("Csp(FinSet)", "SCsp(discrete)")]
    _verdict(capsys, 3, "restriction cells factor uniquely", r,
             f"{counts[0]} + {counts[1]} factorizations, {dt:.1f}s")
    assert all(counts)


def test_criterion_4_cocartesian(capsys):
    r, dt = _timed(suites.cocartesian_suite, max_foot=2)
    comparisons = [k for k in r.laws if "comparison" in k]
    _verdict(capsys, 4, "comparison cells invertible, copairs unique", r,
             f"{len(comparisons)} comparison laws, {dt:.1f}s")
    assert len(comparisons) >= 4


def test_criterion_5_maps(capsys):
    r, dt = _timed(suites.maps_suite, max_foot=2)
    mism = sum(e.failed for k, e in r.laws.items() if not k.startswith("direct map"))
    _verdict(capsys, 5, "three-step composite equals the direct map", r,
             f"{mism} mismatches, {dt:.1f}s")
    assert r.laws["proarrows"].checked and r.laws["cells"].checked


def test_criterion_6_grothendieck(capsys):
    r, dt = _timed(suites.grothendieck_suite, max_foot=2, max_apex=3, max_edges=2)
    strict = [k for k in r.laws if k.endswith("projection is strict")]
    _verdict(capsys, 6, "double Grothendieck construction", r, f"{dt:.1f}s")
    assert len(strict) >= 2


def test_criterion_7_equivalence(capsys):
    r, dt = _timed(suites.equivalence_suite, max_foot=2, max_vertices=3)
    _verdict(capsys, 7, "open graphs as structured and decorated cospans agree", r,
             f"{dt:.1f}s")
    assert r.laws["composites"].checked > 0 and r.laws["identities"].checked > 0
    assert dt < 300


def test_criterion_8_comma(capsys):
    r, dt = _timed(suites.comma_suite, pairs=50, max_objects=3)
    _verdict(capsys, 8, "comma categories and the comma lax functor", r, f"{dt:.1f}s")
    assert r.laws["object count = Σ|Hom(i a, o b)|"].checked == 50


def test_criterion_9_mutants(capsys):
    r, dt = _timed(suites.mutant_suite)
    detected = sum(1 for e in r.laws.values() if not e.failed)
    _verdict(capsys, 9, "mutation fixtures detected", r, f"{detected}/{len(r.laws)}")
    assert detected == 6


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
