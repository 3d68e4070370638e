"""Acceptance gate: one test per exit criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (lines go to the terminal even
under output capture) or ``python tests/test_acceptance.py``.
"""

import sys

import pytest

from mapcyl import verify as v
from mapcyl.bench import run_benchmark
from mapcyl.closed_form import gamma
from mapcyl.cylinder import Cyl, quotient_distance
from mapcyl.homotopy_data import FIXTURE_NAMES, fixture, validate_equivalence

IMPLS = ("compositional", "printed", "corrected")


def tol_for(name):
    return 1e-12 if name == "identity-line" else 1e-9


_capture = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


def announce(number, title, ok, detail=""):
    line = f"[criterion {number:2d}] {'PASS' if ok else 'FAIL'} {title}"
    if detail:
        line += f" :: {detail}"
    if _capture is None:
        print(line)
        return
    with _capture.disabled():
        print("\n" + line)


def gate(number, title, reports):
    bad = [r.summary() for r in reports if not r.passed]
    worst = max(reports, key=lambda r: r.max_dev / r.tol if r.tol else r.max_dev)
    announce(number, title, not bad, "; ".join(bad) or f"worst {worst.summary()}")
    assert not bad


def test_c01_fixture_validity():
    reports = [validate_equivalence(fixture(n), 1000, 0, 1e-9) for n in FIXTURE_NAMES]
    gate(1, "fixture endpoint identities, n=1000, tol 1e-9", reports)


def test_c02_strong_deformation_retraction_certificate():
    reports = []
    for name in FIXTURE_NAMES:
        he, tol = fixture(name), tol_for(name)
        reports.append(v.check_endpoints("compositional", he, 1000, 0, tol))
        reports.append(v.check_strongness("compositional", he, 1000, 0, tol))
        reports.append(v.check_seam("compositional", he, 1000, 0, tol))
    gate(2, "compositional endpoints/strongness/seam, n=1000", reports)


def test_c03_corrected_equivalence():
    reports = [v.check_equivalence("compositional", "corrected", fixture(n), 1000, 0, 1e-9,
                                   "full", grid=100) for n in FIXTURE_NAMES]
    gate(3, "compositional ~ corrected on 100x100 grid + 1000 base points, tol 1e-9", reports)


def test_c04_printed_partial_equivalence():
    reports = [v.check_equivalence("compositional", "printed", fixture(n), 1000, 0, 1e-9,
                                   "agreement", grid=100) for n in FIXTURE_NAMES]
    gate(4, "compositional ~ printed on t<=1/2 | s<=1/3 | s>=2/3 | base, tol 1e-9", reports)


def test_c05_published_formula_audit():
    he = fixture("identity-line")
    r = v.check_equivalence("compositional", "printed", he, 1000, 0, 1e-9, "defect", grid=100)
    p = Cyl((3.0,), 1.0)
    d_038 = quotient_distance(he, gamma(he, "compositional", p, 0.38),
                              gamma(he, "printed", p, 0.38))
    ok = r.max_dev > 0.5 and d_038 == pytest.approx(0.84, abs=1e-9)
    announce(5, "printed formula defect on {t>1/2, 1/3<s<2/3}", ok,
             f"measured max_dev={r.max_dev:.17g} over {r.samples} samples; "
             f"deviation at (t=1, s=0.38)={d_038:.17g}")
    assert r.max_dev > 0.5
    assert d_038 == pytest.approx(0.84, abs=1e-9)


def test_c06_k_symmetry():
    reports = [v.check_k_symmetry(fixture(n), 500, 0, tol_for(n)) for n in FIXTURE_NAMES]
    gate(6, "K([x,1], s) = K([x,1], 1-s), n=500", reports)


def test_c07_phi_retraction():
    gate(7, "phi on 200x200 grid, tol 1e-12", [v.check_phi(200, 1e-12)])


def test_c08_boundary_continuity():
    reports = [v.check_boundary_continuity("corrected", fixture(n), 1e-6, 50)
               for n in FIXTURE_NAMES]
    gate(8, "corrected continuity across piece boundaries, eps=1e-6, factor 50", reports)


def test_c09_benchmark_smoke():
    r = run_benchmark(fixture("identity-line"), IMPLS, 1000, 5, 0)
    rows = r.rows
    ok = (
        [row.impl for row in rows] == list(IMPLS)
        and len({row.grid_points for row in rows}) == 1
        and all(row.median_ns_per_eval > 0 for row in rows)
        and len({row.agreement_checksum for row in rows}) == 1
    )
    detail = ", ".join(f"{row.impl}={row.median_ns_per_eval:.0f}ns" for row in rows)
    announce(9, "benchmark report well formed, agreement checksums equal", ok, detail)
    assert ok


def test_c10_determinism():
    he = fixture("punctured-plane")
    runs = [
        (lambda: v.check_equivalence("compositional", "corrected", he, 300, 7, 1e-9, grid=30)),
        (lambda: v.check_boundary_continuity("corrected", he, 1e-6, 50, seed=7)),
        (lambda: v.check_strongness("printed", fixture("identity-line"), 300, 7, 1e-9)),
        (lambda: validate_equivalence(he, 300, 7)),
    ]
    same_checks = all(f().to_dict() == f().to_dict() for f in runs)
    b1 = run_benchmark(he, IMPLS, 300, 2, 7).without_timings()
    b2 = run_benchmark(he, IMPLS, 300, 2, 7).without_timings()
    ok = same_checks and b1 == b2
    announce(10, "reports reproduce bit-for-bit with a fixed seed", ok)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
