"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (visible without ``-s``).
All checks are exact rational computations, so the only tolerances are the
stated time limits.
"""

import random
import subprocess
import sys
import time

import pytest

from sl21weyl import verifier as V
from sl21weyl.algebra import TruncAlgebra
from sl21weyl.parser import parse_uelem
from sl21weyl.pbw import format_uelem


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        return ok
    return emit


def _failed(reports):
    return [f"{r.check}{r.params}: {r.failure_count} failures" for r in reports if not r.passed]


def test_criterion_1_basis_theorem(report):
    cases = [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (2, 3)]
    details, ok = [], True
    for m, n in cases:
        t0 = time.perf_counter()
        rep = V.verify_pv_and_basis(TruncAlgebra(n), m)
        secs = time.perf_counter() - t0
        ok &= rep.passed and secs < 60
        details.append(f"m={m},trunc:{n} dim={rep.params['dim']} ({secs:.2f}s)")
        if (m, n) == (2, 2):
            ok &= rep.params["dim"] == 19
    assert report(1, ok, "; ".join(details))


def test_criterion_2_degp_items(report):
    reports = []
    for n in (1, 2, 3):
        for item in V.DEGP_ITEMS:
            reports.append(V.verify_degp(item, TruncAlgebra(n), max_size=3, max_r=4, max_n=2, max_i=3, max_j=2))
    bad = _failed(reports)
    total = sum(r.instances for r in reports)
    assert report(2, not bad, f"items 1-7 over trunc:1..3, {total} instances" + (f"; {bad}" if bad else "")), bad


def test_criterion_3_deltap(report):
    rep = V.verify_deltap_range(TruncAlgebra(2), max_total=3, max_k=3)
    assert report(3, rep.passed, f"{rep.instances} instances, {rep.ms / 1000:.1f}s"), rep.failures[:3]


def test_criterion_4_p1v(report):
    rep = V.verify_p1v_range(TruncAlgebra(2), max_total=3)
    assert report(4, rep.passed, f"{rep.instances} instances"), rep.failures[:3]


def test_criterion_5_spanning(report):
    reports = [V.verify_spanning_lemmas(TruncAlgebra(2), m) for m in (1, 2, 3)]
    bad = _failed(reports)
    total = sum(r.instances for r in reports)
    assert report(5, not bad, f"m=1..3 over trunc:2, {total} instances"), bad


def test_criterion_6_structural(report):
    t0 = time.perf_counter()
    reports = V.verify_structural()
    reports.append(V.verify_pbw(TruncAlgebra(2), samples=200, seed=0))
    reports.append(V.verify_pbw(TruncAlgebra(3), samples=200, seed=0))
    secs = time.perf_counter() - t0
    bad = _failed(reports)
    ok = not bad and secs < 30
    assert report(6, ok, f"{len(reports)} suites in {secs:.2f}s"), bad


def test_criterion_7_relations(report):
    reports = [V.verify_relations(TruncAlgebra(3), m) for m in range(5)]
    bad = _failed(reports)
    assert report(7, not bad, f"m=0..4 over trunc:3, {sum(r.instances for r in reports)} instances"), bad


def test_criterion_8_cli(report):
    alg = TruncAlgebra(3)
    rng = random.Random(2024)
    mismatches = 0
    for _ in range(100):
        u = V.random_uelem(alg, rng, range(3), max_len=4, terms=3)
        mismatches += parse_uelem(format_uelem(u), alg) != u
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "sl21weyl", "verify", "all", "--profile", "quick"],
                          capture_output=True, text=True)
    secs = time.perf_counter() - t0
    ok = mismatches == 0 and proc.returncode == 0 and secs < 120
    detail = f"round-trip mismatches {mismatches}/100; verify all --profile quick exit {proc.returncode} in {secs:.1f}s"
    assert report(8, ok, detail), proc.stdout[-2000:] + proc.stderr[-2000:]
