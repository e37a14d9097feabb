"""Acceptance suite: nine criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import math
import os
import subprocess
import sys
import tempfile
import time

import pytest

from tropicount.asymptotics import bound_table
from tropicount.constructions import make_family, rectangle_ladder
from tropicount.constructions.verify import family_verify, strip_criterion_sweep
from tropicount.geometry import (
    PolygonSpec,
    boundary_integer_length,
    closed_form_profile,
    legal_specs,
    sigma_profile,
)
from tropicount.oracle import count_marked_admissible
from tropicount.segments import find_partition, strip_check, project_to_system
from tropicount.systems import Violation, is_admissible

RESULTS = {}

GRID_N = [2**k for k in range(6, 14)]


def record(number, ok, detail):
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    print(RESULTS[number])
    return ok


def criterion_1():
    t = time.perf_counter()
    bad = []
    for s in legal_specs(6, 3):
        prof = sigma_profile(s)
        if (prof.m, prof.sigma) != closed_form_profile(s):
            bad.append(s.label())
    dt = time.perf_counter() - t
    n_specs = sum(1 for _ in legal_specs(6, 3))
    ok = not bad and dt < 1.0
    return ok, f"sigma profiles match closed forms on {n_specs - len(bad)}/{n_specs} polygons in {dt:.3f}s (limit 1s)"


def criterion_2():
    bad = []
    for s in legal_specs(6, 3):
        nd = s.n * s.d
        want = 2 * nd - s.n * s.d1 - 1 if s.family == "hexagonD" else 2 * nd - 1
        got = boundary_integer_length(s) - sigma_profile(s).m - 1
        if got != want:
            bad.append(s.label())
    return not bad, f"interval budget identity holds on all polygons, {len(bad)} mismatches"


ORACLE_TRUTHS = [
    (PolygonSpec("square", 1), 1),
    (PolygonSpec("square", 2), 4),
    (PolygonSpec("pentagon", 2, 1), 4),
    (PolygonSpec("hexagonD", 2, 1), 1),
]


def criterion_3():
    t = time.perf_counter()
    parts, ok = [], True
    for spec, want in ORACLE_TRUTHS:
        prof = sigma_profile(spec)
        a = count_marked_admissible(prof, "sweep").marked_admissible_count
        b = count_marked_admissible(prof, "naive").marked_admissible_count
        ok &= a == b == want
        parts.append(f"{spec.family}{spec.params}={a}/{b}")
    dt = time.perf_counter() - t
    ok &= dt < 10
    return ok, "S by sweep/naive: " + ", ".join(parts) + f" in {dt:.3f}s"


VALIDITY_GRID = (
    [("square", (d,), 1) for d in range(2, 7)]
    + [("square", (d,), 2) for d in (1, 2, 3)]
    + [("pentagon", (2, 1), 1), ("pentagon", (3, 1), 1), ("pentagon", (2, 1), 2)]
    + [("hexagonC", (3, 2, 1), 1)]
    + [("hexagonD", (2, 1), 1), ("hexagonD", (3, 1), 1), ("hexagonD", (3, 2), 1)]
)


def criterion_4():
    t = time.perf_counter()
    total = bad = 0
    for family, params, n in VALIDITY_GRID:
        fam = make_family(family, params, n)
        prof = sigma_profile(fam.spec)
        for inst in fam.iterate():
            total += 1
            proj = project_to_system(inst.collection, prof)
            if isinstance(proj, Violation) or not is_admissible(proj.intervals, prof.m):
                bad += 1
    dt = time.perf_counter() - t
    return bad == 0 and dt < 30, f"{total - bad}/{total} instances proper and trees over {len(VALIDITY_GRID)} families in {dt:.2f}s"


def criterion_5():
    parts, ok = [], True
    for N in range(2, 7):
        fam = make_family("square", (N,), 1)
        rep = family_verify(fam, strips=False)
        # M~ and the marking factor both equal the ladder product of (y_i - y_{i+1})! squared
        ladder = math.prod(math.factorial(w) for w in rectangle_ladder(N).widths()) ** 2
        want, want_marked = ladder, ladder * ladder
        ok &= rep.ok and rep.distinct_projections == want and rep.marked == want_marked
        parts.append(f"nd={N}: {rep.distinct_projections}/{want}, marked {rep.marked}/{want_marked}")
    return ok, "; ".join(parts)


STRIP_FAMILIES = [
    ("square", (4,), 1), ("square", (7,), 1), ("square", (10,), 1), ("square", (3,), 3), ("square", (5,), 4),
    ("pentagon", (3, 1), 1), ("pentagon", (3, 1), 2), ("pentagon", (4, 2), 3),
    ("hexagonC", (3, 2, 1), 2), ("hexagonC", (5, 3, 2), 3),
    ("hexagonD", (3, 1), 2), ("hexagonD", (5, 2), 3),
]
STRIP_SAMPLES = 1000


def sweep_profiles(max_m=6, max_budget=6):
    profs = {}
    for spec in legal_specs(6, 3):
        p = sigma_profile(spec)
        if p.m <= max_m and p.budget <= max_budget:
            profs.setdefault((p.m, p.sigma), p)
    return list(profs.values())


def criterion_6():
    t = time.perf_counter()
    sweep = strip_criterion_sweep(sweep_profiles(), max_level=3, max_segments=6)
    failed = drawn = 0
    per = divmod(STRIP_SAMPLES, len(STRIP_FAMILIES))
    for k, (family, params, n) in enumerate(STRIP_FAMILIES):
        fam = make_family(family, params, n)
        m = sigma_profile(fam.spec).m
        for inst in fam.sample(seed=2024, count=per[0] + (k < per[1])):
            drawn += 1
            labels = find_partition(inst.collection, m)
            if labels is None or not strip_check(inst.collection, labels, m):
                failed += 1
    dt = time.perf_counter() - t
    ok = not sweep.counterexamples and sweep.passing > 0 and failed == 0 and drawn == STRIP_SAMPLES and dt < 60
    return ok, (
        f"{len(sweep.counterexamples)} counterexamples among {sweep.passing} passing labelings "
        f"({sweep.collections} collections, {sweep.profiles} profiles); "
        f"{drawn - failed}/{drawn} seeded instances pass; {dt:.1f}s"
    )


def criterion_7():
    cases = [("square", (d,), n) for d in range(1, 5) for n in range(1, 5) if d * n <= 4]
    cases += [("pentagon", (2, 1), 1), ("hexagonD", (2, 1), 1)]
    parts, ok = [], True
    for family, params, n in cases:
        rep = family_verify(make_family(family, params, n), oracle=True)
        ok &= rep.ok
        parts.append(f"{family}{params}n{n} {rep.marked}<={rep.oracle_marked}")
    return ok, "; ".join(parts)


COEFFICIENT_TARGETS = [
    ("square", (1,), 4),
    ("pentagon", (2, 1), 7),
    ("hexagonC", (3, 2, 1), 9),
    ("hexagonD", (2, 1), 6),
]


def criterion_8():
    t = time.perf_counter()
    parts, ok = [], True
    for family, params, target in COEFFICIENT_TARGETS:
        rep = bound_table(family, params, GRID_N)
        below = all(r.ratio < target for r in rep.rows)
        ok &= rep.target == target and not rep.insufficient and rep.relative_error <= 0.05 and below
        parts.append(f"{family} A={rep.A:.3f}/{target} ({rep.relative_error:.2%})")
    dt = time.perf_counter() - t
    ok &= dt < 5
    return ok, "; ".join(parts) + f" in {dt:.2f}s"


def _cli(args, cwd):
    proc = subprocess.run(
        [sys.executable, "-m", "tropicount", *args], cwd=cwd, capture_output=True, check=False
    )
    return proc.returncode, proc.stdout


def criterion_9():
    runs = {
        "construct": ["construct", "--family", "square", "--d", "7", "--mode", "sample", "--seed", "7", "--samples", "20", "--marks"],
        "bound": ["bound", "--family", "pentagon", "--d", "2", "--d1", "1", "--n-list", "64:8192:x2",
                  "--out", "t.csv", "--plot", "t.svg"],
        "render": ["render", "--family", "hexagonC", "--d", "3", "--d1", "2", "--d2", "1", "--n", "2", "--index", "5"],
    }
    same = []
    for name, args in runs.items():
        outputs = []
        for _ in range(2):
            with tempfile.TemporaryDirectory() as tmp:
                code, out = _cli(args, tmp)
                files = {f: open(os.path.join(tmp, f), "rb").read() for f in sorted(os.listdir(tmp))}
                outputs.append((code, out, files))
        same.append((name, outputs[0] == outputs[1] and outputs[0][0] == 0 and bool(outputs[0][1] or outputs[0][2])))
    return all(ok for _, ok in same), ", ".join(f"{n} {'identical' if ok else 'DIFFERS'}" for n, ok in same)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("number", range(1, 10))
def test_criterion(number):
    ok, detail = CRITERIA[number - 1]()
    assert record(number, ok, detail), detail


if __name__ == "__main__":
    results = [record(k, *fn()) for k, fn in enumerate(CRITERIA, start=1)]
    sys.exit(0 if all(results) else 1)
