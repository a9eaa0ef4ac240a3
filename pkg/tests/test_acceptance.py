"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

import io
import json
import math
import time
from fractions import Fraction as F

import pytest

from snum import cli
from snum.alloc import REPRESENTATIVES, audit
from snum.analysis import check_axioms, eigen_harness, fit_rate, pietsch_harness
from snum.params import EmbeddingParams, RegionTag, classify_point, classify_region, zones_containing
from snum.rates import Comparison, compare_entropy_weyl, formula_for_region
from snum.seqmodel import BlockModel, dyadic_ns, spectrum_samples

# criterion 1: (argv, alpha, gamma); expected exponents are the worked examples
RATE_SETS = [
    (["--t", "1", "--p1", "2", "--p2", "2", "--d", "2"], "1/1", "1/1"),
    (["--t", "1", "--p1", "1", "--p2", "3", "--d", "2"], "5/6", "1/3"),
    (["--t", "1/5", "--p1", "4", "--p2", "2", "--d", "3"], "2/5", "9/10"),
    (["--t", "1", "--p1", "2", "--target", "linf", "--d", "2"], "1/2", "1/1"),
    (["--t", "3/10", "--p1", "1", "--target", "l1", "--d", "2"], "3/10", "0/1"),
    (["--t", "3", "--p1", "2", "--target", "zygmund", "--s", "1", "--d", "2"], "3/2", "3/2"),
    (["--kind", "approx", "--t", "3", "--p1", "inf", "--target", "zygmund", "--s", "1", "--d", "2"], "2/1", "2/1"),
    (["--kind", "approx", "--t", "3", "--p1", "1", "--target", "zygmund", "--s", "1", "--d", "2"], "3/2", "1/1"),
    (["--kind", "approx", "--t", "9/5", "--p1", "3/2", "--target", "zygmund", "--s", "1", "--d", "2"], "1/5", "2/15"),
    (["--isotropic", "--t", "1", "--p1", "1", "--p2", "2"], "1/1", "0/1"),
    (["--isotropic", "--t", "1", "--p1", "4", "--p2", "4"], "1/1", "0/1"),
    (["--isotropic", "--t", "1/5", "--p1", "4", "--p2", "2"], "2/5", "0/1"),
]

# criterion 8: one interior point per sub-region, with two extra
COMPARISON_POINTS = [
    (F(1), F(1), F(3, 2), RegionTag.I_STAR, Comparison.SAME_ORDER),
    (F(2), F(4, 3), F(5, 3), RegionTag.I_STAR, Comparison.SAME_ORDER),
    (F(1), F(1), F(4), RegionTag.II, Comparison.ENTROPY_SMALLER),
    (F(1), F(3), F(4), RegionTag.III, Comparison.ENTROPY_SMALLER),
    (F(1), F(4), F(3), RegionTag.IV_STAR, Comparison.WEYL_SMALLER),
    (F(1, 20), F(4), F(3), RegionTag.IV_SUB, Comparison.WEYL_SMALLER),
    (F(1), F(4), F(3, 2), RegionTag.V_STAR, Comparison.WEYL_SMALLER),
    (F(1, 8), F(4), F(3, 2), RegionTag.V_SUB, Comparison.WEYL_SMALLER),
    (F(1, 2), F(8), F(5, 4), RegionTag.V_STAR, Comparison.WEYL_SMALLER),
]


def crit1():
    start = time.perf_counter()
    bad = []
    for argv, alpha, gamma in RATE_SETS:
        out = io.StringIO()
        code = cli.run(["rate", *argv, "--format", "json"], out=out, err=io.StringIO())
        obj = json.loads(out.getvalue()) if code == 0 else {}
        if (obj.get("alpha"), obj.get("gamma")) != (alpha, gamma):
            bad.append((argv, obj.get("alpha"), obj.get("gamma")))
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 1, f"{len(RATE_SETS) - len(bad)}/{len(RATE_SETS)} exact, {elapsed:.2f}s {bad}"


def crit2():
    start = time.perf_counter()
    misses = []
    worst = 0.0
    for t in (F(1, 2), F(1), F(2)):
        for d in (1, 2, 3):
            samples = spectrum_samples(BlockModel(d, t), dyadic_ns(8, 24))
            a = fit_rate(samples, fixed_gamma=(d - 1) * t).alpha_hat
            worst = max(worst, abs(a - float(t)))
            if abs(a - float(t)) > 0.05:
                misses.append(f"t={t} d={d} alpha_hat={a:.4f}")
    elapsed = time.perf_counter() - start
    return not misses and elapsed < 5, f"max |alpha_hat - t| = {worst:.4f}, {elapsed:.2f}s {misses}"


def crit3():
    start = time.perf_counter()
    misses = []
    for name, (scheme, params) in sorted(REPRESENTATIVES.items()):
        rs = audit(scheme, params, 6, 16).ratios
        in_band = all(math.isfinite(r) and 1 / 32 <= r <= 32 for r in rs)
        spread = max(rs) / min(rs)
        blow_up = all(b > a for a, b in zip(rs, rs[1:])) and rs[-1] / rs[-2] >= 1.25
        if not in_band or spread >= 8 or blow_up:
            misses.append(f"{name}: [{min(rs):.3g}, {max(rs):.3g}] spread {spread:.2f}")
    elapsed = time.perf_counter() - start
    ok = not misses and elapsed < 10
    return ok, f"{len(REPRESENTATIVES) - len(misses)}/{len(REPRESENTATIVES)} in band, {elapsed:.2f}s {misses}"


def crit4():
    rep = eigen_harness(200, seed=1, max_dim=16, tol=1e-10)
    return rep.ok and rep.margin >= 0, f"{rep.checks} checks, {len(rep.violations)} violations, margin {rep.margin:.4g}"


def crit5():
    rep = check_axioms(trials=500, seed=1, max_dim=16, tol=1e-8)
    return rep.ok, f"{rep.checks} checks, {len(rep.violations)} violations"


def crit6():
    rep = pietsch_harness(100, seed=1, max_len=10_000)
    return rep.ok, f"{rep.checks} checks, {len(rep.violations)} violations"


def _boundary_points():
    # 50 points on each line; 1/p_src stays below 3/2 so t = 1 is compact
    pts = [(1 / F(k, 34), F(2)) for k in range(1, 51)]
    pts += [(F(2), 1 / F(k, 51)) for k in range(1, 51)]
    return pts


def crit7():
    t = F(1)
    bad = []
    pairs = 0  # points checked
    for p1, p2 in _boundary_points():
        forms = set()
        for z in zones_containing(p1, p2):
            tag = classify_point(t, p1, p2, zone=z).tag
            forms.add(formula_for_region(tag, t, p1, p2))
        pairs += 1
        if len(forms) != 1 or len(zones_containing(p1, p2)) < 2:
            bad.append((p1, p2, sorted(forms)))
    return not bad, f"{pairs} points, {len(bad)} disagreements {bad[:3]}"


def crit8():
    bad = []
    for t, p1, p2, tag, label in COMPARISON_POINTS:
        params = EmbeddingParams(t, p1, p2, 2)
        got_tag = classify_region(params).tag
        got = compare_entropy_weyl(params)
        if got_tag is not tag or got is not label:
            bad.append((t, p1, p2, got_tag.value, got.value))
    return not bad, f"{len(COMPARISON_POINTS) - len(bad)}/{len(COMPARISON_POINTS)} match {bad}"


CRITERIA = {1: crit1, 2: crit2, 3: crit3, 4: crit4, 5: crit5, 6: crit6, 7: crit7, 8: crit8}


def _line(n):
    ok, detail = CRITERIA[n]()
    return ok, f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = _line(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        print(_line(n)[1])
