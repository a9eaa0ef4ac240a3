import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from snum.analysis import (
    SQRT_2E,
    check_axioms,
    eigen_bound_report,
    eigen_harness,
    fit_rate,
    local_slopes,
    pietsch_harness,
    weyl_eigen_bound,
)
from snum.errors import DegenerateFit, DomainError
from snum.lpnum import hilbert_snumbers
from snum.seqmodel import BlockModel, dyadic_ns, spectrum_samples


# fitting --------------------------------------------------------------------


def test_fit_d1_t1():
    s = spectrum_samples(BlockModel(1, 1), dyadic_ns(3, 20))
    r = fit_rate(s, fixed_gamma=0)
    assert 0.95 <= r.alpha_hat <= 1.05
    assert r.gamma_fixed and r.gamma_hat == 0


def test_fit_pure_power_is_exact():
    s = [(n, n**-2.0) for n in range(8, 40)]
    r = fit_rate(s, fixed_gamma=0)
    assert r.alpha_hat == pytest.approx(2.0, abs=1e-12)
    assert r.residual_rms < 1e-12


def test_fit_d2_t1_with_fixed_gamma():
    s = spectrum_samples(BlockModel(2, 1), dyadic_ns(8, 24))
    assert abs(fit_rate(s, fixed_gamma=1).alpha_hat - 1) <= 0.05


@given(st.floats(0.1, 3.0), st.floats(0.0, 3.0), st.floats(-2.0, 2.0))
@settings(max_examples=100, deadline=None)
def test_fit_recovers_exact_model(alpha, gamma, c):
    ns = [2**k for k in range(3, 30)]
    s = [(n, math.exp(c - alpha * math.log(n) + gamma * math.log(math.log(n)))) for n in ns]
    r = fit_rate(s)
    assert r.alpha_hat == pytest.approx(alpha, abs=1e-6)
    assert r.gamma_hat == pytest.approx(gamma, abs=1e-6)


def test_fit_domain_errors():
    good = [(n, 1.0 / n) for n in range(8, 20)]
    with pytest.raises(DomainError):
        fit_rate(good[:7])
    with pytest.raises(DomainError):
        fit_rate([(4, 0.25)] + good)
    with pytest.raises(DomainError):
        fit_rate(good[:-1] + [(100, 0.0)])
    with pytest.raises(DomainError):
        fit_rate(good + [(8, 0.125)])


def test_fit_degenerate():
    # a single repeated n cannot pass validation; a near-collinear design
    # (log log n tracks log n over a tiny range) is rank deficient
    with pytest.raises(DegenerateFit):
        fit_rate([(10**12 + k, 1.0) for k in range(8)])


def test_local_slopes():
    s = [(n, n**-1.5) for n in (8, 16, 32)]
    sl = local_slopes(s)
    assert sl[0] is None
    assert sl[1:] == pytest.approx([1.5, 1.5])


# eigenvalue bound -----------------------------------------------------------


def test_weyl_eigen_examples():
    assert weyl_eigen_bound([1, 0.5, 0.25], 3) == pytest.approx(SQRT_2E / 2)
    assert weyl_eigen_bound([1, 0.5, 0.25], 3) == pytest.approx(1.1658, abs=1e-4)
    assert weyl_eigen_bound([1.0] * 5, 5) == pytest.approx(math.sqrt(2 * math.e))
    assert weyl_eigen_bound([1, 0.5, 0.0], 3) == 0.0


@given(st.lists(st.floats(1e-6, 1e6), min_size=1, max_size=30), st.data())
@settings(max_examples=200, deadline=None)
def test_weyl_eigen_ignores_tail(xs, data):
    n = data.draw(st.integers(1, len(xs)))
    extra = data.draw(st.lists(st.floats(0, 1e6), max_size=10))
    assert weyl_eigen_bound(xs + extra, n) == weyl_eigen_bound(xs, n)


def test_weyl_eigen_domain():
    with pytest.raises(DomainError):
        weyl_eigen_bound([1.0], 2)
    with pytest.raises(DomainError):
        weyl_eigen_bound([1.0], 0)
    with pytest.raises(DomainError):
        weyl_eigen_bound([-1.0], 1)


def test_eigen_report_on_diagonal():
    a = np.diag([3.0, 2.0, 1.0])
    r = eigen_bound_report(hilbert_snumbers(a), np.diag(a), 2)
    assert r.observed == pytest.approx(1.0)
    assert r.product_lhs == pytest.approx(6 ** (1 / 3))
    assert r.holds
    # index past the spectrum: nothing to check
    assert eigen_bound_report([1.0], [1.0], 1).holds


def test_eigen_harness():
    rep = eigen_harness(50, seed=3)
    assert rep.ok and rep.checks > 50 and rep.margin > 0


# axioms ---------------------------------------------------------------------


def test_axioms_on_explicit_matrices():
    rank2 = np.outer([1, 2, 3], [1, 0, 1]) + np.outer([0, 1, 0], [2, 1, 0])
    rep = check_axioms([np.eye(4), rank2], seed=5)
    assert rep.ok, rep.violations
    assert rep.trials == 2


def test_additivity_example():
    rng = np.random.default_rng(11)
    S, T = rng.standard_normal((6, 5)), rng.standard_normal((6, 5))
    s = hilbert_snumbers
    assert s(S + T)[2] <= s(S)[1] + s(T)[1] + 1e-12


def test_axioms_random():
    rep = check_axioms(trials=40, seed=2)
    assert rep.ok, rep.violations[:3]
    assert rep.to_json()["ok"] is True


def test_axioms_reject_large():
    with pytest.raises(DomainError):
        check_axioms([np.zeros((65, 2))])


def test_harness_records_violations():
    rep = pietsch_harness(5, seed=0, max_len=50)
    rep.fail(0, "x", "w")
    assert not rep.ok
    assert rep.to_json()["violations"][0]["check"] == "x"


def test_harness_deterministic():
    a = check_axioms(trials=10, seed=9).to_json()
    b = check_axioms(trials=10, seed=9).to_json()
    assert a == b


def test_pietsch():
    rep = pietsch_harness(30, seed=4, max_len=2000)
    assert rep.ok and rep.margin >= 0
