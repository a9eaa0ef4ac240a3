"""Rate fitting, the Weyl eigenvalue bound, and randomized inequality harnesses.

The harnesses take explicit seeds and return report objects; violations
are data, not exceptions.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .errors import DegenerateFit, DomainError
from .lpnum import hilbert_snumbers, two_summing_diag

N_MIN = 8
MIN_SAMPLES = 8
SQRT_2E = math.sqrt(2 * math.e)


@dataclass(frozen=True)
class FitReport:
    alpha_hat: float
    gamma_hat: float
    gamma_fixed: bool
    n_min: int
    n_max: int
    residual_rms: float
    samples: int

    def to_json(self) -> dict:
        return asdict(self)


def fit_rate(samples: Sequence[tuple[int, float]], fixed_gamma=None) -> FitReport:
    """Least squares for log v = c - alpha log n + gamma log log n.

    ``fixed_gamma`` pins gamma and fits only (c, alpha).
    """
    if len(samples) < MIN_SAMPLES:
        raise DomainError(f"need at least {MIN_SAMPLES} samples, got {len(samples)}")
    n = np.array([s[0] for s in samples], dtype=float)
    v = np.array([s[1] for s in samples], dtype=float)
    if np.any(n < N_MIN):
        raise DomainError(f"all n must be >= {N_MIN}")
    if np.any(~np.isfinite(v)) or np.any(v <= 0):
        raise DomainError("values must be positive and finite")
    if len(np.unique(n)) != len(n):
        raise DomainError("sample n values must be distinct")
    ln = np.log(n)
    lln = np.log(ln)
    y = np.log(v)
    if fixed_gamma is not None:
        g = float(fixed_gamma)
        y = y - g * lln
        X = np.column_stack([np.ones_like(ln), -ln])
    else:
        X = np.column_stack([np.ones_like(ln), -ln, lln])
    coef, _, rank, sv = np.linalg.lstsq(X, y, rcond=None)
    if rank < X.shape[1] or sv[-1] <= sv[0] * 1e-12:
        raise DegenerateFit(f"design matrix rank {rank} < {X.shape[1]}")
    resid = y - X @ coef
    return FitReport(
        alpha_hat=float(coef[1]),
        gamma_hat=float(fixed_gamma) if fixed_gamma is not None else float(coef[2]),
        gamma_fixed=fixed_gamma is not None,
        n_min=int(n.min()),
        n_max=int(n.max()),
        residual_rms=float(np.sqrt(np.mean(resid**2))),
        samples=len(samples),
    )


def local_slopes(samples: Sequence[tuple[int, float]]) -> list[float | None]:
    """-d log v / d log n between consecutive samples (None for the first)."""
    out: list[float | None] = [None]
    for (n0, v0), (n1, v1) in zip(samples, samples[1:]):
        out.append(-(math.log(v1) - math.log(v0)) / (math.log(n1) - math.log(n0)))
    return out


# ---------------------------------------------------------------------------
# Weyl eigenvalue inequality


def weyl_eigen_bound(x: Sequence[float], n: int) -> float:
    """sqrt(2e) * (prod_{k<=n} x_k)^{1/n}, in log space."""
    if n < 1 or n > len(x):
        raise DomainError(f"need 1 <= n <= len(x) = {len(x)}, got {n}")
    head = np.asarray(x[:n], dtype=float)
    if np.any(head < 0):
        raise DomainError("x must be nonnegative")
    if np.any(head == 0):
        return 0.0
    return SQRT_2E * float(np.exp(np.mean(np.log(head))))


@dataclass(frozen=True)
class EigenBoundReport:
    n: int
    bound: float
    observed: float | None  # |lambda_{2n-1}|
    product_lhs: float | None  # (prod_{k<2n} |lambda_k|)^{1/(2n-1)}
    holds: bool


def eigen_bound_report(x, eigenvalues, n: int, tol: float = 1e-10) -> EigenBoundReport:
    """Check both forms of the inequality at index n."""
    bound = weyl_eigen_bound(x, n)
    lam = np.sort(np.abs(np.asarray(eigenvalues, dtype=complex)))[::-1]
    k = 2 * n - 1
    if len(lam) < k:
        return EigenBoundReport(n, bound, None, None, True)
    observed = float(lam[k - 1])
    head = lam[:k]
    prod = 0.0 if np.any(head == 0) else float(np.exp(np.mean(np.log(head))))
    slack = tol * max(1.0, bound)
    holds = observed <= bound + slack and prod <= bound + slack
    return EigenBoundReport(n, bound, observed, prod, holds)


def eigen_harness(trials: int, seed: int, max_dim: int = 16, tol: float = 1e-10) -> "HarnessReport":
    """Random upper-triangular matrices: eigenvalues are the diagonal."""
    rng = np.random.default_rng(seed)
    rep = HarnessReport("eigen", trials, seed)
    for trial in range(trials):
        dim = int(rng.integers(1, max_dim + 1))
        a = np.triu(rng.standard_normal((dim, dim)) * rng.uniform(0.1, 3.0))
        x = hilbert_snumbers(a)
        lam = np.diag(a)
        for n in range(1, (dim + 1) // 2 + 1):
            r = eigen_bound_report(x, lam, n, tol)
            rep.checks += 1
            rep.margin = min(rep.margin, r.bound - max(r.observed, r.product_lhs))
            if not r.holds:
                rep.fail(trial, "weyl-eigen", f"n={n} bound={r.bound} observed={r.observed} product={r.product_lhs}")
    return rep


# ---------------------------------------------------------------------------
# axiom harness


@dataclass
class Violation:
    trial: int
    check: str
    witness: str


@dataclass
class HarnessReport:
    name: str
    trials: int
    seed: int
    checks: int = 0
    margin: float = math.inf
    violations: list[Violation] = field(default_factory=list)

    def fail(self, trial: int, check: str, witness: str):
        self.violations.append(Violation(trial, check, witness))

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        if not math.isfinite(self.margin):
            out["margin"] = None
        return out


def _le(a: float, b: float, scale: float, tol: float) -> bool:
    return a <= b + tol * max(scale, 1e-300)


def _sv(m: np.ndarray, k: int) -> np.ndarray:
    """Singular values padded with zeros to length k (s_n = 0 past the rank)."""
    s = hilbert_snumbers(m)
    return np.concatenate([s, np.zeros(max(0, k - len(s)))])


def check_axioms(matrices=None, trials: int = 100, seed: int = 0, max_dim: int = 16, tol: float = 1e-8) -> HarnessReport:
    """Randomized check of monotonicity (a), additivity (b), rank (d),
    normalization (e), multiplicativity (f) and the interpolation inequality
    on computed singular values.

    With ``matrices`` given, each one plays S in its own trial and the
    partner operators are drawn from the seeded generator; otherwise
    ``trials`` Gaussian matrices with dims up to ``max_dim`` are drawn.
    """
    rng = np.random.default_rng(seed)
    if matrices is not None:
        mats = [np.asarray(m, dtype=float) for m in matrices]
        for m in mats:
            if m.ndim != 2 or max(m.shape) > 64:
                raise DomainError(f"matrices must be 2-d with dims <= 64, got {m.shape}")
    else:
        mats = None
    count = len(mats) if mats is not None else trials
    rep = HarnessReport("axioms", count, seed)
    for trial in range(count):
        if mats is not None:
            S = mats[trial]
        else:
            S = rng.standard_normal((int(rng.integers(1, max_dim + 1)), int(rng.integers(1, max_dim + 1))))
        _axiom_trial(rng, rep, trial, S, tol)
    return rep


def _axiom_trial(rng, rep: HarnessReport, trial: int, S: np.ndarray, tol: float):
    k, m = S.shape
    full = k * m
    T = rng.standard_normal((k, m)) * max(float(np.max(np.abs(S))), 1.0)
    sS, sT = _sv(S, full), _sv(T, full)
    norm_S = float(np.linalg.norm(S, 2))
    lim = min(k, m)

    # (a) s_1 = ||S|| and s_n nonincreasing
    rep.checks += 1
    if abs(sS[0] - norm_S) > tol * max(norm_S, 1e-300) or np.any(np.diff(sS) > tol * sS[0]):
        rep.fail(trial, "a", f"s={sS[:4].tolist()} norm={norm_S}")

    # (b) s_{i+j-1}(S+T) <= s_i(S) + s_j(T)
    sST = _sv(S + T, full)
    for i in range(1, lim + 1):
        for j in range(1, lim + 2 - i):
            rep.checks += 1
            lhs, rhs = sST[i + j - 2], sS[i - 1] + sT[j - 1]
            if not _le(lhs, rhs, sST[0], tol):
                rep.fail(trial, "b", f"i={i} j={j} lhs={lhs} rhs={rhs}")

    # (d) rank r => s_{r+1} = 0
    r = int(rng.integers(0, lim + 1))
    low = rng.standard_normal((k, r)) @ rng.standard_normal((r, m))
    sl = _sv(low, lim + 1)
    rep.checks += 1
    if r < lim and sl[r] > tol * max(sl[0], 1.0):
        rep.fail(trial, "d", f"rank={r} s_(r+1)={sl[r]}")

    # (e) identity has all s_n = 1
    ident = _sv(np.eye(k), k)
    rep.checks += 1
    if np.max(np.abs(ident - 1)) > tol:
        rep.fail(trial, "e", f"dim={k} s={ident.tolist()}")

    # (f) s_{i+j-1}(AB) <= s_i(A) s_j(B), with A = S
    q = int(rng.integers(1, 17))
    B = rng.standard_normal((m, q))
    sB, sAB = _sv(B, m * q), _sv(S @ B, k * q)
    lim_f = min(k, m, q)
    for i in range(1, lim_f + 1):
        for j in range(1, lim_f + 2 - i):
            rep.checks += 1
            lhs, rhs = sAB[i + j - 2], sS[i - 1] * sB[j - 1]
            if not _le(lhs, rhs, sS[0] * sB[0], tol):
                rep.fail(trial, "f", f"i={i} j={j} lhs={lhs} rhs={rhs}")

    _interpolation_trial(rng, rep, trial, S, tol)


def _interpolation_trial(rng, rep: HarnessReport, trial: int, T: np.ndarray, tol: float):
    # T: l2^m -> l2^k(w) has the singular values of diag(w) T, so the
    # interpolated target weight w0^{1-th} w1^{th} gives the middle space.
    k, m = T.shape
    w0 = np.exp(rng.uniform(-2, 2, k))
    w1 = np.exp(rng.uniform(-2, 2, k))
    theta = float(rng.uniform(0.05, 0.95))
    w = w0 ** (1 - theta) * w1**theta
    s0 = _sv(w0[:, None] * T, k * m)
    s1 = _sv(w1[:, None] * T, k * m)
    s = _sv(w[:, None] * T, k * m)
    lim = min(k, m)
    for i in range(1, lim + 1):
        for j in range(1, lim + 2 - i):
            rep.checks += 1
            lhs = s[i + j - 2]
            rhs = s0[i - 1] ** (1 - theta) * s1[j - 1] ** theta
            if not _le(lhs, rhs, s[0], tol):
                rep.fail(trial, "interpolation", f"theta={theta:.4f} i={i} j={j} lhs={lhs} rhs={rhs}")


def pietsch_harness(trials: int = 100, seed: int = 0, max_len: int = 10_000) -> HarnessReport:
    """sqrt(n) x_n <= pi_2 on random nonincreasing diagonals."""
    rng = np.random.default_rng(seed)
    rep = HarnessReport("pietsch", trials, seed)
    for trial in range(trials):
        length = int(rng.integers(1, max_len + 1))
        kind = trial % 3
        if kind == 0:
            sigma = np.sort(rng.exponential(size=length))[::-1]
        elif kind == 1:
            sigma = np.arange(1, length + 1, dtype=float) ** -rng.uniform(0.0, 2.0)
        else:
            sigma = np.sort(rng.uniform(0, 1, length))[::-1]
            sigma[rng.integers(0, length):] = 0.0
        pi2 = two_summing_diag(sigma)
        lhs = float(np.max(np.sqrt(np.arange(1, length + 1)) * sigma))
        rep.checks += 1
        rep.margin = min(rep.margin, pi2 - lhs)
        if lhs > pi2 * (1 + 1e-12):
            rep.fail(trial, "pietsch", f"len={length} max sqrt(n) s_n={lhs} pi2={pi2}")
    return rep
