"""Rank-budget allocation schemes and their bound evaluator.

The embedding splits into level blocks id_mu.  Levels 0..J get full rank
(their Weyl numbers vanish), levels in (J, L] (and (L, K] for the three-zone
scheme) get a budget n_mu, and everything beyond is bounded by block norms.
With rho = min(1, p),

    x_n^rho <= sum_{J < mu} x_{n_mu}(id_mu)^rho + sum_{tail} ||id_mu||^rho,
    n - 1 = sum_mu (n_mu - 1).

Every block bound is a reduction row composed with the finite-dimensional
model bounds of :mod:`snum.lpnum`, all with unit constants, so the ratio of
the evaluated bound to the predicted rate is a constant-free audit of each
scheme.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, HypothesisViolation, RegimeNotCovered
from .lpnum import BoundPair, LpEmbeddingQuery, weyl_bound_lp
from .params import INF, EmbeddingParams, TargetKind, pos, recip
from .rates import RateKind, RateResult, mixed_weyl_rate, r_recip, rho_of
from .seqmodel import block_size

HALF = Fraction(1, 2)


class Scheme(str, enum.Enum):
    FULL_LOW_J = "FullLowJ_GeomDecay"
    RANK_TRUNCATION = "RankTruncation"
    GEOM_DECAY_BETA = "GeomDecayBeta"
    TWO_SLOPE_BETA = "TwoSlopeBeta"
    LOG_SHIFT_L = "LogShiftL"
    THREE_ZONE = "ThreeZoneJLK"
    FACTOR_THROUGH_22 = "FactorThrough22"
    LOGLOG_LIMITING = "LogLogLimiting"


# ---------------------------------------------------------------------------
# block bounds


def _level_pow(d: int, mu: int, e: Fraction) -> float:
    # (D_mu / 2^mu)^e = binom(mu+d-1, d-1)^e, the model's exact stand-in for
    # mu^{(d-1)e}; keeps the norm row exact for the Hilbert target
    return float(math.comb(mu + d - 1, d - 1)) ** float(e)


def _two_pow(mu: int, e: Fraction) -> float:
    return 2.0 ** (mu * float(e))


def _lp_upper(p0, p, m: int, n: int) -> tuple[float, str] | None:
    """Upper model bound for x_n(l_p0^m -> l_p^m), using monotonicity in n
    to reach the 2n <= m rows when needed."""
    try:
        b = weyl_bound_lp(LpEmbeddingQuery(p0, p, m, n))
        return b.upper, b.rows[-1]
    except RegimeNotCovered:
        half = m // 2
        if half < 1 or half >= n:
            return None
        b = weyl_bound_lp(LpEmbeddingQuery(p0, p, m, half))
        return b.upper, b.rows[-1] + "@m/2"


def _lp_lower(p0, p, m: int, n: int) -> tuple[float, str] | None:
    try:
        b = weyl_bound_lp(LpEmbeddingQuery(p0, p, m, n))
    except RegimeNotCovered:
        return None
    if "lower=0" in b.flags:
        return None
    return b.lower, b.rows[0]


def block_norm(params: EmbeddingParams, mu: int) -> tuple[float, str]:
    """Model norm of id_mu: the smaller of the two available estimates."""
    t, r0, r, d = params.t, params.r_src, params.r_tgt, params.d
    mixed = _two_pow(mu, -t + pos(r0 - r)) * _level_pow(d, mu, pos(HALF - r0))
    if params.p_src < params.p_tgt:
        sob = _two_pow(mu, -t + r0 - r)
        if sob < mixed:
            return sob, "norm-sobolev"
    return mixed, "norm"


UPPER_ROWS = ("case1", "case2", "case3", "case5", "norm")
LOWER_ROWS = ("case1", "case2", "case4")


def _upper_row(params: EmbeddingParams, mu: int, n: int, D: int, row: str, eps: Fraction | None):
    t, p0, p, r0, r, d = params.t, params.p_src, params.p_tgt, params.r_src, params.r_tgt, params.d
    if row == "norm":
        return block_norm(params, mu)
    if row == "case1":
        if p > 2:
            return None
        lp = _lp_upper(p0, 2, D, n)
        scale = _two_pow(mu, -t + r0 - HALF)
    elif row == "case2":
        if p < 2:
            return None
        lp = _lp_upper(p0, p, D, n)
        scale = _level_pow(d, mu, HALF - r) * _two_pow(mu, -t + r0 - r)
    elif row == "case3":
        if p > 2:
            return None
        lp = _lp_upper(p0, p, D, n)
        scale = _two_pow(mu, -t + r0 - r)
    elif row == "case5":
        if eps is None or not 0 < eps < Fraction(p):
            return None
        lp = _lp_upper(p0, Fraction(p) - eps, D, n)
        scale = _two_pow(mu, -t + r0 - r)
    else:
        raise DomainError(f"unknown upper row {row!r}")
    if lp is None:
        return None
    return scale * lp[0], f"{row}/{lp[1]}"


def _lower_row(params: EmbeddingParams, mu: int, n: int, D: int, row: str):
    t, p0, p, r0, r, d = params.t, params.p_src, params.p_tgt, params.r_src, params.r_tgt, params.d
    if row == "case1":
        if p > 2:
            return None
        lp = _lp_lower(p0, p, D, n)
        scale = _level_pow(d, mu, HALF - r) * _two_pow(mu, -t + r0 - r)
    elif row == "case2":
        if p < 2:
            return None
        lp = _lp_lower(p0, 2, D, n)
        scale = _two_pow(mu, -t + r0 - HALF)
    elif row == "case4":
        if p < 2:
            return None
        lp = _lp_lower(p0, p, D, n)
        scale = _two_pow(mu, -t + r0 - r)
    else:
        raise DomainError(f"unknown lower row {row!r}")
    if lp is None:
        return None
    return scale * lp[0], f"{row}/{lp[1]}"


def default_eps(p: Fraction) -> Fraction | None:
    """eps with p - eps = (p + 2)/2, or None when p <= 2."""
    return (Fraction(p) - 2) / 2 if p > 2 else None


def block_weyl_bound(
    params: EmbeddingParams, mu: int, n: int, row: str | None = None, eps=None
) -> BoundPair:
    """Model bounds for x_n(id_mu).

    With ``row=None`` the upper side is the smallest applicable reduction
    row and the lower side the largest; a named ``row`` forces that upper
    row.  The rows that fired are reported in ``BoundPair.rows`` as
    ``(lower_row, upper_row)``.
    """
    if params.target is not TargetKind.LP:
        raise DomainError("block bounds are defined for Lp targets")
    if mu < 0 or n < 1:
        raise DomainError(f"need mu >= 0 and n >= 1, got mu={mu}, n={n}")
    D = block_size(params.d, mu)
    if n > D:
        return BoundPair(0.0, 0.0, rows=("rank", "rank"))
    eps = default_eps(params.p_tgt) if eps is None else Fraction(eps)
    if row is not None:
        if row not in UPPER_ROWS:
            raise DomainError(f"unknown row {row!r}; choose from {', '.join(UPPER_ROWS)}")
        ups = [_upper_row(params, mu, n, D, row, eps)]
        if ups[0] is None:
            raise RegimeNotCovered(f"row {row} does not apply at mu={mu}, n={n}")
    else:
        ups = [u for u in (_upper_row(params, mu, n, D, rw, eps) for rw in UPPER_ROWS) if u]
    hi, hi_row = min(ups)
    lows = [lo for lo in (_lower_row(params, mu, n, D, rw) for rw in LOWER_ROWS) if lo]
    lo, lo_row = max(lows, default=(0.0, "none"))
    flags = () if lows else ("lower=0",)
    # forced rows are upper bounds too, but the lower rows may come from a
    # tighter estimate than a forced upper row; never report lower > upper
    lo = min(lo, hi)
    return BoundPair(lo, hi, rows=(lo_row, hi_row), flags=flags)


# ---------------------------------------------------------------------------
# schedules


@dataclass(frozen=True)
class Zone:
    """Levels start..stop (inclusive) with budgets and the reduction row used."""

    start: int
    stop: int
    budgets: tuple[int, ...]
    row: str
    name: str = "mid"

    def levels(self):
        return range(self.start, self.stop + 1)


@dataclass(frozen=True)
class AllocationSchedule:
    scheme: Scheme
    params: EmbeddingParams
    J: int
    L: int
    K: int | None
    slope: Fraction | None  # lambda or beta
    gamma: Fraction | None
    zones: tuple[Zone, ...]
    rho: Fraction
    eps: Fraction | None = None
    inner: "AllocationSchedule | None" = None

    @property
    def last_level(self) -> int:
        return self.K if self.K is not None else self.L

    def budget(self, mu: int) -> int:
        """n_mu; full rank D_mu + 1 at or below J, 1 (nothing) past the zones."""
        if mu <= self.J:
            return block_size(self.params.d, mu) + 1
        for z in self.zones:
            if z.start <= mu <= z.stop:
                return z.budgets[mu - z.start]
        return 1

    @property
    def total_budget(self) -> int:
        """n = 1 + sum_mu (n_mu - 1)."""
        d = self.params.d
        low = sum(block_size(d, mu) for mu in range(self.J + 1))
        return 1 + low + sum(b - 1 for z in self.zones for b in z.budgets)


def midpoint(lo: Fraction, hi: Fraction | None) -> Fraction:
    """Midpoint of (lo, hi); lo + 1 when the interval is unbounded."""
    if hi is None:
        return lo + 1
    if not lo < hi:
        raise HypothesisViolation(f"empty parameter interval ({lo}, {hi})")
    return (lo + hi) / 2


def _floor_log2(J: int) -> int:
    return J.bit_length() - 1 if J >= 1 else 0


def _budget(x: float) -> int:
    return max(1, math.floor(x))


def _minimal_level(start: int, ok) -> int:
    lvl = start
    while not ok(lvl):
        lvl += 1
        if lvl > start + 10_000:
            raise DomainError("level search did not terminate")
    return lvl


def _require(cond: bool, scheme: Scheme, why: str):
    if not cond:
        raise HypothesisViolation(f"{scheme.value}: {why}")


def scheme_admissible(scheme: Scheme | str, params: EmbeddingParams) -> bool:
    """True iff ``build_schedule`` accepts ``params`` for ``scheme``."""
    try:
        _check_hypothesis(Scheme(scheme), params)
    except HypothesisViolation:
        return False
    return True


def _check_hypothesis(scheme: Scheme, params: EmbeddingParams):
    if params.target is not TargetKind.LP:
        raise HypothesisViolation(f"{scheme.value}: needs an Lp target")
    t, p0, p, r0, r = params.t, params.p_src, params.p_tgt, params.r_src, params.r_tgt
    two = Fraction(2)
    if scheme is Scheme.FULL_LOW_J:
        _require(p0 <= two <= p, scheme, "needs p_src <= 2 <= p_tgt")
        _require(t > r0 - r, scheme, "needs t > 1/p_src - 1/p_tgt")
    elif scheme is Scheme.RANK_TRUNCATION:
        _require(two <= p0 <= p, scheme, "needs 2 <= p_src <= p_tgt")
        _require(t > r0 - r, scheme, "needs t > 1/p_src - 1/p_tgt")
    elif scheme is Scheme.GEOM_DECAY_BETA:
        _require(two <= p < p0, scheme, "needs 2 <= p_tgt < p_src")
        _require(t > _iv_thr(p0, p), scheme, "needs t above the small-smoothness threshold")
    elif scheme is Scheme.TWO_SLOPE_BETA:
        _require(two <= p < p0 < INF, scheme, "needs 2 <= p_tgt < p_src < inf")
        _require(0 < t < _iv_thr(p0, p), scheme, "needs t below the small-smoothness threshold")
    elif scheme is Scheme.LOG_SHIFT_L:
        _require(p <= p0 < two, scheme, "needs p_tgt <= p_src < 2")
        _require(0 < t < r0 - HALF, scheme, "needs 0 < t < 1/p_src - 1/2")
    elif scheme is Scheme.THREE_ZONE:
        _require(p0 < p < two, scheme, "needs p_src < p_tgt < 2")
        _require(r0 - r < t < r0 - HALF, scheme, "needs 1/p_src - 1/p_tgt < t < 1/p_src - 1/2")
    elif scheme is Scheme.FACTOR_THROUGH_22:
        _require(p <= two, scheme, "needs p_tgt <= 2")
        if p0 <= two:
            _require(t > r0 - HALF, scheme, "needs t > 1/p_src - 1/2 when p_src <= 2")
        else:
            _require(t != r0, scheme, "t = 1/p_src is the limiting case")
            _require(t > r0 or p0 < INF, scheme, "small smoothness needs p_src < inf")
    elif scheme is Scheme.LOGLOG_LIMITING:
        _require(p <= p0 < two, scheme, "needs p_tgt <= p_src < 2")
        _require(t == r0 - HALF, scheme, "needs t = 1/p_src - 1/2")


def _iv_thr(p0, p) -> Fraction:
    if p0 == INF:
        return Fraction(0)
    return (recip(p) - recip(p0)) / (Fraction(p0) / 2 - 1)


def build_schedule(scheme: Scheme | str, params: EmbeddingParams, J: int) -> AllocationSchedule:
    """Materialise the budget schedule of ``scheme`` at split level ``J``."""
    scheme = Scheme(scheme)
    if J < 0:
        raise DomainError(f"J must be >= 0, got {J}")
    _check_hypothesis(scheme, params)
    if scheme is Scheme.FACTOR_THROUGH_22:
        return _factor_through(params, J)
    rho = rho_of(params.p_tgt)
    if J == 0:
        # degenerate split: only level 0 is resolved, everything else is tail
        return AllocationSchedule(scheme, params, 0, 0, None, None, None, (), rho)
    builder = _BUILDERS[scheme]
    return builder(params, J, rho)


def _full_low_j(params, J, rho):
    t, p0, p, r0, r, d = params.t, params.p_src, params.p_tgt, params.r_src, params.r_tgt, params.d
    hi = (t - HALF + r) / (r0 - HALF) if p0 < 2 else None
    lam = midpoint(Fraction(1), hi)
    tail_e = float(-t + r0 - r)
    rhs = float((d - 1) * (HALF - r0)) * math.log2(J) + J * float(-t + HALF - r)
    L = _minimal_level(J + 1, lambda lv: lv * tail_e <= rhs + 1e-12)
    budgets = tuple(
        _budget(block_size(d, mu) * 2.0 ** ((J - mu) * float(lam))) for mu in range(J + 1, L + 1)
    )
    eps = default_eps(p)
    row = "case5" if p > 2 else "case2"
    zone = Zone(J + 1, L, budgets, row)
    return AllocationSchedule(Scheme.FULL_LOW_J, params, J, L, None, lam, None, (zone,), rho, eps)


def _rank_truncation(params, J, rho):
    return AllocationSchedule(Scheme.RANK_TRUNCATION, params, J, J, None, None, None, (), rho)


def _eps_cond4(params) -> Fraction | None:
    """eps for the geometric-decay scheme: the default, halved until the
    perturbed exponent 1/r_eps still leaves a negative level slope."""
    t, p0, p, r0, r = params.t, params.p_src, params.p_tgt, params.r_src, params.r_tgt
    eps = default_eps(p)
    if eps is None:
        return None
    while -t + r0 - r + r_recip(p0, Fraction(p) - eps) >= 0:
        eps /= 2
    return eps


def _geom_decay_beta(params, J, rho):
    t, p0, p, r0, r, d = params.t, params.p_src, params.p_tgt, params.r_src, params.r_tgt, params.d
    eps = _eps_cond4(params)
    inv_r = r_recip(p0, Fraction(p) - eps) if eps is not None else HALF
    slope = t - r0 + r
    beta = midpoint(Fraction(1), slope / inv_r)
    gamma = slope / t
    tail_log = float((d - 1) * (HALF - r0))
    target = -float(gamma) * J * float(t)
    L = _minimal_level(
        J + 1, lambda lv: -lv * float(t) + tail_log * math.log2(lv) <= target + 1e-12
    )
    budgets = tuple(
        _budget(block_size(d, mu) * 2.0 ** ((J - mu) * float(beta))) for mu in range(J + 1, L + 1)
    )
    row = "case5" if p > 2 else "case3"
    zone = Zone(J + 1, L, budgets, row)
    return AllocationSchedule(Scheme.GEOM_DECAY_BETA, params, J, L, None, beta, gamma, (zone,), rho, eps)


def _two_slope_beta(params, J, rho):
    t, p0, p, r0, r, d = params.t, params.p_src, params.p_tgt, params.r_src, params.r_tgt, params.d
    half_p0 = Fraction(p0) / 2
    L = math.floor(float(half_p0 * J) + float((d - 1) * (half_p0 - 1)) * math.log2(J))
    L = max(L, J + 1)
    inv_r = r_recip(p0, p)
    beta = midpoint(Fraction(0), (-t + r0 - r) / inv_r + 1)
    budgets = tuple(
        _budget(block_size(d, mu) * 2.0 ** ((mu - L) * float(beta) + J - mu))
        for mu in range(J + 1, L + 1)
    )
    zone = Zone(J + 1, L, budgets, "case2")
    return AllocationSchedule(Scheme.TWO_SLOPE_BETA, params, J, L, None, beta, None, (zone,), rho)


def _log_shift_zone(params, J, L):
    t, r0, d = params.t, params.r_src, params.d
    beta = midpoint(Fraction(0), 1 - t / (r0 - HALF))
    budgets = tuple(
        _budget(block_size(d, mu) * 2.0 ** ((mu - L) * float(beta) + J - mu))
        for mu in range(J + 1, L + 1)
    )
    return beta, Zone(J + 1, L, budgets, "case1")


def _log_shift_l(params, J, rho):
    L = max(J + (params.d - 1) * _floor_log2(J), J + 1)
    beta, zone = _log_shift_zone(params, J, L)
    return AllocationSchedule(Scheme.LOG_SHIFT_L, params, J, L, None, beta, None, (zone,), rho)


def _three_zone(params, J, rho):
    t, r0, r, d = params.t, params.r_src, params.r_tgt, params.d
    L = max(J + (d - 1) * _floor_log2(J), J + 1)
    beta, mid = _log_shift_zone(params, J, L)
    gamma = midpoint(Fraction(0), t / (r0 - r) - 1)
    target = -J * float(t) - (d - 1) * float(t) * math.log2(J)
    K = _minimal_level(L + 1, lambda k: k * float(-t + r0 - r) <= target + 1e-12)
    base = J ** (d - 1) * 2**J
    outer = Zone(
        L + 1, K,
        tuple(_budget(base * 2.0 ** ((L - mu) * float(gamma))) for mu in range(L + 1, K + 1)),
        "case3", "outer",
    )
    return AllocationSchedule(Scheme.THREE_ZONE, params, J, L, K, beta, gamma, (mid, outer), rho)


def _loglog(params, J, rho):
    d = params.d
    if J < 4:
        raise DomainError("the log-log scheme needs J >= 4")
    L = J + (d - 1) * _floor_log2(J)
    nmu = _budget(2**J * J ** (d - 1) / math.log2(J))
    zone = Zone(J + 1, L, tuple(nmu for _ in range(J + 1, L + 1)), "case1")
    return AllocationSchedule(Scheme.LOGLOG_LIMITING, params, J, L, None, None, None, (zone,), rho)


def _factor_through(params, J):
    """Factor through the p = 2 target and reuse the matching scheme there."""
    t, p0, r0 = params.t, params.p_src, params.r_src
    inner_params = params.with_target_p(2)
    if p0 <= 2:
        inner_scheme = Scheme.FULL_LOW_J
    elif t > r0:
        inner_scheme = Scheme.GEOM_DECAY_BETA
    else:
        inner_scheme = Scheme.TWO_SLOPE_BETA
    inner = build_schedule(inner_scheme, inner_params, J)
    return AllocationSchedule(
        Scheme.FACTOR_THROUGH_22, params, J, inner.L, inner.K, inner.slope, inner.gamma,
        inner.zones, inner.rho, inner.eps, inner,
    )


_BUILDERS = {
    Scheme.FULL_LOW_J: _full_low_j,
    Scheme.RANK_TRUNCATION: _rank_truncation,
    Scheme.GEOM_DECAY_BETA: _geom_decay_beta,
    Scheme.TWO_SLOPE_BETA: _two_slope_beta,
    Scheme.LOG_SHIFT_L: _log_shift_l,
    Scheme.THREE_ZONE: _three_zone,
    Scheme.LOGLOG_LIMITING: _loglog,
}


# ---------------------------------------------------------------------------
# evaluation


def tail_sum(params: EmbeddingParams, start: int, rho: Fraction, rtol: float = 1e-16) -> float:
    """sum_{mu >= start} ||id_mu||^rho, summed until terms stop mattering."""
    fr = float(rho)
    acc = 0.0
    mu = start
    while True:
        term = block_norm(params, mu)[0] ** fr
        acc += term
        if term <= rtol * acc or mu > start + 100_000:
            return acc
        mu += 1


def predicted_value(result: RateResult, n: int) -> float:
    """Model value of the (upper) predicted rate at n, natural logs."""
    if result.kind is RateKind.UNKNOWN:
        raise DomainError("no predicted rate for an Unknown region")
    rate = result.upper
    v = rate.evaluate(n)
    if result.loglog_gamma is not None:
        v *= math.log(math.log(n)) ** float(result.loglog_gamma)
    return v


@dataclass(frozen=True)
class JBound:
    J: int
    L: int
    K: int | None
    n: int
    zone_sums: dict = field(hash=False)
    tail: float
    bound: float
    predicted: float

    @property
    def ratio(self) -> float:
        return self.bound / self.predicted


def evaluate_bound(schedule: AllocationSchedule, params: EmbeddingParams | None = None) -> JBound:
    """S(J)^{1/rho} for one schedule, against the predicted rate at n(J)."""
    params = params or schedule.params
    sched = schedule.inner or schedule
    inner_params = sched.params
    fr = float(sched.rho)
    zone_sums = {}
    for z in sched.zones:
        s = 0.0
        for mu, nmu in zip(z.levels(), z.budgets):
            b = block_weyl_bound(inner_params, mu, nmu, row=z.row, eps=sched.eps)
            s += b.upper ** fr
        zone_sums[z.name] = s
    tail = tail_sum(inner_params, sched.last_level + 1, sched.rho)
    total = (sum(zone_sums.values()) + tail) ** (1 / fr)
    n = schedule.total_budget
    pred = predicted_value(mixed_weyl_rate(params), n)
    return JBound(schedule.J, schedule.L, schedule.K, n, zone_sums, tail, total, pred)


@dataclass(frozen=True)
class BoundEvaluation:
    scheme: Scheme
    params: EmbeddingParams
    predicted: RateResult
    rows: tuple[JBound, ...]

    @property
    def J_values(self) -> list[int]:
        return [r.J for r in self.rows]

    @property
    def totals(self) -> list[int]:
        return [r.n for r in self.rows]

    @property
    def sums(self) -> list[float]:
        return [r.bound for r in self.rows]

    @property
    def ratios(self) -> list[float]:
        return [r.ratio for r in self.rows]

    def spread(self) -> float:
        rs = self.ratios
        return max(rs) / min(rs)


def audit(scheme: Scheme | str, params: EmbeddingParams, jmin: int, jmax: int) -> BoundEvaluation:
    """Evaluate the scheme for every J in [jmin, jmax]."""
    if jmin > jmax:
        raise DomainError(f"empty J range {jmin}..{jmax}")
    rows = tuple(evaluate_bound(build_schedule(scheme, params, J), params) for J in range(jmin, jmax + 1))
    return BoundEvaluation(Scheme(scheme), params, mixed_weyl_rate(params), rows)


def _p(t, p0, p, d=2) -> EmbeddingParams:
    return EmbeddingParams(t=Fraction(t), p_src=Fraction(p0), p_tgt=Fraction(p), d=d)


# One representative parameter set per scheme (d = 2).  Where no setup is
# prescribed, t sits at the midpoint of the admissible t-interval, or one
# above its lower end when the interval is unbounded.  The factorisation scheme has two: large and small
# smoothness with p_src > 2.
REPRESENTATIVES: dict[str, tuple[Scheme, EmbeddingParams]] = {
    "full-low-j": (Scheme.FULL_LOW_J, _p(1, 1, 2)),
    "rank-truncation": (Scheme.RANK_TRUNCATION, _p(1, 3, 4)),
    "geom-decay-beta": (Scheme.GEOM_DECAY_BETA, _p("13/12", 4, 3)),
    "two-slope-beta": (Scheme.TWO_SLOPE_BETA, _p("1/8", 4, 2)),
    "log-shift-l": (Scheme.LOG_SHIFT_L, _p("1/8", "4/3", "4/3")),
    "three-zone": (Scheme.THREE_ZONE, _p("3/8", 1, "4/3")),
    "factor-large-t": (Scheme.FACTOR_THROUGH_22, _p("5/4", 4, "3/2")),
    "factor-small-t": (Scheme.FACTOR_THROUGH_22, _p("1/8", 4, "3/2")),
}
