"""Rate algebra and the piecewise rate tables.

A rate ``RateExpr(alpha, gamma)`` stands for the class of sequences
``c * n**(-alpha) * (log n)**gamma``.  The log exponent is stored already
multiplied by ``d - 1`` so that the algebra never needs to know the
dimension; ``beta`` is recovered for display by dividing back.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, NonCompactError
from .params import (
    INF,
    EmbeddingParams,
    Exponent,
    RegionTag,
    TargetKind,
    canonical_zone,
    classify_point,
    classify_region,
    exponent,
    fmt_exponent,
    is_compact,
    rational,
    recip,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RateExpr:
    """n^{-alpha} (log n)^{gamma} up to a constant.

    Ordering is by eventual size: ``a < b`` means ``a(n)/b(n) -> 0``.
    """

    alpha: Fraction
    gamma: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha", rational(self.alpha))
        object.__setattr__(self, "gamma", rational(self.gamma))

    def _key(self):
        return (-self.alpha, self.gamma)

    def __lt__(self, other: "RateExpr") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "RateExpr") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "RateExpr") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "RateExpr") -> bool:
        return self._key() >= other._key()

    def evaluate(self, n: float, log=math.log) -> float:
        """Model value n^{-alpha} (log n)^gamma with unit constant."""
        return float(n) ** (-float(self.alpha)) * log(n) ** float(self.gamma)

    def beta(self, d: int) -> Fraction | None:
        """Per-direction log exponent; None for d = 1 where it is not recoverable."""
        return self.gamma / (d - 1) if d > 1 else None

    def __str__(self) -> str:
        return f"n^-({self.alpha}) (log n)^({self.gamma})"


def rate_multiply(a: RateExpr, b: RateExpr) -> RateExpr:
    return RateExpr(a.alpha + b.alpha, a.gamma + b.gamma)


def rate_interpolate(a: RateExpr, b: RateExpr, theta) -> RateExpr:
    theta = rational(theta)
    if not 0 < theta < 1:
        raise DomainError(f"theta must lie in (0, 1), got {theta}")
    return RateExpr(
        (1 - theta) * a.alpha + theta * b.alpha,
        (1 - theta) * a.gamma + theta * b.gamma,
    )


def rate_lift(a: RateExpr) -> RateExpr:
    """Lifting changes the spaces, not the rate."""
    return RateExpr(a.alpha, a.gamma)


class RateKind(str, enum.Enum):
    EXACT = "Exact"
    BRACKET = "Bracket"
    BRACKET_LOGLOG = "BracketLogLog"
    UNKNOWN = "Unknown"


class SNumberKind(str, enum.Enum):
    WEYL = "weyl"
    APPROX = "approx"
    ENTROPY = "entropy"


@dataclass(frozen=True)
class RateResult:
    """Exact rate, a two-sided bracket, or an explicit Unknown.

    For ``EXACT`` the rate is ``lower`` (``upper`` is the same object).
    ``BRACKET_LOGLOG`` means ``lower <= x_n <= upper * (log log n)^loglog_gamma``.
    """

    kind: RateKind
    lower: RateExpr | None = None
    upper: RateExpr | None = None
    loglog_gamma: Fraction | None = None
    region: str = ""
    source: str = ""
    notes: tuple[str, ...] = field(default_factory=tuple)

    @classmethod
    def exact(cls, alpha, gamma, region, source, *notes) -> "RateResult":
        r = RateExpr(alpha, gamma)
        return cls(RateKind.EXACT, r, r, None, region, source, tuple(notes))

    @classmethod
    def unknown(cls, region, source, *notes) -> "RateResult":
        return cls(RateKind.UNKNOWN, None, None, None, region, source, tuple(notes))

    @property
    def rate(self) -> RateExpr:
        if self.kind is not RateKind.EXACT:
            raise DomainError(f"rate is not exact ({self.kind.value})")
        return self.lower

    @property
    def is_exact(self) -> bool:
        return self.kind is RateKind.EXACT

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.lower is not None:
            out.update(_expr_fields(self.lower))
        if self.kind in (RateKind.BRACKET, RateKind.BRACKET_LOGLOG):
            out["upper"] = _expr_fields(self.upper)
        if self.loglog_gamma is not None:
            out["loglog_gamma"] = frac_str(self.loglog_gamma)
        out["region"] = self.region
        out["source"] = self.source
        out["condition_notes"] = list(self.notes)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "RateResult":
        kind = RateKind(obj["kind"])
        lower = _expr_from(obj) if "alpha_num" in obj else None
        upper = lower
        if "upper" in obj:
            upper = _expr_from(obj["upper"])
        llg = parse_frac(obj["loglog_gamma"]) if "loglog_gamma" in obj else None
        return cls(
            kind, lower, upper, llg, obj.get("region", ""), obj.get("source", ""),
            tuple(obj.get("condition_notes", ())),
        )


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def _expr_fields(e: RateExpr) -> dict:
    return {
        "alpha": frac_str(e.alpha),
        "gamma": frac_str(e.gamma),
        "alpha_num": e.alpha.numerator,
        "alpha_den": e.alpha.denominator,
        "gamma_num": e.gamma.numerator,
        "gamma_den": e.gamma.denominator,
    }


def _expr_from(obj: dict) -> RateExpr:
    return RateExpr(
        Fraction(obj["alpha_num"], obj["alpha_den"]),
        Fraction(obj["gamma_num"], obj["gamma_den"]),
    )


# ---------------------------------------------------------------------------
# Lp target


def formula_for_region(tag: RegionTag, t, p1: Exponent, p2: Exponent) -> tuple[Fraction, Fraction]:
    """(alpha, beta) of the Lp-target table row ``tag``, evaluated blindly.

    No hypothesis checks: this is what makes comparing neighbouring rows on a
    shared boundary possible.
    """
    t = rational(t)
    r1, r2 = recip(p1), recip(p2)
    if tag is RegionTag.I_STAR:
        return t, t + HALF - r1
    if tag is RegionTag.I_SUB:
        return t, Fraction(0)
    if tag is RegionTag.II:
        return t - HALF + r2, t + r2 - r1
    if tag in (RegionTag.III, RegionTag.IV_STAR):
        return t - r1 + r2, t + r2 - r1
    if tag is RegionTag.V_STAR:
        return t - r1 + HALF, t + HALF - r1
    if tag in (RegionTag.IV_SUB, RegionTag.V_SUB):
        if p1 == INF:
            raise DomainError("small-smoothness rows need p_src < inf")
        return t * Fraction(p1) / 2, t + HALF - r1
    raise DomainError(f"no formula for region {tag.value}")


def rho_of(p: Exponent) -> Fraction:
    """rho = min(1, p)."""
    return Fraction(1) if p >= 1 else Fraction(p)


def r_recip(p0: Exponent, p: Exponent) -> Fraction:
    """1/r = (1/p - 1/p0) / (1 - 2/p0), defined for p0 > 2."""
    return (recip(p) - recip(p0)) / (1 - 2 * recip(p0))


def _lp_weyl(params: EmbeddingParams) -> RateResult:
    region = classify_region(params)
    t, p1, p2, d = params.t, params.p_src, params.p_tgt, params.d
    dm1 = d - 1
    src = "mixed-Lp"
    if region.tag is RegionTag.NON_COMPACT:
        raise NonCompactError(f"not compact: {params.describe()}")
    if region.tag is not RegionTag.BOUNDARY_T:
        alpha, beta = formula_for_region(region.tag, t, p1, p2)
        return RateResult.exact(alpha, dm1 * beta, region.tag.value, src)

    label = str(region)
    rho = rho_of(p2)
    r1 = recip(p1)
    if region.zone == "I":
        # p_tgt = 2 puts this threshold on the compactness gate, so p_tgt < 2 here
        base = RateExpr(t, 0)
        return RateResult(
            RateKind.BRACKET_LOGLOG, base, base, t + 1 / rho, label, src,
            (f"t = 1/p_src - 1/2; upper bound carries (log log n)^(t + 1/rho), rho = {rho}",),
        )
    if region.zone == "IV":
        lower = RateExpr(t * Fraction(p1) / 2, dm1 * (t + HALF - r1))
        ir = r_recip(p1, p2)
        upper = RateExpr(lower.alpha, lower.gamma + ir + 1 / rho)
        return RateResult(
            RateKind.BRACKET, lower, upper, None, label, src,
            (f"limiting t; gap (log n)^(1/r + 1/rho) with 1/r = {ir}, rho = {rho}",),
        )
    # zone V, t = 1/p_src
    lower = RateExpr(HALF, dm1 * HALF)
    upper = RateExpr(HALF, lower.gamma + HALF + 1 / rho)
    return RateResult(
        RateKind.BRACKET, lower, upper, None, label, src,
        (f"limiting t = 1/p_src; gap (log n)^(1/2 + 1/rho), rho = {rho}",),
    )


# ---------------------------------------------------------------------------
# other targets


def _linf_weyl(params: EmbeddingParams) -> RateResult:
    t, p1, r1, dm1 = params.t, params.p_src, params.r_src, params.d - 1
    src = "mixed-Linf"
    gamma = dm1 * (t + HALF - r1)
    if p1 <= 2:
        return RateResult.exact(t - HALF, gamma, "linf: p_src<=2", src)
    if t > HALF + r1:
        return RateResult.exact(t - r1, gamma, "linf: p_src>2", src)
    return RateResult.unknown(
        "linf: p_src>2", src, "2 < p_src and 1/p_src < t <= 1/2 + 1/p_src is open"
    )


def _l1_weyl(params: EmbeddingParams) -> RateResult:
    t, p1, r1, dm1 = params.t, params.p_src, params.r_src, params.d - 1
    src = "mixed-L1"
    gamma = dm1 * (t + HALF - r1)
    if p1 <= 2:
        thr = r1 - HALF
        if t < thr:
            return RateResult.exact(t, 0, "l1: small t", src)
        if t > thr:
            return RateResult.exact(t, gamma, "l1: large t", src)
        return RateResult.unknown("l1: boundary", src, "t = 1/p_src - 1/2 is not covered")
    if t > r1:
        return RateResult.exact(t - r1 + HALF, gamma, "l1: p_src>2, large t", src)
    if t < r1:
        # p1 = inf forces r1 = 0 < t, so p1 is finite here
        return RateResult.exact(t * Fraction(p1) / 2, gamma, "l1: p_src>2, small t", src)
    return RateResult.unknown("l1: boundary", src, "t = 1/p_src is not covered")


def _zygmund_weyl(params: EmbeddingParams) -> RateResult:
    t, s, p1, r1, dm1 = params.t, params.s, params.p_src, params.r_src, params.d - 1
    gamma = dm1 * (t - s - r1)
    if p1 <= 2:
        return RateResult.exact(t - s - HALF, gamma, "zygmund: p_src<=2", "mixed-Zygmund")
    return RateResult.exact(t - s - r1, gamma, "zygmund: p_src>=2", "mixed-Zygmund")


def mixed_weyl_rate(params: EmbeddingParams) -> RateResult:
    """Weyl-number rate of the embedding described by ``params``."""
    if not is_compact(params):
        raise NonCompactError(f"not compact: {params.describe()}")
    kind = params.target
    if kind is TargetKind.LP:
        return _lp_weyl(params)
    if kind is TargetKind.LINF:
        return _linf_weyl(params)
    if kind is TargetKind.L1:
        return _l1_weyl(params)
    return _zygmund_weyl(params)


def mixed_approx_rate(params: EmbeddingParams) -> RateResult:
    """Approximation-number rate; only the Zygmund target is tabulated."""
    if params.target is not TargetKind.ZYGMUND:
        raise DomainError("approximation-number rates are tabulated for the zygmund target only")
    if params.p_src < 1:
        raise DomainError(f"approximation-number table needs p_src >= 1, got {fmt_exponent(params.p_src)}")
    if not is_compact(params):
        raise NonCompactError(f"not compact: {params.describe()}")
    p1, r1, dm1 = params.p_src, params.r_src, params.d - 1
    ts = params.t - params.s
    gamma = dm1 * (ts - r1)
    src = "approx-Zygmund"
    if p1 >= 2:
        return RateResult.exact(ts - r1, gamma, "approx: p_src>=2", src)
    if ts > 1:
        return RateResult.exact(ts - HALF, gamma, "approx: 1<=p_src<2, t-s>1", src)
    if p1 > 1 and ts < 1:
        conj = Fraction(p1) / (Fraction(p1) - 1)
        return RateResult.exact(conj / 2 * (ts - r1), gamma, "approx: 1<p_src<2, t-s<1", src)
    return RateResult.unknown("approx: boundary", src, "t - s = 1 is not covered")


def entropy_condition(params: EmbeddingParams) -> Fraction:
    r1 = params.r_src
    return max(Fraction(0), r1 - HALF, r1 - params.r_tgt)


def entropy_rate(params: EmbeddingParams) -> RateResult:
    """Entropy-number rate for Lp targets where it is known.

    The known-range condition implies compactness, so non-compact inputs
    simply fall outside it and come back as Unknown rather than an error.
    """
    if params.target is not TargetKind.LP:
        raise DomainError("entropy rates are tabulated for Lp targets only")
    t, r1, d = params.t, params.r_src, params.d
    thr = entropy_condition(params)
    if t > thr:
        return RateResult.exact(t, (d - 1) * (t + HALF - r1), "entropy", "entropy-Lp")
    return RateResult.unknown(
        "entropy", "entropy-Lp", f"rate known only for t > {thr}"
    )


def isotropic_weyl_rate(t, p_src, p_tgt) -> RateResult:
    """Weyl-number rate on the interval (d = 1), 1 <= p_tgt <= inf."""
    t = rational(t)
    p1, p2 = exponent(p_src), exponent(p_tgt)
    if p2 < 1:
        raise DomainError(f"isotropic table needs p_tgt >= 1, got {fmt_exponent(p2)}")
    if not t > max(Fraction(0), recip(p1) - recip(p2)):
        raise NonCompactError(f"not compact: t={t} p1={fmt_exponent(p1)} p2={fmt_exponent(p2)}")
    src = "isotropic"
    zone = canonical_zone(p1, p2)
    if zone == "I":
        return RateResult.exact(t, 0, "I", src)
    region = classify_point(t, p1, p2, zone)
    if region.tag is RegionTag.BOUNDARY_T:
        return RateResult.unknown(str(region), src, "limiting smoothness is open")
    alpha, _ = formula_for_region(region.tag, t, p1, p2)
    return RateResult.exact(alpha, 0, region.tag.value, src)


class Comparison(str, enum.Enum):
    WEYL_SMALLER = "WeylSmaller"
    ENTROPY_SMALLER = "EntropySmaller"
    SAME_ORDER = "SameOrder"
    UNDECIDED = "Undecided"


def compare_entropy_weyl(params: EmbeddingParams) -> Comparison:
    w = mixed_weyl_rate(params)
    e = entropy_rate(params)
    if not (w.is_exact and e.is_exact):
        return Comparison.UNDECIDED
    if w.rate < e.rate:
        return Comparison.WEYL_SMALLER
    if e.rate < w.rate:
        return Comparison.ENTROPY_SMALLER
    return Comparison.SAME_ORDER


def rate_for(params: EmbeddingParams, kind: SNumberKind | str = SNumberKind.WEYL) -> RateResult:
    kind = SNumberKind(kind)
    if kind is SNumberKind.WEYL:
        return mixed_weyl_rate(params)
    if kind is SNumberKind.APPROX:
        return mixed_approx_rate(params)
    return entropy_rate(params)
