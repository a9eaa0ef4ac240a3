"""Embedding parameters, the compactness gate and region classification.

All exponents are exact :class:`fractions.Fraction` values; ``p = inf`` is the
float ``math.inf`` and only ever enters arithmetic through :func:`recip`,
which maps it to ``Fraction(0)``.  Nothing in this module touches floating
point, so points sitting exactly on a region boundary are classified
correctly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError

INF = math.inf

Exponent = Union[Fraction, float]  # float only for INF
Rational = Union[Fraction, int, str]


def exponent(value) -> Exponent:
    """Coerce ``value`` to an integrability exponent in (0, inf].

    Accepts ints, Fractions, decimal strings ("0.4"), ratios ("3/2") and
    "inf"/"infinity".  Decimal strings are read exactly, so "0.4" is 2/5.
    """
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return INF
        value = Fraction(str(value))
    p = Fraction(value)
    if p <= 0:
        raise DomainError(f"exponent must be positive, got {p}")
    return p


def recip(p: Exponent) -> Fraction:
    """1/p as an exact rational, with 1/inf = 0."""
    if p == INF:
        return Fraction(0)
    return 1 / Fraction(p)


def rational(value: Rational) -> Fraction:
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


def pos(x: Fraction) -> Fraction:
    """Positive part."""
    return x if x > 0 else Fraction(0)


def fmt_exponent(p: Exponent) -> str:
    return "inf" if p == INF else str(p)


class TargetKind(str, enum.Enum):
    LP = "lp"
    LINF = "linf"
    L1 = "l1"
    ZYGMUND = "zygmund"


@dataclass(frozen=True)
class EmbeddingParams:
    """id: S^t_{p_src,p_src}B((0,1)^d) -> target.

    ``p_tgt`` is only meaningful for ``TargetKind.LP``; for the other kinds it
    is pinned (inf for LINF and ZYGMUND, 1 for L1).  ``s`` is the smoothness
    of the mixed Zygmund target.
    """

    t: Fraction
    p_src: Exponent
    p_tgt: Exponent
    d: int = 1
    target: TargetKind = TargetKind.LP
    s: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "t", rational(self.t))
        object.__setattr__(self, "p_src", exponent(self.p_src))
        object.__setattr__(self, "p_tgt", exponent(self.p_tgt))
        object.__setattr__(self, "target", TargetKind(self.target))
        if self.s is not None:
            object.__setattr__(self, "s", rational(self.s))
        if not isinstance(self.d, int) or self.d < 1:
            raise DomainError(f"dimension d must be a positive integer, got {self.d!r}")
        if self.target is TargetKind.LP:
            if not (1 < self.p_tgt < INF):
                raise DomainError(
                    f"Lp target needs 1 < p_tgt < inf, got {fmt_exponent(self.p_tgt)}"
                    " (use target linf or l1 for the endpoints)"
                )
        elif self.target is TargetKind.LINF:
            if self.p_tgt != INF:
                raise DomainError("Linf target requires p_tgt = inf")
        elif self.target is TargetKind.L1:
            if self.p_tgt != 1:
                raise DomainError("L1 target requires p_tgt = 1")
        elif self.target is TargetKind.ZYGMUND:
            if self.s is None or self.s <= 0:
                raise DomainError("Zygmund target requires s > 0")
            if self.p_tgt != INF:
                raise DomainError("Zygmund target requires p_tgt = inf")

    @classmethod
    def make(cls, t, p_src, p_tgt=None, d=1, target="lp", s=None) -> "EmbeddingParams":
        """Build params, routing p_tgt = inf / 1 to the matching target kind."""
        target = TargetKind(target)
        if target is TargetKind.LP and p_tgt is not None:
            q = exponent(p_tgt)
            if q == INF:
                target = TargetKind.LINF
            elif q == 1:
                target = TargetKind.L1
        if target in (TargetKind.LINF, TargetKind.ZYGMUND):
            p_tgt = INF
        elif target is TargetKind.L1:
            p_tgt = 1
        elif p_tgt is None:
            raise DomainError("Lp target requires p_tgt")
        return cls(t=t, p_src=p_src, p_tgt=p_tgt, d=d, target=target, s=s)

    @property
    def r_src(self) -> Fraction:
        return recip(self.p_src)

    @property
    def r_tgt(self) -> Fraction:
        return recip(self.p_tgt)

    def with_target_p(self, p_tgt) -> "EmbeddingParams":
        return EmbeddingParams(self.t, self.p_src, p_tgt, self.d, TargetKind.LP, None)

    def describe(self) -> str:
        parts = [f"t={self.t}", f"p1={fmt_exponent(self.p_src)}"]
        if self.target is TargetKind.LP:
            parts.append(f"p2={fmt_exponent(self.p_tgt)}")
        else:
            parts.append(f"target={self.target.value}")
        if self.s is not None:
            parts.append(f"s={self.s}")
        parts.append(f"d={self.d}")
        return " ".join(parts)


def compactness_threshold(params: EmbeddingParams) -> Fraction:
    """Smallest t excluded from compactness (the gate is strict: t > value)."""
    r1 = params.r_src
    kind = params.target
    if kind is TargetKind.LP or kind is TargetKind.L1:
        return max(Fraction(0), r1 - params.r_tgt)
    if kind is TargetKind.LINF:
        return r1
    return params.s + r1


def is_compact(params: EmbeddingParams) -> bool:
    return params.t > compactness_threshold(params)


class RegionTag(str, enum.Enum):
    I_STAR = "I*"
    I_SUB = "I_*"
    II = "II"
    III = "III"
    IV_STAR = "IV*"
    IV_SUB = "IV_*"
    V_STAR = "V*"
    V_SUB = "V_*"
    BOUNDARY_T = "boundary"
    NON_COMPACT = "non-compact"


@dataclass(frozen=True)
class Region:
    """Classification result.

    For ``BOUNDARY_T`` the smoothness equals ``threshold`` exactly and
    ``between`` names the large/small smoothness tags on either side.
    ``zone`` is the coarse (1/p1, 1/p2) zone: "I", "II", "III", "IV" or "V".
    """

    tag: RegionTag
    zone: str | None = None
    threshold: Fraction | None = None
    between: tuple[RegionTag, RegionTag] | None = None
    rule: str | None = None

    def __str__(self) -> str:
        if self.tag is RegionTag.BOUNDARY_T:
            return f"boundary({self.between[0].value}/{self.between[1].value} at t={self.threshold})"
        return self.tag.value


def zones_containing(p1: Exponent, p2: Exponent) -> list[str]:
    """All closed zones of the (1/p1, 1/p2) plane containing the point."""
    two = Fraction(2)
    zones = []
    if p1 <= two and p2 <= two:
        zones.append("I")
    if p1 <= two <= p2:
        zones.append("II")
    if two <= p1 <= p2:
        zones.append("III")
    if two <= p2 <= p1:
        zones.append("IV")
    if p2 <= two <= p1:
        zones.append("V")
    return zones


# Canonical choice on shared closures.  On the p2 = 2 line the p2 <= 2 side
# (I, V) wins; on the p1 = 2 line II wins over III.
ZONE_PRIORITY = ("I", "V", "II", "III", "IV")


def canonical_zone(p1: Exponent, p2: Exponent) -> str:
    zones = zones_containing(p1, p2)
    for z in ZONE_PRIORITY:
        if z in zones:
            return z
    raise AssertionError(f"no zone contains p1={p1}, p2={p2}")  # zones cover the plane


def iv_threshold(p1: Exponent, p2: Exponent) -> Fraction:
    """(1/p2 - 1/p1) / (p1/2 - 1); zero for p1 = inf."""
    if p1 == INF:
        return Fraction(0)
    if p2 == 2:
        # the quotient reduces to 1/p1 on this line; keeps the (2, 2) corner defined
        return recip(p1)
    return (recip(p2) - recip(p1)) / (Fraction(p1) / 2 - 1)


def split_threshold(zone: str, p1: Exponent, p2: Exponent) -> Fraction | None:
    """Smoothness at which ``zone`` splits into large/small sub-cases."""
    if zone == "I":
        return recip(p1) - Fraction(1, 2)
    if zone == "IV":
        return iv_threshold(p1, p2)
    if zone == "V":
        return recip(p1)
    return None


_SUBCASES = {
    "I": (RegionTag.I_STAR, RegionTag.I_SUB, "1/p_src - 1/2"),
    "IV": (RegionTag.IV_STAR, RegionTag.IV_SUB, "(1/p_tgt - 1/p_src)/(p_src/2 - 1)"),
    "V": (RegionTag.V_STAR, RegionTag.V_SUB, "1/p_src"),
}


def classify_point(t: Fraction, p1: Exponent, p2: Exponent, zone: str | None = None) -> Region:
    """Classify (t, p1, p2) into a region, ignoring compactness."""
    zone = zone or canonical_zone(p1, p2)
    if zone == "II":
        return Region(RegionTag.II, zone)
    if zone == "III":
        return Region(RegionTag.III, zone)
    star, sub, rule = _SUBCASES[zone]
    thr = split_threshold(zone, p1, p2)
    if zone == "V" and p2 == 2:
        # On p2 = 2 the IV and V thresholds coincide at 1/p1.
        rule = "1/p_src"
    if t > thr:
        return Region(star, zone)
    if t < thr:
        return Region(sub, zone)
    return Region(RegionTag.BOUNDARY_T, zone, thr, (star, sub), rule)


def classify_region(params: EmbeddingParams) -> Region:
    """Region of the Lp-target rate table that owns ``params``.

    Returns ``NON_COMPACT`` when the compactness gate fails.
    """
    if params.target is not TargetKind.LP:
        raise DomainError("region classification is defined for Lp targets only")
    if not is_compact(params):
        return Region(RegionTag.NON_COMPACT)
    return classify_point(params.t, params.p_src, params.p_tgt)


def on_zone_boundary(p1: Exponent, p2: Exponent) -> bool:
    """True when the point lies on a line shared by two zones."""
    return len(zones_containing(p1, p2)) > 1
