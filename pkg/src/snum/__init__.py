"""Weyl-number rate calculus for tensor-product Besov embeddings."""

from .errors import (
    DegenerateFit,
    DomainError,
    HypothesisViolation,
    NonCompactError,
    NumericalFailure,
    RegimeNotCovered,
    SnumError,
)
from .params import EmbeddingParams, Region, RegionTag, TargetKind, classify_region, is_compact
from .rates import (
    Comparison,
    RateExpr,
    RateKind,
    RateResult,
    SNumberKind,
    compare_entropy_weyl,
    entropy_rate,
    isotropic_weyl_rate,
    mixed_approx_rate,
    mixed_weyl_rate,
)

__version__ = "0.1.0"
