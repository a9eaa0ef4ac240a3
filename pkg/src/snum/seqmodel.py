"""Hyperbolic-cross block model and its diagonal spectrum.

Level mu collects the dyadic multi-indices with |nu|_1 = mu; in the model
each index contributes prod_l (2^{nu_l} + c) coefficients, all carrying the
weight 2^{-mu t}.  Nothing is ever materialized: rank queries walk the
cumulative level counts with Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import DomainError
from .params import rational


def block_size(d: int, mu: int) -> int:
    """D_mu = binom(mu + d - 1, d - 1) * 2^mu."""
    if d < 1 or mu < 0:
        raise DomainError(f"need d >= 1 and mu >= 0, got d={d}, mu={mu}")
    return math.comb(mu + d - 1, d - 1) << mu


@lru_cache(maxsize=256)
def _overlap_sizes(d: int, c: int, mu_max: int) -> tuple[int, ...]:
    # sizes[mu] = sum over |nu|_1 = mu of prod_l (2^{nu_l} + c), by convolution
    # over the d directions.
    one_axis = [(1 << k) + c for k in range(mu_max + 1)]
    acc = [1] + [0] * mu_max
    for _ in range(d):
        nxt = [0] * (mu_max + 1)
        for i, a in enumerate(acc):
            if a:
                for k in range(mu_max + 1 - i):
                    nxt[i + k] += a * one_axis[k]
        acc = nxt
    return tuple(acc)


@dataclass(frozen=True)
class BlockModel:
    """Diagonal skeleton with levels of size D_mu and weight 2^{-mu t}.

    ``c`` is an additive per-axis overlap constant; c = 0 gives the exact
    binomial sizes of :func:`block_size`.
    """

    d: int
    t: Fraction
    c: int = 0
    _cum: list = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise DomainError(f"d must be a positive integer, got {self.d!r}")
        if not isinstance(self.c, int) or self.c < 0:
            raise DomainError(f"overlap constant c must be a nonnegative integer, got {self.c!r}")
        object.__setattr__(self, "t", rational(self.t))
        if self.t <= 0:
            raise DomainError(f"t must be positive, got {self.t}")

    def size(self, mu: int) -> int:
        if self.c == 0:
            return block_size(self.d, mu)
        return _overlap_sizes(self.d, self.c, (mu | 63))[mu]

    def weight(self, mu: int) -> float:
        return 2.0 ** (-mu * float(self.t))

    def exact_weight(self, mu: int) -> Fraction | None:
        """2^{-mu t} as a rational when t is an integer, else None."""
        if self.t.denominator == 1:
            return Fraction(1, 1 << (mu * self.t.numerator))
        return None

    def cumulative(self, mu: int) -> int:
        """Number of entries in levels 0..mu."""
        cum = self._cum
        while len(cum) <= mu:
            k = len(cum)
            cum.append((cum[-1] if cum else 0) + self.size(k))
        return cum[mu]

    def level_of(self, n: int) -> int:
        """Level containing the n-th largest entry (1-based)."""
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        mu = 0
        while self.cumulative(mu) < n:
            mu += 1
        return mu


def nth_singular_value(model: BlockModel, n: int) -> float:
    """n-th largest diagonal entry, 2^{-mu(n) t}."""
    return model.weight(model.level_of(n))


def spectrum_samples(model: BlockModel, n_values: Iterable[int]) -> list[tuple[int, float]]:
    """(n, nth_singular_value(n)) for ascending n, walking levels once."""
    out = []
    mu = 0
    last = 0
    for n in n_values:
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        if n < last:
            raise DomainError("n_values must be sorted ascending")
        last = n
        while model.cumulative(mu) < n:
            mu += 1
        out.append((n, model.weight(mu)))
    return out


def dyadic_ns(kmin: int, kmax: int) -> list[int]:
    return [1 << k for k in range(kmin, kmax + 1)]
