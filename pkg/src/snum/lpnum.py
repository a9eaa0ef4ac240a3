"""Finite-dimensional primitives for id: l_{p0}^m -> l_p^m.

``weyl_bound_lp`` returns the model (unit-constant) two-sided bounds from
the classical finite-dimensional estimates; where only one side is known
the other side falls back to a trivial bound and a flag says so.
``hilbert_snumbers`` is the exact oracle for matrices between Hilbert
spaces, where Weyl numbers, approximation numbers and singular values
coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, NumericalFailure, RegimeNotCovered
from .params import INF, Exponent, exponent, fmt_exponent, pos, recip


@dataclass(frozen=True)
class LpEmbeddingQuery:
    p_src: Exponent
    p_tgt: Exponent
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "p_src", exponent(self.p_src))
        object.__setattr__(self, "p_tgt", exponent(self.p_tgt))
        if self.m < 1 or self.n < 1:
            raise DomainError(f"need m, n >= 1, got m={self.m}, n={self.n}")


@dataclass(frozen=True)
class BoundPair:
    """lower <= x_n <= upper, as model values with unit constants.

    ``rows`` names the estimates that produced each side; ``flags`` marks
    sides that are trivial fallbacks rather than stated estimates.
    """

    lower: float
    upper: float
    c_low: float = 1.0
    c_high: float = 1.0
    rows: tuple[str, ...] = ()
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise ValueError("bounds must be finite")
        if self.lower > self.upper * (1 + 1e-12):
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")

    def scaled(self) -> tuple[float, float]:
        """Bounds with the model constants applied."""
        return self.lower * self.c_low, self.upper * self.c_high


def embedding_norm(p_src, p_tgt, m: int) -> float:
    """||id: l_{p_src}^m -> l_{p_tgt}^m|| = m^{(1/p_tgt - 1/p_src)_+}."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    e = pos(recip(exponent(p_tgt)) - recip(exponent(p_src)))
    return float(m) ** float(e)


def _pow(base: float, e: Fraction) -> float:
    return float(base) ** float(e)


def weyl_bound_lp(q: LpEmbeddingQuery) -> BoundPair:
    """Model bounds for x_n(id: l_{p0}^m -> l_p^m)."""
    p0, p, m, n = q.p_src, q.p_tgt, q.m, q.n
    r0, r = recip(p0), recip(p)
    norm = embedding_norm(p0, p, m)
    if n > m:
        return BoundPair(0.0, 0.0, rows=("rank",))

    two = Fraction(2)
    if p0 <= p or p0 <= two:
        if 2 * n > m:
            raise RegimeNotCovered(
                f"p0={fmt_exponent(p0)}, p={fmt_exponent(p)}: needs 2n <= m, got n={n}, m={m}"
            )
        if two <= p0:
            v, row = 1.0, "a1"
        elif p <= two and p0 <= p:
            v, row = _pow(n, r - r0), "a2"
        elif p0 <= p:
            v, row = _pow(n, Fraction(1, 2) - r0), "a3"
        else:
            v, row = _pow(m, r - r0), "a4"
        return BoundPair(v, v, rows=(row,))

    # p < p0 and p0 > 2
    lowers: list[tuple[float, str]] = []
    uppers: list[tuple[float, str]] = [(norm, "norm")]
    if p >= two:
        inv_r = (r - r0) / (1 - 2 * r0)
        uppers.append((_pow(m / n, inv_r), "b1"))
        if n <= math.floor(_pow(m, 2 * r0)):
            lowers.append((_pow(m, r - r0), "b2"))
        if 2 * n <= m:
            lowers.append((1.0, "b3"))
    if p <= two:
        if 2 * n <= m:
            lowers.append((_pow(m, r - Fraction(1, 2)), "c1"))
        if n <= _pow(m, 2 * r0):
            lowers.append((_pow(m, r - r0), "c2"))
    lo, lo_row = max(lowers, default=(0.0, "none"))
    hi, hi_row = min(uppers)
    flags = []
    if hi_row == "norm":
        flags.append("upper=norm")
    if lo_row == "none":
        flags.append("lower=0")
    return BoundPair(lo, hi, rows=(lo_row, hi_row), flags=tuple(flags))


# ---------------------------------------------------------------------------
# Hilbert-case oracle

MAX_SWEEPS = 60


def _round_robin(k: int) -> list[tuple[np.ndarray, np.ndarray]]:
    # circle method on an even number of slots; slot k (if k is odd) is a bye
    slots = k + (k % 2)
    order = list(range(slots))
    rounds = []
    for _ in range(slots - 1):
        left, right = [], []
        for a in range(slots // 2):
            i, j = order[a], order[slots - 1 - a]
            if i < k and j < k:
                left.append(min(i, j))
                right.append(max(i, j))
        rounds.append((np.array(left, dtype=int), np.array(right, dtype=int)))
        order = [order[0], order[-1]] + order[1:-1]
    return rounds


def hilbert_snumbers(matrix) -> np.ndarray:
    """Singular values, nonincreasing, by one-sided Jacobi rotations.

    Each round-robin stage rotates all disjoint column pairs at once.
    Raises NumericalFailure if orthogonality is not reached within
    ``MAX_SWEEPS`` sweeps.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2:
        raise DomainError(f"expected a 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix has non-finite entries")
    if a.shape[0] < a.shape[1]:
        a = a.T.copy()
    rows, k = a.shape
    if k == 0:
        return np.zeros(0)
    scale = np.max(np.abs(a))
    if scale == 0:
        return np.zeros(k)
    a /= scale
    tol = 4 * np.finfo(float).eps * rows
    rounds = _round_robin(k)
    for _ in range(MAX_SWEEPS):
        rotated = False
        for left, right in rounds:
            if left.size == 0:
                continue
            x, y = a[:, left], a[:, right]
            alpha = np.einsum("ij,ij->j", x, x)
            beta = np.einsum("ij,ij->j", y, y)
            g = np.einsum("ij,ij->j", x, y)
            act = np.abs(g) > tol * np.sqrt(alpha * beta)
            if not act.any():
                continue
            rotated = True
            zeta = np.where(act, (beta - alpha) / np.where(act, 2 * g, 1.0), 0.0)
            tt = np.where(act, np.sign(zeta) / (np.abs(zeta) + np.sqrt(1 + zeta * zeta)), 0.0)
            tt = np.where(act & (zeta == 0), 1.0, tt)
            c = 1 / np.sqrt(1 + tt * tt)
            s = c * tt
            a[:, left] = c * x - s * y
            a[:, right] = s * x + c * y
        if not rotated:
            sv = np.sqrt(np.einsum("ij,ij->j", a, a)) * scale
            return np.sort(sv)[::-1]
    raise NumericalFailure(f"one-sided Jacobi did not converge in {MAX_SWEEPS} sweeps")


def two_summing_diag(sigma) -> float:
    """(sum sigma_k^2)^{1/2}, the 2-summing norm of a diagonal Hilbert operator."""
    s = np.asarray(sigma, dtype=float)
    if s.size and np.min(s) < 0:
        raise DomainError("diagonal entries must be nonnegative")
    top = float(np.max(s)) if s.size else 0.0
    if top == 0.0:
        return 0.0
    # scale first so tiny or huge entries do not under/overflow when squared
    return top * float(np.sqrt(np.sum((s / top) ** 2)))


__all__ = [
    "INF",
    "BoundPair",
    "LpEmbeddingQuery",
    "embedding_norm",
    "hilbert_snumbers",
    "two_summing_diag",
    "weyl_bound_lp",
]
