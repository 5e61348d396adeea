"""Quadrature functionals on sampled signals and densities.

Everything here is the midpoint rule on the signal's own grid.  The
singular weights ln|t| and |t|^(-lambda) rely on half-sample centered
grids (coordinate 0 excluded); callers get GridContainsZero otherwise.
Accuracy claims assume < 1e-12 of the energy lies outside the window.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridContainsZero, LambdaOutOfRange, OlctError, ZeroSignal
from .sampling import Density, Grid, SampledSignal


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of disjoint closed intervals of finite measure."""

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self):
        ivs = tuple((float(lo), float(hi)) for lo, hi in self.intervals)
        for lo, hi in ivs:
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise OlctError(f"bad interval [{lo}, {hi}]")
        ordered = sorted(ivs)
        for (_, hi1), (lo2, _) in zip(ordered, ordered[1:]):
            if lo2 <= hi1:
                raise OlctError("intervals must be pairwise disjoint")
        object.__setattr__(self, "intervals", tuple(ordered))

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    def measure(self) -> float:
        return sum(hi - lo for lo, hi in self.intervals)

    def scale(self, s: float) -> "IntervalSet":
        """Pointwise scaling {s*x : x in S}; s must be positive."""
        if not s > 0:
            raise OlctError(f"scale factor must be positive, got {s}")
        return IntervalSet(tuple((lo * s, hi * s) for lo, hi in self.intervals))

    def contains(self, x: np.ndarray) -> np.ndarray:
        """Boolean membership mask for an array of coordinates."""
        x = np.asarray(x, dtype=np.float64)
        mask = np.zeros(x.shape, dtype=bool)
        for lo, hi in self.intervals:
            mask |= (x >= lo) & (x <= hi)
        return mask


def l2_norm(f: SampledSignal) -> float:
    """sqrt(step * sum |f_n|^2)."""
    return math.sqrt(f.grid.step * float(np.sum(np.abs(f.values) ** 2)))


def abs_squared(f: SampledSignal) -> Density:
    """Raw |f|^2 samples, not normalized."""
    return Density(f.grid, np.abs(f.values) ** 2, normalized=False)


def density_of(f: SampledSignal) -> Density:
    """|f|^2 normalized to unit quadrature integral."""
    nrm = l2_norm(f)
    if nrm == 0.0:
        raise ZeroSignal("cannot form a density from the zero signal")
    return Density(f.grid, np.abs(f.values / nrm) ** 2, normalized=True)


def shannon_entropy(rho: Density) -> float:
    """-step * sum rho ln rho, with the convention 0 ln 0 = 0."""
    v = rho.values
    pos = v > 0
    return -rho.grid.step * float(np.sum(v[pos] * np.log(v[pos])))


def mean_variance(rho: Density) -> tuple[float, float]:
    """(mean, variance) of the density; the variance infimum over shifts
    is attained at the mean."""
    t = rho.grid.coords
    step = rho.grid.step
    mean = step * float(np.sum(t * rho.values))
    var = step * float(np.sum((t - mean) ** 2 * rho.values))
    return mean, var


def _check_no_zero(grid: Grid):
    if float(np.min(np.abs(grid.coords))) < grid.step * 1e-9:
        raise GridContainsZero(
            "grid contains coordinate 0; use a half-sample centered grid"
        )


def log_moment(rho: Density) -> float:
    """step * sum rho_n ln|t_n| (grid must exclude coordinate 0)."""
    _check_no_zero(rho.grid)
    t = rho.grid.coords
    return rho.grid.step * float(np.sum(rho.values * np.log(np.abs(t))))


def weighted_moment(rho: Density, lam: float, sign: int) -> float:
    """step * sum |t_n|^(sign*lam) rho_n for 0 <= lam < 1, sign in {+1, -1}."""
    if not (0.0 <= lam < 1.0):
        raise LambdaOutOfRange(f"lambda must satisfy 0 <= lambda < 1, got {lam}")
    if sign not in (1, -1):
        raise OlctError(f"sign must be +1 or -1, got {sign}")
    if sign == -1 and lam > 0:
        _check_no_zero(rho.grid)
    t = np.abs(rho.grid.coords)
    if lam == 0.0:
        w = np.ones_like(t)
    else:
        w = t ** (sign * lam)
    return rho.grid.step * float(np.sum(w * rho.values))


def tail_energy(f: SampledSignal, s: IntervalSet) -> float:
    """Energy of f outside the interval set: step * sum_{t not in S} |f_n|^2."""
    mask = ~s.contains(f.grid.coords)
    return f.grid.step * float(np.sum(np.abs(f.values[mask]) ** 2))


def beurling_functional(f: SampledSignal, F: SampledSignal, b: float, w: float) -> float:
    """Truncated double integral of |f(t) F(u)| e^{|t u / b|} over [-W, W]^2.

    Accumulated in log-space (max-shifted) so the exponential weight
    cannot overflow intermediate terms; divergence of the untruncated
    integral shows up as growth of the value with W.
    """
    if not b > 0:
        raise OlctError(f"b must be positive, got {b}")
    if not w > 0:
        raise OlctError(f"window must be positive, got {w}")
    t = f.grid.coords
    u = F.grid.coords
    tm = np.abs(t) <= w
    um = np.abs(u) <= w
    ft = np.abs(f.values[tm])
    fu = np.abs(F.values[um])
    if not tm.any() or not um.any() or (ft == 0).all() or (fu == 0).all():
        return 0.0
    with np.errstate(divide="ignore"):
        log_terms = (np.log(ft)[:, None] + np.log(fu)[None, :]
                     + np.abs(np.outer(t[tm], u[um])) / b)
    log_terms = log_terms[np.isfinite(log_terms)]
    m = float(np.max(log_terms))
    total = m + math.log(float(np.sum(np.exp(log_terms - m))))
    total += math.log(f.grid.step) + math.log(F.grid.step)
    return math.exp(total) if total < 709.0 else math.inf
