"""Uniform sampling grids and the sampled-signal / density containers.

All quadrature in this package is the midpoint rule on a uniform grid.
The default grid construction is half-sample centered: coordinate 0 is
never a sample point, which keeps singular weights such as ln|t| and
|t|^(-lambda) finite everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OlctError

#: relative slack allowed on the unit-integral check of a normalized Density
DENSITY_NORM_TOL = 1e-6


@dataclass(frozen=True)
class Grid:
    """Uniform lattice ``offset + n*step`` for ``0 <= n < count``."""

    offset: float
    step: float
    count: int

    def __post_init__(self):
        if not (self.step > 0 and np.isfinite(self.step)):
            raise OlctError(f"grid step must be positive and finite, got {self.step}")
        if self.count < 1:
            raise OlctError(f"grid count must be positive, got {self.count}")
        if not np.isfinite(self.offset):
            raise OlctError("grid offset must be finite")

    @classmethod
    def centered(cls, count: int, step: float) -> "Grid":
        """Half-sample centered grid: coordinate 0 falls between samples."""
        return cls(offset=-(count / 2 - 0.5) * step, step=step, count=count)

    @classmethod
    def over_window(cls, count: int, half_width: float) -> "Grid":
        """Half-sample centered grid covering [-half_width, half_width]."""
        return cls.centered(count, step=2.0 * half_width / count)

    @property
    def coords(self) -> np.ndarray:
        cached = self.__dict__.get("_coords")
        if cached is None:
            cached = self.offset + self.step * np.arange(self.count)
            cached.setflags(write=False)
            object.__setattr__(self, "_coords", cached)
        return cached

    @property
    def span(self) -> tuple[float, float]:
        return (self.offset, self.offset + (self.count - 1) * self.step)


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SampledSignal:
    """Complex samples on a Grid; the discrete stand-in for f in L2(R)."""

    grid: Grid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _frozen_array(self.values, np.complex128)
        if arr.ndim != 1 or arr.size != self.grid.count:
            raise OlctError(
                f"expected {self.grid.count} samples, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise OlctError("signal contains NaN or Inf samples")
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.grid.count

    @classmethod
    def _wrap(cls, grid: Grid, values: np.ndarray) -> "SampledSignal":
        """Wrap a freshly computed complex128 array without copying or
        validating; internal fast path for transform outputs."""
        sig = object.__new__(cls)
        values.setflags(write=False)
        object.__setattr__(sig, "grid", grid)
        object.__setattr__(sig, "values", values)
        return sig


@dataclass(frozen=True)
class Density:
    """Nonnegative real samples; integrates to 1 when marked normalized."""

    grid: Grid
    values: np.ndarray = field(repr=False)
    normalized: bool = True

    def __post_init__(self):
        arr = _frozen_array(self.values, np.float64)
        if arr.ndim != 1 or arr.size != self.grid.count:
            raise OlctError(
                f"expected {self.grid.count} samples, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise OlctError("density contains NaN or Inf samples")
        if np.any(arr < 0):
            raise OlctError("density samples must be nonnegative")
        object.__setattr__(self, "values", arr)
        if self.normalized:
            total = self.grid.step * float(arr.sum())
            if abs(total - 1.0) > DENSITY_NORM_TOL:
                raise OlctError(
                    f"density marked normalized but integrates to {total!r}"
                )
