"""Deterministic generators for the test battery.

Every generated signal is renormalized to exactly unit discrete L2 norm
on its grid.  Identical specs (including seeds) produce bit-identical
output.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .core import OlctParams
from .errors import BadSpec
from .measures import l2_norm
from .sampling import Grid, SampledSignal

KINDS = ("gaussian", "chirped_gaussian_extremal", "hermite", "rect",
         "bandlimited_noise")


@dataclass(frozen=True)
class SignalSpec:
    kind: str
    grid: Grid
    parameters: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadSpec(f"unknown signal kind {self.kind!r}")


def _normalized(grid: Grid, values: np.ndarray) -> SampledSignal:
    sig = SampledSignal(grid, values)
    nrm = l2_norm(sig)
    if nrm == 0.0:
        raise BadSpec("generated signal is identically zero on the grid")
    return SampledSignal(grid, values / nrm)


def _gaussian(grid: Grid, sigma: float) -> SampledSignal:
    # |f|^2 is the normal density with standard deviation sigma
    if not sigma > 0:
        raise BadSpec(f"sigma must be positive, got {sigma}")
    t = grid.coords
    vals = (2.0 * math.pi * sigma * sigma) ** -0.25 * np.exp(-t * t / (4.0 * sigma * sigma))
    return _normalized(grid, vals.astype(np.complex128))


def _extremal(grid: Grid, alpha: float, olct: OlctParams) -> SampledSignal:
    # modulus e^{-pi alpha t^2}, chirped so the transform is a pure
    # Gaussian times a unimodular phase; equality witness for the
    # dispersion and entropy checks at any alpha
    if not alpha > 0:
        raise BadSpec(f"alpha must be positive, got {alpha}")
    if olct.b == 0:
        raise BadSpec("extremal signal requires b > 0")
    t = grid.coords
    vals = np.exp(-(math.pi * alpha + 0.5j * olct.a / olct.b) * t * t
                  - 1j * t * olct.tau / olct.b)
    return _normalized(grid, vals)


def _hermite(grid: Grid, n: int) -> SampledSignal:
    if n < 0 or n != int(n):
        raise BadSpec(f"hermite order must be a nonnegative integer, got {n}")
    t = grid.coords
    h_prev, h = np.ones_like(t), 2.0 * t
    if n == 0:
        h = h_prev
    else:
        for k in range(1, int(n)):
            h_prev, h = h, 2.0 * t * h - 2.0 * k * h_prev
    return _normalized(grid, (h * np.exp(-t * t / 2.0)).astype(np.complex128))


def _rect(grid: Grid, width: float) -> SampledSignal:
    if not width > 0:
        raise BadSpec(f"width must be positive, got {width}")
    t = grid.coords
    vals = np.where(np.abs(t) <= width / 2.0, 1.0, 0.0)
    return _normalized(grid, vals.astype(np.complex128))


def _bandlimited_noise(grid: Grid, seed: int, modes: int) -> SampledSignal:
    # seeded uniform phases on the lowest harmonics of the window,
    # tapered by a wide Gaussian envelope so the result decays like a
    # rapidly decreasing function instead of wrapping at the window edge
    if modes < 1:
        raise BadSpec(f"need at least one mode, got {modes}")
    rng = np.random.default_rng(seed)
    phases = rng.uniform(0.0, 2.0 * math.pi, size=modes)
    t = grid.coords
    span = grid.step * grid.count
    omega0 = 2.0 * math.pi / span
    vals = np.zeros(grid.count, dtype=np.complex128)
    for k, phi in enumerate(phases, start=1):
        vals += np.exp(1j * (k * omega0 * t + phi))
    envelope = np.exp(-t * t / (2.0 * (span / 12.0) ** 2))
    return _normalized(grid, vals * envelope)


def generate(spec: SignalSpec) -> SampledSignal:
    """Generate the unit-norm signal described by the spec."""
    p = dict(spec.parameters)
    try:
        if spec.kind == "gaussian":
            return _gaussian(spec.grid, float(p.pop("sigma", math.sqrt(0.5))))
        if spec.kind == "chirped_gaussian_extremal":
            olct = p.pop("olct")
            return _extremal(spec.grid, float(p.pop("alpha", 0.5 / math.pi)), olct)
        if spec.kind == "hermite":
            return _hermite(spec.grid, int(p.pop("n", 0)))
        if spec.kind == "rect":
            return _rect(spec.grid, float(p.pop("width", 1.0)))
        if spec.kind == "bandlimited_noise":
            return _bandlimited_noise(spec.grid, int(p.pop("seed", 42)),
                                      int(p.pop("modes", 8)))
    except KeyError as exc:
        raise BadSpec(f"missing parameter {exc} for kind {spec.kind!r}") from exc
    finally:
        if p:
            raise BadSpec(f"unknown parameters {sorted(p)} for kind {spec.kind!r}")
    raise BadSpec(f"unknown signal kind {spec.kind!r}")  # pragma: no cover


@dataclass(frozen=True)
class BatteryEntry:
    name: str
    signal: SampledSignal
    schwartz: bool          # in the smooth rapidly-decaying subset
    extremal_alpha: float | None = None


def default_battery(grid: Grid, params: OlctParams | None = None) -> list[BatteryEntry]:
    """Standard test battery: smooth, extremal, oscillatory, compactly
    supported, and generic cases."""
    entries = [
        BatteryEntry("gaussian", generate(SignalSpec("gaussian", grid)), True),
    ]
    if params is not None and params.b > 0:
        alpha = 0.5 / math.pi
        spec = SignalSpec("chirped_gaussian_extremal", grid,
                          {"alpha": alpha, "olct": params})
        entries.append(BatteryEntry("extremal", generate(spec), True, alpha))
    for n in (1, 2, 3):
        entries.append(BatteryEntry(
            f"hermite{n}", generate(SignalSpec("hermite", grid, {"n": n})), True))
    entries.append(BatteryEntry("rect", generate(SignalSpec("rect", grid)), False))
    entries.append(BatteryEntry(
        "noise", generate(SignalSpec("bandlimited_noise", grid, {"seed": 42})), True))
    return entries
