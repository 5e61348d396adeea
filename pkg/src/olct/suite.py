"""Certificates for the six uncertainty principles.

Each verify_* computes both sides of one inequality for a signal and a
parameter set and returns a Certificate.  The spectrum is obtained by
direct quadrature onto a half-sample centered grid (safe for the
singular ln|u| and |u|^(-lambda) weights) unless the caller supplies a
precomputed one.

Margin conventions: margin = lhs - rhs for >=-type statements
(logarithmic, entropic, heisenberg) and rhs - lhs for the <=-type
weighted-moment check (pitt); pass means margin >= -tol with the
tolerance recorded in meta.  The tail-concentration check is
qualitative (no attempt is made to estimate its unknown constant) and
the decay-envelope check uses a finite-grid proxy for the asymptotic
O() conditions: slope regression for signals flagged extremal, envelope
divergence otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .core import OlctParams, transform_direct
from .errors import NotNormalized, OlctError, ZeroSignal
from .measures import (IntervalSet, abs_squared, beurling_functional, density_of,
                       l2_norm, log_moment, mean_variance, shannon_entropy,
                       tail_energy, weighted_moment)
from .sampling import Grid, SampledSignal
from .specfun import digamma, pitt_constant

#: analytic tolerance plus measured midpoint-rule headroom at N = 1024
DEFAULT_TOL = 1e-6 + 1e-3

#: growth factor of the truncated double integral between the first and
#: last window that certifies divergence; the borderline Gaussian pair
#: grows linearly (factor ~ W_last / W_first), a convergent integral
#: would plateau near 1
DIVERGENCE_RATIO = 1.5

NORM_TOL = 1e-6

CHECK_ORDER = ("nazarov", "hardy", "beurling", "pitt", "logarithmic",
               "entropic", "heisenberg")


@dataclass(frozen=True)
class Certificate:
    name: str
    lhs: float
    rhs: float
    margin: float
    passed: bool
    meta: dict[str, Any] = field(default_factory=dict)


def _require_unit_norm(f: SampledSignal):
    nrm = l2_norm(f)
    if abs(nrm - 1.0) > NORM_TOL:
        raise NotNormalized(f"signal L2 norm is {nrm}, expected 1")


def _spectrum(f: SampledSignal, params: OlctParams,
              spectrum: SampledSignal | None) -> SampledSignal:
    if spectrum is not None:
        return spectrum
    return transform_direct(f, params, f.grid)


def verify_heisenberg(f: SampledSignal, params: OlctParams,
                      spectrum: SampledSignal | None = None,
                      tol: float | None = None) -> Certificate:
    """Dispersion product V(|f|^2) V(|Of|^2) >= b^2 / 4."""
    _require_unit_norm(f)
    F = _spectrum(f, params, spectrum)
    _, vt = mean_variance(density_of(f))
    _, vu = mean_variance(density_of(F))
    lhs = vt * vu
    rhs = params.b ** 2 / 4.0
    tol = DEFAULT_TOL * max(1.0, params.b ** 2) if tol is None else tol
    margin = lhs - rhs
    return Certificate("heisenberg", lhs, rhs, margin, margin >= -tol,
                       {"b": params.b, "var_time": vt, "var_olct": vu, "tol": tol})


def verify_entropic(f: SampledSignal, params: OlctParams,
                    spectrum: SampledSignal | None = None,
                    tol: float = DEFAULT_TOL) -> Certificate:
    """Entropy sum E(|f|^2) + E(|Of|^2) >= ln(pi e b)."""
    _require_unit_norm(f)
    F = _spectrum(f, params, spectrum)
    et = shannon_entropy(density_of(f))
    eu = shannon_entropy(density_of(F))
    lhs = et + eu
    rhs = math.log(math.pi * math.e * params.b)
    margin = lhs - rhs
    return Certificate("entropic", lhs, rhs, margin, margin >= -tol,
                       {"b": params.b, "entropy_time": et, "entropy_olct": eu,
                        "tol": tol})


def verify_logarithmic(f: SampledSignal, params: OlctParams,
                       spectrum: SampledSignal | None = None,
                       tol: float = DEFAULT_TOL) -> Certificate:
    """Log-moment sum >= ln b + psi(1/4)."""
    _require_unit_norm(f)
    F = _spectrum(f, params, spectrum)
    lt = log_moment(density_of(f))
    lu = log_moment(density_of(F))
    lhs = lt + lu
    rhs = math.log(params.b) + digamma(0.25)
    margin = lhs - rhs
    return Certificate("logarithmic", lhs, rhs, margin, margin >= -tol,
                       {"b": params.b, "log_moment_time": lt, "log_moment_olct": lu,
                        "tol": tol})


def verify_pitt(f: SampledSignal, params: OlctParams, lam: float,
                spectrum: SampledSignal | None = None,
                tol: float = DEFAULT_TOL) -> Certificate:
    """Weighted moments: b^lam int |u|^-lam |Of|^2 <= M_lam int |t|^lam |f|^2.

    Both sides use the raw (unnormalized) squared modulus.  Stated for
    smooth rapidly decaying signals; compactly supported pulses are
    outside the hypothesis.
    """
    m = pitt_constant(lam)
    F = _spectrum(f, params, spectrum)
    lhs = params.b ** lam * weighted_moment(abs_squared(F), lam, -1)
    rhs = m.value * weighted_moment(abs_squared(f), lam, +1)
    tol = tol * max(1.0, abs(rhs))
    margin = rhs - lhs
    return Certificate("pitt", lhs, rhs, margin, margin >= -tol,
                       {"lambda": lam, "constant": m.value, "b": params.b,
                        "tol": tol})


def verify_hardy(f: SampledSignal, params: OlctParams, alpha: float,
                 extremal: bool = False,
                 spectrum: SampledSignal | None = None,
                 slope_rtol: float = 0.01,
                 envelope_threshold: float = 1e6) -> Certificate:
    """Decay-envelope check against the Gaussian rate pair
    (e^{-pi alpha t^2}, e^{-u^2/(4 pi alpha b^2)}).

    lhs is the least-squares slope of ln|Of(u)| against u^2, rhs the
    conjugate rate -1/(4 pi alpha b^2).  A signal flagged extremal must
    reproduce rhs within slope_rtol; otherwise at least one envelope
    ratio must exceed envelope_threshold, witnessing that the decay
    hypothesis fails on one side.
    """
    if not alpha > 0:
        raise OlctError(f"alpha must be positive, got {alpha}")
    if l2_norm(f) == 0.0:
        raise ZeroSignal("decay check undefined for the zero signal")
    F = _spectrum(f, params, spectrum)
    t = f.grid.coords
    u = F.grid.coords
    rate_u = 1.0 / (4.0 * math.pi * alpha * params.b ** 2)
    env_time = float(np.max(np.abs(f.values) * np.exp(math.pi * alpha * t * t)))
    env_olct = float(np.max(np.abs(F.values) * np.exp(rate_u * u * u)))
    mag = np.abs(F.values)
    mask = mag > 1e-12 * float(mag.max())
    slope = float(np.polyfit(u[mask] ** 2, np.log(mag[mask]), 1)[0])
    rhs = -rate_u
    if extremal:
        margin = slope_rtol - abs(slope / rhs - 1.0)
    else:
        margin = max(env_time, env_olct) / envelope_threshold - 1.0
    return Certificate("hardy", slope, rhs, margin, margin >= 0.0,
                       {"alpha": alpha, "b": params.b, "extremal": extremal,
                        "envelope_time": env_time, "envelope_olct": env_olct,
                        "slope_rtol": slope_rtol,
                        "envelope_threshold": envelope_threshold})


def verify_beurling(f: SampledSignal, params: OlctParams,
                    windows: tuple[float, ...] = (2.0, 4.0, 6.0, 8.0),
                    spectrum: SampledSignal | None = None,
                    divergence_ratio: float = DIVERGENCE_RATIO) -> Certificate:
    """Divergence witness for the exponentially weighted double integral.

    The untruncated integral is finite only for f = 0; for nonzero f
    the truncated values must grow strictly with the window and the
    last/first ratio must exceed divergence_ratio.
    """
    if len(windows) < 2 or any(w2 <= w1 for w1, w2 in zip(windows, windows[1:])):
        raise OlctError(f"windows must be >= 2 strictly increasing values, got {windows}")
    F = _spectrum(f, params, spectrum)
    values = [beurling_functional(f, F, params.b, w) for w in windows]
    meta: dict[str, Any] = {"windows": list(windows), "values": values,
                            "b": params.b, "divergence_ratio": divergence_ratio}
    if values[-1] == 0.0:
        meta["zero_signal"] = True
        return Certificate("beurling", 0.0, 0.0, 0.0, True, meta)
    increasing = all(v2 > v1 for v1, v2 in zip(values, values[1:]))
    lhs = math.log(values[-1] / values[0]) if values[0] > 0 else math.inf
    rhs = math.log(divergence_ratio)
    margin = lhs - rhs
    return Certificate("beurling", lhs, rhs, margin,
                       increasing and margin >= 0.0, meta)


def nazarov_report(f: SampledSignal, params: OlctParams,
                   t_set: IntervalSet, omega_set: IntervalSet,
                   spectrum: SampledSignal | None = None) -> Certificate:
    """Qualitative tail-energy report: energy outside T plus energy of
    the transform outside Omega scaled by b must be positive for any
    nonzero signal.  The unknown multiplicative constant of the
    quantitative statement is not estimated."""
    _require_unit_norm(f)
    F = _spectrum(f, params, spectrum)
    scaled = omega_set.scale(params.b) if omega_set.intervals else omega_set
    eps_t = tail_energy(f, t_set)
    eps_o = tail_energy(F, scaled)
    lhs = eps_t + eps_o
    meta: dict[str, Any] = {
        "measure_T": t_set.measure(), "measure_Omega": omega_set.measure(),
        "tail_time": eps_t, "tail_olct": eps_o, "b": params.b,
    }
    if lhs < 1e-12:
        # grid signals are compactly supported; a vanishing tail sum
        # only says both sets cover the window
        meta["support_within_window"] = True
    return Certificate("nazarov", lhs, 0.0, lhs, lhs > 0.0, meta)


@dataclass(frozen=True)
class SuiteConfig:
    checks: tuple[str, ...] = CHECK_ORDER
    lambdas: tuple[float, ...] = tuple(round(0.1 * k, 1) for k in range(10))
    alpha: float = 0.5 / math.pi
    hardy_extremal: bool = False
    windows: tuple[float, ...] = (2.0, 4.0, 6.0, 8.0)
    nazarov_time: IntervalSet = IntervalSet(((-1.0, 1.0),))
    nazarov_omega: IntervalSet = IntervalSet(((-1.0, 1.0),))
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        unknown = set(self.checks) - set(CHECK_ORDER)
        if unknown:
            raise OlctError(f"unknown checks {sorted(unknown)}")
        for lam in self.lambdas:
            pitt_constant(lam)  # validate the range eagerly


def _error_certificate(name: str, exc: Exception) -> Certificate:
    return Certificate(name, math.nan, math.nan, math.nan, False,
                       {"error": type(exc).__name__, "detail": str(exc)})


def _pitt_aggregate(f, params, config, spectrum) -> Certificate:
    certs = [verify_pitt(f, params, lam, spectrum=spectrum, tol=config.tol)
             for lam in config.lambdas]
    worst = min(certs, key=lambda c: c.margin)
    meta = dict(worst.meta)
    meta["lambdas"] = [c.meta["lambda"] for c in certs]
    meta["lhs_values"] = [c.lhs for c in certs]
    meta["rhs_values"] = [c.rhs for c in certs]
    return Certificate("pitt", worst.lhs, worst.rhs, worst.margin,
                       all(c.passed for c in certs), meta)


def run_suite(f: SampledSignal, params: OlctParams,
              config: SuiteConfig = SuiteConfig()) -> list[Certificate]:
    """Run the configured checks in deterministic order.

    Per-check domain errors are captured as failing certificates with
    the error recorded in meta; they never abort the batch.
    """
    if not config.checks:
        return []
    spectrum = transform_direct(f, params, f.grid)
    runners = {
        "nazarov": lambda: nazarov_report(f, params, config.nazarov_time,
                                          config.nazarov_omega, spectrum=spectrum),
        "hardy": lambda: verify_hardy(f, params, config.alpha,
                                      extremal=config.hardy_extremal,
                                      spectrum=spectrum),
        "beurling": lambda: verify_beurling(f, params, config.windows,
                                            spectrum=spectrum),
        "pitt": lambda: _pitt_aggregate(f, params, config, spectrum),
        "logarithmic": lambda: verify_logarithmic(f, params, spectrum=spectrum,
                                                  tol=config.tol),
        "entropic": lambda: verify_entropic(f, params, spectrum=spectrum,
                                            tol=config.tol),
        "heisenberg": lambda: verify_heisenberg(f, params, spectrum=spectrum),
    }
    certificates = []
    for name in CHECK_ORDER:
        if name not in config.checks:
            continue
        try:
            certificates.append(runners[name]())
        except OlctError as exc:
            certificates.append(_error_certificate(name, exc))
    return certificates
