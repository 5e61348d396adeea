"""Gamma, log-Gamma, and digamma for positive real arguments.

gamma uses a Lanczos rational approximation (g = 607/128, 15 terms),
accurate to better than 1e-13 relative on (0, 50].  digamma shifts the
argument above 10 by the recurrence psi(x+1) = psi(x) + 1/x and then
applies the Bernoulli asymptotic series, giving absolute error well
below 1e-10 on (0, 50].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, LambdaOutOfRange

_LANCZOS_G = 4.7421875  # 607/128
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

# asymptotic tail: -sum B_2n / (2n x^2n)
_DIGAMMA_TAIL = (
    -1.0 / 12.0,
    1.0 / 120.0,
    -1.0 / 252.0,
    1.0 / 240.0,
    -1.0 / 132.0,
    691.0 / 32760.0,
    -1.0 / 12.0,
)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not (x > 0) or not math.isfinite(x):
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    ser = _LANCZOS_COEF[0]
    for j, c in enumerate(_LANCZOS_COEF[1:], start=1):
        ser += c / (x + j)
    t = x + _LANCZOS_G + 0.5
    return (x + 0.5) * math.log(t) - t + math.log(math.sqrt(2.0 * math.pi) * ser / x)


def gamma(x: float) -> float:
    """Gamma(x) for x > 0, relative error below 1e-12 on (0, 50]."""
    return math.exp(log_gamma(x))


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0, absolute error below 1e-10."""
    if not (x > 0) or not math.isfinite(x):
        raise DomainError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for b in _DIGAMMA_TAIL:
        tail += b * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x + tail


@dataclass(frozen=True)
class PittConstant:
    """Sharp constant Gamma^2((1-lam)/4) / Gamma^2((1+lam)/4), >= 1."""

    lam: float
    value: float


def pitt_constant(lam: float) -> PittConstant:
    """Weighted-moment inequality constant for exponent lam in [0, 1)."""
    if not (0.0 <= lam < 1.0):
        raise LambdaOutOfRange(f"lambda must satisfy 0 <= lambda < 1, got {lam}")
    value = math.exp(2.0 * (log_gamma((1.0 - lam) / 4.0) - log_gamma((1.0 + lam) / 4.0)))
    return PittConstant(lam=lam, value=value)
