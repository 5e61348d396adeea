"""Offset linear canonical transform engines.

The transform of f with parameter matrix [[a, b, tau], [c, d, eta]],
ad - bc = 1, is

    (O f)(u) = integral f(t) K(t, u) dt                       (b > 0)
    (O f)(u) = sqrt(d) exp(j c d (u-tau)^2 / 2 + j u eta) f(d (u-tau))   (b = 0)

with kernel

    K(t, u) = (j 2 pi b)^(-1/2)
              * exp(j [ a t^2 / (2b) - t (u-tau)/b
                        - u (d tau - b eta)/b + d (u^2 + tau^2)/(2b) ]).

sqrt(j 2 pi b) uses the principal branch, sqrt(2 pi b) e^{j pi/4}.  With
this convention the Fourier case (a, b, c, d) = (0, 1, -1, 0) equals
e^{-j pi/4} times the unitary Fourier transform; the modulus carries the
usual (2 pi)^(-1/2) factor.

Three engines are provided:

* ``transform_direct`` -- O(N*M) midpoint quadrature onto any output
  grid; the reference oracle.
* ``transform_fast`` -- chirp/FFT/chirp factorization, O(N log N), on
  the FFT-induced output grid ``u_k = tau + (2 pi b / (N step)) k``.
* ``transform_b0`` -- the b = 0 chirp-multiplication branch.

The inverse is the adjoint, f(t) = integral (O f)(u) conj(K(t, u)) du,
which is exact for spectra produced on the induced grid and correct up
to discretization error otherwise (unitarity via the generalized
Parseval identity).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.fft

from .errors import DegenerateParams, GridNotPow2, NegativeB, OlctError, SymplecticViolation
from .sampling import Grid, SampledSignal

#: tolerance on |ad - bc - 1|
SYMPLECTIC_TOL = 1e-12


@dataclass(frozen=True)
class OlctParams:
    """The six transform parameters (a, b, c, d, tau, eta), ad - bc = 1."""

    a: float
    b: float
    c: float
    d: float
    tau: float = 0.0
    eta: float = 0.0

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.d, self.tau, self.eta)
        if not all(math.isfinite(v) for v in vals):
            raise OlctError(f"parameters must be finite, got {vals}")
        if self.b < 0:
            raise NegativeB(f"b must be nonnegative, got {self.b}")
        defect = self.a * self.d - self.b * self.c - 1.0
        if abs(defect) > SYMPLECTIC_TOL:
            raise SymplecticViolation(
                f"ad - bc = {self.a * self.d - self.b * self.c}, must equal 1"
            )

    @classmethod
    def fourier(cls) -> "OlctParams":
        return cls(0.0, 1.0, -1.0, 0.0)

    @classmethod
    def fractional(cls, alpha: float) -> "OlctParams":
        """Rotation matrix of angle alpha (fractional Fourier case)."""
        ca, sa = math.cos(alpha), math.sin(alpha)
        if sa < 0:
            raise NegativeB(f"sin(alpha) = {sa} < 0 not supported")
        return cls(ca, sa, -sa, ca)


def validate_params(a: float, b: float, c: float, d: float,
                    tau: float = 0.0, eta: float = 0.0) -> OlctParams:
    """Validate the six parameters and return an OlctParams.

    Raises SymplecticViolation if |ad - bc - 1| > 1e-12 and NegativeB if
    b < 0.  Nothing is normalized or repaired.
    """
    return OlctParams(float(a), float(b), float(c), float(d), float(tau), float(eta))


def _require_positive_b(params: OlctParams):
    if params.b == 0:
        raise DegenerateParams("b = 0: use transform_b0")


def _cis(phase: np.ndarray) -> np.ndarray:
    # e^{j phase} via separate cos/sin passes (faster than complex exp)
    out = np.empty(phase.shape, dtype=np.complex128)
    np.cos(phase, out=out.real)
    np.sin(phase, out=out.imag)
    return out


#: block length for the fused chirp-multiply passes; small enough that
#: per-block temporaries stay in cache at large N
_CHUNK = 1 << 16

_ARANGE = np.arange(_CHUNK, dtype=np.float64)

# +1, -1, +1, ... over two blocks: multiplying the input by (-1)^n is an
# exact fftshift of an even-length FFT output
_ALT_SIGN = np.where(np.arange(2 * _CHUNK) % 2 == 0, 1.0, -1.0)


#: phase magnitude beyond which libm sin/cos switch to the slow
#: arbitrary-precision range reduction; reduce mod 2 pi ourselves first
_TRIG_FAST_LIMIT = 1e8

_TWO_PI = 2.0 * math.pi


def _mul_quadratic_phase(vals: np.ndarray, grid: Grid,
                         quad: float, lin: float, const: float):
    """vals *= e^{j (quad x^2 + lin x + const)} on the grid coordinates,
    blockwise in place; block coordinates are rebuilt on the fly so the
    pass streams only vals itself."""
    n = vals.size
    m0 = min(n, _CHUNK)
    xx = np.empty(m0)
    ph = np.empty(m0)
    rot = np.empty(m0, dtype=np.complex128)
    xmax = max(abs(grid.offset), abs(grid.offset + (n - 1) * grid.step))
    reduce_range = (abs(quad) * xmax * xmax + abs(lin) * xmax
                    + abs(const)) > _TRIG_FAST_LIMIT
    for i in range(0, n, _CHUNK):
        m = min(_CHUNK, n - i)
        np.multiply(_ARANGE[:m], grid.step, out=xx[:m])
        xx[:m] += grid.offset + i * grid.step
        if quad == 0.0:
            np.multiply(xx[:m], lin, out=ph[:m])
        else:
            np.multiply(xx[:m], quad, out=ph[:m])
            ph[:m] += lin
            ph[:m] *= xx[:m]
        ph[:m] += const
        if reduce_range:
            # subtract the nearest multiple of 2 pi; the double phase has
            # already lost those bits, so this changes nothing but speed
            np.multiply(ph[:m], 1.0 / _TWO_PI, out=xx[:m])
            np.floor(xx[:m], out=xx[:m])
            xx[:m] *= _TWO_PI
            ph[:m] -= xx[:m]
        np.cos(ph[:m], out=rot[:m].real)
        np.sin(ph[:m], out=rot[:m].imag)
        vals[i:i + _CHUNK] *= rot[:m]


def _kernel_prefactor(b: float) -> complex:
    # 1 / sqrt(j 2 pi b), principal branch
    return np.exp(-0.25j * np.pi) / math.sqrt(2.0 * math.pi * b)


def _output_phase(params: OlctParams, u: np.ndarray) -> np.ndarray:
    p = params
    return np.exp(1j * (-u * (p.d * p.tau - p.b * p.eta) / p.b
                        + p.d * (u * u + p.tau * p.tau) / (2.0 * p.b)))


def _input_chirp(params: OlctParams, t: np.ndarray, with_offset: bool = True) -> np.ndarray:
    p = params
    phase = p.a * t * t / (2.0 * p.b)
    if with_offset:
        phase = phase + t * p.tau / p.b
    return np.exp(1j * phase)


def kernel(params: OlctParams, t, u):
    """Evaluate the b > 0 integral kernel K(t, u); broadcasts over arrays.

    |K(t, u)| = (2 pi b)^(-1/2) for every (t, u).
    """
    _require_positive_b(params)
    t = np.asarray(t, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    p = params
    phase = (p.a * t * t / (2.0 * p.b)
             - t * (u - p.tau) / p.b
             - u * (p.d * p.tau - p.b * p.eta) / p.b
             + p.d * (u * u + p.tau * p.tau) / (2.0 * p.b))
    out = _kernel_prefactor(p.b) * np.exp(1j * phase)
    return out if out.ndim else complex(out)


def transform_direct(f: SampledSignal, params: OlctParams, out_grid: Grid) -> SampledSignal:
    """Midpoint-quadrature transform onto an arbitrary output grid.

    O(N*M) reference engine: out(u) = step * sum_n f(t_n) K(t_n, u).
    Accuracy claims assume the signal carries < 1e-12 of its energy
    outside the input window.
    """
    _require_positive_b(params)
    t = f.grid.coords
    u = out_grid.coords
    g = f.values * _input_chirp(params, t)
    # e^{-j t (u - tau)/b} split as outer product; the tau part lives in g
    mat = np.exp(-1j * np.outer(u, t) / params.b)
    vals = (_kernel_prefactor(params.b) * _output_phase(params, u)
            * (mat @ (g * f.grid.step)))
    return SampledSignal(out_grid, vals)


def transform_b0(f: SampledSignal, params: OlctParams) -> SampledSignal:
    """The b = 0 branch: chirp-multiplied, shifted, scaled copy of f.

    f(d(u - tau)) is resampled by linear interpolation on the input
    grid; values outside the input window are treated as 0 (pre-pad the
    signal if that matters).
    """
    if params.b != 0:
        raise DegenerateParams(f"transform_b0 requires b = 0, got b = {params.b}")
    if params.d == 0:
        raise DegenerateParams("b = 0 with d = 0 violates ad - bc = 1")
    u = f.grid.coords
    t = f.grid.coords
    arg = params.d * (u - params.tau)
    re = np.interp(arg, t, f.values.real, left=0.0, right=0.0)
    im = np.interp(arg, t, f.values.imag, left=0.0, right=0.0)
    chirp = np.exp(1j * (params.c * params.d / 2.0 * (u - params.tau) ** 2
                         + u * params.eta))
    scale = np.sqrt(complex(params.d))
    return SampledSignal(f.grid, scale * chirp * (re + 1j * im))


def induced_grid(in_grid: Grid, params: OlctParams) -> Grid:
    """FFT-induced output grid u_k = tau + (2 pi b / (N step)) k, k symmetric."""
    _require_positive_b(params)
    n = in_grid.count
    du = 2.0 * math.pi * params.b / (n * in_grid.step)
    return Grid(offset=params.tau - (n // 2) * du, step=du, count=n)


def transform_fast(f: SampledSignal, params: OlctParams) -> SampledSignal:
    """Chirp-FFT transform on the induced output grid; O(N log N).

    Factorization: multiply by the input chirp, take a standard FFT to
    get the Fourier factor G on the induced grid, then apply the outer
    phase (j b)^(-1/2) e^{-j u (d tau - b eta)/b + j d (u^2+tau^2)/(2b)}.
    Agrees with transform_direct on the same grid; |out(u)| = |G(u)|/sqrt(b).
    """
    _require_positive_b(params)
    n = f.grid.count
    if n & (n - 1):
        raise GridNotPow2(f"fast transform requires power-of-two count, got {n}")
    out = induced_grid(f.grid, params)
    # the tau-dependent part of the input chirp is absorbed by centering
    # the induced grid at tau, so only the quadratic factor remains here
    p = params
    t0 = f.grid.offset
    scale = f.grid.step / math.sqrt(2.0 * math.pi * p.b)
    # fused copy: scale, and the (-1)^n that shifts the FFT output
    h = np.empty(n, dtype=np.complex128)
    pattern = _ALT_SIGN * scale
    for i in range(0, n, pattern.size):
        m = min(pattern.size, n - i)
        np.multiply(f.values[i:i + m], pattern[:m], out=h[i:i + m])
    if p.a != 0.0:
        _mul_quadratic_phase(h, f.grid, p.a / (2.0 * p.b), 0.0, 0.0)
    vals = scipy.fft.fft(h, overwrite_x=True)
    # fused output phase: the FFT-offset correction -omega(u) t0 with
    # omega = (u - tau)/b, the outer chirp/offset phase of the kernel,
    # and the -pi/4 of the principal-branch prefactor
    lin = (-t0 - p.d * p.tau + p.b * p.eta) / p.b
    const = (t0 * p.tau + p.d * p.tau * p.tau / 2.0) / p.b - 0.25 * math.pi
    _mul_quadratic_phase(vals, out, p.d / (2.0 * p.b), lin, const)
    return SampledSignal._wrap(out, vals)


def inverse_transform(F: SampledSignal, params: OlctParams, out_grid: Grid) -> SampledSignal:
    """Adjoint-kernel inverse: f(t) = step * sum_k F(u_k) conj(K(t, u_k)).

    Exact (to rounding) when F lives on the induced grid of out_grid;
    otherwise correct up to discretization error for well-windowed
    signals.
    """
    _require_positive_b(params)
    t = out_grid.coords
    u = F.grid.coords
    g = F.values * np.conj(_output_phase(params, u)) * np.conj(_kernel_prefactor(params.b))
    # the tau part of e^{j t (u - tau)/b} is carried by the conjugated
    # input chirp below, so the matrix only holds the t*u coupling
    mat = np.exp(1j * np.outer(t, u) / params.b)
    vals = np.conj(_input_chirp(params, t)) * (mat @ (g * F.grid.step))
    return SampledSignal(out_grid, vals)
