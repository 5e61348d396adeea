import math

import numpy as np
import pytest

from olct import (Grid, OlctParams, SignalSpec, default_battery, generate,
                  l2_norm, validate_params)
from olct.errors import BadSpec
from olct.signals import KINDS


def spec_for(kind, grid, fourier):
    if kind == "chirped_gaussian_extremal":
        return SignalSpec(kind, grid, {"olct": fourier})
    return SignalSpec(kind, grid)


class TestGenerate:
    @pytest.mark.parametrize("kind", KINDS)
    def test_unit_norm(self, grid, fourier, kind):
        sig = generate(spec_for(kind, grid, fourier))
        assert abs(l2_norm(sig) - 1.0) <= 1e-10

    @pytest.mark.parametrize("kind", KINDS)
    def test_deterministic(self, grid, fourier, kind):
        a = generate(spec_for(kind, grid, fourier))
        b = generate(spec_for(kind, grid, fourier))
        assert np.array_equal(a.values, b.values)

    def test_noise_seed_changes_signal(self, grid):
        a = generate(SignalSpec("bandlimited_noise", grid, {"seed": 1}))
        b = generate(SignalSpec("bandlimited_noise", grid, {"seed": 2}))
        assert np.max(np.abs(a.values - b.values)) > 1e-3

    def test_gaussian_closed_form(self, grid, gaussian):
        t = grid.coords
        expected = np.pi ** -0.25 * np.exp(-t * t / 2.0)
        np.testing.assert_allclose(gaussian.values, expected, rtol=1e-10)

    def test_gaussian_sigma_scales_width(self, grid):
        wide = generate(SignalSpec("gaussian", grid, {"sigma": 2.0}))
        t = grid.coords
        rho = np.abs(wide.values) ** 2
        var = np.sum(t * t * rho) * grid.step
        assert var == pytest.approx(4.0, rel=1e-6)

    def test_extremal_modulus_matches_gaussian(self, grid, gaussian):
        # default alpha = 1/(2 pi): |extremal| = pi^{-1/4} e^{-t^2/2}
        p = validate_params(1, 1, 0, 1, 0.5, -0.5)
        e = generate(SignalSpec("chirped_gaussian_extremal", grid, {"olct": p}))
        np.testing.assert_allclose(np.abs(e.values), np.abs(gaussian.values),
                                   atol=1e-12)

    def test_extremal_chirp_phase(self, grid):
        p = validate_params(1, 1, 0, 1, 0.5, -0.5)
        e = generate(SignalSpec("chirped_gaussian_extremal", grid, {"olct": p}))
        t = grid.coords
        phase = np.angle(e.values) - (-p.a / (2 * p.b) * t * t - p.tau / p.b * t)
        phase = np.angle(np.exp(1j * phase))  # wrap to (-pi, pi]
        np.testing.assert_allclose(phase, 0.0, atol=1e-10)

    def test_hermite_orthogonality(self, grid):
        sigs = [generate(SignalSpec("hermite", grid, {"n": n})) for n in range(5)]
        gram = np.array([[np.vdot(a.values, b.values) * grid.step for b in sigs]
                         for a in sigs])
        np.testing.assert_allclose(gram, np.eye(5), atol=1e-8)

    def test_rect_support(self, grid):
        sig = generate(SignalSpec("rect", grid, {"width": 2.0}))
        t = grid.coords
        inside = np.abs(t) <= 1.0
        assert np.all(sig.values[~inside] == 0)
        assert np.ptp(np.abs(sig.values[inside])) == 0.0

    def test_noise_is_smooth_and_decaying(self, grid):
        sig = generate(SignalSpec("bandlimited_noise", grid))
        edge = np.abs(sig.values[:8]).max()
        assert edge <= 1e-6 * np.abs(sig.values).max()


class TestBadSpecs:
    def test_unknown_kind(self, grid):
        with pytest.raises(BadSpec):
            SignalSpec("square", grid)

    @pytest.mark.parametrize("kind,params", [
        ("gaussian", {"sigma": 0.0}),
        ("gaussian", {"sigma": -1.0}),
        ("hermite", {"n": -1}),
        ("rect", {"width": 0.0}),
        ("bandlimited_noise", {"modes": 0}),
        ("gaussian", {"unknown_key": 1.0}),
    ])
    def test_bad_parameters(self, grid, kind, params):
        with pytest.raises(BadSpec):
            generate(SignalSpec(kind, grid, params))

    def test_extremal_requires_olct(self, grid):
        with pytest.raises(BadSpec):
            generate(SignalSpec("chirped_gaussian_extremal", grid))

    def test_extremal_requires_positive_b(self, grid):
        p = validate_params(1, 0, 0, 1)
        with pytest.raises(BadSpec):
            generate(SignalSpec("chirped_gaussian_extremal", grid, {"olct": p}))


class TestBattery:
    def test_with_params(self, grid, fourier):
        entries = default_battery(grid, fourier)
        names = [e.name for e in entries]
        assert names == ["gaussian", "extremal", "hermite1", "hermite2",
                         "hermite3", "rect", "noise"]
        assert all(abs(l2_norm(e.signal) - 1.0) <= 1e-10 for e in entries)

    def test_without_params_drops_extremal(self, grid):
        names = [e.name for e in default_battery(grid)]
        assert "extremal" not in names
        assert len(names) == 6

    def test_schwartz_flags(self, grid, fourier):
        flags = {e.name: e.schwartz for e in default_battery(grid, fourier)}
        assert flags["rect"] is False
        assert all(v for k, v in flags.items() if k != "rect")

    def test_extremal_alpha_recorded(self, grid, fourier):
        entry = next(e for e in default_battery(grid, fourier)
                     if e.name == "extremal")
        assert entry.extremal_alpha == pytest.approx(0.5 / math.pi)
