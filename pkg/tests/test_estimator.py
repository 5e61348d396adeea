import numpy as np
import pytest
from sklearn.base import clone

from olct import (Grid, OlctTransformer, SignalSpec, generate, transform_direct,
                  transform_fast, validate_params)
from olct.errors import OlctError


@pytest.fixture
def X():
    grid = Grid.over_window(256, 8.0)
    rows = [generate(SignalSpec("gaussian", grid)).values,
            generate(SignalSpec("hermite", grid, {"n": 1})).values,
            generate(SignalSpec("bandlimited_noise", grid, {"seed": 3})).values]
    return np.stack(rows)


class TestSklearnContract:
    def test_get_params_roundtrip(self):
        est = OlctTransformer(a=1.0, b=2.0, c=0.0, d=0.5, tau=0.3, eta=-0.1,
                              method="direct", half_width=8.0)
        assert OlctTransformer(**est.get_params()).get_params() == est.get_params()

    def test_clone(self, X):
        est = OlctTransformer().fit(X)
        fresh = clone(est)
        assert not hasattr(fresh, "params_")
        assert fresh.get_params() == est.get_params()

    def test_set_params(self):
        est = OlctTransformer().set_params(b=2.0, d=0.5, a=1.0, c=0.0)
        assert est.b == 2.0

    def test_fit_transform_shape(self, X):
        out = OlctTransformer(half_width=8.0).fit_transform(X)
        assert out.shape == X.shape
        assert out.dtype == np.complex128


class TestNumerics:
    def test_fast_matches_direct_engine(self, X):
        est = OlctTransformer(a=1.0, b=1.0, c=0.0, d=1.0, tau=0.5, eta=-0.5,
                              half_width=8.0).fit(X)
        out = est.transform(X)
        for i, row in enumerate(X):
            from olct import SampledSignal
            sig = SampledSignal(est.grid_, row)
            ref = transform_direct(sig, est.params_, est.output_grid_)
            np.testing.assert_allclose(out[i], ref.values, atol=1e-10)

    def test_direct_method_outputs_on_input_grid(self, X):
        est = OlctTransformer(method="direct", half_width=8.0).fit(X)
        assert est.output_grid_ == est.grid_
        out = est.transform(X)
        assert out.shape == X.shape

    def test_roundtrip(self, X):
        est = OlctTransformer(a=1.0, b=2.0, c=0.0, d=1.0, tau=-0.4, eta=0.1,
                              half_width=8.0).fit(X)
        back = est.inverse_transform(est.transform(X))
        np.testing.assert_allclose(back, X, atol=1e-10)

    def test_unitary_rows(self, X):
        est = OlctTransformer(half_width=8.0).fit(X)
        out = est.transform(X)
        step_in = est.grid_.step
        step_out = est.output_grid_.step
        for row_in, row_out in zip(X, out):
            e_in = np.sum(np.abs(row_in) ** 2) * step_in
            e_out = np.sum(np.abs(row_out) ** 2) * step_out
            assert e_out == pytest.approx(e_in, rel=1e-10)

    def test_b0_branch(self, X):
        est = OlctTransformer(a=1.0, b=0.0, c=0.5, d=1.0, half_width=8.0).fit(X)
        out = est.transform(X)
        assert out.shape == X.shape
        with pytest.raises(OlctError):
            est.inverse_transform(out)


class TestValidation:
    def test_transform_before_fit(self, X):
        with pytest.raises(OlctError):
            OlctTransformer().transform(X)

    def test_bad_method(self, X):
        with pytest.raises(ValueError):
            OlctTransformer(method="magic").fit(X)

    def test_symplectic_checked_at_fit(self, X):
        with pytest.raises(OlctError):
            OlctTransformer(a=1.0, b=1.0, c=0.0, d=2.0).fit(X)

    def test_row_length_checked(self, X):
        est = OlctTransformer(half_width=8.0).fit(X)
        with pytest.raises(ValueError):
            est.transform(X[:, :100])

    def test_nan_rejected(self, X):
        bad = X.copy()
        bad[0, 0] = np.nan
        with pytest.raises(ValueError):
            OlctTransformer().fit(bad)

    def test_1d_input_promoted(self, X):
        est = OlctTransformer(half_width=8.0).fit(X[0])
        out = est.transform(X[0])
        assert out.shape == (1, X.shape[1])
