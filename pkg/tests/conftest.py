import math

import pytest

from olct import Grid, OlctParams, SignalSpec, generate, validate_params

N = 1024
HALF_WIDTH = 12.0


@pytest.fixture(scope="session")
def grid():
    return Grid.over_window(N, HALF_WIDTH)


@pytest.fixture(scope="session")
def fourier():
    return OlctParams.fourier()


@pytest.fixture(scope="session")
def param_sets():
    # five valid parameter matrices with b in {0.5, 1, 2}, offsets included
    return [
        validate_params(0, 1, -1, 0, 0, 0),
        validate_params(1, 1, 0, 1, 0.5, -0.5),
        validate_params(1, 0.5, 0, 1, 0.3, 0.2),
        validate_params(1, 2, 0, 1, -0.4, 0.1),
        validate_params(2, 2, 0.5, 1, 0, 0),
    ]


@pytest.fixture(scope="session")
def gaussian(grid):
    return generate(SignalSpec("gaussian", grid))


@pytest.fixture(scope="session")
def alpha_default():
    return 0.5 / math.pi
