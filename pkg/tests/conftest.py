import numpy as np
import pytest

from multidecay import MultipletParams

# Canonical demonstration system used throughout: three levels, side rates
# at half the central rate, drive at a tenth of the central rate, all
# population starting in the central level.
CANON_GAMMA = (0.5, 1.0, 0.5)
CANON_OMEGA = 0.1


def canon_params(omega: float = CANON_OMEGA, side: float = 0.5) -> MultipletParams:
    return MultipletParams.central_excitation([side, 1.0, side], omega)


@pytest.fixture
def params():
    return canon_params()


def random_params(rng: np.random.Generator, max_half_width: int = 3) -> MultipletParams:
    """A random valid parameter set: rates in [0, 5], drive in [0, 2],
    normalized complex initial amplitudes."""
    half = int(rng.integers(0, max_half_width + 1))
    size = 2 * half + 1
    gamma = rng.uniform(0.0, 5.0, size)
    omega = float(rng.uniform(0.0, 2.0))
    initial = rng.normal(size=size) + 1j * rng.normal(size=size)
    initial /= np.linalg.norm(initial)
    return MultipletParams(half, gamma, omega, initial)
