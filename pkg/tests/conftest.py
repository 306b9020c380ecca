import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def random_state(rng, n: int) -> np.ndarray:
    """Haar-ish random normalized n-qubit state."""
    v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return v / np.linalg.norm(v)


def random_unitary(rng, dim: int) -> np.ndarray:
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))
