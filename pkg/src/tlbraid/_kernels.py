"""Hot amplitude-pass kernels for the structured braiding operator.

The structured operator is (diagonal term) + (monomial tensor term), so one
linear pass over the 2^n amplitudes suffices:

    out[x] = d(x_k) * v[x] + P[x ^ mask] * v[x ^ mask]

with mask collecting the bit-flipping tensor slots and P the per-index
coefficient product (a Kronecker product of n two-vectors, built once).

Two interchangeable implementations: a numba @njit loop and a vectorized
numpy twin.  Set TLBRAID_NO_NUMBA=1 (or any non-empty value) to force the
numpy path; the numpy path is also the silent fallback when numba is not
importable.  `benchmarks/bench_structured.py` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_FLAG = "TLBRAID_NO_NUMBA"

try:
    if os.environ.get(_ENV_FLAG):
        raise ImportError(f"{_ENV_FLAG} set")
    from numba import njit
    _HAVE_NUMBA = True
except ImportError:
    njit = None
    _HAVE_NUMBA = False


def backend() -> str:
    """Active kernel backend: "numba" or "numpy"."""
    return "numba" if _HAVE_NUMBA else "numpy"


def gather_pass_numpy(v: np.ndarray, phases: np.ndarray, mask: int,
                      kbit: int, diag0: complex, diag1: complex) -> np.ndarray:
    """Vectorized single pass; allocates index and gather temporaries."""
    idx = np.arange(v.size, dtype=np.int64)
    partner = idx ^ mask
    dvec = np.where(idx & kbit, diag1, diag0)
    return dvec * v + phases[partner] * v[partner]


if _HAVE_NUMBA:

    @njit(cache=True)
    def _gather_pass_jit(v, phases, mask, kbit, diag0, diag1, out):
        for x in range(v.size):
            y = x ^ mask
            d = diag1 if x & kbit else diag0
            out[x] = d * v[x] + phases[y] * v[y]

    def gather_pass_numba(v: np.ndarray, phases: np.ndarray, mask: int,
                          kbit: int, diag0: complex, diag1: complex) -> np.ndarray:
        out = np.empty_like(v)
        _gather_pass_jit(v, phases, np.int64(mask), np.int64(kbit),
                         complex(diag0), complex(diag1), out)
        return out

else:
    gather_pass_numba = None


def gather_pass(v, phases, mask, kbit, diag0, diag1):
    if _HAVE_NUMBA:
        return gather_pass_numba(v, phases, mask, kbit, diag0, diag1)
    return gather_pass_numpy(v, phases, mask, kbit, diag0, diag1)


def phase_vector(coeff_pairs: list[tuple[complex, complex]]) -> np.ndarray:
    """Kronecker product of per-qubit (bit=0, bit=1) coefficient pairs.

    Entry y of the result is the product over qubits j of the pair entry
    selected by bit j of y (qubit 1 most significant).
    """
    out = np.ones(1, dtype=np.complex128)
    for c0, c1 in coeff_pairs:
        out = np.kron(out, np.array([c0, c1], dtype=np.complex128))
    return out
