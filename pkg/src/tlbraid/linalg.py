"""Dense complex linear algebra kernel.

Conventions used throughout the package:

  * matrices and state vectors are ``complex128`` ndarrays; a state over n
    qubits has 2**n amplitudes,
  * qubit 1 is the leftmost tensor factor and the most significant bit of
    the amplitude index, so |a1 a2 ... an> sits at index sum a_j 2**(n-j),
  * no function mutates its inputs,
  * dense matrices are capped at 2**12 x 2**12 (DENSE_CAP_DIM); larger
    qubit counts are served only by the structured path in `states`.

JSON interchange: complex numbers are two-element [re, im] lists; matrices
are {"rows", "cols", "entries"} with row-major entries; states are
{"n_qubits", "amplitudes"}.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError, DimensionMismatchError

DENSE_CAP_DIM = 2**12

#: default tolerance for verification reports
REPORT_TOL = 1e-10
#: default tolerance for directly constructed identities
EXACT_TOL = 1e-12


def as_matrix(entries) -> np.ndarray:
    """Validated 2-D complex matrix from nested sequences or an ndarray."""
    m = np.array(entries, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionMismatchError(f"expected a 2-D matrix, got shape {m.shape}")
    require_finite(m)
    return m


def as_state(amplitudes) -> np.ndarray:
    """Validated state vector: 1-D, complex, length a power of two."""
    v = np.array(amplitudes, dtype=np.complex128).reshape(-1)
    if v.size < 1 or v.size & (v.size - 1):
        raise DimensionMismatchError(
            f"state length {v.size} is not a power of two"
        )
    require_finite(v)
    return v


def require_finite(arr: np.ndarray) -> None:
    if not np.isfinite(arr).all():
        raise ValueError("non-finite entries (NaN/Inf) are not accepted")


def num_qubits(v: np.ndarray) -> int:
    """Qubit count of a state vector (length must be a power of two)."""
    size = v.shape[0]
    n = size.bit_length() - 1
    if v.ndim != 1 or size != 1 << n:
        raise DimensionMismatchError(f"not a qubit state of shape {v.shape}")
    return n


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, left factor most significant.

    Raises CapacityError if the result would exceed the dense cap.
    """
    rows = a.shape[0] * b.shape[0]
    cols = (a.shape[1] if a.ndim == 2 else 1) * (b.shape[1] if b.ndim == 2 else 1)
    if max(rows, cols) > DENSE_CAP_DIM:
        raise CapacityError(
            f"kron result {rows}x{cols} exceeds dense cap {DENSE_CAP_DIM}"
        )
    return np.kron(a, b)


def kron_all(*factors: np.ndarray) -> np.ndarray:
    """Fold `kron` over the factors left to right."""
    out = np.array([[1.0 + 0.0j]])
    for f in factors:
        out = kron(out, f)
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatchError(
            f"matmul shapes {a.shape} and {b.shape} do not chain"
        )
    return a @ b


def apply(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix-vector product m @ v for a 2**n x 2**n matrix on an n-qubit state."""
    n = num_qubits(v)
    if m.shape != (1 << n, 1 << n):
        raise DimensionMismatchError(
            f"operator shape {m.shape} does not act on {n} qubits"
        )
    return m @ v


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def apply_single_qubit(m2: np.ndarray, v: np.ndarray, pos: int) -> np.ndarray:
    """Apply a 2x2 matrix to qubit `pos` (1-based) of a state vector."""
    n = num_qubits(v)
    if not 1 <= pos <= n:
        raise DimensionMismatchError(f"qubit {pos} out of range 1..{n}")
    t = v.reshape(1 << (pos - 1), 2, 1 << (n - pos))
    return np.einsum("ab,ibj->iaj", m2, t).reshape(-1)


def norm(v: np.ndarray) -> float:
    return float(np.linalg.norm(v))


def is_normalized(v: np.ndarray, tol: float = EXACT_TOL) -> bool:
    return abs(np.vdot(v, v).real - 1.0) <= tol


def max_abs(m: np.ndarray) -> float:
    """Max-norm residual helper: largest entry magnitude."""
    return float(np.max(np.abs(m))) if m.size else 0.0


def is_unitary(m: np.ndarray, tol: float = EXACT_TOL) -> bool:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"unitarity check needs a square matrix, got {m.shape}")
    return max_abs(dagger(m) @ m - np.eye(m.shape[0])) <= tol


def is_hermitian(m: np.ndarray, tol: float = EXACT_TOL) -> bool:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"hermiticity check needs a square matrix, got {m.shape}")
    return max_abs(m - dagger(m)) <= tol


def _column_phase_match(u: np.ndarray, v: np.ndarray, tol: float) -> bool:
    """True iff u = c*v entrywise for some unit scalar c (zero pairs pass)."""
    ov = np.vdot(v, u)
    if abs(ov) < 1e-300:
        return max_abs(u) <= tol and max_abs(v) <= tol
    c = ov / abs(ov)
    return max_abs(u - c * v) <= tol


def phase_equivalent(u, v, mode: str = "global", tol: float = REPORT_TOL) -> bool:
    """Phase-insensitive comparison of matrices or state vectors.

    global mode: vectors pass iff |<u|v>| = ||u|| ||v|| within tol;
    matrices pass iff u = c*v entrywise for a single unit scalar c.
    columnwise mode: each column of u must be a unit-scalar multiple of the
    matching column of v.
    """
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    if u.shape != v.shape:
        raise DimensionMismatchError(f"shape mismatch {u.shape} vs {v.shape}")
    if mode == "global":
        if u.ndim == 1:
            return abs(abs(np.vdot(u, v)) - norm(u) * norm(v)) <= tol
        return _column_phase_match(u.ravel(), v.ravel(), tol)
    if mode == "columnwise":
        if u.ndim != 2:
            raise DimensionMismatchError("columnwise mode needs matrices")
        return all(
            _column_phase_match(u[:, j], v[:, j], tol) for j in range(u.shape[1])
        )
    raise ValueError(f"unknown mode {mode!r}")


# --- JSON interchange ------------------------------------------------------

def complex_to_json(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=np.complex128)
    return {
        "rows": m.shape[0],
        "cols": m.shape[1],
        "entries": [complex_to_json(z) for z in m.ravel()],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    entries = [complex(re, im) for re, im in obj["entries"]]
    if len(entries) != rows * cols:
        raise DimensionMismatchError(
            f"{len(entries)} entries for a {rows}x{cols} matrix"
        )
    return as_matrix(np.array(entries).reshape(rows, cols))


def state_to_json(v: np.ndarray) -> dict:
    v = np.asarray(v, dtype=np.complex128)
    return {
        "n_qubits": num_qubits(v),
        "amplitudes": [complex_to_json(z) for z in v],
    }


def state_from_json(obj: dict) -> np.ndarray:
    n = int(obj["n_qubits"])
    v = as_state([complex(re, im) for re, im in obj["amplitudes"]])
    if v.size != 1 << n:
        raise DimensionMismatchError(
            f"{v.size} amplitudes for an {n}-qubit state"
        )
    return v
