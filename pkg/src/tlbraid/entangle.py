"""Entanglement diagnostics: reduced density matrices, von Neumann entropy,
Schmidt rank, and projective single-qubit measurement.

Qubit labels are 1-based (qubit 1 = most significant index bit), matching
the rest of the package.  Bipartitions are given as the subset of qubit
labels to keep.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, DomainError
from .linalg import apply_single_qubit, dagger, max_abs, num_qubits, phase_equivalent

_EIG_CUTOFF = 1e-12


def density_matrix(v: np.ndarray) -> np.ndarray:
    """|v><v| for a normalized pure state."""
    v = np.asarray(v, dtype=np.complex128)
    nrm = np.linalg.norm(v)
    if abs(nrm - 1.0) > 1e-10:
        raise DomainError(f"state norm {nrm:.6g} is not 1")
    return np.outer(v, v.conj())


def _validate_subset(subset, n: int, proper: bool = True) -> tuple[int, ...]:
    keep = tuple(sorted(set(int(q) for q in subset)))
    if not keep:
        raise DomainError("qubit subset must be non-empty")
    if any(q < 1 or q > n for q in keep):
        raise DomainError(f"subset {keep} out of range for {n} qubits")
    if proper and len(keep) >= n:
        raise DomainError(f"subset {keep} must be a proper subset of 1..{n}")
    return keep


def partial_trace(rho: np.ndarray, keep) -> np.ndarray:
    """Reduced density matrix over the kept qubits (trace preserved)."""
    dim = rho.shape[0]
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionMismatchError(f"density matrix must be square, got {rho.shape}")
    n = dim.bit_length() - 1
    if dim != 1 << n:
        raise DimensionMismatchError(f"dimension {dim} is not a power of two")
    keep = _validate_subset(keep, n)
    labels = list(range(1, n + 1))
    t = rho.reshape([2] * (2 * n))
    for q in [q for q in labels if q not in keep]:
        m = len(labels)
        p = labels.index(q)
        t = np.trace(t, axis1=p, axis2=m + p)
        labels.remove(q)
    d = 1 << len(keep)
    return t.reshape(d, d)


def reduced_density(v: np.ndarray, subset) -> np.ndarray:
    """Reduced density matrix of a pure state without forming |v><v|."""
    n = num_qubits(v)
    keep = _validate_subset(subset, n)
    rest = [q for q in range(1, n + 1) if q not in keep]
    axes = [q - 1 for q in keep] + [q - 1 for q in rest]
    m = v.reshape([2] * n).transpose(axes).reshape(1 << len(keep), -1)
    return m @ m.conj().T


def vn_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy in bits, -sum lambda log2 lambda.

    Eigenvalues below 1e-12 are treated as exact zeros.
    """
    if max_abs(rho - dagger(rho)) > 1e-10:
        raise DomainError("density matrix must be Hermitian")
    lam = np.linalg.eigvalsh(rho)
    lam = lam[lam > _EIG_CUTOFF]
    return float(-np.sum(lam * np.log2(lam))) + 0.0


def measure_qubit(v: np.ndarray, qubit: int, outcome: int) -> tuple[float, np.ndarray]:
    """Born-rule probability and renormalized post-state on n-1 qubits."""
    n = num_qubits(v)
    if not 1 <= qubit <= n:
        raise DomainError(f"qubit {qubit} out of range 1..{n}")
    if outcome not in (0, 1):
        raise DomainError(f"outcome must be 0 or 1, got {outcome}")
    picked = v.reshape(1 << (qubit - 1), 2, 1 << (n - qubit))[:, outcome, :].reshape(-1)
    prob = float(np.vdot(picked, picked).real)
    if prob <= 1e-12:
        raise DomainError(
            f"outcome {outcome} on qubit {qubit} has probability {prob:.3e}"
        )
    return prob, picked / np.sqrt(prob)


def schmidt_rank(v: np.ndarray, bipartition, tol: float = 1e-9) -> int:
    """Number of Schmidt coefficients above tol for the given cut.

    Computed from the Gram matrix of the bipartition-reshaped amplitudes;
    the test suite cross-checks against a direct SVD.
    """
    gram = reduced_density(v, bipartition)
    lam = np.linalg.eigvalsh(gram)
    sv = np.sqrt(np.clip(lam, 0.0, None))
    return int(np.count_nonzero(sv > tol))


def lu_equivalent(u: np.ndarray, v: np.ndarray, locals_, tol: float = 1e-10) -> bool:
    """True iff (local_1 x ... x local_n) v = u up to a global phase."""
    n = num_qubits(v)
    if num_qubits(u) != n:
        raise DimensionMismatchError("states have different qubit counts")
    if len(locals_) != n:
        raise DimensionMismatchError(f"need {n} local unitaries, got {len(locals_)}")
    w = v
    for pos, m2 in enumerate(locals_, start=1):
        w = apply_single_qubit(np.asarray(m2, dtype=np.complex128), w, pos)
    return phase_equivalent(u, w, mode="global", tol=tol)


@dataclass(frozen=True)
class EntanglementReport:
    bipartition: tuple[int, ...]
    entropy_bits: float
    schmidt_rank: int
    is_product: bool

    def to_json(self) -> dict:
        return {
            "bipartition": list(self.bipartition),
            "entropy_bits": self.entropy_bits,
            "schmidt_rank": self.schmidt_rank,
            "is_product": self.is_product,
        }


def entanglement_report(v: np.ndarray, bipartition,
                        tol: float = 1e-9) -> EntanglementReport:
    """Entropy / Schmidt-rank report for one cut of a pure state."""
    n = num_qubits(v)
    keep = _validate_subset(bipartition, n)
    rho = reduced_density(v, keep)
    rank = schmidt_rank(v, keep, tol=tol)
    return EntanglementReport(
        bipartition=keep,
        entropy_bits=vn_entropy(rho),
        schmidt_rank=rank,
        is_product=rank == 1,
    )
