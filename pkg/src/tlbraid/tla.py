"""Temperley-Lieb parameter bundle and the 2^n x 2^n projector realization.

The construction places three 2x2 blocks (e1, e2, e3) at tensor slot k out
of n and dresses the e3 term with Hermitian involutions s_j on the other
slots; the resulting pair (E1, E2) generates a matrix realization of the
three-strand Temperley-Lieb algebra with loop weight d = -2 cos(2 theta).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gates
from .errors import CapacityError, DimensionMismatchError, DomainError
from .linalg import DENSE_CAP_DIM, dagger, kron_all, max_abs
from .reports import RelationReport

_INVOLUTION_TOL = 1e-14


@dataclass(frozen=True)
class TLParams:
    """Scalar parameters: A = e^{i theta}, d = -2 cos(2 theta), a, b.

    a = a_sign / |d| and b = b_sign * sqrt(1 - 1/d^2), so a^2 + b^2 = 1 and
    a^2 = 1/d^2; hermiticity of the h_i requires d^2 >= 1 (enforced).
    """

    theta: float
    phi: float
    a_sign: int
    b_sign: int
    A: complex
    d: float
    a: float
    b: float


def tl_params(theta: float, phi: float = 0.0,
              a_sign: int = 1, b_sign: int = 1) -> TLParams:
    """Build TLParams, rejecting theta outside the hermiticity domain.

    Admissible theta satisfy d^2 = 4 cos^2(2 theta) >= 1, i.e.
    |theta mod pi| <= pi/6 (d <= -1) or |theta mod pi - pi/2| <= pi/6
    (d >= +1).
    """
    if a_sign not in (1, -1) or b_sign not in (1, -1):
        raise DomainError("a_sign and b_sign must be +1 or -1")
    theta = float(theta)
    phi = float(phi)
    if not np.isfinite(theta) or not np.isfinite(phi):
        raise DomainError("theta and phi must be finite")
    d = -2.0 * np.cos(2.0 * theta)
    if d * d < 1.0 - 1e-12:
        raise DomainError(
            f"theta={theta:.6g} gives d={d:.6g} with d^2 < 1; admissible "
            "ranges are |theta mod pi| <= pi/6 or |theta mod pi - pi/2| <= pi/6"
        )
    a = a_sign / abs(d)
    # snap the boundary: at |d| = 1 rounding noise in d would otherwise
    # inflate b = sqrt(1 - 1/d^2) from 0 to ~1e-8
    b_sq = 1.0 - 1.0 / (d * d)
    b = b_sign * np.sqrt(b_sq) if b_sq > 1e-14 else 0.0
    return TLParams(theta=theta, phi=phi, a_sign=a_sign, b_sign=b_sign,
                    A=np.exp(1j * theta), d=d, a=a, b=b)


@dataclass(frozen=True)
class RepShape:
    """Tensor placement: n qubits with the distinguished slot k (1-based)."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"need n >= 1, got n={self.n}")
        if not 1 <= self.k <= self.n:
            raise DomainError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")


_NAMED_INVOLUTIONS = {
    "i": gates.IDENTITY_2,
    "x": gates.PAULI_X,
    "y": gates.PAULI_Y,
    "z": gates.PAULI_Z,
    "h": gates.HADAMARD,
    "sigma1": gates.PAULI_X,
    "sigma2": gates.PAULI_Y,
    "sigma3": gates.PAULI_Z,
}


def involution_matrix(spec) -> np.ndarray:
    """Resolve an involution: a name among I, X, Y, Z, H or a 2x2 matrix.

    Custom matrices must be Hermitian and square to the identity within
    1e-14.
    """
    if isinstance(spec, str):
        try:
            return _NAMED_INVOLUTIONS[spec.strip().lower()].copy()
        except KeyError:
            raise DomainError(
                f"unknown involution name {spec!r}; use I, X, Y, Z, H "
                "or a 2x2 matrix"
            ) from None
    m = np.array(spec, dtype=np.complex128)
    if m.shape != (2, 2):
        raise DimensionMismatchError(f"involution must be 2x2, got {m.shape}")
    if max_abs(m - dagger(m)) > _INVOLUTION_TOL:
        raise DomainError("involution must be Hermitian")
    if max_abs(m @ m - np.eye(2)) > _INVOLUTION_TOL:
        raise DomainError("involution must square to the identity")
    return m


@dataclass(frozen=True)
class InvolutionSpec:
    """The n-1 involutions on slots j != k, in ascending j order."""

    slots: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.slots)

    def split(self, k: int) -> tuple[tuple[np.ndarray, ...], tuple[np.ndarray, ...]]:
        """Factors left of slot k (j < k) and right of it (j > k)."""
        return self.slots[:k - 1], self.slots[k - 1:]


def involution_spec(specs) -> InvolutionSpec:
    return InvolutionSpec(tuple(involution_matrix(s) for s in specs))


def default_involution_spec(shape: RepShape) -> InvolutionSpec:
    """Conjugating-subclass dressing: identity below slot k, sigma_1 above.

    This is the choice that makes B(n,k) superimpose a basis state on its
    bit-flipped partner, e.g. GHZ states for k=1.
    """
    names = ["i"] * (shape.k - 1) + ["x"] * (shape.n - shape.k)
    return involution_spec(names)


@lru_cache(maxsize=128)
def _blocks_cached(theta, phi, a_sign, b_sign):
    p = tl_params(theta, phi, a_sign, b_sign)
    e1 = np.diag([1.0, 0.0]).astype(np.complex128)
    e2 = np.diag([p.a**2, p.b**2]).astype(np.complex128)
    e3 = np.array([[0.0, np.exp(-1j * p.phi)],
                   [np.exp(1j * p.phi), 0.0]])
    return e1, e2, e3


def local_blocks(p: TLParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The 2x2 blocks e1 = diag(1,0), e2 = diag(a^2,b^2), e3 = phase flip."""
    e1, e2, e3 = _blocks_cached(p.theta, p.phi, p.a_sign, p.b_sign)
    return e1.copy(), e2.copy(), e3.copy()


def _check_capacity(n: int) -> None:
    if 1 << n > DENSE_CAP_DIM:
        raise CapacityError(
            f"dense 2^{n} x 2^{n} matrix exceeds cap {DENSE_CAP_DIM}; "
            "use the structured path in tlbraid.states"
        )


def tl_projectors(shape: RepShape, p: TLParams,
                  spec: InvolutionSpec) -> tuple[np.ndarray, np.ndarray]:
    """The Hermitian projector pair (E1, E2) on n qubits.

    E1 places e1 at slot k between identities; E2 adds the ab-weighted
    involution-dressed e3 term.  h_i = d*E_i generate the Temperley-Lieb
    relations checked by `check_tl_relations`.
    """
    n, k = shape.n, shape.k
    _check_capacity(n)
    if len(spec) != n - 1:
        raise DimensionMismatchError(
            f"need {n - 1} involutions for n={n}, got {len(spec)}"
        )
    e1, e2, e3 = local_blocks(p)
    eye = [np.eye(2, dtype=np.complex128)]
    left, right = spec.split(k)
    E1 = kron_all(*eye * (k - 1), e1, *eye * (n - k))
    E2 = kron_all(*eye * (k - 1), e2, *eye * (n - k)) \
        + p.a * p.b * kron_all(*left, e3, *right)
    return E1, E2


def check_tl_relations(E1: np.ndarray, E2: np.ndarray, p: TLParams,
                       tol: float = 1e-10) -> RelationReport:
    """Residuals of the projector and Temperley-Lieb relations.

    Covers E_i^2 = E_i, E1 E2 E1 = a^2 E1, E2 E1 E2 = a^2 E2, and for
    h_i = d E_i: h_i^2 = d h_i, h1 h2 h1 = h1, h2 h1 h2 = h2, plus
    hermiticity of both h_i.
    """
    if E1.shape != E2.shape or E1.ndim != 2 or E1.shape[0] != E1.shape[1]:
        raise DimensionMismatchError(
            f"projector shapes {E1.shape} and {E2.shape} must be equal square"
        )
    a2 = p.a * p.a
    d = p.d
    h1, h2 = d * E1, d * E2
    named = [
        ("E1_idempotent", max_abs(E1 @ E1 - E1)),
        ("E2_idempotent", max_abs(E2 @ E2 - E2)),
        ("E1E2E1_eq_a2E1", max_abs(E1 @ E2 @ E1 - a2 * E1)),
        ("E2E1E2_eq_a2E2", max_abs(E2 @ E1 @ E2 - a2 * E2)),
        ("h1_sq_eq_dh1", max_abs(h1 @ h1 - d * h1)),
        ("h2_sq_eq_dh2", max_abs(h2 @ h2 - d * h2)),
        ("h1h2h1_eq_h1", max_abs(h1 @ h2 @ h1 - h1)),
        ("h2h1h2_eq_h2", max_abs(h2 @ h1 @ h2 - h2)),
        ("h1_hermitian", max_abs(h1 - dagger(h1))),
        ("h2_hermitian", max_abs(h2 - dagger(h2))),
    ]
    return RelationReport.from_residuals(named, tol)
