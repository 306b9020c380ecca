"""n-qubit state construction and the structured braiding operator.

The braid b1 b2 in the Temperley-Lieb representation collapses to

    B(n,k) = I^(k-1) x D x I^(n-k)  +  s_1..s_{k-1} x F x s_{k+1}..s_n

with D = diag(d a^2, d b^2 + A^-2) and antidiagonal
F = [[0, -e^{-i phi} A^4 d a b], [e^{i phi} d a b, 0]].  Acting on a basis
state it therefore produces at most two terms, and acting on an arbitrary
state it needs one linear pass over the amplitudes instead of a 2^n x 2^n
matrix.  Monomial involutions (I and the Paulis) go through the gather
kernel in `_kernels`; anything that mixes basis states per qubit (e.g. the
Hadamard involution) falls back to a per-qubit 2x2 sweep, still without
materializing the operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import _kernels
from .errors import CapacityError, DimensionMismatchError, DomainError
from .linalg import apply_single_qubit, dagger, kron_all, max_abs, num_qubits
from .tla import (InvolutionSpec, RepShape, TLParams, default_involution_spec,
                  tl_params)

STRUCTURED_CAP_QUBITS = 26      # 2^26 amplitudes ~ 1 GiB
_MONOMIAL_TOL = 1e-14

Bits = Union[str, Sequence[int]]


def parse_bits(bits: Bits) -> tuple[int, ...]:
    """Normalize "0101"-style strings or 0/1 sequences to a bit tuple."""
    if isinstance(bits, str):
        bits = [int(c) for c in bits.strip()] if bits.strip() else []
    out = tuple(int(b) for b in bits)
    if len(out) < 1:
        raise DomainError("bit string must contain at least one bit")
    if any(b not in (0, 1) for b in out):
        raise DomainError(f"bits must be 0 or 1, got {out}")
    return out


def conjugate_bits(bits: Bits) -> tuple[int, ...]:
    """Flip every bit: |a_1...a_n> -> |abar_1...abar_n>."""
    return tuple(1 - b for b in parse_bits(bits))


def bits_to_index(bits: Bits) -> int:
    idx = 0
    for b in parse_bits(bits):
        idx = (idx << 1) | b
    return idx


def index_to_bits(index: int, n: int) -> tuple[int, ...]:
    return tuple((index >> (n - j)) & 1 for j in range(1, n + 1))


def basis_state(bits: Bits) -> np.ndarray:
    """Computational basis state; qubit 1 is the most significant bit."""
    bits = parse_bits(bits)
    n = len(bits)
    if n > STRUCTURED_CAP_QUBITS:
        raise CapacityError(f"{n} qubits exceeds the structured cap {STRUCTURED_CAP_QUBITS}")
    v = np.zeros(1 << n, dtype=np.complex128)
    v[bits_to_index(bits)] = 1.0
    return v


def _monomial_parts(m2: np.ndarray):
    """(flip, c0, c1) for a one-entry-per-column 2x2 matrix, else None.

    c0/c1 are the coefficients picked up by source bit 0/1.
    """
    off = max(abs(m2[0, 1]), abs(m2[1, 0]))
    diag = max(abs(m2[0, 0]), abs(m2[1, 1]))
    if off <= _MONOMIAL_TOL:
        return False, complex(m2[0, 0]), complex(m2[1, 1])
    if diag <= _MONOMIAL_TOL:
        return True, complex(m2[1, 0]), complex(m2[0, 1])
    return None


@dataclass(frozen=True)
class StructuredBraidOp:
    """B(n,k) in structured form: a diagonal 2x2 block at slot k plus an
    antidiagonal block dressed with involutions on the other slots."""

    shape: RepShape
    params: TLParams
    spec: InvolutionSpec
    diag_block: np.ndarray      # 2x2 diagonal
    offdiag_block: np.ndarray   # 2x2 antidiagonal

    def dense(self) -> np.ndarray:
        """Materialize the 2^n x 2^n matrix (dense cap applies)."""
        n, k = self.shape.n, self.shape.k
        eye = [np.eye(2, dtype=np.complex128)]
        left, right = self.spec.split(k)
        return (kron_all(*eye * (k - 1), self.diag_block, *eye * (n - k))
                + kron_all(*left, self.offdiag_block, *right))


def structured_braid_op(shape: RepShape, params: Optional[TLParams] = None,
                        spec: Optional[InvolutionSpec] = None,
                        validate_dense: Optional[bool] = None) -> StructuredBraidOp:
    """Build B(n,k) = b1 b2 in structured form.

    Defaults: theta = pi/8 parameters and the identity-below / sigma1-above
    involution convention.  The two amplitude-pair normalization identities
    are always checked; the construction is additionally cross-validated
    against the dense product of the Jones generators when n <= 8 (or when
    `validate_dense` forces it).
    """
    if params is None:
        params = tl_params(np.pi / 8)
    if spec is None:
        spec = default_involution_spec(shape)
    n = shape.n
    if n > STRUCTURED_CAP_QUBITS:
        raise CapacityError(
            f"n={n} exceeds the structured cap {STRUCTURED_CAP_QUBITS}"
        )
    if len(spec) != n - 1:
        raise DimensionMismatchError(
            f"need {n - 1} involutions for n={n}, got {len(spec)}"
        )
    A, d, a, b, phi = params.A, params.d, params.a, params.b, params.phi
    d0 = d * a * a
    d1 = d * b * b + A ** -2
    f10 = np.exp(1j * phi) * d * a * b
    f01 = -np.exp(-1j * phi) * A ** 4 * d * a * b
    if abs(abs(d0) ** 2 + abs(f10) ** 2 - 1.0) > 1e-14:
        raise DomainError("amplitude normalization |da^2|^2 + |dab|^2 = 1 violated")
    if abs(abs(d1) ** 2 + abs(f01) ** 2 - 1.0) > 1e-14:
        raise DomainError("amplitude normalization |db^2+A^-2|^2 + |A^4 dab|^2 = 1 violated")
    op = StructuredBraidOp(
        shape=shape, params=params, spec=spec,
        diag_block=np.array([[d0, 0], [0, d1]], dtype=np.complex128),
        offdiag_block=np.array([[0, f01], [f10, 0]], dtype=np.complex128),
    )
    if validate_dense is None:
        validate_dense = n <= 8
    if validate_dense:
        from .braidrep import jones_representation
        rep = jones_representation(params, shape, spec)
        residual = max_abs(op.dense() - rep.generators[0] @ rep.generators[1])
        if residual > 1e-12:
            raise DomainError(
                f"structured form deviates from dense b1 b2 by {residual:.3e}"
            )
    return op


def apply_structured(op: StructuredBraidOp, v: np.ndarray,
                     inverse: bool = False) -> np.ndarray:
    """Apply B(n,k) (or its adjoint) in one pass over the amplitudes."""
    n, k = op.shape.n, op.shape.k
    if num_qubits(v) != n:
        raise DimensionMismatchError(
            f"state has {num_qubits(v)} qubits, operator acts on {n}"
        )
    dblock = dagger(op.diag_block) if inverse else op.diag_block
    fblock = dagger(op.offdiag_block) if inverse else op.offdiag_block
    d0, d1 = complex(dblock[0, 0]), complex(dblock[1, 1])

    factors = list(op.spec.slots[:k - 1]) + [fblock] + list(op.spec.slots[k - 1:])
    parts = [_monomial_parts(m) for m in factors]
    if all(pt is not None for pt in parts):
        mask = 0
        pairs = []
        for j, (flip, c0, c1) in enumerate(parts, start=1):
            if flip:
                mask |= 1 << (n - j)
            pairs.append((c0, c1))
        phases = _kernels.phase_vector(pairs)
        kbit = 1 << (n - k)
        return _kernels.gather_pass(v, phases, mask, kbit, d0, d1)

    # some slot mixes basis states: per-qubit 2x2 sweep, still matrix-free
    term = v
    for j, m2 in enumerate(factors, start=1):
        term = apply_single_qubit(m2, term, j)
    out = v.copy()
    view = out.reshape(1 << (k - 1), 2, 1 << (n - k))
    view[:, 0, :] *= d0
    view[:, 1, :] *= d1
    out += term
    return out


def ghz_state(n: int, params: Optional[TLParams] = None,
              use_inverse: bool = False) -> np.ndarray:
    """Generalized GHZ state B(n,1)|0...0> (or B^-1(n,1)|0...0>).

    Uses the k=1, phi=0, sigma1-dressing convention; the returned state is
    the exact computed one, global phase included: the forward state is
    da^2|0..0> + dab|1..1> and the inverse one is -(|0..0> + i|1..1>)/sqrt2
    at theta=pi/8.
    """
    shape = RepShape(n=n, k=1)
    op = structured_braid_op(shape, params=params)
    return apply_structured(op, basis_state([0] * n), inverse=use_inverse)


def cluster_like_state(n: int, k: int,
                       params: Optional[TLParams] = None) -> np.ndarray:
    """B(n,k) B^-1(n,1) |0...0>: the four-term cluster-like superposition.

    Entangled for n >= 2 and k > 1 (k=1 collapses to the identity action);
    at n=4, k=3 this is the 4-qubit linear cluster state.
    """
    if n < 2:
        raise DomainError(f"cluster-like states need n >= 2, got n={n}")
    v = ghz_state(n, params=params, use_inverse=True)
    op = structured_braid_op(RepShape(n=n, k=k), params=params)
    return apply_structured(op, v)


def cluster_family(n: int, k: int,
                   params: Optional[TLParams] = None) -> list[np.ndarray]:
    """B(n,k) B^-1(n,1) applied to every basis state: 2^n orthonormal states.

    Dense-cap bound (n <= 12): the family as a whole is matrix-sized.
    """
    if n > 12:
        raise CapacityError(
            f"cluster family on {n} qubits stores 4^{n} amplitudes; capped at n=12"
        )
    if n < 2:
        raise DomainError(f"cluster-like states need n >= 2, got n={n}")
    op1 = structured_braid_op(RepShape(n=n, k=1), params=params)
    opk = structured_braid_op(RepShape(n=n, k=k), params=params)
    out = []
    for idx in range(1 << n):
        v = basis_state(index_to_bits(idx, n))
        v = apply_structured(op1, v, inverse=True)
        out.append(apply_structured(opk, v))
    return out
