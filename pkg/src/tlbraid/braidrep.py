"""Unitary braid-group representations and their defining-relation checks.

Two families:

  * "jones": three-strand generators b_i = A h_i + A^{-1} I built from the
    Temperley-Lieb pair h_i = d E_i of `tla` (two generators, 2^n x 2^n),
  * "bell": the m-strand tensor representation b_i = I x..x R x..x I with
    the 4x4 Bell matrix R in slots (i, i+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import CapacityError, DimensionMismatchError, DomainError
from .linalg import dagger, kron_all, max_abs
from .reports import RelationReport
from .tla import InvolutionSpec, RepShape, TLParams, tl_projectors

_BELL = (1.0 / np.sqrt(2.0)) * np.array(
    [[1, 0, 0, -1],
     [0, 1, -1, 0],
     [0, 1, 1, 0],
     [1, 0, 0, 1]], dtype=np.complex128)


def bell_matrix() -> np.ndarray:
    """The 4x4 unitary Yang-Baxter solution taking |ab> to Bell states."""
    return _BELL.copy()


@dataclass(frozen=True)
class BraidRepresentation:
    family: str                 # "jones" | "bell"
    strands: int
    generators: tuple[np.ndarray, ...]
    inverses: tuple[np.ndarray, ...]
    params: Optional[TLParams] = None
    shape: Optional[RepShape] = None
    spec: Optional[InvolutionSpec] = None

    def __post_init__(self):
        dim = self.generators[0].shape[0]
        eye = np.eye(dim)
        for i, (g, gi) in enumerate(zip(self.generators, self.inverses), start=1):
            if max_abs(dagger(g) @ g - eye) > 1e-12:
                raise DomainError(f"generator b{i} is not unitary")
            if max_abs(g @ gi - eye) > 1e-12:
                raise DomainError(f"b{i} * b{i}^-1 deviates from identity")

    @property
    def dim(self) -> int:
        return self.generators[0].shape[0]

    def to_json(self) -> dict:
        from .linalg import matrix_to_json
        return {
            "family": self.family,
            "strands": self.strands,
            "generators": [matrix_to_json(g) for g in self.generators],
            "inverses": [matrix_to_json(g) for g in self.inverses],
        }


def jones_representation(p: TLParams, shape: RepShape,
                         spec: InvolutionSpec) -> BraidRepresentation:
    """Three-strand representation b_i = A h_i + A^{-1} I, h_i = d E_i.

    The inverse is b_i^{-1} = A^{-1} h_i + A I; both are exact consequences
    of h_i^2 = d h_i.
    """
    E1, E2 = tl_projectors(shape, p, spec)
    eye = np.eye(E1.shape[0], dtype=np.complex128)
    A = p.A
    gens, invs = [], []
    for E in (E1, E2):
        h = p.d * E
        gens.append(A * h + eye / A)
        invs.append(h / A + A * eye)
    return BraidRepresentation(
        family="jones", strands=3,
        generators=tuple(gens), inverses=tuple(invs),
        params=p, shape=shape, spec=spec,
    )


def bell_representation(m: int) -> BraidRepresentation:
    """m-strand tensor representation with the Bell matrix in slot (i, i+1)."""
    if m < 2:
        raise DomainError(f"need at least 2 strands, got {m}")
    if m > 12:
        raise CapacityError(f"bell representation on {m} qubits exceeds the dense cap")
    eye = np.eye(2, dtype=np.complex128)
    gens = tuple(
        kron_all(*[eye] * (i - 1), _BELL, *[eye] * (m - i - 1))
        for i in range(1, m)
    )
    invs = tuple(dagger(g) for g in gens)
    return BraidRepresentation(family="bell", strands=m,
                               generators=gens, inverses=invs)


def check_braid_relations(rep: BraidRepresentation,
                          tol: float = 1e-10) -> RelationReport:
    """Residuals of all far-commutation and adjacent braid relations."""
    gens = rep.generators
    named = []
    for i in range(len(gens) - 1):
        bi, bj = gens[i], gens[i + 1]
        named.append((
            f"braid_b{i + 1}b{i + 2}b{i + 1}",
            max_abs(bi @ bj @ bi - bj @ bi @ bj),
        ))
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            named.append((
                f"commute_b{i + 1}b{j + 1}",
                max_abs(gens[i] @ gens[j] - gens[j] @ gens[i]),
            ))
    for i, g in enumerate(gens, start=1):
        named.append((
            f"unitary_b{i}",
            max_abs(dagger(g) @ g - np.eye(rep.dim)),
        ))
    return RelationReport.from_residuals(named, tol)


def check_yang_baxter(r: np.ndarray, tol: float = 1e-14) -> RelationReport:
    """Residual of (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R)."""
    if r.shape != (4, 4):
        raise DimensionMismatchError(f"Yang-Baxter check needs a 4x4 matrix, got {r.shape}")
    eye = np.eye(2, dtype=np.complex128)
    ri = np.kron(r, eye)
    ir = np.kron(eye, r)
    residual = max_abs(ri @ ir @ ri - ir @ ri @ ir)
    return RelationReport.from_residuals([("yang_baxter", residual)], tol)


def _root_of_unity_order(A: complex, max_order: int = 1024,
                         tol: float = 1e-9) -> Optional[int]:
    z = 1.0 + 0.0j
    for m in range(1, max_order + 1):
        z *= A
        if abs(z - 1.0) <= tol:
            return m
    return None


def generator_power_identity(rep: BraidRepresentation,
                             p: Optional[TLParams] = None,
                             tol: float = 1e-10) -> RelationReport:
    """Non-faithfulness power identities.

    jones family: with m the least order with A^m = 1, checks
    b_i^m = ((-1)^m - 1)/d * h_i + I, plus b_i^m = I for even m
    (b_i^{2m} = I for odd m).  Not applicable when A is not a root of
    unity within the bounded search.  bell family: R^8 = I and b_i^8 = I.
    """
    if rep.family == "bell":
        named = [("R8_eq_I", max_abs(np.linalg.matrix_power(_BELL, 8) - np.eye(4)))]
        eye = np.eye(rep.dim)
        for i, g in enumerate(rep.generators, start=1):
            named.append((f"b{i}^8_eq_I", max_abs(np.linalg.matrix_power(g, 8) - eye)))
        return RelationReport.from_residuals(named, tol)

    if p is None:
        p = rep.params
    m = _root_of_unity_order(p.A)
    if m is None:
        return RelationReport(
            checks=(), tol=tol, applicable=False,
            note="A is not a root of unity within order 1024; "
                 "power identity not applicable",
        )
    eye = np.eye(rep.dim)
    coeff = ((-1) ** m - 1) / p.d
    named = [(f"A_root_order_{m}", abs(p.A ** m - 1.0))]
    for i, g in enumerate(rep.generators, start=1):
        h = (g - eye / p.A) / p.A          # recover h_i = (b_i - A^{-1} I)/A
        gm = np.linalg.matrix_power(g, m)
        named.append((f"b{i}^{m}_eq_closed_form", max_abs(gm - (coeff * h + eye))))
        if m % 2 == 0:
            named.append((f"b{i}^{m}_eq_I", max_abs(gm - eye)))
        else:
            named.append((
                f"b{i}^{2 * m}_eq_I",
                max_abs(np.linalg.matrix_power(g, 2 * m) - eye),
            ))
    return RelationReport.from_residuals(
        named, tol, note=f"least m with A^m=1: {m}"
    )
