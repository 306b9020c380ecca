"""Grid verification suites over theta, phi, placement, and involutions.

The standard grid is the one the package is validated against:
theta in {pi/8, -pi/8, pi/6, pi+pi/8, pi-pi/8}, phi in {0, pi/3},
n in 1..5 with every slot k and every per-slot involution assignment drawn
from {I, X, Y, Z, H}.  Suites fold per-point residuals into one aggregated
RelationReport (max residual per relation, worst point recorded).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .braidrep import (bell_matrix, bell_representation, check_yang_baxter,
                       generator_power_identity, jones_representation)
from .gates import verify_cnot_decomposition, verify_psi_ghz_relation
from .linalg import dagger, max_abs
from .reports import RelationReport, ReportAccumulator
from .tla import (RepShape, check_tl_relations, default_involution_spec,
                  involution_spec, tl_params, tl_projectors)

GRID_THETAS: tuple[float, ...] = (
    np.pi / 8, -np.pi / 8, np.pi / 6, np.pi + np.pi / 8, np.pi - np.pi / 8,
)
GRID_PHIS: tuple[float, ...] = (0.0, np.pi / 3)
GRID_INVOLUTIONS: tuple[str, ...] = ("i", "x", "y", "z", "h")
GRID_NS: tuple[int, ...] = (1, 2, 3, 4, 5)


def iter_grid(thetas: Optional[Sequence[float]] = None,
              phis: Optional[Sequence[float]] = None,
              ns: Optional[Sequence[int]] = None,
              ks: Optional[Sequence[int]] = None,
              involutions: Optional[Sequence[str]] = None,
              ) -> Iterator[tuple[float, float, RepShape, tuple[str, ...]]]:
    """Yield (theta, phi, shape, involution names) over the product grid."""
    thetas = GRID_THETAS if thetas is None else tuple(thetas)
    phis = GRID_PHIS if phis is None else tuple(phis)
    ns = GRID_NS if ns is None else tuple(ns)
    involutions = GRID_INVOLUTIONS if involutions is None else tuple(involutions)
    for n in ns:
        k_range = range(1, n + 1) if ks is None else [k for k in ks if k <= n]
        for k in k_range:
            for names in itertools.product(involutions, repeat=n - 1):
                for theta in thetas:
                    for phi in phis:
                        yield theta, phi, RepShape(n=n, k=k), names


def _point_label(theta, phi, shape, names) -> str:
    s = ",".join(names) if names else "-"
    return f"theta={theta:.6g} phi={phi:.6g} n={shape.n} k={shape.k} s={s}"


def _iter_assembled(thetas=None, phis=None, ns=None, ks=None,
                    involutions=None, crosscheck_every: int = 997):
    """Grid points with (E1, E2) assembled with the theta-independent kron
    work (E1 and the involution-dressed e3 chain) hoisted out of the theta
    loop.  Every `crosscheck_every`-th point is verified against the
    reference `tl_projectors` assembly.
    """
    thetas = GRID_THETAS if thetas is None else tuple(thetas)
    phis = GRID_PHIS if phis is None else tuple(phis)
    ns = GRID_NS if ns is None else tuple(ns)
    involutions = GRID_INVOLUTIONS if involutions is None else tuple(involutions)
    from .linalg import kron_all
    from .tla import involution_matrix
    inv_table = {name: involution_matrix(name) for name in involutions}
    params_cache = {
        (theta, phi): tl_params(theta, phi)
        for theta in thetas for phi in phis
    }
    count = 0
    for n in ns:
        dim = 1 << n
        k_range = range(1, n + 1) if ks is None else [k for k in ks if k <= n]
        for k in k_range:
            shape = RepShape(n=n, k=k)
            kth_bit = (np.arange(dim) >> (n - k)) & 1
            E1 = np.diag((1 - kth_bit).astype(np.complex128))
            for names in itertools.product(involutions, repeat=n - 1):
                slots = [inv_table[nm] for nm in names]
                left, right = slots[:k - 1], slots[k - 1:]
                for phi in phis:
                    e3 = np.array([[0.0, np.exp(-1j * phi)],
                                   [np.exp(1j * phi), 0.0]])
                    chain = kron_all(*left, e3, *right)
                    for theta in thetas:
                        p = params_cache[(theta, phi)]
                        diag2 = np.where(kth_bit, p.b ** 2, p.a ** 2)
                        E2 = np.diag(diag2.astype(np.complex128)) \
                            + (p.a * p.b) * chain
                        count += 1
                        if count % crosscheck_every == 0:
                            ref1, ref2 = tl_projectors(
                                shape, p, involution_spec(names))
                            assert max_abs(E1 - ref1) == 0.0
                            assert max_abs(E2 - ref2) < 1e-15
                        yield p, shape, names, E1, E2


def run_tla_suite(tol: float = 1e-10, **grid_kwargs) -> RelationReport:
    """Temperley-Lieb relations (projector and h-form) across the grid."""
    acc = ReportAccumulator(tol)
    for p, shape, names, E1, E2 in _iter_assembled(**grid_kwargs):
        point = _point_label(p.theta, p.phi, shape, names)
        for check in check_tl_relations(E1, E2, p, tol).checks:
            acc.add(check.name, check.residual, point)
        acc.add_point()
    return acc.report(note=f"{acc.points} grid points")


def run_braid_suite(tol: float = 1e-10, **grid_kwargs) -> RelationReport:
    """Braid relation, unitarity, and inverse checks across the grid."""
    acc = ReportAccumulator(tol)
    for p, shape, names, E1, E2 in _iter_assembled(**grid_kwargs):
        point = _point_label(p.theta, p.phi, shape, names)
        eye = np.eye(E1.shape[0], dtype=np.complex128)
        A = p.A
        h1, h2 = p.d * E1, p.d * E2
        b1, b2 = A * h1 + eye / A, A * h2 + eye / A
        acc.add("braid_b1b2b1", max_abs(b1 @ b2 @ b1 - b2 @ b1 @ b2), point)
        acc.add("unitary_b1", max_abs(dagger(b1) @ b1 - eye), point)
        acc.add("unitary_b2", max_abs(dagger(b2) @ b2 - eye), point)
        acc.add("inverse_b1", max_abs(b1 @ (h1 / A + A * eye) - eye), point)
        acc.add("inverse_b2", max_abs(b2 @ (h2 / A + A * eye) - eye), point)
        acc.add_point()
    return acc.report(note=f"{acc.points} grid points")


def run_ybe_suite(tol: float = 1e-14) -> RelationReport:
    """Yang-Baxter equation and unitarity for the Bell matrix."""
    r = bell_matrix()
    checks = list(check_yang_baxter(r, tol).checks)
    unitary = max_abs(dagger(r) @ r - np.eye(4))
    report = RelationReport.from_residuals([("bell_matrix_unitary", unitary)], tol)
    return RelationReport(checks=tuple(checks) + report.checks, tol=tol)


def run_powers_suite(theta: float = np.pi / 8, phi: float = 0.0,
                     tol: float = 1e-10) -> RelationReport:
    """Non-faithfulness power identities for both families."""
    p = tl_params(theta, phi)
    shape = RepShape(n=2, k=1)
    jones = jones_representation(p, shape, default_involution_spec(shape))
    jrep = generator_power_identity(jones)
    brep = generator_power_identity(bell_representation(3))
    return RelationReport(
        checks=jrep.checks + brep.checks, tol=tol,
        applicable=jrep.applicable, note=jrep.note,
    )


def run_cnot_suite(theta: float = np.pi / 8) -> RelationReport:
    """Gate-level identities: CNOT decomposition and psi = H^3 |GHZ3>."""
    dec = verify_cnot_decomposition(tl_params(theta), tol=1e-12)
    psi = verify_psi_ghz_relation(tol=1e-13)
    return RelationReport(checks=dec.checks + psi.checks, tol=1e-12,
                          note="psi-ghz relation checked at 1e-13")


SUITES = ("tla", "braid", "ybe", "powers", "cnot")


def run_suite(name: str, tol: Optional[float] = None,
              **grid_kwargs) -> dict[str, RelationReport]:
    """Run one named suite (or "all"); returns {suite_name: report}."""
    names: Iterable[str] = SUITES if name == "all" else (name,)
    out = {}
    for suite in names:
        if suite == "tla":
            out[suite] = run_tla_suite(tol=tol or 1e-10, **grid_kwargs)
        elif suite == "braid":
            out[suite] = run_braid_suite(tol=tol or 1e-10, **grid_kwargs)
        elif suite == "ybe":
            out[suite] = run_ybe_suite(tol=tol or 1e-14)
        elif suite == "powers":
            thetas = grid_kwargs.get("thetas") or (np.pi / 8,)
            phis = grid_kwargs.get("phis") or (0.0,)
            out[suite] = run_powers_suite(theta=thetas[0], phi=phis[0],
                                          tol=tol or 1e-10)
        elif suite == "cnot":
            thetas = grid_kwargs.get("thetas") or (np.pi / 8,)
            out[suite] = run_cnot_suite(theta=thetas[0])
        else:
            raise ValueError(f"unknown suite {name!r}; choose from "
                             f"{', '.join(SUITES)} or all")
    return out
