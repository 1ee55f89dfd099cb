"""Entanglement and positivity tests for two-qubit states.

Three detectors, each returning an :class:`EntanglementVerdict`:

* ``ppt``: sign of ``det ρ^Γ``; margin = det ρ^Γ (entangled when negative).
* ``makhlin``: polynomial inequality in (a, b, C); margin = RHS - LHS.
* ``bargmann``: inequality in seven Bargmann invariants; margin = 1 - LHS.

A margin within ``BOUNDARY_BAND`` of zero is flagged as boundary and
reported separable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .invariants import BargmannVector, bargmann_direct, char_coeffs_pt, makhlin_L
from .linalg3 import cofactor_matrix, frob
from .states import (
    PSD_TOL,
    StateParams,
    in_bell_tetrahedron,
    partial_transpose,
    state_from_params,
    validate_state,
    werner,
)

__all__ = [
    "BOUNDARY_BAND",
    "EntanglementVerdict",
    "PositivityReport",
    "is_entangled_ppt",
    "is_entangled_makhlin",
    "is_entangled_bargmann",
    "makhlin_sides",
    "bargmann_lhs",
    "det_pt",
    "det_pt_from_coeffs",
    "positivity_check",
    "eigen_positivity",
    "werner_threshold",
    "bisect_werner",
    "bell_diagonal_entangled",
]

BOUNDARY_BAND = 1e-9


@dataclass(frozen=True)
class EntanglementVerdict:
    entangled: bool
    margin: float
    method: str
    boundary: bool = False

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "entangled": self.entangled,
            "boundary": self.boundary,
            "margin": self.margin,
        }


def _verdict(method: str, margin: float, entangled_if_positive: bool, band: float):
    margin = float(margin)
    if abs(margin) <= band:
        return EntanglementVerdict(False, margin, method, boundary=True)
    ent = margin > 0 if entangled_if_positive else margin < 0
    return EntanglementVerdict(bool(ent), margin, method)


def det_pt(rho) -> float:
    return float(np.linalg.det(partial_transpose(rho)).real)


def is_entangled_ppt(
    rho, band: float = BOUNDARY_BAND, validate: bool = True
) -> EntanglementVerdict:
    if validate:
        rho = validate_state(rho)
    return _verdict("ppt", det_pt(rho), False, band)


def makhlin_sides(p: StateParams) -> tuple[float, float]:
    a, b, C = p.a, p.b, p.C
    na, nb, nC = a @ a, b @ b, frob(C, C)
    CtC = C.T @ C
    lhs = (
        1
        + (na - nb) ** 2
        + 2 * (na + nb) * nC
        + 2 * frob(CtC, CtC)
        + 8 * (a @ C @ b + np.linalg.det(C))
    )
    rhs = (
        nC**2
        + 2 * (na + nb + nC)
        + 4 * (a @ C @ C.T @ a + b @ CtC @ b)
        + 8 * a @ cofactor_matrix(C) @ b
    )
    return float(lhs), float(rhs)


def is_entangled_makhlin(p: StateParams, band: float = BOUNDARY_BAND) -> EntanglementVerdict:
    lhs, rhs = makhlin_sides(p)
    return _verdict("makhlin", rhs - lhs, True, band)


def bargmann_lhs(B: BargmannVector) -> float:
    b = np.real(B.values)
    B1, B2, B3, B4, B5, B6, B10 = b[0], b[1], b[2], b[3], b[4], b[5], b[9]
    return float(6 * (B1 + B2 - B1 * B2 - B4 - B10) + 12 * (B5 - B3) + 3 * B4**2 + 4 * B6)


def is_entangled_bargmann(B: BargmannVector, band: float = BOUNDARY_BAND) -> EntanglementVerdict:
    """Uses only B1, B2, B3, B4, B5, B6 and B10."""
    return _verdict("bargmann", 1.0 - bargmann_lhs(B), True, band)


@dataclass(frozen=True)
class PositivityReport:
    psd: bool
    violated: tuple[str, ...] = field(default_factory=tuple)
    bargmann_psd: bool = True
    eigen_psd: bool = True

    @property
    def consistent(self) -> bool:
        return self.psd == self.bargmann_psd == self.eigen_psd


def _power_traces(rho, k: int = 4) -> np.ndarray:
    out, P = [], np.eye(rho.shape[0])
    for _ in range(k):
        P = P @ rho
        out.append(np.trace(P).real)
    return np.array(out)


def eigen_positivity(rho, tol: float = PSD_TOL) -> bool:
    return bool(np.linalg.eigvalsh(np.asarray(rho)).min() >= -tol)


def positivity_check(p: StateParams, tol: float = 1e-9) -> PositivityReport:
    """Positivity of the operator with Bloch data ``p`` by three routes.

    ``psd`` and ``violated`` come from the five invariant inequalities; the
    report also carries the power-trace form and the eigenvalue verdict.
    """
    L = makhlin_L(p)
    s = L[2] + L[4] + L[7]
    checks = {
        "0<=L4<=1": min(L[4], 1 - L[4]),
        "0<=L7<=1": min(L[7], 1 - L[7]),
        "0<=L2+L4+L7<=3": min(s, 3 - s),
        "L2+L4+L7<=1+2(L12-L1)": 1 + 2 * (L[12] - L[1]) - s,
        "quartic": (s - 1) ** 2
        - 4 * (L[3] + L[4] * L[7] + L[5] + L[8])
        + 8 * (L[12] + L[14] - L[1]),
    }
    violated = tuple(k for k, v in checks.items() if v < -tol)

    rho = state_from_params(p)
    p1, p2, p3, p4 = _power_traces(rho)
    bargmann_ok = (
        1 - p2 >= -tol
        and 1 + 2 * p3 - 3 * p2 >= -tol
        and 1 + 3 * p2**2 + 8 * p3 - 6 * p4 - 6 * p2 >= -tol
    )
    return PositivityReport(
        psd=not violated,
        violated=violated,
        bargmann_psd=bool(bargmann_ok),
        eigen_psd=eigen_positivity(rho),
    )


def werner_threshold() -> float:
    return 1.0 / 3.0


def bisect_werner(
    detector: Callable[[np.ndarray], float] | None = None,
    lo: float = 0.0,
    hi: float = 1.0,
    xtol: float = 1e-12,
) -> float:
    """Locate the sign change of a margin function along the Werner line.

    The default margin is the Bargmann one computed from direct traces.
    """
    if detector is None:

        def detector(rho):
            return 1.0 - bargmann_lhs(bargmann_direct(rho))

    flo, fhi = detector(werner(lo)), detector(werner(hi))
    if np.sign(flo) == np.sign(fhi):
        raise ValueError("no sign change on the bracket")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fm = detector(werner(mid))
        if np.sign(fm) == np.sign(flo):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bell_diagonal_entangled(t1: float, t2: float, t3: float) -> bool:
    if not in_bell_tetrahedron(t1, t2, t3, tol=1e-12):
        raise ValueError("(t1, t2, t3) lies outside the Bell-diagonal tetrahedron")
    return abs(t1) + abs(t2) + abs(t3) > 1


def det_pt_from_coeffs(p: StateParams) -> float:
    c = char_coeffs_pt(p)
    return (c.p - c.q + c.r + 1) / 256
