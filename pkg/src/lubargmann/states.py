"""Two-qubit states: Bloch parameters, standard families, samplers.

Real Bloch data (a, b, C) encodes ``ρ = (I + a·σ⊗I + I⊗b·σ + Σ C_ij σ_i⊗σ_j) / 4``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bloch import BlochForm, decompose, reconstruct

__all__ = [
    "StateParams",
    "LocalUnitary",
    "PSD_TOL",
    "state_from_params",
    "params_from_state",
    "is_psd",
    "validate_state",
    "werner",
    "bell_diagonal",
    "in_bell_tetrahedron",
    "partial_trace",
    "partial_transpose",
    "random_density",
    "random_unitary",
    "random_local_unitary",
    "apply_lu",
    "PSI_MINUS",
]

PSD_TOL = 1e-9
HERM_TOL = 1e-10

PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


@dataclass(frozen=True)
class StateParams:
    a: np.ndarray
    b: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        for name, shape in (("a", (3,)), ("b", (3,)), ("C", (3, 3))):
            arr = np.array(getattr(self, name), dtype=float)
            if arr.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def zero(cls) -> "StateParams":
        return cls(np.zeros(3), np.zeros(3), np.zeros((3, 3)))


@dataclass(frozen=True)
class LocalUnitary:
    UA: np.ndarray
    UB: np.ndarray

    def matrix(self) -> np.ndarray:
        return np.kron(self.UA, self.UB)


def state_from_params(p: StateParams) -> np.ndarray:
    """Hermitian, unit-trace matrix. Positivity is not enforced; see :func:`is_psd`."""
    return reconstruct(BlochForm(1.0, p.a, p.b, p.C)) / 4


def params_from_state(rho) -> StateParams:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > HERM_TOL:
        raise ValueError("matrix is not Hermitian")
    bf = decompose(4 * rho)
    return StateParams(bf.r.real, bf.s.real, bf.T.real)


def is_psd(rho, tol: float = PSD_TOL) -> bool:
    return bool(np.linalg.eigvalsh(np.asarray(rho)).min() >= -tol)


def validate_state(rho, tol: float = PSD_TOL) -> np.ndarray:
    """Return ``rho`` as a complex array or raise ``ValueError``."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > HERM_TOL:
        raise ValueError("matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > HERM_TOL:
        raise ValueError("trace is not 1")
    if not is_psd(rho, tol):
        raise ValueError("matrix is not positive semidefinite")
    return rho


def werner(w: float) -> np.ndarray:
    if not 0.0 <= w <= 1.0:
        raise ValueError("w must lie in [0, 1]")
    return w * np.outer(PSI_MINUS, PSI_MINUS.conj()) + (1 - w) * np.eye(4) / 4


def in_bell_tetrahedron(t1: float, t2: float, t3: float, tol: float = 0.0) -> bool:
    return min(
        1 - t1 - t2 - t3,
        1 - t1 + t2 + t3,
        1 + t1 - t2 + t3,
        1 + t1 + t2 - t3,
    ) >= -tol


def bell_diagonal(t1: float, t2: float, t3: float) -> np.ndarray:
    if not in_bell_tetrahedron(t1, t2, t3, tol=1e-12):
        raise ValueError("(t1, t2, t3) lies outside the Bell-diagonal tetrahedron")
    return state_from_params(StateParams(np.zeros(3), np.zeros(3), np.diag([t1, t2, t3])))


def partial_trace(rho, subsystem: str = "B") -> np.ndarray:
    """Reduced state. ``subsystem`` names the qubit that is *kept*."""
    r = np.asarray(rho).reshape(2, 2, 2, 2)
    if subsystem == "A":
        return np.einsum("ijkj->ik", r)
    if subsystem == "B":
        return np.einsum("ijik->jk", r)
    raise ValueError("subsystem must be 'A' or 'B'")


def partial_transpose(rho) -> np.ndarray:
    """Transpose on the first qubit."""
    r = np.asarray(rho).reshape(2, 2, 2, 2)
    return r.transpose(2, 1, 0, 3).reshape(4, 4)


def random_density(seed=None, rank: int = 4) -> np.ndarray:
    """Ginibre (Hilbert-Schmidt for full rank) random state ``G G† / Tr``."""
    rng = np.random.default_rng(seed)
    G = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = G @ G.conj().T
    return rho / np.trace(rho).real


def random_unitary(seed=None, d: int = 2) -> np.ndarray:
    """Haar-random U(d) from QR with the phase-fixed diagonal."""
    rng = np.random.default_rng(seed)
    Z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    ph = np.diag(R) / np.abs(np.diag(R))
    return Q * ph


def random_local_unitary(seed=None) -> LocalUnitary:
    rng = np.random.default_rng(seed)
    return LocalUnitary(random_unitary(rng), random_unitary(rng))


def apply_lu(rho, g: LocalUnitary) -> np.ndarray:
    U = g.matrix()
    return U @ np.asarray(rho) @ U.conj().T
