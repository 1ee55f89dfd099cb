"""Pauli-basis coefficients of two-qubit operators.

An operator X on C^2 ⊗ C^2 is written as

    X = t I + sum_i r_i σ_i⊗I + sum_j s_j I⊗σ_j + sum_ij T_ij σ_i⊗σ_j

and stored as a :class:`BlochForm`. Products, commutators and powers are
computed directly on the coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg3 import cofactor_matrix, cross, frob, omega, psi

__all__ = [
    "I2",
    "PAULI",
    "BlochForm",
    "decompose",
    "reconstruct",
    "bloch_product",
    "commutator_bloch",
    "bloch_power",
    "power_closed_form",
]

I2 = np.eye(2, dtype=complex)
PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
PAULI.setflags(write=False)

_SA = np.array([np.kron(P, I2) for P in PAULI])
_SB = np.array([np.kron(I2, P) for P in PAULI])
_SAB = np.array([[np.kron(P, Q) for Q in PAULI] for P in PAULI])

REAL_TOL = 1e-10


@dataclass(frozen=True)
class BlochForm:
    """Coefficients (t, r, s, T); always stored as complex arrays."""

    t: complex
    r: np.ndarray
    s: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t", complex(self.t))
        for name, shape in (("r", (3,)), ("s", (3,)), ("T", (3, 3))):
            arr = np.array(getattr(self, name), dtype=complex)
            if arr.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def identity(cls) -> "BlochForm":
        return cls(1.0, np.zeros(3), np.zeros(3), np.zeros((3, 3)))

    def flat(self) -> np.ndarray:
        return np.concatenate([[self.t], self.r, self.s, self.T.ravel()])

    def is_real(self, tol: float = REAL_TOL) -> bool:
        return bool(np.max(np.abs(self.flat().imag)) <= tol)

    def real(self) -> "BlochForm":
        return BlochForm(self.t.real, self.r.real, self.s.real, self.T.real)

    def scale(self, c) -> "BlochForm":
        return BlochForm(c * self.t, c * self.r, c * self.s, c * self.T)

    def __add__(self, other: "BlochForm") -> "BlochForm":
        return BlochForm(self.t + other.t, self.r + other.r, self.s + other.s, self.T + other.T)

    def __sub__(self, other: "BlochForm") -> "BlochForm":
        return self + other.scale(-1)

    def allclose(self, other: "BlochForm", atol: float = 1e-10) -> bool:
        return bool(np.max(np.abs(self.flat() - other.flat())) <= atol)


def decompose(X) -> BlochForm:
    """Coefficients via ``Tr[X basis] / 4``."""
    X = np.asarray(X, dtype=complex)
    if X.shape != (4, 4):
        raise ValueError(f"expected a 4x4 operator, got shape {X.shape}")
    t = np.trace(X) / 4
    r = np.einsum("kij,ji->k", _SA, X) / 4
    s = np.einsum("kij,ji->k", _SB, X) / 4
    T = np.einsum("abij,ji->ab", _SAB, X) / 4
    return BlochForm(t, r, s, T)


def reconstruct(b: BlochForm) -> np.ndarray:
    return (
        b.t * np.eye(4)
        + np.tensordot(b.r, _SA, axes=1)
        + np.tensordot(b.s, _SB, axes=1)
        + np.tensordot(b.T, _SAB, axes=2)
    )


def _col_cross_sum(A, B) -> np.ndarray:
    # sum_i (A e_i) × (B e_i)
    return np.sum(cross(A.T, B.T), axis=0)


def bloch_product(b: BlochForm, c: BlochForm) -> BlochForm:
    """Coefficients of the operator product ``X X'``.

    All pairings are bilinear, so the formula is valid for complex
    coefficients (non-Hermitian operators) as well.
    """
    t, r, s, T = b.t, b.r, b.s, b.T
    u, x, y, S = c.t, c.r, c.s, c.T
    tt = t * u + r @ x + s @ y + frob(T, S)
    rr = u * r + t * x + S @ s + T @ y + 1j * (cross(r, x) + _col_cross_sum(T, S))
    ss = u * s + t * y + S.T @ r + T.T @ x + 1j * (cross(s, y) + _col_cross_sum(T.T, S.T))
    TT = (
        u * T
        + t * S
        + np.outer(r, y)
        + np.outer(x, s)
        - omega(T, S)
        + 1j * (psi(r, S, s) - psi(x, T, y))
    )
    return BlochForm(tt, rr, ss, TT)


def commutator_bloch(b: BlochForm, c: BlochForm) -> BlochForm:
    """Coefficients of ``[X, X']``; only the antisymmetric terms survive."""
    r, s, T = b.r, b.s, b.T
    x, y, S = c.r, c.s, c.T
    rr = 2j * (cross(r, x) + _col_cross_sum(T, S))
    ss = 2j * (cross(s, y) + _col_cross_sum(T.T, S.T))
    TT = 2j * (psi(r, S, s) - psi(x, T, y))
    return BlochForm(0.0, rr, ss, TT)


def bloch_power(b: BlochForm, k: int) -> BlochForm:
    """``X^k`` via ``X^(j+1) = X^j X`` on the real coefficients.

    For Hermitian X the imaginary parts of the product cancel, so the step
    reduces to the real recurrence below.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if not b.is_real():
        raise ValueError("bloch_power expects a Hermitian operator (real coefficients)")
    t, r, s, T = b.t.real, b.r.real, b.s.real, b.T.real
    tk, rk, sk, Tk = 1.0, np.zeros(3), np.zeros(3), np.zeros((3, 3))
    for _ in range(k):
        tk, rk, sk, Tk = (
            tk * t + rk @ r + sk @ s + frob(Tk, T),
            t * rk + tk * r + T @ sk + Tk @ s,
            t * sk + tk * s + T.T @ rk + Tk.T @ r,
            np.outer(rk, s) + np.outer(r, sk) + t * Tk + tk * T - omega(Tk, T),
        )
    return BlochForm(tk, rk, sk, Tk)


def power_closed_form(b: BlochForm, k: int) -> BlochForm:
    """Explicit polynomial coefficients of ``X^k`` for k = 2, 3, 4.

    Independent of :func:`bloch_power`; used to cross-check it.
    """
    if not b.is_real():
        raise ValueError("closed forms assume real coefficients")
    t, r, s, T = b.t.real, b.r.real, b.s.real, b.T.real
    hT = cofactor_matrix(T)
    rr, ss, nT = r @ r, s @ s, frob(T, T)
    rTs = r @ T @ s
    dT = np.linalg.det(T)
    rs = np.outer(r, s)
    if k == 2:
        return BlochForm(
            t * t + rr + ss + nT,
            2 * t * r + 2 * T @ s,
            2 * t * s + 2 * T.T @ r,
            2 * t * T + 2 * rs - 2 * hT,
        )
    if k == 3:
        return BlochForm(
            t**3 + 3 * t * (rr + ss + nT) + 6 * (rTs - dT),
            (3 * t * t + rr + 3 * ss + nT) * r + 2 * T @ T.T @ r + 6 * t * T @ s - 2 * hT @ s,
            (3 * t * t + 3 * rr + ss + nT) * s + 2 * T.T @ T @ s + 6 * t * T.T @ r - 2 * hT.T @ r,
            (3 * t * t + rr + ss + 3 * nT) * T
            + 6 * t * (rs - hT)
            + 2 * (np.outer(r, r) @ T + T @ np.outer(s, s) - T @ T.T @ T - omega(T, rs)),
        )
    if k == 4:
        c = t * t * 3 + rr + ss + nT
        q = 2 * rTs - 2 * dT
        t4 = (
            t**4 + rr**2 + ss**2 + nT**2 + 6 * rr * ss
            + 6 * t * t * (rr + ss + nT)
            + 2 * (rr + ss) * nT
            + 4 * (r @ T @ T.T @ r + s @ T.T @ T @ s + frob(hT, hT))
            + 24 * t * (rTs - dT)
            - 8 * r @ hT @ s
        )
        r4 = 4 * (
            (t * (t * t + rr + 3 * ss + nT) + q) * r
            + c * T @ s
            + 2 * t * T @ T.T @ r
            - 2 * hT @ s * t
        )
        s4 = 4 * (
            (t * (t * t + 3 * rr + ss + nT) + q) * s
            + c * T.T @ r
            + 2 * t * T.T @ T @ s
            - 2 * hT.T @ r * t
        )
        T4 = 4 * (
            (t * (t * t + rr + ss + 3 * nT) + q) * T
            + c * (rs - hT)
            + 2 * t * (np.outer(r, r) @ T + T @ np.outer(s, s) - T @ T.T @ T - omega(T, rs))
        )
        return BlochForm(t4, r4, s4, T4)
    raise ValueError("closed forms are available for k in {2, 3, 4}")
