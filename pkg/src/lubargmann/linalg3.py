"""Real 3-vector and 3x3 matrix algebra.

Cross products, the antisymmetric generators F_k, cofactor/adjugate
matrices, the bilinear maps ``omega`` and ``psi``, and Newton identities.
Everything here is a pure function on numpy arrays; complex inputs are
accepted and handled bilinearly (no conjugation).
"""
from __future__ import annotations

import numpy as np

__all__ = [
    "F",
    "cross",
    "cross_matrix",
    "adjugate",
    "cofactor_matrix",
    "omega",
    "psi",
    "frob",
    "elementary_from_power_sums",
]


def _levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[i, k, j] = -1.0
    return eps


EPS = _levi_civita()
# F[k][i, j] = eps_{ijk}; so F[0] has +1 at (1, 2) and -1 at (2, 1).
F = np.ascontiguousarray(np.transpose(EPS, (2, 0, 1)))
F.setflags(write=False)


def cross(u, v) -> np.ndarray:
    """Right-handed cross product."""
    return np.cross(np.asarray(u), np.asarray(v))


def cross_matrix(x) -> np.ndarray:
    """Return ``x.F = sum_k x_k F_k``, so that ``cross_matrix(x).T @ y == x × y``."""
    x = np.asarray(x)
    return np.tensordot(x, F, axes=(0, 0))


def frob(M, N):
    """Bilinear Frobenius pairing ``sum_ij M_ij N_ij``."""
    return np.sum(np.asarray(M) * np.asarray(N))


def adjugate(M) -> np.ndarray:
    """Adjugate of a 3x3 matrix from its characteristic coefficients.

    Uses ``M* = M^2 - e1 M + e2 I`` with ``e1 = Tr M`` and
    ``e2 = ((Tr M)^2 - Tr M^2) / 2``, which is the n = 3 case of
    ``M* = sum_k e_k (-M)^(n-1-k)``.
    """
    M = np.asarray(M)
    if M.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {M.shape}")
    M2 = M @ M
    e1 = np.trace(M)
    e2 = 0.5 * (e1 * e1 - np.trace(M2))
    return M2 - e1 * M + e2 * np.eye(3)


def cofactor_matrix(M) -> np.ndarray:
    """Signed-minor matrix; the transpose of the adjugate."""
    return adjugate(M).T


def omega(M, N) -> np.ndarray:
    """Symmetric bilinear map with ``omega(M, M) == 2 * cofactor_matrix(M)``."""
    M = np.asarray(M)
    N = np.asarray(N)
    return cofactor_matrix(M + N) - cofactor_matrix(M) - cofactor_matrix(N)


def psi(x, M, y) -> np.ndarray:
    """``(x.F)^T M + M (y.F)``."""
    M = np.asarray(M)
    return cross_matrix(x).T @ M + M @ cross_matrix(y)


def elementary_from_power_sums(p) -> np.ndarray:
    """Elementary symmetric values e_1..e_k from power sums p_1..p_k.

    Newton recurrence ``k e_k = sum_{j=1..k} (-1)^(j-1) e_{k-j} p_j``.
    """
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size < 1:
        raise ValueError("need at least one power sum")
    k = p.size
    e = np.zeros(k + 1)
    e[0] = 1.0
    for m in range(1, k + 1):
        acc = 0.0
        for j in range(1, m + 1):
            acc += (-1) ** (j - 1) * e[m - j] * p[j - 1]
        e[m] = acc / m
    return e[1:]
