"""Catalogue of 3x3 algebraic identities used as property checks.

Each entry maps a name to a function ``f(rng) -> residual`` that draws
unit-scale random inputs (entries uniform in [-1, 1]) and returns the largest
absolute deviation between the two sides. A correct implementation keeps
every residual at round-off level.
"""
from __future__ import annotations

from typing import Callable, Dict

import numpy as np

from .linalg3 import (
    F,
    adjugate,
    cofactor_matrix as hat,
    cross,
    cross_matrix as xF,
    frob,
    omega,
    psi,
)

__all__ = ["IDENTITIES", "run_identities", "cofactor_by_minors", "omega_entrywise"]

I3 = np.eye(3)
E = np.eye(3)


def _m(rng):
    return rng.uniform(-1, 1, (3, 3))


def _v(rng):
    return rng.uniform(-1, 1, 3)


def _so3(rng):
    Q, R = np.linalg.qr(rng.normal(size=(3, 3)))
    Q = Q * np.sign(np.diag(R))
    if np.linalg.det(Q) < 0:
        Q[:, 0] = -Q[:, 0]
    return Q


def _err(x, y) -> float:
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y))))


def cofactor_by_minors(M) -> np.ndarray:
    """Textbook signed minors; independent of the Newton formula."""
    M = np.asarray(M)
    out = np.empty((3, 3), dtype=M.dtype)
    for i in range(3):
        for j in range(3):
            minor = np.delete(np.delete(M, i, 0), j, 1)
            out[i, j] = (-1) ** (i + j) * (minor[0, 0] * minor[1, 1] - minor[0, 1] * minor[1, 0])
    return out


def omega_entrywise(M, N) -> np.ndarray:
    """``Ω_pq = -<F_p M F_q, N>``."""
    return np.array([[-frob(F[p] @ M @ F[q], N) for q in range(3)] for p in range(3)])


def _omega_rows(M, N) -> np.ndarray:
    # rows from cross products of matrix rows over the cyclic index pairs
    rows = []
    for i, j in ((1, 2), (2, 0), (0, 1)):
        rows.append(cross(M[i], N[j]) + cross(N[i], M[j]))
    return np.array(rows)


def _id_adj_def(rng):
    M = _m(rng)
    return max(_err(M @ adjugate(M), np.linalg.det(M) * I3), _err(adjugate(M) @ M, np.linalg.det(M) * I3))


def _id_cof_minors(rng):
    M = _m(rng)
    return _err(hat(M), cofactor_by_minors(M))


def _id_trace_hat(rng):
    M = _m(rng)
    return abs(np.trace(hat(M)) - 0.5 * (np.trace(M) ** 2 - np.trace(M @ M)))


def _id_hatT_hat(rng):
    M = _m(rng)
    G = M.T @ M
    return _err(hat(M).T @ hat(M), G @ G - frob(M, M) * G + frob(hat(M), hat(M)) * I3)


def _id_hat_norm(rng):
    M = _m(rng)
    G = M.T @ M
    return abs(frob(hat(M), hat(M)) - 0.5 * (frob(M, M) ** 2 - frob(G, G)))


def _id_hat_hat(rng):
    M = _m(rng)
    t1, t2, t4 = np.trace(M), np.trace(M @ M), np.trace(np.linalg.matrix_power(M, 4))
    c0 = (-(t1**4) + 2 * t1**2 * t2 + t2**2 - 2 * t4) / 8
    c1 = t1 * (t1**2 - t2) / 2
    c2 = (t1**2 + t2) / 2
    rhs = np.linalg.matrix_power(M, 4) - c2 * M @ M + c1 * M + c0 * I3
    return _err(hat(hat(M)), rhs)


def _id_hat_transpose(rng):
    M = _m(rng)
    return _err(hat(M.T), hat(M).T)


def _id_hat_mult(rng):
    M, N = _m(rng), _m(rng)
    return _err(hat(M @ N), hat(M) @ hat(N))


def _id_F_antisym(rng):
    x = _v(rng)
    return _err(xF(x).T, -xF(x))


def _id_F_cross(rng):
    x, y = _v(rng), _v(rng)
    return _err(xF(x).T @ y, cross(x, y))


def _id_F_outer(rng):
    x = _v(rng)
    a = sum(np.outer(cross(E[j], x), E[j]) for j in range(3))
    b = sum(np.outer(E[j], cross(x, E[j])) for j in range(3))
    return max(_err(xF(x), a), _err(xF(x), b))


def _id_F_product(rng):
    x, y = _v(rng), _v(rng)
    lhs = xF(x).T @ xF(y)
    mid = sum(F[j] @ np.outer(x, y) @ F[j].T for j in range(3))
    rhs = (y @ x) * I3 - np.outer(y, x)
    return max(_err(lhs, rhs), _err(mid, rhs), abs(frob(xF(x), xF(y)) - 2 * (x @ y)))


def _id_F_gram(rng):
    G = np.array([[frob(F[i], F[j]) for j in range(3)] for i in range(3)])
    return _err(G, 2 * I3)


def _id_F_wedge(rng):
    x, y = _v(rng), _v(rng)
    return _err(xF(cross(x, y)), np.outer(x, y) - np.outer(y, x))


def _id_omega_diag(rng):
    M = _m(rng)
    return _err(omega(M, M), 2 * hat(M))


def _id_omega_entrywise(rng):
    M, N = _m(rng), _m(rng)
    return max(_err(omega(M, N), omega_entrywise(M, N)), _err(omega(M, N), omega(N, M)))


def _id_omega_rows(rng):
    M, N = _m(rng), _m(rng)
    half = 0.5 * sum(
        np.outer(cross(E[i], E[j]), cross(M[i], N[j]) + cross(N[i], M[j]))
        for i in range(3)
        for j in range(3)
    )
    return max(_err(omega(M, N), _omega_rows(M, N)), _err(omega(M, N), half))


def _id_conj_F(rng):
    M, N, x = _m(rng), _m(rng), _v(rng)
    lhs = M @ xF(x) @ N.T + N @ xF(x) @ M.T
    return max(_err(lhs, xF(omega(M, N) @ x)), _err(M @ xF(x) @ M.T, xF(hat(M) @ x)))


def _id_det_F(rng):
    M, x = _m(rng), _v(rng)
    d = np.linalg.det(M)
    return max(_err(M.T @ xF(M @ x) @ M, d * xF(x)), _err(M @ xF(M.T @ x) @ M.T, d * xF(x)))


def _id_F_pairing(rng):
    M, x, y = _m(rng), _v(rng), _v(rng)
    return abs(frob(xF(x) @ M, M @ xF(y)) - 2 * x @ hat(M) @ y)


def _id_cross_linear(rng):
    L, u, v = _m(rng), _v(rng), _v(rng)
    Lti = np.linalg.inv(L.T)
    d = np.linalg.det(L)
    lhs = L @ cross(u, v)
    return max(
        _err(lhs, cross(hat(L) @ u, Lti @ v)),
        _err(lhs, d * cross(Lti @ u, Lti @ v)),
        _err(d * lhs, cross(hat(L) @ u, hat(L) @ v)),
    ) / max(1.0, abs(1 / d))


def _id_cross_rotation(rng):
    R, u, v = _so3(rng), _v(rng), _v(rng)
    return _err(R @ cross(u, v), cross(R @ u, R @ v))


def _id_cross_hat(rng):
    L, u, v = _m(rng), _v(rng), _v(rng)
    return _err(cross(L @ u, L @ v), hat(L) @ cross(u, v))


def _id_cross_omega(rng):
    M, N, u, v = _m(rng), _m(rng), _v(rng), _v(rng)
    return _err(cross(M @ u, N @ v) + cross(N @ u, M @ v), omega(M, N) @ cross(u, v))


def _id_F_intertwine(rng):
    M, x, y = _m(rng), _v(rng), _v(rng)
    return max(_err(xF(M @ y) @ M, hat(M) @ xF(y)), _err(M @ xF(M.T @ x), xF(x) @ hat(M)))


def _id_col_cross(rng):
    A, B = _m(rng), _m(rng)
    s = sum(cross(A @ E[i], B @ E[i]) for i in range(3))
    s2 = sum(cross(A @ B.T @ E[i], E[i]) for i in range(3))
    s3 = sum(cross(E[i], B @ A.T @ E[i]) for i in range(3))
    K = A @ B.T - B @ A.T
    s4 = -0.5 * np.array([np.trace(F[k] @ K) for k in range(3)])
    return max(_err(s, s2), _err(s, s3), _err(s, s4))


def _id_omega_rank1(rng):
    T, a, b = _m(rng), _v(rng), _v(rng)
    return _err(omega(T, np.outer(a, b)), xF(a) @ T @ xF(b).T)


def _id_omega_hat(rng):
    M, T = _m(rng), _m(rng)
    return _err(omega(M, hat(T)), np.trace(M.T @ T) * T - T @ M.T @ T)


def _id_omega_left(rng):
    T, A = _m(rng), _m(rng)
    r1 = _err(omega(T, A @ T), np.trace(A) * hat(T) - A.T @ hat(T))
    r2 = _err(omega(T, T @ T.T @ T), frob(T, T) * hat(T) - np.linalg.det(T) * T)
    return max(r1, r2)


def _id_omega_right(rng):
    T, B = _m(rng), _m(rng)
    return _err(omega(T, T @ B), np.trace(B) * hat(T) - hat(T) @ B.T)


def _id_omega_sandwich(rng):
    T, r, s = _m(rng), _v(rng), _v(rng)
    rs = np.outer(r, s)
    rhs = (r @ T @ s) * T + frob(T, T) * rs - (rs @ T.T @ T + T @ T.T @ rs)
    return _err(omega(T, xF(r) @ T @ xF(s).T), rhs)


def _id_omega_F(rng):
    T, x = _m(rng), _v(rng)
    n = sum(cross(T @ E[i], E[i]) for i in range(3))
    return max(_err(T - T.T, xF(n)), _err(omega(T, xF(x)), xF(T @ x) + np.outer(n, x)))


def _id_omega_FF(rng):
    x, y = _v(rng), _v(rng)
    return _err(omega(xF(x), xF(y)), np.outer(x, y) + np.outer(y, x))


def _id_omega_hat_factor(rng):
    A, B, T = _m(rng), _m(rng), _m(rng)
    r1 = _err(omega(A @ hat(T), B), omega(A, B @ T.T) @ T)
    r2 = _err(omega(hat(T) @ A, B), T @ omega(A, T.T @ B))
    return max(r1, r2)


def _id_omega_sum(rng):
    M, N = _m(rng), _m(rng)
    return _err(omega(M, N), hat(M + N) - hat(M) - hat(N))


def _id_psi_def(rng):
    x, y, M = _v(rng), _v(rng), _m(rng)
    # (x.F)^T M has columns x × (M e_j); M (y.F) has rows y × (e_i^T M)
    a = np.column_stack([cross(x, M[:, j]) for j in range(3)])
    b = np.array([cross(y, M[i]) for i in range(3)])
    return _err(psi(x, M, y), a + b)


IDENTITIES: Dict[str, Callable[[np.random.Generator], float]] = {
    "adjugate inverts up to det": _id_adj_def,
    "cofactor equals signed minors": _id_cof_minors,
    "trace of cofactor": _id_trace_hat,
    "cofactor gram matrix": _id_hatT_hat,
    "cofactor frobenius norm": _id_hat_norm,
    "double cofactor quartic": _id_hat_hat,
    "cofactor commutes with transpose": _id_hat_transpose,
    "cofactor is multiplicative": _id_hat_mult,
    "generator antisymmetry": _id_F_antisym,
    "generator cross product": _id_F_cross,
    "generator outer expansion": _id_F_outer,
    "generator product": _id_F_product,
    "generator gram": _id_F_gram,
    "wedge as generator": _id_F_wedge,
    "omega diagonal": _id_omega_diag,
    "omega entrywise form": _id_omega_entrywise,
    "omega row form": _id_omega_rows,
    "omega polarisation": _id_omega_sum,
    "congruence of generator": _id_conj_F,
    "determinant of generator congruence": _id_det_F,
    "generator pairing": _id_F_pairing,
    "linear map of cross product": _id_cross_linear,
    "rotation of cross product": _id_cross_rotation,
    "cross of images": _id_cross_hat,
    "mixed cross of images": _id_cross_omega,
    "generator intertwiner": _id_F_intertwine,
    "column cross sum": _id_col_cross,
    "omega rank one": _id_omega_rank1,
    "omega with cofactor": _id_omega_hat,
    "omega left factor": _id_omega_left,
    "omega right factor": _id_omega_right,
    "omega sandwich": _id_omega_sandwich,
    "omega with generator": _id_omega_F,
    "omega of two generators": _id_omega_FF,
    "omega cofactor factor": _id_omega_hat_factor,
    "psi definition": _id_psi_def,
}


def run_identities(n: int = 100, seed: int = 0) -> Dict[str, float]:
    """Worst residual per identity over ``n`` random draws."""
    rng = np.random.default_rng(seed)
    return {name: max(f(rng) for _ in range(n)) for name, f in IDENTITIES.items()}
