"""LU equivalence and permutation traces.

Layout of ``ρ^{⊗n}`` is copy-major: tensor factors are ordered
(A1, B1, A2, B2, ..., An, Bn). Permutations are given in one-line notation,
0-based internally (``perm[j]`` is the image of slot j); the operator moves
the content of slot j to slot ``perm[j]``. With that convention
``P(π) P(τ) = P(π∘τ)`` where ``(π∘τ)(k) = π(τ(k))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .invariants import bargmann_direct

__all__ = [
    "MAX_DIM",
    "PermutationTuple",
    "Verdict",
    "EquivalenceReport",
    "compose",
    "permutation_operator",
    "local_permutation_operator",
    "permutation_trace",
    "lu_equivalent",
    "parse_permutation",
]

MAX_DIM = 4096


class Verdict(str, Enum):
    EQUIVALENT = "equivalent"
    INEQUIVALENT = "inequivalent"
    INCONCLUSIVE = "inconclusive"


def _check_perm(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(int(k) for k in perm)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {perm}")
    return perm


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse 1-based one-line notation such as ``"2,3,1"``."""
    try:
        perm = tuple(int(tok) - 1 for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise ValueError(f"bad permutation {text!r}") from exc
    return _check_perm(perm)


def compose(pi: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``(π∘τ)(k) = π(τ(k))``."""
    return tuple(pi[tau[k]] for k in range(len(tau)))


@dataclass(frozen=True)
class PermutationTuple:
    """One permutation of {0..n-1} per subsystem, plus local dimensions."""

    perms: tuple[tuple[int, ...], ...]
    dims: tuple[int, ...] = (2, 2)

    def __post_init__(self):
        perms = tuple(_check_perm(p) for p in self.perms)
        dims = tuple(int(d) for d in self.dims)
        if len(perms) != len(dims):
            raise ValueError("need exactly one permutation per subsystem")
        ns = {len(p) for p in perms}
        if len(ns) != 1:
            raise ValueError("all permutations must act on the same number of copies")
        object.__setattr__(self, "perms", perms)
        object.__setattr__(self, "dims", dims)
        if self.total_dim > MAX_DIM:
            raise ValueError(f"dimension {self.total_dim} exceeds the limit {MAX_DIM}")

    @property
    def n(self) -> int:
        return len(self.perms[0])

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims)) ** self.n


def _slot_operator(dims: Sequence[int], dest: Sequence[int]) -> np.ndarray:
    """Permutation matrix sending tensor slot j to slot ``dest[j]``."""
    m = len(dims)
    D = int(np.prod(dims))
    if D > MAX_DIM:
        raise ValueError(f"dimension {D} exceeds the limit {MAX_DIM}")
    src = np.empty(m, dtype=int)
    for j, k in enumerate(dest):
        src[k] = j
    # output axis k carries input axis src[k]
    idx = np.arange(D).reshape(dims)
    out_idx = np.transpose(idx, src)  # out_idx[i_out] = flat input index
    P = np.zeros((D, D))
    P[np.arange(D), out_idx.ravel()] = 1.0
    return P


def permutation_operator(d: int, n: int, perm: Sequence[int]) -> np.ndarray:
    """``P|i_1..i_n> = |i_{π^-1(1)}..i_{π^-1(n)}>`` on ``(C^d)^{⊗n}``."""
    perm = _check_perm(perm)
    if len(perm) != n:
        raise ValueError("permutation length must equal n")
    if d**n > MAX_DIM:
        raise ValueError(f"dimension {d ** n} exceeds the limit {MAX_DIM}")
    return _slot_operator([d] * n, perm)


def local_permutation_operator(t: PermutationTuple) -> np.ndarray:
    """Tensor product of per-subsystem permutation operators, copy-major layout."""
    N, n = len(t.dims), t.n
    dims = [t.dims[s] for _ in range(n) for s in range(N)]
    # slot of (copy c, subsystem s) is c*N + s
    dest = [0] * (n * N)
    for c in range(n):
        for s in range(N):
            dest[c * N + s] = t.perms[s][c] * N + s
    return _slot_operator(dims, dest)


def permutation_trace(rho, t: PermutationTuple) -> complex:
    """``Tr[ρ^{⊗n} P(π_1, ..., π_N)]``."""
    rho = np.asarray(rho, dtype=complex)
    D = int(np.prod(t.dims))
    if rho.shape != (D, D):
        raise ValueError(f"state must be {D}x{D} for dims {t.dims}")
    big = rho
    for _ in range(t.n - 1):
        big = np.kron(big, rho)
    P = local_permutation_operator(t)
    return complex(np.trace(big @ P))


@dataclass(frozen=True)
class EquivalenceReport:
    verdict: Verdict
    max_discrepancy: float
    worst_index: int  # 1-based B index

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "max_discrepancy": self.max_discrepancy,
            "worst_index": self.worst_index,
        }


def lu_equivalent(rho, sigma, tol: float = 1e-8) -> EquivalenceReport:
    """Compare the 18 Bargmann invariants of two two-qubit states.

    Equivalent when the largest difference is at most ``tol``, inconclusive
    up to ``10 * tol``, inequivalent beyond that.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    d = np.abs(bargmann_direct(rho).values - bargmann_direct(sigma).values)
    k = int(np.argmax(d))
    worst = float(d[k])
    if worst <= tol:
        v = Verdict.EQUIVALENT
    elif worst <= 10 * tol:
        v = Verdict.INCONCLUSIVE
    else:
        v = Verdict.INEQUIVALENT
    return EquivalenceReport(v, worst, k + 1)
