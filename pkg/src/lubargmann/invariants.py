"""Local-unitary invariants of two-qubit states.

Three families are provided:

* ``makhlin_I`` and ``makhlin_L``: 18 real polynomial invariants of (a, b, C);
* ``bargmann_direct``: 18 traces of words in ρ, ρ_A⊗I and I⊗ρ_B;
* ``bargmann_from_L`` / ``L_from_B``: polynomial maps between the two.

``char_coeffs`` gives the depressed quartic whose roots are the eigenvalues
of ``4ρ - I`` (or of ``4ρ^Γ - I`` for ``char_coeffs_pt``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from . import _polymaps
from .linalg3 import cofactor_matrix, cross, cross_matrix, frob
from .states import StateParams, partial_trace

__all__ = [
    "MakhlinVector",
    "BargmannVector",
    "CharCoeffs",
    "BARGMANN_WORDS",
    "SUSPECT_B",
    "SUSPECT_L",
    "multivariate_trace",
    "makhlin_L",
    "makhlin_I",
    "i14_over_l14",
    "bargmann_letters",
    "bargmann_direct",
    "bargmann_from_L",
    "L_from_B",
    "char_coeffs",
    "char_coeffs_pt",
    "quartic_roots",
]


@dataclass(frozen=True)
class MakhlinVector:
    """Eighteen real invariants, 1-based access via ``v[k]``."""

    values: np.ndarray
    family: str = "L"

    def __post_init__(self):
        arr = np.array(self.values)
        if arr.shape != (18,):
            raise ValueError("a Makhlin vector has 18 entries")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __getitem__(self, k: int):
        if not 1 <= k <= 18:
            raise IndexError(k)
        return self.values[k - 1]


@dataclass(frozen=True)
class BargmannVector:
    """Eighteen complex invariants, 1-based access via ``v[k]``."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=complex)
        if arr.shape != (18,):
            raise ValueError("a Bargmann vector has 18 entries")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __getitem__(self, k: int):
        if not 1 <= k <= 18:
            raise IndexError(k)
        return self.values[k - 1]


@dataclass(frozen=True)
class CharCoeffs:
    """Coefficients of ``x^4 + p x^2 + q x + r``."""

    p: float
    q: float
    r: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p, self.q, self.r)


# Words over the letters 0 (ρ), 1 (ρ_A⊗I), 2 (I⊗ρ_B).
BARGMANN_WORDS: tuple[tuple[int, ...], ...] = (
    (0, 1),
    (0, 2),
    (0, 1, 2),
    (0, 0),
    (0, 0, 1, 2),
    (0, 0, 0),
    (0, 0, 0, 1),
    (0, 0, 0, 2),
    (0, 0, 0, 1, 2),
    (0, 0, 0, 0),
    (0, 0, 1, 0, 0, 1),
    (0, 0, 2, 0, 0, 2),
    (0, 1, 2, 0, 0, 1),
    (0, 1, 2, 0, 0, 2),
    (0, 1, 2, 0, 0, 0, 1),
    (0, 1, 2, 0, 0, 0, 2),
    (0, 1, 0, 0, 1, 0, 0, 0, 1),
    (0, 2, 0, 0, 2, 0, 0, 0, 2),
)

# Indices whose reference polynomial is long enough to warrant a numerical
# certificate before being trusted; see ``_polymaps`` for the outcome.
SUSPECT_B = (13, 14, 15, 16, 17, 18)
SUSPECT_L = (10, 11)


def multivariate_trace(ms: Sequence[np.ndarray]) -> complex:
    """``Tr[M_1 M_2 ... M_n]`` for an ordered list of square matrices."""
    if len(ms) == 0:
        raise ValueError("need at least one matrix")
    mats = [np.asarray(m) for m in ms]
    shape = mats[0].shape
    if len(shape) != 2 or shape[0] != shape[1]:
        raise ValueError("matrices must be square")
    if any(m.shape != shape for m in mats):
        raise ValueError("dimension mismatch")
    return complex(np.trace(reduce(np.matmul, mats)))


def _unpack(p: StateParams):
    return p.a, p.b, p.C


def makhlin_L(p: StateParams) -> MakhlinVector:
    a, b, C = _unpack(p)
    hC = cofactor_matrix(C)
    CCt = C @ C.T
    CtC = C.T @ C
    hCCt = cofactor_matrix(CCt)
    hCtC = cofactor_matrix(CtC)
    v = np.array(
        [
            np.linalg.det(C),
            frob(C, C),
            frob(hC, hC),
            a @ a,
            a @ CCt @ a,
            a @ hCCt @ a,
            b @ b,
            b @ CtC @ b,
            b @ hCtC @ b,
            a @ cross(CCt @ a, hCCt @ a),
            b @ cross(CtC @ b, hCtC @ b),
            a @ C @ b,
            a @ CCt @ C @ b,
            a @ hC @ b,
            b @ cross(C.T @ a, hC.T @ a),
            a @ cross(C @ b, hC @ b),
            (hC @ b) @ cross(a, CCt @ a),
            (hC.T @ a) @ cross(b, CtC @ b),
        ]
    )
    return MakhlinVector(v, "L")


def makhlin_I(p: StateParams) -> MakhlinVector:
    a, b, C = _unpack(p)
    CCt = C @ C.T
    CtC = C.T @ C
    v = np.array(
        [
            np.linalg.det(C),
            frob(C, C),
            frob(CtC, CtC),
            a @ a,
            a @ CCt @ a,
            a @ CCt @ CCt @ a,
            b @ b,
            b @ CtC @ b,
            b @ CtC @ CtC @ b,
            a @ cross(CCt @ a, CCt @ CCt @ a),
            b @ cross(CtC @ b, CtC @ CtC @ b),
            a @ C @ b,
            a @ CCt @ C @ b,
            frob(cross_matrix(a) @ C, C @ cross_matrix(b)),
            a @ cross(CCt @ a, C @ b),
            (C.T @ a) @ cross(b, CtC @ b),
            (C.T @ a) @ cross(CtC @ C.T @ a, b),
            a @ cross(C @ b, CCt @ C @ b),
        ]
    )
    return MakhlinVector(v, "I")


def i14_over_l14(p: StateParams) -> float:
    """Ratio of the two index-14 invariants; 2 whenever ``L_14 != 0``."""
    return float(makhlin_I(p)[14] / makhlin_L(p)[14])


def bargmann_letters(rho) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rho = np.asarray(rho, dtype=complex)
    I2 = np.eye(2)
    return rho, np.kron(partial_trace(rho, "A"), I2), np.kron(I2, partial_trace(rho, "B"))


def bargmann_direct(rho) -> BargmannVector:
    """Each ``B_k`` as the trace of its word in the three letters."""
    letters = bargmann_letters(rho)
    return BargmannVector([multivariate_trace([letters[i] for i in w]) for w in BARGMANN_WORDS])


def bargmann_from_L(L: MakhlinVector, verbatim: bool = False) -> BargmannVector:
    """Polynomial map L -> B.

    ``verbatim=True`` evaluates every entry of the reference closed forms as
    transcribed; the default uses certified entries (identical except where a
    reference entry failed numerical certification).
    """
    vals = np.asarray(L.values, dtype=complex)
    return BargmannVector(_polymaps.b_from_l(vals, verbatim=verbatim))


def L_from_B(B: BargmannVector, verbatim: bool = False) -> MakhlinVector:
    """Polynomial map B -> L; the result is complex and should be real for states."""
    vals = np.asarray(B.values, dtype=complex)
    return MakhlinVector(_polymaps.l_from_b(vals, verbatim=verbatim), "L")


def char_coeffs(p: StateParams) -> CharCoeffs:
    L = makhlin_L(p)
    pp = -2 * (L[2] + L[4] + L[7])
    qq = -8 * (L[12] - L[1])
    rr = (
        L[2] ** 2
        + 2 * (L[4] + L[7]) * L[2]
        + (L[4] - L[7]) ** 2
        - 4 * (L[3] + L[5] + L[8])
        + 8 * L[14]
    )
    return CharCoeffs(float(pp), float(qq), float(rr))


def char_coeffs_pt(p: StateParams) -> CharCoeffs:
    """Same as :func:`char_coeffs` for the partial transpose on qubit A."""
    a, b, C = _unpack(p)
    nC = frob(C, C)
    CtC = C.T @ C
    na, nb = a @ a, b @ b
    pp = -2 * (na + nb + nC)
    qq = -8 * (a @ C @ b + np.linalg.det(C))
    rr = (
        (na - nb) ** 2
        + 2 * (na + nb) * nC
        + 2 * frob(CtC, CtC)
        - nC**2
        - 4 * (a @ C @ C.T @ a + b @ CtC @ b)
        - 8 * a @ cofactor_matrix(C) @ b
    )
    return CharCoeffs(float(pp), float(qq), float(rr))


def quartic_roots(c: CharCoeffs) -> np.ndarray:
    """Sorted real parts of the roots of ``x^4 + p x^2 + q x + r``."""
    return np.sort(np.roots([1.0, 0.0, c.p, c.q, c.r]).real)
