"""Property suites run by ``lubargmann selftest`` and the acceptance tests.

Each suite takes a generator, a sample count and a tolerance and returns a
:class:`SuiteResult`. Suites are independent; :func:`run_selftest` gives each
one its own child seed spawned from the master seed.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict

import numpy as np

from .bloch import BlochForm, bloch_power, bloch_product, decompose, power_closed_form, reconstruct
from .entanglement import (
    BOUNDARY_BAND,
    bargmann_lhs,
    bisect_werner,
    det_pt,
    det_pt_from_coeffs,
    makhlin_sides,
)
from .identities import IDENTITIES
from .invariants import (
    L_from_B,
    bargmann_direct,
    bargmann_from_L,
    char_coeffs,
    makhlin_L,
    quartic_roots,
)
from .luequiv import PermutationTuple, Verdict, lu_equivalent, permutation_trace
from .states import (
    apply_lu,
    params_from_state,
    random_density,
    random_local_unitary,
)

__all__ = ["SuiteResult", "SelftestConfig", "SUITES", "run_selftest", "random_bloch"]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    worst: float
    samples: int
    seconds: float = 0.0
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "worst": self.worst,
            "samples": self.samples,
            "seconds": round(self.seconds, 4),
            "note": self.note,
        }


@dataclass(frozen=True)
class SelftestConfig:
    """Sample counts per suite. ``full`` matches the acceptance sizes."""

    identities: int = 20
    product: int = 100
    powers: int = 40
    conversion: int = 100
    lu_pairs: int = 50
    roots: int = 100
    perm_traces: int = 10
    agreement: int = 500

    @classmethod
    def profile(cls, name: str) -> "SelftestConfig":
        if name == "quick":
            return cls()
        if name == "full":
            return cls(100, 1000, 200, 1000, 500, 500, 100, 10_000)
        raise ValueError(f"unknown profile {name!r}")


def random_bloch(rng: np.random.Generator) -> BlochForm:
    """Real Bloch data with entries uniform in [-1, 1] (a random Hermitian X)."""
    return BlochForm(
        rng.uniform(-1, 1), rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3), rng.uniform(-1, 1, (3, 3))
    )


def _ok(worst: float, tol: float) -> bool:
    return bool(worst <= tol)


def suite_identities(rng, n, tol) -> SuiteResult:
    worst, name = 0.0, ""
    for key, f in IDENTITIES.items():
        w = max(f(rng) for _ in range(n))
        if w >= worst:
            worst, name = w, key
    return SuiteResult("identities", _ok(worst, tol), worst, n * len(IDENTITIES), note=name)


def suite_product(rng, n, tol) -> SuiteResult:
    worst = 0.0
    for _ in range(n):
        x, y = random_bloch(rng), random_bloch(rng)
        dense = reconstruct(x) @ reconstruct(y)
        worst = max(worst, np.max(np.abs(reconstruct(bloch_product(x, y)) - dense)))
    return SuiteResult("bloch product", _ok(worst, tol), float(worst), n)


def suite_powers(rng, n, tol) -> SuiteResult:
    worst = 0.0
    for _ in range(n):
        x = random_bloch(rng)
        X = reconstruct(x)
        for k in (2, 3, 4):
            dense = np.linalg.matrix_power(X, k)
            e1 = np.max(np.abs(reconstruct(power_closed_form(x, k)) - dense))
            e2 = np.max(np.abs(reconstruct(bloch_power(x, k)) - dense))
            worst = max(worst, e1, e2)
    return SuiteResult("power closed forms", _ok(worst, tol), float(worst), n)


def suite_conversion(rng, n, tol) -> SuiteResult:
    worst_b = worst_l = 0.0
    for _ in range(n):
        rho = random_density(rng)
        L = makhlin_L(params_from_state(rho))
        B = bargmann_from_L(L)
        worst_b = max(worst_b, np.max(np.abs(B.values - bargmann_direct(rho).values)))
        worst_l = max(worst_l, np.max(np.abs(L_from_B(B).values - L.values)))
    worst = max(worst_b, worst_l)
    return SuiteResult(
        "L<->B conversion", _ok(worst, tol), float(worst), n,
        note=f"B err {worst_b:.2e}, L err {worst_l:.2e}",
    )


def suite_lu(rng, n, tol) -> SuiteResult:
    bad = 0
    worst = 0.0
    for _ in range(n):
        rho = random_density(rng)
        rot = apply_lu(rho, random_local_unitary(rng))
        r = lu_equivalent(rho, rot, tol)
        worst = max(worst, r.max_discrepancy)
        bad += r.verdict is not Verdict.EQUIVALENT
        if lu_equivalent(rho, random_density(rng), tol).verdict is not Verdict.INEQUIVALENT:
            bad += 1
    return SuiteResult("LU equivalence", bad == 0, float(worst), n, note=f"{bad} wrong verdicts")


def suite_roots(rng, n, tol) -> SuiteResult:
    worst = 0.0
    for _ in range(n):
        rho = random_density(rng)
        roots = quartic_roots(char_coeffs(params_from_state(rho)))
        ev = np.sort(np.linalg.eigvalsh(4 * rho - np.eye(4)))
        worst = max(worst, np.max(np.abs(roots - ev)))
    return SuiteResult("characteristic roots", _ok(worst, tol), float(worst), n)


def suite_perm_traces(rng, n, tol) -> SuiteResult:
    swap = PermutationTuple(((1, 0), (1, 0)))
    cyc = PermutationTuple(((1, 2, 0), (1, 2, 0)))
    mixed = PermutationTuple(((1, 2, 0), (0, 2, 1)))
    worst = 0.0
    for _ in range(n):
        rho = random_density(rng)
        rot = apply_lu(rho, random_local_unitary(rng))
        t2 = np.trace(rho @ rho)
        t3 = np.trace(rho @ rho @ rho)
        worst = max(
            worst,
            abs(permutation_trace(rho, swap) - t2),
            abs(permutation_trace(rho, cyc) - t3),
            abs(permutation_trace(rho, mixed) - permutation_trace(rot, mixed)),
        )
    return SuiteResult("permutation traces", _ok(worst, tol), float(worst), n)


def suite_agreement(rng, n, tol) -> SuiteResult:
    """Disagreements among the three detectors outside the boundary band.

    ``tol`` does not enter: the band is fixed at ``BOUNDARY_BAND``.
    """
    bad = in_band = 0
    for _ in range(n):
        rho = random_density(rng)
        p = params_from_state(rho)
        lhs, rhs = makhlin_sides(p)
        margins = (
            -det_pt(rho),
            rhs - lhs,
            1.0 - bargmann_lhs(bargmann_direct(rho)),
        )
        if min(abs(m) for m in margins) <= BOUNDARY_BAND:
            in_band += 1
            continue
        if len({m > 0 for m in margins}) != 1:
            bad += 1
    return SuiteResult(
        "detector agreement", bad == 0, float(bad), n, note=f"{in_band} in boundary band"
    )


def suite_werner(rng, n, tol) -> SuiteResult:
    err = abs(bisect_werner() - 1.0 / 3.0)
    return SuiteResult("werner threshold", _ok(err, tol), float(err), 1)


def suite_det_pt(rng, n, tol) -> SuiteResult:
    worst = 0.0
    for _ in range(n):
        rho = random_density(rng)
        worst = max(worst, abs(det_pt(rho) - det_pt_from_coeffs(params_from_state(rho))))
    return SuiteResult("det of partial transpose", _ok(worst, tol), float(worst), n)


def suite_decompose(rng, n, tol) -> SuiteResult:
    worst = 0.0
    for _ in range(n):
        x = random_bloch(rng)
        worst = max(worst, np.max(np.abs(decompose(reconstruct(x)).flat() - x.flat())))
    return SuiteResult("bloch round trip", _ok(worst, tol), float(worst), n)


SUITES: Dict[str, tuple[Callable, str]] = {
    "identities": (suite_identities, "identities"),
    "bloch round trip": (suite_decompose, "product"),
    "bloch product": (suite_product, "product"),
    "power closed forms": (suite_powers, "powers"),
    "L<->B conversion": (suite_conversion, "conversion"),
    "LU equivalence": (suite_lu, "lu_pairs"),
    "characteristic roots": (suite_roots, "roots"),
    "permutation traces": (suite_perm_traces, "perm_traces"),
    "det of partial transpose": (suite_det_pt, "roots"),
    "werner threshold": (suite_werner, "identities"),
    "detector agreement": (suite_agreement, "agreement"),
}


@dataclass
class SelftestReport:
    profile: str
    seed: int
    tol: float
    results: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def as_dict(self) -> dict:
        return {
            "profile": self.profile,
            "seed": self.seed,
            "tol": self.tol,
            "passed": self.passed,
            "suites": [r.as_dict() for r in self.results],
        }


def run_selftest(profile: str = "quick", seed: int = 0, tol: float = 1e-8) -> SelftestReport:
    cfg = SelftestConfig.profile(profile)
    children = np.random.SeedSequence(seed).spawn(len(SUITES))
    report = SelftestReport(profile, seed, tol)
    for (name, (fn, size_key)), child in zip(SUITES.items(), children):
        t0 = time.perf_counter()
        res = fn(np.random.default_rng(child), getattr(cfg, size_key), tol)
        res = SuiteResult(res.name, res.passed, res.worst, res.samples, time.perf_counter() - t0, res.note)
        report.results.append(res)
    return report
