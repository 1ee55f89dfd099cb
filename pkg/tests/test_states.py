import numpy as np
import pytest
from hypothesis import given

from conftest import bell_projector, seeds
from lubargmann.states import (
    LocalUnitary,
    StateParams,
    apply_lu,
    bell_diagonal,
    in_bell_tetrahedron,
    is_psd,
    params_from_state,
    partial_trace,
    partial_transpose,
    random_density,
    random_local_unitary,
    random_unitary,
    state_from_params,
    validate_state,
    werner,
)

I4 = np.eye(4) / 4
E3 = np.diag([0, 0, 1.0])


def test_state_from_params_examples():
    assert np.allclose(state_from_params(StateParams.zero()), I4)
    w = 0.7
    p = StateParams(np.zeros(3), np.zeros(3), -w * np.eye(3))
    assert np.allclose(state_from_params(p), werner(w))
    p = StateParams([0, 0, 1], [0, 0, 1], E3)
    ket00 = np.zeros((4, 4))
    ket00[0, 0] = 1
    assert np.allclose(state_from_params(p), ket00)


def test_params_from_state_examples():
    p = params_from_state(I4)
    assert np.allclose(p.a, 0) and np.allclose(p.b, 0) and np.allclose(p.C, 0)
    p = params_from_state(werner(0.3))
    assert np.allclose(p.C, -0.3 * np.eye(3))
    with pytest.raises(ValueError):
        params_from_state(np.triu(np.ones((4, 4))))


@given(seeds)
def test_params_round_trip(seed):
    rho = random_density(seed)
    assert np.allclose(state_from_params(params_from_state(rho)), rho, atol=1e-14)


def test_werner():
    assert np.allclose(werner(0), I4)
    assert np.allclose(werner(1), bell_projector())
    assert np.allclose(np.sort(np.linalg.eigvalsh(werner(0.5))), [1 / 8, 1 / 8, 1 / 8, 5 / 8])
    for w in (-0.1, 1.1):
        with pytest.raises(ValueError):
            werner(w)


def test_bell_diagonal():
    assert np.allclose(bell_diagonal(0, 0, 0), I4)
    assert np.allclose(bell_diagonal(-1, -1, -1), bell_projector())
    ev = np.linalg.eigvalsh(bell_diagonal(1, 1, -1))
    assert np.allclose(np.sort(ev), [0, 0, 0, 1], atol=1e-14)
    assert in_bell_tetrahedron(0.3, 0.3, 0.3)
    assert not in_bell_tetrahedron(1, 1, 1)
    with pytest.raises(ValueError):
        bell_diagonal(1, 1, 1)


@given(seeds, seeds)
def test_partial_trace_of_product(s1, s2):
    rng1, rng2 = np.random.default_rng(s1), np.random.default_rng(s2)
    a = rng1.normal(size=(2, 2)) + 1j * rng1.normal(size=(2, 2))
    b = rng2.normal(size=(2, 2)) + 1j * rng2.normal(size=(2, 2))
    ra, rb = a @ a.conj().T, b @ b.conj().T
    ra, rb = ra / np.trace(ra), rb / np.trace(rb)
    rho = np.kron(ra, rb)
    assert np.allclose(partial_trace(rho, "A"), ra)
    assert np.allclose(partial_trace(rho, "B"), rb)


def test_partial_trace_index_oracle(rng):
    rho = random_density(rng)
    ref_a = np.zeros((2, 2), complex)
    ref_b = np.zeros((2, 2), complex)
    for i in range(2):
        for k in range(2):
            for j in range(2):
                ref_a[i, k] += rho[2 * i + j, 2 * k + j]
                ref_b[i, k] += rho[2 * j + i, 2 * j + k]
    assert np.allclose(partial_trace(rho, "A"), ref_a)
    assert np.allclose(partial_trace(rho, "B"), ref_b)
    assert np.allclose(partial_trace(bell_projector(), "A"), np.eye(2) / 2)
    with pytest.raises(ValueError):
        partial_trace(rho, "C")


def test_partial_transpose(rng):
    rho = random_density(rng)
    pt = partial_transpose(rho)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    assert pt[2 * i + j, 2 * k + l] == rho[2 * k + j, 2 * i + l]
    assert np.allclose(partial_transpose(pt), rho)
    assert np.isclose(np.linalg.eigvalsh(partial_transpose(bell_projector())).min(), -0.5)
    prod = np.kron(np.array([[0.7, 0.2j], [-0.2j, 0.3]]), np.eye(2) / 2)
    assert is_psd(partial_transpose(prod))


@given(seeds)
def test_random_density(seed):
    rho = random_density(seed)
    assert np.isclose(np.trace(rho), 1)
    assert np.allclose(rho, rho.conj().T)
    assert is_psd(rho)
    assert np.array_equal(rho, random_density(seed))


def test_random_density_rank():
    rho = random_density(3, rank=1)
    assert np.isclose(np.trace(rho @ rho).real, 1)


@given(seeds)
def test_random_unitary(seed):
    U = random_unitary(seed)
    assert np.allclose(U.conj().T @ U, np.eye(2), atol=1e-12)


def test_haar_first_moment():
    # E|U_00|^2 = 1/2 for Haar U(2); the phase fix matters for this to hold
    rng = np.random.default_rng(5)
    vals = [abs(random_unitary(rng)[0, 0]) ** 2 for _ in range(4000)]
    assert abs(np.mean(vals) - 0.5) < 0.02


def test_apply_lu(rng):
    rho = random_density(rng)
    assert np.allclose(apply_lu(rho, LocalUnitary(np.eye(2), np.eye(2))), rho)
    out = apply_lu(rho, random_local_unitary(rng))
    assert np.isclose(np.trace(out @ out), np.trace(rho @ rho))


def test_validate_state():
    validate_state(I4)
    with pytest.raises(ValueError):
        validate_state(np.eye(4))
    with pytest.raises(ValueError):
        validate_state(np.eye(3) / 3)
    with pytest.raises(ValueError):
        validate_state(state_from_params(StateParams(np.zeros(3), np.zeros(3), -1.5 * np.eye(3))))
