import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bell_projector, seeds
from lubargmann.entanglement import (
    BOUNDARY_BAND,
    bargmann_lhs,
    bell_diagonal_entangled,
    bisect_werner,
    det_pt,
    det_pt_from_coeffs,
    eigen_positivity,
    is_entangled_bargmann,
    is_entangled_makhlin,
    is_entangled_ppt,
    makhlin_sides,
    positivity_check,
    werner_threshold,
)
from lubargmann.invariants import bargmann_direct
from lubargmann.states import (
    StateParams,
    bell_diagonal,
    params_from_state,
    random_density,
    state_from_params,
    werner,
)

MIXED = np.eye(4) / 4
KET00 = np.diag([1.0, 0, 0, 0]).astype(complex)


def verdicts(rho):
    return (
        is_entangled_ppt(rho),
        is_entangled_makhlin(params_from_state(rho)),
        is_entangled_bargmann(bargmann_direct(rho)),
    )


def test_ppt_examples():
    v = is_entangled_ppt(MIXED)
    assert not v.entangled and np.isclose(v.margin, 1 / 256)
    v = is_entangled_ppt(bell_projector())
    assert v.entangled and np.isclose(v.margin, -1 / 16)
    assert is_entangled_ppt(werner(0.5)).entangled
    with pytest.raises(ValueError):
        is_entangled_ppt(np.eye(4))


@pytest.mark.parametrize("w", [0.0, 0.2, 0.34, 0.5, 0.9, 1.0])
def test_makhlin_on_werner(w):
    lhs, rhs = makhlin_sides(params_from_state(werner(w)))
    assert np.isclose(lhs, 1 + 6 * w**4 - 8 * w**3)
    assert np.isclose(rhs, 9 * w**4 + 6 * w**2)
    assert is_entangled_makhlin(params_from_state(werner(w))).entangled == (w > 1 / 3)


def test_makhlin_maximally_mixed():
    lhs, rhs = makhlin_sides(StateParams.zero())
    assert (lhs, rhs) == (1, 0)
    assert not is_entangled_makhlin(StateParams.zero()).entangled


def test_bargmann_examples():
    assert np.isclose(bargmann_lhs(bargmann_direct(bell_projector())), -0.5)
    assert is_entangled_bargmann(bargmann_direct(bell_projector())).entangled
    assert np.isclose(bargmann_lhs(bargmann_direct(MIXED)), 1.09375)
    assert not is_entangled_bargmann(bargmann_direct(MIXED)).entangled
    v = is_entangled_bargmann(bargmann_direct(KET00))
    assert np.isclose(bargmann_lhs(bargmann_direct(KET00)), 1)
    assert v.boundary and not v.entangled


@given(seeds)
def test_margin_scalings(seed):
    """Makhlin margin is -256 det and Bargmann margin is -24 det."""
    rho = random_density(seed)
    d = det_pt(rho)
    ppt, mak, bar = verdicts(rho)
    assert np.isclose(mak.margin, -256 * d, atol=1e-12)
    assert np.isclose(bar.margin, -24 * d, atol=1e-12)


@given(seeds)
def test_det_two_ways(seed):
    rho = random_density(seed)
    assert abs(det_pt(rho) - det_pt_from_coeffs(params_from_state(rho))) < 1e-10


def test_three_way_agreement(rng):
    for _ in range(500):
        rho = random_density(rng, rank=int(rng.integers(1, 5)))
        vs = verdicts(rho)
        if any(v.boundary for v in vs):
            continue
        assert len({v.entangled for v in vs}) == 1


def test_werner_threshold():
    assert werner_threshold() == 1 / 3
    assert abs(bisect_werner() - 1 / 3) < 1e-9
    for det in (det_pt, lambda r: -(lambda s: s[1] - s[0])(makhlin_sides(params_from_state(r)))):
        assert abs(bisect_werner(det) - 1 / 3) < 1e-9
    with pytest.raises(ValueError):
        bisect_werner(lo=0.5, hi=1.0)


def test_werner_at_threshold_is_boundary():
    for v in verdicts(werner(1 / 3)):
        assert v.boundary and not v.entangled


@pytest.mark.parametrize(
    "t, expected", [((0.5, 0.5, -0.5), True), ((0.3, 0.3, 0.3), False), ((-1, -1, -1), True)]
)
def test_bell_diagonal_examples(t, expected):
    assert bell_diagonal_entangled(*t) == expected
    assert all(v.entangled == expected for v in verdicts(bell_diagonal(*t)))


def test_bell_diagonal_outside():
    with pytest.raises(ValueError):
        bell_diagonal_entangled(1, 1, 1)


@given(st.tuples(*[st.floats(-1, 1)] * 3))
def test_bell_diagonal_closed_form(t):
    from lubargmann.states import in_bell_tetrahedron

    if not in_bell_tetrahedron(*t) or abs(sum(map(abs, t)) - 1) < 1e-6:
        return
    expected = bell_diagonal_entangled(*t)
    assert all(v.entangled == expected for v in verdicts(bell_diagonal(*t)))


def test_boundary_band_semantics():
    v = is_entangled_bargmann(bargmann_direct(werner(1 / 3 + 1e-12)))
    assert v.boundary and not v.entangled and abs(v.margin) <= BOUNDARY_BAND
    assert v.as_dict()["boundary"] is True


def test_positivity_examples():
    r = positivity_check(StateParams.zero())
    assert r.psd and r.consistent
    r = positivity_check(params_from_state(bell_projector()))
    assert r.psd and r.consistent
    r = positivity_check(StateParams(np.zeros(3), np.zeros(3), -1.5 * np.eye(3)))
    assert not r.psd and r.violated and r.consistent


def test_positivity_matches_eigenvalues(rng):
    """Random unit-trace Hermitian operators: the three verdicts coincide."""
    for _ in range(2000):
        scale = rng.uniform(0.1, 1.5)
        p = StateParams(
            scale * rng.uniform(-1, 1, 3), scale * rng.uniform(-1, 1, 3), scale * rng.uniform(-1, 1, (3, 3))
        )
        ev = np.linalg.eigvalsh(state_from_params(p)).min()
        if abs(ev) < 1e-6:
            continue
        r = positivity_check(p)
        assert r.eigen_psd == (ev >= 0)
        assert r.consistent, (r, ev)


def test_eigen_positivity():
    assert eigen_positivity(MIXED)
    assert not eigen_positivity(np.diag([1.1, -0.1, 0, 0]))
