"""Floating-point Newton projection onto the admissible orbit."""

import numpy as np
import pytest

from spin7 import projection
from spin7.forms import cayley_form

PHI0 = projection.form_to_array(cayley_form())
RNG_SEED = 20260823


def test_form_array_round_trip():
    assert projection.array_to_form(PHI0) == cayley_form()
    v = np.zeros(70)
    v[0] = 1.5
    assert projection.form_to_array(projection.array_to_form(v)) == \
        pytest.approx(v)


def test_fourth_exterior_power_functoriality():
    rng = np.random.default_rng(RNG_SEED)
    g = rng.standard_normal((8, 8))
    h = rng.standard_normal((8, 8))
    v = rng.standard_normal(70)
    lhs = projection.apply_map(g, projection.apply_map(h, v))
    rhs = projection.apply_map(h @ g, v)
    assert np.allclose(lhs, rhs, atol=1e-9)
    # Identity and determinant normalization.
    assert np.allclose(projection.fourth_exterior_power(np.eye(8)),
                       np.eye(70))
    top = projection.apply_map(g, PHI0)
    # A rotation keeps the norm of any 4-form.
    q, _ = np.linalg.qr(g)
    assert np.linalg.norm(projection.apply_map(q, top)) == pytest.approx(
        np.linalg.norm(top))


def test_type_projectors_are_orthogonal_resolution():
    labels = ("1", "7", "27", "35")
    total = np.zeros((70, 70))
    for la in labels:
        p = projection.type_projector(la)
        assert np.allclose(p @ p, p, atol=1e-12)
        assert np.allclose(p, p.T, atol=1e-12)
        total += p
    assert np.allclose(total, np.eye(70), atol=1e-12)
    ranks = [int(round(np.trace(projection.type_projector(la))))
             for la in labels]
    assert ranks == [1, 7, 27, 35]


def test_projection_of_an_orbit_point_recovers_it():
    rng = np.random.default_rng(RNG_SEED)
    g = np.eye(8) + 0.05 * rng.standard_normal((8, 8))
    chi = projection.apply_map(g, PHI0)
    out = projection.theta_project(chi)
    assert np.linalg.norm(out.psi) < 1e-10
    assert out.residual <= projection.TOLERANCE
    assert out.tangency_error() < 1e-9


def test_projection_splits_off_exact_rank_27_perturbations():
    rng = np.random.default_rng(RNG_SEED)
    pr27 = projection.type_projector("27")
    for _ in range(5):
        xi = pr27 @ rng.standard_normal(70)
        xi /= np.linalg.norm(xi)
        for eps in (1e-2, 1e-3):
            out = projection.theta_project(PHI0 + eps * xi)
            assert np.linalg.norm(out.psi - eps * xi) <= 100 * eps * eps
            assert out.residual <= 1e-10
            assert out.tangency_error() <= 1e-10


def test_projection_accepts_multivector_input():
    out = projection.theta_project(cayley_form())
    assert np.linalg.norm(out.psi) < 1e-12
    assert out.iterations == 0


def test_nonlinear_remainder_is_quadratically_small():
    rng = np.random.default_rng(RNG_SEED)
    slopes = []
    for _ in range(3):
        eta = rng.standard_normal(70)
        eta /= np.linalg.norm(eta)
        eps_grid = (1e-2, 1e-3, 1e-4)
        norms = [np.linalg.norm(projection.nonlinear_remainder(eps * eta))
                 for eps in eps_grid]
        slope = np.polyfit(np.log(eps_grid), np.log(norms), 1)[0]
        slopes.append(slope)
    assert all(s >= 1.9 for s in slopes)


def test_quadratic_estimate_probe_is_bounded():
    rng = np.random.default_rng(RNG_SEED)
    eta1 = rng.standard_normal(70) * 1e-3
    eta2 = rng.standard_normal(70) * 1e-3
    assert projection.quadratic_estimate_probe(eta1, eta2) < 10.0
    assert projection.quadratic_estimate_probe(eta1, eta1) == 0.0


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_far_inputs_raise_projection_error():
    with pytest.raises(projection.ProjectionError):
        projection.theta_project(-PHI0, max_iterations=5)


def test_bad_shape_rejected():
    with pytest.raises(ValueError):
        projection.theta_project(np.zeros(3))
