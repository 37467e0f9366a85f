import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curved_kepler.errors import ClusterWarning, CountOutOfRange, LengthMismatch
from curved_kepler.grid import build_grid
from curved_kepler.model import ModelParams
from curved_kepler.oracle import (
    convergence_study,
    eigen_tridiagonal,
    eigenvector_inverse_iteration,
    extrapolated_energies,
    normalize,
    numeric_eigenvalues,
    numeric_spectrum,
    quadrature_weighted,
    richardson,
    theta_max_shift,
)


def test_eigen_tridiagonal_small():
    np.testing.assert_allclose(eigen_tridiagonal([2, 2], [-1], 2), [1, 3], rtol=1e-12)
    assert list(eigen_tridiagonal([5], [], 1)) == [5.0]


def test_eigen_tridiagonal_laplacian():
    n = 100
    got = eigen_tridiagonal(np.full(n, 2.0), np.full(n - 1, -1.0), n)
    exact = 2 - 2 * np.cos(np.arange(1, n + 1) * np.pi / (n + 1))
    np.testing.assert_allclose(got, exact, rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize("count", [0, 3, -1, 1.5])
def test_eigen_tridiagonal_count(count):
    with pytest.raises(CountOutOfRange):
        eigen_tridiagonal([2, 2], [-1], count)


def test_eigen_tridiagonal_length_mismatch():
    with pytest.raises(LengthMismatch):
        eigen_tridiagonal([2, 2], [-1, 0], 1)


def test_cluster_warning():
    with pytest.warns(ClusterWarning):
        eigen_tridiagonal([1.0, 1.0], [0.0], 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.integers(0, 2**32 - 1))
def test_eigen_tridiagonal_matches_dense(n, seed):
    rng = np.random.default_rng(seed)
    d = rng.normal(size=n)
    e = rng.uniform(0.1, 1.0, size=n - 1) * rng.choice([-1, 1], size=n - 1)
    dense = np.linalg.eigvalsh(np.diag(d) + np.diag(e, 1) + np.diag(e, -1))
    count = int(rng.integers(1, n + 1))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ClusterWarning)
        got = eigen_tridiagonal(d, e, count)
    np.testing.assert_allclose(got, dense[:count], rtol=1e-10, atol=1e-12)
    assert np.array_equal(got, eigen_tridiagonal(d, e, count))


def test_inverse_iteration_small():
    s = 1 / math.sqrt(2)
    np.testing.assert_allclose(eigenvector_inverse_iteration([2, 2], [-1], 1.0), [s, s], rtol=1e-12)
    np.testing.assert_allclose(eigenvector_inverse_iteration([2, 2], [-1], 3.0), [s, -s], rtol=1e-12)


def test_inverse_iteration_laplacian():
    n = 50
    d, e = np.full(n, 2.0), np.full(n - 1, -1.0)
    lam = eigen_tridiagonal(d, e, 1)[0]
    v = eigenvector_inverse_iteration(d, e, lam)
    exact = np.sin(np.arange(1, n + 1) * np.pi / (n + 1))
    np.testing.assert_allclose(v, exact / np.linalg.norm(exact), atol=1e-9)
    T = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    assert np.linalg.norm(T @ v - lam * v) <= 1e-9 * np.max(np.sum(np.abs(T), axis=1))


def test_quadrature_and_normalize(sphere):
    g = build_grid(sphere, 400)
    # integral of sin over (0, pi) is 2
    assert quadrature_weighted(np.ones(g.size), np.ones(g.size), g, g.weight()) == pytest.approx(2.0, rel=1e-5)
    s = normalize(np.cos(g.nodes) + 2, g)
    assert quadrature_weighted(s.values, s.values, g, g.weight()) == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(LengthMismatch):
        quadrature_weighted(np.ones(3), np.ones(g.size), g, g.weight())


def test_numeric_spectrum_basic(sphere, ref):
    assert numeric_spectrum(sphere, ref, 0, 0, 0, 100) == []
    levels = numeric_spectrum(sphere, ref, 0, 0, 3, 400)
    assert [lv.index for lv in levels] == [0, 1, 2]
    assert levels[0].energy == pytest.approx(-2.0, abs=5e-4)
    assert all(lv.residual >= 0 for lv in levels)
    np.testing.assert_array_equal([lv.energy for lv in levels], numeric_eigenvalues(sphere, ref, 0, 0, 3, 400))


def test_numeric_spectrum_count_bounds(sphere, ref):
    with pytest.raises(CountOutOfRange):
        numeric_spectrum(sphere, ref, 0, 0, -1, 100)
    with pytest.raises(CountOutOfRange):
        numeric_spectrum(sphere, ref, 0, 0, 17, 16)


def test_residual_shrinks_with_refinement(sphere, ref):
    coarse = numeric_spectrum(sphere, ref, 1, 0, 1, 200)[0].residual
    fine = numeric_spectrum(sphere, ref, 1, 0, 1, 400)[0].residual
    assert fine < coarse / 2.5


def test_richardson():
    # exact for c + a h^2
    order, limit = richardson([1 + 4.0, 1 + 1.0, 1 + 0.25])
    assert order == pytest.approx(2.0) and limit == pytest.approx(1.0)
    order, _ = richardson([1.0, 1.0, 1.0])
    assert math.isnan(order)


def test_convergence_study_guard(sphere, ref):
    with pytest.raises(ValueError):
        convergence_study(sphere, ref, 0, 0, 0, 100)


def test_pseudosphere_order(pseudo, ref):
    rep = convergence_study(pseudo, ref, 0, 0, 0, 250, 20.0)
    assert 1.8 <= rep.order <= 2.2
    assert rep.extrapolated == pytest.approx(-2.0, abs=1e-5)


def test_extrapolated_energies(sphere, ref):
    with pytest.raises(ValueError):
        extrapolated_energies(sphere, ref, 0, 0, 1, 402)
    e = extrapolated_energies(sphere, ref, 0, 0, 2, 800)
    assert e[0] == pytest.approx(-2.0, abs=1e-8)
    assert e[1] == pytest.approx(7 / 9, abs=1e-7)


def test_theta_max_shift_small_for_bound_state(pseudo, ref):
    assert theta_max_shift(pseudo, ref, 0, 0, 400, 20.0) < 1e-8


def test_scaling_with_parameters(sphere):
    # m R^2 / I and m R alpha / hbar^2 held fixed: only the energy unit hbar^2 / (2 m R^2) changes
    p1 = ModelParams()
    p2 = ModelParams(mass=1.0, inertia=4.0, radius=2.0, alpha=0.5, hbar=1.0)
    e1 = numeric_eigenvalues(sphere, p1, 1, 1, 2, 200)
    e2 = numeric_eigenvalues(sphere, p2, 1, 1, 2, 200)
    np.testing.assert_allclose(e2, e1 / 4, rtol=1e-12)
