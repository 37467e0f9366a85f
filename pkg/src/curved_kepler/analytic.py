"""Closed-form energy levels and polynomial radial wavefunctions.

The closed forms are implemented verbatim, including the term linear in
``k`` and the product ``|n+l| |n-l|``. They are not adjusted to agree with
the numeric oracle; the comparison report shows how far apart the two are.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, PochhammerPole
from .model import KappaNu, ManifoldKind, ModelParams, QuantumNumbers, validate_params


@dataclass(frozen=True)
class AnalyticLevel:
    qn: QuantumNumbers
    energy: float
    kappa_nu: KappaNu


def _exact_terms(k: int, b: float, c: float, x: float) -> list[Fraction]:
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    k = int(k)
    b, c, x = Fraction(b), Fraction(c), Fraction(x)
    t = Fraction(1)
    terms = [t]
    for j in range(k):
        denom = c + j
        if denom == 0:
            raise PochhammerPole(float(c), j + 1)
        t = t * (j - k) * (b + j) * x / (denom * (j + 1))
        terms.append(t)
    return terms


def gauss_2f1_terms(k: int, b: float, c: float, x: float) -> list[float]:
    """The ``k + 1`` terms of the terminating series F(-k, b; c; x).

    Forward recurrence ``t[j+1] = t[j] (j - k)(b + j) x / ((c + j)(j + 1))``
    from ``t[0] = 1``. A further term would carry the factor ``(j - k) = 0``.
    """
    return [float(t) for t in _exact_terms(k, b, c, x)]


def gauss_2f1_polynomial(k: int, b: float, c: float, x: float) -> float:
    """F(-k, b; c; x) summed over exactly ``k + 1`` terms.

    The float inputs are taken as exact rationals and the recurrence and
    left-to-right sum run in rational arithmetic, so the single rounding at
    the end makes the result correctly rounded even next to a root of the
    polynomial, where a float sum loses all relative accuracy.
    """
    total = Fraction(0)
    for t in _exact_terms(k, b, c, x):
        total += t
    return float(total)


def closed_form_energy(kind: ManifoldKind, p: ModelParams, qn: QuantumNumbers) -> float:
    """Energy level of the state ``(n, l, k)``.

    Sphere::

        E = -hbar^2/(2 m R^2) * ((k + |n+l||n-l|) - (((m/I)R^2 + 1) n^2 - 4 n l - 2 a))

    Pseudosphere: the same with ``+`` before the second bracket and
    ``+-(m/I)R^2`` according to the sign branch. ``a`` is the dimensionless
    coupling ``m R alpha / hbar^2``, which equals ``alpha`` in natural units.
    """
    validate_params(p)
    n, l, k = qn.n, qn.l, qn.k
    kn = qn.kappa_nu
    first = k + kn.kappa * kn.nu
    second = (kind.sign_factor * p.mass_ratio + 1.0) * (n * n) - 4.0 * n * l - 2.0 * p.alpha_tilde
    bracket = first - second if kind.is_sphere else first + second
    return -p.scale * bracket


def radial_wavefunction_value(kind: ManifoldKind, p: ModelParams, qn: QuantumNumbers, theta):
    """Unnormalized radial function

    ``sin^kappa cos^nu F(-k, k + kappa + nu; 1 + kappa; sin theta)`` on the
    sphere (sinh/cosh on the pseudosphere). The sphere form is only evaluated
    on ``(0, pi/2]``, where ``sin`` is one-to-one.
    """
    t = np.asarray(theta, dtype=float)
    if not np.all(np.isfinite(t)) or np.any(t <= 0.0):
        raise DomainError("theta must be > 0")
    if kind.is_sphere:
        if np.any(t > math.pi / 2):
            raise DomainError("sphere wavefunction is only defined for theta in (0, pi/2]")
        s, c = np.sin(t), np.cos(t)
    else:
        s, c = np.sinh(t), np.cosh(t)
    kn = qn.kappa_nu
    b = qn.k + kn.kappa + kn.nu
    cc = 1 + kn.kappa
    prefactor = s**kn.kappa * c**kn.nu
    if qn.k == 0:
        value = prefactor
    else:
        poly = np.vectorize(lambda x: gauss_2f1_polynomial(qn.k, b, cc, x), otypes=[float])
        value = prefactor * poly(s)
    return float(value) if t.ndim == 0 else value


def analytic_spectrum(kind: ManifoldKind, p: ModelParams, n: int, l: int, k_max: int) -> list[AnalyticLevel]:
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    levels = []
    for k in range(k_max + 1):
        qn = QuantumNumbers(n, l, k)
        levels.append(AnalyticLevel(qn, closed_form_energy(kind, p, qn), qn.kappa_nu))
    return levels
