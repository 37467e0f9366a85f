"""Invariant and convergence suite behind ``curved-kepler check``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .analytic import closed_form_energy, gauss_2f1_polynomial, gauss_2f1_terms
from .grid import build_grid
from .model import ManifoldKind, ModelParams, PseudoSign, QuantumNumbers
from .kernels import sturm_count
from .operators import (
    SeparableMode,
    apply_full_laplacian_mode,
    radial_operator_apply,
    sturm_liouville_form,
)
from .oracle import (
    convergence_study,
    free_mode_convergence_study,
    numeric_spectrum,
    quadrature_weighted,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def naive_2f1(k: int, b: float, c: float, x: float) -> Fraction:
    """Exact sum of ``(-k)_j (b)_j / ((c)_j j!) x^j`` from explicit Pochhammer products."""
    b, c, x = Fraction(b), Fraction(c), Fraction(x)
    total = Fraction(0)
    for j in range(k + 1):
        num = math.prod((Fraction(-k + i) * (b + i) for i in range(j)), start=Fraction(1))
        den = math.prod((c + i for i in range(j)), start=Fraction(1)) * math.factorial(j)
        total += num / den * x**j
    return total


def sign_changes(values, rel_floor: float = 1e-10) -> int:
    """Sign changes of a sampled function, ignoring samples below ``rel_floor * max|values|``."""
    v = np.asarray(values, dtype=float)
    v = v[np.abs(v) > rel_floor * np.max(np.abs(v))]
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))


def transcription_discrepancy(kind: ManifoldKind, p: ModelParams, n: int, l: int,
                              profile: Callable[[np.ndarray], np.ndarray], N: int,
                              theta_max: float | None = None) -> float:
    """Max interior difference between the full-Laplacian and radial-equation operators."""
    grid = build_grid(kind, N, theta_max)
    f = profile(grid.nodes)
    full = apply_full_laplacian_mode(kind, p, SeparableMode(f, n, l, grid))
    radial = radial_operator_apply(kind, p, n, l, f, grid)
    return float(np.max(np.abs(full - radial)))


def _check(name, fn) -> CheckResult:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        return CheckResult(name, False, f"raised {type(exc).__name__}: {exc}")
    return CheckResult(name, bool(ok), detail)


def run_checks(kind: ManifoldKind, p: ModelParams, theta_max: float | None = None) -> list[CheckResult]:
    """Run every check for one manifold and parameter set."""
    results = []
    rng = np.random.default_rng(20240611)

    def hypergeometric():
        worst = 0.0
        for k in range(11):
            for _ in range(20):
                b, c, x = rng.uniform(-5, 5), rng.uniform(0.1, 5), rng.uniform(-1, 1)
                terms = gauss_2f1_terms(k, b, c, x)
                if len(terms) != k + 1:
                    return False, f"k={k}: {len(terms)} terms"
                naive = float(naive_2f1(k, b, c, x))
                got = gauss_2f1_polynomial(k, b, c, x)
                worst = max(worst, abs(got - naive) / max(abs(naive), 1e-300))
        return worst <= 1e-12, f"max relative deviation {worst:.3g}"

    def symmetry():
        qn, qm = QuantumNumbers(1, 2, 1), QuantumNumbers(-1, -2, 1)
        e_exact = closed_form_energy(kind, p, qn) == closed_form_energy(kind, p, qm)
        a = [lv.energy for lv in numeric_spectrum(kind, p, 1, 2, 3, 400, theta_max)]
        b = [lv.energy for lv in numeric_spectrum(kind, p, -1, -2, 3, 400, theta_max)]
        return e_exact and a == b, f"closed form equal: {e_exact}, numeric equal: {a == b}"

    def transcription():
        tk = kind if kind.is_sphere else ManifoldKind.pseudosphere(PseudoSign.PLUS)
        span = math.pi if kind.is_sphere else theta_max
        coeffs = rng.normal(size=4)

        def profile(t):
            return sum(c * np.cos(j * math.pi * t / span) for j, c in enumerate(coeffs))

        ratios = []
        for n, l in [(0, 0), (1, 0), (2, -1), (3, 3)]:
            d1 = transcription_discrepancy(tk, p, n, l, profile, 400, theta_max)
            d2 = transcription_discrepancy(tk, p, n, l, profile, 800, theta_max)
            ratios.append(d1 / d2)
        ok = all(3.5 <= r <= 4.5 for r in ratios)
        return ok, "refinement ratios " + ", ".join(f"{r:.3f}" for r in ratios)

    def order():
        rep = convergence_study(kind, p, 0, 0, 0, 500, theta_max)
        return 1.8 <= rep.order <= 2.2, f"observed order {rep.order:.4f}, limit {rep.extrapolated:.12g}"

    def free_mode():
        rep = free_mode_convergence_study(0, 500)
        err = abs(rep.extrapolated - 1.0)
        return err < 1e-8, f"extrapolated {rep.extrapolated:.15g}, error {err:.3g}"

    def structure():
        levels = numeric_spectrum(kind, p, 0, 0, 5, 2000, theta_max)
        grid = levels[0].eigenvector.grid
        w = grid.weight()
        gram = np.array([[quadrature_weighted(a.eigenvector.values, b.eigenvector.values, grid, w)
                          for b in levels] for a in levels])
        off = np.max(np.abs(gram - np.diag(np.diag(gram))))
        norm = np.max(np.abs(np.diag(gram) - 1.0))
        nodes = [sign_changes(lv.eigenvector.values) for lv in levels]
        energies = [lv.energy for lv in levels]
        increasing = all(b > a for a, b in zip(energies, energies[1:]))
        ok = off < 1e-6 and norm < 1e-8 and nodes == list(range(5)) and increasing
        return ok, f"max overlap {off:.2g}, norm error {norm:.2g}, sign changes {nodes}"

    def sturm():
        grid = build_grid(kind, 300, theta_max)
        form = sturm_liouville_form(kind, p, 0, 0, grid)
        levels = numeric_spectrum(kind, p, 0, 0, 6, 300, theta_max)
        lams = [lv.energy / form.scale for lv in levels]
        bad = [j for j in range(1, 6)
               if sturm_count(form.diag, form.offdiag, 0.5 * (lams[j - 1] + lams[j])) != j]
        return not bad, "counts agree at mid-gap shifts" if not bad else f"mismatch at {bad}"

    def determinism():
        a = numeric_spectrum(kind, p, 1, 1, 3, 500, theta_max)
        b = numeric_spectrum(kind, p, 1, 1, 3, 500, theta_max)
        same = all(x.energy == y.energy and np.array_equal(x.eigenvector.values, y.eigenvector.values)
                   for x, y in zip(a, b))
        return same, "bit-identical reruns" if same else "reruns differ"

    for name, fn in [
        ("hypergeometric-termination", hypergeometric),
        ("sign-flip-symmetry", symmetry),
        ("operator-transcription", transcription),
        ("convergence-order", order),
        ("free-mode-extrapolation", free_mode),
        ("spectral-structure", structure),
        ("sturm-count-consistency", sturm),
        ("determinism", determinism),
    ]:
        results.append(_check(name, fn))
    return results
