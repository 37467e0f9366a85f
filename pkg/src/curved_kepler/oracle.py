"""Finite-difference ground truth for the radial eigenproblems.

Eigenvalues come from Sturm-sequence bisection on the symmetric tridiagonal
form, eigenvectors from inverse iteration. Both are in-repo (see
:mod:`curved_kepler.kernels`) so the oracle does not lean on LAPACK.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .errors import ClusterWarning, CountOutOfRange, LengthMismatch, NoConvergence
from .grid import Normalization, RadialGrid, WavefunctionSamples, build_grid
from .model import ManifoldKind, ModelParams, potential_value, validate_params
from .operators import radial_operator_apply, sturm_liouville_form

EIG_RTOL = 1e-12
EIG_ATOL = 1e-14
INVIT_TOL = 1e-9
INVIT_MAXIT = 50
DEFAULT_THETA_MAX = 20.0
MIN_STUDY_CELLS = 250


@dataclass(frozen=True, eq=False)
class NumericLevel:
    index: int
    energy: float
    eigenvector: WavefunctionSamples
    residual: float


@dataclass(frozen=True)
class ConvergenceReport:
    grid_sizes: tuple[int, ...]
    estimates: tuple[float, ...]
    order: float
    extrapolated: float


def eigen_tridiagonal(diag, offdiag, count: int) -> np.ndarray:
    """The ``count`` smallest eigenvalues of a symmetric tridiagonal matrix, ascending.

    Bisection stops when the bracket is narrower than ``1e-12`` relative
    (``1e-14`` absolute near zero). Eigenvalues closer than that come back
    equal and trigger a :class:`ClusterWarning`.
    """
    diag = np.ascontiguousarray(diag, dtype=float)
    offdiag = np.ascontiguousarray(offdiag, dtype=float)
    n = len(diag)
    if len(offdiag) != max(n - 1, 0):
        raise LengthMismatch(f"offdiag has {len(offdiag)} entries for a {n}x{n} matrix")
    if isinstance(count, bool) or int(count) != count or not 1 <= count <= n:
        raise CountOutOfRange(f"count must lie in [1, {n}], got {count!r}")
    vals = kernels.bisect_eigenvalues(diag, offdiag, int(count), EIG_RTOL, EIG_ATOL)
    for j in range(1, len(vals)):
        if vals[j] - vals[j - 1] <= max(EIG_RTOL * abs(vals[j]), EIG_ATOL):
            warnings.warn(
                f"eigenvalues {j - 1} and {j} are not separated by the bisection tolerance",
                ClusterWarning,
                stacklevel=2,
            )
    return np.asarray(vals)


def eigenvector_inverse_iteration(diag, offdiag, lam: float) -> np.ndarray:
    """Unit 2-norm eigenvector for the eigenvalue approximated by ``lam``.

    The sign is fixed so that the first nonzero component is positive.
    """
    diag = np.ascontiguousarray(diag, dtype=float)
    offdiag = np.ascontiguousarray(offdiag, dtype=float)
    if len(offdiag) != max(len(diag) - 1, 0):
        raise LengthMismatch("offdiag must be one shorter than diag")
    vec, iterations, _ = kernels.inverse_iteration(diag, offdiag, float(lam), INVIT_TOL, INVIT_MAXIT)
    if iterations < 0:
        raise NoConvergence(INVIT_MAXIT)
    return np.asarray(vec)


def quadrature_weighted(f, g, grid: RadialGrid, weight) -> float:
    """Approximate the integral of ``f g weight`` over the grid span.

    On the cell-centred grid this is the composite midpoint rule; values at
    the end faces do not enter, which matches the zero-flux ends.
    """
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    weight = np.asarray(weight, dtype=float)
    if not (len(f) == len(g) == len(weight) == grid.size):
        raise LengthMismatch(
            f"lengths differ: f={len(f)}, g={len(g)}, weight={len(weight)}, grid={grid.size}"
        )
    return float(grid.step * math.fsum(f * g * weight))


def normalize(values, grid: RadialGrid) -> WavefunctionSamples:
    values = np.asarray(values, dtype=float)
    norm = math.sqrt(quadrature_weighted(values, values, grid, grid.weight()))
    return WavefunctionSamples(grid, values / norm, Normalization.UNIT_NORM)


def ode_residual(kind: ManifoldKind, p: ModelParams, n: int, l: int, E: float, f, grid: RadialGrid) -> float:
    """Weighted 2-norm, over interior nodes, of the radial equation evaluated on ``(E, f)``."""
    f = np.asarray(f, dtype=float)
    op = radial_operator_apply(kind, p, n, l, f, grid)
    t = grid.nodes[1:-1]
    r = op + p.potential_factor * (E - potential_value(kind, p, t)) * f[1:-1]
    return math.sqrt(grid.step * math.fsum(grid.weight(t) * r * r))


def _resolve_theta_max(kind: ManifoldKind, theta_max):
    if kind.is_sphere:
        return theta_max
    return DEFAULT_THETA_MAX if theta_max is None else theta_max


def numeric_eigenvalues(kind: ManifoldKind, p: ModelParams, n: int, l: int, count: int, N: int,
                        theta_max: float | None = None) -> np.ndarray:
    """Energies only (no eigenvectors) of the ``count`` lowest levels on an ``N``-cell grid."""
    validate_params(p)
    if count == 0:
        return np.empty(0)
    grid = build_grid(kind, N, _resolve_theta_max(kind, theta_max))
    form = sturm_liouville_form(kind, p, n, l, grid)
    return form.scale * eigen_tridiagonal(form.diag, form.offdiag, count)


def numeric_spectrum(kind: ManifoldKind, p: ModelParams, n: int, l: int, count: int, N: int,
                     theta_max: float | None = None) -> list[NumericLevel]:
    """Lowest ``count`` levels with unit-normalised eigenfunctions and ODE residuals.

    ``theta_max`` defaults to 20 on the pseudosphere and must be omitted on
    the sphere.
    """
    validate_params(p)
    if count < 0:
        raise CountOutOfRange(f"count must be >= 0, got {count}")
    grid = build_grid(kind, N, _resolve_theta_max(kind, theta_max))
    if count == 0:
        return []
    form = sturm_liouville_form(kind, p, n, l, grid)
    lams = eigen_tridiagonal(form.diag, form.offdiag, count)
    levels = []
    for j, lam in enumerate(lams):
        g = eigenvector_inverse_iteration(form.diag, form.offdiag, lam)
        samples = normalize(form.from_symmetric(g), grid)
        energy = form.scale * float(lam)
        res = ode_residual(kind, p, n, l, energy, samples.values, grid)
        levels.append(NumericLevel(j, energy, samples, res))
    return levels


def richardson(estimates: Sequence[float], ratio: float = 2.0, order: float = 2.0) -> tuple[float, float]:
    """Observed order and extrapolated limit from three successive refinements.

    The extrapolation assumes the nominal ``order`` of the scheme; the
    observed order is returned separately so the two can be compared.
    """
    e1, e2, e4 = estimates[-3:]
    d1 = abs(e1 - e2)
    d2 = abs(e2 - e4)
    observed = math.log(d1 / d2, ratio) if d1 > 0 and d2 > 0 else math.nan
    factor = ratio**order
    return observed, e4 + (e4 - e2) / (factor - 1.0)


def _study(solve: Callable[[int], float], N0: int) -> ConvergenceReport:
    sizes = (N0, 2 * N0, 4 * N0)
    estimates = tuple(float(solve(N)) for N in sizes)
    order, extrapolated = richardson(estimates)
    return ConvergenceReport(sizes, estimates, order, extrapolated)


def convergence_study(kind: ManifoldKind, p: ModelParams, n: int, l: int, level: int, N0: int,
                      theta_max: float | None = None) -> ConvergenceReport:
    """Solve on ``N0``, ``2 N0`` and ``4 N0`` cells and Richardson-extrapolate one level."""
    if N0 < MIN_STUDY_CELLS:
        raise ValueError(f"N0 must be >= {MIN_STUDY_CELLS}, got {N0}")
    return _study(lambda N: numeric_eigenvalues(kind, p, n, l, level + 1, N, theta_max)[level], N0)


def toeplitz_laplacian(N: int, span: float = math.pi) -> tuple[np.ndarray, np.ndarray]:
    """Free Dirichlet mode: unit weight and no potential on ``(0, span)``, vertex grid of ``N`` steps.

    The matrix is the Toeplitz ``(2, -1) / h^2`` of order ``N - 1``.
    """
    h = span / N
    diag = np.full(N - 1, 2.0 / (h * h))
    offdiag = np.full(N - 2, -1.0 / (h * h))
    return diag, offdiag


def toeplitz_eigenvalue(N: int, j: int = 0, span: float = math.pi) -> float:
    """Closed form ``(2 - 2 cos((j + 1) pi / N)) / h^2`` of the free Dirichlet mode."""
    h = span / N
    return (2.0 - 2.0 * math.cos((j + 1) * math.pi / N)) / (h * h)


def free_mode_convergence_study(level: int, N0: int, span: float = math.pi) -> ConvergenceReport:
    """Convergence study of the free mode, whose continuum limit is ``((level + 1) pi / span)^2``."""
    if N0 < MIN_STUDY_CELLS:
        raise ValueError(f"N0 must be >= {MIN_STUDY_CELLS}, got {N0}")

    def solve(N):
        diag, offdiag = toeplitz_laplacian(N, span)
        return eigen_tridiagonal(diag, offdiag, level + 1)[level]

    return _study(solve, N0)


def extrapolated_energies(kind: ManifoldKind, p: ModelParams, n: int, l: int, count: int, N: int,
                          theta_max: float | None = None) -> np.ndarray:
    """Richardson-extrapolated energies from ``N/4``, ``N/2`` and ``N`` cells (``N`` divisible by 4)."""
    if N % 4:
        raise ValueError(f"extrapolation needs N divisible by 4, got {N}")
    if count == 0:
        return np.empty(0)
    runs = [numeric_eigenvalues(kind, p, n, l, count, m, theta_max) for m in (N // 4, N // 2, N)]
    return np.array([richardson([r[j] for r in runs])[1] for j in range(count)])


def theta_max_shift(kind: ManifoldKind, p: ModelParams, n: int, l: int, N: int, theta_max: float) -> float:
    """Change of the lowest level when the pseudosphere box grows to ``1.5 theta_max`` at fixed step."""
    base = numeric_eigenvalues(kind, p, n, l, 1, N, theta_max)[0]
    wide = numeric_eigenvalues(kind, p, n, l, 1, round(1.5 * N), 1.5 * theta_max)[0]
    return float(abs(wide - base))
