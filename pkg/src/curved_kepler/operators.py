"""Laplace-Beltrami operators on separable modes and the self-adjoint radial form.

Three discretisations of the same radial operator live here, on purpose:

* :func:`apply_full_laplacian_mode` takes the full manifold Laplacian term by
  term, with the theta part in divergence form ``(1/rho) d(rho df)``;
* :func:`radial_operator_apply` takes the separated radial equation with
  pointwise central differences for ``f''`` and ``f'``;
* :func:`sturm_liouville_form` builds the symmetric matrix that the
  eigensolver diagonalises.

The first two agree to O(h^2), which is how the transcription between them
is checked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridTooSmall
from .grid import RadialGrid
from .model import (
    ManifoldKind,
    ModelParams,
    centrifugal_coefficient,
    check_domain,
    reduced_potential,
)

MIN_STENCIL_NODES = 5


@dataclass(frozen=True, eq=False)
class SeparableMode:
    """Radial samples of ``f(theta) exp(i n phi) exp(i l psi)``."""

    f: np.ndarray
    n: int
    l: int
    grid: RadialGrid

    def __post_init__(self):
        if len(self.f) != self.grid.size:
            raise ValueError(f"{len(self.f)} samples for a grid of {self.grid.size} nodes")


@dataclass(frozen=True, eq=False)
class SturmLiouvilleForm:
    """Symmetric tridiagonal matrix ``S = D^(1/2) M D^(-1/2)``, ``D = diag(weight)``.

    ``M`` is the flux-form discretisation of
    ``-f'' - w f' + W f + (2 m R^2 / hbar^2) V f``. Eigenvalues of ``S``
    times ``scale`` are energies.
    """

    diag: np.ndarray
    offdiag: np.ndarray
    weight: np.ndarray
    scale: float
    face_weight: np.ndarray
    potential: np.ndarray
    grid: RadialGrid

    @property
    def size(self) -> int:
        return len(self.diag)

    def matrix(self) -> np.ndarray:
        """Dense symmetric matrix."""
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def flux_matrix(self) -> np.ndarray:
        """Dense, non-symmetric flux-form matrix ``M``."""
        h2 = self.grid.step**2
        fw = self.face_weight[1:-1]
        upper = -fw / (h2 * self.weight[:-1])
        lower = -fw / (h2 * self.weight[1:])
        return np.diag(self.diag) + np.diag(upper, 1) + np.diag(lower, -1)

    def to_symmetric(self, f) -> np.ndarray:
        return np.sqrt(self.weight) * np.asarray(f, dtype=float)

    def from_symmetric(self, g) -> np.ndarray:
        return np.asarray(g, dtype=float) / np.sqrt(self.weight)


def _stencil(grid: RadialGrid, f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if grid.size < MIN_STENCIL_NODES:
        raise GridTooSmall(f"need at least {MIN_STENCIL_NODES} nodes, got {grid.size}")
    if len(f) != grid.size:
        raise ValueError(f"{len(f)} samples for a grid of {grid.size} nodes")
    return f


def apply_full_laplacian_mode(kind: ManifoldKind, p: ModelParams, mode: SeparableMode) -> np.ndarray:
    """``R^2 * Laplacian`` of the separable mode, divided by its phase, at interior nodes.

    Interior nodes are all nodes except the first and the last. The mode's
    ``n`` rides on the psi derivatives and ``l`` on the phi derivatives; with
    this pairing the operator reproduces the separated radial equation (the
    opposite pairing swaps the roles of n and l in the centrifugal term).
    The pseudosphere operator carries ``+(m/I) R^2`` only.
    """
    grid = mode.grid
    f = _stencil(grid, mode.f)
    t = check_domain(kind, grid.nodes[1:-1])
    h = grid.step

    rho = grid.weight(t)
    rho_plus = grid.weight(t + 0.5 * h)
    rho_minus = grid.weight(t - 0.5 * h)
    radial = (rho_plus * (f[2:] - f[1:-1]) - rho_minus * (f[1:-1] - f[:-2])) / (h * h * rho)

    if kind.is_sphere:
        s, c = np.sin(t), np.cos(t)
    else:
        s, c = np.sinh(t), np.cosh(t)
    s2 = s * s
    d_phi = 1j * mode.l
    d_psi = 1j * mode.n
    coeff = (
        -2.0 * c / s2 * (d_phi * d_psi)
        + (p.mass_ratio * s2 + c * c) / s2 * (d_psi * d_psi)
        + 1.0 / s2 * (d_phi * d_phi)
    )
    assert np.all(coeff.imag == 0.0)
    return radial + coeff.real * f[1:-1]


def radial_operator_apply(kind: ManifoldKind, p: ModelParams, n: int, l: int, f, grid: RadialGrid) -> np.ndarray:
    """``f'' + w f' - W f`` at interior nodes, ``w = cot`` (``coth``), central differences."""
    f = _stencil(grid, f)
    t = check_domain(kind, grid.nodes[1:-1])
    h = grid.step
    d2 = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / (h * h)
    d1 = (f[2:] - f[:-2]) / (2.0 * h)
    w = 1.0 / np.tan(t) if kind.is_sphere else 1.0 / np.tanh(t)
    return d2 + w * d1 - centrifugal_coefficient(kind, p, n, l, t) * f[1:-1]


def sturm_liouville_form(kind: ManifoldKind, p: ModelParams, n: int, l: int, grid: RadialGrid) -> SturmLiouvilleForm:
    """Self-adjoint flux-form discretisation of the radial eigenproblem.

    ``M_i f = [r(i+1/2) (f_i - f_{i+1}) + r(i-1/2) (f_i - f_{i-1})] / (h^2 r_i) + (W_i + V_i) f_i``
    with ``r = sin`` (``sinh``). The left end face, and on the sphere also the
    right one, has zero weight. On the pseudosphere the right face carries
    the Dirichlet condition through an odd ghost value, which doubles its
    flux coefficient.
    """
    if grid.manifold != kind:
        raise ValueError("grid was built for a different manifold")
    if not grid.is_full:
        raise ValueError("a windowed grid cannot carry boundary conditions")
    t = grid.nodes
    h = grid.step
    N = grid.size
    check_domain(kind, t)
    faces = h * np.arange(1, N, dtype=float)
    try:
        check_domain(kind, faces)
    except DomainError as exc:
        raise DomainError(f"half-node outside the open domain: {exc}") from None

    rho = grid.weight()
    face_weight = np.empty(N + 1)
    face_weight[0] = 0.0
    face_weight[1:-1] = grid.weight(faces)
    face_weight[-1] = 0.0 if kind.is_sphere else 2.0 * grid.weight(grid.theta_max)

    potential = centrifugal_coefficient(kind, p, n, l, t) + reduced_potential(kind, p, t)
    h2 = h * h
    diag = (face_weight[:-1] + face_weight[1:]) / (h2 * rho) + potential
    offdiag = -face_weight[1:-1] / (h2 * np.sqrt(rho[:-1] * rho[1:]))
    return SturmLiouvilleForm(
        diag=diag,
        offdiag=offdiag,
        weight=rho,
        scale=p.scale,
        face_weight=face_weight,
        potential=potential,
        grid=grid,
    )
