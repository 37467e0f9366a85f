"""Uniform cell-centred grids in the angular radial variable theta = r / R."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadGridSpec
from .model import ManifoldKind

MIN_CELLS = 8


@dataclass(frozen=True, eq=False)
class RadialGrid:
    """``cells`` cells of width ``step`` covering ``(0, pi)`` or ``(0, theta_max)``.

    Nodes sit at cell centres ``(i - 1/2) * step``, so both ends of the
    interval are cell faces. On the sphere both end faces carry zero weight
    (``sin`` vanishes there); on the pseudosphere the left face does and the
    right face at ``theta_max`` carries a homogeneous Dirichlet condition.

    A grid returned by :meth:`window` keeps only a leading run of nodes; it is
    meant for pointwise operators and quadrature, not for building matrices.
    """

    manifold: ManifoldKind
    cells: int
    step: float
    nodes: np.ndarray
    theta_max: float | None = None

    @classmethod
    def uniform(cls, kind: ManifoldKind, cells: int, theta_max: float | None = None) -> "RadialGrid":
        if kind.is_sphere:
            span = math.pi
        else:
            span = float(theta_max)
        h = span / cells
        nodes = h * (np.arange(1, cells + 1) - 0.5)
        nodes.setflags(write=False)
        return cls(kind, int(cells), h, nodes, None if kind.is_sphere else float(theta_max))

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def span(self) -> float:
        return math.pi if self.manifold.is_sphere else self.theta_max

    @property
    def is_full(self) -> bool:
        return self.size == self.cells

    def weight(self, theta=None) -> np.ndarray:
        """Measure weight sin(theta) or sinh(theta), at the nodes by default."""
        t = self.nodes if theta is None else np.asarray(theta, dtype=float)
        return np.sin(t) if self.manifold.is_sphere else np.sinh(t)

    def window(self, upper: float) -> "RadialGrid":
        keep = self.nodes[self.nodes <= upper].copy()
        keep.setflags(write=False)
        return RadialGrid(self.manifold, self.cells, self.step, keep, self.theta_max)


def build_grid(kind: ManifoldKind, N: int, theta_max: float | None = None) -> RadialGrid:
    """Uniform grid with ``N`` cells.

    ``theta_max`` is required on the pseudosphere and rejected on the sphere.
    """
    if isinstance(N, bool) or int(N) != N or N < MIN_CELLS:
        raise BadGridSpec(f"N must be an integer >= {MIN_CELLS}, got {N!r}")
    if kind.is_sphere:
        if theta_max is not None:
            raise BadGridSpec("theta_max is only meaningful on the pseudosphere")
    else:
        if theta_max is None or not (math.isfinite(theta_max) and theta_max > 0):
            raise BadGridSpec(f"pseudosphere grid needs theta_max > 0, got {theta_max!r}")
    return RadialGrid.uniform(kind, int(N), theta_max)


class Normalization(enum.Enum):
    RAW = "raw"
    UNIT_NORM = "unit"


@dataclass(frozen=True, eq=False)
class WavefunctionSamples:
    grid: RadialGrid
    values: np.ndarray
    normalization: Normalization = Normalization.RAW

    def __post_init__(self):
        if len(self.values) != self.grid.size:
            raise ValueError(f"{len(self.values)} samples for a grid of {self.grid.size} nodes")
