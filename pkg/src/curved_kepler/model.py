"""Physical parameters, quantum numbers, Kepler-Coulomb potentials and the
centrifugal coefficient of the radial equations on the sphere and pseudosphere.

All angle-valued functions accept a float or a numpy array of angles
``theta = r / R`` and return the same shape.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields

import numpy as np

from .errors import DomainError, NonPositiveParameter


class Manifold(enum.Enum):
    SPHERE = "sphere"
    PSEUDOSPHERE = "pseudosphere"


class PseudoSign(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def factor(self) -> float:
        return 1.0 if self is PseudoSign.PLUS else -1.0


@dataclass(frozen=True)
class ManifoldKind:
    """Manifold selector.

    ``pseudo_sign`` picks the branch of the ``+-(m/I) R^2`` term on the
    pseudosphere and is ignored on the sphere.
    """

    kind: Manifold = Manifold.SPHERE
    pseudo_sign: PseudoSign = PseudoSign.PLUS

    @classmethod
    def sphere(cls) -> "ManifoldKind":
        return cls(Manifold.SPHERE)

    @classmethod
    def pseudosphere(cls, sign: PseudoSign | str = PseudoSign.PLUS) -> "ManifoldKind":
        return cls(Manifold.PSEUDOSPHERE, PseudoSign(sign))

    @property
    def is_sphere(self) -> bool:
        return self.kind is Manifold.SPHERE

    @property
    def sign_factor(self) -> float:
        """+1 on the sphere, +-1 on the pseudosphere according to ``pseudo_sign``."""
        return 1.0 if self.is_sphere else self.pseudo_sign.factor

    def __eq__(self, other):
        if not isinstance(other, ManifoldKind):
            return NotImplemented
        if self.kind is not other.kind:
            return False
        return self.is_sphere or self.pseudo_sign is other.pseudo_sign

    def __hash__(self):
        return hash((self.kind, None if self.is_sphere else self.pseudo_sign))


@dataclass(frozen=True)
class ModelParams:
    """Mass, moment of inertia, curvature radius, coupling and Planck constant.

    Defaults are natural units (all ones).
    """

    mass: float = 1.0
    inertia: float = 1.0
    radius: float = 1.0
    alpha: float = 1.0
    hbar: float = 1.0

    @property
    def scale(self) -> float:
        """Energy unit hbar^2 / (2 m R^2) mapping dimensionless eigenvalues to energies."""
        return self.hbar**2 / (2.0 * self.mass * self.radius**2)

    @property
    def mass_ratio(self) -> float:
        """(m / I) R^2."""
        return self.mass / self.inertia * self.radius**2

    @property
    def alpha_tilde(self) -> float:
        """Dimensionless coupling m R alpha / hbar^2."""
        return self.mass * self.radius * self.alpha / self.hbar**2

    @property
    def potential_factor(self) -> float:
        """2 m R^2 / hbar^2, the factor multiplying E - V in the radial equation."""
        return 2.0 * self.mass * self.radius**2 / self.hbar**2

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int
    k: int = 0

    def __post_init__(self):
        for name in ("n", "l", "k"):
            if int(getattr(self, name)) != getattr(self, name):
                raise TypeError(f"{name} must be an integer")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")

    @property
    def kappa_nu(self) -> "KappaNu":
        return KappaNu.from_nl(self.n, self.l)


@dataclass(frozen=True)
class KappaNu:
    kappa: int
    nu: int

    @classmethod
    def from_nl(cls, n: int, l: int) -> "KappaNu":
        return cls(abs(n + l), abs(n - l))


def validate_params(p: ModelParams) -> ModelParams:
    """Return ``p`` unchanged if every field is finite and strictly positive.

    Raises
    ------
    NonPositiveParameter
        Naming every offending field.
    """
    bad = []
    for f in fields(p):
        v = getattr(p, f.name)
        if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
            bad.append(f.name)
    if bad:
        raise NonPositiveParameter(bad)
    return p


def check_domain(kind: ManifoldKind, theta) -> np.ndarray:
    """Return ``theta`` as a float array, raising DomainError outside the open domain."""
    t = np.asarray(theta, dtype=float)
    if not np.all(np.isfinite(t)) or np.any(t <= 0.0):
        raise DomainError(f"theta must be > 0 on the {kind.kind.value}")
    if kind.is_sphere and np.any(t >= math.pi):
        raise DomainError("theta must be < pi on the sphere")
    return t


def _trig(kind: ManifoldKind, t):
    if kind.is_sphere:
        return np.sin(t), np.cos(t)
    return np.sinh(t), np.cosh(t)


def _out(t: np.ndarray, value):
    return float(value) if t.ndim == 0 else value


def potential_value(kind: ManifoldKind, p: ModelParams, theta):
    """Kepler-Coulomb potential: -(alpha/R) cot(theta) or -(alpha/R) coth(theta)."""
    t = check_domain(kind, theta)
    s, c = _trig(kind, t)
    return _out(t, -(p.alpha / p.radius) * (c / s))


def reduced_potential(kind: ManifoldKind, p: ModelParams, theta):
    """(2 m R^2 / hbar^2) V(theta) = -2 alpha_tilde cot(theta) (coth on the pseudosphere)."""
    t = check_domain(kind, theta)
    s, c = _trig(kind, t)
    return _out(t, -2.0 * p.alpha_tilde * (c / s))


def centrifugal_coefficient(kind: ManifoldKind, p: ModelParams, n: int, l: int, theta):
    """Coefficient W(theta) multiplying f in the radial equation, before the energy term.

    Sphere::

        W = ((m/I) R^2 sin^2 + cos^2) n^2 + l^2 - 2 n l cos) / sin^2

    and the sinh/cosh analogue, with ``+-(m/I) R^2``, on the pseudosphere.
    """
    t = check_domain(kind, theta)
    s, c = _trig(kind, t)
    s2 = s * s
    w = ((kind.sign_factor * p.mass_ratio * s2 + c * c) * (n * n) + l * l - 2.0 * n * l * c) / s2
    return _out(t, w)
