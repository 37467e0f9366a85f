"""Spectrum reports and their CSV / JSON serialisation.

Numbers are written with 17 significant digits (``%.17g``), so parsing a
report back recovers every float bit for bit. Output contains no
timestamps; identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .analytic import analytic_spectrum, closed_form_energy, radial_wavefunction_value
from .grid import build_grid
from .model import Manifold, ManifoldKind, ModelParams, PseudoSign, QuantumNumbers, validate_params
from .oracle import (
    DEFAULT_THETA_MAX,
    extrapolated_energies,
    normalize,
    numeric_spectrum,
    ode_residual,
    theta_max_shift,
)

GENERATED_BY = f"curved_kepler {__version__}"
REL_DIFF_GUARD = 1e-300
CSV_HEADER = ["manifold", "n", "l", "level", "E_analytic", "E_numeric", "rel_diff", "residual"]
LEVEL_FIELDS = CSV_HEADER[1:]
ALIGNMENT_NOTE = "analytic level k is paired with the k-th lowest numeric level"


def rel_diff(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), REL_DIFF_GUARD)


@dataclass(frozen=True)
class LevelRow:
    level: int
    E_analytic: float | None = None
    E_numeric: float | None = None
    residual: float | None = None

    @property
    def rel_diff(self) -> float | None:
        if self.E_analytic is None or self.E_numeric is None:
            return None
        return rel_diff(self.E_analytic, self.E_numeric)


@dataclass(frozen=True)
class SpectrumReport:
    manifold: ManifoldKind
    params: ModelParams
    n: int
    l: int
    levels: tuple[LevelRow, ...] = ()
    grid_N: int | None = None
    theta_max: float | None = None
    theta_max_shift: float | None = None
    energies: str = "closed-form"
    natural_units: tuple[str, ...] = field(default_factory=tuple)
    generated_by: str = GENERATED_BY


def _fmt(x) -> str:
    return "" if x is None else "%.17g" % x


def to_json_text(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, float):
        # JSON has no inf/nan
        if not math.isfinite(x):
            return "null"
        # "-0" would parse back as the integer 0 and lose the sign
        return "-0.0" if x == 0 and math.copysign(1.0, x) < 0 else "%.17g" % x
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {to_json_text(v)}" for k, v in x.items()) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(to_json_text(v) for v in x) + "]"
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _sign_name(kind: ManifoldKind) -> str | None:
    return None if kind.is_sphere else kind.pseudo_sign.value


def report_to_dict(report: SpectrumReport) -> dict:
    levels = [
        {
            "n": report.n,
            "l": report.l,
            "level": row.level,
            "E_analytic": row.E_analytic,
            "E_numeric": row.E_numeric,
            "rel_diff": row.rel_diff,
            "residual": row.residual,
        }
        for row in report.levels
    ]
    return {
        "manifold": report.manifold.kind.value,
        "sign": _sign_name(report.manifold),
        "params": report.params.as_dict(),
        "mode": {"n": report.n, "l": report.l},
        "grid": {"N": report.grid_N, "theta_max": report.theta_max},
        "levels": levels,
        "generated_by": report.generated_by,
        "meta": {
            "energies": report.energies,
            "level_alignment": ALIGNMENT_NOTE,
            "natural_units": list(report.natural_units),
            "theta_max_shift": report.theta_max_shift,
        },
    }


def serialize_report(report: SpectrumReport, fmt: str = "csv") -> bytes:
    """CSV (one row per level) or JSON (single object) bytes for ``report``."""
    if fmt == "json":
        return (to_json_text(report_to_dict(report)) + "\n").encode()
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    name = report.manifold.kind.value
    for row in report.levels:
        writer.writerow(
            [name, report.n, report.l, row.level]
            + [_fmt(v) for v in (row.E_analytic, row.E_numeric, row.rel_diff, row.residual)]
        )
    return buf.getvalue().encode()


def _opt_float(x):
    return None if x is None else float(x)


def parse_report_json(data: bytes | str) -> SpectrumReport:
    """Inverse of ``serialize_report(..., "json")``."""
    obj = json.loads(data)
    kind = ManifoldKind(Manifold(obj["manifold"]), PseudoSign(obj["sign"] or "plus"))
    params = ModelParams(**{k: float(v) for k, v in obj["params"].items()})
    levels = tuple(
        LevelRow(
            level=int(row["level"]),
            E_analytic=_opt_float(row["E_analytic"]),
            E_numeric=_opt_float(row["E_numeric"]),
            residual=_opt_float(row["residual"]),
        )
        for row in obj["levels"]
    )
    meta = obj.get("meta", {})
    return SpectrumReport(
        manifold=kind,
        params=params,
        n=int(obj["mode"]["n"]),
        l=int(obj["mode"]["l"]),
        levels=levels,
        grid_N=obj["grid"]["N"],
        theta_max=_opt_float(obj["grid"]["theta_max"]),
        theta_max_shift=_opt_float(meta.get("theta_max_shift")),
        energies=meta.get("energies", "closed-form"),
        natural_units=tuple(meta.get("natural_units", ())),
        generated_by=obj["generated_by"],
    )


def write_atomic(path: str, payload: bytes) -> None:
    """Write ``payload`` to ``path`` through a temporary file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _theta_max(kind: ManifoldKind, theta_max):
    if kind.is_sphere:
        return None
    return DEFAULT_THETA_MAX if theta_max is None else float(theta_max)


def analytic_pair_residual(kind: ManifoldKind, p: ModelParams, qn: QuantumNumbers, N: int,
                           theta_max: float | None = None) -> float:
    """Residual of the radial equation on the closed-form (energy, wavefunction) pair.

    On the sphere the closed-form wavefunction is only evaluated up to pi/2,
    so the residual covers that half of the grid.
    """
    grid = build_grid(kind, N, _theta_max(kind, theta_max))
    if kind.is_sphere:
        grid = grid.window(np.pi / 2)
    f = radial_wavefunction_value(kind, p, qn, grid.nodes)
    samples = normalize(f, grid)
    return ode_residual(kind, p, qn.n, qn.l, closed_form_energy(kind, p, qn), samples.values, grid)


def analytic_report(kind: ManifoldKind, p: ModelParams, n: int, l: int, k_max: int,
                    natural_units=()) -> SpectrumReport:
    rows = tuple(LevelRow(lv.qn.k, E_analytic=lv.energy) for lv in analytic_spectrum(kind, p, n, l, k_max))
    return SpectrumReport(kind, p, n, l, rows, natural_units=tuple(natural_units))


def oracle_report(kind: ManifoldKind, p: ModelParams, n: int, l: int, count: int, N: int,
                  theta_max: float | None = None, extrapolate: bool = True,
                  natural_units=()) -> SpectrumReport:
    """Numeric levels; with ``extrapolate`` the energies are Richardson limits from N/4, N/2, N."""
    tm = _theta_max(kind, theta_max)
    levels = numeric_spectrum(kind, p, n, l, count, N, tm)
    energies = [lv.energy for lv in levels]
    if extrapolate:
        energies = list(extrapolated_energies(kind, p, n, l, count, N, tm))
    rows = tuple(
        LevelRow(lv.index, E_numeric=float(e), residual=lv.residual) for lv, e in zip(levels, energies)
    )
    return SpectrumReport(
        kind, p, n, l, rows,
        grid_N=N,
        theta_max=tm,
        theta_max_shift=None if tm is None else theta_max_shift(kind, p, n, l, N, tm),
        energies="richardson" if extrapolate else "raw",
        natural_units=tuple(natural_units),
    )


def compare_report(kind: ManifoldKind, p: ModelParams, n: int, l: int, k_max: int, N: int,
                   theta_max: float | None = None, extrapolate: bool = True,
                   natural_units=()) -> SpectrumReport:
    """Closed-form and numeric levels side by side.

    Row ``k`` pairs the closed-form level ``k`` with the ``k``-th lowest
    numeric level and carries the residual of the closed-form pair in the
    radial equation. Agreement is reported, not assumed.
    """
    validate_params(p)
    tm = _theta_max(kind, theta_max)
    analytic = analytic_spectrum(kind, p, n, l, k_max)
    count = k_max + 1
    if extrapolate:
        numeric = list(extrapolated_energies(kind, p, n, l, count, N, tm))
    else:
        numeric = [lv.energy for lv in numeric_spectrum(kind, p, n, l, count, N, tm)]
    rows = tuple(
        LevelRow(
            lv.qn.k,
            E_analytic=lv.energy,
            E_numeric=float(e),
            residual=analytic_pair_residual(kind, p, lv.qn, N, tm),
        )
        for lv, e in zip(analytic, numeric)
    )
    return SpectrumReport(
        kind, p, n, l, rows,
        grid_N=N,
        theta_max=tm,
        theta_max_shift=None if tm is None else theta_max_shift(kind, p, n, l, N, tm),
        energies="richardson" if extrapolate else "raw",
        natural_units=tuple(natural_units),
    )


def report_schema() -> dict:
    """JSON schema for :func:`serialize_report` output."""
    from importlib.resources import files

    return json.loads(files(__package__).joinpath("data/report.schema.json").read_text())
