"""Regenerate the pinned regression energies and the CLI golden files under tests/data.

    python scripts/make_fixtures.py
"""

import json
import pathlib
import subprocess
import sys

from curved_kepler.model import ManifoldKind, ModelParams
from curved_kepler.oracle import extrapolated_energies

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"

GOLDEN_COMMANDS = {
    "spectrum_sphere.csv": ["spectrum", "--manifold", "sphere", "--n", "0", "--l", "0", "--kmax", "2"],
    "oracle_sphere.json": ["oracle", "--manifold", "sphere", "--n", "0", "--l", "0", "--count", "1",
                           "--grid", "2000", "--format", "json"],
    "compare_pseudosphere.csv": ["compare", "--manifold", "pseudosphere", "--n", "1", "--l", "0",
                                 "--kmax", "1", "--grid", "400", "--theta-max", "12"],
}


def pins():
    # Richardson limits from 1000, 2000 and 4000 cells
    out = {"grid": 4000, "method": "richardson 1000/2000/4000", "levels": {}}
    for name, kind, theta_max in [
        ("sphere", ManifoldKind.sphere(), None),
        ("pseudosphere-plus", ManifoldKind.pseudosphere("plus"), 20.0),
    ]:
        energies = extrapolated_energies(kind, ModelParams(), 0, 0, 2, 4000, theta_max)
        out["levels"][name] = {"theta_max": theta_max, "n": 0, "l": 0, "energies": [float(e) for e in energies]}
    return out


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "pinned.json").write_text(json.dumps(pins(), indent=2) + "\n")
    golden = DATA / "golden"
    golden.mkdir(exist_ok=True)
    for fname, argv in GOLDEN_COMMANDS.items():
        result = subprocess.run([sys.executable, "-m", "curved_kepler", *argv], check=True, capture_output=True)
        (golden / fname).write_bytes(result.stdout)
    (golden / "commands.json").write_text(json.dumps(GOLDEN_COMMANDS, indent=2) + "\n")


if __name__ == "__main__":
    main()
