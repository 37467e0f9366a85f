import json
import pathlib

import pytest

from curved_kepler.model import ManifoldKind, ModelParams

DATA = pathlib.Path(__file__).parent / "data"

ACCEPTANCE = {}


@pytest.fixture
def sphere():
    return ManifoldKind.sphere()


@pytest.fixture
def pseudo():
    return ManifoldKind.pseudosphere("plus")


@pytest.fixture
def ref():
    return ModelParams()


@pytest.fixture(scope="session")
def pinned():
    return json.loads((DATA / "pinned.json").read_text())


@pytest.fixture
def accept(request):
    """Record one acceptance criterion's outcome, then assert it."""

    def record(number, ok, detail):
        ACCEPTANCE[number] = (bool(ok), detail)
        assert ok, f"criterion {number}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}")
