import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curved_kepler import _kernels_py, kernels

try:
    from curved_kepler import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

needs_ext = pytest.mark.skipif(_kernels_c is None, reason="compiled extension not built")


def random_tridiagonal(seed, n):
    rng = np.random.default_rng(seed)
    d = rng.normal(size=n) * 10
    e = rng.uniform(0.1, 2.0, size=n - 1) * rng.choice([-1, 1], size=n - 1)
    return d, e


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    if _kernels_c is not None:
        assert kernels.BACKEND == "cython"


def test_sturm_count_examples():
    d, e = np.array([2.0, 2.0]), np.array([-1.0])
    assert [_kernels_py.sturm_count(d, e, s) for s in (0.5, 1.5, 3.5)] == [0, 1, 2]


@needs_ext
@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 60))
def test_backends_bit_identical(seed, n):
    d, e = random_tridiagonal(seed, n)
    count = min(n, 5)
    a = _kernels_py.bisect_eigenvalues(d, e, count, 1e-12, 1e-14)
    b = _kernels_c.bisect_eigenvalues(d, e, count, 1e-12, 1e-14)
    assert np.array_equal(np.asarray(a), np.asarray(b))
    for lam in a:
        va, ia, ra = _kernels_py.inverse_iteration(d, e, float(lam), 1e-9, 50)
        vb, ib, rb = _kernels_c.inverse_iteration(d, e, float(lam), 1e-9, 50)
        assert ia == ib and ra == rb
        assert np.array_equal(np.asarray(va), np.asarray(vb))
    sigma = float(np.mean(d))
    assert _kernels_py.sturm_count(d, e, sigma) == _kernels_c.sturm_count(d, e, sigma)


@needs_ext
def test_backends_agree_on_oracle_matrix(sphere, ref):
    from curved_kepler.grid import build_grid
    from curved_kepler.operators import sturm_liouville_form

    form = sturm_liouville_form(sphere, ref, 0, 0, build_grid(sphere, 300))
    a = _kernels_py.bisect_eigenvalues(form.diag, form.offdiag, 3, 1e-12, 1e-14)
    b = _kernels_c.bisect_eigenvalues(form.diag, form.offdiag, 3, 1e-12, 1e-14)
    assert np.array_equal(np.asarray(a), np.asarray(b))


def test_pure_python_switch():
    code = "from curved_kepler import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, CURVED_KEPLER_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
