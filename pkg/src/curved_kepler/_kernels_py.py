"""Pure-Python tridiagonal kernels.

This is the reference implementation; ``_kernels.pyx`` performs the same
floating-point operations in the same order, so both backends return
bit-identical results.
"""

import math

import numpy as np

SAFMIN = 2.2250738585072014e-308
EPS = 2.220446049250313e-16


def _start_vector(n):
    # deterministic, not orthogonal to any eigenvector in practice
    return [((i * 7919) % 1009 + 1) / 1009.0 for i in range(n)]


def sturm_count(d, e, sigma):
    """Number of eigenvalues of the symmetric tridiagonal (d, e) strictly below sigma."""
    d = [float(x) for x in d]
    e2 = [float(x) * float(x) for x in e]
    pivmin = SAFMIN * max([1.0] + e2)
    return _count(d, e2, len(d), float(sigma), pivmin)


def _count(d, e2, n, sigma, pivmin):
    q = d[0] - sigma
    if abs(q) <= pivmin:
        q = -pivmin
    cnt = 1 if q < 0.0 else 0
    for i in range(1, n):
        q = (d[i] - sigma) - e2[i - 1] / q
        if abs(q) <= pivmin:
            q = -pivmin
        if q < 0.0:
            cnt += 1
    return cnt


def bisect_eigenvalues(d, e, count, rtol, atol):
    """The ``count`` smallest eigenvalues, ascending, by Sturm-sequence bisection."""
    d = [float(x) for x in d]
    e = [float(x) for x in e]
    n = len(d)
    e2 = [x * x for x in e]
    pivmin = SAFMIN * max([1.0] + e2)

    glo = math.inf
    ghi = -math.inf
    for i in range(n):
        r = 0.0
        if i > 0:
            r += abs(e[i - 1])
        if i < n - 1:
            r += abs(e[i])
        if d[i] - r < glo:
            glo = d[i] - r
        if d[i] + r > ghi:
            ghi = d[i] + r
    pad = 2.0 * EPS * max(abs(glo), abs(ghi)) + 2.0 * pivmin
    glo -= pad
    ghi += pad

    lower = [glo] * count
    upper = [ghi] * count
    out = np.empty(count)
    for j in range(count):
        lo = lower[j]
        hi = upper[j]
        while True:
            width = hi - lo
            tol = rtol * max(abs(lo), abs(hi))
            if tol < atol:
                tol = atol
            if width <= tol:
                break
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            c = _count(d, e2, n, mid, pivmin)
            for i in range(j, count):
                if i < c:
                    if mid < upper[i]:
                        upper[i] = mid
                elif mid > lower[i]:
                    lower[i] = mid
            if c > j:
                hi = mid
            else:
                lo = mid
        out[j] = 0.5 * (lo + hi)
    return out


def _lu(d, e, lam, pivtol):
    n = len(d)
    b = [x - lam for x in d]
    a = list(e)
    c = list(e)
    du2 = [0.0] * max(n - 2, 0)
    swap = [False] * max(n - 1, 0)
    for i in range(n - 1):
        if abs(b[i]) >= abs(a[i]):
            if abs(b[i]) < pivtol:
                b[i] = pivtol if b[i] >= 0.0 else -pivtol
            fact = a[i] / b[i]
            a[i] = fact
            b[i + 1] = b[i + 1] - fact * c[i]
        else:
            fact = b[i] / a[i]
            b[i] = a[i]
            a[i] = fact
            temp = c[i]
            c[i] = b[i + 1]
            b[i + 1] = temp - fact * b[i + 1]
            if i < n - 2:
                du2[i] = c[i + 1]
                c[i + 1] = -fact * du2[i]
            swap[i] = True
    if abs(b[n - 1]) < pivtol:
        b[n - 1] = pivtol if b[n - 1] >= 0.0 else -pivtol
    return a, b, c, du2, swap


def _solve(a, b, c, du2, swap, x):
    n = len(b)
    for i in range(n - 1):
        if swap[i]:
            temp = x[i]
            x[i] = x[i + 1]
            x[i + 1] = temp - a[i] * x[i + 1]
        else:
            x[i + 1] = x[i + 1] - a[i] * x[i]
    x[n - 1] = x[n - 1] / b[n - 1]
    if n > 1:
        x[n - 2] = (x[n - 2] - c[n - 2] * x[n - 1]) / b[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - c[i] * x[i + 1] - du2[i] * x[i + 2]) / b[i]


def _norm(v):
    s = 0.0
    for x in v:
        s += x * x
    return math.sqrt(s)


def _residual(d, e, lam, v):
    n = len(d)
    s = 0.0
    for i in range(n):
        r = (d[i] - lam) * v[i]
        if i > 0:
            r += e[i - 1] * v[i - 1]
        if i < n - 1:
            r += e[i] * v[i + 1]
        s += r * r
    return math.sqrt(s)


def inverse_iteration(d, e, lam, tol, maxit):
    """Inverse iteration for the eigenvector nearest ``lam``.

    Returns ``(vector, iterations, residual)``; ``iterations == -1`` signals
    that ``maxit`` was exhausted without reaching ``tol``.
    """
    d = [float(x) for x in d]
    e = [float(x) for x in e]
    lam = float(lam)
    n = len(d)
    tnorm = 0.0
    for i in range(n):
        r = abs(d[i])
        if i > 0:
            r += abs(e[i - 1])
        if i < n - 1:
            r += abs(e[i])
        if r > tnorm:
            tnorm = r
    pivtol = EPS * tnorm
    if pivtol < SAFMIN:
        pivtol = SAFMIN
    a, b, c, du2, swap = _lu(d, e, lam, pivtol)

    v = _start_vector(n)
    res = math.inf
    for it in range(1, maxit + 1):
        nrm = _norm(v)
        v = [x / nrm for x in v]
        _solve(a, b, c, du2, swap, v)
        nrm = _norm(v)
        v = [x / nrm for x in v]
        res = _residual(d, e, lam, v)
        if res <= tol * tnorm:
            break
    else:
        it = -1

    for x in v:
        if x != 0.0:
            if x < 0.0:
                v = [-y for y in v]
            break
    return np.array(v), it, res
