# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled tridiagonal kernels.

Mirrors ``_kernels_py`` operation for operation; keep the two in sync.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt, INFINITY

cnp.import_array()

cdef double SAFMIN = 2.2250738585072014e-308
cdef double EPS = 2.220446049250313e-16


cdef inline double _max(double a, double b) nogil:
    return a if a > b else b


cdef double _pivmin(double[::1] e2) nogil:
    cdef Py_ssize_t i
    cdef double m = 1.0
    for i in range(e2.shape[0]):
        if e2[i] > m:
            m = e2[i]
    return SAFMIN * m


cdef Py_ssize_t _count(double[::1] d, double[::1] e2, Py_ssize_t n,
                       double sigma, double pivmin) nogil:
    cdef Py_ssize_t i, cnt
    cdef double q = d[0] - sigma
    if fabs(q) <= pivmin:
        q = -pivmin
    cnt = 1 if q < 0.0 else 0
    for i in range(1, n):
        q = (d[i] - sigma) - e2[i - 1] / q
        if fabs(q) <= pivmin:
            q = -pivmin
        if q < 0.0:
            cnt += 1
    return cnt


def sturm_count(d, e, double sigma):
    cdef double[::1] dv = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] ev = np.ascontiguousarray(e, dtype=np.float64)
    cdef double[::1] e2 = np.empty(ev.shape[0])
    cdef Py_ssize_t i
    for i in range(ev.shape[0]):
        e2[i] = ev[i] * ev[i]
    return _count(dv, e2, dv.shape[0], sigma, _pivmin(e2))


def bisect_eigenvalues(d, e, Py_ssize_t count, double rtol, double atol):
    cdef double[::1] dv = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] ev = np.ascontiguousarray(e, dtype=np.float64)
    cdef Py_ssize_t n = dv.shape[0]
    cdef double[::1] e2 = np.empty(ev.shape[0])
    cdef Py_ssize_t i, j, c
    for i in range(ev.shape[0]):
        e2[i] = ev[i] * ev[i]
    cdef double pivmin = _pivmin(e2)
    cdef double glo = INFINITY, ghi = -INFINITY, r, pad
    cdef double lo, hi, width, tol, mid

    out_arr = np.empty(count)
    cdef double[::1] out = out_arr
    lower_arr = np.empty(count)
    upper_arr = np.empty(count)
    cdef double[::1] lower = lower_arr
    cdef double[::1] upper = upper_arr

    with nogil:
        for i in range(n):
            r = 0.0
            if i > 0:
                r += fabs(ev[i - 1])
            if i < n - 1:
                r += fabs(ev[i])
            if dv[i] - r < glo:
                glo = dv[i] - r
            if dv[i] + r > ghi:
                ghi = dv[i] + r
        pad = 2.0 * EPS * _max(fabs(glo), fabs(ghi)) + 2.0 * pivmin
        glo -= pad
        ghi += pad
        for i in range(count):
            lower[i] = glo
            upper[i] = ghi

        for j in range(count):
            lo = lower[j]
            hi = upper[j]
            while True:
                width = hi - lo
                tol = rtol * _max(fabs(lo), fabs(hi))
                if tol < atol:
                    tol = atol
                if width <= tol:
                    break
                mid = 0.5 * (lo + hi)
                if mid <= lo or mid >= hi:
                    break
                c = _count(dv, e2, n, mid, pivmin)
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
    return out_arr


cdef double _norm(double[::1] v) nogil:
    cdef Py_ssize_t i
    cdef double s = 0.0
    for i in range(v.shape[0]):
        s += v[i] * v[i]
    return sqrt(s)


def inverse_iteration(d, e, double lam, double tol, int maxit):
    cdef double[::1] dv = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] ev = np.ascontiguousarray(e, dtype=np.float64)
    cdef Py_ssize_t n = dv.shape[0]
    cdef Py_ssize_t i, j
    cdef int it = 0, done = 0
    cdef double r, s, tnorm = 0.0, pivtol, fact, temp, nrm, res = INFINITY

    b_arr = np.empty(n)
    a_arr = np.array(ev, dtype=np.float64)
    c_arr = np.array(ev, dtype=np.float64)
    du2_arr = np.zeros(n - 2 if n > 2 else 0)
    swap_arr = np.zeros(n - 1 if n > 1 else 0, dtype=np.uint8)
    v_arr = np.empty(n)
    cdef double[::1] b = b_arr
    cdef double[::1] a = a_arr
    cdef double[::1] c = c_arr
    cdef double[::1] du2 = du2_arr
    cdef unsigned char[::1] swap = swap_arr
    cdef double[::1] v = v_arr

    for i in range(n):
        v[i] = ((i * 7919) % 1009 + 1) / 1009.0

    with nogil:
        for i in range(n):
            r = fabs(dv[i])
            if i > 0:
                r += fabs(ev[i - 1])
            if i < n - 1:
                r += fabs(ev[i])
            if r > tnorm:
                tnorm = r
        pivtol = EPS * tnorm
        if pivtol < SAFMIN:
            pivtol = SAFMIN

        for i in range(n):
            b[i] = dv[i] - lam
        for i in range(n - 1):
            if fabs(b[i]) >= fabs(a[i]):
                if fabs(b[i]) < pivtol:
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
                swap[i] = 1
        if fabs(b[n - 1]) < pivtol:
            b[n - 1] = pivtol if b[n - 1] >= 0.0 else -pivtol

        for it in range(1, maxit + 1):
            nrm = _norm(v)
            for i in range(n):
                v[i] = v[i] / nrm
            for i in range(n - 1):
                if swap[i]:
                    temp = v[i]
                    v[i] = v[i + 1]
                    v[i + 1] = temp - a[i] * v[i + 1]
                else:
                    v[i + 1] = v[i + 1] - a[i] * v[i]
            v[n - 1] = v[n - 1] / b[n - 1]
            if n > 1:
                v[n - 2] = (v[n - 2] - c[n - 2] * v[n - 1]) / b[n - 2]
            for i in range(n - 3, -1, -1):
                v[i] = (v[i] - c[i] * v[i + 1] - du2[i] * v[i + 2]) / b[i]
            nrm = _norm(v)
            for i in range(n):
                v[i] = v[i] / nrm

            s = 0.0
            for i in range(n):
                r = (dv[i] - lam) * v[i]
                if i > 0:
                    r += ev[i - 1] * v[i - 1]
                if i < n - 1:
                    r += ev[i] * v[i + 1]
                s += r * r
            res = sqrt(s)
            if res <= tol * tnorm:
                done = 1
                break
        if not done:
            it = -1

        for i in range(n):
            if v[i] != 0.0:
                if v[i] < 0.0:
                    for j in range(n):
                        v[j] = -v[j]
                break
    return v_arr, it, res
