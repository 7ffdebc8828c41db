# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``_kernels_py`` exactly; see that module for codes."""

from libc.math cimport atan2, acos, fmod, hypot, sqrt, M_PI

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef double TAU = 2.0 * M_PI


cdef inline double _norm(double a) nogil:
    a = fmod(a, TAU)
    if a < 0.0:
        a += TAU
    return a


def arc_table(cx, cy, r):
    cdef double[::1] x = np.ascontiguousarray(cx, dtype=np.float64)
    cdef double[::1] y = np.ascontiguousarray(cy, dtype=np.float64)
    cdef double[::1] rr = np.ascontiguousarray(r, dtype=np.float64)
    cdef Py_ssize_t n = rr.shape[0]
    start = np.zeros((n, n), dtype=np.float64)
    extent = np.zeros((n, n), dtype=np.float64)
    _fill_arc_table(x, y, rr, start, extent)
    return start, extent


cdef void _fill_arc_table(double[::1] x, double[::1] y, double[::1] r,
                          double[:, ::1] start, double[:, ::1] extent) noexcept nogil:
    cdef Py_ssize_t n = r.shape[0]
    cdef Py_ssize_t k, i
    cdef double dx, dy, d, c, half
    for k in range(n):
        for i in range(n):
            if i == k:
                continue
            dx = x[i] - x[k]
            dy = y[i] - y[k]
            d = hypot(dx, dy)
            c = (r[k] * r[k] + d * d - r[i] * r[i]) / (2.0 * r[k] * d)
            if c > 1.0:
                c = 1.0
            elif c < -1.0:
                c = -1.0
            half = acos(c)
            start[k, i] = _norm(atan2(dy, dx) - half)
            extent[k, i] = 2.0 * half


def pairwise_digons(cx, cy, r, double tol):
    cdef double[::1] x = np.ascontiguousarray(cx, dtype=np.float64)
    cdef double[::1] y = np.ascontiguousarray(cy, dtype=np.float64)
    cdef double[::1] rr = np.ascontiguousarray(r, dtype=np.float64)
    cdef Py_ssize_t n = rr.shape[0]
    cdef double[:, ::1] start = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] extent = np.zeros((n, n), dtype=np.float64)
    cdef Py_ssize_t i, j, k
    cdef bint lens, lune_i, lune_j
    cdef double eps, si, ei, sj, ej, oij, oji, off
    _fill_arc_table(x, y, rr, start, extent)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            lens = lune_i = lune_j = True
            for k in range(n):
                if k == i or k == j:
                    continue
                eps = 0.5 * tol / rr[k]
                si = start[k, i]
                ei = extent[k, i]
                sj = start[k, j]
                ej = extent[k, j]
                oij = _norm(sj - si)
                oji = _norm(si - sj)
                if lens and not (oij >= ei - eps and oji >= ej - eps):
                    lens = False
                if lune_i:
                    off = oji - TAU if oji > TAU - eps else oji
                    if off + ei > ej + eps:
                        lune_i = False
                if lune_j:
                    off = oij - TAU if oij > TAU - eps else oij
                    if off + ej > ei + eps:
                        lune_j = False
                if not (lens or lune_i or lune_j):
                    break
            if lens:
                out.append((i, j, 0))
            if lune_i:
                out.append((i, j, 1))
            if lune_j:
                out.append((i, j, 2))
    return out


cdef inline void _cross(double* a, double* b, double* out) noexcept nogil:
    out[0] = a[1] * b[2] - a[2] * b[1]
    out[1] = a[2] * b[0] - a[0] * b[2]
    out[2] = a[0] * b[1] - a[1] * b[0]


cdef inline double _dot(double* a, double* b) noexcept nogil:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


cdef inline void _unit(double* a) noexcept nogil:
    cdef double s = sqrt(_dot(a, a))
    a[0] /= s
    a[1] /= s
    a[2] /= s


cdef inline bint _strictly_inside(double* a, double* b, double* n, double* x, double tol) noexcept nogil:
    cdef double t[3]
    _cross(a, x, t)
    if _dot(t, n) <= tol:
        return False
    _cross(x, b, t)
    return _dot(t, n) > tol


cdef inline void _minor_span(double* e1, double* e2, double* a, double* b,
                             double* s, double* ext) noexcept nogil:
    cdef double ta = atan2(_dot(a, e2), _dot(a, e1))
    cdef double tb = atan2(_dot(b, e2), _dot(b, e1))
    cdef double x = _norm(tb - ta)
    if x > M_PI:
        s[0] = tb
        ext[0] = TAU - x
    else:
        s[0] = ta
        ext[0] = x


cdef int _arc_pair_code(double* a1, double* b1, double* a2, double* b2, double tol) noexcept nogil:
    cdef double n1[3]
    cdef double n2[3]
    cdef double p[3]
    cdef double e2[3]
    cdef double q[3]
    cdef double norm_p, s1, x1, s2, x2, sign
    cdef int t
    _cross(a1, b1, n1)
    _unit(n1)
    _cross(a2, b2, n2)
    _unit(n2)
    _cross(n1, n2, p)
    norm_p = sqrt(_dot(p, p))
    if norm_p <= tol:
        _cross(n1, a1, e2)
        _minor_span(a1, e2, a1, b1, &s1, &x1)
        _minor_span(a1, e2, a2, b2, &s2, &x2)
        if _norm(s2 - s1) < x1 - tol or _norm(s1 - s2) < x2 - tol:
            return 2
        return 0
    for t in range(2):
        sign = 1.0 if t == 0 else -1.0
        q[0] = sign * p[0] / norm_p
        q[1] = sign * p[1] / norm_p
        q[2] = sign * p[2] / norm_p
        if _strictly_inside(a1, b1, n1, q, tol) and _strictly_inside(a2, b2, n2, q, tol):
            return 1
    return 0


def arc_pair_code(a1, b1, a2, b2, double tol):
    cdef double A1[3]
    cdef double B1[3]
    cdef double A2[3]
    cdef double B2[3]
    cdef int t
    for t in range(3):
        A1[t] = a1[t]
        B1[t] = b1[t]
        A2[t] = a2[t]
        B2[t] = b2[t]
    return _arc_pair_code(A1, B1, A2, B2, tol)


def arc_crossings(ends, ids, double tol):
    cdef double[:, ::1] e = np.ascontiguousarray(ends, dtype=np.float64).reshape(-1, 6)
    cdef cnp.int64_t[:, ::1] v = np.ascontiguousarray(ids, dtype=np.int64).reshape(-1, 2)
    cdef Py_ssize_t m = e.shape[0]
    cdef Py_ssize_t p, q
    cdef int code
    out = []
    for p in range(m):
        for q in range(p + 1, m):
            if v[p, 0] == v[q, 0] or v[p, 0] == v[q, 1] or v[p, 1] == v[q, 0] or v[p, 1] == v[q, 1]:
                continue
            code = _arc_pair_code(&e[p, 0], &e[p, 3], &e[q, 0], &e[q, 3], tol)
            if code:
                out.append((p, q, code))
    return out
