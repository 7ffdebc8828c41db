"""Pure-Python kernels. Same contract as the compiled ``_kernels`` module.

Digon codes: 0 = lens, 1 = lune inside the first circle, 2 = lune inside the second.
Arc-pair codes: 1 = interiors cross, 2 = collinear overlap.
"""

import math

TAU = 2.0 * math.pi


def _norm(a):
    a = math.fmod(a, TAU)
    if a < 0.0:
        a += TAU
    return a


def arc_table(cx, cy, r):
    """start[k][i], extent[k][i]: open arc of circle k inside disc i (k != i)."""
    n = len(r)
    start = [[0.0] * n for _ in range(n)]
    extent = [[0.0] * n for _ in range(n)]
    for k in range(n):
        for i in range(n):
            if i == k:
                continue
            dx = cx[i] - cx[k]
            dy = cy[i] - cy[k]
            d = math.hypot(dx, dy)
            c = (r[k] * r[k] + d * d - r[i] * r[i]) / (2.0 * r[k] * d)
            half = math.acos(min(1.0, max(-1.0, c)))
            start[k][i] = _norm(math.atan2(dy, dx) - half)
            extent[k][i] = 2.0 * half
    return start, extent


def pairwise_digons(cx, cy, r, tol):
    n = len(r)
    start, extent = arc_table(cx, cy, r)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            lens = lune_i = lune_j = True
            for k in range(n):
                if k == i or k == j:
                    continue
                eps = 0.5 * tol / r[k]
                si, ei = start[k][i], extent[k][i]
                sj, ej = start[k][j], extent[k][j]
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


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _unit(a):
    s = math.sqrt(_dot(a, a))
    return (a[0] / s, a[1] / s, a[2] / s)


def _strictly_inside(a, b, n, x, tol):
    return _dot(_cross(a, x), n) > tol and _dot(_cross(x, b), n) > tol


def _minor_span(e1, e2, a, b):
    ta = math.atan2(_dot(a, e2), _dot(a, e1))
    tb = math.atan2(_dot(b, e2), _dot(b, e1))
    ext = _norm(tb - ta)
    if ext > math.pi:
        return tb, TAU - ext
    return ta, ext


def arc_pair_code(a1, b1, a2, b2, tol):
    """0 disjoint/touching, 1 interiors cross, 2 same great circle with overlap."""
    n1 = _unit(_cross(a1, b1))
    n2 = _unit(_cross(a2, b2))
    p = _cross(n1, n2)
    norm_p = math.sqrt(_dot(p, p))
    if norm_p <= tol:
        e1 = a1
        e2 = _cross(n1, a1)
        s1, x1 = _minor_span(e1, e2, a1, b1)
        s2, x2 = _minor_span(e1, e2, a2, b2)
        # open-interval overlap on the circle
        o = _norm(s2 - s1)
        if o < x1 - tol or _norm(s1 - s2) < x2 - tol:
            return 2
        return 0
    q = (p[0] / norm_p, p[1] / norm_p, p[2] / norm_p)
    for x in (q, (-q[0], -q[1], -q[2])):
        if _strictly_inside(a1, b1, n1, x, tol) and _strictly_inside(a2, b2, n2, x, tol):
            return 1
    return 0


def arc_crossings(ends, ids, tol):
    """All (p, q, code) with code != 0 among arcs; arcs sharing an endpoint id are skipped."""
    m = len(ends)
    out = []
    for p in range(m):
        ap, bp = ends[p][0:3], ends[p][3:6]
        ip = ids[p]
        for q in range(p + 1, m):
            iq = ids[q]
            if ip[0] == iq[0] or ip[0] == iq[1] or ip[1] == iq[0] or ip[1] == iq[1]:
                continue
            code = arc_pair_code(ap, bp, ends[q][0:3], ends[q][3:6], tol)
            if code:
                out.append((p, q, code))
    return out
