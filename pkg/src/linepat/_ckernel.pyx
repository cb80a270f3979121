# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernel``; identical results on bounded integers.

``Walker`` needs every coordinate within ``WALK_LIMIT`` so all cross and dot
products fit in 64 bits.  ``line_orders`` needs every line coefficient within
``LINE_LIMIT``; order comparisons then fit in 128 bits.
"""

from libc.stdlib cimport malloc, free

from linepat._pykernel import WalkError

cdef extern from *:
    """
    typedef __int128 lp_i128;
    """
    ctypedef long long lp_i128

WALK_LIMIT = 1 << 28
LINE_LIMIT = 1 << 20

cdef int R = 1


cdef inline int _sgn(long long v) nogil:
    return (v > 0) - (v < 0)


cdef class Walker:
    cdef long long* xs
    cdef long long* ys
    cdef Py_ssize_t n

    def __cinit__(self, xs, ys):
        cdef Py_ssize_t i
        self.n = len(xs)
        if len(ys) != self.n:
            raise ValueError("coordinate arrays differ in length")
        self.xs = <long long*> malloc(max(self.n, 1) * sizeof(long long))
        self.ys = <long long*> malloc(max(self.n, 1) * sizeof(long long))
        if self.xs == NULL or self.ys == NULL:
            raise MemoryError()
        for i in range(self.n):
            if abs(xs[i]) > WALK_LIMIT or abs(ys[i]) > WALK_LIMIT:
                raise OverflowError("coordinate outside the compiled kernel range")
            self.xs[i] = xs[i]
            self.ys[i] = ys[i]

    def __dealloc__(self):
        free(self.xs)
        free(self.ys)

    cdef Py_ssize_t _next(self, Py_ssize_t k, Py_ssize_t k1, int dk, int* dk1_out) nogil:
        # returns the next index, -1 for an unbounded exit, -2 for parallel input
        cdef long long cx = self.xs[k1], cy = self.ys[k1]
        cdef long long turn = self.xs[k] * cy - self.ys[k] * cx
        if turn == 0:
            return -2
        cdef int dk1 = dk if turn < 0 else 1 - dk
        dk1_out[0] = dk1
        cdef long long sigma = -1 if dk1 == R else 1
        cdef long long ux = self.xs[k] - cx, uy = self.ys[k] - cy
        cdef long long fx = cx, fy = cy
        if sigma * (ux * fy - uy * fx) < 0:
            fx = -fx
            fy = -fy

        cdef long long bx = 0, by = 0, vx, vy, c0
        cdef bint found = False
        cdef Py_ssize_t i
        for i in range(self.n):
            if i == k1:
                continue
            vx = self.xs[i] - cx
            vy = self.ys[i] - cy
            c0 = ux * vy - uy * vx
            if c0 == 0:
                continue
            if sigma * c0 < 0:
                vx = -vx
                vy = -vy
            if sigma * (vx * fy - vy * fx) <= 0:
                continue
            if not found or sigma * (bx * vy - by * vx) < 0:
                bx = vx
                by = vy
                found = True
        if not found:
            return -1

        cdef long long o = ux * cy - uy * cx
        cdef long long cv = bx * cy - by * cx
        cdef long long st = 1 if (o > 0) == (cv > 0) else -1
        cdef long long wx = -st * bx, wy = -st * by
        cdef long long tau, dx, dy
        cdef long long fp = 0, lp = 0, fn = 0, ln = 0
        cdef Py_ssize_t ifp = -1, ilp = -1, ifn = -1, iln = -1
        for i in range(self.n):
            if i == k1:
                continue
            dx = self.xs[i] - cx
            dy = self.ys[i] - cy
            if bx * dy - by * dx != 0:
                continue
            tau = dx * wx + dy * wy
            if tau > 0:
                if ifp < 0 or tau < fp:
                    fp = tau
                    ifp = i
                if ilp < 0 or tau > lp:
                    lp = tau
                    ilp = i
            else:
                if ifn < 0 or tau < fn:
                    fn = tau
                    ifn = i
                if iln < 0 or tau > ln:
                    ln = tau
                    iln = i
        if dk == dk1:
            return iln if iln >= 0 else ilp
        return ifp if ifp >= 0 else ifn

    def next_side(self, Py_ssize_t k, Py_ssize_t k1, int dk):
        cdef int dk1 = 0
        cdef Py_ssize_t r = self._next(k, k1, dk, &dk1)
        if r == -2:
            raise ValueError("consecutive sides are parallel")
        if r == -1:
            return None
        return r, dk1

    def walk(self, Py_ssize_t i1, Py_ssize_t i2, int d1, Py_ssize_t max_steps):
        cdef Py_ssize_t a = i1, b = i2, c, step
        cdef int d = d1, d2 = 0
        sides = []
        for step in range(max_steps):
            c = self._next(a, b, d, &d2)
            if c == -2:
                raise ValueError("consecutive sides are parallel")
            if c == -1:
                return None
            sides.append((a, d))
            a = b
            b = c
            d = d2
            if a == i1 and b == i2 and d == d1:
                return sides
        raise WalkError(f"walk from ({i1}, {i2}, {d1}) did not close in {max_steps} steps")


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


def line_orders(coeffs):
    cdef Py_ssize_t n = len(coeffs), i, j, p, q, m, cnt, npairs
    cdef long long *ca
    cdef long long *cb
    cdef long long *cc
    cdef long long *px
    cdef long long *py
    cdef long long *pw
    cdef long long *num
    cdef Py_ssize_t *idx
    cdef long long w, x, y, g, key_n, key_w
    cdef lp_i128 lhs, rhs
    cdef Py_ssize_t tmp

    npairs = n * (n - 1) // 2 if n > 1 else 1
    ca = <long long*> malloc(max(n, 1) * sizeof(long long))
    cb = <long long*> malloc(max(n, 1) * sizeof(long long))
    cc = <long long*> malloc(max(n, 1) * sizeof(long long))
    px = <long long*> malloc(npairs * sizeof(long long))
    py = <long long*> malloc(npairs * sizeof(long long))
    pw = <long long*> malloc(npairs * sizeof(long long))
    num = <long long*> malloc(max(n, 1) * sizeof(long long))
    idx = <Py_ssize_t*> malloc(max(n, 1) * sizeof(Py_ssize_t))
    try:
        if not (ca and cb and cc and px and py and pw and num and idx):
            raise MemoryError()
        for i in range(n):
            a, b, c = coeffs[i]
            if abs(a) > LINE_LIMIT or abs(b) > LINE_LIMIT or abs(c) > LINE_LIMIT:
                raise OverflowError("line coefficient outside the compiled kernel range")
            ca[i] = a
            cb[i] = b
            cc[i] = c

        with nogil:
            p = 0
            for i in range(n):
                for j in range(i + 1, n):
                    w = ca[i] * cb[j] - ca[j] * cb[i]
                    x = cc[i] * cb[j] - cc[j] * cb[i]
                    y = ca[i] * cc[j] - ca[j] * cc[i]
                    if w < 0:
                        w = -w
                        x = -x
                        y = -y
                    if w != 0:
                        g = _gcd(_gcd(x, y), w)
                        w //= g
                        x //= g
                        y //= g
                    px[p] = x
                    py[p] = y
                    pw[p] = w
                    p += 1

        ids = {}
        vertices = []
        orders = []
        for i in range(n):
            with nogil:
                cnt = 0
                for j in range(n):
                    if j == i:
                        continue
                    if i < j:
                        p = i * n - i * (i + 1) // 2 + (j - i - 1)
                    else:
                        p = j * n - j * (j + 1) // 2 + (i - j - 1)
                    if pw[p] == 0:
                        continue
                    num[cnt] = -cb[i] * px[p] + ca[i] * py[p]
                    idx[cnt] = p
                    cnt += 1
                # insertion sort by num/pw, ties are the same vertex
                for q in range(1, cnt):
                    key_n = num[q]
                    tmp = idx[q]
                    key_w = pw[tmp]
                    m = q - 1
                    while m >= 0:
                        lhs = <lp_i128> num[m] * <lp_i128> key_w
                        rhs = <lp_i128> key_n * <lp_i128> pw[idx[m]]
                        if lhs <= rhs:
                            break
                        num[m + 1] = num[m]
                        idx[m + 1] = idx[m]
                        m -= 1
                    num[m + 1] = key_n
                    idx[m + 1] = tmp
            row = []
            last = None
            for q in range(cnt):
                p = idx[q]
                key = (px[p], py[p], pw[p])
                if key == last:
                    continue
                last = key
                vid = ids.get(key)
                if vid is None:
                    vid = len(vertices)
                    ids[key] = vid
                    vertices.append(key)
                row.append(vid)
            orders.append(row)
        return vertices, orders
    finally:
        free(ca)
        free(cb)
        free(cc)
        free(px)
        free(py)
        free(pw)
        free(num)
        free(idx)
