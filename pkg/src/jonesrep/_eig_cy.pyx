# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled complex eigenvalue kernel; same algorithm as ``_eig_py``."""
import numpy as np

from libc.math cimport sqrt, hypot, fabs

from ._eig_py import EigenvalueError

cdef double EPS = 2.220446049250313e-16
cdef double SAFE_MIN = 2.2250738585072014e-308
cdef double RADIX = 2.0
cdef int MAX_ITER_PER_EIGENVALUE = 30


cdef inline double cabs(double complex z) nogil:
    return hypot(z.real, z.imag)


cdef inline double complex conj(double complex z) nogil:
    return z.real - 1j * z.imag


cdef inline double complex csqrt(double complex z) nogil:
    cdef double r = cabs(z)
    cdef double re, im
    if r == 0.0:
        return 0.0
    re = sqrt(0.5 * (r + z.real))
    im = sqrt(0.5 * (r - z.real))
    if z.imag < 0.0:
        im = -im
    return re + 1j * im


cdef void balance(double complex[:, ::1] h, Py_ssize_t n) nogil:
    cdef bint converged = False
    cdef Py_ssize_t i, j
    cdef double c, r, g, f, s
    while not converged:
        converged = True
        for i in range(n):
            c = 0.0
            r = 0.0
            for j in range(n):
                if j != i:
                    c += cabs(h[j, i])
                    r += cabs(h[i, j])
            if c == 0.0 or r == 0.0:
                continue
            g = r / RADIX
            f = 1.0
            s = c + r
            while c < g:
                f *= RADIX
                c *= RADIX * RADIX
            g = r * RADIX
            while c > g:
                f /= RADIX
                c /= RADIX * RADIX
            if (c + r) / f < 0.95 * s:
                converged = False
                g = 1.0 / f
                for j in range(n):
                    h[i, j] = h[i, j] * g
                for j in range(n):
                    h[j, i] = h[j, i] * f


cdef void hessenberg(double complex[:, ::1] h, Py_ssize_t n, double complex[::1] v) nogil:
    cdef Py_ssize_t k, i, j, t, m
    cdef double alpha2, alpha, ax0, vnorm2, beta
    cdef double complex x, x0, phase, s
    for k in range(n - 2):
        alpha2 = 0.0
        for i in range(k + 1, n):
            x = h[i, k]
            alpha2 += x.real * x.real + x.imag * x.imag
        if alpha2 == 0.0:
            continue
        alpha = sqrt(alpha2)
        x0 = h[k + 1, k]
        ax0 = cabs(x0)
        if ax0 != 0.0:
            phase = x0 / ax0
        else:
            phase = 1.0
        m = n - k - 1
        for t in range(m):
            v[t] = h[k + 1 + t, k]
        v[0] = x0 + phase * alpha
        vnorm2 = 0.0
        for t in range(m):
            vnorm2 += v[t].real * v[t].real + v[t].imag * v[t].imag
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        for j in range(k, n):
            s = 0.0
            for t in range(m):
                s = s + conj(v[t]) * h[k + 1 + t, j]
            s = s * beta
            if s != 0.0:
                for t in range(m):
                    h[k + 1 + t, j] = h[k + 1 + t, j] - v[t] * s
        for i in range(n):
            s = 0.0
            for t in range(m):
                s = s + h[i, k + 1 + t] * v[t]
            s = s * beta
            if s != 0.0:
                for t in range(m):
                    h[i, k + 1 + t] = h[i, k + 1 + t] - s * conj(v[t])
        for i in range(k + 2, n):
            h[i, k] = 0.0


cdef inline double complex wilkinson(double complex a, double complex b,
                                     double complex c, double complex d) nogil:
    cdef double complex half = 0.5 * (a - d)
    cdef double complex disc = csqrt(half * half + b * c)
    cdef double complex m1 = 0.5 * (a + d) + disc
    cdef double complex m2 = 0.5 * (a + d) - disc
    if cabs(m1 - d) <= cabs(m2 - d):
        return m1
    return m2


cdef int hqr(double complex[:, ::1] h, Py_ssize_t n, double complex[::1] eig,
             unsigned char[::1] found, double[::1] cs, double complex[::1] ss,
             Py_ssize_t* total_out) nogil:
    """Returns 0 on success, 1 on non-convergence."""
    cdef Py_ssize_t hi = n - 1
    cdef Py_ssize_t l, k, j, i, top
    cdef Py_ssize_t its = 0
    cdef Py_ssize_t total = 0
    cdef Py_ssize_t cap = MAX_ITER_PER_EIGENVALUE * (n if n > 1 else 1)
    cdef double sub, tst, c, ax, ay, r
    cdef double complex mu, s, sc, a, b, x, y
    while hi >= 0:
        l = hi
        while l > 0:
            sub = cabs(h[l, l - 1])
            tst = cabs(h[l - 1, l - 1]) + cabs(h[l, l])
            if sub <= EPS * tst or sub < SAFE_MIN:
                h[l, l - 1] = 0.0
                break
            l -= 1
        if l == hi:
            eig[hi] = h[hi, hi]
            found[hi] = 1
            hi -= 1
            its = 0
            continue
        if its >= cap:
            total_out[0] = total
            return 1
        its += 1
        total += 1
        if its % 10 == 0:
            mu = h[hi, hi] + 0.75 * fabs(h[hi, hi - 1].real) + 0.75j * fabs(h[hi, hi - 1].imag)
        else:
            mu = wilkinson(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
        for k in range(l, hi + 1):
            h[k, k] = h[k, k] - mu
        for k in range(l, hi):
            x = h[k, k]
            y = h[k + 1, k]
            ax = cabs(x)
            ay = cabs(y)
            if ay == 0.0:
                c = 1.0
                s = 0.0
            elif ax == 0.0:
                c = 0.0
                s = conj(y) / ay
            else:
                r = hypot(ax, ay)
                c = ax / r
                s = (x / ax) * conj(y) / r
            cs[k] = c
            ss[k] = s
            sc = conj(s)
            for j in range(k, hi + 1):
                a = h[k, j]
                b = h[k + 1, j]
                h[k, j] = c * a + s * b
                h[k + 1, j] = -sc * a + c * b
            h[k + 1, k] = 0.0
        for k in range(l, hi):
            c = cs[k]
            s = ss[k]
            sc = conj(s)
            top = k + 2 if k + 2 < hi else hi
            for i in range(l, top + 1):
                a = h[i, k]
                b = h[i, k + 1]
                h[i, k] = c * a + sc * b
                h[i, k + 1] = -s * a + c * b
        for k in range(l, hi + 1):
            h[k, k] = h[k, k] + mu
    total_out[0] = total
    return 0


def eigvals(matrix):
    """All eigenvalues of a square complex matrix."""
    cdef double complex[:, ::1] h
    cdef Py_ssize_t n, total = 0
    cdef int status
    arr = np.array(matrix, dtype=np.complex128, order="C", copy=True)
    if arr.size == 0 and arr.ndim <= 2 and (arr.ndim < 2 or arr.shape[0] == 0):
        return []
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("matrix must be square")
    n = arr.shape[0]
    if n == 0:
        return []
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    h = arr
    eig = np.zeros(n, dtype=np.complex128)
    found = np.zeros(n, dtype=np.uint8)
    cs = np.zeros(n, dtype=np.float64)
    ss = np.zeros(n, dtype=np.complex128)
    work = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] eig_v = eig
    cdef unsigned char[::1] found_v = found
    cdef double[::1] cs_v = cs
    cdef double complex[::1] ss_v = ss
    cdef double complex[::1] work_v = work
    with nogil:
        balance(h, n)
        hessenberg(h, n, work_v)
        status = hqr(h, n, eig_v, found_v, cs_v, ss_v, &total)
    if status:
        partial = [complex(eig[k]) for k in range(n) if found[k]]
        raise EigenvalueError(f"QR iteration did not converge after {total} steps", partial)
    return [complex(z) for z in eig]
