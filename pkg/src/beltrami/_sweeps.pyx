# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled radial sweep kernels.

Scalar C loops over (column, radius); same recursion and piece integrals as
``beltrami._sweeps_py``, which documents the contract.
"""

import numpy as np

from libc.math cimport log, pow


cdef inline double _wk(double r, double a, double b, long k):
    # integral (r/rho)^k drho/rho ; a == 0 only with k < 0 or a zero coeff
    cdef double pa
    if k == 0:
        if a == 0.0:
            return 0.0
        return log(b / a)
    pa = 0.0 if a == 0.0 else pow(r / a, <double> k)
    return (pa - pow(r / b, <double> k)) / k


cdef inline double _vk(double r, double a, double b, long k):
    # integral (r/rho)^k drho
    cdef double pa
    if k == 1:
        return r * log(b / a)
    pa = 0.0 if a == 0.0 else pow(r / a, <double> k)
    return (b * pow(r / b, <double> k) - a * pa) / (1 - k)


cdef inline double _xk(double r, double a, double b, long k):
    # integral (r/rho)^k rho drho
    cdef double pa
    if k == 2:
        return r * r * log(b / a)
    pa = 0.0 if a == 0.0 else pow(r / a, <double> k)
    return (b * b * pow(r / b, <double> k) - a * a * pa) / (2 - k)


cdef inline double complex _hpiece(bint linear, double r, double a, double b,
                                   double complex va, double complex vb,
                                   double mid, long k):
    cdef double complex alpha, beta
    if linear:
        alpha = (vb - va) / (b - a)
        beta = va - alpha * a
        return alpha * _vk(r, a, b, k) + beta * _wk(r, a, b, k)
    return va * _wk(r, a, mid, k) + vb * _wk(r, mid, b, k)


cdef inline double complex _cpiece(bint linear, double r, double a, double b,
                                   double complex va, double complex vb,
                                   double mid, long k):
    cdef double complex alpha, beta
    if linear:
        alpha = (vb - va) / (b - a)
        beta = va - alpha * a
        return alpha * _xk(r, a, b, k) + beta * _vk(r, a, b, k)
    return va * _vk(r, a, mid, k) + vb * _vk(r, mid, b, k)


def hilbert_sweep(const double complex[:, ::1] hs, const double[::1] radii,
                  const double[::1] mids, const long[::1] kvals, int model):
    cdef Py_ssize_t n = hs.shape[0]
    cdef Py_ssize_t m = hs.shape[1]
    cdef bint linear = model == 1
    out_arr = np.zeros((n, m), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef Py_ssize_t col, i
    cdef long k
    cdef double amul, bmul, ratio, first
    cdef double complex cur, g
    cdef Py_ssize_t col0 = -1

    for col in range(m):
        k = kvals[col]
        if k < 0:
            amul = 2.0 * (k + 1)
            cur = amul * _hpiece(linear, radii[1], 0.0, radii[1],
                                 hs[0, col], hs[1, col], mids[1], k) + hs[1, col]
            out[1, col] = cur
            for i in range(2, n):
                ratio = pow(radii[i - 1] / radii[i], <double> (-k))
                g = _hpiece(linear, radii[i], radii[i - 1], radii[i],
                            hs[i - 1, col], hs[i, col], mids[i], k)
                cur = ratio * (cur - hs[i - 1, col]) + amul * g + hs[i, col]
                out[i, col] = cur
        else:
            if k == 0:
                col0 = col
            bmul = -2.0 * (k + 1)
            cur = hs[n - 1, col]
            out[n - 1, col] = cur
            for i in range(n - 2, 0, -1):
                ratio = pow(radii[i] / radii[i + 1], <double> k)
                g = _hpiece(linear, radii[i], radii[i], radii[i + 1],
                            hs[i, col], hs[i + 1, col], mids[i + 1], k)
                cur = ratio * (cur - hs[i + 1, col]) + bmul * g + hs[i, col]
                out[i, col] = cur

    # center row: zero except the k = 0 entry (see _sweeps_py)
    if linear:
        first = 1.0
        out[0, col0] = out[1, col0] - hs[1, col0] - 2.0 * hs[1, col0]
    else:
        first = log(radii[1] / mids[1])
        out[0, col0] = out[1, col0] - hs[1, col0] - 2.0 * hs[1, col0] * first
    return out_arr


def cauchy_sweep(const double complex[:, ::1] hs, const double[::1] radii,
                 const double[::1] mids, const long[::1] kvals, int model):
    cdef Py_ssize_t n = hs.shape[0]
    cdef Py_ssize_t m = hs.shape[1]
    cdef bint linear = model == 1
    out_arr = np.zeros((n, m), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef Py_ssize_t col, i
    cdef long k
    cdef double ratio
    cdef double complex cur, g, first
    cdef Py_ssize_t col0 = -1

    for col in range(m):
        k = kvals[col]
        if k < 0:
            cur = 2.0 * _cpiece(linear, radii[1], 0.0, radii[1],
                                hs[0, col], hs[1, col], mids[1], k)
            out[1, col] = cur
            for i in range(2, n):
                ratio = pow(radii[i - 1] / radii[i], <double> (-k))
                g = _cpiece(linear, radii[i], radii[i - 1], radii[i],
                            hs[i - 1, col], hs[i, col], mids[i], k)
                cur = ratio * cur + 2.0 * g
                out[i, col] = cur
        else:
            if k == 0:
                col0 = col
            cur = 0.0
            for i in range(n - 2, 0, -1):
                ratio = pow(radii[i] / radii[i + 1], <double> k)
                g = _cpiece(linear, radii[i], radii[i], radii[i + 1],
                            hs[i, col], hs[i + 1, col], mids[i + 1], k)
                cur = ratio * cur - 2.0 * g
                out[i, col] = cur

    if linear:
        first = 0.5 * (hs[0, col0] + hs[1, col0]) * radii[1]
    else:
        first = hs[0, col0] * mids[1] + hs[1, col0] * (radii[1] - mids[1])
    out[0, col0] = out[1, col0] - 2.0 * first
    return out_arr
