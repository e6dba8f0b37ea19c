# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sampling loops for the image oracle.

Semantics must match ``_pykernel`` exactly; see that module for the reference
description of each routine.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport pow, floor, fabs, INFINITY

cnp.import_array()

cdef double _INT_GUARD = 4.0e18


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    while b:
        t = a % b
        a = b
        b = t
    return a


def odd_fractions(const double[::1] targets, double lo, double hi, long long max_den):
    cdef Py_ssize_t n = targets.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] num_out = np.empty(2 * n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] den_out = np.empty(2 * n, dtype=np.int64)
    cdef Py_ssize_t i, count = 0
    cdef long long d, j, k, g, rn, rd
    cdef long long best_num[2]
    cdef long long best_den[2]
    cdef double best_dist[2]
    cdef double t, q, dist, scaled
    cdef int parity
    with nogil:
        for i in range(n):
            t = targets[i]
            best_dist[0] = INFINITY
            best_dist[1] = INFINITY
            d = 1
            while d <= max_den:
                scaled = floor(t * d)
                if fabs(scaled) < _INT_GUARD:
                    for j in range(-1, 3):
                        k = <long long>scaled + j
                        q = <double>k / <double>d
                        if q < lo or q > hi:
                            continue
                        g = _gcd(k, d)
                        rn = k // g
                        rd = d // g
                        parity = <int>(rn & 1)
                        dist = fabs(q - t)
                        if dist < best_dist[parity]:
                            best_dist[parity] = dist
                            best_num[parity] = rn
                            best_den[parity] = rd
                d += 2
            for parity in range(2):
                if best_dist[parity] < INFINITY:
                    num_out[count] = best_num[parity]
                    den_out[count] = best_den[parity]
                    count += 1
    return num_out[:count], den_out[:count]


def power_samples(const double[::1] bases, const double[::1] exps,
                  const cnp.int64_t[::1] fnum, const cnp.int64_t[::1] fden):
    cdef Py_ssize_t nb = bases.shape[0], ne = exps.shape[0], nf = fnum.shape[0]
    cdef Py_ssize_t cap = nb * (ne if ne > nf else nf)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] b_out = np.empty(cap, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] e_out = np.empty(cap, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v_out = np.empty(cap, dtype=np.float64)
    cdef Py_ssize_t i, j, count = 0
    cdef double a, b, m
    with nogil:
        for i in range(nb):
            a = bases[i]
            if a >= 0.0:
                for j in range(ne):
                    b = exps[j]
                    if a == 0.0 and b < 0.0:
                        continue
                    b_out[count] = a
                    e_out[count] = b
                    v_out[count] = pow(a, b)
                    count += 1
            else:
                for j in range(nf):
                    b = <double>fnum[j] / <double>fden[j]
                    m = pow(-a, b)
                    b_out[count] = a
                    e_out[count] = b
                    v_out[count] = -m if (fnum[j] & 1) else m
                    count += 1
    return b_out[:count], e_out[:count], v_out[:count]
