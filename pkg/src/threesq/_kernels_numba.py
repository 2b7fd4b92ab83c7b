"""Numba-compiled counting kernels.

Same contracts as :mod:`threesq._kernels_numpy`; selected at import time
by :mod:`threesq.backend`.  Every table is an int64 array indexed by n,
filled by direct lattice/tuple enumeration -- no generating-function
shortcuts, so these stay independent of the series engine they are used
to cross-check.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _isqrt(n):
    if n <= 0:
        return 0
    x = int(math.sqrt(n))
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


@njit(cache=True, inline="always")
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def r2_table(N):
    out = np.zeros(N + 1, np.int64)
    r = _isqrt(N)
    for x in range(-r, r + 1):
        x2 = x * x
        ry = _isqrt(N - x2)
        for y in range(-ry, ry + 1):
            out[x2 + y * y] += 1
    return out


@njit(cache=True)
def r3_table(N):
    out = np.zeros(N + 1, np.int64)
    r = _isqrt(N)
    for x in range(-r, r + 1):
        x2 = x * x
        ry = _isqrt(N - x2)
        for y in range(-ry, ry + 1):
            m = x2 + y * y
            rz = _isqrt(N - m)
            for z in range(-rz, rz + 1):
                out[m + z * z] += 1
    return out


@njit(cache=True)
def r4_table(N):
    out = np.zeros(N + 1, np.int64)
    r = _isqrt(N)
    for x in range(-r, r + 1):
        x2 = x * x
        ry = _isqrt(N - x2)
        for y in range(-ry, ry + 1):
            m2 = x2 + y * y
            rz = _isqrt(N - m2)
            for z in range(-rz, rz + 1):
                m3 = m2 + z * z
                rw = _isqrt(N - m3)
                for w in range(-rw, rw + 1):
                    out[m3 + w * w] += 1
    return out


@njit(cache=True)
def n3_table(N):
    out = np.zeros(N + 1, np.int64)
    r = _isqrt(N)
    for x in range(-r, r + 1):
        x2 = x * x
        gx = x if x >= 0 else -x
        ry = _isqrt(N - x2)
        for y in range(-ry, ry + 1):
            m = x2 + y * y
            gxy = _gcd(gx, y if y >= 0 else -y)
            rz = _isqrt(N - m)
            for z in range(-rz, rz + 1):
                if _gcd(gxy, z if z >= 0 else -z) == 1:
                    out[m + z * z] += 1
    return out


@njit(cache=True)
def tri3_table(N):
    # triangular numbers 0, 1, 3, 6, ... up to N
    ntri = 0
    k = 0
    while k * (k + 1) // 2 <= N:
        ntri += 1
        k += 1
    tri = np.empty(ntri, np.int64)
    for k in range(ntri):
        tri[k] = k * (k + 1) // 2
    pair = np.zeros(N + 1, np.int64)
    for i in range(ntri):
        a = tri[i]
        for j in range(ntri):
            s = a + tri[j]
            if s > N:
                break
            pair[s] += 1
    out = np.zeros(N + 1, np.int64)
    for i in range(ntri):
        t = tri[i]
        for m in range(t, N + 1):
            out[m] += pair[m - t]
    return out


@njit(cache=True)
def signed_pair_table(N):
    out = np.zeros(N + 1, np.int64)
    for r in range(1, N + 1):
        for s in range(1, N // r + 1):
            out[r * s] += 1 if (r + s) % 2 == 0 else -1
    return out


@njit(cache=True)
def signed_triple_table(N):
    out = np.zeros(N + 1, np.int64)
    t = 1
    while 3 * t * t <= N:
        s = t
        while s * s + 2 * s * t <= N:
            step = s + t
            n = s * t + s * step
            r = s
            while n <= N:
                sign = 1 if (r + s + t) % 2 == 0 else -1
                if r == s and s == t:
                    out[n] += sign
                elif r == s or s == t:
                    out[n] += 3 * sign
                else:
                    out[n] += 6 * sign
                r += 1
                n += step
            s += 1
        t += 1
    return out


@njit(cache=True)
def solution_tables(N):
    total = np.zeros(N + 1, np.int64)
    strict = np.zeros(N + 1, np.int64)
    two_eq = np.zeros(N + 1, np.int64)
    all_eq = np.zeros(N + 1, np.int64)
    # sorted enumeration r >= s >= t >= 1
    t = 1
    while 3 * t * t <= N:
        s = t
        while s * s + 2 * s * t <= N:
            step = s + t
            n = s * t + s * step
            r = s
            while n <= N:
                if r == s and s == t:
                    all_eq[n] += 1
                elif r == s or s == t:
                    two_eq[n] += 1
                else:
                    strict[n] += 1
                r += 1
                n += step
            s += 1
        t += 1
    # independent ordered enumeration for the total
    for r in range(1, N + 1):
        for s in range(1, N + 1):
            start = r * s + r + s
            if start > N:
                break
            step = r + s
            for n in range(start, N + 1, step):
                total[n] += 1
    return total, strict, two_eq, all_eq


@njit(cache=True)
def divisor_tables(N):
    d = np.zeros(N + 1, np.int64)
    d1 = np.zeros(N + 1, np.int64)
    d3 = np.zeros(N + 1, np.int64)
    s4 = np.zeros(N + 1, np.int64)
    for dd in range(1, N + 1):
        rem = dd % 4
        for m in range(dd, N + 1, dd):
            d[m] += 1
            if rem == 1:
                d1[m] += 1
            elif rem == 3:
                d3[m] += 1
            if rem != 0:
                s4[m] += dd
    return d, d1, d3, s4
