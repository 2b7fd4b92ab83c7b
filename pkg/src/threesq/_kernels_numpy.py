"""Pure-numpy counting kernels (fallback when numba is unavailable or
disabled via THREESQ_BACKEND=numpy).

Same contracts as :mod:`threesq._kernels_numba`: int64 tables indexed
by n, built by direct enumeration.  The square-sum tables enumerate the
full lattice grid and bincount it; the sparse tuple enumerations walk
(t, s) pairs in Python and update arithmetic-progression slices.
"""

import math

import numpy as np


def _axis(N):
    r = math.isqrt(N)
    return np.arange(-r, r + 1, dtype=np.int64)


def r2_table(N):
    xs = _axis(N) ** 2
    vals = (xs[:, None] + xs[None, :]).ravel()
    return np.bincount(vals[vals <= N], minlength=N + 1)


def r3_table(N):
    xs = _axis(N) ** 2
    pair = (xs[:, None] + xs[None, :]).ravel()
    out = np.zeros(N + 1, np.int64)
    for x2 in xs:
        vals = pair + x2
        out += np.bincount(vals[vals <= N], minlength=N + 1)
    return out


def r4_table(N):
    xs = _axis(N) ** 2
    pair = (xs[:, None] + xs[None, :]).ravel()
    pair = pair[pair <= N]
    out = np.zeros(N + 1, np.int64)
    for x2 in xs:
        for y2 in xs:
            vals = pair + (x2 + y2)
            vals = vals[vals <= N]
            out += np.bincount(vals, minlength=N + 1)
    return out


def n3_table(N):
    ax = _axis(N)
    x, y, z = np.meshgrid(ax, ax, ax, indexing="ij", sparse=True)
    vals = x * x + y * y + z * z
    g = np.gcd(np.gcd(np.abs(x), np.abs(y)), np.abs(z))
    mask = (vals <= N) & (g == 1)
    return np.bincount(vals[mask], minlength=N + 1)


def tri3_table(N):
    ks = np.arange(math.isqrt(2 * N) + 2, dtype=np.int64)
    tri = ks * (ks + 1) // 2
    tri = tri[tri <= N]
    sums = (tri[:, None] + tri[None, :]).ravel()
    pair = np.bincount(sums[sums <= N], minlength=N + 1)
    out = np.zeros(N + 1, np.int64)
    for t in tri:
        out[t:] += pair[: N + 1 - t]
    return out


def signed_pair_table(N):
    out = np.zeros(N + 1, np.int64)
    for r in range(1, N + 1):
        odd_s = out[r :: 2 * r]     # s = 1, 3, 5, ...
        even_s = out[2 * r :: 2 * r]
        if r % 2:
            odd_s += 1
            even_s -= 1
        else:
            odd_s -= 1
            even_s += 1
    return out


def _sorted_tuple_sweep(N, signed, strict, two_eq, all_eq):
    # tuples r >= s >= t >= 1 with r*s + r*t + s*t = n <= N; for fixed
    # (t, s) the values n = s*t + r*(s+t) form a progression in r.
    t = 1
    while 3 * t * t <= N:
        s = t
        while s * s + 2 * s * t <= N:
            step = s + t
            n0 = s * t + s * step  # r = s
            sign0 = -1 if t % 2 else 1  # parity of r+s+t at r=s is parity of t
            if s == t:
                all_eq[n0] += 1
                signed[n0] += sign0
            else:
                two_eq[n0] += 1
                signed[n0] += 3 * sign0
            start = n0 + step  # r = s + 1
            if start <= N:
                if s > t:
                    strict[start : N + 1 : step] += 1
                    mult = 6
                else:
                    two_eq[start : N + 1 : step] += 1
                    mult = 3
                signed[start : N + 1 : 2 * step] += -mult * sign0
                signed[start + step : N + 1 : 2 * step] += mult * sign0
            s += 1
        t += 1


def signed_triple_table(N):
    signed = np.zeros(N + 1, np.int64)
    scratch = np.zeros(N + 1, np.int64)
    _sorted_tuple_sweep(N, signed, scratch, scratch, scratch)
    return signed


def solution_tables(N):
    signed = np.zeros(N + 1, np.int64)
    strict = np.zeros(N + 1, np.int64)
    two_eq = np.zeros(N + 1, np.int64)
    all_eq = np.zeros(N + 1, np.int64)
    _sorted_tuple_sweep(N, signed, strict, two_eq, all_eq)
    total = np.zeros(N + 1, np.int64)
    for r in range(1, N + 1):
        if r * 1 + r + 1 > N:
            break
        for s in range(1, N + 1):
            start = r * s + r + s
            if start > N:
                break
            total[start : N + 1 : r + s] += 1
    return total, strict, two_eq, all_eq


def divisor_tables(N):
    d = np.zeros(N + 1, np.int64)
    d1 = np.zeros(N + 1, np.int64)
    d3 = np.zeros(N + 1, np.int64)
    s4 = np.zeros(N + 1, np.int64)
    for dd in range(1, N + 1):
        d[dd::dd] += 1
        rem = dd % 4
        if rem == 1:
            d1[dd::dd] += 1
        elif rem == 3:
            d3[dd::dd] += 1
        if rem != 0:
            s4[dd::dd] += dd
    return d, d1, d3, s4
