"""Brute-force arithmetic counting functions: the oracle layer.

Representation counts r_s(n), primitive counts N3(n), triangular-number
counts, divisor statistics, and the signed/unsigned tuple sums over
r*s + r*t + s*t = n, together with the tuple-count decomposition and the
parity-based rewrites used to close the three-squares formula.

Two routes everywhere: the scalar functions here are plain Python loops
over bounded lattice ranges, deliberately sharing no code with the
series engine; the *_table functions delegate to the accelerated
backend kernels (numba or numpy, see :mod:`threesq.backend`) and are
what the range sweeps use.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from . import backend

# table sweeps (backend-selected kernels)
r2_table = backend.r2_table
r3_table = backend.r3_table
r4_table = backend.r4_table
n3_table = backend.n3_table
tri3_table = backend.tri3_table
signed_pair_table = backend.signed_pair_table
signed_triple_table = backend.signed_triple_table
solution_tables = backend.solution_tables
divisor_tables = backend.divisor_tables


@dataclass(frozen=True, order=True)
class Triple:
    """Solution (r, s, t) of r*s + r*t + s*t = n with r >= s >= t >= 1."""

    r: int
    s: int
    t: int

    def __post_init__(self):
        if not self.r >= self.s >= self.t >= 1:
            raise ValueError(f"triple must satisfy r >= s >= t >= 1: {self}")

    @property
    def n(self) -> int:
        return self.r * self.s + self.r * self.t + self.s * self.t

    def multiplicity(self) -> int:
        """Number of ordered rearrangements: 6, 3, or 1."""
        if self.r == self.s == self.t:
            return 1
        if self.r == self.s or self.s == self.t:
            return 3
        return 6


@dataclass(frozen=True)
class DecompositionCounts:
    """Tuple-count census for r*s + r*t + s*t = n.

    total counts ordered solutions; strict counts r > s > t > 0;
    two_equal counts pairs (r, t), r != t, with r^2 + 2*r*t = n;
    all_equal counts solutions of 3*r^2 = n.  Always
    total == 6*strict + 3*two_equal + all_equal.
    """

    n: int
    total: int
    strict: int
    two_equal: int
    all_equal: int


def r_squares(s: int, n: int) -> int:
    """Representations of n as an ordered sum of s squares, signs counted."""
    if s not in (1, 2, 3, 4):
        raise ValueError(f"s must be in 1..4, got {s}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if s == 1:
        r = isqrt(n)
        if r * r != n:
            return 0
        return 1 if n == 0 else 2
    count = 0
    r = isqrt(n)
    for x in range(-r, r + 1):
        count += r_squares(s - 1, n - x * x)
    return count


def n3_primitive(n: int) -> int:
    """Solutions of n = x^2 + y^2 + z^2 with gcd(x, y, z) = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    r = isqrt(n)
    for x in range(-r, r + 1):
        x2 = x * x
        ry = isqrt(n - x2)
        for y in range(-ry, ry + 1):
            rem = n - x2 - y * y
            z = isqrt(rem)
            if z * z != rem:
                continue
            if z == 0:
                if gcd(x, y) == 1:
                    count += 1
            elif gcd(gcd(x, y), z) == 1:
                count += 2
    return count


def triangular_numbers(limit: int) -> list[int]:
    """All k*(k+1)//2 <= limit, k >= 0: the set {0, 1, 3, 6, ...}."""
    out = []
    k = 0
    while k * (k + 1) // 2 <= limit:
        out.append(k * (k + 1) // 2)
        k += 1
    return out


def r_triangular3(n: int) -> int:
    """Ordered triples of triangular numbers summing to n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    tri = triangular_numbers(n)
    tset = set(tri)
    count = 0
    for a in tri:
        for b in tri:
            if a + b > n:
                break
            if n - a - b in tset:
                count += 1
    return count


def divisor_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            count += 1 if d * d == n else 2
    return count


def divisor_count_mod4(n: int, k: int) -> int:
    """Divisors of n congruent to k mod 4 (k in {1, 3})."""
    if k not in (1, 3):
        raise ValueError("k must be 1 or 3")
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            if d % 4 == k:
                count += 1
            q = n // d
            if q != d and q % 4 == k:
                count += 1
    return count


def sigma_no4(n: int) -> int:
    """Sum of the divisors of n not divisible by 4."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            if d % 4 != 0:
                total += d
            q = n // d
            if q != d and q % 4 != 0:
                total += q
    return total


def signed_pair_sum(n: int) -> int:
    """Sum of (-1)^(r+s) over ordered pairs r, s >= 1 with r*s = n."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            q = n // d
            term = 1 if (d + q) % 2 == 0 else -1
            total += term if q == d else 2 * term
    return total


def triples(n: int) -> list[Triple]:
    """All sorted solutions (r >= s >= t >= 1) of r*s + r*t + s*t = n."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    t = 1
    while 3 * t * t <= n:
        s = t
        while s * s + 2 * s * t <= n:
            num = n - s * t
            den = s + t
            if num % den == 0:
                r = num // den
                if r >= s:
                    out.append(Triple(r, s, t))
            s += 1
        t += 1
    return sorted(out)


def signed_triple_sum(n: int) -> int:
    """Sum of (-1)^(r+s+t) over ordered triples with r*s + r*t + s*t = n."""
    total = 0
    for tr in triples(n):
        sign = 1 if (tr.r + tr.s + tr.t) % 2 == 0 else -1
        total += sign * tr.multiplicity()
    return total


def andrews_crandall_r3(n: int) -> int:
    """r_3(n) via the signed divisor-pair and triple sums.

    Evaluates 6*(-1)^(n+1)*sum_{rs=n}(-1)^(r+s)
            + 4*(-1)^(n+1)*sum_{rs+rt+st=n}(-1)^(r+s+t).
    """
    sign = 1 if n % 2 else -1  # (-1)^(n+1)
    return 6 * sign * signed_pair_sum(n) + 4 * sign * signed_triple_sum(n)


def decompose_solutions(n: int) -> DecompositionCounts:
    """Census of solutions of r*s + r*t + s*t = n by equality pattern.

    The total is enumerated over ordered triples independently of the
    sorted classification, and total == 6*strict + 3*two_equal + all_equal
    is asserted before returning.
    """
    strict = two_equal = all_equal = 0
    for tr in triples(n):
        if tr.r == tr.s == tr.t:
            all_equal += 1
        elif tr.r == tr.s or tr.s == tr.t:
            two_equal += 1
        else:
            strict += 1
    # ordered enumeration: r, s free, t = (n - rs)/(r+s)
    total = 0
    for r in range(1, n + 1):
        if 2 * r + 1 > n:
            break
        for s in range(1, n + 1):
            if r * s + r + s > n:
                break
            num = n - r * s
            if num % (r + s) == 0:
                total += 1
    if total != 6 * strict + 3 * two_equal + all_equal:
        raise AssertionError(
            f"decomposition identity violated at n={n}: "
            f"{total} != 6*{strict} + 3*{two_equal} + {all_equal}"
        )
    return DecompositionCounts(n, total, strict, two_equal, all_equal)


def parity_lemma_check(n: int) -> bool:
    """For n = 4m+1 or 4m+2: signed triple sum times (-1)^(n+1) equals
    the unsigned solution count."""
    if n % 4 not in (1, 2):
        raise ValueError(f"lemma hypothesis violated: n={n} is not 1 or 2 mod 4")
    sign = 1 if n % 2 else -1
    return sign * signed_triple_sum(n) == decompose_solutions(n).total


def proposition_checks(n: int) -> bool:
    """Check every closed form for r_3(n) that applies to n's class.

    n = 4m+1:  r_3(n) = 6*d(n) + 24*strict + 12*two_equal
    n = 4m+2:  r_3(n) = 12*d(n/2) + 24*strict
    n odd:     r_3(n) = 6*d(n) + 4*signed_triple_sum(n)
    n even:    r_3(n) = 6*(3-k)*d(n/2^k) - 4*signed_triple_sum(n),
               k the maximal power of 2 dividing n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    r3 = r_squares(3, n)
    dec = decompose_solutions(n)
    sts = signed_triple_sum(n)
    ok = True
    if n % 4 == 1:
        ok &= r3 == 6 * divisor_count(n) + 24 * dec.strict + 12 * dec.two_equal
    if n % 4 == 2:
        ok &= r3 == 12 * divisor_count(n // 2) + 24 * dec.strict
    if n % 2 == 1:
        ok &= r3 == 6 * divisor_count(n) + 4 * sts
    else:
        k = (n & -n).bit_length() - 1
        ok &= r3 == 6 * (3 - k) * divisor_count(n >> k) - 4 * sts
    return ok
