"""Exact single-variable identity checks.

Each identity gets both sides built as IntSeries by structurally
different routes (theta powers vs. lattice sums vs. eta quotients) and
compared coefficient-by-coefficient.  Identity ids are the fixed
enumeration shared with the CLI: andrews516, gauss-gen, eyphka,
jacobi4, two-square, triple-product, eta-limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import counts
from .series import (
    IntSeries,
    Mismatch,
    equal_to_order,
    neg_pochhammer,
    pochhammer,
    theta_signed,
)


@dataclass(frozen=True)
class IdentityCheckResult:
    identity_id: str
    order: int
    passed: bool
    first_mismatch: Optional[Mismatch] = None

    def __post_init__(self):
        if self.passed != (self.first_mismatch is None):
            raise ValueError("passed must mean no mismatch")


def _compare(identity_id: str, lhs: IntSeries, rhs: IntSeries, order: int) -> IdentityCheckResult:
    ok, mismatch = equal_to_order(lhs, rhs, order)
    return IdentityCheckResult(identity_id, order, ok, mismatch)


def series_R(s: int, order: int) -> IntSeries:
    """sum_n r_s(n) (-q)^n = (sum_m (-1)^m q^(m^2))^s for s in {2, 3, 4}."""
    if s not in (2, 3, 4):
        raise ValueError(f"s must be 2, 3 or 4, got {s}")
    return theta_signed(order) ** s


def series_triangular3(order: int) -> IntSeries:
    """Generating function of r_3triangular(n), built two ways.

    The cube of the explicit sum over triangular exponents must match
    the eta-quotient form ((q^2;q^2)^2/(q;q))^3; disagreement means an
    engine bug, not a failed identity, so it raises.
    """
    c = [0] * (order + 1)
    k = 0
    while k * (k + 1) // 2 <= order:
        c[k * (k + 1) // 2] = 1
        k += 1
    direct = IntSeries(c) ** 3
    quotient = (pochhammer(2, 2, 2, order) * pochhammer(1, 1, -1, order)) ** 3
    ok, mismatch = equal_to_order(direct, quotient, order)
    if not ok:
        raise AssertionError(
            f"triangular generating function cross-check failed: {mismatch}"
        )
    return direct


def series_andrews_rhs(order: int) -> IntSeries:
    """1 + 4*sum_n (-1)^n q^n/(1+q^n)
       - 2*sum_{n>=1,|j|<n} q^(n^2-j^2) (1-q^n) (-1)^j / (1+q^n),
    with each 1/(1+q^n) expanded as a geometric series and cut at the
    truncation order.
    """
    c = [0] * (order + 1)
    c[0] = 1
    # Lambert part: (-1)^n q^n/(1+q^n) = (-1)^n sum_{k>=0} (-1)^k q^(n(k+1))
    for n in range(1, order + 1):
        sign_n = -1 if n % 2 else 1
        k = 0
        while n * (k + 1) <= order:
            c[n * (k + 1)] += 4 * sign_n * (1 if k % 2 == 0 else -1)
            k += 1
    # double sum: q^(n^2-j^2) (1-q^n) (-1)^j sum_{k>=0} (-1)^k q^(nk)
    n = 1
    while 2 * n - 1 <= order:  # smallest exponent for this n is n^2-(n-1)^2
        for j in range(-(n - 1), n):
            e0 = n * n - j * j
            if e0 > order:
                continue
            sign_j = -1 if j % 2 else 1
            k = 0
            while e0 + n * k <= order:
                sign_k = 1 if k % 2 == 0 else -1
                c[e0 + n * k] += -2 * sign_j * sign_k
                if e0 + n * k + n <= order:
                    c[e0 + n * k + n] -= -2 * sign_j * sign_k
                k += 1
        n += 1
    return IntSeries(c)


def series_gauss_gen_rhs(order: int) -> IntSeries:
    """1 + 6*sum_{r,s>=1} (-q)^(rs) (-1)^(rs+r+s+1)
       + 4*sum_{r,s,t>=1} (-q)^(rs+rt+st) (-1)^(rs+rt+st+r+s+t+1),
    expanded as exact lattice sums.  With (-q)^e = (-1)^e q^e the signs
    collapse to (-1)^(r+s+1) and (-1)^(r+s+t+1).
    """
    c = [0] * (order + 1)
    c[0] = 1
    for r in range(1, order + 1):
        for s in range(1, order // r + 1):
            c[r * s] += 6 * (1 if (r + s + 1) % 2 == 0 else -1)
    t = 1
    while 3 * t * t <= order:
        s = t
        while s * s + 2 * s * t <= order:
            r = s
            e = s * t + r * (s + t)
            while e <= order:
                if r == s == t:
                    mult = 1
                elif r == s or s == t:
                    mult = 3
                else:
                    mult = 6
                c[e] += 4 * mult * (1 if (r + s + t + 1) % 2 == 0 else -1)
                r += 1
                e += s + t
            s += 1
        t += 1
    return IntSeries(c)


def series_eyphka_rhs(order: int) -> IntSeries:
    """1 + 3*sum q^r + 3*sum q^(2rs+r+s)
       + (sum_{r,s,t>0} + sum_{r,s,t<0}) q^(2rs+2rt+2st+r+s+t).

    The negative-index branch is re-indexed to positive r, s, t with
    exponent 2rs+2rt+2st-r-s-t.
    """
    c = [0] * (order + 1)
    c[0] = 1
    for r in range(1, order + 1):
        c[r] += 3
    for r in range(1, order + 1):
        if 2 * r + r + 1 > order:
            break
        for s in range(1, order + 1):
            e = 2 * r * s + r + s
            if e > order:
                break
            c[e] += 3
    for delta in (1, -1):  # +: positive branch, -: re-indexed negative branch
        t = 1
        while 6 * t * t + delta * 3 * t <= order:
            s = t
            while 2 * (s * s + 2 * s * t) + delta * (2 * s + t) <= order:
                r = s
                while True:
                    e = 2 * (r * s + r * t + s * t) + delta * (r + s + t)
                    if e > order:
                        break
                    if r == s == t:
                        mult = 1
                    elif r == s or s == t:
                        mult = 3
                    else:
                        mult = 6
                    c[e] += mult
                    r += 1
                s += 1
            t += 1
    return IntSeries(c)


def series_eta_limit_checks(order: int) -> list[IdentityCheckResult]:
    """The eta-quotient identities the Appell-Lerch limit computations
    reduce to, each side built independently:

    eta-limits/theta-cube:   (q^2;q^2)^3 / (-q;q)^6           = R_3(q)
    eta-limits/lerch-k0:     (q^2;q^2) (q;q)^2 / (-q;q)^4     = R_3(q)
    eta-limits/triangular:   (q^2;q^2)^6 / (q;q)^3            = psi(q)^3
    """
    r3 = series_R(3, order)
    tri3 = series_triangular3(order)
    checks = [
        (
            "eta-limits/theta-cube",
            pochhammer(2, 2, 3, order) * neg_pochhammer(1, 1, -6, order),
            r3,
        ),
        (
            "eta-limits/lerch-k0",
            pochhammer(2, 2, 1, order)
            * pochhammer(1, 1, 2, order)
            * neg_pochhammer(1, 1, -4, order),
            r3,
        ),
        (
            "eta-limits/triangular",
            pochhammer(2, 2, 6, order) * pochhammer(1, 1, -3, order),
            tri3,
        ),
    ]
    return [_compare(cid, lhs, rhs, order) for cid, lhs, rhs in checks]


# -- identity-id entry points (shared enumeration with the CLI) --


def check_andrews516(order: int) -> IdentityCheckResult:
    return _compare("andrews516", series_andrews_rhs(order), series_R(3, order), order)


def check_gauss_gen(order: int) -> IdentityCheckResult:
    return _compare("gauss-gen", series_gauss_gen_rhs(order), series_R(3, order), order)


def check_eyphka(order: int) -> IdentityCheckResult:
    return _compare("eyphka", series_eyphka_rhs(order), series_triangular3(order), order)


def check_triple_product(order: int) -> IdentityCheckResult:
    lhs = theta_signed(order)
    rhs = pochhammer(1, 1, 1, order) * neg_pochhammer(1, 1, -1, order)
    return _compare("triple-product", lhs, rhs, order)


def check_jacobi4(order: int) -> IdentityCheckResult:
    """Coefficient of q^n in R_4 equals (-1)^n * 8 * sigma_no4(n)."""
    lhs = series_R(4, order)
    _, _, _, s4 = counts.divisor_tables(order)
    rhs = IntSeries(
        [1] + [8 * int(s4[n]) * (-1 if n % 2 else 1) for n in range(1, order + 1)]
    )
    return _compare("jacobi4", lhs, rhs, order)


def check_two_square(order: int) -> IdentityCheckResult:
    """Coefficient of q^n in R_2 equals (-1)^n * 4 * (d_1(n) - d_3(n))."""
    lhs = series_R(2, order)
    _, d1, d3, _ = counts.divisor_tables(order)
    rhs = IntSeries(
        [1]
        + [
            4 * int(d1[n] - d3[n]) * (-1 if n % 2 else 1)
            for n in range(1, order + 1)
        ]
    )
    return _compare("two-square", lhs, rhs, order)


def check_eta_limits(order: int) -> IdentityCheckResult:
    """Conjunction of the three eta-limit identities; the mismatch of the
    first failing sub-check is reported."""
    for sub in series_eta_limit_checks(order):
        if not sub.passed:
            return IdentityCheckResult("eta-limits", order, False, sub.first_mismatch)
    return IdentityCheckResult("eta-limits", order, True)
