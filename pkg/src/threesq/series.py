"""Truncated formal power series in q with exact integer coefficients.

An IntSeries of order N represents a series known modulo q^(N+1): it
stores the N+1 coefficients of q^0 .. q^N as arbitrary-size Python
integers.  Every arithmetic operation truncates the result to the
minimum order of its operands, so a result never claims more precision
than its inputs carry.

Constructors for the q-Pochhammer products (q^a; q^b)_oo^e and
(-q^a; q^b)_oo^e and for the signed theta series sum((-1)^m q^(m^2))
live here as well; they are the building blocks for every eta-quotient
and theta identity checked by :mod:`threesq.identities`.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence


class Mismatch(NamedTuple):
    """First disagreeing coefficient of two series."""

    exponent: int
    lhs: int
    rhs: int


class IntSeries:
    """Integer power series truncated at a fixed order, immutable."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        if len(coeffs) == 0:
            raise ValueError("a series needs at least the q^0 coefficient")
        self._coeffs = tuple(int(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise IndexError(f"exponent {k} outside truncation order {self.order}")
        return self._coeffs[k]

    def truncate(self, order: int) -> "IntSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return IntSeries(self._coeffs[: order + 1])

    # -- ring operations (result order = min of operand orders) --

    def _coerce(self, other) -> "IntSeries":
        if isinstance(other, IntSeries):
            return other
        if isinstance(other, int):
            return IntSeries([other] + [0] * self.order)
        return NotImplemented

    def __add__(self, other) -> "IntSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return IntSeries([self._coeffs[k] + other._coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "IntSeries":
        return IntSeries([-c for c in self._coeffs])

    def __sub__(self, other) -> "IntSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntSeries":
        return (-self) + other

    def __mul__(self, other) -> "IntSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        # Schoolbook Cauchy product, skipping zero coefficients of the
        # sparser factor; swap in an FFT-based product here if orders
        # ever grow past desk scale.
        if _nnz(a, n) > _nnz(b, n):
            a, b = b, a
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return IntSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntSeries":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.invert() ** (-e)
        result = IntSeries([1] + [0] * self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def invert(self) -> "IntSeries":
        """Multiplicative inverse up to this order.

        Over the integers the constant term must be a unit (+1 or -1).
        """
        a = self._coeffs
        if a[0] not in (1, -1):
            raise ValueError("not invertible over integers")
        n = self.order
        b = [0] * (n + 1)
        b[0] = a[0]
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                ai = a[i]
                if ai:
                    acc += ai * b[k - i]
            b[k] = -a[0] * acc
        return IntSeries(b)

    # -- comparisons / display --

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                qpow = "q" if k == 1 else f"q^{k}"
                body = qpow if mag == 1 else f"{mag}*{qpow}"
            terms.append(("- " if c < 0 else "+ ") + body)
            if len(terms) > 8:
                terms.append("...")
                break
        if not terms:
            poly = "0"
        else:
            poly = " ".join(terms)
            poly = poly[2:] if poly.startswith("+ ") else "-" + poly[2:]
        return f"<IntSeries {poly} + O(q^{self.order + 1})>"


def _nnz(coeffs, n):
    return sum(1 for c in coeffs[: n + 1] if c)


def zero(order: int) -> IntSeries:
    return IntSeries([0] * (order + 1))


def one(order: int) -> IntSeries:
    return IntSeries([1] + [0] * order)


def monomial(coeff: int, exponent: int, order: int) -> IntSeries:
    c = [0] * (order + 1)
    if exponent <= order:
        c[exponent] = coeff
    return IntSeries(c)


def pochhammer(a: int, b: int, e: int, order: int) -> IntSeries:
    """(q^a; q^b)_oo^e as an IntSeries of the given order.

    The infinite product prod_{k>=0} (1 - q^(a+kb)) is cut off once the
    factor exponent exceeds `order`; a dropped factor is congruent to 1
    mod q^(order+1), so the truncation is exact.
    """
    if a < 1 or b < 1:
        raise ValueError("pochhammer requires a >= 1 and b >= 1")
    if order < 0:
        raise ValueError("order must be non-negative")
    base = _binomial_product(a, b, order, sign=-1)
    return base ** e


def neg_pochhammer(a: int, b: int, e: int, order: int) -> IntSeries:
    """(-q^a; q^b)_oo^e, the product of factors 1 + q^(a+kb)."""
    if a < 1 or b < 1:
        raise ValueError("neg_pochhammer requires a >= 1 and b >= 1")
    if order < 0:
        raise ValueError("order must be non-negative")
    base = _binomial_product(a, b, order, sign=+1)
    return base ** e


def _binomial_product(a: int, b: int, order: int, sign: int) -> IntSeries:
    # Multiply factors (1 + sign*q^m) in place; one factor costs O(order).
    c = [0] * (order + 1)
    c[0] = 1
    m = a
    while m <= order:
        if sign < 0:
            for k in range(order, m - 1, -1):
                c[k] -= c[k - m]
        else:
            for k in range(order, m - 1, -1):
                c[k] += c[k - m]
        m += b
    return IntSeries(c)


def theta_signed(order: int) -> IntSeries:
    """sum_{m in Z} (-1)^m q^(m^2) = 1 + 2*sum_{m>=1} (-1)^m q^(m^2)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [0] * (order + 1)
    c[0] = 1
    m = 1
    while m * m <= order:
        c[m * m] = 2 * (-1 if m % 2 else 1)
        m += 1
    return IntSeries(c)


def equal_to_order(a: IntSeries, b: IntSeries, order: int) -> tuple[bool, Optional[Mismatch]]:
    """Compare coefficients 0..order; report the first disagreement.

    Returns (True, None) on agreement, else (False, Mismatch) with the
    smallest mismatching exponent and both coefficients.
    """
    if order > a.order or order > b.order:
        raise ValueError(
            f"comparison order {order} exceeds operand order "
            f"{min(a.order, b.order)}"
        )
    for k in range(order + 1):
        if a[k] != b[k]:
            return False, Mismatch(k, a[k], b[k])
    return True, None
