"""Binary quadratic forms, class numbers, and Hurwitz class numbers.

Positive definite integral forms a*x^2 + b*x*y + c*y^2 of negative
discriminant b^2 - 4ac.  Reduced representatives are enumerated
directly (|b| <= a <= c with b >= 0 on the boundary); a reduced form is
equivalent to g*(1,0,1) or g*(1,1,1) exactly when it equals it, because
reduced representatives are unique, so the Hurwitz weights 1/2 and 1/3
are decided by plain tuple comparison.

Hurwitz class numbers come in two independent routes: the weighted
count over reduced forms of discriminant -N, and the divisor-square sum
H(N) = sum_{d^2 | N} h'(-N/d^2) with h'(D) = h(D)/(omega(D)/2).  All
weights are exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Callable, Optional

from . import counts
from .counts import Triple

FORM_TYPES = ("I", "II", "III", "IV")


@dataclass(frozen=True, order=True)
class QuadForm:
    """Integral binary quadratic form (a, b, c), positive definite."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.discriminant >= 0:
            raise ValueError(f"form {self.tuple()} is not positive definite")

    def tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        return gcd(gcd(self.a, self.b), self.c)

    @property
    def is_primitive(self) -> bool:
        return self.content == 1

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    @property
    def form_type(self) -> str:
        """The reduced-form taxonomy: I (b=0), II (0<|b|<a<c),
        III (0<b=a<c or 0<b<a=c), IV (0<b=a=c)."""
        if not self.is_reduced:
            raise ValueError(f"form type is defined for reduced forms: {self.tuple()}")
        a, b, c = self.a, self.b, self.c
        if b == 0:
            return "I"
        if abs(b) < a < c:
            return "II"
        if b == a == c:
            return "IV"
        return "III"

    def hurwitz_weight(self) -> Fraction:
        """1/2 on g*(1,0,1), 1/3 on g*(1,1,1), else 1 (reduced forms only)."""
        g = self.content
        if self.tuple() == (g, 0, g):
            return Fraction(1, 2)
        if self.tuple() == (g, g, g):
            return Fraction(1, 3)
        return Fraction(1)


def _require_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"not a discriminant: {D}")


def enumerate_reduced(D: int) -> list[QuadForm]:
    """All reduced positive definite forms of discriminant D < 0,
    primitive and imprimitive, sorted lexicographically by (a, b, c)."""
    _require_discriminant(D)
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a, a + 1):
            if (b - D) % 2 != 0:
                continue
            num = b * b - D
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            forms.append(QuadForm(a, b, c))
        a += 1
    return sorted(forms)


_CLASS_NUMBER: dict[int, int] = {}
_HURWITZ: dict[int, Fraction] = {}


def class_number_h(D: int) -> int:
    """h(D): number of primitive reduced forms of discriminant D."""
    cached = _CLASS_NUMBER.get(D)
    if cached is not None:
        return cached
    h = sum(1 for f in enumerate_reduced(D) if f.is_primitive)
    _CLASS_NUMBER[D] = h
    return h


def omega(D: int) -> int:
    """Number of roots of unity in the order of discriminant D."""
    _require_discriminant(D)
    if D == -3:
        return 6
    if D == -4:
        return 4
    return 2


def h_prime(D: int) -> Fraction:
    """h(D) / (omega(D)/2)."""
    return Fraction(2 * class_number_h(D), omega(D))


def hurwitz_direct(N: int) -> Fraction:
    """Hurwitz class number H(N) by weighted reduced-form count.

    H(N) = 0 for N = 1, 2 mod 4; H(0) = -1/12; otherwise each reduced
    form of discriminant -N counts with its Hurwitz weight.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if N % 4 in (1, 2):
        return Fraction(0)
    if N == 0:
        return Fraction(-1, 12)
    cached = _HURWITZ.get(N)
    if cached is not None:
        return cached
    value = sum((f.hurwitz_weight() for f in enumerate_reduced(-N)), Fraction(0))
    _HURWITZ[N] = value
    return value


def hurwitz_divisor_sum(N: int) -> Fraction:
    """H(N) = sum over d^2 | N of h'(-N/d^2); independent of
    hurwitz_direct.  Quotients -N/d^2 that are not discriminants
    contribute nothing."""
    if N < 1:
        raise ValueError("N must be positive")
    if N % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    d = 1
    while d * d <= N:
        if N % (d * d) == 0:
            M = N // (d * d)
            if M % 4 in (0, 3):
                total += h_prime(-M)
        d += 1
    return total


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker-Jacobi symbol (a/n) for arbitrary integers.

    Multiplicative extension of the Jacobi symbol with
    (a/2) = 0, +1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8,
    (a/-1) = -1 iff a < 0, and (a/0) = [a = +-1].
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _squarefree(m: int) -> bool:
    m = abs(m)
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        p += 1
    return True


def is_fundamental(D: int) -> bool:
    """Fundamental discriminant: D != 1 and either D = 1 mod 4 and
    squarefree, or D = 0 mod 4 with D/4 squarefree and D/4 = 2 or 3 mod 4."""
    if D == 1:
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def dirichlet_ratio_check(D0: int, f: int) -> bool:
    """h(D0*f^2)/omega(D0*f^2) == h(D0)/omega(D0) * f *
    prod_{p | f} (1 - (D0/p)/p), everything exact."""
    if D0 >= 0 or not is_fundamental(D0):
        raise ValueError(f"not a fundamental discriminant: {D0}")
    if f < 1:
        raise ValueError("f must be positive")
    D = D0 * f * f
    lhs = Fraction(class_number_h(D), omega(D))
    rhs = Fraction(class_number_h(D0), omega(D0)) * f
    for p in _prime_factors(f):
        rhs *= 1 - Fraction(kronecker_symbol(D0, p), p)
    return lhs == rhs


def hurwitz_4n_lemma_check(n: int) -> bool:
    """H(4n) = 4*H(n) for n = 3 mod 8, H(4n) = 2*H(n) for n = 7 mod 8."""
    if n % 4 != 3:
        raise ValueError(f"lemma requires n = 3 mod 4, got {n}")
    mult = 4 if n % 8 == 3 else 2
    return hurwitz_direct(4 * n) == mult * hurwitz_direct(n)


def triple_to_form(tr: Triple) -> QuadForm:
    """(r, s, t) with rs+rt+st = n maps to the reduced form
    (s+t, 2t, r+t) of discriminant -4n."""
    form = QuadForm(tr.s + tr.t, 2 * tr.t, tr.r + tr.t)
    if form.discriminant != -4 * tr.n:
        raise AssertionError(f"discriminant mismatch for {tr}: {form}")
    if not form.is_reduced:
        raise AssertionError(f"image form not reduced for {tr}: {form}")
    return form


@dataclass(frozen=True)
class FormCensus:
    """Reduced forms of one discriminant, bucketed by type and content."""

    D: int
    forms: tuple[QuadForm, ...]
    type_counts: dict[str, int]
    primitive: int
    imprimitive_even: int
    imprimitive_odd: int  # content odd and > 1

    @property
    def A(self) -> int:
        """Number of imprimitive reduced forms with odd content > 1."""
        return self.imprimitive_odd


def classify_forms(D: int) -> FormCensus:
    forms = enumerate_reduced(D)
    type_counts = {t: 0 for t in FORM_TYPES}
    primitive = imp_even = imp_odd = 0
    for f in forms:
        type_counts[f.form_type] += 1
        g = f.content
        if g == 1:
            primitive += 1
        elif g % 2 == 0:
            imp_even += 1
        else:
            imp_odd += 1
    return FormCensus(D, tuple(forms), type_counts, primitive, imp_even, imp_odd)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise AssertionError(f"{what} = {x} is not an integer")
    return x.numerator


def gauss_r3_check(n: int, r3_of: Optional[Callable[[int], int]] = None) -> bool:
    """r_3(n) against the Hurwitz class-number formula.

    n = 1,2,5,6 mod 8: r_3(n) = 12*H(4n); n = 3 mod 8: r_3(n) = 24*H(n);
    n = 7 mod 8: r_3(n) = 0; n = 0 mod 4: r_3(n) = r_3(n/4), recursing.
    The class-number multiples are checked to be integers.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if r3_of is None:
        r3_of = lambda m: counts.r_squares(3, m)
    m = n % 8
    if m == 7:
        return r3_of(n) == 0
    if m in (1, 2, 5, 6):
        return r3_of(n) == _as_int(12 * hurwitz_direct(4 * n), f"12*H({4 * n})")
    if m == 3:
        return r3_of(n) == _as_int(24 * hurwitz_direct(n), f"24*H({n})")
    # n = 0 mod 4
    return r3_of(n) == r3_of(n // 4) and gauss_r3_check(n // 4, r3_of)


def gauss_N3_check(n: int, n3_of: Optional[Callable[[int], int]] = None) -> bool:
    """Primitive representation count N_3(n) against class numbers:
    12*delta_n*h(-4n) for n = 1,2,5,6 mod 8 and 24*delta_n*h(-n) for
    n = 3 mod 8, with delta_1 = 1/2 and delta_3 = 1/3."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n % 8
    if m not in (1, 2, 3, 5, 6):
        raise ValueError(f"theorem does not apply to n = {n} (n mod 8 = {m})")
    if n3_of is None:
        n3_of = counts.n3_primitive
    delta = Fraction(1, 2) if n == 1 else Fraction(1, 3) if n == 3 else Fraction(1)
    if m == 3:
        expected = 24 * delta * class_number_h(-n)
    else:
        expected = 12 * delta * class_number_h(-4 * n)
    return n3_of(n) == _as_int(expected, f"N3 formula at {n}")


def cache_snapshot() -> list[tuple[int, int, int]]:
    """Rows (key, numerator, denominator) of the in-process memo tables;
    negative keys are class numbers h(key), non-negative keys are
    Hurwitz numbers H(key)."""
    rows = [(D, h, 1) for D, h in _CLASS_NUMBER.items()]
    rows += [(N, v.numerator, v.denominator) for N, v in _HURWITZ.items()]
    return sorted(rows)


def cache_restore(rows: list[tuple[int, int, int]]) -> None:
    for key, num, den in rows:
        if key < 0:
            _CLASS_NUMBER[key] = num
        else:
            _HURWITZ[key] = Fraction(num, den)


def cache_clear() -> None:
    _CLASS_NUMBER.clear()
    _HURWITZ.clear()


def recompute_for_key(key: int) -> Fraction:
    """Fresh (memo-bypassing) value for a cache key, for validation."""
    if key < 0:
        return Fraction(sum(1 for f in enumerate_reduced(key) if f.is_primitive))
    return sum(
        (f.hurwitz_weight() for f in enumerate_reduced(-key)), Fraction(0)
    )
