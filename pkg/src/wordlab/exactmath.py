"""Exact integer brackets for logarithms and real powers.

The bound formulas multiply big rational constants by powers whose
exponents contain logarithms, so the results are usually irrational.
Asserted values must not depend on floating point: every quantity is
bracketed between two Fractions obtained with integer arithmetic only.
Logarithm digits come from the squaring method (each bit of log2(m) is
an integer comparison of m^(2^j) against a power of two), fractional
powers of two from chains of integer square roots.  Brackets shrink as
`prec` grows; callers refine until a floor or ceiling is pinned.

An "interval" here is a pair (lo, hi) of Fractions with lo <= x <= hi;
lo == hi marks an exact value.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Interval = tuple[Fraction, Fraction]

_GUARD = 64


def exact_int_log(base: int, value: int) -> int | None:
    """Return k with base**k == value, or None if value is not a power."""
    if base < 2 or value < 1:
        return None
    k, acc = 0, 1
    while acc < value:
        acc *= base
        k += 1
    return k if acc == value else None


def floor_log(base: int, value: int) -> int:
    """Largest e >= 0 with base**e <= value (value >= 1)."""
    if base < 2 or value < 1:
        raise ValueError("floor_log needs base >= 2 and value >= 1")
    e, acc = 0, base
    while acc <= value:
        acc *= base
        e += 1
    return e


def ceil_log(base: int, value: int) -> int:
    """Smallest c >= 0 with base**c >= value (value >= 1)."""
    if base < 2 or value < 1:
        raise ValueError("ceil_log needs base >= 2 and value >= 1")
    c, acc = 0, 1
    while acc < value:
        acc *= base
        c += 1
    return c


def _floor_fr(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil_fr(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def log2_bounds(x: Fraction, prec: int) -> Interval:
    """Bracket log2(x) for x > 0 within roughly 2**-prec."""
    if x <= 0:
        raise ValueError("log2 needs a positive argument")
    num, den = x.numerator, x.denominator
    # Integer part: 2**e <= x < 2**(e+1).
    e = num.bit_length() - den.bit_length()
    while not _le_pow2(e, num, den):
        e -= 1
    while _le_pow2(e + 1, num, den):
        e += 1
    m = x / (Fraction(2) ** e)
    if m == 1:
        return Fraction(e), Fraction(e)
    # Fractional bits of log2(m), m in (1, 2), by interval squaring.
    s = 2 * prec + _GUARD
    one = 1 << s
    two = 2 << s
    a_lo = (m.numerator << s) // m.denominator
    a_hi = -((-(m.numerator << s)) // m.denominator)
    frac_lo = 0
    frac_hi = 1 << prec
    for j in range(1, prec + 1):
        a_lo = (a_lo * a_lo) >> s
        a_hi = (-((-(a_hi * a_hi)) >> s)) + 1
        if a_hi < two:
            continue
        if a_lo >= two:
            frac_lo |= 1 << (prec - j)
            a_lo >>= 1
            a_hi = (a_hi + 1) >> 1
            continue
        # Interval straddles the bit decision: stop with a coarser bracket.
        frac_hi = frac_lo + (1 << (prec - j + 1))
        break
    else:
        frac_hi = frac_lo + 1
    scale = Fraction(1, 1 << prec)
    assert a_lo >= one - 2, "lost the [1,2) normalization"
    return Fraction(e) + frac_lo * scale, Fraction(e) + frac_hi * scale


def _le_pow2(e: int, num: int, den: int) -> bool:
    # 2**e <= num/den, exactly.
    if e >= 0:
        return (den << e) <= num
    return den <= (num << (-e))


def pow2_bounds(x: Fraction, prec: int) -> Interval:
    """Bracket 2**x for x >= 0 within relative error about 2**-prec."""
    if x < 0:
        raise ValueError("pow2_bounds needs a nonnegative exponent")
    k = _floor_fr(x)
    f = x - k
    base = Fraction(1 << k)
    if f == 0:
        return base, base
    c = (f.numerator << prec) // f.denominator
    d_lo = _pow2_dyadic(c, prec, lower=True)
    d_hi = _pow2_dyadic(c + 1, prec, lower=False)
    return base * d_lo, base * d_hi


def _pow2_dyadic(c: int, prec: int, lower: bool) -> Fraction:
    # One-sided bound on 2**(c / 2**prec), 0 <= c <= 2**prec.
    s = prec + _GUARD
    if c >= 1 << prec:
        return Fraction(2)
    # roots[i] brackets 2**(1 / 2**(i+1)) scaled by 2**s.
    acc = 1 << s
    root = 2 << s
    for i in range(1, prec + 1):
        if lower:
            root = isqrt(root << s)
        else:
            root = isqrt(root << s) + 1
        if (c >> (prec - i)) & 1:
            if lower:
                acc = (acc * root) >> s
            else:
                acc = (-((-(acc * root)) >> s)) + 1
    return Fraction(acc, 1 << s)


def iv_exact(x: Fraction | int) -> Interval:
    f = Fraction(x)
    return f, f


def iv_add(a: Interval, b: Interval) -> Interval:
    return a[0] + b[0], a[1] + b[1]


def iv_scale(a: Interval, c: Fraction | int) -> Interval:
    c = Fraction(c)
    if c < 0:
        raise ValueError("negative scaling not used here")
    return a[0] * c, a[1] * c


def iv_mul(a: Interval, b: Interval) -> Interval:
    if a[0] < 0 or b[0] < 0:
        raise ValueError("interval product restricted to nonnegative operands")
    return a[0] * b[0], a[1] * b[1]


def iv_log2(a: Interval, prec: int) -> Interval:
    if a[0] == a[1]:
        k = exact_int_log(2, a[0].numerator)
        if k is not None and a[0].denominator == 1:
            return iv_exact(k)
    lo = log2_bounds(a[0], prec)[0]
    hi = log2_bounds(a[1], prec)[1]
    return lo, hi


def iv_log(base: int, a: Interval, prec: int) -> Interval:
    """log_base over an interval of positive values."""
    if a[0] <= 0:
        raise ValueError("logarithm of a nonpositive value")
    if a[0] == a[1] and a[0].denominator == 1:
        k = exact_int_log(base, a[0].numerator)
        if k is not None:
            return iv_exact(k)
    num = iv_log2(a, prec)
    den = log2_bounds(Fraction(base), prec)
    if num[0] < 0:
        raise ValueError("logarithm argument below 1 is outside the domain used here")
    return num[0] / den[1], num[1] / den[0]


def iv_pow(base: int, expo: Interval, prec: int) -> Interval:
    """base**expo for an integer base >= 2 and a nonnegative exponent."""
    if base < 2:
        raise ValueError("iv_pow needs base >= 2")
    if expo[0] == expo[1]:
        e = expo[0]
        if e.denominator == 1:
            return iv_exact(Fraction(base) ** e.numerator)
        root = _exact_root(base ** e.numerator, e.denominator)
        if root is not None:
            return iv_exact(Fraction(root))
    lg = log2_bounds(Fraction(base), prec)
    g = expo[0] * lg[0], expo[1] * lg[1]
    lo = pow2_bounds(g[0], prec)[0]
    hi = pow2_bounds(g[1], prec)[1]
    return lo, hi


def integer_root(value: int, k: int) -> int:
    """floor(value ** (1/k)) for value >= 0, k >= 1, by integer Newton."""
    if value < 0 or k < 1:
        raise ValueError("integer_root needs value >= 0 and k >= 1")
    if value in (0, 1) or k == 1:
        return value
    x = 1 << ((value.bit_length() + k - 1) // k)  # certainly >= the root
    while True:
        y = ((k - 1) * x + value // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _exact_root(value: int, k: int) -> int | None:
    if value < 0 or k < 1:
        return None
    r = integer_root(value, k)
    return r if r**k == value else None


_PRECS = (48, 96, 192, 384, 768, 1536, 3072)


def refine_ceil(make: "callable[[int], Interval]") -> int:
    """Smallest integer >= the bracketed value, refined until pinned."""
    for prec in _PRECS:
        lo, hi = make(prec)
        if lo == hi:
            return _ceil_fr(lo)
        c_lo, c_hi = _ceil_fr(lo), _ceil_fr(hi)
        if c_lo == c_hi:
            return c_lo
    raise ArithmeticError("bracket did not converge; value sits on an integer?")


def refine_floor(make: "callable[[int], Interval]") -> int:
    """Largest integer <= the bracketed value, refined until pinned."""
    for prec in _PRECS:
        lo, hi = make(prec)
        if lo == hi:
            return _floor_fr(lo)
        f_lo, f_hi = _floor_fr(lo), _floor_fr(hi)
        if f_lo == f_hi:
            return f_lo
    raise ArithmeticError("bracket did not converge; value sits on an integer?")
