"""Exact integer arithmetic and outward-rounded rational intervals.

Every transcendental quantity used by the inequality checkers (powers of
``e``, ``pi``, square roots, logarithms) is carried as an :class:`Interval`
with :class:`~fractions.Fraction` endpoints.  A comparison between two
intervals is only *decided* when they are disjoint, see :func:`verdict`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from .errors import UndecidedError

Number = Union[int, Fraction]

# Stored decimal expansions; each is within 10**-298 of the true constant.
_E_DIGITS = (
    "2.71828182845904523536028747135266249775724709369995957496696762772407"
    "6630353547594571382178525166427427466391932003059921817413596629043572"
    "9003342952605956307381323286279434907632338298807531952510190115738341"
    "8793070215408914993488416750924476146066808226480016847741185374234544"
    "2437107539077744992069"
)
_PI_DIGITS = (
    "3.14159265358979323846264338327950288419716939937510582097494459230781"
    "6406286208998628034825342117067982148086513282306647093844609550582231"
    "7253594081284811174502841027019385211055596446229489549303819644288109"
    "7566593344612847564823378678316527120190914564856692346034861045432664"
    "8213393607260249141273"
)
_LN2_DIGITS = (
    "0.69314718055994530941723212145817656807550013436025525412068000949339"
    "3621969694715605863326996418687542001481020570685733685520235758130557"
    "0326707516350759619307275708283714351903070386238916734711233501153644"
    "9795523912047517268157493206515552473413952588295045300709532636664265"
    "4104239157814952043740"
)
_STORED_ERROR = Fraction(1, 10**298)
_STORED = {"e": _E_DIGITS, "pi": _PI_DIGITS, "ln2": _LN2_DIGITS}

#: Largest precision (decimal digits) that :func:`enclosure` can honour.
MAX_PRECISION = 280

#: Default ceiling for automatic refinement in :func:`decide`.
DECIDE_MAX_PRECISION = 200


# ---------------------------------------------------------------------------
# elementary number theory


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n >= 1`` as ``((p, e), ...)`` by trial division."""
    _check_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, f)`` with ``q == p**f``, or ``None`` if ``q`` is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    return fac[0]


def binomial(d: int, k: int) -> int:
    if d < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    if k > d:
        raise ValueError(f"k={k} exceeds d={d}")
    return math.comb(d, k)


def gaussian_binomial(d: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of a ``d``-dimensional space over GF(q)."""
    if d < 0 or k < 0:
        raise ValueError("gaussian_binomial arguments must be non-negative")
    if k > d:
        raise ValueError(f"k={k} exceeds d={d}")
    if q < 2:
        raise ValueError("q must be at least 2")
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


# ---------------------------------------------------------------------------
# intervals


def _frac(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


@dataclass(frozen=True)
class Interval:
    """Closed rational interval ``[lo, hi]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, x: Number) -> "Interval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= _frac(x) <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def rounded(self, bits: int) -> "Interval":
        """Round outward to roughly ``bits`` significant bits."""
        return Interval(_floor_rel(self.lo, bits), _ceil_rel(self.hi, bits))

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"

    # arithmetic -------------------------------------------------------------

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __add__(self, other):
        o = as_interval(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_interval(other)
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return as_interval(other) - self

    def __mul__(self, other):
        o = as_interval(other)
        if o.lo == o.hi and self.lo == self.hi:
            return Interval.exact(self.lo * o.lo)
        prods = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(prods), max(prods))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_interval(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("divisor interval contains zero")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, other):
        return as_interval(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self**-n)
        if n == 0:
            return Interval.exact(1)
        a, b = self.lo**n, self.hi**n
        if n % 2 == 1:
            return Interval(a, b)
        if self.lo >= 0:
            return Interval(a, b)
        if self.hi <= 0:
            return Interval(b, a)
        return Interval(0, max(a, b))


def as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.exact(_frac(x))


def _magnitude_shift(x: Fraction, bits: int) -> int:
    e = abs(x.numerator).bit_length() - x.denominator.bit_length()
    return bits - e


def _floor_rel(x: Fraction, bits: int) -> Fraction:
    if x == 0 or x.denominator == 1:
        return x
    s = _magnitude_shift(x, bits)
    if s >= 0:
        return Fraction((x.numerator << s) // x.denominator, 1 << s)
    return Fraction((x.numerator // (x.denominator << -s)) << -s)


def _ceil_rel(x: Fraction, bits: int) -> Fraction:
    return -_floor_rel(-x, bits)


def _bits(precision: int) -> int:
    return math.ceil(precision * 3.321928094887362) + 16


# ---------------------------------------------------------------------------
# constants


@lru_cache(maxsize=None)
def _stored_value(name: str) -> Fraction:
    return Fraction(_STORED[name])


def enclosure(constant: str, precision: int) -> Interval:
    """Rational interval of width at most ``10**-precision`` containing ``constant``.

    Supported constants are ``"e"``, ``"pi"`` and ``"ln2"``.  Intervals for
    increasing precision are nested.
    """
    if constant not in _STORED:
        raise ValueError(f"unsupported constant {constant!r}")
    if precision < 1 or precision > MAX_PRECISION:
        raise ValueError(f"precision must lie in [1, {MAX_PRECISION}]")
    v = _stored_value(constant)
    scale = 10 ** (precision + 1)
    lo = math.floor((v - _STORED_ERROR) * scale)
    hi = math.ceil((v + _STORED_ERROR) * scale)
    return Interval(Fraction(lo, scale), Fraction(hi, scale))


def _constant(name: str, bits: int, extra_digits: int = 0) -> Interval:
    digits = min(MAX_PRECISION, math.ceil(bits / 3.3219) + 4 + extra_digits)
    return enclosure(name, digits)


# ---------------------------------------------------------------------------
# monotone functions


def _pow_rounded(x: Interval, n: int, bits: int) -> Interval:
    """``x**n`` for ``x > 0`` and ``n >= 0`` with outward rounding at each squaring."""
    assert x.lo > 0 and n >= 0
    result = Interval.exact(1)
    base = x
    while n:
        if n & 1:
            result = (result * base).rounded(bits)
        n >>= 1
        if n:
            base = (base * base).rounded(bits)
    return result


def _exp_unit(F: int, w: int, upper: bool) -> int:
    """Bound on ``2**w * exp(F / 2**w)`` for ``0 <= F <= 2**w``."""
    one = 1 << w
    total = 0
    term = one
    k = 0
    while term > 1:
        total += term
        k += 1
        if upper:
            term = -(-(term * F) // (k << w))
        else:
            term = (term * F) // (k << w)
    if upper:
        # tail after term k is at most twice the k-th term since F/2**w <= 1
        total += 2 * max(term, 1) + 1
    return total


def _exp_point(a: Fraction, bits: int, upper: bool) -> Fraction:
    n = math.floor(a)
    f = a - n
    w = bits + 24 + abs(n).bit_length()
    F = math.ceil(f * (1 << w)) if upper else math.floor(f * (1 << w))
    frac_part = Fraction(_exp_unit(F, w, upper), 1 << w)
    e = _constant("e", bits, extra_digits=len(str(abs(n))))
    e_n = _pow_rounded(e, abs(n), bits + 8)
    if n < 0:
        e_n = (1 / e_n).rounded(bits + 8)
    value = e_n.hi * frac_part if upper else e_n.lo * frac_part
    return _ceil_rel(value, bits) if upper else _floor_rel(value, bits)


def exp(x, precision: int = 30) -> Interval:
    """Outward enclosure of ``exp`` over the interval ``x``."""
    x = as_interval(x)
    bits = _bits(precision)
    if x.lo == x.hi == 0:
        return Interval.exact(1)
    return Interval(_exp_point(x.lo, bits, False), _exp_point(x.hi, bits, True))


def _atanh_series(Z: int, w: int, upper: bool) -> int:
    """Bound on ``2**w * 2*atanh(Z / 2**w)`` for ``0 <= Z / 2**w <= 1/2``."""
    if Z == 0:
        return 0
    z2 = (Z * Z) >> w if not upper else -(-(Z * Z) >> w)
    power = Z
    total = 0
    j = 0
    while power > 1:
        total += power // (2 * j + 1) if not upper else -(-power // (2 * j + 1))
        j += 1
        if upper:
            power = -(-(power * z2) >> w)
        else:
            power = (power * z2) >> w
    if upper:
        # geometric tail, ratio z**2 <= 1/4
        total += 2 * max(power, 1) + 1
    return 2 * total


def _ln_point(x: Fraction, bits: int, upper: bool) -> Fraction:
    if x <= 0:
        raise ValueError("logarithm of a non-positive number")
    if x == 1:
        return Fraction(0)
    k = x.numerator.bit_length() - x.denominator.bit_length()
    m = x / Fraction(2) ** k
    if m < 1:
        k -= 1
        m *= 2
    elif m >= 2:
        k += 1
        m /= 2
    z = (m - 1) / (m + 1)
    w = bits + 24 + abs(k).bit_length()
    Z = math.ceil(z * (1 << w)) if upper else math.floor(z * (1 << w))
    ln_m = Fraction(_atanh_series(Z, w, upper), 1 << w)
    if k == 0:
        value = ln_m
    else:
        ln2 = _constant("ln2", bits, extra_digits=len(str(abs(k))))
        part = ln2 * k
        value = (part.hi if upper else part.lo) + ln_m
    return _ceil_rel(value, bits) if upper else _floor_rel(value, bits)


def _exact_log(x: Fraction, base: int) -> int | None:
    """Integer ``t`` with ``base**t == x`` if one exists."""
    if base < 2 or x <= 0:
        return None
    if x.denominator == 1:
        n, sign = x.numerator, 1
    elif x.numerator == 1:
        n, sign = x.denominator, -1
    else:
        return None
    t = 0
    while n % base == 0:
        n //= base
        t += 1
    return sign * t if n == 1 else None


def log(x, precision: int = 30, base: Number | None = None) -> Interval:
    """Outward enclosure of the logarithm of ``x``; natural log unless ``base`` is given.

    Exact integer powers of an integer ``base`` give a degenerate interval.
    """
    x = as_interval(x)
    if x.lo <= 0:
        raise ValueError("logarithm of an interval reaching zero or below")
    bits = _bits(precision)
    if base is not None:
        b = _frac(base)
        if x.lo == x.hi and b.denominator == 1:
            t = _exact_log(x.lo, b.numerator)
            if t is not None:
                return Interval.exact(t)
        ln_b = Interval(_ln_point(b, bits + 8, False), _ln_point(b, bits + 8, True))
        return (log(x, precision + 3) / ln_b).rounded(bits)
    return Interval(_ln_point(x.lo, bits, False), _ln_point(x.hi, bits, True))


def _iroot(n: int, k: int) -> int:
    """Floor of the real ``k``-th root of ``n >= 0``."""
    if n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _root_point(x: Fraction, k: int, bits: int, upper: bool) -> Fraction:
    if x < 0:
        raise ValueError("root of a negative number")
    if x == 0:
        return x
    p, q = x.numerator, x.denominator
    rp, rq = _iroot(p, k), _iroot(q, k)
    if rp**k == p and rq**k == q:
        return Fraction(rp, rq)
    # x**(1/k) = (p * q**(k-1))**(1/k) / q
    n = p * q ** (k - 1)
    s = max(0, bits - (n.bit_length() // k) + 2)
    r = _iroot(n << (k * s), k)
    if upper and r**k != n << (k * s):
        r += 1
    return Fraction(r, q << s)


def root(x, k: int, precision: int = 30) -> Interval:
    """Outward enclosure of the real ``k``-th root of a non-negative interval."""
    x = as_interval(x)
    if k < 1:
        raise ValueError("root index must be positive")
    bits = _bits(precision)
    return Interval(_root_point(x.lo, k, bits, False), _root_point(x.hi, k, bits, True))


def sqrt(x, precision: int = 30) -> Interval:
    return root(x, 2, precision)


def rational_power(x, exponent: Number, precision: int = 30) -> Interval:
    """``x**exponent`` for a positive interval ``x`` and rational ``exponent``."""
    x = as_interval(x)
    e = _frac(exponent)
    if x.lo <= 0:
        raise ValueError("rational_power needs a positive base")
    if e.denominator == 1:
        return x ** int(e)
    powered = x ** e.numerator if e.numerator > 0 else 1 / (x ** -e.numerator)
    return root(powered, e.denominator, precision)


def power(x, y, precision: int = 30) -> Interval:
    """``x**y`` for a positive interval base and an interval exponent."""
    x, y = as_interval(x), as_interval(y)
    if y.lo == y.hi:
        return rational_power(x, y.lo, precision)
    return exp(y * log(x, precision + 5), precision)


# ---------------------------------------------------------------------------
# verdicts


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "undecided"

    def __bool__(self):
        raise TypeError("a Verdict has no truth value; compare with Verdict.TRUE")


_RELATIONS = {
    "<": "<",
    "<=": "<=",
    "≤": "<=",
    ">": ">",
    ">=": ">=",
    "≥": ">=",
}


def verdict(lhs, rel: str, rhs) -> Verdict:
    """Decide ``lhs rel rhs`` for intervals; undecided unless they separate."""
    a, b = as_interval(lhs), as_interval(rhs)
    try:
        rel = _RELATIONS[rel]
    except KeyError:
        raise ValueError(f"unknown relation {rel!r}") from None
    if rel in (">", ">="):
        a, b = b, a
        rel = "<" if rel == ">" else "<="
    if rel == "<":
        if a.hi < b.lo:
            return Verdict.TRUE
        if a.lo >= b.hi:
            return Verdict.FALSE
    else:
        if a.hi <= b.lo:
            return Verdict.TRUE
        if a.lo > b.hi:
            return Verdict.FALSE
    return Verdict.UNDECIDED


def decide(
    build: Callable[[int], tuple[Interval, Interval]],
    rel: str,
    start: int = 20,
    max_precision: int = DECIDE_MAX_PRECISION,
) -> bool:
    """Evaluate ``build(precision)`` at doubling precision until the verdict is decided.

    Successive enclosures are intersected, so refinement never loses ground.
    Raises :class:`UndecidedError` once ``max_precision`` is exhausted.
    """
    precision = start
    lhs = rhs = None
    while True:
        a, b = build(precision)
        lhs = a if lhs is None else lhs.intersect(a)
        rhs = b if rhs is None else rhs.intersect(b)
        v = verdict(lhs, rel, rhs)
        if v is not Verdict.UNDECIDED:
            return v is Verdict.TRUE
        if precision >= max_precision:
            raise UndecidedError(
                f"comparison {rel!r} undecided at {precision} digits: {lhs} vs {rhs}"
            )
        precision = min(2 * precision, max_precision)
