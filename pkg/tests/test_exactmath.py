import math
import random
from fractions import Fraction

import pytest

from conjclass import exactmath as em
from conjclass.errors import UndecidedError
from conjclass.exactmath import Interval, Verdict

import oracles


# number theory ----------------------------------------------------------------

def test_gcd_examples():
    assert em.gcd(0, 7) == 7
    assert em.gcd(9 - 1, 2) == 2
    assert em.gcd(3, 4 - 1) == 3


@pytest.mark.parametrize("n", range(1, 300))
def test_arithmetic_functions_match_sympy(n):
    assert em.euler_phi(n) == oracles.totient(n)
    assert em.moebius(n) == oracles.mobius(n)
    assert em.divisors(n) == oracles.divisor_list(n)


def test_arithmetic_examples():
    assert em.euler_phi(12) == 4
    assert em.moebius(12) == 0
    assert em.divisors(6) == [1, 2, 3, 6]


@pytest.mark.parametrize("fn", [em.euler_phi, em.moebius, em.divisors, em.factorize])
def test_zero_rejected(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_prime_power():
    assert em.prime_power(9) == (3, 2)
    assert em.prime_power(128) == (2, 7)
    assert em.prime_power(12) is None
    assert em.prime_power(1) is None


def test_binomials():
    assert em.binomial(8, 4) == 70
    assert em.gaussian_binomial(4, 1, 2) == 15
    assert em.gaussian_binomial(4, 2, 2) == 35
    with pytest.raises(ValueError):
        em.binomial(3, 4)
    with pytest.raises(ValueError):
        em.gaussian_binomial(3, 4, 2)


@pytest.mark.parametrize("d,k,q", [(4, 2, 2), (3, 1, 3), (3, 2, 3), (4, 1, 3), (3, 1, 4),
                                   (3, 2, 4), (5, 2, 2), (4, 2, 3), (3, 2, 5)])
def test_gaussian_binomial_matches_subspace_enumeration(d, k, q):
    assert em.gaussian_binomial(d, k, q) == oracles.count_subspaces(d, k, q)


def test_gaussian_binomial_symmetry():
    for q in (2, 3, 4, 5):
        for d in range(9):
            for k in range(d + 1):
                assert em.gaussian_binomial(d, k, q) == em.gaussian_binomial(d, d - k, q)


def test_gaussian_binomial_points():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for d in range(1, 10):
            assert em.gaussian_binomial(d, 1, q) == (q**d - 1) // (q - 1)


def test_large_integers_do_not_overflow():
    assert math.factorial(1000) == math.prod(range(1, 1001))
    assert em.gaussian_binomial(20, 10, 9) > 9**99


# intervals -------------------------------------------------------------------

@pytest.mark.parametrize("name", ["e", "pi", "ln2"])
@pytest.mark.parametrize("precision", [1, 5, 20, 60, 150, 280])
def test_enclosure_contains_constant(name, precision):
    iv = em.enclosure(name, precision)
    lo, hi = oracles.mp_fraction_bounds(oracles.mp_constant(name, 320), 300)
    assert iv.lo <= lo and hi <= iv.hi
    assert iv.width <= Fraction(1, 10**precision)


def test_enclosure_examples():
    # both endpoints truncate to the familiar five decimals
    e5 = em.enclosure("e", 5)
    assert math.floor(e5.lo * 10**5) == math.floor(e5.hi * 10**5) == 271828
    assert e5.width <= Fraction(1, 10**5)
    pi5 = em.enclosure("pi", 5)
    assert math.floor(pi5.lo * 10**5) == math.floor(pi5.hi * 10**5) == 314159
    assert pi5.width <= Fraction(1, 10**5)
    assert em.enclosure("e", 10) in em.enclosure("e", 1)


def test_enclosures_nested():
    for name in ("e", "pi", "ln2"):
        prev = em.enclosure(name, 1)
        for p in range(2, 281, 7):
            cur = em.enclosure(name, p)
            assert cur in prev
            prev = cur


def test_enclosure_rejects_unknown_constant():
    with pytest.raises(ValueError):
        em.enclosure("phi", 5)


def test_verdict_examples():
    assert em.verdict(Interval(1, 2), "<", Interval(3, 4)) is Verdict.TRUE
    assert em.verdict(Interval(1, 3), "<", Interval(2, 4)) is Verdict.UNDECIDED
    assert em.verdict(Interval(5, 6), ">=", Interval(1, 2)) is Verdict.TRUE
    assert em.verdict(Interval(5, 6), "≤", Interval(1, 2)) is Verdict.FALSE
    assert em.verdict(Interval(2, 2), "<=", Interval(2, 3)) is Verdict.TRUE
    assert em.verdict(Interval(2, 2), "<", Interval(2, 3)) is Verdict.UNDECIDED


def test_verdict_has_no_truth_value():
    with pytest.raises(TypeError):
        bool(Verdict.TRUE)


def _rand_frac(rng):
    return Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))


def test_outward_rounding_random_pairs():
    rng = random.Random(20240601)
    for _ in range(10_000):
        x, y = _rand_frac(rng), _rand_frac(rng)
        dx, dy = Fraction(rng.randint(0, 100), 10**6), Fraction(rng.randint(0, 100), 10**6)
        X, Y = Interval(x - dx, x + dx), Interval(y - dy, y + dy)
        assert x + y in X + Y
        assert x - y in X - Y
        assert x * y in X * Y
        if not (Y.lo <= 0 <= Y.hi):
            assert x / y in X / Y
        assert x**3 in X**3
        assert x**2 in X**2
        for bits in (8, 30):
            assert (X * Y) in (X * Y).rounded(bits)


def test_transcendental_functions_against_mpmath():
    import mpmath

    mpmath.mp.dps = 80
    rng = random.Random(7)
    for _ in range(200):
        x = Fraction(rng.randint(-4000, 4000), rng.randint(1, 300))
        iv = em.exp(x, 40)
        v = mpmath.exp(mpmath.mpf(x.numerator) / x.denominator)
        lo, hi = oracles.mp_fraction_bounds(v, 70)
        assert iv.lo <= hi and lo <= iv.hi
        # relative width around 10^-40
        assert iv.width <= iv.hi * Fraction(1, 10**35)
    for _ in range(200):
        x = Fraction(rng.randint(1, 10**6), rng.randint(1, 1000))
        v = mpmath.log(mpmath.mpf(x.numerator) / x.denominator)
        lo, hi = oracles.mp_fraction_bounds(v, 70)
        iv = em.log(x, 40)
        assert iv.lo <= hi and lo <= iv.hi
        v = mpmath.sqrt(mpmath.mpf(x.numerator) / x.denominator)
        lo, hi = oracles.mp_fraction_bounds(v, 70)
        iv = em.sqrt(x, 40)
        assert iv.lo <= hi and lo <= iv.hi
        assert iv.width <= Fraction(1, 10**30) * (1 + iv.hi)


def test_sqrt_of_integers_brackets_isqrt():
    for n in range(1, 500):
        iv = em.sqrt(n, 30)
        r = math.isqrt(n)
        assert r <= iv.hi and iv.lo <= r + 1
        assert iv.lo**2 <= n <= iv.hi**2


def test_roots_exact_on_perfect_powers():
    assert em.root(Fraction(27, 8), 3, 10) == Interval.exact(Fraction(3, 2))
    assert em.sqrt(49) == Interval.exact(7)


def test_log_base_exact_and_general():
    assert em.log(8, 20, base=2) == Interval.exact(3)
    assert em.log(Fraction(1, 9), 20, base=3) == Interval.exact(-2)
    iv = em.log(10, 40, base=2)
    lo, hi = oracles.mp_fraction_bounds(__import__("mpmath").log(10, 2), 60)
    assert iv.lo <= hi and lo <= iv.hi


def test_refinement_is_monotone_for_expressions():
    def expr(p):
        pi = em.enclosure("pi", p)
        return em.exp(pi * em.sqrt(Fraction(2 * 50, 3), p), p)

    prev = expr(10)
    for p in (20, 40, 80, 160):
        cur = expr(p)
        assert cur.intersect(prev).width <= prev.width
        assert cur.lo <= prev.hi and prev.lo <= cur.hi
        prev = cur


def test_power_with_interval_exponent():
    iv = em.power(5 * em.enclosure("e", 30), em.sqrt(2, 30) + 3, 30)
    import mpmath

    mpmath.mp.dps = 60
    v = (5 * mpmath.e) ** (3 + mpmath.sqrt(2))
    lo, hi = oracles.mp_fraction_bounds(v, 50)
    assert iv.lo <= hi and lo <= iv.hi


def test_decide_resolves_and_raises_when_stuck():
    assert em.decide(lambda p: (em.enclosure("e", p), em.enclosure("pi", p)), "<")
    assert not em.decide(lambda p: (em.enclosure("e", p), Interval.exact(Fraction(27, 10))), "<")
    with pytest.raises(UndecidedError):
        em.decide(lambda p: (em.enclosure("pi", p), em.enclosure("pi", p)), "<", max_precision=40)


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        Interval(2, 1)
