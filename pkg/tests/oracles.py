"""Independent reference implementations used only by the tests.

Nothing here imports the package's production code paths; each oracle
recomputes a quantity by brute force or through a third-party library.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

import mpmath
import sympy


def mp_constant(name: str, digits: int = 120) -> mpmath.mpf:
    with mpmath.workdps(digits):
        return {"e": +mpmath.e, "pi": +mpmath.pi, "ln2": +mpmath.ln2}[name]


def mp_fraction_bounds(x: mpmath.mpf, digits: int = 120) -> tuple[Fraction, Fraction]:
    """A rational bracket of width ``2*10^-(digits-5)`` around an mpmath value."""
    with mpmath.workdps(digits + 10):
        s = mpmath.nstr(x, digits, strip_zeros=False)
    v = Fraction(s)
    eps = Fraction(1, 10 ** (digits - 5))
    return v - eps, v + eps


def totient(n: int) -> int:
    return int(sympy.totient(n))


def mobius(n: int) -> int:
    return int(sympy.mobius(n))


def divisor_list(n: int) -> list[int]:
    return [int(d) for d in sympy.divisors(n)]


# ---------------------------------------------------------------------------
# finite fields for subspace enumeration (prime fields and GF(4) only)

_GF4_ADD = [[a ^ b for b in range(4)] for a in range(4)]
# GF(4) = {0, 1, w, w+1} encoded 0..3 with w^2 = w + 1
_GF4_MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]


def _field(q: int):
    if q == 4:
        return (lambda a, b: _GF4_ADD[a][b]), (lambda a, b: _GF4_MUL[a][b])
    if not sympy.isprime(q):
        raise ValueError("oracle field supports primes and 4")
    return (lambda a, b: (a + b) % q), (lambda a, b: (a * b) % q)


def _span(vectors, q):
    add, mul = _field(q)
    d = len(vectors[0])
    out = set()
    for coeffs in product(range(q), repeat=len(vectors)):
        v = [0] * d
        for c, vec in zip(coeffs, vectors):
            v = [add(x, mul(c, y)) for x, y in zip(v, vec)]
        out.add(tuple(v))
    return frozenset(out)


def count_subspaces(d: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of GF(q)^d, by spanning every ``k``-tuple."""
    vectors = [v for v in product(range(q), repeat=d) if any(v)]
    spaces = set()
    for combo in combinations(vectors, k):
        s = _span(list(combo), q)
        if len(s) == q**k:
            spaces.add(s)
    return len(spaces)


def count_flags(d: int, q: int) -> int:
    """Incident (1-space, hyperplane) pairs in GF(q)^d."""
    points = {_span([v], q) for v in product(range(q), repeat=d) if any(v)}
    hyper = set()
    vectors = [v for v in product(range(q), repeat=d) if any(v)]
    for combo in combinations(vectors, d - 1):
        s = _span(list(combo), q)
        if len(s) == q ** (d - 1):
            hyper.add(s)
    return sum(1 for p in points for h in hyper if p <= h)


def count_block_systems(d: int, k: int) -> int:
    """Partitions of ``{0..d-1}`` into blocks of size ``k``, by recursive enumeration."""
    def rec(remaining):
        if not remaining:
            return 1
        first, rest = remaining[0], remaining[1:]
        return sum(rec([x for x in rest if x not in c]) for c in combinations(rest, k - 1))

    return rec(list(range(d)))


# ---------------------------------------------------------------------------
# partitions and small permutation groups


def partitions_brute(n: int):
    """Partitions of ``n`` as sorted tuples, from compositions (exponential; n <= 20)."""
    out = set()

    def rec(rem, parts):
        if rem == 0:
            out.add(tuple(sorted(parts, reverse=True)))
            return
        for x in range(1, rem + 1):
            rec(rem - x, parts + [x])

    if n <= 20:
        rec(n, [])
        return out
    raise ValueError("use a smaller n")


def class_count_by_commuting_pairs(elements, compose) -> int:
    """``k(G) = #{(x, y) : xy = yx} / |G|`` with plain Python loops."""
    total = sum(1 for x in elements for y in elements if compose(x, y) == compose(y, x))
    assert total % len(elements) == 0
    return total // len(elements)


def symmetric_elements(n: int):
    return list(permutations(range(n)))


def perm_compose(p, q):
    return tuple(q[i] for i in p)


def sign(p) -> int:
    s, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            s *= -1 if length % 2 == 0 else 1
    return s


def wreath_class_count_direct(base_elems, top_elems, base_compose):
    """Class count of ``A wr P`` from tuples ``(a_1..a_r; pi)`` by commuting-pair counting.

    Multiplication: ``(a; s)(b; t) = (a_i * b_{s(i)}; s then t)``.
    """
    r = len(top_elems[0])
    elems = [(tuple(a), s) for a in product(base_elems, repeat=r) for s in top_elems]

    def mul(x, y):
        a, s = x
        b, t = y
        return tuple(base_compose(a[i], b[s[i]]) for i in range(r)), perm_compose(s, t)

    return class_count_by_commuting_pairs(elems, mul)
