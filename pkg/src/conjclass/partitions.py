"""Partition counting, the class numbers of S_d and A_d, and the partition-based
inequality checks (Pribitkin, Stirling, Praeger-Saxl and the degree chains
used to bound the alternating case).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from . import exactmath as em
from .errors import UndecidedError
from .exactmath import Interval

# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be non-increasing")

    @property
    def sum(self) -> int:
        return sum(self.parts)

    @property
    def is_even(self) -> bool:
        """Sign of the cycle type: ``sum - #parts`` even."""
        return (self.sum - len(self.parts)) % 2 == 0

    @property
    def has_distinct_odd_parts(self) -> bool:
        return all(p % 2 for p in self.parts) and len(set(self.parts)) == len(self.parts)


def partitions_of(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every partition of ``n`` as a non-increasing tuple (exhaustive oracle)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


_P_TABLE = [1]
_P_LOCK = threading.Lock()


def p(n: int) -> int:
    """Number of partitions of ``n`` by Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(_P_TABLE):
        return _P_TABLE[n]
    with _P_LOCK:
        table = _P_TABLE
        for m in range(len(table), n + 1):
            total = 0
            j = 1
            while True:
                g1 = j * (3 * j - 1) // 2
                if g1 > m:
                    break
                sign = 1 if j % 2 else -1
                total += sign * table[m - g1]
                g2 = g1 + j
                if g2 <= m:
                    total += sign * table[m - g2]
                j += 1
            table.append(total)
        return table[n]


def p_dp(n: int) -> int:
    """Number of partitions of ``n`` by the coin-change recurrence (oracle)."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            ways[m] += ways[m - part]
    return ways[n]


@dataclass(frozen=True)
class PartitionClassification:
    total: int
    even_count: int
    odd_count: int
    distinct_odd_count: int


@lru_cache(maxsize=1024)
def classify(d: int) -> PartitionClassification:
    """Split the partitions of ``d`` by cycle-type sign and count those into
    distinct odd parts, by dynamic programming."""
    if d < 1:
        raise ValueError("d must be positive")
    # by_parity[m][s] counts partitions of m with (#parts mod 2) == s
    by_parity = [[0, 0] for _ in range(d + 1)]
    by_parity[0][0] = 1
    for part in range(1, d + 1):
        for m in range(part, d + 1):
            prev = by_parity[m - part]
            by_parity[m][0] += prev[1]
            by_parity[m][1] += prev[0]
    even = by_parity[d][d % 2]
    odd = by_parity[d][1 - d % 2]
    distinct = [1] + [0] * d
    for part in range(1, d + 1, 2):
        for m in range(d, part - 1, -1):
            distinct[m] += distinct[m - part]
    return PartitionClassification(even + odd, even, odd, distinct[d])


def classify_by_enumeration(d: int) -> PartitionClassification:
    even = odd = distinct = 0
    for parts in partitions_of(d):
        lam = Partition(parts)
        if lam.is_even:
            even += 1
        else:
            odd += 1
        if lam.has_distinct_odd_parts:
            distinct += 1
    return PartitionClassification(even + odd, even, odd, distinct)


def k_symmetric(d: int) -> int:
    if d < 1:
        raise ValueError("d must be positive")
    return p(d)


@lru_cache(maxsize=None)
def _k_alternating_oracle(d: int) -> int:
    from .catalog import alternating

    return alternating(d).k()


def k_alternating(d: int) -> int:
    """Class number of ``A_d``.

    Brute force on the explicit group for ``d <= 9``; for larger ``d`` the even
    partitions plus the partitions into distinct odd parts (those classes split).
    """
    if d < 1:
        raise ValueError("d must be positive")
    if d <= 9:
        return _k_alternating_oracle(d)
    c = classify(d)
    return c.even_count + c.distinct_odd_count


def two_distinct_odd_count(l: int) -> int:
    """Ways to write the even number ``l >= 10`` as a sum of two distinct odd numbers."""
    if l % 2:
        raise ValueError("l must be even")
    if l < 10:
        raise ValueError("l must be at least 10")
    enumerated = sum(1 for b in range(1, l, 2) if b < l - b)
    assert enumerated == l // 4
    return l // 4


# ---------------------------------------------------------------------------
# inequality checks


def check_pribitkin(d: int) -> bool:
    """Decide ``p(d) < exp(pi sqrt(2d/3)) / d**(3/4)``."""
    if d < 1:
        raise ValueError("d must be positive")
    lhs = p(d)

    def build(prec):
        pi = em.enclosure("pi", prec)
        rhs = em.exp(pi * em.sqrt(Fraction(2 * d, 3), prec), prec)
        rhs = rhs / em.root(d**3, 4, prec)
        return Interval.exact(lhs), rhs

    return em.decide(build, "<")


def check_stirling(d: int) -> bool:
    """Decide ``sqrt(2 pi) d**(d+1/2) e**-d <= d! <= e d**(d+1/2) e**-d``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    fact = Interval.exact(math.factorial(d))

    def core(prec):
        # d**(d + 1/2) * e**-d
        return (d**d) * em.sqrt(d, prec) * em.exp(-d, prec)

    def build_lower(prec):
        two_pi = em.enclosure("pi", prec) * 2
        return em.sqrt(two_pi.rounded(em._bits(prec)), prec) * core(prec), fact

    def build_upper(prec):
        return fact, em.enclosure("e", prec) * core(prec)

    return em.decide(build_lower, "<=") and em.decide(build_upper, "<=")


def check_praeger_saxl(order: int, d: int) -> bool:
    """``order < 4**d`` as exact integers."""
    return order < 4**d


def imprimitive_index(d: int, k: int, l: int) -> int:
    """``d! / ((k!)**l l!)``: the number of partitions of ``d`` points into ``l`` blocks of size ``k``."""
    if k * l != d:
        raise ValueError("need d == k * l")
    return math.factorial(d) // (math.factorial(k) ** l * math.factorial(l))


def check_imprimitive_index_bound(d: int, k: int, l: int) -> bool:
    """``n >= l**(d-l) / (d/l)**(l/2)`` for ``n = d!/((k!)**l l!)``, squared to stay integral."""
    n = imprimitive_index(d, k, l)
    return n * n * k**l >= l ** (2 * (d - l))


# ---------------------------------------------------------------------------
# registered inequality chains


@dataclass(frozen=True)
class Inequality:
    name: str
    text: str
    rel: str
    build: Callable[[int, int, int], tuple[Interval, Interval]]
    d_min: int = 1
    d_max: int = 200


def _pi_sqrt_term(d: int, prec: int) -> Interval:
    return em.enclosure("pi", prec) * em.sqrt(Fraction(2 * d, 3), prec)


def _primitive_chain(d, prec, base):
    e = em.enclosure("e", prec)
    exponent = d + em.sqrt(d, prec)
    lhs = 2 * em.power(5 * e, exponent, prec)
    rhs = em.root(d ** (4 * d + 5), 4, prec)
    return lhs, rhs


def _final_chain(d, prec, base):
    log_e = em.log(em.enclosure("e", prec + 2), prec, base=base)
    rhs = Fraction(1, 4) * em.log(d, prec, base=base) + _pi_sqrt_term(d, prec) * log_e + 2
    return Interval.exact(d), rhs


def _imprimitive_chain(d, prec, base):
    log_e = em.log(em.enclosure("e", prec + 2), prec, base=base)
    lhs = d - em.log(d, prec, base=base) - 1
    rhs = _pi_sqrt_term(d, prec) * log_e + 1
    return lhs, rhs


def _primitive_direct_failure(d, prec, base):
    e = em.enclosure("e", prec)
    pi = em.enclosure("pi", prec)
    lhs = em.exp(_pi_sqrt_term(d, prec), prec) / em.root(d**3, 4, prec)
    rhs = em.sqrt(2 * pi, prec) * em.root(d ** (2 * d + 1), 2, prec)
    rhs = rhs / (4 * e**d * 4**d)
    return lhs, rhs


def _alternating_4k2_failure(d, prec, base):
    lhs = Fraction(16, 5) * em.exp(Fraction(26, 5) * em.sqrt(d, prec) + d, prec)
    return lhs, Interval.exact(d ** (d + 2))


INEQUALITIES: dict[str, Inequality] = {
    ineq.name: ineq
    for ineq in [
        Inequality(
            "primitive-chain",
            "2*(5e)**(d + sqrt d) >= d**(d + 5/4)",
            ">=", _primitive_chain, d_max=100,
        ),
        Inequality(
            "final-chain",
            "d < log(d)/4 + pi*sqrt(2d/3)*log(e) + 2",
            "<", _final_chain, d_max=200,
        ),
        Inequality(
            "imprimitive-chain",
            "d - log(d) - 1 <= pi*sqrt(2d/3)*log(e) + 1",
            "<=", _imprimitive_chain, d_max=2000,
        ),
        Inequality(
            "primitive-direct-failure",
            "exp(pi*sqrt(2d/3))/d**(3/4) >= sqrt(2 pi) d**(d+1/2) / (4 e**d 4**d)",
            ">=", _primitive_direct_failure, d_max=100,
        ),
        Inequality(
            "alternating-4k2-failure",
            "3.2*exp(5.2*sqrt(d) + d) >= d**(d+2)",
            ">=", _alternating_4k2_failure, d_max=100,
        ),
    ]
}


def holds(name: str, d: int, base: int = 2) -> bool:
    """Decided verdict of a registered inequality at ``d`` (logarithms to ``base``)."""
    ineq = INEQUALITIES[name]
    return em.decide(lambda prec: ineq.build(d, prec, base), ineq.rel)


def sweep(name: str, d_max: int | None = None, base: int = 2) -> list[int]:
    """All ``d`` in ``[d_min, d_max]`` at which the inequality holds."""
    ineq = INEQUALITIES[name]
    d_max = ineq.d_max if d_max is None else d_max
    return [d for d in range(ineq.d_min, d_max + 1) if holds(name, d, base)]


def max_d_satisfying(name: str, d_max: int | None = None, base: int = 2) -> int:
    """Largest ``d`` at which a registered inequality holds.

    The satisfying set must be an initial segment of the swept range; the
    sweep checks that rather than assuming it.
    """
    ineq = INEQUALITIES.get(name)
    if ineq is None:
        raise KeyError(f"unknown inequality {name!r}; known: {sorted(INEQUALITIES)}")
    good = sweep(name, d_max, base)
    if not good:
        raise ValueError(f"{name} fails already at d={ineq.d_min}")
    top = good[-1]
    if good != list(range(ineq.d_min, top + 1)):
        raise ValueError(f"{name}: satisfying set is not downward closed: {good}")
    if top == (ineq.d_max if d_max is None else d_max):
        raise UndecidedError(f"{name} still holds at the sweep limit d={top}")
    return top
