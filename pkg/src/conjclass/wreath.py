"""Class numbers of wreath products ``A wr P`` from ``k(A)`` and the top group.

A class of ``A wr P`` is a class of ``P`` (representative ``pi``) together
with a colouring of the cycles of ``pi`` by the ``k`` classes of ``A``,
taken up to the action of ``C_P(pi)`` on those cycles.  Orbits are counted
with Burnside's lemma.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import divisors, euler_phi
from .permgroup import (
    PermutationGroup,
    action_on_cycles,
    compose,
    cycles,
)


@dataclass(frozen=True)
class WreathDescriptor:
    k: int
    top: PermutationGroup | int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("base class count k must be >= 1")
        if isinstance(self.top, int) and self.top < 1:
            raise ValueError("cyclic order r must be >= 1")

    @property
    def degree(self) -> int:
        return self.top if isinstance(self.top, int) else self.top.degree


def _orbit_count(perm: tuple) -> int:
    seen = [False] * len(perm)
    count = 0
    for i in range(len(perm)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count


def _exact_div(total: int, n: int) -> int:
    q, rem = divmod(total, n)
    if rem:
        raise ArithmeticError(f"Burnside sum {total} is not divisible by {n}")
    return q


def colouring_orbits(k: int, P: PermutationGroup, pi: tuple) -> int:
    """Orbits of ``C_P(pi)`` on ``k``-colourings of the cycles of ``pi``."""
    cent = [c for c in P.elements if compose(c, pi) == compose(pi, c)]
    total = sum(k ** _orbit_count(action_on_cycles(c, pi)) for c in cent)
    return _exact_div(total, len(cent))


def k_wreath_generic(k: int, P: PermutationGroup) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(colouring_orbits(k, P, cl[0]) for cl in P.conjugacy_classes())


def necklaces(d: int, k: int) -> int:
    """``k``-colourings of ``d`` beads up to rotation."""
    total = sum(euler_phi(t) * k ** (d // t) for t in divisors(d))
    return _exact_div(total, d)


def k_wreath_cyclic(k: int, r: int) -> int:
    """``k(A wr C_r) = sum over m | r of phi(m) N(r/m, k)``."""
    if k < 1 or r < 1:
        raise ValueError("k and r must be >= 1")
    return sum(euler_phi(m) * necklaces(r // m, k) for m in divisors(r))


def k_wreath(w: WreathDescriptor) -> int:
    if isinstance(w.top, int):
        return k_wreath_cyclic(w.k, w.top)
    return k_wreath_generic(w.k, w.top)


# ---------------------------------------------------------------------------
# estimates


def regular_estimate_bounds(k: int, r: int, value: int) -> tuple[bool, bool]:
    """Exact checks of ``k^r/r - k^(r/2) <= value`` and ``value <= k^r/r + 2r k^(r/2)``.

    ``k^(r/2)`` may be irrational, so each side is compared after squaring.
    """
    main = Fraction(k**r, r)
    kr = k**r
    gap_low = main - value           # need gap_low <= sqrt(k^r)
    lower = gap_low <= 0 or gap_low * gap_low <= kr
    gap_high = value - main          # need gap_high <= 2r sqrt(k^r)
    upper = gap_high <= 0 or gap_high * gap_high <= 4 * r * r * kr
    return lower, upper


def check_regular_estimate(k: int, P: PermutationGroup) -> bool:
    if not P.is_regular():
        raise ValueError("top group is not regular")
    lower, upper = regular_estimate_bounds(k, P.degree, k_wreath_generic(k, P))
    return lower and upper


M12_K = 15
M12_DEGREE = 12


def check_m12_growth(r: int) -> bool:
    """``k(M12 wr C_r) > (12^r)^1.08`` as ``k^100 > 12^(108 r)``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return k_wreath_cyclic(M12_K, r) ** 100 > M12_DEGREE ** (108 * r)


def m12_threshold_sweep(r_max: int = 400) -> dict:
    """Verdicts of :func:`check_m12_growth` for ``r = 1..r_max``.

    ``threshold`` is the least ``r`` from which the verdict stays true up to
    ``r_max``.  ``r = 1`` is an isolated true case (``15 > 12^1.08``), so it is
    reported separately in ``true_below_threshold``.
    """
    verdicts = [check_m12_growth(r) for r in range(1, r_max + 1)]
    threshold = None
    for r in range(r_max, 0, -1):
        if not verdicts[r - 1]:
            break
        threshold = r
    below = [r for r in range(1, threshold or r_max + 1) if verdicts[r - 1]]
    return {"r_max": r_max, "threshold": threshold, "true_below_threshold": below}


# ---------------------------------------------------------------------------
# explicit oracle


def tuple_group(base: PermutationGroup, top: PermutationGroup,
                cap: int | None = None) -> PermutationGroup:
    """``base wr top`` acting imprimitively on ``r`` blocks of ``base.degree`` points.

    Point ``i*m + x`` is point ``x`` of block ``i``.
    """
    m, r = base.degree, top.degree
    cap = base.cap if cap is None else cap
    if base.order ** r * top.order > cap:
        from .errors import OracleCapError
        raise OracleCapError(f"wreath product too large for oracle (cap {cap})")
    gens = []
    for g in base.generators:
        for i in range(r):
            img = list(range(m * r))
            for x in range(m):
                img[i * m + x] = i * m + g[x]
            gens.append(tuple(img))
    for pi in top.generators:
        gens.append(tuple(pi[i] * m + x for i in range(r) for x in range(m)))
    name = f"{base.name or 'A'} wr {top.name or 'P'}"
    return PermutationGroup(gens, degree=m * r, name=name, cap=cap)
