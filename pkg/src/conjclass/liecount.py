"""Class numbers, class-number bounds, orders and minimal degrees for finite
simple groups (and a few close relatives) of Lie type, alternating and sporadic.

Exact formulas carry their applicability conditions; asking a formula outside
its range raises :class:`NoFormulaError` rather than falling back silently.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import partitions
from .errors import NoFormulaError, NotStoredError
from .exactmath import binomial, gaussian_binomial, prime_power

LIE_FAMILIES = (
    "PSL", "PGL", "SL", "PSU", "SU", "PSp", "Sp",
    "POmega+", "POmega-", "Omega+", "Omega-", "SO+", "SO-", "Suzuki",
)
SPORADIC_ORDERS = {
    "M11": 7920,
    "M12": 95040,
    "M22": 443520,
    "M23": 10200960,
    "M24": 244823040,
}
FAMILIES = LIE_FAMILIES + ("Alternating", "Symmetric", "Sporadic")


@dataclass(frozen=True)
class SimpleGroupId:
    """A group named by family and parameters.

    ``d`` is the dimension of the natural module for classical families
    (so ``Sp`` with ``d=4`` is Sp4), the degree for alternating/symmetric
    groups, and unused for Suzuki and sporadic groups.  ``name`` holds the
    sporadic name.  ``decoration`` marks an extension such as ``".2"``.
    """

    family: str
    d: int | None = None
    q: int | None = None
    decoration: str = ""
    name: str | None = None

    def __post_init__(self):
        fam = self.family
        if fam in SPORADIC_ORDERS:
            object.__setattr__(self, "name", fam)
            object.__setattr__(self, "family", "Sporadic")
            fam = "Sporadic"
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}")
        if fam == "Sporadic":
            if self.name not in SPORADIC_ORDERS:
                raise ValueError(f"unknown sporadic group {self.name!r}")
            return
        if fam in ("Alternating", "Symmetric"):
            if self.d is None or self.d < 1:
                raise ValueError(f"{fam} needs a degree d >= 1")
            return
        q = self.q
        if q is None or prime_power(q) is None:
            raise ValueError(f"field size {q!r} is not a prime power")
        if fam == "Suzuki":
            p, f = prime_power(q)
            if p != 2 or f % 2 == 0 or f < 3:
                raise ValueError("Suzuki groups need q = 2^(2n+1) >= 8")
            return
        d = self.d
        if d is None:
            raise ValueError(f"{fam} needs a dimension d")
        if fam in ("PSL", "PGL", "SL") and d < 2:
            raise ValueError("linear groups need d >= 2")
        if fam in ("PSU", "SU") and d < 3:
            raise ValueError("unitary groups need d >= 3")
        if fam in ("PSp", "Sp") and (d < 4 or d % 2):
            raise ValueError("symplectic groups need even d >= 4")
        if fam[:-1] in ("POmega", "Omega", "SO") and (d < 8 or d % 2):
            raise ValueError("orthogonal groups of plus/minus type need even d >= 8")
        if fam in ("SO+", "SO-") and q % 2:
            raise ValueError("SO+/SO- are only supported in characteristic 2")

    @property
    def label(self) -> str:
        fam = self.family
        if fam == "Sporadic":
            base = self.name
        elif fam == "Alternating":
            base = f"A{self.d}"
        elif fam == "Symmetric":
            base = f"S{self.d}"
        elif fam == "Suzuki":
            base = f"Sz({self.q})"
        elif fam[-1] in "+-":
            base = f"{fam[:-1]}{fam[-1]}{self.d}({self.q})"
        else:
            base = f"{fam}{self.d}({self.q})"
        return base + self.decoration

    def __str__(self):
        return self.label

    @property
    def m(self) -> int:
        return self.d // 2


_LABEL_RE = re.compile(
    r"(?P<fam>PSL|PGL|SL|PSU|SU|PSp|Sp|POmega[+-]|Omega[+-]|SO[+-])(?P<d>\d+)\((?P<q>\d+)\)"
    r"(?P<dec>.*)"
)


def parse_group(text: str) -> SimpleGroupId:
    """Parse labels such as ``PSL2(11)``, ``A7``, ``S8``, ``Sz(8)``, ``M12``, ``PSp4(3).2``."""
    text = text.strip()
    m = _LABEL_RE.fullmatch(text)
    if m:
        return SimpleGroupId(m["fam"], int(m["d"]), int(m["q"]), m["dec"])
    m = re.fullmatch(r"Sz\((\d+)\)(.*)", text)
    if m:
        return SimpleGroupId("Suzuki", q=int(m[1]), decoration=m[2])
    m = re.fullmatch(r"([AS])(\d+)(.*)", text)
    if m:
        fam = "Alternating" if m[1] == "A" else "Symmetric"
        return SimpleGroupId(fam, d=int(m[2]), decoration=m[3])
    m = re.fullmatch(r"(M\d\d)(.*)", text)
    if m and m[1] in SPORADIC_ORDERS:
        return SimpleGroupId("Sporadic", name=m[1], decoration=m[2])
    raise ValueError(f"cannot parse group label {text!r}")


def make_id(family: str, d: int | None = None, q: int | None = None,
            decoration: str = "") -> SimpleGroupId:
    """Build an id from loose CLI-style family names (``PSL2``, ``Sp4``, ``A``, ``M12``...)."""
    m = re.fullmatch(r"([A-Za-z]+?[+-]?)(\d+)", family)
    if family in SPORADIC_ORDERS:
        return SimpleGroupId("Sporadic", name=family, decoration=decoration)
    short = {"A": "Alternating", "S": "Symmetric", "Sz": "Suzuki"}
    if family in short:
        family = short[family]
    elif m and m[1] in LIE_FAMILIES:
        if d is not None and d != int(m[2]):
            raise ValueError(f"family {family} conflicts with d={d}")
        family, d = m[1], int(m[2])
    return SimpleGroupId(family, d, q, decoration)


# ---------------------------------------------------------------------------
# bounded counts


@dataclass(frozen=True)
class BoundedCount:
    value: int
    kind: str
    provenance: str

    def __post_init__(self):
        if self.kind not in ("exact", "upper", "lower"):
            raise ValueError(f"kind must be exact/upper/lower, got {self.kind!r}")
        if self.value < 0:
            raise ValueError("class counts are non-negative")

    def as_dict(self) -> dict:
        return {"value": self.value, "kind": self.kind, "provenance": self.provenance}


def untwisted_rank(gid: SimpleGroupId) -> int:
    fam = gid.family
    if fam in ("PSL", "PGL", "SL", "PSU", "SU"):
        return gid.d - 1
    if fam in ("PSp", "Sp") or fam[:-1] in ("POmega", "Omega", "SO"):
        return gid.m
    if fam == "Suzuki":
        return 1
    raise ValueError(f"{gid} is not a group of Lie type")


def _field_degree(q: int) -> int:
    return prime_power(q)[1]


# exact formulas ----------------------------------------------------------------


def _psl2(gid):
    q = gid.q
    g = math.gcd(q - 1, 2)
    return (q + 4 * g - 3) // g


def _pgl2(gid):
    return gid.q + math.gcd(2, gid.q - 1)


def _sl4_even(gid):
    q = gid.q
    return q**3 + q**2 + q


def _sp4(gid):
    q = gid.q
    return q**2 + 5 * q + 10 if q % 2 else q**2 + 2 * q + 3


def _psu4(gid):
    q = gid.q
    if q % 2 == 0:
        return q**3 + q**2 + 3 * q + 2
    if q % 4 == 1:
        return (q**3 + q**2 + 7 * q + 9) // 2
    return (q**3 + q**2 + 7 * q + 23) // 4


def _psu3(gid):
    q = gid.q
    if q % 3 == 2:
        return (q**2 + q + 12) // 3
    return q**2 + q + 2


def _suzuki(gid):
    return gid.q + 3


@dataclass(frozen=True)
class _Formula:
    id: str
    applies: Callable[[SimpleGroupId], bool]
    value: Callable[[SimpleGroupId], int]


_EXACT = [
    _Formula("PSL2-formula", lambda g: g.family == "PSL" and g.d == 2 and g.q >= 4, _psl2),
    _Formula("PGL2-formula", lambda g: g.family == "PGL" and g.d == 2 and g.q >= 4, _pgl2),
    # SL4(q) = PSL4(q) when q is even
    _Formula("SL4-formula", lambda g: g.family in ("SL", "PSL") and g.d == 4 and g.q % 2 == 0,
             _sl4_even),
    # Sp4(q) = PSp4(q) when q is even
    _Formula("Sp4-formula",
             lambda g: g.d == 4 and (g.family == "Sp" or (g.family == "PSp" and g.q % 2 == 0)),
             _sp4),
    _Formula("PSU4-formula", lambda g: g.family == "PSU" and g.d == 4, _psu4),
    # SU3(q) = PSU3(q) when 3 does not divide q + 1
    _Formula("PSU3-formula",
             lambda g: g.d == 3 and g.q > 2 and (
                 g.family == "PSU" or (g.family == "SU" and math.gcd(3, g.q + 1) == 1)),
             _psu3),
    _Formula("Suzuki-formula", lambda g: g.family == "Suzuki", _suzuki),
    _Formula("alternating-partitions", lambda g: g.family == "Alternating",
             lambda g: partitions.k_alternating(g.d)),
    _Formula("symmetric-partitions", lambda g: g.family == "Symmetric",
             lambda g: partitions.k_symmetric(g.d)),
]


def k_exact(gid: SimpleGroupId) -> BoundedCount:
    """Exact class number from the formula registry."""
    if not gid.decoration:
        for f in _EXACT:
            if f.applies(gid):
                value = f.value(gid)
                for b in _applicable_bounds(gid):
                    if value > b.value:
                        raise AssertionError(f"{gid}: exact {value} exceeds bound {b}")
                return BoundedCount(value, "exact", f.id)
    raise NoFormulaError(
        f"no exact class-number formula for {gid}; use k_bound or the census data")


# upper bounds -------------------------------------------------------------------


def _gf_type(gid: SimpleGroupId) -> bool:
    """Is the group the fixed points of a connected simple algebraic group?"""
    fam, d, q = gid.family, gid.d, gid.q
    if fam in ("SL", "PGL", "SU", "Sp", "Suzuki"):
        return True
    if fam == "PSL":
        return math.gcd(d, q - 1) == 1
    if fam == "PSU":
        return math.gcd(d, q + 1) == 1
    if fam == "PSp":
        return q % 2 == 0
    return False


def _almost_simple(gid: SimpleGroupId) -> bool:
    fam, d, q = gid.family, gid.d, gid.q
    if fam in ("PSL", "PGL", "PSU", "PSp", "POmega+", "POmega-", "Suzuki", "SO+", "SO-"):
        return True
    if fam == "SL":
        return math.gcd(d, q - 1) == 1
    if fam == "SU":
        return math.gcd(d, q + 1) == 1
    if fam == "Sp":
        return q % 2 == 0
    if fam in ("Omega+", "Omega-"):
        eps = 1 if fam == "Omega+" else -1
        return q % 2 == 0 or math.gcd(4, q**gid.m - eps) == 2
    return False


def _fg_bound(gid):
    q, r = gid.q, untwisted_rank(gid)
    return min(Fraction(136, 5) * q**r, q**r + 68 * q ** (r - 1))


@dataclass(frozen=True)
class _Bound:
    id: str
    applies: Callable[[SimpleGroupId], bool]
    value: Callable[[SimpleGroupId], Fraction]


_BOUNDS = [
    _Bound("FG-27.2", lambda g: not g.decoration and _gf_type(g), _fg_bound),
    _Bound("FG-100", _almost_simple, lambda g: Fraction(100 * g.q ** untwisted_rank(g))),
    _Bound("PSL-2.5", lambda g: g.family == "PSL" and not g.decoration,
           lambda g: Fraction(5, 2) * g.q ** (g.d - 1)),
    _Bound("PSU-8.26", lambda g: g.family == "PSU" and not g.decoration,
           lambda g: Fraction(413, 50) * g.q ** (g.d - 1)),
    _Bound("POmega+-14", lambda g: g.family == "POmega+" and not g.decoration,
           lambda g: Fraction(14 * g.q ** g.m)),
    _Bound("PSL3-odd", lambda g: g.family == "PSL" and g.d == 3 and g.q % 2 and not g.decoration,
           lambda g: Fraction(g.q**2 + g.q)),
    # these two hold for every almost simple group with the given socle
    _Bound("PSL3-even-2f", lambda g: g.family == "PSL" and g.d == 3 and g.q % 2 == 0,
           lambda g: Fraction(2 * _field_degree(g.q) * (g.q**2 + g.q + 10))),
    _Bound("PSL4-odd-2f", lambda g: g.family == "PSL" and g.d == 4 and g.q % 2,
           lambda g: Fraction(2 * _field_degree(g.q) * (g.q**3 + g.q**2 + 5 * g.q + 21))),
]


def _applicable_bounds(gid: SimpleGroupId) -> list[BoundedCount]:
    if gid.family not in LIE_FAMILIES:
        return []
    return [BoundedCount(math.floor(b.value(gid)), "upper", b.id)
            for b in _BOUNDS if b.applies(gid)]


def k_bounds(gid: SimpleGroupId) -> dict[str, BoundedCount]:
    """Every registered upper bound that applies, keyed by formula id."""
    if gid.family not in LIE_FAMILIES:
        raise ValueError(f"{gid} is not a group of Lie type")
    return {b.provenance: b for b in _applicable_bounds(gid)}


def k_bound(gid: SimpleGroupId) -> BoundedCount:
    """The tightest registered upper bound."""
    bounds = k_bounds(gid)
    if not bounds:
        raise NoFormulaError(f"no registered class-number bound for {gid}")
    return min(bounds.values(), key=lambda b: b.value)


def k_count(gid: SimpleGroupId) -> BoundedCount:
    """Exact value when a formula exists, else the tightest bound."""
    try:
        return k_exact(gid)
    except NoFormulaError:
        return k_bound(gid)


# ---------------------------------------------------------------------------
# orders


def _prod(xs) -> int:
    return math.prod(xs)


def order(gid: SimpleGroupId) -> int:
    """``|G|`` for undecorated ids."""
    if gid.decoration:
        raise NotStoredError(f"order of the extension {gid} is not stored")
    fam, d, q = gid.family, gid.d, gid.q
    if fam == "Sporadic":
        return SPORADIC_ORDERS[gid.name]
    if fam == "Alternating":
        return math.factorial(d) // 2 if d > 1 else 1
    if fam == "Symmetric":
        return math.factorial(d)
    if fam == "Suzuki":
        return q**2 * (q**2 + 1) * (q - 1)
    if fam in ("SL", "PGL", "PSL"):
        n = q ** (d * (d - 1) // 2) * _prod(q**i - 1 for i in range(2, d + 1))
        return n // math.gcd(d, q - 1) if fam == "PSL" else n
    if fam in ("SU", "PSU"):
        n = q ** (d * (d - 1) // 2) * _prod(q**i - (-1) ** i for i in range(2, d + 1))
        return n // math.gcd(d, q + 1) if fam == "PSU" else n
    m = gid.m
    if fam in ("Sp", "PSp"):
        n = q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        return n // math.gcd(2, q - 1) if fam == "PSp" else n
    eps = 1 if fam.endswith("+") else -1
    so = q ** (m * (m - 1)) * (q**m - eps) * _prod(q ** (2 * i) - 1 for i in range(1, m))
    omega = so // math.gcd(2, q - 1)
    if fam.startswith("POmega"):
        return so // math.gcd(4, q**m - eps)
    if fam.startswith("Omega"):
        return omega
    return 2 * omega  # SO+/SO- in characteristic 2: the full isometry group


# ---------------------------------------------------------------------------
# minimal degrees

_PSL_MIN_DEGREE_EXCEPTIONS = {(2, 5): 5, (2, 7): 7, (2, 9): 6, (2, 11): 11, (4, 2): 8}
_SPORADIC_MIN_DEGREE = {"M11": 11, "M12": 12, "M22": 22, "M23": 23, "M24": 24}
_STORED_MIN_DEGREE = {
    ("Sp", 6, 2): 28,
    ("Sp", 8, 2): 120,
    ("POmega-", 8, 2): 119,
    ("POmega+", 8, 2): 120,
    ("PSp", 4, 3): 27,
    ("PSU", 4, 3): 112,
}


def _canonical_simple(gid: SimpleGroupId) -> SimpleGroupId:
    """Rewrite ids naming a simple group under a different family name."""
    fam, d, q = gid.family, gid.d, gid.q
    if fam == "SL" and math.gcd(d, q - 1) == 1:
        return SimpleGroupId("PSL", d, q)
    if fam == "SU" and math.gcd(d, q + 1) == 1:
        return SimpleGroupId("PSU", d, q)
    if fam == "PSp" and q % 2 == 0:
        return SimpleGroupId("Sp", d, q)
    if fam in ("Omega+", "Omega-") and q % 2 == 0:
        return SimpleGroupId("P" + fam, d, q)
    return gid


def minimal_degree(gid: SimpleGroupId) -> int:
    """Smallest degree ``P(S)`` of a faithful permutation representation of the simple group."""
    if gid.decoration:
        raise NotStoredError(f"P(S) is recorded for simple groups only, not {gid}")
    gid = _canonical_simple(gid)
    fam, d, q = gid.family, gid.d, gid.q
    if fam == "Sporadic":
        return _SPORADIC_MIN_DEGREE[gid.name]
    if fam == "Alternating" and d >= 5:
        return d
    if fam == "Suzuki":
        return q**2 + 1
    if fam == "PSL" and (d, q) not in ((2, 2), (2, 3)):
        return _PSL_MIN_DEGREE_EXCEPTIONS.get((d, q), gaussian_binomial(d, 1, q))
    if fam == "PSU" and d == 4:
        return (q + 1) * (q**3 + 1)
    if fam == "PSU" and d == 3 and q > 2:
        return 50 if q == 5 else q**3 + 1
    key = (fam, d, q)
    if key in _STORED_MIN_DEGREE:
        return _STORED_MIN_DEGREE[key]
    raise NotStoredError(f"P(S) not stored for {gid}")


# ---------------------------------------------------------------------------
# degrees of the standard actions


def degree(action: str, *params: int) -> int:
    """Degree of one of the named primitive actions.

    ``k_subsets(d, k)``, ``projective_points(d, q)``, ``flags(d, q)``,
    ``two_subspaces(d, q)``, ``imprimitive(d, k, l)``, ``symplectic_index(m, q)``.
    """
    try:
        fn = _ACTIONS[action]
    except KeyError:
        raise ValueError(f"unknown action {action!r}; known: {sorted(_ACTIONS)}") from None
    return fn(*params)


def _k_subsets(d, k):
    if not 1 <= k <= d // 2:
        raise ValueError("k_subsets needs 1 <= k <= d/2")
    return binomial(d, k)


def _check_field(q):
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")


def _projective_points(d, q):
    _check_field(q)
    if d < 2:
        raise ValueError("projective_points needs d >= 2")
    return gaussian_binomial(d, 1, q)


def _flags(d, q):
    _check_field(q)
    if d < 3:
        raise ValueError("flags needs d >= 3")
    return gaussian_binomial(d, 1, q) * gaussian_binomial(d - 1, 1, q)


def _two_subspaces(d, q):
    _check_field(q)
    if d < 3:
        raise ValueError("two_subspaces needs d >= 3")
    return gaussian_binomial(d, 2, q)


def _imprimitive(d, k, l):
    if k < 2 or l < 2:
        raise ValueError("imprimitive needs block size and block count >= 2")
    return partitions.imprimitive_index(d, k, l)


def _symplectic_index(m, q):
    """``q^(m^2-m) (q^3-1)(q^5-1)...(q^(2m-1)-1) / (m, q-1)``."""
    _check_field(q)
    if m < 2:
        raise ValueError("symplectic_index needs m >= 2")
    n = q ** (m * m - m) * _prod(q ** (2 * i - 1) - 1 for i in range(2, m + 1))
    g = math.gcd(m, q - 1)
    assert n % g == 0
    return n // g


_ACTIONS = {
    "k_subsets": _k_subsets,
    "projective_points": _projective_points,
    "flags": _flags,
    "two_subspaces": _two_subspaces,
    "imprimitive": _imprimitive,
    "symplectic_index": _symplectic_index,
}
ACTIONS = tuple(_ACTIONS)


# ---------------------------------------------------------------------------
# checks


def check_4k2(gid: SimpleGroupId, k: BoundedCount | int) -> bool:
    """``4 k^2 < |S|`` exactly."""
    value = k.value if isinstance(k, BoundedCount) else int(k)
    return 4 * value * value < order(gid)


def suzuki_exception_holds(q: int) -> bool:
    """``(q + 3) f >= (q^2 + 1)/2`` for ``q = 2^f``."""
    gid = SimpleGroupId("Suzuki", q=q)
    f = _field_degree(q)
    return 2 * k_exact(gid).value * f >= minimal_degree(gid)


def socle_label(gid: SimpleGroupId) -> str:
    """Canonical name of a simple group, collapsing the small exceptional isomorphisms."""
    gid = _canonical_simple(SimpleGroupId(gid.family, gid.d, gid.q, "", gid.name))
    fam, d, q = gid.family, gid.d, gid.q
    if fam == "PSL" and d == 2 and q in (4, 5):
        return "A5"
    if fam == "PSL" and d == 2 and q == 9:
        return "A6"
    if fam == "PSL" and (d, q) == (3, 2):
        return "PSL2(7)"
    if fam == "PSL" and (d, q) == (4, 2):
        return "A8"
    if fam == "PSU" and (d, q) == (4, 2):
        return "PSp4(3)"
    return gid.label
