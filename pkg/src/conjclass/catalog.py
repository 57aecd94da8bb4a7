"""Named small permutation groups used as brute-force oracles.

Parametric families (``C<n>``, ``D<n>``, ``S<n>``, ``A<n>``, ``1_<n>``) are
built on the fly.  Fixed generator sets (Mathieu groups, projective-line
realisations of PSL2/PGL2, the regular Klein four-group) live in the bundled
``data/catalog.csv``; :func:`projective_line_group` regenerates the PSL2/PGL2
rows from finite-field arithmetic.
"""

from __future__ import annotations

import csv
import re
from functools import lru_cache
from importlib import resources
from itertools import product
from pathlib import Path

from .exactmath import prime_power
from .permgroup import PermutationGroup, from_cycles, identity, parse_cycle_string, to_cycle_string

CATALOG_FIELDS = ["name", "degree", "order", "generators", "provenance"]


def cyclic(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    gens = [tuple((i + 1) % n for i in range(n))] if n > 1 else []
    return PermutationGroup(gens, degree=n, name=f"C{n}")


def dihedral(n: int) -> PermutationGroup:
    """Dihedral group of order ``2n`` acting on the ``n`` vertices of a polygon."""
    if n < 3:
        raise ValueError("dihedral group on a polygon needs n >= 3")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermutationGroup([rot, ref], degree=n, name=f"D{n}")


def symmetric(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    if n == 1:
        return PermutationGroup([], degree=1, name="S1")
    gens = [from_cycles([[0, 1]], n)]
    if n > 2:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return PermutationGroup(gens, degree=n, name=f"S{n}")


def alternating(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("alternating group needs n >= 1")
    if n < 3:
        return PermutationGroup([], degree=n, name=f"A{n}")
    gens = [from_cycles([[0, 1, 2]], n)]
    if n > 3:
        long_cycle = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(from_cycles([long_cycle], n))
    return PermutationGroup(gens, degree=n, name=f"A{n}")


def trivial(n: int) -> PermutationGroup:
    return PermutationGroup([], degree=n, name=f"1_{n}")


# ---------------------------------------------------------------------------
# finite fields and the projective line


@lru_cache(maxsize=None)
def finite_field(q: int) -> tuple[list[list[int]], list[list[int]]]:
    """Addition and multiplication tables of GF(q) on labels ``0..q-1``.

    Label ``a`` stands for the polynomial whose base-``p`` digits are the
    coefficients of ``a``; the modulus is the first monic polynomial of degree
    ``f`` that makes every nonzero element invertible.
    """
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    p, f = pp

    def digits(a):
        return [(a // p**i) % p for i in range(f)]

    def label(ds):
        return sum(d * p**i for i, d in enumerate(ds))

    add = [[label([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(q)]
           for a in range(q)]
    if f == 1:
        mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        return add, mul
    for tail in product(range(p), repeat=f):
        modulus = list(tail)  # x**f == -sum(tail[i] x**i)
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = digits(a)
            for b in range(q):
                db = digits(b)
                prod = [0] * (2 * f - 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            prod[i + j] = (prod[i + j] + x * y) % p
                for deg in range(2 * f - 2, f - 1, -1):
                    c = prod[deg]
                    if c:
                        prod[deg] = 0
                        for i, t in enumerate(modulus):
                            prod[deg - f + i] = (prod[deg - f + i] - c * t) % p
                mul[a][b] = label(prod[:f])
        if all(1 in mul[a] for a in range(1, q)):
            return add, mul
    raise AssertionError("no irreducible modulus found")


def _primitive_element(q: int) -> int:
    _, mul = finite_field(q)
    for w in range(2, q) if q > 2 else range(1, 2):
        x, order = w, 1
        while x != 1:
            x = mul[x][w]
            order += 1
        if order == q - 1:
            return w
    return 1


def _mobius(q: int, a: int, b: int, c: int, d: int) -> tuple[int, ...]:
    """Action of ``x -> (ax + b)/(cx + d)`` on GF(q) plus infinity (label ``q``)."""
    add, mul = finite_field(q)
    inv = {x: mul[x].index(1) for x in range(1, q)}
    inf = q
    images = []
    for x in range(q + 1):
        if x == inf:
            num, den = a, c
        else:
            num = add[mul[a][x]][b]
            den = add[mul[c][x]][d]
        images.append(inf if den == 0 else mul[num][inv[den]])
    return tuple(images)


def projective_line_group(q: int, kind: str = "PSL") -> PermutationGroup:
    """PSL2(q) or PGL2(q) acting on the ``q + 1`` points of the projective line."""
    add, mul = finite_field(q)
    w = _primitive_element(q)
    minus_one = next(x for x in range(q) if add[x][1] == 0)
    if kind == "PGL":
        gens = [_mobius(q, 1, 1, 0, 1), _mobius(q, w, 0, 0, 1), _mobius(q, 0, 1, 1, 0)]
    elif kind == "PSL":
        gens = [_mobius(q, 1, 1, 0, 1), _mobius(q, mul[w][w], 0, 0, 1),
                _mobius(q, 0, minus_one, 1, 0)]
    else:
        raise ValueError("kind must be 'PSL' or 'PGL'")
    gens = [g for g in dict.fromkeys(gens) if g != identity(q + 1)]
    return PermutationGroup(gens, degree=q + 1, name=f"{kind}2({q})")


def klein_four_regular() -> PermutationGroup:
    gens = [from_cycles([[0, 1], [2, 3]], 4), from_cycles([[0, 2], [1, 3]], 4)]
    return PermutationGroup(gens, degree=4, name="V4")


# ---------------------------------------------------------------------------
# stored catalog file


def default_catalog_path() -> Path:
    return Path(str(resources.files("conjclass") / "data" / "catalog.csv"))


@lru_cache(maxsize=8)
def _read_catalog(path: str) -> dict[str, dict]:
    rows = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CATALOG_FIELDS:
            raise ValueError(f"catalog header must be {CATALOG_FIELDS}, got {reader.fieldnames}")
        for row in reader:
            degree = int(row["degree"])
            gens = [parse_cycle_string(g, degree) for g in row["generators"].split(";") if g.strip()]
            rows[row["name"]] = {
                "degree": degree,
                "order": int(row["order"]),
                "generators": gens,
                "provenance": row["provenance"],
            }
    return rows


def stored_names(path: str | Path | None = None) -> list[str]:
    return list(_read_catalog(str(path or default_catalog_path())))


def stored_order(name: str, path: str | Path | None = None) -> int:
    return _read_catalog(str(path or default_catalog_path()))[name]["order"]


def write_catalog(path: str | Path, entries: list[tuple[str, PermutationGroup, str]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CATALOG_FIELDS)
        for name, group, provenance in entries:
            gens = ";".join(to_cycle_string(g) for g in group.generators)
            writer.writerow([name, group.degree, group.order, gens, provenance])


_PARAMETRIC = {
    "C": cyclic,
    "D": dihedral,
    "S": symmetric,
    "A": alternating,
}


def get(name: str, path: str | Path | None = None) -> PermutationGroup:
    """Look up a catalog group by name, e.g. ``"C4"``, ``"S3"``, ``"V4"``, ``"M11"``,
    ``"PSL2(7)"``."""
    stored = _read_catalog(str(path or default_catalog_path()))
    if name in stored:
        row = stored[name]
        return PermutationGroup(row["generators"], degree=row["degree"], name=name)
    m = re.fullmatch(r"([CDSA])(\d+)", name)
    if m:
        return _PARAMETRIC[m.group(1)](int(m.group(2)))
    m = re.fullmatch(r"1_(\d+)", name)
    if m:
        return trivial(int(m.group(1)))
    raise KeyError(f"unknown catalog group {name!r}")
