"""Brute-force engine for small explicit permutation groups.

Permutations are tuples of images on ``{0, ..., n-1}``.  Products read left to
right: ``compose(p, q)`` applies ``p`` first, then ``q``.  Every group
materialises its full element list by breadth-first closure, so all answers
here are exact and independent of any formula elsewhere in the package.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import OracleCapError

Perm = tuple

DEFAULT_CAP = 10**6


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` then ``q``."""
    return tuple(map(q.__getitem__, p))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(x: Perm, g: Perm) -> Perm:
    """``g^-1 x g``."""
    return compose(compose(inverse(g), x), g)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    images = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            images[a] = b
    if not is_permutation(images):
        raise ValueError(f"cycles {cycles!r} do not describe a permutation of {n} points")
    return tuple(images)


def cycles(x: Perm) -> list[tuple[int, ...]]:
    """All cycles of ``x`` including fixed points, each led by its least point,
    ordered by that point."""
    seen = [False] * len(x)
    out = []
    for start in range(len(x)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = x[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = x[j]
        out.append(tuple(cyc))
    return out


def cycle_type(x: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(x)), reverse=True))


def to_cycle_string(x: Perm) -> str:
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(x) if len(c) > 1]
    return "".join(parts) or "()"


def parse_cycle_string(text: str, n: int) -> Perm:
    """Parse ``"(0 1 2)(3 4)"`` into a permutation of ``n`` points."""
    text = text.strip()
    if text in ("", "()"):
        return identity(n)
    cyc = []
    for chunk in text.split(")"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not chunk.startswith("("):
            raise ValueError(f"malformed cycle notation {text!r}")
        cyc.append([int(t) for t in chunk[1:].replace(",", " ").split()])
    return from_cycles(cyc, n)


class PermutationGroup:
    """A permutation group given by generators; elements are materialised on demand."""

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None,
                 name: str | None = None, cap: int = DEFAULT_CAP):
        gens = [tuple(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required when there are no generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree or not is_permutation(g):
                raise ValueError(f"generator {g!r} is not a permutation of degree {degree}")
        self.degree = degree
        self.name = name
        self.cap = cap
        self._generators = gens
        self._elements: list[Perm] | None = None
        self._index: dict[Perm, int] | None = None
        self._classes: list[list[Perm]] | None = None

    @classmethod
    def _from_closed(cls, elements: list[Perm], degree: int, name=None) -> "PermutationGroup":
        group = cls([], degree=degree, name=name, cap=max(len(elements), 1))
        group._elements = list(elements)
        group._generators = None
        return group

    def __repr__(self):
        label = self.name or "PermutationGroup"
        if self._elements is not None:
            return f"<{label} degree={self.degree} order={len(self._elements)}>"
        return f"<{label} degree={self.degree}>"

    @property
    def generators(self) -> list[Perm]:
        if self._generators is None:
            self._generators = _greedy_generators(self._elements, self.degree)
        return self._generators

    @property
    def elements(self) -> list[Perm]:
        if self._elements is None:
            self._elements = _closure(self._generators, self.degree, self.cap)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> dict[Perm, int]:
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index

    def __contains__(self, x) -> bool:
        return tuple(x) in self.index

    def __len__(self):
        return self.order

    # structure ----------------------------------------------------------------

    def conjugacy_classes(self) -> list[list[Perm]]:
        if self._classes is None:
            gens = [(g, inverse(g)) for g in self.generators]
            assigned: set[Perm] = set()
            classes = []
            for x in self.elements:
                if x in assigned:
                    continue
                assigned.add(x)
                members = [x]
                queue = deque([x])
                while queue:
                    y = queue.popleft()
                    for g, ginv in gens:
                        z = tuple(map(g.__getitem__, map(y.__getitem__, ginv)))
                        if z not in assigned:
                            assigned.add(z)
                            members.append(z)
                            queue.append(z)
                classes.append(members)
            self._classes = classes
        return self._classes

    def k(self) -> int:
        """Number of conjugacy classes."""
        return len(self.conjugacy_classes())

    def centralizer(self, x: Perm) -> "PermutationGroup":
        x = tuple(x)
        if x not in self:
            raise ValueError("element is not in the group")
        elems = [g for g in self.elements if compose(g, x) == compose(x, g)]
        return PermutationGroup._from_closed(elems, self.degree)

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            for a in orbit:
                for g in self.generators:
                    b = g[a]
                    if not seen[b]:
                        seen[b] = True
                        orbit.append(b)
            out.append(orbit)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order == self.degree

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        if self.degree != other.degree:
            return False
        return all(g in other for g in self.generators)

    def is_normal_in(self, other: "PermutationGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(conjugate(h, g) in self for h in self.generators for g in other.generators)


def _closure(generators: list[Perm], degree: int, cap: int) -> list[Perm]:
    e = identity(degree)
    elements = [e]
    seen = {e}
    i = 0
    while i < len(elements):
        x = elements[i]
        i += 1
        for g in generators:
            y = tuple(map(g.__getitem__, x))
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise OracleCapError(f"group too large for oracle (more than {cap} elements)")
    return elements


def _greedy_generators(elements: list[Perm], degree: int) -> list[Perm]:
    gens: list[Perm] = []
    current = {identity(degree)}
    for x in elements:
        if x not in current:
            gens.append(x)
            current = set(_closure(gens, degree, len(elements)))
    return gens


def closure(generators: Iterable[Sequence[int]], degree: int | None = None,
            cap: int = DEFAULT_CAP) -> PermutationGroup:
    """Materialise the group generated by ``generators``."""
    group = PermutationGroup(generators, degree=degree, cap=cap)
    group.elements
    return group


def action_on_cycles(c: Perm, x: Perm) -> Perm:
    """Permutation induced by ``c`` on the cycles of ``x`` (indexed as in :func:`cycles`).

    ``c`` must commute with ``x``.
    """
    if compose(c, x) != compose(x, c):
        raise ValueError("c does not centralise x")
    cyc = cycles(x)
    owner = {}
    for i, cy in enumerate(cyc):
        for a in cy:
            owner[a] = i
    return tuple(owner[c[cy[0]]] for cy in cyc)


# ---------------------------------------------------------------------------
# class-number inequalities


def check_subgroup_inequalities(G: PermutationGroup, H: PermutationGroup) -> bool:
    """``k(H)/|G:H| <= k(G) <= |G:H| k(H)`` for a subgroup ``H`` of ``G``."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    idx = G.order // H.order
    kg, kh = G.k(), H.k()
    return Fraction(kh, idx) <= kg <= idx * kh


def coset_labels(G: PermutationGroup, N: PermutationGroup) -> dict[Perm, int]:
    label: dict[Perm, int] = {}
    c = 0
    for g in G.elements:
        if g in label:
            continue
        for n in N.elements:
            label[compose(n, g)] = c
        c += 1
    return label


def quotient_class_count(G: PermutationGroup, N: PermutationGroup) -> int:
    """``k(G/N)`` from coset representatives, without building the quotient group."""
    label = coset_labels(G, N)
    reps: dict[int, Perm] = {}
    for g, c in label.items():
        reps.setdefault(c, g)
    n_cosets = len(reps)
    seen = [False] * n_cosets
    count = 0
    gens = G.generators
    for c in range(n_cosets):
        if seen[c]:
            continue
        count += 1
        seen[c] = True
        stack = [c]
        while stack:
            a = stack.pop()
            for g in gens:
                b = label[conjugate(reps[a], g)]
                if not seen[b]:
                    seen[b] = True
                    stack.append(b)
    return count


def g_classes_in(G: PermutationGroup, N: PermutationGroup) -> int:
    """Number of ``G``-conjugacy classes contained in the normal subgroup ``N``."""
    return sum(1 for cl in G.conjugacy_classes() if cl[0] in N)


def check_normal_inequalities(G: PermutationGroup, N: PermutationGroup) -> bool:
    """``k(G) <= k(N) k(G/N)`` and ``k(G) <= |G:N| * #(G-classes in N)``."""
    if not N.is_normal_in(G):
        raise ValueError("N is not a normal subgroup of G")
    kg = G.k()
    idx = G.order // N.order
    return kg <= N.k() * quotient_class_count(G, N) and kg <= idx * g_classes_in(G, N)


def check_pyber_bound(P: PermutationGroup) -> bool:
    """``k(P) <= 2**(r-1)``; for ``r >= 4`` also ``k(P)**3 <= 5**(r-1)``."""
    r = P.degree
    kp = P.k()
    ok = kp <= 2 ** (r - 1)
    if r >= 4:
        ok = ok and kp**3 <= 5 ** (r - 1)
    return ok


def burnside_class_count(G: PermutationGroup) -> int:
    """``k(G)`` as ``(1/|G|) * sum |C_G(x)|`` with centraliser orders by brute force
    on class representatives."""
    total = 0
    for cl in G.conjugacy_classes():
        x = cl[0]
        cent = sum(1 for g in G.elements if compose(g, x) == compose(x, g))
        total += len(cl) * cent
    k, rem = divmod(total, G.order)
    if rem:
        raise ArithmeticError("Burnside sum not divisible by the group order")
    return k


def commuting_pairs_class_count(G: PermutationGroup) -> int:
    """``k(G)`` as the number of commuting ordered pairs divided by ``|G|``.

    Quadratic in ``|G|``; intended for groups of order up to a few thousand.
    """
    import numpy as np

    elems = np.array(G.elements, dtype=np.int16)
    total = 0
    for x in elems:
        xg = elems[:, x]          # x then g  -> g[x[i]]
        gx = x[elems]             # g then x  -> x[g[i]]
        total += int(np.count_nonzero((xg == gx).all(axis=1)))
    k, rem = divmod(total, G.order)
    if rem:
        raise ArithmeticError("commuting-pair count not divisible by the group order")
    return k
