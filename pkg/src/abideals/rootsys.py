"""Irreducible root systems with exact integer and rational arithmetic.

Simple roots are numbered 1..n in Bourbaki order: the classical chains
A/B/C/D run left to right (in D_n the fork nodes n-1 and n both attach to
node n-2), the E-series is the chain 1-3-4-5-... with node 2 attached to
the branch node 4, F4 lists the two long simple roots first, and G2 starts
with the short root.  The numbering only affects labels, never counts.

The invariant form is scaled so the highest root theta has
(theta, theta) = 2; with that normalization the coroot of every root has
integer coordinates over the simple coroots, so everything stays exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    IntegralityViolation,
    InvalidType,
    NotARoot,
)

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


@dataclass(frozen=True)
class TypeSpec:
    """A simple type label such as A3 or E8."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        rule = _RANK_RULES.get(self.series)
        if rule is None or not rule(self.rank):
            raise InvalidType(f"{self.series}{self.rank} is not an irreducible root system type")

    @staticmethod
    def parse(text: str) -> "TypeSpec":
        m = _TYPE_RE.match(text.strip())
        if not m:
            raise InvalidType(f"cannot parse type string {text!r}")
        return TypeSpec(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A lattice vector written over the simple roots."""

    coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def support(self) -> tuple[int, ...]:
        """1-based indices of the nonzero coordinates."""
        return tuple(i + 1 for i, c in enumerate(self.coeffs) if c)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))


@dataclass(frozen=True)
class CorootVector:
    """An element of the coroot lattice written over the simple coroots."""

    coeffs: tuple[int, ...]


def coeff_string(coeffs: Sequence[int]) -> str:
    """Render (1, 2, 1) as '121'; coordinates outside 0..9 fall back to commas."""
    if all(0 <= c <= 9 for c in coeffs):
        return "".join(str(c) for c in coeffs)
    return ",".join(str(c) for c in coeffs)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable Cartan data plus the full positive system for one type.

    Instances are built once per type by :func:`build_root_system`, are
    hashable by identity, and are safe for shared read-only use.
    """

    type: TypeSpec
    cartan: tuple[tuple[int, ...], ...]
    symmetric_form: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    diagram_edges: frozenset[tuple[int, int]]
    _index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def simple_root(self, i: int) -> Root:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple index {i} outside 1..{self.rank}")
        return Root(tuple(int(j == i - 1) for j in range(self.rank)))

    def simple_norm(self, i: int) -> Fraction:
        """(alpha_i, alpha_i) for a 1-based index."""
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple index {i} outside 1..{self.rank}")
        return self.symmetric_form[i - 1][i - 1]

    def is_positive_root(self, root: Root) -> bool:
        return root.coeffs in self._index

    def root_index(self, root: Root) -> int:
        """Index into positive_roots; NotARoot for anything else."""
        try:
            return self._index[root.coeffs]
        except KeyError:
            raise NotARoot(f"{root.coeffs} is not a positive root of {self.type}") from None

    def sign_index(self, root: Root) -> tuple[int, int]:
        """(+1, i) for positive_roots[i], (-1, i) for its negation."""
        i = self._index.get(root.coeffs)
        if i is not None:
            return 1, i
        i = self._index.get((-root).coeffs)
        if i is not None:
            return -1, i
        raise NotARoot(f"{root.coeffs} is not a root of {self.type}")


def _cartan_matrix(spec: TypeSpec) -> tuple[tuple[int, ...], ...]:
    n = spec.rank
    a = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def chain(pairs):
        for i, j in pairs:
            a[i][j] = a[j][i] = -1

    s = spec.series
    if s == "A":
        chain((i, i + 1) for i in range(n - 1))
    elif s == "B":
        chain((i, i + 1) for i in range(n - 2))
        a[n - 2][n - 1] = -2
        a[n - 1][n - 2] = -1
    elif s == "C":
        chain((i, i + 1) for i in range(n - 2))
        a[n - 2][n - 1] = -1
        a[n - 1][n - 2] = -2
    elif s == "D":
        chain((i, i + 1) for i in range(n - 2))
        chain([(n - 3, n - 1)])
    elif s == "E":
        chain([(0, 2)])
        chain((i, i + 1) for i in range(2, n - 1))
        chain([(1, 3)])
    elif s == "F":
        chain([(0, 1), (2, 3)])
        a[1][2] = -2
        a[2][1] = -1
    else:  # G
        a[0][1] = -1
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def _root_closure(cartan, seeds) -> set[tuple[int, ...]]:
    """Close a set of coefficient vectors under all simple reflections."""
    n = len(cartan)
    found = set(seeds)
    frontier = list(found)
    while frontier:
        fresh = []
        for c in frontier:
            for i in range(n):
                pairing = sum(c[j] * cartan[j][i] for j in range(n))
                if pairing == 0:
                    continue
                image = list(c)
                image[i] -= pairing
                t = tuple(image)
                if t not in found:
                    found.add(t)
                    fresh.append(t)
        frontier = fresh
    return found


def _simple_norm_halves(cartan) -> tuple[Fraction, ...]:
    """Relative values of (alpha_i, alpha_i)/2 from the Cartan symmetrizer."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                stack.append(j)
    assert all(x is not None for x in d), "Dynkin diagram must be connected"
    return tuple(d)  # type: ignore[arg-type]


@lru_cache(maxsize=None)
def build_root_system(spec: TypeSpec) -> RootSystem:
    """Construct the full root system for an admissible type.

    Positive roots are generated by closing the simple roots under all
    simple reflections and are ordered by height, then lexicographically
    on coefficient vectors.
    """
    n = spec.rank
    cartan = _cartan_matrix(spec)
    simples = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    all_roots = _root_closure(cartan, simples)
    for c in all_roots:
        assert all(x >= 0 for x in c) or all(x <= 0 for x in c), c
    positive = sorted(
        (c for c in all_roots if all(x >= 0 for x in c)),
        key=lambda c: (sum(c), c),
    )
    assert 2 * len(positive) == len(all_roots)
    highest = positive[-1]
    assert all(h >= c[i] for c in positive for i, h in enumerate(highest))

    d = _simple_norm_halves(cartan)
    form = [[Fraction(cartan[i][j]) * d[j] for j in range(n)] for i in range(n)]
    theta_norm = sum(
        highest[i] * form[i][j] * highest[j] for i in range(n) for j in range(n)
    )
    scale = Fraction(2) / theta_norm
    form = tuple(tuple(x * scale for x in row) for row in form)
    assert all(form[i][j] == form[j][i] for i in range(n) for j in range(n))

    edges = frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if cartan[i][j] != 0
    )
    roots = tuple(Root(c) for c in positive)
    index = {c: k for k, c in enumerate(positive)}
    return RootSystem(
        type=spec,
        cartan=cartan,
        symmetric_form=form,
        positive_roots=roots,
        highest_root=Root(highest),
        diagram_edges=edges,
        _index=index,
    )


def add_roots(rs: RootSystem, nu: Root, mu: Root) -> Root | None:
    """Sum of two positive roots if it is again a positive root, else None."""
    rs.root_index(nu)
    rs.root_index(mu)
    total = tuple(a + b for a, b in zip(nu.coeffs, mu.coeffs))
    return Root(total) if total in rs._index else None


def root_order_leq(rs: RootSystem, nu: Root, mu: Root) -> bool:
    """nu <= mu in the root order: mu - nu has no negative coordinate."""
    rs.root_index(nu)
    rs.root_index(mu)
    return all(b >= a for a, b in zip(nu.coeffs, mu.coeffs))


def inner(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    """Invariant form on alpha-basis coordinate vectors, exact rational."""
    n = rs.rank
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"expected length-{n} vectors")
    form = rs.symmetric_form
    return sum(
        Fraction(x[i]) * form[i][j] * Fraction(y[j]) for i in range(n) for j in range(n)
    )


def coroot(rs: RootSystem, mu: Root) -> CorootVector:
    """2*mu/(mu,mu) written over the simple coroots; always integral."""
    rs.sign_index(mu)
    norm = inner(rs, mu.coeffs, mu.coeffs)
    out = []
    for i, c in enumerate(mu.coeffs):
        m = Fraction(c) * rs.symmetric_form[i][i] / norm
        if m.denominator != 1:
            raise IntegralityViolation(f"coroot coordinate {m} of {mu.coeffs} not integral")
        out.append(int(m))
    return CorootVector(tuple(out))


def reflect(rs: RootSystem, i: int, x: Sequence) -> tuple[Fraction, ...]:
    """Simple reflection s_i on an alpha-basis coordinate vector."""
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"simple index {i} outside 1..{rs.rank}")
    alpha = rs.simple_root(i)
    c = 2 * inner(rs, x, alpha.coeffs) / rs.simple_norm(i)
    return tuple(Fraction(v) - (c if j == i - 1 else 0) for j, v in enumerate(x))


def pairing_with_coroot(rs: RootSystem, x: Sequence[int], m: Sequence[int]) -> int:
    """(x, sum m_j alpha_j^vee) for a root-lattice x: the integer x^T A m."""
    cartan = rs.cartan
    n = rs.rank
    return sum(x[i] * cartan[i][j] * m[j] for i in range(n) for j in range(n))
