"""Dynkin diagrams as plain graphs and the subset-component polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import InvalidType, NodeOutOfRange, TooLarge
from .rootsys import RootSystem, TypeSpec

SCAN_CAP = 24  # hard bound on exhaustive 2^n subset scans
EXTENSION_CAP = 12  # node bound for the chain-extension check


@dataclass(frozen=True)
class GradedPolynomial:
    """Integer polynomial in q stored as a coefficient tuple, low degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return GradedPolynomial(tuple(self.coeff(k) + other.coeff(k) for k in range(size)))

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return GradedPolynomial(tuple(self.coeff(k) - other.coeff(k) for k in range(size)))

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedPolynomial(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return GradedPolynomial(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "GradedPolynomial":
        """Multiply by q^k."""
        return GradedPolynomial((0,) * k + self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            elif k == 1:
                term = "q" if mag == 1 else f"{mag}q"
            else:
                term = f"q^{k}" if mag == 1 else f"{mag}q^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


@dataclass(frozen=True)
class Graph:
    """Undirected graph on nodes 1..node_count without self-loops."""

    node_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.node_count < 0:
            raise ValueError("node_count must be nonnegative")
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at node {a}")
            if not (1 <= a <= self.node_count and 1 <= b <= self.node_count):
                raise NodeOutOfRange(f"edge ({a},{b}) outside 1..{self.node_count}")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(norm))


def graph(node_count: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    return Graph(node_count, frozenset(edges))


def path_graph(n: int) -> Graph:
    return graph(n, ((i, i + 1) for i in range(1, n)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = ((a + g1.node_count, b + g1.node_count) for a, b in g2.edges)
    return graph(g1.node_count + g2.node_count, set(g1.edges) | set(shifted))


def diagram_of(rs: RootSystem) -> Graph:
    """Dynkin diagram as a plain graph; multiplicities and arrows dropped."""
    return Graph(rs.rank, rs.diagram_edges)


def _adjacency_masks(g: Graph) -> list[int]:
    adj = [0] * (g.node_count + 1)
    for a, b in g.edges:
        adj[a] |= 1 << (b - 1)
        adj[b] |= 1 << (a - 1)
    return adj


def _components_of_mask(adj: list[int], mask: int) -> int:
    count = 0
    rest = mask
    while rest:
        count += 1
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            m = frontier
            while m:
                bit = m & -m
                m ^= bit
                grow |= adj[bit.bit_length()] & mask
            frontier = grow & ~comp
            comp |= grow
        rest &= ~comp
    return count


def component_count(g: Graph, subset: Iterable[int]) -> int:
    """Connected components of the induced subgraph; 0 for the empty subset."""
    mask = 0
    for v in subset:
        if not 1 <= v <= g.node_count:
            raise NodeOutOfRange(f"node {v} outside 1..{g.node_count}")
        mask |= 1 << (v - 1)
    return _components_of_mask(_adjacency_masks(g), mask)


def subset_polynomial(g: Graph) -> GradedPolynomial:
    """Coefficient of q^k counts the subsets with exactly k components."""
    n = g.node_count
    if n > SCAN_CAP:
        raise TooLarge(f"{n} nodes exceeds the exhaustive-scan cap {SCAN_CAP}")
    adj = _adjacency_masks(g)
    counts = [0] * (n + 1)
    for mask in range(1 << n):
        counts[_components_of_mask(adj, mask)] += 1
    return GradedPolynomial(tuple(counts))


def evaluate(p: GradedPolynomial, q0: int) -> int:
    value = 0
    for c in reversed(p.coeffs):
        value = value * q0 + c
    return value


def _c(m: int, j: int) -> int:
    return comb(m, j) if 0 <= j <= m else 0


_EXCEPTIONAL_E = {
    6: (1, 25, 27, 11),
    7: (1, 34, 60, 30, 3),
    8: (1, 44, 118, 76, 17),
}


def series_polynomial(series: str, n: int) -> GradedPolynomial:
    """Closed-form covering polynomial for one series at a formal rank.

    The A/B/C rows coincide and are valid for any n >= 0; the D row is
    extended formally down to n = 1 (D2 gives the reducible A1 x A1 value,
    D1 the bookkeeping polynomial 1 - q) so that the two-step recurrence
    can be checked from n = 3 up.  The E chain starts at E3 = A2 x A1 with
    E4 = A4 and E5 = D5.
    """
    if series in ("A", "B", "C") and n >= 0:
        return GradedPolynomial(tuple(_c(n + 1, 2 * k) for k in range((n + 1) // 2 + 1)))
    if series == "D" and n >= 1:
        return GradedPolynomial(
            tuple(_c(n + 2, 2 * k) - 4 * _c(n - 1, 2 * k - 2) for k in range((n + 2) // 2 + 1))
        )
    if series == "E" and 3 <= n <= 8:
        if n == 3:
            return series_polynomial("A", 2) * series_polynomial("A", 1)
        if n == 4:
            return series_polynomial("A", 4)
        if n == 5:
            return series_polynomial("D", 5)
        return GradedPolynomial(_EXCEPTIONAL_E[n])
    raise InvalidType(f"no series polynomial for {series}{n}")


def closed_form_polynomial(spec: TypeSpec) -> GradedPolynomial:
    if spec.series == "F":
        return GradedPolynomial((1, 10, 5))
    if spec.series == "G":
        return GradedPolynomial((1, 3))
    if spec.series == "E":
        return GradedPolynomial(_EXCEPTIONAL_E[spec.rank])
    return series_polynomial(spec.series, spec.rank)


def check_series_recurrence(
    p_n: GradedPolynomial, p_n1: GradedPolynomial, p_n2: GradedPolynomial
) -> bool:
    """Exact test of p_n == 2*p_{n-1} + (q - 1)*p_{n-2}."""
    return p_n == 2 * p_n1 + p_n2.shift() - p_n2


def check_extension_recurrence(base: Graph, attach: int | None = None) -> bool:
    """Chain-extension recurrence for the subset-component counts.

    Extends ``base`` by a pendant node y (attached to ``attach``, default
    node 1, or isolated when the base is empty) and then by a second node x
    attached only to y; checks N_k of the three graphs exhaustively.
    """
    n0 = base.node_count
    if n0 > EXTENSION_CAP:
        raise TooLarge(f"{n0} nodes exceeds the extension cap {EXTENSION_CAP}")
    if attach is None and n0 >= 1:
        attach = 1
    if attach is not None and not 1 <= attach <= max(n0, 1):
        raise NodeOutOfRange(f"attach node {attach} outside 1..{n0}")
    y, x = n0 + 1, n0 + 2
    mid_edges = set(base.edges)
    if attach is not None:
        mid_edges.add((attach, y))
    g_mid = graph(n0 + 1, mid_edges)
    g_top = graph(n0 + 2, mid_edges | {(y, x)})
    return check_series_recurrence(
        subset_polynomial(g_top), subset_polynomial(g_mid), subset_polynomial(base)
    )
