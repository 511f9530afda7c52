"""Generator-support bijections onto diagram subsets for types A and C.

For A_n a positive root is an interval [i, j] of [n] and an ideal maps to
the XOR of its generators' supports.  For C_n each generator is unfolded
into one or two intervals of [2n-1], the XOR is taken there, and the
result (symmetric about the midpoint n) is cut down to [n].  Both maps
send an ideal with k generators to a subset with k connected components
of the (path) diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Sequence

from .errors import NodeOutOfRange, NotFound, NotInMaximalIdeal, SymmetryViolation, WrongType
from .ideals import AbelianIdeal, enumerate_abelian_ideals, generators, upper_closure
from .rootsys import Root, RootSystem, TypeSpec, build_root_system

NodeSubset = FrozenSet[int]


@dataclass(frozen=True)
class Interval:
    """The set {lo, lo+1, ..., hi} inside some [n]."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"bad interval [{self.lo},{self.hi}]")

    def mask(self) -> int:
        return ((1 << (self.hi - self.lo + 1)) - 1) << (self.lo - 1)

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def _mask_of_subset(n: int, subset: Iterable[int]) -> int:
    mask = 0
    for v in subset:
        if not 1 <= v <= n:
            raise NodeOutOfRange(f"node {v} outside 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def _subset_of_mask(mask: int) -> NodeSubset:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def interval_of_root(root: Root) -> Interval:
    """A-series roots have contiguous 0/1 support."""
    sup = root.support()
    assert sup and len(sup) == sup[-1] - sup[0] + 1, root
    return Interval(sup[0], sup[-1])


def root_of_interval(n: int, iv: Interval) -> Root:
    if iv.hi > n:
        raise NodeOutOfRange(f"{iv} outside [{n}]")
    return Root(tuple(1 if iv.lo <= i + 1 <= iv.hi else 0 for i in range(n)))


def validate_generator_chain(n: int, gens: Sequence[Interval]) -> bool:
    """True iff i_1 < ... < i_k <= j_1 < ... < j_k within [n]."""
    ivs = sorted(gens, key=lambda iv: (iv.lo, iv.hi))
    if any(iv.hi > n for iv in ivs):
        return False
    los = [iv.lo for iv in ivs]
    his = [iv.hi for iv in ivs]
    if any(a >= b for a, b in zip(los, los[1:])):
        return False
    if any(a >= b for a, b in zip(his, his[1:])):
        return False
    return not ivs or los[-1] <= his[0]


def phi_a(rs: RootSystem, ideal: AbelianIdeal) -> NodeSubset:
    """XOR of the generators' supports."""
    if rs.type.series != "A":
        raise WrongType(f"phi_a needs type A, got {rs.type}")
    acc = 0
    for g in generators(rs, ideal):
        acc ^= interval_of_root(g).mask()
    return _subset_of_mask(acc)


def _maximal_intervals(n: int, subset: Iterable[int]) -> list[Interval]:
    mask = _mask_of_subset(n, subset)
    out = []
    i = 1
    while i <= n:
        if mask >> (i - 1) & 1:
            j = i
            while j + 1 <= n and mask >> j & 1:
                j += 1
            out.append(Interval(i, j))
            i = j + 1
        else:
            i += 1
    return out


def _chain_from_blocks(blocks: Sequence[Interval]) -> list[Interval]:
    """Invert the XOR pattern: k maximal blocks back to k chain intervals.

    The first floor(k/2) blocks are read as consecutive pairs of left
    endpoints, the last floor(k/2) as pairs of right endpoints, and for
    odd k the middle block supplies the crossing interval [i_k, j_1].
    """
    k = len(blocks)
    m = k // 2
    i_pts: list[int] = []
    j_pts: list[int] = []
    for b in blocks[:m]:
        i_pts.extend((b.lo, b.hi + 1))
    if k % 2:
        mid = blocks[m]
        i_pts.append(mid.lo)
        j_pts.append(mid.hi)
    for b in blocks[m + (k % 2) :]:
        j_pts.extend((b.lo - 1, b.hi))
    return [Interval(i_pts[s], j_pts[s]) for s in range(k)]


def phi_a_inverse(n: int, subset: Iterable[int]) -> AbelianIdeal:
    """The unique ideal whose generator supports XOR to the given subset."""
    rs = build_root_system(TypeSpec("A", n))
    blocks = _maximal_intervals(n, subset)
    gens = _chain_from_blocks(blocks)
    assert validate_generator_chain(n, gens), (subset, gens)
    return upper_closure(rs, [root_of_interval(n, iv) for iv in gens])


def c_epsilon_form(n: int, root: Root) -> tuple[int, ...]:
    """C_n root written in the epsilon basis (alpha_i = e_i - e_{i+1}, alpha_n = 2e_n)."""
    c = root.coeffs
    eps = []
    for j in range(n - 1):
        eps.append(c[j] - (c[j - 1] if j else 0))
    eps.append(2 * c[n - 1] - (c[n - 2] if n > 1 else 0))
    return tuple(eps)


def unfold_c_root(n: int, mu: Root) -> frozenset[Interval]:
    """Intervals of [2n-1] replacing a root of the maximal abelian ideal.

    e_i + e_j (i < j) becomes the pair [i, 2n-j], [j, 2n-i]; the long root
    2e_i becomes the single interval [i, 2n-i].
    """
    eps = c_epsilon_form(n, mu)
    twos = [i + 1 for i, e in enumerate(eps) if e == 2]
    ones = [i + 1 for i, e in enumerate(eps) if e == 1]
    if twos and not ones and len(twos) == 1 and sum(map(abs, eps)) == 2:
        i = twos[0]
        return frozenset({Interval(i, 2 * n - i)})
    if len(ones) == 2 and not twos and sum(map(abs, eps)) == 2:
        i, j = ones
        return frozenset({Interval(i, 2 * n - j), Interval(j, 2 * n - i)})
    raise NotInMaximalIdeal(f"{mu.coeffs} is not of the form e_i + e_j")


def phi_c(rs: RootSystem, ideal: AbelianIdeal) -> NodeSubset:
    """Unfold the generators to [2n-1], XOR there, and cut down to [n]."""
    if rs.type.series != "C":
        raise WrongType(f"phi_c needs type C, got {rs.type}")
    n = rs.rank
    acc = 0
    for g in generators(rs, ideal):
        for iv in unfold_c_root(n, g):
            acc ^= iv.mask()
    for i in range(1, 2 * n):
        if (acc >> (i - 1) & 1) != (acc >> (2 * n - i - 1) & 1):
            raise SymmetryViolation(f"unfolded subset not symmetric about {n}")
    return frozenset(i for i in range(1, n + 1) if acc >> (i - 1) & 1)


@lru_cache(maxsize=None)
def _phi_c_table(n: int) -> dict[NodeSubset, AbelianIdeal]:
    rs = build_root_system(TypeSpec("C", n))
    table = {phi_c(rs, ideal): ideal for ideal in enumerate_abelian_ideals(rs)}
    assert len(table) == 1 << n, f"phi_c not injective on C{n}"
    return table


def phi_c_inverse(n: int, subset: Iterable[int]) -> AbelianIdeal:
    """Total inverse of phi_c by table inversion over Ab(C_n)."""
    key = frozenset(subset)
    _mask_of_subset(n, key)
    table = _phi_c_table(n)
    try:
        return table[key]
    except KeyError:
        raise NotFound(f"no C{n} ideal maps to {sorted(key)}") from None
