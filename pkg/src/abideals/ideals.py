"""Enumeration of abelian ideals of the positive-root poset."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .dynkin import GradedPolynomial
from .errors import InvalidIdeal
from .rootsys import Root, RootSystem


@dataclass(frozen=True)
class AbelianIdeal:
    """An upper-closed, sum-free set of positive roots.

    Stored as a bitmask over rs.positive_roots; all operations take the
    owning root system explicitly.
    """

    mask: int

    @property
    def size(self) -> int:
        return self.mask.bit_count()


@lru_cache(maxsize=None)
def _tables(rs: RootSystem) -> tuple[list[int], list[int], list[int]]:
    """Per-root bitmasks: strict up-sets, strict down-sets, and the roots
    whose sum with the given root is again a positive root."""
    pos = rs.positive_roots
    n = len(pos)
    up = [0] * n
    down = [0] * n
    incompat = [0] * n
    for i, nu in enumerate(pos):
        for j in range(i + 1, n):
            mu = pos[j]
            if all(b >= a for a, b in zip(nu.coeffs, mu.coeffs)):
                up[i] |= 1 << j
                down[j] |= 1 << i
    index = rs._index
    for i, nu in enumerate(pos):
        for j in range(i, n):
            total = tuple(a + b for a, b in zip(nu.coeffs, pos[j].coeffs))
            if total in index:
                incompat[i] |= 1 << j
                incompat[j] |= 1 << i
    return up, down, incompat


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        yield bit.bit_length() - 1
        mask ^= bit


def roots_of(rs: RootSystem, ideal: AbelianIdeal) -> tuple[Root, ...]:
    pos = rs.positive_roots
    return tuple(pos[i] for i in _bits(ideal.mask))


def ideal_from_roots(rs: RootSystem, roots: Iterable[Root]) -> AbelianIdeal:
    """Bitmask ideal from explicit roots; validates both invariants."""
    mask = 0
    for r in roots:
        mask |= 1 << rs.root_index(r)
    ideal = AbelianIdeal(mask)
    _validate(rs, ideal)
    return ideal


def upper_closure(rs: RootSystem, roots: Iterable[Root]) -> AbelianIdeal:
    """Smallest upper-closed set containing the given roots.

    The result is upper-closed by construction but not necessarily
    abelian; callers that need that must validate.
    """
    up, _, _ = _tables(rs)
    mask = 0
    for r in roots:
        i = rs.root_index(r)
        mask |= (1 << i) | up[i]
    return AbelianIdeal(mask)


def _validate(rs: RootSystem, ideal: AbelianIdeal) -> None:
    up, _, incompat = _tables(rs)
    if ideal.mask < 0 or ideal.mask >= 1 << len(rs.positive_roots):
        raise InvalidIdeal(f"mask {ideal.mask} outside the positive-root index space")
    for i in _bits(ideal.mask):
        if up[i] & ~ideal.mask:
            raise InvalidIdeal(f"not upper-closed above root index {i}")
        if incompat[i] & ideal.mask:
            raise InvalidIdeal(f"not sum-free at root index {i}")


def is_abelian_upper_ideal(rs: RootSystem, s: Iterable[Root]) -> bool:
    """Definitional check, independent of the bitmask machinery."""
    members = {r.coeffs for r in s}
    for c in members:
        if c not in rs._index:
            return False
    for c in members:
        for mu in rs.positive_roots:
            if all(b >= a for a, b in zip(c, mu.coeffs)) and mu.coeffs not in members:
                return False
    pool = list(members)
    for i, a in enumerate(pool):
        for b in pool[i:]:
            if tuple(x + y for x, y in zip(a, b)) in rs._index:
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_abelian_ideals(rs: RootSystem) -> tuple[AbelianIdeal, ...]:
    """All abelian ideals, ordered by size then bitmask.

    Lattice walk from the empty ideal: a root may be added iff its whole
    strict up-set is already present and no sum with a present root is
    again a root.  Every abelian ideal minus one of its minimal roots is
    still an abelian ideal, so the walk reaches everything.
    """
    up, _, incompat = _tables(rs)
    n = len(rs.positive_roots)
    seen = {0}
    frontier = [0]
    while frontier:
        fresh = []
        for mask in frontier:
            for g in range(n):
                bit = 1 << g
                if mask & bit or up[g] & ~mask or incompat[g] & mask:
                    continue
                new = mask | bit
                if new not in seen:
                    seen.add(new)
                    fresh.append(new)
        frontier = fresh
    masks = sorted(seen, key=lambda m: (m.bit_count(), m))
    return tuple(AbelianIdeal(m) for m in masks)


def generators(rs: RootSystem, ideal: AbelianIdeal) -> tuple[Root, ...]:
    """The minimal roots of the ideal, in positive-root order."""
    _validate(rs, ideal)
    _, down, _ = _tables(rs)
    pos = rs.positive_roots
    return tuple(pos[i] for i in _bits(ideal.mask) if not down[i] & ideal.mask)


def kappa(rs: RootSystem, ideal: AbelianIdeal) -> int:
    return len(generators(rs, ideal))


def upper_covering_polynomial(rs: RootSystem) -> GradedPolynomial:
    """Generating function counting abelian ideals by number of generators."""
    counts: list[int] = []
    for ideal in enumerate_abelian_ideals(rs):
        k = kappa(rs, ideal)
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return GradedPolynomial(tuple(counts))
