"""The Levi map: an ideal goes to the simple roots normalizing it.

A simple root alpha_i belongs to the Levi subset of an ideal I iff
alpha_i is not in I and lowering any root of I by alpha_i never leaves I.
The map is injective exactly in types A and C (and their low-rank
coincidences B2 and D3).
"""

from __future__ import annotations

from .ideals import AbelianIdeal, enumerate_abelian_ideals, roots_of, _validate
from .rootsys import Root, RootSystem

LeviSubset = frozenset


def levi_of_normalizer(rs: RootSystem, ideal: AbelianIdeal) -> frozenset[int]:
    _validate(rs, ideal)
    members = {r.coeffs for r in roots_of(rs, ideal)}
    out = set()
    for i in range(1, rs.rank + 1):
        alpha = rs.simple_root(i)
        if alpha.coeffs in members:
            continue
        ok = True
        for c in members:
            lowered = tuple(a - b for a, b in zip(c, alpha.coeffs))
            if lowered in rs._index and lowered not in members:
                ok = False
                break
        if ok:
            out.add(i)
    return frozenset(out)


def psi_collisions(rs: RootSystem) -> tuple[tuple[AbelianIdeal, AbelianIdeal], ...]:
    """All unordered pairs of distinct ideals with the same Levi subset."""
    buckets: dict[frozenset[int], list[AbelianIdeal]] = {}
    for ideal in enumerate_abelian_ideals(rs):
        buckets.setdefault(levi_of_normalizer(rs, ideal), []).append(ideal)
    pairs = []
    for group in buckets.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                pairs.append((group[a], group[b]))
    pairs.sort(key=lambda p: (p[0].mask, p[1].mask))
    return tuple(pairs)
