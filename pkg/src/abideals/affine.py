"""Minuscule elements of the affine Weyl group and the mod-2 subset map.

An affine Weyl element is stored in its translation form w = v . t_r with
v a finite Weyl element and r in the coroot lattice; on a real affine
root (gamma, m) it acts by (v(gamma), m - (gamma, r)).  The affine simple
reflection s_0 is the pair (s_theta, -theta^vee).

Elements carry four integer matrices: the action of v and v^{-1} on
alpha-basis coordinates and on coroot-basis coordinates.  Group
operations then stay in integer arithmetic throughout.

Minuscule elements are grown by a breadth-first walk: s_i . w stays
minuscule exactly when w^{-1}(alpha_i) has the shape delta - gamma for a
positive root gamma outside the ideal attached to w, and the new ideal
gains gamma.  The walk terminates with exactly 2^rank elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from ._linalg import identity_matrix, mat_inv_det, mat_mul, mat_vec
from .errors import IndexOutOfRange
from .ideals import AbelianIdeal, enumerate_abelian_ideals
from .rootsys import CorootVector, Root, RootSystem, coroot, pairing_with_coroot

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AffineRoot:
    """A real affine root finite + level * delta."""

    finite: Root
    level: int

    @property
    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return all(c >= 0 for c in self.finite.coeffs)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(-self.finite, -self.level)


@dataclass(frozen=True)
class AffineWeylElement:
    """w = v . t_r; v stored with its inverse and its coroot-basis action."""

    v: IntMatrix
    vinv: IntMatrix
    vc: IntMatrix
    vcinv: IntMatrix
    r: CorootVector
    word: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        return self.v == other.v and self.r == other.r

    def __hash__(self) -> int:
        return hash((self.v, self.r))


@dataclass(frozen=True)
class MinusculeRecord:
    ideal: AbelianIdeal
    element: AffineWeylElement
    z: CorootVector
    s_subset: frozenset[int]
    length: int


def alpha_zero(rs: RootSystem) -> AffineRoot:
    """alpha_0 = delta - theta."""
    return AffineRoot(-rs.highest_root, 1)


def identity_element(rs: RootSystem) -> AffineWeylElement:
    e = identity_matrix(rs.rank)
    return AffineWeylElement(e, e, e, e, CorootVector((0,) * rs.rank), ())


def _check_dual_action(rs: RootSystem, v: IntMatrix, vc: IntMatrix) -> None:
    # vc must be diag(d) v diag(d)^{-1} for d_i = (alpha_i, alpha_i)/2.
    n = rs.rank
    d = [rs.symmetric_form[i][i] / 2 for i in range(n)]
    assert all(
        Fraction(vc[k][j]) == d[k] * v[k][j] / d[j] for k in range(n) for j in range(n)
    ), "coroot-basis action inconsistent with the root-basis action"


def simple_affine_reflection(rs: RootSystem, i: int) -> AffineWeylElement:
    """s_i for i in 0..n, with s_0 = (s_theta, -theta^vee)."""
    n = rs.rank
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"affine simple index {i} outside 0..{n}")
    cartan = rs.cartan
    if i >= 1:
        i0 = i - 1
        v = tuple(
            tuple(int(k == j) - (cartan[j][i0] if k == i0 else 0) for j in range(n))
            for k in range(n)
        )
        vc = tuple(
            tuple(int(k == j) - (cartan[i0][j] if k == i0 else 0) for j in range(n))
            for k in range(n)
        )
        _check_dual_action(rs, v, vc)
        return AffineWeylElement(v, v, vc, vc, CorootVector((0,) * n), (i,))
    theta = rs.highest_root.coeffs
    theta_vee = coroot(rs, rs.highest_root).coeffs
    # s_theta(alpha_j) = alpha_j - (alpha_j, theta^vee) theta and dually on coroots.
    v = tuple(
        tuple(
            int(k == j) - sum(cartan[j][m] * theta_vee[m] for m in range(n)) * theta[k]
            for j in range(n)
        )
        for k in range(n)
    )
    vc = tuple(
        tuple(
            int(k == j) - sum(theta[m] * cartan[m][j] for m in range(n)) * theta_vee[k]
            for j in range(n)
        )
        for k in range(n)
    )
    _check_dual_action(rs, v, vc)
    return AffineWeylElement(v, v, vc, vc, CorootVector(tuple(-x for x in theta_vee)), (0,))


def affine_act(rs: RootSystem, w: AffineWeylElement, beta: AffineRoot) -> AffineRoot:
    """(gamma, m) -> (v(gamma), m - (gamma, r))."""
    rs.sign_index(beta.finite)
    image = Root(mat_vec(w.v, beta.finite.coeffs))
    rs.sign_index(image)  # bug signal if v leaves the root system
    level = beta.level - pairing_with_coroot(rs, beta.finite.coeffs, w.r.coeffs)
    return AffineRoot(image, level)


def compose(rs: RootSystem, w1: AffineWeylElement, w2: AffineWeylElement) -> AffineWeylElement:
    """w1 . w2 = (v1 v2, r2 + v2^{-1}(r1))."""
    r = tuple(a + b for a, b in zip(w2.r.coeffs, mat_vec(w2.vcinv, w1.r.coeffs)))
    return AffineWeylElement(
        mat_mul(w1.v, w2.v),
        mat_mul(w2.vinv, w1.vinv),
        mat_mul(w1.vc, w2.vc),
        mat_mul(w2.vcinv, w1.vcinv),
        CorootVector(r),
        w1.word + w2.word,
    )


def inverse(rs: RootSystem, w: AffineWeylElement) -> AffineWeylElement:
    """w^{-1} = (v^{-1}, -v(r))."""
    r = tuple(-x for x in mat_vec(w.vc, w.r.coeffs))
    return AffineWeylElement(
        w.vinv, w.v, w.vcinv, w.vc, CorootVector(r), tuple(reversed(w.word))
    )


def z_of(rs: RootSystem, w: AffineWeylElement) -> CorootVector:
    """v(r), cross-checked against the level characterization.

    Writing w^{-1}(alpha_i) = mu_i + k_i delta, the element z is the unique
    coroot-lattice point with (z, alpha_i) = k_i; both routes must agree.
    """
    z = mat_vec(w.vc, w.r.coeffs)
    winv = inverse(rs, w)
    for i in range(1, rs.rank + 1):
        beta = affine_act(rs, winv, AffineRoot(rs.simple_root(i), 0))
        assert pairing_with_coroot(rs, rs.simple_root(i).coeffs, z) == beta.level, (
            "translation part and level characterization disagree"
        )
    return CorootVector(z)


def s_subset(z: CorootVector) -> frozenset[int]:
    """Indices where z has an odd coordinate."""
    return frozenset(i + 1 for i, m in enumerate(z.coeffs) if m % 2)


@lru_cache(maxsize=None)
def enumerate_minuscule(rs: RootSystem) -> tuple[MinusculeRecord, ...]:
    """All minuscule elements with their ideals, ordered by ideal size then mask."""
    n = rs.rank
    refl = [simple_affine_reflection(rs, i) for i in range(n + 1)]
    simples_affine = [alpha_zero(rs)] + [AffineRoot(rs.simple_root(i), 0) for i in range(1, n + 1)]
    by_mask: dict[int, AffineWeylElement] = {0: identity_element(rs)}
    frontier = [0]
    while frontier:
        fresh = []
        for mask in frontier:
            w = by_mask[mask]
            winv = inverse(rs, w)
            for i in range(n + 1):
                beta = affine_act(rs, winv, simples_affine[i])
                if beta.level != 1:
                    continue
                gamma = -beta.finite
                if not rs.is_positive_root(gamma):
                    continue
                g = rs.root_index(gamma)
                if mask >> g & 1:
                    continue
                new_w = compose(rs, refl[i], w)
                new_mask = mask | (1 << g)
                if new_mask in by_mask:
                    assert by_mask[new_mask] == new_w, "ideal reached by unequal elements"
                else:
                    by_mask[new_mask] = new_w
                    fresh.append(new_mask)
        frontier = fresh
    assert len(by_mask) == 1 << n, f"minuscule walk found {len(by_mask)} != 2^{n} elements"
    records = []
    for mask in sorted(by_mask, key=lambda m: (m.bit_count(), m)):
        w = by_mask[mask]
        z = z_of(rs, w)
        length = mask.bit_count()
        assert length == len(w.word)
        records.append(MinusculeRecord(AbelianIdeal(mask), w, z, s_subset(z), length))
    ideal_masks = {rec.ideal.mask for rec in records}
    assert ideal_masks == {i.mask for i in enumerate_abelian_ideals(rs)}, (
        "minuscule ideals disagree with the direct enumeration"
    )
    return tuple(records)


def inversion_set(rs: RootSystem, w: AffineWeylElement) -> frozenset[AffineRoot]:
    """Brute-force N(w) over the affine roots of level 0 and 1.

    For minuscule elements every inversion lives at level 1, so this scan
    is exhaustive for them.
    """
    n = rs.rank
    cartan = rs.cartan
    u = [sum(cartan[i][j] * w.r.coeffs[j] for j in range(n)) for i in range(n)]
    out = []
    for gamma in rs.positive_roots:
        c = gamma.coeffs
        image = mat_vec(w.v, c)
        drop = sum(c[i] * u[i] for i in range(n))
        neg_image = all(x <= 0 for x in image)
        # level 0: w(gamma, 0) = (image, -drop)
        if -drop < 0 or (drop == 0 and neg_image):
            out.append(AffineRoot(gamma, 0))
        # level 1: w(gamma, 1) = (image, 1 - drop)
        if 1 - drop < 0 or (1 - drop == 0 and neg_image):
            out.append(AffineRoot(gamma, 1))
        # level 1: w(-gamma, 1) = (-image, 1 + drop)
        if 1 + drop < 0 or (1 + drop == 0 and not neg_image):
            out.append(AffineRoot(-gamma, 1))
    return frozenset(out)


@lru_cache(maxsize=None)
def enumerate_Z1(rs: RootSystem) -> frozenset[CorootVector]:
    """Brute-force scan for {z in Q^vee : (z, gamma) in {-1,0,1,2} for all gamma > 0}.

    Independent of the minuscule walk: every candidate vector of simple
    pairings k in {-1,0,1,2}^n is solved through the inverse Cartan matrix,
    kept when integral, and filtered against all positive roots.
    """
    n = rs.rank
    inv, det_f = mat_inv_det(rs.cartan)
    det = int(det_f)
    adjugate = [[int(inv[i][j] * det) for j in range(n)] for i in range(n)]
    # (z, gamma) = sum_i c_i k_i, so simple roots pass automatically;
    # check the rest, tallest first for early rejection.
    checks = sorted(
        (g.coeffs for g in rs.positive_roots if sum(g.coeffs) > 1),
        key=lambda c: -sum(c),
    )
    found = []
    for k in itertools.product((-1, 0, 1, 2), repeat=n):
        ok = True
        for c in checks:
            s = sum(a * b for a, b in zip(c, k))
            if s < -1 or s > 2:
                ok = False
                break
        if not ok:
            continue
        numer = [sum(adjugate[i][j] * k[j] for j in range(n)) for i in range(n)]
        if all(x % det == 0 for x in numer):
            found.append(CorootVector(tuple(x // det for x in numer)))
    return frozenset(found)


def in_fundamental_domain(rs: RootSystem, x: Sequence) -> bool:
    """-1 < (x, gamma) <= 1 for every positive root, exact rationals.

    (x, gamma) is linear in gamma, so the n pairings with the simple roots
    are computed once and put over a common denominator; the sweep over
    positive roots is then integer arithmetic.
    """
    n = rs.rank
    form = rs.symmetric_form
    t = [sum(Fraction(x[j]) * form[j][i] for j in range(n)) for i in range(n)]
    scale = 1
    for f in t:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    T = [int(f * scale) for f in t]
    for gamma in rs.positive_roots:
        s = sum(c * v for c, v in zip(gamma.coeffs, T))
        if not -scale < s <= scale:
            return False
    return True
