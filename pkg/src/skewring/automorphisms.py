"""The six ring automorphisms of F_p[v]/(v^3 - v) and a brute-force oracle.

Every automorphism fixes the scalars (the prime field has no nontrivial
automorphisms), so it is determined by the image of v.  Six images work,
giving closed forms theta_1..theta_6; the enumerator below rediscovers them
independently by scanning all p^3 candidate images, so the count and the
closed forms can be cross-checked at any odd prime.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import InternalMismatch
from .ring import PrimeModulus, RingElement

AUTOMORPHISM_IDS = (1, 2, 3, 4, 5, 6)


def theta_apply(aut_id: int, z: RingElement) -> RingElement:
    """Apply the closed form of automorphism aut_id to z."""
    if aut_id not in AUTOMORPHISM_IDS:
        raise ValueError(f"automorphism id must be in 1..6, got {aut_id}")
    a, b, c = z.a, z.b, z.c
    m = z.modulus
    h = m.half
    if aut_id == 1:
        return z
    if aut_id == 2:
        return RingElement(a, -b, c, m)
    if aut_id == 3:
        return RingElement(a + b + c, -(b - c) * h, -(3 * b + c) * h, m)
    if aut_id == 4:
        return RingElement(a + b + c, (b - c) * h, -(3 * b + c) * h, m)
    if aut_id == 5:
        return RingElement(a - b + c, (b + c) * h, (3 * b - c) * h, m)
    return RingElement(a - b + c, -(b + c) * h, (3 * b - c) * h, m)


def theta_image_of_v(aut_id: int, modulus: PrimeModulus) -> RingElement:
    """The image of the generator v under automorphism aut_id."""
    return theta_apply(aut_id, RingElement.gen(modulus))


def theta_apply_via_image(t: RingElement, z: RingElement) -> RingElement:
    """The scalar-fixing map induced by v -> t: a + b*v + c*v^2 -> a + b*t + c*t^2.

    Works for arbitrary t, injective or not; this is the generic formula
    the brute-force oracle evaluates.
    """
    m = z.modulus
    return RingElement.scalar(z.a, m) + RingElement.scalar(z.b, m) * t + (
        RingElement.scalar(z.c, m) * t * t
    )


# ---------------------------------------------------------------------------
# Brute-force enumeration.  Elements are encoded as the index
# (a*p + b)*p + c so that index order equals lexicographic (a, b, c) order.
# ---------------------------------------------------------------------------


def _decode(idx, p):
    return idx // (p * p), (idx // p) % p, idx % p


def _mul_table(p: int) -> np.ndarray:
    """N x N table of product indices, N = p^3, by direct expansion."""
    n = p**3
    idx = np.arange(n, dtype=np.int64)
    a, b, c = _decode(idx, p)
    a1, b1, c1 = a[:, None], b[:, None], c[:, None]
    a2, b2, c2 = a[None, :], b[None, :], c[None, :]
    ra = (a1 * a2) % p
    rb = (a1 * b2 + b1 * a2 + b1 * c2 + c1 * b2) % p
    rc = (a1 * c2 + b1 * b2 + c1 * a2 + c1 * c2) % p
    return ((ra * p + rb) * p + rc).astype(np.int32)


_MUL_TABLE_CACHE: dict[int, np.ndarray] = {}


def mul_table(modulus: PrimeModulus) -> np.ndarray:
    """Cached full multiplication table for a desk-scale prime."""
    p = modulus.p
    if p not in _MUL_TABLE_CACHE:
        _MUL_TABLE_CACHE[p] = _mul_table(p)
    return _MUL_TABLE_CACHE[p]


def _induced_map(t_idx: int, mul: np.ndarray, p: int) -> np.ndarray:
    """Image index of every element under v -> t, vectorized."""
    n = p**3
    t2_idx = int(mul[t_idx, t_idx])
    ta, tb, tc = _decode(t_idx, p)
    ua, ub, uc = _decode(t2_idx, p)
    idx = np.arange(n, dtype=np.int64)
    a, b, c = _decode(idx, p)
    ra = (a + b * ta + c * ua) % p
    rb = (b * tb + c * ub) % p
    rc = (b * tc + c * uc) % p
    return ((ra * p + rb) * p + rc).astype(np.int32)


def _collision(images: np.ndarray) -> tuple[int, int]:
    """Two distinct input indices with the same image (first in sort order)."""
    order = np.argsort(images, kind="stable")
    same = np.nonzero(images[order][1:] == images[order][:-1])[0][0]
    i, j = int(order[same]), int(order[same + 1])
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class EndomorphismCandidate:
    """A candidate image t of v with t^3 = t, annotated by the oracle."""

    image_of_v: RingElement
    injective: bool
    automorphism_id: int | None
    # Witness z != z' with equal images when not injective.
    collision: tuple[RingElement, RingElement] | None


def enumerate_endomorphism_candidates(
    modulus: PrimeModulus,
) -> list[EndomorphismCandidate]:
    """All t with t^3 = t, each with injectivity of the induced map.

    Results are sorted lexicographically by the coefficient triple of t.
    A candidate is tagged with the id of the matching closed form exactly
    when its induced map is bijective.
    """
    p = modulus.p
    n = p**3
    mul = mul_table(modulus)
    idx = np.arange(n, dtype=np.int64)
    t2 = mul[idx, idx]
    t3 = mul[t2, idx]
    candidates = np.nonzero(t3 == idx)[0]

    closed_images = {
        theta_image_of_v(i, modulus).triple(): i for i in AUTOMORPHISM_IDS
    }

    out = []
    for t_idx in candidates:
        images = _induced_map(int(t_idx), mul, p)
        injective = np.unique(images).size == n
        triple = _decode(int(t_idx), p)
        elem = RingElement(*triple, modulus)
        aut_id = closed_images.get(triple) if injective else None
        collision = None
        if not injective:
            i, j = _collision(images)
            collision = (
                RingElement(*_decode(i, p), modulus),
                RingElement(*_decode(j, p), modulus),
            )
        out.append(
            EndomorphismCandidate(
                image_of_v=elem,
                injective=injective,
                automorphism_id=aut_id,
                collision=collision,
            )
        )
    return out


def enumerate_automorphisms_bruteforce(
    modulus: PrimeModulus,
) -> list[tuple[RingElement, int]]:
    """All automorphisms found by exhaustive search, as (image of v, id).

    Bijective candidates are additionally verified multiplicative over all
    element pairs via the multiplication table; a bijection failing that
    check, or matching no closed form, is a library bug and raises
    InternalMismatch.
    """
    p = modulus.p
    mul = mul_table(modulus)
    result = []
    for cand in enumerate_endomorphism_candidates(modulus):
        if not cand.injective:
            continue
        t_idx = (cand.image_of_v.a * p + cand.image_of_v.b) * p + cand.image_of_v.c
        images = _induced_map(t_idx, mul, p)
        if not np.array_equal(images[mul], mul[np.ix_(images, images)]):
            raise InternalMismatch(
                f"bijective candidate {cand.image_of_v} is not multiplicative"
            )
        if cand.automorphism_id is None:
            raise InternalMismatch(
                f"bijective candidate {cand.image_of_v} matches no closed form"
            )
        result.append((cand.image_of_v, cand.automorphism_id))
    return result


# ---------------------------------------------------------------------------
# Composition group.
# ---------------------------------------------------------------------------


def _match_id(image: RingElement) -> int:
    m = image.modulus
    for i in AUTOMORPHISM_IDS:
        if theta_image_of_v(i, m) == image:
            return i
    raise InternalMismatch(f"image of v {image} matches no automorphism")


@functools.lru_cache(maxsize=None)
def compose(i: int, j: int, modulus: PrimeModulus) -> int:
    """The id k with theta_i(theta_j(z)) = theta_k(z) for all z."""
    return _match_id(theta_apply(i, theta_image_of_v(j, modulus)))


@dataclass(frozen=True)
class GroupTable:
    """6 x 6 composition table; rows[i-1][j-1] = id of theta_i o theta_j."""

    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def order_of(self, i: int) -> int:
        k, acc = 1, i
        while acc != 1:
            acc = self.entry(i, acc)
            k += 1
            if k > 6:
                raise InternalMismatch(f"element {i} has order > 6")
        return k


_REFERENCE_TABLE: GroupTable | None = None


def _compute_table(modulus: PrimeModulus) -> GroupTable:
    return GroupTable(
        tuple(
            tuple(compose(i, j, modulus) for j in AUTOMORPHISM_IDS)
            for i in AUTOMORPHISM_IDS
        )
    )


@functools.lru_cache(maxsize=None)
def group_table(modulus: PrimeModulus) -> GroupTable:
    """Composition table at the given prime, checked against p = 3.

    The closed forms have p-independent rational coefficients, so the
    table must not depend on p; a disagreement raises InternalMismatch.
    """
    global _REFERENCE_TABLE
    if _REFERENCE_TABLE is None:
        _REFERENCE_TABLE = _compute_table(PrimeModulus(3))
    table = _compute_table(modulus)
    if table != _REFERENCE_TABLE:
        raise InternalMismatch(
            f"composition table at p={modulus.p} differs from reference"
        )
    return table


@functools.lru_cache(maxsize=None)
def theta_order(aut_id: int) -> int:
    """Order of the automorphism in the composition group."""
    if aut_id not in AUTOMORPHISM_IDS:
        raise ValueError(f"automorphism id must be in 1..6, got {aut_id}")
    return group_table(PrimeModulus(3)).order_of(aut_id)


@functools.lru_cache(maxsize=None)
def theta_power_id(aut_id: int, k: int, modulus: PrimeModulus) -> int:
    """Id of the k-th compositional power of theta, k >= 0."""
    k %= theta_order(aut_id)
    acc = 1
    for _ in range(k):
        acc = compose(aut_id, acc, modulus)
    return acc


def onto_witness_theta3(
    x: int, y: int, z: int, modulus: PrimeModulus
) -> RingElement:
    """A preimage of x + y*v + z*v^2 under theta_3."""
    h = modulus.half
    return RingElement(x - y + z, -(y + z) * h, (3 * y - z) * h, modulus)
