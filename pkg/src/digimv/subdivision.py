"""Subdivisions S(X, r), the projection E_r, induced multivalued maps, and
a bounded search for single-valued continuous maps that induce a given
multivalued map.

Subdivided points are stored as integer numerators: the tuple ``z``
stands for ``z / r``. Adjacency between numerators is the base image's
adjacency applied to the integer tuples, so all lattice machinery is
reused as is.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .functions import MultiFn, SingleFn, is_connectivity_preserving
from .lattice import DigitalImage, Point, adjacent_or_equal, fmt, is_connected

DEFAULT_R_MAX = 4
DEFAULT_ISO_LIMIT = 12


@dataclass(frozen=True)
class SubdividedImage:
    base: DigitalImage
    r: int
    image: DigitalImage  # numerator points, with the base adjacency

    @property
    def points(self) -> tuple[Point, ...]:
        return self.image.points

    def __len__(self) -> int:
        return len(self.image)

    def __contains__(self, z) -> bool:
        return z in self.image

    def fiber(self, x: Point) -> list[Point]:
        """E_r^{-1}(x), in lexicographic order."""
        return sorted(product(*[range(c * self.r, c * self.r + self.r) for c in x]))


def subdivide(X: DigitalImage, r: int) -> SubdividedImage:
    if r < 1:
        raise ValueError(f"subdivision factor must be >= 1, got {r}")
    pts = []
    for x in X:
        pts.extend(product(*[range(c * r, c * r + r) for c in x]))
    return SubdividedImage(X, r, DigitalImage(pts, X.adjacency))


def project(S: SubdividedImage, z: Point) -> Point:
    """E_r: componentwise floor(z_i / r). Python's // already floors."""
    z = tuple(z)
    if z not in S.image:
        raise ValueError(f"{z} is not a point of the subdivision")
    return tuple(c // S.r for c in z)


def induced_multifn(S: SubdividedImage, f: SingleFn, codomain: Optional[DigitalImage] = None) -> MultiFn:
    """F(x) = { f(z) : z in E_r^{-1}(x) }."""
    if f.domain.point_set != S.image.point_set:
        raise ValueError("f is not defined on exactly the subdivision")
    table: dict[Point, set[Point]] = {x: set() for x in S.base}
    for z, y in f.table.items():
        table[tuple(c // S.r for c in z)].add(y)
    return MultiFn(S.base, codomain or f.codomain, table)


@dataclass(frozen=True)
class InducedWitness:
    r: int
    subdivision: SubdividedImage
    f: SingleFn


def find_witness(F: MultiFn, r: int) -> Optional[InducedWitness]:
    """A continuous f on S(X, r) inducing F exactly, or None.

    Backtracking over numerator points in lexicographic order, trying values
    in lexicographic order. Forward checking keeps two things consistent:
    unassigned neighbors must retain a value equal or adjacent to every
    assigned neighbor, and every fiber must still be able to hit each
    point of its F(x).
    """
    S = subdivide(F.domain, r)
    lam = F.codomain.adjacency
    order = list(S.points)
    var_index = {z: i for i, z in enumerate(order)}
    owner = [tuple(c // r for c in z) for z in order]
    nbrs = [[var_index[q] for q in S.image.neighbors_in(z)] for z in order]
    fiber_vars: dict[Point, list[int]] = {x: [] for x in F.domain}
    for i, x in enumerate(owner):
        fiber_vars[x].append(i)

    # Cheap necessary condition before searching at all.
    for x, ys in F.items():
        if len(ys) > len(fiber_vars[x]):
            return None

    domains: list[set[Point]] = [set(F(x)) for x in owner]
    assigned: list[Optional[Point]] = [None] * len(order)

    def fiber_ok(x: Point) -> bool:
        unassigned = [j for j in fiber_vars[x] if assigned[j] is None]
        hit = {assigned[j] for j in fiber_vars[x] if assigned[j] is not None}
        missing = F(x) - hit
        if len(missing) > len(unassigned):
            return False
        for y in missing:
            if not any(y in domains[j] for j in unassigned):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        for v in sorted(domains[i]):
            assigned[i] = v
            pruned: list[tuple[int, set[Point]]] = []
            ok = True
            for j in nbrs[i]:
                if assigned[j] is not None:
                    continue
                drop = {w for w in domains[j] if not adjacent_or_equal(v, w, lam)}
                if drop:
                    domains[j] -= drop
                    pruned.append((j, drop))
                    if not domains[j]:
                        ok = False
                        break
            if ok:
                touched = {owner[i]} | {owner[j] for j, _ in pruned}
                ok = all(fiber_ok(x) for x in touched)
            if ok and search(i + 1):
                return True
            for j, drop in pruned:
                domains[j] |= drop
            assigned[i] = None
        return False

    # Values of already-assigned neighbors are checked when they were
    # assigned (forward checking), so search(0) only has to walk forward.
    if not search(0):
        return None
    f = SingleFn(S.image, F.codomain, {z: assigned[i] for i, z in enumerate(order)})
    return InducedWitness(r, S, f)


class ContinuityKind(enum.Enum):
    CONTINUOUS_AT = "continuous_at"
    DEFINITELY_NOT = "definitely_not_continuous"
    NOT_INDUCED_UP_TO = "not_induced_up_to"


@dataclass(frozen=True)
class ContinuityVerdict:
    kind: ContinuityKind
    r: Optional[int] = None
    witness: Optional[InducedWitness] = None
    reason: str = ""


def decide_continuity(F: MultiFn, r_max: int = DEFAULT_R_MAX) -> ContinuityVerdict:
    """Semi-decide continuity of F by trying r = 1 .. r_max.

    A continuous multivalued map is connectivity preserving with connected
    point-images, so failing either check rules out every r. Otherwise the
    answer is a witness at the smallest r that has one, or "inconclusive".
    """
    lam = F.codomain.adjacency
    for x, ys in F.items():
        if not is_connected(ys, lam):
            return ContinuityVerdict(ContinuityKind.DEFINITELY_NOT,
                                     reason=f"point-image F{fmt(x)} is disconnected")
    cp = is_connectivity_preserving(F)
    if not cp:
        return ContinuityVerdict(ContinuityKind.DEFINITELY_NOT,
                                 reason=f"not connectivity preserving: {cp.reason}")
    for r in range(1, r_max + 1):
        w = find_witness(F, r)
        if w is not None:
            return ContinuityVerdict(ContinuityKind.CONTINUOUS_AT, r=r, witness=w)
    return ContinuityVerdict(ContinuityKind.NOT_INDUCED_UP_TO, r=r_max,
                             reason=f"no inducing continuous map on S(X, r) for r <= {r_max}")


def images_isomorphic(X: DigitalImage, Y: DigitalImage, limit: int = DEFAULT_ISO_LIMIT) -> bool:
    """Is there a bijection X -> Y preserving adjacency in both directions?"""
    if len(X) != len(Y):
        return False
    if len(X) > limit:
        raise ValueError(f"images have {len(X)} points, isomorphism search is capped at {limit}")
    xs = list(X.points)
    ys = list(Y.points)
    xn = {p: set(X.neighbors_in(p)) for p in xs}
    yn = {p: set(Y.neighbors_in(p)) for p in ys}
    if sorted(len(v) for v in xn.values()) != sorted(len(v) for v in yn.values()):
        return False
    # Most constrained first: high degree, then lexicographic.
    xs.sort(key=lambda p: (-len(xn[p]), p))
    mapping: dict[Point, Point] = {}
    used: set[Point] = set()

    def extend(i: int) -> bool:
        if i == len(xs):
            return True
        x = xs[i]
        for y in ys:
            if y in used or len(yn[y]) != len(xn[x]):
                continue
            if all((mapping[x2] in yn[y]) == (x2 in xn[x]) for x2 in mapping):
                mapping[x] = y
                used.add(y)
                if extend(i + 1):
                    return True
                del mapping[x]
                used.discard(y)
        return False

    return extend(0)
