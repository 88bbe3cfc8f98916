"""Lattice points, c_u adjacencies and finite digital images.

A point is a plain tuple of ints. Point sets are ``frozenset``s; anything
that is emitted (components, neighborhoods turned into images, file output)
is sorted lexicographically so results are deterministic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

Point = tuple[int, ...]
PointSet = frozenset

# (n, u) -> conventional neighbor count name
_ALIASES = {
    (1, 1): 2,
    (2, 1): 4,
    (2, 2): 8,
    (3, 1): 6,
    (3, 2): 18,
    (3, 3): 26,
}


class DimensionError(ValueError):
    """Raised when points, images or adjacencies disagree on dimension."""


@dataclass(frozen=True)
class Adjacency:
    """The c_u adjacency on Z^n."""

    dimension: int
    u: int

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError(f"dimension must be positive, got {self.dimension}")
        if not 1 <= self.u <= self.dimension:
            raise ValueError(f"c_u adjacency needs 1 <= u <= n, got u={self.u}, n={self.dimension}")

    @classmethod
    def from_count(cls, dimension: int, count: int) -> "Adjacency":
        """Look up an adjacency by its neighbor count, e.g. ``from_count(2, 8)``."""
        for (n, u), c in _ALIASES.items():
            if n == dimension and c == count:
                return cls(n, u)
        raise ValueError(f"no c_u adjacency in Z^{dimension} with {count} neighbors")

    @property
    def count(self) -> int:
        """Number of lattice neighbors of any point."""
        return len(self.offsets)

    @property
    def offsets(self) -> tuple[Point, ...]:
        return _offsets(self.dimension, self.u)

    def __str__(self) -> str:
        return f"c{self.u} in Z^{self.dimension} ({self.count}-adjacency)"


_OFFSET_CACHE: dict[tuple[int, int], tuple[Point, ...]] = {}


def _offsets(n: int, u: int) -> tuple[Point, ...]:
    key = (n, u)
    if key not in _OFFSET_CACHE:
        _OFFSET_CACHE[key] = tuple(
            d for d in product((-1, 0, 1), repeat=n)
            if 1 <= sum(1 for c in d if c) <= u
        )
    return _OFFSET_CACHE[key]


def _check_dim(p: Point, adj: Adjacency) -> None:
    if len(p) != adj.dimension:
        raise DimensionError(f"point {fmt(p)} has length {len(p)}, adjacency is in Z^{adj.dimension}")


def are_adjacent(p: Point, q: Point, adj: Adjacency) -> bool:
    _check_dim(p, adj)
    _check_dim(q, adj)
    moved = 0
    for a, b in zip(p, q):
        d = abs(a - b)
        if d > 1:
            return False
        moved += d
    return 1 <= moved <= adj.u


def adjacent_or_equal(p: Point, q: Point, adj: Adjacency) -> bool:
    return p == q or are_adjacent(p, q, adj)


def fmt(p: Point) -> str:
    """``(1, 0)`` style text; 1-tuples print as ``(3)``."""
    return "(" + ", ".join(map(str, p)) + ")"


def translate(p: Point, d: Point) -> Point:
    return tuple(a + b for a, b in zip(p, d))


def neighborhood(p: Point, adj: Adjacency) -> frozenset[Point]:
    """N(p): every lattice point adjacent to ``p`` (not clipped to any image)."""
    _check_dim(p, adj)
    return frozenset(translate(p, d) for d in adj.offsets)


def closed_neighborhood(p: Point, adj: Adjacency) -> frozenset[Point]:
    """N*(p) = N(p) | {p}."""
    return neighborhood(p, adj) | {tuple(p)}


class DigitalImage:
    """A finite point set in Z^n carrying its own c_u adjacency.

    Points are held in lexicographic order; equality and hashing are by
    value (points + adjacency).
    """

    __slots__ = ("adjacency", "points", "_set")

    def __init__(self, points: Iterable[Iterable[int]], adjacency: Adjacency):
        pts = [tuple(int(c) for c in p) for p in points]
        for p in pts:
            _check_dim(p, adjacency)
        as_set = frozenset(pts)
        if len(as_set) != len(pts):
            raise ValueError("duplicate points in image")
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "points", tuple(sorted(as_set)))
        object.__setattr__(self, "_set", as_set)

    def __setattr__(self, name, value):
        raise AttributeError("DigitalImage is immutable")

    @classmethod
    def from_set(cls, points: Iterable[Point], adjacency: Adjacency) -> "DigitalImage":
        """Like the constructor but silently drops duplicates."""
        return cls(set(map(tuple, points)), adjacency)

    @classmethod
    def box(cls, lo: Point, hi: Point, adjacency: Adjacency) -> "DigitalImage":
        """The integer box [lo, hi] (inclusive on both ends)."""
        ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
        return cls(product(*ranges), adjacency)

    @property
    def dimension(self) -> int:
        return self.adjacency.dimension

    @property
    def point_set(self) -> frozenset[Point]:
        return self._set

    def with_points(self, points: Iterable[Point]) -> "DigitalImage":
        """A new image with the same adjacency."""
        return DigitalImage.from_set(points, self.adjacency)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._set

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DigitalImage):
            return NotImplemented
        return self.adjacency == other.adjacency and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.adjacency, self._set))

    def __repr__(self) -> str:
        return f"DigitalImage({list(self.points)!r}, {self.adjacency!r})"

    def neighbors_in(self, p: Point) -> list[Point]:
        """Points of the image adjacent to ``p``, in lexicographic order."""
        return sorted(q for q in neighborhood(p, self.adjacency) if q in self._set)

    def is_connected(self) -> bool:
        return is_connected(self._set, self.adjacency)


def boundary(X: DigitalImage) -> frozenset[Point]:
    """delta(X): points of X with at least one lattice neighbor outside X."""
    return frozenset(
        y for y in X if not neighborhood(y, X.adjacency) <= X.point_set
    )


def connected_components(S: Iterable[Point], adj: Adjacency) -> list[frozenset[Point]]:
    """Maximal connected subsets of ``S``, ordered by their smallest point."""
    remaining = set(map(tuple, S))
    for p in remaining:
        _check_dim(p, adj)
    components = []
    for root in sorted(remaining):
        if root not in remaining:
            continue
        remaining.discard(root)
        comp = {root}
        queue = deque([root])
        while queue:
            p = queue.popleft()
            for q in neighborhood(p, adj):
                if q in remaining:
                    remaining.discard(q)
                    comp.add(q)
                    queue.append(q)
        components.append(frozenset(comp))
    return components


def is_connected(S: Iterable[Point], adj: Adjacency) -> bool:
    """Path-connectedness of S; the empty set and singletons count as connected."""
    return len(connected_components(S, adj)) <= 1


def sets_adjacent(A: Iterable[Point], B: Iterable[Point], adj: Adjacency) -> bool:
    """True iff some a in A and b in B are equal or adjacent."""
    A = frozenset(A)
    B = frozenset(B)
    if not A or not B:
        return False
    if A & B:
        return True
    small, big = (A, B) if len(A) <= len(B) else (B, A)
    return any(not neighborhood(a, adj).isdisjoint(big) for a in small)


def cut_points(X: DigitalImage) -> frozenset[Point]:
    """Points whose removal disconnects the (connected, nonempty) image X."""
    if not X.points:
        raise ValueError("cut_points needs a nonempty image")
    if not X.is_connected():
        raise ValueError("cut_points needs a connected image")
    full = X.point_set
    return frozenset(p for p in X if not is_connected(full - {p}, X.adjacency))


def bounding_box(S: Iterable[Point]) -> tuple[Point, Point]:
    pts = list(S)
    if not pts:
        raise ValueError("bounding box of an empty set")
    n = len(pts[0])
    lo = tuple(min(p[i] for p in pts) for i in range(n))
    hi = tuple(max(p[i] for p in pts) for i in range(n))
    return lo, hi
