"""Single- and multivalued functions between digital images and the
predicates defined on them (continuity, connectivity preservation,
weak/strong continuity) plus composition."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping

from .lattice import (
    DigitalImage,
    Point,
    adjacent_or_equal,
    fmt,
    is_connected,
    sets_adjacent,
)

DEFAULT_BRUTEFORCE_LIMIT = 16


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate: ``holds`` plus the first failure witness.

    Truthiness is ``holds`` so a verdict can be used wherever a bool is
    expected.
    """

    holds: bool
    reason: str = ""
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


_OK = Verdict(True)


def _adjacent_pairs(X: DigitalImage):
    """Each unordered adjacent pair (x, x') of X once, with x < x'."""
    for x in X:
        for y in X.neighbors_in(x):
            if x < y:
                yield x, y


class SingleFn:
    """A total single-valued map ``domain -> codomain``."""

    __slots__ = ("domain", "codomain", "table")

    def __init__(self, domain: DigitalImage, codomain: DigitalImage, table: Mapping[Point, Point]):
        table = {tuple(k): tuple(v) for k, v in table.items()}
        if set(table) != domain.point_set:
            missing = sorted(domain.point_set - set(table))
            stray = sorted(set(table) - domain.point_set)
            raise ValueError(f"map not total on domain (missing={missing[:3]}, stray={stray[:3]})")
        for x, y in table.items():
            if y not in codomain:
                raise ValueError(f"value {y} of {x} is outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self.table = table

    @classmethod
    def identity(cls, X: DigitalImage) -> "SingleFn":
        return cls(X, X, {x: x for x in X})

    def __call__(self, x: Point) -> Point:
        return self.table[tuple(x)]

    def __eq__(self, other):
        if not isinstance(other, SingleFn):
            return NotImplemented
        return (self.domain, self.codomain, self.table) == (other.domain, other.codomain, other.table)

    def __repr__(self):
        return f"SingleFn({dict(sorted(self.table.items()))!r})"

    def is_surjective(self) -> bool:
        return set(self.table.values()) == self.codomain.point_set

    def as_multifn(self) -> "MultiFn":
        return MultiFn(self.domain, self.codomain, {x: {y} for x, y in self.table.items()})


class MultiFn:
    """A total multivalued map: every domain point gets a nonempty finite
    subset of the codomain."""

    __slots__ = ("domain", "codomain", "table")

    def __init__(self, domain: DigitalImage, codomain: DigitalImage,
                 table: Mapping[Point, Iterable[Point]]):
        table = {tuple(k): frozenset(map(tuple, v)) for k, v in table.items()}
        if set(table) != domain.point_set:
            missing = sorted(domain.point_set - set(table))
            stray = sorted(set(table) - domain.point_set)
            raise ValueError(f"map not total on domain (missing={missing[:3]}, stray={stray[:3]})")
        for x, ys in table.items():
            if not ys:
                raise ValueError(f"point-image of {x} is empty")
            if not ys <= codomain.point_set:
                bad = sorted(ys - codomain.point_set)
                raise ValueError(f"value {bad[0]} of {x} is outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self.table = table

    @classmethod
    def identity(cls, X: DigitalImage) -> "MultiFn":
        return cls(X, X, {x: {x} for x in X})

    def __call__(self, x: Point) -> frozenset[Point]:
        return self.table[tuple(x)]

    def __eq__(self, other):
        if not isinstance(other, MultiFn):
            return NotImplemented
        return (self.domain, self.codomain, self.table) == (other.domain, other.codomain, other.table)

    def __repr__(self):
        body = {x: sorted(ys) for x, ys in sorted(self.table.items())}
        return f"MultiFn({body!r})"

    def items(self):
        """(x, F(x)) pairs in lexicographic order of x."""
        return [(x, self.table[x]) for x in self.domain]


def image_of_set(F: MultiFn, A: Iterable[Point]) -> frozenset[Point]:
    out: set[Point] = set()
    for x in A:
        x = tuple(x)
        if x not in F.table:
            raise KeyError(f"{x} is not in the domain")
        out |= F.table[x]
    return frozenset(out)


def is_continuous_single(f: SingleFn) -> Verdict:
    lam = f.codomain.adjacency
    for x, y in _adjacent_pairs(f.domain):
        if not adjacent_or_equal(f(x), f(y), lam):
            return Verdict(False, f"f{fmt(x)}={fmt(f(x))} and f{fmt(y)}={fmt(f(y))} are neither equal nor adjacent", (x, y))
    return _OK


def _point_images_connected(F: MultiFn) -> Verdict:
    lam = F.codomain.adjacency
    for x, ys in F.items():
        if not is_connected(ys, lam):
            return Verdict(False, f"F{fmt(x)} is disconnected", x)
    return _OK


def has_weak_continuity(F: MultiFn) -> Verdict:
    lam = F.codomain.adjacency
    for x, y in _adjacent_pairs(F.domain):
        if not sets_adjacent(F(x), F(y), lam):
            return Verdict(False, f"F{fmt(x)} and F{fmt(y)} are not adjacent", (x, y))
    return _OK


def _covers(A: frozenset, B: frozenset, adj) -> bool:
    # every point of A is equal or adjacent to some point of B
    return all(any(adjacent_or_equal(a, b, adj) for b in B) for a in A)


def has_strong_continuity(F: MultiFn) -> Verdict:
    lam = F.codomain.adjacency
    for x, y in _adjacent_pairs(F.domain):
        if not _covers(F(x), F(y), lam):
            return Verdict(False, f"some point of F{fmt(x)} is far from F{fmt(y)}", (x, y))
        if not _covers(F(y), F(x), lam):
            return Verdict(False, f"some point of F{fmt(y)} is far from F{fmt(x)}", (y, x))
    return _OK


def is_connectivity_preserving(F: MultiFn) -> Verdict:
    """Local test: connected point-images, adjacent images of adjacent points."""
    v = _point_images_connected(F)
    if not v:
        return v
    return has_weak_continuity(F)


def connected_subsets(X: DigitalImage) -> list[frozenset[Point]]:
    """All nonempty connected subsets of X.

    Grown from single points by repeatedly adding an adjacent point, with
    subsets tracked as bitmasks so each is visited once.
    """
    pts = list(X.points)
    index = {p: i for i, p in enumerate(pts)}
    nbr_mask = [0] * len(pts)
    for i, p in enumerate(pts):
        for q in X.neighbors_in(p):
            nbr_mask[i] |= 1 << index[q]

    seen: set[int] = set()
    stack = [1 << i for i in range(len(pts))]
    seen.update(stack)
    while stack:
        mask = stack.pop()
        frontier = 0
        m = mask
        while m:
            low = m & -m
            frontier |= nbr_mask[low.bit_length() - 1]
            m ^= low
        frontier &= ~mask
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grown = mask | low
            if grown not in seen:
                seen.add(grown)
                stack.append(grown)
    return [frozenset(pts[i] for i in range(len(pts)) if mask >> i & 1) for mask in seen]


def is_cp_bruteforce(F: MultiFn, limit: int = DEFAULT_BRUTEFORCE_LIMIT) -> Verdict:
    """Connectivity preservation straight from the definition: F(A) must be
    connected for every connected A. Exponential; for small domains only."""
    if len(F.domain) > limit:
        raise ValueError(f"domain has {len(F.domain)} points, brute force is capped at {limit}")
    lam = F.codomain.adjacency
    for A in sorted(connected_subsets(F.domain), key=lambda s: (len(s), sorted(s))):
        if not is_connected(image_of_set(F, A), lam):
            return Verdict(False, f"image of connected set {sorted(A)} is disconnected", A)
    return _OK


def compose(g: MultiFn, f: MultiFn) -> MultiFn:
    """g o f, with (g o f)(x) the union of g(y) over y in f(x)."""
    if f.codomain.adjacency != g.domain.adjacency:
        raise ValueError(f"adjacency mismatch: f lands in {f.codomain.adjacency}, g starts in {g.domain.adjacency}")
    if not f.codomain.point_set <= g.domain.point_set:
        raise ValueError("codomain of f is not contained in the domain of g")
    return MultiFn(f.domain, g.codomain, {x: image_of_set(g, ys) for x, ys in f.table.items()})


def constant_multifn(X: DigitalImage, Y: DigitalImage) -> MultiFn:
    if not Y.points:
        raise ValueError("constant map needs a nonempty codomain")
    return MultiFn(X, Y, {x: Y.point_set for x in X})


def inverse_multifn(f: SingleFn) -> MultiFn:
    """y -> f^{-1}(y), for a surjective f."""
    fibers: dict[Point, set[Point]] = {y: set() for y in f.codomain}
    for x, y in f.table.items():
        fibers[y].add(x)
    empty = [y for y, s in fibers.items() if not s]
    if empty:
        raise ValueError(f"f is not surjective: nothing maps to {min(empty)}")
    return MultiFn(f.codomain, f.domain, fibers)
