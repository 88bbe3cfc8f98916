"""Binary morphology on digital images, and the multivalued maps that model
each operator.

Dilation and closing act on the image itself. Erosion and opening are
modelled on the white pixels (the complement), which is infinite in Z^n;
here the complement is always taken inside an explicit finite ``Window``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .functions import MultiFn
from .lattice import (
    Adjacency,
    DigitalImage,
    DimensionError,
    Point,
    boundary,
    bounding_box,
    closed_neighborhood,
    fmt,
    translate,
)

DEFAULT_MARGIN = 2


class WindowTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class Window:
    """The axis-aligned box [lo, hi] in Z^n, inclusive."""

    lo: Point
    hi: Point

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise DimensionError("window corners differ in dimension")
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError(f"window needs lo <= hi, got {self.lo} .. {self.hi}")

    @property
    def dimension(self) -> int:
        return len(self.lo)

    def points(self) -> frozenset[Point]:
        return frozenset(product(*[range(a, b + 1) for a, b in zip(self.lo, self.hi)]))

    def __contains__(self, p) -> bool:
        return all(a <= c <= b for a, c, b in zip(self.lo, p, self.hi))

    def inflate(self, k: int) -> "Window":
        return Window(tuple(a - k for a in self.lo), tuple(b + k for b in self.hi))


def default_window(X: DigitalImage, margin: int = DEFAULT_MARGIN) -> Window:
    """Bounding box of X grown by ``margin`` cells per axis."""
    if X.points:
        lo, hi = bounding_box(X.points)
    else:
        lo = hi = (0,) * X.dimension
    return Window(lo, hi).inflate(margin)


@dataclass(frozen=True)
class StructuringElement:
    points: frozenset[Point]

    def __post_init__(self):
        pts = frozenset(map(tuple, self.points))
        object.__setattr__(self, "points", pts)
        dims = {len(p) for p in pts}
        if len(dims) > 1:
            raise DimensionError("structuring element points differ in dimension")
        if not pts or (0,) * dims.pop() not in pts:
            raise ValueError("structuring element must contain the origin")

    @property
    def dimension(self) -> int:
        return len(next(iter(self.points)))

    @classmethod
    def closed_neighborhood(cls, adj: Adjacency) -> "StructuringElement":
        return cls(closed_neighborhood((0,) * adj.dimension, adj))


def _dilate_set(S: Iterable[Point], adj: Adjacency) -> frozenset[Point]:
    out: set[Point] = set()
    for x in S:
        out |= closed_neighborhood(x, adj)
    return frozenset(out)


def _erode_set(S: frozenset[Point], adj: Adjacency) -> frozenset[Point]:
    return frozenset(x for x in S if closed_neighborhood(x, adj) <= S)


def dilate(X: DigitalImage) -> DigitalImage:
    return X.with_points(_dilate_set(X, X.adjacency))


def dilate_multifn(X: DigitalImage) -> MultiFn:
    """x -> N*(x), landing in dilate(X)."""
    adj = X.adjacency
    return MultiFn(X, dilate(X), {x: closed_neighborhood(x, adj) for x in X})


def _check_selem(X: DigitalImage, B: StructuringElement) -> None:
    if B.dimension != X.dimension:
        raise DimensionError(f"structuring element is in Z^{B.dimension}, image in Z^{X.dimension}")


def dilate_by(X: DigitalImage, B: StructuringElement) -> DigitalImage:
    _check_selem(X, B)
    return X.with_points(translate(x, b) for x in X for b in B.points)


def dilate_by_multifn(X: DigitalImage, B: StructuringElement) -> MultiFn:
    """x -> x + B."""
    _check_selem(X, B)
    return MultiFn(X, dilate_by(X, B), {x: {translate(x, b) for b in B.points} for x in X})


def erode(X: DigitalImage) -> DigitalImage:
    """Points whose whole closed neighborhood lies in X.

    Same set as Z^n minus the dilation of the complement; see
    ``erode_windowed`` for that form.
    """
    return X.with_points(_erode_set(X.point_set, X.adjacency))


def erode_windowed(X: DigitalImage, W: Window) -> DigitalImage:
    """W minus the dilation of the complement of X, the complement taken in
    W grown by one cell (enough for a single dilation)."""
    _check_inside(X, W)
    outer = W.inflate(1).points()
    white = outer - X.point_set
    return X.with_points(W.points() - _dilate_set(white, X.adjacency))


def _check_inside(X: DigitalImage, W: Window) -> None:
    if W.dimension != X.dimension:
        raise DimensionError("window and image differ in dimension")
    outside = [p for p in X if p not in W]
    if outside:
        raise WindowTooSmall(f"image point {fmt(outside[0])} lies outside the window")


def white_pixels(X: DigitalImage, W: Window) -> DigitalImage:
    _check_inside(X, W)
    return X.with_points(W.points() - X.point_set)


def erosion_complement_multifn(X: DigitalImage, W: Window) -> MultiFn:
    """y -> N*(y) on the white pixels W \\ X, landing in their dilation."""
    return dilate_multifn(white_pixels(X, W))


def close(X: DigitalImage) -> DigitalImage:
    """Erosion of the dilation: points whose closed neighborhood fits in D(X)."""
    adj = X.adjacency
    return X.with_points(_erode_set(_dilate_set(X, adj), adj))


def close_windowed(X: DigitalImage, W: Window) -> DigitalImage:
    """The complement form of closing, Z^n \\ D(Z^n \\ D(X)), evaluated on W.

    The inner complement is taken in W grown by one cell, which contains
    every point a single dilation can bring back into W.
    """
    adj = X.adjacency
    DX = _dilate_set(X, adj)
    outer = W.inflate(1).points()
    return X.with_points(W.points() - _dilate_set(outer - DX, adj))


def closure_multifn(X: DigitalImage) -> MultiFn:
    """Interior points map to themselves, boundary points x to N*(x) meet C(X)."""
    C = close(X)
    adj = X.adjacency
    edge = boundary(X)
    table = {}
    for x in X:
        if x in edge:
            table[x] = closed_neighborhood(x, adj) & C.point_set
        else:
            table[x] = {x}
    return MultiFn(X, C, table)


def open_image(X: DigitalImage, W: Optional[Window] = None) -> DigitalImage:
    """Opening as the complement of the closing of the complement, in W.

    The complement is taken in W grown by two cells: closing looks two
    cells out, so points of W see the same neighborhood they would in Z^n.
    """
    if W is None:
        W = default_window(X)
    if W.dimension != X.dimension:
        raise DimensionError("window and image differ in dimension")
    if not _dilate_set(X, X.adjacency) <= W.points():
        raise WindowTooSmall("window must contain the dilation of X")
    outer = W.inflate(DEFAULT_MARGIN).points()
    white = X.with_points(outer - X.point_set)
    return X.with_points(W.points() - close(white).point_set)


def opening_complement_multifn(X: DigitalImage, W: Window) -> MultiFn:
    """The closure map on the white pixels W \\ X."""
    white = white_pixels(X, W)
    if not white.points:
        raise ValueError("no white pixels in the window: empty domain")
    return closure_multifn(white)
