"""Seeded random generators for images and maps, used by the test suites
and the experiment scripts. Everything takes an explicit ``random.Random``."""
from __future__ import annotations

import random
from typing import Optional

from .functions import MultiFn, SingleFn
from .lattice import Adjacency, DigitalImage, Point, closed_neighborhood, neighborhood
from .morphology import StructuringElement


def random_adjacency(rng: random.Random, dims=(1, 2, 3)) -> Adjacency:
    n = rng.choice(dims)
    return Adjacency(n, rng.randint(1, n))


def random_image(rng: random.Random, adj: Adjacency, max_points: int = 8, span: int = 3,
                 min_points: int = 0) -> DigitalImage:
    """Uniform random subset of the box [0, span)^n."""
    cells = list(DigitalImage.box((0,) * adj.dimension, (span - 1,) * adj.dimension, adj))
    top = min(max_points, len(cells))
    k = rng.randint(min(min_points, top), top)
    return DigitalImage(rng.sample(cells, k), adj)


def grow_connected(rng: random.Random, adj: Adjacency, size: int,
                   start: Optional[Point] = None, within: Optional[frozenset] = None) -> frozenset[Point]:
    """A random connected set made by repeatedly adding a neighbor of the
    current set. ``within`` restricts the growth to a given point set."""
    start = tuple(start) if start is not None else (0,) * adj.dimension
    grown = {start}
    while len(grown) < size:
        frontier = set()
        for p in grown:
            frontier |= neighborhood(p, adj)
        frontier -= grown
        if within is not None:
            frontier &= within
        if not frontier:
            break
        grown.add(rng.choice(sorted(frontier)))
    return frozenset(grown)


def random_connected_image(rng: random.Random, adj: Adjacency, size: int) -> DigitalImage:
    return DigitalImage(grow_connected(rng, adj, size), adj)


def random_subset(rng: random.Random, S, k_max: Optional[int] = None) -> frozenset[Point]:
    pts = sorted(S)
    k = rng.randint(1, len(pts) if k_max is None else min(k_max, len(pts)))
    return frozenset(rng.sample(pts, k))


def random_multifn(rng: random.Random, X: DigitalImage, Y: DigitalImage) -> MultiFn:
    """Random point-images, half of them grown connected so that both cp
    and non-cp maps show up often."""
    table = {}
    for x in X:
        if rng.random() < 0.5:
            seed = rng.choice(Y.points)
            table[x] = grow_connected(rng, Y.adjacency, rng.randint(1, 3), seed, Y.point_set)
        else:
            table[x] = random_subset(rng, Y.point_set, 3)
    return MultiFn(X, Y, table)


def random_continuous_map(rng: random.Random, X: DigitalImage, Y: DigitalImage) -> SingleFn:
    """A random continuous single-valued X -> Y by randomized backtracking.

    Always succeeds for nonempty Y (constant maps are continuous).
    """
    order = list(X.points)
    rng.shuffle(order)
    lam = Y.adjacency
    table: dict[Point, Point] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        allowed = set(Y.point_set)
        for x2 in X.neighbors_in(x):
            if x2 in table:
                allowed &= closed_neighborhood(table[x2], lam)
        choices = sorted(allowed)
        rng.shuffle(choices)
        for y in choices:
            table[x] = y
            if extend(i + 1):
                return True
            del table[x]
        return False

    if not extend(0):  # pragma: no cover - constant maps always work
        raise RuntimeError("no continuous map found")
    return SingleFn(X, Y, table)


def random_cp_multifn(rng: random.Random, X: DigitalImage, Y: DigitalImage) -> MultiFn:
    """A connectivity preserving map: a random continuous f thickened to
    connected sets F(x) containing f(x)."""
    f = random_continuous_map(rng, X, Y)
    return MultiFn(X, Y, {
        x: grow_connected(rng, Y.adjacency, rng.randint(1, 3), f(x), Y.point_set) for x in X
    })


def random_continuous_surjection(rng: random.Random, X: DigitalImage, lam: Adjacency) -> SingleFn:
    """Continuous map from X onto its own image inside a random box.

    The codomain is the set of values hit, so the map is surjective; the
    values are drawn from a small box so fibers of several points are common.
    """
    box = DigitalImage.box((0,) * lam.dimension, (rng.randint(0, 2),) * lam.dimension, lam)
    f = random_continuous_map(rng, X, box)
    Y = DigitalImage.from_set(f.table.values(), lam)
    return SingleFn(X, Y, f.table)


def random_connected_selem(rng: random.Random, adj: Adjacency, size: int) -> StructuringElement:
    return StructuringElement(grow_connected(rng, adj, size))


def random_disconnected_selem(rng: random.Random, adj: Adjacency) -> StructuringElement:
    """Origin plus a point at distance 2 on some axis, plus optional noise
    far away; never connected under any c_u."""
    n = adj.dimension
    axis = rng.randrange(n)
    far = tuple(2 if i == axis else 0 for i in range(n))
    pts = {(0,) * n, far}
    if rng.random() < 0.5:
        pts.add(tuple(rng.choice((-4, 4)) if i == axis else rng.randint(-1, 1) for i in range(n)))
    return StructuringElement(pts)
