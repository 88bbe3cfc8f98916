"""Multivalued retractions, simple points in Z^2, and shy maps."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Optional

from .functions import (
    MultiFn,
    SingleFn,
    is_connectivity_preserving,
    is_continuous_single,
)
from .lattice import (
    Adjacency,
    DigitalImage,
    Point,
    are_adjacent,
    connected_components,
    fmt,
    is_connected,
    neighborhood,
)

BRUTEFORCE_RETRACT_LIMIT = 6

_N4 = Adjacency(2, 1)
_N8 = Adjacency(2, 2)


class NoSuchRetraction(ValueError):
    """A connectivity preserving retraction onto the target does not exist."""


class NotContinuous(ValueError):
    pass


class NotSurjective(ValueError):
    pass


class RetractKind(enum.Enum):
    CP_RETRACT = "cp_retract"
    NO_CP_RETRACT = "no_cp_retract"
    CONTINUOUS_POSSIBLE = "continuous_retract_possible"
    CONTINUOUS_IMPOSSIBLE = "continuous_retract_impossible"


@dataclass(frozen=True)
class RetractVerdict:
    kind: RetractKind
    reason: str = ""
    witness: Optional[MultiFn] = None
    # Only set by continuous_retract_verdict: whether X - {p} is still a
    # connectivity preserving retract.
    cp_retract: Optional[bool] = None


def _as_set(A: Iterable[Point]) -> frozenset[Point]:
    return frozenset(map(tuple, A))


def is_multivalued_retraction(F: MultiFn, X: DigitalImage, A: Iterable[Point]) -> bool:
    A = _as_set(A)
    if not A <= X.point_set:
        raise ValueError("retract target is not a subset of X")
    if F.domain != X:
        raise ValueError("map is not defined on X")
    return all(ys <= A for ys in F.table.values()) and all(F(a) == {a} for a in A)


def build_cp_retraction(X: DigitalImage, A: Iterable[Point]) -> MultiFn:
    """Fix A pointwise and send everything else to all of A.

    Raises NoSuchRetraction when A is disconnected, since then no
    connectivity preserving retraction of a connected X onto A exists.
    """
    A = _as_set(A)
    if not A:
        raise ValueError("retract target must be nonempty")
    if not A <= X.point_set:
        raise ValueError("retract target is not a subset of X")
    if not X.is_connected():
        raise ValueError("X must be connected")
    if not is_connected(A, X.adjacency):
        raise NoSuchRetraction(f"target {sorted(A)} is disconnected")
    target = X.with_points(A)
    return MultiFn(X, target, {x: {x} if x in A else A for x in X})


def cp_retract_verdict(X: DigitalImage, A: Iterable[Point]) -> RetractVerdict:
    try:
        F = build_cp_retraction(X, A)
    except NoSuchRetraction as e:
        return RetractVerdict(RetractKind.NO_CP_RETRACT, reason=str(e))
    return RetractVerdict(RetractKind.CP_RETRACT, witness=F)


def _nonempty_subsets(S: list[Point]) -> list[frozenset[Point]]:
    return [frozenset(c) for k in range(1, len(S) + 1) for c in combinations(S, k)]


def all_multivalued_retractions(X: DigitalImage, A: Iterable[Point]) -> Iterator[MultiFn]:
    """Every multivalued retraction of X onto A (exponential; tiny X only)."""
    A = _as_set(A)
    if len(X) > BRUTEFORCE_RETRACT_LIMIT:
        raise ValueError(f"exhaustive retraction search is capped at {BRUTEFORCE_RETRACT_LIMIT} points")
    target = X.with_points(A)
    free = [x for x in X if x not in A]
    choices = _nonempty_subsets(sorted(A))
    for pick in product(choices, repeat=len(free)):
        table = {a: {a} for a in A}
        table.update(zip(free, pick))
        yield MultiFn(X, target, table)


def find_cp_retraction_bruteforce(X: DigitalImage, A: Iterable[Point]) -> Optional[MultiFn]:
    for F in all_multivalued_retractions(X, A):
        if is_connectivity_preserving(F):
            return F
    return None


def _check_planar(p: Point, X: DigitalImage) -> None:
    if X.dimension != 2:
        raise ValueError("simple points are only defined in Z^2")
    if tuple(p) not in X:
        raise ValueError(f"{fmt(p)} is not a point of the image")


def _adjacency_for(k: int) -> tuple[Adjacency, Adjacency]:
    if k == 4:
        return _N4, _N8
    if k == 8:
        return _N8, _N4
    raise ValueError(f"k must be 4 or 8, got {k}")


def is_k_boundary_point(p: Point, X: DigitalImage, k: int) -> bool:
    """Some point of N_kbar(p) lies outside X, where {k, kbar} = {4, 8}."""
    _check_planar(p, X)
    _, kbar = _adjacency_for(k)
    return not neighborhood(tuple(p), kbar) <= X.point_set


def is_simple_point(p: Point, X: DigitalImage, k: int) -> bool:
    """k-boundary point with exactly one k-component of N_8(p) meet X that
    is k-adjacent to p."""
    _check_planar(p, X)
    p = tuple(p)
    kadj, _ = _adjacency_for(k)
    if not is_k_boundary_point(p, X, k):
        return False
    ring = neighborhood(p, _N8) & X.point_set
    touching = [
        comp for comp in connected_components(ring, kadj)
        if any(are_adjacent(p, q, kadj) for q in comp)
    ]
    return len(touching) == 1


def continuous_retract_verdict(X: DigitalImage, p: Point) -> RetractVerdict:
    """Is X - {p} a continuous multivalued retract of (X, 8)?

    For a connected X in Z^2 with 8-adjacency this holds exactly when p is
    8-simple. The cp side (X - {p} connected) is reported alongside.
    """
    if X.adjacency != _N8:
        raise ValueError("continuous retract verdict needs 8-adjacency in Z^2")
    p = tuple(p)
    _check_planar(p, X)
    if not X.is_connected():
        raise ValueError("X must be connected")
    rest = X.point_set - {p}
    if not rest:
        raise ValueError("X - {p} is empty, nothing to retract onto")
    cp = cp_retract_verdict(X, rest)
    cp_ok = cp.kind is RetractKind.CP_RETRACT
    if is_simple_point(p, X, 8):
        return RetractVerdict(RetractKind.CONTINUOUS_POSSIBLE, reason=f"{fmt(p)} is 8-simple",
                              witness=cp.witness, cp_retract=cp_ok)
    return RetractVerdict(RetractKind.CONTINUOUS_IMPOSSIBLE, reason=f"{fmt(p)} is not 8-simple",
                          witness=cp.witness, cp_retract=cp_ok)


def is_shy(f: SingleFn) -> bool:
    """Connected point fibers and connected fibers of adjacent pairs."""
    cont = is_continuous_single(f)
    if not cont:
        raise NotContinuous(cont.reason)
    if not f.is_surjective():
        raise NotSurjective("f is not onto its codomain")
    fibers: dict[Point, set[Point]] = {y: set() for y in f.codomain}
    for x, y in f.table.items():
        fibers[y].add(x)
    kappa = f.domain.adjacency
    for y in f.codomain:
        if not is_connected(fibers[y], kappa):
            return False
        for y2 in f.codomain.neighbors_in(y):
            if y < y2 and not is_connected(fibers[y] | fibers[y2], kappa):
                return False
    return True
