import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from digimv.corpus import random_adjacency, random_connected_image, random_continuous_surjection
from digimv.functions import MultiFn, SingleFn, inverse_multifn, is_connectivity_preserving
from digimv.lattice import Adjacency, DigitalImage, connected_components, is_connected
from digimv.retraction import (
    NoSuchRetraction,
    NotContinuous,
    NotSurjective,
    RetractKind,
    all_multivalued_retractions,
    build_cp_retraction,
    continuous_retract_verdict,
    find_cp_retraction_bruteforce,
    is_k_boundary_point,
    is_multivalued_retraction,
    is_shy,
    is_simple_point,
)
from digimv.subdivision import ContinuityKind, decide_continuity

A2 = Adjacency(1, 1)
A4 = Adjacency(2, 1)
A8 = Adjacency(2, 2)
SQUARE = DigitalImage.box((-1, -1), (1, 1), A8)
RING = SQUARE.point_set - {(0, 0)}


def interval(a, b):
    return DigitalImage([(i,) for i in range(a, b + 1)], A2)


def sf(dom, cod, table):
    return SingleFn(dom, cod, {(k,): (v,) for k, v in table.items()})


def test_square_retraction():
    r = build_cp_retraction(SQUARE, RING)
    assert r((0, 0)) == RING
    assert all(r(y) == {y} for y in RING)
    assert is_multivalued_retraction(r, SQUARE, RING)
    assert is_connectivity_preserving(r)


def test_retraction_onto_everything_is_identity():
    assert build_cp_retraction(SQUARE, SQUARE.point_set) == MultiFn.identity(SQUARE)
    assert is_multivalued_retraction(MultiFn.identity(SQUARE), SQUARE, SQUARE.point_set)


def test_non_singleton_on_target_is_not_a_retraction():
    X = interval(0, 1)
    F = MultiFn(X, X, {(0,): {(0,), (1,)}, (1,): {(1,)}})
    assert not is_multivalued_retraction(F, X, X.point_set)
    with pytest.raises(ValueError):
        is_multivalued_retraction(F, X, {(5,)})


def test_disconnected_target_has_no_cp_retraction():
    X = interval(0, 2)
    with pytest.raises(NoSuchRetraction):
        build_cp_retraction(X, {(0,), (2,)})
    assert find_cp_retraction_bruteforce(X, {(0,), (2,)}) is None
    # sanity: the exhaustive search does see retractions, just none that are cp
    assert sum(1 for _ in all_multivalued_retractions(X, {(0,), (2,)})) == 3


def test_build_cp_retraction_rejects_bad_input():
    with pytest.raises(ValueError):
        build_cp_retraction(interval(0, 2), set())
    with pytest.raises(ValueError):
        build_cp_retraction(DigitalImage([(0,), (2,)], A2), {(0,)})


def test_boundary_point_examples():
    assert not is_k_boundary_point((0, 0), SQUARE, 8)
    corner = DigitalImage.box((0, 0), (1, 1), A8)
    assert is_k_boundary_point((1, 1), corner, 8)
    lone = DigitalImage([(4, 4)], A8)
    assert is_k_boundary_point((4, 4), lone, 4) and is_k_boundary_point((4, 4), lone, 8)
    with pytest.raises(ValueError):
        is_k_boundary_point((9, 9), lone, 8)
    with pytest.raises(ValueError):
        is_k_boundary_point((0,), interval(0, 1), 8)


def test_simple_point_examples():
    assert not is_simple_point((0, 0), SQUARE, 8)
    assert is_simple_point((1, 1), DigitalImage.box((0, 0), (1, 1), A8), 8)
    arc = DigitalImage([(0, 0), (1, 0), (2, 0)], A4)
    assert is_simple_point((2, 0), arc, 4)
    assert not is_simple_point((1, 0), arc, 4)  # interior of an arc
    assert not is_simple_point((0, 0), DigitalImage([(0, 0)], A8), 8)  # isolated point
    with pytest.raises(ValueError):
        is_simple_point((0, 0), SQUARE, 6)


def test_continuous_retract_verdicts():
    v = continuous_retract_verdict(SQUARE, (0, 0))
    assert v.kind is RetractKind.CONTINUOUS_IMPOSSIBLE and v.cp_retract is True
    corner = DigitalImage.box((0, 0), (1, 1), A8)
    v = continuous_retract_verdict(corner, (0, 0))
    assert v.kind is RetractKind.CONTINUOUS_POSSIBLE and v.cp_retract is True
    with pytest.raises(ValueError):
        continuous_retract_verdict(DigitalImage([(0, 0)], A8), (0, 0))
    with pytest.raises(ValueError):
        continuous_retract_verdict(DigitalImage.box((0, 0), (1, 1), A4), (0, 0))


def test_shy_examples():
    assert is_shy(SingleFn.identity(interval(0, 3)))
    assert is_shy(sf(interval(0, 2), interval(0, 1), {0: 0, 1: 1, 2: 1}))
    assert not is_shy(sf(interval(0, 3), interval(0, 1), {0: 0, 1: 1, 2: 1, 3: 0}))
    with pytest.raises(NotSurjective):
        is_shy(sf(interval(0, 1), interval(0, 2), {0: 0, 1: 1}))
    with pytest.raises(NotContinuous):
        is_shy(sf(interval(0, 1), DigitalImage([(0,), (2,)], A2), {0: 0, 1: 2}))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_shy_iff_inverse_cp(seed):
    rng = random.Random(seed)
    X = random_connected_image(rng, random_adjacency(rng), rng.randint(1, 8))
    if rng.random() < 0.3:  # also cover disconnected domains
        X = X.with_points(set(X.points) | {(5,) * X.dimension})
    f = random_continuous_surjection(rng, X, random_adjacency(rng))
    assert is_shy(f) == bool(is_connectivity_preserving(inverse_multifn(f)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_setretract_both_directions(seed):
    rng = random.Random(seed)
    X = random_connected_image(rng, random_adjacency(rng), rng.randint(1, 5))
    for k in (1, 2, 3):
        for A in combinations(X.points, k):
            if is_connected(A, X.adjacency):
                F = build_cp_retraction(X, A)
                assert is_multivalued_retraction(F, X, A) and is_connectivity_preserving(F)
            else:
                with pytest.raises(NoSuchRetraction):
                    build_cp_retraction(X, A)
                assert find_cp_retraction_bruteforce(X, A) is None


def _planar_connected(rng, size):
    return random_connected_image(rng, rng.choice([A4, A8]), size)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_simple_point_deletion_keeps_component_count(seed):
    rng = random.Random(seed)
    X = _planar_connected(rng, rng.randint(1, 12))
    # sprinkle a second blob so component counts other than 1 occur
    if rng.random() < 0.5:
        X = X.with_points(set(X.points) | {(9, 9), (9, 10)})
    for k, adj in ((4, A4), (8, A8)):
        before = len(connected_components(X.point_set, adj))
        for p in X:
            if is_simple_point(p, X, k):
                after = len(connected_components(X.point_set - {p}, adj))
                assert after == before


def test_continuous_impossible_never_found_by_search():
    rng = random.Random(7)
    shapes = [SQUARE, DigitalImage.box((0, 0), (3, 2), A8)]
    shapes += [random_connected_image(rng, A8, rng.randint(5, 14)) for _ in range(40)]
    checked = 0
    for X in shapes:
        for p in X:
            if not X.with_points(X.point_set - {p}).is_connected():
                continue
            v = continuous_retract_verdict(X, p)
            if v.kind is RetractKind.CONTINUOUS_IMPOSSIBLE:
                checked += 1
                res = decide_continuity(v.witness, r_max=2)
                assert res.kind is not ContinuityKind.CONTINUOUS_AT
    assert checked > 0
