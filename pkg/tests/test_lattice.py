from itertools import product

import pytest
from hypothesis import given, strategies as st

from digimv.lattice import (
    Adjacency,
    DigitalImage,
    DimensionError,
    are_adjacent,
    boundary,
    closed_neighborhood,
    connected_components,
    cut_points,
    is_connected,
    neighborhood,
    sets_adjacent,
)

A2 = Adjacency(1, 1)
A4 = Adjacency(2, 1)
A8 = Adjacency(2, 2)


@st.composite
def adjacencies(draw, max_dim=3):
    n = draw(st.integers(1, max_dim))
    return Adjacency(n, draw(st.integers(1, n)))


@st.composite
def point_pairs(draw):
    adj = draw(adjacencies())
    coord = st.integers(-3, 3)
    p = tuple(draw(coord) for _ in range(adj.dimension))
    q = tuple(draw(coord) for _ in range(adj.dimension))
    return adj, p, q


@st.composite
def point_sets(draw, max_size=10):
    adj = draw(adjacencies())
    pts = draw(st.sets(st.tuples(*[st.integers(0, 3)] * adj.dimension), max_size=max_size))
    return adj, frozenset(pts)


def components_oracle(S, adj):
    """Union-find over all pairs, independent of the BFS in the library."""
    pts = sorted(S)
    parent = {p: p for p in pts}

    def find(p):
        while parent[p] != p:
            p = parent[p]
        return p

    for p in pts:
        for q in pts:
            if are_adjacent(p, q, adj):
                parent[find(p)] = find(q)
    groups = {}
    for p in pts:
        groups.setdefault(find(p), set()).add(p)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def test_adjacency_rejects_bad_u():
    with pytest.raises(ValueError):
        Adjacency(2, 3)
    with pytest.raises(ValueError):
        Adjacency(2, 0)


@pytest.mark.parametrize("n,u,count", [(1, 1, 2), (2, 1, 4), (2, 2, 8), (3, 1, 6), (3, 2, 18), (3, 3, 26)])
def test_named_aliases(n, u, count):
    assert Adjacency(n, u).count == count
    assert Adjacency.from_count(n, count) == Adjacency(n, u)


def test_are_adjacent_examples():
    assert not are_adjacent((0, 0), (1, 1), A4)
    assert are_adjacent((0, 0), (1, 1), A8)
    assert not are_adjacent((0, 0), (0, 0), A8)
    assert not are_adjacent((0, 0), (2, 0), A8)


def test_are_adjacent_dimension_mismatch():
    with pytest.raises(DimensionError):
        are_adjacent((0,), (0, 1), A4)


@given(point_pairs())
def test_adjacency_symmetric_and_irreflexive(args):
    adj, p, q = args
    assert are_adjacent(p, q, adj) == are_adjacent(q, p, adj)
    assert not are_adjacent(p, p, adj)


@pytest.mark.parametrize("n,u", [(n, u) for n in (1, 2, 3) for u in range(1, n + 1)])
def test_neighborhood_matches_enumeration(n, u):
    adj = Adjacency(n, u)
    origin = (0,) * n
    brute = {p for p in product(range(-2, 3), repeat=n) if are_adjacent(origin, p, adj)}
    assert neighborhood(origin, adj) == brute
    if u == 1:
        assert len(brute) == 2 * n
    if u == n:
        assert len(brute) == 3 ** n - 1


def test_neighborhood_examples():
    assert neighborhood((0, 0), A4) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert len(neighborhood((0, 0), A8)) == 8
    assert len(neighborhood((0, 0, 0), Adjacency(3, 2))) == 18
    assert len(closed_neighborhood((0, 0), A4)) == 5
    assert len(closed_neighborhood((0, 0), A8)) == 9
    assert closed_neighborhood((5,), A2) == {(4,), (5,), (6,)}


def test_image_is_canonical_and_rejects_duplicates():
    X = DigitalImage([(1, 0), (0, 1), (0, 0)], A4)
    assert X.points == ((0, 0), (0, 1), (1, 0))
    assert X == DigitalImage([(0, 0), (1, 0), (0, 1)], A4)
    with pytest.raises(ValueError):
        DigitalImage([(0, 0), (0, 0)], A4)
    with pytest.raises(DimensionError):
        DigitalImage([(0, 0, 0)], A4)


def test_boundary_examples():
    X = DigitalImage.box((0, 0), (2, 2), A4)
    # Enumerated by hand: every point but the center has a 4-neighbor outside.
    assert boundary(X) == X.point_set - {(1, 1)}
    assert boundary(DigitalImage([], A4)) == frozenset()
    assert boundary(DigitalImage([(0, 0)], A4)) == {(0, 0)}


@given(point_sets())
def test_boundary_is_subset(args):
    adj, S = args
    X = DigitalImage(S, adj)
    assert boundary(X) <= X.point_set


def test_is_connected_examples():
    assert not is_connected({(0, 0), (1, 1)}, A4)
    assert is_connected({(0, 0), (1, 1)}, A8)
    assert not is_connected({(0,), (2,)}, A2)
    assert is_connected(set(), A4)
    assert is_connected({(3, 3)}, A4)


def test_components_examples():
    assert connected_components({(0,), (2,)}, A2) == [{(0,)}, {(2,)}]
    assert connected_components({(0, 0), (1, 0), (5, 5)}, A4) == [{(0, 0), (1, 0)}, {(5, 5)}]
    assert connected_components(set(), A4) == []


@given(point_sets())
def test_components_match_union_find(args):
    adj, S = args
    comps = connected_components(S, adj)
    assert comps == components_oracle(S, adj)
    assert is_connected(S, adj) == (len(comps) <= 1)


@given(adjacencies(), st.data())
def test_union_of_adjacent_connected_sets_is_connected(adj, data):
    from digimv.corpus import grow_connected
    import random

    rng = random.Random(data.draw(st.integers(0, 10**6)))
    A = grow_connected(rng, adj, data.draw(st.integers(1, 5)))
    offset = tuple(data.draw(st.integers(-3, 3)) for _ in range(adj.dimension))
    B = grow_connected(rng, adj, data.draw(st.integers(1, 5)), start=offset)
    if sets_adjacent(A, B, adj):
        assert is_connected(A | B, adj)


def test_sets_adjacent_examples():
    assert sets_adjacent({(0,), (2,)}, {(1,)}, A2)
    assert not sets_adjacent({(0,)}, {(2,)}, A2)
    assert sets_adjacent({(5,), (9,)}, {(9,)}, A2)
    assert not sets_adjacent(set(), {(0,)}, A2)


def test_cut_points():
    assert cut_points(DigitalImage([(0,), (1,), (2,)], A2)) == {(1,)}
    assert cut_points(DigitalImage.box((0, 0), (1, 1), A4)) == frozenset()
    with pytest.raises(ValueError):
        cut_points(DigitalImage([(0,), (2,)], A2))


def test_cut_points_square_by_exhaustive_removal():
    X = DigitalImage.box((0, 0), (1, 1), A4)
    for p in X:
        rest = [q for q in X if q != p]
        # three points of a 2x2 square always form an L
        assert is_connected(rest, A4)
