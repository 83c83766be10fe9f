import pytest
from hypothesis import given, settings, strategies as st

from planemaps.maps import (
    CombinatorialMap,
    edges,
    faces,
    genus,
    is_connected,
    mirror,
    perm_compose,
    perm_cycles,
    relabel,
    summary,
    vertices,
)

LOOP = CombinatorialMap((1, 0))
SEGMENT = CombinatorialMap((0, 1))
NESTED = CombinatorialMap.from_cycles([(0, 1, 2, 3)], 2)
INTERLEAVED = CombinatorialMap.from_cycles([(0, 2, 1, 3)], 2)


def naive_faces(m):
    """Walk face boundaries using per-vertex rotation lists (no composed permutation)."""
    rot = {}
    for cyc in vertices(m):
        for i, d in enumerate(cyc):
            rot[d] = (cyc, i)
    unvisited = set(range(m.num_darts))
    out = []
    while unvisited:
        start = min(unvisited)
        f = []
        d = start
        while True:
            f.append(d)
            unvisited.discard(d)
            cyc, i = rot[d ^ 1]   # arrive at the far end, turn to the next dart there
            d = cyc[(i + 1) % len(cyc)]
            if d == start:
                break
        out.append(frozenset(f))
    return out


maps_st = st.integers(1, 4).flatmap(lambda e: st.permutations(range(2 * e))).map(
    lambda p: CombinatorialMap(tuple(p)))


def test_vertices_examples():
    assert vertices(SEGMENT) == [(0,), (1,)]
    assert vertices(LOOP) == [(0, 1)]
    assert vertices(NESTED) == [(0, 1, 2, 3)]


def test_faces_examples():
    assert faces(LOOP) == [(0,), (1,)]
    assert faces(SEGMENT) == [(0, 1)]
    assert faces(INTERLEAVED) == [(0, 3, 1, 2)]
    assert sorted(map(sorted, faces(NESTED))) == [[0, 2], [1], [3]]


def test_connectivity_examples():
    assert is_connected(LOOP)
    assert is_connected(SEGMENT)
    assert not is_connected(CombinatorialMap((0, 1, 2, 3)))


def test_genus_examples():
    assert genus(LOOP) == 0
    assert genus(INTERLEAVED) == 1
    assert genus(NESTED) == 0


def test_genus_rejects_disconnected():
    with pytest.raises(ValueError):
        genus(CombinatorialMap((0, 1, 2, 3)))


def test_summary_examples():
    s = summary(SEGMENT)
    assert (s.V, s.E, s.F, s.genus) == (2, 1, 1, 0)
    assert s.vertex_degrees == (1, 1) and s.face_degrees == (2,)
    s = summary(LOOP)
    assert (s.V, s.E, s.F, s.genus) == (1, 1, 2, 0)
    assert s.vertex_degrees == (2,) and s.face_degrees == (1, 1)


@pytest.mark.parametrize("sigma", [(), (0,), (0, 0), (0, 1, 2), (1, 2, 3, 4)])
def test_constructor_rejects_invalid(sigma):
    with pytest.raises(ValueError):
        CombinatorialMap(sigma)


def test_alpha_convention():
    m = CombinatorialMap((2, 3, 0, 1, 5, 4))
    assert m.alpha == (1, 0, 3, 2, 5, 4)
    assert all(m.alpha[m.alpha[d]] == d and m.alpha[d] != d for d in range(6))
    assert edges(m) == [(0, 1), (2, 3), (4, 5)]


def test_relabel_rejects_edge_splitting():
    with pytest.raises(ValueError):
        relabel(NESTED, (0, 2, 1, 3))


@given(maps_st)
@settings(max_examples=300)
def test_orbits_partition_darts(m):
    for cycles in (vertices(m), faces(m), edges(m)):
        darts = sorted(d for c in cycles for d in c)
        assert darts == list(range(m.num_darts))


@given(maps_st)
@settings(max_examples=300)
def test_euler_formula(m):
    if not is_connected(m):
        return
    s = summary(m)
    assert s.V - s.E + s.F == 2 - 2 * s.genus
    assert s.genus >= 0
    assert sum(s.vertex_degrees) == sum(s.face_degrees) == 2 * s.E


@given(maps_st)
@settings(max_examples=300)
def test_faces_match_naive_trace(m):
    assert sorted(map(frozenset, faces(m)), key=min) == sorted(naive_faces(m), key=min)


@given(maps_st)
@settings(max_examples=300)
def test_face_convention_swap(m):
    # alpha o sigma is conjugate to sigma o alpha by alpha
    other = perm_compose(m.alpha, m.sigma)
    assert sorted(map(len, perm_cycles(other))) == sorted(map(len, faces(m)))


@given(maps_st, st.randoms(use_true_random=False))
@settings(max_examples=200)
def test_mirror_and_relabel_keep_summary(m, r):
    from planemaps.maps import random_edge_relabeling

    if not is_connected(m):
        return
    s = summary(m)
    assert summary(mirror(m)) == s
    assert summary(relabel(m, random_edge_relabeling(m.edge_count, r))) == s
