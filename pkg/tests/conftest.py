import itertools
import random

import pytest

from planemaps import CombinatorialMap, Mode, enumerate_plane, enumerate_spherical
from planemaps.maps import faces, genus, is_connected, perm_invert


@pytest.fixture(scope="session")
def sphere_catalogs():
    return {(e, m): enumerate_spherical(e, m) for m in Mode for e in range(1, 5)}


@pytest.fixture(scope="session")
def plane_catalogs(sphere_catalogs):
    return {(e, m): enumerate_plane(e, m, sphere=sphere_catalogs[(e, m)])
            for m in Mode for e in range(1, 5)}


def random_connected_map(e, rng, spherical=True):
    while True:
        sigma = list(range(2 * e))
        rng.shuffle(sigma)
        m = CombinatorialMap(tuple(sigma))
        if is_connected(m) and (not spherical or genus(m) == 0):
            return m


def edge_relabelings(e):
    """Every dart bijection that sends edges to edges (2^e * e! of them)."""
    for order in itertools.permutations(range(e)):
        for flips in itertools.product((0, 1), repeat=e):
            pi = [0] * (2 * e)
            for i, j in enumerate(order):
                pi[2 * i] = 2 * j + flips[i]
                pi[2 * i + 1] = 2 * j + 1 - flips[i]
            yield pi


def brute_force_classes(e, mode, plane=False):
    """
    Isomorphism classes by exhaustive relabeling; no traversal codes.

    The class key is the least (sigma, outer face) over all edge-respecting
    relabelings of the map and, in FULL mode, of its mirror.
    """
    relabelings = list(edge_relabelings(e))
    n = 2 * e
    keys = set()
    for sigma in itertools.permutations(range(n)):
        m = CombinatorialMap(sigma)
        if not is_connected(m) or genus(m) != 0:
            continue
        variants = [(m.sigma, faces(m))]
        if mode is Mode.FULL:
            inv = perm_invert(m.sigma)
            # mirror faces are alpha-images of the original faces
            variants.append((inv, [tuple(d ^ 1 for d in f) for f in faces(m)]))
        for outer_idx in (range(len(faces(m))) if plane else [None]):
            best = None
            for s, fs in variants:
                for pi in relabelings:
                    t = [0] * n
                    for d in range(n):
                        t[pi[d]] = pi[s[d]]
                    key = (tuple(t),)
                    if plane:
                        key += (tuple(sorted(pi[d] for d in fs[outer_idx])),)
                    if best is None or key < best:
                        best = key
            keys.add(best)
    return keys


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
