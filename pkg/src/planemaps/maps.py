"""
Combinatorial maps on oriented surfaces.

A map with ``E`` edges lives on the darts ``0 .. 2E-1``.  The edge involution
is fixed: dart ``2i`` is paired with ``2i+1``, so ``alpha(d) == d ^ 1``.  A
map is therefore determined by its vertex rotation ``sigma`` alone (the
counterclockwise successor of each dart around its vertex).

Faces are the cycles of ``phi = sigma o alpha``, i.e. ``phi(d) = sigma[alpha(d)]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Cycle = tuple[int, ...]


def perm_cycles(perm: Sequence[int]) -> list[Cycle]:
    """Cycles of ``perm``, each starting at its least dart, ordered by that dart."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


def perm_num_cycles(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    n = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        n += 1
        d = start
        while not seen[d]:
            seen[d] = True
            d = perm[d]
    return n


def perm_invert(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def perm_compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p o q``: apply ``q`` first, then ``p``."""
    return tuple(p[q[d]] for d in range(len(q)))


def edge_involution(edge_count: int) -> tuple[int, ...]:
    return tuple(d ^ 1 for d in range(2 * edge_count))


@dataclass(frozen=True)
class MapSummary:
    V: int
    E: int
    F: int
    genus: int
    vertex_degrees: tuple[int, ...]
    face_degrees: tuple[int, ...]


@dataclass(frozen=True)
class CombinatorialMap:
    """
    A graph embedded in an oriented surface, given by its rotation system.

    ``sigma[d]`` is the next dart counterclockwise around the vertex of ``d``.
    Construction validates that ``sigma`` is a permutation of ``0 .. 2E-1``
    with ``E >= 1``.

    >>> loop = CombinatorialMap((1, 0))
    >>> loop.edge_count, vertices(loop), faces(loop)
    (1, [(0, 1)], [(0,), (1,)])
    """

    sigma: tuple[int, ...]

    def __post_init__(self):
        sigma = tuple(int(x) for x in self.sigma)
        n = len(sigma)
        if n == 0 or n % 2:
            raise ValueError(f"need a positive even number of darts, got {n}")
        if sorted(sigma) != list(range(n)):
            raise ValueError(f"sigma is not a permutation of 0..{n - 1}: {sigma}")
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], edge_count: int) -> CombinatorialMap:
        """Build from vertex cycles; darts missing from ``cycles`` become fixed points."""
        sigma = list(range(2 * edge_count))
        seen = set()
        for cyc in cycles:
            for i, d in enumerate(cyc):
                if d in seen:
                    raise ValueError(f"dart {d} appears twice")
                seen.add(d)
                sigma[d] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(sigma))

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @property
    def alpha(self) -> tuple[int, ...]:
        return edge_involution(self.edge_count)

    @property
    def phi(self) -> tuple[int, ...]:
        s = self.sigma
        return tuple(s[d ^ 1] for d in range(len(s)))

    def __repr__(self):
        cyc = "".join("(" + ",".join(map(str, c)) + ")" for c in vertices(self))
        return f"CombinatorialMap('{cyc}')"


def vertices(m: CombinatorialMap) -> list[Cycle]:
    return perm_cycles(m.sigma)


def edges(m: CombinatorialMap) -> list[Cycle]:
    return [(2 * i, 2 * i + 1) for i in range(m.edge_count)]


def faces(m: CombinatorialMap) -> list[Cycle]:
    return perm_cycles(m.phi)


def face_index(m: CombinatorialMap) -> list[int]:
    """``face_index(m)[d]`` is the index in ``faces(m)`` of the face of dart ``d``."""
    idx = [0] * m.num_darts
    for i, f in enumerate(faces(m)):
        for d in f:
            idx[d] = i
    return idx


def is_connected(m: CombinatorialMap) -> bool:
    return _connected(m.sigma)


def _connected(sigma: Sequence[int]) -> bool:
    n = len(sigma)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        d = stack.pop()
        for x in (sigma[d], d ^ 1):
            if not seen[x]:
                seen[x] = True
                count += 1
                stack.append(x)
    return count == n


def genus(m: CombinatorialMap) -> int:
    if not is_connected(m):
        raise ValueError("genus is only defined here for connected maps")
    chi = perm_num_cycles(m.sigma) - m.edge_count + perm_num_cycles(m.phi)
    return (2 - chi) // 2


def summary(m: CombinatorialMap) -> MapSummary:
    vs = vertices(m)
    fs = faces(m)
    return MapSummary(
        V=len(vs),
        E=m.edge_count,
        F=len(fs),
        genus=genus(m),
        vertex_degrees=tuple(sorted(len(c) for c in vs)),
        face_degrees=tuple(sorted(len(c) for c in fs)),
    )


def mirror(m: CombinatorialMap) -> CombinatorialMap:
    """The same graph on the oppositely oriented surface (rotations reversed)."""
    return CombinatorialMap(perm_invert(m.sigma))


def relabel(m: CombinatorialMap, pi: Sequence[int]) -> CombinatorialMap:
    """
    Conjugate ``m`` by the dart bijection ``pi`` (dart ``d`` becomes ``pi[d]``).

    ``pi`` must commute with the edge involution, i.e. send edges to edges.
    """
    n = m.num_darts
    if sorted(pi) != list(range(n)):
        raise ValueError("relabeling is not a permutation")
    if any(pi[d ^ 1] != pi[d] ^ 1 for d in range(n)):
        raise ValueError("relabeling does not respect the edge pairing")
    sigma = [0] * n
    for d in range(n):
        sigma[pi[d]] = pi[m.sigma[d]]
    return CombinatorialMap(tuple(sigma))


def random_edge_relabeling(edge_count: int, rng) -> tuple[int, ...]:
    """A uniform random bijection on darts that sends edges to edges."""
    order = list(range(edge_count))
    rng.shuffle(order)
    pi = [0] * (2 * edge_count)
    for i, j in enumerate(order):
        flip = rng.randrange(2)
        pi[2 * i] = 2 * j + flip
        pi[2 * i + 1] = 2 * j + (1 - flip)
    return tuple(pi)
