"""Convex polygon combinatorics on an alternately colored point cycle.

2m boundary points sit counterclockwise on a circle and alternate colors:
white vertex k is point 2k, black vertex k is point 2k+1, indices mod 2m.
White chords (boundary edges and diagonals) carve the polygon into cells;
black diagonals are the probes whose crossing patterns the rest of the
package measures.  All incidence tests are integer arithmetic on cyclic
distances, no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AdjacentVerticesError,
    CrossingPairError,
    DuplicateDiagonalError,
    InputError,
)

WHITE = "white"
BLACK = "black"


@dataclass(frozen=True, order=True)
class PointCycle:
    """The cyclic arena: m white and m black points interleaved."""

    m: int

    def __post_init__(self):
        if self.m < 3:
            raise InputError(f"need at least 3 white vertices, got m={self.m}")

    @property
    def n_points(self) -> int:
        return 2 * self.m

    def white(self, k: int) -> int:
        return (2 * k) % self.n_points

    def black(self, k: int) -> int:
        return (2 * k + 1) % self.n_points

    def dist(self, a: int, b: int) -> int:
        """Counterclockwise steps from point a to point b."""
        return (b - a) % self.n_points


@dataclass(frozen=True, order=True)
class Chord:
    """Unordered chord between two points, stored with a < b."""

    a: int
    b: int
    color: str

    def endpoints(self) -> tuple[int, int]:
        return (self.a, self.b)

    def vertex_pair(self) -> tuple[int, int]:
        """Same-color vertex labels of the endpoints."""
        if self.color == WHITE:
            return (self.a // 2, self.b // 2)
        return ((self.a - 1) // 2, (self.b - 1) // 2)

    def label(self) -> str:
        i, j = self.vertex_pair()
        if self.color == WHITE:
            return f"{i}-{j}"
        return f"b{i}-b{j}"

    def other(self, p: int) -> int:
        if p == self.a:
            return self.b
        if p == self.b:
            return self.a
        raise ValueError(f"{p} is not an endpoint of {self}")


def _chord(p: int, q: int, color: str) -> Chord:
    return Chord(min(p, q), max(p, q), color)


def white_chord(cycle: PointCycle, i: int, j: int) -> Chord:
    return _chord(cycle.white(i), cycle.white(j), WHITE)


def black_chord(cycle: PointCycle, i: int, j: int) -> Chord:
    return _chord(cycle.black(i), cycle.black(j), BLACK)


def is_boundary(cycle: PointCycle, chord: Chord) -> bool:
    return cycle.dist(chord.a, chord.b) in (2, cycle.n_points - 2)


def boundary_edges(cycle: PointCycle) -> list[Chord]:
    return [white_chord(cycle, k, (k + 1) % cycle.m) for k in range(cycle.m)]


def in_open_arc(cycle: PointCycle, start: int, end: int, x: int) -> bool:
    """Is point x strictly inside the ccw arc from start to end?"""
    return 0 < cycle.dist(start, x) < cycle.dist(start, end)


def left_of(cycle: PointCycle, p: int, q: int, x: int) -> bool:
    """Is point x strictly left of the chord directed from p to q?

    Left means inside the open ccw arc from q back around to p.  Endpoints
    themselves are on neither side.
    """
    return 0 < cycle.dist(q, x) < cycle.dist(q, p)


def crosses(cycle: PointCycle, c1: Chord, c2: Chord) -> bool:
    """Do two chords cross in the open disk?  Shared endpoints do not count."""
    if set(c1.endpoints()) & set(c2.endpoints()):
        return False
    inside = in_open_arc(cycle, c1.a, c1.b, c2.a) + in_open_arc(cycle, c1.a, c1.b, c2.b)
    return inside == 1


def _adjacent_labels(m: int, i: int, j: int) -> bool:
    return (i - j) % m in (0, 1, m - 1)


@dataclass(frozen=True)
class Dissection:
    """A set of pairwise noncrossing white diagonals, kept in input order."""

    cycle: PointCycle
    diagonals: tuple[Chord, ...]

    def white_pairs(self) -> list[tuple[int, int]]:
        return [d.vertex_pair() for d in self.diagonals]

    def contains(self, other: "Dissection") -> bool:
        return set(other.diagonals) <= set(self.diagonals)

    def to_json(self) -> dict:
        return {"m": self.cycle.m, "diagonals": [list(p) for p in self.white_pairs()]}


def validate_dissection(m: int, pairs) -> Dissection:
    """Build a Dissection from white vertex label pairs, or raise an InputError."""
    cycle = PointCycle(m)
    seen: set[tuple[int, int]] = set()
    chords: list[Chord] = []
    for raw in pairs:
        i, j = raw
        if not (isinstance(i, int) and isinstance(j, int)):
            raise InputError(f"vertex labels must be integers, got {raw!r}")
        i %= m
        j %= m
        if _adjacent_labels(m, i, j):
            raise AdjacentVerticesError((i, j))
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateDiagonalError(key)
        seen.add(key)
        chords.append(white_chord(cycle, i, j))
    for idx, c1 in enumerate(chords):
        for c2 in chords[idx + 1 :]:
            if crosses(cycle, c1, c2):
                raise CrossingPairError(c1.vertex_pair(), c2.vertex_pair())
    return Dissection(cycle, tuple(chords))


@dataclass(frozen=True)
class Cell:
    """One face of the dissected polygon.

    vertices: white labels counterclockwise, rotated to start at the smallest.
    sides: chords along the same traversal, sides[i] joining vertices[i] to
    vertices[i+1] (cyclically).
    """

    vertices: tuple[int, ...]
    sides: tuple[Chord, ...]


def cells(d: Dissection) -> list[Cell]:
    """Faces of the dissection via rotation-system traversal.

    At each white vertex the neighbors are sorted counterclockwise (which on
    a circle is by cyclic distance).  Following edge u->v, the face continues
    to the predecessor of u in the rotation at v; interior faces are the
    traversals whose white-label steps sum to exactly m.
    """
    m = d.cycle.m
    edges: set[tuple[int, int]] = set()
    for k in range(m):
        edges.add((k, (k + 1) % m))
    for i, j in d.white_pairs():
        edges.add((min(i, j), max(i, j)))

    neighbors: dict[int, list[int]] = {v: [] for v in range(m)}
    for i, j in edges:
        neighbors[i].append(j)
        neighbors[j].append(i)
    for v in range(m):
        neighbors[v].sort(key=lambda u: (u - v) % m)

    chord_of = {}
    for i, j in edges:
        chord_of[(i, j)] = chord_of[(j, i)] = white_chord(d.cycle, i, j)

    out: list[Cell] = []
    visited: set[tuple[int, int]] = set()
    for i, j in sorted(edges):
        for u, v in ((i, j), (j, i)):
            if (u, v) in visited:
                continue
            walk = [(u, v)]
            visited.add((u, v))
            while True:
                pu, pv = walk[-1]
                ring = neighbors[pv]
                w = ring[(ring.index(pu) - 1) % len(ring)]
                if (pv, w) == walk[0]:
                    break
                walk.append((pv, w))
                visited.add((pv, w))
            verts = [e[0] for e in walk]
            if sum((verts[(t + 1) % len(verts)] - verts[t]) % m for t in range(len(verts))) != m:
                continue  # outer face
            start = verts.index(min(verts))
            verts = verts[start:] + verts[:start]
            sides = tuple(
                chord_of[(verts[t], verts[(t + 1) % len(verts)])] for t in range(len(verts))
            )
            out.append(Cell(tuple(verts), sides))
    out.sort(key=lambda c: c.vertices)
    return out


def all_white_diagonal_pairs(m: int) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(m)
        for j in range(i + 2, m)
        if not (i == 0 and j == m - 1)
    ]


def all_black_diagonal_chords(cycle: PointCycle) -> list[Chord]:
    return [black_chord(cycle, i, j) for i, j in all_white_diagonal_pairs(cycle.m)]


def all_dissections(m: int, include_empty: bool = False) -> list[Dissection]:
    """Every dissection of the m-gon, in lexicographic order of diagonal lists."""
    cycle = PointCycle(m)
    pairs = all_white_diagonal_pairs(m)
    chords = [white_chord(cycle, i, j) for i, j in pairs]
    n = len(chords)
    compatible = [[not crosses(cycle, chords[x], chords[y]) for y in range(n)] for x in range(n)]

    out: list[Dissection] = []
    if include_empty:
        out.append(Dissection(cycle, ()))

    def grow(chosen: list[int], frontier: int):
        for nxt in range(frontier, n):
            if all(compatible[prev][nxt] for prev in chosen):
                chosen.append(nxt)
                out.append(Dissection(cycle, tuple(chords[t] for t in chosen)))
                grow(chosen, nxt + 1)
                chosen.pop()

    grow([], 0)
    return out
