"""Gentle quivers, their path algebra bases, and vertex-subset shortcuts.

Quivers come from two sources: built from a dissection (one vertex per
diagonal, arrows between consecutive diagonal sides of a cell, relations for
consecutive triples) or loaded from JSON.  The path algebra uses left to
right composition: the product p * q means "walk p, then walk q", so paths
from u to v span the subspace e_u A e_v.  Bases only exist for finite
dimensional algebras; a relation-free cycle raises instead.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import EmptySubsetError, InfiniteDimensionalError, InputError
from .geometry import Dissection, cells

Vertex = object


def vertex_label(v) -> str:
    if isinstance(v, tuple):
        return "-".join(str(x) for x in v)
    return str(v)


@dataclass(frozen=True, order=True)
class Arrow:
    name: str
    src: tuple | int | str
    tgt: tuple | int | str


@dataclass(frozen=True)
class GentleQuiver:
    vertices: tuple
    arrows: tuple[Arrow, ...]
    relations: frozenset[tuple[str, str]]

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise InputError("duplicate quiver vertices")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InputError("duplicate arrow names")
        by_name = self.arrow_by_name
        for a in self.arrows:
            if a.src not in vset or a.tgt not in vset:
                raise InputError(f"arrow {a.name} has endpoint outside the vertex set")
        for first, second in self.relations:
            if first not in by_name or second not in by_name:
                raise InputError(f"relation ({first}, {second}) names a missing arrow")
            if by_name[first].tgt != by_name[second].src:
                raise InputError(f"relation ({first}, {second}) is not a composable pair")

    @property
    def arrow_by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def vertex_position(self, v) -> int:
        return self.vertices.index(v)

    def to_json(self) -> dict:
        return {
            "vertices": [vertex_label(v) for v in self.vertices],
            "arrows": [
                {"id": a.name, "src": vertex_label(a.src), "tgt": vertex_label(a.tgt)}
                for a in self.arrows
            ],
            "relations": sorted([a, b] for a, b in self.relations),
        }


def check_gentle(q: GentleQuiver) -> list[str]:
    """Violations of the gentle conditions; empty list means gentle."""
    fails: list[str] = []
    out_ct = Counter(a.src for a in q.arrows)
    in_ct = Counter(a.tgt for a in q.arrows)
    for v in q.vertices:
        if out_ct[v] > 2:
            fails.append(f"vertex {vertex_label(v)} has {out_ct[v]} outgoing arrows")
        if in_ct[v] > 2:
            fails.append(f"vertex {vertex_label(v)} has {in_ct[v]} incoming arrows")
    for a in q.arrows:
        succ = [b for b in q.arrows if b.src == a.tgt]
        for bound, group in (
            ("relation", [b for b in succ if (a.name, b.name) in q.relations]),
            ("composable", [b for b in succ if (a.name, b.name) not in q.relations]),
        ):
            if len(group) > 1:
                fails.append(
                    f"arrow {a.name} has {len(group)} {bound} successors "
                    f"({[b.name for b in group]})"
                )
        pred = [b for b in q.arrows if b.tgt == a.src]
        for bound, group in (
            ("relation", [b for b in pred if (b.name, a.name) in q.relations]),
            ("composable", [b for b in pred if (b.name, a.name) not in q.relations]),
        ):
            if len(group) > 1:
                fails.append(
                    f"arrow {a.name} has {len(group)} {bound} predecessors "
                    f"({[b.name for b in group]})"
                )
    return fails


def ensure_gentle(q: GentleQuiver) -> GentleQuiver:
    fails = check_gentle(q)
    if fails:
        raise InputError("quiver is not gentle: " + "; ".join(fails))
    return q


def quiver_of_dissection(d: Dissection) -> GentleQuiver:
    """One vertex per diagonal; cells contribute arrows and relations.

    Walking the sides of a cell counterclockwise, two consecutive diagonal
    sides give an arrow (earlier to later) and three consecutive diagonal
    sides additionally give a relation between the two arrows.
    """
    diagonals = set(d.diagonals)
    vertices = tuple(c.vertex_pair() for c in d.diagonals)
    arrows: list[Arrow] = []
    name_of: dict[tuple, str] = {}
    relations: set[tuple[str, str]] = set()
    for cell in cells(d):
        sides = cell.sides
        k = len(sides)
        for t in range(k):
            s, s2 = sides[t], sides[(t + 1) % k]
            if s in diagonals and s2 in diagonals:
                name = f"a{len(arrows)}"
                arrows.append(Arrow(name, s.vertex_pair(), s2.vertex_pair()))
                name_of[(s.vertex_pair(), s2.vertex_pair())] = name
        for t in range(k):
            s, s2, s3 = sides[t], sides[(t + 1) % k], sides[(t + 2) % k]
            if k > 2 and s in diagonals and s2 in diagonals and s3 in diagonals:
                relations.add(
                    (
                        name_of[(s.vertex_pair(), s2.vertex_pair())],
                        name_of[(s2.vertex_pair(), s3.vertex_pair())],
                    )
                )
    return GentleQuiver(vertices, tuple(arrows), frozenset(relations))


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence; empty means the lazy path at source."""

    source: tuple | int | str
    arrows: tuple[str, ...]

    def display(self) -> str:
        if not self.arrows:
            return f"e_{vertex_label(self.source)}"
        return ".".join(self.arrows)


@dataclass
class AlgebraBasis:
    """All relation-free paths of a gentle quiver, with the product table.

    Indices into `paths` are the working currency everywhere downstream.
    mult(i, j) returns the index of the concatenated path or None when the
    product is zero (relation hit or endpoints mismatch).
    """

    quiver: GentleQuiver
    paths: tuple[Path, ...]
    index: dict[Path, int] = field(repr=False)
    source: tuple = field(repr=False)
    target: tuple = field(repr=False)
    lazy: dict = field(repr=False)
    arrow_path: dict[str, int] = field(repr=False)
    by_ends: dict = field(repr=False, default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.paths)

    def between(self, u, v) -> list[int]:
        """Indices of paths running from u to v, ascending."""
        return self.by_ends.get((u, v), [])

    def mult(self, i: int, j: int) -> int | None:
        if self.target[i] != self.source[j]:
            return None
        p, q = self.paths[i], self.paths[j]
        if not p.arrows:
            return j
        if not q.arrows:
            return i
        if (p.arrows[-1], q.arrows[0]) in self.quiver.relations:
            return None
        return self.index[Path(p.source, p.arrows + q.arrows)]

    def to_json(self) -> dict:
        return {
            "vertices": [vertex_label(v) for v in self.quiver.vertices],
            "dimension": self.dimension,
            "paths": [
                {
                    "display": p.display(),
                    "src": vertex_label(self.source[i]),
                    "tgt": vertex_label(self.target[i]),
                }
                for i, p in enumerate(self.paths)
            ],
        }


def algebra_basis(q: GentleQuiver) -> AlgebraBasis:
    """Enumerate every relation-free path.  Finite dimension is enforced:
    any relation-free path longer than twice the arrow count certifies a
    relation-free cycle, so that raises InfiniteDimensionalError."""
    ensure_gentle(q)
    by_name = q.arrow_by_name
    out_arrows: dict = {v: [] for v in q.vertices}
    for a in q.arrows:
        out_arrows[a.src].append(a)

    limit = 2 * len(q.arrows)
    paths: list[Path] = [Path(v, ()) for v in q.vertices]
    frontier = list(paths)
    while frontier:
        nxt: list[Path] = []
        for p in frontier:
            tail = by_name[p.arrows[-1]].tgt if p.arrows else p.source
            for a in out_arrows[tail]:
                if p.arrows and (p.arrows[-1], a.name) in q.relations:
                    continue
                grown = Path(p.source, p.arrows + (a.name,))
                if len(grown.arrows) > limit:
                    raise InfiniteDimensionalError(grown.display())
                nxt.append(grown)
        paths.extend(nxt)
        frontier = nxt

    order = {v: k for k, v in enumerate(q.vertices)}
    paths.sort(key=lambda p: (len(p.arrows), order[p.source], p.arrows))
    index = {p: i for i, p in enumerate(paths)}
    target = tuple(
        by_name[p.arrows[-1]].tgt if p.arrows else p.source for p in paths
    )
    source = tuple(p.source for p in paths)
    lazy = {p.source: i for i, p in enumerate(paths) if not p.arrows}
    arrow_path = {p.arrows[0]: i for i, p in enumerate(paths) if len(p.arrows) == 1}
    by_ends: dict = {}
    for i in range(len(paths)):
        by_ends.setdefault((source[i], target[i]), []).append(i)
    return AlgebraBasis(q, tuple(paths), index, source, target, lazy, arrow_path, by_ends)


def shortcut_quiver(q: GentleQuiver, J) -> GentleQuiver:
    """Quiver of the subalgebra spanned by paths between vertices of J.

    Arrows are the relation-free paths with both endpoints in J and no
    interior visit to J; a pair of those composes to zero exactly when the
    junction hits a relation, and those pairs are the new relations.
    """
    jset = set(J)
    if not jset:
        raise EmptySubsetError()
    missing = jset - set(q.vertices)
    if missing:
        raise InputError(f"subset contains unknown vertices {sorted(map(vertex_label, missing))}")
    basis = algebra_basis(q)
    by_name = q.arrow_by_name

    def interior(p: Path) -> list:
        stops = []
        at = p.source
        for name in p.arrows[:-1]:
            at = by_name[name].tgt
            stops.append(at)
        return stops

    vertices = tuple(v for v in q.vertices if v in jset)
    shortcut_paths = [
        i
        for i, p in enumerate(basis.paths)
        if p.arrows
        and basis.source[i] in jset
        and basis.target[i] in jset
        and not any(v in jset for v in interior(p))
    ]
    arrows = tuple(
        Arrow(f"s{k}", basis.source[i], basis.target[i])
        for k, i in enumerate(shortcut_paths)
    )
    relations = set()
    for ka, ia in enumerate(shortcut_paths):
        for kb, ib in enumerate(shortcut_paths):
            if basis.target[ia] == basis.source[ib] and basis.mult(ia, ib) is None:
                relations.add((f"s{ka}", f"s{kb}"))
    return ensure_gentle(GentleQuiver(vertices, arrows, frozenset(relations)))


@dataclass
class SubalgebraReport:
    passed: bool
    failures: list[str]
    dimension: int

    def to_json(self) -> dict:
        return {
            "status": "pass" if self.passed else "fail",
            "failures": list(self.failures),
            "dimension": self.dimension,
        }


def idempotent_subalgebra_check(q: GentleQuiver, J) -> SubalgebraReport:
    """Does the shortcut quiver really present the subalgebra on J?

    Splits every path of the big algebra running between J vertices at its
    interior J visits; the pieces must spell out a basis path of the
    shortcut algebra, bijectively, with matching multiplication tables.
    """
    jset = set(J)
    basis = algebra_basis(q)
    sq = shortcut_quiver(q, J)
    sbasis = algebra_basis(sq)
    by_name = q.arrow_by_name
    failures: list[str] = []

    # shortcut arrow names were assigned in basis order, rebuild that map
    shortcut_by_path: dict[int, str] = {}
    k = 0
    for i, p in enumerate(basis.paths):
        if not p.arrows or basis.source[i] not in jset or basis.target[i] not in jset:
            continue
        at, inner = p.source, []
        for name in p.arrows[:-1]:
            at = by_name[name].tgt
            inner.append(at)
        if not any(v in jset for v in inner):
            shortcut_by_path[i] = f"s{k}"
            k += 1

    def fold(i: int) -> Path | None:
        """Rewrite a J-to-J path of the big algebra as a shortcut path."""
        p = basis.paths[i]
        if not p.arrows:
            return Path(p.source, ())
        pieces = []
        seg_start = 0
        at = p.source
        walk = [p.source]
        for name in p.arrows:
            at = by_name[name].tgt
            walk.append(at)
        for pos in range(1, len(walk)):
            if walk[pos] in jset:
                seg = Path(walk[seg_start], p.arrows[seg_start:pos])
                piece_idx = basis.index[seg]
                if piece_idx not in shortcut_by_path:
                    return None
                pieces.append(shortcut_by_path[piece_idx])
                seg_start = pos
        return Path(p.source, tuple(pieces))

    jj_paths = [
        i
        for i in range(basis.dimension)
        if basis.source[i] in jset and basis.target[i] in jset
    ]
    folded: dict[int, int] = {}
    for i in jj_paths:
        image = fold(i)
        if image is None or image not in sbasis.index:
            failures.append(
                f"path {basis.paths[i].display()} does not fold into the shortcut basis"
            )
            continue
        folded[i] = sbasis.index[image]

    if len(set(folded.values())) != len(folded):
        failures.append("folding is not injective")
    if set(folded.values()) != set(range(sbasis.dimension)):
        failures.append(
            f"folding misses shortcut paths: image {len(set(folded.values()))} "
            f"of {sbasis.dimension}"
        )

    if not failures:
        for i in jj_paths:
            for j in jj_paths:
                big = basis.mult(i, j)
                small = sbasis.mult(folded[i], folded[j])
                if big is None:
                    if small is not None:
                        failures.append(
                            f"{basis.paths[i].display()} * {basis.paths[j].display()} "
                            f"is zero upstairs but not downstairs"
                        )
                elif small is None or folded.get(big) != small:
                    failures.append(
                        f"{basis.paths[i].display()} * {basis.paths[j].display()} "
                        f"disagrees with the shortcut product"
                    )
    return SubalgebraReport(not failures, failures, len(jj_paths))


def quiver_from_json(data: dict) -> GentleQuiver:
    try:
        vertices = tuple(
            tuple(v) if isinstance(v, list) else v for v in data["vertices"]
        )
        arrows = tuple(
            Arrow(
                a["id"],
                tuple(a["src"]) if isinstance(a["src"], list) else a["src"],
                tuple(a["tgt"]) if isinstance(a["tgt"], list) else a["tgt"],
            )
            for a in data["arrows"]
        )
        relations = frozenset((r[0], r[1]) for r in data.get("relations", []))
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"malformed quiver JSON: {exc}") from exc
    return GentleQuiver(vertices, arrows, relations)


def quivers_match(q1: GentleQuiver, q2: GentleQuiver) -> list[str]:
    """Equality up to arrow renaming (no parallel arrows assumed)."""
    failures = []
    if list(q1.vertices) != list(q2.vertices):
        failures.append(f"vertex lists differ: {q1.vertices} vs {q2.vertices}")
    ends1 = Counter((a.src, a.tgt) for a in q1.arrows)
    ends2 = Counter((a.src, a.tgt) for a in q2.arrows)
    if ends1 != ends2:
        failures.append(f"arrow endpoint multisets differ: {ends1} vs {ends2}")
    by1, by2 = q1.arrow_by_name, q2.arrow_by_name

    def rel_ends(q, by):
        return Counter(
            ((by[a].src, by[a].tgt), (by[b].src, by[b].tgt)) for a, b in q.relations
        )

    if rel_ends(q1, by1) != rel_ends(q2, by2):
        failures.append("relation endpoint multisets differ")
    return failures


def quiver_dot(q: GentleQuiver, name: str = "quiver") -> str:
    lines = [f"digraph {name} {{"]
    for v in q.vertices:
        lines.append(f'  "{vertex_label(v)}";')
    for a in q.arrows:
        lines.append(
            f'  "{vertex_label(a.src)}" -> "{vertex_label(a.tgt)}" [label="{a.name}"];'
        )
    for first, second in sorted(q.relations):
        lines.append(f"  // relation: {first}.{second} = 0")
    lines.append("}")
    return "\n".join(lines) + "\n"
