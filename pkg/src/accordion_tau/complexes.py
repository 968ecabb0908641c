"""Simplicial complexes with g-vector labeled vertices, and their comparisons.

A LabeledComplex stores vertices carrying integer g-vectors (one coordinate
per label in `coordinates`), plus the facet list.  The two complexes built
elsewhere in the package (accordion complexes of dissections, 2-term silting
complexes of gentle algebras) both land here, so the isomorphism checks,
dual graphs and structural audits are shared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import (
    LabelLengthMismatchError,
    NonPureComplexError,
    SizeLimitError,
)


@dataclass(frozen=True)
class ComplexVertex:
    id: int
    gvec: tuple[int, ...]
    label: str
    payload: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class LabeledComplex:
    coordinates: tuple[str, ...]
    vertices: tuple[ComplexVertex, ...]
    facets: tuple[tuple[int, ...], ...]

    def facet_sets(self) -> set[frozenset[int]]:
        return {frozenset(f) for f in self.facets}

    def gvec_of(self, vid: int) -> tuple[int, ...]:
        return self.vertices[vid].gvec

    def to_json(self) -> dict:
        verts = []
        for v in self.vertices:
            entry = {"id": v.id, "label": v.label, "g": list(v.gvec)}
            entry.update(v.payload)
            verts.append(entry)
        return {
            "coordinates": list(self.coordinates),
            "vertices": verts,
            "facets": [list(f) for f in self.facets],
        }


def make_complex(coordinates, vertices, facets) -> LabeledComplex:
    """Normalize and sanity-check a complex before freezing it."""
    coordinates = tuple(coordinates)
    vertices = tuple(vertices)
    for idx, v in enumerate(vertices):
        if v.id != idx:
            raise ValueError(f"vertex ids must equal positions, got {v.id} at {idx}")
        if len(v.gvec) != len(coordinates):
            raise LabelLengthMismatchError(
                f"vertex {v.id} has g-vector length {len(v.gvec)}, "
                f"expected {len(coordinates)}"
            )
    norm = sorted({tuple(sorted(f)) for f in facets})
    sets = [frozenset(f) for f in norm]
    for i, fi in enumerate(sets):
        for j, fj in enumerate(sets):
            if i != j and fi <= fj:
                raise ValueError(f"facet {norm[i]} is contained in facet {norm[j]}")
    covered = set().union(*sets) if sets else set()
    missing = set(range(len(vertices))) - covered
    if missing:
        raise ValueError(f"vertices {sorted(missing)} appear in no facet")
    return LabeledComplex(coordinates, vertices, tuple(norm))


def maximal_cliques(n: int, adj: list[set[int]]) -> list[tuple[int, ...]]:
    """All maximal cliques of a graph on 0..n-1 (Bron-Kerbosch with pivoting)."""
    cliques: list[tuple[int, ...]] = []

    def expand(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), -u))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(set(), set(range(n)), set())
    return sorted(cliques)


@dataclass(frozen=True)
class ExchangeGraph:
    nodes: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> list[int]:
        deg = [0] * len(self.nodes)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def to_json(self) -> dict:
        return {
            "nodes": [list(f) for f in self.nodes],
            "edges": [list(e) for e in self.edges],
        }


def dual_graph(cx: LabeledComplex) -> ExchangeGraph:
    """Facet adjacency graph: facets joined when they differ in one vertex."""
    sizes = {len(f) for f in cx.facets}
    if len(sizes) > 1:
        raise NonPureComplexError(f"facet sizes {sorted(sizes)} are not all equal")
    sets = [frozenset(f) for f in cx.facets]
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if len(sets[i] ^ sets[j]) == 2
    ]
    return ExchangeGraph(tuple(cx.facets), tuple(edges))


@dataclass(frozen=True)
class PseudomanifoldReport:
    pure: bool
    ridges_ok: bool
    connected: bool
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.pure and self.ridges_ok and self.connected


def is_pseudomanifold(cx: LabeledComplex) -> PseudomanifoldReport:
    """Purity, every ridge in exactly two facets, facet-adjacency connectivity."""
    failures: list[str] = []
    sizes = {len(f) for f in cx.facets}
    pure = len(sizes) <= 1
    if not pure:
        failures.append(f"facet sizes {sorted(sizes)} differ")
        return PseudomanifoldReport(False, False, False, tuple(failures))

    ridge_count: dict[frozenset[int], int] = {}
    for f in cx.facets:
        for v in f:
            ridge = frozenset(f) - {v}
            ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
    ridges_ok = all(c == 2 for c in ridge_count.values())
    if not ridges_ok:
        bad = [(sorted(r), c) for r, c in ridge_count.items() if c != 2]
        failures.append(f"ridges with facet count != 2: {sorted(bad)[:5]}")

    graph = dual_graph(cx)
    reach = {0} if graph.nodes else set()
    frontier = list(reach)
    neigh: dict[int, list[int]] = {i: [] for i in range(len(graph.nodes))}
    for i, j in graph.edges:
        neigh[i].append(j)
        neigh[j].append(i)
    while frontier:
        cur = frontier.pop()
        for nxt in neigh[cur]:
            if nxt not in reach:
                reach.add(nxt)
                frontier.append(nxt)
    connected = len(reach) == len(graph.nodes)
    if not connected:
        failures.append(
            f"facet adjacency graph has {len(graph.nodes) - len(reach)} unreachable facets"
        )
    return PseudomanifoldReport(pure, ridges_ok, connected, tuple(failures))


@dataclass
class IsoReport:
    passed: bool
    vertex_map: dict[int, int] | None
    failures: list[str]
    generic_found: bool | None = None

    def to_json(self) -> dict:
        out = {
            "status": "pass" if self.passed else "fail",
            "vertex_map": (
                {str(k): v for k, v in sorted(self.vertex_map.items())}
                if self.vertex_map is not None
                else None
            ),
            "failures": list(self.failures),
        }
        if self.generic_found is not None:
            out["isomorphic_ignoring_gvectors"] = self.generic_found
        return out


def iso_by_gvectors(
    c1: LabeledComplex,
    c2: LabeledComplex,
    coordinate_map: tuple[int, ...] | None = None,
    fallback: bool = True,
) -> IsoReport:
    """Match vertices by exact g-vector equality and compare facet families.

    coordinate_map, when given, selects and reorders coordinates of c2 before
    comparing (c2 g-vectors are restricted to those positions).  On failure,
    with fallback on, a label-blind isomorphism search distinguishes a wrong
    complex from a wrong labeling convention.
    """
    failures: list[str] = []
    g2 = {}
    coords2 = c2.coordinates
    if coordinate_map is not None:
        coords2 = tuple(c2.coordinates[t] for t in coordinate_map)
    if len(c1.coordinates) != len(coords2):
        raise LabelLengthMismatchError(
            f"coordinate counts differ: {len(c1.coordinates)} vs {len(coords2)}"
        )
    for v in c2.vertices:
        g = v.gvec
        if coordinate_map is not None:
            g = tuple(g[t] for t in coordinate_map)
        if g in g2:
            failures.append(f"duplicate g-vector {g} on the right")
        g2[g] = v.id

    vertex_map: dict[int, int] = {}
    for v in c1.vertices:
        if v.gvec in g2:
            vertex_map[v.id] = g2[v.gvec]
        else:
            failures.append(f"g-vector {v.gvec} of {v.label} missing on the right")
    if len(c1.vertices) != len(c2.vertices):
        failures.append(
            f"vertex counts differ: {len(c1.vertices)} vs {len(c2.vertices)}"
        )
    if not failures:
        mapped = {frozenset(vertex_map[v] for v in f) for f in c1.facets}
        if mapped != c2.facet_sets():
            only1 = sorted(tuple(sorted(f)) for f in mapped - c2.facet_sets())
            only2 = sorted(tuple(sorted(f)) for f in c2.facet_sets() - mapped)
            failures.append(
                f"facet families differ under the g-vector map: "
                f"{only1[:3]} vs {only2[:3]}"
            )
    if not failures:
        return IsoReport(True, vertex_map, [])

    report = IsoReport(False, None, failures)
    if fallback:
        found, _ = generic_iso(c1, c2)
        report.generic_found = found
        if found:
            report.failures.append(
                "complexes are abstractly isomorphic, so the g-vector labels disagree"
            )
    return report


def _facet_profile(cx: LabeledComplex) -> list[tuple[int, ...]]:
    prof = []
    for v in cx.vertices:
        sizes = sorted(len(f) for f in cx.facets if v.id in f)
        prof.append(tuple(sizes))
    return prof


def generic_iso(
    c1: LabeledComplex, c2: LabeledComplex, max_vertices: int = 64
) -> tuple[bool, dict[int, int] | None]:
    """Label-blind facet-preserving bijection search (backtracking)."""
    n = len(c1.vertices)
    if n != len(c2.vertices) or len(c1.facets) != len(c2.facets):
        return False, None
    if n > max_vertices:
        raise SizeLimitError(n, max_vertices)
    if sorted(map(len, c1.facets)) != sorted(map(len, c2.facets)):
        return False, None

    prof1, prof2 = _facet_profile(c1), _facet_profile(c2)

    def pair_counts(cx):
        counts = {}
        for f in cx.facets:
            for a in f:
                for b in f:
                    if a < b:
                        counts[(a, b)] = counts.get((a, b), 0) + 1
        return counts

    pc1, pc2 = pair_counts(c1), pair_counts(c2)

    candidates = [
        [u for u in range(n) if prof2[u] == prof1[v]] for v in range(n)
    ]
    if any(not c for c in candidates):
        return False, None
    order = sorted(range(n), key=lambda v: len(candidates[v]))

    assignment: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(pos: int) -> bool:
        if pos == n:
            mapped = {frozenset(assignment[v] for v in f) for f in c1.facets}
            return mapped == c2.facet_sets()
        v = order[pos]
        for u in candidates[v]:
            if u in used:
                continue
            ok = True
            for w, uw in assignment.items():
                key1 = (min(v, w), max(v, w))
                key2 = (min(u, uw), max(u, uw))
                if pc1.get(key1, 0) != pc2.get(key2, 0):
                    ok = False
                    break
            if ok:
                assignment[v] = u
                used.add(u)
                if backtrack(pos + 1):
                    return True
                del assignment[v]
                used.discard(u)
        return False

    if backtrack(0):
        return True, dict(assignment)
    return False, None


def induced_subcomplex(
    cx: LabeledComplex,
    vertex_ids,
    coordinate_indices: tuple[int, ...] | None = None,
) -> LabeledComplex:
    """Restriction to a vertex subset: maximal traces of facets on the subset.

    coordinate_indices optionally restricts the g-vectors (and coordinate
    names) to the given positions, for comparisons against complexes living
    on fewer coordinates.
    """
    keep = sorted(set(vertex_ids))
    renumber = {old: new for new, old in enumerate(keep)}

    coords = cx.coordinates
    if coordinate_indices is not None:
        coords = tuple(cx.coordinates[t] for t in coordinate_indices)

    verts = []
    for old in keep:
        v = cx.vertices[old]
        g = v.gvec
        if coordinate_indices is not None:
            g = tuple(g[t] for t in coordinate_indices)
        verts.append(ComplexVertex(renumber[old], g, v.label, dict(v.payload)))

    traces = {frozenset(renumber[v] for v in f if v in renumber) for f in cx.facets}
    maximal = [t for t in traces if not any(t < other for other in traces)]
    facets = sorted(tuple(sorted(t)) for t in maximal)
    return make_complex(coords, verts, facets)


def check_sign_coherence(cx: LabeledComplex) -> list[str]:
    """Within a facet, no coordinate may take both signs across g-vectors."""
    failures = []
    for f in cx.facets:
        for c in range(len(cx.coordinates)):
            vals = [cx.vertices[v].gvec[c] for v in f]
            if any(x > 0 for x in vals) and any(x < 0 for x in vals):
                failures.append(
                    f"facet {f}: coordinate {cx.coordinates[c]} takes both signs"
                )
    return failures


def check_facet_independence(cx: LabeledComplex) -> list[str]:
    """g-vectors within a facet must be linearly independent over the rationals."""
    failures = []
    for f in cx.facets:
        rows = [[Fraction(x) for x in cx.vertices[v].gvec] for v in f]
        if linalg.rank(rows) != len(f):
            failures.append(f"facet {f}: g-vectors are linearly dependent")
    return failures


def check_gvector_injectivity(cx: LabeledComplex) -> list[str]:
    seen: dict[tuple[int, ...], int] = {}
    failures = []
    for v in cx.vertices:
        if v.gvec in seen:
            failures.append(
                f"vertices {seen[v.gvec]} and {v.id} share g-vector {v.gvec}"
            )
        else:
            seen[v.gvec] = v.id
    return failures


def structural_failures(cx: LabeledComplex) -> list[str]:
    """Every structural audit in one list: label sanity comes from make_complex,
    here we add sign coherence, facet independence and g-vector injectivity."""
    return (
        check_sign_coherence(cx)
        + check_facet_independence(cx)
        + check_gvector_injectivity(cx)
    )


def exchange_graph_dot(graph: ExchangeGraph, cx: LabeledComplex, name: str = "exchange") -> str:
    """DOT rendering of the facet adjacency graph, facets labeled by vertices."""
    lines = [f"graph {name} {{", "  node [shape=box];"]
    for idx, f in enumerate(graph.nodes):
        label = ", ".join(cx.vertices[v].label for v in f)
        lines.append(f'  f{idx} [label="{label}"];')
    for i, j in graph.edges:
        lines.append(f"  f{i} -- f{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_text(cx: LabeledComplex) -> str:
    """Plain text table: one vertex per line, then the facet list."""
    lines = [f"coordinates: {', '.join(cx.coordinates)}"]
    width = max((len(v.label) for v in cx.vertices), default=0)
    for v in cx.vertices:
        g = "(" + ", ".join(f"{x:+d}" for x in v.gvec) + ")"
        lines.append(f"  [{v.id:>2}] {v.label:<{width}}  g = {g}")
    lines.append(f"facets ({len(cx.facets)}):")
    for f in cx.facets:
        lines.append("  {" + ", ".join(cx.vertices[v].label for v in f) + "}")
    return "\n".join(lines) + "\n"
