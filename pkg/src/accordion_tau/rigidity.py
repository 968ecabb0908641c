"""String modules, minimal two-term presentations, and the silting complex.

Modules are right modules presented as representations of the quiver: a
vector space per vertex and a matrix per arrow (an arrow u -> v acts by a
matrix of shape dim_v x dim_u, and a relation (a, b) forces M_b @ M_a = 0).
The indecomposable rigid objects we need are presentations of string
modules together with shifted projectives; compatibility of two objects is
vanishing of the hom-shift pairing in both directions, computed exactly
over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import ComplexVertex, LabeledComplex, make_complex, maximal_cliques
from .complexes import induced_subcomplex, iso_by_gvectors, IsoReport
from .errors import (
    AlgebraMismatchError,
    BandDetectedError,
    NonPureComplexError,
)
from .linalg import RowSpace, mat_vec, nullspace, solve_columns
from .quiver import AlgebraBasis, GentleQuiver, Path, algebra_basis
from .quiver import shortcut_quiver, vertex_label


# ---------------------------------------------------------------------------
# strings


@dataclass(frozen=True)
class StringWord:
    """A reduced walk in the quiver: letters are (arrow name, forward?)."""

    source: tuple | int | str
    letters: tuple[tuple[str, bool], ...]

    def display(self) -> str:
        if not self.letters:
            return f"e_{vertex_label(self.source)}"
        return ".".join(name if fwd else name + "'" for name, fwd in self.letters)


def _letter_end(q: GentleQuiver, letter: tuple[str, bool]):
    a = q.arrow_by_name[letter[0]]
    return a.tgt if letter[1] else a.src


def _letter_start(q: GentleQuiver, letter: tuple[str, bool]):
    a = q.arrow_by_name[letter[0]]
    return a.src if letter[1] else a.tgt


def walk_vertices(q: GentleQuiver, w: StringWord) -> list:
    verts = [w.source]
    for letter in w.letters:
        verts.append(_letter_end(q, letter))
    return verts


def _valid_pair(q: GentleQuiver, l1: tuple[str, bool], l2: tuple[str, bool]) -> bool:
    (a1, d1), (a2, d2) = l1, l2
    if a1 == a2 and d1 != d2:
        return False  # immediate backtrack
    if d1 and d2 and (a1, a2) in q.relations:
        return False
    if not d1 and not d2 and (a2, a1) in q.relations:
        return False
    return True


def inverse_word(q: GentleQuiver, w: StringWord) -> StringWord:
    if not w.letters:
        return w
    letters = tuple((name, not fwd) for name, fwd in reversed(w.letters))
    return StringWord(_letter_end(q, w.letters[-1]), letters)


def enumerate_strings(q: GentleQuiver) -> list[StringWord]:
    """All strings up to formal inverse, shortest first.

    A valid walk longer than twice the arrow count repeats a directed letter,
    which closes up into a relation-free cyclic walk; that is a band, and
    the algebra then has infinitely many strings, so we bail out.
    """
    order = {v: k for k, v in enumerate(q.vertices)}
    by_name = q.arrow_by_name
    limit = 2 * len(q.arrows)

    def key(w: StringWord):
        return (
            len(w.letters),
            tuple((name, 0 if fwd else 1) for name, fwd in w.letters),
            order[w.source],
        )

    starts: dict = {v: [] for v in q.vertices}
    for a in q.arrows:
        starts[a.src].append((a.name, True))
        starts[a.tgt].append((a.name, False))

    chosen: dict = {}
    stack = [StringWord(v, ()) for v in reversed(q.vertices)]
    while stack:
        w = stack.pop()
        canon = min(key(w), key(inverse_word(q, w)))
        if canon not in chosen:
            chosen[canon] = w
        end = walk_vertices(q, w)[-1] if w.letters else w.source
        for letter in starts[end]:
            if w.letters and not _valid_pair(q, w.letters[-1], letter):
                continue
            grown = StringWord(w.source, w.letters + (letter,))
            if len(grown.letters) > limit:
                raise BandDetectedError(grown.display())
            stack.append(grown)
    return [chosen[c] for c in sorted(chosen)]


# ---------------------------------------------------------------------------
# representations


@dataclass
class Representation:
    quiver: GentleQuiver
    dims: dict
    mats: dict[str, list[list[Fraction]]]

    def dim_at(self, v) -> int:
        return self.dims.get(v, 0)


def string_module(q: GentleQuiver, w: StringWord) -> Representation:
    """Basis vector per walk position, arrows act along the letters."""
    verts = walk_vertices(q, w)
    local: list[int] = []
    dims: dict = {v: 0 for v in q.vertices}
    for v in verts:
        local.append(dims[v])
        dims[v] += 1
    by_name = q.arrow_by_name
    mats = {
        a.name: [[Fraction(0)] * dims[a.src] for _ in range(dims[a.tgt])]
        for a in q.arrows
    }
    for t, (name, fwd) in enumerate(w.letters):
        if fwd:
            mats[name][local[t + 1]][local[t]] = Fraction(1)
        else:
            mats[name][local[t]][local[t + 1]] = Fraction(1)
    return Representation(q, dims, mats)


def proj_representation(basis: AlgebraBasis, v) -> Representation:
    """The module of paths leaving v (used only in tests and audits)."""
    q = basis.quiver
    at: dict = {u: [] for u in q.vertices}
    for i in range(basis.dimension):
        if basis.source[i] == v:
            at[basis.target[i]].append(i)
    dims = {u: len(at[u]) for u in q.vertices}
    mats = {}
    for a in q.arrows:
        mat = [[Fraction(0)] * dims[a.src] for _ in range(dims[a.tgt])]
        for col, p in enumerate(at[a.src]):
            prod = basis.mult(p, basis.arrow_path[a.name])
            if prod is not None:
                mat[at[a.tgt].index(prod)][col] = Fraction(1)
        mats[a.name] = mat
    return Representation(q, dims, mats)


# ---------------------------------------------------------------------------
# two-term complexes of projectives


@dataclass
class TwoTermComplex:
    """P1 -> P0 with entries written as radical path combinations.

    p1 and p0 list the summand vertices; diff[r][c] maps a path index (a
    path from p0[r] to p1[c]) to its coefficient.
    """

    basis: AlgebraBasis
    p1: tuple
    p0: tuple
    diff: list[list[dict[int, Fraction]]]

    @property
    def gvec(self) -> tuple[int, ...]:
        g = {v: 0 for v in self.basis.quiver.vertices}
        for v in self.p0:
            g[v] += 1
        for v in self.p1:
            g[v] -= 1
        return tuple(g[v] for v in self.basis.quiver.vertices)


def shifted_projective(basis: AlgebraBasis, v) -> TwoTermComplex:
    return TwoTermComplex(basis, (v,), (), [])


def projective_complex(basis: AlgebraBasis, v) -> TwoTermComplex:
    return TwoTermComplex(basis, (), (v,), [[]])


def _act(rep: Representation, arrows: tuple[str, ...], x: list[Fraction]) -> list[Fraction]:
    for name in arrows:
        x = mat_vec(rep.mats[name], x)
    return x


def _top_lifts(rep: Representation) -> list[tuple]:
    """Standard basis vectors completing the radical, one (vertex, index) each."""
    lifts = []
    for v in rep.quiver.vertices:
        dim = rep.dim_at(v)
        if dim == 0:
            continue
        space = RowSpace(dim)
        for a in rep.quiver.arrows:
            if a.tgt != v:
                continue
            for col in range(rep.dim_at(a.src)):
                space.add([rep.mats[a.name][r][col] for r in range(dim)])
        for t in range(dim):
            e = [Fraction(0)] * dim
            e[t] = Fraction(1)
            if space.add(e):
                lifts.append((v, t))
    return lifts


def min_presentation(basis: AlgebraBasis, rep: Representation) -> TwoTermComplex:
    """Minimal projective presentation P1 -> P0 of a representation.

    P0 covers the top of the module, the kernel of the cover is computed
    vertexwise as honest linear algebra, and P1 covers that kernel; the
    differential collects, per (P0 summand, P1 summand), the paths with
    their coefficients.
    """
    q = basis.quiver

    summands0 = _top_lifts(rep)  # (vertex, standard basis index in rep)
    # P0 basis elements at a vertex u: pairs (summand position, path index)
    p0_at: dict = {u: [] for u in q.vertices}
    value_at: dict = {u: [] for u in q.vertices}  # image vectors in rep
    for s, (v, t) in enumerate(summands0):
        e = [Fraction(0)] * rep.dim_at(v)
        e[t] = Fraction(1)
        for i in range(basis.dimension):
            if basis.source[i] != v:
                continue
            u = basis.target[i]
            p0_at[u].append((s, i))
            value_at[u].append(_act(rep, basis.paths[i].arrows, e))

    for u in q.vertices:
        cover = RowSpace(rep.dim_at(u))
        for vec in value_at[u]:
            cover.add(vec)
        assert cover.rank == rep.dim_at(u), "projective cover must be surjective"

    kernel_at: dict = {}
    for u in q.vertices:
        cols = value_at[u]
        if not cols:
            kernel_at[u] = []
            continue
        rows = [[col[r] for col in cols] for r in range(rep.dim_at(u))]
        kernel_at[u] = nullspace(rows, len(cols))

    # the kernel as a representation in its own coordinates
    kq_dims = {u: len(kernel_at[u]) for u in q.vertices}
    kq_mats = {}
    pos_at = {u: {pair: k for k, pair in enumerate(p0_at[u])} for u in q.vertices}
    for a in q.arrows:
        u, wv = a.src, a.tgt
        mat = [[Fraction(0)] * kq_dims[u] for _ in range(kq_dims[wv])]
        for col, kvec in enumerate(kernel_at[u]):
            image = [Fraction(0)] * len(p0_at[wv])
            for k, (s, i) in enumerate(p0_at[u]):
                if kvec[k] == 0:
                    continue
                prod = basis.mult(i, basis.arrow_path[a.name])
                if prod is not None:
                    image[pos_at[wv][(s, prod)]] += kvec[k]
            coeff = solve_columns(kernel_at[wv], image)
            assert coeff is not None, "kernel must be closed under the arrow action"
            for r in range(kq_dims[wv]):
                mat[r][col] = coeff[r]
        kq_mats[a.name] = mat
    kernel_rep = Representation(q, kq_dims, kq_mats)

    summands1 = _top_lifts(kernel_rep)
    diff: list[list[dict[int, Fraction]]] = [
        [dict() for _ in summands1] for _ in summands0
    ]
    for c, (wv, t) in enumerate(summands1):
        kvec = kernel_at[wv][t]
        for k, (s, i) in enumerate(p0_at[wv]):
            if kvec[k] != 0:
                assert basis.paths[i].arrows, "kernel lives in the radical"
                diff[s][c][i] = kvec[k]

    return TwoTermComplex(
        basis,
        tuple(wv for wv, _ in summands1),
        tuple(v for v, _ in summands0),
        diff,
    )


def direct_sum(x: TwoTermComplex, y: TwoTermComplex) -> TwoTermComplex:
    if x.basis is not y.basis:
        raise AlgebraMismatchError()
    diff = [
        [dict(entry) for entry in row] + [dict() for _ in y.p1] for row in x.diff
    ] + [
        [dict() for _ in x.p1] + [dict(entry) for entry in row] for row in y.diff
    ]
    return TwoTermComplex(x.basis, x.p1 + y.p1, x.p0 + y.p0, diff)


def hom_shift(x: TwoTermComplex, y: TwoTermComplex) -> int:
    """Dimension of Hom(x, y[1]) between two-term complexes.

    Concretely: maps x.p1 -> y.p0 modulo the ones factoring through the two
    differentials.  Both objects are rigid-compatible when this vanishes in
    both directions.
    """
    if x.basis is not y.basis:
        raise AlgebraMismatchError()
    basis = x.basis

    coords: dict[tuple[int, int, int], int] = {}
    for r, yv in enumerate(y.p0):
        for c, xv in enumerate(x.p1):
            for p in basis.between(yv, xv):
                coords[(r, c, p)] = len(coords)
    if not coords:
        return 0

    trivial = RowSpace(len(coords))
    for r, yv in enumerate(y.p0):
        for s, xv in enumerate(x.p0):
            for g in basis.between(yv, xv):
                vec = [Fraction(0)] * len(coords)
                hit = False
                for c in range(len(x.p1)):
                    for p, coeff in x.diff[s][c].items():
                        prod = basis.mult(g, p)
                        if prod is not None:
                            vec[coords[(r, c, prod)]] += coeff
                            hit = True
                if hit:
                    trivial.add(vec)
    for t, yv in enumerate(y.p1):
        for c, xv in enumerate(x.p1):
            for h in basis.between(yv, xv):
                vec = [Fraction(0)] * len(coords)
                hit = False
                for r in range(len(y.p0)):
                    for p, coeff in y.diff[r][t].items():
                        prod = basis.mult(p, h)
                        if prod is not None:
                            vec[coords[(r, c, prod)]] += coeff
                            hit = True
                if hit:
                    trivial.add(vec)
    return len(coords) - trivial.rank


# ---------------------------------------------------------------------------
# the silting complex


@dataclass
class SiltingVertex:
    complex: TwoTermComplex
    gvec: tuple[int, ...]
    kind: str  # "module" or "shifted"
    word: StringWord | None
    projective: object | None
    label: str


def silting_vertices(q: GentleQuiver, basis: AlgebraBasis | None = None) -> list[SiltingVertex]:
    """Rigid presentations of string modules plus all shifted projectives."""
    if basis is None:
        basis = algebra_basis(q)
    out: list[SiltingVertex] = []
    for w in enumerate_strings(q):
        pres = min_presentation(basis, string_module(q, w))
        if hom_shift(pres, pres) == 0:
            out.append(
                SiltingVertex(pres, pres.gvec, "module", w, None, w.display())
            )
    for v in q.vertices:
        pres = shifted_projective(basis, v)
        out.append(
            SiltingVertex(pres, pres.gvec, "shifted", None, v, f"P_{vertex_label(v)}[1]")
        )
    dedup: dict[tuple[int, ...], SiltingVertex] = {}
    for sv in out:
        dedup.setdefault(sv.gvec, sv)
    return [dedup[g] for g in sorted(dedup)]


def silting_complex(q: GentleQuiver, basis: AlgebraBasis | None = None) -> LabeledComplex:
    """Faces are the pairwise compatible sets; facets must all be full rank."""
    if basis is None:
        basis = algebra_basis(q)
    verts = silting_vertices(q, basis)
    n = len(verts)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if (
                hom_shift(verts[i].complex, verts[j].complex) == 0
                and hom_shift(verts[j].complex, verts[i].complex) == 0
            ):
                adj[i].add(j)
                adj[j].add(i)
    facets = maximal_cliques(n, adj)
    for f in facets:
        if len(f) != len(q.vertices):
            raise NonPureComplexError(
                f"silting facet {f} has size {len(f)}, expected {len(q.vertices)}"
            )
    coordinates = tuple(vertex_label(v) for v in q.vertices)
    cxverts = []
    for i, sv in enumerate(verts):
        if sv.kind == "module":
            payload = {"kind": "module", "string": sv.word.display()}
        else:
            payload = {"kind": "shifted", "projective": vertex_label(sv.projective)}
        cxverts.append(ComplexVertex(i, sv.gvec, sv.label, payload))
    return make_complex(coordinates, cxverts, facets)


def induced_subcomplex_J(cx: LabeledComplex, coordinate_indices) -> LabeledComplex:
    """Restriction to the vertices supported on the given coordinates."""
    inside = set(coordinate_indices)
    ids = [
        v.id
        for v in cx.vertices
        if all(v.gvec[t] == 0 for t in range(len(cx.coordinates)) if t not in inside)
    ]
    return induced_subcomplex(cx, ids, coordinate_indices=tuple(coordinate_indices))


def verify_idempotent_reduction(
    q: GentleQuiver, J, ambient: LabeledComplex | None = None
) -> IsoReport:
    """Silting complex of the shortcut algebra vs the induced subcomplex.

    ambient lets callers reuse a silting complex of q across many subsets.
    """
    jset = set(J)
    sq = shortcut_quiver(q, J)
    small = silting_complex(sq)
    big = ambient if ambient is not None else silting_complex(q)
    positions = tuple(i for i, v in enumerate(q.vertices) if v in jset)
    induced = induced_subcomplex_J(big, positions)
    return iso_by_gvectors(small, induced)
