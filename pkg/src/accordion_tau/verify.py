"""Drivers that run the theorem checks, one instance or exhaustively.

The three checks:
  main        accordion complex of d  vs  silting complex of its quiver
  idempotent  silting of a shortcut algebra  vs  induced silting subcomplex
  nested      accordion complex of d  vs  induced subcomplex for d inside d'

Exhaustive runs iterate all dissections of one polygon and reuse the ambient
complexes across subsets.  With structural=True every complex that shows up
also goes through the structural audit (pseudomanifold, regular dual graph,
sign coherence, facet independence, injective g-vectors).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .accordion import accordion_complex, verify_nested
from .complexes import (
    IsoReport,
    LabeledComplex,
    dual_graph,
    induced_subcomplex,
    is_pseudomanifold,
    iso_by_gvectors,
    structural_failures,
)
from .geometry import Dissection, all_dissections
from .quiver import (
    GentleQuiver,
    idempotent_subalgebra_check,
    quiver_of_dissection,
    quivers_match,
    shortcut_quiver,
)
from .rigidity import (
    direct_sum,
    hom_shift,
    induced_subcomplex_J,
    silting_complex,
    silting_vertices,
    verify_idempotent_reduction,
)


def verify_main(d: Dissection) -> IsoReport:
    """The headline comparison for a single dissection."""
    return iso_by_gvectors(
        accordion_complex(d), silting_complex(quiver_of_dissection(d))
    )


def audit_complex(cx: LabeledComplex) -> list[str]:
    """All structural expectations at once; empty list means clean."""
    fails = structural_failures(cx)
    report = is_pseudomanifold(cx)
    fails.extend(report.failures)
    if report.pure:
        n = len(cx.coordinates)
        degrees = dual_graph(cx).degrees()
        off = [deg for deg in degrees if deg != n]
        if off:
            fails.append(f"dual graph degrees {sorted(set(off))} instead of {n}")
    return fails


@dataclass
class VerifySummary:
    theorem: str
    checked: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    structural: list[str] = field(default_factory=list)
    complexes_audited: int = 0

    @property
    def ok(self) -> bool:
        return self.checked == self.passed and not self.structural

    def record(self, instance: str, report: IsoReport):
        self.checked += 1
        if report.passed:
            self.passed += 1
        else:
            self.failures.append(f"{instance}: {'; '.join(report.failures)}")

    def audit(self, instance: str, cx: LabeledComplex):
        self.complexes_audited += 1
        for msg in audit_complex(cx):
            self.structural.append(f"{instance}: {msg}")

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": "pass" if self.ok else "fail",
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures,
            "structural_failures": self.structural,
            "complexes_audited": self.complexes_audited,
        }


def _tag(d: Dissection) -> str:
    return f"m={d.cycle.m} {d.white_pairs()}"


def verify_main_exhaustive(m: int, structural: bool = False) -> VerifySummary:
    summary = VerifySummary("main")
    for d in all_dissections(m):
        acc = accordion_complex(d)
        silt = silting_complex(quiver_of_dissection(d))
        summary.record(_tag(d), iso_by_gvectors(acc, silt))
        if structural:
            summary.audit(_tag(d) + " accordion", acc)
            summary.audit(_tag(d) + " silting", silt)
    return summary


def _subsets(items: tuple) -> list[tuple]:
    out = []
    for size in range(1, len(items) + 1):
        out.extend(itertools.combinations(items, size))
    return out


def verify_nested_exhaustive(m: int, structural: bool = False) -> VerifySummary:
    """Every nested pair of nonempty dissections, subsets taken in ambient order."""
    summary = VerifySummary("nested")
    ambient_cache: dict[tuple, LabeledComplex] = {}

    def cached(d: Dissection) -> LabeledComplex:
        key = tuple(d.white_pairs())
        if key not in ambient_cache:
            cx = accordion_complex(d)
            ambient_cache[key] = cx
            if structural:
                summary.audit(_tag(d) + " accordion", cx)
        return ambient_cache[key]

    for big in all_dissections(m):
        big_cx = cached(big)
        for sub in _subsets(big.diagonals):
            d = Dissection(big.cycle, sub)
            report = verify_nested(d, big, ambient=big_cx)
            summary.record(f"{_tag(d)} inside {big.white_pairs()}", report)
            cached(d)
            if structural:
                # re-derive the induced side the same way verify_nested does
                positions = tuple(big.diagonals.index(x) for x in sub)
                inside = set(positions)
                ids = [
                    v.id
                    for v in big_cx.vertices
                    if all(
                        v.gvec[t] == 0
                        for t in range(len(big_cx.coordinates))
                        if t not in inside
                    )
                ]
                summary.audit(
                    f"{_tag(d)} inside {big.white_pairs()} induced",
                    induced_subcomplex(big_cx, ids, coordinate_indices=positions),
                )
    return summary


def verify_idempotent_exhaustive(
    m: int, structural: bool = False, triangulations_only: bool = False
) -> VerifySummary:
    summary = VerifySummary("idempotent")
    for d in all_dissections(m):
        if triangulations_only and len(d.diagonals) != m - 3:
            continue
        q = quiver_of_dissection(d)
        ambient = silting_complex(q)
        if structural:
            summary.audit(_tag(d) + " silting", ambient)
        for J in _subsets(q.vertices):
            report = verify_idempotent_reduction(q, J, ambient=ambient)
            summary.record(f"{_tag(d)} J={list(J)}", report)
            if structural:
                sq = shortcut_quiver(q, J)
                summary.audit(f"{_tag(d)} J={list(J)} shortcut silting", silting_complex(sq))
                positions = tuple(i for i, v in enumerate(q.vertices) if v in set(J))
                summary.audit(
                    f"{_tag(d)} J={list(J)} induced",
                    induced_subcomplex_J(ambient, positions),
                )
    return summary


def verify_consistency_exhaustive(m: int) -> VerifySummary:
    """Shortcut quivers of nested dissections match the small dissection's
    quiver, and the subalgebra bookkeeping holds on the same instances."""
    summary = VerifySummary("consistency")
    for big in all_dissections(m):
        q_big = quiver_of_dissection(big)
        for sub in _subsets(big.diagonals):
            d = Dissection(big.cycle, sub)
            J = tuple(c.vertex_pair() for c in sub)
            instance = f"{_tag(d)} inside {big.white_pairs()}"
            summary.checked += 1
            fails = quivers_match(shortcut_quiver(q_big, J), quiver_of_dissection(d))
            algebra = idempotent_subalgebra_check(q_big, J)
            fails.extend(algebra.failures)
            if fails:
                summary.failures.append(f"{instance}: {'; '.join(fails)}")
            else:
                summary.passed += 1
    return summary


def additivity_spotcheck(q: GentleQuiver, seed: int, rounds: int = 12) -> list[str]:
    """hom_shift must be additive in both arguments under direct sums."""
    rng = random.Random(seed)
    verts = silting_vertices(q)
    if len(verts) < 2:
        return []
    failures = []
    for _ in range(rounds):
        x, y, z = (rng.choice(verts) for _ in range(3))
        lhs = hom_shift(direct_sum(x.complex, y.complex), z.complex)
        rhs = hom_shift(x.complex, z.complex) + hom_shift(y.complex, z.complex)
        if lhs != rhs:
            failures.append(
                f"hom_shift({x.label} + {y.label}, {z.label}) = {lhs}, parts sum {rhs}"
            )
        lhs = hom_shift(z.complex, direct_sum(x.complex, y.complex))
        rhs = hom_shift(z.complex, x.complex) + hom_shift(z.complex, y.complex)
        if lhs != rhs:
            failures.append(
                f"hom_shift({z.label}, {x.label} + {y.label}) = {lhs}, parts sum {rhs}"
            )
    return failures
