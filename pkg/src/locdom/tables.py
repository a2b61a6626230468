"""Reproduce the closed-form value tables three ways and flag disagreement.

Each row of the desk-scale sweep carries the formula triple, the exact
triple solved on the built graph, and the exact triple solved on its
complement mapped back (lambda and lambda of the complement swap; the
global number must be invariant under complementation).
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilyDescriptor, build, describe, formula
from .graph import Graph, complement
from .solver import global_location_domination_number, location_domination_number


@dataclass(frozen=True)
class TableRow:
    label: str
    order: int
    formula: tuple[int, int, int]
    exact: tuple[int, int, int]
    exact_via_complement: tuple[int, int, int]

    @property
    def agree(self) -> bool:
        return self.formula == self.exact == self.exact_via_complement


def _exact_triple(g: Graph) -> tuple[int, int, int]:
    return (
        location_domination_number(g).value,
        location_domination_number(complement(g)).value,
        global_location_domination_number(g).value,
    )


def _row(d: FamilyDescriptor) -> TableRow:
    g = build(d)
    f = formula(d)
    lam, lam_c, lam_g = _exact_triple(g)
    c_lam, c_lam_c, c_lam_g = _exact_triple(complement(g))
    return TableRow(
        label=describe(d),
        order=g.n,
        formula=(f.lam, f.lam_complement, f.lam_global),
        exact=(lam, lam_c, lam_g),
        exact_via_complement=(c_lam_c, c_lam, c_lam_g),
    )


def small_order_descriptors() -> list[FamilyDescriptor]:
    """The twelve hand-tabulated columns: P1-P6, C4-C6, W5-W7."""
    out = [FamilyDescriptor("path", (n,)) for n in range(1, 7)]
    out += [FamilyDescriptor("cycle", (n,)) for n in range(4, 7)]
    out += [FamilyDescriptor("wheel", (n,)) for n in range(5, 8)]
    return out


def desk_scale_descriptors() -> list[FamilyDescriptor]:
    """Formula-range instances locked to desk-scale exact solving."""
    out = []
    out += [FamilyDescriptor("path", (n,)) for n in range(7, 14)]
    out += [FamilyDescriptor("cycle", (n,)) for n in range(7, 14)]
    out += [FamilyDescriptor("wheel", (n,)) for n in range(8, 13)]
    out += [FamilyDescriptor("complete", (n,)) for n in range(2, 11)]
    out += [FamilyDescriptor("star", (n,)) for n in range(4, 11)]
    out += [
        FamilyDescriptor("complete_bipartite", (r, s))
        for r in range(2, 6)
        for s in range(r, 11 - r)
    ]
    out += [
        FamilyDescriptor("bi_star", (r, s))
        for r in range(2, 5)
        for s in range(r, 9 - r)
    ]
    return out


def reproduce_tables() -> list[TableRow]:
    """All rows: hand-tabulated small orders first, then the formula sweep."""
    return [_row(d) for d in small_order_descriptors() + desk_scale_descriptors()]


def render_rows(rows: list[TableRow]) -> str:
    header = f"{'family':<12}{'n':>3}  {'formula':<12}{'exact':<12}{'via-comp':<12}{'ok':<3}"
    lines = [header, "-" * len(header)]
    for r in rows:
        def fmt(t):
            return "({},{},{})".format(*t)
        lines.append(
            f"{r.label:<12}{r.order:>3}  {fmt(r.formula):<12}{fmt(r.exact):<12}"
            f"{fmt(r.exact_via_complement):<12}{'ok' if r.agree else 'DISAGREE':<3}"
        )
    bad = sum(1 for r in rows if not r.agree)
    lines.append(f"{len(rows)} rows, {bad} disagreement(s)")
    return "\n".join(lines)
