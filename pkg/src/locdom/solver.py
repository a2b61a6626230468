"""Exact search for domination and location-domination invariants.

A set S is dominating when every vertex outside S has a neighbor in S, and
locating-dominating (an LD-set) when additionally the traces N(v) & S are
pairwise distinct over the vertices v outside S. lambda(G) is the minimum
LD-set size, gamma(G) the minimum dominating-set size, and lambda_g(G) the
minimum size of a set that is an LD-set of both G and its complement.

Searches run over bitmask subsets in increasing integer order, so reported
witnesses are deterministic (the numerically smallest optimal mask).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .graph import (
    Graph,
    complement,
    connected_components,
    eccentricity,
    diameter,
    induced_subgraph,
    iter_bits,
    radius,
    vset_members,
)


@dataclass(frozen=True)
class SolveResult:
    """Optimum cardinality plus one witness set (numerically smallest mask)."""

    value: int
    witness: int
    all_optima_count: Optional[int] = None


@dataclass(frozen=True)
class GlobalityReport:
    """Whether an LD-set also works in the complement.

    An LD-set fails to be global exactly when some (necessarily unique)
    outside vertex is adjacent to all of it.
    """

    is_global: bool
    dominating_vertex: Optional[int]


class ComplementRelation(Enum):
    """Sign of lambda(complement) - lambda(G); always in {-1, 0, +1}."""

    MINUS_ONE = -1
    EQUAL = 0
    PLUS_ONE = 1


@dataclass(frozen=True)
class NonglobalConditions:
    """Necessary conditions observed at a non-global LD-set.

    With u the vertex dominating the set: ecc(u) <= 2, rad <= 2, diam <= 4
    and max degree >= |S| must all hold. A False flag is a falsification
    finding (data for the census), never an exception.
    """

    dominating_vertex: int
    ecc_u: int
    radius: int
    diameter: int
    max_degree: int
    set_size: int

    @property
    def ecc_le_2(self) -> bool:
        return self.ecc_u <= 2

    @property
    def rad_le_2(self) -> bool:
        return self.radius <= 2

    @property
    def diam_le_4(self) -> bool:
        return self.diameter <= 4

    @property
    def max_degree_ge_size(self) -> bool:
        return self.max_degree >= self.set_size

    @property
    def all_hold(self) -> bool:
        return (
            self.ecc_le_2
            and self.rad_le_2
            and self.diam_le_4
            and self.max_degree_ge_size
        )


def _check_subset(g: Graph, s: int) -> None:
    if s & ~g.vertex_mask:
        raise ValueError("vertex set mentions vertices outside the graph")


def is_dominating(g: Graph, s: int) -> bool:
    """True iff every vertex outside s has a neighbor in s."""
    _check_subset(g, s)
    for v in iter_bits(g.vertex_mask & ~s):
        if g.adj[v] & s == 0:
            return False
    return True


def is_ld_set(g: Graph, s: int) -> bool:
    """True iff s dominates g with pairwise-distinct outside traces."""
    _check_subset(g, s)
    return _is_ld(g, s)


def _is_ld(g: Graph, s: int) -> bool:
    seen = set()
    for v in iter_bits(g.vertex_mask & ~s):
        t = g.adj[v] & s
        if t == 0 or t in seen:
            return False
        seen.add(t)
    return True


def traces(g: Graph, s: int) -> dict[int, int]:
    """Trace mask N(v) & s for every vertex v outside s."""
    _check_subset(g, s)
    return {v: g.adj[v] & s for v in iter_bits(g.vertex_mask & ~s)}


def _dominating_vertex_unchecked(g: Graph, s: int) -> Optional[int]:
    for u in iter_bits(g.vertex_mask & ~s):
        if g.adj[u] & s == s:
            return u
    return None


def dominating_vertex(g: Graph, s: int) -> Optional[int]:
    """The unique vertex outside the LD-set s adjacent to all of it, if any."""
    if not is_ld_set(g, s):
        raise ValueError("s is not an LD-set of g")
    found = [u for u in iter_bits(g.vertex_mask & ~s) if g.adj[u] & s == s]
    if len(found) > 1:
        raise RuntimeError(
            f"internal invariant breach: {len(found)} vertices dominate an LD-set"
        )
    return found[0] if found else None


def globality(g: Graph, s: int) -> GlobalityReport:
    """Globality report for an LD-set s of g."""
    u = dominating_vertex(g, s)
    return GlobalityReport(is_global=u is None, dominating_vertex=u)


def is_global_ld_set(g: Graph, s: int) -> bool:
    """True iff s is an LD-set of g and of its complement.

    Uses the dominating-vertex shortcut: an LD-set of g works in the
    complement exactly when no outside vertex is adjacent to all of s.
    """
    _check_subset(g, s)
    return _is_ld(g, s) and _dominating_vertex_unchecked(g, s) is None


def lower_bound(g: Graph) -> int:
    """Smallest k with n <= k + 2^k - 1 (outside traces are distinct
    nonempty subsets of the chosen set); never exceeds lambda(g)."""
    n = g.n
    k = 1
    while n > k + (1 << k) - 1:
        k += 1
    return k


def k_subsets(universe: int, k: int) -> Iterator[int]:
    """All k-subset masks of 0..universe-1 in increasing integer order."""
    if k == 0:
        yield 0
        return
    if k > universe:
        return
    mask = (1 << k) - 1
    limit = 1 << universe
    while mask < limit:
        yield mask
        c = mask & -mask
        r = mask + c
        mask = (((r ^ mask) >> 2) // c) | r


def _solve(g: Graph, predicate, start: int, count_optima: bool) -> SolveResult:
    for k in range(start, g.n + 1):
        first = None
        count = 0
        for mask in k_subsets(g.n, k):
            if predicate(g, mask):
                if not count_optima:
                    return SolveResult(k, mask)
                if first is None:
                    first = mask
                count += 1
        if first is not None:
            return SolveResult(k, first, count)
    raise RuntimeError("search exhausted without a feasible set")  # unreachable: V qualifies


def domination_number(g: Graph, count_optima: bool = False) -> SolveResult:
    """Exact gamma(g) with witness."""
    return _solve(g, lambda gg, m: is_dominating(gg, m), 1, count_optima)


def location_domination_number(g: Graph, count_optima: bool = False) -> SolveResult:
    """Exact lambda(g) with witness.

    Disconnected graphs are solved per component and summed; the union of
    the per-component smallest witnesses is again the numerically smallest.
    """
    comps = connected_components(g)
    if len(comps) == 1:
        return _solve(g, lambda gg, m: _is_ld(gg, m), lower_bound(g), count_optima)
    total = 0
    witness = 0
    count = 1
    for comp in comps:
        sub = induced_subgraph(g, comp)
        res = _solve(sub, lambda gg, m: _is_ld(gg, m), lower_bound(sub), count_optima)
        verts = vset_members(comp)
        for b in iter_bits(res.witness):
            witness |= 1 << verts[b]
        total += res.value
        if count_optima:
            count *= res.all_optima_count
    return SolveResult(total, witness, count if count_optima else None)


def ld_codes(g: Graph) -> Iterator[int]:
    """All LD-sets of cardinality lambda(g), in increasing mask order."""
    lam = location_domination_number(g).value
    for mask in k_subsets(g.n, lam):
        if _is_ld(g, mask):
            yield mask


def has_global_ld_code(g: Graph) -> bool:
    """True iff some minimum LD-set is global, i.e. lambda_g(g) = lambda(g)."""
    return any(_dominating_vertex_unchecked(g, s) is None for s in ld_codes(g))


def global_location_domination_number(g: Graph) -> SolveResult:
    """Exact lambda_g(g) with witness.

    Every minimum LD-set is tested for globality first. When all fail, the
    smallest LD-code augmented with its dominating vertex certifies
    lambda(g) + 1, which is an upper bound that is then tight.
    """
    lam = location_domination_number(g)
    for s in ld_codes(g):
        if _dominating_vertex_unchecked(g, s) is None:
            return SolveResult(lam.value, s)
    u = _dominating_vertex_unchecked(g, lam.witness)
    witness = lam.witness | 1 << u
    gc = complement(g)
    assert _is_ld(g, witness) and _is_ld(gc, witness), "augmented set must be global"
    return SolveResult(lam.value + 1, witness)


def complement_relation(g: Graph) -> ComplementRelation:
    """Classify lambda(complement) - lambda(g) as -1, 0 or +1."""
    lam = location_domination_number(g).value
    lam_c = location_domination_number(complement(g)).value
    diff = lam_c - lam
    if abs(diff) > 1:
        raise RuntimeError(
            f"internal invariant breach: |lambda - lambda(complement)| = {abs(diff)}"
        )
    return ComplementRelation(diff)


def nonglobal_witness_conditions(g: Graph, s: int) -> NonglobalConditions:
    """Measure the necessary conditions at a non-global LD-set s.

    Requires s to be an LD-set with a dominating vertex (its existence
    forces g connected, so radius and diameter are well defined).
    """
    u = dominating_vertex(g, s)
    if u is None:
        raise ValueError("s is a global LD-set; no dominating vertex to report on")
    return NonglobalConditions(
        dominating_vertex=u,
        ecc_u=eccentricity(g, u),
        radius=radius(g),
        diameter=diameter(g),
        max_degree=g.max_degree(),
        set_size=s.bit_count(),
    )
