import itertools
import random

import pytest

from locdom.graph import Graph, complement, union, vset, vset_members
from locdom import families as fam
from locdom.solver import (
    ComplementRelation,
    complement_relation,
    dominating_vertex,
    domination_number,
    global_location_domination_number,
    globality,
    has_global_ld_code,
    is_dominating,
    is_global_ld_set,
    is_ld_set,
    ld_codes,
    location_domination_number,
    lower_bound,
    nonglobal_witness_conditions,
    traces,
)
from locdom.graph6 import parse_graph6


# --- independent oracle, set-based (no bitmask machinery) ---

def oracle_neighbors(g, v):
    return frozenset(u for u in range(g.n) if g.has_edge(u, v))


def oracle_is_ld(g, members):
    s = set(members)
    seen = set()
    for v in range(g.n):
        if v in s:
            continue
        t = oracle_neighbors(g, v) & frozenset(s)
        if not t or t in seen:
            return False
        seen.add(t)
    return True


def oracle_lambda(g):
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if oracle_is_ld(g, combo):
                return k
    raise AssertionError("unreachable")


def oracle_codes(g):
    k = oracle_lambda(g)
    return [set(c) for c in itertools.combinations(range(g.n), k) if oracle_is_ld(g, c)]


def random_graph(rng, n, p=0.4):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


# --- predicates ---

def test_is_dominating_examples():
    assert is_dominating(fam.complete(4), vset([2]))
    assert is_dominating(fam.path(5), vset([1, 3]))
    assert not is_dominating(fam.cycle(6), vset([0]))


def test_is_ld_set_examples():
    p5 = fam.path(5)
    assert is_ld_set(p5, vset([1, 3]))
    assert traces(p5, vset([1, 3])) == {0: vset([1]), 2: vset([1, 3]), 4: vset([3])}
    assert not is_ld_set(fam.cycle(4), vset([0]))
    k4 = fam.complete(4)
    assert is_ld_set(k4, vset([0, 1, 2]))
    assert location_domination_number(k4).value == 3


def test_is_ld_rejects_out_of_range_set():
    with pytest.raises(ValueError):
        is_ld_set(fam.path(3), vset([5]))


def test_dominating_vertex_examples():
    star = fam.star(4)  # leaves 0..2, center 3
    assert dominating_vertex(star, vset([0, 1, 2])) == 3
    assert dominating_vertex(fam.path(5), vset([1, 3])) == 2
    assert dominating_vertex(fam.cycle(6), vset([0, 2, 4])) is None


def test_dominating_vertex_requires_ld_set():
    with pytest.raises(ValueError):
        dominating_vertex(fam.cycle(4), vset([0]))


def test_is_global_ld_set_examples():
    c5 = fam.cycle(5)
    for s in ld_codes(c5):
        assert not is_global_ld_set(c5, s)
    assert is_global_ld_set(fam.path(3), vset([0, 2]))
    assert not is_global_ld_set(fam.complete(3), vset([0, 1]))


def test_is_global_agrees_with_two_sided_definition():
    rng = random.Random(41)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 7))
        s = rng.getrandbits(g.n)
        two_sided = is_ld_set(g, s) and is_ld_set(complement(g), s)
        assert is_global_ld_set(g, s) == two_sided


def test_trace_duality_lemma():
    """Trace distinctness is preserved between a graph and its complement."""
    rng = random.Random(97)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 8))
        s = rng.getrandbits(g.n)
        gc = complement(g)
        outside = [v for v in range(g.n) if not s >> v & 1]
        for x, y in itertools.combinations(outside, 2):
            in_g = (g.adj[x] & s) != (g.adj[y] & s)
            in_gc = (gc.adj[x] & s) != (gc.adj[y] & s)
            assert in_g == in_gc


# --- optimizers ---

def test_lambda_examples():
    assert location_domination_number(fam.path(6)).value == 3
    assert location_domination_number(fam.path(10)).value == 4
    assert location_domination_number(fam.wheel(6)).value == 3


def test_lambda_matches_oracle_on_random_graphs():
    rng = random.Random(7)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7))
        res = location_domination_number(g)
        assert res.value == oracle_lambda(g)
        assert is_ld_set(g, res.witness)
        assert res.witness.bit_count() == res.value


def test_lambda_witness_is_smallest_mask():
    rng = random.Random(19)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 7))
        res = location_domination_number(g)
        best = min(vset(c) for c in oracle_codes(g))
        assert res.witness == best


def test_lambda_count_optima():
    res = location_domination_number(fam.path(3), count_optima=True)
    assert res.value == 2 and res.all_optima_count == 3


def test_lambda_additive_on_disjoint_union():
    rng = random.Random(59)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 5))
        h = random_graph(rng, rng.randint(1, 5))
        lam = location_domination_number
        assert lam(union(g, h)).value == lam(g).value + lam(h).value


def test_lambda_disconnected_witness_and_count():
    g = union(fam.path(3), fam.path(3))
    res = location_domination_number(g, count_optima=True)
    assert res.value == 4
    assert res.all_optima_count == 9  # three codes per component
    assert res.witness == vset([0, 1, 3, 4])  # smallest per component


def test_gamma_examples():
    assert domination_number(fam.complete(5)).value == 1
    assert domination_number(fam.cycle(6)).value == 2
    p5 = fam.path(5)
    assert domination_number(p5).value == 2
    assert location_domination_number(p5).value == 2


def test_gamma_le_lambda_random():
    rng = random.Random(67)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7))
        assert domination_number(g).value <= location_domination_number(g).value


def test_lambda_g_examples():
    assert global_location_domination_number(fam.cycle(5)).value == 3
    assert global_location_domination_number(fam.path(5)).value == 3
    assert global_location_domination_number(fam.bi_star(2, 2)).value == 4


def test_lambda_g_witness_is_global():
    rng = random.Random(71)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7))
        res = global_location_domination_number(g)
        assert is_global_ld_set(g, res.witness)
        assert res.witness.bit_count() == res.value


def test_lambda_g_symmetric_under_complement():
    rng = random.Random(73)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7))
        a = global_location_domination_number(g).value
        b = global_location_domination_number(complement(g)).value
        assert a == b


def test_has_global_ld_code_examples():
    assert not has_global_ld_code(fam.cycle(5))
    assert has_global_ld_code(fam.path(3))
    for n in range(2, 7):
        assert not has_global_ld_code(fam.complete(n))


def test_ld_codes_enumeration():
    assert [vset_members(s) for s in ld_codes(fam.complete(3))] == [[0, 1], [0, 2], [1, 2]]
    p3_codes = list(ld_codes(fam.path(3)))
    assert vset([0, 2]) in p3_codes
    assert len(list(ld_codes(fam.cycle(5)))) == len(oracle_codes(fam.cycle(5))) == 5


def test_ld_codes_match_oracle(graphs_le6):
    for g in graphs_le6:
        got = list(ld_codes(g))
        assert got == sorted(got)  # ascending mask order, no duplicates
        assert len(set(got)) == len(got)
        want = {frozenset(c) for c in oracle_codes(g)}
        assert {frozenset(vset_members(s)) for s in got} == want


def test_complement_relation_examples():
    for n in range(2, 8):
        assert complement_relation(fam.complete(n)) is ComplementRelation.PLUS_ONE
    for n in range(4, 8):
        assert complement_relation(fam.star(n)) is ComplementRelation.EQUAL
    for r, s in [(2, 2), (2, 3), (3, 3)]:
        assert complement_relation(fam.bi_star(r, s)) is ComplementRelation.MINUS_ONE


def test_nonglobal_conditions_tight_exemplar():
    """Frozen census find: rad=2, diam=4 graph where the complement costs one more."""
    g = parse_graph6("F^mI?")
    assert location_domination_number(g).value == 3
    assert location_domination_number(complement(g)).value == 4
    code = next(s for s in ld_codes(g) if dominating_vertex(g, s) is not None)
    cond = nonglobal_witness_conditions(g, code)
    assert cond.all_hold
    assert cond.diameter == 4 and cond.radius == 2


def test_nonglobal_conditions_complete_graph():
    for n in range(3, 7):
        g = fam.complete(n)
        code = next(iter(ld_codes(g)))
        cond = nonglobal_witness_conditions(g, code)
        assert cond.max_degree == n - 1 == cond.set_size
        assert cond.all_hold


def test_nonglobal_conditions_paw():
    g = fam.paw()
    for code in ld_codes(g):
        if dominating_vertex(g, code) is None:
            continue
        cond = nonglobal_witness_conditions(g, code)
        assert cond.rad_le_2 and cond.all_hold


def test_nonglobal_conditions_rejects_global_set():
    with pytest.raises(ValueError):
        nonglobal_witness_conditions(fam.path(3), vset([0, 2]))


def test_globality_report():
    rep = globality(fam.complete(3), vset([0, 1]))
    assert not rep.is_global and rep.dominating_vertex == 2
    rep = globality(fam.path(3), vset([0, 2]))
    assert rep.is_global and rep.dominating_vertex is None


def test_lower_bound_values():
    assert lower_bound(Graph(1)) == 1
    assert lower_bound(Graph(5)) == 2
    assert lower_bound(Graph(6)) == 3


def test_lower_bound_never_exceeds_lambda():
    rng = random.Random(83)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8))
        assert lower_bound(g) <= location_domination_number(g).value
