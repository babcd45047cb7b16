import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from krdom.graph import (
    Graph,
    JoinAssignment,
    PartitionSpec,
    SizeLimitError,
    complement,
    complete,
    complete_multipartite,
    cycle,
    example48,
    k_join,
    new_graph,
    vertex_limit,
)
from krdom.predicates import Variant, check, variants
from krdom.solvers import (
    Status,
    _colex,
    all_min_sets,
    all_qualifying_sets,
    decompose,
    decomposition_holds,
    domatic,
    gamma,
    star_domatic,
    t0,
    t_of,
    valid_table,
)

from conftest import graphs


def R(k):
    return Variant(k, restrained=True)


def partition_ok(g, variant, classes):
    union = set()
    for c in classes:
        assert not union & c
        assert check(g, c, variant)
        union |= c
    return union == set(range(g.n))


def test_colex_order():
    got = [sorted(i for i in range(4) if m >> i & 1) for m in _colex([0, 1, 2, 3], 2)]
    assert got == [[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]]


def test_colex_maps_through_free_list():
    masks = list(_colex([1, 4, 9, 10, 11, 12, 13, 14, 15, 20], 9))
    assert len(masks) == 10
    assert all(m.bit_count() == 9 for m in masks)
    assert len(set(masks)) == 10


class TestGamma:
    @pytest.mark.parametrize("g,k,expected", [
        (complete(7), 3, 3),
        (complete(4), 2, 4),
        (cycle(8), 1, 4),
        (cycle(9), 2, 9),
        (complement(cycle(7)), 2, 3),
    ])
    def test_values(self, g, k, expected):
        res = gamma(g, R(k))
        assert res.status is Status.OPTIMAL
        assert res.value == expected
        assert check(g, res.witness, R(k))

    def test_infeasible(self):
        res = gamma(complete(1), R(2))
        assert res.status is Status.INFEASIBLE and res.value is None

    def test_colex_first_witness(self):
        assert gamma(complete(5), R(2)).witness == frozenset({0, 1})

    def test_total_feasibility(self):
        assert not gamma(cycle(4), Variant(3, total=True, restrained=True)).optimal
        assert gamma(cycle(4), Variant(2, total=True)).value == 4

    def test_empty_graph(self):
        assert gamma(new_graph(0), R(1)).value == 0

    def test_size_limit(self):
        with vertex_limit(4):
            with pytest.raises(SizeLimitError):
                gamma(Graph(5, (0,) * 5), R(1))

    def test_explored_is_reported(self):
        assert gamma(cycle(9), R(1)).explored > 0


class TestAllMinSets:
    def test_example48_unique(self):
        assert all_min_sets(example48(), Variant(1)) == [frozenset({1, 2, 3})]

    def test_k5_pairs(self):
        sets = all_min_sets(complete(5), R(2))
        assert sets == [frozenset(c) for c in itertools.combinations(range(5), 2)]

    def test_c3_singletons(self):
        assert all_min_sets(cycle(3), Variant(1)) == [frozenset({0}), frozenset({1}), frozenset({2})]


class TestDomatic:
    def test_k6(self):
        res = domatic(complete(6), R(2))
        assert res.value == 3 and partition_ok(complete(6), R(2), res.witness)

    def test_k5(self):
        assert domatic(complete(5), R(2)).value == 1

    def test_c6_restrained_matches_plain(self):
        g = cycle(6)
        d, dt, dr = (domatic(g, v).value for v in (Variant(1), Variant(1, total=True), R(1)))
        assert (d, dt) != (2, 1)
        assert dr == d

    def test_infeasible(self):
        assert domatic(cycle(5), Variant(3, total=True)).status is Status.INFEASIBLE

    def test_star_flag(self):
        res = domatic(complete(6), R(2))
        assert res.star and min(len(c) for c in res.witness) == 2


class TestStarDomatic:
    def test_k6(self):
        res = star_domatic(complete(6), R(2))
        assert res.value == 3 and res.star
        assert all(len(c) == 2 for c in res.witness)

    def test_k5_plain(self):
        res = star_domatic(complete(5), Variant(2))
        assert res.value == 2
        assert min(len(c) for c in res.witness) == gamma(complete(5), Variant(2)).value

    def test_domatic_one_gives_one(self):
        g = cycle(5)
        assert domatic(g, R(1)).value == 1
        assert star_domatic(g, R(1)).value == 1


class TestT0:
    def test_matches_enumeration(self):
        spec = PartitionSpec((2, 2, 2))
        g = complete_multipartite(spec)
        proper = [s for s in all_qualifying_sets(g, R(1)) if len(s) < g.n]
        assert t0(spec, 1) == min(t_of(spec, s) for s in proper)

    @pytest.mark.parametrize("p", (3, 4, 5))
    def test_complete_graph_parts(self, p):
        spec = PartitionSpec((1,) * p)
        # a singleton leaves p-1 parts incomplete, but dropping just two vertices
        # already gives an RDS, so the minimum is 2
        assert t_of(spec, frozenset({0})) == p - 1
        assert check(complete(p), set(range(p - 2)), R(1))
        assert t0(spec, 1) == 2

    def test_none_when_only_full_set(self):
        # K_4 with k=2: every vertex is forced
        assert t0(PartitionSpec((1, 1, 1, 1)), 2) is None

    def test_infeasible(self):
        with pytest.raises(ValueError):
            t0(PartitionSpec((1, 1, 1)), 4)


class TestDecompose:
    def test_join_onto_k2(self):
        f = new_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
        g = k_join(f, complete(2), 2, JoinAssignment(tuple(frozenset({0, 1}) for _ in range(4))))
        d = decompose(g, 2)
        assert d.m == 2 and decomposition_holds(g, 2, d)
        # the joined K_2 is a minimum core; so is the chord, which comes first in colex order
        mins = all_min_sets(g, R(2))
        assert frozenset({4, 5}) in mins
        assert d.core == frozenset({0, 2}) == mins[0]

    def test_k4_whole(self):
        d = decompose(complete(4), 2)
        assert d.core == frozenset(range(4)) and not d.outer

    def test_k7(self):
        d = decompose(complete(7), 3)
        assert d.m == 3 and len(d.outer) == 4
        assert decomposition_holds(complete(7), 3, d)

    def test_requires_k2(self):
        with pytest.raises(ValueError):
            decompose(complete(3), 1)

    def test_infeasible(self):
        assert decompose(cycle(5), 4) is None


# properties


@given(graphs(max_n=9), st.integers(1, 3), st.booleans(), st.booleans())
def test_pruned_matches_plain_search_and_table(g, k, total, restrained):
    v = Variant(k, total=total, restrained=restrained)
    fast, slow = gamma(g, v), gamma(g, v, prune=False)
    assert fast.status == slow.status
    if fast.optimal:
        assert fast.value == slow.value
        assert check(g, fast.witness, v)
        table = valid_table(g, v)
        sizes = np.bitwise_count(np.arange(1 << g.n, dtype=np.uint32))
        assert sizes[table].min() == fast.value


@given(graphs(min_n=1, max_n=8), st.integers(1, 2))
def test_all_min_sets_qualify(g, k):
    sets = all_min_sets(g, R(k))
    res = gamma(g, R(k))
    if not res.optimal:
        assert sets == []
        return
    assert res.witness in sets
    assert {len(s) for s in sets} == {res.value}
    assert all(check(g, s, R(k)) for s in sets)
    assert sets == sorted(sets, key=sorted)


@given(graphs(min_n=1, max_n=7), st.integers(1, 2))
def test_gamma_monotone_across_variants(g, k):
    plain, total, restr, total_r = (gamma(g, v) for v in variants(k))
    if restr.optimal:
        assert plain.value <= restr.value
    if total.optimal:
        assert plain.value <= total.value
    if total_r.optimal:
        assert total.value <= total_r.value


@given(graphs(min_n=1, max_n=7), st.integers(1, 2), st.booleans(), st.booleans())
def test_domatic_partitions_are_valid(g, k, total, restrained):
    v = Variant(k, total=total, restrained=restrained)
    res = domatic(g, v)
    if not res.optimal:
        assert not check(g, range(g.n), v)
        return
    assert res.value == len(res.witness)
    assert partition_ok(g, v, [set(c) for c in res.witness])
    star = star_domatic(g, v)
    assert star.value <= res.value
    if star.star:
        assert min(len(c) for c in star.witness) == gamma(g, v).value
        assert partition_ok(g, v, [set(c) for c in star.witness])


@given(graphs(min_n=1, max_n=6), st.integers(1, 2))
def test_domatic_is_optimal_by_brute_force(g, k):
    v = R(k)
    res = domatic(g, v)
    if not res.optimal:
        return
    table = valid_table(g, v)
    # brute-force partition search over class labels, canonical by first occurrence
    best = 0

    def extend(vertex, labels, count):
        nonlocal best
        if vertex == g.n:
            masks = [0] * count
            for u, lab in enumerate(labels):
                masks[lab] |= 1 << u
            if all(table[m] for m in masks):
                best = max(best, count)
            return
        for lab in range(count + 1):
            extend(vertex + 1, labels + [lab], max(count, lab + 1))

    extend(0, [], 0)
    assert res.value == best


@given(graphs(min_n=1, max_n=7), st.integers(2, 3))
def test_decomposition_core_is_minimum(g, k):
    d = decompose(g, k)
    res = gamma(g, R(k))
    if d is None:
        assert not res.optimal
        return
    assert check(g, d.core, R(k)) and d.m == res.value
    assert decomposition_holds(g, k, d) or not d.outer
