import pytest

from krdom.graph import SizeLimitError, complement, complete, cycle, empty
from krdom.predicates import Variant, check
from krdom.verify import (
    Report,
    RowStatus,
    SweepSpec,
    check_implications,
    check_observation_chain,
    example48_report,
    has_join_shape,
    partitions,
    random_graph,
    sweep,
)


def clauses(rep: Report) -> dict[str, RowStatus]:
    return {dict(r.params)["clause"]: r.status for r in rep.rows}


class TestRandomGraph:
    @pytest.mark.parametrize("seed", [0, 1, 99])
    def test_extremes(self, seed):
        assert random_graph(5, 1.0, seed) == complete(5)
        assert random_graph(5, 0.0, seed) == empty(5)

    def test_deterministic(self):
        assert random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42)
        assert random_graph(8, 0.5, 42) != random_graph(8, 0.5, 43)

    def test_rejects_bad_probability(self):
        with pytest.raises(ValueError):
            random_graph(4, 1.5, 0)

    def test_rejects_oversize(self):
        with pytest.raises(SizeLimitError):
            random_graph(100, 0.5, 0)


def test_partitions_helper():
    assert list(partitions(5, 3)) == [(3, 1, 1), (2, 2, 1)]


class TestSweep:
    def test_complete(self):
        rep = sweep(SweepSpec("complete", {"n": tuple(range(2, 11)), "k": (1, 2, 3)}))
        assert not rep.mismatches and rep.matches > 0

    def test_cycle(self):
        rep = sweep(SweepSpec("cycle", {"n": tuple(range(3, 13)), "k": (1, 2, 3)}))
        assert rep.tested == 30 and not rep.mismatches

    def test_prism_cycle_k2(self):
        rep = sweep(SweepSpec("prism-cycle-k2", {"n": tuple(range(4, 11))}))
        assert rep.tested == 7 and not rep.mismatches

    def test_cycle_complement_count(self):
        rep = sweep(SweepSpec("cycle-complement", {"n": tuple(range(4, 13))}))
        assert rep.tested == 9 and rep.matches == 9

    def test_counts_add_up(self):
        rep = sweep(SweepSpec("cycle-complement-k"))
        assert rep.matches + len(rep.mismatches) + rep.skipped == rep.tested

    def test_mismatch_witnesses_recheck(self):
        rep = sweep(SweepSpec("cycle-complement-k"))
        assert rep.mismatches
        for row in rep.mismatches:
            assert row.witness_ok is True
            params = dict(row.params)
            witness = {int(x) for x in row.witness.strip("{}").split(",")}
            g = complement(cycle(params["n"]))
            assert check(g, witness, Variant(params["k"], restrained=True))
            assert len(witness) == int(row.solver)

    def test_random_cap(self):
        rep = sweep(SweepSpec("edge-bound", cap=25, seed=5))
        assert rep.tested - rep.skipped == 25

    def test_replayable(self):
        a = sweep(SweepSpec("edge-bound", cap=40, seed=11))
        b = sweep(SweepSpec("edge-bound", cap=40, seed=11))
        assert a.to_text(show_matches=True) == b.to_text(show_matches=True)
        assert a.to_csv() == b.to_csv()
        c = sweep(SweepSpec("edge-bound", cap=40, seed=12))
        assert a.to_csv() != c.to_csv()

    def test_unknown_claim(self):
        with pytest.raises(KeyError):
            sweep(SweepSpec("nope"))

    def test_limit(self):
        with pytest.raises(SizeLimitError):
            sweep(SweepSpec("complete", max_n=1000))

    def test_max_n_filters(self):
        rep = sweep(SweepSpec("complete", max_n=5))
        assert all(dict(r.params)["n"] <= 5 for r in rep.rows)

    def test_csv_shape(self):
        text = sweep(SweepSpec("cycle-complement", {"n": (4, 5)})).to_csv()
        lines = text.splitlines()
        assert lines[0] == "claim,params,formula,solver,status,witness,witness_ok"
        assert len(lines) == 3 and all(l.startswith("cycle-complement,") for l in lines[1:])

    def test_table(self):
        rep = sweep(SweepSpec("complete", {"n": (4, 5), "k": (1, 2)}))
        table = rep.to_table("n", "k")
        assert table.splitlines()[1].split() == ["4", "1", "4"]


class TestObservationChain:
    def test_c5(self):
        rep = check_observation_chain(cycle(5), 1)
        assert not rep.mismatches

    def test_k3_clause_iii(self):
        assert clauses(check_observation_chain(complete(3), 2))["iii"] is RowStatus.MATCH

    def test_k7_clause_iv(self):
        rep = check_observation_chain(complete(7), 3)
        assert clauses(rep)["iv"] is RowStatus.MATCH
        row = next(r for r in rep.rows if dict(r.params)["clause"] == "iv")
        assert "gamma_r=3" in row.solver and row.witness_ok

    def test_vacuous_clauses_skip(self):
        # gamma_r(C5) = n, so clause iv has no hypothesis
        assert clauses(check_observation_chain(cycle(5), 2))["iv"] is RowStatus.SKIPPED


class TestImplications:
    def test_k5_vacuous(self):
        reps = check_implications(graphs=[complete(5)], k_range=[2])
        assert reps["restrained-domatic-equality"].skipped == 1

    def test_corollary_k1_small(self):
        reps = check_implications("enumeration", (1,), max_n=5)
        rep = reps["restrained-domatic-equality-k1"]
        assert rep.tested > 0 and not rep.mismatches

    def test_random_replayable(self):
        a = check_implications("random", (1, 2), max_n=6, count=30, seed=4)
        b = check_implications("random", (1, 2), max_n=6, count=30, seed=4)
        assert all(a[x].to_csv() == b[x].to_csv() for x in a)

    def test_unknown_source(self):
        with pytest.raises(ValueError):
            check_implications("psychic")


def test_example48_report():
    rep = example48_report()
    status = {dict(r.params)["quantity"]: r.status for r in rep.rows}
    assert status["gamma"] is RowStatus.MATCH
    assert status["unique-min-dominating-set"] is RowStatus.MATCH
    assert status["gamma_r"] is RowStatus.MATCH
    assert status["three-disjoint-dominating-sets"] is RowStatus.MATCH
    assert status["domatic"] is RowStatus.MATCH


@pytest.mark.parametrize("g,k,expected", [
    (complete(2), 2, True),
    (complete(6), 2, True),
    (complete(4), 2, False),   # the outer K_2 has min degree 1 < k
    (complete(2), 1, False),
    (cycle(5), 1, False),
])
def test_join_shape(g, k, expected):
    assert has_join_shape(g, k) is expected
