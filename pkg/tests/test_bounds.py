"""DL vectors, PMI sequences, the longest-PMI bound and its companions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctrlbound import (
    BoundReport,
    CapExceededError,
    DisconnectedGraphError,
    GraphValidationError,
    PMISequence,
    brute_force_delta,
    build_graph,
    delta_bound,
    dl_vectors,
    is_pmi,
    longest_pmi,
    mu_bound,
    pmi_level_sets,
    report_json,
    upsilon_count,
)
from ctrlbound.generators import GenSpec, generate
from ctrlbound.rng import spawn_rng

from helpers import (
    WORKED_LEADERS,
    WORKED_MULTISET,
    random_connected_graph,
    random_dl_rows,
    worked_graph,
)


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


class TestDLVectors:
    def test_worked_example_multiset(self):
        dl = dl_vectors(worked_graph(), WORKED_LEADERS)
        assert set(dl.rows) == WORKED_MULTISET
        assert len(dl.rows) == 6

    def test_path_single_leader_rows(self):
        dl = dl_vectors(path_graph(4), [1])
        assert dl.rows == ((0,), (1,), (2,), (3,))

    def test_all_leaders_zero_diagonal(self):
        g = random_connected_graph(11, 6)
        dl = dl_vectors(g, range(1, 7))
        for i in range(6):
            assert dl.rows[i][i] == 0

    def test_leaders_sorted_and_deduplicated(self):
        dl = dl_vectors(path_graph(4), [3, 1, 3])
        assert dl.leaders == (1, 3)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError, match="connected"):
            dl_vectors(build_graph(3, [(1, 2)]), [1])

    def test_directed_needs_strong_connectivity(self):
        g = build_graph(3, [(1, 2), (2, 3)], directed=True)
        with pytest.raises(DisconnectedGraphError, match="strong"):
            dl_vectors(g, [1])

    def test_directed_distances_point_to_leaders(self):
        g = build_graph(3, [(1, 2), (2, 3), (3, 1)], directed=True)
        dl = dl_vectors(g, [1])
        # dist(2->1) = 2 via 3, dist(3->1) = 1
        assert dl.rows == ((0,), (2,), (1,))

    def test_empty_leader_set_rejected(self):
        with pytest.raises(GraphValidationError, match="nonempty"):
            dl_vectors(path_graph(3), [])

    def test_bad_leader_id_rejected(self):
        with pytest.raises(GraphValidationError, match="outside"):
            dl_vectors(path_graph(3), [4])


class TestIsPMI:
    def test_worked_example_sequence_with_witnesses(self):
        seq = ((0, 3), (3, 0), (2, 1), (1, 2), (2, 2))
        assert is_pmi(seq, witnesses=(1, 2, 2, 1, 1))

    def test_alternative_worked_sequence(self):
        seq = ((0, 3), (1, 2), (3, 0), (2, 1), (2, 2))
        assert is_pmi(seq, witnesses=(1, 1, 2, 2, 2))

    def test_equal_first_entries_fail(self):
        assert not is_pmi(((1, 2), (1, 3)), witnesses=(1, 1))

    def test_single_vector_vacuous(self):
        assert is_pmi(((5, 5),), witnesses=(1,))
        assert is_pmi(((5, 5),))

    def test_witness_free_mode_searches_assignments(self):
        assert is_pmi(((0, 3), (3, 0), (2, 1), (1, 2), (2, 2)))
        assert not is_pmi(((1, 1), (1, 1)))

    def test_identical_vectors_never_pmi(self):
        assert not is_pmi(((2, 2), (2, 2)), witnesses=(1, 1))

    def test_dimension_mismatch_raises(self):
        with pytest.raises(ValueError, match="dimension"):
            is_pmi(((1, 2), (1,)))

    def test_witness_count_mismatch_raises(self):
        with pytest.raises(ValueError, match="one witness per element"):
            is_pmi(((1, 2), (2, 3)), witnesses=(1,))

    def test_witness_out_of_range_raises(self):
        with pytest.raises(ValueError, match="outside"):
            is_pmi(((1, 2),), witnesses=(3,))

    def test_accepts_pmi_sequence_objects(self):
        seq = PMISequence(elements=((0,), (1,)), witnesses=(1, 1))
        assert is_pmi(seq)


class TestDeltaBound:
    def test_worked_example(self):
        report = delta_bound(dl_vectors(worked_graph(), WORKED_LEADERS))
        assert report.delta == 5
        assert report.mu == 3
        assert report.upsilon == 6
        assert len(report.witness) == 5
        assert is_pmi(report.witness)

    def test_path_leaf_leader_full(self):
        report = delta_bound(dl_vectors(path_graph(4), [1]))
        assert report.delta == 4

    def test_all_leaders_totality(self):
        for seed, n in ((1, 4), (2, 5), (3, 6)):
            g = random_connected_graph(seed, n)
            assert delta_bound(dl_vectors(g, range(1, n + 1))).delta == n

    def test_cycle_two_adjacent_leaders_full(self):
        for n in range(4, 9):
            cyc = generate(GenSpec("cycle", n))
            assert delta_bound(dl_vectors(cyc, [1, 2])).delta == n

    def test_worked_example_level_sets_match_candidate_tree(self):
        dl = dl_vectors(worked_graph(), WORKED_LEADERS)
        levels = pmi_level_sets(dl)
        as_vectors = lambda level: sorted(
            sorted(dl.rows[i] for i in cand) for cand in level
        )
        assert as_vectors(levels[1]) == sorted(
            [
                sorted([(1, 2), (1, 3), (2, 1), (2, 2), (3, 0)]),
                sorted([(0, 3), (1, 2), (1, 3), (2, 1), (2, 2)]),
            ]
        )
        # the two identical coordinate-filtered children collapse into one
        assert as_vectors(levels[2]) == sorted(
            [
                sorted([(2, 1), (2, 2), (3, 0)]),
                sorted([(1, 2), (1, 3), (2, 1), (2, 2)]),
                sorted([(0, 3), (1, 2), (1, 3), (2, 2)]),
            ]
        )

    def test_witness_rows_are_distinct_nodes(self):
        report = delta_bound(dl_vectors(worked_graph(), WORKED_LEADERS))
        nodes = report.witness.nodes
        assert len(set(nodes)) == len(nodes)

    def test_duplicate_rows_cannot_both_enter_witness(self):
        rows = ((1, 1), (1, 1), (0, 2))
        seq = longest_pmi(rows)
        assert len(seq) == 2
        picked = [rows[i - 1] for i in seq.nodes]
        assert picked.count((1, 1)) <= 1

    def test_report_json_schema(self):
        g = worked_graph()
        dl = dl_vectors(g, WORKED_LEADERS)
        doc = report_json(g, dl, delta_bound(dl))
        assert list(doc) == ["n", "directed", "leaders", "delta", "mu", "upsilon", "witness"]
        assert doc["n"] == 6 and doc["leaders"] == [1, 6]
        assert list(doc["witness"]) == ["nodes", "alphas"]
        assert len(doc["witness"]["nodes"]) == doc["delta"]

    def test_chain_assertion_fires_on_bad_report(self):
        witness = PMISequence(elements=((0,),), witnesses=(1,))
        with pytest.raises(AssertionError, match="chain"):
            BoundReport(delta=1, mu=2, upsilon=3, witness=witness)


class TestMuUpsilon:
    def test_worked_example_values(self):
        dl = dl_vectors(worked_graph(), WORKED_LEADERS)
        assert mu_bound(dl) == 3
        assert upsilon_count(dl) == 6

    def test_path_leaf_leader_mu(self):
        assert mu_bound(dl_vectors(path_graph(4), [1])) == 4

    def test_all_leaders_mu_degenerates(self):
        # every node is its own nearest leader, so mu collapses to 1
        k3 = generate(GenSpec("complete", 3))
        assert mu_bound(dl_vectors(k3, [1, 2, 3])) == 1

    def test_star_center_leader_upsilon(self):
        star = generate(GenSpec("star", 4))
        assert upsilon_count(dl_vectors(star, [1])) == 2

    def test_cycle_nine_adjacent_leaders_all_rows_distinct(self):
        cyc = generate(GenSpec("cycle", 9))
        assert upsilon_count(dl_vectors(cyc, [1, 2])) == 9

    def test_single_leader_specialization(self):
        for seed in range(5):
            g = random_connected_graph(100 + seed, 7)
            dl = dl_vectors(g, [1 + seed % 7])
            report = delta_bound(dl)
            assert report.delta == report.mu == 1 + max(r[0] for r in dl.rows)


class TestBruteForce:
    def test_worked_example(self):
        assert brute_force_delta(dl_vectors(worked_graph(), WORKED_LEADERS)) == 5

    def test_identical_vectors(self):
        assert brute_force_delta(((1, 1), (1, 1))) == 1

    def test_monotone_chain(self):
        assert brute_force_delta(((0,), (1,), (2,))) == 3

    def test_cap_enforced(self):
        rows = tuple((i,) for i in range(11))
        with pytest.raises(CapExceededError, match="capped"):
            brute_force_delta(rows)
        assert brute_force_delta(rows, cap=11) == 11

    @given(st.integers(1, 6), st.integers(1, 3), st.integers(0, 100_000))
    @settings(max_examples=150, deadline=None)
    def test_oracle_equivalence_random_matrices(self, n, m, seed):
        rows = random_dl_rows(spawn_rng(seed), n, m)
        assert len(longest_pmi(rows)) == brute_force_delta(rows)

    @given(st.integers(2, 7), st.integers(0, 100_000))
    @settings(max_examples=60, deadline=None)
    def test_oracle_equivalence_real_graphs(self, n, seed):
        g = random_connected_graph(seed, n)
        rng = spawn_rng(seed, 1)
        m = int(rng.integers(1, min(3, n), endpoint=True))
        leaders = [int(x) + 1 for x in rng.choice(n, size=m, replace=False)]
        dl = dl_vectors(g, leaders)
        assert delta_bound(dl).delta == brute_force_delta(dl)


class TestProperties:
    @given(st.integers(2, 7), st.integers(0, 100_000))
    @settings(max_examples=60, deadline=None)
    def test_chain_and_witness_on_random_graphs(self, n, seed):
        g = random_connected_graph(seed, n)
        rng = spawn_rng(seed, 2)
        m = int(rng.integers(1, n, endpoint=True))
        leaders = [int(x) + 1 for x in rng.choice(n, size=m, replace=False)]
        report = delta_bound(dl_vectors(g, leaders))
        assert report.upsilon >= report.delta >= report.mu >= 1
        assert report.delta <= n
        assert is_pmi(report.witness)
        assert len(report.witness) == report.delta

    @given(st.integers(2, 7), st.integers(0, 100_000))
    @settings(max_examples=40, deadline=None)
    def test_monotone_under_leader_addition(self, n, seed):
        g = random_connected_graph(seed, n)
        rng = spawn_rng(seed, 3)
        small = sorted({int(x) + 1 for x in rng.choice(n, size=max(1, n // 3), replace=False)})
        extra = sorted(set(small) | {int(rng.integers(1, n, endpoint=True))})
        d_small = delta_bound(dl_vectors(g, small)).delta
        d_big = delta_bound(dl_vectors(g, extra)).delta
        assert d_big >= d_small
