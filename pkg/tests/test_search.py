import random
from itertools import combinations
from math import comb

import pytest

from hrcolor.checker import check_highly
from hrcolor.coloring import Multicoloring, canonical_form
from hrcolor.constructions import clique_partition
from hrcolor.graph import Graph, complete, cycle
from hrcolor.search import (
    SAT,
    UNKNOWN,
    UNSAT,
    canonical_class_sequences,
    certify_table_row,
    decide,
    exhaustive_nonexistence,
    k_lookup,
    k_table,
    min_colors,
)

from oracles import raw_search_exists


def two_k2():
    return Graph(4, [(0, 1), (2, 3)])


class TestDecide:
    def test_triangle_is_unsat(self):
        d = decide(complete(3), 1, 2, 10**6)
        assert d.outcome == UNSAT

    def test_two_k2_is_sat_with_the_expected_witness(self):
        d = decide(two_k2(), 1, 2, 10**6)
        assert d.outcome == SAT
        rep = check_highly(two_k2(), d.witness, 1)
        assert rep.highly_resistant
        expected = Multicoloring.from_sets(2, [[1], [2], [1], [2]])
        assert canonical_form(d.witness) == canonical_form(expected)

    def test_small_palette_fast_path(self):
        d = decide(cycle(4), 2, 2, 0)
        assert d.outcome == UNSAT and d.nodes_expanded == 0
        d = decide(cycle(5), 3, 3, 10)
        assert d.outcome == UNSAT and d.nodes_expanded == 0

    def test_zero_budget_is_unknown(self):
        d = decide(cycle(7), 3, 6, 0)
        assert d.outcome == UNKNOWN and d.nodes_expanded == 0

    def test_unknown_respects_budget(self):
        for budget in (1, 5, 9):
            d = decide(two_k2(), 1, 2, budget)
            if d.outcome == UNKNOWN:
                assert d.nodes_expanded <= budget
        # the sat witness needs 11 nodes, so 10 must come up short
        d = decide(two_k2(), 1, 2, 10)
        assert d.outcome == UNKNOWN and d.nodes_expanded == 10

    def test_validation(self):
        with pytest.raises(ValueError):
            decide(two_k2(), 0, 2, 10)
        with pytest.raises(ValueError):
            decide(two_k2(), 5, 6, 10)
        with pytest.raises(ValueError):
            decide(two_k2(), 1, 0, 10)
        with pytest.raises(ValueError):
            decide(two_k2(), 1, 2, -1)

    def test_sat_monotone_in_palette_size(self):
        rng = random.Random(51)
        for _ in range(30):
            n = rng.randint(2, 5)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = Graph(n, [p for p in pairs if rng.random() < 0.5])
            a = 1
            for k in (2, 3):
                if decide(g, a, k, 10**6).outcome == SAT:
                    assert decide(g, a, k + 1, 10**6).outcome == SAT


class TestCanonicalSequences:
    @pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
    def test_count_matches_multiset_coefficient(self, n, k):
        seqs = list(canonical_class_sequences(n, k))
        assert len(seqs) == comb((1 << n) + k - 1, k)
        # nondecreasing, and one representative per multiset
        assert all(all(s[i] <= s[i + 1] for i in range(k - 1)) for s in seqs)
        assert len({tuple(sorted(s)) for s in seqs}) == len(seqs)


class TestDecideAgainstRawEnumeration:
    def test_all_graphs_up_to_three_vertices(self):
        for n in (1, 2, 3):
            pairs = list(combinations(range(n), 2))
            for bits in range(1 << len(pairs)):
                edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
                g = Graph(n, edges)
                for a in range(1, min(2, n) + 1):
                    for k in (1, 2, 3):
                        got = decide(g, a, k, 10**6)
                        assert got.outcome in (SAT, UNSAT)
                        expected = raw_search_exists(n, edges, a, k)
                        assert (got.outcome == SAT) == (expected is not None)

    def test_random_five_vertex_graphs(self):
        rng = random.Random(77)
        for _ in range(10):
            n = 5
            edges = [
                (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
            ]
            g = Graph(n, edges)
            for a, k in ((1, 2), (1, 3), (2, 3)):
                got = decide(g, a, k, 10**7)
                raw = raw_search_exists(n, edges, a, k)
                assert (got.outcome == SAT) == (raw is not None)
                if got.outcome == SAT:
                    assert check_highly(g, got.witness, a).highly_resistant


class TestMinColors:
    def test_two_k2(self):
        r = min_colors(two_k2(), 1, 3)
        assert r.status == "found" and r.value == 2

    def test_three_triangles(self):
        g = clique_partition(2).graph
        r = min_colors(g, 2, 4)
        assert r.status == "found" and r.value == 3

    def test_k2_has_no_palette(self):
        r = min_colors(Graph(2, [(0, 1)]), 1, 4)
        assert r.status == "none" and r.value is None
        assert [k for k, _ in r.trail] == [2, 3, 4]

    def test_unknown_when_budget_runs_out(self):
        r = min_colors(two_k2(), 1, 3, budget=3)
        assert r.status == "unknown"


class TestExhaustiveNonexistence:
    def test_three_vertices_all_unsat(self):
        s = exhaustive_nonexistence(3, 1, 4)
        assert s.outcome == "all-unsat"
        assert s.graphs_total == 8 and s.graphs_examined == 8

    def test_two_vertices_all_unsat(self):
        s = exhaustive_nonexistence(2, 1, 3)
        assert s.outcome == "all-unsat"

    def test_four_vertices_finds_a_witness(self):
        s = exhaustive_nonexistence(4, 1, 2)
        assert s.outcome == "found-sat"
        assert s.sat_k == 2
        rep = check_highly(s.sat_graph, s.sat_witness, 1)
        assert rep.highly_resistant

    def test_bound_enforced(self):
        with pytest.raises(ValueError, match="n <= 6"):
            exhaustive_nonexistence(7, 1, 2)

    def test_k_max_validated(self):
        with pytest.raises(ValueError):
            exhaustive_nonexistence(3, 1, 1)


class TestKTable:
    def test_known_rows(self):
        row = k_lookup(3, 14)
        assert row.value == 7 and row.proven_by == ("construction",)
        row = k_lookup(3, 16)
        assert row.value == 4
        row = k_lookup(4, 20)
        assert row.infinite and row.proven_by == ("paper-citation",)
        row = k_lookup(4, 21)
        assert row.value == 10 and row.instance_name == "paper-21"
        row = k_lookup(1, 3)
        assert row.infinite
        assert set(row.proven_by) == {"exhaustive-search", "paper-citation"}
        row = k_lookup(4, 22)
        assert row.value is None and not row.infinite

    def test_max_a_filter_and_bounds(self):
        assert all(r.attackers <= 2 for r in k_table(2))
        with pytest.raises(ValueError):
            k_table(5)
        with pytest.raises(ValueError):
            k_table(0)

    def test_rows_recertify(self):
        for row in k_table(4):
            if row.instance_name == "paper-21" or row.attackers >= 4:
                continue  # certified in the acceptance suite
            assert certify_table_row(row)
