import pytest

from conftest import brute_diss, nx_clique_number, nx_independence_number, subsets, triangle_free
from gpd import generators as gen
from gpd.derived import has_true_twins
from gpd.errors import InputError, ResourceLimitError, TimeLimitExceeded
from gpd.graph import all_pairs_distances
from gpd.solve import (
    SolverOptions,
    clique_number,
    dissociation_number,
    gp_number,
    gpd_branch_and_bound,
    gpd_bruteforce,
    gpd_greedy,
    independence_number,
    three_path_vertex_cover_number,
)
from gpd.verify import is_gdp_by_characterization, is_gdp_by_definition


def small_connected_graphs():
    graphs = [gen.path(n) for n in range(2, 8)] + [gen.cycle(n) for n in range(3, 9)]
    graphs += [gen.complete_bipartite(2, 3), gen.star_gadget(2), gen.broom_tree(3), gen.cartesian_grid(2, 4)]
    graphs += [gen.random_connected(n, p, seed) for n in (6, 8, 10) for p in (0.25, 0.45) for seed in range(4)]
    return graphs


def enumerate_gp(g, d, k):
    return max(len(s) for s in subsets(g.n) if is_gdp_by_definition(g, d, s, k))


class TestBruteForce:
    def test_path14(self):
        g = gen.path(14)
        assert gpd_bruteforce(g, None, 4).value == 6

    @pytest.mark.parametrize("k", [1, 2, 3, 9])
    def test_complete(self, k):
        rep = gpd_bruteforce(gen.complete(5), None, k)
        assert rep.value == 5 and rep.witness == (0, 1, 2, 3, 4)

    def test_c8_k4(self):
        g = gen.cycle(8)
        d = all_pairs_distances(g)
        assert enumerate_gp(g, d, 4) == 3
        assert gpd_bruteforce(g, d, 4).value == 3

    def test_matches_subset_enumeration(self):
        for g in small_connected_graphs()[:12]:
            d = all_pairs_distances(g)
            for k in range(2, d.diameter + 1):
                assert gpd_bruteforce(g, d, k).value == enumerate_gp(g, d, k)

    def test_cap(self):
        with pytest.raises(ResourceLimitError, match="branch_and_bound"):
            gpd_bruteforce(gen.path(25), None, 2)
        small = SolverOptions(bruteforce_cap=8)
        with pytest.raises(ResourceLimitError):
            gpd_bruteforce(gen.path(9), None, 2, small)
        assert gpd_bruteforce(gen.path(8), None, 2, small).value == gp_path_value(8, 2)

    def test_k1_is_everything(self):
        rep = gpd_bruteforce(gen.cycle(6), None, 1)
        assert rep.value == 6 and rep.witness == tuple(range(6))


def gp_path_value(n, k):
    from gpd.closed_forms import gp_path

    return gp_path(n, k)


class TestBranchAndBound:
    def test_sweep_against_bruteforce(self):
        for g in small_connected_graphs():
            d = all_pairs_distances(g)
            for k in range(2, d.diameter + 2):
                bf = gpd_bruteforce(g, d, k)
                bb = gpd_branch_and_bound(g, d, k)
                assert (bb.value, bb.witness) == (bf.value, bf.witness), (g, k)

    def test_clique_tail_h4(self):
        assert gpd_branch_and_bound(gen.clique_tail(4), None, 2).value == 19

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_star_gadget(self, k):
        assert gpd_branch_and_bound(gen.star_gadget(3), None, k).value == 6

    def test_witness_is_lexicographically_smallest(self):
        g = gen.cycle(6)
        d = all_pairs_distances(g)
        rep = gpd_branch_and_bound(g, d, 2)
        best = [s for s in subsets(6) if len(s) == rep.value and is_gdp_by_definition(g, d, s, 2)]
        assert list(rep.witness) == min(best)

    def test_workers_do_not_change_result(self):
        g = gen.clique_tail(4)
        d = all_pairs_distances(g)
        base = gpd_branch_and_bound(g, d, 3)
        for workers in (2, 3):
            rep = gpd_branch_and_bound(g, d, 3, SolverOptions(workers=workers, min_parallel_order=1))
            assert (rep.value, rep.witness) == (base.value, base.witness)

    def test_time_limit(self):
        g = gen.random_connected(40, 0.1, seed=5)
        with pytest.raises(TimeLimitExceeded):
            gpd_branch_and_bound(g, None, 2, SolverOptions(time_limit_ms=1))

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            gpd_branch_and_bound(gen.path(41), None, 2)


class TestGreedy:
    def test_feasible_and_bounded(self):
        for g in small_connected_graphs():
            d = all_pairs_distances(g)
            for k in range(2, d.diameter + 1):
                rep = gpd_greedy(g, d, k)
                assert is_gdp_by_definition(g, d, rep.witness, k)
                assert 2 <= rep.value <= gpd_branch_and_bound(g, d, k).value

    def test_maximal(self):
        g = gen.random_connected(10, 0.3, seed=11)
        d = all_pairs_distances(g)
        w = set(gpd_greedy(g, d, 2).witness)
        for v in set(range(g.n)) - w:
            assert not is_gdp_by_characterization(g, d, w | {v}, 2)

    def test_path14(self):
        assert 2 <= gpd_greedy(gen.path(14), None, 4).value <= 6

    def test_rejects_k1(self):
        with pytest.raises(InputError):
            gpd_greedy(gen.path(4), None, 1)


def test_dispatch():
    g = gen.path(6)
    assert gp_number(g, 2, "bnb").value == gp_number(g, 2, "bruteforce").value == 4
    with pytest.raises(InputError):
        gp_number(g, 2, "simplex")


class TestCompanions:
    def test_dissociation_examples(self):
        assert dissociation_number(gen.path(4)).value == 3
        assert dissociation_number(gen.cycle(6)).value == 4
        assert dissociation_number(gen.cartesian_grid(4, 4)).value == 8
        assert three_path_vertex_cover_number(gen.cartesian_grid(4, 4)) == 8

    def test_independence_examples(self):
        assert independence_number(gen.cycle(5)).value == 2
        assert independence_number(gen.complete_bipartite(2, 3)).value == 3
        assert independence_number(gen.cartesian_grid(4, 4)).value == 8

    def test_clique_examples(self):
        assert clique_number(gen.complete(4)).value == 4
        assert clique_number(gen.cycle(5)).value == 2
        assert clique_number(gen.clique_reduction(gen.cycle(5))).value == 22

    def test_against_independent_oracles(self):
        for g in small_connected_graphs():
            diss = dissociation_number(g)
            assert diss.value == brute_diss(g)
            inside = set(diss.witness)
            assert all(sum(1 for w in g.adjacency[v] if w in inside) <= 1 for v in inside)
            alpha = independence_number(g)
            assert alpha.value == nx_independence_number(g)
            assert not any(g.has_edge(a, b) for a in alpha.witness for b in alpha.witness)
            omega = clique_number(g)
            assert omega.value == nx_clique_number(g)
            assert all(g.has_edge(a, b) for a in omega.witness for b in omega.witness if a != b)

    def test_caps(self):
        opts = SolverOptions(bnb_cap=5)
        for fn in (dissociation_number, independence_number, clique_number):
            with pytest.raises(ResourceLimitError):
                fn(gen.path(6), opts)


class TestPaperRelations:
    def test_chain_and_witnesses(self):
        for g in small_connected_graphs():
            d = all_pairs_distances(g)
            values = []
            for k in range(2, d.diameter + 1):
                rep = gpd_branch_and_bound(g, d, k)
                assert is_gdp_by_definition(g, d, rep.witness, k)
                assert is_gdp_by_characterization(g, d, rep.witness, k)
                values.append(rep.value)
            assert values == sorted(values, reverse=True)

    def test_triangle_free_dissociation(self):
        for g in small_connected_graphs():
            if not triangle_free(g):
                continue
            d = all_pairs_distances(g)
            diss = dissociation_number(g).value
            assert gpd_branch_and_bound(g, d, 2).value == diss
            for k in range(3, d.diameter + 1):
                assert gpd_branch_and_bound(g, d, k).value <= diss

    def test_no_true_twins_independence(self):
        for g in small_connected_graphs():
            if g.n >= 3 and has_true_twins(g) is None:
                assert gpd_branch_and_bound(g, None, 2).value >= independence_number(g).value

    @pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (2, 5), (4, 6)])
    def test_complete_bipartite(self, m, n):
        g = gen.complete_bipartite(m, n)
        assert gpd_branch_and_bound(g, None, 2).value == n == independence_number(g).value
