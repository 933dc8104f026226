import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nx_clique_number
from gpd import generators as gen
from gpd.derived import complement, has_true_twins, srg_clique_bound, strong_d_resolving_graph
from gpd.errors import InputError
from gpd.graph import all_pairs_distances, mutually_maximally_distant
from gpd.solve import gpd_branch_and_bound, independence_number


def srg(g, k):
    return strong_d_resolving_graph(g, all_pairs_distances(g), k)


def edge_set(g):
    return set(g.edges())


class TestStrongResolvingGraph:
    def test_p3(self):
        h = srg(gen.path(3), 2)
        assert edge_set(h) == {(0, 2)}
        assert h.degree(1) == 0

    @pytest.mark.parametrize("k", [2, 3, 10])
    def test_complete(self, k):
        assert srg(gen.complete(5), k) == gen.complete(5)

    def test_at_diameter_only_mmd_pairs(self):
        g = gen.path(5)
        d = all_pairs_distances(g)
        h = strong_d_resolving_graph(g, d, d.diameter)
        mmd = {(u, v) for u in range(5) for v in range(u + 1, 5) if mutually_maximally_distant(d, g, u, v)}
        assert edge_set(h) == mmd == {(0, 4)}

    def test_rejects_k1(self):
        g = gen.path(3)
        with pytest.raises(InputError):
            strong_d_resolving_graph(g, all_pairs_distances(g), 1)


class TestComplement:
    def test_examples(self):
        assert complement(gen.complete(5)).m == 0
        c5 = complement(gen.cycle(5))
        assert c5.m == 5 and all(c5.degree(v) == 2 for v in range(5)) and c5.is_connected()
        p4 = complement(gen.path(4))
        assert p4.m == 3 and sorted(p4.degree(v) for v in range(4)) == [1, 1, 2, 2] and p4.is_connected()

    def test_involution(self):
        g = gen.random_connected(9, 0.4, seed=2)
        assert complement(complement(g)) == g


class TestTwins:
    def test_examples(self):
        assert has_true_twins(gen.complete(3)) == (0, 1)
        assert has_true_twins(gen.path(4)) is None
        assert has_true_twins(gen.complete_bipartite(2, 3)) is None


class TestBound:
    def test_p3(self):
        g = gen.path(3)
        d = all_pairs_distances(g)
        assert srg_clique_bound(g, d, 2) == 2 == gpd_branch_and_bound(g, d, 2).value

    def test_k23(self):
        g = gen.complete_bipartite(2, 3)
        d = all_pairs_distances(g)
        assert srg_clique_bound(g, d, 2) == 3 == independence_number(g).value

    def test_matches_networkx_clique(self):
        g = gen.random_connected(10, 0.3, seed=8)
        d = all_pairs_distances(g)
        for k in range(2, d.diameter + 1):
            assert srg_clique_bound(g, d, k) == nx_clique_number(strong_d_resolving_graph(g, d, k))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 10), st.floats(0.2, 0.7), st.integers(0, 10**6))
def test_properties(n, p, seed):
    g = gen.random_connected(n, p, seed)
    d = all_pairs_distances(g)
    graphs = [strong_d_resolving_graph(g, d, k) for k in range(2, d.diameter + 2)]
    for wide, narrow in zip(graphs, graphs[1:]):
        assert edge_set(narrow) <= edge_set(wide)
    if has_true_twins(g) is None:
        assert edge_set(graphs[0]) == edge_set(complement(g))
    for k in range(2, d.diameter + 1):
        assert gpd_branch_and_bound(g, d, k).value >= srg_clique_bound(g, d, k)
