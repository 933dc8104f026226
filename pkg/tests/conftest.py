from itertools import combinations

import networkx as nx
import pytest

from gpd import generators as gen
from gpd.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_distances(g: Graph):
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    return [[lengths[u][v] for v in range(g.n)] for u in range(g.n)]


def subsets(n):
    for mask in range(1 << n):
        yield [v for v in range(n) if (mask >> v) & 1]


def brute_diss(g: Graph) -> int:
    best = 0
    for s in subsets(g.n):
        inside = set(s)
        if all(sum(1 for w in g.adjacency[v] if w in inside) <= 1 for v in s):
            best = max(best, len(s))
    return best


def nx_clique_number(g: Graph) -> int:
    return max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)


def nx_independence_number(g: Graph) -> int:
    return nx_clique_number_of(nx.complement(to_nx(g)))


def nx_clique_number_of(h: nx.Graph) -> int:
    return max((len(c) for c in nx.find_cliques(h)), default=0)


def triangle_free(g: Graph) -> bool:
    return not any(g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c) for a, b, c in combinations(range(g.n), 3))


def corpus():
    """Named connected graphs shared by the chain and diameter-bound checks."""
    items = []
    items += [(f"P{n}", gen.path(n)) for n in range(3, 11)]
    items += [(f"C{n}", gen.cycle(n)) for n in range(3, 11)]
    items += [(f"K{n}", gen.complete(n)) for n in (2, 4)]
    items += [("K2,3", gen.complete_bipartite(2, 3)), ("K3,3", gen.complete_bipartite(3, 3))]
    items += [(f"grid{r}x{s}", gen.cartesian_grid(r, s)) for r, s in ((2, 3), (3, 3), (3, 4))]
    items += [(f"star{n}", gen.star_gadget(n)) for n in (2, 3)]
    items += [(f"broom{r}", gen.broom_tree(r)) for r in (2, 3, 4)]
    items += [(f"H{t}", gen.clique_tail(t)) for t in (3, 4)]
    items += [(f"rand{i}", gen.random_connected(9 + i % 4, 0.25 + 0.05 * (i % 5), seed=100 + i)) for i in range(12)]
    return items


@pytest.fixture(scope="session")
def graph_corpus():
    return corpus()
