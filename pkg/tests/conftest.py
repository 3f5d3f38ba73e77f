from __future__ import annotations

import random

import pytest

from leafspan import Graph, GenerationError, random_connected
from leafspan.builder import PartialTree


def make_state(n, edges, tree_edges, root=0) -> tuple[Graph, PartialTree]:
    """Graph plus a partial tree assembled from the given tree edges."""
    g = Graph(n, edges)
    f = PartialTree(g, root)
    remaining = [tuple(e) for e in tree_edges]
    while remaining:
        progressed = False
        for e in list(remaining):
            u, v = e
            if u in f.vertices and v in f.outside:
                f.attach(u, v)
            elif v in f.vertices and u in f.outside:
                f.attach(v, u)
            else:
                continue
            remaining.remove(e)
            progressed = True
        if not progressed:
            raise ValueError("tree edges do not connect to the root")
    f.sweep_dead()
    return g, f


def random_graph_pool(count, sizes=(3, 12), seed=20240601):
    """Deterministic pool of connected graphs over mixed degree regimes."""
    rng = random.Random(seed)
    pool = []
    attempts = 0
    while len(pool) < count and attempts < 50 * count:
        attempts += 1
        n = rng.randint(*sizes)
        regimes = [(1, n - 1), (2, n - 1)]
        if n >= 4:
            regimes += [(3, n - 1), (2, 3)]
        if n >= 5:
            regimes.append((3, 4))
        dmin, dmax = rng.choice(regimes)
        try:
            pool.append(random_connected(n, dmin, dmax, rng.randrange(1 << 30)))
        except GenerationError:
            continue
    return pool


def random_spanning_tree(g: Graph, seed: int):
    """Independent spanning-tree sampler (randomized Kruskal)."""
    rng = random.Random(seed)
    edges = list(g.edges())
    rng.shuffle(edges)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = set()
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.add((u, v) if u < v else (v, u))
    return chosen


@pytest.fixture(scope="session")
def graph_pool():
    return random_graph_pool(150)
