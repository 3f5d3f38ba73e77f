"""Deterministic generators for named graphs and seeded random graphs."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, is_isomorphic


class GenerationError(RuntimeError):
    """Raised when random generation cannot satisfy its degree constraints."""


def square_of_cycle(n: int) -> Graph:
    """Cycle on n vertices plus chords between vertices at distance 2."""
    if n < 5:
        raise ValueError("square of a cycle needs n >= 5")
    edges = set()
    for i in range(n):
        for d in (1, 2):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return Graph(n, edges)


def g8() -> Graph:
    """The 4-regular 8-vertex graph with a 3-vertex cutset of independent hubs.

    Layout: 0,1 an adjacent pair joined to all three hubs 2,3,4; triangle
    5,6,7; each triangle vertex joined to exactly two hubs, hubs pairwise
    non-adjacent.
    """
    a1, a2 = 0, 1
    r1, r2, r3 = 2, 3, 4
    b1, b2, b3 = 5, 6, 7
    edges = [(a1, a2)]
    edges += [(a, r) for a in (a1, a2) for r in (r1, r2, r3)]
    edges += [(b1, b2), (b1, b3), (b2, b3)]
    edges += [(r1, b2), (r1, b3), (r2, b1), (r2, b3), (r3, b1), (r3, b2)]
    return Graph(8, edges)


def h_graph(n: int) -> Graph:
    """Cycle of n six-vertex blocks; the family where the leaf bound is tight.

    Block i is a K4 on {x,y,z,v} plus two degree-3 ports: a adjacent to x,y
    and b adjacent to z,v; consecutive blocks are joined by the edge
    b_i a_{i+1} (cyclically).
    """
    if n < 2:
        raise ValueError("h_graph needs n >= 2")
    # block-local ids: x=0 y=1 z=2 v=3 a=4 b=5
    def vid(block: int, local: int) -> int:
        return 6 * block + local

    edges = []
    for i in range(n):
        x, y, z, v, a, b = (vid(i, k) for k in range(6))
        edges += [(x, y), (x, z), (x, v), (y, z), (y, v), (z, v)]
        edges += [(a, x), (a, y), (b, z), (b, v)]
        edges.append((b, vid((i + 1) % n, 4)))
    return Graph(6 * n, edges)


def random_connected(n: int, dmin: int, dmax: int, seed: int) -> Graph:
    """Seeded connected graph with all degrees in [dmin, dmax].

    Builds a random spanning tree honoring dmax, then repairs low-degree
    vertices with random augmenting edges; retries from scratch on dead
    ends and raises GenerationError when the bounds look infeasible.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if not (1 <= dmin <= dmax < n):
        raise ValueError("need 1 <= dmin <= dmax < n")
    rng = random.Random(seed)
    for _ in range(300):
        g = _try_generate(n, dmin, dmax, rng)
        if g is not None:
            return g
    raise GenerationError(f"no graph with n={n}, degrees in [{dmin},{dmax}]")


def _try_generate(n: int, dmin: int, dmax: int, rng: random.Random) -> Graph | None:
    deg = [0] * n
    adj: list[set[int]] = [set() for _ in range(n)]

    def add(u: int, v: int) -> None:
        adj[u].add(v)
        adj[v].add(u)
        deg[u] += 1
        deg[v] += 1

    order = list(range(1, n))
    rng.shuffle(order)
    for v in order:
        hosts = [u for u in range(n) if u != v and (deg[u] > 0 or u == 0) and deg[u] < dmax]
        hosts = [u for u in hosts if v not in adj[u]]
        if not hosts:
            return None
        add(rng.choice(hosts), v)

    # random augmenting edges before repair, when there is slack for them
    extra = rng.randint(0, n)
    for _ in range(extra):
        open_v = [v for v in range(n) if deg[v] < dmax]
        if len(open_v) < 2:
            break
        u, v = rng.sample(open_v, 2)
        if u != v and v not in adj[u]:
            add(u, v)

    for _ in range(4 * n + 8):
        low = [v for v in range(n) if deg[v] < dmin]
        if not low:
            break
        v = rng.choice(low)
        partners = [u for u in range(n) if u != v and u not in adj[v] and deg[u] < dmax]
        if not partners:
            return None
        needy = [u for u in partners if deg[u] < dmin]
        add(v, rng.choice(needy or partners))
    if any(deg[v] < dmin for v in range(n)):
        return None
    return Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def enumerate_regular_graphs(n: int, d: int) -> list[Graph]:
    """All connected d-regular graphs on n vertices, up to isomorphism.

    Backtracking over neighbor choices in vertex order; vertex 0's
    neighborhood is pinned to {1..d}, which every regular graph admits
    under some relabeling.  Small n only.
    """
    if n * d % 2 != 0 or d >= n:
        return []
    reps: list[Graph] = []

    def extend(v: int, adj: list[set[int]]) -> None:
        if v == n:
            g = Graph(n, [(a, b) for a in range(n) for b in adj[a] if a < b])
            if g.is_connected() and not any(is_isomorphic(g, r) for r in reps):
                reps.append(g)
            return
        need = d - len(adj[v])
        if need == 0:
            extend(v + 1, adj)
            return
        pool = [w for w in range(v + 1, n) if len(adj[w]) < d]
        if len(pool) < need:
            return
        for chosen in combinations(pool, need):
            for w in chosen:
                adj[v].add(w)
                adj[w].add(v)
            extend(v + 1, adj)
            for w in chosen:
                adj[v].remove(w)
                adj[w].remove(v)

    adj0: list[set[int]] = [set() for _ in range(n)]
    for w in range(1, d + 1):
        adj0[0].add(w)
        adj0[w].add(0)
    extend(1, adj0)
    return reps
