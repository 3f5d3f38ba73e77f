"""Exact maximum-leaf counts for small graphs, plus exclusion recognition.

For connected graphs on n >= 3 vertices the maximum number of spanning-tree
leaves equals n minus the size of a minimum connected dominating set, so the
oracle searches vertex subsets.  Two interchangeable search backends exist:

* a numba @njit kernel scanning all bitmasks with best-size pruning (the
  default when numba is importable), and
* a pure-Python ascending-cardinality scan over itertools.combinations.

Set LEAFSPAN_BACKEND=python (or numba) to force one; see
benchmarks/bench_oracle.py for a timing comparison.  Both are exact and are
cross-checked in the test suite.
"""

from __future__ import annotations

import os
from enum import Enum
from itertools import combinations

import numpy as np

from . import families
from .graph import Graph, is_isomorphic

ORACLE_MAX_N = 16

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is present in normal installs
    HAVE_NUMBA = False


class OracleBudgetError(ValueError):
    """Graph too large for exact search; never silently approximated."""


class ExclusionKind(Enum):
    C6sq = "C6sq"
    C8sq = "C8sq"
    G8 = "G8"


def backend_name(override: str | None = None) -> str:
    choice = override or os.environ.get("LEAFSPAN_BACKEND", "auto")
    if choice not in ("auto", "numba", "python"):
        raise ValueError(f"unknown backend {choice!r}")
    if choice == "auto":
        return "numba" if HAVE_NUMBA else "python"
    if choice == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return choice


def adjacency_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _is_connected_mask(mask: int, adj: list[int]) -> bool:
    reached = mask & (-mask)
    while True:
        grown = reached
        rest = reached
        while rest:
            low = rest & (-rest)
            grown |= adj[low.bit_length() - 1] & mask
            rest ^= low
        if grown == reached:
            return reached == mask
        reached = grown


def _min_cds_py(g: Graph) -> list[int]:
    """Lexicographically first minimum connected dominating set.

    Ascending-cardinality subset search: combinations() yields size-k
    subsets in lexicographic order, so the first hit is the tie-break
    winner.
    """
    n = g.n
    adj = adjacency_masks(g)
    closed = [adj[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            cover = 0
            mask = 0
            for v in subset:
                cover |= closed[v]
                mask |= 1 << v
            if cover != full:
                continue
            if _is_connected_mask(mask, adj):
                return list(subset)
    raise AssertionError("connected graph must have a connected dominating set")


if HAVE_NUMBA:

    @njit(cache=True)
    def _min_cds_size_kernel(adj: np.ndarray, closed: np.ndarray, n: int) -> int:  # pragma: no cover - jitted
        full = (np.int64(1) << n) - 1
        best = n
        for mask in range(1, 1 << n):
            m = np.int64(mask)
            pc = 0
            t = m
            while t:
                pc += 1
                t &= t - 1
            if pc >= best:
                continue
            cover = np.int64(0)
            for v in range(n):
                if (m >> v) & 1:
                    cover |= closed[v]
            if cover != full:
                continue
            reached = m & (-m)
            changed = True
            while changed:
                changed = False
                for v in range(n):
                    if (reached >> v) & 1:
                        grown = reached | (adj[v] & m)
                        if grown != reached:
                            reached = grown
                            changed = True
            if reached == m:
                best = pc
        return best


def _min_cds_size(g: Graph, backend: str) -> int:
    if backend == "numba":
        adj = np.array(adjacency_masks(g), dtype=np.int64)
        closed = np.array([adj[v] | (1 << v) for v in range(g.n)], dtype=np.int64)
        return int(_min_cds_size_kernel(adj, closed, g.n))
    return len(_min_cds_py(g))


def _require_small(g: Graph) -> None:
    if g.n > ORACLE_MAX_N:
        raise OracleBudgetError(
            f"exact search limited to n <= {ORACLE_MAX_N}, got n = {g.n}"
        )


def min_cds(g: Graph, backend: str | None = None) -> list[int]:
    """Minimum connected dominating set, lexicographically smallest on ties."""
    _require_small(g)
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n < 3:
        raise ValueError("connected dominating set duality needs n >= 3")
    which = backend_name(backend)
    if which == "python":
        return _min_cds_py(g)
    k = _min_cds_size(g, "numba")
    adj = adjacency_masks(g)
    closed = [adj[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for subset in combinations(range(g.n), k):
        cover = 0
        mask = 0
        for v in subset:
            cover |= closed[v]
            mask |= 1 << v
        if cover == full and _is_connected_mask(mask, adj):
            return list(subset)
    raise AssertionError("kernel size has no witness; backend disagreement")


def exact_u(g: Graph, backend: str | None = None) -> int:
    """Maximum number of leaves over all spanning trees of g (exact)."""
    _require_small(g)
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n < 2:
        raise ValueError("need at least two vertices")
    if g.n == 2:
        return 2
    return g.n - _min_cds_size(g, backend_name(backend))


def tree_from_cds(g: Graph, dom: list[int]) -> list[int]:
    """Spanning tree (parent array, root parent -1) with internal set <= dom.

    BFS inside the dominating set from its smallest member, then every
    remaining vertex hangs off its smallest dominating neighbor.
    """
    dset = set(dom)
    parents = [-2] * g.n
    root = min(dset)
    parents[root] = -1
    queue = [root]
    seen = {root}
    while queue:
        v = queue.pop(0)
        for w in sorted(g.adj[v]):
            if w in dset and w not in seen:
                seen.add(w)
                parents[w] = v
                queue.append(w)
    if seen != dset:
        raise ValueError("dominating set is not connected")
    for v in range(g.n):
        if v in dset:
            continue
        host = min(w for w in g.adj[v] if w in dset)
        parents[v] = host
    return parents


def max_leaf_tree(g: Graph, backend: str | None = None) -> list[int]:
    """A spanning tree attaining exact_u(g), as a parent array."""
    _require_small(g)
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n == 2:
        return [-1, 0]
    return tree_from_cds(g, min_cds(g, backend))


_EXCLUSION_FIXTURES: list[tuple[ExclusionKind, Graph]] | None = None


def _fixtures() -> list[tuple[ExclusionKind, Graph]]:
    global _EXCLUSION_FIXTURES
    if _EXCLUSION_FIXTURES is None:
        _EXCLUSION_FIXTURES = [
            (ExclusionKind.C6sq, families.square_of_cycle(6)),
            (ExclusionKind.C8sq, families.square_of_cycle(8)),
            (ExclusionKind.G8, families.g8()),
        ]
    return _EXCLUSION_FIXTURES


def classify_exclusion(g: Graph) -> ExclusionKind | None:
    """Which of the three bound exclusions g is, if any."""
    if g.n not in (6, 8):
        return None
    if any(g.degree(v) != 4 for v in range(g.n)):
        return None
    for kind, fixture in _fixtures():
        if g.n == fixture.n and is_isomorphic(g, fixture):
            return kind
    return None
