"""Exhaustive checks over every labelled graph of a given order, batched with numpy.

Graphs are held as an ``(count, n)`` array of adjacency bitmasks so one
subset can be tested against all graphs at once.
"""

import itertools

import numpy as np
import pytest

from krdom.graph import Graph
from krdom.predicates import Variant, check

POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def all_adjacency(n: int) -> np.ndarray:
    pairs = list(itertools.combinations(range(n), 2))
    codes = np.arange(1 << len(pairs), dtype=np.uint32)
    adj = np.zeros((codes.size, n), dtype=np.uint8)
    for i, (u, v) in enumerate(pairs):
        bit = ((codes >> i) & 1).astype(np.uint8)
        adj[:, u] |= bit << v
        adj[:, v] |= bit << u
    return adj


def bipartite_adjacency(a: int, b: int) -> np.ndarray:
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    codes = np.arange(1 << len(pairs), dtype=np.uint32)
    adj = np.zeros((codes.size, a + b), dtype=np.uint8)
    for i, (u, v) in enumerate(pairs):
        bit = ((codes >> i) & 1).astype(np.uint8)
        adj[:, u] |= bit << v
        adj[:, v] |= bit << u
    return adj


def restrained_valid(adj: np.ndarray, s: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-graph kRDS verdict for subset ``s`` and per-vertex inside counts."""
    n = adj.shape[1]
    full = (1 << n) - 1
    inside = POP[adj & s]
    outside = POP[adj & (full & ~s)]
    member = np.array([(s >> v) & 1 for v in range(n)], dtype=np.uint8)
    closed = inside + member
    ok_vertex = (closed >= k) & ((member == 1) | (outside >= k))
    return ok_vertex.all(axis=1), inside


def to_graph(row: np.ndarray) -> Graph:
    return Graph(len(row), tuple(int(x) for x in row))


def test_batch_predicate_agrees_with_scalar():
    adj = all_adjacency(4)
    for s in range(16):
        for k in (1, 2):
            valid, _ = restrained_valid(adj, s, k)
            for i in range(0, adj.shape[0], 7):
                assert valid[i] == check(to_graph(adj[i]), s, Variant(k, restrained=True)).holds


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("k", (1, 2, 3))
def test_low_degree_vertices_in_every_krds(n, k):
    adj = all_adjacency(n)
    degree = POP[adj]
    low = degree <= 2 * k - 1
    for s in range(1 << n):
        valid, inside = restrained_valid(adj, s, k)
        if not valid.any():
            continue
        member = np.array([(s >> v) & 1 for v in range(n)], dtype=bool)
        bad = low & (~member | (inside < k - 1))
        offending = valid & bad.any(axis=1)
        assert not offending.any(), (s, to_graph(adj[np.argmax(offending)]))


@pytest.mark.parametrize("k", (2, 3))
def test_bipartite_minimum_only_on_kk(k):
    """gamma = 2k-2 on a bipartite graph with min degree >= k-1 only for K_{k-1,k-1}."""
    target = 2 * k - 2
    hits = []
    for total in range(2, 9):
        for a in range(1, total // 2 + 1):
            b = total - a
            adj = bipartite_adjacency(a, b)
            feasible = (POP[adj] >= k - 1).all(axis=1)
            small = np.zeros(adj.shape[0], dtype=bool)
            for size in range(1, min(target, total) + 1):
                for combo in itertools.combinations(range(total), size):
                    s = sum(1 << v for v in combo)
                    valid, _ = restrained_valid(adj, s, k)
                    small |= valid
            for i in np.flatnonzero(feasible & small):
                g = to_graph(adj[i])
                hits.append((a, b, g.m))
    assert hits, "K_{k-1,k-1} itself should reach the bound"
    assert set(hits) == {(k - 1, k - 1, (k - 1) ** 2)}
