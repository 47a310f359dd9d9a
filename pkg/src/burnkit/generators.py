"""Deterministic graph generators used by tests and the CLI.

Random generation is seeded; identical seeds yield identical graphs.
"""

from __future__ import annotations

import random

from .graph import Graph, is_connected


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    labels = [f"v{i}" for i in range(1, n + 1)]
    return Graph(zip(labels, labels[1:]), vertices=labels)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    labels = [f"v{i}" for i in range(1, n + 1)]
    edges = list(zip(labels, labels[1:])) + [(labels[-1], labels[0])]
    return Graph(edges)


def complete_graph(n: int) -> Graph:
    labels = [f"v{i}" for i in range(1, n + 1)]
    edges = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    return Graph(edges, vertices=labels)


def star_graph(leaves: int) -> Graph:
    center = "v0"
    return Graph((center, f"v{i}") for i in range(1, leaves + 1))


def complete_bipartite(a: int, b: int) -> Graph:
    left = [f"a{i}" for i in range(1, a + 1)]
    right = [f"b{i}" for i in range(1, b + 1)]
    return Graph((u, v) for u in left for v in right)


def prism_graph() -> Graph:
    """Triangular prism: two triangles joined by a perfect matching."""
    edges = [
        ("a1", "a2"), ("a2", "a3"), ("a1", "a3"),
        ("b1", "b2"), ("b2", "b3"), ("b1", "b3"),
        ("a1", "b1"), ("a2", "b2"), ("a3", "b3"),
    ]
    return Graph(edges)


def random_cubic(n: int, seed: int) -> Graph:
    """Random connected cubic graph on ``n`` vertices (n even, n >= 4).

    Pairing-model sampling with rejection of loops, parallel edges, and
    disconnected outcomes.
    """
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need even n >= 4")
    rng = random.Random(seed)
    labels = [f"v{i}" for i in range(1, n + 1)]
    while True:
        stubs = [i for i in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = {(min(a, b), max(a, b)) for a, b in zip(stubs[::2], stubs[1::2])}
        if any(a == b for a, b in pairs) or len(pairs) != 3 * n // 2:
            continue
        g = Graph((labels[a], labels[b]) for a, b in pairs)
        if is_connected(g):
            return g


def random_connected_graph(n: int, seed: int, extra_edge_prob: float = 0.3) -> Graph:
    """Random connected graph: a random spanning tree plus extra edges."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    labels = [f"v{i}" for i in range(1, n + 1)]
    edges: set[tuple[str, str]] = set()
    order = labels[:]
    rng.shuffle(order)
    for i in range(1, n):
        anchor = order[rng.randrange(i)]
        u, v = sorted((order[i], anchor))
        edges.add((u, v))
    for i in range(n):
        for j in range(i + 1, n):
            pair = tuple(sorted((labels[i], labels[j])))
            if pair not in edges and rng.random() < extra_edge_prob:
                edges.add(pair)
    return Graph(sorted(edges), vertices=labels)
