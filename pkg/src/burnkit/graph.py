"""Labeled simple undirected graphs with BFS, structural predicates, and edge-list I/O.

Vertices are string labels.  Graphs are immutable after construction, so every
read operation is safe to call concurrently.  All iteration orders are
canonical (lexicographic on labels) to keep downstream output diffable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(Exception):
    """Base class for graph construction and I/O errors."""


class UnknownVertexError(GraphError):
    """A vertex label is not present in the graph."""


class GraphFormatError(GraphError):
    """Edge-list text is malformed (bad line, self-loop, duplicate edge)."""


class _IndexedView:
    """Integer-indexed adjacency snapshot used by BFS-heavy code paths.

    Label-keyed dicts are convenient but slow for repeated traversals on
    large graphs; this view is built once per graph (lazily) and reused.
    """

    __slots__ = ("labels", "index", "adj")

    def __init__(self, g: "Graph"):
        self.labels: list[str] = list(g.vertices)
        self.index: dict[str, int] = {v: i for i, v in enumerate(self.labels)}
        self.adj: list[list[int]] = [
            [self.index[w] for w in g.neighbors(v)] for v in self.labels
        ]

    def bfs(self, src: int) -> list[int]:
        """Hop distances from ``src``; -1 marks unreachable vertices."""
        dist = [-1] * len(self.labels)
        dist[src] = 0
        queue = deque((src,))
        adj = self.adj
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
        return dist


class Graph:
    """Immutable simple undirected graph over string-labeled vertices.

    Invariants enforced at construction: no self-loops, no parallel edges,
    symmetric adjacency, sorted neighbor lists.
    """

    __slots__ = ("_adj", "_vertices", "_edge_count", "_view")

    def __init__(self, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()):
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        n_edges = 0
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at {u!r}")
            if u in adj and v in adj[u]:
                raise GraphFormatError(f"duplicate edge {u!r} {v!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
            n_edges += 1
        self._adj: dict[str, tuple[str, ...]] = {
            v: tuple(sorted(adj[v])) for v in sorted(adj)
        }
        self._vertices: tuple[str, ...] = tuple(self._adj)
        self._edge_count = n_edges
        self._view: _IndexedView | None = None

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __contains__(self, v: str) -> bool:
        return v in self._adj

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> Iterator[tuple[str, str]]:
        """Edges in canonical order: smaller endpoint first, sorted."""
        for u in self._vertices:
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def indexed(self) -> _IndexedView:
        if self._view is None:
            self._view = _IndexedView(self)
        return self._view

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


@dataclass(frozen=True)
class DistanceMap:
    """BFS hop distances from ``source``; vertices absent from ``dist`` are unreachable."""

    source: str
    dist: dict[str, int]

    def __getitem__(self, v: str) -> int:
        return self.dist[v]

    def get(self, v: str, default: int | None = None) -> int | None:
        return self.dist.get(v, default)


def bfs_distances(g: Graph, src: str) -> DistanceMap:
    """Exact hop distances from ``src`` to every reachable vertex."""
    if src not in g:
        raise UnknownVertexError(f"unknown vertex {src!r}")
    view = g.indexed()
    raw = view.bfs(view.index[src])
    dist = {view.labels[i]: d for i, d in enumerate(raw) if d >= 0}
    return DistanceMap(source=src, dist=dist)


def eccentricity(g: Graph, src: str) -> int:
    """Maximum BFS distance from ``src``; raises if the graph is disconnected."""
    dm = bfs_distances(g, src)
    if len(dm.dist) != g.vertex_count:
        raise GraphError("eccentricity undefined on a disconnected graph")
    return max(dm.dist.values())


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    view = g.indexed()
    return all(d >= 0 for d in view.bfs(0))


def degree_histogram(g: Graph) -> dict[int, int]:
    hist: dict[int, int] = {}
    for v in g.vertices:
        d = g.degree(v)
        hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))


def is_regular(g: Graph, d: int) -> bool:
    return all(g.degree(v) == d for v in g.vertices)


def _check_label(label: str) -> str:
    if not label or label.startswith("#") or any(c.isspace() for c in label):
        raise GraphFormatError(f"label not representable in edge-list format: {label!r}")
    return label


def read_graph(text: str) -> Graph:
    """Parse edge-list text: one edge per line, two whitespace-separated labels.

    Lines starting with '#' are comments; blank lines are skipped.  The vertex
    set is the union of the endpoints.
    """
    edges: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two labels, got {stripped!r}")
        u, v = parts
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u!r}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u!r} {v!r}")
        seen.add(key)
        edges.append((u, v))
    return Graph(edges)


def write_graph(g: Graph) -> str:
    """Canonical edge-list text: edges sorted, smaller endpoint first."""
    lines = []
    for u, v in g.edges():
        lines.append(f"{_check_label(u)} {_check_label(v)}")
    for v in g.vertices:
        if g.degree(v) == 0:
            raise GraphFormatError(
                f"isolated vertex {v!r} cannot be represented in edge-list format"
            )
    return "\n".join(lines) + ("\n" if lines else "")
