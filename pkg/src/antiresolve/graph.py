"""Immutable undirected simple graphs on vertex ids ``0..n-1``.

Adjacency is held as one Python int per vertex, used as a bitset; most of the
enumeration code works directly on these masks.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphError

INF = math.inf


class Graph:
    """Undirected simple graph. Never mutated after construction."""

    __slots__ = ("n", "edges", "labels", "_adj", "_dist")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise GraphError(f"duplicate edge {e}")
            canon.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("labels must name every vertex")
            if len(set(labels)) != n:
                raise GraphError("vertex labels must be unique")
        self.n = n
        self.edges = frozenset(canon)
        self.labels = labels
        self._adj = tuple(adj)
        self._dist: dict[int, tuple] = {}

    # basic queries

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.labels) == (other.n, other.edges, other.labels)

    def __hash__(self):
        return hash((self.n, self.edges, self.labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def adj_mask(self, u: int) -> int:
        return self._adj[u]

    def check(self, *ids: int) -> None:
        for u in ids:
            if not (0 <= u < self.n):
                raise GraphError(f"vertex id {u} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def neighbors(self, u: int) -> list[int]:
        return mask_to_list(self._adj[u])

    def closed_neighbors(self, u: int) -> list[int]:
        return mask_to_list(self._adj[u] | 1 << u)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)

    def vertex_labels(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else tuple(str(i) for i in range(self.n))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_empty(self) -> bool:
        return self.m == 0

    def edit(self, add: Iterable[tuple[int, int]] = (),
             remove: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Return a new graph with edges added/removed (copy-on-write)."""
        edges = set(self.edges)
        for u, v in remove:
            e = (min(u, v), max(u, v))
            if e not in edges:
                raise GraphError(f"cannot remove non-edge {e}")
            edges.discard(e)
        for u, v in add:
            e = (min(u, v), max(u, v))
            if e in edges:
                raise GraphError(f"cannot add existing edge {e}")
            edges.add(e)
        return Graph(self.n, edges, self.labels)

    # distances

    def bfs(self, source: int) -> tuple:
        """Hop distances from ``source``; ``INF`` for unreachable vertices."""
        row = self._dist.get(source)
        if row is None:
            dist = [INF] * self.n
            dist[source] = 0
            queue = deque([source])
            while queue:
                x = queue.popleft()
                dx = dist[x] + 1
                nb = self._adj[x]
                while nb:
                    low = nb & -nb
                    y = low.bit_length() - 1
                    nb ^= low
                    if dist[y] == INF:
                        dist[y] = dx
                        queue.append(y)
            row = tuple(dist)
            self._dist[source] = row
        return row

    def distance_layers(self, source: int) -> list[int]:
        """Vertices grouped by distance from ``source`` as bitmasks.

        Entry ``i`` holds the vertices at distance ``i``; unreachable vertices
        form one extra trailing mask when present.
        """
        layers = []
        seen = frontier = 1 << source
        while frontier:
            layers.append(frontier)
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self._adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        rest = self.vertex_mask & ~seen
        if rest:
            layers.append(rest)
        return layers


def mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def list_to_mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def build_graph(n: int, edge_list: Iterable[tuple[int, int]],
                labels: Sequence[str] | None = None) -> Graph:
    return Graph(n, edge_list, labels)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    return Graph(g.n, [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                       if not g.has_edge(u, v)], g.labels)


def adjacency_value(g: Graph, u: int, v: int) -> int:
    """0 if u == v, 1 if adjacent, 2 otherwise (disconnected pairs included)."""
    g.check(u, v)
    if u == v:
        return 0
    return 1 if g.has_edge(u, v) else 2


def distance(g: Graph, u: int, v: int):
    g.check(u, v)
    return g.bfs(u)[v]


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``; the list maps new ids back to ids of ``g``."""
    members = sorted(set(s))
    g.check(*members)
    index = {v: i for i, v in enumerate(members)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = [g.label(v) for v in members] if g.labels is not None else None
    return Graph(len(members), edges, labels), members


@dataclass(frozen=True)
class VertexClassReport:
    isolated: frozenset
    dominant: frozenset
    min_degree: int
    max_degree: int


def classify_vertices(g: Graph) -> VertexClassReport:
    if g.n < 1:
        raise GraphError("classify_vertices needs at least one vertex")
    deg = g.degrees()
    return VertexClassReport(
        isolated=frozenset(v for v, d in enumerate(deg) if d == 0),
        dominant=frozenset(v for v, d in enumerate(deg) if d == g.n - 1),
        min_degree=min(deg),
        max_degree=max(deg),
    )
