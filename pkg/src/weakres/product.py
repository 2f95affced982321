"""The direct product K_n x K_n and shortest-path distance oracles.

Vertices of the product are 1-based coordinate pairs ``(i, j)`` with
``i, j in [n]``.  Two vertices are adjacent exactly when both coordinates
differ, so every distance between distinct vertices is 1 or 2:

* distance 1 when the vertices lie in different layers (both rows and
  columns differ),
* distance 2 when they share a row or a column.

A generic BFS-based :class:`DistanceOracle` is also provided so that the
discriminating-sum machinery and the solver can be sanity-checked on
arbitrary connected graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    DisconnectedGraphError,
    InvalidEdgeError,
    InvalidOrderError,
    InvalidVertexError,
)

# A product-graph vertex: 1-based (row, column) pair.
Vertex = tuple[int, int]


@dataclass(frozen=True)
class ProductGraph:
    """Direct product of two complete graphs of equal order ``n >= 3``.

    Immutable; safe to share across workers.
    """

    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InvalidOrderError(
                f"side length must be at least 3, got n={self.n}"
            )

    @property
    def order(self) -> int:
        return self.n * self.n

    def vertices(self) -> list[Vertex]:
        """All vertices in row-major (lexicographic) order."""
        n = self.n
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    def check_vertex(self, v: Vertex) -> None:
        i, j = v
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise InvalidVertexError(f"vertex {v} outside [{self.n}]x[{self.n}]")

    def index(self, v: Vertex) -> int:
        """Row-major 0-based index of a vertex; defines the lexicographic order."""
        self.check_vertex(v)
        return (v[0] - 1) * self.n + (v[1] - 1)

    def vertex_at(self, idx: int) -> Vertex:
        if not 0 <= idx < self.order:
            raise InvalidVertexError(f"index {idx} outside [0, {self.order})")
        return (idx // self.n + 1, idx % self.n + 1)

    def distance(self, x: Vertex, y: Vertex) -> int:
        """Hop distance: 0 iff equal, 1 iff both coordinates differ, else 2."""
        self.check_vertex(x)
        self.check_vertex(y)
        if x == y:
            return 0
        if x[0] != y[0] and x[1] != y[1]:
            return 1
        return 2

    def distance_matrix(self) -> np.ndarray:
        """Full distance matrix in row-major vertex order."""
        n = self.n
        rows = np.repeat(np.arange(n), n)
        cols = np.tile(np.arange(n), n)
        same_row = rows[:, None] == rows[None, :]
        same_col = cols[:, None] == cols[None, :]
        d = np.where(same_row | same_col, 2, 1)
        np.fill_diagonal(d, 0)
        return d

    def edge_set(self) -> list[tuple[Vertex, Vertex]]:
        """Explicit adjacency list; both coordinates must differ."""
        vs = self.vertices()
        return [
            (x, y)
            for a, x in enumerate(vs)
            for y in vs[a + 1 :]
            if x[0] != y[0] and x[1] != y[1]
        ]


def make_product(n: int) -> ProductGraph:
    """Build K_n x K_n; raises :class:`InvalidOrderError` for n < 3."""
    return ProductGraph(n)


class DistanceOracle:
    """All-pairs shortest-path distances of a connected simple graph.

    Vertices carry the caller's (hashable) labels; distances come from a
    BFS from every vertex.  Immutable after construction.
    """

    def __init__(self, labels: list, matrix: np.ndarray):
        self._labels = list(labels)
        self._index = {v: k for k, v in enumerate(self._labels)}
        self._matrix = matrix

    @property
    def order(self) -> int:
        return len(self._labels)

    def vertices(self) -> list:
        return list(self._labels)

    def check_vertex(self, v) -> None:
        if v not in self._index:
            raise InvalidVertexError(f"unknown vertex {v!r}")

    def index(self, v) -> int:
        self.check_vertex(v)
        return self._index[v]

    def distance(self, u, v) -> int:
        return int(self._matrix[self.index(u), self.index(v)])

    def distance_matrix(self) -> np.ndarray:
        return self._matrix


def load_general_graph(edges) -> DistanceOracle:
    """Build a distance oracle from an undirected edge list.

    Rejects self-loops and duplicate edges; requires connectivity.
    """
    adjacency: dict = {}
    seen: set = set()
    for u, v in edges:
        if u == v:
            raise InvalidEdgeError(f"self-loop at {u!r}")
        key = (u, v) if repr(u) <= repr(v) else (v, u)
        if key in seen:
            raise InvalidEdgeError(f"duplicate edge {u!r}-{v!r}")
        seen.add(key)
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)
    if not adjacency:
        raise InvalidEdgeError("empty edge list")

    labels = sorted(adjacency)
    index = {v: k for k, v in enumerate(labels)}
    order = len(labels)
    matrix = np.full((order, order), -1, dtype=np.int64)
    for src in labels:
        s = index[src]
        matrix[s, s] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = matrix[s, index[u]]
            for w in adjacency[u]:
                if matrix[s, index[w]] < 0:
                    matrix[s, index[w]] = du + 1
                    queue.append(w)
    if (matrix < 0).any():
        raise DisconnectedGraphError("edge list describes a disconnected graph")
    return DistanceOracle(labels, matrix)


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    """Parse the edge-list text format.

    One edge per line: two whitespace-separated 1-based vertex ids.
    Lines starting with ``#`` and blank lines are ignored.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidEdgeError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InvalidEdgeError(f"line {lineno}: non-integer vertex id in {raw!r}") from exc
        if u < 1 or v < 1:
            raise InvalidEdgeError(f"line {lineno}: vertex ids are 1-based, got {raw!r}")
        edges.append((u, v))
    return edges
