"""Discriminating sums over vertex subsets of K_n x K_n.

For vertices x, y and a probe z the discriminating power of z is
``|d(x,z) - d(y,z)|``; summing over a set S gives the quantity a weak
k-resolving set must keep at or above k for every distinct pair.

Two evaluation routes are kept deliberately independent:

* :func:`delta_set_raw` sums distances term by term and works with any
  distance oracle; it is the reference implementation.
* :func:`delta_set_fast` uses the product-specific layer-count shortcut
  (row counts a_i, column counts b_j and corner membership) and is O(1)
  per pair once the counts are maintained.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    DegenerateGraphError,
    DegeneratePairError,
    InvalidVertexError,
)
from .product import ProductGraph, Vertex

CSV_HEADER = "i,j"


class VertexSet:
    """Subset of [n] x [n] with maintained per-row and per-column counts.

    ``row_counts[r]`` is the number of members in row r+1 and
    ``col_counts[c]`` the number in column c+1; both are kept in sync by
    :meth:`add` and :meth:`discard`.  Mutation is not thread-safe; share
    only between a single writer or after construction is finished.
    """

    __slots__ = ("n", "_members", "row_counts", "col_counts")

    def __init__(self, n: int, members: Iterable[Vertex] = ()):
        if n < 3:
            raise InvalidVertexError(f"side length must be at least 3, got n={n}")
        self.n = n
        self._members: set[Vertex] = set()
        self.row_counts = [0] * n
        self.col_counts = [0] * n
        for v in members:
            self.add(v)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, ((i, j) for i in range(1, n + 1) for j in range(1, n + 1)))

    def _check(self, v: Vertex) -> None:
        i, j = v
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise InvalidVertexError(f"vertex {v} outside [{self.n}]x[{self.n}]")

    def add(self, v: Vertex) -> None:
        self._check(v)
        if v not in self._members:
            self._members.add(v)
            self.row_counts[v[0] - 1] += 1
            self.col_counts[v[1] - 1] += 1

    def discard(self, v: Vertex) -> None:
        self._check(v)
        if v in self._members:
            self._members.remove(v)
            self.row_counts[v[0] - 1] -= 1
            self.col_counts[v[1] - 1] -= 1

    def __contains__(self, v: Vertex) -> bool:
        return v in self._members

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(sorted(self._members))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self._members == other._members
        )

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, members={sorted(self._members)})"

    def copy(self) -> "VertexSet":
        return VertexSet(self.n, self._members)

    def complement(self) -> "VertexSet":
        n = self.n
        return VertexSet(
            n,
            (
                (i, j)
                for i in range(1, n + 1)
                for j in range(1, n + 1)
                if (i, j) not in self._members
            ),
        )

    def transpose(self) -> "VertexSet":
        return VertexSet(self.n, ((j, i) for (i, j) in self._members))

    def membership_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self._members:
            m[i - 1, j - 1] = 1
        return m

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(CSV_HEADER + "\n")
        for i, j in sorted(self._members):
            buf.write(f"{i},{j}\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, n: int) -> "VertexSet":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].replace(" ", "") != CSV_HEADER:
            raise InvalidVertexError(f"vertex-set CSV must start with header '{CSV_HEADER}'")
        members = []
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split(",")
            if len(parts) != 2:
                raise InvalidVertexError(f"line {lineno}: expected 'i,j', got {line!r}")
            try:
                members.append((int(parts[0]), int(parts[1])))
            except ValueError as exc:
                raise InvalidVertexError(f"line {lineno}: non-integer coordinate in {line!r}") from exc
        return cls(n, members)


@dataclass(frozen=True)
class DeltaWitness:
    """A vertex pair together with its discriminating sum."""

    x: Vertex
    y: Vertex
    value: int


def delta_single(oracle, z: Vertex, x: Vertex, y: Vertex) -> int:
    """|d(x,z) - d(y,z)| for a single probe vertex z."""
    return abs(oracle.distance(x, z) - oracle.distance(y, z))


def delta_set_raw(oracle, members: Iterable[Vertex], x: Vertex, y: Vertex) -> int:
    """Term-by-term discriminating sum; the independent reference route."""
    return sum(delta_single(oracle, z, x, y) for z in members)


def delta_set_fast(g: ProductGraph, s: VertexSet, x: Vertex, y: Vertex) -> int:
    """Layer-count shortcut for the discriminating sum on K_n x K_n.

    Sharing a column: a_i + a_i' + |{x,y} n S|.
    Sharing a row:    b_j + b_j' + |{x,y} n S|.
    Different layers: a_i + a_i' + b_j + b_j' - |{x,y} n S|
                      - 2 |{(i',j), (i,j')} n S|.
    """
    if s.n != g.n:
        raise InvalidVertexError(f"set built for n={s.n}, graph has n={g.n}")
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise DegeneratePairError(f"pair must be distinct, got {x} twice")
    i, j = x
    ip, jp = y
    endpoints = (x in s) + (y in s)
    if j == jp:  # same column: only row counts discriminate
        return s.row_counts[i - 1] + s.row_counts[ip - 1] + endpoints
    if i == ip:  # same row: only column counts discriminate
        return s.col_counts[j - 1] + s.col_counts[jp - 1] + endpoints
    corners = ((ip, j) in s) + ((i, jp) in s)
    return (
        s.row_counts[i - 1]
        + s.row_counts[ip - 1]
        + s.col_counts[j - 1]
        + s.col_counts[jp - 1]
        - endpoints
        - 2 * corners
    )


def _delta_pair_matrix(g: ProductGraph, s: VertexSet) -> np.ndarray:
    """Discriminating sums for every ordered vertex pair, vectorized.

    Entry [x, y] (row-major vertex indices) is the pair's sum; the
    diagonal is meaningless and left at a large sentinel by callers.
    """
    n = g.n
    m = s.membership_matrix()
    a = np.asarray(s.row_counts, dtype=np.int64)
    b = np.asarray(s.col_counts, dtype=np.int64)
    rows = np.repeat(np.arange(n), n)
    cols = np.tile(np.arange(n), n)
    mflat = m.reshape(-1)

    asum = a[rows][:, None] + a[rows][None, :]
    bsum = b[cols][:, None] + b[cols][None, :]
    msum = mflat[:, None] + mflat[None, :]
    # corner membership for different-layer pairs: (row of y, col of x) and
    # (row of x, col of y)
    corner = m[rows][:, cols]  # corner[x, y] = m[row_x, col_y]
    corner_sum = corner + corner.T

    same_row = rows[:, None] == rows[None, :]
    same_col = cols[:, None] == cols[None, :]
    values = asum + bsum - msum - 2 * corner_sum
    values = np.where(same_col & ~same_row, asum + msum, values)
    values = np.where(same_row & ~same_col, bsum + msum, values)
    return values


def min_delta(g: ProductGraph, s: VertexSet) -> DeltaWitness:
    """Minimum discriminating sum over all distinct pairs.

    Ties break lexicographically on the (x, y) pair so the witness is
    deterministic.
    """
    if s.n != g.n:
        raise InvalidVertexError(f"set built for n={s.n}, graph has n={g.n}")
    order = g.order
    values = _delta_pair_matrix(g, s)
    big = np.iinfo(np.int64).max
    masked = np.where(np.triu(np.ones((order, order), dtype=bool), k=1), values, big)
    flat = int(np.argmin(masked))  # first occurrence = lexicographic tie-break
    x_idx, y_idx = divmod(flat, order)
    return DeltaWitness(
        x=g.vertex_at(x_idx),
        y=g.vertex_at(y_idx),
        value=int(masked[x_idx, y_idx]),
    )


def is_weak_k_resolving(
    g: ProductGraph, s: VertexSet, k: int
) -> tuple[bool, DeltaWitness]:
    """Whether every distinct pair reaches a discriminating sum of k.

    Returns the verdict plus the certifying minimum pair either way.
    """
    if k < 1:
        raise InvalidVertexError(f"threshold k must be >= 1, got {k}")
    witness = min_delta(g, s)
    return witness.value >= k, witness


def compute_kappa(oracle) -> int:
    """Largest k admitting a weak k-resolving set: the minimum, over all
    distinct pairs, of the full-vertex-set discriminating sum.

    Brute force over pairs from the distance matrix; works for the
    product graph and for general oracles alike.
    """
    if oracle.order < 2:
        raise DegenerateGraphError("kappa needs at least 2 vertices")
    d = oracle.distance_matrix()
    best = None
    for x in range(oracle.order - 1):
        row_min = int(np.abs(d[x + 1 :] - d[x]).sum(axis=1).min())
        if best is None or row_min < best:
            best = row_min
    return best
