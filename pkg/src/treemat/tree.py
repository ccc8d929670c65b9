"""Edge-weighted trees: validation, distances, degree vectors, and the
relative orientation of edge pairs.

Vertices are labelled 1..n. Edge order is construction order and fixes the
column order of the incidence matrix and the row/column order of the edge
orientation matrix; the stored (tail, head) order fixes each edge's
orientation. Weights are nonzero rationals and may be negative, so
weighted distances between distinct vertices can vanish or go negative;
that is allowed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rational import RationalMatrix, as_rational

__all__ = [
    "DegreeData",
    "Orientation",
    "OrientedEdge",
    "TreeError",
    "TreeParseError",
    "WeightedTree",
    "build_tree",
    "degree_data",
    "distances",
    "format_tree_text",
    "hop_distances",
    "orientation_relation",
    "parse_tree_file",
    "parse_tree_text",
]


class TreeError(ValueError):
    """The input does not describe a valid weighted tree."""


class TreeParseError(TreeError):
    """A tree text file is malformed; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class OrientedEdge:
    """A directed edge tail -> head with a nonzero rational weight."""

    tail: int
    head: int
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "weight", as_rational(self.weight))


@dataclass(frozen=True)
class WeightedTree:
    """A validated tree on vertices 1..n with n-1 oriented weighted edges."""

    n: int
    edges: tuple[OrientedEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise TreeError(f"vertex count must be a positive integer, got {n!r}")
        if len(self.edges) != n - 1:
            raise TreeError(f"a tree on {n} vertices needs {n - 1} edges, got {len(self.edges)}")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for e in self.edges:
            for v in (e.tail, e.head):
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise TreeError(f"vertex id {v!r} out of range 1..{n}")
            if e.tail == e.head:
                raise TreeError(f"self-loop at vertex {e.tail}")
            if e.weight == 0:
                raise TreeError(f"zero weight on edge {e.tail}-{e.head}")
            key = (e.tail, e.head) if e.tail < e.head else (e.head, e.tail)
            if key in seen:
                raise TreeError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            adj[e.tail].append(e.head)
            adj[e.head].append(e.tail)
        # n-1 distinct edges + connectivity <=> tree
        visited = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in visited:
                    visited.add(v)
                    stack.append(v)
        if len(visited) != n:
            raise TreeError("edges do not form a connected tree")

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(e.weight for e in self.edges)


def build_tree(n: int, edge_list: Iterable[tuple[int, int, int | str | Fraction]]) -> WeightedTree:
    """Validate and build a tree from raw (tail, head, weight) triples."""
    return WeightedTree(n, tuple(OrientedEdge(t, h, as_rational(w)) for t, h, w in edge_list))


def _adjacency(t: WeightedTree) -> list[list[tuple[int, Fraction]]]:
    adj: list[list[tuple[int, Fraction]]] = [[] for _ in range(t.n + 1)]
    for e in t.edges:
        adj[e.tail].append((e.head, e.weight))
        adj[e.head].append((e.tail, e.weight))
    return adj


def distances(t: WeightedTree) -> RationalMatrix:
    """The n x n matrix of weighted path sums between all vertex pairs.

    One traversal per source vertex, O(n^2) total. Symmetric with a zero
    diagonal; off-diagonal entries may be zero or negative when weights
    carry mixed signs.
    """
    n = t.n
    adj = _adjacency(t)
    zero = Fraction(0)
    rows = []
    for s in range(1, n + 1):
        dist = [zero] * (n + 1)
        seen = [False] * (n + 1)
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            du = dist[u]
            for v, w in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    dist[v] = du + w
                    stack.append(v)
        rows.append(tuple(dist[1:]))
    return RationalMatrix(rows, cols=n)


def hop_distances(t: WeightedTree) -> RationalMatrix:
    """Unweighted path lengths (edge counts) of the underlying tree."""
    n = t.n
    adj = _adjacency(t)
    rows = []
    for s in range(1, n + 1):
        hops = [0] * (n + 1)
        seen = [False] * (n + 1)
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            hu = hops[u]
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    hops[v] = hu + 1
                    stack.append(v)
        rows.append(tuple(Fraction(h) for h in hops[1:]))
    return RationalMatrix(rows, cols=n)


@dataclass(frozen=True)
class DegreeData:
    """Per-vertex degree delta_i, tau_i = 2 - delta_i, and weighted degree."""

    delta: tuple[int, ...]
    tau: tuple[int, ...]
    delta_hat: tuple[Fraction, ...]

    def degree_two_vertices(self) -> tuple[int, ...]:
        """1-based ids of vertices of degree exactly 2."""
        return tuple(i + 1 for i, d in enumerate(self.delta) if d == 2)


def degree_data(t: WeightedTree) -> DegreeData:
    delta = [0] * t.n
    delta_hat = [Fraction(0)] * t.n
    for e in t.edges:
        delta[e.tail - 1] += 1
        delta[e.head - 1] += 1
        delta_hat[e.tail - 1] += e.weight
        delta_hat[e.head - 1] += e.weight
    return DegreeData(tuple(delta), tuple(2 - d for d in delta), tuple(delta_hat))


class Orientation(enum.Enum):
    SIMILAR = "Similar"
    OPPOSITE = "Opposite"


def _similarly_oriented(hops: RationalMatrix, e: OrientedEdge, f: OrientedEdge) -> bool:
    # The relation is structural: tail-to-tail and head-to-head hop counts
    # agree exactly when the edges point the same way along their path.
    return hops[e.tail - 1, f.tail - 1] == hops[e.head - 1, f.head - 1]


def orientation_relation(t: WeightedTree, i: int, j: int) -> Orientation:
    """Whether edges i and j (0-based indices) point the same way.

    Decided on hop distances of the underlying unweighted tree, never on
    weighted distances: signed weights can make weighted path sums collide
    by accident, which would corrupt the orientation matrix. Symmetric in
    (i, j); the diagonal is not defined here (the orientation-matrix
    builder pins it to 1).
    """
    if i == j:
        raise ValueError("edge indices must be distinct; the diagonal is fixed at 1 by the matrix builder")
    edges = t.edges
    if not (0 <= i < len(edges) and 0 <= j < len(edges)):
        raise IndexError(f"edge index out of range 0..{len(edges) - 1}")
    hops = hop_distances(t)
    return Orientation.SIMILAR if _similarly_oriented(hops, edges[i], edges[j]) else Orientation.OPPOSITE


# --- tree text format ------------------------------------------------------
#
# line 1: integer n
# lines 2..n: "tail head weight", weight an integer or "p/q" with q > 0;
# '#' starts a comment, blank lines are ignored.


def parse_tree_text(text: str) -> WeightedTree:
    """Parse the tree text format; raises :class:`TreeParseError` with a line number."""
    entries: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            entries.append((lineno, content))
    if not entries:
        raise TreeParseError(1, "empty input: expected a vertex count")
    first_line, first = entries[0]
    try:
        n = int(first)
    except ValueError:
        raise TreeParseError(first_line, f"expected an integer vertex count, got {first!r}") from None
    if n < 1:
        raise TreeParseError(first_line, f"vertex count must be positive, got {n}")
    edges: list[tuple[int, int, Fraction]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, content in entries[1:]:
        if len(edges) == n - 1:
            raise TreeParseError(lineno, f"unexpected extra edge line: a tree on {n} vertices has {n - 1} edges")
        parts = content.split()
        if len(parts) != 3:
            raise TreeParseError(lineno, f"expected 'tail head weight', got {content!r}")
        try:
            tail, head = int(parts[0]), int(parts[1])
        except ValueError:
            raise TreeParseError(lineno, f"vertex ids must be integers, got {parts[0]!r} {parts[1]!r}") from None
        try:
            weight = Fraction(parts[2])
        except (ValueError, ZeroDivisionError):
            raise TreeParseError(lineno, f"invalid weight {parts[2]!r}") from None
        for v in (tail, head):
            if not 1 <= v <= n:
                raise TreeParseError(lineno, f"vertex id {v} out of range 1..{n}")
        if tail == head:
            raise TreeParseError(lineno, f"self-loop at vertex {tail}")
        if weight == 0:
            raise TreeParseError(lineno, "edge weight must be nonzero")
        key = (tail, head) if tail < head else (head, tail)
        if key in seen:
            raise TreeParseError(lineno, f"duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
        edges.append((tail, head, weight))
    if len(edges) != n - 1:
        last_line = entries[-1][0]
        raise TreeParseError(last_line, f"a tree on {n} vertices needs {n - 1} edges, found {len(edges)}")
    return build_tree(n, edges)


def parse_tree_file(path) -> WeightedTree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree_text(fh.read())


def format_tree_text(t: WeightedTree) -> str:
    """Serialize a tree to the canonical text format (round-trips exactly)."""
    lines = [str(t.n)]
    lines.extend(f"{e.tail} {e.head} {e.weight}" for e in t.edges)
    return "\n".join(lines) + "\n"
