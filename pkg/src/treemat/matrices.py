"""Builders for every matrix attached to a weighted tree.

For a tree on n vertices with edges e_1..e_{n-1} of weights w_1..w_{n-1}:

* ``D``     n x n weighted distance matrix,
* ``Delta`` its entrywise (Hadamard) square,
* ``L``     the weighted Laplacian: off-diagonal -1/w_k for the endpoints
  of e_k, diagonals chosen so every row sums to zero,
* ``Q``     n x (n-1) oriented incidence matrix (+1 at the tail, -1 at the
  head of each edge column),
* ``F``     (n-1) x (n-1) diagonal matrix of edge weights,
* ``H``     (n-1) x (n-1) symmetric edge orientation matrix: unit
  diagonal, +1/-1 off the diagonal for similarly/oppositely oriented
  edge pairs,
* ``tau_tilde`` = diag(tau_i) and ``tau_hat`` = diag(1/tau_i), the latter
  only when no vertex has degree 2 (tau_i = 2 - degree_i).

The same stored orientation feeds both Q and H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import RationalMatrix, hadamard
from .tree import (
    DegreeData,
    WeightedTree,
    _similarly_oriented,
    degree_data,
    distances,
    hop_distances,
)

__all__ = [
    "TreeMatrixBundle",
    "build_bundle",
    "build_edge_orientation",
    "build_incidence",
]


@dataclass(frozen=True)
class TreeMatrixBundle:
    """All derived matrices of one tree, plus the tau and weighted-degree vectors.

    ``tau`` and ``delta_hat`` are n x 1 column matrices; ``tau_hat`` is
    ``None`` exactly when some vertex has degree 2 (then some tau_i = 0
    and its reciprocal does not exist; a legitimate input, not an error).
    """

    tree: WeightedTree
    D: RationalMatrix
    Delta: RationalMatrix
    L: RationalMatrix
    Q: RationalMatrix
    F: RationalMatrix
    H: RationalMatrix
    tau_tilde: RationalMatrix
    tau_hat: RationalMatrix | None
    tau: RationalMatrix
    delta_hat: RationalMatrix
    degrees: DegreeData


def build_incidence(t: WeightedTree) -> RationalMatrix:
    """The oriented vertex-edge incidence matrix Q (columns sum to zero)."""
    n = t.n
    zero, one = Fraction(0), Fraction(1)
    cols = len(t.edges)
    rows = [[zero] * cols for _ in range(n)]
    for j, e in enumerate(t.edges):
        rows[e.tail - 1][j] = one
        rows[e.head - 1][j] = -one
    return RationalMatrix(rows, cols=cols)


def build_edge_orientation(t: WeightedTree) -> RationalMatrix:
    """The symmetric +/-1 edge orientation matrix H with unit diagonal."""
    edges = t.edges
    m = len(edges)
    hops = hop_distances(t)
    one = Fraction(1)
    rows = [[one] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            val = one if _similarly_oriented(hops, edges[i], edges[j]) else -one
            rows[i][j] = val
            rows[j][i] = val
    return RationalMatrix(rows, cols=m)


def _build_laplacian(t: WeightedTree) -> RationalMatrix:
    n = t.n
    zero = Fraction(0)
    rows = [[zero] * n for _ in range(n)]
    for e in t.edges:
        i, j = e.tail - 1, e.head - 1
        rows[i][j] -= 1 / e.weight
        rows[j][i] -= 1 / e.weight
    for i in range(n):
        rows[i][i] = -sum(rows[i][j] for j in range(n) if j != i)
    return RationalMatrix(rows, cols=n)


def build_bundle(t: WeightedTree) -> TreeMatrixBundle:
    """Build every matrix for ``t`` in one pass.

    A single-vertex tree yields the obvious degenerate shapes (1x1 zero
    matrices, a 1x0 incidence matrix and 0x0 F and H).
    """
    d = distances(t)
    dd = degree_data(t)
    tau_hat = None
    if 0 not in dd.tau:
        tau_hat = RationalMatrix.diagonal([Fraction(1, x) for x in dd.tau])
    return TreeMatrixBundle(
        tree=t,
        D=d,
        Delta=hadamard(d, d),
        L=_build_laplacian(t),
        Q=build_incidence(t),
        F=RationalMatrix.diagonal(t.weights),
        H=build_edge_orientation(t),
        tau_tilde=RationalMatrix.diagonal(dd.tau),
        tau_hat=tau_hat,
        tau=RationalMatrix.column(dd.tau),
        delta_hat=RationalMatrix.column(dd.delta_hat),
        degrees=dd,
    )
