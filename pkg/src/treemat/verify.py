"""Random weighted trees and the exact differential test battery.

:func:`generate_tree` draws reproducible random trees (uniform labelled
trees via Prüfer sequences, or fixed shapes) with weights from a signed
rational pool. :func:`run_identity_suite` evaluates every identity the
library implements on one tree, comparing closed forms against the
elimination kernels with exact equality; identities whose hypotheses the
tree violates are Skipped with the violated hypothesis, never silently
passed. Failures carry the mismatching values as a counterexample.
"""

from __future__ import annotations

import enum
import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .closedforms import (
    beta,
    cof_delta_closed,
    det_d_closed,
    det_delta_closed,
    det_delta_unweighted,
    det_h_closed,
    eta_vector,
    inv_d_closed,
    inv_delta_closed,
    inv_h_closed,
    ones_inv_ones,
    Regime,
)
from .matrices import build_bundle
from .rational import RationalMatrix, cofactor_sum, det, hadamard, inverse
from .tree import TreeError, WeightedTree, as_rational, build_tree, distances, hop_distances

__all__ = [
    "DEFAULT_WEIGHT_POOL",
    "IDENTITY_IDS",
    "IdentityReport",
    "Status",
    "TreeGenSpec",
    "TreeShape",
    "generate_tree",
    "orientation_disagreements",
    "polynomial_identity_check",
    "run_identity_suite",
]

DEFAULT_WEIGHT_POOL: tuple[Fraction, ...] = tuple(
    Fraction(s) * Fraction(v)
    for v in ("1", "2", "3", "1/2", "5/2", "3/7")
    for s in (1, -1)
)


class TreeShape(enum.Enum):
    UNIFORM_PRUFER = "UniformPrufer"
    STAR = "Star"
    PATH = "Path"
    CATERPILLAR = "Caterpillar"


@dataclass(frozen=True)
class TreeGenSpec:
    """Deterministic generation recipe: same (spec, seed) -> identical tree.

    The default pool mixes signs and fractions on purpose: negative and
    fractional weights probe the sign and power factors of the closed
    forms far harder than unit weights do.
    """

    n: int
    weight_pool: tuple[Fraction, ...] = DEFAULT_WEIGHT_POOL
    seed: int = 0
    shape: TreeShape = TreeShape.UNIFORM_PRUFER

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one vertex, got {self.n}")
        pool = tuple(as_rational(w) for w in self.weight_pool)
        if not pool:
            raise ValueError("weight pool is empty")
        if any(w == 0 for w in pool):
            raise ValueError("weight pool contains zero")
        object.__setattr__(self, "weight_pool", pool)


def _prufer_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _shape_edges(spec: TreeGenSpec, rng: random.Random) -> list[tuple[int, int]]:
    n = spec.n
    if n == 1:
        return []
    if spec.shape is TreeShape.PATH:
        return [(k, k + 1) for k in range(1, n)]
    if spec.shape is TreeShape.STAR:
        return [(1, k) for k in range(2, n + 1)]
    if spec.shape is TreeShape.CATERPILLAR:
        # A star with one subdivided edge: exactly one degree-2 vertex for
        # n = 3 and n >= 5 (n = 4 degenerates to the 4-path, which has two).
        if n == 2:
            return [(1, 2)]
        return [(1, 2), (2, 3)] + [(1, k) for k in range(4, n + 1)]
    if n == 2:
        return [(1, 2)]
    seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
    return _prufer_edges(seq, n)


def generate_tree(spec: TreeGenSpec) -> WeightedTree:
    """Draw the tree described by ``spec``; reproducible from (spec, seed)."""
    rng = random.Random(spec.seed)
    structure = _shape_edges(spec, rng)
    oriented = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in structure]
    return build_tree(spec.n, [(u, v, rng.choice(spec.weight_pool)) for u, v in oriented])


class Status(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIPPED = "Skipped"


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity on one tree.

    ``counterexample`` holds the mismatching (lhs, rhs) pair on failure;
    ``reason`` names the violated hypothesis on a skip; ``note`` carries
    exploratory data that is recorded but not asserted.
    """

    identity_id: str
    tree: WeightedTree | None
    status: Status
    reason: str | None = None
    counterexample: tuple | None = None
    note: str | None = None


IDENTITY_IDS: tuple[str, ...] = (
    "qdq-edge-weights",
    "ldl-laplacian",
    "sqdist-tau-transfer",
    "qdq-sqdist-orientation",
    "sqdist-laplacian-product",
    "d-tau-weight-sum",
    "dl-rank-one",
    "det-d-closed",
    "inv-d-closed",
    "det-h-closed",
    "inv-h-closed",
    "det-sqdist-no-deg2",
    "det-sqdist-one-deg2",
    "det-sqdist-many-deg2",
    "det-sqdist-unweighted",
    "cof-sqdist-closed",
    "eta-linear-system",
    "ones-bilinear-inverse",
    "inv-sqdist-closed",
)


def run_identity_suite(t: WeightedTree) -> list[IdentityReport]:
    """Evaluate every identity on one tree; returns one report per identity.

    Hypothesis violations become Skipped reports with the violated
    hypothesis spelled out; nothing is silently passed. The bundle is
    built once and shared, but each report stands on its own.
    """
    b = build_bundle(t)
    dd = b.degrees
    n = t.n
    deg2 = dd.degree_two_vertices()
    sw = sum(t.weights, Fraction(0))
    ones_col = RationalMatrix.ones(n, 1)
    reports: list[IdentityReport] = []

    def check(identity_id: str, lhs, rhs) -> None:
        if lhs == rhs:
            reports.append(IdentityReport(identity_id, t, Status.PASS))
        else:
            reports.append(IdentityReport(identity_id, t, Status.FAIL, counterexample=(lhs, rhs)))

    def skip(identity_id: str, reason: str, note: str | None = None) -> None:
        reports.append(IdentityReport(identity_id, t, Status.SKIPPED, reason=reason, note=note))

    qt = b.Q.T
    check("qdq-edge-weights", qt @ b.D @ b.Q, -2 * b.F)
    check("ldl-laplacian", b.L @ b.D @ b.L, -2 * b.L)
    check("sqdist-tau-transfer", b.Delta @ b.tau, b.D @ b.delta_hat)
    check("qdq-sqdist-orientation", qt @ b.Delta @ b.Q, -2 * (b.F @ b.H @ b.F))
    check("sqdist-laplacian-product", b.Delta @ b.L, 2 * (b.D @ b.tau_tilde) - ones_col @ b.delta_hat.T)
    check("d-tau-weight-sum", b.D @ b.tau, sw * ones_col)
    check("dl-rank-one", b.D @ b.L, -2 * RationalMatrix.identity(n) + ones_col @ b.tau.T)

    check("det-d-closed", det(b.D), det_d_closed(t))
    check("det-h-closed", det(b.H), det_h_closed(t))

    if sw == 0:
        skip("inv-d-closed", "sum of weights is zero: distance matrix is singular")
    else:
        check("inv-d-closed", inv_d_closed(t), inverse(b.D))

    result = det_delta_closed(t)
    delta_det = det(b.Delta)
    deg2_phrase = f"tree has {len(deg2)} degree-2 vertices"
    for identity_id, regime in (
        ("det-sqdist-no-deg2", Regime.NO_DEGREE_TWO),
        ("det-sqdist-one-deg2", Regime.ONE_DEGREE_TWO),
        ("det-sqdist-many-deg2", Regime.MANY_DEGREE_TWO),
    ):
        if result.regime is regime:
            check(identity_id, delta_det, result.value)
        else:
            skip(identity_id, deg2_phrase)

    if any(w != 1 for w in t.weights):
        skip("det-sqdist-unweighted", "weights are not all 1")
    elif deg2:
        skip("det-sqdist-unweighted", "degree-2 vertex present")
    else:
        unweighted = det_delta_unweighted(t)
        if unweighted == result.value:
            check("det-sqdist-unweighted", delta_det, unweighted)
        else:
            reports.append(
                IdentityReport(
                    "det-sqdist-unweighted", t, Status.FAIL, counterexample=(unweighted, result.value)
                )
            )

    if deg2:
        # Out of the cofactor formula's hypothesis; the exact cofactor sum
        # is still recorded as exploratory data, with no claim attached.
        skip(
            "cof-sqdist-closed",
            "degree-2 vertex present",
            note=f"cofactor_sum = {cofactor_sum(b.Delta)}",
        )
        for identity_id in ("inv-h-closed", "eta-linear-system", "ones-bilinear-inverse", "inv-sqdist-closed"):
            skip(identity_id, "degree-2 vertex present")
        return reports

    check("inv-h-closed", inv_h_closed(t), inverse(b.H))
    check("cof-sqdist-closed", cof_delta_closed(t), cofactor_sum(b.Delta))

    bval = beta(t)
    eta = eta_vector(t)
    check("eta-linear-system", b.Delta @ eta, bval * ones_col)

    if bval == 0:
        skip("ones-bilinear-inverse", "beta is zero: squared distance matrix is singular")
        skip("inv-sqdist-closed", "beta is zero: squared distance matrix is singular")
    else:
        delta_inv = inverse(b.Delta)
        entry_total = sum((x for row in delta_inv for x in row), Fraction(0))
        check("ones-bilinear-inverse", entry_total, ones_inv_ones(t))
        check("inv-sqdist-closed", inv_delta_closed(t).matrix, delta_inv)
    return reports


def _poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def polynomial_identity_check(
    family: Callable[[Fraction], WeightedTree],
    sample_points: Iterable[int | str | Fraction],
    expected_poly: Sequence[int | str | Fraction],
) -> IdentityReport:
    """Certify det(Delta) of a one-parameter tree family against a polynomial.

    ``expected_poly`` lists coefficients in ascending order. Needs at
    least degree+1 distinct sample points. Points where the family cannot
    produce a valid tree (a weight becomes zero) are checked on the
    polynomial side only: the determinant is a polynomial in the
    parameter, so agreement at degree+1 valid points pins it everywhere.
    The report note says how many points were matrix-evaluated.
    """
    points = [as_rational(p) for p in sample_points]
    if len(set(points)) != len(points):
        raise ValueError("sample points must be distinct")
    coeffs = [as_rational(c) for c in expected_poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    degree = max(len(coeffs) - 1, 0)
    if len(points) < degree + 1:
        raise ValueError(f"insufficient sample points: need at least {degree + 1} for degree {degree}")
    sample_tree: WeightedTree | None = None
    evaluated = 0
    for p in points:
        expected = _poly_eval(coeffs, p)
        try:
            tree = family(p)
        except TreeError:
            continue  # e.g. a zero weight; covered by the degree bound
        sample_tree = sample_tree or tree
        d = distances(tree)
        actual = det(hadamard(d, d))
        evaluated += 1
        if actual != expected:
            return IdentityReport(
                "det-sqdist-polynomial",
                tree,
                Status.FAIL,
                counterexample=(actual, expected),
                note=f"at parameter {p}",
            )
    if evaluated == 0:
        return IdentityReport(
            "det-sqdist-polynomial", None, Status.SKIPPED, reason="no sample point admits a valid tree"
        )
    return IdentityReport(
        "det-sqdist-polynomial",
        sample_tree,
        Status.PASS,
        note=f"matrix-evaluated at {evaluated} of {len(points)} points (degree {degree})",
    )


def orientation_disagreements(t: WeightedTree) -> list[tuple[int, int]]:
    """Diagnostic: edge pairs where the weighted-distance similarity test
    disagrees with the hop-based relation the orientation matrix uses.

    With signed or unequal weights the weighted test can collide by
    accident, so it is never the definition; this function only surfaces
    where the two readings differ.
    """
    d = distances(t)
    hops = hop_distances(t)
    edges = t.edges
    out = []
    for i in range(len(edges)):
        e = edges[i]
        for j in range(i + 1, len(edges)):
            f = edges[j]
            weighted = d[e.tail - 1, f.tail - 1] == d[e.head - 1, f.head - 1]
            structural = hops[e.tail - 1, f.tail - 1] == hops[e.head - 1, f.head - 1]
            if weighted != structural:
                out.append((i, j))
    return out
