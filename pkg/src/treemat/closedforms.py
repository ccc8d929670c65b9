"""Closed-form determinants and inverses for the matrices of a weighted tree.

Everything here evaluates an explicit formula in the edge weights and the
degree vector (no elimination) and is meant to be cross-checked against
the exact kernels in :mod:`treemat.rational`. Writing tau_i = 2 - degree_i,
delta_hat_i for the weighted degree, n for the vertex count and w_k for the
edge weights:

* det D   = (-1)^(n-1) 2^(n-2) (sum w) (prod w)
* D^-1    = -L/2 + tau tau' / (2 sum w)                 [needs sum w != 0]
* det H   = 2^(n-2) prod tau
* H^-1    = Q' diag(1/tau) Q / 2                        [needs no degree-2 vertex]
* det Delta dispatches on the number of degree-2 vertices:
    0:  (-1)^(n-1) (4^(n-2)/2) (prod tau)(prod w^2) beta,
        with beta = sum delta_hat_i^2 / tau_i
    1:  (-1)^(n-1) 2^(2n-5) (w_i + w_j)^2 (prod w^2) (prod_{k != q} tau_k),
        q the degree-2 vertex, e_i and e_j its incident edges
    2+: 0
* cof Delta = (-1)^(n-1) 2^(2n-3) (prod w^2)(prod tau)  [no degree-2 vertex]
* 1' Delta^-1 1 = 4 / beta                              [beta != 0]
* Delta^-1 = -(1/4) L diag(1/tau) L + (1/(4 beta)) eta eta',
  with eta = 2 tau - L diag(1/tau) delta_hat            [no degree-2, beta != 0]

Exponents are evaluated as exact rationals, so the n = 1 and n = 2
degenerate cases come out of the same expressions (e.g. 2^(n-2) = 1/2 at
n = 1) and need no special-casing.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .matrices import build_bundle
from .rational import RationalMatrix, mat_mul
from .tree import DegreeData, WeightedTree, degree_data

__all__ = [
    "DetDeltaResult",
    "HypothesisViolation",
    "InverseCertificate",
    "Regime",
    "beta",
    "cof_delta_closed",
    "det_d_closed",
    "det_delta_closed",
    "det_delta_unweighted",
    "det_h_closed",
    "eta_vector",
    "inv_d_closed",
    "inv_delta_closed",
    "inv_h_closed",
    "ones_inv_ones",
]


class HypothesisViolation(ValueError):
    """A formula's hypothesis does not hold for the given tree."""


class Regime(enum.Enum):
    """Which determinant formula applies, by the count of degree-2 vertices."""

    NO_DEGREE_TWO = "NoDegreeTwo"
    ONE_DEGREE_TWO = "OneDegreeTwo"
    MANY_DEGREE_TWO = "ManyDegreeTwo"


@dataclass(frozen=True)
class DetDeltaResult:
    """det Delta with the regime it was computed in; beta only in the no-degree-2 regime."""

    value: Fraction
    regime: Regime
    beta: Fraction | None = None


@dataclass(frozen=True)
class InverseCertificate:
    """A closed-form inverse of Delta, verified at construction.

    Construction multiplies Delta by ``matrix`` and checks the identity
    exactly, and checks Delta eta = beta 1; both must hold for the object
    to exist.
    """

    matrix: RationalMatrix
    eta: tuple[Fraction, ...]
    beta: Fraction


def _sign(n: int) -> int:
    return -1 if n % 2 == 0 else 1  # (-1)^(n-1)


def _require_no_degree_two(dd: DegreeData) -> None:
    deg2 = dd.degree_two_vertices()
    if deg2:
        ids = ", ".join(str(v) for v in deg2)
        raise HypothesisViolation(f"degree-2 vertex present (vertex {ids}): 1/tau is undefined")


def det_d_closed(t: WeightedTree) -> Fraction:
    """Closed-form det of the distance matrix: (-1)^(n-1) 2^(n-2) (sum w)(prod w).

    Depends on the weights only through their sum and product. For n = 1
    the empty sum makes this 0, the determinant of the 1x1 zero matrix
    (degenerate but consistent). At unit weights it reduces to the classic
    Graham-Pollak value (-1)^(n-1) (n-1) 2^(n-2).
    """
    n = t.n
    ws = t.weights
    return _sign(n) * Fraction(2) ** (n - 2) * sum(ws, Fraction(0)) * math.prod(ws, start=Fraction(1))


def inv_d_closed(t: WeightedTree) -> RationalMatrix:
    """Closed-form inverse of the distance matrix: -L/2 + tau tau'/(2 sum w)."""
    sw = sum(t.weights, Fraction(0))
    if sw == 0:
        raise HypothesisViolation("sum of weights is zero: distance matrix is singular")
    b = build_bundle(t)
    return Fraction(-1, 2) * b.L + Fraction(1, 1) / (2 * sw) * (b.tau @ b.tau.T)


def det_h_closed(t: WeightedTree) -> Fraction:
    """Closed-form det of the edge orientation matrix: 2^(n-2) prod tau."""
    dd = degree_data(t)
    return Fraction(2) ** (t.n - 2) * math.prod(dd.tau, start=Fraction(1))


def inv_h_closed(t: WeightedTree) -> RationalMatrix:
    """Closed-form inverse of the orientation matrix: Q' diag(1/tau) Q / 2."""
    dd = degree_data(t)
    _require_no_degree_two(dd)
    b = build_bundle(t)
    assert b.tau_hat is not None
    return Fraction(1, 2) * (b.Q.T @ b.tau_hat @ b.Q)


def beta(t: WeightedTree) -> Fraction:
    """The scalar sum_i delta_hat_i^2 / tau_i; zero exactly when Delta is singular
    (in the no-degree-2 regime)."""
    dd = degree_data(t)
    _require_no_degree_two(dd)
    return sum((dh * dh / tau for dh, tau in zip(dd.delta_hat, dd.tau)), Fraction(0))


def det_delta_closed(t: WeightedTree) -> DetDeltaResult:
    """Closed-form det of the squared distance matrix, dispatching on the
    number of degree-2 vertices (0, 1, or at least 2). The count is the
    sole dispatcher; in the last regime the value is identically 0."""
    dd = degree_data(t)
    deg2 = dd.degree_two_vertices()
    n = t.n
    if len(deg2) >= 2:
        return DetDeltaResult(Fraction(0), Regime.MANY_DEGREE_TWO)
    wsq = math.prod((w * w for w in t.weights), start=Fraction(1))
    if len(deg2) == 1:
        q = deg2[0]
        wi, wj = (e.weight for e in t.edges if q in (e.tail, e.head))
        tau_rest = math.prod((x for v, x in enumerate(dd.tau, start=1) if v != q), start=Fraction(1))
        value = _sign(n) * Fraction(2) ** (2 * n - 5) * (wi + wj) ** 2 * wsq * tau_rest
        return DetDeltaResult(value, Regime.ONE_DEGREE_TWO)
    b = sum((dh * dh / tau for dh, tau in zip(dd.delta_hat, dd.tau)), Fraction(0))
    tau_prod = math.prod(dd.tau, start=Fraction(1))
    value = _sign(n) * (Fraction(4) ** (n - 2) / 2) * tau_prod * wsq * b
    return DetDeltaResult(value, Regime.NO_DEGREE_TWO, beta=b)


def det_delta_unweighted(t: WeightedTree) -> Fraction:
    """Unit-weight det of the squared distance matrix:
    (-1)^n 4^(n-2) (2n - 1 - 2 sum 1/tau) prod tau.

    Only defined for all-ones weights and no degree-2 vertex; must agree
    with the general closed form on the same tree.
    """
    if any(w != 1 for w in t.weights):
        raise HypothesisViolation("unit-weight formula requires every weight to be 1")
    dd = degree_data(t)
    _require_no_degree_two(dd)
    n = t.n
    inv_tau_sum = sum((Fraction(1, x) for x in dd.tau), Fraction(0))
    tau_prod = math.prod(dd.tau, start=Fraction(1))
    return (-1) ** n * Fraction(4) ** (n - 2) * (2 * n - 1 - 2 * inv_tau_sum) * tau_prod


def cof_delta_closed(t: WeightedTree) -> Fraction:
    """Closed-form cofactor sum of the squared distance matrix:
    (-1)^(n-1) 2^(2n-3) (prod w^2)(prod tau), for trees with no degree-2 vertex."""
    dd = degree_data(t)
    _require_no_degree_two(dd)
    wsq = math.prod((w * w for w in t.weights), start=Fraction(1))
    return _sign(t.n) * Fraction(2) ** (2 * t.n - 3) * wsq * math.prod(dd.tau, start=Fraction(1))


def ones_inv_ones(t: WeightedTree) -> Fraction:
    """The all-ones bilinear form of the inverse squared distance matrix: 4/beta."""
    b = beta(t)
    if b == 0:
        raise HypothesisViolation("beta is zero: squared distance matrix is singular")
    return Fraction(4) / b


def eta_vector(t: WeightedTree) -> RationalMatrix:
    """The column eta = 2 tau - L diag(1/tau) delta_hat.

    Solves Delta eta = beta 1 exactly, for every tree with no degree-2
    vertex, including beta = 0, where it exhibits a kernel vector.
    """
    dd = degree_data(t)
    _require_no_degree_two(dd)
    b = build_bundle(t)
    assert b.tau_hat is not None
    return 2 * b.tau - b.L @ b.tau_hat @ b.delta_hat


def inv_delta_closed(t: WeightedTree) -> InverseCertificate:
    """Closed-form inverse of the squared distance matrix,
    -(1/4) L diag(1/tau) L + (1/(4 beta)) eta eta', verified at construction."""
    dd = degree_data(t)
    _require_no_degree_two(dd)
    bval = beta(t)
    if bval == 0:
        raise HypothesisViolation("beta is zero: squared distance matrix is singular")
    b = build_bundle(t)
    assert b.tau_hat is not None
    eta = eta_vector(t)
    matrix = Fraction(-1, 4) * (b.L @ b.tau_hat @ b.L) + Fraction(1, 1) / (4 * bval) * (eta @ eta.T)
    n = t.n
    if mat_mul(b.Delta, matrix) != RationalMatrix.identity(n):
        raise ArithmeticError("inverse certificate failed: Delta times the closed form is not the identity")
    if mat_mul(b.Delta, eta) != bval * RationalMatrix.ones(n, 1):
        raise ArithmeticError("inverse certificate failed: Delta eta != beta 1")
    return InverseCertificate(matrix=matrix, eta=tuple(row[0] for row in eta), beta=bval)
