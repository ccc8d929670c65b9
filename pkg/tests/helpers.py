"""Independent brute-force oracles and shared fixtures for the tests.

The oracles work on plain lists of Fractions and never touch the package's
elimination kernels, so they stay independent of the code paths they check.
"""

from fractions import Fraction

from treemat import WeightedTree, build_tree


def naive_det(m: list[list[Fraction]]) -> Fraction:
    """Determinant by cofactor expansion along the first row."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0][0]
    total = Fraction(0)
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * naive_det(minor)
    return total


def naive_cofactor_sum(m: list[list[Fraction]]) -> Fraction:
    """Sum of all n^2 cofactors, each from its own minor determinant."""
    n = len(m)
    total = Fraction(0)
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for k, row in enumerate(m) if k != i]
            total += (-1) ** (i + j) * naive_det(minor)
    return total


def unit_star(n: int) -> WeightedTree:
    """Star with unit weights, center vertex 1."""
    return build_tree(n, [(1, k, 1) for k in range(2, n + 1)])


def unit_path(n: int) -> WeightedTree:
    return build_tree(n, [(k, k + 1, 1) for k in range(1, n)])


def parameterized_star(weight) -> WeightedTree:
    """Star on 5 vertices with weights (1, 1, weight, 1): det of its squared
    distance matrix is a degree-4 polynomial in the parameter."""
    return build_tree(5, [(1, 2, 1), (1, 3, 1), (1, 4, weight), (1, 5, 1)])


# det(Delta) of parameterized_star(g), ascending coefficients: 96 g^2 + 192 g^3 - 32 g^4
PARAMETERIZED_STAR_DET_POLY = (0, 0, 96, 192, -32)


def seven_vertex_example() -> WeightedTree:
    """Tree whose Laplacian is the frozen 7x7 matrix below."""
    return build_tree(7, [(1, 3, 2), (3, 2, -3), (3, 4, 1), (4, 5, 5), (4, 6, -2), (4, 7, 4)])


SEVEN_VERTEX_LAPLACIAN = [
    ["1/2", "0", "-1/2", "0", "0", "0", "0"],
    ["0", "-1/3", "1/3", "0", "0", "0", "0"],
    ["-1/2", "1/3", "7/6", "-1", "0", "0", "0"],
    ["0", "0", "-1", "19/20", "-1/5", "1/2", "-1/4"],
    ["0", "0", "0", "-1/5", "1/5", "0", "0"],
    ["0", "0", "0", "1/2", "0", "-1/2", "0"],
    ["0", "0", "0", "-1/4", "0", "0", "1/4"],
]


def zero_beta_star() -> WeightedTree:
    """Star K_{1,3} with weights (1, 1, -1/2): no degree-2 vertex, yet
    beta = -2(ab + ac + bc) = 0, so the squared distance matrix is singular."""
    return build_tree(4, [(1, 2, 1), (1, 3, 1), (1, 4, Fraction(-1, 2))])
