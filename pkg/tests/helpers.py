"""Shared builders for the worked examples used across test modules.

The frozen matrices here (commutation matrix of the qutrit example and
its inverse) were verified with an independent symbolic oracle before
being committed.
"""

from invsub.laurent import LaurentMatrix, parse_poly
from invsub.pauli import SubalgebraSpec


def mat(p, nvars, rows):
    return LaurentMatrix(p, nvars, [[parse_poly(s, p, nvars) for s in row]
                                    for row in rows])


XI_Z3_ROWS = [
    ["x^-1 - x", "x + x*y - y + 1"],
    ["-x^-1 + y^-1 - x^-1*y^-1 - 1", "y - y^-1"],
]

XI_Z3_INV_ROWS = [
    ["2*y^-1 + y", "2 + y + 2*x + 2*x*y"],
    ["x^-1*y^-1 + x^-1 + 2*y^-1 + 1", "x^-1 + 2*x"],
]


def z3_spec():
    """Two qutrits per site in 2d, V = (id; 2*Xi); the invertible example."""
    xi = mat(3, 2, XI_Z3_ROWS)
    v = LaurentMatrix.identity(3, 2, 2).vstack(xi.scale(2))
    return SubalgebraSpec(p=3, q=2, dims=2, generators=v)


def xz_chain_spec():
    """One qubit per site in 1d, single generator X(j) Z(j+1); the
    negative control whose commutation polynomial x + x^-1 is not a unit."""
    v = mat(2, 1, [["1"], ["x"]])
    return SubalgebraSpec(p=2, q=1, dims=1, generators=v)


def full_spec():
    return SubalgebraSpec(3, 1, 2, LaurentMatrix.identity(3, 2, 2))
