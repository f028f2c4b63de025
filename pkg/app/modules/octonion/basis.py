"""The three coordinate systems on the split octonions.

``MATRIX_PAIR`` coordinates are the entries (a11, a12, a21, a22, b11, b12, b21, b22)
of a pair of 2x2 matrices. ``E`` and ``TILDE`` put the unit first, followed by
seven imaginary basis vectors. The matrices below hold basis vectors as columns.
"""

from enum import Enum

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from app.modules.scalars.gauss import I, gq
from app.modules.scalars.linalg import matrix


class BasisTag(str, Enum):
    MATRIX_PAIR = "matrix_pair"
    E = "e"
    TILDE = "tilde"


# quaternion units inside Mat2: i^2 = j^2 = k^2 = -1 and ij = k
QUAT_I = ((I, 0), (0, -I))
QUAT_J = ((0, 1), (-1, 0))
QUAT_K = ((0, I), (I, 0))
QUAT_ONE = ((1, 0), (0, 1))


def _flatten(entries) -> list:
    return [value for row in entries for value in row]


_ZERO4 = [0, 0, 0, 0]
_E_COLUMNS = [
    _flatten(QUAT_ONE) + _ZERO4,
    _flatten(QUAT_I) + _ZERO4,
    _flatten(QUAT_J) + _ZERO4,
    _flatten(QUAT_K) + _ZERO4,
    _ZERO4 + _flatten(QUAT_ONE),
    _ZERO4 + _flatten(QUAT_I),
    _ZERO4 + _flatten(QUAT_J),
    _ZERO4 + _flatten(QUAT_K),
]

# tilde vectors in E coordinates; index 0 is the unit
_TILDE_IN_E = {
    0: {0: gq(1)},
    1: {1: gq(1)},
    2: {2: -I, 3: gq(1)},
    3: {2: I, 3: gq(1)},
    4: {4: -I, 5: gq(1)},
    5: {4: I, 5: gq(1)},
    6: {6: -I, 7: gq(1)},
    7: {6: I, 7: gq(1)},
}


def _columns_to_matrix(columns: list[list]) -> DomainMatrix:
    size = len(columns)
    return matrix([[columns[col][row] for col in range(size)] for row in range(size)])


E_TO_MATRIX_PAIR = _columns_to_matrix(_E_COLUMNS)
TILDE_TO_E = _columns_to_matrix(
    [[_TILDE_IN_E[col].get(row, gq(0)) for row in range(8)] for col in range(8)]
)

TO_MATRIX_PAIR: dict[BasisTag, DomainMatrix] = {
    BasisTag.MATRIX_PAIR: DomainMatrix.eye(8, QQ_I).to_dense(),
    BasisTag.E: E_TO_MATRIX_PAIR,
    BasisTag.TILDE: E_TO_MATRIX_PAIR * TILDE_TO_E,
}
FROM_MATRIX_PAIR: dict[BasisTag, DomainMatrix] = {tag: m.inv() for tag, m in TO_MATRIX_PAIR.items()}

# imaginary parts only (7x7): columns are tilde vectors e~1..e~7 in E coordinates
TILDE_TO_E_IMAG = TILDE_TO_E.extract(list(range(1, 8)), list(range(1, 8)))
E_TO_TILDE_IMAG = TILDE_TO_E_IMAG.inv()


def change_of_basis(source: BasisTag, target: BasisTag) -> DomainMatrix:
    """8x8 matrix taking coordinates in ``source`` to coordinates in ``target``."""
    return FROM_MATRIX_PAIR[target] * TO_MATRIX_PAIR[source]


def imaginary_change_of_basis(source: BasisTag, target: BasisTag) -> DomainMatrix:
    if BasisTag.MATRIX_PAIR in (source, target):
        raise ValueError("imaginary coordinates are defined for the E and TILDE bases only")
    if source == target:
        return DomainMatrix.eye(7, QQ_I).to_dense()
    return TILDE_TO_E_IMAG if source == BasisTag.TILDE else E_TO_TILDE_IMAG
