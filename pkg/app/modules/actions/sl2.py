"""The two SL2 actions on the split octonions.

With x = (x1, x2) in matrix-pair halves:

    diagonal:  (x1, x2) -> (g x1 g^-1, g x2 g^-1)
    left:      (x1, x2) -> (x1, g x2)

Both fix the unit and preserve the imaginary part. Matrices on e_1..e_7 hold
images as columns and may live over any domain containing QQ_I, so the
unipotent families can be handled with a symbolic parameter.
"""

import random
from dataclasses import dataclass
from enum import Enum

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from app.fixtures.loader import load_unipotent
from app.modules.grassmann.exterior import Plane3
from app.modules.octonion.algebra import Octonion, qconj, require_imaginary
from app.modules.octonion.basis import FROM_MATRIX_PAIR, TO_MATRIX_PAIR, BasisTag
from app.modules.scalars.gauss import GaussQ
from app.modules.scalars.linalg import column, flat, matrix
from app.modules.scalars.sampling import random_gauss
from app.modules.torus.action import torus_element


class ActionKind(str, Enum):
    diagonal = "diagonal"
    left = "left"


@dataclass(frozen=True)
class SL2Element:
    matrix: DomainMatrix

    def __post_init__(self):
        if self.matrix.shape != (2, 2):
            raise ValueError(f"an SL2 element is 2x2, got {self.matrix.shape}")
        if self.matrix.det() != self.matrix.domain.one:
            raise ValueError("an SL2 element has determinant 1")

    @classmethod
    def of(cls, rows, domain=QQ_I) -> "SL2Element":
        return cls(matrix(rows, domain))

    @property
    def domain(self):
        return self.matrix.domain

    def inverse(self) -> "SL2Element":
        return SL2Element(qconj(self.matrix))

    def __mul__(self, other: "SL2Element") -> "SL2Element":
        return SL2Element(self.matrix * other.matrix)


def identity_element(domain=QQ_I) -> SL2Element:
    return SL2Element.of([[1, 0], [0, 1]], domain)


def unipotent(u) -> SL2Element:
    """(1 u; 0 1) for a Gaussian rational or a polynomial ring element."""
    domain = u.ring.to_domain() if isinstance(u, PolyElement) else QQ_I
    return SL2Element.of([[1, u], [0, 1]], domain)


def diagonal_element(s: GaussQ) -> SL2Element:
    return SL2Element.of([[s, 0], [0, 1 / s]])


def _nonzero_gauss(rng: random.Random, height: int) -> GaussQ:
    value = random_gauss(rng, height)
    while not value:
        value = random_gauss(rng, height)
    return value


def random_sl2(rng: random.Random, height: int = 3) -> SL2Element:
    """(1 a; 0 1)(1 0; b 1)(s 0; 0 1/s) with small exact parameters."""
    a, b = random_gauss(rng, height), random_gauss(rng, height)
    return unipotent(a) * SL2Element.of([[1, 0], [b, 1]]) * diagonal_element(_nonzero_gauss(rng, height))


def _act_halves(kind: ActionKind, g: DomainMatrix, a: DomainMatrix, b: DomainMatrix):
    if kind == ActionKind.diagonal:
        g_inv = qconj(g)
        return g * a * g_inv, g * b * g_inv
    return a, g * b


def act(kind: ActionKind, g: SL2Element, x: Octonion) -> Octonion:
    """Action on all of the octonions."""
    a, b = x.halves()
    return Octonion.from_halves(*_act_halves(kind, g.matrix, a, b), basis=x.basis)


def sl2_diag_act(g: SL2Element, x: Octonion) -> Octonion:
    require_imaginary(x)
    return act(ActionKind.diagonal, g, x)


def sl2_left_act(g: SL2Element, x: Octonion) -> Octonion:
    require_imaginary(x)
    return act(ActionKind.left, g, x)


def _halves_over(values: list, domain) -> tuple[DomainMatrix, DomainMatrix]:
    return (
        DomainMatrix([values[0:2], values[2:4]], (2, 2), domain),
        DomainMatrix([values[4:6], values[6:8]], (2, 2), domain),
    )


def act_matrix(kind: ActionKind, g: SL2Element) -> DomainMatrix:
    """7x7 matrix on e_1..e_7 over the domain of ``g``."""
    domain = g.domain
    to_pair = TO_MATRIX_PAIR[BasisTag.E].convert_to(domain)
    from_pair = FROM_MATRIX_PAIR[BasisTag.E].convert_to(domain)
    images = []
    for j in range(1, 8):
        a, b = _halves_over(flat(to_pair.extract(list(range(8)), [j])), domain)
        a, b = _act_halves(kind, g.matrix, a, b)
        images.append(flat(from_pair * column(flat(a) + flat(b), domain))[1:])
    return DomainMatrix([[images[j][i] for j in range(7)] for i in range(7)], (7, 7), domain)


def unipotent_matrix(kind: ActionKind, u) -> DomainMatrix:
    return act_matrix(kind, unipotent(u))


def printed_unipotent_matrix(kind: ActionKind, u) -> DomainMatrix:
    """The tabulated [g_u], transposed to the column convention."""
    domain = u.ring.to_domain() if isinstance(u, PolyElement) else QQ_I
    rows = [[domain.zero] * 7 for _ in range(7)]
    for r, c, coeff, power in load_unipotent()[kind.value]:
        rows[c - 1][r - 1] += domain.one * coeff * u**power
    return DomainMatrix(rows, (7, 7), domain)


def random_group_matrix(rng: random.Random, length: int = 3, height: int = 2) -> DomainMatrix:
    """Product of random torus elements and random elements of both SL2 actions, on e_1..e_7."""
    word = torus_element(_nonzero_gauss(rng, height), _nonzero_gauss(rng, height))
    for _ in range(length):
        kind = rng.choice(list(ActionKind))
        word = act_matrix(kind, random_sl2(rng, height)) * word
    return word


def transform_plane(m: DomainMatrix, plane: Plane3) -> Plane3:
    """Image of an E-basis plane under a 7x7 matrix acting on columns."""
    return Plane3((m * plane.rows.transpose()).transpose(), plane.basis)
