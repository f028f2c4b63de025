"""Split octonions as pairs of 2x2 matrices (Cayley-Dickson doubling).

Products are always formed in matrix-pair coordinates:

    (a, b)(c, d) = (ac + conj(d) b, da + b conj(c))

with the quaternion conjugate conj(x) = tr(x) - x, i.e. the adjugate.
"""

import random
from collections.abc import Sequence
from dataclasses import dataclass

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from app.core.errors import BasisMismatchError, NotImaginaryError
from app.modules.scalars.gauss import GaussQ, gq
from app.modules.scalars.linalg import apply, matrix
from app.modules.scalars.sampling import random_vector

from .basis import FROM_MATRIX_PAIR, TO_MATRIX_PAIR, BasisTag

HALF = gq("1/2")


def qconj(a: DomainMatrix) -> DomainMatrix:
    (p, q), (r, s) = a.to_list()
    return DomainMatrix([[s, -q], [-r, p]], (2, 2), a.domain)


def qtrace(a: DomainMatrix):
    (p, _), (_, s) = a.to_list()
    return p + s


@dataclass(frozen=True)
class Octonion:
    coords: tuple[GaussQ, ...]
    basis: BasisTag = BasisTag.E

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError(f"an octonion has 8 coordinates, got {len(self.coords)}")

    @classmethod
    def of(cls, values: Sequence, basis: BasisTag = BasisTag.E) -> "Octonion":
        return cls(tuple(QQ_I.convert(v) if isinstance(v, int) else v for v in values), basis)

    @classmethod
    def imaginary(cls, values: Sequence, basis: BasisTag = BasisTag.E) -> "Octonion":
        if basis == BasisTag.MATRIX_PAIR:
            raise ValueError("imaginary coordinates need the E or TILDE basis")
        if len(values) != 7:
            raise ValueError(f"an imaginary octonion has 7 coordinates, got {len(values)}")
        return cls.of([0, *values], basis)

    @classmethod
    def unit(cls, basis: BasisTag = BasisTag.E) -> "Octonion":
        return cls.basis_vector(0, BasisTag.E).to(basis)

    @classmethod
    def basis_vector(cls, index: int, basis: BasisTag = BasisTag.E) -> "Octonion":
        values = [0] * 8
        values[index] = 1
        return cls.of(values, basis)

    @classmethod
    def zero(cls, basis: BasisTag = BasisTag.E) -> "Octonion":
        return cls.of([0] * 8, basis)

    def to(self, basis: BasisTag) -> "Octonion":
        if basis == self.basis:
            return self
        pair = apply(TO_MATRIX_PAIR[self.basis], self.coords)
        return Octonion(tuple(apply(FROM_MATRIX_PAIR[basis], pair)), basis)

    def halves(self) -> tuple[DomainMatrix, DomainMatrix]:
        values = self.to(BasisTag.MATRIX_PAIR).coords
        return matrix([values[0:2], values[2:4]]), matrix([values[4:6], values[6:8]])

    @classmethod
    def from_halves(cls, a: DomainMatrix, b: DomainMatrix, basis: BasisTag = BasisTag.E) -> "Octonion":
        values = [v for row in a.to_list() for v in row] + [v for row in b.to_list() for v in row]
        return cls(tuple(values), BasisTag.MATRIX_PAIR).to(basis)

    def _check(self, other: "Octonion") -> None:
        if other.basis != self.basis:
            raise BasisMismatchError(f"cannot combine {self.basis.value} and {other.basis.value} coordinates")

    def __add__(self, other: "Octonion") -> "Octonion":
        self._check(other)
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "Octonion") -> "Octonion":
        self._check(other)
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coords), self.basis)

    def scale(self, factor) -> "Octonion":
        factor = QQ_I.convert(factor) if isinstance(factor, int) else factor
        return Octonion(tuple(factor * a for a in self.coords), self.basis)

    def __mul__(self, other: "Octonion") -> "Octonion":
        return oct_mul(self, other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_imaginary(self) -> bool:
        a, _ = self.halves()
        return not qtrace(a)

    def imag_coords(self, basis: BasisTag | None = None) -> tuple[GaussQ, ...]:
        target = self.to(basis or (self.basis if self.basis != BasisTag.MATRIX_PAIR else BasisTag.E))
        if not self.is_imaginary():
            raise NotImaginaryError(f"{self} has a nonzero unit component")
        return target.coords[1:]

    def scalar_part(self) -> GaussQ:
        """Coefficient of the unit e."""
        return self.to(BasisTag.E).coords[0]


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    x._check(y)
    a, b = x.halves()
    c, d = y.halves()
    return Octonion.from_halves(a * c + qconj(d) * b, d * a + b * qconj(c), x.basis)


def oct_conj(x: Octonion) -> Octonion:
    a, b = x.halves()
    return Octonion.from_halves(qconj(a), -b, x.basis)


def oct_norm(x: Octonion) -> GaussQ:
    a, b = x.halves()
    return a.det() - b.det()


def oct_inner(x: Octonion, y: Octonion) -> GaussQ:
    x._check(y)
    return (oct_norm(x + y) - oct_norm(x) - oct_norm(y)) * HALF


def require_imaginary(*values: Octonion) -> None:
    for value in values:
        if not value.is_imaginary():
            raise NotImaginaryError(f"argument {value.coords} in basis {value.basis.value} is not in the imaginary part")


def cross(a: Octonion, b: Octonion) -> Octonion:
    require_imaginary(a, b)
    return (a * b - b * a).scale(HALF)


def dot(a: Octonion, b: Octonion) -> GaussQ:
    require_imaginary(a, b)
    return (a * b + b * a).scale(-HALF).scalar_part()


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return (x * y) * z - x * (y * z)


def triple_cross(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    y_bar = oct_conj(y)
    return (x * (y_bar * z) - z * (y_bar * x)).scale(HALF)


def random_octonion(rng: random.Random, basis: BasisTag = BasisTag.E, height: int = 3) -> Octonion:
    return Octonion(tuple(random_vector(rng, 8, height)), basis)


def random_imaginary(rng: random.Random, basis: BasisTag = BasisTag.E, height: int = 3) -> Octonion:
    return Octonion.imaginary(random_vector(rng, 7, height), basis)


def e(index: int) -> Octonion:
    """E-basis vector: 0 is the unit, 1..7 the imaginary units."""
    return Octonion.basis_vector(index, BasisTag.E)
