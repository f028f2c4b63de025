"""Third exterior power of the imaginary octonions, in E or TILDE coordinates.

Coordinates of u^v^w are 3x3 minors with columns in increasing index order, so
``plucker`` is literally the list of minors of the spanning matrix.
"""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import lcm

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from app.core.errors import BasisMismatchError, RankDeficientError, ZeroTrivectorError
from app.modules.octonion.basis import BasisTag, imaginary_change_of_basis
from app.modules.scalars.gauss import GaussQ
from app.modules.scalars.linalg import apply, coerce, mat_kernel, mat_rank, matrix

TriIndex = tuple[int, int, int]

TRIPLES: list[TriIndex] = list(combinations(range(1, 8), 3))
QUADS: list[tuple[int, int, int, int]] = list(combinations(range(1, 8), 4))
TRIPLE_RANK: dict[TriIndex, int] = {t: rank for rank, t in enumerate(TRIPLES)}
QUAD_RANK = {q: rank for rank, q in enumerate(QUADS)}


def triple(label: str | Sequence[int]) -> TriIndex:
    """``"247"`` or ``(2, 4, 7)`` to a validated sorted triple."""
    digits = tuple(int(ch) for ch in label) if isinstance(label, str) else tuple(label)
    if len(digits) != 3 or not all(a < b for a, b in zip(digits, digits[1:])) or not 1 <= digits[0] <= digits[2] <= 7:
        raise ValueError(f"{label!r} is not an increasing triple in 1..7")
    return digits


def triple_label(t: Sequence[int]) -> str:
    return "".join(str(i) for i in t)


def sort_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation (0 when an index repeats) and the sorted tuple."""
    values = list(indices)
    if len(set(values)) != len(values):
        return 0, tuple(sorted(values))
    sign = 1
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] > values[j]:
                sign = -sign
    return sign, tuple(sorted(values))


@dataclass(frozen=True)
class TriVector:
    coords: tuple[GaussQ, ...]
    basis: BasisTag = BasisTag.E

    def __post_init__(self):
        if len(self.coords) != 35:
            raise ValueError(f"a trivector has 35 coordinates, got {len(self.coords)}")
        if self.basis == BasisTag.MATRIX_PAIR:
            raise ValueError("trivectors use E or TILDE coordinates")

    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], object], basis: BasisTag = BasisTag.E) -> "TriVector":
        coords = [QQ_I.zero] * 35
        for indices, value in terms.items():
            sign, ordered = sort_sign(indices)
            if sign:
                coords[TRIPLE_RANK[ordered]] += QQ_I.convert(sign) * (QQ_I.convert(value) if isinstance(value, int) else value)
        return cls(tuple(coords), basis)

    @classmethod
    def unit(cls, t: Sequence[int], basis: BasisTag = BasisTag.E) -> "TriVector":
        return cls.from_terms({tuple(t): 1}, basis)

    def coord(self, t: Sequence[int]) -> GaussQ:
        sign, ordered = sort_sign(t)
        if not sign:
            return QQ_I.zero
        value = self.coords[TRIPLE_RANK[ordered]]
        return value if sign > 0 else -value

    def terms(self) -> dict[TriIndex, GaussQ]:
        return {t: value for t, value in zip(TRIPLES, self.coords) if value}

    def support(self) -> list[TriIndex]:
        return list(self.terms())

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "TriVector") -> "TriVector":
        if other.basis != self.basis:
            raise BasisMismatchError("trivectors in different bases")
        return TriVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def scale(self, factor) -> "TriVector":
        factor = QQ_I.convert(factor) if isinstance(factor, int) else factor
        return TriVector(tuple(factor * a for a in self.coords), self.basis)

    def to(self, basis: BasisTag) -> "TriVector":
        if basis == self.basis:
            return self
        return TriVector(tuple(apply(lambda3_change(self.basis, basis), self.coords)), basis)

    def proportional_to(self, other: "TriVector") -> bool:
        other = other.to(self.basis)
        pivot = next((k for k, value in enumerate(self.coords) if value), None)
        if pivot is None or not other.coords[pivot]:
            return False
        ratio = other.coords[pivot] / self.coords[pivot]
        return all(ratio * a == b for a, b in zip(self.coords, other.coords))


@dataclass(frozen=True)
class Covector3:
    coords: tuple[GaussQ, ...]
    basis: BasisTag = BasisTag.E

    def __post_init__(self):
        if len(self.coords) != 35:
            raise ValueError(f"a 3-covector has 35 coordinates, got {len(self.coords)}")

    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], object], basis: BasisTag = BasisTag.E) -> "Covector3":
        return cls(TriVector.from_terms(terms, basis).coords, basis)

    def pair(self, w: TriVector) -> GaussQ:
        if w.basis != self.basis:
            raise BasisMismatchError(f"covector in {self.basis.value} paired with trivector in {w.basis.value}")
        total = QQ_I.zero
        for a, b in zip(self.coords, w.coords):
            total += a * b
        return total

    def terms(self) -> dict[TriIndex, GaussQ]:
        return {t: value for t, value in zip(TRIPLES, self.coords) if value}

    def to(self, basis: BasisTag) -> "Covector3":
        if basis == self.basis:
            return self
        # f_new(w) = f(w) where w_old = L w_new, so f_new = L^T f_old
        return Covector3(tuple(apply(lambda3_change(basis, self.basis).transpose(), self.coords)), basis)

    def scale(self, factor) -> "Covector3":
        return Covector3(tuple(factor * a for a in self.coords), self.basis)


def lambda3(m: DomainMatrix) -> DomainMatrix:
    """Third exterior power of a 7x7 matrix, rows and columns indexed by TRIPLES."""
    rows = []
    for k in TRIPLES:
        rows.append([m.extract([i - 1 for i in k], [j - 1 for j in t]).det() for t in TRIPLES])
    return DomainMatrix(rows, (35, 35), m.domain)


@lru_cache(maxsize=None)
def lambda3_change(source: BasisTag, target: BasisTag) -> DomainMatrix:
    return lambda3(imaginary_change_of_basis(source, target))


@dataclass(frozen=True)
class Plane3:
    rows: DomainMatrix
    basis: BasisTag = BasisTag.E

    def __post_init__(self):
        if self.rows.shape != (3, 7):
            raise ValueError(f"a 3-plane is spanned by a 3x7 matrix, got {self.rows.shape}")
        if mat_rank(self.rows) < 3:
            raise RankDeficientError("spanning vectors of the plane are linearly dependent")

    @classmethod
    def of(cls, rows: Sequence[Sequence], basis: BasisTag = BasisTag.E) -> "Plane3":
        return cls(matrix(rows, ncols=7), basis)

    @classmethod
    def coordinate(cls, t: Sequence[int], basis: BasisTag = BasisTag.E) -> "Plane3":
        return cls.of([[1 if col == i else 0 for col in range(1, 8)] for i in t], basis)

    def vectors(self) -> list[list[GaussQ]]:
        return self.rows.to_list()

    def to(self, basis: BasisTag) -> "Plane3":
        if basis == self.basis:
            return self
        change = imaginary_change_of_basis(self.basis, basis)
        return Plane3((change * self.rows.transpose()).transpose(), basis)


def wedge3(u: Sequence, v: Sequence, w: Sequence, basis: BasisTag = BasisTag.E) -> TriVector:
    u, v, w = ([coerce(QQ_I, value) for value in vector] for vector in (u, v, w))
    if not len(u) == len(v) == len(w) == 7:
        raise ValueError("wedge3 takes three vectors of length 7")
    # expansion along w of the 3x3 minor on columns (i, j, k)
    pairs = {(a, b): u[a] * v[b] - u[b] * v[a] for a, b in combinations(range(7), 2)}
    coords = []
    for i, j, k in TRIPLES:
        i, j, k = i - 1, j - 1, k - 1
        coords.append(w[i] * pairs[j, k] - w[j] * pairs[i, k] + w[k] * pairs[i, j])
    return TriVector(tuple(coords), basis)


def plucker(plane: Plane3) -> TriVector:
    u, v, w = plane.vectors()
    return wedge3(u, v, w, plane.basis)


def wedge_operator(w: TriVector) -> DomainMatrix:
    """35x7 matrix of v -> v ^ w (rows: sorted 4-subsets)."""
    rows = [[QQ_I.zero] * 7 for _ in QUADS]
    for q in QUADS:
        for position, a in enumerate(q):
            rest = q[:position] + q[position + 1:]
            value = w.coord(rest)
            if value:
                # moving e_a past the smaller indices
                rows[QUAD_RANK[q]][a - 1] = value if position % 2 == 0 else -value
    return matrix(rows, ncols=7)


def is_decomposable(w: TriVector) -> tuple[bool, Plane3 | None]:
    if w.is_zero():
        raise ZeroTrivectorError("the zero trivector has no plane")
    kernel = mat_kernel(wedge_operator(w))
    if len(kernel) != 3:
        return False, None
    return True, Plane3.of(kernel, w.basis)


@dataclass(frozen=True)
class PluckerRelation:
    pair: tuple[int, int]
    quad: tuple[int, int, int, int]

    def evaluate(self, coord: Callable[[tuple[int, ...]], object], zero):
        """sum_s (-1)^s p(pair, j_s) p(quad without j_s) for any antisymmetric coordinate accessor."""
        total = zero
        for s, j in enumerate(self.quad):
            rest = self.quad[:s] + self.quad[s + 1:]
            term = coord((*self.pair, j)) * coord(rest)
            total = total - term if s % 2 == 0 else total + term
        return total

    @property
    def label(self) -> str:
        return f"{triple_label(self.pair)}|{triple_label(self.quad)}"


PLUCKER_RELATIONS: list[PluckerRelation] = [
    PluckerRelation(pair, quad) for pair in combinations(range(1, 8), 2) for quad in QUADS
]


def _compiled(relation: PluckerRelation) -> list[tuple[object, int, int]]:
    terms = []
    for s, j in enumerate(relation.quad):
        rest = relation.quad[:s] + relation.quad[s + 1:]
        sign, ordered = sort_sign((*relation.pair, j))
        if sign:
            coeff = -sign if s % 2 == 0 else sign
            terms.append((QQ_I.convert(coeff), TRIPLE_RANK[ordered], TRIPLE_RANK[rest]))
    return terms


_COMPILED = [(relation, _compiled(relation)) for relation in PLUCKER_RELATIONS]


def _relation_values(w: TriVector):
    coords = w.coords
    for relation, terms in _COMPILED:
        value = QQ_I.zero
        for coeff, left, right in terms:
            value += coeff * coords[left] * coords[right]
        yield relation, value


def plucker_relation_check(w: TriVector) -> list[tuple[PluckerRelation, GaussQ]]:
    return [(relation, value) for relation, value in _relation_values(w) if value]


_INTEGER_TERMS = [
    [(1 if coeff == QQ_I.one else -1, left, right) for coeff, left, right in terms] for _, terms in _COMPILED
]


def _integer_coords(w: TriVector) -> list[tuple[int, int]]:
    """Coordinates scaled to Gaussian integers, as (re, im) pairs."""
    scale = lcm(*(part.denominator for value in w.coords for part in (value.x, value.y)))
    return [(int(value.x * scale), int(value.y * scale)) for value in w.coords]


def on_grassmann_cone(w: TriVector) -> bool:
    # the relations are homogeneous, so clearing denominators keeps their zero set
    coords = _integer_coords(w)
    for terms in _INTEGER_TERMS:
        re = im = 0
        for sign, left, right in terms:
            (a, b), (c, d) = coords[left], coords[right]
            re += sign * (a * c - b * d)
            im += sign * (a * d + b * c)
        if re or im:
            return False
    return True
