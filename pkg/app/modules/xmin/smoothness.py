"""Jacobian rank and torus-homogeneous tangent frames at the fixed points.

Fixed points are coordinate planes in the eigenbasis, so each one is the origin
of its own chart; the Jacobian there is taken in the lex order of the chart
variables.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from threading import RLock

from sympy.polys.matrices import DomainMatrix

from app.core.errors import PreconditionError
from app.modules.grassmann.chart import adjacent, chart_ring
from app.modules.grassmann.exterior import TriIndex, triple_label
from app.modules.octonion.basis import BasisTag
from app.modules.scalars.gauss import ZERO, GaussQ, format_gauss
from app.modules.scalars.linalg import mat_kernel, mat_rank, matrix
from app.modules.scalars.polys import evaluate, partial
from app.modules.torus.action import weight_of
from app.modules.torus.characters import Character

from .equations import chart_equations

TANGENT_DIMENSION = 8


@dataclass(frozen=True)
class TangentVector:
    character: Character
    terms: dict[TriIndex, GaussQ]

    def render(self) -> str:
        return " ".join(f"{format_gauss(value)}*x{triple_label(t)}" for t, value in self.terms.items())


@dataclass(frozen=True)
class TangentFrame:
    point: TriIndex
    vectors: tuple[TangentVector, ...]

    def characters(self) -> list[Character]:
        return [v.character for v in self.vectors]


# shared by the suite worker threads; each point is computed once
_CACHE_LOCK = RLock()


def jacobian_at(point: TriIndex, basis: BasisTag = BasisTag.TILDE) -> DomainMatrix:
    with _CACHE_LOCK:
        return _jacobian_at(point, basis)


@lru_cache(maxsize=None)
def _jacobian_at(point: TriIndex, basis: BasisTag) -> DomainMatrix:
    ring = chart_ring(point)
    origin = [ZERO] * ring.ngens
    rows = [[evaluate(partial(f, gen), origin) for gen in ring.gens] for f in chart_equations(point, basis)]
    return matrix(rows, ncols=ring.ngens)


def jacobian_rank_at(point: TriIndex, basis: BasisTag = BasisTag.TILDE) -> tuple[DomainMatrix, int]:
    jacobian = jacobian_at(point, basis)
    return jacobian, mat_rank(jacobian)


def chart_characters(point: TriIndex) -> list[Character]:
    """Character of each chart variable q_J at U_I: char(J) - char(I)."""
    base = weight_of(point)
    return [weight_of(t) - base for t in adjacent(point)]


def tangent_frame_at(point: TriIndex) -> TangentFrame:
    with _CACHE_LOCK:
        return _tangent_frame_at(point)


@lru_cache(maxsize=None)
def _tangent_frame_at(point: TriIndex) -> TangentFrame:
    """Kernel of the Jacobian, computed one character block at a time."""
    jacobian = jacobian_at(point, BasisTag.TILDE)
    variables = adjacent(point)
    blocks: dict[Character, list[int]] = defaultdict(list)
    for column, character in enumerate(chart_characters(point)):
        blocks[character].append(column)

    vectors = []
    for character in sorted(blocks):
        columns = blocks[character]
        for kernel_vector in mat_kernel(jacobian.extract(list(range(jacobian.shape[0])), columns)):
            terms = {variables[col]: value for col, value in zip(columns, kernel_vector) if value}
            vectors.append(TangentVector(character, terms))

    if len(vectors) != TANGENT_DIMENSION:
        raise PreconditionError(
            f"tangent space at {triple_label(point)} has dimension {len(vectors)}, expected {TANGENT_DIMENSION}"
        )
    return TangentFrame(point, tuple(vectors))
