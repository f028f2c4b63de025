"""Affine charts U_I of Gr(3,7) and their twelve local coordinates q_J = p_J / p_I."""

from dataclasses import dataclass
from functools import lru_cache

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, PolyRing

from app.core.errors import NotInChartError
from app.modules.octonion.basis import BasisTag
from app.modules.scalars.gauss import GaussQ
from app.modules.scalars.linalg import matrix
from app.modules.scalars.polys import evaluate, poly_ring

from .exterior import TRIPLES, TriIndex, TriVector, sort_sign, triple_label


def adjacent(chart: TriIndex) -> list[TriIndex]:
    """The 12 triples sharing exactly two indices with the chart index, in lex order."""
    return [t for t in TRIPLES if len(set(t) & set(chart)) == 2]


def variable_name(t: TriIndex) -> str:
    return f"q{triple_label(t)}"


@lru_cache(maxsize=None)
def chart_ring(chart: TriIndex) -> PolyRing:
    return poly_ring(tuple(variable_name(t) for t in adjacent(chart)))


def _entry_sign(chart: TriIndex, row: int, col: int) -> int:
    """Sign s with minor_J(identity block + s*q at (row, col)) = q."""
    trial = [[1 if c == i else 0 for c in range(1, 8)] for i in chart]
    trial[row][col - 1] = 1
    swapped = tuple(sorted(set(chart) - {chart[row]} | {col}))
    minor = matrix(trial, ncols=7).extract([0, 1, 2], [j - 1 for j in swapped]).det()
    return 1 if minor == QQ_I.one else -1


@lru_cache(maxsize=None)
def chart_param(chart: TriIndex) -> DomainMatrix:
    """3x7 canonical section: identity in columns ``chart``, signed chart variables elsewhere."""
    ring = chart_ring(chart)
    domain = ring.to_domain()
    rows = [[domain.zero] * 7 for _ in range(3)]
    for row, index in enumerate(chart):
        rows[row][index - 1] = domain.one
    for t, gen in zip(adjacent(chart), ring.gens):
        removed = next(i for i in chart if i not in t)
        added = next(j for j in t if j not in chart)
        row = chart.index(removed)
        rows[row][added - 1] = gen if _entry_sign(chart, row, added) > 0 else -gen
    return DomainMatrix(rows, (3, 7), domain)


@lru_cache(maxsize=None)
def chart_minors(chart: TriIndex) -> dict[TriIndex, PolyElement]:
    param = chart_param(chart)
    return {t: param.extract([0, 1, 2], [j - 1 for j in t]).det() for t in TRIPLES}


def minor_accessor(chart: TriIndex):
    minors = chart_minors(chart)
    zero = chart_ring(chart).zero

    def coord(indices: tuple[int, ...]):
        sign, ordered = sort_sign(indices)
        if not sign:
            return zero
        return minors[ordered] if sign > 0 else -minors[ordered]

    return coord


@dataclass(frozen=True)
class ChartPoint:
    chart: TriIndex
    q: dict[TriIndex, GaussQ]

    def __post_init__(self):
        if sorted(self.q) != adjacent(self.chart):
            raise ValueError(f"chart U_{triple_label(self.chart)} needs exactly its 12 adjacent coordinates")

    def values(self) -> list[GaussQ]:
        return [self.q[t] for t in adjacent(self.chart)]


def chart_coords(w: TriVector, chart: TriIndex) -> ChartPoint:
    p_chart = w.coord(chart)
    if not p_chart:
        raise NotInChartError(f"p_{triple_label(chart)} vanishes: not in chart U_{triple_label(chart)}")
    return ChartPoint(chart, {t: w.coord(t) / p_chart for t in adjacent(chart)})


def point_from_chart(point: ChartPoint, basis: BasisTag = BasisTag.E) -> TriVector:
    """Normalized trivector (p_I = 1) whose chart coordinates are ``point``."""
    minors = chart_minors(point.chart)
    values = point.values()
    return TriVector(tuple(evaluate(minors[t], values) for t in TRIPLES), basis)
