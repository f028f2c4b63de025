"""Bialynicki-Birula cells and the Poincare polynomial from tangent weights."""

from functools import lru_cache

from app.core.errors import IrregularSubgroupError
from app.modules.grassmann.exterior import TriIndex
from app.modules.xmin.smoothness import TANGENT_DIMENSION, TangentFrame, tangent_frame_at

from .characters import BBCell, Character, OneParamSubgroup
from .fixed_points import torus_fixed_points


@lru_cache(maxsize=None)
def tangent_frames() -> dict[TriIndex, TangentFrame]:
    return {p.index: tangent_frame_at(p.index) for p in torus_fixed_points()}


def tangent_characters() -> set[Character]:
    return {ch for frame in tangent_frames().values() for ch in frame.characters()}


def vanishing_characters(g: OneParamSubgroup) -> list[Character]:
    return sorted(ch for ch in tangent_characters() if ch.pair(g) == 0)


def is_regular(g: OneParamSubgroup) -> bool:
    return not vanishing_characters(g)


def require_regular(g: OneParamSubgroup) -> None:
    vanishing = vanishing_characters(g)
    if vanishing:
        raise IrregularSubgroupError(g.as_tuple(), [ch.as_tuple() for ch in vanishing])


def bb_decomposition(g: OneParamSubgroup) -> list[BBCell]:
    require_regular(g)
    cells = []
    for p in torus_fixed_points():
        frame = tangent_frames()[p.index]
        cells.append(BBCell(p, tuple(ch.pair(g) for ch in frame.characters())))
    return cells


def poincare(g: OneParamSubgroup) -> list[int]:
    """Coefficient k at t^d counts the plus cells of complex dimension d."""
    coefficients = [0] * (TANGENT_DIMENSION + 1)
    for cell in bb_decomposition(g):
        coefficients[cell.plus_dim] += 1
    return coefficients


def is_palindromic(coefficients: list[int]) -> bool:
    return coefficients == coefficients[::-1]
