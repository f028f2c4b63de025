import pytest

from app.core.errors import IrregularSubgroupError, PreconditionError
from app.fixtures.loader import load_fixed_points, load_poincare, load_weight_table
from app.modules.scalars.gauss import gq
from app.modules.scalars.linalg import identity
from app.modules.torus.action import coordinate_characters, diagonalized, is_diagonal, torus_element, weight_of
from app.modules.torus.bb import (
    bb_decomposition,
    is_palindromic,
    is_regular,
    poincare,
    require_regular,
    tangent_frames,
    vanishing_characters,
)
from app.modules.torus.characters import BBCell, Character, FixedPoint, OneParamSubgroup
from app.modules.torus.fixed_points import (
    DeepCheckOutcome,
    eigenspace_deep_check,
    multiple_characters,
    torus_fixed_points,
    weight_table,
)
from app.modules.torus.orbits import delta_i, special_orbit_count, wonderful_compare
from app.modules.verification.service import VerificationService
from app.modules.xmin.smoothness import tangent_frame_at

PRINTED_OPS = OneParamSubgroup(10, 1)


def test_character_arithmetic():
    assert Character(1, -1) + Character(2, 3) == Character(3, 2)
    assert Character(1, -1) - Character(2, 3) == Character(-1, -4)
    assert -Character(1, -1) == Character(-1, 1)
    assert Character(3, 1).pair(PRINTED_OPS) == 31
    assert str(Character(2, -2)) == "(2, -2)"


def test_subgroup_parsing():
    assert OneParamSubgroup.parse("10,1") == PRINTED_OPS
    assert OneParamSubgroup.parse("(7, 3)") == OneParamSubgroup(7, 3)
    with pytest.raises(ValueError):
        OneParamSubgroup.parse("1")
    with pytest.raises(ValueError):
        OneParamSubgroup.parse("a,b")


def test_cell_dimensions_count_signed_weights():
    cell = BBCell(FixedPoint((1, 2, 3), Character(0, 0)), (3, -1, 2, -5))
    assert cell.plus_dim == 2
    assert cell.minus_dim == 2


def test_eigenbasis_characters():
    assert is_diagonal(diagonalized())
    assert {i: ch.as_tuple() for i, ch in coordinate_characters().items()} == {
        1: (0, 0),
        2: (-2, 0),
        3: (2, 0),
        4: (1, -1),
        5: (-1, 1),
        6: (-1, -1),
        7: (1, 1),
    }


def test_torus_is_a_homomorphism():
    assert torus_element(gq(1), gq(1)) == identity(7)
    a, b = gq(2), gq(1, 1)
    c, d = gq(-3), gq("1/2")
    assert torus_element(a, b) * torus_element(c, d) == torus_element(a * c, b * d)


def test_weight_table_matches_the_printed_one():
    table = {ch.as_tuple(): sorted(members) for ch, members in weight_table().items()}
    assert table == {ch: sorted(members) for ch, members in load_weight_table().items()}
    assert weight_of((3, 5, 7)) == Character(2, 2)


def test_fifteen_fixed_points_with_their_characters():
    points = torus_fixed_points()
    assert len(points) == 15
    assert {p.index: p.character.as_tuple() for p in points} == load_fixed_points()


@pytest.mark.parametrize("character", multiple_characters())
def test_repeated_eigenspaces_hold_no_extra_fixed_points(character):
    result = eigenspace_deep_check(character)
    assert result.outcome == DeepCheckOutcome.confirmed
    fixed = {p.index for p in torus_fixed_points()}
    assert set(result.coordinate_points) <= fixed


def test_deep_check_needs_a_repeated_character():
    with pytest.raises(PreconditionError):
        eigenspace_deep_check(Character(2, 2))


def test_printed_subgroup_is_regular_and_the_diagonal_one_is_not():
    assert is_regular(PRINTED_OPS)
    assert Character(1, -1) in vanishing_characters(OneParamSubgroup(1, 1))
    with pytest.raises(IrregularSubgroupError, match=r"\(1, -1\)"):
        require_regular(OneParamSubgroup(1, 1))


def test_tangent_weights_at_357():
    cells = {cell.point.label: cell for cell in bb_decomposition(PRINTED_OPS)}
    assert sorted(cells["357"].weights) == sorted([9, -31, -11, -2, 18, -40, -11, -20])
    assert cells["357"].plus_dim == 2
    assert sorted(cells["123"].weights) == sorted([11, -11, -9, 9, 31, 29, -31, -29])
    assert all(cell.plus_dim + cell.minus_dim == 8 for cell in cells.values())


@pytest.mark.parametrize("ops", [PRINTED_OPS, OneParamSubgroup(100, 1), OneParamSubgroup(7, 3), OneParamSubgroup(-10, -1)])
def test_poincare_coefficients(ops):
    coefficients = poincare(ops)
    assert coefficients == [1, 1, 2, 2, 3, 2, 2, 1, 1]
    assert is_palindromic(coefficients)
    assert sum(coefficients) == 15


def test_wonderful_compactification_exceeds_x_min():
    wonderful, difference = wonderful_compare()
    assert wonderful == [1, 2, 4, 4, 5, 4, 4, 2, 1]
    assert difference == [0, 1, 2, 2, 2, 2, 2, 1, 0]


def test_orbit_count():
    assert delta_i(frozenset()) == frozenset({"2a1", "2a2"})
    assert delta_i(frozenset({"2a1"})) == frozenset()
    assert delta_i(frozenset({"2a2"})) == frozenset({"2a1"})
    assert special_orbit_count().count == 3


def test_tangent_frames_are_computed_once():
    frames = tangent_frames()
    assert len(frames) == 15
    assert all(len(frame.vectors) == 8 for frame in frames.values())
    assert tangent_frame_at((1, 2, 3)) is frames[(1, 2, 3)]


def test_torus_suite_only_reports_listed_discrepancies():
    report = VerificationService.run_sync("torus")
    assert report.ok
    assert not report.get("torus.poincare").is_discrepancy
    assert not report.get("torus.action_matrix").is_discrepancy
    assert report.get("torus.bb_weights.357").known
    assert not report.get("torus.bb_weights.123").is_discrepancy
    assert report.get("torus.bb_weights.357").corrected == [-40, -31, -20, -11, -11, -2, 9, 18]
    assert report.get("torus.bb_weights.126").corrected == [-9, 2, 9, 11, 20, 29, 31, 31]


def test_stated_polynomials_come_from_the_fixture():
    stated = load_poincare()
    assert stated["stated"] == poincare(OneParamSubgroup(10, 1))
    report = VerificationService.run_sync("torus")
    assert report.get("torus.poincare").expected == stated["stated"]
    assert report.get("torus.wonderful").expected == stated["wonderful_excess"]
