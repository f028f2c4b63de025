import pytest
from hypothesis import given, settings, strategies as st

from app.core.errors import NotImaginaryError
from app.fixtures.loader import load_unipotent_fixed
from app.modules.actions.service import LEFT_FIXED_PLANE, fixed_by_family, preserves_form_span, symbolic_parameters
from app.modules.actions.sl2 import (
    ActionKind,
    SL2Element,
    act,
    act_matrix,
    identity_element,
    printed_unipotent_matrix,
    random_group_matrix,
    random_sl2,
    sl2_diag_act,
    sl2_left_act,
    transform_plane,
    unipotent,
    unipotent_matrix,
)
from app.modules.grassmann.exterior import Plane3, TriVector, is_decomposable, plucker, wedge3
from app.modules.octonion.algebra import Octonion, e, oct_mul, oct_norm, random_octonion
from app.modules.octonion.forms import is_associative_plane
from app.modules.scalars.gauss import gq
from app.modules.scalars.linalg import identity
from app.modules.scalars.sampling import seeded
from app.modules.verification.service import VerificationService
from app.modules.xmin.model import xmin_member

seeds = st.integers(min_value=0, max_value=2**32)
KINDS = list(ActionKind)


def test_determinant_must_be_one():
    with pytest.raises(ValueError):
        SL2Element.of([[2, 0], [0, 1]])
    g = random_sl2(seeded(0, "test.sl2"))
    assert (g * g.inverse()).matrix == identity_element().matrix


@pytest.mark.parametrize("kind", KINDS)
def test_identity_acts_trivially(kind):
    x = random_octonion(seeded(1, "test.identity"))
    assert act(kind, identity_element(), x) == x
    assert act_matrix(kind, identity_element()) == identity(7)


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_actions_are_automorphisms(kind, seed):
    rng = seeded(seed, f"test.{kind.value}")
    g = random_sl2(rng)
    x, y = random_octonion(rng), random_octonion(rng)
    assert act(kind, g, oct_mul(x, y)) == oct_mul(act(kind, g, x), act(kind, g, y))
    assert oct_norm(act(kind, g, x)) == oct_norm(x)
    assert act(kind, g, Octonion.unit()) == Octonion.unit()


@pytest.mark.parametrize("kind", KINDS)
def test_matrices_compose_like_the_group(kind):
    rng = seeded(2, f"test.compose.{kind.value}")
    g, h = random_sl2(rng), random_sl2(rng)
    assert act_matrix(kind, g * h) == act_matrix(kind, g) * act_matrix(kind, h)


def test_restricted_actions_need_imaginary_arguments():
    with pytest.raises(NotImaginaryError):
        sl2_diag_act(identity_element(), Octonion.unit())
    assert sl2_diag_act(identity_element(), e(3)) == e(3)
    with pytest.raises(NotImaginaryError):
        sl2_left_act(identity_element(), Octonion.unit())
    g = random_sl2(seeded(5, "test.left"))
    assert sl2_left_act(g, e(2)) == e(2)


@pytest.mark.parametrize("kind", KINDS)
def test_symbolic_unipotent_matrices(kind):
    u, v = symbolic_parameters().gens
    derived = unipotent_matrix(kind, u)
    assert derived == printed_unipotent_matrix(kind, u)
    assert derived * unipotent_matrix(kind, v) == unipotent_matrix(kind, u + v)
    assert unipotent(u).matrix.det() == symbolic_parameters().one


@pytest.mark.parametrize("kind", KINDS)
def test_unipotent_elements_preserve_the_linear_forms(kind):
    assert preserves_form_span(unipotent_matrix(kind, gq(2, -1)))


def test_images_of_the_base_plane_stay_associative():
    rng = seeded(4, "test.images")
    for _ in range(3):
        image = transform_plane(random_group_matrix(rng), Plane3.coordinate((1, 2, 3)))
        assert is_associative_plane(image)
        assert xmin_member(plucker(image))


def test_listed_unipotent_fixed_points():
    listed = {}
    for kind_name, terms in load_unipotent_fixed():
        listed.setdefault(kind_name, []).append(TriVector.from_terms(terms))

    for w in listed["diagonal"]:
        assert xmin_member(w)
        assert fixed_by_family(ActionKind.diagonal, w)

    first, second = listed["left"]
    assert xmin_member(first) and fixed_by_family(ActionKind.left, first)
    assert not is_decomposable(second)[0]


def test_left_family_fixes_the_replacement_point():
    w = wedge3(*LEFT_FIXED_PLANE)
    assert xmin_member(w)
    assert fixed_by_family(ActionKind.left, w)


def test_actions_suite_only_reports_listed_discrepancies():
    report = VerificationService.run_sync("actions", seed=0, samples=3)
    assert report.ok
    assert not report.get("actions.diagonal_unipotent_fixed_points").is_discrepancy
    left = report.get("actions.left_unipotent_fixed_points")
    assert left.is_discrepancy and left.known
    assert left.corrected == {"346": "-1", "347": {"re": "0", "im": "1"}, "356": {"re": "0", "im": "1"}, "357": "1"}
