import pytest
from hypothesis import given, settings, strategies as st

from app.core.errors import NotImaginaryError
from app.fixtures.loader import load_known_discrepancies, parse_known_discrepancy
from app.modules.grassmann.exterior import Plane3
from app.modules.octonion.algebra import Octonion, e, oct_norm, random_imaginary, triple_cross
from app.modules.octonion.forms import (
    associative_triple_norm,
    calibration_constant,
    chi3,
    chi_coefficient_tables,
    chi_component_tables,
    form_expansion,
    format_expansion,
    gram_determinant,
    is_associative_plane,
    orthogonal_triple,
    phi3,
    phi_table,
    plane_octonions,
    star_phi4,
    star_phi_table,
)
from app.modules.scalars.gauss import gq
from app.modules.scalars.sampling import seeded
from app.modules.verification.schemas import VerificationReport
from app.modules.verification.serialize import make_check
from app.modules.verification.service import VerificationService

seeds = st.integers(min_value=0, max_value=2**32)
HALF = gq("1/2")


def test_phi_on_the_quaternion_triple():
    assert phi3(e(1), e(2), e(3)) == gq(1)
    assert phi3(e(2), e(1), e(3)) == gq(-1)
    assert format_expansion(phi_table()).startswith("e^123")


def test_phi_has_seven_terms_and_star_phi_seven():
    assert len(phi_table()) == 7
    assert len(star_phi_table()) == 7


def test_star_phi_vanishes_on_a_repeated_vector():
    rng = seeded(1, "test.star_phi")
    x, y, z = (random_imaginary(rng) for _ in range(3))
    assert not star_phi4(x, x, y, z)


def test_forms_need_imaginary_arguments():
    with pytest.raises(NotImaginaryError):
        phi3(Octonion.unit(), e(1), e(2))


def test_unknown_form_is_rejected():
    with pytest.raises(ValueError):
        form_expansion("psi")


def test_calibration_constant_is_one_half():
    constant, uniform = calibration_constant()
    assert uniform
    assert constant == HALF


def test_chi_pairings_are_coefficients_times_norm():
    raw = chi_coefficient_tables()
    pairings = chi_component_tables()
    for m in range(1, 8):
        assert {t: value * oct_norm(e(m)) for t, value in raw[m].items()} == pairings[m]


@pytest.mark.parametrize("indices, associative", [((1, 2, 3), True), ((1, 6, 7), True), ((1, 4, 6), False)])
def test_associative_coordinate_planes(indices, associative):
    plane = Plane3.coordinate(indices)
    assert is_associative_plane(plane) is associative
    if associative:
        assert chi3(*plane_octonions(plane)).is_zero()
    else:
        assert not chi3(*plane_octonions(plane)).is_zero()


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_phi_squared_plus_associator_norm_is_the_gram_determinant(seed):
    rng = seeded(seed, "test.gram")
    x, y, z = (random_imaginary(rng) for _ in range(3))
    assert associative_triple_norm(x, y, z, HALF) == gram_determinant([x, y, z])


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_triple_cross_norm_is_multiplicative_on_orthogonal_triples(seed):
    x, y, z = orthogonal_triple(seeded(seed, "test.orthogonal"))
    assert oct_norm(triple_cross(x, y, z)) == oct_norm(x) * oct_norm(y) * oct_norm(z)


def test_triple_cross_norm_fails_on_the_unit():
    unit = Octonion.unit()
    assert triple_cross(unit, unit, unit).is_zero()


def test_forms_suite_only_reports_listed_discrepancies():
    report = VerificationService.run_sync("forms", seed=0, samples=5)
    assert report.ok
    constant = report.get("forms.calibration_constant")
    assert constant.is_discrepancy and constant.known
    assert constant.corrected == "1/2"
    assert not report.get("forms.associator_norm_identity").is_discrepancy
    assert not report.get("forms.phi_expansion").is_discrepancy


def test_triple_cross_norm_general_reports_the_unit_witness():
    report = VerificationService.run_sync("forms", seed=0, samples=5)
    check = report.get("forms.triple_cross_norm_general")
    assert check.is_discrepancy and check.known
    assert check.computed == "0"
    assert check.expected == "1"


def _calibration_report(constant) -> VerificationReport:
    report = VerificationReport(suite="forms")
    report.checks.append(
        make_check("forms.calibration_constant", "x*y*z = phi e + c [x,y,z]", False, expected=gq(1), computed=constant)
    )
    return report


def test_allowlist_entry_is_pinned_to_its_computed_value():
    known = load_known_discrepancies()
    assert known["forms.calibration_constant"].value == "1/2"

    listed = VerificationService.mark_known(_calibration_report(HALF), known)
    assert listed.checks[0].known
    assert listed.ok

    changed = VerificationService.mark_known(_calibration_report(gq("1/3")), known)
    assert not changed.checks[0].known
    assert not changed.ok


def test_allowlist_entry_needs_a_pinned_value():
    entry = parse_known_discrepancy("xmin.tilde_forms_span  computed  false")
    assert entry.field == "computed" and entry.value is False
    with pytest.raises(ValueError):
        parse_known_discrepancy("forms.calibration_constant")
    with pytest.raises(ValueError):
        parse_known_discrepancy('forms.calibration_constant  expected  "1"')
