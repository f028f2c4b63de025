import pytest
from hypothesis import given, settings, strategies as st

from app.core.errors import NotInChartError, RankDeficientError, ZeroTrivectorError
from app.fixtures.loader import load_identities
from app.modules.grassmann.audit import audit_identity, chart_identity_audit, relations_hold
from app.modules.grassmann.chart import adjacent, chart_coords, chart_minors, chart_ring, point_from_chart
from app.modules.grassmann.exterior import (
    PLUCKER_RELATIONS,
    TRIPLES,
    Plane3,
    TriVector,
    is_decomposable,
    on_grassmann_cone,
    plucker,
    plucker_relation_check,
    sort_sign,
    triple,
    wedge3,
)
from app.modules.grassmann.service import random_generic_trivector, random_plane, random_trivector
from app.modules.octonion.basis import BasisTag
from app.modules.scalars.gauss import ONE, gq
from app.modules.scalars.linalg import matrix
from app.modules.scalars.sampling import random_rows, seeded
from app.modules.verification.service import VerificationService

seeds = st.integers(min_value=0, max_value=2**32)


def test_index_bookkeeping():
    assert len(TRIPLES) == 35
    assert len(PLUCKER_RELATIONS) == 21 * 35
    assert sort_sign((2, 1, 3)) == (-1, (1, 2, 3))
    assert sort_sign((3, 1, 2)) == (1, (1, 2, 3))
    assert sort_sign((1, 1, 2))[0] == 0
    assert triple("247") == (2, 4, 7)
    with pytest.raises(ValueError):
        triple("742")


def test_coordinates_are_antisymmetric():
    w = TriVector.from_terms({(1, 2, 4): 3})
    assert w.coord((2, 1, 4)) == gq(-3)
    assert w.coord((4, 1, 2)) == gq(3)
    assert not w.coord((1, 1, 4))


def test_coordinate_plane_has_a_single_minor():
    w = plucker(Plane3.coordinate((2, 4, 7)))
    assert w.terms() == {(2, 4, 7): ONE}


def test_dependent_vectors_do_not_span_a_plane():
    with pytest.raises(RankDeficientError):
        Plane3.of([[1, 0, 0, 0, 0, 0, 0], [2, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0]])


def test_sum_of_disjoint_coordinate_trivectors_is_not_decomposable():
    w = TriVector.from_terms({(1, 2, 3): 1, (4, 5, 6): 1})
    assert not on_grassmann_cone(w)
    assert plucker_relation_check(w)
    decomposable, plane = is_decomposable(w)
    assert not decomposable and plane is None


def test_zero_trivector_has_no_plane():
    with pytest.raises(ZeroTrivectorError):
        is_decomposable(TriVector.from_terms({}))


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_minors_of_a_random_plane_satisfy_the_relations(seed):
    w = plucker(random_plane(seeded(seed, "test.minors")))
    assert on_grassmann_cone(w)
    decomposable, plane = is_decomposable(w)
    assert decomposable
    assert plucker(plane).proportional_to(w)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_kernel_test_agrees_with_relations_on_random_trivectors(seed):
    w = random_trivector(seeded(seed, "test.generic"))
    assert is_decomposable(w)[0] == on_grassmann_cone(w)


def test_basis_change_commutes_with_minors():
    plane = random_plane(seeded(5, "test.basis_change"))
    assert plucker(plane.to(BasisTag.TILDE)).coords == plucker(plane).to(BasisTag.TILDE).coords


def test_chart_parametrization():
    chart = (1, 2, 3)
    assert len(adjacent(chart)) == 12
    minors = chart_minors(chart)
    assert minors[chart] == chart_ring(chart).one
    for t, gen in zip(adjacent(chart), chart_ring(chart).gens):
        assert minors[t] == gen
    assert relations_hold(chart) == []


def test_chart_coordinates_round_trip_through_the_section():
    w = plucker(random_plane(seeded(11, "test.chart")))
    point = chart_coords(w, (1, 2, 3))
    assert point_from_chart(point).proportional_to(w)


def test_point_outside_the_chart():
    with pytest.raises(NotInChartError):
        chart_coords(TriVector.unit((4, 5, 6)), (1, 2, 3))


def test_printed_identity_with_a_flipped_sign_is_repaired():
    identities = {identity.name: identity for identity in load_identities()}
    good = audit_identity((1, 2, 3), identities["quadratic-2.245"])
    assert not good.is_discrepancy

    bad = audit_identity((1, 2, 3), identities["quadratic-1.145"])
    assert bad.is_discrepancy
    assert bad.corrected == "q145 = +124.135 -134.125"


def test_chart_audit_flags_exactly_the_mis_signed_lines():
    report = chart_identity_audit()
    flagged = {check.name for check in report.checks if check.is_discrepancy}
    quadratic = {f"grassmann.chart_identity.quadratic-1.{label}" for label in ("145", "146", "147", "156", "157", "167")}
    quadratic |= {f"grassmann.chart_identity.quadratic-3.{label}" for label in ("345", "346", "347", "356", "357", "367")}
    cubic = {f"grassmann.chart_identity.cubic.{label}" for label in ("456", "457", "467", "567")}
    assert flagged == quadratic | cubic | {"grassmann.chart_identity.straightening.456"}
    assert not report.get("grassmann.chart_param_coordinates").is_discrepancy
    assert not report.get("grassmann.chart_relations").is_discrepancy


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_wedge_coordinates_are_the_maximal_minors(seed):
    rows = random_rows(seeded(seed, "test.wedge"), 3, 7, 3)
    w = wedge3(*rows)
    m = matrix(rows)
    for t, value in zip(TRIPLES, w.coords):
        assert value == m.extract([0, 1, 2], [i - 1 for i in t]).det()


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_integer_cone_test_agrees_with_the_relations(seed):
    rng = seeded(seed, "test.cone")
    scale = gq(2, 3) / gq(5)
    on_cone = plucker(random_plane(rng)).scale(scale)
    generic = random_trivector(rng).scale(scale)
    for w in (on_cone, generic):
        assert on_grassmann_cone(w) == (not plucker_relation_check(w))
    assert on_grassmann_cone(on_cone)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_generic_samples_are_off_the_cone(seed):
    w = random_generic_trivector(seeded(seed, "test.off_cone"))
    assert not on_grassmann_cone(w)
    assert plucker_relation_check(w)
    assert not is_decomposable(w)[0]


def test_oracle_agreement_uses_both_kinds_of_trivector():
    report = VerificationService.run_sync("grassmann", seed=0, samples=3)
    assert report.ok
    oracle = report.get("grassmann.oracle_agreement")
    assert not oracle.is_discrepancy
    assert oracle.computed == {"decomposable": 0, "generic": 0}
    assert oracle.note == "1000 decomposable and 1000 non-decomposable trivectors"
    assert report.get("grassmann.chart_identity.quadratic-1.145").known
