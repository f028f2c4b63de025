import logging
from functools import lru_cache

from sympy.polys.matrices import DomainMatrix

from app.core.config import settings
from app.fixtures.loader import load_unipotent_fixed
from app.modules.grassmann.exterior import Plane3, TriVector, lambda3, plucker, wedge3
from app.modules.octonion.algebra import Octonion, oct_mul, oct_norm, random_octonion
from app.modules.octonion.forms import is_associative_plane
from app.modules.scalars.gauss import I
from app.modules.scalars.linalg import apply, same_row_space
from app.modules.scalars.polys import poly_ring
from app.modules.scalars.sampling import random_gauss, seeded
from app.modules.verification.schemas import Check, VerificationReport
from app.modules.verification.serialize import make_check
from app.modules.xmin.model import build_model, covector_matrix, xmin_member

from .sl2 import (
    ActionKind,
    act,
    printed_unipotent_matrix,
    random_group_matrix,
    random_sl2,
    transform_plane,
    unipotent_matrix,
)

logger = logging.getLogger("xmin.actions")

W0 = (1, 2, 3)
U0 = (1, 6, 7)

# fixed point of the left unipotent family: e3 ^ (i e4 + e5) ^ (i e6 + e7)
LEFT_FIXED_PLANE = ((0, 0, 1, 0, 0, 0, 0), (0, 0, 0, I, 1, 0, 0), (0, 0, 0, 0, 0, I, 1))


def symbolic_parameters():
    return poly_ring(("u", "v"))


@lru_cache(maxsize=None)
def symbolic_lambda3(kind: ActionKind) -> DomainMatrix:
    return lambda3(unipotent_matrix(kind, symbolic_parameters().gens[0]))


def fixed_by_family(kind: ActionKind, w: TriVector) -> bool:
    """[g_u] w is proportional to w for symbolic u."""
    image = apply(symbolic_lambda3(kind), w.coords)
    ring = symbolic_parameters()
    pivot = next(k for k, value in enumerate(w.coords) if value)
    ratio = image[pivot] * (1 / w.coords[pivot])
    return all(value == ratio * (ring.one * c) for value, c in zip(image, w.coords))


def preserves_form_span(m: DomainMatrix) -> bool:
    forms = covector_matrix(build_model().covectors_e)
    return same_row_space(forms, forms * lambda3(m))


class ActionService:
    @staticmethod
    def kind_checks(kind: ActionKind, seed: int, samples: int) -> list[Check]:
        name = kind.value
        checks = []
        rng = seeded(seed, f"actions.{name}")
        bad_product = bad_norm = 0
        for _ in range(samples):
            g = random_sl2(rng)
            x, y = random_octonion(rng), random_octonion(rng)
            if act(kind, g, oct_mul(x, y)) != oct_mul(act(kind, g, x), act(kind, g, y)):
                bad_product += 1
            if oct_norm(act(kind, g, x)) != oct_norm(x):
                bad_norm += 1
        checks.append(
            make_check(f"actions.{name}_preserves_product", "SL2 actions", bad_product == 0, expected=0, computed=bad_product)
        )
        checks.append(
            make_check(f"actions.{name}_preserves_norm", "SL2 actions", bad_norm == 0, expected=0, computed=bad_norm)
        )

        ring = symbolic_parameters()
        u, v = ring.gens
        derived = unipotent_matrix(kind, u)
        printed = printed_unipotent_matrix(kind, u)
        checks.append(
            make_check(
                f"actions.{name}_unipotent_matrix",
                "unipotent matrices",
                derived == printed,
                expected=printed.transpose().to_list(),
                computed=derived.transpose().to_list(),
                note="rows are images of e_1..e_7",
            )
        )
        one_parameter = unipotent_matrix(kind, u) * unipotent_matrix(kind, v) == unipotent_matrix(kind, u + v)
        checks.append(
            make_check(
                f"actions.{name}_one_parameter",
                "unipotent matrices",
                one_parameter,
                expected=True,
                computed=one_parameter,
            )
        )

        bad = sum(1 for _ in range(3) if not preserves_form_span(unipotent_matrix(kind, random_gauss(rng))))
        checks.append(
            make_check(f"actions.{name}_preserves_forms", "unipotent matrices", bad == 0, expected=0, computed=bad)
        )
        return checks

    @staticmethod
    def fixed_point_checks() -> list[Check]:
        model = build_model()
        verdicts: dict[str, list[dict]] = {kind.value: [] for kind in ActionKind}
        for kind_name, terms in load_unipotent_fixed():
            kind = ActionKind(kind_name)
            w = TriVector.from_terms(terms)
            verdicts[kind.value].append(
                {"point": terms, "member": xmin_member(w, model), "fixed": fixed_by_family(kind, w)}
            )

        checks = []
        for kind in ActionKind:
            results = verdicts[kind.value]
            passed = all(r["member"] and r["fixed"] for r in results)
            corrected = None
            if not passed and kind == ActionKind.left:
                w = wedge3(*LEFT_FIXED_PLANE)
                if xmin_member(w, model) and fixed_by_family(kind, w):
                    corrected = w.terms()
            if not passed:
                logger.warning("listed %s unipotent fixed point fails", kind.value, extra={"check": f"actions.{kind.value}"})
            checks.append(
                make_check(
                    f"actions.{kind.value}_unipotent_fixed_points",
                    "unipotent fixed points",
                    passed,
                    expected=[{"member": True, "fixed": True}] * len(results),
                    computed=results,
                    corrected=corrected,
                )
            )
        return checks

    @staticmethod
    def report(seed: int = settings.DEFAULT_SEED, samples: int = settings.DEFAULT_SAMPLES) -> VerificationReport:
        report = VerificationReport(suite="actions", seed=seed, samples=samples)
        for kind in ActionKind:
            report.checks.extend(ActionService.kind_checks(kind, seed, samples))
        report.checks.extend(ActionService.fixed_point_checks())

        rng = seeded(seed, "actions.images")
        not_associative = outside = 0
        model = build_model()
        for _ in range(samples):
            word = random_group_matrix(rng)
            for base in (W0, U0):
                image = transform_plane(word, Plane3.coordinate(base))
                if not is_associative_plane(image):
                    not_associative += 1
                if not xmin_member(plucker(image), model):
                    outside += 1
        report.checks.append(
            make_check(
                "actions.associative_images",
                "images of the base planes",
                not_associative == 0 and outside == 0,
                expected={"not_associative": 0, "outside": 0},
                computed={"not_associative": not_associative, "outside": outside},
            )
        )

        diagonal_unit = act(ActionKind.diagonal, random_sl2(seeded(seed, "actions.unit")), Octonion.unit())
        report.checks.append(
            make_check(
                "actions.unit_fixed",
                "SL2 actions",
                diagonal_unit == Octonion.unit(),
                expected=list(Octonion.unit().coords),
                computed=list(diagonal_unit.coords),
            )
        )
        return report

