from app.core.config import settings
from app.fixtures.loader import load_entries, load_tangent_basis
from app.modules.actions.sl2 import random_group_matrix, transform_plane
from app.modules.grassmann.chart import adjacent, chart_ring
from app.modules.grassmann.exterior import Covector3, Plane3, TriVector, on_grassmann_cone, plucker
from app.modules.grassmann.service import random_plane
from app.modules.octonion.basis import BasisTag
from app.modules.scalars.gauss import ZERO, format_gauss
from app.modules.scalars.linalg import mat_rank, matrix, same_row_space
from app.modules.scalars.polys import evaluate, linear_part
from app.modules.scalars.sampling import seeded
from app.modules.torus.characters import OneParamSubgroup
from app.modules.torus.fixed_points import torus_fixed_points
from app.modules.verification.schemas import Check, VerificationReport
from app.modules.verification.serialize import index_label, make_check

from .equations import PRINTED_CHART, chart_equation_checks, chart_equations
from .model import build_model, covector_matrix, linear_values, proportionality, xmin_member
from .smoothness import TANGENT_DIMENSION, chart_characters, jacobian_rank_at, tangent_frame_at

W0 = (1, 2, 3)
U0 = (1, 6, 7)
PRINTED_OPS = OneParamSubgroup(10, 1)


def _form_checks(prefix: str, derived: tuple[Covector3, ...], printed: tuple[Covector3, ...]) -> list[Check]:
    checks = []
    for m, (ours, theirs) in enumerate(zip(derived, printed), start=1):
        factor = proportionality(ours, theirs)
        checks.append(
            make_check(
                f"{prefix}.{m}",
                "defining linear forms",
                factor is not None,
                expected=theirs.terms(),
                computed=ours.terms(),
                corrected=None if factor is not None else ours.terms(),
                note=f"printed = {format_gauss(factor)} * derived" if factor is not None else "not proportional to the derived form",
            )
        )
    same = same_row_space(covector_matrix(derived), covector_matrix(printed))
    checks.append(
        make_check(f"{prefix}_span", "defining linear forms", same, expected=True, computed=same)
    )
    return checks


def _vector_rows(vectors, variables) -> list[list]:
    return [[vector.get(t, ZERO) for t in variables] for vector in vectors]


class XminService:
    @staticmethod
    def model_checks(seed: int, samples: int) -> list[Check]:
        model = build_model()
        checks = []
        rank = model.rank()
        checks.append(make_check("xmin.covector_rank", "defining linear forms", rank == 7, expected=7, computed=rank))
        checks.extend(_form_checks("xmin.linear_forms", model.covectors_e, model.printed_e))
        checks.extend(_form_checks("xmin.tilde_forms", model.covectors_tilde, model.printed_tilde))

        annihilated = {
            label: not any(linear_values(plucker(Plane3.coordinate(t)), model))
            for label, t in (("W0", W0), ("U0", U0))
        }
        checks.append(
            make_check(
                "xmin.covectors_vanish_on_base_planes",
                "chi vanishes on associative planes",
                all(annihilated.values()),
                expected={"W0": True, "U0": True},
                computed=annihilated,
            )
        )

        examples = {
            "e123": (TriVector.unit(W0), True),
            "e167": (TriVector.unit(U0), True),
            "e146": (TriVector.unit((1, 4, 6)), False),
            "tilde 124": (TriVector.unit((1, 2, 4), BasisTag.TILDE), False),
        }
        computed = {label: xmin_member(w, model) for label, (w, _) in examples.items()}
        expected = {label: verdict for label, (_, verdict) in examples.items()}
        checks.append(
            make_check("xmin.membership_examples", "membership", computed == expected, expected=expected, computed=computed)
        )

        rng = seeded(seed, "xmin.orbits")
        outside = 0
        for _ in range(samples):
            word = random_group_matrix(rng)
            for base in (W0, U0):
                if not xmin_member(plucker(transform_plane(word, Plane3.coordinate(base))), model):
                    outside += 1
        checks.append(
            make_check(
                "xmin.orbit_samples",
                "orbit closure of the base plane",
                outside == 0,
                expected=0,
                computed=outside,
                note=f"{samples} random group words applied to W0 and U0",
            )
        )

        rng = seeded(seed, "xmin.oracles")
        disagreements = 0
        for _ in range(samples):
            w = plucker(random_plane(rng))
            by_relations = not any(linear_values(w, model)) and on_grassmann_cone(w)
            if xmin_member(w, model) != by_relations:
                disagreements += 1
        checks.append(
            make_check(
                "xmin.membership_oracles",
                "membership",
                disagreements == 0,
                expected=0,
                computed=disagreements,
            )
        )
        return checks

    @staticmethod
    def smoothness_checks() -> list[Check]:
        checks = chart_equation_checks()
        points = [p.index for p in torus_fixed_points()]

        tilde_linear = [linear_part(f) for f in chart_equations(PRINTED_CHART, BasisTag.TILDE)[:3]]
        checks.append(
            make_check(
                "xmin.tilde_chart_linear_parts",
                "eigenbasis forms on U_123",
                not any(tilde_linear),
                expected=[{}, {}, {}],
                computed=tilde_linear,
            )
        )

        nonzero_at_origin = []
        for point in points:
            origin = [ZERO] * chart_ring(point).ngens
            if any(evaluate(f, origin) for f in chart_equations(point, BasisTag.TILDE)):
                nonzero_at_origin.append(index_label(point))
        checks.append(
            make_check("xmin.chart_origin", "fixed points lie on X_min", not nonzero_at_origin, expected=[], computed=nonzero_at_origin)
        )

        ranks = {index_label(point): jacobian_rank_at(point)[1] for point in points}
        checks.append(
            make_check(
                "xmin.jacobian_rank",
                "smoothness at the fixed points",
                set(ranks.values()) == {4},
                expected={label: 4 for label in ranks},
                computed=ranks,
            )
        )

        jacobian, _ = jacobian_rank_at(PRINTED_CHART)
        rows = [[ZERO] * 12 for _ in range(7)]
        for r, c, value in load_entries("jacobian_123.txt"):
            rows[r - 1][c - 1] = value
        printed = matrix(rows, ncols=12)
        printed_rank = mat_rank(printed)
        checks.append(
            make_check("xmin.jacobian_123_printed_rank", "smoothness at 123", printed_rank == 4, expected=4, computed=printed_rank)
        )
        same = same_row_space(printed, jacobian)
        checks.append(
            make_check(
                "xmin.jacobian_123_row_space",
                "smoothness at 123",
                same,
                expected=printed.to_list(),
                computed=jacobian.to_list(),
                corrected=None if same else jacobian.to_list(),
            )
        )

        frames = {point: tangent_frame_at(point) for point in points}
        mixed = []
        for point, frame in frames.items():
            characters = dict(zip(adjacent(point), chart_characters(point)))
            for vector in frame.vectors:
                if {characters[t] for t in vector.terms} != {vector.character}:
                    mixed.append(index_label(point))
        dims = {index_label(point): len(frame.vectors) for point, frame in frames.items()}
        checks.append(
            make_check(
                "xmin.tangent_homogeneous",
                "tangent eigenbases",
                not mixed and set(dims.values()) == {TANGENT_DIMENSION},
                expected=[],
                computed=mixed,
                note=f"tangent dimensions {sorted(set(dims.values()))}",
            )
        )

        variables = adjacent(PRINTED_CHART)
        printed_basis = load_tangent_basis()
        frame = frames[PRINTED_CHART]
        printed_rows = matrix(_vector_rows([terms for _, terms in printed_basis], variables), ncols=12)
        kernel_rows = matrix(_vector_rows([v.terms for v in frame.vectors], variables), ncols=12)
        same = same_row_space(printed_rows, kernel_rows)
        checks.append(
            make_check(
                "xmin.tangent_basis_123",
                "tangent eigenbasis at 123",
                same,
                expected=[terms for _, terms in printed_basis],
                computed=[v.terms for v in frame.vectors],
                corrected=None if same else [v.render() for v in frame.vectors],
            )
        )

        characters = dict(zip(variables, chart_characters(PRINTED_CHART)))
        weights = []
        for _, terms in printed_basis:
            support = {characters[t] for t in terms}
            weights.append(support.pop().pair(PRINTED_OPS) if len(support) == 1 else None)
        printed_weights = [weight for weight, _ in printed_basis]
        checks.append(
            make_check(
                "xmin.tangent_weights_123",
                "tangent weights at 123",
                weights == printed_weights,
                expected=printed_weights,
                computed=weights,
            )
        )
        return checks

    @staticmethod
    def report(seed: int = settings.DEFAULT_SEED, samples: int = settings.DEFAULT_SAMPLES) -> VerificationReport:
        report = VerificationReport(suite="xmin", seed=seed, samples=samples)
        report.checks.extend(XminService.model_checks(seed, samples))
        report.checks.extend(XminService.smoothness_checks())
        return report
