from app.core.config import settings
from app.fixtures.loader import load_bb_weights, load_fixed_points, load_poincare, load_torus_matrix, load_weight_table
from app.modules.grassmann.exterior import TRIPLES
from app.modules.verification.schemas import Check, VerificationReport
from app.modules.verification.serialize import index_label, make_check
from app.modules.xmin.model import build_model

from .action import (
    coordinate_characters,
    diagonalized,
    is_diagonal,
    printed_torus_matrix,
    same_entries,
    torus_matrix_e,
)
from .bb import bb_decomposition, is_palindromic, is_regular, poincare, tangent_frames, vanishing_characters
from .characters import OneParamSubgroup
from .fixed_points import DeepCheckOutcome, eigenspace_deep_check, multiple_characters, torus_fixed_points, weight_table
from .orbits import special_orbit_count, wonderful_compare

SAME_CHAMBER = (OneParamSubgroup(10, 1), OneParamSubgroup(100, 1), OneParamSubgroup(7, 3))
OTHER_CHAMBERS = (OneParamSubgroup(1, 10), OneParamSubgroup(-10, -1))


def _ops_label(g: OneParamSubgroup) -> str:
    return f"{g.c},{g.d}"


class TorusService:
    @staticmethod
    def action_checks() -> list[Check]:
        checks = []
        printed = printed_torus_matrix(load_torus_matrix())
        computed = torus_matrix_e()
        checks.append(
            make_check(
                "torus.action_matrix",
                "torus action on the E basis",
                same_entries(printed, computed),
                expected=printed.to_list(),
                computed=computed.to_list(),
            )
        )
        diagonal = is_diagonal(diagonalized())
        characters = {str(index): ch.as_tuple() for index, ch in coordinate_characters().items()}
        checks.append(
            make_check(
                "torus.diagonalization",
                "eigenbasis of the torus",
                diagonal,
                expected=True,
                computed=characters,
            )
        )

        table = {ch.as_tuple(): sorted(members) for ch, members in weight_table().items()}
        printed_table = {ch: sorted(members) for ch, members in load_weight_table().items()}
        checks.append(
            make_check(
                "torus.weight_table",
                "eigenvalue table",
                table == printed_table,
                expected={str(ch): members for ch, members in printed_table.items()},
                computed={str(ch): members for ch, members in table.items()},
            )
        )
        return checks

    @staticmethod
    def fixed_point_checks() -> list[Check]:
        checks = []
        derived = {p.index: p.character.as_tuple() for p in torus_fixed_points()}
        printed = load_fixed_points()
        checks.append(
            make_check(
                "torus.fixed_points",
                "torus fixed points",
                derived == printed,
                expected=printed,
                computed=derived,
                note=f"{len(derived)} fixed points",
            )
        )

        printed_forms = build_model().printed_tilde
        from_printed = sorted(t for rank, t in enumerate(TRIPLES) if not any(c.coords[rank] for c in printed_forms))
        checks.append(
            make_check(
                "torus.fixed_points_printed_equations",
                "torus fixed points",
                from_printed == sorted(derived),
                expected=sorted(derived),
                computed=from_printed,
            )
        )

        for character in multiple_characters():
            result = eigenspace_deep_check(character)
            survivors = [index_label(s) for s in result.survivors]
            checks.append(
                make_check(
                    f"torus.deep_check.{character.a},{character.b}",
                    "fixed points in a repeated eigenspace",
                    None if result.outcome == DeepCheckOutcome.undecided else result.outcome == DeepCheckOutcome.confirmed,
                    expected=DeepCheckOutcome.confirmed.value,
                    computed={"outcome": result.outcome.value, "survivors": survivors},
                )
            )
        return checks

    @staticmethod
    def bb_checks() -> list[Check]:
        checks = []
        g = OneParamSubgroup(*settings.DEFAULT_OPS)
        regular = is_regular(g)
        checks.append(
            make_check(f"torus.regular.{_ops_label(g)}", "regular subgroup", regular, expected=True, computed=regular)
        )
        irregular = {
            _ops_label(h): [ch.as_tuple() for ch in vanishing_characters(h)]
            for h in (OneParamSubgroup(1, 1), OneParamSubgroup(0, 0))
        }
        checks.append(
            make_check(
                "torus.irregular",
                "regular subgroup",
                all(irregular.values()),
                expected="a vanishing tangent character for each",
                computed=irregular,
            )
        )

        printed = load_bb_weights()
        cells = bb_decomposition(g)
        for cell in cells:
            label = index_label(cell.point.index)
            ours = sorted(cell.weights)
            theirs = sorted(printed[cell.point.index])
            checks.append(
                make_check(
                    f"torus.bb_weights.{label}",
                    "tangent weights",
                    ours == theirs,
                    expected=printed[cell.point.index],
                    computed=list(cell.weights),
                    corrected=None if ours == theirs else ours,
                )
            )

        zero_weights = [index_label(c.point.index) for c in cells if c.plus_dim + c.minus_dim != 8]
        checks.append(
            make_check(
                "torus.bb_cell_dimensions",
                "plus and minus cells",
                not zero_weights,
                expected=[],
                computed=zero_weights,
                note="plus and minus dimensions add up to 8 at every fixed point",
            )
        )

        coefficients = poincare(g)
        stated = load_poincare()["stated"]
        checks.append(
            make_check("torus.poincare", "Poincare polynomial", coefficients == stated, stated, coefficients)
        )
        checks.append(
            make_check(
                "torus.poincare_palindromic",
                "Poincare polynomial",
                is_palindromic(coefficients),
                expected=True,
                computed=is_palindromic(coefficients),
            )
        )
        euler = sum(coefficients)
        checks.append(
            make_check("torus.euler", "Euler characteristic", euler == len(cells) == 15, expected=15, computed=euler)
        )

        chamber = {_ops_label(h): poincare(h) for h in SAME_CHAMBER}
        checks.append(
            make_check(
                "torus.chamber_invariance",
                "Poincare polynomial",
                all(value == coefficients for value in chamber.values()),
                expected=coefficients,
                computed=chamber,
            )
        )
        others = {_ops_label(h): poincare(h) for h in OTHER_CHAMBERS}
        checks.append(
            make_check(
                "torus.other_chambers",
                "Poincare polynomial",
                all(value == coefficients for value in others.values()),
                expected=coefficients,
                computed=others,
            )
        )
        return checks

    @staticmethod
    def orbit_checks() -> list[Check]:
        wonderful, difference = wonderful_compare()
        excess = load_poincare()["wonderful_excess"]
        orbits = special_orbit_count()
        values = {"+".join(sorted(j)) or "empty": sorted(value) for j, value in orbits.values.items()}
        return [
            make_check(
                "torus.wonderful",
                "wonderful compactification",
                difference == excess and all(d >= 0 for d in difference),
                expected=excess,
                computed={"wonderful": wonderful, "difference": difference},
            ),
            make_check(
                "torus.orbit_count",
                "G2 orbits",
                orbits.count == 3,
                expected=3,
                computed={"count": orbits.count, "delta": values},
            ),
        ]

    @staticmethod
    def report(seed: int = settings.DEFAULT_SEED, samples: int = settings.DEFAULT_SAMPLES) -> VerificationReport:
        report = VerificationReport(suite="torus", seed=seed, samples=samples)
        report.checks.extend(TorusService.action_checks())
        report.checks.extend(TorusService.fixed_point_checks())
        # warm the per-point frames once before the subgroup sweeps
        tangent_frames()
        report.checks.extend(TorusService.bb_checks())
        report.checks.extend(TorusService.orbit_checks())
        return report

    @staticmethod
    def fixed_points_payload() -> list[dict]:
        return [{"index": p.label, "character": list(p.character.as_tuple())} for p in torus_fixed_points()]

    @staticmethod
    def weights_payload() -> list[dict]:
        return [
            {"character": list(ch.as_tuple()), "triples": [index_label(t) for t in members]}
            for ch, members in sorted(weight_table().items())
        ]

    @staticmethod
    def bb_payload(g: OneParamSubgroup) -> dict:
        return {
            "ops": list(g.as_tuple()),
            "cells": [
                {"point": c.point.label, "weights": list(c.weights), "plus_dim": c.plus_dim, "minus_dim": c.minus_dim}
                for c in bb_decomposition(g)
            ],
        }

    @staticmethod
    def poincare_payload(g: OneParamSubgroup) -> dict:
        coefficients = poincare(g)
        return {"ops": list(g.as_tuple()), "coefficients": coefficients, "euler": sum(coefficients)}

    @staticmethod
    def orbits_payload() -> dict:
        wonderful, difference = wonderful_compare()
        count = special_orbit_count()
        return {
            "wonderful": wonderful,
            "difference": difference,
            "orbit_count": count.count,
            "delta": {"+".join(sorted(j)) or "empty": sorted(value) for j, value in count.values.items()},
        }
