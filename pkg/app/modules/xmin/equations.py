"""The seven linear forms pulled back to an affine chart U_I."""

import logging
from functools import lru_cache

from sympy.polys.rings import PolyElement

from app.fixtures.loader import load_polynomials
from app.modules.grassmann.audit import render_terms, repair_signs, term_polynomial
from app.modules.grassmann.chart import chart_minors, chart_ring
from app.modules.grassmann.exterior import TRIPLES, TriIndex
from app.modules.octonion.basis import BasisTag
from app.modules.scalars.gauss import GaussQ
from app.modules.scalars.polys import linear_part
from app.modules.verification.schemas import Check
from app.modules.verification.serialize import make_check

from .model import build_model

logger = logging.getLogger("xmin.equations")

PRINTED_CHART: TriIndex = (1, 2, 3)


@lru_cache(maxsize=None)
def chart_equations(chart: TriIndex, basis: BasisTag = BasisTag.E) -> tuple[PolyElement, ...]:
    """f_m(q) = sum_t c_m[t] * minor_t(chart_param(chart)); polynomials of degree at most 3."""
    minors = chart_minors(chart)
    ring = chart_ring(chart)
    equations = []
    for covector in build_model().covectors(basis):
        total = ring.zero
        for t, coeff in zip(TRIPLES, covector.coords):
            if coeff:
                total += minors[t] * coeff
        equations.append(total)
    return tuple(equations)


def linear_parts(chart: TriIndex, basis: BasisTag = BasisTag.E) -> list[dict[str, GaussQ]]:
    return [linear_part(f) for f in chart_equations(chart, basis)]


def _printed_linear_part(terms) -> dict[str, GaussQ]:
    return {f"q{''.join(map(str, factors[0]))}": coeff for coeff, factors in terms if len(factors) == 1}


def chart_equation_checks() -> list[Check]:
    """Printed f_1..f_7 on U_123 against the pulled-back forms."""
    derived = chart_equations(PRINTED_CHART, BasisTag.E)
    printed = load_polynomials("chart_forms.txt")
    checks = []
    for m in sorted(printed):
        terms = printed[m]
        target = derived[m - 1]
        name = f"xmin.chart_equation.{m}"
        if term_polynomial(PRINTED_CHART, terms) == target:
            checks.append(make_check(name, "forms on U_123", True, expected=render_terms(terms), computed=target))
            continue
        repaired = repair_signs(PRINTED_CHART, target, terms)
        corrected = render_terms(repaired) if repaired else target
        logger.warning("chart equation %d disagrees with the pulled-back form", m, extra={"check": name})
        checks.append(
            make_check(
                name,
                "forms on U_123",
                False,
                expected=render_terms(terms),
                computed=target,
                corrected=corrected,
            )
        )

    computed_linear = [linear_part(f) for f in derived]
    printed_linear = [_printed_linear_part(printed[m]) for m in sorted(printed)]
    checks.append(
        make_check(
            "xmin.chart_equation_linear_parts",
            "forms on U_123",
            computed_linear == printed_linear,
            expected=printed_linear,
            computed=computed_linear,
        )
    )
    return checks
