"""JSON forms of exact values.

Real Gaussian rationals serialize as ``"p/q"`` strings, the others as
``{"re": "p/q", "im": "r/s"}``; polynomials as sympy expression strings.
"""

from collections.abc import Mapping

from sympy.polys.domains.gaussiandomains import GaussianRational
from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from app.modules.scalars.gauss import format_gauss, gq

from .schemas import Check, CheckStatus


def index_label(indices) -> str:
    return "".join(str(i) for i in indices)


def jsonable(value):
    if isinstance(value, GaussianRational):
        if not value.y:
            return format_gauss(value)
        return {"re": format_gauss(gq(value.x)), "im": format_gauss(gq(value.y))}
    if isinstance(value, (PolyElement, FracElement)):
        return str(value.as_expr())
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Mapping):
        return {
            index_label(key) if isinstance(key, tuple) else str(key): jsonable(item)
            for key, item in value.items()
        }
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(item) for item in items]
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    return str(value)


def make_check(
    name: str,
    anchor: str,
    passed: bool | None,
    expected=None,
    computed=None,
    corrected=None,
    note: str | None = None,
) -> Check:
    return Check(
        name=name,
        anchor=anchor,
        expected=jsonable(expected),
        computed=jsonable(computed),
        status=CheckStatus.undecided if passed is None else CheckStatus.passed if passed else CheckStatus.discrepancy,
        corrected=jsonable(corrected),
        note=note,
    )
