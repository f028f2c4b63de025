"""Gaussian rationals ``a + b*i`` over ``QQ_I``.

sympy's ``QQ_I`` elements already live in canonical reduced form, so this module
only adds construction, parsing and the two operations the element type leaves
out (conjugation and a checked division).
"""

import re
from fractions import Fraction

from sympy import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from app.core.errors import ScalarDomainError

GaussQ = GaussianRational

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)

_TOKEN = re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)?"
    r"(?P<im>(?(re)[+-]|[+-]?)(?:\d+(?:/\d+)?\*)?i(?:/\d+)?)?$"
)


def _rational(value) -> QQ.dtype:
    if isinstance(value, (int, str, Fraction)):
        frac = Fraction(value)
        return QQ(frac.numerator, frac.denominator)
    return QQ.convert(value)


def gq(re=0, im=0) -> GaussQ:
    return QQ_I.new(_rational(re), _rational(im))


def is_zero(x: GaussQ) -> bool:
    return not x


def conj(x: GaussQ) -> GaussQ:
    return QQ_I.new(x.x, -x.y)


def gdiv(x: GaussQ, y: GaussQ) -> GaussQ:
    if not y:
        raise ScalarDomainError(f"division of {x} by zero")
    return x / y


def _imag_part(token: str) -> QQ.dtype:
    scale = QQ(-1) if token.startswith("-") else QQ(1)
    body = token.lstrip("+-")
    if "*" in body:
        coeff, body = body.split("*", 1)
        scale *= _rational(coeff)
    if body.startswith("i/"):
        scale /= QQ(int(body[2:]))
    return scale


def parse_gauss(token: str) -> GaussQ:
    """Parse fixture notation: ``3``, ``-1/2``, ``i``, ``-i/2``, ``1/2*i``, ``1/2-3*i``."""
    text = token.strip().replace(" ", "")
    match = _TOKEN.match(text)
    if not text or not match or not (match.group("re") or match.group("im")):
        raise ValueError(f"unparseable Gaussian rational {token!r}")
    real = _rational(match.group("re")) if match.group("re") else QQ(0)
    imag = _imag_part(match.group("im")) if match.group("im") else QQ(0)
    return QQ_I.new(real, imag)


def format_gauss(x: GaussQ) -> str:
    def frac(q) -> str:
        return f"{q.numerator}" if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    if not x.y:
        return frac(x.x)
    imag = "i" if x.y == 1 else "-i" if x.y == -1 else f"{frac(x.y)}*i"
    if not x.x:
        return imag
    return f"{frac(x.x)}{imag if imag.startswith('-') else '+' + imag}"
