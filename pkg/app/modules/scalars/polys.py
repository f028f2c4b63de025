"""Sparse multivariate polynomials over ``QQ_I``.

Ordinary polynomials are ``PolyElement`` values of a sympy ``PolyRing``; Laurent
polynomials (the torus parameters) are ``FracElement`` values whose denominator
is a single monomial.
"""

from collections.abc import Mapping, Sequence
from functools import lru_cache

from sympy import QQ_I
from sympy.polys.fields import FracElement, FracField
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from app.core.errors import ScalarDomainError, VariableMismatchError

from .gauss import GaussQ

MPoly = PolyElement | FracElement


@lru_cache(maxsize=None)
def poly_ring(names: tuple[str, ...]) -> PolyRing:
    return PolyRing(",".join(names), QQ_I, lex)


@lru_cache(maxsize=None)
def laurent_field(names: tuple[str, ...]) -> FracField:
    return FracField(",".join(names), QQ_I, lex)


def _parent(p: MPoly):
    return p.ring if isinstance(p, PolyElement) else p.field


def _check_same(p: MPoly, q: MPoly) -> None:
    if type(p) is not type(q) or _parent(p) != _parent(q):
        raise VariableMismatchError(
            f"polynomials live over different variable lists: {_parent(p).symbols} vs {_parent(q).symbols}"
        )


def poly_add(p: MPoly, q: MPoly) -> MPoly:
    _check_same(p, q)
    return p + q


def poly_mul(p: MPoly, q: MPoly) -> MPoly:
    _check_same(p, q)
    return p * q


def gen_named(parent, name: str):
    names = [str(symbol) for symbol in parent.symbols]
    if name not in names:
        raise VariableMismatchError(f"variable {name} not among {names}")
    return parent.gens[names.index(name)]


def partial(p: MPoly, var) -> MPoly:
    if isinstance(var, str):
        var = gen_named(_parent(p), var)
    elif _parent(var) != _parent(p):
        raise VariableMismatchError(f"variable {var} belongs to another ring")
    return p.diff(var)


def _values(parent, point: Mapping[str, GaussQ] | Sequence[GaussQ]) -> list[GaussQ]:
    names = [str(symbol) for symbol in parent.symbols]
    if isinstance(point, Mapping):
        missing = [name for name in names if name not in point]
        if missing or len(point) != len(names):
            raise VariableMismatchError(f"evaluation point must assign exactly {names}")
        return [point[name] for name in names]
    if len(point) != len(names):
        raise VariableMismatchError(f"expected {len(names)} values, got {len(point)}")
    return list(point)


def evaluate(p: MPoly, point: Mapping[str, GaussQ] | Sequence[GaussQ]) -> GaussQ:
    values = _values(_parent(p), point)
    if isinstance(p, PolyElement):
        return p(*values)

    denominator = p.denom(*values)
    if not denominator:
        raise ScalarDomainError(f"Laurent evaluation of {p} at a zero of {p.denom}")
    return p.numer(*values) / denominator


def total_degree(p: PolyElement) -> int:
    if not p:
        return -1
    return max(sum(monom) for monom in p.monoms())


def linear_part(p: PolyElement) -> dict[str, GaussQ]:
    names = [str(symbol) for symbol in p.ring.symbols]
    part = {}
    for monom, coeff in p.terms():
        if sum(monom) == 1:
            part[names[monom.index(1)]] = coeff
    return part


def laurent_monomial(f: FracElement) -> tuple[GaussQ, tuple[int, ...]]:
    """Split a single Laurent monomial into (coefficient, exponent vector)."""
    numer, denom = f.numer.terms(), f.denom.terms()
    if len(numer) != 1 or len(denom) != 1:
        raise ValueError(f"{f} is not a Laurent monomial")
    (num_monom, num_coeff), (den_monom, den_coeff) = numer[0], denom[0]
    exponents = tuple(a - b for a, b in zip(num_monom, den_monom))
    return num_coeff / den_coeff, exponents
