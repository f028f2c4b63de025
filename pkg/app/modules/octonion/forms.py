"""The calibration forms on the imaginary octonions.

    phi(x, y, z)          = <xy, z>
    star_phi(u, v, w, z)  = <u x v x w, z>
    <chi(u, v, w), z>     = star_phi(u, v, w, z)

Coefficient tables use the determinant convention: e^{ijk}(e_i, e_j, e_k) = 1.
"""

import random
from collections.abc import Sequence
from functools import lru_cache
from itertools import combinations

from app.modules.grassmann.exterior import Plane3, TriIndex
from app.modules.scalars.gauss import GaussQ, format_gauss
from app.modules.scalars.linalg import matrix, solve

from .algebra import (
    Octonion,
    associator,
    e,
    oct_inner,
    oct_mul,
    oct_norm,
    random_imaginary,
    require_imaginary,
    triple_cross,
)
from .basis import BasisTag

IMAGINARY = range(1, 8)


def phi3(x: Octonion, y: Octonion, z: Octonion) -> GaussQ:
    require_imaginary(x, y, z)
    return oct_inner(oct_mul(x, y), z)


def star_phi4(u: Octonion, v: Octonion, w: Octonion, z: Octonion) -> GaussQ:
    require_imaginary(u, v, w, z)
    return oct_inner(triple_cross(u, v, w), z)


def chi_pairings(u: Octonion, v: Octonion, w: Octonion) -> list[GaussQ]:
    """<chi(u, v, w), e_m> for m = 1..7."""
    return [star_phi4(u, v, w, e(m).to(u.basis)) for m in IMAGINARY]


@lru_cache(maxsize=None)
def _gram(basis: BasisTag):
    vectors = [e(m).to(basis) for m in IMAGINARY]
    return matrix([[oct_inner(a, b) for b in vectors] for a in vectors])


def chi3(u: Octonion, v: Octonion, w: Octonion) -> Octonion:
    """The unique imaginary octonion whose pairings with e_1..e_7 are the star_phi values."""
    pairings = chi_pairings(u, v, w)
    coords = solve(_gram(BasisTag.E), pairings)
    return Octonion.imaginary(coords, BasisTag.E).to(u.basis)


def _evaluate_on_tuples(arity: int, evaluator) -> dict[tuple[int, ...], GaussQ]:
    table = {}
    for indices in combinations(IMAGINARY, arity):
        value = evaluator(*(e(i) for i in indices))
        if value:
            table[indices] = value
    return table


@lru_cache(maxsize=None)
def phi_table() -> dict[tuple[int, ...], GaussQ]:
    return _evaluate_on_tuples(3, phi3)


@lru_cache(maxsize=None)
def star_phi_table() -> dict[tuple[int, ...], GaussQ]:
    return _evaluate_on_tuples(4, star_phi4)


@lru_cache(maxsize=None)
def chi_component_tables() -> dict[int, dict[TriIndex, GaussQ]]:
    """Component m collects <chi(e_i, e_j, e_k), e_m> over sorted triples."""
    tables: dict[int, dict[TriIndex, GaussQ]] = {m: {} for m in IMAGINARY}
    for indices in combinations(IMAGINARY, 3):
        for m, value in zip(IMAGINARY, chi_pairings(*(e(i) for i in indices))):
            if value:
                tables[m][indices] = value
    return tables


@lru_cache(maxsize=None)
def chi_coefficient_tables() -> dict[int, dict[TriIndex, GaussQ]]:
    """Raw e_m coefficients of chi(e_i, e_j, e_k)."""
    tables: dict[int, dict[TriIndex, GaussQ]] = {m: {} for m in IMAGINARY}
    for indices in combinations(IMAGINARY, 3):
        coords = chi3(*(e(i) for i in indices)).coords
        for m in IMAGINARY:
            if coords[m]:
                tables[m][indices] = coords[m]
    return tables


def form_expansion(kind: str) -> dict:
    if kind == "phi":
        return phi_table()
    if kind == "star_phi":
        return star_phi_table()
    if kind == "chi_components":
        return chi_component_tables()
    raise ValueError(f"unknown form {kind!r}; expected phi, star_phi or chi_components")


def format_expansion(table: dict[tuple[int, ...], GaussQ]) -> str:
    """``+e^123 - e^145 ...`` in sorted index order."""
    parts = []
    for indices in sorted(table):
        text = format_gauss(table[indices])
        sign, body = ("-", text[1:]) if text.startswith("-") else ("+", text)
        label = "".join(map(str, indices))
        parts.append(f"{sign} e^{label}" if body == "1" else f"{sign} ({body})e^{label}")
    return " ".join(parts).lstrip("+ ")


def plane_octonions(plane: Plane3) -> list[Octonion]:
    basis = plane.basis
    return [Octonion.imaginary(row, basis) for row in plane.vectors()]


def is_associative_plane(plane: Plane3) -> bool:
    x, y, z = plane_octonions(plane)
    return associator(x, y, z).is_zero()


def gram_determinant(vectors: Sequence[Octonion]) -> GaussQ:
    return matrix([[oct_inner(a, b) for b in vectors] for a in vectors]).det()


def orthogonal_triple(rng: random.Random, basis: BasisTag = BasisTag.E, height: int = 3) -> tuple[Octonion, ...]:
    """Pairwise orthogonal, non-isotropic imaginary triple.

    Projections are cleared by scaling instead of dividing, so no square roots
    or inverses of norms are needed.
    """
    while True:
        x = random_imaginary(rng, basis, height)
        nx = oct_norm(x)
        if not nx:
            continue
        y0 = random_imaginary(rng, basis, height)
        y = y0.scale(nx) - x.scale(oct_inner(x, y0))
        ny = oct_norm(y)
        if not ny:
            continue
        z0 = random_imaginary(rng, basis, height)
        z = z0.scale(nx * ny) - x.scale(oct_inner(x, z0) * ny) - y.scale(oct_inner(y, z0) * nx)
        if not oct_norm(z):
            continue
        return x, y, z


def calibration_constant() -> tuple[GaussQ | None, bool]:
    """The c with x*y*z = phi(x,y,z) e + c [x,y,z] on every sorted E-basis triple.

    Returns ``(c, uniform)``; ``uniform`` is false when no single c fits all 35 triples.
    """
    constant = None
    for indices in combinations(IMAGINARY, 3):
        x, y, z = (e(i) for i in indices)
        cross = triple_cross(x, y, z)
        assoc = associator(x, y, z)
        if cross.scalar_part() != phi3(x, y, z):
            return constant, False
        imaginary = cross.coords[1:]
        pivot = next((k for k, value in enumerate(assoc.coords[1:]) if value), None)
        if pivot is None:
            if any(imaginary):
                return constant, False
            continue
        ratio = imaginary[pivot] / assoc.coords[1 + pivot]
        if any(ratio * a != b for a, b in zip(assoc.coords[1:], imaginary)):
            return constant, False
        if constant is None:
            constant = ratio
        elif constant != ratio:
            return constant, False
    return constant, constant is not None


def associative_triple_norm(x: Octonion, y: Octonion, z: Octonion, constant: GaussQ) -> GaussQ:
    """phi(x,y,z)^2 + N(c [x,y,z])."""
    value = phi3(x, y, z)
    return value * value + oct_norm(associator(x, y, z).scale(constant))

