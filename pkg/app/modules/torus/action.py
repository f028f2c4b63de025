"""The maximal torus t(lambda, mu): (x, y) -> (c_l x c_l^-1, c_m y c_l^-1).

In matrix-pair coordinates it is diagonal; its matrix on e_1..e_7 and the
characters of the eigenbasis are derived from that diagonal form.
"""

from functools import lru_cache

from sympy.polys.matrices import DomainMatrix

from app.core.errors import PreconditionError
from app.modules.grassmann.exterior import TriIndex
from app.modules.octonion.basis import E_TO_TILDE_IMAG, FROM_MATRIX_PAIR, TILDE_TO_E_IMAG, TO_MATRIX_PAIR, BasisTag
from app.modules.scalars.gauss import ONE, GaussQ
from app.modules.scalars.linalg import matrix
from app.modules.scalars.polys import evaluate, laurent_field, laurent_monomial

from .characters import ZERO_CHARACTER, Character

TORUS_VARIABLES = ("lam", "mu")


def torus_domain():
    return laurent_field(TORUS_VARIABLES).to_domain()


def _diagonal_pair_action():
    domain = torus_domain()
    lam, mu = domain.gens
    # c_l x c_l^-1 scales x_12 by lam^2 and x_21 by lam^-2; c_m y c_l^-1 scales y_ij by mu^(+-1) lam^(-+1)
    entries = [domain.one, lam**2, lam**-2, domain.one, mu / lam, lam * mu, 1 / (lam * mu), lam / mu]
    rows = [[entries[i] if i == j else domain.zero for j in range(8)] for i in range(8)]
    return DomainMatrix(rows, (8, 8), domain)


@lru_cache(maxsize=None)
def torus_matrix_e() -> DomainMatrix:
    """7x7 Laurent matrix of t(lambda, mu) on e_1..e_7; column j is the image of e_j."""
    domain = torus_domain()
    to_pair = TO_MATRIX_PAIR[BasisTag.E].convert_to(domain)
    from_pair = FROM_MATRIX_PAIR[BasisTag.E].convert_to(domain)
    full = from_pair * _diagonal_pair_action() * to_pair
    return full.extract(list(range(1, 8)), list(range(1, 8)))


def printed_torus_matrix(entries: list[tuple[int, int, GaussQ, int, int]]) -> DomainMatrix:
    domain = torus_domain()
    lam, mu = domain.gens
    rows = [[domain.zero] * 7 for _ in range(7)]
    for source, target, coeff, a, b in entries:
        rows[target - 1][source - 1] += domain.one * coeff * lam**a * mu**b
    return DomainMatrix(rows, (7, 7), domain)


@lru_cache(maxsize=None)
def diagonalized() -> DomainMatrix:
    domain = torus_domain()
    change = TILDE_TO_E_IMAG.convert_to(domain)
    inverse = E_TO_TILDE_IMAG.convert_to(domain)
    return inverse * torus_matrix_e() * change


def is_diagonal(m: DomainMatrix) -> bool:
    rows = m.to_list()
    return all(not value for i, row in enumerate(rows) for j, value in enumerate(row) if i != j)


@lru_cache(maxsize=None)
def coordinate_characters() -> dict[int, Character]:
    """Character of each eigenbasis vector, read off the diagonalized torus matrix."""
    m = diagonalized()
    if not is_diagonal(m):
        raise PreconditionError("the eigenbasis does not diagonalize the torus")
    rows = m.to_list()
    characters = {}
    for i in range(7):
        coeff, (a, b) = laurent_monomial(rows[i][i])
        if coeff != ONE:
            raise PreconditionError(f"eigenvalue {rows[i][i]} is not a unit monomial")
        characters[i + 1] = Character(a, b)
    if len(set(characters.values())) != 7:
        raise PreconditionError("coordinate characters are not pairwise distinct")
    return characters


def weight_of(t: TriIndex) -> Character:
    characters = coordinate_characters()
    total = ZERO_CHARACTER
    for index in t:
        total = total + characters[index]
    return total


def torus_element(lam: GaussQ, mu: GaussQ) -> DomainMatrix:
    """Exact 7x7 matrix of t(lam, mu) for nonzero Gaussian rationals."""
    return matrix([[evaluate(value, [lam, mu]) for value in row] for row in torus_matrix_e().to_list()])


def same_entries(a: DomainMatrix, b: DomainMatrix) -> bool:
    """Entrywise equality; Laurent entries are compared through their difference."""
    if a.shape != b.shape:
        return False
    return all(not (x - y) for row_a, row_b in zip(a.to_list(), b.to_list()) for x, y in zip(row_a, row_b))
