"""Exact linear algebra on sympy ``DomainMatrix``.

Rank and kernel come from the fraction-free Gauss-Jordan reduction
(``rref_den(method="FF")``); pivots are the first nonzero entries in column
order. Kernel vectors are scaled so their first nonzero coordinate is 1.
"""

from collections.abc import Iterable, Sequence

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from app.core.errors import RankDeficientError


def coerce(domain, value):
    if domain.of_type(value):
        return value
    if isinstance(value, int):
        return domain.convert(value)
    return domain.one * value


def matrix(rows: Iterable[Sequence], domain=QQ_I, ncols: int | None = None) -> DomainMatrix:
    rows = [[coerce(domain, value) for value in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), domain)


def identity(n: int, domain=QQ_I) -> DomainMatrix:
    return DomainMatrix.eye(n, domain).to_dense()


def zeros(m: int, n: int, domain=QQ_I) -> DomainMatrix:
    return DomainMatrix.zeros((m, n), domain).to_dense()


def column(values: Sequence, domain=QQ_I) -> DomainMatrix:
    return matrix([[value] for value in values], domain, ncols=1)


def flat(m: DomainMatrix) -> list:
    return [value for row in m.to_list() for value in row]


def stack(*blocks: DomainMatrix) -> DomainMatrix:
    nonempty = [block for block in blocks if block.shape[0]]
    if not nonempty:
        return blocks[0]
    return nonempty[0].vstack(*nonempty[1:])


def rref(m: DomainMatrix) -> tuple[list[list], tuple[int, ...]]:
    """Reduced row echelon rows (pivot entries 1) and pivot columns."""
    if m.shape[0] == 0 or m.shape[1] == 0:
        return [], ()
    reduced, _, pivots = m.rref_den(method="FF")
    domain = m.domain
    rows = reduced.to_list()
    normalized = []
    for index, pivot in enumerate(pivots):
        lead = rows[index][pivot]
        normalized.append([domain.quo(value, lead) for value in rows[index]])
    return normalized, tuple(pivots)


def mat_rank(m: DomainMatrix) -> int:
    return len(rref(m)[1])


def _normalize(vector: list, domain) -> list:
    lead = next(value for value in vector if value)
    return [domain.quo(value, lead) for value in vector]


def mat_kernel(m: DomainMatrix) -> list[list]:
    domain = m.domain
    ncols = m.shape[1]
    rows, pivots = rref(m)
    kernel = []
    for free in (col for col in range(ncols) if col not in pivots):
        vector = [domain.zero] * ncols
        vector[free] = domain.one
        for row, pivot in zip(rows, pivots):
            vector[pivot] = -row[free]
        kernel.append(_normalize(vector, domain))
    return kernel


def solve(a: DomainMatrix, b: Sequence) -> list:
    """One solution x of a·x = b; raises when the system is inconsistent."""
    domain = a.domain
    augmented = a.hstack(column(b, domain))
    rows, pivots = rref(augmented)
    ncols = a.shape[1]
    if ncols in pivots:
        raise RankDeficientError("linear system has no solution")
    solution = [domain.zero] * ncols
    for row, pivot in zip(rows, pivots):
        solution[pivot] = row[ncols]
    return solution


def in_row_space(vector: Sequence, m: DomainMatrix) -> bool:
    row = matrix([vector], m.domain, ncols=m.shape[1])
    return mat_rank(stack(m, row)) == mat_rank(m)


def same_row_space(a: DomainMatrix, b: DomainMatrix) -> bool:
    rank = mat_rank(a)
    return rank == mat_rank(b) == mat_rank(stack(a, b))


def apply(m: DomainMatrix, vector: Sequence) -> list:
    return flat(m * column(vector, m.domain))
