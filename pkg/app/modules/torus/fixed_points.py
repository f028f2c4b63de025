"""Weight table of the eigenbasis trivectors and the torus-fixed points of X_min."""

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from app.core.errors import PreconditionError
from app.modules.grassmann.exterior import PLUCKER_RELATIONS, TRIPLE_RANK, TRIPLES, TriIndex, sort_sign
from app.modules.octonion.basis import BasisTag
from app.modules.scalars.linalg import identity, mat_kernel, matrix
from app.modules.scalars.polys import poly_ring
from app.modules.xmin.model import XminModel, build_model, coordinate_members

from .action import coordinate_characters, weight_of
from .characters import Character, FixedPoint

logger = logging.getLogger("xmin.torus")


def weight_table() -> dict[Character, list[TriIndex]]:
    table: dict[Character, list[TriIndex]] = defaultdict(list)
    for t in TRIPLES:
        table[weight_of(t)].append(t)
    return dict(table)


def torus_fixed_points(model: XminModel | None = None) -> list[FixedPoint]:
    """Coordinate planes of the eigenbasis on X_min.

    With pairwise distinct coordinate characters every torus-stable 3-plane is
    a coordinate plane, so the fixed locus is a finite filter.
    """
    characters = coordinate_characters()
    if len(set(characters.values())) != len(characters):
        raise PreconditionError("coordinate characters are not pairwise distinct")
    return [FixedPoint(t, weight_of(t)) for t in coordinate_members(BasisTag.TILDE, model)]


class DeepCheckOutcome(str, Enum):
    confirmed = "confirmed"
    undecided = "undecided"
    counterexample = "counterexample"


@dataclass(frozen=True)
class DeepCheckResult:
    character: Character
    members: tuple[TriIndex, ...]
    outcome: DeepCheckOutcome
    survivors: tuple[tuple[TriIndex, ...], ...]

    @property
    def coordinate_points(self) -> list[TriIndex]:
        return [support[0] for support in self.survivors if len(support) == 1]


def _restricted_quadrics(members: tuple[TriIndex, ...]):
    ring = poly_ring(tuple(f"x{''.join(map(str, t))}" for t in members))
    gens = dict(zip(members, ring.gens))

    def coord(indices):
        sign, ordered = sort_sign(indices)
        if not sign or ordered not in gens:
            return ring.zero
        return gens[ordered] if sign > 0 else -gens[ordered]

    quadrics = {relation.evaluate(coord, ring.zero) for relation in PLUCKER_RELATIONS}
    quadrics.discard(ring.zero)
    return ring, list(quadrics)


def _kernel_on_support(rows, support: tuple[int, ...]):
    if not rows:
        return identity(len(support)).to_list()
    restricted = matrix([[row[i] for i in support] for row in rows], ncols=len(support))
    return mat_kernel(restricted)


def eigenspace_deep_check(character: Character, model: XminModel | None = None) -> DeepCheckResult:
    """Which coordinate supports in the eigenspace of ``character`` can meet X_min.

    A support survives when the linear forms leave a kernel with no forced zero
    on it and no restricted Pluecker quadric collapses to a single monomial there.
    """
    members = tuple(weight_table().get(character, ()))
    if len(members) < 2:
        raise PreconditionError(f"character {character} has multiplicity {len(members)}; the deep check needs 2 or more")

    covectors = (model or build_model()).covectors(BasisTag.TILDE)
    rows = [[c.coords[TRIPLE_RANK[t]] for t in members] for c in covectors]
    rows = [row for row in rows if any(row)]
    ring, quadrics = _restricted_quadrics(members)

    survivors = []
    counterexample = False
    undecided = False
    for size in range(1, len(members) + 1):
        for support in combinations(range(len(members)), size):
            kernel = _kernel_on_support(rows, support)
            if not kernel or any(all(not vector[k] for vector in kernel) for k in range(size)):
                continue
            outside = [k for k in range(len(members)) if k not in support]
            collapsed = False
            for quadric in quadrics:
                terms = [monom for monom in quadric.monoms() if not any(monom[k] for k in outside)]
                if len(terms) == 1:
                    collapsed = True
                    break
            if collapsed:
                continue
            survivors.append(tuple(members[k] for k in support))
            if size == 1:
                continue
            generic = [sum(column, ring.domain.zero) for column in zip(*kernel)]
            if all(generic):
                point = [ring.domain.zero] * len(members)
                for k, value in zip(support, generic):
                    point[k] = value
                if not any(q(*point) for q in quadrics):
                    counterexample = True
                    continue
            undecided = True

    if counterexample:
        outcome = DeepCheckOutcome.counterexample
    elif undecided:
        outcome = DeepCheckOutcome.undecided
    else:
        outcome = DeepCheckOutcome.confirmed
    logger.debug("deep check %s: %s, survivors=%s", character, outcome.value, survivors)
    return DeepCheckResult(character, members, outcome, tuple(survivors))


def multiple_characters() -> list[Character]:
    return sorted(ch for ch, members in weight_table().items() if len(members) >= 2)
