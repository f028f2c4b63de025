"""Readers for the plain-text reference tables in this directory.

Every table is one entry per line with whitespace separated fields; ``#``
starts a comment. Signed terms look like ``+247``, ``-2*147``, ``-1/2*135``,
``+i*127`` or ``-124.135.236`` (a product of coordinates).
"""

import json
import re
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any

from app.core.config import settings
from app.modules.scalars.gauss import GaussQ, gq, parse_gauss

_TERM = re.compile(r"^(?P<sign>[+-])(?:(?P<coeff>[^*]+(?:\*i)?)\*)?(?P<labels>\d+(?:\.\d+)*)$")

Term = tuple[GaussQ, tuple[tuple[int, ...], ...]]


@dataclass(frozen=True)
class ChartIdentity:
    group: str
    lhs: tuple[int, ...]
    terms: tuple[Term, ...]

    @property
    def name(self) -> str:
        return f"{self.group}.{''.join(map(str, self.lhs))}"


def fixture_path(name: str) -> Path:
    return settings.FIXTURES_DIR / name


@lru_cache(maxsize=None)
def read_rows(name: str) -> tuple[tuple[str, ...], ...]:
    path = fixture_path(name)
    rows = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(tuple(line.split()))
    return tuple(rows)


def parse_indices(label: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in label)


def parse_term(token: str) -> Term:
    match = _TERM.match(token)
    if not match:
        raise ValueError(f"unparseable term {token!r}")
    coeff = parse_gauss(match.group("coeff")) if match.group("coeff") else gq(1)
    if match.group("sign") == "-":
        coeff = -coeff
    return coeff, tuple(parse_indices(label) for label in match.group("labels").split("."))


def _linear_terms(tokens) -> dict[tuple[int, ...], GaussQ]:
    terms = {}
    for token in tokens:
        coeff, (indices,) = parse_term(token)
        terms[indices] = terms.get(indices, gq(0)) + coeff
    return terms


def load_forms(name: str) -> dict[int, dict[tuple[int, ...], GaussQ]]:
    """Numbered linear forms: form number -> {coordinate index: coefficient}."""
    return {int(row[0]): _linear_terms(row[1:]) for row in read_rows(name)}


def load_named_forms(name: str) -> dict[str, dict[tuple[int, ...], GaussQ]]:
    return {row[0]: _linear_terms(row[1:]) for row in read_rows(name)}


def load_polynomials(name: str) -> dict[int, tuple[Term, ...]]:
    return {int(row[0]): tuple(parse_term(token) for token in row[1:]) for row in read_rows(name)}


def load_identities(name: str = "chart_identities.txt") -> list[ChartIdentity]:
    return [
        ChartIdentity(row[0], parse_indices(row[1]), tuple(parse_term(token) for token in row[2:]))
        for row in read_rows(name)
    ]


def load_entries(name: str) -> list[tuple[int, int, GaussQ]]:
    return [(int(row[0]), int(row[1]), parse_gauss(row[2])) for row in read_rows(name)]


def load_tangent_basis(name: str = "tangent_basis_123.txt") -> list[tuple[int, dict[tuple[int, ...], GaussQ]]]:
    """Printed tangent vectors in order, each with its printed weight."""
    return [(int(row[1]), _linear_terms(row[2:])) for row in read_rows(name)]


def load_weight_table(name: str = "weight_table.txt") -> dict[tuple[int, int], list[tuple[int, ...]]]:
    return {(int(row[0]), int(row[1])): [parse_indices(label) for label in row[2:]] for row in read_rows(name)}


def load_fixed_points(name: str = "fixed_points.txt") -> dict[tuple[int, ...], tuple[int, int]]:
    return {parse_indices(row[0]): (int(row[1]), int(row[2])) for row in read_rows(name)}


def load_bb_weights(name: str = "bb_weights.txt") -> dict[tuple[int, ...], list[int]]:
    return {parse_indices(row[0]): [int(value) for value in row[1:]] for row in read_rows(name)}


def load_torus_matrix(name: str = "torus_matrix.txt") -> list[tuple[int, int, GaussQ, int, int]]:
    return [
        (int(row[0]), int(row[1]), parse_gauss(row[2]), int(row[3]), int(row[4]))
        for row in read_rows(name)
    ]


def load_unipotent(name: str = "unipotent.txt") -> dict[str, list[tuple[int, int, GaussQ, int]]]:
    entries: dict[str, list[tuple[int, int, GaussQ, int]]] = {}
    for row in read_rows(name):
        entries.setdefault(row[0], []).append((int(row[1]), int(row[2]), parse_gauss(row[3]), int(row[4])))
    return entries


def load_unipotent_fixed(name: str = "unipotent_fixed.txt") -> Iterator[tuple[str, dict[tuple[int, ...], GaussQ]]]:
    for row in read_rows(name):
        yield row[0], _linear_terms(row[1:])


def load_wonderful(name: str = "wonderful.txt") -> list[int]:
    (row,) = read_rows(name)
    return [int(value) for value in row]


def load_poincare(name: str = "poincare.txt") -> dict[str, list[int]]:
    return {row[0]: [int(value) for value in row[1:]] for row in read_rows(name)}


PINNED_FIELDS = ("computed", "corrected")


@dataclass(frozen=True)
class KnownDiscrepancy:
    """An allowlisted check, pinned to the value it reported when it was listed."""

    name: str
    field: str
    value: Any

    def matches(self, check) -> bool:
        return check.name == self.name and getattr(check, self.field) == self.value


def parse_known_discrepancy(line: str) -> KnownDiscrepancy:
    parts = line.split(maxsplit=2)
    if len(parts) != 3 or parts[1] not in PINNED_FIELDS:
        raise ValueError(f"expected 'name computed|corrected <json>', got {line!r}")
    name, field, payload = parts
    return KnownDiscrepancy(name, field, json.loads(payload))


def load_known_discrepancies(path: Path | None = None) -> dict[str, KnownDiscrepancy]:
    path = path or settings.KNOWN_DISCREPANCIES_FILE
    if not path.is_file():
        return {}
    entries = {}
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            entry = parse_known_discrepancy(line)
            entries[entry.name] = entry
    return entries
