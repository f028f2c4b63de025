"""Orbit bookkeeping: the wonderful-compactification comparison and the G2-orbit count."""

from dataclasses import dataclass
from itertools import combinations

from app.fixtures.loader import load_wonderful

from .bb import poincare
from .characters import OneParamSubgroup

# restricted root system of the symmetric space: two simple roots joined by an edge
RESTRICTED_ROOTS = ("2a1", "2a2")
ROOT_EDGES = frozenset({frozenset(RESTRICTED_ROOTS)})
# support of the highest weight 2w1
WEIGHT_SUPPORT = frozenset({"2a1"})


def wonderful_compare(g: OneParamSubgroup | None = None) -> tuple[list[int], list[int]]:
    wonderful = load_wonderful()
    ours = poincare(g or OneParamSubgroup(10, 1))
    return wonderful, [a - b for a, b in zip(wonderful, ours)]


def _components(nodes: frozenset[str]) -> list[frozenset[str]]:
    remaining = set(nodes)
    components = []
    while remaining:
        stack = [remaining.pop()]
        component = set(stack)
        while stack:
            node = stack.pop()
            for other in list(remaining):
                if frozenset({node, other}) in ROOT_EDGES:
                    remaining.discard(other)
                    component.add(other)
                    stack.append(other)
        components.append(frozenset(component))
    return components


def delta_i(removed: frozenset[str]) -> frozenset[str]:
    """Union of the components of the diagram minus ``removed`` that meet the weight support."""
    rest = frozenset(RESTRICTED_ROOTS) - removed
    return frozenset().union(*(c for c in _components(rest) if c & WEIGHT_SUPPORT))


@dataclass(frozen=True)
class OrbitCount:
    values: dict[frozenset[str], frozenset[str]]

    @property
    def count(self) -> int:
        return len(set(self.values.values()))


def special_orbit_count() -> OrbitCount:
    subsets = [frozenset(c) for size in range(len(RESTRICTED_ROOTS) + 1) for c in combinations(RESTRICTED_ROOTS, size)]
    return OrbitCount({subset: delta_i(subset) for subset in subsets})
