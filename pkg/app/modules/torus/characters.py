from dataclasses import dataclass, field

from app.modules.grassmann.exterior import TriIndex, triple_label


@dataclass(frozen=True, order=True)
class Character:
    """The monomial lambda^a mu^b."""

    a: int
    b: int

    def __add__(self, other: "Character") -> "Character":
        return Character(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Character") -> "Character":
        return Character(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Character":
        return Character(-self.a, -self.b)

    def pair(self, g: "OneParamSubgroup") -> int:
        return self.a * g.c + self.b * g.d

    def as_tuple(self) -> tuple[int, int]:
        return self.a, self.b

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


ZERO_CHARACTER = Character(0, 0)


@dataclass(frozen=True)
class OneParamSubgroup:
    """s -> t(s^c, s^d)."""

    c: int
    d: int

    @classmethod
    def parse(cls, text: str) -> "OneParamSubgroup":
        parts = text.replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise ValueError(f"expected two integers C,D, got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    def as_tuple(self) -> tuple[int, int]:
        return self.c, self.d


@dataclass(frozen=True)
class FixedPoint:
    index: TriIndex
    character: Character

    @property
    def label(self) -> str:
        return triple_label(self.index)


@dataclass(frozen=True)
class BBCell:
    point: FixedPoint
    weights: tuple[int, ...]
    plus_dim: int = field(init=False)
    minus_dim: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "plus_dim", sum(1 for w in self.weights if w > 0))
        object.__setattr__(self, "minus_dim", sum(1 for w in self.weights if w < 0))
