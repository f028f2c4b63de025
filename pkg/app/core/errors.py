"""Domain exceptions raised by the verification engine.

All of them subclass ``ValueError``: every failure here is a statement about
bad input (a zero divisor, a vector outside the imaginary part, an irregular
subgroup), never about the environment.
"""


class ScalarDomainError(ValueError):
    pass


class VariableMismatchError(ValueError):
    pass


class BasisMismatchError(ValueError):
    pass


class NotImaginaryError(ValueError):
    pass


class RankDeficientError(ValueError):
    pass


class ZeroTrivectorError(ValueError):
    pass


class NotInChartError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class IrregularSubgroupError(ValueError):
    def __init__(self, ops: tuple[int, int], vanishing: list[tuple[int, int]]):
        self.ops = ops
        self.vanishing = vanishing
        listed = ", ".join(f"({a}, {b})" for a, b in vanishing)
        super().__init__(
            f"one-parameter subgroup {ops} is not regular: it pairs to zero with tangent character(s) {listed}"
        )
