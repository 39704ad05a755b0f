"""Core value types: problem dimensions, solutions, objective vectors,
and the four-way dominance comparison shared by all acceptance rules."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

Solution = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class ProblemShape:
    """Search space [0..r-1]^n: n coordinates, each taking r values."""

    n: int
    r: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")

    @property
    def max_value(self) -> int:
        return self.r - 1

    def front_size(self) -> int:
        """Number of Pareto-optimal objective vectors: n*(r-1)+1."""
        return self.n * (self.r - 1) + 1

    def validate_solution(self, values: Solution) -> Solution:
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(values)}")
        for v in values:
            if not 0 <= v <= self.r - 1:
                raise ValueError(f"coordinate {v} outside [0, {self.r - 1}]")
        return values


class ObjectiveVector(NamedTuple):
    """A pair of objective values, both maximized."""

    f1: int
    f2: int


class Dominance(Enum):
    """Relation of a first objective vector to a second, both maximized.

    DOMINATES: first is componentwise >= and differs somewhere.
    DOMINATED: second is componentwise >= and differs somewhere.
    EQUAL: identical vectors.
    INCOMPARABLE: each is strictly better in one component.
    """

    DOMINATES = "dominates"
    DOMINATED = "dominated"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare(u: ObjectiveVector, v: ObjectiveVector) -> Dominance:
    """Classify the relation of u to v under componentwise maximization."""
    u1, u2 = u
    v1, v2 = v
    if u1 == v1 and u2 == v2:
        return Dominance.EQUAL
    if u1 >= v1 and u2 >= v2:
        return Dominance.DOMINATES
    if v1 >= u1 and v2 >= u2:
        return Dominance.DOMINATED
    return Dominance.INCOMPARABLE
