"""Variation and selection operators.

All operators draw through the SplitMix64 interface with a fixed discipline:
mutation consumes exactly two draws (coordinate, then direction), uniform
selection one draw, delayed selection one draw for the target value. The
compiled kernel replays the identical sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol

from .core import ObjectiveVector, ProblemShape, Solution
from .rng import SplitMix64


class PopulationView(Protocol):
    """What selection needs from an archive, structurally typed to avoid a
    dependency cycle with the algorithms module."""

    def __len__(self) -> int: ...

    def member_at(self, index: int) -> tuple[ObjectiveVector, Solution]: ...

    def find_by_f1(self, f1: int) -> Optional[tuple[ObjectiveVector, Solution]]: ...


@dataclass(frozen=True, slots=True)
class MutationOutcome:
    """Result of one unit-strength mutation.

    ``changed_index`` and ``direction`` report what was drawn even when the
    step fell outside the lattice and the parent was returned unchanged.
    """

    offspring: Solution
    changed_index: int
    direction: int
    was_boundary_discard: bool


def unit_strength_mutate(
    parent: Solution, shape: ProblemShape, rng: SplitMix64
) -> MutationOutcome:
    """Move one uniformly chosen coordinate by +-1.

    A step leaving [0, r-1] is discarded: the offspring is the parent itself.
    Exactly two draws are consumed either way.
    """
    index = rng.below(shape.n)
    direction = rng.sign_bit()
    moved = parent[index] + direction
    if 0 <= moved <= shape.max_value:
        offspring = parent[:index] + (moved,) + parent[index + 1 :]
        return MutationOutcome(offspring, index, direction, False)
    return MutationOutcome(parent, index, direction, True)


def select_uniform(
    population: PopulationView, rng: SplitMix64
) -> tuple[ObjectiveVector, Solution]:
    """Pick a member uniformly at random; one draw."""
    size = len(population)
    if size == 0:
        raise ValueError("cannot select from an empty population")
    return population.member_at(rng.below(size))


def select_delayed(
    population: PopulationView, shape: ProblemShape, rng: SplitMix64
) -> Optional[tuple[ObjectiveVector, Solution]]:
    """Draw a target first-objective value uniformly from the front range and
    return the member attaining it, or None when the value is unrepresented.

    One draw is always consumed. A mutually non-dominated bi-objective
    archive holds at most one member per first-objective value (two members
    sharing it would be comparable), so a hit is unique.
    """
    target = rng.below(shape.front_size())
    return population.find_by_f1(target)
