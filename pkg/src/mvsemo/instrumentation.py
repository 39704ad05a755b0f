"""Run-time observables: archive size, distance to the border of the
objective space, and a decay potential over the best-first-objective member.

The potential sums 2**(headroom) - 1 over the coordinates of the archive
member with maximal first objective. It is zero exactly when that member is
fully saturated, and exact integer arithmetic keeps it safe for any r up to
64 and beyond (values reach n*(2**(r-1)-1))."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple, Optional

from .core import ProblemShape

if TYPE_CHECKING:
    from .algorithms import Archive


@dataclass(frozen=True, slots=True)
class InstrumentationPlan:
    sample_every: int = 1
    record_population_size: bool = True
    record_border_distance: bool = True
    record_potential: bool = True

    def __post_init__(self):
        if self.sample_every < 1:
            raise ValueError(f"sample_every must be >= 1, got {self.sample_every}")


class TraceSample(NamedTuple):
    iteration: int
    population_size: Optional[int]
    border_distance: Optional[int]
    potential: Optional[int]


def border_distance(archive: "Archive", shape: ProblemShape) -> int:
    """Smallest single-objective value in the archive: min over members of
    min(f1, f2).

    With members ordered by ascending f1 (hence descending f2) this is the
    smaller of the first member's f1 and the last member's f2. Ranges over
    [0, floor(n*(r-1)/2)].
    """
    if len(archive) == 0:
        raise ValueError("border distance of an empty archive is undefined")
    return min(archive.min_f1(), archive.min_f2())


def archive_potential(archive: "Archive", shape: ProblemShape) -> int:
    """Decay potential of the maximum-f1 member: sum of 2**(r-1-value) - 1
    over its coordinates, an exact Python integer."""
    if len(archive) == 0:
        raise ValueError("potential of an empty archive is undefined")
    _, values = archive.member_at(-1)
    m = shape.max_value
    return sum((1 << (m - v)) - 1 for v in values)


def sample(
    archive: "Archive",
    iteration: int,
    plan: InstrumentationPlan,
    cached_potential: Optional[int] = None,
    shape: Optional[ProblemShape] = None,
) -> Optional[TraceSample]:
    """Produce a TraceSample when the iteration is on the sampling grid.

    The potential is event-driven (it changes only when the maximum-f1 entry
    does), so the caller usually passes its cached value; without one it is
    recomputed, which needs the problem shape.
    """
    if iteration % plan.sample_every != 0:
        return None
    potential = None
    if plan.record_potential:
        potential = cached_potential
        if potential is None:
            if shape is None:
                raise ValueError("potential sample needs a cached value or a shape")
            potential = archive_potential(archive, shape)
    return TraceSample(
        iteration=iteration,
        population_size=len(archive) if plan.record_population_size else None,
        border_distance=(
            min(archive.min_f1(), archive.min_f2())
            if plan.record_border_distance
            else None
        ),
        potential=potential,
    )
