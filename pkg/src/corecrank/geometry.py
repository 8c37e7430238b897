"""Lattice points of x^2 + 3y^2 = k and the order-six rotation acting on them.

For even ``k`` the map ``R(x, y) = ((x - 3y)/2, (x + y)/2)`` preserves the
form and permutes the solutions in free orbits of size six.  Reading the
coordinates mod 3 gives the crank; each orbit has exactly one point whose
coordinates are both 1 mod 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, NamedTuple, Sequence

from .eisenstein import norm_representations


@dataclass(frozen=True, order=True)
class Solution:
    x: int
    y: int
    k: int

    def __post_init__(self) -> None:
        if self.x * self.x + 3 * self.y * self.y != self.k:
            raise ValueError(f"({self.x},{self.y}) does not solve x^2+3y^2={self.k}")

    @classmethod
    def of(cls, x: int, y: int) -> Solution:
        return cls(x, y, x * x + 3 * y * y)

    @property
    def point(self) -> tuple[int, int]:
        return (self.x, self.y)

    @property
    def residues(self) -> tuple[int, int]:
        return (self.x % 3, self.y % 3)


class CrankValue(NamedTuple):
    first: int
    second: int


# Coordinate residues mod 3 along an R-orbit; R moves one step to the right.
RESIDUE_CYCLE: tuple[tuple[int, int], ...] = ((1, 1), (2, 1), (1, 0), (2, 2), (1, 2), (2, 0))


def solutions_bruteforce(k: int) -> set[Solution]:
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    out = set()
    ymax = isqrt(k // 3)
    for y in range(-ymax, ymax + 1):
        r = k - 3 * y * y
        x = isqrt(r)
        if x * x == r:
            out.add(Solution(x, y, k))
            out.add(Solution(-x, y, k))
    return out


def _half_step(s: Solution, num_x: int, num_y: int) -> Solution:
    if (s.x - s.y) % 2:
        raise ValueError(f"({s.x},{s.y}) has mixed parity; the half-integer maps need x = y mod 2")
    return Solution(num_x // 2, num_y // 2, s.k)


def apply_R(s: Solution) -> Solution:
    return _half_step(s, s.x - 3 * s.y, s.x + s.y)


def apply_conj(s: Solution) -> Solution:
    """The reflection ``(x, y) -> ((3y - x)/2, (x + y)/2)``."""
    return _half_step(s, 3 * s.y - s.x, s.x + s.y)


def crank(s: Solution) -> CrankValue:
    return CrankValue(2 * s.x % 3, (2 * s.x + 2 * s.y) % 3)


def orbit_of(s: Solution) -> list[Solution]:
    out = [s]
    for _ in range(5):
        out.append(apply_R(out[-1]))
    if apply_R(out[-1]) != s:
        raise AssertionError(f"R^6 is not the identity on {s}")
    return out


def canonical_rep(orbit: Sequence[Solution]) -> Solution:
    """The member of a full R-orbit with both coordinates 1 mod 3."""
    members = set(orbit)
    if len(orbit) != 6 or len(members) != 6:
        raise ValueError("an orbit has exactly six distinct solutions")
    start = orbit[0]
    if set(orbit_of(start)) != members:
        raise ValueError("the given solutions do not form a single R-orbit")
    hits = [s for s in orbit if s.residues == (1, 1)]
    if len(hits) != 1:
        raise ValueError(f"orbit has {len(hits)} members with residues (1,1)")
    return hits[0]


def group_orbits(sols: set[Solution]) -> list[list[Solution]]:
    """Split a set closed under R into orbits, each starting at its canonical member."""
    left = set(sols)
    reps = sorted(s for s in sols if s.residues == (1, 1))
    out = []
    for rep in reps:
        orb = orbit_of(rep)
        if not left.issuperset(orb):
            raise ValueError("solution set is not closed under R")
        left.difference_update(orb)
        out.append(orb)
    if left:
        raise ValueError(f"{len(left)} solutions left without a canonical orbit member")
    return out


def orbits(n: int) -> list[list[Solution]]:
    """The R-orbits on the solutions of x^2 + 3y^2 = 12n + 4."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return group_orbits(solutions_bruteforce(12 * n + 4))


def solutions_via_eisenstein(n: int) -> set[Solution]:
    """Solutions of x^2 + 3y^2 = 12n + 4 rebuilt from elements of norm 3n + 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    k = 12 * n + 4
    out: set[Solution] = set()
    for z in norm_representations(3 * n + 1):
        u, v = z.half
        out.update(orbit_of(Solution(u, v, k)))
    return out


def solutions_to_json(sols: Iterable[Solution]) -> list[list[int]]:
    return [[s.x, s.y] for s in sorted(sols)]


def solutions_from_json(data: Sequence[Sequence[int]]) -> set[Solution]:
    return {Solution.of(x, y) for x, y in data}


def orbits_to_json(orbs: Sequence[Sequence[Solution]]) -> list[list[list[int]]]:
    return [[[s.x, s.y] for s in orb] for orb in orbs]


def orbits_from_json(data: Sequence[Sequence[Sequence[int]]]) -> list[list[Solution]]:
    return [[Solution.of(x, y) for x, y in orb] for orb in data]
