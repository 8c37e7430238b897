"""3-core partitions through characteristic vectors.

A 3-core is encoded by a zero-sum triple ``(c0, c1, c2)`` of bead counts on
the runners of a pointed 3-abacus; we store only ``(x, y) = (c1, c2)``.
The size of the core is ``3x^2 + 3xy + 3y^2 + x + 2y`` and
``theta(x, y) = (6x + 3y + 1, 3y + 1)`` lands on x^2 + 3y^2 = 12n + 4.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Sequence

from .geometry import Solution, orbits
from .intfactor import factorize

DEFAULT_BRUTE_MAX = 80


def brute_max() -> int:
    """Largest n accepted by the partition oracle (``CORECRANK_BRUTE_MAX`` overrides)."""
    raw = os.environ.get("CORECRANK_BRUTE_MAX")
    if raw is None:
        return DEFAULT_BRUTE_MAX
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"CORECRANK_BRUTE_MAX must be an integer, got {raw!r}") from None


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be non-increasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True, order=True)
class CharVector:
    x: int
    y: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return (-self.x - self.y, self.x, self.y)

    @classmethod
    def from_triple(cls, c0: int, c1: int, c2: int) -> CharVector:
        if c0 + c1 + c2 != 0:
            raise ValueError(f"characteristic vector must sum to zero: {(c0, c1, c2)}")
        return cls(c1, c2)


@dataclass(frozen=True)
class FrobeniusSymbol:
    legs: tuple[int, ...]
    arms: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "legs", tuple(self.legs))
        object.__setattr__(self, "arms", tuple(self.arms))
        if len(self.legs) != len(self.arms):
            raise ValueError(f"legs and arms differ in length: {self.legs} | {self.arms}")
        for seq in (self.legs, self.arms):
            if any(v < 0 for v in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{seq} is not a strictly decreasing sequence of nonnegative integers")

    @property
    def depth(self) -> int:
        return len(self.arms)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.legs))} | {','.join(map(str, self.arms))})"


def size_of(c: CharVector) -> int:
    x, y = c.x, c.y
    return 3 * x * x + 3 * x * y + 3 * y * y + x + 2 * y


def theta(c: CharVector) -> Solution:
    return Solution(6 * c.x + 3 * c.y + 1, 3 * c.y + 1, 12 * size_of(c) + 4)


def theta_inv(s: Solution) -> CharVector:
    if s.x % 3 != 1 or s.y % 3 != 1 or (s.x - s.y) % 2:
        raise ValueError(f"({s.x},{s.y}) is not in the image of theta (needs residues (1,1) mod 3, equal parity)")
    return CharVector((s.x - s.y) // 6, (s.y - 1) // 3)


def enumerate_charvecs(n: int) -> list[CharVector]:
    """Characteristic vectors of the 3-cores of ``n``, read off the solutions of 12n + 4."""
    return sorted(theta_inv(orb[0]) for orb in orbits(n))


def enumerate_charvecs_bruteforce(n: int) -> set[CharVector]:
    """Scan a box that contains every (x, y) with size ``n``."""
    r = 2 + isqrt(n) + 1
    return {
        CharVector(x, y)
        for x in range(-r, r + 1)
        for y in range(-r, r + 1)
        if size_of(CharVector(x, y)) == n
    }


def charvec_to_frobenius(c: CharVector) -> FrobeniusSymbol:
    """Read the Frobenius symbol off the runner bead counts.

    Runner ``r`` with ``c_r > 0`` holds arms ``3q + r``; with ``c_r < 0`` it
    holds legs ``3q + 2 - r``, for ``0 <= q < |c_r|``.
    """
    arms: list[int] = []
    legs: list[int] = []
    for r, cr in enumerate(c.triple):
        if cr > 0:
            arms.extend(3 * q + r for q in range(cr))
        elif cr < 0:
            legs.extend(3 * q + 2 - r for q in range(-cr))
    if len(arms) != len(legs):
        raise ValueError(f"{c.triple} gives {len(arms)} arms but {len(legs)} legs")
    return FrobeniusSymbol(tuple(sorted(legs, reverse=True)), tuple(sorted(arms, reverse=True)))


def frobenius_to_partition(f: FrobeniusSymbol) -> Partition:
    d = f.depth
    rows = [f.arms[i] + i + 1 for i in range(d)]
    cols = [f.legs[j] + j + 1 for j in range(d)]
    tail_len = cols[0] - d if d else 0
    rows.extend(sum(1 for c in cols if c >= i) for i in range(d + 1, d + 1 + tail_len))
    lam = Partition(tuple(rows))
    if lam.size != d + sum(f.arms) + sum(f.legs):
        raise AssertionError(f"size mismatch rebuilding {f}")
    return lam


def partition_to_frobenius(lam: Partition) -> FrobeniusSymbol:
    conj = lam.conjugate().parts
    d = sum(1 for i, p in enumerate(lam.parts) if p > i)
    return FrobeniusSymbol(
        tuple(conj[i] - i - 1 for i in range(d)),
        tuple(lam.parts[i] - i - 1 for i in range(d)),
    )


def charvec_to_partition(c: CharVector) -> Partition:
    return frobenius_to_partition(charvec_to_frobenius(c))


def hooklengths(lam: Partition) -> list[int]:
    conj = lam.conjugate().parts
    return [
        (row - j) + (conj[j - 1] - i) + 1
        for i, row in enumerate(lam.parts, start=1)
        for j in range(1, row + 1)
    ]


def is_3core(lam: Partition) -> bool:
    hooks = hooklengths(lam)
    no_three = 3 not in hooks
    no_multiple = all(h % 3 for h in hooks)
    if no_three != no_multiple:
        raise AssertionError(f"hook tests disagree on {lam}")
    return no_three


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``n`` with parts at most ``largest``, in reverse lex order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _grow_cores(remaining: int, top: int, cols: list[int], below: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # ``below`` is a 3-core built bottom-up; ``cols`` are its column heights.
    # Putting a row on top leaves every existing hook unchanged, so only the
    # new row's hooks need checking.
    if remaining == 0:
        yield below
        return
    for length in range(top, remaining + 1):
        if any((length - j) + (cols[j - 1] if j <= len(cols) else 0) + 1 == 3 for j in range(1, length + 1)):
            continue
        new_cols = [(cols[j] if j < len(cols) else 0) + 1 for j in range(length)]
        yield from _grow_cores(remaining - length, length, new_cols, (length,) + below)


def enumerate_3cores_bruteforce(n: int, bound: int | None = None) -> set[Partition]:
    """All 3-cores of ``n`` found by direct partition search with hook tests.

    The search builds partitions from the bottom row up and discards a
    branch as soon as the newly placed row has a hook of length 3.
    """
    if bound is None:
        bound = brute_max()
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise ValueError(f"n = {n} exceeds the partition-oracle bound {bound}")
    out = set()
    for parts in _grow_cores(n, 1, [], ()):
        lam = Partition(parts)
        if not is_3core(lam):
            raise AssertionError(f"pruned search produced non-core {lam}")
        out.add(lam)
    return out


def a3(n: int) -> int:
    """Number of 3-cores of ``n`` from the factorization of 3n + 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    count = 1
    for p, e in factorize(3 * n + 1):
        if p % 3 == 2:
            if e % 2:
                return 0
        else:
            count *= e + 1
    return count


def conj_charvec(c: CharVector) -> CharVector:
    """Characteristic vector of the conjugate partition."""
    return CharVector(-c.x, c.x + c.y)


def asc3(n: int) -> int:
    """Number of self-conjugate 3-cores of ``n`` (0 or 1)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    m = 3 * n + 1
    return int(isqrt(m) ** 2 == m)


def self_conjugate_core(n: int) -> CharVector | None:
    """The self-conjugate 3-core of ``n`` as a characteristic vector, if there is one."""
    if not asc3(n):
        return None
    u = isqrt(3 * n + 1)
    if u % 3 != 1:
        u = -u
    return theta_inv(Solution(u, u, 12 * n + 4))


def partition_to_json(lam: Partition) -> list[int]:
    return list(lam.parts)


def partition_from_json(data: Sequence[int]) -> Partition:
    return Partition(tuple(data))


def frobenius_to_json(f: FrobeniusSymbol) -> dict[str, list[int]]:
    return {"legs": list(f.legs), "arms": list(f.arms)}


def frobenius_from_json(data: dict[str, Sequence[int]]) -> FrobeniusSymbol:
    return FrobeniusSymbol(tuple(data["legs"]), tuple(data["arms"]))


def charvec_to_json(c: CharVector) -> list[int]:
    return list(c.triple)


def charvec_from_json(data: Sequence[int]) -> CharVector:
    return CharVector.from_triple(*data)
