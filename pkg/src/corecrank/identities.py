"""Counting identities for a3 and criteria for a3(N) = 0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any

from .cores import CharVector, a3
from .intfactor import factorize, valuation


def report(claim: str, parameters: dict[str, Any], lhs: Any, rhs: Any) -> dict[str, Any]:
    """A verification record; key order is fixed for stable JSON."""
    return {"claim": claim, "parameters": parameters, "lhs": lhs, "rhs": rhs, "verdict": lhs == rhs}


def hs_valid(k: int) -> bool:
    """``k`` is prime to 3 and every prime 2 mod 3 divides it to an even power."""
    if k <= 0 or k % 3 == 0:
        return False
    return all(e % 2 == 0 for p, e in factorize(k) if p % 3 == 2)


def hs_count(k: int, n: int) -> int:
    """a3(k*n + (k-1)/3) predicted from a3(n) and the split primes of ``k``."""
    if k <= 0 or k % 3 == 0:
        raise ValueError(f"k must be positive and prime to 3, got {k}")
    if not hs_valid(k):
        raise ValueError(f"the part of k = {k} made of primes 2 mod 3 is not a square")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    base = a3(n)
    if base == 0:
        return 0
    m = 3 * n + 1
    ratio = Fraction(1)
    for p, e in factorize(k):
        if p % 3 == 1:
            vm = valuation(m, p)
            ratio *= Fraction(e + vm + 1, vm + 1)
    out = base * ratio
    if out.denominator != 1:
        raise AssertionError(f"non-integral count {out} for k={k}, n={n}")
    return int(out)


def amazing_N(n: int, k: int) -> int:
    return 3 * n * n + (3 ** (k + 1) + 2) * n + 3**k


def alpha(c: CharVector, c2: CharVector) -> CharVector:
    """Combine cores of ``n`` and ``n + 3^k`` into a core of ``amazing_N(n, k)``."""
    x, y, xp, yp = c.x, c.y, c2.x, c2.y
    return CharVector(
        x + xp + 3 * x * xp + 3 * x * yp + 3 * y * xp,
        y + yp - 3 * x * xp + 3 * y * yp,
    )


def han_i(n: int, m: int) -> int:
    if n < 0 or m < 1:
        raise ValueError(f"need n >= 0 and m >= 1, got n={n}, m={m}")
    return 4**m * n + (10 * 4 ** (m - 1) - 1) // 3


def han_ii_N(n: int, m: int, k: int) -> int:
    d = 6 * k - 1
    return d * d * n + d * m + 4 * k - 1


def han_ii_counterexample() -> tuple[int, int]:
    """N = 58 meets Han's form (ii) with n=0, m=1, k=6 yet has two 3-cores."""
    n, m, k = 0, 1, 6
    N = han_ii_N(n, m, k)
    if N != 58 or m % (6 * k - 1) == (2 * k - 1) % (6 * k - 1):
        raise AssertionError("58 does not satisfy the form (ii) hypotheses")
    return N, a3(N)


@dataclass(frozen=True)
class HanIIVerdict:
    N: int
    hypothesis: bool  # every prime 2 mod 3 divides 6k-1 to an odd power
    witness: int | None  # prime 2 mod 3, odd power in 6k-1, with m != 2k-1 mod p
    a3: int

    @property
    def vanishes(self) -> bool:
        return self.a3 == 0


def han_ii_fixed(n: int, m: int, k: int) -> HanIIVerdict:
    """Evaluate Han's form (ii) under the strengthened hypothesis on 6k - 1.

    ``witness`` is the prime that actually forces a3(N) = 0: it must divide
    ``6k - 1`` to an odd power and satisfy ``m != 2k - 1 (mod p)``.  The
    congruence modulo ``6k - 1`` alone does not give this when ``6k - 1`` is
    composite (N = 58 is the smallest failure).
    """
    if n < 0 or m < 1 or k < 1:
        raise ValueError(f"need n >= 0, m >= 1, k >= 1, got {(n, m, k)}")
    d = 6 * k - 1
    if (m - (2 * k - 1)) % d == 0:
        raise ValueError(f"m = {m} is congruent to 2k-1 modulo 6k-1 = {d}")
    inert = [(p, e) for p, e in factorize(d) if p % 3 == 2]
    hypothesis = all(e % 2 == 1 for _, e in inert)
    witness = next((p for p, e in inert if e % 2 and (m - (2 * k - 1)) % p), None)
    N = han_ii_N(n, m, k)
    return HanIIVerdict(N, hypothesis, witness, a3(N))


@dataclass(frozen=True)
class HanWitness:
    """Parameters placing N in Han's form (i) or form (ii)."""

    form: str  # "i" or "ii"
    n: int
    m: int
    k: int | None = None
    p: int | None = None

    def value(self) -> int:
        if self.form == "i":
            return han_i(self.n, self.m)
        assert self.k is not None
        return han_ii_N(self.n, self.m, self.k)


def han_iii_decompose(N: int) -> HanWitness:
    """Write an N with no 3-cores in form (i) or form (ii) with n = 0.

    Uses the smallest odd prime ``p = 2 mod 3`` dividing 3N + 1 to an odd
    power and sets ``6k - 1 = p^nu``.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    if a3(N) != 0:
        raise ValueError(f"a3({N}) = {a3(N)} is not zero")
    M = 3 * N + 1
    p, e = next((p, e) for p, e in factorize(M) if p % 3 == 2 and p != 2 and e % 2)
    pe = p**e
    k = (pe + 1) // 6
    q = M // pe
    if q == 2:
        w = HanWitness("i", k - 1, 1, p=p)
    else:
        m = (q - 2) // 3
        if (m - (2 * k - 1)) % p == 0:
            raise AssertionError(f"m = {m} = 2k-1 mod {p} for N = {N}")
        w = HanWitness("ii", 0, m, k=k, p=p)
    if w.value() != N:
        raise AssertionError(f"witness {w} does not rebuild {N}")
    return w


def coprime_shift(n: int, k: int) -> bool:
    return gcd(3 * n + 1, 3 * (n + 3**k) + 1) == 1
