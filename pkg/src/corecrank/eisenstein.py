"""Arithmetic in the Eisenstein integers Z[w], w = exp(2*pi*i/3).

An element is stored in the basis (1, w) as ``a + b*w``.  The
half-coordinates ``(u, v) = (2a - b, b)`` describe the same element as
``(u + v*sqrt(-3)) / 2``; they are the lattice points of ``u^2 + 3v^2 = 4N``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import isqrt, prod

from .intfactor import PrimeClass, factorize, is_prime, prime_class, sqrt_mod


@dataclass(frozen=True, order=True)
class EisInt:
    a: int
    b: int

    @classmethod
    def from_half(cls, u: int, v: int) -> EisInt:
        if (u - v) % 2:
            raise ValueError(f"half-coordinates ({u},{v}) must have equal parity")
        return cls((u + v) // 2, v)

    @classmethod
    def from_int(cls, n: int) -> EisInt:
        return cls(n, 0)

    @property
    def half(self) -> tuple[int, int]:
        return (2 * self.a - self.b, self.b)

    def __add__(self, other: EisInt) -> EisInt:
        return EisInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisInt) -> EisInt:
        return EisInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisInt:
        return EisInt(-self.a, -self.b)

    def __mul__(self, other: EisInt | int) -> EisInt:
        if isinstance(other, int):
            return EisInt(self.a * other, self.b * other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> EisInt:
        if e < 0:
            raise ValueError("negative powers are not supported")
        out, base = ONE, self
        while e:
            if e & 1:
                out = multiply(out, base)
            base = multiply(base, base)
            e >>= 1
        return out

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}*w"


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
OMEGA = EisInt(0, 1)

_BASIS_RE = re.compile(r"^\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*w\s*$")
_HALF_RE = re.compile(r"^\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*/\s*2\s*$")


def format_half(z: EisInt) -> str:
    u, v = z.half
    return f"({u},{v})/2"


def parse_eisint(text: str) -> EisInt:
    """Inverse of ``str(z)`` and of ``format_half(z)``."""
    m = _BASIS_RE.match(text)
    if m:
        b = int(m.group(3))
        return EisInt(int(m.group(1)), b if m.group(2) == "+" else -b)
    m = _HALF_RE.match(text)
    if m:
        return EisInt.from_half(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"cannot parse Eisenstein integer from {text!r}")


def norm(z: EisInt) -> int:
    return z.a * z.a - z.a * z.b + z.b * z.b


def multiply(z1: EisInt, z2: EisInt) -> EisInt:
    # w^2 = -1 - w
    a, b, c, d = z1.a, z1.b, z2.a, z2.b
    return EisInt(a * c - b * d, a * d + b * c - b * d)


def conjugate(z: EisInt) -> EisInt:
    return EisInt(z.a - z.b, -z.b)


def units() -> list[EisInt]:
    """The six units, as the powers ``(1+w)^0 .. (1+w)^5`` in that order."""
    return list(_UNITS)


_UNITS = tuple(EisInt(1, 1) ** i for i in range(6))


def associates(z: EisInt) -> list[EisInt]:
    return [multiply(e, z) for e in _UNITS]


def divides(d: EisInt, z: EisInt) -> bool:
    n = norm(d)
    if n == 0:
        return z == ZERO
    w = multiply(z, conjugate(d))
    return w.a % n == 0 and w.b % n == 0


def exact_div(z: EisInt, d: EisInt) -> EisInt:
    n = norm(d)
    w = multiply(z, conjugate(d))
    if n == 0 or w.a % n or w.b % n:
        raise ArithmeticError(f"{d} does not divide {z}")
    return EisInt(w.a // n, w.b // n)


def is_associate(z1: EisInt, z2: EisInt) -> bool:
    return z2 in associates(z1)


def canonical_associate(z: EisInt) -> EisInt:
    """The unit multiple of ``z`` whose half-coordinates are both 1 mod 3."""
    n = norm(z)
    if n == 0 or n % 3 != 1:
        raise ValueError(f"canonical associate needs norm = 1 mod 3, got norm {n}")
    hits = [w for w in associates(z) if w.half[0] % 3 == 1 and w.half[1] % 3 == 1]
    if len(hits) != 1:
        raise AssertionError(f"{len(hits)} associates of {z} have residues (1,1)")
    return hits[0]


def _cornacchia_4p(p: int) -> tuple[int, int]:
    """Solve ``u^2 + 3v^2 = 4p`` for a prime ``p = 1 mod 3``, with ``u, v >= 0``."""
    t = sqrt_mod(-3, p)
    if t is None:
        raise ArithmeticError(f"-3 is not a square mod {p}")
    # need t^2 = -3 (mod 4p), so t must be odd
    if t % 2 == 0:
        t = p - t
    a, b = 2 * p, t
    bound = isqrt(4 * p)
    while b > bound:
        a, b = b, a % b
    rest = 4 * p - b * b
    v2, r = divmod(rest, 3)
    v = isqrt(v2)
    if r or v * v != v2:
        raise ArithmeticError(f"Cornacchia descent failed for {p}")
    return b, v


@lru_cache(maxsize=4096)
def split_prime(p: int) -> EisInt:
    """An irreducible ``x_p`` of norm ``p`` for ``p = 1 mod 3``.

    Normalized to ``x_p = s + t*sqrt(-3)`` with ``s, t > 0``: of the twelve
    elements of norm ``p`` exactly one has that shape.  This reproduces
    ``x_7 = 2 + sqrt(-3)`` and ``x_43 = 4 + 3*sqrt(-3)``.
    """
    if not is_prime(p) or prime_class(p) is not PrimeClass.PI1:
        raise ValueError(f"{p} is not a prime congruent to 1 mod 3")
    u, v = _cornacchia_4p(p)
    x = EisInt.from_half(u, v)
    for w in associates(x) + associates(conjugate(x)):
        wu, wv = w.half
        if wu > 0 and wv > 0 and wu % 2 == 0 and wv % 2 == 0:
            return w
    raise AssertionError(f"no even positive associate of norm {p}")


@dataclass(frozen=True)
class EisFactorization:
    """``unit * prod(irreducible ** exponent)``."""

    unit: EisInt
    parts: tuple[tuple[EisInt, int], ...]

    def value(self) -> EisInt:
        out = self.unit
        for x, e in self.parts:
            out = multiply(out, x**e)
        return out


def factor(z: EisInt) -> EisFactorization:
    """Factor a nonzero ``z`` into irreducibles of Z[w].

    Primes 1 mod 3 contribute ``split_prime(p)`` and its conjugate, primes
    2 mod 3 appear as themselves, and 3 appears through ``1 - w``.
    """
    n = norm(z)
    if n == 0:
        raise ValueError("cannot factor zero")
    parts: list[tuple[EisInt, int]] = []
    rest = z
    for p, e in factorize(n):
        cls = prime_class(p)
        if cls is PrimeClass.PI2:
            cands = [EisInt.from_int(p)]
        elif cls is PrimeClass.THREE:
            cands = [EisInt(1, -1)]
        else:
            x = split_prime(p)
            cands = [x, conjugate(x)]
        for x in cands:
            k = 0
            while divides(x, rest):
                rest = exact_div(rest, x)
                k += 1
            if k:
                parts.append((x, k))
    if norm(rest) != 1:
        raise AssertionError(f"leftover {rest} after factoring {z}")
    return EisFactorization(rest, tuple(parts))


@dataclass(frozen=True)
class NormData:
    """How ``M`` decomposes with respect to the norm form."""

    M: int
    factors: tuple[tuple[int, int], ...]
    split: tuple[tuple[int, int], ...]  # (p, nu_p(M)) for p = 1 mod 3
    inert: tuple[tuple[int, int], ...]  # (p, nu_p(M)) for p = 2 mod 3
    representable: bool
    q: int | None  # prod p^(nu/2) over inert p, when representable

    @property
    def num_classes(self) -> int:
        if not self.representable:
            return 0
        return prod(e + 1 for _, e in self.split)


def norm_data(M: int) -> NormData:
    if M <= 0:
        raise ValueError(f"M must be positive, got {M}")
    fac = tuple(factorize(M))
    split = tuple((p, e) for p, e in fac if p % 3 == 1)
    inert = tuple((p, e) for p, e in fac if p % 3 == 2)
    ok = all(e % 2 == 0 for _, e in inert) and M % 3 != 0
    q = prod(p ** (e // 2) for p, e in inert) if ok else None
    return NormData(M, fac, split, inert, ok, q)


def exponent_vectors(M: int) -> list[dict[int, int]]:
    """All ``{p: j_p}`` with ``0 <= j_p <= nu_p(M)`` over split primes of ``M``.

    Odometer order with the smallest prime varying slowest.
    """
    split = norm_data(M).split
    ranges = [range(e + 1) for _, e in split]
    return [dict(zip((p for p, _ in split), js)) for js in product(*ranges)]


def norm_representations(M: int) -> list[EisInt]:
    """One canonical element of norm ``M`` per unit class, sorted by half-coordinates.

    Each class is ``q * prod x_p^j * conj(x_p)^(nu_p - j)``, canonicalized.
    The list is empty exactly when some prime 2 mod 3 divides ``M`` to an
    odd power.
    """
    if M <= 0:
        raise ValueError(f"M must be positive, got {M}")
    if M % 3 == 0:
        raise ValueError(f"M = {M} is divisible by 3; only M not divisible by 3 is handled")
    data = norm_data(M)
    if not data.representable:
        return []
    assert data.q is not None
    out = []
    for js in exponent_vectors(M):
        y = EisInt.from_int(data.q)
        for p, e in data.split:
            x = split_prime(p)
            y = multiply(y, multiply(x ** js[p], conjugate(x) ** (e - js[p])))
        out.append(canonical_associate(y))
    out.sort(key=lambda z: z.half)
    return out
