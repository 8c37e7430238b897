"""Rational-integer helpers: factorization, valuations, square roots mod p.

Everything here accepts arbitrary-precision ``int``.  Factorization is
trial division by the primes below ``TRIAL_LIMIT`` followed by Brent's
variant of Pollard rho on whatever cofactor is left, with Miller-Rabin
(deterministic below 3.3e24) certifying the pieces.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from math import gcd, isqrt

TRIAL_LIMIT = 10**6

# Miller-Rabin with these bases is exact for n < 3_317_044_064_679_887_385_961_981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


# Built once at import; read-only afterwards, so sharing across threads is safe.
SMALL_PRIMES = _sieve(TRIAL_LIMIT)


class PrimeClass(enum.Enum):
    """Residue class of a rational prime modulo 3."""

    PI1 = "Pi1"  # p = 1 mod 3, splits in Z[w]
    PI2 = "Pi2"  # p = 2 mod 3, stays irreducible
    THREE = "Three"  # ramifies

    def __str__(self) -> str:
        return self.value


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n <= TRIAL_LIMIT:
        i = bisect_right(SMALL_PRIMES, n)
        return SMALL_PRIMES[i - 1] == n
    for p in _MR_BASES:
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n`` (Brent's cycle)."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")


def _split_large(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _rho(m)
        stack.extend((d, m // d))


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of ``m`` as ``[(p, e), ...]`` with ``p`` ascending.

    >>> factorize(301)
    [(7, 1), (43, 1)]
    >>> factorize(1)
    []
    """
    if m <= 0:
        raise ValueError(f"factorize expects a positive integer, got {m}")
    found: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    else:
        _split_large(m, found)
        m = 1
    if m > 1:
        found[m] = found.get(m, 0) + 1
    return sorted(found.items())


def valuation(m: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``m``."""
    if m <= 0:
        raise ValueError(f"valuation expects m >= 1, got {m}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def sqrt_mod(a: int, p: int) -> int | None:
    """Least nonnegative ``t`` with ``t*t = a (mod p)``, or ``None`` for a non-residue.

    ``p`` must be an odd prime.  Tonelli-Shanks, with the ``(p+1)/4`` power
    when ``p = 3 mod 4``; the non-residue search scans 2, 3, 5, 7, ... so the
    result never depends on randomness.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"sqrt_mod needs an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        t = pow(a, (p + 1) // 4, p)
        return min(t, p - t)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = next(c for c in SMALL_PRIMES if pow(c, (p - 1) // 2, p) == p - 1)
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def prime_class(p: int) -> PrimeClass:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        return PrimeClass.THREE
    return PrimeClass.PI1 if p % 3 == 1 else PrimeClass.PI2
