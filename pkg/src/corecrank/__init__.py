"""3-core partitions, the form x^2 + 3y^2 = 12n + 4 and the Eisenstein integers."""

from .cores import (
    CharVector,
    FrobeniusSymbol,
    Partition,
    a3,
    asc3,
    charvec_to_frobenius,
    enumerate_3cores_bruteforce,
    enumerate_charvecs,
    frobenius_to_partition,
    is_3core,
    size_of,
    theta,
    theta_inv,
)
from .eisenstein import EisInt, canonical_associate, norm, norm_representations, split_prime
from .geometry import Solution, apply_conj, apply_R, crank, orbits, solutions_bruteforce, solutions_via_eisenstein
from .intfactor import factorize, prime_class, sqrt_mod, valuation

__all__ = [
    "CharVector",
    "EisInt",
    "FrobeniusSymbol",
    "Partition",
    "Solution",
    "a3",
    "apply_R",
    "apply_conj",
    "asc3",
    "canonical_associate",
    "charvec_to_frobenius",
    "crank",
    "enumerate_3cores_bruteforce",
    "enumerate_charvecs",
    "factorize",
    "frobenius_to_partition",
    "is_3core",
    "norm",
    "norm_representations",
    "orbits",
    "prime_class",
    "size_of",
    "solutions_bruteforce",
    "solutions_via_eisenstein",
    "split_prime",
    "sqrt_mod",
    "theta",
    "theta_inv",
    "valuation",
]
