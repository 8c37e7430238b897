"""Sweeps comparing each construction with an independent brute-force route."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cores import (
    a3,
    brute_max,
    charvec_to_partition,
    conj_charvec,
    enumerate_3cores_bruteforce,
    enumerate_charvecs,
    enumerate_charvecs_bruteforce,
    is_3core,
    size_of,
    theta,
)
from .geometry import (
    RESIDUE_CYCLE,
    CrankValue,
    apply_conj,
    apply_R,
    crank,
    orbits,
    solutions_bruteforce,
    solutions_via_eisenstein,
)


@dataclass
class SuiteResult:
    name: str
    upto: int
    checked: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def check_count(n_max: int) -> SuiteResult:
    fails = []
    for n in range(n_max + 1):
        u = len(solutions_bruteforce(12 * n + 4))
        if u != 6 * a3(n):
            fails.append(f"n={n}: |U|={u}, 6*a3={6 * a3(n)}")
    return SuiteResult("count |U_12n+4| = 6 a3(n)", n_max, n_max + 1, fails)


def check_eisenstein(n_max: int) -> SuiteResult:
    fails = []
    for n in range(n_max + 1):
        if solutions_via_eisenstein(n) != solutions_bruteforce(12 * n + 4):
            fails.append(f"n={n}")
    return SuiteResult("Eisenstein solver = brute force", n_max, n_max + 1, fails)


def crank_failures(n: int) -> list[str]:
    fails = []
    sols = solutions_bruteforce(12 * n + 4)
    for s in sols:
        it = [s]
        for _ in range(6):
            it.append(apply_R(it[-1]))
        if it[6] != s or len(set(it[:6])) != 6:
            fails.append(f"n={n}: R not free at {s.point}")
        if crank(s) != CrankValue(*RESIDUE_CYCLE[(RESIDUE_CYCLE.index(s.residues) + 1) % 6]):
            fails.append(f"n={n}: crank at {s.point} is not the next residue pair")
    seen = 0
    for orb in orbits(n):
        seen += len(orb)
        if sorted(s.residues for s in orb) != sorted(RESIDUE_CYCLE):
            fails.append(f"n={n}: orbit of {orb[0].point} misses a residue pair")
    if seen != len(sols):
        fails.append(f"n={n}: orbits cover {seen} of {len(sols)} solutions")
    fibers = Counter(crank(s) for s in sols)
    if sols and (len(fibers) != 6 or len(set(fibers.values())) != 1):
        fails.append(f"n={n}: crank fibers {dict(fibers)}")
    return fails


def check_crank(n_max: int) -> SuiteResult:
    fails = [f for n in range(n_max + 1) for f in crank_failures(n)]
    return SuiteResult("R free, crank equidistributed", n_max, n_max + 1, fails)


def check_charvecs(n_max: int) -> SuiteResult:
    fails = []
    for n in range(n_max + 1):
        if set(enumerate_charvecs(n)) != enumerate_charvecs_bruteforce(n):
            fails.append(f"n={n}")
    return SuiteResult("C_n from orbits = size-form scan", n_max, n_max + 1, fails)


def check_partitions(n_max: int) -> SuiteResult:
    top = min(n_max, brute_max())
    fails = []
    for n in range(top + 1):
        built = [charvec_to_partition(c) for c in enumerate_charvecs(n)]
        if any(lam.size != n or not is_3core(lam) for lam in built):
            fails.append(f"n={n}: pipeline produced a non-core or wrong size")
        if set(built) != enumerate_3cores_bruteforce(n):
            fails.append(f"n={n}: pipeline differs from partition oracle")
    return SuiteResult("3-cores via abacus = partition oracle", top, top + 1, fails)


def check_conjugation(n_max: int) -> SuiteResult:
    fails = []
    checked = 0
    for n in range(n_max + 1):
        for c in enumerate_charvecs_bruteforce(n):
            checked += 1
            if theta(conj_charvec(c)) != apply_conj(theta(c)) or size_of(conj_charvec(c)) != n:
                fails.append(f"c={c.triple}")
    return SuiteResult("conj o theta = theta o conj", n_max, checked, fails)


SUITES = (check_count, check_eisenstein, check_crank, check_charvecs, check_partitions, check_conjugation)


def run_all(n_max: int) -> list[SuiteResult]:
    return [suite(n_max) for suite in SUITES]
