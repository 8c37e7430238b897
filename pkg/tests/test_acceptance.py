"""Exit criteria.  Each test carries its time limit and checks exact equality."""

import json
import time
from collections import Counter
from contextlib import contextmanager

import pytest

from corecrank.cli import main
from corecrank.cores import (
    CharVector,
    a3,
    asc3,
    charvec_to_frobenius,
    conj_charvec,
    enumerate_3cores_bruteforce,
    enumerate_charvecs,
    enumerate_charvecs_bruteforce,
    frobenius_to_partition,
    is_3core,
    theta,
)
from corecrank.geometry import (
    RESIDUE_CYCLE,
    apply_conj,
    apply_R,
    crank,
    orbits,
    solutions_bruteforce,
    solutions_via_eisenstein,
)
from corecrank.identities import (
    alpha,
    amazing_N,
    han_i,
    han_ii_counterexample,
    han_ii_N,
    han_iii_decompose,
    hs_count,
    hs_valid,
)

U448 = {
    (-20, 4), (-16, -8), (4, -12), (20, -4), (16, 8), (-4, 12),
    (16, -8), (20, 4), (4, 12), (-16, 8), (-20, -4), (-4, -12),
}  # fmt: skip


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


@pytest.mark.criterion(1, "U_448 golden example via `solve --k 448`")
def test_criterion_1_u448(capsys):
    with within(1):
        code = main(["--format", "json", "solve", "--k", "448"])
        data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert {tuple(p) for p in data["solutions"]} == U448
    assert len(data["solutions"]) == 12
    assert len(data["orbits"]) == 2
    assert [tuple(o[0]) for o in data["orbits"]] == [(-20, 4), (16, -8)]
    assert {tuple(p) for o in data["orbits"] for p in o} == U448


@pytest.mark.criterion(2, "n=100 golden example: F_100, C_100 and partitions")
def test_criterion_2_n100(capsys):
    with within(1):
        code = main(["--format", "json", "cores", "--n", "100", "--partitions"])
        data = json.loads(capsys.readouterr().out)
        vecs = enumerate_charvecs(100)
        parts = {frobenius_to_partition(charvec_to_frobenius(c)).parts for c in vecs}
    assert code == 0
    assert {theta(c).point for c in vecs} == {(-2, -20), (-11, 19), (-29, -11), (34, 4)}
    assert {c.triple for c in vecs} == {(4, 3, -7), (-1, -5, 6), (7, -3, -4), (-6, 5, 1)}
    expected = {
        (10, 9, 9, 8, 8, 7, 7, 6, 6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1),
        (18, 16, 14, 12, 10, 8, 6, 4, 3, 3, 2, 2, 1, 1),
        (19, 17, 15, 13, 11, 9, 7, 5, 3, 1),
        (14, 12, 10, 8, 7, 7, 6, 6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1),
    }
    assert parts == expected
    assert {tuple(p) for p in data["partitions"]} == expected
    assert {tuple(p) for p in data["solutions"]} == {(-2, -20), (-11, 19), (-29, -11), (34, 4)}


@pytest.mark.criterion(3, "|U_12n+4| = 6 a3(n) for n <= 500")
def test_criterion_3_baruah_nath():
    with within(30):
        for n in range(501):
            assert len(solutions_bruteforce(12 * n + 4)) == 6 * a3(n), n


@pytest.mark.criterion(4, "abacus pipeline = partition oracle for n <= 60")
def test_criterion_4_core_bijection():
    with within(60):
        for n in range(61):
            built = [frobenius_to_partition(charvec_to_frobenius(c)) for c in enumerate_charvecs(n)]
            assert all(lam.size == n and is_3core(lam) for lam in built), n
            assert len(set(built)) == len(built)
            assert set(built) == enumerate_3cores_bruteforce(n), n


@pytest.mark.criterion(5, "free R-action, one residue pair per orbit slot, equal crank fibers for n <= 500")
def test_criterion_5_crank():
    with within(30):
        for n in range(501):
            sols = solutions_bruteforce(12 * n + 4)
            for s in sols:
                it = [s]
                for _ in range(6):
                    it.append(apply_R(it[-1]))
                assert it[6] == s and len(set(it[:6])) == 6
            orbs = orbits(n)
            assert all(len(o) == 6 for o in orbs)
            assert {s for o in orbs for s in o} == sols
            for o in orbs:
                assert Counter(s.residues for s in o) == Counter(RESIDUE_CYCLE)
            fibers = Counter(crank(s) for s in sols)
            if sols:
                assert set(fibers) == set(RESIDUE_CYCLE)
                assert len(set(fibers.values())) == 1


@pytest.mark.criterion(6, "Eisenstein solver = brute force for n <= 500")
def test_criterion_6_eisenstein():
    empty = 0
    with within(60):
        for n in range(501):
            via = solutions_via_eisenstein(n)
            assert via == solutions_bruteforce(12 * n + 4), n
            if a3(n) == 0:
                assert via == set()
                empty += 1
    assert empty > 0


@pytest.mark.criterion(7, "alpha is a bijection C_n x C_n+3^k -> C_N, n <= 12, k <= 2")
def test_criterion_7_amazing():
    with within(10):
        for n in range(13):
            for k in range(3):
                N = amazing_N(n, k)
                image = [alpha(c, c2) for c in enumerate_charvecs(n) for c2 in enumerate_charvecs(n + 3**k)]
                assert len(set(image)) == len(image)
                assert set(image) == set(enumerate_charvecs(N)) == enumerate_charvecs_bruteforce(N)
                assert a3(N) == a3(n) * a3(n + 3**k)


@pytest.mark.criterion(8, "hs_count(k, n) = a3(kn + (k-1)/3), k <= 100, n <= 60")
def test_criterion_8_hirschhorn_sellers():
    checked = 0
    with within(10):
        for k in range(1, 101):
            if not hs_valid(k):
                continue
            for n in range(61):
                assert hs_count(k, n) == a3(k * n + (k - 1) // 3), (k, n)
                checked += 1
    assert checked > 0


@pytest.mark.criterion(9, "Han (i) sweep, N=58 counterexample, (iii) decomposition for N <= 500")
def test_criterion_9_han():
    with within(30):
        for n in range(101):
            for m in range(1, 6):
                assert a3(han_i(n, m)) == 0
        assert han_ii_counterexample() == (58, 2)
        assert len(enumerate_3cores_bruteforce(58)) == 2
        for N in range(501):
            if a3(N) != 0:
                continue
            w = han_iii_decompose(N)
            if w.form == "i":
                assert han_i(w.n, w.m) == N
            else:
                assert w.form == "ii" and w.n == 0
                assert han_ii_N(0, w.m, w.k) == N
                assert (w.m - (2 * w.k - 1)) % (6 * w.k - 1) != 0


@pytest.mark.criterion(10, "self-conjugate 3-cores: asc3, conj o theta, scaling in k")
def test_criterion_10_self_conjugate():
    with within(30):
        for n in range(61):
            selfconj = [lam for lam in enumerate_3cores_bruteforce(n) if lam == lam.conjugate()]
            assert asc3(n) == len(selfconj), n
        for n in range(81):
            for c in enumerate_charvecs_bruteforce(n):
                assert theta(conj_charvec(c)) == apply_conj(theta(c))
        for k in (2, 4, 5, 7):
            for n in range(61):
                assert asc3(n) == asc3(k * k * n + (k * k - 1) // 3), (k, n)
    assert isinstance(conj_charvec(CharVector(0, 0)), CharVector)
