import json
from math import gcd

import pytest

from corecrank.cores import (
    CharVector,
    a3,
    enumerate_3cores_bruteforce,
    enumerate_charvecs,
    enumerate_charvecs_bruteforce,
    size_of,
)
from corecrank.identities import (
    HanWitness,
    alpha,
    amazing_N,
    coprime_shift,
    han_i,
    han_ii_counterexample,
    han_ii_fixed,
    han_ii_N,
    han_iii_decompose,
    hs_count,
    hs_valid,
    report,
)

CV = CharVector


def test_report_shape():
    r = report("x", {"n": 1}, 2, 2)
    assert list(r) == ["claim", "parameters", "lhs", "rhs", "verdict"]
    assert r["verdict"] is True
    assert json.loads(json.dumps(r)) == r
    assert report("x", {}, 1, 2)["verdict"] is False


def test_hs_valid():
    assert [k for k in range(1, 30) if hs_valid(k)] == [1, 4, 7, 13, 16, 19, 25, 28]


@pytest.mark.parametrize("k", [3, 2, 5, 10, 0, -4])
def test_hs_count_rejects(k):
    with pytest.raises(ValueError):
        hs_count(k, 1)


def test_hs_count_square_without_split_primes():
    for n in range(61):
        assert hs_count(4, n) == a3(4 * n + 1) == a3(n)
        assert hs_count(1, n) == a3(n)


def test_hs_count_k7_n2():
    assert hs_count(7, 2) == 3
    assert len(enumerate_3cores_bruteforce(16)) == 3


def test_hs_count_matches_direct_a3():
    for k in range(1, 101):
        if not hs_valid(k):
            continue
        for n in range(61):
            assert hs_count(k, n) == a3(k * n + (k - 1) // 3), (k, n)


def test_alpha_identity_on_second_factor():
    for c in enumerate_charvecs_bruteforce(20):
        assert alpha(CV(0, 0), c) == c


def test_alpha_small_bijection():
    assert set(enumerate_charvecs(1)) == {CV(0, -1)}
    assert set(enumerate_charvecs(2)) == {CV(-1, 0), CV(1, -1)}
    assert alpha(CV(0, -1), CV(-1, 0)) == CV(2, -1)
    assert alpha(CV(0, -1), CV(1, -1)) == CV(-2, 1)
    assert a3(9) == a3(1) * a3(2) == 2


def test_alpha_size_formula():
    for n in range(13):
        for k in range(3):
            for c in enumerate_charvecs(n):
                for c2 in enumerate_charvecs(n + 3**k):
                    assert size_of(alpha(c, c2)) == amazing_N(n, k)


def test_alpha_is_bijection():
    for n in range(13):
        for k in range(3):
            N = amazing_N(n, k)
            pairs = [(c, c2) for c in enumerate_charvecs(n) for c2 in enumerate_charvecs(n + 3**k)]
            image = [alpha(c, c2) for c, c2 in pairs]
            assert len(set(image)) == len(image)
            assert set(image) == enumerate_charvecs_bruteforce(N), (n, k)
            assert a3(N) == a3(n) * a3(n + 3**k)


def test_coprimality():
    for n in range(201):
        for k in range(4):
            assert coprime_shift(n, k)
            assert gcd(3 * n + 1, 3 * (n + 3**k) + 1) == 1


def test_multiplicativity():
    for n in range(61):
        for m in range(61):
            if gcd(3 * n + 1, 3 * m + 1) == 1:
                assert a3(3 * m * n + m + n) == a3(n) * a3(m)


@pytest.mark.parametrize("n, m, N", [(0, 1, 3), (1, 2, 29), (5, 1, 23)])
def test_han_i_examples(n, m, N):
    assert han_i(n, m) == N
    assert a3(N) == 0


def test_han_i_no_cores_for_3():
    assert enumerate_3cores_bruteforce(3) == set()


def test_han_i_sweep():
    for n in range(101):
        for m in range(1, 6):
            assert a3(han_i(n, m)) == 0


def test_han_i_rejects():
    with pytest.raises(ValueError):
        han_i(0, 0)


def test_han_ii_counterexample():
    assert han_ii_counterexample() == (58, 2)
    assert len(enumerate_3cores_bruteforce(58)) == 2
    assert 3 * 58 + 1 == 5**2 * 7


def test_han_ii_fixed_rejects_congruent_m():
    with pytest.raises(ValueError):
        han_ii_fixed(0, 1, 1)  # 1 = 2k-1 mod 5
    with pytest.raises(ValueError):
        han_ii_fixed(0, 11, 6)


def test_han_ii_fixed_k1_sweep():
    count = 0
    for n in range(100):
        for m in range(1, 400):
            if (m - 1) % 5 == 0 or han_ii_N(n, m, 1) > 2000:
                continue
            v = han_ii_fixed(n, m, 1)
            assert v.hypothesis and v.witness == 5
            assert v.vanishes, (n, m)
            count += 1
    assert count > 300


def test_han_ii_fixed_minimal_instance():
    v = han_ii_fixed(0, 2, 1)
    assert v.N == 13 and v.a3 == 0
    assert enumerate_3cores_bruteforce(13) == set()


def test_han_ii_fixed_k6_witness_forces_zero():
    seen_fail = []
    for n in range(3):
        for m in range(1, 200):
            if (m - 11) % 35 == 0:
                continue
            v = han_ii_fixed(n, m, 6)
            assert v.hypothesis
            if v.witness is not None:
                assert v.witness == 5 and v.vanishes
            elif not v.vanishes:
                seen_fail.append(v.N)
    # the hypothesis on 6k-1 alone is not enough when 6k-1 is composite
    assert 58 in seen_fail


def test_witness_criterion_sweep():
    for k in range(1, 15):
        for n in range(3):
            for m in range(1, 120):
                if (m - (2 * k - 1)) % (6 * k - 1) == 0:
                    continue
                v = han_ii_fixed(n, m, k)
                if v.witness is not None:
                    assert v.vanishes, (n, m, k)


def test_han_iii_examples():
    assert han_iii_decompose(3) == HanWitness("i", 0, 1, p=5)
    w = han_iii_decompose(13)
    assert w.form == "ii" and w.value() == 13


def test_han_iii_rejects_nonvanishing():
    assert a3(8) == 1
    with pytest.raises(ValueError):
        han_iii_decompose(8)
    with pytest.raises(ValueError):
        han_iii_decompose(58)


def test_han_iii_sweep():
    forms = set()
    for N in range(501):
        if a3(N) != 0:
            continue
        w = han_iii_decompose(N)
        assert w.value() == N
        forms.add(w.form)
        if w.form == "i":
            assert w.m >= 1 and w.n >= 0
        else:
            assert w.n == 0 and w.m >= 1 and w.k >= 1
            assert (w.m - (2 * w.k - 1)) % w.p != 0
            assert (w.m - (2 * w.k - 1)) % (6 * w.k - 1) != 0
            assert a3(han_ii_N(0, w.m, w.k)) == 0
    assert forms == {"i", "ii"}
