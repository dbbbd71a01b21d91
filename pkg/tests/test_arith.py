import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from triangular_dtuples.arith import Factorization, as_perfect_square, factorize, is_prime, isqrt
from triangular_dtuples.errors import DomainError


def trial_division_primes(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    p = 2
    while p * p <= limit:
        if flags[p]:
            for q in range(p * p, limit + 1, p):
                flags[q] = False
        p += 1
    return flags


@pytest.mark.parametrize("v, root", [(0, 0), (1, 1), (15, 3), (16, 4), (28547649, 5343)])
def test_isqrt_examples(v, root):
    assert isqrt(v) == root


def test_isqrt_certifies_pair_root():
    assert 5343 * 5343 == 28547649 == 5050 * 5653 - 1


def test_isqrt_negative():
    with pytest.raises(DomainError):
        isqrt(-1)


@given(st.integers(min_value=0, max_value=10**40))
def test_isqrt_brackets(v):
    s = isqrt(v)
    assert s * s <= v < (s + 1) * (s + 1)


def test_isqrt_huge():
    s = 3**500 + 7
    assert isqrt(s * s) == s
    assert isqrt(s * s - 1) == s - 1


@pytest.mark.parametrize("v, root", [(324, 18), (0, 0), (1, 1), (1934, None), (-16, None), (2, None)])
def test_as_perfect_square_examples(v, root):
    assert as_perfect_square(v) == root


def test_1934_is_not_square():
    assert isqrt(1934) == 43 and 43 * 43 != 1934


@given(st.integers(min_value=0, max_value=10**20))
def test_as_perfect_square_roundtrip(s):
    assert as_perfect_square(s * s) == s
    if s:
        assert as_perfect_square(s * s + 1) is None
        assert as_perfect_square(s * s - 1) is None or s == 1


@pytest.mark.parametrize("v, expected", [(0, False), (1, False), (2, True), (173, True), (865, False), (1849, False)])
def test_is_prime_examples(v, expected):
    assert is_prime(v) is expected


def test_is_prime_agrees_with_sieve_below_million():
    flags = trial_division_primes(10**6)
    assert all(is_prime(v) == flags[v] for v in range(10**6 + 1))


@pytest.mark.parametrize(
    "v",
    [
        3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
        3825123056546413051,  # strong pseudoprime to bases up to 23
        318665857834031151167461,  # strong pseudoprime to bases up to 37
        561 * 1105,
        (2**61 - 1) * (2**89 - 1),
    ],
)
def test_is_prime_rejects_pseudoprimes(v):
    assert not is_prime(v)


@pytest.mark.parametrize("v", [2**61 - 1, 2**89 - 1, 2**107 - 1, 2**127 - 1, 10**30 + 57])
def test_is_prime_large_primes(v):
    assert is_prime(v) == sympy.isprime(v)


def test_is_prime_bpsw_range_against_sympy():
    rng = random.Random(7)
    for _ in range(300):
        v = rng.getrandbits(120) | 1
        assert is_prime(v) == sympy.isprime(v), v


@pytest.mark.parametrize(
    "v, factors",
    [(1, ()), (148, ((2, 2), (37, 1))), (866, ((2, 1), (433, 1))), (100, ((2, 2), (5, 2))), (101, ((101, 1),))],
)
def test_factorize_examples(v, factors):
    assert factorize(v).factors == factors


def test_factorize_domain():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        Factorization(0, ())


def test_factorize_recomposes_below_million():
    for v in range(1, 10**6 + 1):
        f = factorize(v)
        assert f.recompose() == v


def test_factorize_random_64bit():
    rng = random.Random(2024)
    for _ in range(1000):
        v = rng.getrandbits(64) or 1
        f = factorize(v)
        assert f.recompose() == v
        primes = [p for p, _ in f.factors]
        assert primes == sorted(set(primes))
        assert all(is_prime(p) and e >= 1 for p, e in f.factors)


def test_factorize_against_sympy():
    rng = random.Random(5)
    for _ in range(100):
        v = rng.getrandbits(64) | 1
        assert dict(factorize(v).factors) == sympy.factorint(v)


def test_factorize_beyond_trial_division():
    p, q = 1000003, 2**31 - 1
    f = factorize(p * p * q * (2**61 - 1))
    assert f.factors == ((p, 2), (q, 1), (2**61 - 1, 1))


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=2**64))
def test_factorize_property(v):
    f = factorize(v)
    assert f.recompose() == v
    assert all(is_prime(p) for p, _ in f.factors)
