"""Exact integer primitives: square roots, square tests, primality, factoring.

Everything here works on plain Python ints of any size and never touches
floating point.
"""
from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import DomainError

__all__ = [
    "Factorization",
    "isqrt",
    "as_perfect_square",
    "is_prime",
    "factorize",
    "small_primes",
]

TRIAL_DIVISION_LIMIT = 10**6

# Deterministic for n < 3317044064679887385961981 (Sorenson & Webster 2015).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981

_SQUARES_MOD_64 = frozenset(i * i % 64 for i in range(64))
_SQUARES_MOD_63 = frozenset(i * i % 63 for i in range(63))


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``value = prod(p**e for p, e in factors)``."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise DomainError(f"factorization of {self.value} is undefined")

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def odd_primes(self) -> list[int]:
        return [p for p, _ in self.factors if p != 2]

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def isqrt(v: int) -> int:
    """Floor of the square root of a nonnegative integer.

    >>> isqrt(28547649)
    5343
    """
    if v < 0:
        raise DomainError(f"isqrt of negative value {v}")
    return math.isqrt(v)


def as_perfect_square(v: int) -> Optional[int]:
    """Return ``s`` with ``s*s == v`` if ``v`` is a perfect square, else None."""
    if v < 0:
        return None
    if (v & 63) not in _SQUARES_MOD_64 or v % 63 not in _SQUARES_MOD_63:
        return None
    s = math.isqrt(v)
    return s if s * s == v else None


@lru_cache(maxsize=None)
def small_primes(limit: int = TRIAL_DIVISION_LIMIT) -> tuple[int, ...]:
    """All primes <= limit via an Eratosthenes sieve."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and as_perfect_square(n) is not None:
            return False
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(v):
        v %= n
        return (v + n) // 2 if v & 1 else v // 2

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(v: int) -> bool:
    """Primality test: deterministic Miller-Rabin below 3.3e24, BPSW above."""
    if v < 2:
        return False
    for p in _MR_BASES:
        if v % p == 0:
            return v == p
    if v < 43 * 43:
        return True
    if v < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(v, b) for b in _MR_BASES)
    return _strong_probable_prime(v, 2) and _strong_lucas_probable_prime(v)


def _brent_rho(n: int, c: int) -> Optional[int]:
    """One run of Brent's cycle-finding rho on x -> x^2 + c mod n."""
    y, r, q, m = 2, 1, 1, 128
    g = 1
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
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


def _split_composite(n: int) -> int:
    for c in range(1, 1000):
        d = _brent_rho(n, c)
        if d is not None:
            return d
    raise RuntimeError(f"rho failed to split {n}")  # pragma: no cover


def _factor_cofactor(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = as_perfect_square(m)
        d = root if root is not None else _split_composite(m)
        stack.extend((d, m // d))


@lru_cache(maxsize=None)
def _smallest_factor_table(limit: int = TRIAL_DIVISION_LIMIT) -> array:
    spf = array("I", range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


@lru_cache(maxsize=None)
def _prime_blocks(size: int = 256) -> tuple[tuple[tuple[int, ...], int], ...]:
    primes = small_primes()
    blocks = []
    for i in range(0, len(primes), size):
        chunk = primes[i : i + size]
        blocks.append((chunk, math.prod(chunk)))
    return tuple(blocks)


def factorize(v: int) -> Factorization:
    """Complete prime factorization of ``v >= 1``.

    Trial division by primes up to 10**6, then Brent's rho on what is left.

    >>> factorize(148).factors
    ((2, 2), (37, 1))
    """
    if v < 1:
        raise DomainError(f"cannot factorize {v}")
    counts: dict[int, int] = {}
    rest = v
    if v <= TRIAL_DIVISION_LIMIT:
        spf = _smallest_factor_table()
        while rest > 1:
            p = spf[rest]
            counts[p] = counts.get(p, 0) + 1
            rest //= p
        return Factorization(v, tuple(sorted(counts.items())))

    for chunk, product in _prime_blocks():
        if chunk[0] * chunk[0] > rest:
            break
        # skip whole blocks of primes that share nothing with rest
        if math.gcd(rest, product) == 1:
            continue
        for p in chunk:
            if rest % p == 0:
                e = 0
                while rest % p == 0:
                    rest //= p
                    e += 1
                counts[p] = e
    if rest > 1:
        _factor_cofactor(rest, counts)
    return Factorization(v, tuple(sorted(counts.items())))
