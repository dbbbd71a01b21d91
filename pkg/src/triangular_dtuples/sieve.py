"""Which T_n belong to a D(-1)-pair of triangular numbers.

Three independent tools:

* :func:`admissible` -- a factorization test that every such n passes
  (necessary, not sufficient: n = 100 passes but has no partner).
* :func:`enumerate_pairs` -- a worklist search seeded at n = 1. Every index
  m > 1 in a pair has a strictly smaller partner, so walking the Pell
  solutions of each discovered index upward reaches all of them.
* :func:`brute_force_pairs` -- the pairwise scan used as an oracle.

Everything here is for a = -1; the descent argument behind the worklist
search is not available for other a.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Optional

from .arith import Factorization, factorize
from .errors import ConsistencyError, DomainError
from .pell import make_problem, positive_solutions
from .tuples import PairWitness, check_pair_indices, triangular_classes

__all__ = [
    "AdmissibilityResult",
    "EnumerationStep",
    "EnumerationReport",
    "admissible",
    "solutions_below",
    "enumerate_pairs",
    "brute_force_pairs",
]


@dataclass(frozen=True)
class AdmissibilityResult:
    n: int
    n_factors: Factorization
    n1_factors: Factorization
    violations: tuple[str, ...] = ()

    @property
    def admissible(self) -> bool:
        return not self.violations

    @property
    def violation(self) -> Optional[str]:
        return "; ".join(self.violations) or None

    def __bool__(self):
        return self.admissible


def _violations(f: Factorization, label: str, allowed_twos: tuple[int, ...]) -> list[str]:
    out = [f"{label} = {f.value} has prime factor {p} = 3 (mod 4)" for p in f.odd_primes() if p % 4 == 3]
    e = f.exponent(2)
    if e not in allowed_twos:
        allowed = " or ".join(map(str, allowed_twos))
        out.append(f"{label} = {f.value} has 2-adic exponent {e}, must be {allowed}")
    return out


def admissible(n: int) -> AdmissibilityResult:
    """Check that n = 2^a * prod p_i^l_i and n+1 = 2^b * prod q_j^e_j with
    every odd prime = 1 (mod 4), a in {0, 2} and b in {0, 1}.
    """
    if n < 1:
        raise DomainError(f"index must be positive, got {n}")
    fn, fn1 = factorize(n), factorize(n + 1)
    violations = _violations(fn, "n", (0, 2)) + _violations(fn1, "n+1", (0, 1))
    return AdmissibilityResult(n, fn, fn1, tuple(violations))


def _witnessed_solutions(n: int, bound: int) -> list[PairWitness]:
    p = make_problem(n, -1)
    ms = set()
    for c in triangular_classes(p):
        for x, y in positive_solutions(c, 2 * bound + 1):
            m = (y - 1) // 2
            if n < m <= bound:
                ms.add(m)
    out = []
    for m in sorted(ms):
        w = check_pair_indices(n, m, -1)
        if w is None:
            raise ConsistencyError(f"Pell solution m={m} for n={n} does not certify a D(-1)-pair")
        out.append(w)
    return out


def solutions_below(n: int, bound: int) -> list[int]:
    """All m in (n, bound] with {T_n, T_m} a D(-1)-pair.

    >>> solutions_below(1, 1000)
    [4, 25, 148, 865]
    """
    if bound < 1:
        raise DomainError(f"bound must be positive, got {bound}")
    return [w.m for w in _witnessed_solutions(n, bound)]


@dataclass(frozen=True)
class EnumerationStep:
    seed: int
    witnesses: tuple[PairWitness, ...]

    @property
    def discovered(self) -> tuple[int, ...]:
        return tuple(w.m for w in self.witnesses)


@dataclass(frozen=True)
class EnumerationReport:
    bound: int
    steps: tuple[EnumerationStep, ...]
    result: tuple[int, ...]

    def step_for(self, seed: int) -> EnumerationStep:
        for s in self.steps:
            if s.seed == seed:
                return s
        raise KeyError(seed)


def enumerate_pairs(bound: int) -> EnumerationReport:
    """Worklist search for every n <= bound with T_n in a D(-1)-pair
    whose partner index is also <= bound.

    Seeds are processed in increasing order. A step lists every partner in
    (seed, bound], including partners already known from earlier seeds.
    The base seed 1 is reported only if it found a partner.
    """
    if bound < 1:
        raise DomainError(f"bound must be positive, got {bound}")
    heap = [1]
    queued = {1}
    found: set[int] = set()
    steps = []
    while heap:
        seed = heapq.heappop(heap)
        witnesses = tuple(_witnessed_solutions(seed, bound))
        steps.append(EnumerationStep(seed, witnesses))
        if witnesses:
            found.add(seed)
        for w in witnesses:
            found.add(w.m)
            if w.m not in queued:
                queued.add(w.m)
                heapq.heappush(heap, w.m)
    return EnumerationReport(bound, tuple(steps), tuple(sorted(found)))


def brute_force_pairs(bound: int) -> list[int]:
    """Every n <= bound with a partner m <= bound, m != n, by direct scan.

    Tests ``T_n T_m - 1`` for all unordered pairs in [1, bound] using
    ``math.isqrt`` and nothing else from this package.
    """
    if bound < 1:
        raise DomainError(f"bound must be positive, got {bound}")
    isqrt = math.isqrt
    tri = [0] + [k * (k + 1) // 2 for k in range(1, bound + 1)]
    hit = [False] * (bound + 1)
    for n in range(1, bound + 1):
        tn = tri[n]
        for m in range(n + 1, bound + 1):
            v = tn * tri[m] - 1
            r = isqrt(v)
            if r * r == v and r:
                hit[n] = hit[m] = True
    return [n for n in range(1, bound + 1) if hit[n]]
