"""Triangular numbers, D(a)-pair and tuple checks, and the triple construction.

A set of positive integers is a D(a)-tuple when the product of any two
distinct members plus ``a`` is a perfect square. Consecutive terms
``m_k, m_{k+1}`` of one Pell solution class for ``(n, a)`` give the triple
``{T_n, T_{m_k}, T_{m_{k+1}}}``, and the root of the new pair is available in
closed form.
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Iterable, Iterator, Optional

from .arith import as_perfect_square
from .errors import ConsistencyError, DomainError, NoPairsError
from .pell import PellProblem, SolutionClass, _positive_stream, make_problem, solution_classes

__all__ = [
    "PairWitness",
    "IndexTerm",
    "IndexSequence",
    "TupleReport",
    "triangular",
    "check_pair_values",
    "check_pair_indices",
    "check_tuple",
    "check_value_tuple",
    "parity_valid",
    "triangular_classes",
    "index_sequence",
    "closed_form_root",
    "build_triples",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairWitness:
    """``T_n * T_m + a == r**2`` with ``r >= 1``."""

    n: int
    m: int
    a: int
    r: int

    def verify(self) -> bool:
        return self.n != self.m and self.r >= 1 and triangular(self.n) * triangular(self.m) + self.a == self.r**2


@dataclass(frozen=True)
class TupleReport:
    indices: tuple[int, ...]
    a: int
    pair_results: tuple[tuple[int, int, Optional[int]], ...]

    @property
    def is_valid(self) -> bool:
        return all(r is not None for _, _, r in self.pair_results)

    def root(self, i: int, j: int) -> Optional[int]:
        i, j = min(i, j), max(i, j)
        for u, v, r in self.pair_results:
            if (u, v) == (i, j):
                return r
        raise KeyError((i, j))


@dataclass(frozen=True)
class IndexTerm:
    """One positive solution ``(x, y)`` of a class with its index ``m = (y-1)/2``."""

    k: int
    x: int
    y: int
    m: int
    retained: bool


@dataclass(frozen=True)
class IndexSequence:
    """The index stream ``m_k = (y_k - 1)/2`` of one solution class.

    ``k`` counts positive solutions (x >= 0, y > 0) of the class from 0.
    Every term is produced; ``retained`` marks those that actually pair
    with ``n``: ``m >= 1``, ``m != n`` and ``x > 0`` (so that ``r >= 1``).
    """

    problem: PellProblem
    solution_class: SolutionClass

    @property
    def n(self) -> int:
        return self.problem.n

    @property
    def a(self) -> int:
        return self.problem.a

    @property
    def class_origin(self):
        return self.solution_class.fundamental

    def __iter__(self) -> Iterator[IndexTerm]:
        n = self.problem.n
        for k, (x, y) in enumerate(_positive_stream(self.solution_class)):
            if y % 2 == 0 or x % 4:
                raise ConsistencyError(
                    f"class {self.class_origin} of (n={n}, a={self.a}) produced (x, y) = ({x}, {y}), "
                    "outside x = 4r, y = 2m + 1"
                )
            m = (y - 1) // 2
            retained = m >= 1 and m != n and x > 0
            if m == n:
                log.info("dropping self-pair term m=%d for n=%d", m, n)
            yield IndexTerm(k, x, y, m, retained)

    def terms(self, count: int) -> list[int]:
        """First ``count`` indices of the stream, retained or not."""
        return [t.m for t in islice(self, count)]

    def retained(self, count: int) -> list[int]:
        return [t.m for t in islice((t for t in self if t.retained), count)]

    def up_to(self, bound: int) -> list[IndexTerm]:
        """All terms with ``m <= bound``."""
        out = []
        for t in self:
            if t.m > bound:
                break
            out.append(t)
        return out


def triangular(n: int) -> int:
    if n < 1:
        raise DomainError(f"triangular index must be positive, got {n}")
    return n * (n + 1) // 2


def check_pair_values(u: int, v: int, a: int) -> Optional[int]:
    """Root ``r >= 1`` with ``u*v + a == r**2``, or None.

    >>> check_pair_values(5050, 5653, -1)
    5343
    """
    if u < 1 or v < 1:
        raise DomainError(f"pair members must be positive, got {u}, {v}")
    r = as_perfect_square(u * v + a)
    return r if r else None


def check_pair_indices(n: int, m: int, a: int = -1) -> Optional[PairWitness]:
    if n == m:
        raise DomainError(f"not a pair: indices must be distinct, got n = m = {n}")
    r = check_pair_values(triangular(n), triangular(m), a)
    return None if r is None else PairWitness(n, m, a, r)


def check_value_tuple(values: Iterable[int], a: int = -1) -> TupleReport:
    """Pairwise D(a) report for arbitrary positive integers."""
    vals = list(values)
    if len(vals) < 2:
        raise DomainError(f"a tuple needs at least 2 elements, got {len(vals)}")
    if len(set(vals)) != len(vals):
        raise DomainError(f"tuple elements must be distinct, got {vals}")
    vals.sort()
    pairs = tuple((u, v, check_pair_values(u, v, a)) for u, v in combinations(vals, 2))
    return TupleReport(tuple(vals), a, pairs)


def check_tuple(indices: Iterable[int], a: int = -1) -> TupleReport:
    """Pairwise D(a) report for the triangular numbers ``T_i``, ``i`` in indices.

    ``pair_results`` are keyed by index, not by value.
    """
    idx = list(indices)
    if len(idx) < 2:
        raise DomainError(f"a tuple needs at least 2 elements, got {len(idx)}")
    if len(set(idx)) != len(idx):
        raise DomainError(f"tuple elements must be distinct, got {idx}")
    idx.sort()
    pairs = tuple(
        (i, j, check_pair_values(triangular(i), triangular(j), a)) for i, j in combinations(idx, 2)
    )
    return TupleReport(tuple(idx), a, pairs)


def parity_valid(c: SolutionClass) -> bool:
    """Whether the class consists of solutions with x = 4r and y = 2m + 1.

    Both congruences are preserved by the unit (2n+1, 2), so the head of
    the positive stream decides for the whole class.
    """
    x, y = next(_positive_stream(c))
    return y % 2 == 1 and x % 4 == 0


def triangular_classes(p: PellProblem) -> list[SolutionClass]:
    """Solution classes whose members encode triangular indices."""
    return [c for c in solution_classes(p) if parity_valid(c)]


def index_sequence(p: PellProblem, c: SolutionClass) -> IndexSequence:
    if c.problem != p:
        raise DomainError("solution class belongs to a different problem")
    if not parity_valid(c):
        raise ConsistencyError(f"class {c.fundamental} of (n={p.n}, a={p.a}) has even y or x not divisible by 4")
    return IndexSequence(p, c)


def closed_form_root(n: int, m1: int, m2: int) -> int:
    """``(2 m1 m2 + m1 + m2 - n) / 4``, the root of ``T_m1 T_m2 + a``."""
    num = 2 * m1 * m2 + m1 + m2 - n
    if num % 4:
        raise ConsistencyError(f"2*{m1}*{m2} + {m1} + {m2} - {n} = {num} is not divisible by 4")
    return num // 4


def _class_triples(seq: IndexSequence) -> Iterator[tuple[int, int]]:
    prev = None
    for t in seq:
        if prev is not None and prev.k >= 1 and prev.retained and t.retained:
            yield prev.m, t.m
        prev = t


def build_triples(n: int, a: int = -1, count: int = 3) -> list[TupleReport]:
    """The first ``count`` triples ``{n, m_k, m_{k+1}}`` (k >= 1) over all classes.

    Triples from different classes are interleaved by ``(m_k, m_{k+1})``.
    Each one is checked pairwise and its new root is compared against the
    closed form.
    """
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    p = make_problem(n, a)
    classes = triangular_classes(p)
    if not classes:
        raise NoPairsError(n, a)

    merged = heapq.merge(*(_class_triples(index_sequence(p, c)) for c in classes))
    out: list[TupleReport] = []
    last = None
    for m1, m2 in merged:
        if (m1, m2) == last:
            continue
        last = (m1, m2)
        report = check_tuple((n, m1, m2), a)
        expected = closed_form_root(n, m1, m2)
        if not report.is_valid or report.root(m1, m2) != expected:
            raise ConsistencyError(f"triple {{{n}, {m1}, {m2}}} failed verification for a={a}: {report}")
        out.append(report)
        if len(out) == count:
            break
    return out
