"""Generalized Pell equations attached to D(a)-pairs of triangular numbers.

The condition ``T_n * T_m + a = r**2`` becomes, with ``x = 4r`` and
``y = 2m + 1``,

    x**2 - n(n+1) * y**2 = 16a - n(n+1).

The Pell unit for ``D = n(n+1)`` is always ``(2n+1, 2)``, so no continued
fractions are needed. Solutions fall into finitely many classes, each the
orbit of a fundamental solution under multiplication by the unit; the
fundamental solutions live in a box whose size is computed here with exact
integer comparisons.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .arith import as_perfect_square, isqrt
from .errors import ConsistencyError, DegeneratePropertyError, DomainError

__all__ = [
    "PellProblem",
    "FundamentalSolution",
    "SolutionClass",
    "make_problem",
    "fundamental_bounds",
    "fundamental_solutions",
    "solution_classes",
    "iter_class",
    "positive_solutions",
    "merged_y_values",
]


@dataclass(frozen=True)
class PellProblem:
    """``x^2 - D y^2 = N`` with ``D = n(n+1)`` and ``N = 16a - D``."""

    n: int
    a: int

    @cached_property
    def D(self) -> int:
        return self.n * (self.n + 1)

    @cached_property
    def N(self) -> int:
        return 16 * self.a - self.D

    @property
    def unit(self) -> tuple[int, int]:
        return 2 * self.n + 1, 2

    @property
    def experimental(self) -> bool:
        """True when N > 0, where the bounds come from the positive-N branch."""
        return self.N > 0

    def residual(self, x: int, y: int) -> int:
        """``x^2 - D y^2 - N``; zero exactly on solutions."""
        return x * x - self.D * y * y - self.N


@dataclass(frozen=True)
class FundamentalSolution:
    x_star: int
    y_star: int

    def __iter__(self):
        return iter((self.x_star, self.y_star))


@dataclass(frozen=True)
class SolutionClass:
    problem: PellProblem
    fundamental: FundamentalSolution

    @property
    def start_index(self) -> int:
        return 0 if self.fundamental.x_star > 0 else 1


def make_problem(n: int, a: int = -1) -> PellProblem:
    if n < 1:
        raise DomainError(f"triangular index must be positive, got n={n}")
    if a == 0:
        raise DomainError("property a must be nonzero")
    if 16 * a == n * (n + 1):
        raise DegeneratePropertyError(n, a)
    return PellProblem(n, a)


def fundamental_bounds(p: PellProblem) -> tuple[int, int]:
    """Largest ``(y*, |x*|)`` allowed for a fundamental solution.

    For ``N < 0``:  ``2(X1-1) y^2 <= Y1^2 |N|`` and ``2 x^2 <= (X1-1) |N|``.
    For ``N > 0``:  ``2(X1+1) y^2 <= Y1^2 N``   and ``2 x^2 <= (X1+1) N``.

    >>> fundamental_bounds(make_problem(100, -1))
    (10, 1005)
    """
    X1, Y1 = p.unit
    N = p.N
    if N == 0:
        raise DegeneratePropertyError(p.n, p.a)
    shift = -1 if N < 0 else 1
    absN = abs(N)
    y_bound = isqrt(Y1 * Y1 * absN // (2 * (X1 + shift)))
    x_bound = isqrt((X1 + shift) * absN // 2)
    return y_bound, x_bound


def fundamental_solutions(p: PellProblem) -> list[FundamentalSolution]:
    """Every candidate fundamental solution inside the bounds, sorted by (y*, x*).

    For ``N < 0`` these are ``(+-x*, y*)`` with ``y* > 0``. For ``N > 0`` the
    sign ambiguity sits on ``y``: candidates are ``(x*, +-y*)`` with
    ``x* > 0`` and ``y* >= 0``. An empty list proves the equation has no
    solutions at all.
    """
    y_bound, x_bound = fundamental_bounds(p)
    out = []
    if p.N < 0:
        for y in range(1, y_bound + 1):
            x = as_perfect_square(p.D * y * y + p.N)
            if x is None or x > x_bound:
                continue
            out.append(FundamentalSolution(x, y))
            if x:
                out.append(FundamentalSolution(-x, y))
    else:
        for y in range(0, y_bound + 1):
            x = as_perfect_square(p.D * y * y + p.N)
            if x is None or x > x_bound:
                continue
            out.append(FundamentalSolution(x, y))
            if y:
                out.append(FundamentalSolution(x, -y))
    return sorted(out, key=lambda f: (f.y_star, f.x_star))


def iter_class(c: SolutionClass) -> Iterator[tuple[int, int]]:
    """Yield ``(x*, y*) * (X1 + Y1 sqrt D)^k`` for k = 0, 1, 2, ... forever."""
    p = c.problem
    X1, Y1 = p.unit
    D = p.D
    x, y = c.fundamental
    while True:
        yield x, y
        x, y = X1 * x + D * Y1 * y, X1 * y + Y1 * x


def _positive_stream(c: SolutionClass) -> Iterator[tuple[int, int]]:
    # Once x >= 0 and y > 0 the unit only makes both coordinates grow.
    entered = False
    for k, (x, y) in enumerate(iter_class(c)):
        if x >= 0 and y > 0:
            entered = True
            yield x, y
        elif entered:
            raise ConsistencyError(f"class {c.fundamental} left the positive quadrant at k={k}")
        elif k > 64:
            raise ConsistencyError(f"class {c.fundamental} never reached positive solutions")


def positive_solutions(c: SolutionClass, limit: int) -> list[tuple[int, int]]:
    """Class members with ``x >= 0``, ``0 < y <= limit``, in increasing y."""
    if limit < 1:
        raise DomainError(f"y limit must be positive, got {limit}")
    out = []
    for x, y in _positive_stream(c):
        if y > limit:
            break
        out.append((x, y))
    return out


def solution_classes(p: PellProblem) -> list[SolutionClass]:
    """One class per distinct positive stream.

    Conjugate candidates such as ``(-12, 3)`` and ``(12, 3)`` for n = 4
    generate the same positive solutions. Candidates are merged whenever
    the head of one stream occurs in another; the representative is the
    candidate that is itself the earliest positive solution when there is one.
    """
    heads = []
    for f in fundamental_solutions(p):
        c = SolutionClass(p, f)
        heads.append((next(_positive_stream(c)), c))
    heads.sort(key=lambda hc: (hc[0][1], hc[0][0], tuple(hc[1].fundamental) != hc[0]))

    kept: list[tuple[tuple[int, int], SolutionClass]] = []
    for head, c in heads:
        if any(head in positive_solutions(other, head[1]) for _, other in kept):
            continue
        kept.append((head, c))
    return [c for _, c in kept]


def merged_y_values(p: PellProblem, limit: int) -> list[int]:
    """Sorted union of positive-solution y values over every class."""
    ys = set()
    for f in fundamental_solutions(p):
        ys.update(y for _, y in positive_solutions(SolutionClass(p, f), limit))
    return sorted(ys)
