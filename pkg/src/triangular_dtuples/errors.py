"""Exception hierarchy shared by every module of the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class DegeneratePropertyError(DomainError):
    """The property ``a`` makes the Pell right-hand side vanish (16a = n(n+1))."""

    def __init__(self, n, a):
        super().__init__(
            f"degenerate property: n={n}, a={a} gives 16a = n(n+1), "
            "so x^2 - n(n+1)y^2 = 0 is not a generalized Pell equation"
        )
        self.n = n
        self.a = a


class NoPairsError(LookupError):
    """No D(a)-pair of triangular numbers contains T_n."""

    def __init__(self, n, a):
        super().__init__(f"no pairs exist for n={n}, a={a}: the fundamental-solution sweep is empty")
        self.n = n
        self.a = a


class ConsistencyError(ArithmeticError):
    """An internal invariant failed; this signals a bug or a broken precondition."""
