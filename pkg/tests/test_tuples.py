import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triangular_dtuples.errors import ConsistencyError, DomainError, NoPairsError
from triangular_dtuples.pell import FundamentalSolution, SolutionClass, make_problem, solution_classes
from triangular_dtuples.tuples import (
    PairWitness,
    build_triples,
    check_pair_indices,
    check_pair_values,
    check_tuple,
    check_value_tuple,
    closed_form_root,
    index_sequence,
    parity_valid,
    triangular,
    triangular_classes,
)


def T(k):
    return ((2 * k + 1) ** 2 - 1) // 8


def root_or_none(v):
    if v <= 0:
        return None
    r = math.isqrt(v)
    return r if r * r == v else None


@pytest.mark.parametrize("n, t", [(1, 1), (100, 5050), (865, 374545)])
def test_triangular(n, t):
    assert triangular(n) == t == T(n) == sum(range(1, n + 1))


def test_triangular_domain():
    with pytest.raises(DomainError):
        triangular(0)


@given(st.integers(1, 10**30))
def test_eight_t_plus_one(n):
    assert 8 * triangular(n) + 1 == (2 * n + 1) ** 2


@pytest.mark.parametrize("u, v, a, r", [(5050, 5653, -1, 5343), (10, 325, -1, 57), (3, 6, -1, None), (1, 1, -1, None)])
def test_check_pair_values(u, v, a, r):
    assert check_pair_values(u, v, a) == r
    assert root_or_none(u * v + a) == r


def test_check_pair_values_domain():
    with pytest.raises(DomainError):
        check_pair_values(0, 5, -1)


@pytest.mark.parametrize("n, m, r", [(1, 4, 3), (4, 25, 57)])
def test_check_pair_indices(n, m, r):
    w = check_pair_indices(n, m, -1)
    assert w == PairWitness(n, m, -1, r)
    assert w.verify()


def test_check_pair_indices_self_pair():
    with pytest.raises(DomainError, match="not a pair"):
        check_pair_indices(7, 7, -1)


def test_t100_has_no_triangular_partner():
    assert all(check_pair_indices(100, m, -1) is None for m in range(1, 10**6 + 1) if m != 100)


def test_check_tuple_examples():
    rep = check_tuple({1, 4, 25}, -1)
    assert rep.is_valid
    assert [r for _, _, r in rep.pair_results] == [3, 18, 57]

    rep = check_tuple([1, 5, 32], 1)
    assert rep.is_valid
    assert [r for _, _, r in rep.pair_results] == [math.isqrt(T(i) * T(j) + 1) for i, j in [(1, 5), (1, 32), (5, 32)]]

    rep = check_tuple([2, 3], -1)
    assert not rep.is_valid
    assert rep.pair_results == ((2, 3, None),)


def test_check_tuple_domain():
    with pytest.raises(DomainError):
        check_tuple([3], -1)
    with pytest.raises(DomainError):
        check_tuple([3, 3, 4], -1)
    with pytest.raises(DomainError):
        check_value_tuple([5], -1)


@given(st.lists(st.integers(1, 500), min_size=2, max_size=5, unique=True), st.integers(-20, 20).filter(bool))
def test_check_tuple_covers_all_pairs(indices, a):
    rep = check_tuple(indices, a)
    k = len(indices)
    assert len(rep.pair_results) == k * (k - 1) // 2
    assert rep.is_valid == all(root_or_none(T(i) * T(j) + a) is not None for i, j, _ in rep.pair_results)


def test_check_value_tuple():
    rep = check_value_tuple([5653, 5050], -1)
    assert rep.indices == (5050, 5653) and rep.root(5050, 5653) == 5343


def test_index_sequence_n1():
    p = make_problem(1, -1)
    (c,) = triangular_classes(p)
    seq = index_sequence(p, c)
    assert seq.terms(6) == [1, 4, 25, 148, 865, 5044]
    assert 6 * 865 - 148 + 2 == 5044
    # m_0 = 1 equals n and has r = 0
    assert seq.retained(3) == [4, 25, 148]


def test_index_sequence_n4():
    p = make_problem(4, -1)
    (c,) = triangular_classes(p)
    seq = index_sequence(p, c)
    assert seq.terms(4) == [1, 25, 457, 8209]
    assert seq.retained(4) == [1, 25, 457, 8209]


@pytest.mark.parametrize("n", [1, 4, 25, 148, 457])
def test_index_recurrence(n):
    p = make_problem(n, -1)
    for c in triangular_classes(p):
        ms = index_sequence(p, c).terms(10)
        for m0, m1, m2 in zip(ms, ms[1:], ms[2:]):
            assert m2 == 2 * (2 * n + 1) * m1 - m0 + 2 * n
        assert ms == sorted(set(ms))


def test_index_sequence_rejects_bad_parity():
    p = make_problem(3, 4)
    bad = [c for c in solution_classes(p) if not parity_valid(c)]
    assert bad
    with pytest.raises(ConsistencyError):
        index_sequence(p, bad[0])
    with pytest.raises(DomainError):
        index_sequence(make_problem(1, -1), SolutionClass(p, FundamentalSolution(8, 1)))


@pytest.mark.parametrize("n, m1, m2, r", [(1, 4, 25, 57), (1, 1, 4, 3), (4, 25, 457, 5832)])
def test_closed_form_root(n, m1, m2, r):
    assert closed_form_root(n, m1, m2) == r
    assert math.isqrt(T(m1) * T(m2) - 1) == r


def test_closed_form_root_nondivisible():
    with pytest.raises(ConsistencyError):
        closed_form_root(1, 2, 4)


@pytest.mark.parametrize("n", [1, 4, 25, 148])
def test_consecutive_y_congruence(n):
    p = make_problem(n, -1)
    for c in triangular_classes(p):
        ys = [t.y for t, _ in zip(index_sequence(p, c), range(10))]
        for y0, y1 in zip(ys, ys[1:]):
            assert (y0 * y1 - (2 * n + 1)) % 8 == 0


def test_build_triples_examples():
    assert [r.indices for r in build_triples(1, -1, 2)] == [(1, 4, 25), (1, 25, 148)]
    assert [r.indices for r in build_triples(4, -1, 1)] == [(4, 25, 457)]
    assert all(r.is_valid for r in build_triples(1, -1, 5))


def test_build_triples_no_pairs():
    with pytest.raises(NoPairsError, match="n=100, a=-1"):
        build_triples(100, -1, 3)


def test_build_triples_interleaves_classes():
    triples = [r.indices for r in build_triples(25, -1, 4)]
    firsts = [min(i for i in t if i != 25) for t in triples]
    assert firsts == sorted(firsts)
    assert (25, 148, 15145) in triples and (25, 457, 46660) in triples


@pytest.mark.parametrize("n", [1, 4, 25, 148])
def test_triples_deep(n):
    for rep in build_triples(n, -1, 12):
        assert rep.is_valid
        for i, j, r in rep.pair_results:
            assert r * r == T(i) * T(j) - 1


def test_pair_agreement_with_brute_force():
    bound = 2000
    tri = [0] + [k * (k + 1) // 2 for k in range(1, bound + 1)]
    partners = {n: set() for n in range(1, bound + 1)}
    for n in range(1, bound + 1):
        for m in range(n + 1, bound + 1):
            if root_or_none(tri[n] * tri[m] - 1):
                partners[n].add(m)
                partners[m].add(n)
    for n in range(1, bound + 1):
        p = make_problem(n, -1)
        from_pell = set()
        for c in triangular_classes(p):
            from_pell.update(t.m for t in index_sequence(p, c).up_to(bound) if t.retained)
        assert from_pell == partners[n], n
