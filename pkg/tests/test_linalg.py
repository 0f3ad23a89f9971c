from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl3coh.linalg import GF, SpanBuilder, is_prime

F3 = GF(3)


def brute_nullity(m, p):
    """log_p of the number of solutions of m x = 0, by enumeration."""
    m = np.asarray(m, dtype=np.int64)
    count = sum(1 for x in product(range(p), repeat=m.shape[1]) if not np.mod(m @ np.array(x), p).any())
    k = 0
    while p**k < count:
        k += 1
    assert p**k == count
    return k


def matrices(max_rows=6, max_cols=6, p=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("p", [1, 4, 9, 17])
def test_field_rejects_bad_characteristic(p):
    with pytest.raises(ValueError):
        GF(p)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_inverse(p):
    F = GF(p)
    for a in range(1, p):
        assert a * F.inv(a) % p == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_rref_hand_example():
    # [[1,2,0],[2,1,1]] over GF(3): R2 <- R2 + R1 gives [0,0,1]
    red, piv = F3.rref_pivots([[1, 2, 0], [2, 1, 1]])
    assert piv == [0, 2]
    assert red.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_rank_and_nullspace_examples():
    m = [[1, 1, 1], [1, 2, 0], [2, 0, 1]]  # row3 = row1 + row2 mod 3
    assert F3.rank(m) == 2
    (v,) = F3.nullspace(m)
    assert not F3.matmul(m, v).any()
    assert v.tolist() == [1, 1, 1]
    assert F3.rank(np.zeros((3, 4))) == 0
    assert len(F3.nullspace(np.zeros((2, 4)))) == 4
    assert F3.rank(np.eye(5, dtype=int)) == 5


def test_reduction_mod_p_happens_first():
    assert F3.rank([[3, 6], [9, 12]]) == 0
    assert F3.rank([[4, 0], [0, -1]]) == 2


def test_in_span():
    vs = [[1, 0, 1], [0, 1, 1]]
    assert F3.in_span(vs, [1, 1, 2])
    assert not F3.in_span(vs, [0, 0, 1])
    assert F3.in_span([], [0, 0, 0])
    with pytest.raises(ValueError):
        F3.in_span(vs, [1, 1])


def test_span_builder():
    sb = SpanBuilder(F3, 3)
    assert sb.add([1, 2, 0])
    assert not sb.add([2, 1, 0])
    assert sb.add([0, 0, 1])
    assert sb.contains([1, 2, 2])
    assert not sb.contains([0, 1, 0])
    assert len(sb) == 2
    assert F3.rank(sb.basis()) == 2


@settings(max_examples=60, deadline=None)
@given(matrices(4, 5))
def test_rank_matches_enumeration(m):
    assert F3.rank(m) == len(m[0]) - brute_nullity(m, 3)


@settings(max_examples=500, deadline=None)
@given(matrices(8, 8))
def test_rank_nullity(m):
    ns = F3.nullspace(m)
    assert F3.rank(m) + len(ns) == len(m[0])
    for v in ns:
        assert not F3.matmul(m, v).any()
    if ns:
        assert F3.rank(np.vstack(ns)) == len(ns)


@settings(max_examples=200, deadline=None)
@given(matrices(7, 7))
def test_rref_idempotent_and_transpose_rank(m):
    r = F3.rref(m)
    assert np.array_equal(F3.rref(r), r)
    assert F3.rank(m) == F3.rank(np.asarray(m).T)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 5, 7, 13]), st.data())
def test_rank_nullity_other_primes(p, data):
    m = data.draw(matrices(6, 6, p))
    F = GF(p)
    assert F.rank(m) + len(F.nullspace(m)) == len(m[0])


def test_matmul_exact_for_wide_products():
    rng = np.random.default_rng(7)
    a = rng.integers(0, 13, size=(5, 4000))
    b = rng.integers(0, 13, size=(4000, 3))
    assert np.array_equal(GF(13).matmul(a, b), (a @ b) % 13)


def test_small_worked_examples():
    assert F3.rank(np.eye(3, dtype=int)) == 3
    assert F3.rank(np.zeros((4, 5), dtype=int)) == 0
    assert F3.rank([[1, 2], [2, 1]]) == 1  # det = 1 - 4 = 0 mod 3
    assert F3.nullspace_basis(np.eye(2, dtype=int)) == []
    assert [v.tolist() for v in F3.nullspace_basis(np.zeros((2, 3), dtype=int))] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert [v.tolist() for v in F3.nullspace_basis([[1, 1, 0]])] == [[2, 1, 0], [0, 0, 1]]
    assert F3.rref([[2, 0], [0, 2]]).tolist() == [[1, 0], [0, 1]]
    assert F3.rref([[1, 2], [2, 1]]).tolist() == [[1, 2], [0, 0]]
    assert F3.in_span([[1, 0], [0, 1]], [1, 1])
    assert not F3.in_span([], [1, 0])
    assert F3.in_span([[1, 2, 0]], [2, 1, 0])
