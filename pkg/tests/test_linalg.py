from fractions import Fraction
from itertools import permutations

import numpy as np
from hypothesis import given, settings, strategies as st

from maxgenus.fields import GF, QQ
from maxgenus.linalg import bareiss_rank_det, matrix_rank, rank_det_mod_p


def leibniz_det(A):
    n = len(A)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= A[i][j]
        total += term
    return total


def fraction_rank(A):
    M = [[Fraction(v) for v in row] for row in A]
    rank, cols = 0, len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c] / M[rank][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                       min_size=n, max_size=n))
rect = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
    lambda s: st.lists(st.lists(st.integers(-3, 3), min_size=s[1], max_size=s[1]),
                       min_size=s[0], max_size=s[0]))


@given(square, st.sampled_from([2, 5, 7, 32003]))
def test_det_mod_p_matches_leibniz(A, p):
    rank, det = rank_det_mod_p(A, p)
    assert det == leibniz_det(A) % p
    assert (det != 0) == (rank == len(A))


@given(square)
def test_bareiss_det_matches_leibniz(A):
    rank, det = bareiss_rank_det(A)
    assert det == leibniz_det(A)
    assert rank == fraction_rank(A)


@settings(max_examples=200)
@given(rect)
def test_ranks_agree_with_fraction_elimination(A):
    r = fraction_rank(A)
    assert bareiss_rank_det(A)[0] == r
    assert matrix_rank(A, QQ) == r
    # a large prime sees the same rank for small entries
    assert rank_det_mod_p(A, 1_000_003)[0] == r


def test_rational_entries():
    A = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
    assert bareiss_rank_det(A) == (2, Fraction(1, 10) - Fraction(1, 12))


def test_big_prime_uses_object_arithmetic():
    p = 2**61 - 1
    A = [[p - 1, 2], [3, p - 5]]
    assert rank_det_mod_p(A, p)[1] == ((p - 1) * (p - 5) - 6) % p


def test_empty_and_degenerate_shapes():
    assert rank_det_mod_p([], 5) == (0, 1)
    assert rank_det_mod_p(np.zeros((3, 3), dtype=np.int64), 5) == (0, 0)
    assert matrix_rank([[0, 0], [0, 0]], GF(7)) == 0
    assert matrix_rank([[1, 2], [2, 4]], GF(7)) == 1
