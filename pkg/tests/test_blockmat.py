"""Ring-generic block matrices: products, closure, unitriangular inverse."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cobweb import BOOL, INT, BlockMatrix, MatrixError, RingError, add, mul, \
    nilpotent_closure, unitriangular_inverse
from cobweb.blockmat import natural_join as mat_join

from conftest import fraction_inverse


def rand_matrix(rng, sizes, ring, lo=-3, hi=3):
    n = sum(sizes)
    if ring is BOOL:
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
    else:
        rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
    return BlockMatrix(sizes, rows, ring)


def rand_strictly_upper(rng, sizes, ring):
    M = rand_matrix(rng, sizes, ring)
    off = [0]
    for s in sizes:
        off.append(off[-1] + s)
    lvl = []
    for k, s in enumerate(sizes, start=1):
        lvl += [k] * s
    rows = [[v if lvl[i] < lvl[j] else 0 for j, v in enumerate(row)]
            for i, row in enumerate(M.rows)]
    return BlockMatrix(sizes, rows, ring)


def test_identity_is_neutral():
    rng = random.Random(1)
    A = rand_matrix(rng, [1, 2, 3], INT)
    I = BlockMatrix.identity([1, 2, 3], INT)
    assert mul(A, I) == A
    assert mul(I, A) == A


def test_shape_and_ring_mismatch():
    A = BlockMatrix.identity([1, 2], INT)
    B = BlockMatrix.identity([3], INT)
    with pytest.raises(MatrixError):
        mul(A, B)
    with pytest.raises(MatrixError):
        mul(A, A.with_ring(BOOL))


def test_strictly_upper_product_shifts_band():
    rng = random.Random(7)
    sizes = [2, 2, 2, 2]
    A = rand_strictly_upper(rng, sizes, INT)
    P = mul(A, A)
    # support of the square starts two block bands above the diagonal
    for r in range(1, 5):
        for s in range(1, min(r + 2, 5)):
            assert all(v == 0 for row in P.block(r, s) for v in row)


def test_boolean_square_counts_two_step_paths():
    # arcs 1->2, 2->3 over levels of size 1: the square sees exactly 1->3
    K = BlockMatrix.from_band_blocks([1, 1, 1], [[[1]], [[1]]], BOOL)
    K2 = mul(K, K)
    assert K2.rows[0][2] == 1
    assert sum(v for row in K2.rows for v in row) == 1


def test_closure_of_zero_is_identity():
    Z = BlockMatrix.zeros([2, 3], INT)
    assert nilpotent_closure(Z) == BlockMatrix.identity([2, 3], INT)


def test_closure_requires_strictly_upper():
    with pytest.raises(MatrixError):
        nilpotent_closure(BlockMatrix.identity([2, 2], INT))


def test_integer_closure_counts_paths():
    # cobweb over sizes <1,2,3>: 2 paths from the bottom to each top node
    blocks = [[[1, 1]], [[1, 1, 1], [1, 1, 1]]]
    K = BlockMatrix.from_band_blocks([1, 2, 3], blocks, INT)
    C = nilpotent_closure(K)
    for j in range(3, 6):
        assert C.rows[0][j] == 2  # brute force: 1->2->target and 1->3->target


def test_banded_closure_equals_generic_series():
    # a two-band matrix takes the generic path; band-1 takes the fast path;
    # both must equal the literal series sum
    rng = random.Random(42)
    for sizes in ([1, 2, 3], [2, 2, 2, 2], [3, 1, 2]):
        for ring in (INT, BOOL):
            K = rand_strictly_upper(rng, sizes, ring)
            expect = BlockMatrix.identity(sizes, ring)
            P = K
            for _ in range(len(sizes)):
                expect = add(expect, P)
                P = mul(P, K)
            assert nilpotent_closure(K) == expect


def test_band1_closure_matches_generic_path():
    rng = random.Random(3)
    sizes = [1, 3, 2, 4]
    blocks = [[[rng.randint(0, 2) for _ in range(sizes[k + 1])]
               for _ in range(sizes[k])] for k in range(3)]
    K = BlockMatrix.from_band_blocks(sizes, blocks, INT)
    assert K.is_one_band()
    expect = BlockMatrix.identity(sizes, INT)
    P = K
    for _ in range(len(sizes)):
        expect = add(expect, P)
        P = mul(P, K)
    assert nilpotent_closure(K) == expect


@pytest.mark.parametrize("n", range(1, 8))
def test_nilpotency_index(n):
    rng = random.Random(n)
    sizes = [rng.randint(1, 3) for _ in range(n)]
    K = rand_strictly_upper(rng, sizes, INT)
    P = BlockMatrix.identity(sizes, INT)
    for _ in range(n):
        P = mul(P, K)
    assert P.is_zero()


def test_integer_closure_collapses_to_boolean():
    rng = random.Random(9)
    sizes = [2, 3, 2]
    blocks = [[[rng.randint(0, 1) for _ in range(sizes[k + 1])]
               for _ in range(sizes[k])] for k in range(2)]
    Ki = BlockMatrix.from_band_blocks(sizes, blocks, INT)
    Kb = BlockMatrix.from_band_blocks(sizes, blocks, BOOL)
    Ci = nilpotent_closure(Ki)
    Cb = nilpotent_closure(Kb)
    assert [[1 if v > 0 else 0 for v in row] for row in Ci.rows] == \
        [list(row) for row in Cb.rows]


def test_unitriangular_inverse_identity():
    I = BlockMatrix.identity([2, 2], INT)
    assert unitriangular_inverse(I) == I


def test_unitriangular_inverse_pinned_3x3():
    M = BlockMatrix([1, 2], [[1, 1, 1], [0, 1, 0], [0, 0, 1]], INT)
    inv = unitriangular_inverse(M)
    assert [list(r) for r in inv.rows] == [[1, -1, -1], [0, 1, 0], [0, 0, 1]]


def test_unitriangular_inverse_refuses_boolean():
    I = BlockMatrix.identity([2], BOOL)
    with pytest.raises(RingError):
        unitriangular_inverse(I)


def test_unitriangular_inverse_refuses_non_unitriangular():
    M = BlockMatrix([2], [[1, 0], [1, 1]], INT)
    with pytest.raises(MatrixError):
        unitriangular_inverse(M)


@pytest.mark.parametrize("seed", range(6))
def test_unitriangular_inverse_against_gauss_jordan(seed):
    rng = random.Random(seed)
    sizes = [rng.randint(1, 3) for _ in range(rng.randint(1, 4))]
    N = rand_strictly_upper(rng, sizes, INT)
    M = add(BlockMatrix.identity(sizes, INT), N)
    inv = unitriangular_inverse(M)
    oracle = fraction_inverse(M.rows)
    assert [[Fraction(v) for v in row] for row in inv.rows] == oracle
    assert mul(M, inv) == BlockMatrix.identity(sizes, INT)
    assert mul(inv, M) == BlockMatrix.identity(sizes, INT)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9), st.booleans())
def test_mul_associates_and_distributes(seed, boolean):
    rng = random.Random(seed)
    sizes = [rng.randint(1, 3) for _ in range(rng.randint(1, 3))]
    ring = BOOL if boolean else INT
    A = rand_matrix(rng, sizes, ring)
    B = rand_matrix(rng, sizes, ring)
    C = rand_matrix(rng, sizes, ring)
    assert mul(mul(A, B), C) == mul(A, mul(B, C))
    assert mul(A, add(B, C)) == add(mul(A, B), mul(A, C))


def test_matrix_natural_join():
    A = BlockMatrix([1, 2], [[1, 1, 1], [0, 1, 0], [0, 0, 1]], INT)
    B = BlockMatrix([2, 1], [[1, 0, 1], [0, 1, 1], [0, 0, 1]], INT)
    J = mat_join(A, B)
    assert J.level_sizes == (1, 2, 1)
    assert J.rows[0][:3] == (1, 1, 1)
    assert J.rows[0][3] == 0  # outside both spans
    assert J.rows[1][3] == 1
    with pytest.raises(MatrixError):
        mat_join(A, BlockMatrix.identity([3, 1], INT))
