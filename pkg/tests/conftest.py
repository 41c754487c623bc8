"""Shared oracles and generators for the test suite.

The oracles here deliberately avoid the library's own algebra: reachability
is graph BFS, interval counts are literal path enumeration, and matrix
inversion is Fraction Gauss-Jordan.  Closed forms are tested against these,
never against themselves.
"""

import random
from fractions import Fraction

import pytest

from cobweb import FSequence, GradedPoset, cobweb, custom, from_blocks, gauss


EX11 = custom([1, 1, 3, 3, 3, 3, 3, 3], name="ex11")
EX12 = custom([1, 3, 3, 3, 3, 3, 3, 3], name="ex12")


def preset_table():
    """The sequences the acceptance criteria quantify over."""
    from cobweb import const, fib, nat
    return {"nat": nat(), "fib": fib(), "gauss2": gauss(2),
            "const3": const(3), "ex11": EX11, "ex12": EX12}


def brute_reach(P: GradedPoset):
    """reach[x] = set of y with x <= y, by BFS over cover arcs."""
    n = P.node_count
    up = {x.global_label: [y.global_label for y in P.upper_covers(x)]
          for x in P.nodes()}
    reach = {}
    for start in range(1, n + 1):
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for g in frontier:
                for h in up[g]:
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        reach[start] = seen
    return reach


def brute_interval_count(P: GradedPoset, x, y) -> int:
    """Number of cover paths x -> y by literal recursion, no memo."""
    if x == y:
        return 1
    if y.level <= x.level:
        return 0
    return sum(brute_interval_count(P, z, y) for z in P.upper_covers(x))


def fraction_inverse(rows):
    """Gauss-Jordan inverse over Fraction; independent of the library."""
    n = len(rows)
    A = [[Fraction(v) for v in row] for row in rows]
    B = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        B[col], B[piv] = B[piv], B[col]
        inv = Fraction(1) / A[col][col]
        A[col] = [v * inv for v in A[col]]
        B[col] = [v * inv for v in B[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * c for a, c in zip(A[r], A[col])]
                B[r] = [b - f * c for b, c in zip(B[r], B[col])]
    return B


def random_no_mute_blocks(rng: random.Random, rows: int, cols: int):
    """A 0/1 matrix with no zero row and no zero column."""
    while True:
        blk = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        if all(any(r) for r in blk) and all(any(row[j] for row in blk)
                                            for j in range(cols)):
            return blk


def random_no_mute_poset(seed: int, max_levels: int = 5) -> GradedPoset:
    """A connected-by-construction graded poset with no mute nodes and at
    least one missing arc (so it is not a cobweb)."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(2, max_levels)
        sizes = [rng.randint(1, 4) for _ in range(n)]
        if not any(sizes[k] >= 2 and sizes[k + 1] >= 2 for k in range(n - 1)):
            continue
        blocks = [random_no_mute_blocks(rng, sizes[k], sizes[k + 1])
                  for k in range(n - 1)]
        P = from_blocks(sizes, blocks)
        if not P.is_cobweb:
            return P


def random_cobweb(seed: int, max_levels: int = 5) -> GradedPoset:
    rng = random.Random(seed)
    n = rng.randint(1, max_levels)
    sizes = [rng.randint(1, 4) for _ in range(n)]
    return cobweb(FSequence(sizes), n)


@pytest.fixture
def nat3():
    from cobweb import nat
    return cobweb(nat(), 3)
