"""Incidence algebra elements of a graded poset.

The same objects are built along independent routes on purpose: the zeta
matrix has a closure construction that works for every graded poset plus
three label-formula constructions for cobwebs, and the Moebius matrix has a
closed form (cobwebs), a series inversion, and the textbook recurrence.
Tests and the check suites hold all routes to exact agreement.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import List, Set, Tuple

from .blockmat import BOOL, INT, BlockMatrix, MatrixError, add, \
    nilpotent_closure, unitriangular_inverse
from .fsequence import FSequence
from .poset import GradedPoset, PosetError


# -- cover and reflexive cover -------------------------------------------

def kappa(P: GradedPoset, ring=INT) -> BlockMatrix:
    """Cover relation matrix: block (k, k+1) is the k-th biadjacency block."""
    return BlockMatrix.from_band_blocks(P.level_sizes, P.blocks, ring)


def eta(P: GradedPoset) -> BlockMatrix:
    """Reflexive cover: identity plus the cover matrix, over the integers."""
    return add(BlockMatrix.identity(P.level_sizes, INT), kappa(P, INT))


def eta_inverse(P: GradedPoset) -> BlockMatrix:
    """Exact inverse of eta; block (r, s) carries (-1)^(s-r) B_r ... B_(s-1)."""
    return unitriangular_inverse(eta(P))


# -- zeta: four constructions ---------------------------------------------

ZETA_METHODS = ("closure", "label_delta", "label_knuth", "label_S")


def zeta(P: GradedPoset, method: str = "closure") -> BlockMatrix:
    """Characteristic matrix of the partial order, over the Boolean semiring.

    `closure` works for any graded poset.  The three label methods evaluate
    closed formulas in the natural labeling and are stated for cobwebs only;
    they are refused otherwise.
    """
    if method == "closure":
        return nilpotent_closure(kappa(P, BOOL))
    if method not in ZETA_METHODS:
        raise ValueError(f"unknown zeta method {method!r}")
    if not P.is_cobweb:
        raise PosetError(f"zeta method {method!r} is defined for cobwebs only")
    builder = {"label_delta": _zeta_entry_delta,
               "label_knuth": _zeta_entry_knuth,
               "label_S": _zeta_entry_S}[method]
    N = P.node_count
    S = [P.S(m) for m in range(P.n_levels + 1)]
    sizes = P.level_sizes
    rows = [[builder(x, y, S, sizes, N) for y in range(1, N + 1)]
            for x in range(1, N + 1)]
    return BlockMatrix(P.level_sizes, rows, BOOL)


def _zeta_entry_delta(x, y, S, sizes, N):
    # zeta_1 floods the upper triangle with ones; zeta_0 carves out the
    # same-level staircase.  All three sums are literal Kronecker deltas.
    zeta1 = 0
    for k in range(0, N):
        if x + k == y:
            zeta1 = 1
            break
    zeta0 = 0
    for s in range(1, len(sizes) + 1):
        for k in range(1, sizes[s - 1] + 1):
            if x != S[s - 1] + k:
                continue
            for r in range(1, sizes[s - 1] - k + 1):
                if x + r == y:
                    zeta0 += 1
    return zeta1 - zeta0


def _zeta_entry_knuth(x, y, S, sizes, N):
    # Bracket form: the level window of x is (S(s-1), S(s-1) + s_F].
    zeta1 = 1 if x <= y else 0
    zeta0 = 0
    if x < y:
        for s in range(1, len(sizes) + 1):
            if x > S[s - 1] and y <= S[s - 1] + sizes[s - 1]:
                zeta0 += 1
    return zeta1 - zeta0


def _zeta_entry_S(x, y, S, sizes, N):
    # Prefix-sum form: scan windows (S(m), S(m+1)] from the bottom.
    zeta1 = 1 if x <= y else 0
    zeta0 = 0
    if x < y:
        for m in range(0, len(sizes)):
            if x > S[m] and y <= S[m + 1]:
                zeta0 += 1
    return zeta1 - zeta0


# -- Kroton functions and the coding matrix --------------------------------

def kroton(F: FSequence, r: int, s: int) -> int:
    """Magnitude of the cobweb coding entry between levels r and s.

    Zero for s <= r, one for s = r + 1, otherwise the product of
    (i_F - 1) for i strictly between r and s.  The empty product at
    s = r + 1 pins the value 1; the growth law
    kroton(F, r, s + 1) = kroton(F, r, s) * (s_F - 1) holds for s > r.
    """
    if r < 0 or s < 0:
        raise ValueError(f"level labels must be >= 0, got r={r} s={s}")
    if s <= r:
        return 0
    out = 1
    for i in range(r + 1, s):
        out *= F.value(i) - 1
    return out


@dataclass(frozen=True)
class CodingMatrix:
    """Level-indexed integer matrix c_(r,s) compressing the cobweb Moebius
    matrix: block (r, s) of mu equals c_(r,s) times the all-ones block."""
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for r in range(n):
            if any(len(row) != n for row in self.entries):
                raise ValueError("coding matrix must be square")
            if self.entries[r][r] != 1:
                raise ValueError("coding matrix diagonal must be 1")
            if r + 1 < n and self.entries[r][r + 1] != -1:
                raise ValueError("coding matrix superdiagonal must be -1")
            for s in range(r):
                if self.entries[r][s] != 0:
                    raise ValueError("coding matrix must vanish below the diagonal")
            for s in range(r + 1, n):
                v = self.entries[r][s]
                if v != 0 and (v > 0) != ((s - r) % 2 == 0):
                    raise ValueError(f"sign violation at ({r + 1},{s + 1})")

    @property
    def n(self) -> int:
        return len(self.entries)

    def c(self, r: int, s: int) -> int:
        """Entry for 1-based level pair (r, s)."""
        return self.entries[r - 1][s - 1]


def coding_matrix(F: FSequence, n: int) -> CodingMatrix:
    """Closed form: c_(r,s) = (-1)^(s-r) * kroton(F, r, s), diagonal 1."""
    if n < 1:
        raise ValueError(f"coding matrix needs n >= 1, got {n}")
    ent = []
    for r in range(1, n + 1):
        row = []
        for s in range(1, n + 1):
            if s < r:
                row.append(0)
            elif s == r:
                row.append(1)
            else:
                row.append((-1) ** (s - r) * kroton(F, r, s))
        ent.append(tuple(row))
    return CodingMatrix(tuple(ent))


def coding_recurrence(F: FSequence, n: int) -> CodingMatrix:
    """The coding matrix grown from the Moebius recurrence instead of the
    closed form.

    Summing mu(x_r, z) over the half-open interval [x_r, y_s) level by level
    gives c_(r,s) = -(c_(r,r) + sum over r < i < s of i_F * c_(r,i)): every
    intermediate level contributes all i_F of its elements.  Solving this
    recurrence is the independent route the closed form is checked against.
    """
    ent = []
    for r in range(1, n + 1):
        row = [0] * n
        row[r - 1] = 1
        for s in range(r + 1, n + 1):
            acc = 1  # the bottom element x_r itself
            for i in range(r + 1, s):
                acc += F.value(i) * row[i - 1]
            row[s - 1] = -acc
        ent.append(tuple(row))
    return CodingMatrix(tuple(ent))


# -- Moebius: three constructions ------------------------------------------

MOBIUS_METHODS = ("closed_form", "invert", "recurrence")


def mobius(P: GradedPoset, method: str = "invert") -> BlockMatrix:
    """Inverse of zeta in the integer incidence algebra.

    `invert` and `recurrence` work for every graded poset; `closed_form`
    expands the coding matrix against all-ones blocks and is only valid for
    cobwebs (rank-only dependence fails otherwise), so it is refused there.
    """
    if method == "invert":
        return unitriangular_inverse(zeta(P, "closure").with_ring(INT))
    if method == "recurrence":
        return _mobius_recurrence(P)
    if method == "closed_form":
        return _mobius_closed_form(P)
    raise ValueError(f"unknown mobius method {method!r}")


def _mobius_closed_form(P: GradedPoset) -> BlockMatrix:
    if not P.is_cobweb:
        raise PosetError("closed form Moebius is defined for cobwebs only")
    n = P.n_levels
    F = FSequence(list(P.level_sizes))
    C = coding_matrix(F, n)
    M = BlockMatrix.identity(P.level_sizes, INT)
    rows = [list(r) for r in M.rows]
    off = M._offsets
    for r in range(1, n + 1):
        for s in range(r + 1, n + 1):
            c = C.c(r, s)
            if c == 0:
                continue
            for i in range(off[r - 1], off[r]):
                row = rows[i]
                for j in range(off[s - 1], off[s]):
                    row[j] = c
    return BlockMatrix(P.level_sizes, rows, INT)


def reachable_sets(P: GradedPoset) -> List[Set[int]]:
    """reachable_sets(P)[x] is the set of global labels y with x <= y,
    computed by graph traversal of the cover digraph (no matrix algebra)."""
    N = P.node_count
    up: List[List[int]] = [[] for _ in range(N + 1)]
    for x in P.nodes():
        up[x.global_label] = [y.global_label for y in P.upper_covers(x)]
    reach: List[Set[int]] = [set() for _ in range(N + 1)]
    for g in range(N, 0, -1):
        acc = {g}
        for h in up[g]:
            acc |= reach[h]
        reach[g] = acc
    return reach


def _mobius_recurrence(P: GradedPoset) -> BlockMatrix:
    # mu(x, x) = 1 and mu(x, y) = -sum of mu(x, z) over x <= z < y, evaluated
    # on global labels; independent of both zeta construction and inversion.
    N = P.node_count
    reach = reachable_sets(P)
    rows = [[0] * N for _ in range(N)]
    for x in range(1, N + 1):
        rows[x - 1][x - 1] = 1
        above = sorted(reach[x])
        for y in above:
            if y == x:
                continue
            acc = 0
            for z in above:
                if z != y and y in reach[z]:
                    acc += rows[x - 1][z - 1]
            rows[x - 1][y - 1] = -acc
    return BlockMatrix(P.level_sizes, rows, INT)


def interval_mobius(F: FSequence, r: int, s: int) -> int:
    """Moebius value between any node of level r and any node of level s in
    a cobweb; depends only on the two ranks."""
    if s < r:
        warnings.warn(f"interval_mobius called with s={s} < r={r}; returning 0")
        return 0
    if s == r:
        return 1
    return (-1) ** (s - r) * kroton(F, r, s)


def mobius_krot(F: FSequence, x: Tuple[int, int], y: Tuple[int, int]) -> int:
    """Coordinate-pair Moebius form: x and y are (position, level) pairs.

    Positions are bounded by the level sizes; the value reduces to the
    rank-only interval form.
    """
    s, t = x
    u, v = y
    for pos, lev, who in ((s, t, "x"), (u, v, "y")):
        if lev < 1:
            raise ValueError(f"{who}: level must be >= 1, got {lev}")
        if not 1 <= pos <= F.value(lev):
            raise ValueError(
                f"{who}: position {pos} out of range 1..{F.value(lev)} at level {lev}")
    if v < t:
        return 0
    if v == t:
        return 1 if s == u else 0
    if v == t + 1:
        return -1
    out = 1
    for i in range(t + 1, v):
        out *= F.value(i) - 1
    return (-1) ** (v - t) * out


# -- maximal chain counting matrix -----------------------------------------

def max_matrix(P: GradedPoset) -> BlockMatrix:
    """Integer closure of the cover matrix; entry (x, y) counts the maximal
    chains of the interval [x, y], with all-ones diagonal."""
    return nilpotent_closure(kappa(P, INT))


def max_inverse(P: GradedPoset) -> BlockMatrix:
    """Identity minus the cover matrix: the exact inverse of max_matrix."""
    I = BlockMatrix.identity(P.level_sizes, INT)
    k = kappa(P, INT)
    rows = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(I.rows, k.rows)]
    return BlockMatrix(P.level_sizes, rows, INT)


def logic_L(M: BlockMatrix) -> BlockMatrix:
    """Entrywise positivity indicator, mapping a chain-counting matrix back
    to the underlying zeta.  Refuses negative entries."""
    for i, row in enumerate(M.rows):
        for j, v in enumerate(row):
            if v < 0:
                raise MatrixError(f"logic_L is undefined on negative entry at ({i},{j})")
    rows = [[1 if v > 0 else 0 for v in row] for row in M.rows]
    return BlockMatrix(M.level_sizes, rows, BOOL)
