"""Exact square block matrices over the integers or the Boolean semiring.

Matrices are indexed by the natural labeling of a graded poset: block (r, s)
spans the rows of level r and the columns of level s.  Entries are plain
Python ints (so integer arithmetic is unbounded); the ring object only fixes
the meaning of + and *.  The Boolean semiring uses (or, and) and refuses
negation outright rather than faking it.

The closure of a cover matrix is computed band by band: the j-th power of a
one-band matrix lives on the j-th block band, so the whole terminating series
I + K + K^2 + ... costs O(n) block products instead of repeated full products.
"""

from __future__ import annotations

from typing import Sequence, Tuple


class RingError(TypeError):
    """Operation not supported by the ring (for example Boolean negation)."""


class MatrixError(ValueError):
    """Shape, ring, or structure violation."""


class IntegerRing:
    name = "int"
    zero = 0
    one = 1

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a


class BooleanSemiring:
    """Two-element semiring: add = or, mul = and, no additive inverse."""
    name = "bool"
    zero = 0
    one = 1

    @staticmethod
    def add(a, b):
        return a | b

    @staticmethod
    def mul(a, b):
        return a & b

    @staticmethod
    def neg(a):
        raise RingError("the Boolean semiring has no negation")


INT = IntegerRing()
BOOL = BooleanSemiring()


class BlockMatrix:
    """Square matrix of size S(n) partitioned by level sizes."""

    def __init__(self, level_sizes: Sequence[int], rows, ring=INT):
        sizes = tuple(int(s) for s in level_sizes)
        n = sum(sizes)
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise MatrixError(f"entries must form a {n}x{n} matrix")
        self.level_sizes = sizes
        self.rows = rows
        self.ring = ring
        off = [0]
        for s in sizes:
            off.append(off[-1] + s)
        self._offsets = tuple(off)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, level_sizes, ring=INT):
        n = sum(level_sizes)
        return cls(level_sizes, [[ring.zero] * n for _ in range(n)], ring)

    @classmethod
    def identity(cls, level_sizes, ring=INT):
        n = sum(level_sizes)
        rows = [[ring.zero] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = ring.one
        return cls(level_sizes, rows, ring)

    @classmethod
    def from_band_blocks(cls, level_sizes, band_blocks, ring=INT):
        """Place the given blocks on the first superdiagonal block band.

        band_blocks[k] sits at block (k+1, k+2), the shape of a cover
        relation between adjacent levels.
        """
        M = cls.zeros(level_sizes, ring)
        rows = [list(r) for r in M.rows]
        off = M._offsets
        if len(band_blocks) != len(M.level_sizes) - 1:
            raise MatrixError("one band block per adjacent level pair required")
        for k, blk in enumerate(band_blocks):
            r0, c0 = off[k], off[k + 1]
            for i, row in enumerate(blk):
                for j, v in enumerate(row):
                    rows[r0 + i][c0 + j] = v
        return cls(level_sizes, rows, ring)

    # -- bookkeeping ------------------------------------------------------

    @property
    def size(self) -> int:
        return self._offsets[-1]

    @property
    def n_levels(self) -> int:
        return len(self.level_sizes)

    def level_of_index(self, i: int) -> int:
        """1-based level of a 0-based row/column index."""
        lo, hi = 0, self.n_levels
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self._offsets[mid] <= i:
                lo = mid
            else:
                hi = mid
        return hi

    def block(self, r: int, s: int) -> Tuple[Tuple[int, ...], ...]:
        """The (r, s) block, levels 1-based."""
        off = self._offsets
        return tuple(tuple(row[off[s - 1]:off[s]])
                     for row in self.rows[off[r - 1]:off[r]])

    def with_ring(self, ring) -> "BlockMatrix":
        """Reinterpret the same entries over another ring."""
        return BlockMatrix(self.level_sizes, self.rows, ring)

    def __eq__(self, other):
        return (isinstance(other, BlockMatrix)
                and self.level_sizes == other.level_sizes
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.level_sizes, self.rows))

    def __repr__(self):
        return (f"BlockMatrix({self.ring.name}, sizes={list(self.level_sizes)}, "
                f"{self.size}x{self.size})")

    # -- structure predicates ----------------------------------------------

    def is_strictly_upper_block(self) -> bool:
        """Zero at every (x, y) with level(x) >= level(y)."""
        off = self._offsets
        for r in range(1, self.n_levels + 1):
            for i in range(off[r - 1], off[r]):
                row = self.rows[i]
                for j in range(0, off[r]):
                    if row[j] != self.ring.zero:
                        return False
        return True

    def is_unitriangular(self) -> bool:
        """Ones on the diagonal, zeros strictly below."""
        for i, row in enumerate(self.rows):
            if row[i] != self.ring.one:
                return False
            for j in range(i):
                if row[j] != self.ring.zero:
                    return False
        return True

    def is_one_band(self) -> bool:
        """Support only on blocks (k, k+1)."""
        off = self._offsets
        for i, row in enumerate(self.rows):
            r = self.level_of_index(i)
            lo = off[r] if r < self.n_levels else self.size
            hi = off[r + 1] if r + 1 <= self.n_levels else lo
            for j, v in enumerate(row):
                if v != self.ring.zero and not lo <= j < hi:
                    return False
        return True

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(v == z for row in self.rows for v in row)


def _check_compatible(A: BlockMatrix, B: BlockMatrix):
    if A.level_sizes != B.level_sizes:
        raise MatrixError(
            f"level size mismatch: {A.level_sizes} vs {B.level_sizes}")
    if A.ring is not B.ring:
        raise MatrixError(f"ring mismatch: {A.ring.name} vs {B.ring.name}")


def add(A: BlockMatrix, B: BlockMatrix) -> BlockMatrix:
    _check_compatible(A, B)
    radd = A.ring.add
    rows = [[radd(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(A.rows, B.rows)]
    return BlockMatrix(A.level_sizes, rows, A.ring)


def mul(A: BlockMatrix, B: BlockMatrix) -> BlockMatrix:
    """Exact ring product; skips zero entries of A row by row."""
    _check_compatible(A, B)
    ring = A.ring
    zero, radd, rmul = ring.zero, ring.add, ring.mul
    n = A.size
    brows = B.rows
    out = []
    for arow in A.rows:
        acc = [zero] * n
        for k, a in enumerate(arow):
            if a == zero:
                continue
            brow = brows[k]
            for j in range(n):
                b = brow[j]
                if b != zero:
                    acc[j] = radd(acc[j], rmul(a, b))
        out.append(acc)
    return BlockMatrix(A.level_sizes, out, ring)


def _mul_block(X, Y, ring):
    """Plain block product of rectangular tuples over the ring."""
    zero, radd, rmul = ring.zero, ring.add, ring.mul
    cols = len(Y[0]) if Y else 0
    out = []
    for xr in X:
        acc = [zero] * cols
        for k, x in enumerate(xr):
            if x == zero:
                continue
            yrow = Y[k]
            for j in range(cols):
                y = yrow[j]
                if y != zero:
                    acc[j] = radd(acc[j], rmul(x, y))
        out.append(acc)
    return out


def nilpotent_closure(K: BlockMatrix) -> BlockMatrix:
    """I + K + K^2 + ... for strictly upper block K; the series terminates.

    When K is supported on the first block band (a cover matrix), power j
    lives exactly on band j, so each band is filled by one chain of block
    products.  Otherwise the terminating power series is summed directly.
    """
    if not K.is_strictly_upper_block():
        raise MatrixError("closure requires a strictly upper block matrix")
    ring = K.ring
    n = K.n_levels
    if K.is_one_band():
        R = BlockMatrix.identity(K.level_sizes, ring)
        rows = [list(r) for r in R.rows]
        off = R._offsets
        band = {r: [list(row) for row in K.block(r, r + 1)] for r in range(1, n)}
        for j in range(1, n):
            for r in sorted(band):
                blk = band[r]
                r0, c0 = off[r - 1], off[r + j - 1]
                for i, row in enumerate(blk):
                    out = rows[r0 + i]
                    for c, v in enumerate(row):
                        out[c0 + c] = v
            band = {r: _mul_block(band[r], K.block(r + j, r + j + 1), ring)
                    for r in band if r + j < n}
        return BlockMatrix(K.level_sizes, rows, ring)
    R = BlockMatrix.identity(K.level_sizes, ring)
    P = K
    for _ in range(n):
        if P.is_zero():
            break
        R = add(R, P)
        P = mul(P, K)
    if not P.is_zero():
        raise MatrixError("matrix is not nilpotent")  # unreachable for strict upper
    return R


def unitriangular_inverse(M: BlockMatrix) -> BlockMatrix:
    """Inverse of I + N with N strictly upper, over a ring with negation.

    This is the terminating series sum over k of (-N)^k, evaluated one
    column at a time by Horner steps, so mul(M, result) == I exactly.
    """
    ring = M.ring
    if not hasattr(ring, "neg"):
        raise RingError("inverse needs a ring with negation")
    try:
        ring.neg(ring.one)
    except RingError:
        raise
    if not M.is_unitriangular():
        raise MatrixError("inverse requires a unitriangular matrix")
    n = M.size
    rows = M.rows
    zero, radd, rmul, rneg = ring.zero, ring.add, ring.mul, ring.neg
    inv = [[zero] * n for _ in range(n)]
    for y in range(n):
        inv[y][y] = ring.one
        for x in range(y - 1, -1, -1):
            acc = zero
            mrow = rows[x]
            for z in range(x + 1, y + 1):
                m = mrow[z]
                if m != zero:
                    v = inv[z][y]
                    if v != zero:
                        acc = radd(acc, rmul(m, v))
            if acc != zero:
                inv[x][y] = rneg(acc)
    return BlockMatrix(M.level_sizes, inv, ring)


def natural_join(A: BlockMatrix, B: BlockMatrix) -> BlockMatrix:
    """Glue two block matrices along a shared level, the matrix counterpart
    of joining posets: A's last diagonal block must equal B's first.  Entries
    outside both spans are zero."""
    if A.ring is not B.ring:
        raise MatrixError(f"ring mismatch: {A.ring.name} vs {B.ring.name}")
    if A.level_sizes[-1] != B.level_sizes[0]:
        raise MatrixError(
            f"join condition violated: {A.level_sizes[-1]} vs {B.level_sizes[0]}")
    if A.block(A.n_levels, A.n_levels) != B.block(1, 1):
        raise MatrixError("shared diagonal block disagrees between operands")
    sizes = A.level_sizes + B.level_sizes[1:]
    n = sum(sizes)
    shift = A.size - B.level_sizes[0]
    rows = [[A.ring.zero] * n for _ in range(n)]
    for i, row in enumerate(A.rows):
        rows[i][:A.size] = row
    for i, row in enumerate(B.rows):
        for j, v in enumerate(row):
            if v != B.ring.zero:
                rows[shift + i][shift + j] = v
    return BlockMatrix(sizes, rows, A.ring)
