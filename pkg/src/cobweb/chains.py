"""Maximal chains: exhaustive enumeration, memoized counting, and the
hyper-box coding of cobweb layers.

Enumeration is depth-first in lexicographic position order, so listings are
deterministic.  Counting goes through per-node downward tallies instead of
listing, which keeps interval counts polynomial; the counts are the oracle
that the closed-form matrices are measured against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Tuple

from .fsequence import FSequence, f_factorial, fnomial
from .poset import GradedPoset, NodeLabel, PosetError


@dataclass(frozen=True)
class Chain:
    """A maximal chain of a layer: one node per level from start_level up.

    positions[i] is the 1-based position at level start_level + i.
    """
    start_level: int
    positions: Tuple[int, ...]

    @property
    def end_level(self) -> int:
        return self.start_level + len(self.positions) - 1

    def nodes(self, P: GradedPoset) -> List[NodeLabel]:
        return [P.node(self.start_level + i, p)
                for i, p in enumerate(self.positions)]

    def validate(self, P: GradedPoset):
        """Check every step against the cover blocks."""
        for i in range(len(self.positions) - 1):
            lvl = self.start_level + i
            if P.blocks[lvl - 1][self.positions[i] - 1][self.positions[i + 1] - 1] != 1:
                raise PosetError(
                    f"chain step {lvl}:{self.positions[i]} -> "
                    f"{lvl + 1}:{self.positions[i + 1]} is not a cover")


def _check_layer_bounds(P: GradedPoset, k: int, n: int):
    if not 1 <= k <= n <= P.n_levels:
        raise PosetError(
            f"layer bounds must satisfy 1 <= k <= n <= {P.n_levels}, got ({k},{n})")


def iter_max_chain_positions(P: GradedPoset, k: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Yield the position tuples of all maximal chains of levels k..n in
    lexicographic order."""
    _check_layer_bounds(P, k, n)
    if k == n:
        for p in range(1, P.level_sizes[k - 1] + 1):
            yield (p,)
        return
    blocks = P.blocks
    path = [0] * (n - k + 1)

    def descend(level: int, idx: int) -> Iterator[Tuple[int, ...]]:
        if level == n:
            yield tuple(path)
            return
        row = blocks[level - 1][path[idx] - 1]
        for j, v in enumerate(row):
            if v == 1:
                path[idx + 1] = j + 1
                yield from descend(level + 1, idx + 1)

    for p in range(1, P.level_sizes[k - 1] + 1):
        path[0] = p
        yield from descend(k, 0)


def enumerate_max_chains(P: GradedPoset, k: int, n: int) -> List[Chain]:
    """Every maximal chain of the layer on levels k..n."""
    return [Chain(k, pos) for pos in iter_max_chain_positions(P, k, n)]


def count_layer_chains(P: GradedPoset, k: int, n: int) -> int:
    """Number of maximal chains spanning levels k..n, by memoized tallies."""
    _check_layer_bounds(P, k, n)
    # tally[i] = chains from node i of the current level up to level n
    tally = [1] * P.level_sizes[n - 1]
    for lvl in range(n - 1, k - 1, -1):
        blk = P.blocks[lvl - 1]
        tally = [sum(v * t for v, t in zip(row, tally)) for row in blk]
    return sum(tally)


def count_interval_chains(P: GradedPoset, x: NodeLabel, y: NodeLabel) -> int:
    """Number of maximal chains of the interval [x, y]; 1 when x = y."""
    if x == y:
        return 1
    if y.level <= x.level:
        return 0
    tally = [0] * P.level_sizes[y.level - 1]
    tally[y.position - 1] = 1
    for lvl in range(y.level - 1, x.level - 1, -1):
        blk = P.blocks[lvl - 1]
        tally = [sum(v * t for v, t in zip(row, tally)) for row in blk]
    return tally[x.position - 1]


def count_tail_chains(P: GradedPoset, r: int, target: NodeLabel) -> int:
    """Chains spanning levels r..target.level that end at target."""
    if not 1 <= r <= target.level:
        raise PosetError(f"tail level {r} must satisfy 1 <= r <= {target.level}")
    tally = [0] * P.level_sizes[target.level - 1]
    tally[target.position - 1] = 1
    for lvl in range(target.level - 1, r - 1, -1):
        blk = P.blocks[lvl - 1]
        tally = [sum(v * t for v, t in zip(row, tally)) for row in blk]
    return sum(tally)


def count_head_chains(P: GradedPoset, source: NodeLabel, s: int) -> int:
    """Chains spanning levels source.level..s that start at source."""
    if not source.level <= s <= P.n_levels:
        raise PosetError(f"head level {s} must satisfy {source.level} <= s <= {P.n_levels}")
    tally = [1] * P.level_sizes[s - 1]
    for lvl in range(s - 1, source.level - 1, -1):
        blk = P.blocks[lvl - 1]
        tally = [sum(v * t for v, t in zip(row, tally)) for row in blk]
    return tally[source.position - 1]


def markov_product(P: GradedPoset, r: int, k: int, s: int) -> Tuple[int, int]:
    """Both sides of the chain-count factorization across a middle level:
    lhs = C(r,k) * C(k,s), rhs = k_F * C(r,s).  Stated for cobwebs."""
    if not P.is_cobweb:
        raise PosetError("the Markov product identity is asserted for cobwebs only")
    if not 1 <= r <= k <= s <= P.n_levels:
        raise PosetError(f"need 1 <= r <= k <= s <= {P.n_levels}, got ({r},{k},{s})")
    lhs = count_layer_chains(P, r, k) * count_layer_chains(P, k, s)
    rhs = P.level_sizes[k - 1] * count_layer_chains(P, r, s)
    return lhs, rhs


# -- hyper-boxes -----------------------------------------------------------

@dataclass(frozen=True)
class HyperBox:
    """Discrete box with one axis per level of a layer: the coordinate view
    of the layer's maximal chains."""
    lo: int
    hi: int
    dims: Tuple[int, ...]

    def __post_init__(self):
        if len(self.dims) != self.hi - self.lo + 1:
            raise ValueError(
                f"box over levels {self.lo}..{self.hi} needs {self.hi - self.lo + 1} "
                f"dimensions, got {len(self.dims)}")
        if any(d < 1 for d in self.dims):
            raise ValueError(f"box dimensions must be positive, got {self.dims}")

    @property
    def cardinality(self) -> int:
        out = 1
        for d in self.dims:
            out *= d
        return out

    def points(self) -> Iterator[Tuple[int, ...]]:
        return product(*(range(1, d + 1) for d in self.dims))


def hyperbox(F: FSequence, k: int, n: int) -> HyperBox:
    """The box [k_F] x ... x [n_F]."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({k},{n})")
    return HyperBox(k, n, tuple(F.value(j) for j in range(k, n + 1)))


def box_join(A: HyperBox, B: HyperBox) -> HyperBox:
    """Cartesian product with the shared face identified once."""
    if A.hi != B.lo:
        raise ValueError(f"face mismatch: A ends at level {A.hi}, B starts at {B.lo}")
    if A.dims[-1] != B.dims[0]:
        raise ValueError(
            f"shared face size mismatch: {A.dims[-1]} vs {B.dims[0]}")
    return HyperBox(A.lo, B.hi, A.dims + B.dims[1:])


@dataclass(frozen=True)
class BijectionReport:
    bijective: bool
    chain_count: int
    box_cardinality: int


def chain_box_bijection(P: GradedPoset, k: int, n: int) -> BijectionReport:
    """Verify that position tuples of the layer's maximal chains hit every
    box point exactly once.  The identification is stated for cobwebs."""
    if not P.is_cobweb:
        raise PosetError("the chain-box identification is stated for cobwebs only")
    _check_layer_bounds(P, k, n)
    box = HyperBox(k, n, tuple(P.level_sizes[k - 1:n]))
    seen = set()
    count = 0
    for pos in iter_max_chain_positions(P, k, n):
        count += 1
        seen.add(pos)
    bijective = (count == len(seen) == box.cardinality
                 and all(p in seen for p in box.points()))
    return BijectionReport(bijective, count, box.cardinality)


# -- combinatorial interpretation checks ------------------------------------

@dataclass(frozen=True)
class PartitionReport:
    """Cardinality consequence of the chain-partition interpretation: the
    layer's chain count divided by the block chain count m_F! must equal the
    F-nomial exactly."""
    layer_count: int
    block_count: int
    divisible: bool
    ratio: Fraction
    fnomial_value: Fraction
    matches: bool


def fnomial_partition_check(F: FSequence, n: int, k: int) -> PartitionReport:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n} k={k}")
    m = n - k
    if k == n:
        layer_count = 1  # empty layer span: the single empty chain
    else:
        from .poset import cobweb
        layer_count = count_layer_chains(cobweb(F, n), k + 1, n)
    if m == 0:
        block_count = 1
    else:
        from .poset import cobweb
        block_count = count_layer_chains(cobweb(F, m), 1, m)
    assert block_count == f_factorial(F, m)
    ratio = Fraction(layer_count, block_count)
    fn = fnomial(F, n, k)
    return PartitionReport(layer_count, block_count, ratio.denominator == 1,
                           ratio, fn, ratio == fn)


@dataclass(frozen=True)
class ProbeReport:
    """Both sides of the conjectured fnomial / chain-count index relation,
    left to the caller to compare: the offsets do not work out for every
    sequence, so this is a probe, not an assertion."""
    lhs: Fraction
    rhs: Fraction
    equal: bool


def fnomial_chain_probe(F: FSequence, l: int, k: int) -> ProbeReport:
    """Report fnomial(F, l, k) against the count of maximal chains from a
    level k-2 node to a level l+1 node, divided by (l-k)_F!."""
    if k < 2:
        raise ValueError(f"probe needs k >= 2 so that level k-2 exists rooted, got {k}")
    if l < k:
        raise ValueError(f"probe needs l >= k, got l={l} k={k}")
    from .poset import cobweb
    if k == 2:
        # level 0 is realized by rooting: a single bottom node
        from .invariants import root
        P = root(F, l + 1)
        x = P.node(1, 1)
        y = P.node(l + 2, 1)
    else:
        P = cobweb(F, l + 1)
        x = P.node(k - 2, 1)
        y = P.node(l + 1, 1)
    count = count_interval_chains(P, x, y)
    rhs = Fraction(count, f_factorial(F, l - k))
    lhs = fnomial(F, l, k)
    return ProbeReport(lhs, rhs, lhs == rhs)
