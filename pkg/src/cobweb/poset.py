"""Graded posets stored as level sizes plus 0/1 biadjacency blocks.

A poset on levels 1..n keeps one block per adjacent level pair: blocks[k-1]
has shape |level k| x |level k+1| and records the cover relation upward.
Cobwebs are the all-ones case.  Every structure here is immutable after
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .fsequence import FSequence


class PosetError(ValueError):
    """Invalid poset construction or operation."""


@dataclass(frozen=True)
class NodeLabel:
    """A vertex: its level, 1-based position within the level, and the
    global label under natural labeling (left to right along level 1, then
    level 2, and so on)."""
    level: int
    position: int
    global_label: int


def _freeze_block(block) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in block)


class GradedPoset:
    """Levels 1..n with 0/1 cover blocks between adjacent levels."""

    def __init__(self, level_sizes: Sequence[int], blocks,
                 sequence_name: Optional[str] = None):
        sizes = tuple(int(s) for s in level_sizes)
        if not sizes:
            raise PosetError("poset needs at least one level")
        if any(s < 1 for s in sizes):
            raise PosetError(f"level sizes must be positive, got {sizes}")
        blocks = tuple(_freeze_block(b) for b in blocks)
        if len(blocks) != len(sizes) - 1:
            raise PosetError(
                f"expected {len(sizes) - 1} blocks for {len(sizes)} levels, got {len(blocks)}")
        for k, blk in enumerate(blocks, start=1):
            if len(blk) != sizes[k - 1] or any(len(row) != sizes[k] for row in blk):
                raise PosetError(
                    f"block {k} must be {sizes[k - 1]}x{sizes[k]}, got "
                    f"{len(blk)}x{len(blk[0]) if blk else 0}")
            for row in blk:
                for v in row:
                    if v not in (0, 1):
                        raise PosetError(f"block {k} has non-binary entry {v!r}")
        self.level_sizes = sizes
        self.blocks = blocks
        self.sequence_name = sequence_name
        # prefix sums: _offsets[k] = S(k) = number of nodes in levels 1..k
        off = [0]
        for s in sizes:
            off.append(off[-1] + s)
        self._offsets = tuple(off)
        self.is_cobweb = all(all(all(v == 1 for v in row) for row in blk)
                             for blk in blocks)
        self.has_mute_nodes = len(self.mute_nodes()) > 0

    # -- size bookkeeping ---------------------------------------------------

    @property
    def n_levels(self) -> int:
        return len(self.level_sizes)

    @property
    def node_count(self) -> int:
        return self._offsets[-1]

    def S(self, m: int) -> int:
        """Prefix sum S(m) = sum of the first m level sizes; S(0) = 0."""
        if not 0 <= m <= self.n_levels:
            raise PosetError(f"S({m}) undefined for {self.n_levels} levels")
        return self._offsets[m]

    # -- natural labeling ---------------------------------------------------

    def node(self, level: int, position: int) -> NodeLabel:
        if not 1 <= level <= self.n_levels:
            raise PosetError(f"level {level} out of range 1..{self.n_levels}")
        if not 1 <= position <= self.level_sizes[level - 1]:
            raise PosetError(
                f"position {position} out of range 1..{self.level_sizes[level - 1]} "
                f"at level {level}")
        return NodeLabel(level, position, self._offsets[level - 1] + position)

    def node_by_global(self, g: int) -> NodeLabel:
        if not 1 <= g <= self.node_count:
            raise PosetError(f"global label {g} out of range 1..{self.node_count}")
        lo, hi = 0, self.n_levels  # find level k with S(k-1) < g <= S(k)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self._offsets[mid] < g:
                lo = mid
            else:
                hi = mid
        return NodeLabel(hi, g - self._offsets[hi - 1], g)

    def level_of(self, g: int) -> int:
        """Rank of a node given by global label."""
        return self.node_by_global(g).level

    def nodes(self):
        g = 0
        for level, size in enumerate(self.level_sizes, start=1):
            for pos in range(1, size + 1):
                g += 1
                yield NodeLabel(level, pos, g)

    # -- cover relation -----------------------------------------------------

    def covers(self, x: NodeLabel, y: NodeLabel) -> bool:
        """True when y covers x (y one level up, arc present)."""
        if y.level != x.level + 1:
            return False
        return self.blocks[x.level - 1][x.position - 1][y.position - 1] == 1

    def upper_covers(self, x: NodeLabel) -> List[NodeLabel]:
        if x.level == self.n_levels:
            return []
        row = self.blocks[x.level - 1][x.position - 1]
        return [self.node(x.level + 1, j + 1) for j, v in enumerate(row) if v == 1]

    def mute_nodes(self) -> List[NodeLabel]:
        """Non-extremal vertices with in-degree or out-degree zero.

        Empty exactly when the poset can be read as an n-ary relation joined
        from its bipartite layers.
        """
        out: List[NodeLabel] = []
        for level in range(1, self.n_levels + 1):
            for pos in range(1, self.level_sizes[level - 1] + 1):
                if level > 1:
                    col = pos - 1
                    if all(row[col] == 0 for row in self.blocks[level - 2]):
                        out.append(self.node(level, pos))
                        continue
                if level < self.n_levels:
                    if all(v == 0 for v in self.blocks[level - 1][pos - 1]):
                        out.append(self.node(level, pos))
        return out

    # -- equality -----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, GradedPoset)
                and self.level_sizes == other.level_sizes
                and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.level_sizes, self.blocks))

    def __repr__(self):
        return f"GradedPoset(sizes={list(self.level_sizes)}, cobweb={self.is_cobweb})"


def ones_block(rows: int, cols: int):
    return tuple(tuple(1 for _ in range(cols)) for _ in range(rows))


def cobweb(F: FSequence, n: int) -> GradedPoset:
    """The cobweb poset on levels 1..n: sizes <1_F,...,n_F>, all-ones blocks."""
    if n < 1:
        raise PosetError(f"cobweb needs n >= 1, got {n}")
    sizes = F.prefix(n)
    blocks = [ones_block(sizes[k], sizes[k + 1]) for k in range(n - 1)]
    return GradedPoset(sizes, blocks, sequence_name=F.name)


def cobweb_of_sizes(sizes: Sequence[int],
                    sequence_name: Optional[str] = None) -> GradedPoset:
    """Cobweb over explicitly given level sizes."""
    sizes = list(sizes)
    blocks = [ones_block(sizes[k], sizes[k + 1]) for k in range(len(sizes) - 1)]
    return GradedPoset(sizes, blocks, sequence_name=sequence_name)


def antichain(size: int) -> GradedPoset:
    """A single trivially ordered level."""
    return GradedPoset([size], [])


def from_blocks(level_sizes: Sequence[int], blocks,
                sequence_name: Optional[str] = None) -> GradedPoset:
    """Validated poset from explicit biadjacency blocks."""
    return GradedPoset(level_sizes, blocks, sequence_name=sequence_name)


def natural_join(P: GradedPoset, Q: GradedPoset) -> GradedPoset:
    """Glue Q on top of P, identifying P's top level with Q's bottom level
    positionally.  Requires the two glue levels to have equal size."""
    if P.level_sizes[-1] != Q.level_sizes[0]:
        raise PosetError(
            f"join condition violated: top of P has size {P.level_sizes[-1]}, "
            f"bottom of Q has size {Q.level_sizes[0]}")
    sizes = P.level_sizes + Q.level_sizes[1:]
    blocks = P.blocks + Q.blocks
    return GradedPoset(sizes, blocks)


def ordinal_sum(P: GradedPoset, Q: GradedPoset) -> GradedPoset:
    """Stack Q above P with every element of P below every element of Q."""
    glue = ones_block(P.level_sizes[-1], Q.level_sizes[0])
    sizes = P.level_sizes + Q.level_sizes
    blocks = P.blocks + (glue,) + Q.blocks
    return GradedPoset(sizes, blocks)


def layer(P: GradedPoset, k: int, n: int) -> GradedPoset:
    """The sub-poset on consecutive levels k..n."""
    if not 1 <= k <= n <= P.n_levels:
        raise PosetError(
            f"layer bounds must satisfy 1 <= k <= n <= {P.n_levels}, got ({k},{n})")
    return GradedPoset(P.level_sizes[k - 1:n], P.blocks[k - 1:n - 1],
                       sequence_name=P.sequence_name)
