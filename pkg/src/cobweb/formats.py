"""Serialization and rendering: poset JSON, matrix CSV/JSON, DOT export,
and the ASCII staircase view of the zeta matrix."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, List, Tuple

from .blockmat import BlockMatrix
from .chains import Chain, HyperBox
from .incidence import CodingMatrix, zeta
from .poset import GradedPoset


class FormatError(ValueError):
    """Malformed serialized input; the message names the offending path."""


# -- poset JSON -------------------------------------------------------------

def poset_to_json(P: GradedPoset) -> str:
    """Canonical poset JSON, fields in fixed order."""
    obj = {
        "level_sizes": list(P.level_sizes),
        "blocks": [[list(row) for row in blk] for blk in P.blocks],
        "flags": {"cobweb": P.is_cobweb, "no_mute": not P.has_mute_nodes},
        "sequence": P.sequence_name,
    }
    return json.dumps(obj)


def poset_from_json(text: str) -> GradedPoset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}")
    if not isinstance(obj, dict):
        raise FormatError("top level: expected an object")
    for key in ("level_sizes", "blocks", "flags", "sequence"):
        if key not in obj:
            raise FormatError(f"{key}: missing field")
    sizes = obj["level_sizes"]
    if (not isinstance(sizes, list) or not sizes
            or any(not isinstance(s, int) or s < 1 for s in sizes)):
        raise FormatError("level_sizes: expected a nonempty list of positive integers")
    blocks = obj["blocks"]
    if not isinstance(blocks, list) or len(blocks) != len(sizes) - 1:
        raise FormatError(f"blocks: expected {len(sizes) - 1} blocks")
    for k, blk in enumerate(blocks):
        if not isinstance(blk, list) or len(blk) != sizes[k]:
            raise FormatError(f"blocks[{k}]: expected {sizes[k]} rows")
        for i, row in enumerate(blk):
            if not isinstance(row, list) or len(row) != sizes[k + 1]:
                raise FormatError(f"blocks[{k}][{i}]: expected {sizes[k + 1]} entries")
            for j, v in enumerate(row):
                if v not in (0, 1) or isinstance(v, bool):
                    raise FormatError(f"blocks[{k}][{i}][{j}]: expected 0 or 1, got {v!r}")
    flags = obj["flags"]
    if (not isinstance(flags, dict) or set(flags) != {"cobweb", "no_mute"}
            or any(not isinstance(b, bool) for b in flags.values())):
        raise FormatError("flags: expected {cobweb: bool, no_mute: bool}")
    name = obj["sequence"]
    if name is not None and not isinstance(name, str):
        raise FormatError("sequence: expected a string or null")
    P = GradedPoset(sizes, blocks, sequence_name=name)
    # flags are stored redundantly; recompute and insist they match
    if flags["cobweb"] != P.is_cobweb:
        raise FormatError(f"flags.cobweb: stored {flags['cobweb']}, recomputed {P.is_cobweb}")
    if flags["no_mute"] != (not P.has_mute_nodes):
        raise FormatError(
            f"flags.no_mute: stored {flags['no_mute']}, recomputed {not P.has_mute_nodes}")
    return P


# -- matrix CSV / JSON -------------------------------------------------------

def write_matrix_csv(M: BlockMatrix, out: IO[str]):
    """Row-major CSV, plain decimal integers, streamed row by row."""
    for row in M.rows:
        out.write(",".join(str(v) for v in row))
        out.write("\n")


def matrix_to_csv(M: BlockMatrix) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in M.rows) + "\n"


def write_matrix_json(M: BlockMatrix, out: IO[str]):
    out.write('{"level_sizes":%s,"entries":[' % json.dumps(list(M.level_sizes)))
    for i, row in enumerate(M.rows):
        if i:
            out.write(",")
        out.write(json.dumps(list(row)))
    out.write("]}")


def matrix_to_json(M: BlockMatrix) -> str:
    obj = {"level_sizes": list(M.level_sizes),
           "entries": [list(row) for row in M.rows]}
    return json.dumps(obj, separators=(",", ":"))


def matrix_from_json(text: str, ring=None) -> BlockMatrix:
    from .blockmat import INT
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}")
    if not isinstance(obj, dict) or "level_sizes" not in obj or "entries" not in obj:
        raise FormatError("expected {level_sizes, entries}")
    return BlockMatrix(obj["level_sizes"], obj["entries"], ring or INT)


def coding_to_json(C: CodingMatrix) -> str:
    return json.dumps({"c": [list(row) for row in C.entries]},
                      separators=(",", ":"))


def chains_to_json(chains: List[Chain]) -> str:
    """Chains as arrays of [level, position] pairs."""
    return json.dumps([[[c.start_level + i, p] for i, p in enumerate(c.positions)]
                       for c in chains])


def hyperbox_to_json(box: HyperBox, include_points: bool = False) -> str:
    obj = {"lo": box.lo, "hi": box.hi, "dims": list(box.dims)}
    if include_points:
        obj["points"] = [list(p) for p in box.points()]
    return json.dumps(obj)


# -- DOT export ---------------------------------------------------------------

def to_dot(P: GradedPoset) -> str:
    """Hasse digraph in DOT: nodes v<level>_<position>, one same-rank group
    per level, minimal elements drawn at the bottom, arcs directed upward."""
    lines = ["digraph poset {", "  rankdir=BT;"]
    for level, size in enumerate(P.level_sizes, start=1):
        names = " ".join(f"v{level}_{i};" for i in range(1, size + 1))
        lines.append(f"  {{ rank=same; {names} }}")
    for k, blk in enumerate(P.blocks, start=1):
        for i, row in enumerate(blk, start=1):
            for j, v in enumerate(row, start=1):
                if v == 1:
                    lines.append(f"  v{k}_{i} -> v{k + 1}_{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- La Scala rendering --------------------------------------------------------

@dataclass(frozen=True)
class LaScalaRender:
    """ASCII view of zeta: '1' where comparable, '.' for the staircase zeros
    above the diagonal, blank below it."""
    lines: Tuple[str, ...]

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + "\n"

    def __str__(self):
        return self.text


def la_scala(P: GradedPoset) -> LaScalaRender:
    Z = zeta(P, "closure")
    out = []
    for i, row in enumerate(Z.rows):
        cells = []
        for j, v in enumerate(row):
            if v:
                cells.append("1")
            elif j > i:
                cells.append(".")
            else:
                cells.append(" ")
        out.append(" ".join(cells))
    return LaScalaRender(tuple(out))
