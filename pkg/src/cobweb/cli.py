"""Command-line front door.

Exit codes: 0 on success, 1 on any domain or usage error, 2 when a check
suite fails.  Data goes to stdout (or -o), diagnostics to stderr.  The
environment variable COBWEB_MAX_LEVELS (default 12) caps requested level
counts so a stray argument cannot trigger a huge computation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import formats
from .blockmat import MatrixError, RingError
from .chains import count_interval_chains, count_layer_chains, enumerate_max_chains
from .fsequence import SequenceError, fnomial, is_cobweb_admissible, preset
from .incidence import coding_matrix, eta, eta_inverse, kroton, max_inverse, \
    max_matrix, mobius, zeta
from .invariants import RootedPoset, char_poly, whitney_first, whitney_second
from .poset import GradedPoset, PosetError, cobweb, from_blocks, ones_block
from .suites import run_checks


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract here is exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(message)


def _max_levels() -> int:
    raw = os.environ.get("COBWEB_MAX_LEVELS", "12")
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"COBWEB_MAX_LEVELS must be an integer, got {raw!r}")


def _check_levels(n: int, what: str = "levels"):
    cap = _max_levels()
    if n > cap:
        raise CliError(f"{what} {n} exceeds COBWEB_MAX_LEVELS={cap}")


def _load_poset(path: str) -> GradedPoset:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}")
    P = formats.poset_from_json(text)
    _check_levels(P.n_levels, f"poset {path}: level count")
    return P


def _open_out(args):
    if getattr(args, "output", None):
        return open(args.output, "w", encoding="utf-8")
    return sys.stdout


def _emit_matrix(M, args):
    fmt = getattr(args, "format", "csv") or "csv"
    out = _open_out(args)
    try:
        if fmt == "csv":
            formats.write_matrix_csv(M, out)
        elif fmt == "json":
            formats.write_matrix_json(M, out)
            out.write("\n")
        else:
            raise CliError(f"unsupported matrix format {fmt!r}")
    finally:
        if out is not sys.stdout:
            out.close()


def _fraction_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


ZETA_FLAG_TO_METHOD = {"closure": "closure", "label-delta": "label_delta",
                       "label-knuth": "label_knuth", "label-s": "label_S"}
MOBIUS_FLAG_TO_METHOD = {"closed-form": "closed_form", "invert": "invert",
                         "recurrence": "recurrence"}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cobweb",
                description="Exact incidence algebra of graded posets built "
                            "as natural joins of bipartite layers.")
    sub = p.add_subparsers(dest="command", metavar="command")

    g = sub.add_parser("gen", help="generate a poset and write its JSON")
    g.add_argument("--seq", help="sequence spec: nat|fib|gauss:q=<int>|const:<int>|file:<path>")
    g.add_argument("--levels", type=int, help="number of levels")
    g.add_argument("--root", action="store_true",
                   help="prepend a singleton bottom level")
    g.add_argument("--blocks", help="JSON file with explicit 0/1 blocks")
    g.add_argument("-o", "--output", help="output path (default stdout)")

    z = sub.add_parser("zeta", help="zeta matrix of a poset")
    z.add_argument("poset")
    z.add_argument("--method", choices=sorted(ZETA_FLAG_TO_METHOD), default="closure")
    z.add_argument("--format", choices=["csv", "json", "ascii"], default="csv")
    z.add_argument("-o", "--output")

    m = sub.add_parser("mobius", help="Moebius matrix of a poset")
    m.add_argument("poset")
    m.add_argument("--method", choices=sorted(MOBIUS_FLAG_TO_METHOD), default="invert")
    m.add_argument("--format", choices=["csv", "json"], default="csv")
    m.add_argument("-o", "--output")

    x = sub.add_parser("max", help="maximal-chain counting matrix")
    x.add_argument("poset")
    x.add_argument("--inverse", action="store_true")
    x.add_argument("--format", choices=["csv", "json"], default="csv")
    x.add_argument("-o", "--output")

    e = sub.add_parser("eta", help="reflexive cover matrix")
    e.add_argument("poset")
    e.add_argument("--inverse", action="store_true")
    e.add_argument("--format", choices=["csv", "json"], default="csv")
    e.add_argument("-o", "--output")

    c = sub.add_parser("chains", help="maximal chains of a layer")
    c.add_argument("poset")
    c.add_argument("--from", dest="from_level", type=int)
    c.add_argument("--to", dest="to_level", type=int)
    c.add_argument("--count-only", action="store_true")
    c.add_argument("--interval", nargs=2, type=int, metavar=("X", "Y"),
                   help="count chains between two global labels")
    c.add_argument("-o", "--output")

    f = sub.add_parser("fnomial", help="F-nomial coefficient")
    f.add_argument("--seq", required=True)
    f.add_argument("n", type=int)
    f.add_argument("k", type=int)

    a = sub.add_parser("admissible", help="cobweb admissibility verdict")
    a.add_argument("--seq", required=True)
    a.add_argument("--up-to", dest="up_to", type=int, required=True)

    w = sub.add_parser("whitney", help="Whitney numbers of a rooted poset")
    w.add_argument("poset")

    cp = sub.add_parser("charpoly", help="characteristic polynomial of a rooted poset")
    cp.add_argument("poset")

    co = sub.add_parser("coding", help="coding matrix of a sequence")
    co.add_argument("--seq", required=True)
    co.add_argument("--levels", type=int, required=True)
    co.add_argument("--format", choices=["csv", "json"], default="csv")
    co.add_argument("-o", "--output")

    kr = sub.add_parser("kroton", help="coding entry magnitude between two levels")
    kr.add_argument("--seq", required=True)
    kr.add_argument("r", type=int)
    kr.add_argument("s", type=int)

    ch = sub.add_parser("check", help="run invariant suites on a poset")
    ch.add_argument("poset")
    ch.add_argument("--suite", default="all",
                    choices=["all", "zeta", "mobius", "max", "markov", "whitney"])

    d = sub.add_parser("dot", help="DOT export of the Hasse digraph")
    d.add_argument("poset")
    d.add_argument("-o", "--output")

    ls = sub.add_parser("lascala", help="ASCII staircase view of zeta")
    ls.add_argument("poset")
    ls.add_argument("-o", "--output")
    return p


def _cmd_gen(args) -> int:
    if args.blocks:
        try:
            with open(args.blocks, "r", encoding="utf-8") as fh:
                blocks = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise CliError(f"cannot read blocks file {args.blocks}: {e}")
        if not isinstance(blocks, list) or not blocks:
            raise CliError("blocks file must hold a nonempty list of 0/1 matrices")
        sizes = [len(blocks[0])] + [len(b[0]) for b in blocks]
        if args.levels is not None and args.levels != len(sizes):
            raise CliError(f"--levels {args.levels} disagrees with {len(sizes)} "
                           f"levels implied by the blocks file")
        name = None
        if args.seq:
            F = preset(args.seq)
            if F.prefix(len(sizes)) != sizes:
                raise CliError("--seq level sizes disagree with the blocks file")
            name = F.name
        _check_levels(len(sizes))
        P = from_blocks(sizes, blocks, sequence_name=name)
        if args.root:
            P = from_blocks([1] + list(P.level_sizes),
                            [ones_block(1, P.level_sizes[0])] + list(P.blocks),
                            sequence_name=name)
    else:
        if not args.seq or args.levels is None:
            raise CliError("gen needs --seq and --levels (or --blocks)")
        _check_levels(args.levels + (1 if args.root else 0))
        F = preset(args.seq)
        if args.root:
            from .invariants import root
            P = root(F, args.levels)
        else:
            P = cobweb(F, args.levels)
    out = _open_out(args)
    try:
        out.write(formats.poset_to_json(P))
        out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _cmd_chains(args) -> int:
    P = _load_poset(args.poset)
    out = _open_out(args)
    try:
        if args.interval:
            x = P.node_by_global(args.interval[0])
            y = P.node_by_global(args.interval[1])
            out.write(f"{count_interval_chains(P, x, y)}\n")
            return 0
        if args.from_level is None or args.to_level is None:
            raise CliError("chains needs --from and --to (or --interval)")
        if args.count_only:
            out.write(f"{count_layer_chains(P, args.from_level, args.to_level)}\n")
        else:
            cs = enumerate_max_chains(P, args.from_level, args.to_level)
            out.write(formats.chains_to_json(cs))
            out.write("\n")
        return 0
    finally:
        if out is not sys.stdout:
            out.close()


def _cmd_check(args) -> int:
    P = _load_poset(args.poset)
    results = run_checks(P, args.suite)
    first_fail = None
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        detail = f": {r.detail}" if r.detail else ""
        print(f"{tag} {r.suite}/{r.name}{detail}")
        if not r.passed and first_fail is None:
            first_fail = r
    if first_fail is not None:
        print(f"check failed: {first_fail.suite}/{first_fail.name}", file=sys.stderr)
        return 2
    return 0


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1

    if args.command == "gen":
        return _cmd_gen(args)
    if args.command == "zeta":
        P = _load_poset(args.poset)
        if args.format == "ascii":
            out = _open_out(args)
            try:
                out.write(formats.la_scala(P).text)
            finally:
                if out is not sys.stdout:
                    out.close()
            return 0
        _emit_matrix(zeta(P, ZETA_FLAG_TO_METHOD[args.method]), args)
        return 0
    if args.command == "mobius":
        P = _load_poset(args.poset)
        _emit_matrix(mobius(P, MOBIUS_FLAG_TO_METHOD[args.method]), args)
        return 0
    if args.command == "max":
        P = _load_poset(args.poset)
        _emit_matrix(max_inverse(P) if args.inverse else max_matrix(P), args)
        return 0
    if args.command == "eta":
        P = _load_poset(args.poset)
        _emit_matrix(eta_inverse(P) if args.inverse else eta(P), args)
        return 0
    if args.command == "chains":
        return _cmd_chains(args)
    if args.command == "fnomial":
        F = preset(args.seq)
        print(_fraction_str(fnomial(F, args.n, args.k)))
        return 0
    if args.command == "admissible":
        _check_levels(args.up_to, "--up-to")
        F = preset(args.seq)
        print(is_cobweb_admissible(F, args.up_to))
        return 0
    if args.command == "whitney":
        P = _load_poset(args.poset)
        if P.level_sizes[0] != 1 or not P.is_cobweb:
            raise CliError("whitney needs a rooted cobweb (singleton bottom level)")
        R = RootedPoset.from_poset(P)
        for r in range(R.top_rank + 1):
            print(f"{r} {whitney_first(R, r)} {whitney_second(R, r)}")
        return 0
    if args.command == "charpoly":
        P = _load_poset(args.poset)
        if P.level_sizes[0] != 1 or not P.is_cobweb:
            raise CliError("charpoly needs a rooted cobweb (singleton bottom level)")
        print(char_poly(RootedPoset.from_poset(P)).to_json())
        return 0
    if args.command == "coding":
        _check_levels(args.levels)
        F = preset(args.seq)
        C = coding_matrix(F, args.levels)
        out = _open_out(args)
        try:
            if args.format == "json":
                out.write(formats.coding_to_json(C))
                out.write("\n")
            else:
                for row in C.entries:
                    out.write(",".join(str(v) for v in row))
                    out.write("\n")
        finally:
            if out is not sys.stdout:
                out.close()
        return 0
    if args.command == "kroton":
        F = preset(args.seq)
        print(kroton(F, args.r, args.s))
        return 0
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "dot":
        P = _load_poset(args.poset)
        out = _open_out(args)
        try:
            out.write(formats.to_dot(P))
        finally:
            if out is not sys.stdout:
                out.close()
        return 0
    if args.command == "lascala":
        P = _load_poset(args.poset)
        out = _open_out(args)
        try:
            out.write(formats.la_scala(P).text)
        finally:
            if out is not sys.stdout:
                out.close()
        return 0
    parser.print_usage(sys.stderr)
    return 1


def main(argv=None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except CliError as e:
        print(f"cobweb: {e}", file=sys.stderr)
        return 1
    except (SequenceError, PosetError, MatrixError, RingError,
            formats.FormatError, ValueError, TypeError) as e:
        print(f"cobweb: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
