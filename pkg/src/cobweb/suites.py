"""Per-poset invariant suites behind the `check` CLI subcommand.

Each suite returns CheckResult records; a suite that does not apply to the
given poset (Markov needs a cobweb, Whitney needs a root) reports itself as
skipped rather than failing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List

from .blockmat import INT, BlockMatrix, mul
from .chains import count_interval_chains, count_layer_chains, markov_product
from .incidence import ZETA_METHODS, logic_L, max_inverse, max_matrix, mobius, \
    reachable_sets, zeta
from .invariants import RootedPoset, char_poly, whitney_first, whitney_second
from .poset import GradedPoset


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _ok(suite, name):
    return CheckResult(suite, name, True)


def _fail(suite, name, detail):
    return CheckResult(suite, name, False, detail)


def _skip(suite, name, why):
    return CheckResult(suite, name, True, f"skipped: {why}")


def suite_zeta(P: GradedPoset) -> List[CheckResult]:
    out = []
    Z = zeta(P, "closure")
    reach = reachable_sets(P)
    good = all((1 if (j + 1) in reach[i + 1] else 0) == Z.rows[i][j]
               for i in range(P.node_count) for j in range(P.node_count))
    out.append(_ok("zeta", "closure-matches-reachability") if good else
               _fail("zeta", "closure-matches-reachability",
                     "zeta closure disagrees with graph reachability"))
    if P.is_cobweb:
        mats = {m: zeta(P, m) for m in ZETA_METHODS}
        bad = [m for m in ZETA_METHODS if mats[m].rows != Z.rows]
        out.append(_ok("zeta", "method-agreement") if not bad else
                   _fail("zeta", "method-agreement", f"methods disagree: {bad}"))
    else:
        out.append(_skip("zeta", "method-agreement", "label formulas need a cobweb"))
    out.append(_ok("zeta", "logic-of-max") if logic_L(max_matrix(P)).rows == Z.rows
               else _fail("zeta", "logic-of-max", "L(max) differs from zeta"))
    return out


def suite_mobius(P: GradedPoset) -> List[CheckResult]:
    out = []
    mu = mobius(P, "invert")
    rec = mobius(P, "recurrence")
    out.append(_ok("mobius", "invert-vs-recurrence") if mu.rows == rec.rows else
               _fail("mobius", "invert-vs-recurrence", "inversion and recurrence disagree"))
    if P.is_cobweb:
        cf = mobius(P, "closed_form")
        out.append(_ok("mobius", "closed-form-agreement") if cf.rows == mu.rows else
                   _fail("mobius", "closed-form-agreement",
                         "closed form disagrees with inversion"))
    else:
        out.append(_skip("mobius", "closed-form-agreement", "closed form needs a cobweb"))
    zi = zeta(P, "closure").with_ring(INT)
    I = BlockMatrix.identity(P.level_sizes, INT)
    ok = mul(zi, mu) == I and mul(mu, zi) == I
    out.append(_ok("mobius", "inverse-pair") if ok else
               _fail("mobius", "inverse-pair", "mu is not an exact two-sided inverse of zeta"))
    if P.is_cobweb:
        rank_ok = True
        for r in range(1, P.n_levels + 1):
            for s in range(r + 1, P.n_levels + 1):
                blk = mu.block(r, s)
                vals = {v for row in blk for v in row}
                if len(vals) > 1:
                    rank_ok = False
        out.append(_ok("mobius", "rank-dependence") if rank_ok else
                   _fail("mobius", "rank-dependence",
                         "mu varies inside a level block of a cobweb"))
    else:
        out.append(_skip("mobius", "rank-dependence", "stated for cobwebs"))
    return out


def suite_max(P: GradedPoset) -> List[CheckResult]:
    out = []
    M = max_matrix(P)
    nodes = list(P.nodes())
    bad = None
    for x in nodes:
        for y in nodes:
            want = count_interval_chains(P, x, y)
            got = M.rows[x.global_label - 1][y.global_label - 1]
            if want != got:
                bad = (x.global_label, y.global_label, want, got)
                break
        if bad:
            break
    out.append(_ok("max", "chain-count-oracle") if bad is None else
               _fail("max", "chain-count-oracle",
                     f"entry {bad[:2]}: counted {bad[2]}, matrix has {bad[3]}"))
    I = BlockMatrix.identity(P.level_sizes, INT)
    inv = max_inverse(P)
    ok = mul(M, inv) == I and mul(inv, M) == I
    out.append(_ok("max", "inverse-pair") if ok else
               _fail("max", "inverse-pair", "identity minus cover is not the inverse"))
    diag_ok = all(M.rows[i][i] == 1 for i in range(P.node_count))
    out.append(_ok("max", "unit-diagonal") if diag_ok else
               _fail("max", "unit-diagonal", "diagonal entry differs from 1"))
    return out


def suite_markov(P: GradedPoset) -> List[CheckResult]:
    if not P.is_cobweb:
        return [_skip("markov", "factorization", "stated for cobwebs")]
    out = []
    n = P.n_levels
    for r in range(1, n + 1):
        for k in range(r, n + 1):
            for s in range(k + 1, n + 1):
                lhs, rhs = markov_product(P, r, k, s)
                if lhs != rhs:
                    return [_fail("markov", "factorization",
                                  f"({r},{k},{s}): {lhs} != {rhs}")]
                split_l = count_layer_chains(P, r, k) * count_layer_chains(P, k + 1, s)
                split_r = count_layer_chains(P, r, s)
                if split_l != split_r:
                    return [_fail("markov", "split-form",
                                  f"({r},{k},{s}): {split_l} != {split_r}")]
    out.append(_ok("markov", "factorization"))
    out.append(_ok("markov", "split-form"))
    return out


def suite_whitney(P: GradedPoset) -> List[CheckResult]:
    if P.level_sizes[0] != 1 or not P.is_cobweb:
        return [_skip("whitney", "closed-vs-direct", "needs a rooted cobweb")]
    R = P if isinstance(P, RootedPoset) else RootedPoset.from_poset(P)
    out = []
    try:
        ws = [whitney_first(R, r) for r in range(R.top_rank + 1)]
        chi = char_poly(R)
    except ArithmeticError as e:
        return [_fail("whitney", "closed-vs-direct", str(e))]
    out.append(_ok("whitney", "closed-vs-direct"))
    wsec_ok = all(whitney_second(R, r) == R.level_sizes[r]
                  for r in range(R.top_rank + 1))
    out.append(_ok("whitney", "second-kind-sizes") if wsec_ok else
               _fail("whitney", "second-kind-sizes", "W_r differs from the rank size"))
    out.append(_ok("whitney", "sum-is-chi-at-one") if sum(ws) == chi.evaluate(1) else
               _fail("whitney", "sum-is-chi-at-one",
                     f"sum {sum(ws)} != chi(1) {chi.evaluate(1)}"))
    return out


SUITES: Dict[str, Callable[[GradedPoset], List[CheckResult]]] = {
    "zeta": suite_zeta,
    "mobius": suite_mobius,
    "max": suite_max,
    "markov": suite_markov,
    "whitney": suite_whitney,
}


def run_checks(P: GradedPoset, suite: str = "all") -> List[CheckResult]:
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; pick all|{'|'.join(SUITES)}")
    out: List[CheckResult] = []
    for name in names:
        out.extend(SUITES[name](P))
    return out
