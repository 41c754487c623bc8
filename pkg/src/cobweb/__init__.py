"""Exact incidence algebra of F-denominated graded posets.

Cobweb posets and their generalizations are built as natural joins of
bipartite layers; zeta, Moebius, cover, and maximal-chain matrices are
computed along independent routes and cross-checked against brute-force
chain enumeration.  All arithmetic is exact.
"""

from .blockmat import BOOL, INT, BlockMatrix, MatrixError, RingError, add, mul, \
    nilpotent_closure, unitriangular_inverse
from .chains import BijectionReport, Chain, HyperBox, PartitionReport, \
    box_join, chain_box_bijection, count_head_chains, count_interval_chains, \
    count_layer_chains, count_tail_chains, enumerate_max_chains, \
    fnomial_chain_probe, fnomial_partition_check, hyperbox, markov_product
from .fsequence import AdmissibilityVerdict, FSequence, SequenceError, const, \
    custom, f_factorial, f_falling, fib, fnomial, from_file, gauss, \
    is_cobweb_admissible, nat, preset
from .incidence import CodingMatrix, coding_matrix, coding_recurrence, eta, \
    eta_inverse, interval_mobius, kappa, kroton, logic_L, max_inverse, \
    max_matrix, mobius, mobius_krot, reachable_sets, zeta
from .invariants import CharPoly, RootedPoset, char_poly, mobius_from_root, \
    root, whitney_first, whitney_second
from .poset import GradedPoset, NodeLabel, PosetError, antichain, cobweb, \
    cobweb_of_sizes, from_blocks, layer, natural_join, ordinal_sum
from .suites import CheckResult, run_checks

__version__ = "0.1.0"
