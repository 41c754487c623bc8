"""Poset construction, natural join, ordinal sum, layers, labeling."""

import pytest
from hypothesis import given, strategies as st

from cobweb import PosetError, antichain, cobweb, cobweb_of_sizes, custom, \
    fib, from_blocks, layer, nat, natural_join, ordinal_sum

from conftest import random_no_mute_poset


def test_cobweb_shape(nat3):
    assert nat3.level_sizes == (1, 2, 3)
    assert nat3.blocks[0] == ((1, 1),)
    assert nat3.blocks[1] == ((1, 1, 1), (1, 1, 1))
    assert nat3.is_cobweb and not nat3.has_mute_nodes


def test_const_one_is_a_chain():
    from cobweb import const
    P = cobweb(const(1), 4)
    assert P.level_sizes == (1, 1, 1, 1)
    assert all(blk == ((1,),) for blk in P.blocks)


def test_cobweb_needs_positive_levels():
    with pytest.raises(PosetError):
        cobweb(nat(), 0)


def test_from_blocks_validation():
    from_blocks([2, 2], [[[1, 0], [1, 1]]])  # fine: no zero row or column
    with pytest.raises(PosetError):
        from_blocks([2, 2], [[[1, 0]]])  # row count mismatch
    with pytest.raises(PosetError):
        from_blocks([2, 2], [[[1, 2], [1, 1]]])  # non-binary entry
    with pytest.raises(PosetError):
        from_blocks([2], [[[1]]])  # block for a single level


def test_flags():
    P = from_blocks([2, 2], [[[1, 1], [1, 1]]])
    assert P.is_cobweb
    Q = from_blocks([2, 2], [[[1, 0], [1, 1]]])
    assert not Q.is_cobweb and not Q.has_mute_nodes
    R = from_blocks([2, 2], [[[1, 0], [1, 0]]])  # zero column
    assert R.has_mute_nodes


def test_mute_nodes_reported():
    P = from_blocks([1, 2, 1], [[[1, 1]], [[1], [0]]])
    # second node of level 2 has out-degree 0
    assert [(m.level, m.position) for m in P.mute_nodes()] == [(2, 2)]
    Q = from_blocks([1, 2, 1], [[[1, 0]], [[1], [1]]])
    # second node of level 2 has in-degree 0
    assert [(m.level, m.position) for m in Q.mute_nodes()] == [(2, 2)]
    assert cobweb(nat(), 4).mute_nodes() == []


def test_extremal_levels_are_never_mute():
    # bottom in-degree and top out-degree do not count
    P = cobweb(nat(), 2)
    assert P.mute_nodes() == []


def test_natural_join_of_layers():
    F = nat()
    P4 = cobweb(F, 4)
    left = layer(P4, 2, 3)
    right = layer(P4, 3, 4)
    assert natural_join(left, right) == layer(P4, 2, 4)


def test_natural_join_identity_glue():
    P = cobweb(nat(), 3)
    assert natural_join(P, antichain(3)) == P
    assert natural_join(antichain(1), P) == P


def test_natural_join_size_mismatch():
    with pytest.raises(PosetError):
        natural_join(cobweb(nat(), 2), cobweb(nat(), 3))


def test_cobweb_is_fold_of_di_bicliques():
    F = fib()
    P = cobweb(F, 5)
    acc = layer(P, 1, 2)
    for k in range(2, 5):
        acc = natural_join(acc, layer(P, k, k + 1))
    assert acc == P


def test_natural_join_associative():
    P = cobweb_of_sizes([1, 2])
    Q = cobweb_of_sizes([2, 3])
    R = cobweb_of_sizes([3, 1])
    assert natural_join(natural_join(P, Q), R) == natural_join(P, natural_join(Q, R))


def test_natural_join_noncommutative():
    P = cobweb_of_sizes([1, 2])
    Q = cobweb_of_sizes([2, 1])
    assert natural_join(P, Q) != natural_join(Q, P)


def test_ordinal_sum_of_antichains():
    S = ordinal_sum(antichain(2), antichain(3))
    assert S.level_sizes == (2, 3)
    assert S.blocks[0] == ((1, 1, 1), (1, 1, 1))
    chain = ordinal_sum(ordinal_sum(antichain(1), antichain(1)), antichain(1))
    assert chain.level_sizes == (1, 1, 1)


def test_ordinal_sum_rebuilds_cobweb():
    F = nat()
    P = cobweb(F, 4)
    S = antichain(F.value(1))
    for k in range(2, 5):
        S = ordinal_sum(S, antichain(F.value(k)))
    assert S == P


def test_layer_bounds():
    P = cobweb(nat(), 4)
    assert layer(P, 2, 4).level_sizes == (2, 3, 4)
    assert layer(P, 3, 3).level_sizes == (3,)
    assert layer(P, 1, 4) == P
    with pytest.raises(PosetError):
        layer(P, 0, 2)
    with pytest.raises(PosetError):
        layer(P, 3, 5)


def test_labels_prefix_sums(nat3):
    assert [nat3.node(2, i).global_label for i in (1, 2)] == [2, 3]
    assert [nat3.node(3, i).global_label for i in (1, 2, 3)] == [4, 5, 6]
    assert nat3.node(1, 1).global_label == 1
    assert nat3.S(3) == 6


def test_labels_roundtrip_and_rank():
    P = cobweb(fib(), 6)
    for x in P.nodes():
        back = P.node_by_global(x.global_label)
        assert back == x
        assert P.level_of(x.global_label) == x.level


@pytest.mark.parametrize("seed", range(8))
def test_labels_bijection_exhaustive(seed):
    P = random_no_mute_poset(seed, max_levels=6)
    seen = [x.global_label for x in P.nodes()]
    assert seen == list(range(1, P.node_count + 1))


def test_label_out_of_range(nat3):
    with pytest.raises(PosetError):
        nat3.node_by_global(7)
    with pytest.raises(PosetError):
        nat3.node(2, 3)


@given(st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4),
       st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4))
def test_join_after_ordinal_sum_agrees(a_sizes, b_sizes):
    # gluing Q on top of P via an all-ones block is the same as ordinal sum
    P = cobweb_of_sizes(a_sizes)
    Q = cobweb_of_sizes(b_sizes)
    S = ordinal_sum(P, Q)
    assert S.level_sizes == P.level_sizes + Q.level_sizes
    assert S.is_cobweb == (P.is_cobweb and Q.is_cobweb)
