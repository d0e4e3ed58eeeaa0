import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from strongcompat import bitset
from strongcompat.algebra import dimension, is_free
from strongcompat.chromatic import improper_edge
from strongcompat.compat import Graph, complete_graph, cycle_graph, empty_graph, petersen_graph, strong_compatibility_graph
from strongcompat.errors import CapacityError, InvalidParameter
from strongcompat.hom import (
    MultipartiteWitness,
    Pattern,
    complete,
    cycle,
    example12_chain,
    find_balanced_multipartite,
    first_part_coloring,
    flip_action,
    gnp,
    hom_poset,
    is_hom_element,
    is_multipartite_witness,
    lemma14_coloring,
    part_size_key,
    minimal_t,
    multipartite_dimension_lower_bound,
    shift_action,
    theorem13_report,
)


def as_sets(el):
    return tuple(frozenset(bitset.indices(p)) for p in el)


def brute(pattern, H):
    return oracles.hom_elements(pattern.edges, pattern.r, H.vertex_count, H.has_edge)


@pytest.mark.parametrize(
    "pattern, H, expected",
    [
        (complete(2), complete_graph(2), 2),
        (complete(2), complete_graph(3), 12),
        (cycle(4), complete_graph(3), 48),
        (complete(3), complete_graph(4), None),
        (cycle(5), complete_graph(3), None),
        (complete(2), cycle_graph(5), None),
        (cycle(4), complete_graph(4), 674),
        (complete(2), empty_graph(3), 0),
    ],
)
def test_hom_enumeration_matches_brute_force(pattern, H, expected):
    hp = hom_poset(pattern, H)
    ref = brute(pattern, H)
    assert {as_sets(el) for el in hp.elements} == ref
    assert len(hp.elements) == len(ref)
    if expected is not None:
        assert hp.size == expected
    for x, a in enumerate(hp.elements):
        for y, b in enumerate(hp.elements):
            below = x != y and all(p & ~q == 0 for p, q in zip(a, b))
            assert bool(hp.up[x] >> y & 1) == below


def test_pattern_validation_and_edges():
    assert cycle(4).edges == [(0, 1), (1, 2), (2, 3), (0, 3)]
    assert complete(3).earlier_neighbors(2) == [0, 1]
    assert cycle(5).earlier_neighbors(4) == [0, 3]
    for bad in (("K", 1), ("C", 2), ("X", 3)):
        with pytest.raises(InvalidParameter):
            Pattern(*bad)


def test_is_hom_element():
    K3 = complete_graph(3)
    assert is_hom_element(complete(2), K3, (0b001, 0b110))
    assert not is_hom_element(complete(2), K3, (0b011, 0b110))
    assert not is_hom_element(complete(2), K3, (0b001, 0))
    assert not is_hom_element(complete(2), K3, (0b001,))


def test_capacity_error_carries_partial_count():
    with pytest.raises(CapacityError) as exc:
        hom_poset(cycle(4), complete_graph(4), cap=100)
    assert exc.value.partial_count == 101
    with pytest.raises(InvalidParameter):
        hom_poset(complete(2), complete_graph(2), cap=0)


def test_actions_are_free_and_order_preserving():
    hp = hom_poset(complete(3), complete_graph(5))
    P = shift_action(hp)
    assert P.group.order == 3 and is_free(P)
    Q = flip_action(hom_poset(cycle(4), complete_graph(3)))
    assert Q.group.order == 2 and is_free(Q)
    with pytest.raises(InvalidParameter):
        shift_action(hom_poset(cycle(4), complete_graph(3)))
    with pytest.raises(InvalidParameter):
        flip_action(hp)


def test_part_size_key_examples():
    assert part_size_key((0b00001, 0b01110)) == (1, 1, 1)
    assert part_size_key((0b00011, 0b00100)) == (1, 1, 2)
    assert part_size_key((0b00011, 0b01100)) == (2,)
    # two minimum-size parts; the smaller vertex lives in part 3
    assert part_size_key((0b1100000, 0b0011000, 0b0000001)) == (1, 1, 3)
    assert part_size_key((0b1100000, 0b0010000, 0b0000001)) == (1, 2, 3)


@pytest.mark.parametrize("seed", range(5))
def test_lemma14_coloring_is_proper_on_random_graphs(seed):
    H = gnp(7, 0.5, seed)
    hp = hom_poset(complete(2), H)
    if hp.size == 0:
        return
    colors, table = lemma14_coloring(hp)
    C = strong_compatibility_graph(shift_action(hp))
    assert improper_edge(C, colors) is None
    t = minimal_t(H, 2)
    assert len(table) == len(set(colors)) <= 3 * (t - 1)


def test_lemma14_coloring_needs_complete_pattern():
    with pytest.raises(InvalidParameter):
        lemma14_coloring(hom_poset(cycle(4), complete_graph(3)))


def test_first_part_coloring():
    hp = hom_poset(cycle(4), complete_graph(3))
    colors = first_part_coloring(hp)
    assert set(colors) == {1, 2, 3}
    assert improper_edge(strong_compatibility_graph(flip_action(hp)), colors) is None


@pytest.mark.parametrize(
    "graph, r, t_min",
    [
        (complete_graph(6), 2, 4),
        (complete_graph(6), 3, 3),
        (cycle_graph(5), 2, 2),
        (cycle_graph(4), 2, 3),
        (petersen_graph(), 2, 2),
        (empty_graph(4), 2, 1),
    ],
)
def test_minimal_t(graph, r, t_min):
    assert minimal_t(graph, r) == t_min
    w = find_balanced_multipartite(graph, r, t_min - 1) if t_min > 1 else None
    if w is not None:
        assert is_multipartite_witness(graph, w) and w.sizes == (t_min - 1,) * r


@given(seed=st.integers(0, 10**6), n=st.integers(2, 8), r=st.sampled_from([2, 3]), t=st.integers(1, 3))
def test_multipartite_search_matches_brute_force(seed, n, r, t):
    H = gnp(n, 0.6, seed)
    w = find_balanced_multipartite(H, r, t)
    assert (w is not None) == oracles.has_balanced_multipartite(n, H.has_edge, r, t)
    if w is not None:
        assert is_multipartite_witness(H, w)


def test_multipartite_witness_rejections():
    K4 = complete_graph(4)
    assert not is_multipartite_witness(K4, MultipartiteWitness(((0, 1), (1, 2))))
    assert not is_multipartite_witness(cycle_graph(4), MultipartiteWitness(((0, 1), (2, 3))))
    assert not is_multipartite_witness(K4, MultipartiteWitness(((0,), ())))
    with pytest.raises(InvalidParameter):
        find_balanced_multipartite(K4, 1, 1)


def test_multipartite_chain_is_in_hom_and_strict():
    H = complete_graph(7)
    w = MultipartiteWitness(((0, 1, 2), (3, 4), (5, 6)))
    length, chain = multipartite_dimension_lower_bound(H, w)
    assert length == 7 - 3 == len(chain) - 1
    assert all(is_hom_element(complete(3), H, el) for el in chain)
    assert all(a != b and all(p & ~q == 0 for p, q in zip(a, b)) for a, b in zip(chain, chain[1:]))
    hp = hom_poset(complete(3), H)
    assert dimension(shift_action(hp)) >= length
    with pytest.raises(InvalidParameter):
        multipartite_dimension_lower_bound(cycle_graph(4), MultipartiteWitness(((0, 1), (2, 3))))


@pytest.mark.parametrize("r, n", [(4, 3), (4, 5), (6, 4), (8, 3)])
def test_example12_chain(r, n):
    chain = example12_chain(r, n)
    assert len(chain) - 1 == (r // 2) * (n - 2)
    assert chain[0] == tuple(1 if i % 2 == 0 else 2 for i in range(r))
    last = chain[-1]
    full_but_1 = ((1 << n) - 1) & ~0b10
    assert all(last[i] == (full_but_1 if i % 2 == 0 else 0b10) for i in range(r))


@pytest.mark.parametrize("r, n", [(5, 4), (2, 4), (4, 2)])
def test_example12_chain_rejects_bad_parameters(r, n):
    with pytest.raises(InvalidParameter):
        example12_chain(r, n)


def test_gnp_draw_order():
    rng = random.Random(42)
    expected = [(i, j) for i in range(6) for j in range(i + 1, 6) if rng.random() < 0.3]
    assert gnp(6, 0.3, 42).edges == expected
    assert gnp(5, 1.0, 0).edge_count == 10 and gnp(5, 0.0, 0).edge_count == 0
    with pytest.raises(InvalidParameter):
        gnp(3, 1.5, 0)


def test_theorem13_report_fields():
    rep = theorem13_report(8, 2, seed=3)
    assert rep.proper and not rep.partial
    assert rep.provable_bound == 3 * (rep.t - 1)
    assert rep.claimed_bound == 2 * (rep.t - 1)
    assert rep.claimed_index_bound == rep.claimed_bound - 1
    assert rep.log_bound == pytest.approx((2 + 2 + 0.1) * math.log2(8))
    assert rep.colors_used <= rep.provable_bound
    assert rep.greedy_ub is not None and rep.hom_dimension is not None
    assert len(rep.csv_row()) == len(rep.CSV_FIELDS)
    assert rep.to_dict()["seed"] == 3


def test_theorem13_report_on_cap():
    rep = theorem13_report(8, 2, seed=3, cap=10)
    assert rep.partial and rep.proper is None and rep.hom_size == 11
    with pytest.raises(InvalidParameter):
        theorem13_report(8, 1, seed=0)


def test_theorem13_report_with_budget_brackets_chi():
    rep = theorem13_report(8, 2, seed=0, budget_ms=2000)
    assert rep.chi_lower <= rep.chi_upper <= rep.greedy_ub


def test_part_index_separates_adjacent_elements():
    # rank-within-minimum-parts would give both (1, 1, 1)
    hp = hom_poset(complete(2), complete_graph(5))
    C = strong_compatibility_graph(shift_action(hp))
    a = hp.index[(0b00110, 0b00001)]
    b = hp.index[(0b00001, 0b01110)]
    assert C.has_edge(a, b)
    assert part_size_key(hp.elements[a]) == (1, 1, 2)
    assert part_size_key(hp.elements[b]) == (1, 1, 1)
