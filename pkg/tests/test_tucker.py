import itertools

import pytest

from strongcompat.algebra import cyclic_group, group_from_table, ladder_poset
from strongcompat.chromatic import find_noncomparable_image_pair
from strongcompat.errors import InvalidParameter
from strongcompat.tucker import (
    check_labeling,
    extend_labeling,
    labeling_as_map,
    search_counterexample,
    search_instance,
    tucker_instance,
)


def all_labelings(inst):
    values = [(g, lvl) for g in inst.group.elements for lvl in range(1, inst.levels + 1)]
    return itertools.product(values, repeat=len(inst.orbit_reps))


@pytest.mark.parametrize("k, n", [(2, 2), (3, 2), (4, 2)])
def test_every_labeling_conflicts_by_enumeration(k, n):
    inst = tucker_instance(cyclic_group(k), n)
    for lab in all_labelings(inst):
        conflict = check_labeling(inst, lab)
        assert conflict is not None
        x, y, g = conflict
        assert inst.domain.is_less(x, y) and g != inst.group.identity
        lam = labeling_as_map(inst, lab)
        assert find_noncomparable_image_pair(inst.domain, inst.target, lam) is not None


@pytest.mark.parametrize("k, n", [(2, 2), (3, 2), (2, 3)])
def test_search_verifies(k, n):
    out = search_counterexample(cyclic_group(k), n)
    assert out.status == "verified" and out.counterexample is None
    d = out.to_dict(tucker_instance(cyclic_group(k), n))
    assert d["status"] == "verified" and d["group_order"] == k and d["n"] == n


def test_klein_group_n2_verifies():
    G = group_from_table([[a ^ b for b in range(4)] for a in range(4)])
    assert search_counterexample(G, 2).status == "verified"


def test_extra_level_admits_a_counterexample():
    # with n levels, "level = number of nonzero coordinates" is conflict-free
    inst = tucker_instance(cyclic_group(2), 3, levels=3)
    out = search_instance(inst)
    assert out.status == "counterexample"
    assert check_labeling(inst, out.counterexample) is None
    lam = labeling_as_map(inst, out.counterexample)
    assert find_noncomparable_image_pair(inst.domain, inst.target, lam) is None
    manual = {x: (inst.domain.labels[x][next(i for i, c in enumerate(inst.domain.labels[x]) if c is not None)],
                  sum(c is not None for c in inst.domain.labels[x])) for x in inst.orbit_reps}
    assert check_labeling(inst, manual) is None


def test_budget_gives_indeterminate():
    out = search_counterexample(cyclic_group(2), 4, budget_ms=1)
    assert out.status == "indeterminate" and out.nodes > 0


def test_labeling_extension_is_equivariant():
    inst = tucker_instance(cyclic_group(3), 2)
    lab = [(g % 3, 1) for g in range(len(inst.orbit_reps))]
    shifts, levels = extend_labeling(inst, lab)
    P = inst.domain
    for g in inst.group.elements:
        for x in range(P.size):
            assert shifts[P.action[g][x]] == inst.group.mul(g, shifts[x])
            assert levels[P.action[g][x]] == levels[x]


def test_parameter_validation():
    with pytest.raises(InvalidParameter):
        tucker_instance(cyclic_group(2), 1)
    with pytest.raises(InvalidParameter):
        tucker_instance(cyclic_group(1), 2)
    with pytest.raises(InvalidParameter):
        tucker_instance(cyclic_group(2), 2, levels=0)
    inst = tucker_instance(cyclic_group(2), 2)
    with pytest.raises(InvalidParameter):
        check_labeling(inst, [(0, 1)])
    with pytest.raises(InvalidParameter):
        check_labeling(inst, [(0, 2)] * len(inst.orbit_reps))
    with pytest.raises(InvalidParameter):
        check_labeling(inst, {inst.orbit_reps[0]: (0, 1)})


def test_target_is_the_prec1_ladder():
    inst = tucker_instance(cyclic_group(3), 3)
    assert inst.target == ladder_poset(cyclic_group(3), 2, "prec1")
    assert inst.levels == 2


@pytest.mark.slow
def test_z3_n3_verifies():
    assert search_counterexample(cyclic_group(3), 3).status == "verified"
