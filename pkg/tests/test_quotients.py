"""Quotient maps, generated subgroups, preimage lifting."""

import pytest

from critnum import (
    GroupSubset,
    GroupType,
    InvalidIndex,
    QuotientUnavailable,
    SpecMismatch,
    abelian_types,
    cyclic,
    is_generating,
    kernel_subset,
    lift_preimage,
    project,
    project_index,
    project_subset,
    quotient_spec,
    quotient_type_feasible,
    spec_for_quotient_type,
    subgroup_generated,
)


def test_greedy_divisor_vector():
    # the index is absorbed into the top coordinate first
    assert quotient_spec(GroupType((2, 4)), 4).divisor_vector == (1, 4)
    assert quotient_spec(GroupType((2, 4)), 2).divisor_vector == (1, 2)
    assert quotient_spec(GroupType((2, 4)), 8).divisor_vector == (2, 4)
    assert quotient_spec(GroupType((2, 2)), 4).divisor_vector == (2, 2)
    assert quotient_spec(cyclic(12), 6).divisor_vector == (6,)
    assert quotient_spec(GroupType((2, 2, 4)), 4).divisor_vector == (1, 1, 4)


def test_quotient_spec_every_divisor_realizable():
    for n in range(2, 17):
        for g in abelian_types(n):
            for d in g.divisor_list():
                if d < 2:
                    continue
                spec = quotient_spec(g, d)
                assert spec.index == d
                assert spec.quotient.order == d
                assert len(spec.divisor_vector) == g.rank


def test_quotient_spec_errors():
    g = GroupType((2, 4))
    with pytest.raises(InvalidIndex):
        quotient_spec(g, 1)
    with pytest.raises(InvalidIndex):
        quotient_spec(g, 3)
    with pytest.raises(InvalidIndex):
        quotient_spec(g, 16)


def test_projection_is_homomorphism():
    for g, d in ((GroupType((2, 4)), 4), (cyclic(12), 6), (GroupType((2, 2, 4)), 8)):
        spec = quotient_spec(g, d)
        q = spec.quotient
        for i in range(g.order):
            for j in range(g.order):
                x, y = g.decode(i), g.decode(j)
                assert project(spec, g.add(x, y)) == q.add(project(spec, x), project(spec, y))
        images = {project_index(spec, i) for i in range(g.order)}
        assert images == set(range(d))


def test_project_and_lift_roundtrip():
    g = GroupType((2, 4))
    spec = quotient_spec(g, 4)
    b = GroupSubset.from_indices(spec.quotient, [0, 3])
    lifted = lift_preimage(spec, b)
    assert lifted.size == b.size * g.order // spec.index
    assert project_subset(spec, lifted) == b


def test_kernel():
    g = GroupType((2, 4))
    spec = quotient_spec(g, 4)
    ker = kernel_subset(spec)
    assert ker.size == g.order // spec.index
    assert subgroup_generated(ker) == ker
    assert set(ker.elements()) == {(0, 0), (1, 0)}


def test_cross_group_projection_rejected():
    spec = quotient_spec(cyclic(12), 6)
    with pytest.raises(SpecMismatch):
        project_subset(spec, GroupSubset.from_indices(cyclic(10), [0]))
    with pytest.raises(SpecMismatch):
        lift_preimage(spec, GroupSubset.from_indices(cyclic(12), [0]))


def test_quotient_type_feasibility_rule():
    g = GroupType((2, 4))
    assert quotient_type_feasible(g, (2,))
    assert quotient_type_feasible(g, (4,))
    assert quotient_type_feasible(g, (2, 2))
    assert quotient_type_feasible(g, (2, 4))
    assert not quotient_type_feasible(g, (8,))
    assert not quotient_type_feasible(g, (2, 2, 2))
    assert not quotient_type_feasible(g, (4, 2))  # not a divisor chain
    assert not quotient_type_feasible(g, ())
    assert quotient_type_feasible(GroupType((2, 2, 4)), (2, 2))
    assert not quotient_type_feasible(GroupType((2, 2, 4)), (4, 4))


def test_spec_for_quotient_type():
    g = GroupType((2, 4))
    spec = spec_for_quotient_type(g, (2, 2))
    assert spec.quotient.factors == (2, 2)
    assert spec.index == 4
    assert spec.divisor_vector == (2, 2)
    with pytest.raises(QuotientUnavailable):
        spec_for_quotient_type(cyclic(4), (2, 2))
    with pytest.raises(QuotientUnavailable):
        spec_for_quotient_type(g, (8,))


def test_subgroup_generated():
    g = cyclic(6)
    assert set(subgroup_generated(GroupSubset.empty(g)).indices()) == {0}
    assert set(subgroup_generated(GroupSubset.from_indices(g, [2])).indices()) == {0, 2, 4}
    assert set(subgroup_generated(GroupSubset.from_indices(g, [2, 3])).indices()) == {0, 1, 2, 3, 4, 5}
    v4 = GroupType((2, 2))
    assert subgroup_generated(GroupSubset.from_elements(v4, [(1, 0)])).size == 2


def test_is_generating():
    g = cyclic(10)
    assert is_generating(GroupSubset.from_indices(g, [1]))
    assert is_generating(GroupSubset.from_indices(g, [3]))
    assert not is_generating(GroupSubset.from_indices(g, [2, 4]))
    assert not is_generating(GroupSubset.from_indices(g, [5]))
    v4 = GroupType((2, 2))
    assert not is_generating(GroupSubset.from_elements(v4, [(1, 0)]))
    assert is_generating(GroupSubset.from_elements(v4, [(1, 0), (0, 1)]))


def test_generated_subgroup_is_closed_under_addition():
    g = GroupType((2, 6))
    sub = subgroup_generated(GroupSubset.from_elements(g, [(1, 0), (0, 2)]))
    elems = list(sub.elements())
    for x in elems:
        for y in elems:
            assert sub.contains(g.add(x, y))
    assert sub.size == 6
