"""Extremal-set constructions and quotient-coset lower-bound certificates."""

import pytest

from critnum import (
    ConditionViolated,
    GroupSubset,
    GroupType,
    QuotientUnavailable,
    abelian_types,
    best_interval_bound,
    cyclic,
    generating_interval_critical_cyclic,
    generating_interval_critical_two_group,
    hfold_sumset,
    hfold_witness,
    interval_bound_witness,
    interval_sumset,
    interval_witness,
    is_complete,
    is_generating,
    max_incomplete_size,
    subgroup_generated,
)


def test_hfold_witness_prime_branch():
    cert = hfold_witness(cyclic(7), 2)
    assert set(cert.subset.indices()) == {1, 2, 3}
    assert cert.branch == "prime"
    assert cert.claimed_size == 3
    assert cert.generates and cert.incomplete


def test_hfold_witness_product_branch():
    cert = hfold_witness(cyclic(9), 2)
    assert set(cert.subset.indices()) == {1, 2, 3, 4}
    assert cert.branch == "product"


def test_hfold_witness_quotient_branch():
    g = GroupType((2, 4))
    cert = hfold_witness(g, 3)
    assert cert.branch == "quotient"
    assert cert.claimed_size == 4
    # preimage of the inner witness under reduction of the top coordinate
    assert set(cert.subset.elements()) == {(0, 1), (1, 1), (0, 3), (1, 3)}


def test_hfold_witness_tiny_group():
    cert = hfold_witness(cyclic(2), 5)
    assert set(cert.subset.indices()) == {1}
    assert cert.claimed_size == 1


def test_hfold_witness_grid_consistency():
    # the full desk-scale grid runs in the acceptance suite
    for n in range(2, 33):
        for g in abelian_types(n):
            for h in (1, 2, 3, 5):
                cert = hfold_witness(g, h)
                assert cert.claimed_size == max_incomplete_size(n, h)
                assert cert.subset.size == cert.claimed_size
                assert is_generating(cert.subset)
                assert not is_complete(hfold_sumset(cert.subset, h))


def test_interval_witness_contains_zero():
    for n, s in ((7, 2), (10, 3), (16, 2), (9, 4)):
        for g in abelian_types(n):
            cert = interval_witness(g, s)
            assert cert.branch == "translate"
            assert cert.subset.contains_index(0)
            assert cert.claimed_size == max_incomplete_size(n, s)
            assert not is_complete(interval_sumset(cert.subset, s))


def test_interval_bound_witness_cyclic():
    cert = interval_bound_witness(cyclic(6), (6,), (2,), 2)
    assert cert.bound == 4
    assert set(cert.witness.indices()) == {0, 1, 2}
    assert cert.generates and cert.incomplete
    assert not cert.is_trivial


def test_interval_bound_witness_product():
    g = GroupType((2, 2, 4))
    cert = interval_bound_witness(g, (2, 4), (1, 1), 3)
    assert cert.bound == 7
    assert cert.witness.size == 6
    assert cert.quotient_type == (2, 4)
    assert cert.c_vector == (1, 1)
    assert subgroup_generated(cert.witness).size == g.order
    assert not is_complete(interval_sumset(cert.witness, 3))


def test_interval_bound_witness_conditions():
    g = cyclic(6)
    with pytest.raises(ConditionViolated):
        interval_bound_witness(g, (6,), (2, 1), 2)  # length mismatch
    with pytest.raises(ConditionViolated):
        interval_bound_witness(g, (6,), (0,), 2)
    with pytest.raises(ConditionViolated):
        interval_bound_witness(g, (6,), (6,), 2)
    with pytest.raises(ConditionViolated):
        interval_bound_witness(g, (6,), (5,), 2)  # ceiling sum 1 < 3
    with pytest.raises(QuotientUnavailable):
        interval_bound_witness(cyclic(4), (2, 2), (1, 1), 2)


def test_best_interval_bound_rank_four():
    cert = best_interval_bound(GroupType((2, 2, 2, 2)), 2)
    assert cert.bound == 9
    assert cert.quotient_type == (2, 2, 2)
    assert cert.c_vector == (1, 1, 1)
    assert cert.witness.size == 8
    assert cert.generates and cert.incomplete


def test_best_interval_bound_trivial_cases():
    for group, s in ((cyclic(4), 3), (cyclic(2), 2), (cyclic(2), 4), (cyclic(3), 4)):
        cert = best_interval_bound(group, s)
        assert cert.is_trivial
        assert cert.bound == 1
        assert cert.witness is None
        assert cert.quotient_type == ()


def test_best_interval_bound_meets_cyclic_formula():
    for n in range(2, 101):
        for s in range(1, 6):
            cert = best_interval_bound(cyclic(n), s)
            assert cert.bound == generating_interval_critical_cyclic(n, s)


def test_best_interval_bound_meets_two_group_formula():
    for r in range(1, 9):
        g = GroupType((2,) * r)
        for s in range(2, 7):
            cert = best_interval_bound(g, s)
            assert cert.bound == generating_interval_critical_two_group(r, s)


def test_witness_json_roundtrip():
    g = GroupType((2, 4))
    cert = hfold_witness(g, 3)
    payload = cert.to_json_dict()
    assert payload["group"] == "2,4"
    assert payload["mode"] == "hfold"
    assert payload["param"] == 3
    assert payload["size"] == 4
    assert payload["generates"] is True and payload["incomplete"] is True
    assert GroupSubset.from_element_list(g, payload["elements"]) == cert.subset


def test_bound_json_roundtrip():
    g = GroupType((2, 2, 2, 2))
    payload = best_interval_bound(g, 2).to_json_dict()
    assert payload["group"] == "2,2,2,2"
    assert payload["quotient_type"] == [2, 2, 2]
    assert payload["c_vector"] == [1, 1, 1]
    assert payload["bound"] == 9
    assert GroupSubset.from_element_list(g, payload["elements"]).size == 8
    trivial = best_interval_bound(cyclic(2), 3).to_json_dict()
    assert trivial["bound"] == 1
    assert trivial["elements"] is None
