from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from fairauction import (
    AuctionInstance,
    Bid,
    Bidder,
    FairnessMatrix,
    InvalidInstance,
    OverlappingSets,
    Package,
    Resource,
    UnknownResource,
    fair_value,
    package_fair_value,
    render_money,
    render_percent,
    validate_instance,
)


def matrix(owner, values):
    return FairnessMatrix(owner, {f"r{i}": Fraction(v) for i, v in enumerate(values)})


def test_fair_value_subset(walkthrough_instance):
    b0_fairness = walkthrough_instance.bidders[0].fairness
    assert fair_value(b0_fairness, {"r0", "r2"}) == 13


def test_fair_value_empty_set_is_zero():
    assert fair_value(matrix("x", [5, 8, 8]), frozenset()) == 0


def test_fair_value_whole_set(walkthrough_instance):
    b1_fairness = walkthrough_instance.bidders[1].fairness
    assert fair_value(b1_fairness, {"r0", "r1", "r2"}) == 20


def test_fair_value_unknown_resource():
    with pytest.raises(UnknownResource):
        fair_value(matrix("x", [1, 2]), {"r9"})


def test_package_fair_value_single_set():
    b0_fairness = matrix("b0", [5, 8, 8])
    assert package_fair_value(b0_fairness, Package("b0", (frozenset({"r0", "r1", "r2"}),))) == 21


def test_package_fair_value_empty_package():
    assert package_fair_value(matrix("x", [3]), Package("x", ())) == 0


def test_package_fair_value_disjoint_sets():
    fairness = matrix("auctioneer", [8, 10, 15])
    pkg = Package("b0", (frozenset({"r0"}), frozenset({"r1", "r2"})))
    # hand sum 8 + (10 + 15), cross-checked per resource below
    assert package_fair_value(fairness, pkg) == 33
    assert package_fair_value(fairness, pkg) == sum(
        fairness.entries[r] for s in pkg.sets for r in s
    )


def test_package_fair_value_rejects_overlap():
    fairness = matrix("x", [1, 2, 3])
    with pytest.raises(OverlappingSets):
        package_fair_value(
            fairness, Package("x", (frozenset({"r0", "r1"}), frozenset({"r1"})))
        )


def test_fair_value_additive_exhaustive():
    # every disjoint pair of subsets over 6 resources
    m = 6
    fairness = matrix("x", [3, 1, 4, 1, 5, 9])
    ids = [f"r{i}" for i in range(m)]
    subsets = []
    for size in range(m + 1):
        subsets.extend(frozenset(c) for c in combinations(ids, size))
    for a in subsets:
        for b in subsets:
            if a & b:
                continue
            assert fair_value(fairness, a | b) == fair_value(fairness, a) + fair_value(fairness, b)


@given(
    values=st.lists(st.integers(min_value=0, max_value=50), min_size=1, max_size=6),
    data=st.data(),
)
def test_package_value_equals_union_value(values, data):
    m = len(values)
    fairness = matrix("x", values)
    ids = [f"r{i}" for i in range(m)]
    assignment = data.draw(
        st.lists(st.integers(min_value=0, max_value=2), min_size=m, max_size=m)
    )
    # group 0 is "unassigned"; groups 1..2 become package sets
    sets = tuple(
        frozenset(rid for rid, g in zip(ids, assignment) if g == group)
        for group in (1, 2)
    )
    sets = tuple(s for s in sets if s)
    union = frozenset().union(*sets) if sets else frozenset()
    assert package_fair_value(fairness, Package("x", sets)) == fair_value(fairness, union)


def _instance(bids_b0=None, extra_bidder=None):
    resources = tuple(Resource(f"r{i}", i) for i in range(2))
    b0 = Bidder(
        "b0",
        matrix("b0", [1, 2]),
        tuple(bids_b0 or (Bid("b0", frozenset({"r0"}), Fraction(5)),)),
    )
    bidders = (b0,) + ((extra_bidder,) if extra_bidder else ())
    return AuctionInstance(resources, bidders, matrix("auctioneer", [1, 1]))


def test_validate_accepts_walkthrough_instance(walkthrough_instance):
    assert validate_instance(walkthrough_instance) is walkthrough_instance


def test_validate_is_idempotent(walkthrough_instance):
    once = validate_instance(walkthrough_instance)
    assert validate_instance(once) is once


def test_validate_unknown_resource_in_bid():
    inst = _instance(bids_b0=[Bid("b0", frozenset({"r9"}), Fraction(1))])
    with pytest.raises(InvalidInstance) as exc:
        validate_instance(inst)
    codes = {v.code for v in exc.value.violations}
    assert "unknown_resource_in_bid" in codes
    assert any("r9" in v.message for v in exc.value.violations)


def test_validate_duplicate_bid():
    inst = _instance(
        bids_b0=[
            Bid("b0", frozenset({"r0", "r1"}), Fraction(3)),
            Bid("b0", frozenset({"r0", "r1"}), Fraction(4)),
        ]
    )
    with pytest.raises(InvalidInstance) as exc:
        validate_instance(inst)
    assert {v.code for v in exc.value.violations} == {"duplicate_bidder_bid"}


def test_validate_negative_amount_and_matrix_mismatch():
    bad_bidder = Bidder(
        "b1",
        FairnessMatrix("b1", {"r0": Fraction(1)}),  # missing r1
        (Bid("b1", frozenset({"r0"}), Fraction(-2)),),
    )
    with pytest.raises(InvalidInstance) as exc:
        validate_instance(_instance(extra_bidder=bad_bidder))
    codes = {v.code for v in exc.value.violations}
    assert codes == {"matrix_resource_mismatch", "negative_amount"}
    assert any("b1" in v.message for v in exc.value.violations)


def test_validate_collects_all_violations():
    bad_bidder = Bidder(
        "b0",  # duplicate id as well
        FairnessMatrix("b0", {"r0": Fraction(1), "r1": Fraction(1), "r9": Fraction(1)}),
        (Bid("b0", frozenset(), Fraction(1)),),
    )
    with pytest.raises(InvalidInstance) as exc:
        validate_instance(_instance(extra_bidder=bad_bidder))
    codes = {v.code for v in exc.value.violations}
    assert {"duplicate_bidder_id", "matrix_resource_mismatch", "empty_bid_items"} <= codes


def test_render_money_half_up():
    assert render_money(Fraction(1450, 59)) == "24.58"
    assert render_money(Fraction(1500, 59)) == "25.42"
    assert render_money(Fraction(50)) == "50.00"
    assert render_money(Fraction(1, 8)) == "0.13"  # 0.125 rounds up
    assert render_money(Fraction(0)) == "0.00"


def test_render_percent():
    assert render_percent(Fraction(29, 59)) == "49.15%"
    assert render_percent(Fraction(30, 59)) == "50.85%"
    assert render_percent(Fraction(1, 2)) == "50.00%"
