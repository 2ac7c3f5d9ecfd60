import random

import pytest

from rla import (
    AllLinksFailedError,
    BadParameterError,
    Link,
    PolicyId,
    PolicyState,
    WfqDirection,
    ZeroCostError,
    olb_select,
    rr_select,
    validate_group,
    vrrp_preference,
    vrrp_select,
    wfq_select,
    wfq_weights,
)


def group(*caps, costs=None, thresholds=None):
    costs = costs or [1.0] * len(caps)
    links = []
    for i, c in enumerate(caps):
        thr = thresholds[i] if thresholds else None
        links.append(Link(id=f"l{i}", capacity=c, priority=i + 1,
                          cost_per_gb=costs[i], threshold=thr))
    return validate_group("g", links)


def test_policy_id_parse():
    assert PolicyId.parse("OLB") is PolicyId.OLB
    assert PolicyId.parse(" rr ") is PolicyId.ROUND_ROBIN
    with pytest.raises(BadParameterError, match="unknown policy"):
        PolicyId.parse("bogus")


def test_wfq_direction_parse():
    assert WfqDirection.parse("inverse") is WfqDirection.INVERSE_COST
    with pytest.raises(BadParameterError):
        WfqDirection.parse("sideways")


# --- spillover selection ---

def test_olb_picks_first_link_below_threshold():
    g = group(10.0, 10.0, 10.0)
    assert olb_select(g) == 0
    g.links[0].buffer = g.links[0].threshold
    assert olb_select(g) == 1
    g.links[1].buffer = g.links[1].threshold
    assert olb_select(g) == 2


def test_olb_all_full_falls_through_to_last():
    g = group(10.0, 10.0)
    for l in g.links:
        l.buffer = l.threshold
    assert olb_select(g) == 1


def test_olb_ignores_lower_priority_backlog():
    # backlog on the backup must not push traffic off an idle primary
    g = group(10.0, 10.0)
    g.links[1].buffer = g.links[1].threshold
    assert olb_select(g) == 0


# --- round robin ---

def test_rr_cycles_in_priority_order():
    g = group(1.0, 1.0, 1.0)
    st = PolicyState()
    picks = [rr_select(g, st) for _ in range(7)]
    assert picks == [0, 1, 2, 0, 1, 2, 0]


def test_rr_exact_fairness():
    g = group(1.0, 1.0, 1.0, 1.0)
    st = PolicyState()
    counts = [0] * 4
    for _ in range(4 * 25):
        counts[rr_select(g, st)] += 1
    assert counts == [25, 25, 25, 25]


# --- weighted fair queue ---

def test_wfq_weights_symmetric():
    assert wfq_weights(group(1.0, 1.0)) == [0.5, 0.5]


def test_wfq_weights_inverse_favours_cheap():
    assert wfq_weights(group(1.0, 1.0, costs=[1.0, 3.0])) == [0.75, 0.25]


def test_wfq_weights_three_links():
    w = wfq_weights(group(1.0, 1.0, 1.0, costs=[2.0, 2.0, 4.0]))
    assert w == pytest.approx([0.4, 0.4, 0.2], abs=1e-12)


def test_wfq_weights_direct_follows_cost():
    w = wfq_weights(group(1.0, 1.0, costs=[1.0, 3.0]), WfqDirection.DIRECT_COST)
    assert w == [0.25, 0.75]


def test_wfq_weights_zero_cost_rejected_inverse_only():
    g = group(1.0, 1.0, costs=[0.0, 2.0])
    with pytest.raises(ZeroCostError):
        wfq_weights(g)
    assert wfq_weights(g, WfqDirection.DIRECT_COST) == [0.0, 1.0]


def test_wfq_select_matches_weights_within_one():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 5)
        g = group(*[1.0] * n, costs=[rng.uniform(0.1, 5.0) for _ in range(n)])
        w = wfq_weights(g)
        st = PolicyState()
        q = rng.randint(1, 200)
        counts = [0] * n
        for _ in range(q):
            counts[wfq_select(g, st, w)] += 1
        for i in range(n):
            assert abs(counts[i] - q * w[i]) <= 1.0 + 1e-9


def test_wfq_select_three_to_one_split():
    g = group(1.0, 1.0, costs=[1.0, 3.0])
    st = PolicyState()
    w = wfq_weights(g)
    counts = [0, 0]
    for _ in range(8):
        counts[wfq_select(g, st, w)] += 1
    assert counts == [6, 2]


# --- single-master baseline ---

def test_vrrp_prefers_highest_capacity():
    g = group(4.0, 16.0, 16.0)
    assert vrrp_preference(g) == [1, 2, 0]
    st = PolicyState()
    assert vrrp_select(g, st) == 1
    assert st.vrrp_master == "l1"


def test_vrrp_fails_over_and_preempts_back():
    g = group(4.0, 16.0, 16.0)
    st = PolicyState()
    assert vrrp_select(g, st, failed=frozenset({"l1"})) == 2
    assert vrrp_select(g, st, failed=frozenset({"l1", "l2"})) == 0
    assert vrrp_select(g, st) == 1  # master restored, preemptive takeover


def test_vrrp_all_links_down():
    g = group(4.0, 16.0)
    with pytest.raises(AllLinksFailedError):
        vrrp_select(g, PolicyState(), failed=frozenset({"l0", "l1"}))
