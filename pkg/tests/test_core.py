import math

import pytest
from hypothesis import given, strategies as st

from entropy_nand.core import (
    NetworkError,
    ObservationNetwork,
    binary_entropy,
    dissipate_to_environment,
    element_entropy,
    landauer_energy,
    ledger_csv,
    network_from_arcs,
    network_from_json,
    network_to_json,
    observe,
    transition_profile,
)


@pytest.mark.parametrize("splits, expected", [(0, 0.0), (1, math.log(2)), (2, math.log(4))])
def test_element_entropy(splits, expected):
    assert element_entropy(splits, 1.0) == pytest.approx(expected, abs=1e-9)


def test_element_entropy_rejects_bad_temperature():
    with pytest.raises(ValueError):
        element_entropy(1, 0.0)
    with pytest.raises(ValueError):
        element_entropy(1, -2.0)


@given(st.integers(0, 40), st.integers(0, 40), st.floats(0.01, 1e4))
def test_element_entropy_additive(k1, k2, t):
    assert element_entropy(k1 + k2, t) == pytest.approx(element_entropy(k1, t) + element_entropy(k2, t), rel=1e-12)


def test_observe_splits_observer_only():
    net = observe(ObservationNetwork.from_ids("ab"), "b", "a")
    assert net.splits("b") == 1
    assert net.splits("a") == 0
    assert net.entropy("b") == pytest.approx(math.log(2))


def test_observing_two_elements_gives_ln4():
    net = ObservationNetwork.from_ids("oab")
    net = observe(observe(net, "o", "a"), "o", "b")
    assert net.splits("o") == 2
    assert net.entropy("o") == pytest.approx(math.log(4))


def test_duplicate_and_self_observation_rejected():
    net = observe(ObservationNetwork.from_ids("ab"), "b", "a")
    with pytest.raises(NetworkError):
        observe(net, "b", "a")
    with pytest.raises(NetworkError):
        observe(net, "a", "a")
    with pytest.raises(NetworkError):
        observe(net, "a", "zz")


def test_networks_are_values():
    base = ObservationNetwork.from_ids("ab")
    observe(base, "a", "b")
    assert base.edges == ()
    assert base.splits("a") == 0


def test_dissipation_retain_and_erase():
    net = observe(ObservationNetwork.from_ids("ab"), "b", "a")
    kept = dissipate_to_environment(net, "b")
    assert kept.environment_absorbed == pytest.approx(math.log(2))
    assert kept.splits("b") == 1
    erased = dissipate_to_environment(net, "b", erase=True)
    assert erased.environment_absorbed == pytest.approx(math.log(2))
    assert erased.splits("b") == 0


def test_dissipating_fresh_element_is_noop():
    net = ObservationNetwork.from_ids("ab")
    assert dissipate_to_environment(net, "a") is net


def test_landauer_energy():
    # frozen from mpmath at 30 digits: mpf("1.380649e-23") * T * log(2)
    assert landauer_energy(300.0) == pytest.approx(2.87097888507872379e-21, abs=1e-25)
    assert landauer_energy(1.0) == pytest.approx(9.56992961692907932e-24, abs=1e-28)
    assert landauer_energy(600.0) == 2 * landauer_energy(300.0)
    with pytest.raises(ValueError):
        landauer_energy(0.0)


def test_binary_entropy_values():
    assert binary_entropy(0.5) == pytest.approx(math.log(2), abs=1e-15)
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    # -0.25 ln 0.25 - 0.75 ln 0.75 = 0.346574 + 0.215762
    assert binary_entropy(0.25) == pytest.approx(0.5623, abs=1e-4)
    for bad in (-0.1, 1.1):
        with pytest.raises(ValueError):
            binary_entropy(bad)


@given(st.floats(0.0, 1.0))
def test_binary_entropy_symmetric_and_bounded(p):
    assert binary_entropy(p) == pytest.approx(binary_entropy(1 - p), abs=1e-12)
    assert 0.0 <= binary_entropy(p) <= math.log(2) + 1e-15


def test_transition_profile():
    assert transition_profile(0.5, "kronecker") == 1
    assert transition_profile(0.3, "kronecker") == 0
    assert transition_profile(0.5, "binary_entropy") == pytest.approx(math.log(2))
    with pytest.raises(ValueError):
        transition_profile(1.5, "kronecker")
    with pytest.raises(ValueError):
        transition_profile(0.5, "gaussian")


ids = st.sampled_from(list("abcde"))


@st.composite
def observation_runs(draw):
    """A random sequence of valid observe/dissipate operations."""
    net = ObservationNetwork.from_ids("abcde", temperature=draw(st.floats(0.1, 10.0)))
    erase = draw(st.booleans())
    for _ in range(draw(st.integers(0, 15))):
        u, w = draw(ids), draw(ids)
        if draw(st.booleans()) and u != w and not net.has_edge(u, w):
            net = observe(net, u, w)
        elif draw(st.booleans()):
            net = dissipate_to_environment(net, u, erase=erase)
    return net, erase


@given(observation_runs())
def test_ledger_invariants(run):
    net, erase = run
    envs = [s.env_absorbed for s in net.log]
    assert envs == sorted(envs)
    observed = sum(s.delta for s in net.log if s.kind == "observe")
    assert observed == len(net.edges)
    if erase:
        assert observed == sum(e.splits for e in net.elements) + net.env_absorbed
    else:
        for e in net.elements:
            assert e.splits == net.out_degree(e.id)
            assert net.ledger().entropy[e.id] == e.splits * net.temperature * math.log(2)
    orders = [e.order for e in net.edges]
    assert len(set(orders)) == len(orders)


def test_json_round_trip():
    net = network_from_arcs([("a", "o"), ("o", "b")], temperature=2.5, roles={"a": "input"})
    back = network_from_json(network_to_json(net))
    assert back.arcs == net.arcs
    assert back.temperature == 2.5
    assert back.element("a").role == "input"
    assert [back.splits(i) for i in net.ids] == [net.splits(i) for i in net.ids]


def test_json_rejects_bad_documents():
    with pytest.raises(NetworkError):
        network_from_json("{")
    with pytest.raises(NetworkError):
        network_from_json('{"elements": [{"id": "a"}], "edges": [{"observer": "a", "observed": "a", "order": 0}]}')


def test_ledger_csv():
    net = dissipate_to_environment(network_from_arcs([("b", "a")]), "b")
    lines = ledger_csv(net).splitlines()
    assert lines[0] == "order,observer,observed,delta_model_nats,delta_physical_nats,env_absorbed"
    assert lines[1].startswith("0,b,a,1,")
    assert lines[2].startswith("1,env,b,1,")
    assert float(lines[2].split(",")[-1]) == pytest.approx(math.log(2))
