"""Elements, observations and entropy bookkeeping.

An element starts featureless (one state, zero entropy).  Each observation it
performs splits it once, doubling its state count, so an element that has
observed ``k`` times holds ``T ln 2**k`` nats.  Accounting is kept in integer
*splits* (one split = ``T ln 2`` physical nats) so that every ledger identity
can be checked exactly; physical values are derived on demand.

Networks are immutable: every operation returns a new network.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, replace
from typing import Iterable

K_B = 1.380649e-23  # J/K, exact since the 2019 SI redefinition
LN2 = math.log(2.0)

ROLES = ("input", "output", "environment", "plain")
ENVIRONMENT_ID = "env"


class NetworkError(ValueError):
    """Raised when an operation would break a network invariant."""


def _check_temperature(temperature: float) -> None:
    if not temperature > 0:
        raise ValueError(f"temperature must be positive, got {temperature!r}")


def element_entropy(splits: int, temperature: float = 1.0) -> float:
    """Entropy ``T ln m`` of an element with ``m = 2**splits`` states, in nats."""
    _check_temperature(temperature)
    if splits < 0:
        raise ValueError("splits must be non-negative")
    return splits * temperature * LN2


def landauer_energy(temperature_kelvin: float) -> float:
    """Minimum energy in joules to change one bit at ``temperature_kelvin``."""
    _check_temperature(temperature_kelvin)
    return K_B * temperature_kelvin * LN2


def binary_entropy(p: float) -> float:
    """Binary entropy ``H(p)`` in nats, with ``H(0) = H(1) = 0``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log(p) - (1.0 - p) * math.log1p(-p)


def transition_profile(t: float, mode: str = "kronecker") -> float:
    """Entropy of an element part-way through a state change.

    ``t`` runs from 0 (before) to 1 (after) with the midpoint at 0.5.  In
    ``kronecker`` mode the change is an instantaneous peak of height 1 at the
    midpoint; ``binary_entropy`` mode follows ``H(t)``.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t!r}")
    if mode == "kronecker":
        return 1.0 if t == 0.5 else 0.0
    if mode in ("binary_entropy", "hp"):
        return binary_entropy(t)
    raise ValueError(f"unknown transition mode {mode!r}")


@dataclass(frozen=True)
class Element:
    id: str
    splits: int = 0
    role: str = "plain"

    def __post_init__(self):
        if not self.id:
            raise NetworkError("element id must be non-empty")
        if self.splits < 0:
            raise NetworkError("splits must be non-negative")
        if self.role not in ROLES:
            raise NetworkError(f"unknown role {self.role!r}")

    @property
    def states(self) -> int:
        return 2 ** self.splits


@dataclass(frozen=True)
class ObservationEdge:
    """``observer`` observes ``observed``; the observer is the one that splits."""

    observer: str
    observed: str
    order: int


@dataclass(frozen=True)
class LedgerStep:
    """One ledger record.

    ``kind`` is ``"observe"`` (``delta`` splits gained by ``observer``) or
    ``"dissipate"`` (``delta`` splits passed from ``observed`` to the
    environment, which is then the observer).  ``env_absorbed`` is the running
    environment total after the step.
    """

    order: int
    observer: str
    observed: str
    delta: int
    env_absorbed: int
    kind: str = "observe"


@dataclass(frozen=True)
class EntropyLedger:
    entropy: dict
    environment_absorbed: float
    steps: tuple


@dataclass(frozen=True)
class ObservationNetwork:
    elements: tuple = ()
    edges: tuple = ()
    temperature: float = 1.0
    env_absorbed: int = 0  # splits
    log: tuple = field(default=(), compare=False)

    def __post_init__(self):
        _check_temperature(self.temperature)
        ids = [e.id for e in self.elements]
        if len(set(ids)) != len(ids):
            raise NetworkError("duplicate element ids")

    @classmethod
    def from_ids(cls, ids: Iterable[str], temperature: float = 1.0, roles: dict | None = None):
        roles = roles or {}
        return cls(tuple(Element(i, role=roles.get(i, "plain")) for i in ids), temperature=temperature)

    # lookups ---------------------------------------------------------------

    @property
    def ids(self) -> tuple:
        return tuple(e.id for e in self.elements)

    def element(self, element_id: str) -> Element:
        for e in self.elements:
            if e.id == element_id:
                return e
        raise NetworkError(f"no element {element_id!r}")

    def has_edge(self, observer: str, observed: str) -> bool:
        return any(e.observer == observer and e.observed == observed for e in self.edges)

    def out_degree(self, element_id: str) -> int:
        return sum(1 for e in self.edges if e.observer == element_id)

    def in_degree(self, element_id: str) -> int:
        return sum(1 for e in self.edges if e.observed == element_id)

    @property
    def arcs(self) -> frozenset:
        return frozenset((e.observer, e.observed) for e in self.edges)

    def splits(self, element_id: str) -> int:
        return self.element(element_id).splits

    def entropy(self, element_id: str) -> float:
        return element_entropy(self.splits(element_id), self.temperature)

    @property
    def environment_absorbed(self) -> float:
        return self.env_absorbed * self.temperature * LN2

    @property
    def next_order(self) -> int:
        return len(self.log)

    def ledger(self) -> EntropyLedger:
        return EntropyLedger(
            entropy={e.id: self.entropy(e.id) for e in self.elements},
            environment_absorbed=self.environment_absorbed,
            steps=self.log,
        )

    def _with_element(self, new: Element) -> "ObservationNetwork":
        return replace(self, elements=tuple(new if e.id == new.id else e for e in self.elements))

    def add_element(self, element_id: str, role: str = "plain") -> "ObservationNetwork":
        if element_id in self.ids:
            raise NetworkError(f"element {element_id!r} already exists")
        return replace(self, elements=self.elements + (Element(element_id, role=role),))


def observe(
    network: ObservationNetwork,
    observer: str,
    observed: str,
    *,
    dissipate: bool = False,
    erase: bool = False,
) -> ObservationNetwork:
    """Record that ``observer`` observes ``observed``.

    The observer splits once.  With ``dissipate=True`` the observer
    immediately passes its entropy to the environment (see
    :func:`dissipate_to_environment`).
    """
    src = network.element(observer)
    network.element(observed)
    if observer == observed:
        raise NetworkError("an element cannot observe itself")
    if network.has_edge(observer, observed):
        raise NetworkError(f"duplicate observation {observer}->{observed}")
    order = network.next_order
    step = LedgerStep(order, observer, observed, 1, network.env_absorbed)
    out = replace(
        network._with_element(replace(src, splits=src.splits + 1)),
        edges=network.edges + (ObservationEdge(observer, observed, order),),
        log=network.log + (step,),
    )
    if dissipate:
        out = dissipate_to_environment(out, observer, erase=erase)
    return out


def dissipate_to_environment(network: ObservationNetwork, element: str, *, erase: bool = False) -> ObservationNetwork:
    """Pass ``element``'s current entropy to the environment.

    In the default retain mode the element keeps its splits (its record of
    the observation); ``erase=True`` models a memoryless element that is reset
    to a single state.  An element with no splits leaves the network as is.
    """
    el = network.element(element)
    if el.splits == 0:
        return network
    absorbed = network.env_absorbed + el.splits
    step = LedgerStep(network.next_order, ENVIRONMENT_ID, element, el.splits, absorbed, kind="dissipate")
    out = replace(network, env_absorbed=absorbed, log=network.log + (step,))
    if erase:
        out = out._with_element(replace(el, splits=0))
    return out


def observe_all(network: ObservationNetwork, pairs: Iterable[tuple], **kwargs) -> ObservationNetwork:
    for observer, observed in pairs:
        network = observe(network, observer, observed, **kwargs)
    return network


def network_from_arcs(arcs: Iterable[tuple], temperature: float = 1.0, roles: dict | None = None) -> ObservationNetwork:
    """Build a network over the endpoints of ``arcs``, observing in the given order."""
    arcs = list(arcs)
    ids = []
    for pair in arcs:
        for i in pair:
            if i not in ids:
                ids.append(i)
    return observe_all(ObservationNetwork.from_ids(ids, temperature, roles), arcs)


# serialization ---------------------------------------------------------------

def network_to_dict(network: ObservationNetwork) -> dict:
    return {
        "temperature": network.temperature,
        "elements": [{"id": e.id, "role": e.role} for e in network.elements],
        "edges": [{"observer": e.observer, "observed": e.observed, "order": e.order} for e in network.edges],
    }


def network_to_json(network: ObservationNetwork, **kwargs) -> str:
    return json.dumps(network_to_dict(network), **kwargs)


def network_from_dict(data: dict) -> ObservationNetwork:
    try:
        net = ObservationNetwork(
            tuple(Element(str(e["id"]), role=e.get("role", "plain")) for e in data["elements"]),
            temperature=float(data.get("temperature", 1.0)),
        )
        edges = sorted(data.get("edges", []), key=lambda e: int(e["order"]))
        orders = [int(e["order"]) for e in edges]
    except (KeyError, TypeError) as exc:
        raise NetworkError(f"malformed network document: {exc}") from exc
    if len(set(orders)) != len(orders):
        raise NetworkError("edge order indices must be unique")
    return observe_all(net, [(str(e["observer"]), str(e["observed"])) for e in edges])


def network_from_json(text: str) -> ObservationNetwork:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetworkError(f"invalid JSON: {exc}") from exc
    return network_from_dict(data)


LEDGER_COLUMNS = ("order", "observer", "observed", "delta_model_nats", "delta_physical_nats", "env_absorbed")


def ledger_csv(network: ObservationNetwork) -> str:
    """Ledger as CSV; ``env_absorbed`` is in physical nats."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(LEDGER_COLUMNS)
    unit = network.temperature * LN2
    for s in network.log:
        w.writerow([s.order, s.observer, s.observed, s.delta, repr(s.delta * unit), repr(s.env_absorbed * unit)])
    return buf.getvalue()
