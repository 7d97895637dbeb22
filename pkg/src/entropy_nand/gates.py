"""The two-observation entropy gate.

Three elements ``a``, ``b`` (inputs) and ``o`` (output).  Each input sets the
direction of its single observation with ``o``:

* input false: the input observes ``o`` (the input splits),
* input true: ``o`` observes the input (``o`` splits).

The output reads ``o``'s entropy.  ``o`` holds one split per true input, so
the normalized output ``u`` is 0, 0.5 or 1, and a threshold on ``u`` gives
NAND (true iff ``u < 0.75``) or NOR (true iff ``u < 0.25``).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .core import ObservationNetwork, element_entropy, network_to_dict, observe
from .patterns import classify_pattern

GATE_IDS = ("a", "b", "o")
KINDS = ("nand", "nor")

# Truth tables are 4-tuples of outputs for inputs (0,0), (0,1), (1,0), (1,1).
INPUT_PAIRS = ((False, False), (False, True), (True, False), (True, True))


def table_of(fn) -> tuple:
    return tuple(bool(fn(a, b)) for a, b in INPUT_PAIRS)


NAND = table_of(lambda a, b: not (a and b))
NOR = table_of(lambda a, b: not (a or b))
AND = table_of(lambda a, b: a and b)
OR = table_of(lambda a, b: a or b)
XOR = table_of(lambda a, b: a != b)
XNOR = table_of(lambda a, b: a == b)

TABLE_NAMES = {
    table_of(lambda a, b: False): "FALSE",
    table_of(lambda a, b: True): "TRUE",
    AND: "AND",
    OR: "OR",
    NAND: "NAND",
    NOR: "NOR",
    XOR: "XOR",
    XNOR: "XNOR",
    table_of(lambda a, b: a): "A",
    table_of(lambda a, b: b): "B",
    table_of(lambda a, b: not a): "NOT_A",
    table_of(lambda a, b: not b): "NOT_B",
    table_of(lambda a, b: a and not b): "A_AND_NOT_B",
    table_of(lambda a, b: b and not a): "B_AND_NOT_A",
    table_of(lambda a, b: a or not b): "A_OR_NOT_B",
    table_of(lambda a, b: b or not a): "B_OR_NOT_A",
}


def table_name(table: tuple) -> str:
    return TABLE_NAMES[tuple(table)]


@dataclass(frozen=True)
class GateReadout:
    """Normalization and thresholds for reading ``o``.

    ``normalization_max`` is in splits (2 splits is ``T ln 4``).  Output is
    true iff ``u`` is strictly below the threshold for the gate kind.
    """

    normalization_max: float = 2.0
    nand_threshold: float = 0.75
    nor_threshold: float = 0.25

    def __post_init__(self):
        if not self.normalization_max > 0:
            raise ValueError("normalization_max must be positive")
        if not 0.5 < self.nand_threshold <= 1.0:
            raise ValueError("nand_threshold must lie in (0.5, 1.0]")
        if not 0.0 < self.nor_threshold <= 0.5:
            raise ValueError("nor_threshold must lie in (0, 0.5]")

    def threshold(self, kind: str) -> float:
        if kind == "nand":
            return self.nand_threshold
        if kind == "nor":
            return self.nor_threshold
        raise ValueError(f"unknown gate kind {kind!r}")


DEFAULT_READOUT = GateReadout()


def build_gate_network(a: bool, b: bool, temperature: float = 1.0) -> ObservationNetwork:
    net = ObservationNetwork.from_ids(GATE_IDS, temperature, roles={"a": "input", "b": "input", "o": "output"})
    for name, value in (("a", a), ("b", b)):
        net = observe(net, "o", name) if value else observe(net, name, "o")
    return net


def gate_entropies(network: ObservationNetwork) -> tuple:
    """``(a_S, b_S, o_S)`` in splits."""
    if set(network.ids) != set(GATE_IDS):
        raise ValueError(f"gate network must have exactly the elements {GATE_IDS}, got {network.ids}")
    return tuple(network.out_degree(i) for i in GATE_IDS)


def normalized_output(o_splits: float, readout: GateReadout = DEFAULT_READOUT) -> float:
    if o_splits < 0:
        raise ValueError("output entropy must be non-negative")
    return min(1.0, max(0.0, o_splits / readout.normalization_max))


def read_gate(u: float, kind: str = "nand", readout: GateReadout = DEFAULT_READOUT) -> bool:
    return u < readout.threshold(kind)


@dataclass(frozen=True)
class GateState:
    inputs: tuple
    kind: str
    network: ObservationNetwork
    entropies: tuple
    u: float
    threshold: float
    output: bool

    @property
    def pattern(self) -> str:
        return classify_pattern(self.network).kind

    def to_dict(self) -> dict:
        t = self.network.temperature
        return {
            "kind": self.kind,
            "inputs": [int(x) for x in self.inputs],
            "network": network_to_dict(self.network),
            "pattern": self.pattern,
            "entropies": {
                name: {"splits": s, "physical_nats": element_entropy(s, t)}
                for name, s in zip(GATE_IDS, self.entropies)
            },
            "u": self.u,
            "thresholds": {"active": self.threshold, "rule": "output true iff u < threshold"},
            "output": int(self.output),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def evaluate(a: bool, b: bool, kind: str = "nand", readout: GateReadout = DEFAULT_READOUT) -> tuple:
    """Run the gate; returns ``(output, trace)``."""
    net = build_gate_network(a, b)
    ents = gate_entropies(net)
    u = normalized_output(ents[2], readout)
    out = read_gate(u, kind, readout)
    return out, GateState((bool(a), bool(b)), kind, net, ents, u, readout.threshold(kind), out)


def truth_table(kind: str = "nand", readout: GateReadout = DEFAULT_READOUT) -> tuple:
    return tuple(evaluate(a, b, kind, readout)[0] for a, b in INPUT_PAIRS)


# exhaustive reachability ------------------------------------------------------

MAX_SEARCH_BUDGET = 6


def _readout_tables(values: tuple):
    """Tables from every single-threshold cut on output entropies ``values``.

    True means low entropy, as in the gate readout; both ``<`` and ``<=`` are
    tried at each achievable value.
    """
    for v in set(values):
        yield tuple(x < v for x in values)
        yield tuple(x <= v for x in values)


def search_reachable_tables(n_observations: int, element_budget: int = MAX_SEARCH_BUDGET) -> frozenset:
    """All 2-input truth tables realizable with exactly ``n_observations`` observations.

    Search space, over elements ``0 .. element_budget - 1``:

    * inputs ``a`` and ``b`` each own a distinct input element (fixed to 0
      and 1; every other placement is a relabeling).  An input is either
      unwired or wired to any other element ``t``: false means the input
      element observes ``t``, true means ``t`` observes it;
    * the remaining observations are fixed arcs chosen from all arcs;
    * the output is read from any element, by its split count;
    * the readout is any single threshold (true below it, strict or not).

    A configuration counts only if it is a simple digraph for all four input
    pairs.
    """
    if not 1 <= n_observations <= 3:
        raise ValueError("n_observations must be 1, 2 or 3")
    if not 2 <= element_budget <= MAX_SEARCH_BUDGET:
        raise ValueError(f"element_budget must be in 2..{MAX_SEARCH_BUDGET}")
    verts = range(element_budget)
    all_arcs = [(u, w) for u in verts for w in verts if u != w]
    wirings = [None] + [t for t in verts]

    reachable = set()
    for ta, tb in itertools.product(wirings, wirings):
        if ta == 0 or tb == 1:
            continue
        wired = (ta is not None) + (tb is not None)
        if wired > n_observations:
            continue
        for fixed in itertools.combinations(all_arcs, n_observations - wired):
            degrees = []
            for a, b in INPUT_PAIRS:
                arcs = list(fixed)
                if ta is not None:
                    arcs.append((ta, 0) if a else (0, ta))
                if tb is not None:
                    arcs.append((tb, 1) if b else (1, tb))
                if len(set(arcs)) != len(arcs):
                    break
                out = [0] * element_budget
                for u, _ in arcs:
                    out[u] += 1
                degrees.append(out)
            else:
                for o in verts:
                    reachable.update(_readout_tables(tuple(d[o] for d in degrees)))
    return frozenset(reachable)
