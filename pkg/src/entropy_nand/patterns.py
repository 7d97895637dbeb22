"""Canonical forms, enumeration and naming of small observation patterns.

Patterns ignore element names and observation order: two networks are the
same pattern when their digraphs are isomorphic.  Networks here are tiny
(a weakly connected pattern with ``n`` observations has at most ``n + 1``
elements), so canonical labels come from an exhaustive search over vertex
permutations, restricted to orderings that respect (out-degree, in-degree).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import ObservationNetwork, network_from_arcs

MAX_OBSERVATIONS = 5

KINDS = ("single_observation", "loop", "e_out", "s_in", "train", "other")


def _vertices_and_arcs(network: ObservationNetwork):
    # isolated elements are not part of the pattern
    arcs = sorted(network.arcs)
    verts = sorted({v for a in arcs for v in a})
    return verts, arcs


def canonical_form(network: ObservationNetwork) -> bytes:
    """Relabeling-invariant byte label of ``network``'s digraph.

    Layout: vertex count, the sorted (out, in) degree signature, then the
    lexicographically smallest adjacency bitstring over all signature-respecting
    orderings.
    """
    verts, arcs = _vertices_and_arcs(network)
    n = len(verts)
    sig = {v: (sum(1 for a in arcs if a[0] == v), sum(1 for a in arcs if a[1] == v)) for v in verts}
    keys = sorted(set(sig.values()))
    groups = [[v for v in verts if sig[v] == k] for k in keys]
    arcset = set(arcs)

    best = None
    for parts in itertools.product(*(itertools.permutations(g) for g in groups)):
        order = [v for p in parts for v in p]
        bits = bytes(1 if (u, w) in arcset else 0 for u in order for w in order)
        if best is None or bits < best:
            best = bits
    header = [n] + [x for v in sorted(sig.values()) for x in v]
    return bytes(header) + (best or b"")


def are_isomorphic(n1: ObservationNetwork, n2: ObservationNetwork) -> bool:
    return canonical_form(n1) == canonical_form(n2)


def is_weakly_connected(network: ObservationNetwork) -> bool:
    verts, arcs = _vertices_and_arcs(network)
    if not verts:
        return False
    adj = {v: set() for v in verts}
    for u, w in arcs:
        adj[u].add(w)
        adj[w].add(u)
    seen, stack = {verts[0]}, [verts[0]]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == len(verts)


def _relabel(arcs) -> ObservationNetwork:
    """Network over integer-like ids ``v0, v1, ...`` in first-appearance order."""
    names = {}
    for a in arcs:
        for v in a:
            names.setdefault(v, f"v{len(names)}")
    return network_from_arcs([(names[u], names[w]) for u, w in arcs])


def enumerate_patterns(n_observations: int) -> list:
    """One representative network per pattern with exactly ``n_observations`` observations.

    Patterns are weakly connected simple digraphs without self-observation or
    isolated elements.  Built by growth: every such pattern with ``n`` arcs
    has an arc whose removal (dropping a vertex left isolated) gives a pattern
    with ``n - 1`` arcs, so extending every smaller pattern by one arc in all
    possible ways reaches them all.  Sorted by canonical label.
    """
    if not 1 <= n_observations <= MAX_OBSERVATIONS:
        raise ValueError(f"n_observations must be in 1..{MAX_OBSERVATIONS}, got {n_observations}")
    level = {}
    seed = network_from_arcs([("v0", "v1")])
    level[canonical_form(seed)] = seed
    for _ in range(n_observations - 1):
        nxt = {}
        for net in level.values():
            verts = list(net.ids)
            fresh = f"v{len(verts)}"
            candidates = [(u, w) for u in verts for w in verts if u != w]
            candidates += [(u, fresh) for u in verts] + [(fresh, u) for u in verts]
            for arc in candidates:
                if arc in net.arcs:
                    continue
                grown = _relabel([(e.observer, e.observed) for e in net.edges] + [arc])
                label = canonical_form(grown)
                nxt.setdefault(label, grown)
        level = nxt
    return [level[k] for k in sorted(level)]


def _reference_patterns() -> dict:
    refs = {
        "single_observation": [("b", "a")],
        "loop": [("b", "a"), ("a", "b")],
        "e_out": [("a", "e"), ("b", "e")],
        "s_in": [("s", "a"), ("s", "b")],
        "train": [("c", "b"), ("b", "p")],
    }
    return {canonical_form(network_from_arcs(arcs)): kind for kind, arcs in refs.items()}


_REFERENCES = _reference_patterns()


@dataclass(frozen=True)
class PatternClass:
    kind: str
    canonical_label: bytes


def classify_pattern(network: ObservationNetwork) -> PatternClass:
    label = canonical_form(network)
    return PatternClass(_REFERENCES.get(label, "other"), label)


def to_dot(network: ObservationNetwork, name: str = "pattern", label: str | None = None) -> str:
    """DOT text with one arc per observation, pointing from observer to observed."""
    lines = [f'digraph "{name}" {{']
    if label is not None:
        lines.append(f'  label="{label}";')
    for e in network.elements:
        lines.append(f'  "{e.id}" [label="{e.id}\\n{e.splits} split(s)"];')
    for e in sorted(network.edges, key=lambda e: e.order):
        lines.append(f'  "{e.observer}" -> "{e.observed}" [arrowhead=normal, label="{e.order}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
