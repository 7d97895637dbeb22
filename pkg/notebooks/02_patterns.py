"""
Patterns of one and two observations
====================================

Up to relabeling there is one pattern with a single observation and four
with two.  Larger counts come from the same enumerator.
"""

# %%
from entropy_nand.core import network_from_arcs
from entropy_nand.patterns import are_isomorphic, classify_pattern, enumerate_patterns, to_dot

# %%
for n in (1, 2):
    for p in enumerate_patterns(n):
        print(n, classify_pattern(p).kind, sorted(p.arcs))

# %% Counts keep growing quickly.
print([len(enumerate_patterns(n)) for n in range(1, 6)])

# %% A train read front to back is the same pattern as back to front.
print(are_isomorphic(network_from_arcs([("c", "b"), ("b", "p")]),
                     network_from_arcs([("p", "b"), ("b", "c")])))

# %% DOT for rendering with graphviz.
print(to_dot(network_from_arcs([("a", "e"), ("b", "e")]), label="e_out"))
