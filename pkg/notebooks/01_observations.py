"""
Observations and entropy accounting
===================================

An element starts with one state.  Observing another element splits it,
and the split costs at least ``k_B T ln 2`` of heat at temperature T.
"""

# %%
from entropy_nand.core import (
    ObservationNetwork,
    binary_entropy,
    dissipate_to_environment,
    landauer_energy,
    ledger_csv,
    observe,
    transition_profile,
)

# %% Two fresh elements hold no entropy.
net = ObservationNetwork.from_ids(["a", "b"])
print({i: net.entropy(i) for i in net.ids})

# %% b observes a: b splits into two states, a is unchanged.
net = observe(net, "b", "a")
print({i: (net.splits(i), round(net.entropy(i), 4)) for i in net.ids})

# %% The environment takes b's entropy.  By default b keeps its record of
# the observation; a memoryless element is erased instead.
kept = dissipate_to_environment(net, "b")
erased = dissipate_to_environment(net, "b", erase=True)
print("retain:", kept.splits("b"), round(kept.environment_absorbed, 4))
print("erase: ", erased.splits("b"), round(erased.environment_absorbed, 4))
print(ledger_csv(kept))

# %% The same split in SI units.
for t in (1.0, 77.0, 300.0):
    print(f"{t:6.1f} K  {landauer_energy(t):.4e} J")

# %% Entropy through a state change: an instantaneous peak or the
# binary-entropy curve.
for t in (0.0, 0.25, 0.5, 0.75, 1.0):
    print(t, transition_profile(t, "kronecker"), round(binary_entropy(t), 4))
