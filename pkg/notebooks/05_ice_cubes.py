"""
A statistical NAND made of ice cubes
====================================

Replace elements by heat reservoirs and observations by noisy entropy
pumps.  The bundled preset uses 10 g cubes of ice at 0 °C.
"""

# %%
from dataclasses import replace

from entropy_nand.gates import INPUT_PAIRS
from entropy_nand.thermo import load_preset, monte_carlo_report, report_csv, simulate_gate

import numpy as np

cfg = load_preset("ice_cube")

# %% One noisy run per input pair: melt fractions of the three cubes.
rng = np.random.default_rng(0)
for a, b in INPUT_PAIRS:
    res = simulate_gate(a, b, cfg, rng)
    print(a, b, {k: round(r.melt_fraction, 3) for k, r in res.items()})

# %% Accuracy against the ideal NAND table as the pumps get noisier.
for sigma in (0.05, 0.2, 0.4, 0.8):
    rows = monte_carlo_report(replace(cfg, noise_sigma=sigma), 2000)
    print(sigma, [r.accuracy for r in rows])

# %%
print(report_csv(monte_carlo_report(cfg, 10_000)))
