"""
Building anything from entropy NANDs
====================================

Compile an expression to NAND gates and run every gate as an entropy
gate.
"""

# %%
import itertools

from entropy_nand.circuits import (
    evaluate_netlist,
    format_netlist,
    netlist_report,
    parse_expression,
    synthesize_nand_netlist,
    truth_evaluate,
)

# %%
expr = parse_expression("(a & b) | (c ^ !d)")
netlist = synthesize_nand_netlist(expr)
print(format_netlist(netlist))
print(netlist_report(netlist, temperature_kelvin=300.0))

# %%
mismatches = 0
for bits in itertools.product((False, True), repeat=4):
    sigma = dict(zip("abcd", bits))
    mismatches += evaluate_netlist(netlist, sigma, "entropy") != [truth_evaluate(expr, sigma)]
print("mismatches over 16 assignments:", mismatches)
