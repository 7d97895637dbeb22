"""
The two-observation NAND gate
=============================

Each input chooses the direction of its observation with the output
element ``o``.  Reading ``o``'s entropy against a threshold gives NAND;
lowering the threshold gives NOR on the very same networks.
"""

# %%
from entropy_nand.gates import INPUT_PAIRS, evaluate, search_reachable_tables, table_name

# %%
print("a b | pattern  a_S b_S o_S   u   NAND NOR")
for a, b in INPUT_PAIRS:
    nand, st = evaluate(a, b, "nand")
    nor, _ = evaluate(a, b, "nor")
    print(f"{a:d} {b:d} | {st.pattern:7s} {st.entropies[0]:3d} {st.entropies[1]:3d} {st.entropies[2]:3d}"
          f"  {st.u:.1f}  {nand:d}    {nor:d}")

# %% Which two-input functions can any network with two observations realize?
for n in (1, 2, 3):
    print(n, sorted(table_name(t) for t in search_reachable_tables(n, 6)))
