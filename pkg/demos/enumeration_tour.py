"""All maximal strongly (n, v)-clique-partitioned graphs for small n, v."""
# %%
from cliquepart import constructions as C
from cliquepart.enumeration import enumerate_maximal_strong
from cliquepart.symmetry import canonical_form

for n, v in [(2, 5), (4, 3), (3, 4), (4, 4), (5, 4)]:
    rep = enumerate_maximal_strong(n, v)
    print(f"({n},{v}): {rep.count} classes, aut orders {rep.aut_orders}, {rep.elapsed_seconds:.2f}s")

# %% the six (4,4) graphs are exactly the tabulated ones
rep = enumerate_maximal_strong(4, 4)
table = sorted(canonical_form(C.from_cycle_spec(s)).decode() for s in C.load_fixture("table2.txt"))
print("matches table:", rep.graphs == table)
print(rep.to_text())
