"""Rebuild the (3,4) and (4,4) tables from their cycle descriptions."""
# %%
from cliquepart import constructions as C
from cliquepart.enumeration import case_ii_candidates, verify_table1
from cliquepart.symmetry import automorphism_group, identify_group

for s in C.load_fixture("table2.txt"):
    grp = automorphism_group(C.from_cycle_spec(s))
    print(s.meta["name"], s.meta["group"], "->", grp.order, identify_group(grp))

# %%
cases = {s.meta["name"]: s for s in C.load_fixture("n3v4_cases.txt")}
ref = C.from_cycle_spec(cases["case-I-i"])
for r in verify_table1(C.load_fixture("table1.txt"), ref):
    what = "iso" if r.stated_clique is None else [C.format_label(u, 4) for u in r.stated_clique]
    print(r.name, "ok" if r.ok else "FAIL", what, "foreign cliques:", len(r.foreign_cliques))
print(len(case_ii_candidates()), "B-C candidates")
