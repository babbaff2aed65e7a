"""Counting clique partitions, and the chain structure of the weak graphs."""
# %%
from cliquepart import constructions as C
from cliquepart import partition as P
from cliquepart.graph import Graph

print("K4 into edges:", P.count_clique_partitions(Graph.complete(4), 2).count)
print("K6 into edges:", P.count_clique_partitions(Graph.complete(6), 2).count)

g = C.gamma_prime(4, 3)
ok, part = P.is_weakly_cp(g, 4, 3)
print("gamma'(4,3) weakly CP:", ok, part.blocks)
print("strongly CP:", P.is_strongly_cp(g, 4, 3)[0], "- it has", len(P.enumerate_v_cliques(g, 3)), "triangles")

# %% every pair of blocks is directed; the directions form a chain
t = P.weak_structure(g, part)
print("chain:", t.chain(), "distinguished:", t.distinguished)

# %% a strongly partitioned graph has no direction at all
try:
    P.weak_structure(C.gamma(2, 3), P.CliquePartition.standard(2, 3))
except P.StructureError as exc:
    print("gamma(2,3):", exc, exc.cliques)
