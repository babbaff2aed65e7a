"""Canonical forms and automorphism groups."""
# %%
import random

from cliquepart import constructions as C
from cliquepart.oracles import brute_automorphism_count, random_graph, random_relabelling
from cliquepart.symmetry import automorphism_group, canonical_form, identify_group

for n, v in [(2, 3), (3, 4), (4, 2), (4, 4)]:
    grp = automorphism_group(C.gamma(n, v))
    print(f"Aut gamma({n},{v}): order {grp.order}, {identify_group(grp)}")
    grp = automorphism_group(C.gamma_prime(n, v))
    print(f"Aut gamma'({n},{v}): order {grp.order}")

# %% relabelling never changes the canonical form
rng = random.Random(7)
g = random_graph(rng, 11, 0.45)
h = g.relabel(random_relabelling(rng, 11))
print(canonical_form(g) == canonical_form(h), canonical_form(g))

# %% small graphs against the exhaustive count
g = random_graph(rng, 7, 0.5)
print(automorphism_group(g).order, brute_automorphism_count(g))
