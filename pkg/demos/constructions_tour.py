"""The two extremal families side by side, with their edge counts against
the bounds and the Turán graph."""
# %%
from cliquepart import constructions as C
from cliquepart import partition as P

for n, v in [(2, 3), (3, 4), (4, 4), (5, 5)]:
    g, h = C.gamma(n, v), C.gamma_prime(n, v)
    print(f"n={n} v={v}: strong {g.edge_count}/{P.strong_bound(n, v)}, "
          f"weak {h.edge_count}/{P.weak_bound(n, v)}, turan {C.turan(n * v, v).edge_count}")

# %% the strong graph is a circulant; sigma generates the rotation
g = C.gamma(4, 4)
circ = C.circulant(16, C.symmetric_set(16, [1, 3, 4, 6, 8]))
from cliquepart.symmetry import are_isomorphic, is_automorphism
print("gamma(4,4) ~ Cay(Z16, {±1,±3,±4,±6,8}):", are_isomorphic(g, circ)[0])
s = C.sigma_automorphism(4, 4)
print("sigma order", s.order(), "automorphism:", is_automorphism(g, s))

# %% DOT for drawing
from cliquepart.graph import emit_dot
print(emit_dot(C.gamma(2, 3), v=3, name="prism"))
