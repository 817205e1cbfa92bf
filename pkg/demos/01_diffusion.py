"""Threshold diffusion on small graphs.

Walks through one cascade round by round, blocks it with immunization,
and shows how a candidate influenced set X determines which nodes must
be immunized to keep the cascade inside X.
"""
# %%
from iib.fixtures import path3, star4
from iib.graph import Instance, ThresholdGraph, diffuse, immunizing_set, is_minimal, preprocess, verify

G = path3()  # a - b - c, thresholds 0, 1, 1
for r, active in enumerate(diffuse(G).rounds):
    print("round", r, sorted(G.label(v) for v in active))

# %% blocking the middle node stops the cascade at the seed
print("Y={b}:", sorted(G.label(v) for v in diffuse(G, {1}).final))

# %% the nodes to immunize for a target X
for X in [set(), {0}, {0, 1}]:
    Y = immunizing_set(G, X)
    print("X =", sorted(G.label(v) for v in X), "-> Y(X) =", sorted(G.label(v) for v in Y),
          "minimal" if is_minimal(G, X) else "not minimal")

# %% a witness check shrinks X to the part that really spreads inside it
sol = verify(Instance(G, 1, 1), {0, 2})
print("verify({a,c}) keeps", sorted(G.label(v) for v in sol.influenced), "verdict", sol.verdict)

# %% the star: the centre needs two influenced leaves
S = star4()
print("star spread with one leaf immunized:", len(diffuse(S, {0}).final))
print("star spread with two leaves immunized:", len(diffuse(S, {0, 1}).final))

# %% solvers expect every node to be reachable; preprocessing drops the rest
raw = ThresholdGraph.from_edges(3, [(0, 1), (1, 2)], [0, 1, 3], ["u", "v", "w"])
H, removed = preprocess(raw)
print("kept", H.labels, "removed", sorted(raw.label(v) for v in removed))
