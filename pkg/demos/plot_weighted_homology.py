"""
Weighted homology of a triangle
===============================

With alpha = sum f(v) d/dv the chain complex of a simplicial complex
depends on the weights f.  Unit weights recover ordinary homology; zero
weights make every chain a cycle.
"""
from itertools import product

from hyperhom import (
    CodiffForm,
    DiffForm,
    Hypergraph,
    VertexSet,
    betti_at_degree,
    cobetti_at_degree,
)

V = VertexSet.of_size(3)
K = Hypergraph.from_labels(V, [["v0"], ["v1"], ["v2"], ["v0", "v1"], ["v0", "v2"], ["v1", "v2"]])
L = Hypergraph.from_labels(V, [["v0", "v1"], ["v0", "v2"], ["v0", "v1", "v2"]])

print("f          betti(K)   cobetti(L)")
for f in product((0, 1), repeat=3):
    alpha = DiffForm.weighted(dict(enumerate(f)))
    omega = CodiffForm.weighted(dict(enumerate(f)))
    b = [betti_at_degree(K, alpha, d).dimension for d in range(2)]
    c = [cobetti_at_degree(L, omega, d).dimension for d in range(3)]
    print(f"{f}  {b}     {c}")

# representatives come back as explicit path vectors
h = betti_at_degree(K, DiffForm.weighted({0: 1, 1: 1, 2: 1}), 1)
print("H_1 generator:", h.representatives[0])
