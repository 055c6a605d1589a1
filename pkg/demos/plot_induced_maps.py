"""
Induced maps
============

Even-grade forms commute with odd ones, so they induce maps on homology.
On the triangle examples these maps vanish; on the tetrahedron the
cohomology map induced by a grade-two form does not.
"""
from hyperhom import CodiffForm, DiffForm, Hypergraph, VertexSet, adjoint, complete, induced_comap, induced_map

V = VertexSet.of_size(3)
K = Hypergraph.from_labels(V, [["v0"], ["v1"], ["v2"], ["v0", "v1"], ["v0", "v2"], ["v1", "v2"]])
alpha = DiffForm.weighted({0: 1, 1: 1, 2: 1})
beta = DiffForm(2, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
for m in range(2):
    im = induced_map(K, alpha, beta, m, 0)
    print(f"beta_* from degree {im.source.degree} to {im.target.degree}: rank {im.rank}")

im = induced_map(K, alpha, DiffForm.scalar(1), 1, 0)
print("scalar 1 on H_1:", [[str(x) for x in row] for row in im.matrix])

D = complete(VertexSet.of_size(4))
omega = adjoint(DiffForm(3, {t: 1 for t in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]}))
mu = adjoint(DiffForm(2, {p: 1 for p in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]}))
im = induced_comap(D, omega, mu, 0, 0)
print(f"mu_* : H^0 (dim {im.source.dimension}) -> H^2 (dim {im.target.dimension}), rank {im.rank}")
for row in im.matrix:
    print("   ", [str(x) for x in row])
