"""
A grade-three boundary on the tetrahedron
=========================================

On the complete hypergraph over four vertices a grade-three form steps
three degrees at a time, so degrees 0 and 3 talk to each other and the
middle degrees are left alone.
"""
from hyperhom import DiffForm, VertexSet, adjoint, betti_at_degree, cobetti_at_degree, complete
from hyperhom.homology import homology_group
from hyperhom.paths import PathVector, project_sorted

D = complete(VertexSet.of_size(4))
triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
alpha = DiffForm(3, {t: c for t, c in zip(triples, (2, 3, 5, 7))})
omega = adjoint(alpha)  # grade 3: the adjoint flips every sign

print("alpha(v0 v1 v2 v3) =", alpha(PathVector.elementary(0, 1, 2, 3)))
for v in range(4):
    print(f"omega(v{v}) sorted  =", project_sorted(omega(PathVector.elementary(v))))

print("betti   0..3:", [betti_at_degree(D, alpha, d).dimension for d in range(4)])
print("cobetti 0..3:", [cobetti_at_degree(D, omega, d).dimension for d in range(4)])
print("with alpha = 0:", [betti_at_degree(D, DiffForm(3, {}), d).dimension for d in range(4)])

# the two-index groups H_n(K, alpha, m) sit at absolute degree m + 3n
print("H_1(D, alpha, 0) lives in degree", homology_group(D, alpha, 0, 1).degree)
