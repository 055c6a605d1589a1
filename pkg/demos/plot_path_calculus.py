"""
Partial derivatives on paths
============================

Elementary paths are vertex sequences (repeats allowed).  The partial
derivative with respect to v deletes v with alternating signs; the partial
differentiation dv inserts v with alternating signs.  Both generate
exterior algebras, and odd elements square to zero.
"""
from hyperhom import CodiffForm, DiffForm, PathVector, adjoint, d_insert, d_partial, inner
from hyperhom.paths import cyclic_part, project_sorted

P = PathVector.elementary

print("d/dv0 (v0 v1)      =", d_partial(0, P(0, 1)))
print("d/dv0 (v0 v1 v0)   =", d_partial(0, P(0, 1, 0)))
print("dv2 (v0 v1)        =", d_insert(2, P(0, 1)))

# anticommutation: d/du d/dv = - d/dv d/du
xi = P(0, 1, 2, 1)
print("d/dv0 d/dv1 + d/dv1 d/dv0 =", d_partial(0, d_partial(1, xi)) + d_partial(1, d_partial(0, xi)))

# a weighted grade-one form squares to zero
alpha = DiffForm.weighted({0: 2, 1: -1, 2: 3})
print("alpha(alpha(xi))   =", alpha(alpha(xi)))

# wedge products normalize monomial order, absorbing the sign
print("d/dv1 ^ d/dv0      =", DiffForm.monomial((1,)) ^ DiffForm.monomial((0,)))

# adjointness for the canonical inner product
beta = DiffForm(2, {(0, 1): 1, (1, 2): 5})
mu = adjoint(beta)
eta, zeta = P(1, 0, 2), P(2)
print("<beta(eta), zeta> =", inner(beta(eta), zeta), " <eta, mu(zeta)> =", inner(eta, mu(zeta)))

# a coboundary image splits into sorted, cyclic and unsorted parts
omega = CodiffForm.weighted({0: 1, 1: 1, 2: 1})
image = omega(P(0, 2))
print("omega(v0 v2)       =", image)
print("  sorted part      =", project_sorted(image))
print("  cyclic part      =", cyclic_part(image))
