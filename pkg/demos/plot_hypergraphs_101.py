"""
Hypergraphs, closures and complements
=====================================

A hypergraph is just a set of non-empty vertex subsets.  Two special kinds
matter below: simplicial complexes (closed under faces) and co-simplicial
complexes (closed under supersets).
"""
from hyperhom import (
    Hypergraph,
    VertexSet,
    complement,
    complete,
    cosimplicial_closure,
    is_cosimplicial,
    is_simplicial,
    simplicial_closure,
)

V = VertexSet(("v0", "v1", "v2"))

# the boundary of a triangle: three vertices and three edges
K = Hypergraph.from_labels(V, [["v0"], ["v1"], ["v2"], ["v0", "v1"], ["v0", "v2"], ["v1", "v2"]])
print("K =", K)
print("simplicial:", is_simplicial(K), " co-simplicial:", is_cosimplicial(K))

# everything K is missing from the complete hypergraph is the open triangle
D = complete(V)
print("complete hypergraph has", len(D), "hyperedges")
print("complement of K:", complement(D, K))

# a co-simplicial complex: every superset of v0v1 or v0v2
L = cosimplicial_closure(Hypergraph.from_labels(V, [["v0", "v1"], ["v0", "v2"]]))
print("L =", L, " co-simplicial:", is_cosimplicial(L))
print("complement of L is simplicial:", is_simplicial(complement(D, L)))

# closing a single top cell downwards gives the full simplex again
top = Hypergraph.from_labels(V, [["v0", "v1", "v2"]])
print("simplicial closure of the top cell has", len(simplicial_closure(top)), "hyperedges")
