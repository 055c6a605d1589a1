"""
Geometric realization
=====================

Vertex i sits at the i-th unit vector; a hyperedge is the open simplex
spanned by its vertices.  Open cells of distinct hyperedges never meet, so
the cells of a complement are exactly the cells that were not removed.
"""
from hyperhom import Hypergraph, VertexSet, check_complement_cells, check_disjointness, complete, embed
from hyperhom.geometry import realization_document

V = VertexSet.of_size(3)
D = complete(V)
emb = embed(V)

doc = realization_document(D, emb)
for c in doc["cells"]:
    print("".join(c["vertices"]).ljust(8), "dim", c["dimension"], "barycenter", c["barycenter"])

report = check_disjointness(D, emb)
print(f"{report.cells} cells, {report.pairs_checked} pairs checked, disjoint: {report.passed}")

K = Hypergraph.from_labels(V, [["v0"], ["v1"], ["v2"], ["v0", "v1"], ["v0", "v2"], ["v1", "v2"]])
diff = check_complement_cells(D, K, emb)
print("cells left after removing the triangle boundary:", diff.remaining, "ok:", diff.passed)

# decimal export for plotting tools
print(realization_document(D, emb, decimal_precision=4)["cells"][-1])
