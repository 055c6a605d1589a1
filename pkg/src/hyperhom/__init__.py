"""Discrete differential calculus and generalized (co)homology of
hypergraphs, simplicial and co-simplicial complexes, computed exactly over
the rationals."""

from .calculus import (
    CodiffForm,
    DiffForm,
    adjoint,
    apply_codiff,
    apply_diff,
    d_insert,
    d_partial,
    wedge,
    wedge_codiff,
    wedge_diff,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    CellDescriptor,
    Embedding,
    cell,
    check_complement_cells,
    check_disjointness,
    embed,
    realization_cells,
)
from .homology import (
    GradedComplex,
    HomologyResult,
    InducedMap,
    betti_at_degree,
    boundary_matrix,
    build_chain_complex,
    build_cochain_complex,
    chain_basis,
    chain_map_matrix,
    coboundary_matrix,
    cochain_map_matrix,
    cobetti_at_degree,
    cohomology_group,
    degree_decompose,
    homology_group,
    induced_comap,
    induced_map,
)
from .hypergraph import (
    Hyperedge,
    Hypergraph,
    VertexSet,
    complement,
    complete,
    complete_uniform,
    cosimplicial_closure,
    is_cosimplicial,
    is_simplicial,
    make_hyperedge,
    simplicial_closure,
)
from .linalg import SparseMatrix, rank
from .paths import (
    ZERO,
    CyclicFlag,
    PathVector,
    classify,
    cyclic_part,
    inner,
    is_cyclic,
    project_sorted,
)

__version__ = "0.1.0"
