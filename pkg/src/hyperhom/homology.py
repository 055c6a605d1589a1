"""Generalized chain/cochain complexes of (co-)simplicial complexes.

An odd-grade differential form ``alpha`` of grade ``k = 2t + 1`` acts on the
chain spaces of a simplicial complex ``K`` as a boundary lowering degree by
``k``; an odd-grade co-differential form ``omega`` acts on a co-simplicial
complex ``L`` as a coboundary raising degree by ``k`` (followed by the
projection onto sorted paths, which kills the cyclic subcomplex).

The primary API is indexed by absolute degree ``d``.  The two-index groups
``H_n(K, alpha, m)`` / ``H^n(L, omega, m)`` live at ``d = m + n * k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .calculus import CodiffForm, DiffForm, Form, apply_codiff, apply_diff
from .errors import GradeParityError, NotAChainMapError, NotCosimplicialError, NotSimplicialError
from .hypergraph import Hyperedge, Hypergraph, is_cosimplicial, is_simplicial
from .linalg import SparseMatrix, independent_columns, nullspace, rank, solve
from .paths import PathVector, from_hyperedge_vector, project_sorted

CHAIN = "chain"
COCHAIN = "cochain"


@dataclass(frozen=True)
class DegreeIndex:
    m: int
    t: int
    lam: int
    q: int

    @property
    def step(self) -> int:
        return 2 * self.t + 1


def degree_decompose(m: int, t: int) -> tuple[int, int]:
    """Unique ``(lam, q)`` with ``m = lam * (2t + 1) + q`` and ``0 <= q <= 2t``."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return divmod(m, 2 * t + 1)


def degree_index(m: int, t: int) -> DegreeIndex:
    lam, q = degree_decompose(m, t)
    return DegreeIndex(m, t, lam, q)


def t_from_grade(k: int) -> int:
    if k % 2 != 1:
        raise GradeParityError(f"a (co)boundary operator needs odd grade, got {k}")
    return (k - 1) // 2


def chain_basis(h: Hypergraph, d: int) -> list[Hyperedge]:
    """Dimension-``d`` hyperedges in lexicographic order (empty for ``d < 0``)."""
    if d < 0:
        return []
    return h.of_dimension(d)


# --- validation ----------------------------------------------------------------

def _require_simplicial(K: Hypergraph) -> None:
    if not is_simplicial(K):
        raise NotSimplicialError("homology needs a simplicial complex (closed under faces)")


def _require_cosimplicial(L: Hypergraph) -> None:
    if not is_cosimplicial(L):
        raise NotCosimplicialError("cohomology needs a co-simplicial complex (closed under supersets)")


def _require(form: Form, cls: type, parity: int, role: str) -> None:
    if not isinstance(form, cls):
        raise TypeError(f"{role} must be a {cls.__name__}")
    if form.grade % 2 != parity:
        want = "odd" if parity else "even"
        raise GradeParityError(f"{role} must have {want} grade, got {form.grade}")


# --- matrices ------------------------------------------------------------------

def _operator_matrix(
    h: Hypergraph, d: int, shift: int, act: Callable[[PathVector], PathVector]
) -> SparseMatrix:
    src = chain_basis(h, d)
    dst = chain_basis(h, d + shift)
    where = {tuple(e): i for i, e in enumerate(dst)}
    cols = []
    for e in src:
        image = act(PathVector.elementary(*e))
        col: dict[int, Fraction] = {}
        for p, c in image.terms.items():
            row = where.get(p)
            if row is None:
                raise NotAChainMapError(
                    f"image of {h.format_edge(e)} leaves the carrier at {p}"
                )
            col[row] = c
        cols.append(col)
    return SparseMatrix(len(dst), len(src), tuple(cols))


def boundary_matrix(K: Hypergraph, alpha: DiffForm, d: int) -> SparseMatrix:
    """Matrix of ``alpha`` from basis(d) to basis(d - grade)."""
    _require_simplicial(K)
    _require(alpha, DiffForm, 1, "boundary operator")
    return _operator_matrix(K, d, -alpha.grade, lambda x: apply_diff(alpha, x))


def coboundary_matrix(L: Hypergraph, omega: CodiffForm, d: int) -> SparseMatrix:
    """Matrix of the sorted projection of ``omega`` from basis(d) to basis(d + grade)."""
    _require_cosimplicial(L)
    _require(omega, CodiffForm, 1, "coboundary operator")
    return _operator_matrix(L, d, omega.grade, lambda x: project_sorted(apply_codiff(omega, x)))


def chain_map_matrix(K: Hypergraph, beta: DiffForm, d: int) -> SparseMatrix:
    """Matrix of an even-grade form ``beta`` from basis(d) to basis(d - grade)."""
    _require_simplicial(K)
    _require(beta, DiffForm, 0, "chain map")
    return _operator_matrix(K, d, -beta.grade, lambda x: apply_diff(beta, x))


def cochain_map_matrix(L: Hypergraph, mu: CodiffForm, d: int) -> SparseMatrix:
    _require_cosimplicial(L)
    _require(mu, CodiffForm, 0, "cochain map")
    return _operator_matrix(L, d, mu.grade, lambda x: project_sorted(apply_codiff(mu, x)))


# --- homology ------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyResult:
    """(Co)homology at one absolute degree.

    ``cycle_basis`` spans the kernel; ``representatives`` is a subset of it
    whose classes form a basis of the quotient by the image.
    """

    degree: int
    dimension: int
    dim_chain: int
    cycle_basis: tuple[PathVector, ...]
    boundary_rank: int
    representatives: tuple[PathVector, ...] = ()
    basis: tuple[Hyperedge, ...] = ()
    _cycle_coords: tuple[tuple[Fraction, ...], ...] = field(default=(), repr=False, compare=False)
    _boundary_coords: tuple[tuple[Fraction, ...], ...] = field(default=(), repr=False, compare=False)
    _rep_coords: tuple[tuple[Fraction, ...], ...] = field(default=(), repr=False, compare=False)

    @property
    def kernel(self) -> int:
        return len(self.cycle_basis)


def _homology(basis: list[Hyperedge], outgoing: SparseMatrix, incoming: SparseMatrix, d: int) -> HomologyResult:
    cycles = nullspace(outgoing)
    boundaries = [incoming.column(j) for j in range(incoming.ncols)]
    b_idx = independent_columns(boundaries) if boundaries else []
    b_basis = [boundaries[j] for j in b_idx]
    # greedily extend an image basis by kernel vectors to find class representatives
    chosen = independent_columns(b_basis + cycles) if (b_basis or cycles) else []
    reps = [cycles[j - len(b_basis)] for j in chosen if j >= len(b_basis)]
    dim = len(cycles) - len(b_basis)
    if dim != len(reps) or dim < 0:
        raise NotAChainMapError(f"image is not contained in the kernel at degree {d}")
    to_vec = lambda coords: from_hyperedge_vector(basis, coords)
    return HomologyResult(
        degree=d,
        dimension=dim,
        dim_chain=len(basis),
        cycle_basis=tuple(to_vec(c) for c in cycles),
        boundary_rank=rank(incoming),
        representatives=tuple(to_vec(c) for c in reps),
        basis=tuple(basis),
        _cycle_coords=tuple(tuple(c) for c in cycles),
        _boundary_coords=tuple(tuple(c) for c in b_basis),
        _rep_coords=tuple(tuple(c) for c in reps),
    )


def betti_at_degree(K: Hypergraph, alpha: DiffForm, d: int) -> HomologyResult:
    """``dim ker(alpha at d) - rank(alpha at d + k)``, with explicit bases."""
    k = alpha.grade
    out = boundary_matrix(K, alpha, d)
    inc = boundary_matrix(K, alpha, d + k)
    return _homology(chain_basis(K, d), out, inc, d)


def cobetti_at_degree(L: Hypergraph, omega: CodiffForm, d: int) -> HomologyResult:
    """``dim ker(omega at d) - rank(omega at d - k)``, with explicit bases."""
    k = omega.grade
    out = coboundary_matrix(L, omega, d)
    inc = coboundary_matrix(L, omega, d - k)
    return _homology(chain_basis(L, d), out, inc, d)


def homology_group(K: Hypergraph, alpha: DiffForm, m: int, n: int) -> HomologyResult:
    """``H_n(K, alpha, m)``, i.e. homology at absolute degree ``m + n * k``."""
    return betti_at_degree(K, alpha, m + n * alpha.grade)


def cohomology_group(L: Hypergraph, omega: CodiffForm, m: int, n: int) -> HomologyResult:
    return cobetti_at_degree(L, omega, m + n * omega.grade)


# --- induced maps --------------------------------------------------------------

@dataclass(frozen=True)
class InducedMap:
    source: HomologyResult
    target: HomologyResult
    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    m: int = 0
    n: int = 0
    s: int = 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.target.dimension, self.source.dimension)

    def is_zero(self) -> bool:
        return not any(x for row in self.matrix for x in row)


def _class_coordinates(target: HomologyResult, y: list[Fraction]) -> list[Fraction]:
    cols = list(target._boundary_coords) + list(target._rep_coords)
    if not target.basis:
        if any(y):
            raise NotAChainMapError("non-zero image in an empty chain space")
        return []
    x = solve(cols, y)
    if x is None:
        raise NotAChainMapError(f"image is not a cycle at degree {target.degree}")
    return x[len(target._boundary_coords):]


def _induced(source: HomologyResult, target: HomologyResult, mat: SparseMatrix, m, n, s) -> InducedMap:
    columns = []
    for rep in source._rep_coords:
        columns.append(_class_coordinates(target, mat.apply(rep)))
    rows = tuple(
        tuple(columns[j][i] for j in range(source.dimension)) for i in range(target.dimension)
    )
    return InducedMap(source, target, rows, rank(rows) if rows and rows[0] else 0, m, n, s)


def induced_map(K: Hypergraph, alpha: DiffForm, beta: DiffForm, m: int, n: int) -> InducedMap:
    """``beta_* : H_n(K, alpha, m) -> H_n(K, alpha, m - 2s)`` in representative bases."""
    _require(alpha, DiffForm, 1, "boundary operator")
    _require(beta, DiffForm, 0, "chain map")
    d = m + n * alpha.grade
    source = betti_at_degree(K, alpha, d)
    target = betti_at_degree(K, alpha, d - beta.grade)
    mat = chain_map_matrix(K, beta, d)
    return _induced(source, target, mat, m, n, beta.grade // 2)


def induced_comap(L: Hypergraph, omega: CodiffForm, mu: CodiffForm, m: int, n: int) -> InducedMap:
    """``mu_* : H^n(L, omega, m) -> H^n(L, omega, m + 2s)``."""
    _require(omega, CodiffForm, 1, "coboundary operator")
    _require(mu, CodiffForm, 0, "cochain map")
    d = m + n * omega.grade
    source = cobetti_at_degree(L, omega, d)
    target = cobetti_at_degree(L, omega, d + mu.grade)
    mat = cochain_map_matrix(L, mu, d)
    return _induced(source, target, mat, m, n, mu.grade // 2)


# --- whole complexes -----------------------------------------------------------

@dataclass(frozen=True)
class GradedComplex:
    """All non-trivial degrees of a chain or cochain complex.

    ``matrices[d]`` is the (co)boundary leaving degree ``d``.
    """

    carrier: Hypergraph
    variance: str
    operator: Form
    bases: dict[int, list[Hyperedge]]
    matrices: dict[int, SparseMatrix]

    @property
    def step(self) -> int:
        return self.operator.grade

    @property
    def t(self) -> int:
        return t_from_grade(self.operator.grade)

    def degrees(self) -> list[int]:
        return sorted(self.bases)

    def compositions_vanish(self) -> bool:
        k = self.step
        for d, mat in self.matrices.items():
            nxt = d - k if self.variance == CHAIN else d + k
            if nxt in self.matrices and not (self.matrices[nxt] @ mat).is_zero():
                return False
        return True

    def betti(self, d: int) -> HomologyResult:
        if self.variance == CHAIN:
            return betti_at_degree(self.carrier, self.operator, d)
        return cobetti_at_degree(self.carrier, self.operator, d)


def build_chain_complex(K: Hypergraph, alpha: DiffForm) -> GradedComplex:
    _require_simplicial(K)
    _require(alpha, DiffForm, 1, "boundary operator")
    degrees = range(0, K.top_dimension + 1)
    return GradedComplex(
        K, CHAIN, alpha,
        {d: chain_basis(K, d) for d in degrees},
        {d: boundary_matrix(K, alpha, d) for d in degrees},
    )


def build_cochain_complex(L: Hypergraph, omega: CodiffForm) -> GradedComplex:
    _require_cosimplicial(L)
    _require(omega, CodiffForm, 1, "coboundary operator")
    degrees = range(0, len(L.vertex_set))
    return GradedComplex(
        L, COCHAIN, omega,
        {d: chain_basis(L, d) for d in degrees},
        {d: coboundary_matrix(L, omega, d) for d in degrees},
    )
