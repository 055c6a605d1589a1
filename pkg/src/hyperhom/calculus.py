"""Partial derivatives ``d/dv``, partial differentiations ``dv`` and the
exterior algebras they generate, acting on path vectors.

Conventions
-----------
* ``d/dv`` deletes each occurrence of ``v`` at position ``i`` with sign
  ``(-1)**i``; ``dv`` inserts ``v`` at every position ``i`` with sign
  ``(-1)**i``.  They are adjoint for the canonical inner product.
* A monomial ``d/dv1 ^ ... ^ d/dvk`` is the composition
  ``d/dv1 o ... o d/dvk``: the right-most factor acts first.
* Forms are stored with strictly increasing keys; inserting a monomial in any
  other order absorbs the permutation sign, and a repeated vertex kills it.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .paths import ElementaryPath, PathVector

DIFF = "diff"
CODIFF = "codiff"


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if ``seq`` has repeats."""
    if len(set(seq)) != len(seq):
        return 0
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def reversal_sign(k: int) -> int:
    """Sign of reversing k letters: +1 for k = 0, 1 (mod 4), -1 for k = 2, 3."""
    return 1 if k % 4 in (0, 1) else -1


class Form:
    """Homogeneous element of an exterior algebra over vertex indices.

    Subclasses fix the variance (``diff`` or ``codiff``).  Instances are
    immutable and compare equal exactly when their canonical tables agree.
    """

    variance: str = ""

    __slots__ = ("grade", "_terms")

    def __init__(self, grade: int, terms: Mapping[Sequence[int], Rational | int] | None = None):
        if grade < 0:
            raise ValueError("form grade must be non-negative")
        table: dict[tuple[int, ...], Fraction] = {}
        for key, c in (terms or {}).items():
            key = tuple(int(v) for v in key)
            if len(key) != grade:
                raise ValueError(f"monomial {key} does not have grade {grade}")
            sign = permutation_sign(key)
            if not sign:
                continue
            key = tuple(sorted(key))
            table[key] = table.get(key, Fraction(0)) + sign * Fraction(c)
        self.grade = grade
        self._terms = {k: c for k, c in sorted(table.items()) if c}

    @classmethod
    def scalar(cls, c: Rational | int) -> Form:
        return cls(0, {(): c})

    @classmethod
    def monomial(cls, vertices: Sequence[int], coeff: Rational | int = 1) -> Form:
        return cls(len(vertices), {tuple(vertices): coeff})

    @classmethod
    def weighted(cls, f: Mapping[int, Rational | int]) -> Form:
        """``sum_v f(v) * x_v`` with ``x_v`` the grade-one generator."""
        return cls(1, {(v,): c for v, c in f.items()})

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return list(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.variance == other.variance
            and self.grade == other.grade
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.variance, self.grade, frozenset(self._terms.items())))

    def _check_compatible(self, other: Form) -> None:
        if type(self) is not type(other):
            raise TypeError("cannot mix diff and codiff forms")

    def __add__(self, other: Form) -> Form:
        if not isinstance(other, Form):
            return NotImplemented
        self._check_compatible(other)
        if self.grade != other.grade:
            raise ValueError("forms of different grades are not homogeneous")
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)(self.grade, acc)

    def __neg__(self) -> Form:
        return self * -1

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __mul__(self, scalar: Rational | int) -> Form:
        if not isinstance(scalar, (int, Rational)):
            return NotImplemented
        s = Fraction(scalar)
        return type(self)(self.grade, {k: c * s for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: Form) -> Form:
        return wedge(self, other)

    def __call__(self, xi: PathVector) -> PathVector:
        return apply_form(self, xi)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{k}" for k, c in self._terms.items()) or "0"
        return f"{type(self).__name__}[{self.grade}]({body})"


class DiffForm(Form):
    """Element of the differential algebra generated by the ``d/dv``."""

    variance = DIFF
    __slots__ = ()


class CodiffForm(Form):
    """Element of the co-differential algebra generated by the ``dv``."""

    variance = CODIFF
    __slots__ = ()


# --- single-vertex operators -------------------------------------------------

def _d_partial_terms(v: int, terms: Iterable[tuple[ElementaryPath, Fraction]]) -> dict:
    out: dict[ElementaryPath, Fraction] = {}
    for p, c in terms:
        if len(p) == 1:
            continue  # lands in grade -1, which is zero
        for i, x in enumerate(p):
            if x == v:
                q = p[:i] + p[i + 1:]
                out[q] = out.get(q, 0) + (c if i % 2 == 0 else -c)
    return out


def _d_insert_terms(v: int, terms: Iterable[tuple[ElementaryPath, Fraction]]) -> dict:
    out: dict[ElementaryPath, Fraction] = {}
    for p, c in terms:
        for i in range(len(p) + 1):
            q = p[:i] + (v,) + p[i:]
            out[q] = out.get(q, 0) + (c if i % 2 == 0 else -c)
    return out


def d_partial(v: int, xi: PathVector) -> PathVector:
    """Partial derivative with respect to vertex ``v`` (grade -1)."""
    return PathVector(_d_partial_terms(v, xi.terms.items()))


def d_insert(v: int, xi: PathVector) -> PathVector:
    """Partial differentiation ``dv`` (grade +1), adjoint of :func:`d_partial`."""
    return PathVector(_d_insert_terms(v, xi.terms.items()))


# --- algebra -----------------------------------------------------------------

def wedge(a: Form, b: Form) -> Form:
    """Exterior product; grades add and monomials concatenate."""
    a._check_compatible(b)
    acc: dict[tuple[int, ...], Fraction] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            key = ka + kb
            acc[key] = acc.get(key, 0) + ca * cb
    return type(a)(a.grade + b.grade, acc)


wedge_diff = wedge
wedge_codiff = wedge


def _apply(form: Form, xi: PathVector, single) -> PathVector:
    result: dict[ElementaryPath, Fraction] = {}
    base = list(xi.terms.items())
    for mono, r in form._terms.items():
        cur = base
        for v in reversed(mono):
            cur = [(p, c) for p, c in single(v, cur).items() if c]
            if not cur:
                break
        for p, c in cur:
            result[p] = result.get(p, 0) + r * c
    return PathVector(result)


def apply_diff(a: DiffForm, xi: PathVector) -> PathVector:
    """Apply a differential form; lowers the grade by ``a.grade``."""
    if not isinstance(a, DiffForm):
        raise TypeError("apply_diff expects a DiffForm")
    return _apply(a, xi, _d_partial_terms)


def apply_codiff(w: CodiffForm, xi: PathVector) -> PathVector:
    """Apply a co-differential form; raises the grade by ``w.grade``."""
    if not isinstance(w, CodiffForm):
        raise TypeError("apply_codiff expects a CodiffForm")
    return _apply(w, xi, _d_insert_terms)


def apply_form(form: Form, xi: PathVector) -> PathVector:
    if isinstance(form, DiffForm):
        return apply_diff(form, xi)
    return apply_codiff(form, xi)


def adjoint(form: Form) -> Form:
    """Adjoint form for the canonical inner product.

    The coefficient table is kept and multiplied by the sign of reversing
    ``k`` letters, since the adjoint of ``d/dv1 ^ ... ^ d/dvk`` is
    ``dvk ^ ... ^ dv1``.
    """
    target = CodiffForm if isinstance(form, DiffForm) else DiffForm
    s = reversal_sign(form.grade)
    return target(form.grade, {k: s * c for k, c in form._terms.items()})


def coerce_variance(form: Form, variance: str) -> Form:
    """Reinterpret a coefficient table under the other variance (no sign change)."""
    cls = DiffForm if variance == DIFF else CodiffForm
    return cls(form.grade, form.terms)
