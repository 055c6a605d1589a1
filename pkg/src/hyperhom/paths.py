"""Elementary paths and sparse rational path vectors.

An elementary n-path is any tuple of ``n + 1`` vertex indices; repeats and
arbitrary order are allowed.  A :class:`PathVector` is a finite rational
combination of elementary paths of one grade.  The empty vector plays the
role of zero in every grade (including negative ones).
"""
from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .errors import GradeMismatchError

ElementaryPath = tuple[int, ...]


class CyclicFlag(enum.Enum):
    CYCLIC = "cyclic"
    SORTED = "sorted"
    UNSORTED_REGULAR = "unsorted-regular"


def is_cyclic(p: ElementaryPath) -> bool:
    return len(set(p)) != len(p)


def is_sorted(p: ElementaryPath) -> bool:
    return all(a < b for a, b in zip(p, p[1:]))


def classify(p: ElementaryPath) -> CyclicFlag:
    if is_cyclic(p):
        return CyclicFlag.CYCLIC
    if is_sorted(p):
        return CyclicFlag.SORTED
    return CyclicFlag.UNSORTED_REGULAR


class PathVector:
    """Immutable sparse combination ``sum c_p * p`` with no zero coefficients."""

    __slots__ = ("_terms", "_grade")

    def __init__(self, terms: Mapping[ElementaryPath, Rational | int] | None = None):
        clean: dict[ElementaryPath, Fraction] = {}
        grade = None
        for path, c in (terms or {}).items():
            path = tuple(path)
            if not path:
                raise ValueError("an elementary path needs at least one vertex")
            if grade is None:
                grade = len(path) - 1
            elif len(path) - 1 != grade:
                raise GradeMismatchError(f"mixed grades {grade} and {len(path) - 1}")
            c = Fraction(c)
            if c:
                clean[path] = clean.get(path, 0) + c
        self._terms = {p: c for p, c in clean.items() if c}
        self._grade = grade if self._terms else None

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[ElementaryPath, Rational | int]]) -> PathVector:
        acc: dict[ElementaryPath, Fraction] = {}
        for p, c in pairs:
            p = tuple(p)
            acc[p] = acc.get(p, Fraction(0)) + Fraction(c)
        return cls(acc)

    @classmethod
    def elementary(cls, *vertices: int, coeff: Rational | int = 1) -> PathVector:
        return cls({tuple(vertices): coeff})

    @property
    def grade(self) -> int | None:
        """Grade of the vector, ``None`` for ZERO."""
        return self._grade

    @property
    def terms(self) -> dict[ElementaryPath, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[ElementaryPath, Fraction]]:
        """Terms in a stable (sorted) order."""
        return sorted(self._terms.items())

    def coeff(self, path: ElementaryPath) -> Fraction:
        return self._terms.get(tuple(path), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[ElementaryPath]:
        return iter(sorted(self._terms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: PathVector) -> PathVector:
        if not isinstance(other, PathVector):
            return NotImplemented
        if self._grade is not None and other._grade is not None and self._grade != other._grade:
            raise GradeMismatchError(f"cannot add grades {self._grade} and {other._grade}")
        acc = dict(self._terms)
        for p, c in other._terms.items():
            acc[p] = acc.get(p, 0) + c
        return PathVector(acc)

    def __neg__(self) -> PathVector:
        return PathVector({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: PathVector) -> PathVector:
        return self + (-other)

    def __mul__(self, scalar: Rational | int) -> PathVector:
        if not isinstance(scalar, (int, Rational)):
            return NotImplemented
        s = Fraction(scalar)
        return PathVector({p: c * s for p, c in self._terms.items()})

    __rmul__ = __mul__

    def filter(self, keep) -> PathVector:
        return PathVector({p: c for p, c in self._terms.items() if keep(p)})

    def __repr__(self) -> str:
        if not self._terms:
            return "PathVector(0)"
        return "PathVector(" + " + ".join(f"{c}*{p}" for p, c in self.items()) + ")"


ZERO = PathVector()


def path_sum(vectors: Iterable[PathVector]) -> PathVector:
    acc: dict[ElementaryPath, Fraction] = {}
    for v in vectors:
        for p, c in v._terms.items():
            acc[p] = acc.get(p, 0) + c
    return PathVector(acc)


def inner(xi: PathVector, eta: PathVector) -> Fraction:
    """Canonical inner product; elementary paths are orthonormal."""
    if xi.grade != eta.grade:
        return Fraction(0)
    small, big = sorted((xi._terms, eta._terms), key=len)
    return sum((c * big[p] for p, c in small.items() if p in big), Fraction(0))


def project_sorted(xi: PathVector) -> PathVector:
    """Keep only strictly increasing paths.

    This realizes the identification of the quotient by cyclic paths with
    the chain space spanned by hyperedges: cyclic terms and unsorted
    regular terms are both dropped, coefficients are untouched.
    """
    return xi.filter(is_sorted)


def cyclic_part(xi: PathVector) -> PathVector:
    return xi.filter(is_cyclic)


def unsorted_regular_part(xi: PathVector) -> PathVector:
    return xi.filter(lambda p: classify(p) is CyclicFlag.UNSORTED_REGULAR)


def from_hyperedge_vector(basis, coords) -> PathVector:
    """Combine hyperedges (as sorted paths) with rational coordinates."""
    return PathVector.from_pairs((tuple(e), c) for e, c in zip(basis, coords) if c)
