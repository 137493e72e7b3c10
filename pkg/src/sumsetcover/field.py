"""Prime fields, points of F_q^n, and duplicate-free point sets.

Everything here is immutable and every operation is a pure function, so values
can be shared freely between threads.  Vectors are ordered lexicographically
by coordinate tuple; that order is the canonical ordering used whenever a
deterministic choice has to be made downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionMismatch, EnumerationTooLarge, NotPrime

# Full-space enumeration is refused above this many points unless the caller
# raises the cap explicitly; the witness construction is inherently O(q^n).
DEFAULT_ENUM_CAP = 2**22


def is_prime(q: int) -> bool:
    """Deterministic trial division; fine for desk-scale moduli."""
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_q; construction rejects composite moduli."""

    q: int

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise NotPrime(f"modulus must be prime, got {self.q}")

    def inv(self, a: int) -> int:
        return pow(a, -1, self.q)


def make_field(q: int) -> PrimeField:
    """Return F_q, raising NotPrime for composite q."""
    return PrimeField(q)


@dataclass(frozen=True, order=True)
class FieldVector:
    """A point of F_q^n; coordinates are reduced mod q at construction."""

    q: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(c % self.q for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def _check_compatible(self, other: FieldVector) -> None:
        if self.q != other.q or self.n != other.n:
            raise DimensionMismatch(
                f"vectors live in different spaces: "
                f"(q={self.q}, n={self.n}) vs (q={other.q}, n={other.n})"
            )

    def __add__(self, other: FieldVector) -> FieldVector:
        if not isinstance(other, FieldVector):
            return NotImplemented
        self._check_compatible(other)
        return FieldVector(self.q, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: FieldVector) -> FieldVector:
        if not isinstance(other, FieldVector):
            return NotImplemented
        self._check_compatible(other)
        return FieldVector(self.q, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> FieldVector:
        return FieldVector(self.q, tuple(-a for a in self.coords))

    def scale(self, k: int) -> FieldVector:
        return FieldVector(self.q, tuple(k * a for a in self.coords))


def vec_add(u: FieldVector, v: FieldVector) -> FieldVector:
    """Coordinatewise sum mod q; raises DimensionMismatch on unlike spaces."""
    return u + v


@dataclass(frozen=True)
class PointSet:
    """A duplicate-free finite subset of F_q^n.

    Iteration is always in canonical (lexicographic) order so that any
    construction driven by iteration is reproducible.
    """

    q: int
    n: int
    members: frozenset[FieldVector]

    def __post_init__(self) -> None:
        for v in self.members:
            if v.q != self.q or v.n != self.n:
                raise DimensionMismatch(
                    f"member (q={v.q}, n={v.n}) does not fit set over (q={self.q}, n={self.n})"
                )

    @classmethod
    def empty(cls, q: int, n: int) -> PointSet:
        return cls(q, n, frozenset())

    @classmethod
    def from_vectors(cls, q: int, n: int, vectors: Iterable[FieldVector]) -> PointSet:
        return cls(q, n, frozenset(vectors))

    @classmethod
    def from_coords(cls, q: int, n: int, coords: Iterable[Iterable[int]]) -> PointSet:
        return cls(q, n, frozenset(FieldVector(q, tuple(c)) for c in coords))

    def ordered(self) -> tuple[FieldVector, ...]:
        return tuple(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[FieldVector]:
        return iter(self.ordered())

    def __contains__(self, v: FieldVector) -> bool:
        return v in self.members

    def union(self, other: PointSet) -> PointSet:
        self._check_compatible(other)
        return PointSet(self.q, self.n, self.members | other.members)

    def difference(self, other: PointSet) -> PointSet:
        self._check_compatible(other)
        return PointSet(self.q, self.n, self.members - other.members)

    def issubset(self, other: PointSet) -> bool:
        self._check_compatible(other)
        return self.members <= other.members

    def _check_compatible(self, other: PointSet) -> None:
        if self.q != other.q or self.n != other.n:
            raise DimensionMismatch(
                f"sets live in different spaces: "
                f"(q={self.q}, n={self.n}) vs (q={other.q}, n={other.n})"
            )


def sumset(S: PointSet, T: PointSet) -> PointSet:
    """All pairwise sums {s + t}; empty iff S or T is empty."""
    S._check_compatible(T)
    return PointSet(S.q, S.n, frozenset(s + t for s in S.members for t in T.members))


def all_points(q: int, n: int, *, cap: int = DEFAULT_ENUM_CAP) -> PointSet:
    """The full space F_q^n; refuses when q^n exceeds the enumeration cap."""
    size = q**n
    if size > cap:
        raise EnumerationTooLarge(f"q^n = {size} exceeds enumeration cap {cap}")
    vecs = (FieldVector(q, c) for c in itertools.product(range(q), repeat=n))
    return PointSet(q, n, frozenset(vecs))


def complement(A: PointSet, *, cap: int = DEFAULT_ENUM_CAP) -> PointSet:
    """F_q^n minus A; needs a full-space enumeration, hence the cap."""
    return all_points(A.q, A.n, cap=cap).difference(A)
