"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import itertools
from functools import lru_cache

import hypothesis.strategies as st

import sumsetcover as sc


@lru_cache(maxsize=None)
def space_points(q: int, n: int) -> tuple[sc.FieldVector, ...]:
    return sc.all_points(q, n).ordered()


def subset_from_mask(q: int, n: int, mask: int) -> sc.PointSet:
    pts = space_points(q, n)
    return sc.PointSet.from_vectors(q, n, (p for i, p in enumerate(pts) if mask >> i & 1))


@st.composite
def small_spaces(draw, primes=(2, 3), max_n=2):
    q = draw(st.sampled_from(primes))
    n = draw(st.integers(1, max_n))
    return q, n


@st.composite
def point_sets(draw, primes=(2, 3), max_n=2, allow_empty=True):
    q, n = draw(small_spaces(primes=primes, max_n=max_n))
    size = q**n
    mask = draw(st.integers(0 if allow_empty else 1, 2**size - 1))
    return subset_from_mask(q, n, mask)


@st.composite
def set_pairs(draw, primes=(2, 3), max_n=2, allow_empty=True):
    q, n = draw(small_spaces(primes=primes, max_n=max_n))
    size = q**n
    lo = 0 if allow_empty else 1
    s_mask = draw(st.integers(lo, 2**size - 1))
    t_mask = draw(st.integers(lo, 2**size - 1))
    return subset_from_mask(q, n, s_mask), subset_from_mask(q, n, t_mask)


@st.composite
def polynomials(draw, q=3, n=2, max_degree=None):
    monos = sc.enumerate_monomials(q, n, max_degree if max_degree is not None else (q - 1) * n)
    coeffs = draw(st.lists(st.integers(0, q - 1), min_size=len(monos), max_size=len(monos)))
    return sc.poly_from_terms(q, n, dict(zip(monos, coeffs)))


def brute_sumset(S: sc.PointSet, T: sc.PointSet) -> set[tuple[int, ...]]:
    """Independent sumset enumeration on raw coordinate tuples."""
    q = S.q
    return {
        tuple((a + b) % q for a, b in zip(s.coords, t.coords))
        for s in S.members
        for t in T.members
    }


def brute_monomials(q: int, n: int, d: int) -> set[tuple[int, ...]]:
    """Independent reduced-monomial enumeration by full product filtering."""
    return {e for e in itertools.product(range(q), repeat=n) if sum(e) <= d}
