"""Reduced monomials: enumeration, exact counting, and the cap-set budget.

A monomial is an exponent tuple with every entry in [0, q-1] ("reduced":
such monomials represent functions F_q^n -> F_q without redundancy).  We
write m(q, n, d) for the number of reduced monomials in n variables of total
degree at most d.

Counting never enumerates: the per-degree counts are the coefficients of
(1 + x + ... + x^(q-1))^n, computed by repeated exact big-integer
convolution, so counts remain available for n in the hundreds where the
monomial list itself would have astronomically many entries.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterator

from .errors import EnumerationTooLarge
from .field import DEFAULT_ENUM_CAP

Monomial = tuple[int, ...]


def monomial_key(m: Monomial) -> tuple[int, tuple[int, ...]]:
    """Canonical graded order: total degree first, earlier variables first.

    Within one degree, x1^2 precedes x1*x2 precedes x2^2; achieved by
    comparing negated exponent tuples.
    """
    return (sum(m), tuple(-e for e in m))


@dataclass(frozen=True)
class CountTable:
    """Exact counts of reduced monomials by total degree, 0 .. (q-1)*n."""

    q: int
    n: int
    counts: tuple[int, ...]

    def prefix(self, d: int) -> int:
        """Number of monomials of total degree <= d (clamped to the range)."""
        if d < 0:
            return 0
        return sum(self.counts[: d + 1])


def _convolve_window(counts: list[int], q: int) -> list[int]:
    """Multiply a coefficient list by 1 + x + ... + x^(q-1), exactly."""
    out = [0] * (len(counts) + q - 1)
    for i, c in enumerate(counts):
        if c:
            for j in range(q):
                out[i + j] += c
    return out


def degree_counts(q: int, n: int) -> CountTable:
    """Coefficients of (1 + x + ... + x^(q-1))^n as exact integers."""
    counts = [1]
    for _ in range(n):
        counts = _convolve_window(counts, q)
    return CountTable(q, n, tuple(counts))


def count_m(q: int, n: int, d: int) -> int:
    """Exact number of reduced monomials of total degree <= d.

    Degrees above (q-1)*n clamp to q^n (every reduced monomial counted).
    """
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    return degree_counts(q, n).prefix(d)


def _tuples_of_degree(n: int, e: int, cap_exp: int) -> Iterator[Monomial]:
    """Exponent tuples of length n summing to e, entries <= cap_exp.

    First coordinate descends, so a fixed degree comes out in canonical
    order (matching monomial_key).
    """
    if n == 0:
        if e == 0:
            yield ()
        return
    lo = max(0, e - cap_exp * (n - 1))
    for first in range(min(e, cap_exp), lo - 1, -1):
        for rest in _tuples_of_degree(n - 1, e - first, cap_exp):
            yield (first,) + rest


def enumerate_monomials(
    q: int, n: int, d: int, *, cap: int = DEFAULT_ENUM_CAP
) -> list[Monomial]:
    """All reduced monomials of total degree <= d, in canonical graded order.

    The result has exactly count_m(q, n, d) entries; the count is checked
    against the cap before any enumeration happens.
    """
    total = count_m(q, n, d)
    if total > cap:
        raise EnumerationTooLarge(f"{total} monomials exceed enumeration cap {cap}")
    out: list[Monomial] = []
    for e in range(0, min(d, (q - 1) * n) + 1):
        out.extend(_tuples_of_degree(n, e, q - 1))
    return out


def capset_bound_M(q: int, n: int) -> int:
    """The 3 * m(q, n, floor((q-1)*n/3)) budget for witness-set sizes.

    Fractional degree indices are floored: total degrees are integers, so
    "degree at most (q-1)*n/3" admits exactly the monomials of degree
    <= floor((q-1)*n/3).
    """
    return 3 * count_m(q, n, ((q - 1) * n) // 3)


def growth_estimate(q: int, n_max: int, *, digits: int = 30) -> list[Decimal]:
    """The sequence (3 * m(q, n, floor((q-1)n/3)))^(1/n) for n = 1 .. n_max.

    Computed from exact big-integer counts; the root is taken in decimal
    arithmetic at the requested precision.  The values approach a constant
    strictly below q.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    out: list[Decimal] = []
    counts = [1]
    for n in range(1, n_max + 1):
        counts = _convolve_window(counts, q)
        m = sum(counts[: ((q - 1) * n) // 3 + 1])
        big = 3 * m
        if n == 1:
            out.append(Decimal(big))
            continue
        with decimal.localcontext() as ctx:
            ctx.prec = digits
            root = (Decimal(big).ln() / n).exp()
            nearest = int(root.to_integral_value())
        if nearest**n == big:
            out.append(Decimal(nearest))
        else:
            out.append(root)
    return out
