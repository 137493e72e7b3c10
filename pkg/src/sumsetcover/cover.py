"""Pivot-distinct bases in matrix space and minimum line covers.

Two steps feed the witness construction.  First, Gaussian elimination in the
vector space of matrices rewrites a basis so that the first nonzero positions
(row-major "pivots") are pairwise distinct.  Second, the pivot positions are
covered by as few lines (full rows or columns) as possible: a maximum
bipartite matching via Hopcroft-Karp, then the Koenig construction turns it
into a minimum vertex cover of the same size.  When every matrix in the span
has rank at most r, the minimum cover provably has size at most r, so
exceeding a supplied rank budget is reported as a bug, not as data.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BoundViolated, DependentInput, ZeroMatrix
from .polynomials import poly_scale, poly_sub
from .summatrix import SumMatrix


def first_nonzero_position(entries: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Row-major first nonzero coordinate; ZeroMatrix if there is none."""
    for i, row in enumerate(entries):
        for j, v in enumerate(row):
            if v:
                return (i, j)
    raise ZeroMatrix("the zero matrix has no pivot position")


@dataclass(frozen=True)
class PivotBasis:
    """Same span as the input basis, but with pairwise distinct pivots."""

    matrices: tuple[SumMatrix, ...]
    pivots: tuple[tuple[int, int], ...]


def pivot_basis(mats: Sequence[SumMatrix]) -> PivotBasis:
    """Eliminate a matrix basis to pairwise distinct pivot positions.

    Matrices are processed in input order; on a pivot collision the scaled
    predecessor is subtracted until a fresh pivot appears.  Reaching zero
    contradicts linear independence and raises DependentInput.  Source
    polynomials are combined in lockstep, so every output matrix still
    equals the sum matrix of its recorded source.
    """
    if not mats:
        return PivotBasis((), ())
    rows, cols = mats[0].rows, mats[0].cols
    q = mats[0].q
    taken: dict[tuple[int, int], int] = {}
    out: list[SumMatrix] = []
    for mat in mats:
        assert mat.rows == rows and mat.cols == cols
        work = [list(r) for r in mat.entries]
        source = mat.source
        while True:
            pos = _first_nonzero(work)
            if pos is None:
                raise DependentInput("basis matrix eliminated to zero")
            if pos not in taken:
                break
            prior = out[taken[pos]]
            factor = work[pos[0]][pos[1]]
            for i, prow in enumerate(prior.entries):
                wrow = work[i]
                for j, pv in enumerate(prow):
                    if pv:
                        wrow[j] = (wrow[j] - factor * pv) % q
            source = poly_sub(source, poly_scale(prior.source, factor))
        inv = pow(work[pos[0]][pos[1]], -1, q)
        if inv != 1:
            work = [[(inv * v) % q for v in row] for row in work]
            source = poly_scale(source, inv)
        taken[pos] = len(out)
        out.append(SumMatrix(rows, cols, tuple(tuple(r) for r in work), source))
    return PivotBasis(tuple(out), tuple(first_nonzero_position(m.entries) for m in out))


def _first_nonzero(entries: list[list[int]]) -> tuple[int, int] | None:
    for i, row in enumerate(entries):
        for j, v in enumerate(row):
            if v:
                return (i, j)
    return None


def maximum_matching(adj: Mapping[int, Sequence[int]]) -> dict[int, int]:
    """Hopcroft-Karp maximum matching, left index -> right index.

    Left vertices are visited in sorted order and adjacency lists are
    traversed as given, so the matching is reproducible.
    """
    INF = -1
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    lefts = sorted(adj)
    dist: dict[int, int] = {}

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in lefts:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r.get(v)
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_r.get(v)
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in lefts:
            if u not in match_l:
                dfs(u)
    return match_l


@dataclass(frozen=True)
class LineCover:
    """Rows and columns jointly containing every covered position."""

    cover_rows: tuple[int, ...]
    cover_cols: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.cover_rows) + len(self.cover_cols)


def line_cover(pivots: Iterable[tuple[int, int]], rank_bound: int) -> LineCover:
    """Minimum set of lines covering the given positions.

    Maximum matching plus the Koenig alternating-reachability construction;
    the cover size equals the matching size.  A result above rank_bound is
    impossible when rank_bound really bounds every rank in the generating
    subspace, so it raises BoundViolated to flag an upstream bug.
    """
    pts = sorted(set(pivots))
    adj: dict[int, list[int]] = {}
    for i, j in pts:
        adj.setdefault(i, []).append(j)
    for i in adj:
        adj[i].sort()
    match_l = maximum_matching(adj)
    match_r = {v: u for u, v in match_l.items()}

    reach_l = {u for u in adj if u not in match_l}
    reach_r: set[int] = set()
    frontier = sorted(reach_l)
    while frontier:
        nxt: list[int] = []
        for u in frontier:
            for v in adj[u]:
                if v in reach_r:
                    continue
                reach_r.add(v)
                w = match_r.get(v)
                if w is not None and w not in reach_l:
                    reach_l.add(w)
                    nxt.append(w)
        frontier = sorted(nxt)

    cover_rows = tuple(sorted(u for u in adj if u not in reach_l))
    cover_cols = tuple(sorted(reach_r))
    cover = LineCover(cover_rows, cover_cols)
    assert cover.size == len(match_l), "Koenig equality must hold"
    row_set, col_set = set(cover_rows), set(cover_cols)
    assert all(i in row_set or j in col_set for i, j in pts), "cover must cover"
    if cover.size > rank_bound:
        raise BoundViolated(
            f"minimum line cover {cover.size} exceeds rank bound {rank_bound}"
        )
    return cover
