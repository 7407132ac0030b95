"""Exact realizability search and dimension computation for small digraphs.

The search assigns every vertex a full rank vector in {1..n}^d, one vertex
at a time in descending-degree order.  Ranks lose no generality: any
realizer can be rank-compressed per coordinate to at most n distinct
values.  After each assignment the margins against all previously placed
vertices are checked exactly, so a completed assignment is a realizer by
construction and an exhausted tree is a proof of non-realizability.

Pruning, all of it completeness-preserving:

* column symmetry - permuting coordinates never changes a margin, so the
  coordinate columns (read as sequences over the assignment order) may be
  required to be lexicographically nondecreasing; a partial assignment is
  cut as soon as a column pair is strictly decreasing on the assigned
  prefix.
* forward checking - every unassigned vertex keeps a candidate mask that
  is intersected with the relation mask of each newly placed vertex; an
  empty mask prunes immediately.
* three-dimensional no-shared-coordinate rule - in R^3, if x -> y -> z is
  an induced two-path then a realizer gives x, y (and y, z) no equal
  coordinate, so those pairs additionally intersect with a no-equal mask.
  (The odd-dimension parity fact - incomparable vectors in odd d share an
  odd number of coordinates - is implied by the exact margin masks and
  needs no separate rule here.)

Budgets are node counts, not wall time, so runs are reproducible; running
out of budget is a verdict, never an error.  All entry points are pure
functions and may be called concurrently.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from . import constructions
from .digraph import Digraph, condense, is_acyclic_tournament
from .realizer import Realizer, extend_dims, verify

DEFAULT_BUDGET = 10_000_000

_FULL_MATRIX_LIMIT = 4096  # above this, relation rows are computed on demand
_SPACE_SIZE_LIMIT = 4_000_000


class EmptyInput(ValueError):
    """Point set is empty."""


class Verdict(Enum):
    REALIZABLE = "realizable"
    NOT_REALIZABLE = "not_realizable"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one fixed-dimension search.

    A REALIZABLE outcome always carries a witness that has been re-checked
    against the digraph; NOT_REALIZABLE is only reported after the pruned
    but complete tree has been exhausted.
    """

    verdict: Verdict
    witness: Realizer | None
    nodes_explored: int


@dataclass(frozen=True)
class DimensionResult:
    """Exact dimension, or bounds when the budget ran out.

    When `dimension` is set, lower == upper == dimension.  Otherwise the
    value lies in [lower, upper]; upper is the constructive 2 * #arcs
    ceiling.
    """

    dimension: int | None
    lower: int
    upper: int
    per_d: tuple[tuple[int, SolveOutcome], ...]

    @property
    def known(self) -> bool:
        return self.dimension is not None

    @property
    def witness(self) -> Realizer | None:
        for _, outcome in self.per_d:
            if outcome.verdict is Verdict.REALIZABLE:
                return outcome.witness
        return None


class _Space:
    """All rank vectors in {1..nranks}^d with pairwise relation masks."""

    def __init__(self, nranks: int, d: int):
        self.nranks = nranks
        self.d = d
        self.vectors = tuple(itertools.product(range(1, nranks + 1), repeat=d))
        self.size = len(self.vectors)
        if self.size > _SPACE_SIZE_LIMIT:
            raise ValueError(
                f"search space {nranks}^{d} is too large for exact search"
            )
        self.varr = np.array(self.vectors, dtype=np.int32).reshape(self.size, d)
        self._sym_masks: dict[int, np.ndarray] = {}
        self._margin_rows: dict[int, np.ndarray] = {}
        self._neq_rows: dict[int, np.ndarray] = {}
        self._row_cache_cap = max(64, 4_000_000 // max(self.size, 1))
        self._margin = None
        self._neq = None
        if self.size <= _FULL_MATRIX_LIMIT:
            self._build_full_matrices()

    def _build_full_matrices(self) -> None:
        N, d = self.size, self.d
        margin = np.empty((N, N), dtype=np.int8)
        neq = np.empty((N, N), dtype=bool)
        step = max(1, (1 << 22) // max(N * max(d, 1), 1))
        for start in range(0, N, step):
            chunk = self.varr[start : start + step]
            gt = (chunk[:, None, :] > self.varr[None, :, :]).sum(axis=2)
            lt = (chunk[:, None, :] < self.varr[None, :, :]).sum(axis=2)
            margin[start : start + step] = (gt - lt).astype(np.int8)
            neq[start : start + step] = (gt + lt) == d
        self._margin = margin
        self._neq = neq

    def _margin_row(self, c: int) -> np.ndarray:
        """margin(vectors[c], vectors[x]) over all x."""
        if self._margin is not None:
            return self._margin[c]
        row = self._margin_rows.get(c)
        if row is None:
            gt = (self.varr[c] > self.varr).sum(axis=1)
            lt = (self.varr[c] < self.varr).sum(axis=1)
            row = (gt - lt).astype(np.int8)
            if len(self._margin_rows) >= self._row_cache_cap:
                self._margin_rows.clear()
            self._margin_rows[c] = row
        return row

    def sign_mask(self, c: int, s: int) -> np.ndarray:
        """Mask of x with sign(margin(vectors[x], vectors[c])) == s."""
        row = self._margin_row(c)
        if s > 0:
            return row < 0
        if s < 0:
            return row > 0
        return row == 0

    def neq_mask(self, c: int) -> np.ndarray:
        """Mask of x sharing no coordinate value with vectors[c]."""
        if self._neq is not None:
            return self._neq[c]
        row = self._neq_rows.get(c)
        if row is None:
            row = ~(self.varr == self.varr[c]).any(axis=1)
            if len(self._neq_rows) >= self._row_cache_cap:
                self._neq_rows.clear()
            self._neq_rows[c] = row
        return row

    def sym_mask(self, pattern: int) -> np.ndarray:
        """Mask of vectors x with x[i] <= x[i+1] for every still-tied pair i."""
        mask = self._sym_masks.get(pattern)
        if mask is None:
            mask = np.ones(self.size, dtype=bool)
            for i in range(self.d - 1):
                if pattern >> i & 1:
                    mask &= self.varr[:, i] <= self.varr[:, i + 1]
            self._sym_masks[pattern] = mask
        return mask

    def advance_pattern(self, pattern: int, c: int) -> int:
        vec = self.vectors[c]
        for i in range(self.d - 1):
            if pattern >> i & 1 and vec[i] < vec[i + 1]:
                pattern &= ~(1 << i)
        return pattern


@lru_cache(maxsize=32)
def _space_for(nranks: int, d: int) -> _Space:
    return _Space(nranks, d)


def _no_equal_position_pairs(D: Digraph, pos: dict[int, int]) -> set[frozenset[int]]:
    """Arc pairs of induced two-paths, as assignment-order position pairs."""
    out: dict[int, list[int]] = {}
    for u, v in D.arcs:
        out.setdefault(u, []).append(v)
    pairs: set[frozenset[int]] = set()
    for x, y in D.arcs:
        for z in out.get(y, ()):
            if z != x and not D.adjacent(x, z):
                pairs.add(frozenset((pos[x], pos[y])))
                pairs.add(frozenset((pos[y], pos[z])))
    return pairs


def is_realizable(D: Digraph, d: int, budget: int = DEFAULT_BUDGET) -> SolveOutcome:
    """Decide by complete backtracking whether D has a d-dimensional realizer."""
    if d < 0:
        raise ValueError(f"dimension must be nonnegative, got {d}")
    n = D.n
    if n == 0:
        return SolveOutcome(Verdict.REALIZABLE, Realizer(d, {}), 0)
    space = _space_for(n, d)
    degree = [0] * n
    for u, v in D.arcs:
        degree[u] += 1
        degree[v] += 1
    order = sorted(range(n), key=lambda v: (-degree[v], v))
    pos = {v: i for i, v in enumerate(order)}

    need = [[0] * n for _ in range(n)]  # need[new][assigned]: required margin sign
    for u, v in D.arcs:
        need[pos[u]][pos[v]] = 1
        need[pos[v]][pos[u]] = -1
    noeq = _no_equal_position_pairs(D, pos) if d == 3 else set()

    chosen = [0] * n
    nodes = 0
    budget_hit = False

    def descend(depth: int, doms: list[np.ndarray], pattern: int) -> bool:
        nonlocal nodes, budget_hit
        candidates = doms[depth] & space.sym_mask(pattern)
        for c in np.flatnonzero(candidates):
            if nodes >= budget:
                budget_hit = True
                return False
            nodes += 1
            c = int(c)
            chosen[depth] = c
            if depth + 1 == n:
                return True
            new_doms = list(doms)
            dead = False
            for j in range(depth + 1, n):
                mask = space.sign_mask(c, need[j][depth])
                if frozenset((depth, j)) in noeq:
                    mask = mask & space.neq_mask(c)
                narrowed = new_doms[j] & mask
                if not narrowed.any():
                    dead = True
                    break
                new_doms[j] = narrowed
            if not dead and descend(depth + 1, new_doms, space.advance_pattern(pattern, c)):
                return True
            if budget_hit:
                return False
        return False

    all_vectors = np.ones(space.size, dtype=bool)
    found = descend(0, [all_vectors] * n, (1 << max(d - 1, 0)) - 1)
    if found:
        witness = Realizer(d, {order[i]: space.vectors[chosen[i]] for i in range(n)})
        if not verify(D, witness).valid:
            raise RuntimeError("search produced an invalid witness")
        return SolveOutcome(Verdict.REALIZABLE, witness, nodes)
    if budget_hit:
        return SolveOutcome(Verdict.BUDGET_EXCEEDED, None, nodes)
    return SolveOutcome(Verdict.NOT_REALIZABLE, None, nodes)


def _solve_at(D: Digraph, d: int, budget: int, shortcuts: bool) -> SolveOutcome:
    """is_realizable plus closed-form answers at d = 0 and d = 1.

    Dimension 0 is just emptiness; a digraph fits in one dimension exactly
    when its condensation is trivial or a nonempty acyclic tournament.
    Both characterizations are cross-checked against the search in tests.
    """
    if not shortcuts or d > 1:
        return is_realizable(D, d, budget)
    if d == 0:
        if D.arcs:
            return SolveOutcome(Verdict.NOT_REALIZABLE, None, 0)
        return SolveOutcome(Verdict.REALIZABLE, constructions.realize_empty(D), 0)
    if not D.arcs:
        witness = extend_dims(constructions.realize_empty(D), 1)
        return SolveOutcome(Verdict.REALIZABLE, witness, 0)
    cr = condense(D)
    if cr.condensed.arcs and is_acyclic_tournament(cr.condensed):
        line = constructions.realize_acyclic_tournament(cr.condensed)
        witness = constructions.condense_lift(D, cr, line)
        if not verify(D, witness).valid:
            raise RuntimeError("condensation shortcut produced an invalid witness")
        return SolveOutcome(Verdict.REALIZABLE, witness, 0)
    return SolveOutcome(Verdict.NOT_REALIZABLE, None, 0)


def dimension(
    D: Digraph,
    max_d: int | None = None,
    budget: int = DEFAULT_BUDGET,
    shortcuts: bool = True,
) -> DimensionResult:
    """Smallest d at which D is realizable, searched upward from 0.

    The effective ceiling is min(max_d, 2 * #arcs); the latter is always a
    valid upper bound because the generic arc-by-arc construction realizes
    any digraph in 2 * #arcs dimensions.  The first budget-exhausted level
    stops the climb and yields bounds instead of a value, never an
    unproven claim.
    """
    arc_bound = 2 * len(D.arcs)
    ceiling = arc_bound if max_d is None else min(max_d, arc_bound)
    per_d: list[tuple[int, SolveOutcome]] = []
    for d in range(ceiling + 1):
        outcome = _solve_at(D, d, budget, shortcuts)
        per_d.append((d, outcome))
        if outcome.verdict is Verdict.REALIZABLE:
            return DimensionResult(d, d, d, tuple(per_d))
        if outcome.verdict is Verdict.BUDGET_EXCEEDED:
            return DimensionResult(None, d, arc_bound, tuple(per_d))
    return DimensionResult(None, ceiling + 1, arc_bound, tuple(per_d))


def es_chain_or_antichain(points) -> tuple[str, list[tuple[int, int]]]:
    """Longest chain or largest antichain level of planar points, whichever
    is longer (ties go to the chain).

    Comparability is componentwise: (x1, x2) <= (y1, y2) iff x1 <= y1 and
    x2 <= y2.  The chain comes from quadratic DP over the lexicographically
    sorted points; the antichain is a largest height level of that DP,
    which is an antichain because a dominated point always has a smaller
    height.  Among m >= k^2 + 1 points one of the two has size >= k + 1.
    """
    pts = [(int(p[0]), int(p[1])) for p in points]
    if not pts:
        raise EmptyInput("no points given")
    pts.sort()
    m = len(pts)
    height = [1] * m
    parent = [-1] * m
    for i in range(m):
        xi, yi = pts[i]
        for j in range(i):
            if pts[j][0] <= xi and pts[j][1] <= yi and height[j] + 1 > height[i]:
                height[i] = height[j] + 1
                parent[i] = j
    longest = max(height)
    k = height.index(longest)
    chain: list[tuple[int, int]] = []
    while k != -1:
        chain.append(pts[k])
        k = parent[k]
    chain.reverse()
    counts = Counter(height)
    level, level_size = max(counts.items(), key=lambda kv: (kv[1], -kv[0]))
    if len(chain) >= level_size:
        return "chain", chain
    return "antichain", [pts[i] for i in range(m) if height[i] == level]
