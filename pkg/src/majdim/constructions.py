"""Constructive realizers for the digraph families with known dimensions.

Every operation returns a Realizer that verifies against its target
digraph.  The maps here give upper bounds; minimality is the exact
solver's concern.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import (
    BadParams,
    CondensationResult,
    Digraph,
    condense,
    is_tournament,
)
from .realizer import Realizer, extend_dims, verify


class ConstructionError(ValueError):
    """A construction's precondition does not hold."""


class NotEmpty(ConstructionError):
    """Digraph has arcs where an empty one is required."""


class NotTournament(ConstructionError):
    """Some vertex pair is non-adjacent."""


class HasCycle(ConstructionError):
    """Tournament contains a directed cycle."""


class BadBase(ConstructionError):
    """Supplied realizer does not verify against its base digraph."""


class NotIncomparable(ConstructionError):
    """Arc endpoints are already adjacent in the base digraph."""


class WouldBreakSimplicity(ConstructionError):
    """Adding the arc would create a loop or an antiparallel pair."""


class TooFewParts(ConstructionError):
    """Disjoint-union construction needs at least two parts."""


class ClassMismatch(ConstructionError):
    """Condensation data does not describe the given digraph."""


def realize_empty(D: Digraph) -> Realizer:
    """Dimension-0 realizer of an arcless digraph: every vertex is the
    single point of the 0-dimensional space and all margins are 0."""
    if D.arcs:
        raise NotEmpty(f"digraph has {len(D.arcs)} arcs")
    return Realizer(0, {v: () for v in range(D.n)})


def realize_acyclic_tournament(D: Digraph) -> Realizer:
    """Dimension-1 realizer of a transitive tournament.

    In an acyclic tournament the out-degrees are 0..n-1; sending each
    vertex to out-degree + 1 orders the line exactly like the arcs.
    """
    if not is_tournament(D):
        raise NotTournament(f"{D.n} vertices need {D.n * (D.n - 1) // 2} arcs")
    degs = [0] * D.n
    for u, _ in D.arcs:
        degs[u] += 1
    if sorted(degs) != list(range(D.n)):
        raise HasCycle("tournament out-degrees are not pairwise distinct")
    return Realizer(1, {v: (degs[v] + 1,) for v in range(D.n)})


def _extend_with_arc(D_minus: Digraph, f: Realizer, u: int, v: int) -> Realizer:
    """Core of add_arc_realizer, preconditions already checked."""
    if not D_minus.arcs:
        # An arcless base needs only two fresh coordinates: u = (2, 3),
        # v = (1, 2), every other vertex (3, 1) splits 1-1 against both.
        vecs: dict[int, tuple[int, ...]] = {w: (3, 1) for w in range(D_minus.n)}
        vecs[u] = (2, 3)
        vecs[v] = (1, 2)
        return Realizer(2, vecs)
    vecs = {}
    for w in range(D_minus.n):
        base = f.vectors[w]
        if w == u:
            vecs[w] = base + (2, 0)
        elif w == v:
            vecs[w] = base + (1, 0)
        else:
            vecs[w] = base + (0, 1)
    return Realizer(f.d + 2, vecs)


def add_arc_realizer(D_minus: Digraph, f: Realizer, arc: tuple[int, int]) -> Realizer:
    """Extend a realizer of D_minus to one of D_minus plus one new arc.

    Two coordinates are appended: the first separates u from v (2 vs 1,
    everyone else 0), the second restores the balance against bystanders
    (0 for u, v; 1 for the rest).  Only the u, v margin changes, from 0 to
    +1.  When D_minus has no arcs the base coordinates are dropped and the
    two fresh coordinates alone realize the single-arc digraph.
    """
    u, v = arc
    if u == v:
        raise WouldBreakSimplicity(f"arc ({u}, {v}) is a loop")
    if not (0 <= u < D_minus.n and 0 <= v < D_minus.n):
        raise BadParams(f"arc ({u}, {v}) outside 0..{D_minus.n - 1}")
    if (v, u) in D_minus.arcs:
        raise WouldBreakSimplicity(f"({v}, {u}) already present")
    if (u, v) in D_minus.arcs:
        raise NotIncomparable(f"({u}, {v}) already an arc of the base")
    if not verify(D_minus, f).valid:
        raise BadBase("realizer does not verify against the base digraph")
    return _extend_with_arc(D_minus, f, u, v)


def union_realizer(parts: list[tuple[Digraph, Realizer]]) -> Realizer:
    """Realizer of the disjoint union of the parts.

    With G = floor((d_max + 1) / 2), everything is zero-padded to 2G
    coordinates and each part after the first is shifted up in coordinates
    1..G and down in coordinates G+1..2G, past the extremes of the part
    before it.  Constant shifts keep within-part margins intact, while any
    cross-part pair splits exactly G coordinates each way, so its margin
    is 0.  Vertex labels of the result follow the input part order, part
    p's vertices offset by the sizes before it; internally a maximum-
    dimension part is processed first.
    """
    parts = list(parts)
    if len(parts) < 2:
        raise TooFewParts(f"need at least 2 parts, got {len(parts)}")
    for D_i, f_i in parts:
        if not verify(D_i, f_i).valid:
            raise BadBase("part realizer does not verify against its digraph")

    offsets = []
    total = 0
    for D_i, _ in parts:
        offsets.append(total)
        total += D_i.n

    d_max = max(f_i.d for _, f_i in parts)
    if d_max == 0:
        return Realizer(0, {offsets[p] + v: () for p, (D_i, _) in enumerate(parts) for v in range(D_i.n)})

    gamma = (d_max + 1) // 2
    dim = 2 * gamma
    first = next(p for p in range(len(parts)) if parts[p][1].d == d_max)
    order = [first] + [p for p in range(len(parts)) if p != first]

    result: dict[int, tuple[int, ...]] = {}
    prev_max_lo = 0
    prev_min_hi = 0
    have_prev = False
    for step, p in enumerate(order):
        D_p, f_p = parts[p]
        padded = extend_dims(f_p, dim).vectors
        if D_p.n == 0:
            continue
        if not have_prev:
            shifted = dict(padded)
        else:
            lo_min = min(vec[t] for vec in padded.values() for t in range(gamma))
            hi_max = max(vec[t] for vec in padded.values() for t in range(gamma, dim))
            up = prev_max_lo - lo_min + 1
            down = prev_min_hi - hi_max - 1
            shifted = {
                v: tuple(c + up for c in vec[:gamma]) + tuple(c + down for c in vec[gamma:])
                for v, vec in padded.items()
            }
        prev_max_lo = max(vec[t] for vec in shifted.values() for t in range(gamma))
        prev_min_hi = min(vec[t] for vec in shifted.values() for t in range(gamma, dim))
        have_prev = True
        for v, vec in shifted.items():
            result[offsets[p] + v] = vec
    return Realizer(dim, result)


def condense_lift(D: Digraph, cr: CondensationResult, f_star: Realizer) -> Realizer:
    """Lift a realizer of the condensed digraph back to D.

    Homogeneous vertices relate to the rest of the digraph identically, so
    assigning every vertex its class representative's vector realizes D.
    """
    if condense(D) != cr:
        raise ClassMismatch("condensation data does not match the digraph")
    if not verify(cr.condensed, f_star).valid:
        raise BadBase("realizer does not verify against the condensed digraph")
    return Realizer(f_star.d, {v: f_star.vectors[cr.class_of[v]] for v in range(D.n)})


def realize_path(n: int) -> Realizer:
    """Realizer of the directed path on n vertices.

    Dimensions: 0 for a single vertex, 1 for one arc, 3 for the 3-vertex
    path, and 4 beyond.  For n >= 4 the map places vertex t (1-based) at

        (2m - t, 2m - t, t, t)          for odd t,
        (2m - t, 2m - t, t - 2, t + 2)  for even t,

    where 2m - 1 is the smallest odd vertex count >= n.  The first two
    coordinates descend along the path and the last two ascend with an
    even/odd stagger, so consecutive vertices win 3-1 while any pair two
    or more steps apart splits {1,2} against {3,4}.  Even n takes the
    leading n vertices of the odd construction; a prefix of a path is an
    induced subpath, so the restriction still verifies.
    """
    if n < 1:
        raise BadParams(f"realize_path({n})")
    if n == 1:
        return Realizer(0, {0: ()})
    if n == 2:
        return Realizer(1, {0: (2,), 1: (1,)})
    if n == 3:
        return Realizer(3, {0: (1, 2, 3), 1: (3, 1, 2), 2: (2, 0, 3)})
    m = (n + 1) // 2 if n % 2 else (n + 2) // 2
    vecs = {}
    for t in range(1, n + 1):
        if t % 2:
            vecs[t - 1] = (2 * m - t, 2 * m - t, t, t)
        else:
            vecs[t - 1] = (2 * m - t, 2 * m - t, t - 2, t + 2)
    return Realizer(4, vecs)


# --- cycle matrices ---------------------------------------------------------


def _matrix_wins(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return sum(x > y for x, y in zip(a, b))


def check_cycle_matrix(n: int, entries) -> None:
    """Raise ConstructionError unless the n x 4 matrix realizes an n-cycle.

    Required: (i) positive integer entries; (ii) per-column distinct
    values; (iii) some column peaks in the last row while a different one
    bottoms out in the first; (iv) each cyclically consecutive row pair
    wins 3-1 downward; (v) every other pair splits 2-2.
    """
    if len(entries) != n or any(len(row) != 4 for row in entries):
        raise ConstructionError(f"expected an {n} x 4 matrix")
    for row in entries:
        for a in row:
            if not isinstance(a, int) or a < 1:
                raise ConstructionError(f"entry {a!r} is not a positive integer")
    for k in range(4):
        col = [row[k] for row in entries]
        if len(set(col)) != n:
            raise ConstructionError(f"column {k + 1} has repeated values")
    max_cols = {k for k in range(4) if max(range(n), key=lambda i: entries[i][k]) == n - 1}
    min_cols = {k for k in range(4) if min(range(n), key=lambda i: entries[i][k]) == 0}
    if not any(j != k for j in max_cols for k in min_cols):
        raise ConstructionError("no disjoint last-row-max / first-row-min columns")
    for i in range(n):
        j = (i + 1) % n
        if _matrix_wins(entries[i], entries[j]) != 3:
            raise ConstructionError(f"rows {i + 1}, {j + 1}: consecutive pair is not 3-1")
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if _matrix_wins(entries[i], entries[j]) != 2:
                raise ConstructionError(f"rows {i + 1}, {j + 1}: distant pair is not 2-2")


@dataclass(frozen=True)
class CycleMatrix:
    """n x 4 matrix of positive integers whose rows realize an n-cycle."""

    n: int
    entries: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "entries", tuple(tuple(int(a) for a in row) for row in self.entries)
        )
        check_cycle_matrix(self.n, self.entries)


_BASE_FOUR = (
    (3, 1, 2, 4),
    (2, 4, 1, 3),
    (1, 3, 4, 2),
    (4, 2, 3, 1),
)

# Cluster layouts for the two-coordinate dominance blocks.  Within a
# cluster, (vertex, local_x, local_y); a vertex dominates another exactly
# when it wins both locals.

_SLOT_SPAN = 10


def _pair(a: int, b: int):
    return [(a, 2, 2), (b, 1, 1)]


def _chain3(a: int, b: int, c: int):
    return [(a, 3, 3), (b, 2, 2), (c, 1, 1)]


def _linked_pairs(p: int, q: int, r: int, s: int):
    # p > q and r > s with the extra relation p > s; all other pairs split.
    return [(p, 3, 6), (q, 1, 4), (r, 6, 3), (s, 2, 2)]


def _single(v: int):
    return [(v, 1, 1)]


def _block_columns(clusters, n: int) -> tuple[list[int], list[int]]:
    """Place clusters along an antidiagonal and return the x and y columns.

    Clusters sit in bands of width _SLOT_SPAN, x increasing and y
    decreasing with the slot index, so vertices from different clusters
    always split one coordinate each; within a cluster the local layout
    decides.
    """
    xs = [0] * (n + 1)  # 1-based vertices
    ys = [0] * (n + 1)
    S = len(clusters)
    for t, cluster in enumerate(clusters):
        for v, lx, ly in cluster:
            xs[v] = _SLOT_SPAN * t + lx
            ys[v] = _SLOT_SPAN * (S - 1 - t) + ly
    return xs, ys


def _first_block_clusters(n: int):
    # Carries the odd-indexed cycle arcs (1,2), (3,4), ...
    if n % 2 == 0:
        return [_pair(2 * t - 1, 2 * t) for t in range(1, n // 2 + 1)]
    m = (n - 1) // 2
    clusters = [_single(n), _linked_pairs(1, 2, n - 2, n - 1)]
    clusters += [_pair(2 * t - 1, 2 * t) for t in range(2, m)]
    return clusters


def _second_block_clusters(n: int):
    # Carries the even-indexed arcs (2,3), (4,5), ... and the wrap arc.
    if n % 2 == 0:
        return [_pair(n, 1)] + [_pair(2 * t, 2 * t + 1) for t in range(1, n // 2)]
    return [_chain3(n - 1, n, 1)] + [_pair(2 * t, 2 * t + 1) for t in range(1, (n - 1) // 2)]


def cycle_matrix(n: int) -> CycleMatrix:
    """Build an n x 4 cycle matrix (n >= 4).

    The cycle's arcs are split into two halves, each a disjoint union of
    chains over the vertices (for odd n one half needs a 3-chain through
    the wrap arc and the other compensates its forced extra comparability
    with a linked-pair cluster).  Each half becomes two coordinate
    columns via a planar dominance embedding: a vertex beats its chain
    successor in both of the half's columns and splits every other pair
    1-1.  Summing the halves gives 3-1 on cycle arcs and 2-2 elsewhere.
    All five matrix conditions are re-checked on construction.
    """
    if n < 4:
        raise BadParams(f"cycle_matrix({n}): need n >= 4")
    if n == 4:
        return CycleMatrix(4, _BASE_FOUR)
    ax, ay = _block_columns(_first_block_clusters(n), n)
    bx, by = _block_columns(_second_block_clusters(n), n)
    entries = tuple((ax[v], ay[v], bx[v], by[v]) for v in range(1, n + 1))
    return CycleMatrix(n, entries)


def realize_cycle(n: int) -> Realizer:
    """Realizer of the directed n-cycle: dimension 3 for n = 3, else 4.

    For n >= 4 vertex i takes row i of the cycle matrix: consecutive rows
    win 3-1 (margin +2) and distant rows split 2-2 (margin 0).
    """
    if n < 3:
        raise BadParams(f"realize_cycle({n}): need n >= 3")
    if n == 3:
        return Realizer(3, {0: (1, 2, 3), 1: (3, 1, 2), 2: (2, 3, 1)})
    matrix = cycle_matrix(n)
    return Realizer(4, {i: matrix.entries[i] for i in range(n)})


def generic_realizer(D: Digraph) -> Realizer:
    """Realizer of an arbitrary digraph in dimension 2 * #arcs.

    Starting from the dimension-0 realizer of the arcless digraph, each
    arc (taken in lexicographic order) is added with the two-coordinate
    arc extension.  Far from minimal, but it bounds the dimension of every
    digraph and so caps the exact search.
    """
    if not D.arcs:
        return realize_empty(D)
    current = Digraph(D.n, frozenset())
    f = realize_empty(current)
    for u, v in D.sorted_arcs():
        f = _extend_with_arc(current, f, u, v)
        current = Digraph(D.n, current.arcs | {(u, v)})
    return f
