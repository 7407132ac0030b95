"""Digraphs whose underlying graphs are simple.

Vertices are the dense integers 0..n-1.  Arcs are ordered pairs (u, v) with
u != v, and at most one of (u, v), (v, u) may be present, so the underlying
undirected graph has no loops or parallel edges.  Everything here is an
immutable value and every operation is a pure function, so concurrent use
needs no coordination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class DigraphError(ValueError):
    """An arc set violates the simple-underlying-graph invariants."""


class Loop(DigraphError):
    """Arc (v, v)."""


class AntiparallelPair(DigraphError):
    """Both (u, v) and (v, u) present."""


class VertexOutOfRange(DigraphError):
    """Arc endpoint outside 0..n-1."""


class DuplicateArc(DigraphError):
    """The same arc listed twice."""


class BadParams(DigraphError):
    """Family generator called with parameters outside its domain."""


class EdgeListError(ValueError):
    """Malformed edge-list text."""


@dataclass(frozen=True)
class Digraph:
    """A digraph on vertices 0..n-1 with a simple underlying graph."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "arcs", frozenset((int(u), int(v)) for u, v in self.arcs)
        )
        if self.n < 0:
            raise BadParams(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.arcs:
            if u == v:
                raise Loop(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"arc ({u}, {v}) outside 0..{self.n - 1}")
            if (v, u) in self.arcs:
                raise AntiparallelPair(f"both ({u}, {v}) and ({v}, {u}) present")

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(y for x, y in self.arcs if x == v)

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(x for x, y in self.arcs if y == v)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


def build(n: int, arcs: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> Digraph:
    """Validate raw input and return a Digraph.

    Unlike the Digraph constructor this also rejects duplicate arcs in the
    input sequence.
    """
    seen: set[tuple[int, int]] = set()
    for arc in arcs:
        pair = (int(arc[0]), int(arc[1]))
        if pair in seen:
            raise DuplicateArc(f"arc {pair} listed twice")
        seen.add(pair)
    return Digraph(n, frozenset(seen))


def is_transitive(D: Digraph) -> bool:
    """True iff (x, z) is an arc whenever (x, y) and (y, z) are."""
    out: dict[int, list[int]] = {}
    for u, v in D.arcs:
        out.setdefault(u, []).append(v)
    for x, y in D.arcs:
        for z in out.get(y, ()):
            if (x, z) not in D.arcs:
                return False
    return True


def has_induced_two_path(D: Digraph) -> bool:
    """True iff some x -> y -> z has non-adjacent endpoints x, z."""
    out: dict[int, list[int]] = {}
    for u, v in D.arcs:
        out.setdefault(u, []).append(v)
    for x, y in D.arcs:
        for z in out.get(y, ()):
            if z != x and not D.adjacent(x, z):
                return True
    return False


def is_tournament(D: Digraph) -> bool:
    """True iff every pair of distinct vertices is adjacent."""
    return len(D.arcs) == D.n * (D.n - 1) // 2


def is_acyclic_tournament(D: Digraph) -> bool:
    """True iff D is a tournament whose arc relation is a total order.

    A tournament is acyclic exactly when its out-degrees are pairwise
    distinct (hence 0..n-1).
    """
    if not is_tournament(D):
        return False
    degs = [0] * D.n
    for u, _ in D.arcs:
        degs[u] += 1
    return sorted(degs) == list(range(D.n))


def induced(D: Digraph, S) -> Digraph:
    """Subdigraph induced by vertex subset S, relabeled along sorted(S)."""
    vs = sorted(set(S))
    for v in vs:
        if not (0 <= v < D.n):
            raise VertexOutOfRange(f"vertex {v} outside 0..{D.n - 1}")
    pos = {v: i for i, v in enumerate(vs)}
    arcs = frozenset(
        (pos[u], pos[v]) for u, v in D.arcs if u in pos and v in pos
    )
    return Digraph(len(vs), arcs)


@dataclass(frozen=True)
class CondensationResult:
    """Partition of V(D) into homogeneous classes plus the condensed digraph.

    Two vertices are homogeneous when they have identical out- and
    in-neighborhoods; collapsing each class to its smallest member yields
    `condensed`, relabeled 0..l-1 in order of those representatives.
    """

    representative: dict[int, int]
    class_of: dict[int, int]
    condensed: Digraph


def condense(D: Digraph) -> CondensationResult:
    """Group homogeneous vertices and return the condensed digraph."""
    outs = {v: D.out_neighbors(v) for v in range(D.n)}
    ins = {v: D.in_neighbors(v) for v in range(D.n)}
    key_to_rep: dict[tuple[frozenset[int], frozenset[int]], int] = {}
    representative: dict[int, int] = {}
    for v in range(D.n):
        key = (outs[v], ins[v])
        rep = key_to_rep.setdefault(key, v)
        representative[v] = rep
    reps = sorted(set(representative.values()))
    rep_index = {r: i for i, r in enumerate(reps)}
    class_of = {v: rep_index[representative[v]] for v in range(D.n)}
    return CondensationResult(representative, class_of, induced(D, reps))


def disjoint_union(parts: list[Digraph] | tuple[Digraph, ...]) -> Digraph:
    """Disjoint union; part p's vertices are shifted by the sizes before it."""
    arcs: set[tuple[int, int]] = set()
    offset = 0
    for part in parts:
        arcs.update((u + offset, v + offset) for u, v in part.arcs)
        offset += part.n
    return Digraph(offset, frozenset(arcs))


# --- named families -------------------------------------------------------


def empty(n: int) -> Digraph:
    if n < 0:
        raise BadParams(f"empty({n})")
    return Digraph(n, frozenset())


def path(n: int) -> Digraph:
    """Directed path v_0 -> v_1 -> ... -> v_{n-1}."""
    if n < 1:
        raise BadParams(f"path({n})")
    return Digraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Digraph:
    """Directed cycle v_0 -> v_1 -> ... -> v_{n-1} -> v_0."""
    if n < 3:
        raise BadParams(f"cycle({n}): length must be at least 3")
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def acyclic_tournament(n: int) -> Digraph:
    """Transitive tournament in which higher-indexed vertices beat lower."""
    if n < 1:
        raise BadParams(f"acyclic_tournament({n})")
    return Digraph(n, frozenset((j, i) for j in range(n) for i in range(j)))


def single_arc(n: int) -> Digraph:
    """One arc 0 -> 1 plus n - 2 isolated vertices."""
    if n < 2:
        raise BadParams(f"single_arc({n}): needs at least 2 vertices")
    return Digraph(n, frozenset({(0, 1)}))


def subset_family(r: int, d: int) -> Digraph:
    """Membership digraph of (d+1)-subsets of {1..r}.

    Vertices 0..r-1 stand for the elements 1..r; the subsets of size d+1
    follow in lexicographic order.  Each element points to every subset
    containing it, so no vertex has both in- and out-arcs and the digraph
    is vacuously transitive.
    """
    if d < 0 or r < d + 1:
        raise BadParams(f"subset_family({r}, {d}): needs r >= d + 1 >= 1")
    arcs: set[tuple[int, int]] = set()
    for j, S in enumerate(itertools.combinations(range(1, r + 1), d + 1)):
        for i in S:
            arcs.add((i - 1, r + j))
    n = r + sum(1 for _ in itertools.combinations(range(r), d + 1))
    return Digraph(n, frozenset(arcs))


FAMILIES = {
    "empty": empty,
    "path": path,
    "cycle": cycle,
    "acyclic_tournament": acyclic_tournament,
    "single_arc": single_arc,
    "subset_family": subset_family,
}


def generate(kind: str, *params: int) -> Digraph:
    """Dispatch to a named family generator."""
    try:
        fn = FAMILIES[kind]
    except KeyError:
        raise BadParams(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}")
    return fn(*params)


# --- edge-list text format ------------------------------------------------
#
# First non-comment line is the vertex count; each following line is one
# arc "u v".  '#' starts a comment; blank lines are ignored.


def from_edge_list(text: str) -> Digraph:
    n: int | None = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise EdgeListError(f"line {lineno}: expected vertex count, got {raw!r}")
            try:
                n = int(fields[0])
            except ValueError:
                raise EdgeListError(f"line {lineno}: bad vertex count {fields[0]!r}")
            continue
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            arcs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListError(f"line {lineno}: bad arc {raw!r}")
    if n is None:
        raise EdgeListError("empty edge list: missing vertex count")
    return build(n, arcs)


def to_edge_list(D: Digraph) -> str:
    lines = [str(D.n)]
    lines.extend(f"{u} {v}" for u, v in D.sorted_arcs())
    return "\n".join(lines) + "\n"


def to_dot(D: Digraph, name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(D.n))
    lines.extend(f"  {u} -> {v};" for u, v in D.sorted_arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"
