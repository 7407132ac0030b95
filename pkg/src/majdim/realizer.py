"""Integer coordinate vectors under the weak majority relation.

A vector x beats y when strictly more coordinates of x exceed y's than the
other way around; equal coordinates count for neither side.  `margin`
returns the signed difference, so x beats y iff margin(x, y) > 0 and the
pair is incomparable iff the margin is 0.

Coordinates are plain integers.  The relation only depends on the
per-coordinate order, so any real-valued assignment can be rank-compressed
to integers without changing a single comparison; integer coordinates make
equality tests exact.  Dimension 0 is legal: every vertex maps to the empty
vector and all margins are 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .digraph import Digraph


class RealizerError(ValueError):
    """Invalid realizer data or incompatible operands."""


class DimensionMismatch(RealizerError):
    """Vectors of different lengths compared or stored together."""


class MissingVertex(RealizerError):
    """Realizer lacks a vector for some vertex of the target digraph."""


class BadDimension(RealizerError):
    """Requested an extension to fewer dimensions than the realizer has."""


def margin(x: Sequence[int], y: Sequence[int]) -> int:
    """#{i : x_i > y_i} - #{i : y_i > x_i}; positive means x beats y."""
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths differ: {len(x)} vs {len(y)}")
    wins = 0
    losses = 0
    for a, b in zip(x, y):
        if a > b:
            wins += 1
        elif b > a:
            losses += 1
    return wins - losses


@dataclass(frozen=True)
class Realizer:
    """Map from vertices to d-dimensional integer vectors."""

    d: int
    vectors: dict[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        if self.d < 0:
            raise BadDimension(f"dimension must be nonnegative, got {self.d}")
        vecs = {int(v): tuple(int(c) for c in vec) for v, vec in self.vectors.items()}
        for v, vec in vecs.items():
            if len(vec) != self.d:
                raise DimensionMismatch(
                    f"vertex {v} has a {len(vec)}-vector in a d={self.d} realizer"
                )
        object.__setattr__(self, "vectors", vecs)

    def vector(self, v: int) -> tuple[int, ...]:
        try:
            return self.vectors[v]
        except KeyError:
            raise MissingVertex(f"no vector for vertex {v}")


class Violation(NamedTuple):
    u: int
    v: int
    expected: str  # "u>v", "v>u", or "tie"
    margin: int


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple[Violation, ...]


def verify(D: Digraph, f: Realizer) -> VerifyReport:
    """Check that arcs coincide exactly with positive margins.

    For every pair u < v the margin of f(u) against f(v) must be positive
    when (u, v) is an arc, negative when (v, u) is, and zero otherwise.
    """
    for v in range(D.n):
        if v not in f.vectors:
            raise MissingVertex(f"no vector for vertex {v}")
    violations: list[Violation] = []
    for u in range(D.n):
        for v in range(u + 1, D.n):
            m = margin(f.vectors[u], f.vectors[v])
            if (u, v) in D.arcs:
                expected = "u>v"
                ok = m > 0
            elif (v, u) in D.arcs:
                expected = "v>u"
                ok = m < 0
            else:
                expected = "tie"
                ok = m == 0
            if not ok:
                violations.append(Violation(u, v, expected, m))
    return VerifyReport(not violations, tuple(violations))


def normalize(f: Realizer) -> Realizer:
    """Rank-compress each coordinate to 1..#distinct values.

    Per-coordinate order is preserved, hence so is every pairwise margin
    and every verify verdict.
    """
    if not f.vectors or f.d == 0:
        return f
    keys = sorted(f.vectors)
    cols: list[dict[int, int]] = []
    for i in range(f.d):
        values = sorted({f.vectors[v][i] for v in keys})
        cols.append({val: rank for rank, val in enumerate(values, start=1)})
    vecs = {
        v: tuple(cols[i][f.vectors[v][i]] for i in range(f.d)) for v in keys
    }
    return Realizer(f.d, vecs)


def extend_dims(f: Realizer, r: int) -> Realizer:
    """Pad every vector with zeros up to dimension r (r >= f.d).

    Appended coordinates are equal across vertices, so they join neither
    win set and all margins are unchanged.
    """
    if r < f.d:
        raise BadDimension(f"cannot extend d={f.d} realizer down to {r}")
    if r == f.d:
        return f
    pad = (0,) * (r - f.d)
    return Realizer(r, {v: vec + pad for v, vec in f.vectors.items()})


# --- JSON format ------------------------------------------------------------
#
# {"d": <int>, "vectors": {"<vertex>": [<ints>], ...}} with decimal vertex
# keys; emission orders keys numerically so output is byte-stable.


def realizer_to_json(f: Realizer) -> str:
    vectors = {str(v): list(f.vectors[v]) for v in sorted(f.vectors)}
    return json.dumps({"d": f.d, "vectors": vectors})


def realizer_from_json(text: str) -> Realizer:
    data = json.loads(text)
    if not isinstance(data, dict) or "d" not in data or "vectors" not in data:
        raise RealizerError("realizer JSON needs 'd' and 'vectors' fields")
    try:
        vectors = {int(k): tuple(v) for k, v in data["vectors"].items()}
    except (TypeError, ValueError, AttributeError):
        raise RealizerError("realizer JSON has malformed 'vectors'")
    return Realizer(int(data["d"]), vectors)
