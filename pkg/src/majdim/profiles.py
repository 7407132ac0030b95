"""Voter profiles, majority margins, and the realizer correspondence.

A profile is a tuple of voter orders over alternatives 0..m-1, each voter
a total preorder encoded as a rank list (higher rank = more preferred,
equal ranks = indifference).  The majority margin of a over b counts the
voters strictly preferring a minus those strictly preferring b; arcs of
the majority digraph are the positive margins.

A d-dimensional realizer is the same data seen sideways: coordinate i is
voter i's rank list, and the weak majority margin of two vectors equals
the majority margin of the corresponding alternatives.  Only strict
preference counts enter the margin, which is why ties are harmless.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .digraph import Digraph
from .realizer import Realizer


class ProfileError(ValueError):
    """Invalid profile data."""


class UnknownAlternative(ProfileError):
    """Alternative index outside 0..m-1."""


class ZeroDimension(ProfileError):
    """A 0-dimensional realizer has no voters to extract."""


@dataclass(frozen=True)
class Profile:
    """Voter rank lists over alternatives 0..alternatives-1."""

    alternatives: int
    voters: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.alternatives < 0:
            raise ProfileError(f"negative alternative count {self.alternatives}")
        voters = tuple(tuple(int(r) for r in voter) for voter in self.voters)
        for i, voter in enumerate(voters):
            if len(voter) != self.alternatives:
                raise ProfileError(
                    f"voter {i} ranks {len(voter)} alternatives, expected {self.alternatives}"
                )
        object.__setattr__(self, "voters", voters)


def majority_margin(R: Profile, a: int, b: int) -> int:
    """#{voters preferring a to b} - #{voters preferring b to a}."""
    m = R.alternatives
    if not (0 <= a < m and 0 <= b < m):
        raise UnknownAlternative(f"alternatives must lie in 0..{m - 1}")
    up = sum(voter[a] > voter[b] for voter in R.voters)
    down = sum(voter[b] > voter[a] for voter in R.voters)
    return up - down


def majority_digraph(R: Profile) -> Digraph:
    """Digraph with an arc a -> b exactly when the margin of a over b is
    positive.  Antisymmetry of the margin keeps the underlying graph
    simple."""
    arcs = set()
    for a in range(R.alternatives):
        for b in range(a + 1, R.alternatives):
            g = majority_margin(R, a, b)
            if g > 0:
                arcs.add((a, b))
            elif g < 0:
                arcs.add((b, a))
    return Digraph(R.alternatives, frozenset(arcs))


def realizer_to_profile(f: Realizer) -> Profile:
    """Read coordinate i of a realizer as voter i's rank list.

    For every vertex pair the weak majority margin of the vectors equals
    the majority margin of the resulting profile.
    """
    if f.d == 0:
        raise ZeroDimension("a 0-dimensional realizer induces no voters")
    m = len(f.vectors)
    if sorted(f.vectors) != list(range(m)):
        raise ProfileError("realizer vertices must be exactly 0..m-1")
    voters = tuple(
        tuple(f.vectors[a][i] for a in range(m)) for i in range(f.d)
    )
    return Profile(m, voters)


def profile_to_realizer(R: Profile) -> Realizer:
    """Give alternative a the vector of its ranks, one coordinate per voter."""
    d = len(R.voters)
    vectors = {
        a: tuple(voter[a] for voter in R.voters) for a in range(R.alternatives)
    }
    return Realizer(d, vectors)


# --- JSON format: {"alternatives": m, "voters": [[rank per alternative], ...]}


def profile_to_json(R: Profile) -> str:
    return json.dumps(
        {"alternatives": R.alternatives, "voters": [list(v) for v in R.voters]}
    )


def profile_from_json(text: str) -> Profile:
    data = json.loads(text)
    if not isinstance(data, dict) or "alternatives" not in data or "voters" not in data:
        raise ProfileError("profile JSON needs 'alternatives' and 'voters' fields")
    try:
        return Profile(int(data["alternatives"]), tuple(tuple(v) for v in data["voters"]))
    except TypeError:
        raise ProfileError("profile JSON has malformed 'voters'")
