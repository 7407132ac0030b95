"""Independent oracles and generators shared by the test modules.

Everything here recomputes results from first principles (plain loops over
definitions) so that library code is checked against a second route, not
against itself.
"""

import itertools

from majdim import Digraph, build


def pair_counts(x, y):
    """(#coords where x wins, #coords where y wins, #equal coords)."""
    wins = sum(a > b for a, b in zip(x, y))
    losses = sum(b > a for a, b in zip(x, y))
    return wins, losses, len(x) - wins - losses


def naive_margin(x, y):
    wins, losses, _ = pair_counts(x, y)
    return wins - losses


def naive_realizable(D, d):
    """Unpruned enumeration of every rank-vector assignment."""
    vecs = list(itertools.product(range(1, D.n + 1), repeat=d))
    pairs = [(u, v) for u in range(D.n) for v in range(u + 1, D.n)]
    for assignment in itertools.product(vecs, repeat=D.n):
        ok = True
        for u, v in pairs:
            m = naive_margin(assignment[u], assignment[v])
            if (u, v) in D.arcs:
                ok = m > 0
            elif (v, u) in D.arcs:
                ok = m < 0
            else:
                ok = m == 0
            if not ok:
                break
        if ok:
            return True
    return False


def all_labeled_digraphs(n):
    """Every digraph on n vertices: 3 states per unordered pair."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product(range(3), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
        yield build(n, arcs)


def random_digraph(rng, n):
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            s = rng.randrange(3)
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
    return Digraph(n, frozenset(arcs))


def cycle_matrix_failures(n, entries):
    """Check the five cycle-matrix conditions from their definitions.

    Returns a list of human-readable failures; empty means the matrix is
    good.  Deliberately written independently of the library's checker.
    """
    failures = []
    if len(entries) != n or any(len(r) != 4 for r in entries):
        return [f"shape is not {n} x 4"]
    if any(not isinstance(a, int) or a < 1 for r in entries for a in r):
        failures.append("entries not positive integers")
    for k in range(4):
        col = [r[k] for r in entries]
        if len(set(col)) != n:
            failures.append(f"column {k} repeats a value")
    has_iii = False
    for j in range(4):
        for k in range(4):
            if j == k:
                continue
            col_j = [r[j] for r in entries]
            col_k = [r[k] for r in entries]
            if entries[n - 1][j] == max(col_j) and entries[0][k] == min(col_k):
                has_iii = True
    if not has_iii:
        failures.append("no max-in-last-row / min-in-first-row column pair")
    def wins(i, j):
        return sum(entries[i][k] > entries[j][k] for k in range(4))
    for i in range(n):
        if wins(i, (i + 1) % n) != 3:
            failures.append(f"consecutive rows ({i}, {(i + 1) % n}) not 3 wins")
    for i in range(n):
        for j in range(n):
            if abs(i - j) >= 2 and {i, j} != {0, n - 1} and wins(i, j) != 2:
                failures.append(f"distant rows ({i}, {j}) not 2 wins")
    return failures
