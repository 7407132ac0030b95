import random

import pytest
from hypothesis import given, strategies as st

from majdim import (
    AntiparallelPair,
    BadParams,
    Digraph,
    DuplicateArc,
    EdgeListError,
    Loop,
    VertexOutOfRange,
    acyclic_tournament,
    build,
    condense,
    cycle,
    disjoint_union,
    empty,
    from_edge_list,
    generate,
    has_induced_two_path,
    induced,
    is_acyclic_tournament,
    is_tournament,
    is_transitive,
    path,
    single_arc,
    subset_family,
    to_dot,
    to_edge_list,
)
from helpers import random_digraph

TT3 = build(3, [(0, 1), (2, 1), (0, 2)])  # transitive tournament, order 0 > 2 > 1


def test_build_path():
    D = build(3, [(0, 1), (1, 2)])
    assert D.n == 3 and D.arcs == {(0, 1), (1, 2)}


def test_build_rejects_antiparallel():
    with pytest.raises(AntiparallelPair):
        build(2, [(0, 1), (1, 0)])


def test_build_rejects_loop():
    with pytest.raises(Loop):
        build(1, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRange):
        build(2, [(0, 2)])


def test_build_rejects_duplicates():
    with pytest.raises(DuplicateArc):
        build(3, [(0, 1), (0, 1)])


def test_transitive_examples():
    assert is_transitive(TT3)
    assert not is_transitive(cycle(3))
    assert is_transitive(empty(5))


def test_induced_two_path_examples():
    assert has_induced_two_path(path(3))
    assert not has_induced_two_path(TT3)  # shortcut arc closes the pair
    assert not has_induced_two_path(empty(4))
    assert not has_induced_two_path(cycle(3))


def test_induced_examples():
    assert induced(TT3, {0, 2}).arcs == {(0, 1)}
    assert induced(cycle(4), {0, 1, 2}).arcs == {(0, 1), (1, 2)}
    assert induced(TT3, range(3)) == TT3
    with pytest.raises(VertexOutOfRange):
        induced(TT3, {0, 7})


def test_induced_matches_arc_intersection_bruteforce():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randrange(1, 7)
        D = random_digraph(rng, n)
        S = sorted(v for v in range(n) if rng.random() < 0.6)
        pos = {v: i for i, v in enumerate(S)}
        expected = {(pos[u], pos[v]) for u, v in D.arcs if u in pos and v in pos}
        assert induced(D, S).arcs == expected


def test_condense_merges_homogeneous_sinks():
    cr = condense(build(3, [(0, 1), (0, 2)]))
    assert cr.representative == {0: 0, 1: 1, 2: 1}
    assert cr.class_of == {0: 0, 1: 1, 2: 1}
    assert cr.condensed.n == 2 and cr.condensed.arcs == {(0, 1)}


def test_condense_empty_collapses_to_point():
    cr = condense(empty(4))
    assert cr.condensed.n == 1 and not cr.condensed.arcs
    assert set(cr.class_of.values()) == {0}


def test_condense_tournament_is_identity():
    D = acyclic_tournament(3)
    cr = condense(D)
    assert cr.condensed == D
    assert all(cr.representative[v] == v for v in range(3))


def test_condense_idempotent():
    rng = random.Random(11)
    for _ in range(80):
        D = random_digraph(rng, rng.randrange(1, 7))
        once = condense(D).condensed
        twice = condense(once)
        assert twice.condensed == once
        assert all(twice.representative[v] == v for v in range(once.n))


def test_family_path():
    assert path(3).arcs == {(0, 1), (1, 2)}


def test_family_acyclic_tournament_labeling():
    assert acyclic_tournament(3).arcs == {(1, 0), (2, 0), (2, 1)}


def test_family_subset_family_small():
    D = subset_family(3, 1)
    assert D.n == 6
    assert len(D.arcs) == 6
    # elements 0..2 point at the three 2-subsets {1,2}, {1,3}, {2,3}
    assert D.arcs == {(0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)}
    assert is_transitive(D)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("d", [0, 1, 2])
def test_subset_family_vacuously_transitive(r, d):
    if r < d + 1:
        pytest.skip("needs r >= d + 1")
    D = subset_family(r, d)
    assert is_transitive(D)
    # no vertex carries both in- and out-arcs
    heads = {v for _, v in D.arcs}
    tails = {u for u, _ in D.arcs}
    assert not (heads & tails)


def test_family_bad_params():
    for bad in (lambda: cycle(2), lambda: path(0), lambda: single_arc(1),
                lambda: subset_family(1, 1), lambda: empty(-1)):
        with pytest.raises(BadParams):
            bad()


def test_generate_dispatch():
    assert generate("path", 3) == path(3)
    assert generate("subset_family", 3, 1) == subset_family(3, 1)
    with pytest.raises(BadParams):
        generate("widget", 3)


@given(st.integers(1, 8), st.integers(0, 4))
def test_generated_families_validate(n, which):
    # construction re-runs the full Digraph validation
    family = [empty, path, acyclic_tournament, cycle, single_arc][which]
    if family is cycle and n < 3:
        n = 3
    if family is single_arc and n < 2:
        n = 2
    D = family(n)
    assert build(D.n, sorted(D.arcs)) == D


@given(st.integers(0, 2), st.integers(1, 6))
def test_subset_family_validates(d, r):
    if r < d + 1:
        r = d + 1
    D = subset_family(r, d)
    assert build(D.n, sorted(D.arcs)) == D


def test_tournament_predicates():
    assert is_tournament(acyclic_tournament(4))
    assert is_acyclic_tournament(acyclic_tournament(4))
    assert is_tournament(cycle(3)) and not is_acyclic_tournament(cycle(3))
    assert not is_tournament(path(3))


def test_disjoint_union_offsets():
    U = disjoint_union([single_arc(2), empty(1), path(2)])
    assert U.n == 5
    assert U.arcs == {(0, 1), (3, 4)}


def test_edge_list_roundtrip():
    D = TT3
    assert from_edge_list(to_edge_list(D)) == D


def test_edge_list_comments_and_blanks():
    D = from_edge_list("# a digraph\n3\n\n0 1  # the first arc\n1 2\n")
    assert D == path(3)


@pytest.mark.parametrize("text", ["", "2\n0 1 2\n", "x\n", "2\n0 one\n"])
def test_edge_list_errors(text):
    with pytest.raises(EdgeListError):
        from_edge_list(text)


def test_to_dot_mentions_all_arcs():
    dot = to_dot(path(3))
    assert "0 -> 1" in dot and "1 -> 2" in dot and dot.startswith("digraph")
