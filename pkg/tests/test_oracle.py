"""Brute-force oracles, class-graph enumeration, and the generators."""

from itertools import combinations, permutations

import pytest
from hypothesis import given, settings

from cliquecover import (
    GenSpec,
    RejectionBudgetExceeded,
    SplitMix64,
    TooLarge,
    brute_chromatic,
    brute_matching,
    brute_theta,
    build,
    enumerate_class_graphs,
    find_bull,
    find_c4,
    find_class_violation,
    find_triangle,
    generate,
    is_connected,
)
from cliquecover import oracle as oracle_mod
from graphs_util import (
    brute_theta_partition,
    complete,
    cycle,
    empty_graph,
    graphs,
    naive_has_bull,
    naive_has_c4,
    path,
)


def test_brute_theta_examples():
    assert brute_theta(complete(3)) == 1
    assert brute_theta(empty_graph(4)) == 4
    assert brute_theta(cycle(5)) == 3
    assert brute_theta(empty_graph(0)) == 0


@given(graphs(max_n=7))
def test_brute_theta_agrees_with_partition_oracle(g):
    assert brute_theta(g) == brute_theta_partition(g)


def test_brute_theta_agrees_with_partition_oracle_exhaustive_small():
    for n in range(5):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            g = build(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
            assert brute_theta(g) == brute_theta_partition(g)
    for n in range(1, 8):
        for g in enumerate_class_graphs(n):
            assert brute_theta(g) == brute_theta_partition(g)


def test_brute_theta_guard():
    with pytest.raises(TooLarge):
        brute_theta(empty_graph(17))


def test_brute_matching_examples():
    assert brute_matching(complete(2)) == 1
    assert brute_matching(path(4)) == 2
    assert brute_matching(cycle(5)) == 2


def test_brute_matching_guard():
    with pytest.raises(TooLarge):
        brute_matching(complete(8))  # 28 edges


def test_brute_chromatic_examples():
    assert brute_chromatic(complete(4)) == 4
    assert brute_chromatic(cycle(5)) == 3
    assert brute_chromatic(empty_graph(3)) == 1


def test_brute_chromatic_guard():
    with pytest.raises(TooLarge):
        brute_chromatic(empty_graph(13))


# ---------------------------------------------------------------------------
# enumeration


def test_enumeration_counts():
    assert len(list(enumerate_class_graphs(1))) == 1
    assert len(list(enumerate_class_graphs(2))) == 1
    assert len(list(enumerate_class_graphs(3))) == 2
    # all 6 connected 4-vertex graphs up to iso minus C4 itself
    assert len(list(enumerate_class_graphs(4))) == 5
    assert list(enumerate_class_graphs(0)) == []


def test_enumeration_guard():
    with pytest.raises(TooLarge):
        list(enumerate_class_graphs(9))


def test_enumeration_members_are_connected_in_class():
    for n in range(1, 7):
        for g in enumerate_class_graphs(n):
            g.audit()
            assert g.n == n
            assert is_connected(g)
            assert find_c4(g) is None and find_bull(g) is None


def _isomorphic(g, h) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    for perm in permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in g.edges()):
            return True
    return False


def test_enumeration_complete_and_duplicate_free_small():
    """Cross-check against unfiltered enumeration of all labelled graphs."""
    for n in range(1, 6):
        ours = list(enumerate_class_graphs(n))
        for a, b in combinations(ours, 2):
            assert not _isomorphic(a, b)
        pairs = list(combinations(range(n), 2))
        reps = []
        for bits in range(1 << len(pairs)):
            g = build(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
            if not is_connected(g):
                continue
            if naive_has_c4(g) or naive_has_bull(g):
                continue
            if not any(_isomorphic(g, r) for r in reps):
                reps.append(g)
        assert len(reps) == len(ours)
        for r in reps:
            assert any(_isomorphic(r, g) for g in ours)


def test_true_twin_addition_preserves_class():
    for n in range(1, 7):
        for g in enumerate_class_graphs(n):
            for v in range(g.n):
                twin = g.n
                edges = list(g.edges()) + [(v, twin)] + [(u, twin) for u in g.neighbors(v)]
                expanded = build(g.n + 1, edges)
                assert find_c4(expanded) is None
                assert find_bull(expanded) is None


# ---------------------------------------------------------------------------
# generators


def test_splitmix64_reference_vector():
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_generate_girth5_postcondition():
    g = generate(GenSpec(family="girth5", n=20, edge_prob=0.2, seed=7))
    assert find_triangle(g) is None and find_c4(g) is None


def test_generate_rejection_in_class():
    g = generate(GenSpec(family="rejection", n=8, edge_prob=0.3, seed=1))
    assert g.n == 8
    assert find_class_violation(g) is None


def test_generate_twin_expand_size_and_class():
    g = generate(GenSpec(family="twin-expand", n=10, edge_prob=0.3, steps=5, seed=3))
    assert g.n == 15
    assert find_class_violation(g) is None


def test_generate_deterministic():
    spec = GenSpec(family="girth5", n=30, edge_prob=0.15, seed=11)
    assert generate(spec) == generate(spec)
    other = generate(GenSpec(family="girth5", n=30, edge_prob=0.15, seed=12))
    assert generate(spec) != other


def test_generate_rejection_budget(monkeypatch):
    monkeypatch.setattr(oracle_mod, "_REJECTION_BUDGET", 5)
    monkeypatch.setattr(oracle_mod, "find_class_violation", lambda g: ("C4", (0, 1, 2, 3)))
    with pytest.raises(RejectionBudgetExceeded):
        generate(GenSpec(family="rejection", n=5, edge_prob=0.2, seed=1))


def test_genspec_validation():
    with pytest.raises(ValueError):
        GenSpec(family="nope", n=3)
    with pytest.raises(ValueError):
        GenSpec(family="girth5", n=-1)
    with pytest.raises(ValueError):
        GenSpec(family="girth5", n=3, edge_prob=1.5)
    with pytest.raises(ValueError):
        GenSpec(family="twin-expand", n=0, steps=2)


@settings(max_examples=20)
@given(graphs(max_n=6))
def test_detectors_match_naive_on_arbitrary_graphs(g):
    # ties the mask-based census filter to the public detectors
    assert (find_c4(g) is not None) == naive_has_c4(g)
    assert (find_bull(g) is not None) == naive_has_bull(g)
