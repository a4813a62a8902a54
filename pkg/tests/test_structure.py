"""Structure layer: detectors against naive subset oracles, reduction,
cut vertices, f-values, terminal cutsets."""

import pytest
from hypothesis import given, settings

from cliquecover import (
    NotConnected,
    NotCutVertex,
    brute_theta,
    build,
    cut_vertices,
    f_value,
    find_bull,
    find_c4,
    find_dominated_pair,
    find_terminal_cutset,
    find_triangle,
    is_chordal,
    is_triangle_free,
    reduce,
)
from graphs_util import (
    bowtie,
    bull_graph,
    complete,
    cycle,
    dominated_pairs_quadratic,
    graphs,
    is_bull_quintuple,
    is_c4_quadruple,
    naive_has_bull,
    naive_has_c4,
    path,
    paw_with_tail,
    star,
    wheel5,
)


def test_find_triangle_examples():
    assert find_triangle(complete(3)) == (0, 1, 2)
    assert find_triangle(cycle(5)) is None
    assert find_triangle(bowtie()) == (0, 1, 2)


def test_find_c4_examples():
    got = find_c4(cycle(4))
    assert got is not None and sorted(got) == [0, 1, 2, 3]
    assert find_c4(complete(4)) is None
    assert find_c4(cycle(5)) is None


def test_find_bull_examples():
    got = find_bull(bull_graph())
    assert got is not None
    a, b, c, p, q = got
    assert is_bull_quintuple(bull_graph(), got)
    # returned roles: triangle a,b,c; p pendant on a, q pendant on b
    g = bull_graph()
    assert g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    assert g.has_edge(a, p) and not g.has_edge(b, p) and not g.has_edge(c, p)
    assert g.has_edge(b, q) and not g.has_edge(a, q) and not g.has_edge(c, q)
    assert not g.has_edge(p, q)
    assert find_bull(cycle(5)) is None
    assert find_bull(bowtie()) is None


@given(graphs(max_n=8))
def test_find_c4_agrees_with_naive(g):
    got = find_c4(g)
    assert (got is not None) == naive_has_c4(g)
    if got is not None:
        u, a, w, b = got
        assert is_c4_quadruple(g, got)
        # cycle order: u-a-w-b-u with the diagonals non-adjacent
        assert g.has_edge(u, a) and g.has_edge(a, w) and g.has_edge(w, b) and g.has_edge(b, u)
        assert not g.has_edge(u, w) and not g.has_edge(a, b)


@settings(max_examples=40)
@given(graphs(max_n=8))
def test_find_bull_agrees_with_naive(g):
    got = find_bull(g)
    assert (got is not None) == naive_has_bull(g)
    if got is not None:
        assert is_bull_quintuple(g, got)


def test_find_dominated_pair_examples():
    assert find_dominated_pair(complete(3)) == (0, 1)
    assert find_dominated_pair(star(3)) == (0, 1)
    assert find_dominated_pair(cycle(5)) is None


@given(graphs(max_n=8))
def test_find_dominated_pair_agrees_with_quadratic_scan(g):
    pairs = dominated_pairs_quadratic(g)
    got = find_dominated_pair(g)
    assert (got is None) == (not pairs)
    if got is not None:
        assert got in pairs
        assert got == min(pairs)  # ascending (x, y) scan order


def test_reduce_examples():
    g, survivors, trace = reduce(complete(4))
    assert g.n == 1 and len(trace) == 3
    assert trace.steps == ((0, 1), (1, 2), (2, 3))
    assert survivors == (3,)

    c5 = cycle(5)
    g, survivors, trace = reduce(c5)
    assert g == c5 and trace.steps == () and survivors == (0, 1, 2, 3, 4)

    g, survivors, trace = reduce(wheel5())
    assert trace.steps == ((5, 0),)
    assert g == cycle(5)


@given(graphs(max_n=8))
def test_reduce_output_is_irreducible_and_preserves_theta(g):
    reduced, survivors, trace = reduce(g)
    assert find_dominated_pair(reduced) is None
    assert reduced.n + len(trace) == g.n
    assert len(survivors) == reduced.n
    assert brute_theta(g) == brute_theta(reduced)
    # trace invariant: a witness never appears as an earlier-or-same dominator
    doms_so_far = set()
    for x, y in trace.steps:
        doms_so_far.add(x)
        assert y not in doms_so_far


def test_cut_vertices_examples():
    assert cut_vertices(path(3)) == (1,)
    assert cut_vertices(cycle(5)) == ()
    assert cut_vertices(bowtie()) == (0,)
    with pytest.raises(NotConnected):
        cut_vertices(build(3, [(0, 1)]))


@given(graphs(max_n=8, min_n=1))
def test_cut_vertices_agree_with_component_counting(g):
    from cliquecover import components, induced, is_connected

    if not is_connected(g):
        return
    expected = []
    for v in range(g.n):
        rest, _ = induced(g, [u for u in range(g.n) if u != v])
        if len(components(rest)) >= 2:
            expected.append(v)
    assert cut_vertices(g) == tuple(expected)


def test_f_value_examples():
    assert f_value(star(3), 0) == 1
    assert f_value(path(5), 2) == 2
    assert f_value(bowtie(), 0) == 2
    with pytest.raises(NotCutVertex):
        f_value(path(3), 0)


def test_find_terminal_cutset_p5():
    cert = find_terminal_cutset(path(5))
    assert cert is not None
    assert cert.v == 1  # cut vertices 1,2,3 with f-values 1,2,1; tie to 1
    assert cert.f == 1
    assert cert.parts[cert.terminal_part] == (0,)


def test_find_terminal_cutset_paw_with_tail():
    cert = find_terminal_cutset(paw_with_tail())
    assert cert is not None
    assert cert.v == 0
    assert cert.parts[cert.terminal_part] == (3,)


def test_find_terminal_cutset_none_cases():
    assert find_terminal_cutset(cycle(5)) is None  # 2-connected
    assert find_terminal_cutset(bowtie()) is None  # both parts give triangles
    with pytest.raises(NotConnected):
        find_terminal_cutset(build(3, [(0, 1)]))


@given(graphs(max_n=8, min_n=1))
def test_terminal_certificate_is_sound(g):
    from cliquecover import induced, is_connected

    if not is_connected(g):
        return
    cert = find_terminal_cutset(g)
    if cert is None:
        return
    assert len(cert.parts) >= 2
    assert cert.f == min(len(p) for p in cert.parts)
    sub, _ = induced(g, cert.parts[cert.terminal_part] + (cert.v,))
    assert is_triangle_free(sub)


def test_is_chordal():
    assert is_chordal(complete(5))
    assert is_chordal(path(6))
    assert is_chordal(star(4))
    assert is_chordal(paw_with_tail())
    assert not is_chordal(cycle(4))
    assert not is_chordal(cycle(6))
