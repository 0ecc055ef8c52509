import random

import pytest

from matchseq import (Edge, FamilySpec, adjacent, attach_pendants, build_family,
                      circulant3, complete, complete_bipartite, cycle, degrees,
                      is_connected, is_tree, max_matching_size, multiply, path,
                      random_tree, read_edge_list, write_edge_list)
from matchseq.errors import FormatError, InvalidFamilyParams, InvalidVertex
from matchseq.graphs import Graph


def test_complete_edge_count_and_lexicographic_ids():
    g = complete(4)
    assert g.num_edges == 6
    assert [(e.u, e.v) for e in g.edges] == [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_cycle_edges():
    g = cycle(7)
    assert [(e.u, e.v) for e in g.edges] == [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6)]


def test_circulant3_is_cubic():
    g = circulant3(7)
    assert g.num_edges == 21
    assert degrees(g) == [3] * 14


def test_circulant3_n3_coincides_with_k33():
    got = {(e.u, e.v) for e in circulant3(3).edges}
    want = {(e.u, e.v) for e in complete_bipartite(3, 3).edges}
    assert got == want


def test_bipartite_row_major_ids():
    g = complete_bipartite(2, 3)
    assert [(e.u, e.v) for e in g.edges] == [
        (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]


def test_build_family_deterministic():
    spec = FamilySpec("circulant3", (5,))
    assert build_family(spec).edges == build_family(spec).edges


@pytest.mark.parametrize("spec,expected_degrees", [
    (FamilySpec("complete", (6,)), [5] * 6),
    (FamilySpec("cycle", (9,)), [2] * 9),
    (FamilySpec("path", (6,)), [1, 2, 2, 2, 2, 1]),
    (FamilySpec("circulant3", (4,)), [3] * 8),
    (FamilySpec("complete_bipartite", (2, 5)), [5, 5, 2, 2, 2, 2, 2]),
])
def test_family_degree_sequences(spec, expected_degrees):
    assert sorted(degrees(build_family(spec))) == sorted(expected_degrees)


@pytest.mark.parametrize("family,params", [
    ("complete", (0,)), ("cycle", (2,)), ("path", (1,)),
    ("circulant3", (2,)), ("complete_bipartite", (0, 3)),
    ("nosuch", (3,)), ("complete", (3, 3)),
])
def test_family_param_bounds(family, params):
    with pytest.raises(InvalidFamilyParams):
        FamilySpec(family, params)


def test_multiply_counts_and_ids():
    g2 = multiply(complete(7), 2)
    assert g2.num_edges == 42
    assert g2.allow_parallel
    # copy j of edge e keeps endpoints, id j*m + e
    base = complete(7)
    for e in base.edges:
        twin = g2.edges[21 + e.id]
        assert (twin.u, twin.v) == (e.u, e.v)


def test_multiply_identity_and_parallel_adjacency():
    g = cycle(3)
    assert [(e.u, e.v) for e in multiply(g, 1).edges] == [(e.u, e.v) for e in g.edges]
    g3 = multiply(g, 3)
    assert g3.num_edges == 9
    copies = g3.edge_ids_between(0, 1)
    assert len(copies) == 3
    for a in copies:
        for b in copies:
            if a != b:
                assert adjacent(g3.edges[a], g3.edges[b])


@pytest.mark.parametrize("g", [complete(5), cycle(6), path(7)])
def test_multiply_preserves_max_matching(g):
    assert max_matching_size(multiply(g, 2)) == max_matching_size(g)
    assert max_matching_size(multiply(g, 3)) == max_matching_size(g)


def test_attach_pendants():
    g = attach_pendants(path(4), 0, 5)
    assert g.order == 9
    assert g.num_edges == 8
    assert sorted(degrees(g))[-1] == 6  # vertex 0: one path edge + five pendants


def test_attach_pendants_single_leaf():
    g = attach_pendants(cycle(3), 1, 1)
    assert g.order == 4 and g.num_edges == 4
    assert degrees(g)[3] == 1


def test_attach_pendants_bad_vertex():
    with pytest.raises(InvalidVertex):
        attach_pendants(path(4), 4, 1)


def test_adjacent_basic():
    g = path(4)  # edges (0,1), (1,2), (2,3)
    assert adjacent(g.edges[0], g.edges[1])
    assert not adjacent(g.edges[0], g.edges[2])


def test_adjacent_symmetric_irreflexive_over_families():
    for g in (complete(5), circulant3(4), multiply(cycle(4), 2)):
        for e in g.edges:
            for f in g.edges:
                if e.id != f.id:
                    assert adjacent(e, f) == adjacent(f, e)


def test_max_matching_values():
    assert max_matching_size(complete(7)) == 3
    assert max_matching_size(path(10)) == 5
    assert max_matching_size(cycle(9)) == 4
    assert max_matching_size(complete_bipartite(3, 5)) == 3


def test_max_matching_order18_tree_with_perfect_matching():
    # comb: spine 0,2,...,16 plus a leaf hanging off each spine vertex
    pairs = [(2 * i, 2 * i + 2) for i in range(8)] + \
            [(2 * i, 2 * i + 1) for i in range(9)]
    g = Graph(18, tuple(Edge(i, min(p), max(p)) for i, p in enumerate(pairs)))
    assert is_tree(g)
    assert max_matching_size(g) == 9


def test_loops_rejected():
    with pytest.raises(ValueError):
        Graph(3, (Edge(0, 1, 1),))


def test_duplicate_edges_need_allow_parallel():
    edges = (Edge(0, 0, 1), Edge(1, 0, 1))
    with pytest.raises(ValueError):
        Graph(2, edges)
    assert Graph(2, edges, allow_parallel=True).num_edges == 2


def test_random_tree_is_tree():
    rng = random.Random(42)
    for order in range(2, 10):
        t = random_tree(order, rng)
        assert t.order == order
        assert is_tree(t)


def test_is_connected():
    assert is_connected(cycle(5))
    two_parts = Graph(4, (Edge(0, 0, 1), Edge(1, 2, 3)))
    assert not is_connected(two_parts)
    assert not is_tree(two_parts)


def test_edge_list_roundtrip():
    for g in (complete(5), multiply(cycle(3), 2), path(2)):
        text = write_edge_list(g)
        h = read_edge_list(text)
        assert h.order == g.order
        assert h.allow_parallel == g.allow_parallel
        assert [(e.u, e.v) for e in h.edges] == [(e.u, e.v) for e in g.edges]


def test_edge_list_comments_ignored():
    g = read_edge_list("# a triangle\n3 3\n0 1\n# middle comment\n1 2\n0 2\n")
    assert g.num_edges == 3


@pytest.mark.parametrize("text,bad_line", [
    ("3 2\n0 1\n", 1),          # count mismatch reported at header
    ("3 1\n0 0\n", 2),          # loop
    ("3 1\n0 9\n", 2),          # out of range
    ("3 1\nx y\n", 2),          # not integers
    ("nonsense\n", 1),
])
def test_edge_list_errors_carry_line_numbers(text, bad_line):
    with pytest.raises(FormatError) as err:
        read_edge_list(text)
    assert err.value.line == bad_line


def test_edge_list_empty_file():
    with pytest.raises(FormatError):
        read_edge_list("# only comments\n")
