import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nc
from kreweras.arith import catalan
from kreweras.errors import InvalidTreeError, SizeMismatchError
from kreweras.nc import NoncrossingPartition, is_complement, kreweras
from kreweras.trees import (
    PlaneTree,
    count_loops,
    edge_parity,
    enumerate_trees,
    from_dyck,
    from_edges,
    is_meander,
    parent_edges,
    parse_tree,
    phi,
    phi_inverse,
    rho,
    rho_bar,
    rho_inverse,
    star_bt,
    star_tp,
    to_dyck,
    vertex_parities,
)


def phi_by_formula(tree):
    two_n = 2 * tree.n
    out = set()
    for i, j in tree.edges:
        out.add((j - 1, two_n) if i == 1 else (i - 1, j - 1))
    return from_edges(out)


def _odd_index(edge):
    return edge[0] if edge[0] % 2 else edge[1]


def _project(groups, n):
    return NoncrossingPartition.from_blocks(
        [[(_odd_index(e) + 1) // 2 for e in g] for g in groups.values()], n
    )


def rho_by_tree_partition(tree):
    """Odd children of each even vertex, plus that vertex's even parent edge."""
    parent = parent_edges(tree)
    groups = {}
    for e, up in parent.items():
        # even vertices are keyed by their parent edge, the root by None
        key = up if edge_parity(e) == "odd" else e
        groups.setdefault(key, []).append(e)
    return _project(groups, tree.n)


def rho_bar_by_tree_partition(tree):
    """Even children of each odd vertex, plus that vertex's odd parent edge."""
    parent = parent_edges(tree)
    groups = {}
    for e, up in parent.items():
        key = up if edge_parity(e) == "even" else e
        groups.setdefault(key, []).append(e)
    return _project(groups, tree.n)


@pytest.mark.parametrize(
    "word, edges",
    [("()", [(1, 2)]), ("()()", [(1, 2), (3, 4)]), ("(())", [(1, 4), (2, 3)])],
)
def test_dyck_round_trip(word, edges):
    t = from_dyck(word)
    assert list(t.edges) == edges
    assert to_dyck(t) == word
    assert from_edges(edges) == t


@pytest.mark.parametrize("word", ["", "(", ")(", "(()", "(a)", "())("])
def test_bad_dyck_words(word):
    with pytest.raises(InvalidTreeError):
        from_dyck(word)


@pytest.mark.parametrize("edges", [[(1, 3), (2, 4)], [(1, 2), (2, 3)], [(2, 1)], [(1, 5), (2, 3)]])
def test_bad_edge_lists(edges):
    with pytest.raises(InvalidTreeError):
        from_edges(edges)


def test_stars():
    assert star_tp(2) == from_edges([(1, 2), (3, 4)])
    assert star_bt(2) == from_edges([(1, 4), (2, 3)])
    assert star_tp(1) == star_bt(1) == from_edges([(1, 2)])
    for n in range(1, 8):
        assert set(star_tp(n).edges) == {(2 * i - 1, 2 * i) for i in range(1, n + 1)}
        assert set(star_bt(n).edges) == {(1, 2 * n)} | {(2 * i, 2 * i + 1) for i in range(1, n)}


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 14)])
def test_enumerate_counts_and_order(n, count):
    words = [t.dyck for t in enumerate_trees(n)]
    assert len(words) == count
    assert words == sorted(words)
    assert len(set(words)) == count


def test_phi_examples():
    for n in range(1, 8):
        assert phi(star_tp(n)) == star_bt(n)
        assert phi(star_bt(n)) == star_tp(n)
    t = from_edges([(1, 2), (3, 6), (4, 5)])
    assert phi(t) == from_edges([(1, 6), (2, 5), (3, 4)])


def test_phi_matches_definition(trees_by_n):
    for n, trees in trees_by_n.items():
        for t in trees:
            assert phi(t) == phi_by_formula(t)
            assert phi_inverse(phi(t)) == t
            assert phi(phi_inverse(t)) == t
        assert len({phi(t) for t in trees}) == catalan(n)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(list(enumerate_trees(n)))))
def test_phi_full_turn(t):
    s = t
    for _ in range(2 * t.n):
        s = phi(s)
    assert s == t


def test_edge_parity():
    assert edge_parity((1, 4)) == "odd"
    assert edge_parity((2, 3)) == "even"
    assert all(edge_parity(e) == "odd" for e in star_tp(6).edges)


def test_parity_structure(trees_by_n):
    for trees in trees_by_n.values():
        for t in trees:
            for e, up in parent_edges(t).items():
                assert sum(x % 2 for x in e) == 1
                if up is None:
                    assert edge_parity(e) == "odd"
                else:
                    assert edge_parity(e) != edge_parity(up)
            # contour corners alternate even/odd vertices
            par = vertex_parities(t)
            assert par == ["even" if k % 2 == 0 else "odd" for k in range(2 * t.n + 1)]


def test_rho_examples():
    for n in range(1, 8):
        top, bottom = NoncrossingPartition.top(n), NoncrossingPartition.bottom(n)
        assert rho(star_tp(n)) == top
        assert rho(star_bt(n)) == bottom
        assert rho_bar(star_tp(n)) == bottom
        assert rho_bar(star_bt(n)) == top
        assert rho_inverse(top) == star_tp(n)
        assert rho_inverse(bottom) == star_bt(n)
    assert rho(from_dyck("()")) == nc("1")
    assert rho_bar(from_dyck("()")) == nc("1")


def test_rho_matches_tree_partition_description(trees_by_n):
    for trees in trees_by_n.values():
        for t in trees:
            assert rho(t) == rho_by_tree_partition(t)
            assert rho_bar(t) == rho_bar_by_tree_partition(t)


def test_rho_bijections_and_inverse(trees_by_n):
    for n, trees in trees_by_n.items():
        assert len({rho(t) for t in trees}) == catalan(n)
        assert len({rho_bar(t) for t in trees}) == catalan(n)
        for t in trees:
            assert rho_inverse(rho(t)) == t


def test_reroot_commutes_with_kreweras(trees_by_n):
    for trees in trees_by_n.values():
        for t in trees:
            k = kreweras(rho(t))
            assert rho(phi(t)) == k
            assert rho_bar(t) == k


def test_meander_examples(trees_by_n):
    for n in range(1, 8):
        assert is_meander(star_tp(n), star_bt(n))
    for n in range(2, 6):
        for m in trees_by_n[n]:
            assert not is_meander(m, m)
            assert count_loops(m.edges, m.edges) == n
    for trees in trees_by_n.values():
        for t in trees:
            assert is_meander(t, phi(t))


def test_meander_counts_are_meandric_numbers(trees_by_n):
    # closed meanders of order n: 1, 2, 8, 42, 262 (OEIS A005315)
    for n, expected in zip(range(1, 6), [1, 2, 8, 42, 262]):
        trees = trees_by_n[n]
        assert sum(is_meander(a, b) for a in trees for b in trees) == expected


def test_meander_implies_lattice_complement(trees_by_n):
    for n in range(1, 6):
        trees = trees_by_n[n]
        for a in trees:
            for b in trees:
                if is_meander(a, b):
                    assert is_complement(rho(a), rho(b))


def test_lattice_complement_without_meander():
    # {1,2}/{3,4} and {1,4}/{2,3} are complements in NC(4) but their trees make two loops
    a, b = from_dyck("()((()))"), from_dyck("((()))()")
    assert rho(a) == nc("1,2/3,4") and rho(b) == nc("1,4/2,3")
    assert is_complement(rho(a), rho(b))
    assert count_loops(a.edges, b.edges) == 2


def test_meander_size_mismatch():
    with pytest.raises(SizeMismatchError):
        is_meander(star_tp(2), star_tp(3))


def test_meander_accepts_crossing_matchings():
    assert count_loops([(1, 3), (2, 4)], [(1, 2), (3, 4)]) == 1


def test_tree_formats_round_trip(trees_by_n):
    for n in range(1, 7):
        for t in trees_by_n[n]:
            assert parse_tree(t.dyck) == t
            assert PlaneTree.from_dict(t.to_dict()) == t
    assert from_edges([(1, 2), (3, 6), (4, 5)]).to_dict() == {"n": 3, "edges": [[1, 2], [3, 6], [4, 5]]}
    with pytest.raises(InvalidTreeError):
        PlaneTree.from_dict({"n": 2, "edges": [[1, 2]]})
