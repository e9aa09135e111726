import itertools

import pytest
from hypothesis import given, settings

from hamex.errors import PreconditionError
from hamex.families import FamilySpec, build_family, legal_range
from hamex.graph import (build, complete, complete_bipartite, cycle, disjoint_union, empty, from_mask, join, path,
                         petersen, star)
from hamex.hamilton import (HamProperty, closure, deficiency_range, find_deficiency_set, has_hamilton_cycle,
                            has_hamilton_path, has_hamilton_uv_path, has_property, is_hamilton_connected)
from oracles import (dp_ham_cycle, edge_set, naive_closure, perm_ham_connected, perm_ham_cycle, perm_ham_path)
from strategies import graphs

C, P, HC = HamProperty.CYCLE, HamProperty.PATH, HamProperty.CONNECTED


def test_cycle_examples():
    assert has_hamilton_cycle(cycle(5))
    assert not has_hamilton_cycle(petersen())
    assert not has_hamilton_cycle(join(complete(2), disjoint_union(empty(2), complete(3))))


def test_path_examples():
    assert has_hamilton_path(path(5))
    assert not has_hamilton_path(star(3))
    assert not has_hamilton_path(join(complete(1), disjoint_union(empty(2), complete(2))))


def test_connected_examples():
    assert is_hamilton_connected(complete(4))
    assert not is_hamilton_connected(cycle(5))
    assert not is_hamilton_connected(join(complete(3), disjoint_union(empty(2), complete(2))))


def test_degenerate_sizes():
    assert not has_hamilton_cycle(complete(1)) and not has_hamilton_cycle(complete(2))
    assert has_hamilton_path(complete(1))
    assert is_hamilton_connected(complete(1))
    assert is_hamilton_connected(complete(2)) and not is_hamilton_connected(empty(2))
    assert has_hamilton_cycle(complete(3)) and is_hamilton_connected(complete(3))


def test_petersen_is_traceable_but_not_connected():
    pet = petersen()
    assert has_hamilton_path(pet)
    assert not is_hamilton_connected(pet)


def test_deciders_match_permutation_oracles_exhaustively():
    for n in range(1, 7):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = from_mask(n, mask)
            es = g.edges()
            assert has_hamilton_cycle(g) == perm_ham_cycle(n, es)
            assert has_hamilton_path(g) == perm_ham_path(n, es)
            if n <= 5:
                assert is_hamilton_connected(g) == perm_ham_connected(n, es)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=6, max_n=11))
def test_cycle_matches_subset_dp(g):
    assert has_hamilton_cycle(g) == dp_ham_cycle(g.n, g.edges())


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_uv_paths(g):
    for u, v in itertools.combinations(range(g.n), 2):
        assert has_hamilton_uv_path(g, u, v) == perm_ham_path(g.n, g.edges(), (u, v))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_property_hierarchy(g):
    if g.n >= 3 and is_hamilton_connected(g):
        assert has_hamilton_cycle(g)
    if has_hamilton_cycle(g):
        assert has_hamilton_path(g)


def test_has_property_dispatch():
    g = cycle(5)
    assert has_property(g, C) and has_property(g, P) and not has_property(g, HC)
    assert HamProperty.parse("hc") is HC and HamProperty.parse("PATH") is P
    with pytest.raises(ValueError):
        HamProperty.parse("tour")


def test_closure_examples():
    assert closure(complete(6), 6) == complete(6)
    k23 = complete_bipartite(2, 3)
    assert closure(k23, 5) == k23.add_edge(0, 1)
    fam = join(complete(2), disjoint_union(empty(2), complete(3)))
    assert closure(fam, 7) == fam


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_closure_matches_naive_and_is_idempotent(g):
    for t in (g.n - 1, g.n, g.n + 1):
        cl = closure(g, t)
        assert edge_set(cl) == naive_closure(g.n, g.edges(), t)
        assert g.is_subgraph_of(cl)
        assert closure(cl, t) == cl


def test_deficiency_examples():
    fam = join(complete(2), disjoint_union(empty(2), complete(3)))
    d = find_deficiency_set(fam, C)
    assert (d.s, d.members, d.bound) == (2, (2, 3), 2)
    d = find_deficiency_set(petersen(), C)
    assert (d.s, d.members) == (3, (0, 1, 2))
    d = find_deficiency_set(cycle(5), C)
    assert (d.s, d.members) == (2, (0, 1))
    assert has_hamilton_cycle(cycle(5))


def test_deficiency_witness_order_prefers_low_degree():
    # vertices 3 and 4 have degree 1, vertex 0 has degree 2
    g = build(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
    d = find_deficiency_set(g, C)
    assert d.s == 1 and d.members == (3,)


def test_deficiency_connected_mode():
    g = cycle(6)
    d = find_deficiency_set(g, HC)
    assert d.s == 2 and len(d.members) == 1 and d.bound == 2
    with pytest.raises(PreconditionError):
        find_deficiency_set(path(5), HC)


def test_deficiency_none_on_dense_graphs():
    for n in range(3, 9):
        assert find_deficiency_set(complete(n), C) is None
        assert find_deficiency_set(complete(n), P) is None
        if n >= 4:
            assert find_deficiency_set(complete(n), HC) is None


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=3, max_n=9))
def test_deficiency_invariants(g):
    for mode in (C, P, HC):
        if mode is HC and g.min_degree < 2:
            continue
        d = find_deficiency_set(g, mode)
        if d is None:
            assert has_property(g, mode)
            continue
        assert d.s in deficiency_range(g.n, mode)
        size = d.s - 1 if mode is HC else d.s
        assert len(d.members) == size and list(d.members) == sorted(d.members)
        assert all(g.degree(v) <= d.bound for v in d.members)


def test_family_members_fail_their_property():
    for n in range(3, 11):
        for prop in (C, P, HC):
            for s in legal_range(prop, n):
                g = build_family(FamilySpec(prop, n, s))
                assert not has_property(g, prop), (prop, n, s)
