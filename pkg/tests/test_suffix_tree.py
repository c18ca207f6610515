"""Tree navigation, sealing, link reciprocity, and canonical-form checks."""

import random

import pytest

from netfreq import (
    NetFrequencyIndex,
    SuffixTree,
    TextStore,
    as_symbols,
    naive_implicit_tree,
    oracle_repeated_suffixes,
)

ROOT = 0


def build(text, sealed=False):
    ix = NetFrequencyIndex()
    ix.extend_text(text)
    if sealed:
        ix.seal()
    return ix.tree


def test_empty_tree_is_root_only():
    store = TextStore()
    tree = SuffixTree(store)
    assert tree.node_count() == 1
    assert tree.depth(ROOT) == 0
    assert list(tree.children(ROOT)) == []


def test_sealed_leaf_counts():
    # one leaf per suffix of text + marker, frozen by hand
    assert build(b"aabaabababaa", sealed=True).leaf_count() == 13
    assert build(b"rstkstcastarstast", sealed=True).leaf_count() == 18


def test_locate_walks_edges_and_reports_depth():
    tree = build(b"aabaabababaa")
    loc = tree.locate(b"aba")
    assert loc is not None and loc.d == 3
    assert tree.locate(b"aabaabababaa").d == 12
    assert tree.locate(b"zz") is None
    assert tree.locate(b"abz") is None
    with pytest.raises(ValueError):
        tree.locate(b"")


def test_edge_labels_and_depths_are_consistent():
    tree = build(b"aabaabababaa", sealed=True)
    n = tree.node_count()
    for u in range(1, n):
        p = tree.parent_of(u)
        i, j = tree.edge_span(u)
        assert 1 <= i <= j
        assert tree.depth(u) == tree.depth(p) + (j - i + 1)
        # the edge's first symbol is the child key under the parent
        assert tree.child(p, tree.store.symbol_at(i)) == u


def test_suffix_links_drop_one_symbol():
    tree = build(b"aabaabababaa", sealed=True)
    store = tree.store
    for u in range(1, tree.node_count()):
        if not tree.is_branching(u):
            continue
        v = tree.slink(u)
        assert v is not None
        assert tree.depth(v) == tree.depth(u) - 1
        # spell both paths and compare tails
        iu, ju = tree.edge_span(u)
        path_u = store.substring(ju - tree.depth(u) + 1, ju)
        iv, jv = tree.edge_span(v) if v != ROOT else (1, 0)
        path_v = store.substring(jv - tree.depth(v) + 1, jv) if v != ROOT else ()
        assert path_u[1:] == path_v


def test_weiner_links_mirror_suffix_links():
    tree = build(b"rstkstcastarstast", sealed=True)
    seen = 0
    for u in range(tree.node_count()):
        if not tree.is_branching(u):
            continue
        for x, w in tree.wlinks(u):
            seen += 1
            assert tree.slink(w) == u
            iw, jw = tree.edge_span(w)
            first = tree.store.symbol_at(jw - tree.depth(w) + 1)
            assert first == x
        v = tree.slink(u)
        if v is not None and u != ROOT:
            iu, ju = tree.edge_span(u)
            x = tree.store.symbol_at(ju - tree.depth(u) + 1)
            assert tree.wlink(v, x) == u
    assert seen >= 1


def test_subtree_leaf_count_equals_frequency():
    text = b"aabaabababaa"
    tree = build(text, sealed=True)
    store = tree.store
    for s in (b"a", b"ab", b"aba", b"baa", b"aabaa"):
        loc = tree.locate(s)
        f = store.frequency(as_symbols(s))
        if loc is None:
            assert f == 0
        else:
            assert tree.subtree_leaf_count(loc.node) == f


def test_min_suffix_starts_against_brute_force():
    rng = random.Random(7)
    for trial in range(40):
        n = rng.randrange(1, 60)
        text = bytes(rng.randrange(3) + 97 for _ in range(n))
        tree = build(text, sealed=trial % 2 == 0)
        starts = tree.min_suffix_starts()
        for u in range(tree.node_count()):
            leaves = [v for v in range(tree.node_count())
                      if tree.is_leaf(v) and _has_ancestor(tree, v, u)]
            if leaves:
                assert starts[u] == min(tree.suffix_start(v) for v in leaves)


def _has_ancestor(tree, v, u):
    while True:
        if v == u:
            return True
        if v == ROOT:
            return False
        v = tree.parent_of(v)


def test_canonical_form_matches_naive_construction():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randrange(1, 50)
        sigma = rng.choice((2, 3, 5))
        text = bytes(rng.randrange(sigma) + 97 for _ in range(n))
        assert build(text).canonical_form() == naive_implicit_tree(text)


def test_active_depth_tracks_longest_repeated_suffix():
    rng = random.Random(13)
    for _ in range(25):
        n = rng.randrange(1, 80)
        text = bytes(rng.randrange(2) + 97 for _ in range(n))
        ix = NetFrequencyIndex()
        longest = 0
        for k, c in enumerate(text, 1):
            ix.extend(c)
            reps = oracle_repeated_suffixes(text[:k], max_length=longest + 1)
            longest = reps[0][0] if reps else 0
            assert ix.active_depth() == longest


def test_dump_lists_every_node():
    tree = build(b"aabaabababaa")
    out = tree.dump()
    assert len(out.strip().splitlines()) == tree.node_count()
