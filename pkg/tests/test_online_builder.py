"""Construction paths: per-symbol vs bulk, event collection, sealing."""

import random

import pytest

from netfreq import (
    ActiveMoved,
    EdgeSplit,
    ImplicitRegistry,
    NetFrequencyIndex,
    NewLeaf,
    OnlineBuilder,
    SuffixTree,
    TextStore,
)


def fresh(collect_events=False, paranoid=False):
    return NetFrequencyIndex(collect_events=collect_events, paranoid=paranoid)


def tree_state(ix):
    t = ix.tree
    b = ix.builder
    return (
        list(t.kind), list(t.parent), list(t.edge_start), list(t.edge_end),
        list(t.depth_arr), list(t.slink_arr),
        [dict(m) if m else None for m in t.child_map],
        [dict(m) if m else None for m in t.wlink_map],
        b.active_node, b.active_edge, b.active_length, b.remainder,
        dict(ix.registry._member_node), dict(ix.registry._edge_members),
    )


def test_bulk_and_per_symbol_builds_agree():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randrange(1, 120)
        sigma = rng.choice((2, 3, 4))
        text = bytes(rng.randrange(sigma) + 97 for _ in range(n))
        a = fresh()
        a.extend_text(text)
        b = fresh()
        for c in text:
            b.extend(c)
        a.registry._sync()
        b.registry._sync()
        assert tree_state(a) == tree_state(b)


def test_mixed_bulk_segments_agree_with_per_symbol():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(2, 100)
        text = bytes(rng.randrange(2) + 97 for _ in range(n))
        cut = rng.randrange(1, n)
        a = fresh()
        a.extend_text(text[:cut])
        a.extend(text[cut])
        a.extend_text(text[cut + 1:])
        b = fresh()
        b.extend_text(text)
        a.registry._sync()
        b.registry._sync()
        assert tree_state(a) == tree_state(b)


def test_event_stream_replays_into_equal_registry():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randrange(1, 80)
        text = bytes(rng.randrange(2) + 97 for _ in range(n))
        ix = fresh(collect_events=True)
        shadow = ImplicitRegistry(ix.tree.store, ix.tree)
        for c in text:
            for ev in ix.extend(c):
                shadow.on_event(ev)
        ix.registry._sync()
        shadow._sync()
        assert ix.registry._member_node == shadow._member_node
        assert ix.registry._edge_members == shadow._edge_members


def test_event_types_carry_usable_fields():
    ix = fresh(collect_events=True)
    seen = set()
    for c in b"aabaabab":
        for ev in ix.extend(c):
            seen.add(type(ev).__name__)
            if isinstance(ev, NewLeaf):
                assert ix.tree.is_leaf(ev.leaf)
                assert ev.suffix_start >= 1
            elif isinstance(ev, EdgeSplit):
                assert ix.tree.parent_of(ev.old_child) == ev.new_node
            elif isinstance(ev, ActiveMoved):
                node, d = ev.new
                assert d >= 0 and node >= 0
    assert {"NewLeaf", "EdgeSplit", "ActiveMoved", "SuffixLinkSet"} <= seen


def test_default_build_returns_no_events():
    ix = fresh()
    assert ix.extend(ord("a")) == []
    assert ix.extend_text(b"ab") == []


def test_remainder_equals_active_depth_between_phases():
    ix = fresh()
    for c in b"aabaabababaa":
        ix.extend(c)
        assert ix.builder.remainder == ix.active_depth()


def test_worked_text_active_depth_and_nodes():
    ix = fresh()
    ix.extend_text(b"aabaabababaa")
    assert ix.active_depth() == 4
    assert ix.node_count() == 15


def test_seal_flushes_pending_suffixes():
    ix = fresh()
    ix.extend_text(b"aabaabababaa")
    ix.seal()
    assert ix.sealed
    assert ix.active_depth() == 0
    assert ix.tree.leaf_count() == 13
    assert ix.registry.member_count() == 0
    with pytest.raises(ValueError):
        ix.extend(ord("a"))
    with pytest.raises(ValueError):
        ix.seal()


def test_builder_rejects_symbols_outside_alphabet():
    ix = NetFrequencyIndex(alphabet_size=2)
    ix.extend(0)
    ix.extend(1)
    with pytest.raises(ValueError):
        ix.extend(2)
    with pytest.raises(ValueError):
        ix.extend_text([0, 1, 5])


def test_every_branching_node_gets_a_suffix_link():
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randrange(1, 100)
        text = bytes(rng.randrange(3) + 97 for _ in range(n))
        ix = fresh()
        ix.extend_text(text)
        t = ix.tree
        for u in range(t.node_count()):
            if t.is_branching(u) and u != 0:
                assert t.slink(u) is not None


def test_standalone_builder_without_registry():
    store = TextStore()
    builder = OnlineBuilder(store)
    for c in b"banana":
        builder.extend(c)
    assert builder.tree.locate(b"ana").d == 3
    assert builder.active_depth() == 3
