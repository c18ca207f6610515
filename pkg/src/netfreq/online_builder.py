"""Online suffix tree construction, one appended symbol at a time.

Ukkonen-style update with an explicit active point, open leaf ends, and
suffix links. Weiner links are recorded as the mirror of every suffix
link assignment. Each mutation is also published as an event so that
observers (the implicit-locus registry, differential tests) can replay
the exact construction.
"""

from __future__ import annotations

from typing import NamedTuple

from .suffix_tree import KIND_BRANCH, KIND_LEAF, NIL, ROOT, Locus, SuffixTree
from .text_store import TextStore, as_symbols


class NewLeaf(NamedTuple):
    """A leaf was attached for the suffix starting at suffix_start (1-based)."""
    leaf: int
    parent: int
    suffix_start: int


class EdgeSplit(NamedTuple):
    """The edge into old_child was cut; new_node now owns its upper part."""
    old_child: int
    new_node: int


class SuffixLinkSet(NamedTuple):
    source: int
    target: int


class ActiveMoved(NamedTuple):
    """Extension finished; the active point moved. Both ends are canonical
    loci as (node, depth) pairs."""
    old: tuple[int, int]
    new: tuple[int, int]


class OnlineBuilder:
    """Maintains a SuffixTree over a growing TextStore.

    extend() appends one symbol and runs the update cascade. The active
    point is kept as (active_node, active_edge, active_length) where
    active_edge is a 0-based text position of the next unmatched symbol.
    Invariant between extensions: remainder equals the length of the
    active string (the longest repeated suffix).
    """

    def __init__(self, store: TextStore, registry=None, collect_events: bool = False):
        self.store = store
        self.tree = SuffixTree(store)
        self.registry = registry
        self.collect_events = collect_events
        self.active_node = ROOT
        self.active_edge = 0
        self.active_length = 0
        self.remainder = 0
        if len(store) != 0:
            raise ValueError("builder requires an empty store")

    # -- public surface ------------------------------------------------

    def extend(self, symbol) -> list:
        """Append one symbol and update the tree. Returns the list of
        events for this extension (empty unless collect_events)."""
        code = ord(symbol) if isinstance(symbol, str) else symbol
        self.store.append(code)
        return self._extend_tree(code)

    def extend_text(self, text) -> list:
        """Append every symbol of text. Same effect as repeated extend();
        bulk appends run a flattened loop that skips per-call overhead."""
        reg = self.registry
        if self.collect_events or (reg is not None and reg.paranoid):
            events = []
            for code in as_symbols(text):
                events.extend(self.extend(code))
            return events
        codes = as_symbols(text)
        store = self.store
        if store.sealed:
            raise ValueError("store is sealed")
        asz = store.alphabet_size
        syms = store._symbols
        tree = self.tree
        kind = tree.kind
        parent = tree.parent
        edge_start = tree.edge_start
        edge_end = tree.edge_end
        depth_arr = tree.depth_arr
        slink_arr = tree.slink_arr
        child_map = tree.child_map
        wlink_map = tree.wlink_map
        if reg is not None:
            reg_leaf = reg.leaf_added
            reg_split = reg.edge_split
            reg_phase = reg.phase_ended

        active_node = self.active_node
        active_edge = self.active_edge
        active_length = self.active_length
        remainder = self.remainder
        pos = len(syms) - 1
        try:
            for c in codes:
                if not 0 <= c < asz:
                    raise ValueError(
                        f"symbol {c!r} outside alphabet [0, {asz})")
                syms.append(c)
                pos += 1
                n = pos + 1
                remainder += 1
                last_new = NIL
                while remainder > 0:
                    if active_length == 0:
                        active_edge = pos
                    edge_sym = syms[active_edge]
                    child = child_map[active_node].get(edge_sym)
                    if child is None:
                        leaf = len(kind)
                        kind.append(KIND_LEAF)
                        parent.append(active_node)
                        edge_start.append(pos)
                        edge_end.append(NIL)
                        depth_arr.append(0)
                        slink_arr.append(NIL)
                        child_map.append(None)
                        wlink_map.append(None)
                        child_map[active_node][edge_sym] = leaf
                        if reg is not None:
                            reg_leaf(leaf, active_node, pos - remainder + 1)
                        if last_new != NIL:
                            slink_arr[last_new] = active_node
                            x = syms[edge_start[last_new]
                                     - depth_arr[parent[last_new]]]
                            wm = wlink_map[active_node]
                            if wm is None:
                                wlink_map[active_node] = {x: last_new}
                            else:
                                wm[x] = last_new
                            last_new = NIL
                    else:
                        es = edge_start[child]
                        ee = edge_end[child]
                        elen = (n if ee == NIL else ee + 1) - es
                        if active_length >= elen:
                            active_edge += elen
                            active_length -= elen
                            active_node = child
                            continue
                        if syms[es + active_length] == c:
                            if last_new != NIL:
                                slink_arr[last_new] = active_node
                                x = syms[edge_start[last_new]
                                         - depth_arr[parent[last_new]]]
                                wm = wlink_map[active_node]
                                if wm is None:
                                    wlink_map[active_node] = {x: last_new}
                                else:
                                    wm[x] = last_new
                                last_new = NIL
                            active_length += 1
                            break
                        nu = len(kind)
                        kind.append(KIND_BRANCH)
                        parent.append(active_node)
                        edge_start.append(es)
                        edge_end.append(es + active_length - 1)
                        depth_arr.append(depth_arr[active_node] + active_length)
                        slink_arr.append(NIL)
                        child_map.append({syms[es + active_length]: child})
                        wlink_map.append(None)
                        child_map[active_node][edge_sym] = nu
                        edge_start[child] = es + active_length
                        parent[child] = nu
                        if reg is not None:
                            reg_split(child, nu)
                        leaf = nu + 1
                        kind.append(KIND_LEAF)
                        parent.append(nu)
                        edge_start.append(pos)
                        edge_end.append(NIL)
                        depth_arr.append(0)
                        slink_arr.append(NIL)
                        child_map.append(None)
                        wlink_map.append(None)
                        child_map[nu][c] = leaf
                        if reg is not None:
                            reg_leaf(leaf, nu, pos - remainder + 1)
                        if last_new != NIL:
                            slink_arr[last_new] = nu
                            x = syms[edge_start[last_new]
                                     - depth_arr[parent[last_new]]]
                            wm = wlink_map[nu]
                            if wm is None:
                                wlink_map[nu] = {x: last_new}
                            else:
                                wm[x] = last_new
                        last_new = nu
                    remainder -= 1
                    if active_node == ROOT and active_length > 0:
                        active_length -= 1
                        active_edge = pos - remainder + 1
                    elif active_node != ROOT:
                        sl = slink_arr[active_node]
                        active_node = sl if sl != NIL else ROOT
                if reg is not None:
                    reg_phase(n, c)
        finally:
            self.active_node = active_node
            self.active_edge = active_edge
            self.active_length = active_length
            self.remainder = remainder
        return []

    def seal(self) -> list:
        """Terminate the text with the sentinel and run its extension.

        Afterwards every suffix has a leaf and the active point rests at
        the root. Further extends fail at the store."""
        self.store.seal()
        return self._extend_tree(self.store.sentinel)

    def active_locus(self) -> Locus:
        """Canonical locus of the active string (the longest repeated
        suffix); Locus(0, 0) when it is empty."""
        if self.active_length == 0:
            u = self.active_node
            return Locus(u, self.tree.depth_arr[u])
        tree = self.tree
        below = tree.child_map[self.active_node][self.store._symbols[self.active_edge]]
        return Locus(below, tree.depth_arr[self.active_node] + self.active_length)

    def active_depth(self) -> int:
        return self.tree.depth_arr[self.active_node] + self.active_length

    # -- update cascade --------------------------------------------------

    def _extend_tree(self, c: int) -> list:
        tree = self.tree
        syms = self.store._symbols
        n = len(syms)
        pos = n - 1
        kind = tree.kind
        parent = tree.parent
        edge_start = tree.edge_start
        edge_end = tree.edge_end
        depth_arr = tree.depth_arr
        slink_arr = tree.slink_arr
        child_map = tree.child_map
        wlink_map = tree.wlink_map
        reg = self.registry
        collect = self.collect_events
        events = [] if collect else _NO_EVENTS
        if collect:
            old_locus = (self.active_locus().node, self.active_depth())

        active_node = self.active_node
        active_edge = self.active_edge
        active_length = self.active_length
        remainder = self.remainder + 1
        last_new = NIL

        while remainder > 0:
            if active_length == 0:
                active_edge = pos
            edge_sym = syms[active_edge]
            child = child_map[active_node].get(edge_sym)
            if child is None:
                # the whole pending suffix branches off right at the node
                assert active_length == 0
                leaf = len(kind)
                kind.append(KIND_LEAF)
                parent.append(active_node)
                edge_start.append(pos)
                edge_end.append(NIL)
                depth_arr.append(0)
                slink_arr.append(NIL)
                child_map.append(None)
                wlink_map.append(None)
                child_map[active_node][edge_sym] = leaf
                j = pos - remainder + 1
                if reg is not None:
                    reg.leaf_added(leaf, active_node, j)
                if collect:
                    events.append(NewLeaf(leaf, active_node, j + 1))
                if last_new != NIL:
                    slink_arr[last_new] = active_node
                    self._mirror_wlink(active_node, last_new)
                    if collect:
                        events.append(SuffixLinkSet(last_new, active_node))
                    last_new = NIL
            else:
                es = edge_start[child]
                ee = edge_end[child]
                elen = (n if ee == NIL else ee + 1) - es
                if active_length >= elen:
                    active_edge += elen
                    active_length -= elen
                    active_node = child
                    continue
                if syms[es + active_length] == c:
                    # suffix already present: remember it and stop the phase
                    if last_new != NIL:
                        assert active_length == 0
                        slink_arr[last_new] = active_node
                        self._mirror_wlink(active_node, last_new)
                        if collect:
                            events.append(SuffixLinkSet(last_new, active_node))
                        last_new = NIL
                    active_length += 1
                    break
                # cut the edge, then hang the new leaf off the cut point
                nu = len(kind)
                kind.append(KIND_BRANCH)
                parent.append(active_node)
                edge_start.append(es)
                edge_end.append(es + active_length - 1)
                depth_arr.append(depth_arr[active_node] + active_length)
                slink_arr.append(NIL)
                child_map.append({syms[es + active_length]: child})
                wlink_map.append(None)
                child_map[active_node][edge_sym] = nu
                edge_start[child] = es + active_length
                parent[child] = nu
                if reg is not None:
                    reg.edge_split(child, nu)
                if collect:
                    events.append(EdgeSplit(child, nu))
                leaf = len(kind)
                kind.append(KIND_LEAF)
                parent.append(nu)
                edge_start.append(pos)
                edge_end.append(NIL)
                depth_arr.append(0)
                slink_arr.append(NIL)
                child_map.append(None)
                wlink_map.append(None)
                child_map[nu][c] = leaf
                j = pos - remainder + 1
                if reg is not None:
                    reg.leaf_added(leaf, nu, j)
                if collect:
                    events.append(NewLeaf(leaf, nu, j + 1))
                if last_new != NIL:
                    slink_arr[last_new] = nu
                    self._mirror_wlink(nu, last_new)
                    if collect:
                        events.append(SuffixLinkSet(last_new, nu))
                last_new = nu
            remainder -= 1
            if active_node == ROOT and active_length > 0:
                active_length -= 1
                active_edge = pos - remainder + 1
            elif active_node != ROOT:
                sl = slink_arr[active_node]
                active_node = sl if sl != NIL else ROOT

        self.active_node = active_node
        self.active_edge = active_edge
        self.active_length = active_length
        self.remainder = remainder
        if collect:
            events.append(ActiveMoved(old_locus,
                                      (self.active_locus().node, self.active_depth())))
        if reg is not None:
            reg.phase_ended(n, c)
        return events

    def _mirror_wlink(self, target: int, source: int) -> None:
        # slink(source) = target just got set, so str(source) = x str(target)
        tree = self.tree
        x = self.store._symbols[tree.edge_start[source]
                                - tree.depth_arr[tree.parent[source]]]
        wm = tree.wlink_map[target]
        if wm is None:
            tree.wlink_map[target] = {x: source}
        else:
            wm[x] = source


class _FrozenEvents(list):
    def append(self, item):  # pragma: no cover
        raise RuntimeError("event collection is disabled")


_NO_EVENTS = _FrozenEvents()
