"""Arena-based suffix tree: nodes, navigation, locate, and dump formats.

The tree stores the implicit suffix tree of an unsealed text (repeated
suffixes end mid-edge, leaf edges stay open) and becomes the classic
sentinel-terminated suffix tree once the store is sealed. Mutation lives
in online_builder; this module is the structure plus read-side queries.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .text_store import TextStore, as_symbols

NIL = -1
ROOT = 0

KIND_ROOT = 0
KIND_BRANCH = 1
KIND_LEAF = 2

_KIND_NAMES = {KIND_ROOT: "root", KIND_BRANCH: "branching", KIND_LEAF: "leaf"}


class Locus(NamedTuple):
    """A point in the tree: the node whose incoming edge holds it, plus the
    string depth d, with depth(parent(node)) < d <= depth(node)."""
    node: int
    d: int


class SuffixTree:
    """Node arena over a TextStore.

    Node ids are dense ints; id 0 is the root. Per-node data lives in
    parallel lists. Children are per-node dicts keyed by symbol code
    (None for leaves, which never have children). Leaf edges carry an
    open end (NIL) that resolves to the current text length.
    """

    __slots__ = ("store", "kind", "parent", "edge_start", "edge_end",
                 "depth_arr", "slink_arr", "child_map", "wlink_map")

    def __init__(self, store: TextStore):
        self.store = store
        self.kind = bytearray([KIND_ROOT])
        self.parent = [NIL]
        self.edge_start = [NIL]   # 0-based first label position; NIL for root
        self.edge_end = [NIL]     # 0-based last label position; NIL = open (leaf)
        self.depth_arr = [0]      # string depth; leaves compute from the open end
        self.slink_arr = [NIL]
        self.child_map: list = [{}]     # dict symbol -> node, None for leaves
        self.wlink_map: list = [None]   # dict symbol -> source branching node

    # -- arena basics ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.kind)

    @property
    def sealed(self) -> bool:
        return self.store.sealed

    def node_count(self) -> int:
        return len(self.kind)

    def leaf_count(self) -> int:
        return self.kind.count(KIND_LEAF)

    def branching_count(self) -> int:
        return self.kind.count(KIND_BRANCH)

    def is_leaf(self, u: int) -> bool:
        return self.kind[u] == KIND_LEAF

    def is_branching(self, u: int) -> bool:
        return self.kind[u] == KIND_BRANCH

    # -- navigation --------------------------------------------------------

    def parent_of(self, u: int) -> int:
        """Parent node id; NIL for the root."""
        return self.parent[u]

    def child(self, u: int, y: int):
        """Child of u along symbol y, or None when absent."""
        cm = self.child_map[u]
        if cm is None:
            return None
        return cm.get(y)

    def children(self, u: int) -> Iterator[tuple[int, int]]:
        """(symbol, child) pairs in symbol order; empty for leaves."""
        cm = self.child_map[u]
        if not cm:
            return iter(())
        return iter(sorted(cm.items()))

    def depth(self, u: int) -> int:
        """String depth of u. Leaf depth tracks the open edge end."""
        if self.kind[u] == KIND_LEAF:
            return self.depth_arr[self.parent[u]] + len(self.store) - self.edge_start[u]
        return self.depth_arr[u]

    def start(self, u: int) -> int:
        """1-based text position of one occurrence of str(u).

        Derived from the incoming edge: the edge label was cut from a
        concrete occurrence, and the prefix above it aligns with the
        same occurrence.
        """
        if u == ROOT:
            raise ValueError("root has no string")
        return self.edge_start[u] - self.depth_arr[self.parent[u]] + 1

    def edge_span(self, u: int) -> tuple[int, int]:
        """Incoming edge label as 1-based (start, end); open ends resolve
        to the current text length."""
        if u == ROOT:
            raise ValueError("root has no incoming edge")
        s = self.edge_start[u]
        e = self.edge_end[u]
        return (s + 1, len(self.store) if e == NIL else e + 1)

    def slink(self, u: int) -> int:
        """Suffix link of a branching node."""
        if self.kind[u] != KIND_BRANCH:
            raise ValueError("suffix links exist on branching nodes only")
        return self.slink_arr[u]

    def wlinks(self, u: int) -> list[tuple[int, int]]:
        """Stored Weiner links of u as (symbol, target) pairs in symbol
        order: wlink(u, x) = v means str(v) = x + str(u). Empty for the
        root; error for leaves."""
        if self.kind[u] == KIND_LEAF:
            raise ValueError("Weiner links exist on branching nodes and the root only")
        wm = self.wlink_map[u]
        if not wm:
            return []
        return sorted(wm.items())

    def wlink(self, u: int, x: int):
        """Weiner-link target of u for symbol x, or None."""
        if self.kind[u] == KIND_LEAF:
            raise ValueError("Weiner links exist on branching nodes and the root only")
        wm = self.wlink_map[u]
        if wm is None:
            return None
        return wm.get(x)

    def leaf_child_count(self, u: int) -> int:
        """Number of children of u that are leaves."""
        cm = self.child_map[u]
        if not cm:
            return 0
        kind = self.kind
        return sum(1 for v in cm.values() if kind[v] == KIND_LEAF)

    def suffix_start(self, leaf: int) -> int:
        """1-based start of the unique suffix a leaf stands for."""
        if self.kind[leaf] != KIND_LEAF:
            raise ValueError("not a leaf")
        return self.edge_start[leaf] - self.depth_arr[self.parent[leaf]] + 1

    # -- search ------------------------------------------------------------

    def locate(self, s) -> Locus | None:
        """Locus of string s, or None when s does not occur.

        Walks from the root comparing every symbol; O(|s|).
        """
        q = list(as_symbols(s))
        if not q:
            raise ValueError("empty query")
        syms = self.store._symbols
        n = len(syms)
        child_map = self.child_map
        edge_start = self.edge_start
        edge_end = self.edge_end
        u = ROOT
        d = 0
        i = 0
        m = len(q)
        while True:
            cm = child_map[u]
            v = None if cm is None else cm.get(q[i])
            if v is None:
                return None
            es = edge_start[v]
            ee = edge_end[v]
            elen = (n if ee == NIL else ee + 1) - es
            take = min(elen, m - i)
            if syms[es:es + take] != q[i:i + take]:
                return None
            i += take
            d += take
            if i == m:
                return Locus(v, d)
            u = v

    def subtree_leaf_count(self, u: int) -> int:
        """Leaves in the subtree rooted at u (u itself counts if a leaf)."""
        kind = self.kind
        child_map = self.child_map
        total = 0
        stack = [u]
        while stack:
            v = stack.pop()
            if kind[v] == KIND_LEAF:
                total += 1
            else:
                stack.extend(child_map[v].values())
        return total

    def min_suffix_starts(self) -> list[int]:
        """Per-node smallest suffix start below (or at) each node, 1-based.

        Gives the leftmost occurrence start of str(u) for every node u.
        Two O(arena) passes. Node ids are not topological (splits allocate
        parents after children), so the fold runs over reverse BFS order.
        """
        parent = self.parent
        edge_start = self.edge_start
        depth_arr = self.depth_arr
        child_map = self.child_map
        order = [ROOT]
        for u in order:  # grows while iterating: plain BFS
            cm = child_map[u]
            if cm:
                order.extend(cm.values())
        big = len(self.store._symbols) + 2
        out = [es - depth_arr[p] + 1 if k == KIND_LEAF else big
               for k, p, es in zip(self.kind, parent, edge_start)]
        for u in reversed(order):
            if u:  # root pushes nowhere
                ou = out[u]
                p = parent[u]
                if ou < out[p]:
                    out[p] = ou
        return out

    # -- serialization -----------------------------------------------------

    def dump(self) -> str:
        """One line per node in preorder, children in symbol order.

        Tab-separated fields: node id, kind, parent, edge label as
        "start,end" (1-based, open ends resolved), depth, start, slink.
        Absent fields print "-".
        """
        lines = []
        stack = [ROOT]
        while stack:
            u = stack.pop()
            if u == ROOT:
                edge = par = st = "-"
            else:
                s, e = self.edge_span(u)
                edge = f"{s},{e}"
                par = str(self.parent[u])
                st = str(self.start(u))
            sl = self.slink_arr[u]
            slink = str(sl) if self.kind[u] == KIND_BRANCH and sl != NIL else "-"
            lines.append(f"{u}\t{_KIND_NAMES[self.kind[u]]}\t{par}\t{edge}\t"
                         f"{self.depth(u)}\t{st}\t{slink}")
            cm = self.child_map[u]
            if cm:
                for _, v in sorted(cm.items(), reverse=True):
                    stack.append(v)
        return "\n".join(lines)

    def canonical_form(self, u: int = ROOT):
        """Shape-and-labels form: nested (edge_symbols, child_forms) tuples
        with children in symbol order. Node ids and label positions do not
        appear, so two structurally equal trees compare equal."""
        syms = self.store._symbols
        n = len(syms)
        edge_start = self.edge_start
        edge_end = self.edge_end
        child_map = self.child_map

        def form(v: int):
            if v == ROOT:
                label = ()
            else:
                es = edge_start[v]
                ee = edge_end[v]
                label = tuple(syms[es:(n if ee == NIL else ee + 1)])
            cm = child_map[v]
            if not cm:
                return (label, ())
            return (label, tuple(form(w) for _, w in sorted(cm.items())))

        return form(u)
