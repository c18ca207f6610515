"""Convenience facade tying the store, builder, and registry together."""

from __future__ import annotations

from .implicit_registry import ImplicitRegistry
from .nf_offline import NfReport, offline_all_nf, offline_single_nf
from .nf_online import online_all_nf, online_single_nf
from .online_builder import OnlineBuilder
from .suffix_tree import Locus
from .text_store import TextStore


class NetFrequencyIndex:
    """An append-only text index answering net-frequency queries.

    Symbols stream in through extend()/extend_text(); queries are valid
    between extensions. seal() terminates the text, after which queries
    run against the classic sentinel-terminated tree.
    """

    def __init__(self, alphabet_size: int = 256,
                 collect_events: bool = False, paranoid: bool = False):
        self.store = TextStore(alphabet_size)
        self.builder = OnlineBuilder(self.store, collect_events=collect_events)
        self.tree = self.builder.tree
        self.registry = ImplicitRegistry(self.store, self.tree, paranoid=paranoid)
        self.builder.registry = self.registry
        self.registry.builder = self.builder

    def __len__(self) -> int:
        return len(self.store)

    @property
    def sealed(self) -> bool:
        return self.store.sealed

    def extend(self, symbol) -> list:
        return self.builder.extend(symbol)

    def extend_text(self, text) -> list:
        return self.builder.extend_text(text)

    def seal(self) -> list:
        return self.builder.seal()

    def single_nf(self, s) -> int:
        """Net frequency of s against the current text."""
        if self.store.sealed:
            return offline_single_nf(self.tree, s)
        return online_single_nf(self.builder, self.registry, s)

    def all_nf(self) -> list[NfReport]:
        """All strings of positive net frequency, ascending by occurrence."""
        if self.store.sealed:
            return offline_all_nf(self.tree)
        return online_all_nf(self.builder, self.registry)

    def active_locus(self) -> Locus:
        return self.builder.active_locus()

    def active_depth(self) -> int:
        return self.builder.active_depth()

    def node_count(self) -> int:
        return self.tree.node_count()

    def dump_tree(self) -> str:
        return self.tree.dump()

    def dump_registry(self) -> str:
        return self.registry.dump()
