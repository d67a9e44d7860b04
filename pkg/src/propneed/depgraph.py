"""Item dependency graph and indirect need as a closure over it."""
from __future__ import annotations

from graphlib import TopologicalSorter
from typing import Mapping

from .corpus import Library
from .elicitor import NeedSet
from .errors import MissingDirectEntry, UnknownItem


class DependencyGraph:
    """Nodes are item ids; edge ``(i, j)`` means item ``i`` uses item ``j``."""

    def __init__(self, nodes, edges):
        self.nodes: tuple[str, ...] = tuple(nodes)
        self.edges: frozenset[tuple[str, str]] = frozenset(edges)
        self.succ: dict[str, list[str]] = {n: [] for n in self.nodes}
        for i, j in sorted(self.edges):
            self.succ[i].append(j)

    def __contains__(self, node: str) -> bool:
        return node in self.succ

    def __repr__(self) -> str:
        return f"DependencyGraph({len(self.nodes)} nodes, {len(self.edges)} edges)"


def build_graph(lib: Library) -> DependencyGraph:
    return DependencyGraph(
        (it.id for it in lib.items),
        ((it.id, u) for it in lib.items for u in it.uses),
    )


def reachable(g: DependencyGraph, item: str) -> set[str]:
    """``item`` and everything it transitively uses."""
    if item not in g:
        raise UnknownItem(item)
    seen = {item}
    todo = [item]
    while todo:
        for nxt in g.succ[todo.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def _close(g: DependencyGraph, nodes, direct: Mapping[str, NeedSet]) -> dict[str, frozenset]:
    # static_order yields every node after the nodes it uses
    order = TopologicalSorter({n: g.succ[n] for n in nodes}).static_order()
    memo: dict[str, frozenset] = {}
    for n in order:
        if n not in direct:
            raise MissingDirectEntry(n)
        acc = set(direct[n].pairs)
        for s in g.succ[n]:
            acc |= memo[s]
        memo[n] = frozenset(acc)
    return memo


def indirect_needs(item: str, g: DependencyGraph, direct: Mapping[str, NeedSet]) -> NeedSet:
    memo = _close(g, reachable(g, item), direct)
    return NeedSet(item, memo[item], "indirect")


def indirect_closure(g: DependencyGraph, direct: Mapping[str, NeedSet]) -> dict[str, NeedSet]:
    """Indirect need sets for every node, sharing work bottom-up."""
    memo = _close(g, g.nodes, direct)
    return {n: NeedSet(n, memo[n], "indirect") for n in g.nodes}
