"""Whitehead graphs of a reduced word and their connected components.

The standard graph joins a and b whenever ab^-1 or ba^-1 occurs as a
subword of the linear (non-cyclic) word.  The generalized graph with
respect to a generator ignores runs of that generator's powers and drops
its two letters from the vertex set.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .words import Word, letter_key, letter_to_char


class VertexNotPresentError(KeyError):
    """Queried letter is not a vertex of the graph."""


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return tuple(sorted((u, v), key=letter_key))  # type: ignore[return-value]


@dataclass(frozen=True)
class WhiteheadGraph:
    vertices: frozenset[int]
    multiplicity: tuple[tuple[tuple[int, int], int], ...]

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {e for e, _ in self.multiplicity}

    def multiplicity_of(self, u: int, v: int) -> int:
        key = _edge_key(u, v)
        for e, count in self.multiplicity:
            if e == key:
                return count
        return 0


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[frozenset[int], ...]


def _make_graph(vertices: set[int], counts: Counter) -> WhiteheadGraph:
    mult = tuple(sorted(counts.items(), key=lambda kv: tuple(map(letter_key, kv[0]))))
    return WhiteheadGraph(frozenset(vertices), mult)


def standard_graph(y: Word) -> WhiteheadGraph:
    vertices = {s * abs(x) for x in y.letters for s in (1, -1)}
    counts: Counter = Counter()
    for c, d in zip(y.letters, y.letters[1:]):
        counts[_edge_key(c, -d)] += 1
    return _make_graph(vertices, counts)


def generalized_graph(y: Word, i: int) -> WhiteheadGraph:
    if i < 1 or i > y.rank:
        raise ValueError(f"generator index {i} out of range for rank {y.rank}")
    vertices = {s * abs(x) for x in y.letters for s in (1, -1) if abs(x) != i}
    counts: Counter = Counter()
    prev = None
    for x in y.letters:
        if abs(x) == i:
            continue
        if prev is not None and prev != -x:  # distinct vertices only
            counts[_edge_key(prev, -x)] += 1
        prev = x
    return _make_graph(vertices, counts)


def components(g: WhiteheadGraph) -> ComponentPartition:
    adjacency: dict[int, set[int]] = {v: set() for v in g.vertices}
    for (u, v), _ in g.multiplicity:
        adjacency[u].add(v)
        adjacency[v].add(u)
    seen: set[int] = set()
    blocks = []
    for start in sorted(g.vertices, key=letter_key):
        if start in seen:
            continue
        block = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in adjacency[v]:
                if u not in block:
                    block.add(u)
                    frontier.append(u)
        seen |= block
        blocks.append(frozenset(block))
    return ComponentPartition(tuple(blocks))


def component_of(g: WhiteheadGraph, a: int) -> frozenset[int]:
    if a not in g.vertices:
        raise VertexNotPresentError(f"letter {a} is not a vertex")
    for block in components(g).blocks:
        if a in block:
            return block
    raise AssertionError("components missed a vertex")  # pragma: no cover


def graph_to_json(g: WhiteheadGraph) -> dict:
    return {
        "vertices": [letter_to_char(v) for v in sorted(g.vertices, key=letter_key)],
        "edges": [
            [letter_to_char(u), letter_to_char(v), count]
            for (u, v), count in g.multiplicity
        ],
    }


def graph_to_dot(g: WhiteheadGraph, name: str = "whitehead") -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(g.vertices, key=letter_key):
        lines.append(f'  "{letter_to_char(v)}";')
    for (u, v), count in g.multiplicity:
        label = f' [label="{count}"]' if count > 1 else ""
        lines.append(f'  "{letter_to_char(u)}" -- "{letter_to_char(v)}"{label};')
    lines.append("}")
    return "\n".join(lines)
