"""Canonical forms and isomorph-free enumeration of connected block graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph_core import Graph, bits, is_block_graph, is_connected, to_graph6

CANONICAL_LIMIT = 10
FAST_LIMIT = 9
ORACLE_LIMIT = 6


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """``(n, code)`` where ``code`` packs the upper triangle of the canonically
    relabeled adjacency matrix, row by row, most significant bit first."""

    n: int
    code: int

    def graph(self) -> Graph:
        adj = [0] * self.n
        k = self.n * (self.n - 1) // 2
        for i, j in combinations(range(self.n), 2):
            k -= 1
            if self.code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return Graph(self.n, tuple(adj))

    def graph6(self) -> str:
        return to_graph6(self.graph())


def _refine(g: Graph, cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (cells as bitmasks)."""
    while True:
        new: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                key = tuple((g.adj[v] & c).bit_count() for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            new.extend(groups[key] for key in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


def _leaf_code(g: Graph, cells: list[int]) -> int:
    order = [c.bit_length() - 1 for c in cells]
    code = 0
    for i, j in combinations(range(g.n), 2):
        code = (code << 1) | (g.adj[order[i]] >> order[j] & 1)
    return code


def canonical_form(g: Graph) -> CanonicalForm:
    """Best leaf of an individualization-refinement search tree.

    Vertices that are twins inside the current cell are interchangeable (the
    transposition is an automorphism fixing the partition), so only one per
    twin class is individualized.
    """
    if g.n > CANONICAL_LIMIT:
        raise ValueError(f"canonical_form is limited to {CANONICAL_LIMIT} vertices, got {g.n}")
    if g.n == 0:
        return CanonicalForm(0, 0)
    best = [-1]

    def search(cells: list[int]) -> None:
        cells = _refine(g, cells)
        if len(cells) == g.n:
            best[0] = max(best[0], _leaf_code(g, cells))
            return
        idx = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        seen: list[int] = []
        for v in bits(target):
            twin = any(
                (g.adj[v] & ~(1 << w)) == (g.adj[w] & ~(1 << v)) for w in seen
            )
            if twin:
                continue
            seen.append(v)
            search(cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:])

    search([g.vertex_mask])
    return CanonicalForm(g.n, best[0])


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def _attach_block(g: Graph, at: int, size: int) -> Graph:
    n = g.n + size - 1
    new = list(range(g.n, n))
    members = [at] + new
    adj = list(g.adj) + [0] * (size - 1)
    for u in members:
        for v in members:
            if u != v:
                adj[u] |= 1 << v
    return Graph(n, tuple(adj))


def enumerate_connected_block_graphs(n: int) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class, sorted by canonical form."""
    if not 1 <= n <= FAST_LIMIT:
        raise ValueError(f"enumeration supports 1 <= n <= {FAST_LIMIT}, got {n}")
    levels: dict[int, set[CanonicalForm]] = {1: {canonical_form(Graph(1, (0,)))}}
    for m in range(1, n):
        for form in sorted(levels.get(m, ())):
            base = form.graph()
            for size in range(2, n - m + 2):
                bucket = levels.setdefault(m + size - 1, set())
                for at in range(m):
                    bucket.add(canonical_form(_attach_block(base, at, size)))
    for form in sorted(levels.get(n, ())):
        yield form.graph()


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


def oracle_enumerate(n: int) -> Iterator[Graph]:
    """Slow reference: filter all labeled graphs, deduplicate by canonical form."""
    if not 1 <= n <= ORACLE_LIMIT:
        raise ValueError(f"oracle enumeration supports 1 <= n <= {ORACLE_LIMIT}, got {n}")
    forms = {canonical_form(g) for g in labeled_graphs(n) if is_connected(g) and is_block_graph(g)}
    for form in sorted(forms):
        yield form.graph()


def enumerate_graphs(n: int, connected: bool = True) -> Iterator[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, by vertex extension.

    Deleting any vertex of a graph leaves a graph on n - 1 vertices, and every
    connected graph has a non-cut vertex, so extending each class on n - 1
    vertices by one new vertex with every possible neighborhood reaches every
    class (nonempty neighborhoods over connected bases when ``connected``).
    """
    if not 1 <= n <= CANONICAL_LIMIT:
        raise ValueError(f"supports 1 <= n <= {CANONICAL_LIMIT}, got {n}")
    forms = {canonical_form(Graph(1, (0,)))}
    first = 1 if connected else 0
    for m in range(1, n):
        nxt = set()
        for form in sorted(forms):
            base = form.graph()
            for nb in range(first, 1 << m):
                adj = list(base.adj) + [nb]
                for v in bits(nb):
                    adj[v] |= 1 << m
                nxt.add(canonical_form(Graph(m + 1, tuple(adj))))
        forms = nxt
    for form in sorted(forms):
        yield form.graph()


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    return enumerate_graphs(n, connected=True)
