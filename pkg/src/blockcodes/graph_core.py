"""Immutable simple graphs on dense vertex indices, stored as adjacency bitmasks.

Besides neighborhoods this module provides the structural tools the rest of the
package leans on: biconnected blocks, block-graph recognition (two independent
routes), maximal-clique counting, twin detection, and graph6 / edge-list I/O.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[u]`` is the open neighborhood of ``u`` as a bitmask.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for u, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {u} has a neighbor outside [0, {self.n})")
            if nb >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in bits(nb):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, u: int) -> int:
        """Closed neighborhood of ``u`` as a bitmask."""
        return self.adj[u] | (1 << u)

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on ``keep``, relabeled to ``0..len(keep)-1`` in sorted order."""
        order = sorted(set(keep))
        index = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            adj.append(to_mask(index[w] for w in bits(self.adj[v]) if w in index))
        return Graph(len(order), tuple(adj))

    def remove_vertex(self, x: int) -> Graph:
        return self.induced(v for v in range(self.n) if v != x)

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = to_mask(perm[w] for w in bits(self.adj[v]))
        return Graph(self.n, tuple(adj))


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range for graph on {g.n} vertices")


def open_neighborhood(g: Graph, u: int) -> frozenset[int]:
    _check_vertex(g, u)
    return frozenset(bits(g.adj[u]))


def closed_neighborhood(g: Graph, u: int) -> frozenset[int]:
    _check_vertex(g, u)
    return frozenset(bits(g.closed(u)))


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g`` (or of the subgraph induced by mask ``within``)."""
    todo = g.vertex_mask if within is None else within
    out = []
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = g.adj[v] & todo & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        todo &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(components(g)) == 1


# -- blocks -----------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    articulation_vertices: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components (bridges are 2-vertex blocks) via Hopcroft-Tarjan.

    Isolated vertices belong to no block. Blocks are sorted by their sorted
    vertex tuple, so the first key is the minimum vertex index.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[frozenset[int]] = []
    cut = set()
    clock = 0

    for root in range(g.n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[tuple[int, int]] = []
        root_children = 0
        # frames: (vertex, parent, remaining neighbor mask)
        stack = [(root, -1, g.adj[root])]
        while stack:
            v, parent, rest = stack[-1]
            if rest:
                w = rest.bit_length() - 1
                stack[-1] = (v, parent, rest & ~(1 << w))
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, g.adj[w]))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (parent, v):
                        break
                found.append(frozenset(comp))
        if root_children > 1:
            cut.add(root)

    found.sort(key=lambda b: tuple(sorted(b)))
    return BlockDecomposition(tuple(found), frozenset(cut))


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.closed(v) & mask) == mask for v in bits(mask))


def is_block_graph(g: Graph) -> bool:
    """Every block induces a clique."""
    return all(is_clique(g, to_mask(b)) for b in blocks(g).blocks)


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """Maximum cardinality search order, reversed; ``None`` if ``g`` is not chordal."""
    weight = [0] * g.n
    numbered = 0
    visit = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        visit.append(v)
        numbered |= 1 << v
        for w in bits(g.adj[v] & ~numbered):
            weight[w] += 1
    order = visit[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in bits(g.adj[v]) if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = to_mask(w for w in later if w != parent)
        if rest & ~g.adj[parent]:
            return None
    return order


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def find_diamond(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced K4 minus an edge as ``(u, v, a, b)`` with ``a``, ``b`` non-adjacent, or ``None``."""
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        for a in bits(common):
            rest = common & ~g.closed(a) & ~((1 << (a + 1)) - 1)
            if rest:
                return (u, v, a, (rest & -rest).bit_length() - 1)
    return None


def is_block_graph_chordal(g: Graph) -> bool:
    """Independent route: chordal and diamond-free."""
    return is_chordal(g) and find_diamond(g) is None


# -- cliques ----------------------------------------------------------------


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as bitmasks, by Bron-Kerbosch with Tomita pivoting."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (p & g.adj[u]).bit_count())
        for v in bits(p & ~g.adj[pivot]):
            expand(r | (1 << v), p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.vertex_mask, 0)
    return sorted(out, key=lambda c: tuple(bits(c)))


def count_maximal_cliques(g: Graph) -> int:
    """n_Q: the number of maximal cliques, isolated vertices counting as K1."""
    if is_block_graph(g):
        isolated = sum(1 for nb in g.adj if not nb)
        return len(blocks(g).blocks) + isolated
    return len(maximal_cliques(g))


# -- twins ------------------------------------------------------------------


@dataclass(frozen=True)
class TwinReport:
    true_twin_pairs: tuple[tuple[int, int], ...]
    false_twin_pairs: tuple[tuple[int, int], ...]
    isolated_vertices: frozenset[int]


def twin_report(g: Graph) -> TwinReport:
    true_pairs = []
    false_pairs = []
    for u, v in combinations(range(g.n), 2):
        if g.closed(u) == g.closed(v):
            true_pairs.append((u, v))
        if g.adj[u] == g.adj[v]:
            false_pairs.append((u, v))
    isolated = frozenset(u for u in range(g.n) if not g.adj[u])
    return TwinReport(tuple(true_pairs), tuple(false_pairs), isolated)


def is_identifiable(g: Graph) -> bool:
    return not twin_report(g).true_twin_pairs


def is_old_admissible(g: Graph) -> bool:
    r = twin_report(g)
    return not r.false_twin_pairs and not r.isolated_vertices


# -- I/O --------------------------------------------------------------------


class GraphParseError(ValueError):
    pass


class MalformedInputError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    out = [_g6_size(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedInputError(f"not a graph6 string: {text!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        raise MalformedInputError("unsupported graph6 size header")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MalformedInputError(f"graph6 body has {len(body)} bytes, expected {need}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - k
    if pad and body[-1] & ((1 << pad) - 1):
        raise MalformedInputError("nonzero graph6 padding bits")
    return Graph(n, tuple(adj))


def to_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedInputError("empty edge list")
    head = lines[0].split()
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise MalformedInputError(f"header must be 'n m', got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise MalformedInputError("negative n or m in header")
    if len(lines) - 1 != m:
        raise MalformedInputError(f"header announces {m} edges, found {len(lines) - 1}")
    adj = [0] * n
    for ln in lines[1:]:
        try:
            u, v = (int(t) for t in ln.split())
        except ValueError:
            raise MalformedInputError(f"bad edge line {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge {ln!r} uses a vertex outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if adj[u] >> v & 1:
            raise DuplicateEdgeError(f"duplicate edge {min(u, v)} {max(u, v)}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "edgelist":
        return to_edgelist(g)
    raise ValueError(f"unknown graph format {fmt!r}")
