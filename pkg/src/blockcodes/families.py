"""Deterministic generators for the graph families used in the bound checks.

Labeling conventions (stable so certificates in goldens do not drift):

* ``star(n)``: center 0, leaves 1..n.
* ``thin_spider(n)``: clique c_i = i - 1, stable s_i = n + i - 1.
* ``extremal_*(k)``: path u_1..u_k = 0..k-1, then pendants in path order,
  then pair vertices in path order.
* ``split_hypercube(k)``: clique v_i = i - 1, then u_X for X encoded as the
  bitmask 1..2^k - 1, at index k + X - 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph_core import Graph


class FamilyParameterError(ValueError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyParameterError(msg)


def star(n: int) -> Graph:
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def clique(n: int) -> Graph:
    _need(n >= 1, f"clique needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def thin_spider(n: int) -> Graph:
    _need(n >= 3, f"thin spider needs n >= 3, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def path_power(n: int, p: int) -> Graph:
    """Vertices 0..n-1, adjacent when their distance along the path is at most ``p``."""
    _need(n >= 2 and 1 <= p < n, f"path_power needs n >= 2 and 1 <= p < n, got n={n}, p={p}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, min(n, i + p + 1))])


def _path_with_attachments(k: int, pendant_at: list[int], pair_at: list[int]) -> Graph:
    """Path u_1..u_k plus a pendant at each u_i in ``pendant_at`` and a common
    neighbor of u_i, u_{i+1} for each i in ``pair_at`` (1-based indices)."""
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i in pendant_at:
        edges.append((i - 1, nxt))
        nxt += 1
    for i in pair_at:
        edges += [(i - 1, nxt), (i, nxt)]
        nxt += 1
    return Graph.from_edges(nxt, edges)


def extremal_id(k: int) -> Graph:
    _need(k >= 4, f"extremal_id needs k >= 4, got {k}")
    return _path_with_attachments(k, list(range(1, k + 1)), list(range(2, k - 1)))


def extremal_old(k: int) -> Graph:
    _need(k >= 5, f"extremal_old needs k >= 5, got {k}")
    return _path_with_attachments(k, [1, k] + list(range(3, k - 1)), list(range(1, k)))


def extremal_ld(k: int) -> Graph:
    _need(k >= 2, f"extremal_ld needs k >= 2, got {k}")
    return _path_with_attachments(k, list(range(1, k + 1)), list(range(1, k)))


def split_hypercube(k: int) -> Graph:
    _need(2 <= k <= 5, f"split_hypercube needs 2 <= k <= 5, got {k}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for x in range(1, 1 << k):
        edges += [(i, k + x - 1) for i in range(k) if x >> i & 1]
    return Graph.from_edges(k + (1 << k) - 1, edges)


def random_block_graph(num_blocks: int, max_block_size: int, seed: int) -> Graph:
    """Glue ``num_blocks`` random cliques into a tree of blocks.

    Each new block has a uniform size in [2, max_block_size]. Its parent in
    the block tree is a uniformly chosen earlier block, and the two share one
    uniformly chosen vertex of the parent.
    """
    _need(num_blocks >= 1 and max_block_size >= 2,
          f"random_block_graph needs num_blocks >= 1 and max_block_size >= 2, got {num_blocks}, {max_block_size}")
    rng = random.Random(seed)
    blocks_so_far: list[list[int]] = []
    edges: list[tuple[int, int]] = []
    n = 0
    for b in range(num_blocks):
        size = rng.randint(2, max_block_size)
        if b == 0:
            members = list(range(size))
            n = size
        else:
            host = rng.choice(blocks_so_far)
            glue = rng.choice(host)
            members = [glue] + list(range(n, n + size - 1))
            n += size - 1
        blocks_so_far.append(members)
        edges += [(u, v) for i, u in enumerate(members) for v in members[i + 1:]]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = field(default_factory=tuple)
    seed: int | None = None

    def build(self) -> Graph:
        fn = FAMILIES[self.family]
        if self.family == "random_block":
            return fn(*self.params, seed=0 if self.seed is None else self.seed)
        return fn(*self.params)

    @property
    def label(self) -> str:
        args = ",".join(str(p) for p in self.params)
        tail = f";seed={self.seed}" if self.seed is not None else ""
        return f"{self.family}({args}{tail})"


FAMILIES = {
    "star": star,
    "path": path,
    "clique": clique,
    "spider": thin_spider,
    "thin_spider": thin_spider,
    "path_power": path_power,
    "extremal_id": extremal_id,
    "extremal_old": extremal_old,
    "extremal_ld": extremal_ld,
    "split_hypercube": split_hypercube,
    "random_block": random_block_graph,
}


def default_family_grid() -> list[FamilySpec]:
    """Parameter grid swept by ``verify --families``."""
    specs = [FamilySpec("star", (n,)) for n in range(1, 9)]
    specs += [FamilySpec("path", (n,)) for n in range(2, 15)]
    specs += [FamilySpec("clique", (n,)) for n in range(2, 8)]
    specs += [FamilySpec("thin_spider", (n,)) for n in range(3, 9)]
    specs += [FamilySpec("path_power", (2 * k, k - 1)) for k in range(2, 6)]
    specs += [FamilySpec("extremal_id", (k,)) for k in range(4, 8)]
    specs += [FamilySpec("extremal_old", (k,)) for k in range(5, 8)]
    specs += [FamilySpec("extremal_ld", (k,)) for k in range(2, 8)]
    specs += [FamilySpec("split_hypercube", (k,)) for k in range(2, 5)]
    specs += [FamilySpec("random_block", (b, s), seed) for b, s in ((6, 3), (8, 4), (10, 3)) for seed in range(3)]
    return specs
