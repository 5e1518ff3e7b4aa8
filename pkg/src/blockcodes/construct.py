"""Build an identifying code of size at most n_Q for a connected identifiable block graph.

The recursion peels a degree-1 vertex x (neighbor y) off the graph. Such a
vertex always exists once n >= 4: a leaf block holds at most one articulation
vertex, so a leaf block on three or more vertices would contain two vertices
with equal closed neighborhoods. In a twin-free block graph every leaf block
is therefore an edge, and its non-articulation end has degree 1.

Case 1, G - x twin-free: extend the code of G - x by x, or by a neighbor z of
y when y is a code vertex with no code neighbor.
Case 2, G - x has twins: they are y and a unique v; recurse on G - x - v and
repair with x (and v when y was in the code).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import Code, Kind, find_violation_mask
from .graph_core import (
    Graph,
    bits,
    components,
    count_maximal_cliques,
    find_diamond,
    is_block_graph,
    perfect_elimination_order,
    twin_report,
)
from .solver import brute_force_gamma


class PreconditionError(ValueError):
    def __init__(self, reason: str, witness: tuple[int, ...] = ()):
        super().__init__(f"{reason} {witness}" if witness else reason)
        self.reason = reason
        self.witness = witness


class ConstructionError(AssertionError):
    """The constructed set failed validation; the case analysis has a hole."""


@dataclass
class TraceStep:
    depth: int
    n: int
    removed: tuple[int, ...]
    case: str
    added: tuple[int, ...]

    def to_json(self) -> dict:
        return {"depth": self.depth, "n": self.n, "removed": list(self.removed),
                "case": self.case, "added": list(self.added)}


@dataclass
class Construction:
    code: Code
    trace: list[TraceStep] = field(default_factory=list)


def _check_preconditions(g: Graph) -> None:
    comps = components(g)
    if len(comps) != 1:
        # one representative vertex per component
        raise PreconditionError("graph is not connected", tuple(next(bits(c)) for c in comps))
    if not is_block_graph(g):
        diamond = find_diamond(g)
        if diamond is not None:
            raise PreconditionError("not a block graph: induced diamond", diamond)
        if perfect_elimination_order(g) is None:
            raise PreconditionError("not a block graph: not chordal")
        raise PreconditionError("not a block graph")
    pairs = twin_report(g).true_twin_pairs
    if pairs:
        raise PreconditionError("not identifiable: true twins", pairs[0])


def _validated(g: Graph, mask: int) -> int:
    viol = find_violation_mask(g, Kind.ID, mask)
    if viol is not None:
        raise ConstructionError(f"constructed set {sorted(bits(mask))} is not an ID code: {viol}")
    return mask


def _lift(sub_mask: int, kept: list[int]) -> int:
    """Map a code of an induced subgraph (relabeled by ``kept``) back to original indices."""
    out = 0
    for i in bits(sub_mask):
        out |= 1 << kept[i]
    return out


def _build(g: Graph, names: list[int], depth: int, trace: list[TraceStep]) -> int:
    """Code of ``g`` as a local bitmask; ``names`` maps local indices to the input's labels."""
    label = lambda *vs: tuple(names[v] for v in vs)  # noqa: E731
    if g.n <= 3:
        res = brute_force_gamma(g, Kind.ID)
        trace.append(TraceStep(depth, g.n, (), "base", label(*res.certificate.sorted())))
        return res.certificate.mask

    x = next((u for u in range(g.n) if g.degree(u) == 1), None)
    if x is None:
        raise ConstructionError("twin-free block graph on >= 4 vertices without a degree-1 vertex")
    y = next(bits(g.adj[x]))

    kept1 = [u for u in range(g.n) if u != x]
    g1 = g.induced(kept1)
    pairs = twin_report(g1).true_twin_pairs

    if not pairs:
        sub = _lift(_build(g1, [names[u] for u in kept1], depth + 1, trace), kept1)
        if not sub >> y & 1 or g.adj[y] & sub:
            trace.append(TraceStep(depth, g.n, label(x), "1", label(x)))
            return _validated(g, sub | (1 << x))
        if g.closed(y) & sub != 1 << y:
            raise ConstructionError("case 1: expected y to be the only code vertex in N[y]")
        z = next(bits(g.adj[y] & ~(1 << x)))
        trace.append(TraceStep(depth, g.n, label(x), "1z", label(z)))
        return _validated(g, sub | (1 << z))

    partners = {kept1[b] if kept1[a] == y else kept1[a] for a, b in pairs if y in (kept1[a], kept1[b])}
    if len(partners) != 1 or len(pairs) != 1:
        raise ConstructionError(f"case 2: expected a unique twin of y, got pairs {pairs}")
    v = partners.pop()
    kept2 = [u for u in kept1 if u != v]
    g2 = g.induced(kept2)
    sub = _lift(_build(g2, [names[u] for u in kept2], depth + 1, trace), kept2)
    if not sub >> y & 1:
        trace.append(TraceStep(depth, g.n, label(x, v), "2", label(x)))
        return _validated(g, sub | (1 << x))
    trace.append(TraceStep(depth, g.n, label(x, v), "2y", label(x, v)))
    return _validated(g, (sub & ~(1 << y)) | (1 << x) | (1 << v))


def construct_id_code(g: Graph) -> Construction:
    """ID code of size at most n_Q(g) with a per-step trace (outermost step last)."""
    _check_preconditions(g)
    trace: list[TraceStep] = []
    mask = _build(g, list(range(g.n)), 0, trace)
    nq = count_maximal_cliques(g)
    if mask.bit_count() > nq:
        raise ConstructionError(f"code of size {mask.bit_count()} exceeds n_Q = {nq}")
    return Construction(Code(Kind.ID, frozenset(bits(mask))), trace)


def id_code_at_most_nq(g: Graph) -> Code:
    return construct_id_code(g).code
