"""Identifying, locating-dominating and open locating-dominating codes.

A code is checked through signatures: the trace of a vertex's neighborhood on
the code. ID codes use closed neighborhoods, LD and OLD codes open ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph_core import Graph, bits, components, to_mask


class Kind(str, enum.Enum):
    ID = "ID"
    LD = "LD"
    OLD = "OLD"

    @classmethod
    def parse(cls, name: str | Kind) -> Kind:
        if isinstance(name, Kind):
            return name
        return cls(name.upper())


@dataclass(frozen=True)
class Code:
    kind: Kind
    members: frozenset[int]

    @classmethod
    def of(cls, kind: str | Kind, members: Iterable[int]) -> Code:
        return cls(Kind.parse(kind), frozenset(members))

    @property
    def mask(self) -> int:
        return to_mask(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)


def signature_mask(g: Graph, kind: Kind, code_mask: int, u: int) -> int:
    nb = g.closed(u) if kind is Kind.ID else g.adj[u]
    return nb & code_mask


def signature(g: Graph, c: Code, u: int) -> frozenset[int]:
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range for graph on {g.n} vertices")
    return frozenset(bits(signature_mask(g, c.kind, c.mask, u)))


@dataclass(frozen=True)
class Violation:
    """Why a vertex set fails to be a code.

    ``witness_type`` is ``"undominated"`` (one vertex with an empty signature)
    or ``"unseparated"`` (two vertices sharing a signature).
    """

    kind: Kind
    witness_type: str
    vertices: tuple[int, ...]

    def to_json(self, g: Graph, c: Code) -> dict:
        return {
            "kind": self.kind.value,
            "witness_type": self.witness_type,
            "vertices": list(self.vertices),
            "sets": {str(v): sorted(signature(g, c, v)) for v in self.vertices},
        }


def find_violation_mask(g: Graph, kind: Kind, code_mask: int) -> Violation | None:
    """Lexicographically least witness; undominated vertices are reported first."""
    if code_mask & ~g.vertex_mask:
        raise ValueError("code contains vertices outside the graph")
    sigs = [signature_mask(g, kind, code_mask, u) for u in range(g.n)]
    for u in range(g.n):
        if kind is Kind.OLD:
            dominated = sigs[u] != 0
        else:
            dominated = (g.closed(u) & code_mask) != 0
        if not dominated:
            return Violation(kind, "undominated", (u,))
    for u, v in combinations(range(g.n), 2):
        if kind is Kind.LD and (code_mask >> u & 1 or code_mask >> v & 1):
            continue
        if sigs[u] == sigs[v]:
            return Violation(kind, "unseparated", (u, v))
    return None


def validate(g: Graph, c: Code) -> Violation | None:
    """``None`` when ``c`` is a valid code of its kind on ``g``, else the first violation."""
    return find_violation_mask(g, c.kind, c.mask)


def is_valid(g: Graph, c: Code) -> bool:
    return validate(g, c) is None


class InvalidCodeError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(f"not a valid {violation.kind.value} code: {violation.witness_type} {violation.vertices}")
        self.violation = violation


@dataclass(frozen=True)
class CodeDecomposition:
    """Partition of V relative to a code C.

    v1 is C; v2 holds non-code vertices with exactly one code neighbor; v3
    non-code vertices adjacent to two or more components of G[C]; v4 the
    rest. ``forest_components`` counts components of the auxiliary graph H on
    v3 plus one node per component of G[C].
    """

    kind: Kind
    v1: frozenset[int]
    v2: frozenset[int]
    v3: frozenset[int]
    v4: frozenset[int]
    k: int
    n0: int
    n1: int
    forest_components: int
    forest_is_acyclic: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "sets": {name: sorted(getattr(self, name)) for name in ("v1", "v2", "v3", "v4")},
            "k": self.k,
            "n0": self.n0,
            "n1": self.n1,
            "forest_components": self.forest_components,
            "forest_is_acyclic": self.forest_is_acyclic,
        }


def decompose(g: Graph, c: Code) -> CodeDecomposition:
    viol = validate(g, c)
    if viol is not None:
        raise InvalidCodeError(viol)
    cm = c.mask
    comps = components(g, cm)
    code_deg = {u: (g.adj[u] & cm).bit_count() for u in bits(cm)}
    n0 = sum(1 for d in code_deg.values() if d == 0)
    n1 = sum(1 for d in code_deg.values() if d == 1)

    v2 = v3 = v4 = 0
    h_edges = []
    for x in bits(g.vertex_mask & ~cm):
        # x is not a code vertex, so its open and closed traces on C coincide
        trace = g.adj[x] & cm
        touched = [i for i, comp in enumerate(comps) if trace & comp]
        if trace.bit_count() == 1:
            v2 |= 1 << x
        elif len(touched) >= 2:
            v3 |= 1 << x
            h_edges.extend((x, i) for i in touched)
        else:
            v4 |= 1 << x

    # H: nodes are V3 vertices and component indices; union-find for cycles and components
    parent: dict[tuple[str, int], tuple[str, int]] = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in bits(v3):
        parent[("x", x)] = ("x", x)
    for i in range(len(comps)):
        parent[("c", i)] = ("c", i)
    acyclic = True
    merged = 0
    for x, i in h_edges:
        a, b = find(("x", x)), find(("c", i))
        if a == b:
            acyclic = False
        else:
            parent[a] = b
            merged += 1
    ell = len(parent) - merged

    as_set = lambda m: frozenset(bits(m))  # noqa: E731
    return CodeDecomposition(
        kind=c.kind,
        v1=c.members,
        v2=as_set(v2),
        v3=as_set(v3),
        v4=as_set(v4),
        k=len(comps),
        n0=n0,
        n1=n1,
        forest_components=ell,
        forest_is_acyclic=acyclic,
    )


def check_claims(d: CodeDecomposition, kind: Kind | str | None = None) -> dict[str, bool]:
    """Evaluate the size inequalities on V2, V3 and V4 for the code's kind.

    Keys: ``v2`` and ``v4`` (the general forms), ``v2_refined`` and
    ``v4_refined`` (the kind-specific sharpenings), ``v3`` and ``h_forest``.
    """
    kind = d.kind if kind is None else Kind.parse(kind)
    c = len(d.v1)
    v2, v3, v4 = len(d.v2), len(d.v3), len(d.v4)
    out = {
        "v2": v2 <= c,
        "v3": v3 <= d.k - 1,
        "v4": v4 <= c - d.k,
        "h_forest": d.forest_is_acyclic,
    }
    if kind is Kind.ID:
        out["v2_refined"] = v2 <= c - d.n0
        out["v4_refined"] = v4 <= c - 3 * d.k + 2 * d.n0
    elif kind is Kind.OLD:
        out["v2_refined"] = v2 <= c - d.n1
        out["v4_refined"] = v4 <= c - 3 * d.k + d.n1
    else:
        out["v2_refined"] = v2 <= c
        out["v4_refined"] = v4 <= c - 3 * d.k + d.n1 + 2 * d.n0
    return out
