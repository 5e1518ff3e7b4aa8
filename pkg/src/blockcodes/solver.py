"""Exact code numbers through a hitting-set reduction.

Every code condition says "some vertex of this set must be in C", so the valid
codes of a kind are exactly the hitting sets of a constraint family. The
minimum is found by branch and bound; a second, budgeted pass then walks
candidate sets in lexicographic order so the certificate is reproducible.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations

from .codes import Code, Kind, find_violation_mask
from .graph_core import Graph, bits, twin_report


class InadmissibleGraphError(ValueError):
    """The graph has no code of the requested kind."""

    def __init__(self, kind: Kind, reason: str, witness: tuple[int, ...]):
        super().__init__(f"no {kind.value} code exists: {reason} {witness}")
        self.kind = kind
        self.reason = reason
        self.witness = witness


class InfeasibleInstanceError(ValueError):
    pass


@dataclass(frozen=True)
class HittingInstance:
    universe: int
    constraints: tuple[int, ...]

    @classmethod
    def make(cls, universe: int, constraints) -> HittingInstance:
        uniq = sorted(set(constraints), key=lambda m: (m.bit_count(), m))
        return cls(universe, tuple(uniq))


@dataclass
class SolveResult:
    gamma: int
    certificate: Code
    nodes: int = 0
    micros: int = field(default=0, compare=False)

    @property
    def kind(self) -> Kind:
        return self.certificate.kind

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "gamma": self.gamma,
            "certificate": self.certificate.sorted(),
            "nodes": self.nodes,
            "micros": self.micros,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def admissibility_witness(g: Graph, kind: Kind) -> tuple[str, tuple[int, ...]] | None:
    if kind is Kind.LD:
        return None
    report = twin_report(g)
    if kind is Kind.ID:
        if report.true_twin_pairs:
            return "true twins", report.true_twin_pairs[0]
        return None
    if report.isolated_vertices:
        return "isolated vertex", (min(report.isolated_vertices),)
    if report.false_twin_pairs:
        return "false twins", report.false_twin_pairs[0]
    return None


def is_admissible(g: Graph, kind: Kind | str) -> bool:
    return admissibility_witness(g, Kind.parse(kind)) is None


def build_instance(g: Graph, kind: Kind | str) -> HittingInstance:
    kind = Kind.parse(kind)
    bad = admissibility_witness(g, kind)
    if bad is not None:
        raise InadmissibleGraphError(kind, *bad)
    if kind is Kind.ID:
        nb = [g.closed(u) for u in range(g.n)]
        cons = list(nb)
        cons += [nb[u] ^ nb[v] for u, v in combinations(range(g.n), 2)]
    elif kind is Kind.OLD:
        nb = list(g.adj)
        cons = list(nb)
        cons += [nb[u] ^ nb[v] for u, v in combinations(range(g.n), 2)]
    else:
        cons = [g.closed(u) for u in range(g.n)]
        cons += [(1 << u) | (1 << v) | (g.adj[u] ^ g.adj[v]) for u, v in combinations(range(g.n), 2)]
    return HittingInstance.make(g.n, cons)


def _drop_supersets(constraints: tuple[int, ...]) -> list[int]:
    """Remove constraints implied by a subset constraint (input sorted by size)."""
    kept: list[int] = []
    for c in constraints:
        if not any(k & c == k for k in kept):
            kept.append(c)
    return kept


def _packing_bound(unhit: list[int], allowed: int) -> int:
    """Size of a greedy family of pairwise-disjoint constraints (restricted to ``allowed``)."""
    used = 0
    count = 0
    for c in sorted((c & allowed for c in unhit), key=int.bit_count):
        if not c & used:
            used |= c
            count += 1
    return count


class _Search:
    def __init__(self, constraints: list[int], universe: int):
        self.cons = constraints
        self.full = (1 << universe) - 1
        self.nodes = 0

    def minimum(self) -> int:
        """Cardinality of a minimum hitting set."""
        best = [self.full.bit_count() + 1]

        def rec(chosen: int, size: int, banned: int) -> None:
            self.nodes += 1
            unhit = [c for c in self.cons if not c & chosen]
            if not unhit:
                best[0] = min(best[0], size)
                return
            allowed = self.full & ~banned
            if any(not c & allowed for c in unhit):
                return
            if size + _packing_bound(unhit, allowed) >= best[0]:
                return
            target = min(unhit, key=lambda c: ((c & allowed).bit_count(), c))
            for v in bits(target & allowed):
                rec(chosen | (1 << v), size + 1, banned)
                banned |= 1 << v

        rec(0, 0, 0)
        return best[0]

    def lex_least(self, budget: int) -> int | None:
        """Lexicographically least hitting set of size ``budget`` (as a sorted vertex tuple)."""

        def rec(chosen: int, size: int, floor: int) -> int | None:
            self.nodes += 1
            unhit = [c for c in self.cons if not c & chosen]
            if not unhit:
                return chosen
            allowed = self.full & ~((1 << floor) - 1)
            left = budget - size
            if left <= 0 or any(not c & allowed for c in unhit):
                return None
            if _packing_bound(unhit, allowed) > left:
                return None
            # the next pick cannot exceed the largest allowed element of any unhit constraint
            ceiling = min((c & allowed).bit_length() - 1 for c in unhit)
            for v in range(floor, ceiling + 1):
                found = rec(chosen | (1 << v), size + 1, v + 1)
                if found is not None:
                    return found
            return None

        return rec(0, 0, 0)


def min_hitting_set(inst: HittingInstance, kind: Kind | str = Kind.ID) -> SolveResult:
    """Exact minimum hitting set; ties broken towards the lexicographically least vertex set."""
    start = time.perf_counter()
    if any(c == 0 for c in inst.constraints):
        raise InfeasibleInstanceError("instance contains an empty constraint")
    search = _Search(_drop_supersets(inst.constraints), inst.universe)
    gamma = search.minimum()
    chosen = search.lex_least(gamma) if gamma else 0
    if chosen is None:
        raise AssertionError("lexicographic pass found no set at the optimum size")
    micros = int((time.perf_counter() - start) * 1e6)
    return SolveResult(gamma, Code(Kind.parse(kind), frozenset(bits(chosen))), search.nodes, micros)


def gamma(g: Graph, kind: Kind | str) -> SolveResult:
    """γ of the given kind with a validated certificate."""
    kind = Kind.parse(kind)
    res = min_hitting_set(build_instance(g, kind), kind)
    viol = find_violation_mask(g, kind, res.certificate.mask)
    if viol is not None:
        raise AssertionError(f"solver certificate fails validation: {viol}")
    return res


BRUTE_FORCE_LIMIT = 20


def brute_force_gamma(g: Graph, kind: Kind | str) -> SolveResult:
    """Oracle: first valid vertex subset by cardinality, then lexicographically."""
    kind = Kind.parse(kind)
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")
    bad = admissibility_witness(g, kind)
    if bad is not None:
        raise InadmissibleGraphError(kind, *bad)
    start = time.perf_counter()
    tried = 0
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            tried += 1
            mask = 0
            for v in subset:
                mask |= 1 << v
            if find_violation_mask(g, kind, mask) is None:
                micros = int((time.perf_counter() - start) * 1e6)
                return SolveResult(size, Code(kind, frozenset(subset)), tried, micros)
    raise AssertionError("admissible graph without a code")
