"""Named bound checks over single graphs and over whole sweeps.

Each check returns one of ``pass``, ``fail``, ``skip`` (with a reason) or
``finding``. A finding is a violated statement that is asserted without proof
and therefore reported rather than counted as a failure.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .codes import Kind, check_claims, decompose
from .construct import ConstructionError, construct_id_code
from .enumeration import CANONICAL_LIMIT, canonical_form, enumerate_connected_block_graphs
from .families import FamilySpec, default_family_grid
from .graph_core import (
    Graph,
    count_maximal_cliques,
    is_block_graph,
    is_connected,
    is_identifiable,
    is_old_admissible,
    to_graph6,
)
from .solver import SolveResult, gamma, is_admissible

PASS, FAIL, SKIP, FINDING = "pass", "fail", "skip", "finding"
CSV_LETTER = {PASS: "P", FAIL: "F", SKIP: "S", FINDING: "X"}


@dataclass
class CheckStatus:
    status: str
    reason: str = ""
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class GraphFacts:
    """Invariants computed once per graph and shared by all checks."""

    g: Graph
    n: int
    nq: int
    connected: bool
    block: bool
    identifiable: bool
    old_admissible: bool
    solved: dict[Kind, SolveResult]

    def gamma(self, kind: Kind) -> int | None:
        res = self.solved.get(kind)
        return None if res is None else res.gamma

    @property
    def gid(self) -> int | None:
        return self.gamma(Kind.ID)

    @property
    def gld(self) -> int | None:
        return self.gamma(Kind.LD)

    @property
    def gold(self) -> int | None:
        return self.gamma(Kind.OLD)


def collect_facts(g: Graph) -> GraphFacts:
    solved = {kind: gamma(g, kind) for kind in Kind if is_admissible(g, kind)}
    return GraphFacts(
        g=g,
        n=g.n,
        nq=count_maximal_cliques(g),
        connected=is_connected(g),
        block=is_block_graph(g),
        identifiable=is_identifiable(g),
        old_admissible=is_old_admissible(g),
        solved=solved,
    )


def _verdict(ok: bool, detail: str = "") -> CheckStatus:
    return CheckStatus(PASS) if ok else CheckStatus(FAIL, detail)


def _is_p2_or_p4(f: GraphFacts) -> bool:
    g = f.g
    if not f.connected:
        return False
    if g.n == 2:
        return True
    return g.n == 4 and g.m == 3 and max(g.degree(u) for u in range(g.n)) == 2


def check_ld_min(f: GraphFacts) -> CheckStatus:
    others = [x for x in (f.gid, f.gold) if x is not None]
    if f.gld is None or not others:
        return CheckStatus(SKIP, "neither ID nor OLD code exists")
    return _verdict(f.gld <= min(others), f"ld={f.gld} id={f.gid} old={f.gold}")


def check_double_ld(f: GraphFacts) -> CheckStatus:
    others = [x for x in (f.gid, f.gold) if x is not None]
    if not others:
        return CheckStatus(SKIP, "neither ID nor OLD code exists")
    if all(x < 2 * f.gld for x in others):
        return CheckStatus(PASS)
    return CheckStatus(FINDING, f"ld={f.gld} id={f.gid} old={f.gold}")


def check_nq_lt_n(f: GraphFacts) -> CheckStatus:
    if not (f.connected and f.block):
        return CheckStatus(SKIP, "not a connected block graph")
    if f.n < 2:
        return CheckStatus(SKIP, "single vertex")
    return _verdict(f.nq < f.n, f"nq={f.nq} n={f.n}")


def check_n_le_2nq(f: GraphFacts) -> CheckStatus:
    if not (f.connected and f.block):
        return CheckStatus(SKIP, "not a connected block graph")
    if not f.identifiable:
        return CheckStatus(SKIP, "not identifiable")
    return _verdict(f.n <= 2 * f.nq - 1, f"nq={f.nq} n={f.n}")


def check_id_ub(f: GraphFacts) -> CheckStatus:
    if not f.block:
        return CheckStatus(SKIP, "not a block graph")
    if not f.identifiable:
        return CheckStatus(SKIP, "not identifiable")
    return _verdict(f.gid <= f.nq, f"id={f.gid} nq={f.nq}")


def check_old_ub(f: GraphFacts) -> CheckStatus:
    if not (f.connected and f.block):
        return CheckStatus(SKIP, "not a connected block graph")
    if not f.old_admissible:
        return CheckStatus(SKIP, "not OLD-admissible")
    if _is_p2_or_p4(f):
        return CheckStatus(SKIP, "exception graph")
    return _verdict(f.gold <= f.n - 1, f"old={f.gold} n={f.n}")


def check_ld_ub(f: GraphFacts) -> CheckStatus:
    if not f.block:
        return CheckStatus(SKIP, "not a block graph")
    bound = f.nq if f.identifiable else f.n - 1
    return _verdict(f.gld <= bound, f"ld={f.gld} bound={bound}")


def check_lb_n(f: GraphFacts) -> CheckStatus:
    if not f.block:
        return CheckStatus(SKIP, "not a block graph")
    bad = []
    # gamma >= n/3 + 1  <=>  3*gamma >= n + 3
    for name, val in (("id", f.gid), ("old", f.gold)):
        if val is not None and 3 * val < f.n + 3:
            bad.append(f"{name}={val}")
    if 3 * f.gld < f.n + 1:
        bad.append(f"ld={f.gld}")
    return _verdict(not bad, f"n={f.n} " + " ".join(bad))


def check_lb_nq(f: GraphFacts) -> CheckStatus:
    if not f.block:
        return CheckStatus(SKIP, "not a block graph")
    bad = []
    for name, val in (("id", f.gid), ("old", f.gold)):
        if val is not None and 7 * val < 3 * (f.nq + 2):
            bad.append(f"{name}={val}")
    if 3 * f.gld < f.nq + 2:
        bad.append(f"ld={f.gld}")
    if f.gold is not None and 2 * f.gold < f.nq + 3:
        bad.append(f"old={f.gold} vs (nq+3)/2")
    return _verdict(not bad, f"nq={f.nq} " + " ".join(bad))


def check_construct_ok(f: GraphFacts) -> CheckStatus:
    if not (f.connected and f.block):
        return CheckStatus(SKIP, "not a connected block graph")
    if not f.identifiable:
        return CheckStatus(SKIP, "not identifiable")
    try:
        code = construct_id_code(f.g).code
    except ConstructionError as exc:
        return CheckStatus(FAIL, str(exc))
    return _verdict(len(code) <= f.nq, f"size={len(code)} nq={f.nq}")


def check_claims_hold(f: GraphFacts) -> CheckStatus:
    if not f.block:
        return CheckStatus(SKIP, "not a block graph")
    broken = []
    for kind, res in sorted(f.solved.items(), key=lambda kv: kv[0].value):
        claims = check_claims(decompose(f.g, res.certificate))
        broken += [f"{kind.value}:{name}" for name, ok in claims.items() if not ok]
    return _verdict(not broken, " ".join(broken))


CheckFn = Callable[[GraphFacts], CheckStatus]

CHECKS: dict[str, CheckFn] = {
    "ld_min": check_ld_min,
    "double_ld": check_double_ld,
    "nq_lt_n": check_nq_lt_n,
    "n_le_2nq": check_n_le_2nq,
    "id_ub": check_id_ub,
    "old_ub": check_old_ub,
    "ld_ub": check_ld_ub,
    "lb_n": check_lb_n,
    "lb_nq": check_lb_nq,
    "construct_ok": check_construct_ok,
    "claims": check_claims_hold,
}


def graph_id(g: Graph) -> str:
    """Canonical graph6 when the graph is small enough to canonicalize, else graph6 as given."""
    if g.n <= CANONICAL_LIMIT:
        return canonical_form(g).graph6()
    return to_graph6(g)


@dataclass
class CheckReport:
    canon: str
    n: int
    nq: int
    connected: bool
    identifiable: bool
    old_admissible: bool
    gamma_id: int | None
    gamma_ld: int | None
    gamma_old: int | None
    checks: dict[str, CheckStatus] = field(default_factory=dict)
    label: str = ""

    @property
    def failed(self) -> list[str]:
        return [name for name, st in self.checks.items() if st.status == FAIL]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "canon": self.canon,
            "n": self.n,
            "nq": self.nq,
            "connected": self.connected,
            "identifiable": self.identifiable,
            "old_admissible": self.old_admissible,
            "gamma_id": self.gamma_id,
            "gamma_ld": self.gamma_ld,
            "gamma_old": self.gamma_old,
            "checks": {name: st.to_json() for name, st in self.checks.items()},
        }


def run_checks(g: Graph, label: str = "") -> CheckReport:
    facts = collect_facts(g)
    canon = graph_id(g)
    checks = {}
    for name, fn in CHECKS.items():
        st = fn(facts)
        if st.status in (FAIL, FINDING):
            st.witness = to_graph6(g)
        checks[name] = st
    return CheckReport(
        canon=canon,
        n=facts.n,
        nq=facts.nq,
        connected=facts.connected,
        identifiable=facts.identifiable,
        old_admissible=facts.old_admissible,
        gamma_id=facts.gid,
        gamma_ld=facts.gld,
        gamma_old=facts.gold,
        checks=checks,
        label=label,
    )


def sweep_inputs(max_n: int, families: bool) -> list[tuple[str, Graph]]:
    items = []
    for n in range(2, max_n + 1):
        for g in enumerate_connected_block_graphs(n):
            items.append((f"enum{n}", g))
    if families:
        specs: Iterable[FamilySpec] = default_family_grid()
        items += [(spec.label, spec.build()) for spec in specs]
    return items


def run_sweep(max_n: int, families: bool = False) -> list[CheckReport]:
    return [run_checks(g, label) for label, g in sweep_inputs(max_n, families)]


def reports_to_json(reports: list[CheckReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=1, sort_keys=True) + "\n"


CSV_COLUMNS = ["canon", "n", "nq", "identifiable", "old_admissible", "gamma_id", "gamma_ld", "gamma_old"]


def reports_to_csv(reports: list[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS + list(CHECKS))
    for r in reports:
        row = [r.canon, r.n, r.nq, int(r.identifiable), int(r.old_admissible)]
        row += ["" if x is None else x for x in (r.gamma_id, r.gamma_ld, r.gamma_old)]
        row += [CSV_LETTER[r.checks[name].status] for name in CHECKS]
        w.writerow(row)
    return buf.getvalue()


def summarize(reports: list[CheckReport]) -> dict[str, dict[str, int]]:
    out: dict[str, dict[str, int]] = {name: {PASS: 0, FAIL: 0, SKIP: 0, FINDING: 0} for name in CHECKS}
    for r in reports:
        for name, st in r.checks.items():
            out[name][st.status] += 1
    return out
