import pytest

from blockcodes.codes import Kind, validate
from blockcodes.construct import PreconditionError, construct_id_code, id_code_at_most_nq
from blockcodes.enumeration import enumerate_connected_block_graphs
from blockcodes.families import clique, extremal_id, path, path_power, random_block_graph, star, thin_spider
from blockcodes.graph_core import Graph, count_maximal_cliques, is_identifiable
from blockcodes.solver import gamma


def test_star():
    c = id_code_at_most_nq(star(3))
    assert validate(star(3), c) is None
    assert len(c) <= 3 == gamma(star(3), Kind.ID).gamma


def test_p3_base_case():
    c = construct_id_code(path(3))
    assert len(c.code) <= 2
    assert [s.case for s in c.trace] == ["base"]


def test_thin_spider_meets_gamma():
    g = thin_spider(4)
    c = id_code_at_most_nq(g)
    assert len(c) == 5 == count_maximal_cliques(g) == gamma(g, Kind.ID).gamma


def test_every_small_identifiable_block_graph():
    seen_cases = set()
    for n in range(1, 9):
        for g in enumerate_connected_block_graphs(n):
            if not is_identifiable(g):
                continue
            result = construct_id_code(g)
            assert validate(g, result.code) is None
            assert len(result.code) <= count_maximal_cliques(g)
            assert len(result.trace) <= g.n
            seen_cases.update(step.case for step in result.trace)
    # every branch of the case analysis is exercised
    assert seen_cases == {"base", "1", "1z", "2", "2y"}


@pytest.mark.parametrize("seed", range(20))
def test_random_block_graphs(seed):
    g = random_block_graph(8, 4, seed)
    if not is_identifiable(g):
        with pytest.raises(PreconditionError):
            construct_id_code(g)
        return
    c = id_code_at_most_nq(g)
    assert validate(g, c) is None and len(c) <= count_maximal_cliques(g)


def test_rejects_disconnected():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    with pytest.raises(PreconditionError) as exc:
        construct_id_code(g)
    assert exc.value.witness == (0, 3)


def test_rejects_non_block():
    with pytest.raises(PreconditionError) as exc:
        construct_id_code(path_power(6, 2))
    assert "diamond" in exc.value.reason


def test_rejects_twins():
    with pytest.raises(PreconditionError) as exc:
        construct_id_code(clique(3))
    assert exc.value.witness == (0, 1)


def test_extremal_id():
    for k in range(4, 9):
        g = extremal_id(k)
        c = id_code_at_most_nq(g)
        assert validate(g, c) is None and len(c) <= count_maximal_cliques(g)


def test_trace_removes_vertices():
    result = construct_id_code(thin_spider(3))
    outer = result.trace[-1]
    assert outer.depth == 0 and outer.n == 6
    assert all(1 <= len(s.removed) <= 2 for s in result.trace if s.case != "base")


def test_trace_uses_input_labels():
    g = thin_spider(3)
    result = construct_id_code(g)
    removed = [v for s in result.trace for v in s.removed]
    base = [s for s in result.trace if s.case == "base"][0]
    # removed vertices plus the base graph's vertices account for every input vertex once
    assert len(removed) == len(set(removed)) == g.n - base.n
    added = {v for s in result.trace for v in s.added}
    assert result.code.members <= added
