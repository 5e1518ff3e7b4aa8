import pytest
from hypothesis import given, strategies as st

from blockcodes.codes import Kind
from blockcodes.families import (
    FamilyParameterError,
    FamilySpec,
    clique,
    default_family_grid,
    extremal_id,
    extremal_ld,
    extremal_old,
    path,
    path_power,
    random_block_graph,
    split_hypercube,
    star,
    thin_spider,
)
from blockcodes.graph_core import (
    count_maximal_cliques,
    emit_graph,
    is_block_graph,
    is_connected,
    is_identifiable,
    is_old_admissible,
)
from blockcodes.solver import gamma


def test_basic_sizes():
    assert (star(3).n, star(3).m) == (4, 3)
    assert path(2) == clique(2)
    assert clique(4).m == 6
    assert (thin_spider(3).n, thin_spider(3).m) == (6, 6)


@pytest.mark.parametrize("n", range(3, 7))
def test_thin_spider_structure(n):
    g = thin_spider(n)
    assert is_block_graph(g) and is_connected(g)
    assert count_maximal_cliques(g) == n + 1


def test_path_power():
    assert path_power(4, 1) == path(4)
    g = path_power(6, 2)
    assert gamma(g, Kind.ID).gamma == 5
    assert not is_block_graph(g)


@pytest.mark.parametrize(
    "fn, k, n, kind, attained",
    [(extremal_id, k, 3 * k - 3, Kind.ID, k) for k in range(4, 8)]
    + [(extremal_old, k, 3 * k - 3, Kind.OLD, k) for k in range(5, 8)]
    + [(extremal_ld, k, 3 * k - 1, Kind.LD, k) for k in range(2, 8)],
)
def test_extremal_families(fn, k, n, kind, attained):
    g = fn(k)
    assert g.n == n
    assert is_block_graph(g) and is_connected(g)
    assert is_identifiable(g) if kind is Kind.ID else True
    assert is_old_admissible(g) if kind is Kind.OLD else True
    res = gamma(g, kind)
    assert res.gamma == attained
    # the path u_1..u_k is a minimum code
    assert res.certificate.sorted() == list(range(k))


def test_extremal_examples():
    assert extremal_id(4).n == 9 and gamma(extremal_id(4), "ID").gamma == 4
    assert extremal_old(5).n == 12 and gamma(extremal_old(5), "OLD").gamma == 5
    assert extremal_ld(3).n == 8 and gamma(extremal_ld(3), "LD").gamma == 3


def test_extremal_labeling():
    g = extremal_id(4)
    # path 0-1-2-3, pendants 4..7 in path order, pair vertex 8 on u_2, u_3
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (1, 5), (1, 8), (2, 3), (2, 6), (2, 8), (3, 7)]


def test_split_hypercube():
    assert split_hypercube(2).n == 5
    g = split_hypercube(3)
    assert gamma(g, "ID").gamma <= 6
    assert [count_maximal_cliques(split_hypercube(k)) for k in (2, 3, 4)] == [3, 7, 15]


@pytest.mark.parametrize(
    "fn, args",
    [(star, (0,)), (path, (0,)), (clique, (0,)), (thin_spider, (2,)), (path_power, (4, 4)),
     (path_power, (1, 1)), (extremal_id, (3,)), (extremal_old, (4,)), (extremal_ld, (1,)),
     (split_hypercube, (1,)), (split_hypercube, (6,)), (random_block_graph, (0, 3, 1)),
     (random_block_graph, (2, 1, 1))],
)
def test_parameter_ranges(fn, args):
    with pytest.raises(FamilyParameterError):
        fn(*args)


def test_random_block_graph_examples():
    assert random_block_graph(1, 4, 5) == clique(random_block_graph(1, 4, 5).n)
    t = random_block_graph(7, 2, 3)
    assert t.n == 8 and t.m == 7 and is_connected(t)
    g = random_block_graph(10, 4, 42)
    assert is_block_graph(g) and is_connected(g)


@given(st.integers(1, 12), st.integers(2, 5), st.integers(0, 2**32))
def test_random_block_graph_properties(b, s, seed):
    g = random_block_graph(b, s, seed)
    assert is_block_graph(g) and is_connected(g)
    assert count_maximal_cliques(g) == b
    assert g == random_block_graph(b, s, seed)


def test_grid_is_deterministic():
    first = [emit_graph(spec.build()) for spec in default_family_grid()]
    second = [emit_graph(spec.build()) for spec in default_family_grid()]
    assert first == second


@pytest.mark.parametrize("fn, k", [(star, 4), (path, 5), (thin_spider, 3), (extremal_id, 5), (extremal_old, 5), (extremal_ld, 3)])
def test_connected(fn, k):
    assert is_connected(fn(k))


def test_spec_label():
    assert FamilySpec("random_block", (3, 4), 9).label == "random_block(3,4;seed=9)"
