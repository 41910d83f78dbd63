import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modcycle.errors import ConditionUnsupported, OracleLimit
from modcycle.generate import all_graphs, complete_graph, directed_cycle, petersen, random_graph, undirected_cycle
from modcycle.graph import Graph, walk_is_cycle
from modcycle.oracle import oracle_decide, oracle_shortest
from modcycle.residues import ResidueSet
from modcycle.undirected import block_decomposition, decide_uc_condition_case, even_cycle, odd_cycle

from conftest import ugraphs

ODD = ResidueSet.of(2, [1])
EVEN = ResidueSet.of(2, [0])
NOT_DIV3 = ResidueSet.of(6, [1, 2, 4, 5])
ODD_MOD4 = ResidueSet.of(4, [1, 3])


def test_odd_cycle_examples():
    assert odd_cycle(undirected_cycle(3)).length == 3
    assert odd_cycle(undirected_cycle(4)) is None
    w = odd_cycle(petersen())
    assert w.length == 5 and walk_is_cycle(petersen(), w.vertices)
    assert oracle_shortest(petersen(), ODD).length == 5


def test_even_cycle_examples():
    diamond = Graph.from_edges("undirected", 4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)])
    w = even_cycle(diamond)
    assert w.length == 4 and walk_is_cycle(diamond, w.vertices)
    assert even_cycle(undirected_cycle(5)) is None
    assert even_cycle(undirected_cycle(4)).length == 4


def test_rejects_directed():
    for fn in (odd_cycle, even_cycle, block_decomposition):
        with pytest.raises(ValueError):
            fn(directed_cycle(3))


def test_blocks_of_bowtie_and_tail():
    # two triangles sharing vertex 2, plus a pendant edge 4-5
    g = Graph.from_edges("undirected", 6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)])
    bd = block_decomposition(g)
    assert sorted(len(b) for b in bd.blocks) == [1, 3, 3]
    assert bd.cut_vertices == {2, 4}


@settings(max_examples=200, deadline=None)
@given(ugraphs(max_n=10))
def test_every_edge_in_exactly_one_block(g):
    blocks = block_decomposition(g).blocks
    seen = [e for b in blocks for e in b]
    assert sorted(seen) == g.sorted_edges()


def test_odd_cycle_exhaustive_small():
    for n in range(1, 7):
        for g in all_graphs(n):
            w = odd_cycle(g)
            assert (w is not None) == oracle_decide(g, ODD)
            if w is not None:
                assert walk_is_cycle(g, w.vertices) and w.length % 2 == 1


@pytest.mark.parametrize("seed", range(60))
def test_odd_cycle_sampled(seed):
    g = random_graph(12, 0.12 + 0.004 * seed, seed)
    assert (odd_cycle(g) is not None) == oracle_decide(g, ODD)


def test_even_cycle_exhaustive_small():
    for n in range(1, 6):
        for g in all_graphs(n):
            w = even_cycle(g)
            assert (w is not None) == oracle_decide(g, EVEN)
            if w is not None:
                assert walk_is_cycle(g, w.vertices) and w.length % 2 == 0


@settings(max_examples=300, deadline=None)
@given(ugraphs(max_n=10))
def test_even_cycle_witness_valid(g):
    w = even_cycle(g)
    if w is not None:
        assert walk_is_cycle(g, w.vertices) and w.length % 2 == 0


def test_decide_uc_condition_examples():
    assert decide_uc_condition_case(undirected_cycle(3), NOT_DIV3) is False
    assert decide_uc_condition_case(undirected_cycle(4), NOT_DIV3) is True
    forest = Graph.from_edges("undirected", 6, [(0, 1), (1, 2), (1, 3), (4, 5)])
    for rs in (NOT_DIV3, ODD_MOD4, ODD, ResidueSet.of(5, [1, 2, 3, 4])):
        assert decide_uc_condition_case(forest, rs) is False
    assert decide_uc_condition_case(complete_graph(4), ResidueSet(3, 0)) is False


def test_decide_uc_condition_errors():
    with pytest.raises(ConditionUnsupported):
        decide_uc_condition_case(undirected_cycle(4), ResidueSet.of(4, [1, 2]))
    with pytest.raises(OracleLimit):
        decide_uc_condition_case(undirected_cycle(20), NOT_DIV3)
    assert decide_uc_condition_case(undirected_cycle(20), NOT_DIV3, max_vertices=None) is True


def test_decide_uc_condition_exhaustive_n6():
    for n in range(1, 7):
        for g in all_graphs(n):
            for rs in (NOT_DIV3, ODD_MOD4):
                assert decide_uc_condition_case(g, rs) == oracle_decide(g, rs)


@pytest.mark.parametrize("seed", range(200))
def test_decide_uc_condition_n7_n8_sampled(seed):
    g = random_graph(7 + seed % 2, 0.15 + 0.003 * seed, seed)
    for rs in (NOT_DIV3, ODD_MOD4):
        assert decide_uc_condition_case(g, rs) == oracle_decide(g, rs)
