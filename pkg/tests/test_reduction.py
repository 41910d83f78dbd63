import pytest

from modcycle.generate import directed_cycle
from modcycle.graph import Graph
from modcycle.oracle import enumerate_cycles, oracle_decide
from modcycle.reduction import ReductionParams, cycle_through_pair, expected_vertex_count, reduce_st_cycle
from modcycle.residues import ResidueSet

from conftest import brute_cycles

TRI = directed_cycle(3)  # s=0 -> t=1 -> u=2 -> s
P1 = (ResidueSet.of(3, [2]), ReductionParams(3, 2, 1, 1))
P2 = (ResidueSet.of(4, [3]), ReductionParams(4, 3, 1, 2))


def only_cycle_length(g):
    cs = list(enumerate_cycles(g, max_vertices=None))
    assert len(cs) == 1
    return cs[0].length


def test_triangle_mod3():
    rs, params = P1
    out = reduce_st_cycle(TRI, 0, 1, params, rs)
    assert out.n == 5
    assert only_cycle_length(out) == 5 and 5 % 3 == 2
    assert oracle_decide(out, rs)


def test_triangle_mod4():
    rs, params = P2
    out = reduce_st_cycle(TRI, 0, 1, params, rs)
    assert only_cycle_length(out) == 7 and 7 % 4 == 3


def test_no_common_cycle_means_no_instance():
    g = Graph.from_edges("directed", 4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    for rs, params in (P1, P2):
        out = reduce_st_cycle(g, 0, 2, params, rs)
        assert not cycle_through_pair(g, 0, 2)
        assert not oracle_decide(out, rs, max_vertices=None)


def test_cycle_through_pair_examples():
    assert cycle_through_pair(TRI, 0, 1)
    g = Graph.from_edges("directed", 4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    assert not cycle_through_pair(g, 0, 2)
    # triangles 0-1-2 and 2-3-4 share cut vertex 2; the extra edge 4->1 runs one way only
    g = Graph.from_edges("directed", 5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 1)])
    brute = brute_cycles(g)
    assert cycle_through_pair(g, 0, 3) == any(0 in c and 3 in c for c in brute) == False
    assert cycle_through_pair(g, 1, 3) == any(1 in c and 3 in c for c in brute) == True


@pytest.mark.parametrize(
    "params, rs, message",
    [
        (ReductionParams(3, 2, 1, 1), ResidueSet.of(3, [1, 2]), "in S"),
        (ReductionParams(3, 2, 0, 2), ResidueSet.of(3, [2]), "outside"),
        (ReductionParams(4, 3, 1, 1), ResidueSet.of(4, [3]), "not 3"),
        (ReductionParams(3, 1, 2, 2), ResidueSet.of(3, [2]), "not in S"),
        (ReductionParams(4, 2, 1, 1), ResidueSet.of(3, [2]), "modulus"),
    ],
)
def test_invalid_params(params, rs, message):
    with pytest.raises(ValueError, match=message):
        reduce_st_cycle(TRI, 0, 1, params, rs)


def test_same_endpoint_rejected():
    with pytest.raises(ValueError):
        reduce_st_cycle(TRI, 1, 1, *P1[::-1])


def test_vertex_count_and_determinism():
    g = Graph.from_edges("directed", 4, [(0, 0), (0, 1), (1, 2), (2, 0), (3, 1), (2, 3), (1, 1)])
    rs, params = P2
    a = reduce_st_cycle(g, 0, 1, params, rs)
    b = reduce_st_cycle(g, 0, 1, params, rs)
    assert a.serialize() == b.serialize()
    assert a.n == expected_vertex_count(g, 0, 1, params)
