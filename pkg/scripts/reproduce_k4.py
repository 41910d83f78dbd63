"""Independent reproduction of the K4 cycle inventory.

Counts undirected cycles of K4 as distinct edge sets of closed vertex
orderings, without touching modcycle's enumerator.

    python scripts/reproduce_k4.py
"""
import itertools
import math


def k4_inventory():
    vertices = range(4)
    edge_sets = set()
    for k in (3, 4):
        for order in itertools.permutations(vertices, k):
            edges = frozenset(frozenset((order[i], order[(i + 1) % k])) for i in range(k))
            edge_sets.add(edges)
    lengths = [len(e) for e in edge_sets]
    return {
        "count": len(edge_sets),
        "triangles": lengths.count(3),
        "four_cycles": lengths.count(4),
        "period": math.gcd(*lengths),
    }


if __name__ == "__main__":
    print(k4_inventory())
