"""Cycle-length modularity problems: classification, polynomial deciders, and a brute-force oracle."""

from .errors import ConditionUnsupported, GraphFormatError, ModcycleError, NotAWalk, OracleLimit, PreconditionError
from .graph import CycleWitness, Graph, parse_graph, walk_is_cycle
from .matrix import BoolMatrix, WalkMatrixFamily, bool_mul, combine, kmin_search, shortest_cycle_mod, walk_family
from .oracle import CycleInventory, cycle_inventory, enumerate_cycles, oracle_decide, oracle_shortest, period
from .reduction import ReductionParams, cycle_through_pair, reduce_st_cycle
from .residues import (
    Classification,
    DivisorReduction,
    ResidueSet,
    Verdict,
    classify_dc,
    classify_uc,
    complement_closed,
    lemma8_divisor,
    thm7_reduce,
)
from .undirected import BlockDecomposition, block_decomposition, decide_uc_condition_case, even_cycle, odd_cycle
from .walks import (
    ProductGraph,
    SccPeriodTable,
    closed_walk_residues,
    closed_walk_residues_product,
    decide_dc,
    scc_periods,
    shortest_closed_walk,
)

__version__ = "0.1.0"
