"""Online topological ordering of DAGs under edge insertion.

The main entry point is BucketGraph, which keeps a total order of a fixed
node set consistent with every inserted edge and rejects edges that would
close a cycle.  NaiveGraph, PearceKellyGraph, and MnrGraph are reference
algorithms sharing the same insert interface, and the generators module
produces reproducible insertion sequences for benchmarking.
"""

from .baselines import BASELINES, MnrGraph, NaiveGraph, PearceKellyGraph
from .buckets import BACKENDS, BucketStore, bucket_count, bucket_index
from .core import (
    ACCEPTED,
    CYCLE,
    DUPLICATE,
    BucketGraph,
    Counters,
    InsertResult,
    default_width,
)
from .generators import (
    GENERATOR_ID,
    EdgeSequence,
    SplitMix64,
    hard_sequence,
    random_sequence,
    read_sequence,
    write_sequence,
)
from .oracle import (
    EdgeSet,
    brute_reachable,
    first_violation,
    kahn_order,
    positions_of,
    topo_sort,
    validate_order,
)
from .order_map import OrderMap

__all__ = [
    "ACCEPTED",
    "BACKENDS",
    "BASELINES",
    "BucketGraph",
    "BucketStore",
    "Counters",
    "CYCLE",
    "DUPLICATE",
    "EdgeSequence",
    "EdgeSet",
    "GENERATOR_ID",
    "InsertResult",
    "MnrGraph",
    "NaiveGraph",
    "OrderMap",
    "PearceKellyGraph",
    "SplitMix64",
    "brute_reachable",
    "bucket_count",
    "bucket_index",
    "default_width",
    "first_violation",
    "hard_sequence",
    "kahn_order",
    "positions_of",
    "random_sequence",
    "read_sequence",
    "topo_sort",
    "validate_order",
    "write_sequence",
]

__version__ = "0.1.0"
