"""Graph spanner constructions with exact stretch checks."""

import json as _json

from ._core import (
    Graph,
    PreconditionError,
    SpanwrightError,
    algorithms,
    build,
    generate,
    lightness,
    load_graph,
    mst,
    mst_weight,
    save_graph,
    verify_stretch,
)
from ._core import bench_json as _bench_json


def bench(suite, k=3, seed=1, queries=1250):
    """Run a benchmark suite and return its report as a dict."""
    return _json.loads(_bench_json(suite, k, seed, queries))


__all__ = [
    "Graph",
    "PreconditionError",
    "SpanwrightError",
    "algorithms",
    "bench",
    "build",
    "generate",
    "lightness",
    "load_graph",
    "mst",
    "mst_weight",
    "save_graph",
    "verify_stretch",
]
