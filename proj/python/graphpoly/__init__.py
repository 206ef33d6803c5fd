"""Exact graph polynomials, mate constructions and uniqueness experiments."""

import json

from . import _core
from ._core import (
    Graph,
    NotSupportedError,
    ResourceError,
    class_names,
    compute,
    default_jobs,
    enumerate_class,
    find_pseudosimilar_trees,
    polynomial_ids,
    run_cli,
)

__all__ = [
    "Graph",
    "NotSupportedError",
    "ResourceError",
    "class_names",
    "compute",
    "compute_json",
    "default_jobs",
    "dp_chain_audit",
    "enumerate_class",
    "find_pseudosimilar_trees",
    "pendant_frequency",
    "polynomial_ids",
    "run_cli",
    "stem_toggle",
    "uniqueness_ratio",
    "verify_mate",
]


def compute_json(poly, graph):
    """Polynomial value as {"variables": [...], "terms": [...]}."""
    return json.loads(_core.compute_json(poly, graph))


def uniqueness_ratio(poly, cls, n, jobs=1):
    return json.loads(_core.uniqueness_ratio_json(poly, cls, n, jobs))


def verify_mate(g, h, poly):
    return json.loads(_core.verify_mate_json(g, h, poly))


def stem_toggle(graph):
    """Certificate dict, or None when no two adjacent stems qualify."""
    text = _core.stem_toggle_json(graph)
    return None if text is None else json.loads(text)


def dp_chain_audit(cls, n, jobs=1):
    return json.loads(_core.dp_chain_audit_json(cls, n, jobs))


def pendant_frequency(pendant, root, cls, n, samples, seed, exhaustive=False):
    return json.loads(_core.pendant_frequency_json(pendant, root, cls, n, samples, seed, exhaustive))
