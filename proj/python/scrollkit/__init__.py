"""Exact computations on rational normal scrolls and binary curves."""

import json

from . import _scrollkit
from ._scrollkit import (
    ScrollkitError,
    UsageError,
    aut_dimension,
    commands,
    dim_all_scrolls,
    dim_curves_in_scroll,
    dim_scrolls_through_frame,
    dim_stratum,
    gonality_bound,
    scroll_types,
)

__version__ = _scrollkit.__version__


def run(command, **options):
    """Run a CLI command in-process and return the report as a dict (no clock field)."""
    if "lambda" in options:
        options["lambda_"] = str(options.pop("lambda"))
    return json.loads(_scrollkit.run_json(command, options))


def random_binary_curve(n, field="q", seed=1):
    return json.loads(_scrollkit.random_binary_curve_json(n, field, seed))


def positive_control(field="q", seed=1):
    return json.loads(_scrollkit.positive_control_json(field, seed))


def project_from_node(curve, j=0):
    return json.loads(_scrollkit.project_from_node_json(json.dumps(curve), j))


def gonality(curve):
    return json.loads(_scrollkit.gonality_json(json.dumps(curve)))


def hyperelliptic(curve):
    return _scrollkit.hyperelliptic(json.dumps(curve))


def quadric_dimension(curve):
    return _scrollkit.quadric_dimension(json.dumps(curve))


def containment(curve, trials=20, seed=1):
    """(verdict, hits) of the scroll containment experiment."""
    return _scrollkit.containment_verdict(json.dumps(curve), trials, seed)
