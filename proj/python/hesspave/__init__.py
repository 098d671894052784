"""Affine pavings of type A Hessenberg varieties."""

import json as _json

from ._hesspave import (
    BudgetExceeded,
    InputError,
    SCHEMA_VERSION,
    __version__,
    cells,
    point_count,
    poincare,
    r0,
    run,
    tableau_of,
)


def _spec(value):
    if value is None or isinstance(value, str):
        return value
    return ",".join(str(v) for v in value)


def run_json(command, lambda_, **options):
    """Run a CLI command and return (exit_code, parsed JSON document)."""
    for key in ("h", "w", "trace"):
        if key in options:
            options[key] = _spec(options[key])
    code, body = run(command, _spec(lambda_), format="json", **options)
    return code, _json.loads(body)


__all__ = [
    "BudgetExceeded",
    "InputError",
    "SCHEMA_VERSION",
    "__version__",
    "cells",
    "point_count",
    "poincare",
    "r0",
    "run",
    "run_json",
    "tableau_of",
]
