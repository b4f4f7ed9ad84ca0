"""Finite abelian groups as Z-modules.

A module is given either as a spec string such as ``"Z2^3 + Z9"`` or as a list
of cyclic orders such as ``[2, 2, 2, 9]``. Structured results are plain
dicts and lists in the same shape as the ``modrep`` tool's ``--json`` output.
"""

import json as _json

from . import _core
from ._core import (
    ModrepError,
    ParseError,
    ResourceCapError,
    UnknownTheoremError,
    ValidationError,
    invariant_factors,
    parse_spec,
    run_command,
    theorem_ids,
)

__all__ = [
    "ModrepError", "ParseError", "ResourceCapError", "UnknownTheoremError", "ValidationError",
    "invariant_factors", "parse_spec", "run_command", "theorem_ids", "count_submodules",
    "submodules", "spec_second", "att", "representation", "all_minimal_representations",
    "classify", "verify", "run_suite", "hermite_normal_form", "smith_normal_form",
]

_CAP = 1_000_000


def count_submodules(spec):
    return int(_core.count_submodules(spec))


def submodules(spec, max_submodules=_CAP):
    return _json.loads(_core.submodules_json(spec, max_submodules))


def spec_second(spec, max_submodules=_CAP):
    return _json.loads(_core.spec_second_json(spec, max_submodules))


def att(spec, max_submodules=_CAP):
    return _json.loads(_core.att_json(spec, max_submodules))


def representation(spec, kind="second", max_submodules=_CAP):
    """A minimal representation, or None when the module has none of that kind."""
    return _json.loads(_core.representation_json(spec, kind, max_submodules))


def all_minimal_representations(spec, kind="second", max_submodules=_CAP):
    return _json.loads(_core.all_minimal_representations_json(spec, kind, max_submodules))


def classify(spec, max_submodules=_CAP):
    return _json.loads(_core.classify_json(spec, max_submodules))


def verify(theorem_id, spec):
    return _json.loads(_core.verify_json(theorem_id, spec))


def run_suite(max_order, theorem_ids=None, jobs=1):
    return _json.loads(_core.run_suite_json(max_order, list(theorem_ids or []), jobs))


def _ints(rows):
    return [[int(x) for x in row] for row in rows]


def _strs(rows):
    return [[str(int(x)) for x in row] for row in rows]


def hermite_normal_form(matrix):
    """Returns (H, U) with H = U A in row-style Hermite normal form."""
    h, u = _core.hermite_normal_form(_strs(matrix))
    return _ints(h), _ints(u)


def smith_normal_form(matrix):
    """Returns (S, U, V) with S = U A V diagonal and d1 | d2 | ..."""
    s, u, v = _core.smith_normal_form(_strs(matrix))
    return _ints(s), _ints(u), _ints(v)
