"""Exact computations with co-artin subalgebras of K[x]."""

import json

from . import _core
from ._core import InternalError, ValidationError, enumerate_s

__all__ = [
    "InternalError",
    "ValidationError",
    "aut",
    "canonical",
    "enumerate_s",
    "iso",
    "order_tables",
    "present",
    "run",
    "variety",
]


def run(*args):
    """Run a CLI invocation; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])


def order_tables(m, p=0):
    return json.loads(_core.order_tables_json(m, p))


def canonical(m, gens, p=0):
    return json.loads(_core.canonical_json(m, list(gens), p))


def aut(m, gens, p=0):
    return json.loads(_core.aut_json(m, list(gens), p))


def iso(m, a, b, p=0):
    return json.loads(_core.iso_json(m, list(a), list(b), p))


def present(m, gens, target="bar", style="irredundant", p=0):
    return json.loads(_core.present_json(m, list(gens), target, style, p))


def variety(m, gamma, p=0):
    return json.loads(_core.variety_json(m, list(gamma), p))
