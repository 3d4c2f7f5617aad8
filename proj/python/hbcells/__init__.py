"""Hilbert-Burch matrices and Grobner cells of k[x,y]."""

import json

from ._core import (
    DomainError,
    Staircase,
    UsageError,
    betti_numbers,
    brute_force_ideal_count,
    cell_dimensions,
    cell_kinds,
    enumerate_staircases,
    g_dim,
    groebner_basis,
    minors,
    run_cli,
    stratum_equations,
)
from . import _core


def frame(staircase):
    """M0(E), U(E) and S(E) as a dict."""
    return json.loads(_core.frame_json(staircase))


def random_cell_matrix(staircase, kind="V0", seed=1, field="q"):
    """A pseudo-random element of T_kind(E) as a JSON-shaped dict."""
    return json.loads(_core.random_cell_matrix_json(staircase, kind, seed, field))


def canonicalize(generators, field="q"):
    """Canonical (E, N) of the ideal generated by a comma-separated list."""
    return json.loads(_core.canonicalize(generators, field))


def census(colength):
    """Cell census of all staircases of a colength."""
    return json.loads(_core.census_json(colength))


def generic(generators, nvars=2, graded=True, log=False):
    """Elimination report of the generic family of a monomial ideal."""
    return json.loads(_core.generic_json(generators, nvars, graded, log))


__all__ = [
    "DomainError",
    "Staircase",
    "UsageError",
    "betti_numbers",
    "brute_force_ideal_count",
    "canonicalize",
    "cell_dimensions",
    "cell_kinds",
    "census",
    "enumerate_staircases",
    "frame",
    "g_dim",
    "generic",
    "groebner_basis",
    "minors",
    "random_cell_matrix",
    "run_cli",
    "stratum_equations",
]
