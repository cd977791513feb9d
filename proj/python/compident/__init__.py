"""Exact verification of composition-generated combinatorial identities."""

import json
from fractions import Fraction

from . import _core
from ._core import BudgetExceeded, DomainError, UnknownIdentity

DEFAULT_SEED = _core.DEFAULT_SEED

__all__ = [
    "BudgetExceeded",
    "DEFAULT_SEED",
    "DomainError",
    "UnknownIdentity",
    "bernoulli",
    "binomial",
    "composition_transform",
    "compositions",
    "gaussian_binomial",
    "list_identities",
    "multichoose",
    "run_cli",
    "stirling1",
    "verify_case",
    "verify_range",
]


def binomial(n, k):
    return int(_core.binomial(str(n), k))


def multichoose(n, k):
    return int(_core.multichoose(str(n), k))


def stirling1(n, t):
    return int(_core.stirling1(n, t))


def bernoulli(m):
    return Fraction(_core.bernoulli(m))


def gaussian_binomial(n, k):
    """Coefficients of [n, k]_q, constant term first."""
    return [int(c) for c in _core.gaussian_binomial(n, k)]


def compositions(k, r=None):
    return [tuple(parts) for parts in _core.compositions(k, r)]


def composition_transform(terms):
    """Signed composition sum of degree len(terms) over terms[0] = t_1, ..."""
    return Fraction(_core.composition_transform([str(Fraction(t)) for t in terms]))


def list_identities():
    return [json.loads(d) for d in _core.list_identities()]


def _opt(value):
    return None if value is None else str(Fraction(value))


def verify_case(id, params, seed=DEFAULT_SEED, a=None, b=None):
    return json.loads(_core.verify_case(id, dict(params), seed, _opt(a), _opt(b)))


def verify_range(id, ranges=None, seed=DEFAULT_SEED, samples=5, sequence_samples=None, a=None, b=None, jobs=1):
    """Ranges map a parameter name to an inclusive (lo, hi) pair."""
    spans = {name: (int(lo), int(hi)) for name, (lo, hi) in (ranges or {}).items()}
    return json.loads(_core.verify_range(id, spans, seed, samples, sequence_samples, _opt(a), _opt(b), jobs))


def run_cli(args):
    """Runs the command-line tool in-process; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
