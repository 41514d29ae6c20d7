"""Python access to the twistcert certification pipeline.

JSON documents produced by the C++ core are returned as decoded Python
objects; enclosures keep their ``["lo", "hi"]`` string form.
"""

import json

from . import _core
from ._core import (
    BudgetExhausted,
    InconclusiveCertificate,
    InputError,
    PrecisionError,
    TwistcertError,
    default_precision,
    preset_names,
    set_default_precision,
)

__all__ = [
    "BudgetExhausted",
    "InconclusiveCertificate",
    "InputError",
    "PrecisionError",
    "TwistcertError",
    "certify",
    "chartable",
    "classes",
    "default_precision",
    "group",
    "preset_names",
    "run_cli",
    "selftest",
    "set_default_precision",
]


def certify(preset, threads=1):
    """Run the full pipeline for a bundled preset and return the certificate."""
    return json.loads(_core.certify(preset, threads))


def classes(p, q, r, max_length, threads=1):
    """Primitive hyperbolic classes of the (p,q,r) triangle group up to max_length.

    max_length is a rational given as a string ("3", "9/5", "1.8") or a number.
    """
    return json.loads(_core.classes(p, q, r, str(max_length), threads))


def group(preset):
    """Coset table and conjugacy classes of the finite quotient of a preset."""
    return json.loads(_core.group(preset))


def chartable(preset):
    """Exact character table of the finite quotient of a preset."""
    return json.loads(_core.chartable(preset))


def selftest(inject=(), threads=1):
    """Run the invariant suites; returns one dict per suite."""
    return _core.selftest(list(inject), threads)


def run_cli(*args):
    """Run the command line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
