"""Exact computation in the algebras of one-sided polynomial inverses.

Everything is string-in/string-out in the canonical element syntax, e.g.
``nf("y1*x1") == "1"`` and ``index("y1^4") == (4, "scalar")``.
"""

from ._core import (
    DomainError,
    FactorResult,
    ParseError,
    SuiteOutcome,
    act,
    auto_apply,
    det,
    detbar,
    eta,
    factor,
    index,
    ind,
    invert,
    nf,
    run_suite,
    suite_names,
)

__all__ = [
    "DomainError",
    "FactorResult",
    "ParseError",
    "SuiteOutcome",
    "act",
    "auto_apply",
    "det",
    "detbar",
    "eta",
    "factor",
    "index",
    "ind",
    "invert",
    "nf",
    "run_suite",
    "suite_names",
]
