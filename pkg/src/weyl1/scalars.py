"""Exact rational scalars and the minus-infinity degree sentinel.

All coefficients in this package are exact rationals: reduced, arbitrary
precision, positive denominator.  gmpy2's mpq is used when it is installed
(it is markedly faster in the windowed linear algebra); the stdlib
fractions.Fraction is the fallback.  Both types share the operations and
the string format ("p" or "p/q") this package relies on.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat

    RAT_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat

    RAT_BACKEND = "fractions"

#: Degree of the zero element.  Distinct from every integer, compares below
#: all of them, and absorbs integer addition, which is exactly what the
#: degree bookkeeping needs.
NEG_INF = float("-inf")

RAT_ZERO = Rat(0)
RAT_ONE = Rat(1)


def rat(value, den=None):
    """Coerce ints, strings like "-3/4", or rational objects to a scalar."""
    if den is not None:
        return Rat(value, den)
    if isinstance(value, str):
        value = value.strip()
    return Rat(value)


def rat_str(q) -> str:
    """Canonical string form: "p" when the denominator is 1, else "p/q"."""
    return str(q)


def is_integer(q) -> bool:
    return q.denominator == 1
