"""Exact normal-form arithmetic in the first Weyl algebra.

The algebra is generated by X and Y subject to the single relation
Y*X - X*Y = 1.  Every element has a unique normal form

    sum  a[i, j] * Y^i * X^j      (all Y's to the left of all X's)

and that is how elements are stored: a sparse map from exponent pairs
(i, j) to nonzero exact rational coefficients.  The representation is
canonical, so equality is structural and the zero element is the empty
map.  Elements are immutable; every operation returns a fresh value.

Products are normal ordered with the closed form

    X^b * Y^c = sum_k (-1)^k * k! * C(b,k) * C(c,k) * Y^(c-k) * X^(b-k),

which the test suite validates against the one-step rewriting oracle
XY -> YX - 1.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Tuple, Union

from .errors import UnverifiedEndoError
from .scalars import RAT_ONE, Rat, rat, rat_str

ExponentPair = Tuple[int, int]
Scalar = Union[int, str, Rat]


@lru_cache(maxsize=None)
def _reorder(b: int, c: int) -> Tuple[int, ...]:
    """Integer coefficients m_k with X^b Y^c = sum_k m_k Y^(c-k) X^(b-k)."""
    coeffs = []
    m = 1  # k! * C(b, k) * C(c, k), accumulated multiplicatively
    for k in range(min(b, c) + 1):
        if k:
            m = m * (b - k + 1) * (c - k + 1) // k
        coeffs.append(m if k % 2 == 0 else -m)
    return tuple(coeffs)


class WeylElement:
    """An element of the algebra in canonical Y^i X^j form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[ExponentPair, Scalar]] = None):
        data = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent pair {(i, j)}")
                q = rat(c)
                if q:
                    q = data.get((i, j), 0) + q
                    if q:
                        data[(i, j)] = q
                    else:
                        data.pop((i, j), None)
        self._terms = data

    @classmethod
    def _raw(cls, terms: dict) -> "WeylElement":
        # internal: terms already canonical (no zeros, Rat values)
        self = object.__new__(cls)
        self._terms = terms
        return self

    # -- inspection ----------------------------------------------------

    def terms(self) -> Iterable[Tuple[ExponentPair, Rat]]:
        """Term stream in the canonical (i+j, i) ascending order."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def support(self):
        return set(self._terms)

    def coefficient(self, i: int, j: int):
        return self._terms.get((i, j), rat(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def scalar_value(self):
        """The value of a scalar element; raises on non-scalars."""
        if self.is_zero():
            return rat(0)
        if set(self._terms) == {(0, 0)}:
            return self._terms[(0, 0)]
        raise ValueError("element is not a scalar")

    def monomial_count(self) -> int:
        return len(self._terms)

    # -- ring structure ------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return WeylElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                c = c1 * c2
                for k, m in enumerate(_reorder(j1, i2)):
                    key = (i1 + i2 - k, j1 + j2 - k)
                    v = acc.get(key, 0) + c * m
                    if v:
                        acc[key] = v
                    else:
                        acc.pop(key, None)
        return WeylElement._raw(acc)

    def __rmul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self._terms == other._terms
        if isinstance(other, (int, Rat, numbers.Rational)):
            return self._terms == WeylElement({(0, 0): other})._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<WeylElement {format_element(self)}>"


def _coerce(value) -> Union[WeylElement, type(NotImplemented)]:
    if isinstance(value, WeylElement):
        return value
    if isinstance(value, (int, Rat, numbers.Rational)):
        return WeylElement({(0, 0): value})
    return NotImplemented


def monomial(i: int, j: int, c: Scalar = 1) -> WeylElement:
    """The element c * Y^i * X^j."""
    return WeylElement({(i, j): c})


def scalar(c: Scalar) -> WeylElement:
    return WeylElement({(0, 0): c})


ZERO = WeylElement()
ONE = scalar(1)
X = monomial(0, 1)
Y = monomial(1, 0)
H = monomial(1, 1)  # H = Y*X


# -- named operations --------------------------------------------------


def add(a: WeylElement, b: WeylElement) -> WeylElement:
    return a + b


def mul(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    """[a, b] = a*b - b*a."""
    return a * b - b * a


def theta(a: WeylElement) -> WeylElement:
    """The automorphism X -> Y, Y -> -X (hence H -> -H + 1)."""
    acc = ZERO
    for (i, j), c in a._terms.items():
        # substitute, then normal order: (-X)^i * Y^j
        sign = -c if i % 2 else c
        acc = acc + sign * (monomial(0, i) * monomial(j, 0))
    return acc


def theta_prime(a: WeylElement) -> WeylElement:
    """The anti-automorphism X -> Y, Y -> X (so H -> H)."""
    # term by term: reversal sends Y^i X^j to Y^j X^i, already normal
    return WeylElement._raw({(j, i): c for (i, j), c in a._terms.items()})


@dataclass(frozen=True)
class EndoPair:
    """A pair (x, y) of elements intended to satisfy [y, x] = 1.

    Such a pair is the same thing as an algebra endomorphism X -> x,
    Y -> y.  `verified` records whether the commutator really is 1; when
    it is not, `defect` keeps the computed commutator for diagnosis.
    """

    x: WeylElement
    y: WeylElement
    verified: bool
    defect: Optional[WeylElement] = None

    @property
    def h(self) -> WeylElement:
        return self.y * self.x

    def is_identity(self) -> bool:
        return self.x == X and self.y == Y


def build_endo(x: WeylElement, y: WeylElement) -> EndoPair:
    """Check [y, x] = 1 and package the pair, keeping the defect if not."""
    c = commutator(y, x)
    if c == ONE:
        return EndoPair(x=x, y=y, verified=True)
    return EndoPair(x=x, y=y, verified=False, defect=c)


def identity_endo() -> EndoPair:
    return EndoPair(x=X, y=Y, verified=True)


def apply_endo(e: EndoPair, a: WeylElement) -> WeylElement:
    """Image of a under X -> x, Y -> y, i.e. sum a[i,j] * y^i * x^j."""
    if not e.verified:
        raise UnverifiedEndoError(
            "refusing to apply an unverified pair; commutator defect: "
            f"{format_element(e.defect) if e.defect is not None else '?'}"
        )
    max_i = max((i for (i, _) in a._terms), default=0)
    max_j = max((j for (_, j) in a._terms), default=0)
    y_pow = [ONE]
    for _ in range(max_i):
        y_pow.append(y_pow[-1] * e.y)
    x_pow = [ONE]
    for _ in range(max_j):
        x_pow.append(x_pow[-1] * e.x)
    acc = ZERO
    for (i, j), c in a._terms.items():
        acc = acc + c * (y_pow[i] * x_pow[j])
    return acc


# -- canonical printing ------------------------------------------------


def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("Y" if i == 1 else f"Y^{i}")
    if j:
        parts.append("X" if j == 1 else f"X^{j}")
    return "*".join(parts)


def format_element(a: WeylElement) -> str:
    """Canonical form, terms sorted by (i+j, i) ascending; parses back."""
    if a.is_zero():
        return "0"
    chunks = []
    for (i, j), c in a.terms():
        mono = _format_monomial(i, j)
        mag = abs(c)
        if mono and mag == RAT_ONE:
            body = mono
        elif mono:
            body = f"{rat_str(mag)}*{mono}"
        else:
            body = rat_str(mag)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)
