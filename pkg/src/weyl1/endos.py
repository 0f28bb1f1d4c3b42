"""Endomorphism recipes and membership in the image subalgebra.

A recipe composes elementary commutator-preserving generators:

    add_poly_x(f):  X -> X,          Y -> Y + f(X)
    add_poly_y(g):  X -> X + g(Y),   Y -> Y
    linear(a,b,c,d) with ad - bc = 1:  X -> aX + bY,  Y -> cX + dY

or overrides the pair (x, y) directly, in which case [y, x] = 1 is
checked.  Generators apply left to right, so a recipe [g1, g2] compiles
to the endomorphism "g2 after g1".

Membership of an element a in the subalgebra generated by a verified
pair (x, y) is decided within a stated slack: the monomials y^i x^j are
a basis of that subalgebra, and the solver looks for an exact expansion
using the pairs with v11(y^i x^j) <= v11(a) + slack.  A negative verdict
is therefore always "not at this slack".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .core import ONE, X, Y, EndoPair, WeylElement, apply_endo, build_endo
from .degrees import W11, weighted_degree
from .errors import UnverifiedEndoError
from .linalg import solve_many
from .scalars import Rat, rat


@dataclass(frozen=True)
class AddPolyX:
    """X -> X, Y -> Y + f(X); coeffs of f ascending in the argument."""

    coeffs: Tuple[Rat, ...]

    def pair(self) -> EndoPair:
        f_of_x = _univariate(self.coeffs, X)
        return build_endo(X, Y + f_of_x)


@dataclass(frozen=True)
class AddPolyY:
    """X -> X + g(Y), Y -> Y."""

    coeffs: Tuple[Rat, ...]

    def pair(self) -> EndoPair:
        g_of_y = _univariate(self.coeffs, Y)
        return build_endo(X + g_of_y, Y)


@dataclass(frozen=True)
class LinearGen:
    """X -> aX + bY, Y -> cX + dY with ad - bc = 1."""

    a: Rat
    b: Rat
    c: Rat
    d: Rat

    def pair(self) -> EndoPair:
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("linear generator needs determinant 1")
        return build_endo(self.a * X + self.b * Y, self.c * X + self.d * Y)


EndoGenerator = Union[AddPolyX, AddPolyY, LinearGen]


def add_poly_x(coeffs) -> AddPolyX:
    return AddPolyX(tuple(rat(c) for c in coeffs))


def add_poly_y(coeffs) -> AddPolyY:
    return AddPolyY(tuple(rat(c) for c in coeffs))


def linear(a, b, c, d) -> LinearGen:
    return LinearGen(rat(a), rat(b), rat(c), rat(d))


def _univariate(coeffs: Sequence, gen: WeylElement) -> WeylElement:
    acc = WeylElement()
    power = ONE
    for k, c in enumerate(coeffs):
        if k:
            power = power * gen
        if c:
            acc = acc + c * power
    return acc


@dataclass(frozen=True)
class EndoRecipe:
    generators: Tuple[EndoGenerator, ...] = ()
    raw: Optional[Tuple[WeylElement, WeylElement]] = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))


def compile_recipe(recipe: EndoRecipe) -> EndoPair:
    """Compose the generators left to right; verify the result.

    A raw override bypasses the generators but still must verify.
    """
    if recipe.raw is not None:
        pair = build_endo(*recipe.raw)
        if not pair.verified:
            raise UnverifiedEndoError(
                "raw pair fails [y, x] = 1; commutator is "
                f"{pair.defect}"
            )
        return pair
    x_cur, y_cur = X, Y
    for gen in recipe.generators:
        gpair = gen.pair()
        if not gpair.verified:  # cannot happen for the shipped generators
            raise UnverifiedEndoError("generator failed verification")
        x_cur = apply_endo(gpair, x_cur)
        y_cur = apply_endo(gpair, y_cur)
    pair = build_endo(x_cur, y_cur)
    if not pair.verified:
        raise UnverifiedEndoError("composite pair failed verification")
    return pair


# -- membership in the image subalgebra ----------------------------------


@dataclass
class Membership:
    """Verdict of the slack-bounded expansion a = sum c[i,j] y^i x^j."""

    member: bool
    witness: Optional[Dict[Tuple[int, int], Rat]]
    slack: int
    degree_bound: Union[int, float]
    pairs_tried: int

    def __bool__(self):
        return self.member


class MembershipSolver:
    """Caches powers y^i x^j of one pair for repeated membership queries."""

    def __init__(self, e: EndoPair):
        if not e.verified:
            raise UnverifiedEndoError("membership needs a verified pair")
        self.pair = e
        self._vx = weighted_degree(W11, e.x)
        self._vy = weighted_degree(W11, e.y)
        self._x_pows = [ONE]
        self._y_pows = [ONE]
        self._products: Dict[Tuple[int, int], WeylElement] = {}

    def _power(self, pows: List[WeylElement], base: WeylElement, k: int) -> WeylElement:
        while len(pows) <= k:
            pows.append(pows[-1] * base)
        return pows[k]

    def basis_product(self, i: int, j: int) -> WeylElement:
        el = self._products.get((i, j))
        if el is None:
            el = self._power(self._y_pows, self.pair.y, i) * self._power(
                self._x_pows, self.pair.x, j
            )
            self._products[(i, j)] = el
        return el

    def candidate_pairs(self, bound) -> List[Tuple[int, int]]:
        """Pairs with v11(y^i x^j) = i*v(y) + j*v(x) <= bound, scan order."""
        out = []
        i = 0
        while i * self._vy <= bound:
            j = 0
            while i * self._vy + j * self._vx <= bound:
                out.append((i, j))
                j += 1
            i += 1
        out.sort(key=lambda p: (p[0] * self._vy + p[1] * self._vx, p[0]))
        return out

    def solve(self, elements: Sequence[WeylElement], slack: int) -> List[Membership]:
        """Batch the queries; verdicts match element-by-element solving.

        The expansion over the y^i x^j basis is unique, so solving once at
        the largest bound and checking which pairs each witness uses gives
        exactly the per-element answers.
        """
        degrees = [weighted_degree(W11, a) for a in elements]
        finite = [d for d in degrees if d != float("-inf")]
        if not finite:
            return [
                Membership(True, {}, slack, d, 0) for d in degrees
            ]
        bound = max(finite) + slack
        pairs = self.candidate_pairs(bound)
        columns = [self.basis_product(i, j) for (i, j) in pairs]
        keys = sorted(
            {k for el in columns for k in el.support()}
            | {k for el in elements for k in el.support()},
            key=lambda p: (p[0] + p[1], p[0]),
        )
        pos = {key: r for r, key in enumerate(keys)}
        rows: List[Dict[int, Rat]] = [{} for _ in keys]
        for c, el in enumerate(columns):
            for key, v in el._terms.items():
                rows[pos[key]][c] = v
        rhs = []
        for el in elements:
            col = [rat(0)] * len(keys)
            for key, v in el._terms.items():
                col[pos[key]] = v
            rhs.append(col)
        sols = solve_many(rows, len(pairs), rhs)
        out = []
        for a, deg, sol in zip(elements, degrees, sols):
            if a.is_zero():
                out.append(Membership(True, {}, slack, deg, len(pairs)))
                continue
            if sol is None:
                out.append(Membership(False, None, slack, deg + slack, len(pairs)))
                continue
            own_bound = deg + slack
            witness = {pairs[c]: v for c, v in sorted(sol.items())}
            within = all(
                i * self._vy + j * self._vx <= own_bound for (i, j) in witness
            )
            if within:
                out.append(Membership(True, witness, slack, own_bound, len(pairs)))
            else:
                out.append(Membership(False, None, slack, own_bound, len(pairs)))
        return out


def subalgebra_membership(
    e: EndoPair, a: WeylElement, slack: int = 4
) -> Membership:
    """Decide a = sum c[i,j] y^i x^j over pairs within the slack bound."""
    return MembershipSolver(e).solve([a], slack)[0]
