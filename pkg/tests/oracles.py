"""Independent oracles for the test suite.

The normal-ordering oracle works on words in the letters X and Y and
knows only the single rewrite step XY -> YX - 1.  It never touches the
closed-form coefficients used by the package, so agreement between the
two is meaningful evidence.
"""

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def normal_order_word(word):
    """Normal form of a word as {(i, j): int}, by XY -> YX - 1 steps."""
    for k in range(len(word) - 1):
        if word[k] == "X" and word[k + 1] == "Y":
            swapped = word[:k] + ("Y", "X") + word[k + 2 :]
            dropped = word[:k] + word[k + 2 :]
            out = dict(normal_order_word(swapped))
            for key, c in normal_order_word(dropped).items():
                v = out.get(key, 0) - c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
            return out
    return {(word.count("Y"), word.count("X")): 1}


def oracle_monomial_product(i1, j1, i2, j2):
    """Y^i1 X^j1 * Y^i2 X^j2 normal ordered, as {(i, j): int}.

    Only the middle X^j1 Y^i2 can rewrite; the outer letters shift the
    exponents, which keeps the memo small without changing the steps.
    """
    middle = normal_order_word(("X",) * j1 + ("Y",) * i2)
    out = {}
    for (a, b), c in middle.items():
        out[(i1 + a, b + j2)] = c
    return out


def oracle_mul(ta, tb):
    """Product of two {(i, j): coeff} tables via the rewrite oracle."""
    out = {}
    for (i1, j1), ca in ta.items():
        for (i2, j2), cb in tb.items():
            for key, m in oracle_monomial_product(i1, j1, i2, j2).items():
                v = out.get(key, 0) + ca * cb * m
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return out


def random_terms(rng, max_degree=4, max_terms=4, max_num=9, max_den=3):
    """Random sparse coefficient table, never empty."""
    terms = {}
    while not terms:
        for _ in range(rng.randint(1, max_terms)):
            i = rng.randint(0, max_degree)
            j = rng.randint(0, max_degree - i)
            num = rng.randint(-max_num, max_num)
            if num:
                terms[(i, j)] = terms.get((i, j), Fraction(0)) + Fraction(
                    num, rng.randint(1, max_den)
                )
        terms = {k: v for k, v in terms.items() if v}
    return terms


def random_element(rng, max_degree=4, max_terms=4, max_num=9, max_den=3):
    from weyl1 import WeylElement

    return WeylElement(random_terms(rng, max_degree, max_terms, max_num, max_den))
