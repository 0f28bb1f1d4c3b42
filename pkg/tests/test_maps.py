"""Map evaluation, drops, drop laws, and locally nilpotent iteration."""

import random

import pytest

from oracles import random_element
from weyl1 import (
    H,
    NEG_INF,
    ONE,
    W11,
    Weight,
    X,
    Y,
    ad,
    build_endo,
    compose,
    d_xy,
    d_yx,
    delta_xy,
    drop,
    drop_profile,
    eval_map,
    identity_endo,
    monomial,
    nilpotency_degree,
    weighted_degree,
)

IDENT = identity_endo()


def test_eval_map_examples():
    dl = delta_xy(IDENT)
    assert eval_map(dl, X * Y) == -ONE  # delta(x^i y^j) = -ij x^(i-1) y^(j-1)
    d = d_yx(IDENT)
    assert eval_map(d, Y**2 * X**2) == 2 * Y**2 * X**2
    assert eval_map(ad(H), ONE).is_zero()


def test_delta_on_xiyj_family():
    dl = delta_xy(IDENT)
    for i in range(1, 4):
        for j in range(1, 4):
            u = X**i * Y**j
            assert dl(u) == -i * j * (X ** (i - 1) * Y ** (j - 1))


def test_delta_on_twisted_xiyj_family():
    e = build_endo(X, Y + X**2)
    dl = delta_xy(e)
    for i in range(1, 4):
        for j in range(1, 4):
            u = e.x**i * e.y**j
            assert dl(u) == -i * j * (e.x ** (i - 1) * e.y ** (j - 1))


def test_ad_leibniz_rule():
    rng = random.Random(73)
    for _ in range(50):
        a = random_element(rng, max_degree=3)
        b = random_element(rng, max_degree=3)
        c = random_element(rng, max_degree=3)
        m = ad(a)
        assert m(b * c) == m(b) * c + b * m(c)


def test_ad_examples():
    assert ad(X)(Y**3) == -3 * Y**2
    assert ad(H)(X**2) == 2 * X**2
    assert ad(ONE)(H + X) == 0


def test_delta_equals_composition_of_inner_derivations():
    rng = random.Random(79)
    for e in (IDENT, build_endo(X, Y + X**2)):
        dl = delta_xy(e)
        comp = compose(ad(e.x), ad(e.y))
        for _ in range(20):
            a = random_element(rng)
            assert dl(a) == comp(a)


def test_drop_examples():
    dl = delta_xy(IDENT)
    assert drop(dl, W11, H) == -2
    assert dl(H**2) == -4 * H + 1
    assert drop(dl, W11, H**2) == -2
    assert drop(d_yx(IDENT), W11, H**2) == 0
    with pytest.raises(ValueError):
        drop(dl, W11, monomial(0, 0, 0))


def test_drop_minus_infinity_on_kernel():
    assert drop(ad(X), W11, X**3) == NEG_INF


def test_drop_composition_law():
    # v-additivity: drop of (m1 m2) at a = drop of m1 at m2(a) + drop of m2 at a
    rng = random.Random(83)
    m1, m2 = d_yx(IDENT), d_xy(IDENT)
    both = compose(m1, m2)
    checked = 0
    while checked < 30:
        a = random_element(rng)
        mid = m2(a)
        if mid.is_zero() or m1(mid).is_zero():
            continue
        assert drop(both, W11, a) == drop(m1, W11, mid) + drop(m2, W11, a)
        checked += 1


def test_drop_additivity_on_centralizer_powers():
    # d and d' both have drop 0 on powers of h; the composition d d'
    # equals delta(.)h, which forces the drop of delta to be -v(h)
    d, dp, dl = d_yx(IDENT), d_xy(IDENT), delta_xy(IDENT)
    vh = weighted_degree(W11, H)
    for k in range(1, 7):
        hk = H**k
        assert drop(d, W11, hk) == 0
        assert drop(dp, W11, hk) == 0
        assert drop(compose(d, dp), W11, hk) == 0
        assert d(dp(hk)) == dl(hk) * H  # d d' = delta(.) h
        assert drop(dl, W11, hk) == -vh


def test_derivation_drop_laws_on_commutative_samples():
    # for a derivation on a commutative subalgebra:
    # drop(ab) <= max(drop(a), drop(b)) and drop(a^n) = drop(a)
    dl = delta_xy(IDENT)
    rng = random.Random(89)
    powers = [H**k for k in range(1, 5)]
    for a in powers:
        for b in powers:
            ab = a * b
            assert drop(dl, W11, ab) <= max(drop(dl, W11, a), drop(dl, W11, b))
    for a in powers:
        for n in range(1, 5):
            assert drop(dl, W11, a**n) == drop(dl, W11, a)


def test_power_degree_identity_for_d_maps():
    # v(d(a^n)) = v(a^(n-1) d(a)) for both pair maps, including weights
    # with one negative entry (only rho + eta > 0 is required)
    rng = random.Random(97)
    for w in (W11, Weight(2, -1)):
        for maker in (d_yx, d_xy):
            d = maker(IDENT)
            checked = 0
            while checked < 25:
                a = random_element(rng, max_degree=3, max_terms=3)
                if d(a).is_zero():
                    continue
                for n in range(1, 5):
                    lhs = d(a**n)
                    rhs = a ** (n - 1) * d(a)
                    assert not lhs.is_zero()
                    assert weighted_degree(w, lhs) == weighted_degree(w, rhs)
                checked += 1


def test_drop_profile():
    report = drop_profile(delta_xy(IDENT), W11, [H, H**2, H**3])
    assert report.constant and report.drop_value == -2
    report = drop_profile(d_yx(IDENT), W11, [H, H**2, H**3])
    assert report.constant and report.drop_value == 0
    report = drop_profile(ad(X), W11, [Y])
    assert report.constant and report.drop_value == -1  # v([X, Y]) - v(Y) = 0 - 1
    report = drop_profile(ad(X), W11, [X, X**2])
    assert report.constant and report.drop_value is None  # all in the kernel
    mixed = drop_profile(ad(H), W11, [X, H + X])  # drops 0 and -1
    assert not mixed.constant and mixed.drop_value is None
    with pytest.raises(ValueError):
        drop_profile(ad(X), W11, [])


def test_nilpotency_degree():
    assert nilpotency_degree(ad(X), Y**3, 10) == 4
    assert nilpotency_degree(ad(X), X**5, 10) == 1
    assert nilpotency_degree(ad(H), X, 10) is None  # eigenvector, never nilpotent
    assert nilpotency_degree(ad(X), monomial(0, 0, 0), 10) == 0


def test_degree_shift_bounds_hold():
    rng = random.Random(101)
    e = build_endo(X, Y + X**2)
    for m in (ad(H), ad(X + Y**3), d_yx(e), d_xy(e), delta_xy(e)):
        bound = m.degree_shift(W11)
        for _ in range(20):
            a = random_element(rng, max_degree=4)
            img = m(a)
            if not img.is_zero():
                assert (
                    weighted_degree(W11, img) <= weighted_degree(W11, a) + bound
                )
