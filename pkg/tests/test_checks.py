"""The windowed verification suite over the canonical pairs."""

import pytest

from weyl1 import (
    CANONICAL_ENDOMORPHISMS,
    H,
    ONE,
    X,
    Y,
    apply_endo,
    canonical_config,
    check_centralizer_theorem,
    check_eigen_theorem,
    check_eigvec_tables,
    check_kernel_delta,
    check_klein_basis,
    check_nilpotent_closure,
    check_product_rules,
    check_propagation,
    compile_recipe,
    run_suite,
)
from weyl1.checks import span_basis, span_contains, span_intersection, spans_equal

PAIRS = [(name, compile_recipe(recipe)) for name, recipe in CANONICAL_ENDOMORPHISMS]


def test_canonical_pairs_are_the_documented_ones():
    names = [name for name, _ in PAIRS]
    assert names == ["identity", "triangular-x2", "composite"]
    assert PAIRS[1][1].x == X and PAIRS[1][1].y == Y + X**2
    assert PAIRS[2][1].x == X + Y**2


@pytest.mark.parametrize("name,e", PAIRS, ids=[n for n, _ in PAIRS])
def test_centralizer_check(name, e):
    res = check_centralizer_theorem(e, 8)
    assert res.passed, res.witness


@pytest.mark.parametrize("name,e", PAIRS, ids=[n for n, _ in PAIRS])
def test_eigen_check(name, e):
    res = check_eigen_theorem(e, 5)
    assert res.passed, res.witness


@pytest.mark.parametrize("name,e", PAIRS, ids=[n for n, _ in PAIRS])
def test_klein_check(name, e):
    res = check_klein_basis(e, 6)
    assert res.passed, res.witness


@pytest.mark.parametrize("name,e", PAIRS, ids=[n for n, _ in PAIRS])
def test_product_rules_check(name, e):
    res = check_product_rules(e, 10)
    assert res.passed, res.witness
    assert res.params["localized"] == (name == "identity")


@pytest.mark.parametrize("name,e", PAIRS, ids=[n for n, _ in PAIRS])
def test_kernel_delta_check(name, e):
    res = check_kernel_delta(e, 4)
    assert res.passed, res.witness


@pytest.mark.parametrize("name,e", PAIRS, ids=[n for n, _ in PAIRS])
def test_nilpotent_closure_check(name, e):
    res = check_nilpotent_closure(e, 3)
    assert res.passed, res.witness
    assert res.params["max_iter"] == 13 and res.params["slack"] == 21


@pytest.mark.parametrize("name,e", PAIRS, ids=[n for n, _ in PAIRS])
def test_propagation_check(name, e):
    res = check_propagation(e, apply_endo(e, Y**2 * X**3), 2)
    assert res.passed, res.witness


@pytest.mark.parametrize("name,e", PAIRS, ids=[n for n, _ in PAIRS])
def test_eigvec_tables_check(name, e):
    res = check_eigvec_tables(e, 3, 3)
    assert res.passed, res.witness


def test_eigen_dimensions_match_graded_count():
    # windowed eigenspace dimensions equal the count of h^k v_i' inside
    # the window, computed from degrees alone (inside the check); a
    # deliberately wrong candidate set must not invent eigenvalues
    e = PAIRS[1][1]
    res = check_eigen_theorem(e, 5, candidates=["1/2", "-1/2", "0", "1", "-1"])
    assert res.passed


def test_run_suite_canonical_all_pass():
    results = run_suite(canonical_config())
    assert results, "suite must produce results"
    assert all(r.passed for r in results)
    assert len(results) == 3 * 8
    lines = [r.line() for r in results]
    assert all(line.startswith("PASS ") for line in lines)


def test_checkresult_failure_carries_witness():
    # an intentionally undersized closure bound cannot kill the window,
    # so the closure is a proper subspace and the check reports it
    e = PAIRS[2][1]
    res = check_nilpotent_closure(e, 3, max_iter=1, slack=21)
    assert not res.passed
    assert res.witness and res.witness["problems"]
    assert res.line().startswith("FAIL ")


def test_span_helpers():
    assert spans_equal([H, ONE], [H + 1, ONE])
    assert not spans_equal([H], [X])
    assert span_contains([ONE, H, H**2], [3 * H**2 + H - 1])
    assert not span_contains([ONE, H], [X])
    inter = span_intersection([ONE, H, X], [ONE, Y])
    assert spans_equal(inter, [ONE])
    assert span_basis([H, 2 * H, ONE + H]) == span_basis([ONE, H])
