from math import factorial

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from dihedral_moduli.polynomial import InexactDivisionError, Polynomial
from dihedral_moduli.series import (
    FROM_EGF,
    TO_EGF,
    TruncatedSeries,
    compose,
    egf_scale,
    revert,
    revert_lagrange,
)

X, Q = sp.symbols("x q")


def poly_to_sympy(c):
    return sum(a * Q**k for k, a in enumerate(c.coefficients))


def to_sympy(s):
    """Series -> sympy expression in x and q (EGF numerators divided by n!)."""
    expr = 0
    for n, c in enumerate(s.coefficients, 1):
        expr += poly_to_sympy(c) * X**n / (sp.factorial(n) if s.exponential else 1)
    return expr


def sympy_compose_coeffs(outer, inner):
    """Oracle: expand outer(inner(x)) with sympy and read x^1..x^N."""
    N = outer.order
    expanded = sp.expand(to_sympy(outer).subs(X, to_sympy(inner)))
    return [sp.expand(expanded.coeff(X, n)) for n in range(1, N + 1)]


def series(*coeffs, exponential=False):
    return TruncatedSeries([Polynomial.parse(c) if isinstance(c, str) else c for c in coeffs], exponential)


def test_compose_identities():
    s = series(1, 1)
    assert compose(s, TruncatedSeries.identity(2)) == s
    s = series(1, "q", "2*q - 1", 7)
    assert compose(TruncatedSeries.identity(4), s) == s


def test_compose_catalan():
    s = series(1, -1, 0, 0, 0)
    catalan = series(1, 1, 2, 5, 14)
    assert compose(s, catalan).is_identity()
    assert [int(c) for c in sympy_compose_coeffs(s, catalan)] == [1, 0, 0, 0, 0]


def test_compose_matches_sympy():
    outer = series(1, "q - 2", "3", "-q^2 + 1")
    inner = series(1, "2*q", "-1", "q")
    got = [sp.expand(poly_to_sympy(c)) for c in compose(outer, inner).coefficients]
    assert got == sympy_compose_coeffs(outer, inner)


def test_compose_order_mismatch():
    with pytest.raises(ValueError):
        compose(series(1, 1), series(1, 1, 1))


def test_compose_rejects_mixed_kinds():
    with pytest.raises(ValueError):
        compose(series(1, 1), series(1, 1, exponential=True))


def test_revert_examples():
    assert revert(TruncatedSeries.identity(6)).is_identity()
    t = revert(series(1, -1, 0, 0, 0, 0, 0, 0))
    assert [c(0) for c in t.coefficients] == [1, 1, 2, 5, 14, 42, 132, 429]
    # brute-force check of the inverse, independent of revert
    s = series(1, -1, 0, 0, 0, 0, 0, 0)
    assert [int(c) for c in sympy_compose_coeffs(s, t)] == [1] + [0] * 7


def test_revert_requires_unit_leading_coefficient():
    with pytest.raises(ValueError):
        revert(series(2, 1))
    with pytest.raises(ValueError):
        revert_lagrange(series("q", 1))


def test_lagrange_small_coefficients():
    u2, u3, u4 = sp.symbols("u2 u3 u4")
    # numeric stand-ins for u2, u3, u4 that keep every monomial distinguishable
    vals = {u2: 3, u3: 7, u4: 11}
    s = series(1, -3, -7, -11)
    v = revert_lagrange(s)
    assert v[2](0) == vals[u2]
    assert v[3](0) == (2 * u2**2 + u3).subs(vals)
    assert v[4](0) == (5 * u2**3 + 5 * u2 * u3 + u4).subs(vals)


def test_lagrange_identity_input():
    assert revert_lagrange(TruncatedSeries.identity(5)).is_identity()


coeff_polys = st.lists(st.integers(-4, 4), max_size=3).map(Polynomial)


@st.composite
def admissible_series(draw, max_order=12):
    order = draw(st.integers(1, max_order))
    tail = draw(st.lists(coeff_polys, min_size=order - 1, max_size=order - 1))
    return TruncatedSeries([Polynomial((1,))] + tail)


@settings(max_examples=40, deadline=None)
@given(admissible_series())
def test_revert_agrees_with_lagrange(s):
    assert revert(s) == revert_lagrange(s)


@settings(max_examples=40, deadline=None)
@given(admissible_series())
def test_revert_is_two_sided_inverse(s):
    t = revert(s)
    assert compose(s, t).is_identity()
    assert compose(t, s).is_identity()
    assert revert(t) == s


def admissible_series_of_order(order):
    return st.lists(coeff_polys, min_size=order, max_size=order).map(TruncatedSeries)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(*[admissible_series_of_order(n)] * 3)))
def test_compose_is_associative(abc):
    a, b, c = abc
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_egf_scale_identity():
    x = TruncatedSeries.identity(4)
    assert egf_scale(x, TO_EGF) == TruncatedSeries.identity(4, exponential=True)
    assert egf_scale(TruncatedSeries.identity(4, exponential=True), FROM_EGF) == x


def test_egf_round_trip():
    s = series(1, "q - 2", "3*q^2", -5)
    assert egf_scale(egf_scale(s, TO_EGF), FROM_EGF) == s


def test_egf_numerators_stay_integral():
    # g(x) = x - x^2/2! + ...: the numerator is -1, the value -1/2 is never formed
    g = series(1, -1, "-q^2 + 2", exponential=True)
    assert g[2] == Polynomial((-1,))
    with pytest.raises(InexactDivisionError):
        egf_scale(g, FROM_EGF)


def test_egf_compose_matches_sympy():
    outer = series(1, "q + 1", "q^2 - 3", exponential=True)
    inner = series(1, -1, "2*q", exponential=True)
    composed = compose(outer, inner)
    expected = sympy_compose_coeffs(outer, inner)
    for n, c in enumerate(composed.coefficients, 1):
        assert sp.expand(poly_to_sympy(c) / sp.factorial(n)) == expected[n - 1]


def test_egf_compose_inverse_pair():
    # exp(x) - 1 and log(1 + x) are compositional inverses
    order = 8
    expm1 = TruncatedSeries([1] * order, exponential=True)
    log1p = TruncatedSeries([(-1) ** (n - 1) * factorial(n - 1) for n in range(1, order + 1)], exponential=True)
    assert compose(expm1, log1p).is_identity()
    assert compose(log1p, expm1).is_identity()


def test_revert_rejects_exponential():
    with pytest.raises(ValueError):
        revert(TruncatedSeries.identity(3, exponential=True))


def test_text_rendering():
    s = series(1, -1, "q - 2")
    assert str(s) == "x + (-1)*x^2 + (q - 2)*x^3 + O(x^4)"
    assert str(TruncatedSeries([0, 0])) == "O(x^3)"
    assert str(series(1, 1, exponential=True)) == "x + x^2/2! + O(x^3)"


def test_getitem_bounds():
    s = series(1, 2)
    assert s[0] == Polynomial()
    with pytest.raises(IndexError):
        s[3]
