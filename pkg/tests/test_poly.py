from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import X, XY, XYZ, polys
from pderiv.errors import ContextError, DomainError
from pderiv.expr import parse_poly
from pderiv.poly import (
    Poly,
    VarContext,
    divided_partial,
    frobenius_substitute,
    partial_derivative,
    poly_eval,
    reduce_mod_int,
    univariate_gcd_mod_p,
    univariate_reduce,
)


def P(text, ctx=X):
    return parse_poly(text, ctx)


def to_sympy(f):
    syms = sympy.symbols(f.ctx.names)
    return sum((c * sympy.prod([s**e for s, e in zip(syms, m)]) for m, c in f.terms.items()), sympy.Integer(0))


def from_sympy(expr, ctx):
    syms = sympy.symbols(ctx.names)
    poly = sympy.Poly(sympy.expand(expr), *syms)
    return Poly(ctx, {m: int(c) for m, c in poly.terms()})


class TestContext:
    def test_parses_comma_list(self):
        assert VarContext("x, y").names == ("x", "y")

    @pytest.mark.parametrize("names", [[], ["X"], ["1a"], ["x", "x"]])
    def test_rejects_bad(self, names):
        with pytest.raises(DomainError):
            VarContext(names)

    def test_mismatch(self):
        with pytest.raises(ContextError):
            Poly.variable(X, "x") + Poly.variable(XY, "x")


def test_add_examples():
    x = Poly.variable(X, "x")
    assert (x + -x).is_zero()
    assert P("x^2+1") + P("x-1") == P("x^2+x")
    f = P("3*x^4 - x")
    assert f + Poly(X) == f


def test_mul_examples():
    assert P("(x+1)") * P("(x-1)") == P("x^2-1")
    assert P("x^3+5*x") ** 2 == Poly(X, {(6,): 1, (4,): 10, (2,): 25})
    assert P("x^3+5*x") ** 0 == 1


def test_pow_rejects_negative():
    with pytest.raises(DomainError):
        P("x") ** -1


def test_partials_of_whitney_umbrella():
    f = P("x^2 - y^2*z", XYZ)
    assert partial_derivative(f, "x") == P("2*x", XYZ)
    assert partial_derivative(f, "y") == P("-2*y*z", XYZ)
    assert partial_derivative(f, "z") == P("-y^2", XYZ)
    assert partial_derivative(P("7"), 0).is_zero()


def test_divided_partial_examples():
    f = P("x^3+5*x")
    assert divided_partial(f, "x", 2) == P("3*x")
    assert divided_partial(P("x^3"), "x", 3) == 1
    assert divided_partial(f, "x", 0) == f


def test_frobenius_substitute_examples():
    assert frobenius_substitute(P("x^3+5*x"), 2) == P("x^6+5*x^2")
    assert frobenius_substitute(P("17"), 5) == 17
    assert frobenius_substitute(P("x*y+1", XY), 3) == P("x^3*y^3+1", XY)


def test_eval_examples():
    assert poly_eval(P("x^2 - y^2*z", XYZ), [1, 0, 1]) == 1
    assert poly_eval(P("z^2 - x^2 - y^2", XYZ), [1, 0, 1]) == 0
    assert poly_eval(P("3*x*y + 11", XY), [0, 0]) == 11
    assert poly_eval(P("x^2", X), [Fraction(2, 3)]) == Fraction(4, 9)


def test_reduce_mod_int_examples():
    assert reduce_mod_int(P("3*x^2-6"), 2) == P("x^2")
    assert reduce_mod_int(P("5*x^2-15"), 2) == P("x^2+1")
    assert reduce_mod_int(P("2*x^3 + 4*x"), 2).is_zero()
    assert reduce_mod_int(P("-1"), 5) == 4


def test_univariate_reduce_examples():
    assert univariate_reduce(P("x^4"), P("x^2-5")) == 25
    assert univariate_reduce(P("2*x^6-4*x^3+2"), P("x^3-2")) == 2
    assert univariate_reduce(P("4*x+1"), P("x^2-5")) == P("4*x+1")


def test_univariate_reduce_errors():
    with pytest.raises(DomainError):
        univariate_reduce(P("x^3"), P("2*x-1"))
    with pytest.raises(DomainError):
        univariate_reduce(P("x", XY), P("x", XY))


def test_gcd_examples():
    assert univariate_gcd_mod_p([P("x^2+1"), P("x^2+1"), P("0")], 2) == P("x^2+1")
    assert univariate_gcd_mod_p([P("x^2+1"), P("x^2")], 2) == 1
    assert univariate_gcd_mod_p([P("0"), P("0")], 3).is_zero()
    assert univariate_gcd_mod_p([P("x^2-1"), P("x^2+x")], 7) == P("x+1")


ARGS = dict(max_terms=4, max_deg=3, coeff=9)


@given(polys(**ARGS), polys(**ARGS), polys(**ARGS))
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f and f * g == g * f
    assert f - f == 0


@settings(max_examples=50)
@given(polys(**ARGS), polys(**ARGS))
def test_multiplication_against_sympy(f, g):
    assert f * g == from_sympy(to_sympy(f) * to_sympy(g), XY)


@settings(max_examples=50)
@given(polys(**ARGS), polys(**ARGS), st.sampled_from([2, 3, 5]))
def test_freshmans_dream(f, g, p):
    assert reduce_mod_int((f + g) ** p - f**p - g**p, p).is_zero()
    assert reduce_mod_int((f * g) ** p - f**p * g**p, p).is_zero()


@given(polys(**ARGS), polys(**ARGS), st.sampled_from([2, 3, 5]))
def test_frobenius_substitute_is_homomorphism(f, g, p):
    assert frobenius_substitute(f * g, p) == frobenius_substitute(f, p) * frobenius_substitute(g, p)
    assert frobenius_substitute(f + g, p) == frobenius_substitute(f, p) + frobenius_substitute(g, p)


@given(polys(max_deg=6), st.integers(0, 5), st.sampled_from([0, 1]))
def test_divided_partial_times_factorial(f, j, i):
    g = f
    for _ in range(j):
        g = partial_derivative(g, i)
    assert divided_partial(f, i, j) * factorial(j) == g


@given(polys(X, max_deg=6), polys(X, max_deg=3), st.integers(1, 4), st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_univariate_reduce_remainder(f, r, d, tail):
    g = Poly(X, {(d,): 1, **{(k,): c for k, c in enumerate(tail[:d])}})
    rem = Poly(X, {m: c for m, c in r.terms.items() if m[0] < d})
    assert univariate_reduce(f * g + rem, g) == rem


@given(st.lists(polys(X, max_deg=5), min_size=1, max_size=3), st.sampled_from([2, 3, 5, 7]))
def test_gcd_divides_inputs(fs, p):
    g = univariate_gcd_mod_p(fs, p)
    if g.is_zero():
        assert all(reduce_mod_int(f, p).is_zero() for f in fs)
        return
    assert g.coeff((g.degree(),)) == 1
    sp_g = sympy.Poly(to_sympy(g), sympy.Symbol("x"), modulus=p)
    for f in fs:
        sp_f = sympy.Poly(to_sympy(f), sympy.Symbol("x"), modulus=p)
        assert sp_f.rem(sp_g).is_zero
    # agreement with sympy's own gcd over F_p
    expected = sympy.Poly(0, sympy.Symbol("x"), modulus=p)
    for f in fs:
        expected = expected.gcd(sympy.Poly(to_sympy(f), sympy.Symbol("x"), modulus=p))
    assert expected.degree() == g.degree()
