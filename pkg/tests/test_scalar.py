from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skein.errors import MissingVariable, NotDivisible
from skein.scalar import (ONE, ZERO, LFrac, Poly, PolyMatrix, det_bareiss, det_cofactor,
                          det_rational, extract_linear_factors, format_poly, parse_poly,
                          poly_add, poly_divexact, poly_eval, poly_mul, poly_subs, rank_rational)

from conftest import nonzero_polys, points, polys

P = parse_poly
s, a0, b0, g0 = (Poly.var(v) for v in ("s", "a0", "b0", "g0"))
lam = Poly.var("lambda")


def test_add_examples():
    assert poly_add(a0, ZERO) == a0
    assert poly_add(lam * a0, -(lam * a0)) == ZERO
    assert poly_add(g0 + s * b0, g0 - s * b0) == 2 * g0


def test_mul_examples():
    assert poly_mul(s, s) == lam
    assert str(poly_mul(s, s)) == "lambda"
    assert poly_mul(g0 + s * b0, g0 - s * b0) == g0 ** 2 - lam * b0 ** 2
    assert poly_mul(ONE, a0 + 3) == a0 + 3


def test_divexact_examples():
    p = lam * a0 ** 3 * (lam * a0 - 2)
    assert poly_divexact(p, lam * a0 - 2) == lam * a0 ** 3
    assert poly_divexact(p, ONE) == p
    with pytest.raises(NotDivisible):
        poly_divexact(a0 ** 2 - 4, a0 - 3)
    with pytest.raises(ZeroDivisionError):
        poly_divexact(a0, ZERO)


def test_eval_examples():
    assert poly_eval(lam * a0 - 2, {"s": 1, "a0": 2}) == 0
    assert poly_eval(lam * a0 - g0, {"s": 1, "a0": 5, "g0": 3}) == 2
    assert poly_eval(ZERO, {}) == 0
    with pytest.raises(MissingVariable):
        poly_eval(a0 + b0, {"a0": 1})


def test_printer():
    assert str(P("s^3 * a0")) == "lambda * s * a0"
    assert str(lam ** 2 * g0 - 1) == "lambda^2 * g0 - 1"
    assert str(P("1/2 * t")) == "1/2 * t"
    assert format_poly(ZERO) == "0"
    # grlex, descending
    assert str(a0 + g0 + s * t_()) == "s * t + g0 + a0"


def t_():
    return Poly.var("t")


def test_parser_forms():
    assert P("(a0 + 1)(a0 - 1)") == a0 ** 2 - 1
    assert P("2 lambda a0") == 2 * lam * a0
    assert P("-(g0 - s*b0)^2") == -(g0 - s * b0) ** 2
    assert P("lambda^3") == s ** 6
    with pytest.raises(ValueError):
        P("a0 +")
    with pytest.raises(ValueError):
        P("x1")


def test_det_examples():
    a, b = P("a0"), P("b0")
    assert det_bareiss(PolyMatrix.from_rows([[a, b], [b, a]])) == a * a - b * b
    m2 = PolyMatrix.from_rows([[a0 ** 2, a0, a0], [a0, lam * a0, ZERO], [a0, ZERO, lam * a0]])
    assert det_bareiss(m2) == lam * a0 ** 3 * (lam * a0 - 2)
    ident = PolyMatrix(4, 4, [ONE if i == j else ZERO for i in range(4) for j in range(4)])
    assert det_bareiss(ident) == ONE
    assert det_bareiss(PolyMatrix(0, 0, [])) == ONE


def test_det_singular_and_pivoting():
    m = PolyMatrix.from_rows([[ZERO, a0], [b0, ZERO]])
    assert det_bareiss(m) == -(a0 * b0)
    m = PolyMatrix.from_rows([[a0, b0], [2 * a0, 2 * b0]])
    assert det_bareiss(m) == ZERO


def test_extract_linear_factors_examples():
    p = lam * a0 ** 3 * (lam * a0 - 2)
    mult, rest = extract_linear_factors(p, [s, a0, lam * a0 - 2])
    assert (mult[s], mult[a0], mult[lam * a0 - 2], rest) == (2, 3, 1, ONE)
    mult, rest = extract_linear_factors(ONE, [s, a0])
    assert set(mult.values()) == {0} and rest == ONE
    p = P("lambda^6 * a0^11 * (lambda * a0 - 2)^7 * (lambda * a0 - 4)")
    mult, rest = extract_linear_factors(p, [s, a0, lam * a0 - 2, lam * a0 - 4])
    assert [mult[c] for c in (s, a0, lam * a0 - 2, lam * a0 - 4)] == [12, 11, 7, 1]
    assert rest == ONE


def test_lfrac():
    t = t_()
    x = LFrac(2 * t, 1)
    assert str(x) == "(2 * t) / lambda"
    assert LFrac(lam * t, 1) == LFrac(t)
    assert x * LFrac(lam) == LFrac(2 * t)
    assert LFrac(t, 1) + LFrac(t, 2) == LFrac(lam * t + t, 2)
    assert not LFrac(0, 3)


def test_rank_rational():
    assert rank_rational([[1, 2], [2, 4]]) == 1
    assert rank_rational([[0, 0], [0, 0]]) == 0
    assert rank_rational([[1, 0, 0], [0, 0, 1], [1, 0, 1]]) == 2


def test_matrix_helpers():
    m = PolyMatrix.from_rows([[a0, b0], [b0, g0]])
    assert m.is_symmetric()
    assert m.permuted([1, 0]).to_rows() == [[g0, b0], [b0, a0]]
    assert m.evaluate({"a0": 1, "b0": 2, "g0": 3}) == [[1, 2], [2, 3]]
    assert det_rational([[Fraction(1, 2), 1], [1, 4]]) == 1


# properties

@settings(max_examples=1000)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p
    assert p - p == ZERO


@settings(max_examples=300)
@given(polys(), nonzero_polys)
def test_divexact_inverts_mul(p, q):
    assert poly_divexact(poly_mul(p, q), q) == p


@given(polys())
def test_print_parse_roundtrip(p):
    assert parse_poly(str(p)) == p


@given(polys(), polys(), points())
def test_eval_is_a_ring_map(p, q, pt):
    assert poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt)
    assert poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt)


@given(polys(), points())
def test_subs_then_eval(p, pt):
    part = {k: pt[k] for k in ("s", "b0")}
    assert poly_eval(poly_subs(p, part), pt) == poly_eval(p, pt)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(polys(max_terms=2, max_exp=2),
                                                   min_size=n * n, max_size=n * n)))
def test_bareiss_matches_cofactor(entries):
    n = int(round(len(entries) ** 0.5))
    m = PolyMatrix(n, n, entries)
    assert det_bareiss(m) == det_cofactor(m)


def test_bareiss_matches_cofactor_exhaustive_signs():
    # every 3x3 matrix over {0, a0, -b0}
    vals = [ZERO, a0, -b0]
    for entries in product(vals, repeat=9):
        m = PolyMatrix(3, 3, list(entries))
        assert det_bareiss(m) == det_cofactor(m)
