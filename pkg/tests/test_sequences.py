from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skein.errors import MismatchedDenominators, NotAFactorization, NotCoprime
from skein.scalar import Poly, parse_poly, poly_eval
from skein.sequences import (GeometricSymbolic, RationalGF, SequenceTriple, common_recurrence,
                             geometric_triple, gf_terms, orientable_triple,
                             partial_fraction_split, recurrence_constants,
                             satisfies_degree_condition, term, ugcd_ext, umul)

lam = Poly.var("lambda")
a0 = Poly.var("a0")
ZERO_GF = RationalGF((), (1,))


def test_term_examples():
    assert term(GeometricSymbolic(a0, lam), 2) == parse_poly("lambda^2 * a0")
    # p = alpha0, q = 1 - lambda T with lambda = 3, alpha0 = 5
    assert term(RationalGF((5,), (1, -3)), 3) == Poly.const(5 * 27)
    assert term(RationalGF((4, 7), (1, -1, -1)), 0) == Poly.const(4)
    assert term(GeometricSymbolic(a0, lam), 0) == a0


def test_q0_must_be_one():
    with pytest.raises(ValueError):
        RationalGF((1,), (2, 1))
    with pytest.raises(ValueError):
        GeometricSymbolic(a0, 0)


def test_recurrence_examples():
    r = recurrence_constants(RationalGF((5,), (1, -2)))
    assert (r.N, r.M, r.K, r.coeffs) == (0, 1, 1, (Poly.const(2),))
    r = recurrence_constants(RationalGF((1, 1), (1, -1, -1)))
    assert (r.N, r.M, r.K, r.coeffs) == (1, 2, 2, (Poly.const(1), Poly.const(-1)))
    r = recurrence_constants(RationalGF((0, 0, 0, 1), (1, -1)))
    assert (r.N, r.M, r.K) == (3, 1, 4)
    r = recurrence_constants(GeometricSymbolic(a0, lam))
    assert (r.K, r.coeffs) == (1, (lam,))


def test_degree_condition_examples():
    assert satisfies_degree_condition(SequenceTriple(RationalGF((1, 2), (1, -1, -1)), ZERO_GF, ZERO_GF))
    assert satisfies_degree_condition(geometric_triple())
    assert satisfies_degree_condition(orientable_triple())
    q = (1, -2)
    assert not satisfies_degree_condition(SequenceTriple(RationalGF((1,), q), RationalGF((1, 1), q),
                                                         RationalGF((3,), q)))


def test_common_recurrence_rejects_mixed():
    q1, q2 = (1, -2), (1, -3)
    with pytest.raises(MismatchedDenominators):
        common_recurrence(SequenceTriple(RationalGF((1,), q1), RationalGF((1,), q2), ZERO_GF))
    with pytest.raises(MismatchedDenominators):
        common_recurrence(SequenceTriple(GeometricSymbolic(a0, lam), RationalGF((1,), q1), ZERO_GF))


def _split_sum_ok(triple, q1, q2, upto):
    first, second = partial_fraction_split(triple, q1, q2)
    for x, y, z in zip(triple.specs(), first.specs(), second.specs()):
        assert [a + b for a, b in zip(gf_terms(y, upto), gf_terms(z, upto))] == gf_terms(x, upto)
    return first, second


def test_split_examples():
    q = (1, -3, 2)  # (1 - T)(1 - 2T)
    alpha = RationalGF((1,), q)
    triple = SequenceTriple(alpha, ZERO_GF, ZERO_GF)
    _split_sum_ok(triple, (1, -1), (1, -2), 11)
    first, second = _split_sum_ok(triple, (1,), q, 11)
    assert all(not sp.p for sp in first.specs())
    assert second == triple
    first, second = _split_sum_ok(triple, q, (1,), 11)
    assert first == triple


def test_split_errors():
    q = (1, -3, 2)
    triple = SequenceTriple(RationalGF((1,), q), ZERO_GF, ZERO_GF)
    with pytest.raises(NotAFactorization):
        partial_fraction_split(triple, (1, -1), (1, -3))
    sq = umul([1, -1], [1, -1])
    with pytest.raises(NotCoprime):
        partial_fraction_split(SequenceTriple(RationalGF((1,), tuple(sq)), ZERO_GF, ZERO_GF),
                               (1, -1), (1, -1))
    with pytest.raises(NotAFactorization):
        partial_fraction_split(geometric_triple(), (1,), (1,))


def test_json_roundtrip():
    for triple in (geometric_triple(), orientable_triple(),
                   SequenceTriple(RationalGF((Fraction(1, 2), 1), (1, -1, -1)),
                                  RationalGF((2,), (1, -1, -1)), ZERO_GF)):
        assert SequenceTriple.from_json(triple.to_json()) == triple


def test_is_reduced():
    assert RationalGF((1, 1), (1, -1, -1)).is_reduced()
    assert not RationalGF((1, -1), (1, -3, 2)).is_reduced()
    assert ZERO_GF.is_reduced()


coef = st.integers(-4, 4)
q_tail = st.lists(coef, min_size=1, max_size=3).filter(lambda q: q[-1] != 0)


@given(st.lists(coef, max_size=4), q_tail)
def test_recurrence_holds(p, tail):
    spec = RationalGF(tuple(p), (1,) + tuple(tail))
    rec = recurrence_constants(spec)
    terms = gf_terms(spec, rec.K + 11)
    for l in range(rec.K, rec.K + 11):
        rhs = sum((-1) ** (i + 1) * rec.coeffs[i - 1].const_value() * terms[l - i]
                  for i in range(1, rec.M + 1))
        assert terms[l] == rhs


@given(st.lists(coef, max_size=4), st.lists(coef, max_size=3), st.integers(-3, 3), st.integers(-3, 3))
def test_split_additivity(p_alpha, p_beta, r1, r2):
    if r1 == r2 or 0 in (r1, r2):
        return
    q1, q2 = [1, -r1], [1, -r2]
    q = tuple(umul(q1, q2))
    triple = SequenceTriple(RationalGF(tuple(p_alpha), q), RationalGF(tuple(p_beta), q), ZERO_GF)
    _split_sum_ok(triple, q1, q2, 21)


@given(st.integers(-6, 6).filter(bool), st.integers(-6, 6))
def test_geometric_matches_gf(lam_val, a_val):
    geo = GeometricSymbolic(a0, lam)
    gf = RationalGF((a_val,), (1, -lam_val * lam_val))
    pt = {"s": lam_val, "a0": a_val}
    vals = gf_terms(gf, 11)
    for g in range(11):
        assert poly_eval(term(geo, g), pt) == vals[g]


def test_gcd_helper():
    g, s, t = ugcd_ext([1, -1], [1, -2])
    assert len(g) == 1
