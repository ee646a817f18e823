from fractions import Fraction

from hypothesis import strategies as st

from skein.scalar import VARS, Poly

small_int = st.integers(min_value=-5, max_value=5)


@st.composite
def polys(draw, max_terms=4, max_exp=3):
    terms = draw(st.lists(st.tuples(small_int, st.tuples(*[st.integers(0, max_exp)] * len(VARS))),
                          max_size=max_terms))
    out = Poly()
    for c, exps in terms:
        out = out + Poly.monomial(c, exps)
    return out


nonzero_polys = polys().filter(bool)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def points(draw):
    return {v: draw(rationals) for v in VARS}


def frac(x):
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for res in sorted(RESULTS, key=lambda r: r.criterion):
            terminalreporter.write_line(res.line())
