from fractions import Fraction

from hypothesis import strategies as st

from oqa.scalars import LaurentPoly, Scalar

PARAMS = ("a", "nu")

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)
exponents = st.integers(min_value=-3, max_value=3)


@st.composite
def laurent_polys(draw, params=PARAMS, max_terms=4):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(exponents) for _ in params)
        coeff = draw(small_rationals)
        terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return LaurentPoly(params, terms)


@st.composite
def scalars(draw, params=PARAMS):
    num = draw(laurent_polys(params))
    if draw(st.booleans()):
        den = LaurentPoly.one(params)
    else:
        den = draw(laurent_polys(params).filter(lambda p: not p.is_zero()))
    return Scalar(num, den)


@st.composite
def assignments(draw, params=PARAMS):
    return {name: draw(nonzero_rationals) for name in params}
