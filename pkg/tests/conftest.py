from fractions import Fraction

from hypothesis import strategies as st

from ggp.bipoly import BiPoly
from ggp.scalar import KappaRational, UniPoly, normalize

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def unipolys(draw, max_degree=3, nonzero=False):
    coeffs = draw(st.lists(rationals, min_size=1, max_size=max_degree + 1))
    p = UniPoly(coeffs)
    if nonzero and p.is_zero():
        p = UniPoly([draw(st.integers(1, 5))])
    return p


@st.composite
def kappa_rationals(draw, nonzero=False):
    num = draw(unipolys(nonzero=nonzero))
    den = draw(unipolys(max_degree=2, nonzero=True))
    return normalize(num, den)


@st.composite
def bipolys(draw, max_exp=3):
    keys = draw(st.lists(st.tuples(st.integers(0, max_exp), st.integers(0, max_exp)),
                         max_size=4, unique=True))
    return BiPoly({k: draw(kappa_rationals()) for k in keys})


# values where no denominator above can vanish identically are not guaranteed,
# so callers evaluate at points and skip poles
probe_points = [Fraction(7, 3), Fraction(-11, 5), Fraction(13, 2)]


def k(a, b=0) -> KappaRational:
    """a + b*kappa"""
    return KappaRational.linear(a, b)
