from hypothesis import given, settings
from hypothesis import strategies as st

from fiatcells.laurent import LaurentPoly


def lp(d):
    return LaurentPoly(d)


def test_basic_arithmetic():
    p = lp({0: 1, 2: 1})
    q = lp({-1: 1, 1: 1})
    assert p + q == lp({-1: 1, 0: 1, 1: 1, 2: 1})
    assert p * q == lp({-1: 1, 1: 2, 3: 1})
    assert p - p == LaurentPoly.zero()
    assert not LaurentPoly.zero()


def test_zero_coefficients_dropped():
    assert lp({3: 0, 1: 2}).coeffs == {1: 2}
    assert lp({1: 1}) - lp({1: 1}) == 0


def test_evaluate_and_degree():
    p = lp({-2: 3, 4: 1})
    assert p(1) == 4
    assert p.degree == 4
    assert p.valuation == -2
    assert p.bar() == lp({2: 3, -4: 1})


def test_divide_exact():
    chi = lp({0: 1, 2: 1})
    assert chi.divide_exact(chi) == LaurentPoly.one()
    prod = chi * lp({-1: 2, 0: 1})
    assert prod.divide_exact(chi) == lp({-1: 2, 0: 1})
    assert lp({0: 1, 1: 1}).divide_exact(lp({0: 2})) is None  # 1/2 not integral
    assert lp({2: 1}).divide_exact(lp({0: 1, 1: 1})) is None  # remainder


def test_format_ascending():
    assert lp({2: 1, 0: 1}).format("t") == "1 + t^2"
    assert lp({-1: -2, 1: 1}).format("v") == "-2*v^-1 + v"
    assert LaurentPoly.zero().format() == "0"


coeffs = st.dictionaries(
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-5, max_value=5),
    max_size=5,
)


@settings(max_examples=80, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    pa, pb, pc = lp(a), lp(b), lp(c)
    assert (pa + pb) + pc == pa + (pb + pc)
    assert pa * pb == pb * pa
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert (pa * pb) * pc == pa * (pb * pc)


@settings(max_examples=80, deadline=None)
@given(coeffs, coeffs)
def test_exact_division_roundtrip(a, b):
    pa, pb = lp(a), lp(b)
    if not pb:
        return
    assert (pa * pb).divide_exact(pb) == pa
