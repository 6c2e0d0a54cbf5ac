"""Randomised round-trip and canonical-form properties (1000 cases each)."""

from collections import Counter
from fractions import Fraction

from hypothesis import HealthCheck, given, settings, strategies as st

from gcnlab.geometry import Line, Point
from gcnlab.io import dumps, loads
from gcnlab.nodeset import make_node_set
from gcnlab.polynomial import BivariatePolynomial, certainly_not_divisible, divide_by_line, multiply_by_line

PASSED = Counter()  # passing examples per property, read by the acceptance gate
CASES = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])

ints = st.integers(min_value=-10**12, max_value=10**12)
rationals = st.fractions(max_denominator=10**6)
small = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def polynomials(draw, max_degree=4):
    d = draw(st.integers(0, max_degree))
    mons = [(i, e - i) for e in range(d + 1) for i in range(e + 1)]
    return BivariatePolynomial({m: draw(small) for m in mons})


@st.composite
def lines(draw, coeff=rationals):
    a, b, c = draw(coeff), draw(coeff), draw(coeff)
    if a == 0 and b == 0:
        a = Fraction(1)
    return Line(a, b, c)


@st.composite
def point_sets(draw):
    n = draw(st.integers(0, 3))
    count = (n + 1) * (n + 2) // 2
    pts = draw(st.lists(st.tuples(rationals, rationals), min_size=count, max_size=count, unique=True))
    return make_node_set(n, [Point(x, y) for x, y in pts])


@CASES
@given(polynomials(), lines(small))
def test_multiply_then_divide_by_line(p, line):
    q = multiply_by_line(p, line)
    if p.is_zero():
        assert q.is_zero()
    else:
        assert q.degree == p.degree + 1
        assert not certainly_not_divisible(q, line)
        assert divide_by_line(q, line) == p
    PASSED["polynomial round trip"] += 1


@CASES
@given(ints, ints, ints, st.integers(-10**6, 10**6).filter(bool))
def test_line_canonical_form_is_idempotent(a, b, c, scale):
    if a == 0 and b == 0:
        b = 1
    line = Line(a, b, c)
    again = Line(*line.coefficients)
    assert again.coefficients == line.coefficients
    assert Line(a * scale, b * scale, c * scale).coefficients == line.coefficients
    assert Line(*(Fraction(v, scale) for v in (a, b, c))) == line
    assert hash(again) == hash(line)
    PASSED["line canonical form"] += 1


@CASES
@given(polynomials())
def test_polynomial_normal_form_is_idempotent(p):
    again = BivariatePolynomial(p.coeffs)
    assert again == p and again.coeffs == p.coeffs
    assert all(v != 0 for v in again.coeffs.values())
    assert hash(again) == hash(p)
    PASSED["polynomial canonical form"] += 1


@CASES
@given(point_sets(), st.lists(lines(), max_size=3))
def test_file_round_trip_is_bit_exact(X, ls):
    text = dumps(X, ls, {"note": "round trip"})
    loaded = loads(text)
    assert list(loaded.nodes) == list(X)
    assert loaded.lines == tuple(ls)
    assert dumps(loaded.nodes, loaded.lines, loaded.blueprint) == text
    for p, q in zip(loaded.nodes, X):
        assert (p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator) == (
            q.x.numerator, q.x.denominator, q.y.numerator, q.y.denominator)
    PASSED["file round trip"] += 1
