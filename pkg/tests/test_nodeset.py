from fractions import Fraction

import pytest

from gcnlab.geometry import Line, Point
from gcnlab.linalg import bareiss_determinant, clear_denominators, inverse
from gcnlab.nodeset import (
    NodeSetError,
    NotPoisedError,
    fundamental_polynomial,
    is_poised,
    make_node_set,
    maximal_lines,
    node_lines,
)
from gcnlab.polynomial import BivariatePolynomial as P

from oracles import lagrange_pl, leibniz_det

PL2 = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]
TRIANGLE = [(0, 0), (2, 0), (0, 2)]


def pts(coords):
    return [Point(*c) for c in coords]


def test_bareiss_matches_leibniz():
    M = [[2, -1, 3, 0], [1, 4, -2, 5], [0, 3, 1, -1], [7, 0, 2, 2]]
    assert bareiss_determinant(M) == leibniz_det(M)
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


def test_inverse_and_clearing():
    M = [[Fraction(1, 2), 1], [3, Fraction(-1, 3)]]
    inv = inverse(M)
    prod = [[sum(M[i][k] * inv[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]
    assert inverse([[1, 2], [2, 4]]) is None
    assert clear_denominators(M) == [[1, 2], [9, -1]]


def test_make_node_set_validation():
    assert len(make_node_set(1, pts(TRIANGLE))) == 3
    assert len(make_node_set(2, pts(PL2))) == 6
    with pytest.raises(NodeSetError):
        make_node_set(2, pts(PL2[:5]))
    with pytest.raises(NodeSetError):
        make_node_set(1, pts([(0, 0), (0, 0), (1, 1)]))


def test_poisedness():
    assert is_poised(make_node_set(2, pts(PL2)))
    assert is_poised(make_node_set(1, pts(TRIANGLE)))
    four_collinear = [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1)]
    X = make_node_set(2, pts(four_collinear))
    assert not is_poised(X)
    with pytest.raises(NotPoisedError):
        fundamental_polynomial(X, 0)


def test_pl2_fundamentals_match_product_formula():
    X = make_node_set(2, pts(PL2))
    x, y = P({(1, 0): 1}), P({(0, 1): 1})
    assert fundamental_polynomial(X, 0) == (x + y - 1) * (x + y - 2) * Fraction(1, 2)
    assert fundamental_polynomial(X, 1) == -x * (x + y - 2)
    for a, p in enumerate(X):
        assert fundamental_polynomial(X, a) == lagrange_pl(2, p.x, p.y)


def test_triangle_fundamental():
    X = make_node_set(1, pts(TRIANGLE))
    x, y = P({(1, 0): 1}), P({(0, 1): 1})
    assert fundamental_polynomial(X, 0) == 1 - x * Fraction(1, 2) - y * Fraction(1, 2)


def test_node_lines():
    tri = make_node_set(1, pts(TRIANGLE))
    assert [nl.node_count for nl in node_lines(tri)] == [2, 2, 2]
    X = make_node_set(2, pts(PL2))
    counts = sorted(nl.node_count for nl in node_lines(X))
    assert counts == [2] * 6 + [3] * 3
    assert set(maximal_lines(X)) == {Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -2)}


def test_chung_yao_degree_two_lines():
    from gcnlab.lattices import chung_yao

    lines = [Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -2), Line(1, -1, -1)]
    X = chung_yao(lines)
    three = {nl.line for nl in node_lines(X) if nl.node_count == 3}
    assert three == set(lines) == set(maximal_lines(X))


def test_partition_of_unity_pl3():
    from gcnlab.lattices import principal_lattice

    X = principal_lattice(3)
    total = P()
    for p in X.fundamentals:
        total = total + p
    assert total == P.constant(1)


def test_without_lines_rewraps_degree():
    from gcnlab.lattices import principal_lattice

    X = principal_lattice(3)
    Y = X.without_lines([Line(1, 1, -3)])
    assert Y.degree == 2 and len(Y) == 6 and set(Y) == set(principal_lattice(2))
