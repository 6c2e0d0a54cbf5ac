from fractions import Fraction
from math import comb

import pytest

from gcnlab.corpus import (
    AFFINE_MAP,
    PAPPUS_PARAMS,
    X_STAR_PAIRS,
    X_STAR_PARAMS,
    Y_STAR_PAIRS,
    Y_STAR_PARAMS,
    cy_lines,
    fixture,
    tangent,
)
from gcnlab.gc_analysis import is_gc_set, used_nodes
from gcnlab.geometry import Line, Point, incident
from gcnlab.lattices import (
    ConstructionError,
    PencilTriple,
    WrongMuError,
    carnicer_gasca,
    chung_yao,
    construct_x_star,
    construct_y_star,
    generalized_principal,
    m_modification,
    pappus_probe,
    principal_lattice,
    principal_pencils,
    projective_image,
    search_params,
    verify_n_max,
    verify_n_minus_1_max,
)
from gcnlab.nodeset import make_node_set

from oracles import brute_maximal


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chung_yao_shape(n):
    X = chung_yao(cy_lines(n))
    assert len(X) == comb(n + 2, 2)
    assert brute_maximal(X) == set(X.maximal) == set(cy_lines(n))
    assert is_gc_set(X)


def test_chung_yao_rejects_concurrent_and_parallel():
    with pytest.raises(ConstructionError):
        chung_yao([Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0)])
    with pytest.raises(ConstructionError):
        chung_yao([Line(1, 0, 0), Line(1, 0, -1), Line(0, 1, 0)])
    with pytest.raises(ConstructionError):
        chung_yao([Line(1, 0, 0), Line(0, 1, 0)])


def test_carnicer_gasca_validation():
    lines = [tangent(t) for t in (0, 1, -1)]
    good = [Point(0, 0), Point(1, 1), Point(-1, 1)]
    X = carnicer_gasca(lines, good)
    assert len(X) == 6 and len(X.maximal) == 3 and is_gc_set(X)
    with pytest.raises(ConstructionError):
        carnicer_gasca(lines, [Point(0, 0), Point(1, 1), Point(5, 5)])  # off its line
    meet01 = Point(Fraction(1, 2), 0)
    with pytest.raises(ConstructionError):
        carnicer_gasca(lines, [meet01, Point(1, 1), Point(-1, 1)])


def test_principal_lattice_is_gpl():
    X = principal_lattice(3)
    assert set(X) == {Point(i, j) for i in range(4) for j in range(4 - i)}
    assert set(generalized_principal(principal_pencils(3))) == set(X)


def test_projective_image_keeps_gc():
    img = projective_image(principal_pencils(3), AFFINE_MAP)
    X = generalized_principal(img)
    assert len(X) == 10 and len(X.maximal) == 3 and is_gc_set(X)


def test_generalized_principal_rejects_broken_pencils():
    fams = principal_pencils(2).families
    bad = (fams[0], fams[1], (Line(1, 1, 0), Line(1, 1, -1), Line(1, 1, -3)))
    with pytest.raises(ConstructionError):
        generalized_principal(PencilTriple(bad))


def test_y_star_and_its_structure():
    X, line = construct_y_star(Y_STAR_PARAMS)
    assert X.degree == 3 and len(X.maximal) == 3
    assert len(X.nodes_on(line)) == 3
    assert len(used_nodes(X, line)) == 0
    bp = verify_n_max(X)
    assert bp and len(bp.outside) == 1 and len(bp.free) == 6
    assert not any(incident(l, bp.outside[0]) for l in X.maximal)


def test_verify_n_max_mismatch_when_outside_node_moves():
    X = fixture("y-star").nodes
    bp = verify_n_max(X)
    O = bp.outside[0]
    moved = [p if p != O else Point(O.x + 1, O.y + Fraction(1, 7)) for p in X]
    Y = make_node_set(3, moved)
    assert len(Y.maximal) == 3
    result = verify_n_max(Y)
    assert not result and "span" in result.reason


def test_verify_n_max_wrong_mu():
    with pytest.raises(WrongMuError):
        verify_n_max(fixture("cy3").nodes)


def test_x_star_and_its_structure():
    X, line = construct_x_star(X_STAR_PARAMS)
    assert X.degree == 5 and len(X.maximal) == 4
    assert len(X.nodes_on(line)) == 4
    assert len(used_nodes(X, line)) == 0
    bp = verify_n_minus_1_max(X)
    assert bp and len(bp.outside) == 3 and len(bp.special) == 3


def test_x_star_rejects_a22_off_second_line():
    params = dict(X_STAR_PARAMS, a22=["1/3", "-2"])
    with pytest.raises(ConstructionError, match="A22"):
        construct_x_star(params)


def test_verify_n_minus_1_max_mismatch_when_free_node_moves():
    X = fixture("x-star").nodes
    bp = verify_n_minus_1_max(X)
    victim = next(p for p in bp.free if p not in bp.special)
    lam = next(l for l in X.maximal if incident(l, victim))
    t = 0
    while True:
        q = lam.point_at(t)
        if q not in X and sum(incident(l, q) for l in X.maximal) == 1:
            Y = make_node_set(5, [q if p == victim else p for p in X])
            if len(Y.maximal) == 4:
                break
        t += 1
    assert not verify_n_minus_1_max(Y)


def test_verify_n_minus_1_max_wrong_mu():
    with pytest.raises(WrongMuError):
        verify_n_minus_1_max(fixture("cg5").nodes)


def test_pappus_configuration_is_rejected():
    probe = pappus_probe(PAPPUS_PARAMS)
    assert probe.d == Point(0, 0)
    assert probe.o2 == Point(Fraction(5, 2), Fraction(3, 2))
    assert probe.o3 == Point(Fraction(15, 2), Fraction(9, 2))
    assert probe.collinear and probe.rejected


def test_m_modification_y():
    base = fixture("y-star")
    Y, line = m_modification((base.nodes, base.line), 1, Y_STAR_PAIRS)
    assert Y.degree == 5 and len(Y.maximal) == 5 and len(Y.nodes_on(line)) == 4
    assert len(used_nodes(Y, line)) == 0


def test_m_modification_x():
    base = fixture("x-star")
    Y, line = m_modification((base.nodes, base.line), 1, X_STAR_PAIRS)
    assert Y.degree == 7 and len(Y.maximal) == 6 and len(Y.nodes_on(line)) == 5


def test_m_modification_errors():
    base = fixture("y-star")
    X, line = base.nodes, base.line
    with pytest.raises(ConstructionError, match="distinguished"):
        m_modification((X, line), 1, [[[1, 0, 0], [0, 1, 0]]])
    # a new line parallel to an existing maximal line breaks general position
    lam = X.maximal[0]
    b = next(line.point_at(t) for t in range(50) if line.point_at(t) not in X and not incident(lam, line.point_at(t)))
    par = Line(lam.a, lam.b, -(lam.a * b.x + lam.b * b.y))
    other = Line(1, 7, -(b.x + 7 * b.y))
    with pytest.raises(ConstructionError, match="condition \\(i\\)"):
        m_modification((X, line), 1, [(par, other)])
    with pytest.raises(ConstructionError):
        m_modification((fixture("pl4").nodes, Line(1, 1, -1)), 0, [])


def test_search_params_is_deterministic():
    a = search_params("y-star", seed=3, tries=200)
    b = search_params("y-star", seed=3, tries=200)
    assert a == b
    X, line = construct_y_star(a)
    assert len(used_nodes(X, line)) == 0
