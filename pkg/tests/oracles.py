"""Independent reference computations used to cross-check the package.

Nothing here calls the package's linear algebra, division or usage code.
"""

from fractions import Fraction
from itertools import permutations
from math import comb

from gcnlab.geometry import Line, Point
from gcnlab.polynomial import BivariatePolynomial


def lagrange_pl(n: int, i0: int, j0: int) -> BivariatePolynomial:
    """Fundamental polynomial of node (i0, j0) of the principal lattice.

    Product of the lines x = a (a < i0), y = b (b < j0), x + y = n - c
    (c < k0) with k0 = n - i0 - j0, normalized to 1 at the node.
    """
    i0, j0 = int(i0), int(j0)
    k0 = n - i0 - j0
    p = BivariatePolynomial.constant(1)
    for a in range(i0):
        p = p * BivariatePolynomial({(1, 0): 1, (0, 0): -a}) * Fraction(1, i0 - a)
    for b in range(j0):
        p = p * BivariatePolynomial({(0, 1): 1, (0, 0): -b}) * Fraction(1, j0 - b)
    for c in range(k0):
        # n - x - y - c vanishes on x + y = n - c, equals k0 - c at the node
        p = p * BivariatePolynomial({(1, 0): -1, (0, 1): -1, (0, 0): n - c}) * Fraction(1, k0 - c)
    return p


def eval_by_hand(p: BivariatePolynomial, x, y) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    return sum((c * x**i * y**j for (i, j), c in p.coeffs.items()), Fraction(0))


def vanishes_on_line(p: BivariatePolynomial, line: Line) -> bool:
    """A degree-d polynomial vanishing at d+1 points of a line vanishes on it."""
    d = max(p.degree, 0)
    if line.b != 0:
        pts = [(Fraction(t), Fraction(-line.a * t - line.c, line.b)) for t in range(d + 1)]
    else:
        pts = [(Fraction(-line.c, line.a), Fraction(t)) for t in range(d + 1)]
    return all(eval_by_hand(p, x, y) == 0 for x, y in pts)


def usage_by_evaluation(X, line: Line) -> frozenset:
    """Nodes whose fundamental polynomial vanishes identically on ``line``.

    Fundamental polynomials come from solving the collocation system with a
    textbook elimination written here (no package linear algebra).
    """
    return frozenset(a for a, p in enumerate(solve_fundamentals(X)) if vanishes_on_line(p, line))


def monomials_ref(n):
    return [(i, d - i) for d in range(n + 1) for i in range(d, -1, -1)]


def solve_fundamentals(X):
    n = X.degree
    mons = monomials_ref(n)
    N = len(mons)
    pts = list(X)
    # rows: monomials, solve M c_a = e_a where M[r][m] = mon_m(pt_r)
    M = [[p.x**i * p.y**j for i, j in mons] for p in pts]
    out = []
    for a in range(N):
        A = [row[:] + [Fraction(int(r == a))] for r, row in enumerate(M)]
        for col in range(N):
            piv = next(r for r in range(col, N) if A[r][col] != 0)
            A[col], A[piv] = A[piv], A[col]
            pv = A[col][col]
            A[col] = [v / pv for v in A[col]]
            for r in range(N):
                if r != col and A[r][col] != 0:
                    f = A[r][col]
                    A[r] = [u - f * v for u, v in zip(A[r], A[col])]
        out.append(BivariatePolynomial({m: A[r][N] for r, m in enumerate(mons)}))
    return out


def leibniz_det(M):
    """Determinant by the permutation expansion (tiny matrices only)."""
    n = len(M)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


def brute_maximal(X):
    """Lines through n+1 nodes, by checking every pair of nodes."""
    out = set()
    pts = list(X)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            p, q = pts[i], pts[j]
            a, b, c = p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y
            on = [r for r in pts if a * r.x + b * r.y + c == 0]
            if len(on) == X.degree + 1:
                out.add(Line(a, b, c))
    return out


def triangular(s: int) -> int:
    return comb(s, 2)
