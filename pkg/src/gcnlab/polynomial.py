"""Bivariate polynomials over the rationals with bounded total degree."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .geometry import Line, Point, format_rational, to_rational

Monomial = tuple[int, int]


def monomials(n: int) -> list[Monomial]:
    """Exponents ``(i, j)`` with ``i + j <= n`` in ascending graded-lex order."""
    return [(d - j, j) for d in range(n + 1) for j in range(d + 1)]


class BivariatePolynomial:
    """Immutable sparse map ``(i, j) -> c_ij`` for the term ``c_ij x^i y^j``."""

    __slots__ = ("_coeffs", "_hash", "_residues")

    def __init__(self, coeffs: Mapping[Monomial, object] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Monomial, Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            c = to_rational(c)
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
                if not clean[(i, j)]:
                    del clean[(i, j)]
        self._coeffs = clean
        self._hash = None
        self._residues = None

    @classmethod
    def constant(cls, c) -> BivariatePolynomial:
        return cls({(0, 0): c})

    @classmethod
    def from_line(cls, line: Line) -> BivariatePolynomial:
        return cls({(1, 0): line.a, (0, 1): line.b, (0, 0): line.c})

    @property
    def coeffs(self) -> dict[Monomial, Fraction]:
        return dict(self._coeffs)

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self._coeffs), default=0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int, j: int) -> Fraction:
        return self._coeffs.get((i, j), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, BivariatePolynomial):
            other = BivariatePolynomial.constant(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Line):
            other = BivariatePolynomial.from_line(other)
        if not isinstance(other, BivariatePolynomial):
            c = to_rational(other)
            return BivariatePolynomial({m: c * v for m, v in self._coeffs.items()})
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __call__(self, pt: Point) -> Fraction:
        return evaluate(self, pt)

    def __repr__(self):
        return f"BivariatePolynomial({render(self)!r})"

    def __str__(self):
        return render(self)


def evaluate(p: BivariatePolynomial, pt: Point) -> Fraction:
    x, y = pt.x, pt.y
    return sum((c * x**i * y**j for (i, j), c in p._coeffs.items()), Fraction(0))


def multiply_by_line(p: BivariatePolynomial, line: Line) -> BivariatePolynomial:
    return p * BivariatePolynomial.from_line(line)


def divide_by_line(p: BivariatePolynomial, line: Line) -> BivariatePolynomial | None:
    """Exact quotient ``q`` with ``p == line * q``, or ``None`` if not divisible.

    Synthetic division in ``x`` when ``a != 0`` (coefficients are polynomials
    in ``y``), otherwise in ``y``.  The divisor's leading coefficient is a
    constant, so no rational functions appear.
    """
    if p.is_zero():
        raise ValueError("division of the zero polynomial")
    swap = line.a == 0
    lead, lin, const = (line.b, line.a, line.c) if swap else (line.a, line.b, line.c)
    # rows[k][e]: coefficient of main^k * other^e
    d = p.degree
    rows = [[Fraction(0)] * (d + 1) for _ in range(d + 1)]
    for (i, j), c in p._coeffs.items():
        k, e = (j, i) if swap else (i, j)
        rows[k][e] = c
    if d == 0:
        return None
    # divisor = lead*main + (lin*other + const)
    quot = [None] * d
    carry = rows[d]
    for k in range(d, 0, -1):
        qk = [c / lead for c in carry]
        quot[k - 1] = qk
        nxt = list(rows[k - 1])
        for e, c in enumerate(qk):
            if c:
                nxt[e] -= const * c
                if lin:
                    nxt[e + 1] -= lin * c
        carry = nxt
    if any(carry):
        return None
    out = {}
    for k, row in enumerate(quot):
        for e, c in enumerate(row):
            if c:
                out[(e, k) if swap else (k, e)] = c
    return BivariatePolynomial(out)


def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def render(p: BivariatePolynomial) -> str:
    """Terms in descending graded-lex order, rationals as ``p/q``."""
    if p.is_zero():
        return "0"
    order = sorted(p._coeffs, key=lambda m: (m[0] + m[1], m[0]), reverse=True)
    out = []
    for i, j in order:
        c = p._coeffs[(i, j)]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = _format_monomial(i, j)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


_PRIME = (1 << 61) - 1


def certainly_not_divisible(p: BivariatePolynomial, line: Line) -> bool:
    """Cheap one-sided test: True only if ``line`` provably does not divide ``p``.

    Evaluates ``p`` modulo a large prime at a point of the line; a nonzero
    residue means ``p`` does not vanish on the line.
    """
    pt = line.point_at(7)
    if pt.x.denominator % _PRIME == 0 or pt.y.denominator % _PRIME == 0:
        return False
    x = pt.x.numerator * pow(pt.x.denominator, -1, _PRIME) % _PRIME
    y = pt.y.numerator * pow(pt.y.denominator, -1, _PRIME) % _PRIME
    if p._residues is None:
        res = []
        for (i, j), c in p._coeffs.items():
            if c.denominator % _PRIME == 0:
                res = False
                break
            res.append((i, j, c.numerator * pow(c.denominator, -1, _PRIME) % _PRIME))
        p._residues = res
    if p._residues is False:
        return False
    total = sum(r * pow(x, i, _PRIME) * pow(y, j, _PRIME) for i, j, r in p._residues)
    return total % _PRIME != 0
