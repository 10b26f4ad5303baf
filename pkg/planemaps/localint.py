"""
Local intersection numbers of plane curves at rational points.

Curves are moved so the point is the origin, the common factor is removed
(it must be a unit there, otherwise the number is infinite) and the
classical recursion runs on the restrictions to y = 0:

    I(y*P1, Q) = ord_x Q(x, 0) + I(P1, Q)
    I(P, Q)    = I(P, lc(P)*Q - lc(Q)*x^(s-r)*P)     when 1 <= r <= s
"""
from dataclasses import dataclass

from planemaps.errors import DegreeError
from planemaps.ideals import INFINITE
from planemaps.polyring import (
    Poly, Rat, as_rat, check_same_ring, format_rational, gcd_poly, homogeneous_part, parse_rational,
    precompose, total_degree,
)


@dataclass(frozen=True)
class RatPoint:
    x: Rat
    y: Rat

    def __post_init__(self):
        for name in ('x', 'y'):
            object.__setattr__(self, name, as_rat(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> 'RatPoint':
        """Parse 'X,Y' with X, Y integers or fractions like -1/2."""
        parts = [p.strip() for p in text.split(',')]
        if len(parts) != 2:
            raise ValueError(f"A point is 'X,Y', got {text!r}")
        try:
            x, y = (parse_rational(p) for p in parts)
        except ValueError:
            raise ValueError(f"Bad rational coordinates in {text!r}")
        return cls(x, y)

    @property
    def coords(self):
        return (self.x, self.y)

    def __str__(self):
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


ORIGIN = RatPoint(0, 0)


def translate_to_origin(P: Poly, a: RatPoint) -> Poly:
    """P(x + a.x, y + a.y)."""
    x, y = P.ring.gens
    return precompose(P, [x + a.x, y + a.y])


def _value_at_origin(P: Poly):
    return P.get(P.ring.zero_monom, P.ring.domain.zero)


def _on_axis(P: Poly) -> Poly:
    """P(x, 0) as a univariate polynomial in x."""
    return P.evaluate(P.ring.gens[1], 0)


def _divide_by_y(P: Poly) -> Poly:
    return P.ring.from_dict({(i, j - 1): c for (i, j), c in P.items()})


def _axis_order(P0: Poly) -> int:
    return min(m[0] for m in P0.itermonoms())


def _fulton(P: Poly, Q: Poly) -> int:
    total = 0
    x = P.ring.gens[0]
    while True:
        if _value_at_origin(P) or _value_at_origin(Q):
            return total
        P0, Q0 = _on_axis(P), _on_axis(Q)
        if not P0:
            P, Q, P0, Q0 = Q, P, Q0, P0
            if not P0:
                raise DegreeError("Both curves contain the line y = 0")
        if not Q0:
            # Q = y*Q1: I(P, y) = ord_x P(x, 0)
            total += _axis_order(P0)
            Q = _divide_by_y(Q)
            continue
        r, s = P0.degree(), Q0.degree()
        if r > s:
            P, Q, P0, Q0, r, s = Q, P, Q0, P0, s, r
        Q = Q * P0.LC - P * x ** (s - r) * Q0.LC


def intersection_number(P: Poly, Q: Poly, a: RatPoint = ORIGIN):
    """I_a(P, Q): a non-negative integer, or INFINITE for a shared component through a."""
    check_same_ring(P, Q)
    P, Q = translate_to_origin(P, a), translate_to_origin(Q, a)
    if _value_at_origin(P) or _value_at_origin(Q):
        return 0
    common = gcd_poly(P, Q)
    if not _value_at_origin(common):
        return INFINITE
    if total_degree(common) > 0:
        P, Q = P.exquo(common), Q.exquo(common)
    return _fulton(P, Q)


def order_at(P: Poly, a: RatPoint = ORIGIN) -> int:
    """Multiplicity of the curve P at a (0 if P(a) != 0)."""
    if not P:
        raise DegreeError("The zero polynomial has no order")
    T = translate_to_origin(P, a)
    return min(sum(m) for m in T.itermonoms())


def lowest_form(P: Poly, a: RatPoint = ORIGIN) -> Poly:
    """Lowest-degree homogeneous part of P at a, in coordinates centred at a."""
    T = translate_to_origin(P, a)
    return homogeneous_part(T, order_at(P, a))
