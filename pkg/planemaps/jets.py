"""
Plane maps and their jet curves.

For F = (f, g) the critical curve is J = f_x g_y - f_y g_x. The second-order
curves come from the two brackets

    A = f_xx g_y + f_x g_xy - f_xy g_x - f_y g_xx
    B = f_xy g_y + f_x g_yy - f_yy g_x - f_y g_xy

as J11 = A f_y - B f_x and J12 = A g_y - B g_x.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

from planemaps.errors import DegreeError, VariableMismatch
from planemaps.polyring import (
    XY, FieldMode, Poly, as_rat, check_same_ring, format_poly, parse_poly, partial,
    precompose, to_field, total_degree, variable_names,
)


@dataclass(frozen=True)
class PlaneMap:
    """A pair (f, g) in x, y with declared degree caps d1 >= deg f, d2 >= deg g."""
    f: Poly
    g: Poly
    d1: int
    d2: int

    def __post_init__(self):
        check_same_ring(self.f, self.g)
        if variable_names(self.f.ring) != ('x', 'y'):
            raise VariableMismatch(f"A plane map lives in x, y, not {variable_names(self.f.ring)}")
        if self.d1 < 1 or self.d2 < 1:
            raise DegreeError(f"Degree caps must be at least 1, got ({self.d1}, {self.d2})")
        if total_degree(self.f) > self.d1:
            raise DegreeError(f"deg f = {total_degree(self.f)} exceeds d1 = {self.d1}")
        if total_degree(self.g) > self.d2:
            raise DegreeError(f"deg g = {total_degree(self.g)} exceeds d2 = {self.d2}")

    @classmethod
    def parse(cls, f_text: str, g_text: str, d1: Optional[int] = None,
              d2: Optional[int] = None) -> 'PlaneMap':
        """Build a map from text; missing caps default to the actual degrees."""
        f = parse_poly(f_text, XY)
        g = parse_poly(g_text, XY)
        if d1 is None:
            d1 = max(total_degree(f), 1)
        if d2 is None:
            d2 = max(total_degree(g), 1)
        return cls(f, g, d1, d2)

    @property
    def ring(self):
        return self.f.ring

    def swapped(self) -> 'PlaneMap':
        return PlaneMap(self.g, self.f, self.d2, self.d1)

    def compose_target(self, matrix: Sequence[Sequence]) -> 'PlaneMap':
        """T o F for an invertible 2x2 rational matrix T."""
        (a, b), (c, d) = [[as_rat(v) for v in row] for row in matrix]
        if a * d - b * c == 0:
            raise ValueError("Target matrix is singular")
        cap = max(self.d1, self.d2)
        return PlaneMap(self.f * a + self.g * b, self.f * c + self.g * d, cap, cap)

    def precompose(self, matrix: Sequence[Sequence], shift: Sequence = (0, 0)) -> 'PlaneMap':
        """F o A for the source affine map (x, y) -> matrix*(x, y) + shift."""
        (a, b), (c, d) = [[as_rat(v) for v in row] for row in matrix]
        if a * d - b * c == 0:
            raise ValueError("Source matrix is singular")
        x, y = self.ring.gens
        images = [x * a + y * b + as_rat(shift[0]), x * c + y * d + as_rat(shift[1])]
        return PlaneMap(precompose(self.f, images), precompose(self.g, images), self.d1, self.d2)

    def translated(self, shift: Sequence) -> 'PlaneMap':
        return self.precompose(((1, 0), (0, 1)), shift)

    def sheared(self, s) -> 'PlaneMap':
        """F o (x, y + s*x)."""
        return self.precompose(((1, 0), (s, 1)))

    def to_field(self, mode: FieldMode) -> 'PlaneMap':
        if not mode.is_prime:
            return self
        return PlaneMap(to_field(self.f, mode), to_field(self.g, mode), self.d1, self.d2)

    def format(self) -> dict:
        return {'f': format_poly(self.f), 'g': format_poly(self.g)}


@dataclass(frozen=True)
class JetTriple:
    J: Poly
    J11: Poly
    J12: Poly

    def check_bounds(self, d1: int, d2: int):
        bounds = (
            ('J', self.J, d1 + d2 - 2),
            ('J11', self.J11, 2 * d1 + d2 - 4),
            ('J12', self.J12, d1 + 2 * d2 - 4),
        )
        for name, poly, bound in bounds:
            if total_degree(poly) > bound:
                raise DegreeError(f"deg {name} = {total_degree(poly)} exceeds {bound}")


def jacobian_determinant(p: Poly, q: Poly) -> Poly:
    """p_x q_y - p_y q_x."""
    check_same_ring(p, q)
    return partial(p, 'x') * partial(q, 'y') - partial(p, 'y') * partial(q, 'x')


def second_order_table(F: PlaneMap) -> dict:
    """First and second partials of f and g, keyed like 'f_xy'."""
    table = {}
    for name, p in (('f', F.f), ('g', F.g)):
        px, py = partial(p, 'x'), partial(p, 'y')
        table[f'{name}_x'] = px
        table[f'{name}_y'] = py
        table[f'{name}_xx'] = partial(px, 'x')
        table[f'{name}_xy'] = partial(px, 'y')
        table[f'{name}_yy'] = partial(py, 'y')
    return table


def _brackets(t: dict):
    a = t['f_xx'] * t['g_y'] + t['f_x'] * t['g_xy'] - t['f_xy'] * t['g_x'] - t['f_y'] * t['g_xx']
    b = t['f_xy'] * t['g_y'] + t['f_x'] * t['g_yy'] - t['f_yy'] * t['g_x'] - t['f_y'] * t['g_xy']
    return a, b


def jacobian_curve(F: PlaneMap) -> Poly:
    return jacobian_determinant(F.f, F.g)


def j11_curve(F: PlaneMap) -> Poly:
    t = second_order_table(F)
    a, b = _brackets(t)
    return a * t['f_y'] - b * t['f_x']


def j12_curve(F: PlaneMap) -> Poly:
    t = second_order_table(F)
    a, b = _brackets(t)
    return a * t['g_y'] - b * t['g_x']


def jet_triple(F: PlaneMap) -> JetTriple:
    t = second_order_table(F)
    a, b = _brackets(t)
    triple = JetTriple(
        J=t['f_x'] * t['g_y'] - t['f_y'] * t['g_x'],
        J11=a * t['f_y'] - b * t['f_x'],
        J12=a * t['g_y'] - b * t['g_x'],
    )
    triple.check_bounds(F.d1, F.d2)
    return triple
