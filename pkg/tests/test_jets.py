"""
Jet curves of plane maps: J, J11 and J12, checked against sympy's expression
layer as an independent differentiation path, plus hand-computed cases.
"""
import pytest
import sympy

from planemaps.errors import DegreeError, VariableMismatch
from planemaps.jets import PlaneMap, j11_curve, j12_curve, jacobian_curve, jacobian_determinant, jet_triple
from planemaps.polyring import XY, XYZ, parse_poly, total_degree
from planemaps.sampling import random_map

X, Y = sympy.symbols('x y')

MAPS = {
    'fold': ('x', 'y^2'),
    'cusp': ('x', 'y^3 + x*y'),
    'generic_2_2': ('-6*x^2 + x*y - 8*y^2 + 2*x + 9*y + 4',
                    '5*x^2 - 3*x*y - 4*y^2 - 2*x - 5*y - 5'),
    'cubic_quadric': ('x^3 - 2*x*y^2 + 3*y - 1', 'x^2 + 1/2*y^2 - x*y'),
    'quartic': ('x^4 + y^4 - x^2*y', 'x*y^3 - x'),
}

# (f, g) -> (J, J11, J12), worked out by hand
HAND_COMPUTED = {
    ('x', 'y^3'): ('3*y^2', '-6*y', '0'),
    ('x', 'y^4 + x*y'): ('4*y^3 + x', '-12*y^2', 'x - 8*y^3'),
    ('x', 'y'): ('1', '0', '0'),
}


def oracle(f_text, g_text):
    """J, J11 and J12 from sympy expressions."""
    f = sympy.sympify(f_text.replace('^', '**'))
    g = sympy.sympify(g_text.replace('^', '**'))
    fx, fy, gx, gy = f.diff(X), f.diff(Y), g.diff(X), g.diff(Y)
    J = sympy.expand(fx * gy - fy * gx)
    A = J.diff(X)
    B = J.diff(Y)
    J11 = sympy.expand(A * fy - B * fx)
    J12 = sympy.expand(A * gy - B * gx)
    return tuple(XY.from_expr(e) if e != 0 else XY.zero for e in (J, J11, J12))


@pytest.fixture(scope='module')
def triples():
    """Jet triples of every map in MAPS."""
    return {name: jet_triple(PlaneMap.parse(*texts)) for name, texts in MAPS.items()}


class TestJetOracle:
    """The brackets agree with differentiating J directly."""

    @pytest.mark.parametrize('name', MAPS.keys())
    def test_against_sympy(self, triples, name):
        expected = oracle(*MAPS[name])
        got = triples[name]
        for label, e, g in zip(('J', 'J11', 'J12'), expected, (got.J, got.J11, got.J12)):
            assert g == e, f"{name}: {label} differs from the sympy oracle"

    @pytest.mark.parametrize('name', MAPS.keys())
    def test_degree_bounds(self, triples, name):
        F = PlaneMap.parse(*MAPS[name])
        t = triples[name]
        assert total_degree(t.J) <= F.d1 + F.d2 - 2
        assert total_degree(t.J11) <= 2 * F.d1 + F.d2 - 4
        assert total_degree(t.J12) <= F.d1 + 2 * F.d2 - 4


class TestHandComputed:
    """Small maps with jets computed by hand."""

    @pytest.mark.parametrize('texts', HAND_COMPUTED.keys())
    def test_triple(self, texts):
        t = jet_triple(PlaneMap.parse(*texts))
        J, J11, J12 = (parse_poly(s) for s in HAND_COMPUTED[texts])
        assert t.J == J, f"{texts}: Expected J = {J}, got {t.J}"
        assert t.J11 == J11, f"{texts}: Expected J11 = {J11}, got {t.J11}"
        assert t.J12 == J12, f"{texts}: Expected J12 = {J12}, got {t.J12}"

    def test_detjac(self):
        J = parse_poly('4*y^3 + x')
        J11 = parse_poly('-12*y^2')
        assert jacobian_determinant(J, J11) == parse_poly('-24*y')

    @pytest.mark.parametrize('texts', HAND_COMPUTED.keys())
    def test_single_curves(self, texts):
        F = PlaneMap.parse(*texts)
        J, J11, J12 = (parse_poly(s) for s in HAND_COMPUTED[texts])
        assert jacobian_curve(F) == J
        assert j11_curve(F) == J11
        assert j12_curve(F) == J12


class TestJacobianProperties:
    """Identities of the critical curve on seeded maps."""

    @pytest.mark.parametrize('seed', range(5))
    @pytest.mark.parametrize('degrees', [(2, 2), (3, 2), (2, 3), (4, 3)])
    def test_swap_negates_j(self, degrees, seed):
        F = random_map(*degrees, seed=seed)
        assert jacobian_curve(F.swapped()) == -jacobian_curve(F)

    @pytest.mark.parametrize('seed', range(5))
    @pytest.mark.parametrize('degrees', [(2, 2), (3, 2), (2, 3), (4, 3)])
    def test_j_has_full_degree(self, degrees, seed):
        F = random_map(*degrees, seed=seed)
        expected = F.d1 + F.d2 - 2
        got = total_degree(jacobian_curve(F))
        assert got == expected, f"{degrees} seed {seed}: Expected deg J = {expected}, got {got}"


class TestPlaneMap:
    """Validation and transformations of plane maps."""

    def test_caps_default_to_degrees(self):
        F = PlaneMap.parse('x^2 + y', 'y')
        assert (F.d1, F.d2) == (2, 1)

    def test_constant_component_gets_cap_one(self):
        F = PlaneMap.parse('3', 'x')
        assert (F.d1, F.d2) == (1, 1)

    def test_degree_above_cap(self):
        with pytest.raises(DegreeError):
            PlaneMap.parse('x^3', 'y', d1=2)

    def test_caps_must_be_positive(self):
        with pytest.raises(DegreeError):
            PlaneMap(XY.gens[0], XY.gens[1], 0, 1)

    def test_wrong_variables(self):
        x, y, z = XYZ.gens
        with pytest.raises(VariableMismatch):
            PlaneMap(x, z, 1, 1)

    def test_swapped(self):
        F = PlaneMap.parse('x^3', 'y', d1=3, d2=2)
        G = F.swapped()
        assert (G.f, G.g, G.d1, G.d2) == (F.g, F.f, 2, 3)

    def test_compose_target(self):
        F = PlaneMap.parse('x^2', 'y')
        G = F.compose_target(((1, 1), (0, 2)))
        assert G.f == parse_poly('x^2 + y')
        assert G.g == parse_poly('2*y')
        assert (G.d1, G.d2) == (2, 2)
        # J scales by det T
        assert jet_triple(G).J == jet_triple(F).J * 2

    def test_singular_target(self):
        with pytest.raises(ValueError):
            PlaneMap.parse('x', 'y').compose_target(((1, 2), (2, 4)))

    def test_translated_and_sheared(self):
        F = PlaneMap.parse('x^2', 'y^2')
        assert F.translated((1, -1)).f == parse_poly('x^2 + 2*x + 1')
        assert F.translated((1, -1)).g == parse_poly('y^2 - 2*y + 1')
        assert F.sheared(2).g == parse_poly('y^2 + 4*x*y + 4*x^2')

    def test_format(self):
        F = PlaneMap.parse('y - x', '2*x^2')
        assert F.format() == {'f': '-x + y', 'g': '2*x^2'}
