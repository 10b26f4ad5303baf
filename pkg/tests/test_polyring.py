"""
Polynomial rings: text grammar, canonical printing, field modes and the
helpers on binary forms (top forms, resultants, square-freeness).
"""
import pytest

from planemaps.errors import DegreeError, FieldModeError, ParseError, VariableMismatch
from planemaps.polyring import (
    XY, XYZ, BinaryForm, FieldMode, arith, coprime, dehomogenize, evaluate_at, format_poly, gcd_poly,
    homogenize, parse_poly, parse_rational, partial, precompose, rat, restrict, resultant,
    squarefree, to_field, top_form, total_degree,
)
from planemaps.sampling import SplitMix64, random_poly

x, y = XY.gens

# text -> canonical text
CANONICAL = {
    'x^2 - 3/2*x*y + 1': 'x^2 - 3/2*x*y + 1',
    '-y + x': 'x - y',
    '1 + y^2 + x*y + x^2': 'x^2 + x*y + y^2 + 1',
    '2*x*x*y': '2*x^2*y',
    '-x^3 + 4/6*y': '-x^3 + 2/3*y',
    'x - x': '0',
    '0': '0',
    '7': '7',
}

# text -> (line, column) of the reported error
BAD_TEXT = {
    'x + * y': (1, 5),
    'x^0': (1, 3),
    '1/0*x': (1, 3),
    'w + x': (1, 1),
    'z': (1, 1),
    'x +': (1, 4),
    '': (1, 1),
}


class TestGrammar:
    """Parsing and printing follow the same grammar."""

    @pytest.mark.parametrize('text', CANONICAL.keys())
    def test_canonical_form(self, text):
        result = format_poly(parse_poly(text))
        assert result == CANONICAL[text], \
            f"{text!r}: Expected {CANONICAL[text]!r}, got {result!r}"

    @pytest.mark.parametrize('text', CANONICAL.keys())
    def test_printed_text_parses_back(self, text):
        p = parse_poly(text)
        assert parse_poly(format_poly(p)) == p, f"{text!r}: printed form does not parse back"

    @pytest.mark.parametrize('text', BAD_TEXT.keys())
    def test_error_position(self, text):
        with pytest.raises(ParseError) as info:
            parse_poly(text)
        line, column = BAD_TEXT[text]
        assert (info.value.line, info.value.column) == (line, column), \
            f"{text!r}: Expected error at {(line, column)}, got {(info.value.line, info.value.column)}"

    def test_offset_shifts_columns(self):
        with pytest.raises(ParseError) as info:
            parse_poly('x + $', line=3, offset=4)
        assert (info.value.line, info.value.column) == (3, 9)
        assert str(info.value).startswith('line 3, column 9:')

    def test_third_variable_in_xyz(self):
        p = parse_poly('x*z + y^2', XYZ)
        assert total_degree(p) == 2
        assert format_poly(p) == 'y^2 + x*z'


class TestArithmetic:
    """Ring operations, derivatives and degrees."""

    def test_arith_and_partials(self):
        p = parse_poly('x^3 + x*y^2 - y')
        q = parse_poly('x - 1')
        assert arith(p, q, 'mul') == p * q
        assert arith(p, q, 'sub') == p - q
        assert partial(p, 'x') == parse_poly('3*x^2 + y^2')
        assert partial(p, 'y') == parse_poly('2*x*y - 1')

    def test_unknown_operation(self):
        with pytest.raises(ValueError):
            arith(x, y, 'div')

    def test_mismatched_rings(self):
        with pytest.raises(VariableMismatch):
            arith(x, XYZ.gens[0], 'add')

    def test_total_degree_of_zero(self):
        assert total_degree(XY.zero) == -1
        assert total_degree(XY.one) == 0

    def test_precompose_is_simultaneous(self):
        p = parse_poly('x^2 - y')
        swapped = precompose(p, [y, x])
        assert swapped == parse_poly('y^2 - x')


class TestHomogenization:
    """Moving between the affine plane and the projective plane."""

    def test_homogenize(self):
        p = parse_poly('x^2 + y + 1')
        assert homogenize(p, 2) == parse_poly('x^2 + y*z + z^2', XYZ)
        assert homogenize(p, 3) == parse_poly('x^2*z + y*z^2 + z^3', XYZ)

    def test_homogenize_below_degree(self):
        with pytest.raises(DegreeError):
            homogenize(parse_poly('x^3'), 2)

    def test_dehomogenize_and_restrict(self):
        p = parse_poly('x^2 + x*y + 3*y - 2')
        assert dehomogenize(homogenize(p, 3)) == p
        assert restrict(homogenize(p, 2)) == parse_poly('x^2 + x*y')
        assert not restrict(homogenize(p, 3))

    def test_top_form(self):
        top = top_form(parse_poly('x^2 + x*y + x - 5'))
        assert top.degree == 2
        assert top.poly == parse_poly('x^2 + x*y')

    def test_top_form_of_zero(self):
        with pytest.raises(DegreeError):
            top_form(XY.zero)

    def test_binary_form_must_be_homogeneous(self):
        with pytest.raises(DegreeError):
            BinaryForm(parse_poly('x^2 + y'), 2)


class TestResultantsAndGcd:
    """Resultants, gcds and square-free binary forms."""

    def test_linear_resultant(self):
        r = resultant(parse_poly('x - y'), parse_poly('x + y'), 'x')
        assert r == parse_poly('2*y'), f"Expected 2*y, got {format_poly(r)}"

    def test_constant_argument(self):
        assert resultant(y, XY.one, 'y') == XY.one
        assert resultant(XY(3), parse_poly('y^2 + x'), 'y') == XY(9)

    def test_resultant_detects_common_root(self):
        r = resultant(parse_poly('x^2 - 1'), parse_poly('x - 1'), 'x')
        assert not r

    @pytest.mark.parametrize('p,q', [(XY.zero, x), (XY(2), XY(3))])
    def test_degenerate_resultant(self, p, q):
        with pytest.raises(DegreeError):
            resultant(p, q, 'x')

    def test_gcd_is_normalized(self):
        g = gcd_poly(parse_poly('2*x^2 - 2*y^2'), parse_poly('-4*x - 4*y'))
        assert g == parse_poly('x + y')

    @pytest.mark.parametrize('text,expected', [
        ('x^2 - y^2', True),
        ('x^2', False),
        ('x^3 - x*y^2', True),
        ('x^2*y - 2*x*y^2 + y^3', False),
    ])
    def test_squarefree(self, text, expected):
        p = parse_poly(text)
        result = squarefree(BinaryForm(p, total_degree(p)))
        assert result == expected, f"{text}: Expected {expected}, got {result}"

    def test_coprime(self):
        assert coprime(parse_poly('x^2 + y^2'), parse_poly('x*y'))
        assert not coprime(parse_poly('x^2 - y^2'), parse_poly('x^2 + x*y'))


class TestFieldModes:
    """Rational and prime-field modes."""

    @pytest.mark.parametrize('text,label', [
        ('rational', 'rational'),
        ('prime:7', 'prime:7'),
        ('prime:1000003', 'prime:1000003'),
    ])
    def test_parse(self, text, label):
        assert FieldMode.parse(text).label == label

    @pytest.mark.parametrize('text', ['prime:8', 'prime:abc', 'real', 'prime:9223372036854775837'])
    def test_rejected(self, text):
        with pytest.raises(FieldModeError):
            FieldMode.parse(text)

    def test_to_field_inverts_denominators(self):
        mode = FieldMode.parse('prime:7')
        image = to_field(parse_poly('1/2*x + 3'), mode)
        assert image == image.ring.from_dict({(1, 0): 4, (0, 0): 3})

    def test_unlucky_prime(self):
        with pytest.raises(FieldModeError):
            to_field(parse_poly('1/7*x'), FieldMode.parse('prime:7'))

    def test_rational_mode_is_identity(self):
        p = parse_poly('1/2*x')
        assert to_field(p, FieldMode()) is p
        assert p == XY.from_dict({(1, 0): rat(1, 2)})


def samples(seed, degrees):
    """Dense random polynomials, one per requested degree."""
    rng = SplitMix64.stream(seed, 'map')
    return [random_poly(rng, d, 6) for d in degrees]


class TestRingProperties:
    """Ring identities on seeded dense polynomials."""

    @pytest.mark.parametrize('seed', range(8))
    def test_ring_axioms(self, seed):
        a, b, c = samples(seed, (2, 3, 1))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert (a + b) * c == a * c + b * c
        assert arith(a, b, 'sub') + b == a
        assert not a - a

    @pytest.mark.parametrize('seed', range(8))
    def test_leibniz_rule(self, seed):
        a, b = samples(seed, (3, 2))
        for v in ('x', 'y'):
            assert partial(a * b, v) == partial(a, v) * b + a * partial(b, v)

    @pytest.mark.parametrize('seed', range(8))
    def test_evaluation_is_a_homomorphism(self, seed):
        a, b = samples(seed, (3, 2))
        point = (rat(1, 2), rat(-3))
        assert evaluate_at(a * b, point) == evaluate_at(a, point) * evaluate_at(b, point)
        assert evaluate_at(a + b, point) == evaluate_at(a, point) + evaluate_at(b, point)

    @pytest.mark.parametrize('seed', range(8))
    def test_resultant_vanishes_on_common_factor(self, seed):
        a, b, c = samples(seed, (2, 1, 1))
        r = resultant(a * c, b * c, 'x')
        assert not r
        assert gcd_poly(a * c, b * c).degree(x) > 0

    @pytest.mark.parametrize('seed', range(8))
    def test_resultant_nonzero_when_coprime(self, seed):
        a, b = samples(seed, (2, 3))
        r = resultant(a, b, 'x')
        assert total_degree(gcd_poly(a, b)) == 0
        assert r, f"seed {seed}: Res_x vanished on coprime polynomials"


class TestRationals:
    """Rational literals outside the polynomial grammar."""

    @pytest.mark.parametrize('text,expected', [
        ('3', rat(3)),
        ('-1/2', rat(-1, 2)),
        ('4/6', rat(2, 3)),
        (' 0 ', rat(0)),
    ])
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize('text', ['1/0', 'a', '1/2/3', '', '1.5'])
    def test_rejected(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)
