"""
Genericity checks on engineered maps: each map breaks a known hypothesis,
and the linear map passes everything.
"""
import pytest

from planemaps.errors import BudgetExceeded
from planemaps.genericity import (
    CHECKS, GENERIC_LABEL, VACUOUS, GenericityReport, Verdict, chart_shear,
    check_grad_at_infinity, check_grad_j12, check_grad_transversal, check_infinity_nonvanishing,
    check_j_infinity, check_j_j11_transversal, check_mixed_vanishing, check_row, genericity_report,
    guarded,
)
from planemaps.jets import PlaneMap
from planemaps.polyring import XY, BinaryForm, parse_poly

# name -> (f, g, d1, d2)
ENGINEERED = {
    'linear': ('x', 'y', 1, 1),
    'fermat_gradient': ('x^3 + y^3', 'x^2 + x*y + 2*y^2 + x + y', 3, 2),
    'cubic_fold': ('x', 'y^3', 1, 3),
    'row_condition': ('x^2 + 2*y^2', 'x*y + x + y', 2, 2),
    'infinity_condition': ('x^2 + y^2 + y', 'x + 2*y + 1', 2, 1),
}

# name -> exactly the checks that fail.
# A degenerate critical point of f at the origin also breaks J12 and J11 there,
# and a repeated root of top J blocks both conditions read at infinity.
EXPECTED_FAILURES = {
    'fermat_gradient': ['gradTransversal', 'gradDisjointJ12', 'jJ11Transversal'],
    'cubic_fold': ['jTransversalInfinity', 'jJ11DisjointInfinity', 'jJ11Transversal',
                   'infinityNonvanishing', 'rowCondition'],
    'row_condition': ['rowCondition'],
    'infinity_condition': ['infinityNonvanishing'],
}


@pytest.fixture(scope='module')
def maps():
    """Engineered maps keyed by name."""
    return {name: PlaneMap.parse(f, g, d1, d2) for name, (f, g, d1, d2) in ENGINEERED.items()}


@pytest.fixture(scope='module')
def reports(maps):
    """Genericity reports of the engineered maps."""
    return {name: genericity_report(F, seed=0) for name, F in maps.items()}


class TestReports:
    """Whole reports over the engineered corpus."""

    def test_linear_map_is_generic(self, reports):
        report = reports['linear']
        assert report.is_generic, f"linear: unexpected failures {report.failing()}"
        assert report.label == GENERIC_LABEL
        assert report.shear == '0'

    @pytest.mark.parametrize('name', EXPECTED_FAILURES.keys())
    def test_expected_failures(self, reports, name):
        failing = reports[name].failing()
        assert failing == EXPECTED_FAILURES[name], \
            f"{name}: Expected {EXPECTED_FAILURES[name]} to fail, got {failing}"
        assert not reports[name].is_generic

    @pytest.mark.parametrize('name', ENGINEERED.keys())
    def test_every_check_reported(self, reports, name):
        verdicts = reports[name].verdicts()
        assert list(verdicts) == [key for key, _ in CHECKS]
        assert set(verdicts.values()) <= {'pass', 'fail', 'budget'}

    # checks that only read the affine curves or the top forms
    AFFINE_CHECKS = ['gradTransversal', 'gradDisjointAtInfinity', 'jTransversalInfinity',
                     'jJ11DisjointInfinity', 'noMixedVanishing', 'gradDisjointJ12', 'jJ11Transversal']

    @pytest.mark.parametrize('name', ENGINEERED.keys())
    def test_translation_keeps_verdicts(self, maps, reports, name):
        moved = genericity_report(maps[name].translated((2, -1)), seed=0).verdicts()
        original = reports[name].verdicts()
        for key in self.AFFINE_CHECKS:
            assert moved[key] == original[key], \
                f"{name}: {key} is {moved[key]} after translation, was {original[key]}"

    def test_from_dicts(self, reports):
        report = reports['cubic_fold']
        rebuilt = GenericityReport.from_dicts(report.verdicts(), report.notes(), report.shear,
                                              report.seed, report.label)
        assert rebuilt == report


class TestGradientChecks:
    """Hypotheses on f_x and f_y."""

    def test_fermat_meets_non_transversally(self, maps):
        F = maps['fermat_gradient']
        assert check_grad_at_infinity(F).passed
        result = check_grad_transversal(F)
        assert result.verdict == Verdict.FAIL
        assert 'non-transversally' in result.note

    def test_vanishing_partial(self):
        F = PlaneMap.parse('y^3', 'x')
        assert not check_grad_at_infinity(F).passed

    def test_degree_one_is_vacuous(self, maps):
        result = check_grad_transversal(maps['linear'])
        assert result.passed and result.note == VACUOUS

    def test_mixed_vanishing(self, maps):
        assert not check_mixed_vanishing(PlaneMap.parse('x^2 + y^2', 'y')).passed
        assert check_mixed_vanishing(maps['linear']).passed

    def test_grad_j12(self, maps):
        assert not check_grad_j12(PlaneMap.parse('y^3', 'x')).passed
        assert check_grad_j12(maps['linear']).passed


class TestCriticalCurveChecks:
    """Hypotheses on J and J11."""

    def test_cubic_fold(self, maps):
        disjoint, transversal = check_j_infinity(maps['cubic_fold'])
        assert not disjoint.passed
        assert not transversal.passed
        assert 'repeated root' in transversal.note
        assert not check_j_j11_transversal(maps['cubic_fold']).passed

    def test_constant_jacobian_is_vacuous(self, maps):
        disjoint, transversal = check_j_infinity(maps['linear'])
        assert disjoint.note == VACUOUS and transversal.note == VACUOUS

    def test_constant_jacobian_below_expected_degree(self):
        # J = 1 while the degree caps ask for a critical line
        F = PlaneMap.parse('x', 'y + x^2', 1, 2)
        disjoint, transversal = check_j_infinity(F)
        assert disjoint.note == VACUOUS
        assert transversal.verdict == Verdict.FAIL
        assert transversal.note == 'deg J = 0, expected 1'
        assert 'jTransversalInfinity' in genericity_report(F).failing()

    def test_zero_jacobian(self):
        F = PlaneMap.parse('x + y', 'x + y')
        disjoint, transversal = check_j_infinity(F)
        assert not disjoint.passed and not transversal.passed
        assert not check_j_j11_transversal(F).passed


class TestInfinityChecks:
    """Conditions at the points at infinity of the critical curve."""

    def test_mixed_condition_at_infinity(self, maps):
        F = maps['infinity_condition']
        result = check_infinity_nonvanishing(F)
        assert not result.passed
        assert result.note.startswith('d2*c = d1*d'), f"infinity_condition: got note {result.note!r}"
        assert check_row(F).passed

    def test_f_vanishes_at_infinity(self):
        F = PlaneMap.parse('x^3 + x*y^2', 'x*y', 3, 2)
        result = check_infinity_nonvanishing(F)
        assert not result.passed
        assert result.note.startswith('f vanishes')

    def test_row_condition(self, maps):
        result = check_row(maps['row_condition'])
        assert not result.passed
        assert 'same value' in result.note

    def test_chart_shear_untouched(self):
        assert chart_shear(BinaryForm(parse_poly('x^2 - y^2'), 2), seed=3) == 0

    def test_chart_shear_moves_root(self):
        top = BinaryForm(parse_poly('x*y - 2*y^2'), 2)
        s = chart_shear(top, seed=3)
        assert s != 0
        assert top.poly(1, s) != 0
        assert chart_shear(top, seed=3) == s


class TestBudgetVerdict:
    """A check that runs out of budget becomes a budget verdict."""

    def test_guarded(self):
        def exhausted():
            raise BudgetExceeded(7)

        result = guarded(exhausted)
        assert result.verdict == Verdict.BUDGET
        assert not result.passed
        assert '7' in result.note

    def test_guarded_passes_through(self):
        assert guarded(check_grad_at_infinity, PlaneMap(XY.gens[0], XY.gens[1], 1, 1)).passed
