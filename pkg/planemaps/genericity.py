"""
Effective genericity tests for a plane map F = (f, g).

Each test turns one genericity hypothesis into an exact polynomial
condition: a constant gcd of binary forms, a quotient dimension, the
membership 1 in (P, Q, detJac(P, Q)) for transversal intersections, or a
square-free resultant. The conjunction is reported as
"paper-generic (effective)".
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyRing

from planemaps.errors import BudgetExceeded, InternalDisagreement
from planemaps.ideals import contains_one_of, quotient_of
from planemaps.jets import PlaneMap, j12_curve, jacobian_curve, jacobian_determinant, jet_triple
from planemaps.polyring import (
    XYZ, BinaryForm, coprime, evaluate_at, format_rational, gcd_poly, homogenize, partial, rat,
    restrict, resultant, squarefree, top_form, total_degree,
)
from planemaps.sampling import SplitMix64

GENERIC_LABEL = 'paper-generic (effective)'
VACUOUS = 'vacuous'
SHEAR_BOUND = 10
SHEAR_ATTEMPTS = 1000


class Verdict(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    BUDGET = 'budget'


@dataclass(frozen=True)
class CheckResult:
    verdict: Verdict
    note: str = ''

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS


def passed(note: str = '') -> CheckResult:
    return CheckResult(Verdict.PASS, note)


def failed(note: str) -> CheckResult:
    return CheckResult(Verdict.FAIL, note)


def guarded(check, *args, **kwargs) -> CheckResult:
    """Run a check, recording an exhausted budget as a verdict."""
    try:
        return check(*args, **kwargs)
    except BudgetExceeded as e:
        return CheckResult(Verdict.BUDGET, str(e))


# ---------------------------------------------------------------------------
# Gradient of f
# ---------------------------------------------------------------------------

def check_grad_at_infinity(F: PlaneMap) -> CheckResult:
    """Top forms of f_x and f_y share no root: the gradient curves miss the line at infinity together."""
    if F.d1 == 1:
        return passed(VACUOUS)
    fx, fy = partial(F.f, 'x'), partial(F.f, 'y')
    if not fx or not fy:
        return failed("a partial derivative of f vanishes identically")
    if not coprime(top_form(fx).poly, top_form(fy).poly):
        return failed("f_x and f_y meet at infinity")
    return passed()


def check_grad_transversal(F: PlaneMap, budget: Optional[int] = None) -> CheckResult:
    if F.d1 == 1:
        return passed(VACUOUS)
    at_infinity = check_grad_at_infinity(F)
    if not at_infinity.passed:
        return at_infinity
    fx, fy = partial(F.f, 'x'), partial(F.f, 'y')
    info = quotient_of(fx, fy, budget=budget)
    expected = (F.d1 - 1) ** 2
    if info.dimension != expected:
        return failed(f"dim C[x,y]/(f_x,f_y) = {info.dimension}, expected {expected}")
    if not contains_one_of(fx, fy, jacobian_determinant(fx, fy), budget=budget):
        return failed("f_x and f_y meet non-transversally")
    return passed()


def check_mixed_vanishing(F: PlaneMap, budget: Optional[int] = None) -> CheckResult:
    fx, fy = partial(F.f, 'x'), partial(F.f, 'y')
    gx, gy = partial(F.g, 'x'), partial(F.g, 'y')
    if not contains_one_of(fx, fy, gx, budget=budget):
        return failed("f_x = f_y = g_x = 0 has a solution")
    if not contains_one_of(fx, fy, gy, budget=budget):
        return failed("f_x = f_y = g_y = 0 has a solution")
    return passed()


def check_grad_j12(F: PlaneMap, budget: Optional[int] = None) -> CheckResult:
    fx, fy = partial(F.f, 'x'), partial(F.f, 'y')
    if not contains_one_of(fx, fy, j12_curve(F), budget=budget):
        return failed("f_x = f_y = J12 = 0 has a solution")
    return passed()


# ---------------------------------------------------------------------------
# Critical curve and J11
# ---------------------------------------------------------------------------

def check_j_infinity(F: PlaneMap) -> Tuple[CheckResult, CheckResult]:
    """(J and J11 disjoint at infinity, J transversal to the line at infinity)."""
    jets = jet_triple(F)
    J, J11 = jets.J, jets.J11
    if not J:
        note = "zero Jacobian"
        return failed(note), failed(note)
    D = F.d1 + F.d2 - 2
    if J.is_ground:
        # no points at infinity to meet J11 at; degree D > 0 is still owed
        if D == 0:
            return passed(VACUOUS), passed(VACUOUS)
        return passed(VACUOUS), failed(f"deg J = 0, expected {D}")

    top_j = top_form(J)
    if not J11:
        disjoint = failed("J11 vanishes identically")
    elif coprime(top_j.poly, top_form(J11).poly):
        disjoint = passed()
    else:
        disjoint = failed("J and J11 meet at infinity")

    if top_j.degree != D:
        transversal = failed(f"deg J = {top_j.degree}, expected {D}")
    elif not squarefree(top_j):
        transversal = failed("top form of J has a repeated root")
    else:
        transversal = passed()
    return disjoint, transversal


def check_j_j11_transversal(F: PlaneMap, budget: Optional[int] = None) -> CheckResult:
    jets = jet_triple(F)
    J, J11 = jets.J, jets.J11
    if not J:
        return failed("zero Jacobian")
    if J.is_ground:
        return passed(VACUOUS)
    if not J11:
        return failed("J11 vanishes identically")
    if total_degree(gcd_poly(J, J11)) > 0:
        return failed("J and J11 share a component")
    if not contains_one_of(J, J11, jacobian_determinant(J, J11), budget=budget):
        return failed("J and J11 meet non-transversally")
    return passed()


# ---------------------------------------------------------------------------
# Points at infinity of the critical curve
# ---------------------------------------------------------------------------

def ordered(F: PlaneMap) -> PlaneMap:
    return F if F.d1 >= F.d2 else F.swapped()


def chart_shear(top_j: BinaryForm, seed: int):
    """s with top_j(1, s) != 0; s = 0 when (1:0) is already not a root."""
    if evaluate_at(top_j.poly, (1, 0)):
        return rat(0)
    rng = SplitMix64.stream(seed, 'shear')
    for _ in range(SHEAR_ATTEMPTS):
        s = rat(rng.nonzero(SHEAR_BOUND))
        if evaluate_at(top_j.poly, (1, s)):
            return s
    raise InternalDisagreement("No shear found for the chart at infinity")


@dataclass(frozen=True)
class InfinityForms:
    """Binary forms on the line at infinity, after the chart shear."""
    shear: object
    top_j: object
    top_f: object
    top_g: object
    c_form: object
    d_form: object
    mixed_form: object


def infinity_forms(F: PlaneMap, seed: int) -> InfinityForms:
    F = ordered(F)
    s = chart_shear(top_form(jacobian_curve(F)), seed)
    G = F.sheared(s)
    J = jacobian_curve(G)
    ft = homogenize(G.f, G.d1)
    gt = homogenize(G.g, G.d2)
    jt = homogenize(J, total_degree(J))
    x, y, z = XYZ.gens
    c_bracket = ft.diff(z) * jt.diff(x) - ft.diff(x) * jt.diff(z)
    d_bracket = gt.diff(z) * jt.diff(x) - gt.diff(x) * jt.diff(z)
    mixed = gt * c_bracket * G.d2 - ft * d_bracket * G.d1
    return InfinityForms(
        shear=s,
        top_j=restrict(jt),
        top_f=restrict(ft),
        top_g=restrict(gt),
        c_form=restrict(c_bracket),
        d_form=restrict(d_bracket),
        mixed_form=restrict(mixed),
    )


INFINITY_CONDITIONS = (
    ('top_f', "f vanishes at a point at infinity of C(F)"),
    ('top_g', "g vanishes at a point at infinity of C(F)"),
    ('c_form', "c = 0 at a point at infinity of C(F)"),
    ('d_form', "d = 0 at a point at infinity of C(F)"),
    ('mixed_form', "d2*c = d1*d at a point at infinity of C(F)"),
)


def _infinity_precondition(F: PlaneMap) -> Optional[CheckResult]:
    J = jacobian_curve(F)
    if not J:
        return failed("zero Jacobian")
    if J.is_ground:
        return passed(VACUOUS)
    if not squarefree(top_form(J)):
        return failed("top form of J has a repeated root")
    return None


def check_infinity_nonvanishing(F: PlaneMap, seed: int = 0) -> CheckResult:
    early = _infinity_precondition(F)
    if early is not None:
        return early
    forms = infinity_forms(F, seed)
    for name, message in INFINITY_CONDITIONS:
        if not coprime(getattr(forms, name), forms.top_j):
            return failed(message)
    return passed()


VR = PolyRing([Symbol('x'), Symbol('v')], QQ, grevlex)


def row_resultant(F: PlaneMap, seed: int = 0):
    """R(v) = Res_x(topJ(x,1), v*topf(x,1)^d2 - topg(x,1)^d1), with the chart shear applied."""
    F = ordered(F)
    forms = infinity_forms(F, seed)
    x, v = VR.gens

    def chart(form):
        # form(x, 1) placed in the (x, v) ring
        return VR.from_dict({(i, 0): c for (i, j), c in form.items()})

    tj, tf, tg = chart(forms.top_j), chart(forms.top_f), chart(forms.top_g)
    return resultant(tj, v * tf ** F.d2 - tg ** F.d1, 'x'), forms.shear


def check_row(F: PlaneMap, seed: int = 0) -> CheckResult:
    early = _infinity_precondition(F)
    if early is not None:
        return early
    G = ordered(F)
    D = G.d1 + G.d2 - 2
    forms = infinity_forms(G, seed)
    if not coprime(forms.top_f, forms.top_j) or not coprime(forms.top_g, forms.top_j):
        return failed("f or g vanishes at a point at infinity of C(F)")
    R, _ = row_resultant(G, seed)
    v = VR.gens[1]
    if not R or R.degree(v) != D:
        return failed(f"R(v) has degree {R.degree(v) if R else 'undefined'}, expected {D}")
    if total_degree(gcd_poly(R, R.diff(v))) > 0:
        return failed("two points at infinity give the same value of g^d1/f^d2")
    return passed()


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

CHECKS = (
    ('gradTransversal', 'grad_transversal'),
    ('gradDisjointAtInfinity', 'grad_disjoint_at_infinity'),
    ('jTransversalInfinity', 'j_transversal_infinity'),
    ('jJ11DisjointInfinity', 'j_j11_disjoint_infinity'),
    ('noMixedVanishing', 'no_mixed_vanishing'),
    ('gradDisjointJ12', 'grad_disjoint_j12'),
    ('jJ11Transversal', 'j_j11_transversal'),
    ('infinityNonvanishing', 'infinity_nonvanishing'),
    ('rowCondition', 'row_condition'),
)


@dataclass(frozen=True)
class GenericityReport:
    grad_transversal: CheckResult
    grad_disjoint_at_infinity: CheckResult
    j_transversal_infinity: CheckResult
    j_j11_disjoint_infinity: CheckResult
    no_mixed_vanishing: CheckResult
    grad_disjoint_j12: CheckResult
    j_j11_transversal: CheckResult
    infinity_nonvanishing: CheckResult
    row_condition: CheckResult
    shear: str = '0'
    seed: int = 0
    label: str = GENERIC_LABEL

    def results(self) -> Dict[str, CheckResult]:
        return {key: getattr(self, attr) for key, attr in CHECKS}

    @property
    def is_generic(self) -> bool:
        return all(r.passed for r in self.results().values())

    @property
    def has_budget_failure(self) -> bool:
        return any(r.verdict == Verdict.BUDGET for r in self.results().values())

    def failing(self):
        return [key for key, r in self.results().items() if not r.passed]

    def verdicts(self) -> Dict[str, str]:
        return {key: r.verdict.value for key, r in self.results().items()}

    def notes(self) -> Dict[str, str]:
        return {key: r.note for key, r in self.results().items() if r.note}

    @classmethod
    def from_dicts(cls, verdicts: dict, notes: dict, shear: str = '0', seed: int = 0,
                   label: str = GENERIC_LABEL) -> 'GenericityReport':
        results = {
            attr: CheckResult(Verdict(verdicts[key]), notes.get(key, ''))
            for key, attr in CHECKS
        }
        return cls(**results, shear=shear, seed=seed, label=label)


def genericity_report(F: PlaneMap, seed: int = 0, budget: Optional[int] = None) -> GenericityReport:
    disjoint, transversal = check_j_infinity(F)
    early = _infinity_precondition(F)
    shear = rat(0) if early is not None else chart_shear(top_form(jacobian_curve(ordered(F))), seed)
    return GenericityReport(
        grad_transversal=guarded(check_grad_transversal, F, budget),
        grad_disjoint_at_infinity=check_grad_at_infinity(F),
        j_transversal_infinity=transversal,
        j_j11_disjoint_infinity=disjoint,
        no_mixed_vanishing=guarded(check_mixed_vanishing, F, budget),
        grad_disjoint_j12=guarded(check_grad_j12, F, budget),
        j_j11_transversal=guarded(check_j_j11_transversal, F, budget),
        infinity_nonvanishing=check_infinity_nonvanishing(F, seed),
        row_condition=check_row(F, seed),
        shear=format_rational(shear),
        seed=seed,
    )
