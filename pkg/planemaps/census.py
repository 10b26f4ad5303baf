"""
Singularity census of a plane map: the closed-form counts, the cusp count
computed from quotient dimensions, generalized cusp indices at rational
points and the Serre consistency residual.
"""
from dataclasses import dataclass
from math import gcd
from typing import List, NamedTuple, Optional, Sequence, Tuple

from planemaps.atinfinity import InfinityProfile, delta_at_infinity, infinity_profile
from planemaps.errors import (
    AmbiguousIndex, BudgetExceeded, InfiniteIntersection, InternalDisagreement, NotAGeneralizedCusp,
)
from planemaps.genericity import GENERIC_LABEL, GenericityReport, check_j_infinity, check_j_j11_transversal, genericity_report
from planemaps.ideals import INFINITE, quotient_of
from planemaps.jets import PlaneMap, j11_curve, jacobian_curve, jet_triple
from planemaps.localint import RatPoint, intersection_number
from planemaps.polyring import RATIONALS, FieldMode, evaluate_at, format_poly, gcd_poly, partial, total_degree
from planemaps.sampling import SplitMix64, random_invertible_matrix

NOT_AVAILABLE = 'n/a'
ASSUMED_PROPER = 'assumed-proper'
NON_CERTIFIED = 'non-certified'
SWAPPED = 'swapped-target'
POLAR_BOUND = 10


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def cusp_count_formula(d1: int, d2: int) -> int:
    return d1 * d1 + d2 * d2 + 3 * d1 * d2 - 6 * d1 - 6 * d2 + 7


def node_count_formula(d1: int, d2: int) -> int:
    D = d1 + d2 - 2
    d = gcd(d1, d2)
    twice = (d1 * d2 - 4) * (D * D - 2) - (d - 5) * D - 6
    if twice % 2:
        raise InternalDisagreement(f"Node count for ({d1}, {d2}) is not an integer: {twice}/2")
    return twice // 2


def is_linear_degenerate(d1: int, d2: int) -> bool:
    """Both caps 1: J is constant and every count is 0."""
    return d1 == 1 and d2 == 1


def critical_topology(d1: int, d2: int) -> Tuple[int, int]:
    """(genus, punctures) of the critical curve; (0, 0) for linear maps."""
    if is_linear_degenerate(d1, d2):
        return 0, 0
    D = d1 + d2 - 2
    return (D - 1) * (D - 2) // 2, D


def discriminant_degree(d1: int, d2: int) -> int:
    return max(d1, d2) * (d1 + d2 - 2)


def bezout_jj11(d1: int, d2: int) -> int:
    """Bezout number of (J, J11), no intersections at infinity assumed."""
    return (d1 + d2 - 2) * (2 * d1 + d2 - 4)


def gradient_count(d1: int) -> int:
    return (d1 - 1) ** 2


def serre_residual(d1: int, d2: int) -> int:
    """
    Arithmetic genus of the discriminant minus the genus of the critical curve
    and the delta invariants of cusps, nodes and the points at infinity.
    """
    d1, d2 = max(d1, d2), min(d1, d2)
    D = d1 + d2 - 2
    N = discriminant_degree(d1, d2)
    return ((N - 1) * (N - 2) // 2 - (D - 1) * (D - 2) // 2
            - cusp_count_formula(d1, d2) - node_count_formula(d1, d2)
            - delta_at_infinity(d1, d2))


# ---------------------------------------------------------------------------
# Computed cusp count
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CuspCount:
    value: Optional[int]
    dim_grad: object = None
    dim_jj11: object = None
    certified: bool = False
    diagnosis: str = ''

    def to_dict(self) -> dict:
        return {
            'cusps': NOT_AVAILABLE if self.value is None else self.value,
            'dimGrad': self.dim_grad,
            'dimJJ11': self.dim_jj11,
            'certified': self.certified,
            'diagnosis': self.diagnosis,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CuspCount':
        value = data['cusps']
        return cls(None if value == NOT_AVAILABLE else value, data.get('dimGrad'),
                   data.get('dimJJ11'), data.get('certified', False), data.get('diagnosis', ''))


def computed_cusp_count(F: PlaneMap, budget: Optional[int] = None, field: FieldMode = RATIONALS,
                        reverify: bool = False,
                        genericity: Optional[GenericityReport] = None) -> CuspCount:
    """dim C[x,y]/(J, J11) - dim C[x,y]/(f_x, f_y)."""
    jets = jet_triple(F)
    J, J11 = jets.J, jets.J11
    if not J:
        return CuspCount(None, diagnosis="zero Jacobian")
    if total_degree(gcd_poly(J, J11)) > 0:
        return CuspCount(None, diagnosis="J and J11 share a component")

    try:
        jj11 = quotient_of(J, J11, budget=budget, field=field, reverify=reverify)
        grad = quotient_of(partial(F.f, 'x'), partial(F.f, 'y'), budget=budget, field=field,
                           reverify=reverify)
    except BudgetExceeded as e:
        return CuspCount(None, diagnosis=f"budget: {e}")

    if not jj11.is_finite or not grad.is_finite:
        return CuspCount(None, grad.dimension, jj11.dimension,
                         diagnosis="a quotient is not zero-dimensional")

    if genericity is not None:
        disjoint = genericity.j_j11_disjoint_infinity
        transversal = genericity.j_j11_transversal
    else:
        disjoint = check_j_infinity(F)[0]
        transversal = check_j_j11_transversal(F, budget)
    certified = disjoint.passed and transversal.passed
    return CuspCount(jj11.dimension - grad.dimension, grad.dimension, jj11.dimension, certified)


# ---------------------------------------------------------------------------
# Generalized cusp index
# ---------------------------------------------------------------------------

def _check_reduced(F: PlaneMap, a: RatPoint, seed: int):
    J = jacobian_curve(F)
    if not J:
        raise NotAGeneralizedCusp("zero Jacobian")
    Jx, Jy = partial(J, 'x'), partial(J, 'y')
    if total_degree(gcd_poly(gcd_poly(J, Jx), Jy)) <= 0:
        return
    rng = SplitMix64.stream(seed, 'polar')
    polar = Jx * rng.nonzero(POLAR_BOUND) + Jy * rng.nonzero(POLAR_BOUND)
    if intersection_number(J, polar, a) == INFINITE:
        raise NotAGeneralizedCusp(f"J is not reduced at {a}")


def index_for_matrix(F: PlaneMap, a: RatPoint, matrix) -> int:
    """I_a(J', J11') - I_a(f'_x, f'_y) for F' = T o F."""
    G = F.compose_target(matrix)
    critical = intersection_number(jacobian_curve(G), j11_curve(G), a)
    if critical == INFINITE:
        raise InfiniteIntersection(f"J and J11 share a component through {a}")
    fx, fy = partial(G.f, 'x'), partial(G.f, 'y')
    if evaluate_at(fx, a.coords) or evaluate_at(fy, a.coords):
        gradient = 0
    else:
        gradient = intersection_number(fx, fy, a)
        if gradient == INFINITE:
            raise InfiniteIntersection(f"f'_x and f'_y share a component through {a}")
    return critical - gradient


def generalized_cusp_index(F: PlaneMap, a: RatPoint, T='auto', seed: int = 0) -> int:
    _check_reduced(F, a, seed)
    if T != 'auto':
        return index_for_matrix(F, a, T)
    rng = SplitMix64.stream(seed, 'matrix')
    first = random_invertible_matrix(rng)
    second = random_invertible_matrix(rng)
    while second == first:
        second = random_invertible_matrix(rng)
    mu1 = index_for_matrix(F, a, first)
    mu2 = index_for_matrix(F, a, second)
    if mu1 != mu2:
        raise AmbiguousIndex(
            f"Index at {a} is {mu1} for T={first} but {mu2} for T={second}: "
            f"T not general enough or genuine ambiguity")
    return mu1


class CuspSumCheck(NamedTuple):
    sum: int
    bound: int
    ok: bool


def cusp_sum_bound_check(F: PlaneMap, points: Sequence[RatPoint], T='auto', seed: int = 0) -> CuspSumCheck:
    total = sum(generalized_cusp_index(F, a, T, seed) for a in points)
    bound = cusp_count_formula(F.d1, F.d2)
    return CuspSumCheck(total, bound, total <= bound)


# ---------------------------------------------------------------------------
# Full census
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusReport:
    d1: int
    d2: int
    f: str
    g: str
    cusp_formula: int
    node_formula: int
    critical_genus: int
    points_at_infinity: int
    discriminant_degree: int
    delta_infinity: int
    computed: CuspCount
    genericity: GenericityReport
    infinity: InfinityProfile
    serre_residual: int
    seed: int
    field: str = 'rational'
    flags: Tuple[str, ...] = ()

    @property
    def D(self) -> int:
        return self.d1 + self.d2 - 2

    @property
    def gcd_deg(self) -> int:
        return gcd(self.d1, self.d2)

    @property
    def computed_cusp_count(self):
        return NOT_AVAILABLE if self.computed.value is None else self.computed.value

    @property
    def has_budget_failure(self) -> bool:
        return self.genericity.has_budget_failure or self.computed.diagnosis.startswith('budget')

    @property
    def matches_formula(self) -> bool:
        return self.computed.value == self.cusp_formula

    def to_dict(self) -> dict:
        return {
            'd1': self.d1,
            'd2': self.d2,
            'D': self.D,
            'gcdDeg': self.gcd_deg,
            'map': {'f': self.f, 'g': self.g},
            'formulas': {
                'cusps': self.cusp_formula,
                'nodes': self.node_formula,
                'genus': self.critical_genus,
                'punctures': self.points_at_infinity,
                'discDegree': self.discriminant_degree,
                'deltaInfinity': self.delta_infinity,
            },
            'computed': self.computed.to_dict(),
            'genericity': self.genericity.verdicts(),
            'genericityNotes': self.genericity.notes(),
            'genericityLabel': self.genericity.label,
            'shear': self.genericity.shear,
            'infinity': self.infinity.to_dict(),
            'serreResidual': self.serre_residual,
            'seed': self.seed,
            'field': self.field,
            'flags': list(self.flags),
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CensusReport':
        formulas = data['formulas']
        return cls(
            d1=data['d1'],
            d2=data['d2'],
            f=data['map']['f'],
            g=data['map']['g'],
            cusp_formula=formulas['cusps'],
            node_formula=formulas['nodes'],
            critical_genus=formulas['genus'],
            points_at_infinity=formulas['punctures'],
            discriminant_degree=formulas['discDegree'],
            delta_infinity=formulas['deltaInfinity'],
            computed=CuspCount.from_dict(data['computed']),
            genericity=GenericityReport.from_dicts(
                data['genericity'], data.get('genericityNotes', {}), data.get('shear', '0'),
                data['seed'], data.get('genericityLabel', GENERIC_LABEL)),
            infinity=infinity_profile(data['d1'], data['d2']),
            serre_residual=data['serreResidual'],
            seed=data['seed'],
            field=data.get('field', 'rational'),
            flags=tuple(data['flags']),
        )


def full_census(F: PlaneMap, seed: int = 0, field: FieldMode = RATIONALS,
                budget: Optional[int] = None, reverify: bool = False) -> CensusReport:
    """Every closed-form and computed invariant of F, with genericity verdicts."""
    flags: List[str] = []
    if F.d1 < F.d2:
        F = F.swapped()
        flags.append(SWAPPED)
    d1, d2 = F.d1, F.d2

    genericity = genericity_report(F, seed, budget)
    computed = computed_cusp_count(F, budget, field, reverify, genericity)

    flags.append(ASSUMED_PROPER)
    if genericity.is_generic:
        flags.append(GENERIC_LABEL)
    else:
        flags.append('not-generic:' + ','.join(genericity.failing()))
    if computed.value is not None and not computed.certified:
        flags.append(NON_CERTIFIED)
    if field.is_prime:
        flags.append(f'prime-field:{field.prime}')

    residual = serre_residual(d1, d2)
    if residual != 0:
        raise InternalDisagreement(f"Serre residual for ({d1}, {d2}) is {residual}")

    genus, punctures = critical_topology(d1, d2)
    return CensusReport(
        d1=d1,
        d2=d2,
        f=format_poly(F.f),
        g=format_poly(F.g),
        cusp_formula=cusp_count_formula(d1, d2),
        node_formula=node_count_formula(d1, d2),
        critical_genus=genus,
        points_at_infinity=punctures,
        discriminant_degree=discriminant_degree(d1, d2),
        delta_infinity=delta_at_infinity(d1, d2),
        computed=computed,
        genericity=genericity,
        infinity=infinity_profile(d1, d2),
        serre_residual=residual,
        seed=seed,
        field=field.label,
        flags=tuple(flags),
    )
