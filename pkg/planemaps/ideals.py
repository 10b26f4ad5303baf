"""
Groebner bases in two variables for zero-dimensionality, quotient dimensions
and the membership test 1 in I.

Buchberger's algorithm with the Gebauer-Moeller pair update (both Buchberger
criteria). Pairs are taken by the smallest lcm of their leading monomials,
sugar degree breaking ties; over QQ each S-polynomial is reduced as a
primitive integer polynomial. Every processed S-pair counts against a
budget; running out raises BudgetExceeded instead of returning a partial
basis.
"""
from dataclasses import dataclass
from itertools import product
from typing import Optional, Tuple

from planemaps import settings
from planemaps.errors import BudgetExceeded, FieldModeError, InternalDisagreement
from planemaps.polyring import RATIONALS, FieldMode, Poly, check_same_ring, format_poly, to_field, total_degree

INFINITE = 'infinite'
ORDER = 'grevlex'


@dataclass(frozen=True)
class IdealBasis:
    generators: Tuple[Poly, ...]
    order: str = ORDER

    def __post_init__(self):
        if not self.generators:
            raise ValueError("An ideal basis needs at least one generator")
        if self.order != ORDER:
            raise ValueError(f"Only the {ORDER} order is supported, got {self.order!r}")
        for p in self.generators:
            if not p:
                raise ValueError("Zero generator in ideal basis")
            check_same_ring(self.generators[0], p)

    @classmethod
    def generated_by(cls, *polys: Poly) -> Optional['IdealBasis']:
        """Basis of (polys) without zero generators; None for the zero ideal."""
        nonzero = tuple(p for p in polys if p)
        return cls(nonzero) if nonzero else None

    @property
    def ring(self):
        return self.generators[0].ring

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_ground

    def formatted(self):
        return [format_poly(p) for p in self.generators]


@dataclass(frozen=True)
class QuotientInfo:
    is_zero_dimensional: bool
    dimension: object  # int, or INFINITE
    standard_monomials: Tuple[Tuple[int, ...], ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.dimension != INFINITE


INFINITE_QUOTIENT = QuotientInfo(False, INFINITE)


def spoly(p1: Poly, p2: Poly, ring) -> Poly:
    """S-polynomial of two monic polynomials."""
    lcm12 = ring.monomial_lcm(p1.LM, p2.LM)
    m1 = ring.monomial_div(lcm12, p1.LM)
    m2 = ring.monomial_div(lcm12, p2.LM)
    return p1.mul_monom(m1) - p2.mul_monom(m2)


def _primitive(p: Poly) -> Poly:
    """Integer primitive part over QQ; unchanged over GF(p)."""
    if not p or not p.ring.domain.is_QQ:
        return p
    _, p = p.clear_denoms()
    _, p = p.primitive()
    return p


def _interreduce(polys):
    f1 = list(polys)
    while True:
        f = f1[:]
        f1 = []
        for i in range(len(f)):
            r = f[i].rem(f[:i])
            if r:
                f1.append(r.monic())
        if f == f1:
            return f


def groebner(ideal: IdealBasis, budget: Optional[int] = None,
             field: FieldMode = RATIONALS) -> IdealBasis:
    """Reduced Groebner basis of `ideal` (monic generators, descending leading terms)."""
    if budget is None:
        budget = settings.SETTINGS.budget

    gens = [to_field(p, field) for p in ideal.generators]
    gens = [p for p in gens if p]
    if not gens:
        raise FieldModeError(f"Every generator vanishes modulo {field.prime}")
    ring = gens[0].ring
    order = ring.order

    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    f = _interreduce(gens)
    sugar = [total_degree(p) for p in f]

    def pair_key(pair):
        i, j = pair
        lcm = monomial_lcm(f[i].LM, f[j].LM)
        s = max(sugar[i] - sum(f[i].LM), sugar[j] - sum(f[j].LM)) + sum(lcm)
        return (order(lcm), s, pair)

    def select(P):
        return min(P, key=pair_key)

    def normal(g, J, g_sugar):
        h = _primitive(g).rem([f[j] for j in J])
        if not h:
            return None
        f.append(h.monic())
        sugar.append(max(g_sugar, total_degree(h)))
        return len(f) - 1

    def update(G, B, ih):
        h = f[ih]
        mh = h.LM

        C = set(G)
        D = set()

        while C:
            ig = C.pop()
            mg = f[ig].LM
            LCMhg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                m = monomial_lcm(mh, f[ip].LM)
                return monomial_div(LCMhg, m)

            # coprime leading monomials, or no other pair dominating this one
            if monomial_mul(mh, mg) == LCMhg or (
                    not any(lcm_divides(ipx) for ipx in C) and
                    not any(lcm_divides(pr[1]) for pr in D)):
                D.add((ih, ig))

        E = set()
        while D:
            ih_, ig = D.pop()
            mg = f[ig].LM
            if not monomial_mul(mh, mg) == monomial_lcm(mh, mg):
                E.add((ih_, ig))

        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            mg1 = f[ig1].LM
            mg2 = f[ig2].LM
            LCM12 = monomial_lcm(mg1, mg2)

            if not monomial_div(LCM12, mh) or \
                    monomial_lcm(mg1, mh) == LCM12 or \
                    monomial_lcm(mg2, mh) == LCM12:
                B_new.add((ig1, ig2))

        B_new |= E

        G_new = {ig for ig in G if not monomial_div(f[ig].LM, mh)}
        G_new.add(ih)
        return G_new, B_new

    G = set()
    CP = set()
    pending = set(range(len(f)))
    while pending:
        ih = min(pending, key=lambda i: order(f[i].LM))
        pending.remove(ih)
        G, CP = update(G, CP, ih)

    processed = 0
    while CP:
        pair = select(CP)
        CP.remove(pair)
        processed += 1
        if processed > budget:
            raise BudgetExceeded(budget)

        i, j = pair
        s = spoly(f[i], f[j], ring)
        lcm = monomial_lcm(f[i].LM, f[j].LM)
        s_sugar = max(sugar[i] - sum(f[i].LM), sugar[j] - sum(f[j].LM)) + sum(lcm)
        divisors = sorted(G, key=lambda g: order(f[g].LM))
        ih = normal(s, divisors, s_sugar)
        if ih is not None:
            G, CP = update(G, CP, ih)

    reduced = []
    for ig in G:
        others = [f[k] for k in G if k != ig]
        r = f[ig].rem(others)
        if r:
            reduced.append(r.monic())

    reduced.sort(key=lambda p: order(p.LM), reverse=True)
    return IdealBasis(tuple(reduced))


def normal_form(p: Poly, basis: IdealBasis) -> Poly:
    return p.rem(list(basis.generators))


def standard_monomials(basis: IdealBasis) -> Optional[Tuple[Tuple[int, ...], ...]]:
    """Monomials outside the leading ideal of a Groebner basis; None if infinitely many."""
    ring = basis.ring
    leading = [p.LM for p in basis.generators]
    bounds = []
    for i in range(ring.ngens):
        pure = [m[i] for m in leading if all(e == 0 for k, e in enumerate(m) if k != i)]
        if not pure:
            return None
        bounds.append(min(pure))

    found = []
    for monom in product(*(range(b) for b in bounds)):
        if not any(ring.monomial_div(monom, m) is not None for m in leading):
            found.append(monom)
    found.sort(key=ring.order)
    return tuple(found)


def quotient_dimension(ideal: IdealBasis, budget: Optional[int] = None,
                       field: FieldMode = RATIONALS, reverify: bool = False) -> QuotientInfo:
    """dim of K[x,y]/I, counted by standard monomials."""
    basis = groebner(ideal, budget, field)
    monomials = standard_monomials(basis)
    if monomials is None:
        info = INFINITE_QUOTIENT
    else:
        info = QuotientInfo(True, len(monomials), monomials)

    if reverify and field.is_prime:
        exact = quotient_dimension(ideal, budget, RATIONALS)
        if exact.dimension != info.dimension:
            raise InternalDisagreement(
                f"Quotient dimension {info.dimension} mod {field.prime} "
                f"but {exact.dimension} over QQ")
        return exact
    return info


def contains_one(ideal: IdealBasis, budget: Optional[int] = None,
                 field: FieldMode = RATIONALS) -> bool:
    return groebner(ideal, budget, field).is_unit


def quotient_of(*polys: Poly, budget: Optional[int] = None,
                field: FieldMode = RATIONALS, reverify: bool = False) -> QuotientInfo:
    """quotient_dimension of (polys); the zero ideal gives an infinite quotient."""
    ideal = IdealBasis.generated_by(*polys)
    if ideal is None:
        return INFINITE_QUOTIENT
    return quotient_dimension(ideal, budget, field, reverify)


def contains_one_of(*polys: Poly, budget: Optional[int] = None,
                    field: FieldMode = RATIONALS) -> bool:
    ideal = IdealBasis.generated_by(*polys)
    if ideal is None:
        return False
    return contains_one(ideal, budget, field)
