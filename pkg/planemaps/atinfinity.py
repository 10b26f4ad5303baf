"""
Delta invariants of the discriminant at its point at infinity.

When d1 > d2 the discriminant has D = d1 + d2 - 2 branches through one point
at infinity, each with characteristic exponents (d1 - d2; d1, d1 + 1) and any
two meeting with multiplicity d1 (d1 - d2). When d1 = d2 the points at
infinity are smooth (the curve is tangent to the line at infinity with
multiplicity d1) and contribute nothing.

Every total is computed twice, by closed form and by summing branch data;
a disagreement raises InternalDisagreement.
"""
from dataclasses import dataclass
from math import comb, gcd
from typing import Tuple

from sympy.polys.domains import QQ

from planemaps.errors import DegreeError, IncompleteSequence, InternalDisagreement
from planemaps.polyring import Rat, format_rational


@dataclass(frozen=True)
class ExponentSequence:
    """Characteristic exponents (a0; a1 < a2 < ...) of a branch t -> (t^a0, sum l_i t^a_i)."""
    a0: int
    higher: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'higher', tuple(self.higher))
        if self.a0 < 1:
            raise ValueError(f"a0 must be positive, got {self.a0}")
        previous = 0
        for a in self.higher:
            if a <= previous:
                raise ValueError(f"Exponents must be positive and strictly increasing: {self.higher}")
            previous = a
        if self.gcd_chain()[-1] != 1:
            raise IncompleteSequence(
                f"gcd chain {self.gcd_chain()} of ({self.a0}; {self.higher}) never reaches 1")

    def gcd_chain(self) -> Tuple[int, ...]:
        """D_1 = a0, D_(j+1) = gcd(D_j, a_j)."""
        chain = [self.a0]
        for a in self.higher:
            chain.append(gcd(chain[-1], a))
        return tuple(chain)

    def __str__(self):
        return f"({self.a0}; {', '.join(map(str, self.higher))})"


def as_integer(value: Rat, what: str) -> int:
    if value.denominator != 1:
        raise InternalDisagreement(f"{what} = {format_rational(value)} is not an integer")
    return int(value.numerator)


def milnor_delta(seq: ExponentSequence) -> Rat:
    """1/2 * sum_j (a_j - 1)(D_j - D_(j+1))."""
    chain = seq.gcd_chain()
    if chain[-1] != 1:
        raise IncompleteSequence(f"gcd chain {chain} never reaches 1")
    doubled = sum((a - 1) * (chain[j] - chain[j + 1]) for j, a in enumerate(seq.higher))
    delta = QQ(doubled, 2)
    as_integer(delta, f"delta of {seq}")
    return delta


def _require_strict(d1: int, d2: int):
    if not d1 > d2 >= 1:
        raise DegreeError(f"Need d1 > d2 >= 1, got ({d1}, {d2})")


def branch_exponents(d1: int, d2: int) -> ExponentSequence:
    _require_strict(d1, d2)
    return ExponentSequence(d1 - d2, (d1, d1 + 1))


def branch_delta_variants(d1: int, d2: int) -> Tuple[int, int]:
    """The two closed forms of twice the branch delta; they are equal."""
    _require_strict(d1, d2)
    d = gcd(d1, d2)
    return ((d1 - 1) * (d1 - d2 - d) + d1 * (d - 1),
            (d1 - 1) * (d1 - d2 - 1) + (d - 1))


def branch_delta(d1: int, d2: int) -> Rat:
    """Delta of one branch at infinity, closed form checked against milnor_delta."""
    first, second = branch_delta_variants(d1, d2)
    if first != second:
        raise InternalDisagreement(f"Closed forms of the branch delta differ: {first} != {second}")
    closed = QQ(second, 2)
    structural = milnor_delta(branch_exponents(d1, d2))
    if closed != structural:
        raise InternalDisagreement(
            f"Branch delta for ({d1}, {d2}): closed form {format_rational(closed)}, "
            f"exponents give {format_rational(structural)}")
    return closed


def pairwise_intersection(d1: int, d2: int) -> int:
    _require_strict(d1, d2)
    return d1 * (d1 - d2)


def delta_at_infinity(d1: int, d2: int) -> int:
    """Sum of delta invariants of the discriminant at infinity, for d1 >= d2 >= 1."""
    if not d1 >= d2 >= 1:
        raise DegreeError(f"Need d1 >= d2 >= 1, got ({d1}, {d2})")
    if d1 == d2:
        return 0
    D = d1 + d2 - 2
    d = gcd(d1, d2)
    closed = QQ(d1 * (d1 - d2) * D * D, 2) + QQ((-2 * d1 + d2 + d) * D, 2)
    structural = D * branch_delta(d1, d2) + comb(D, 2) * pairwise_intersection(d1, d2)
    if closed != structural:
        raise InternalDisagreement(
            f"Delta at infinity for ({d1}, {d2}): closed form {format_rational(closed)}, "
            f"branch sum {format_rational(structural)}")
    return as_integer(closed, f"delta at infinity for ({d1}, {d2})")


@dataclass(frozen=True)
class InfinityProfile:
    branch_count: int
    branch_delta: Rat
    pairwise_intersection: int
    total_delta: int
    smooth_at_infinity: bool
    tangency_order: int

    def to_dict(self) -> dict:
        return {
            'branchCount': self.branch_count,
            'branchDelta': format_rational(self.branch_delta),
            'pairwiseIntersection': self.pairwise_intersection,
            'totalDelta': self.total_delta,
            'smoothAtInfinity': self.smooth_at_infinity,
            'tangencyOrder': self.tangency_order,
        }


def infinity_profile(d1: int, d2: int) -> InfinityProfile:
    """Profile of the discriminant at infinity; the degrees are ordered first."""
    d1, d2 = max(d1, d2), min(d1, d2)
    if d2 < 1:
        raise DegreeError(f"Degrees must be at least 1, got ({d1}, {d2})")
    D = d1 + d2 - 2
    if d1 == d2:
        return InfinityProfile(D, QQ(0), 0, 0, True, d1)
    return InfinityProfile(
        branch_count=D,
        branch_delta=branch_delta(d1, d2),
        pairwise_intersection=pairwise_intersection(d1, d2),
        total_delta=delta_at_infinity(d1, d2),
        smooth_at_infinity=False,
        tangency_order=0,
    )
