"""
Seeded sampling: random dense plane maps and the randomized draws used by
the checks (shears, target matrices, polar directions).

The generator is splitmix64:

    state <- state + 0x9E3779B97F4A7C15          (mod 2^64)
    z <- state
    z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9    (mod 2^64)
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB    (mod 2^64)
    z <- z ^ (z >> 31)

A coefficient with bound B is r = z mod 2B mapped to r - B when r < B and
to r - B + 1 otherwise, i.e. a value in [-B, B] without 0. Maps are drawn f
first, then g, monomials by degree k = 0, 1, ... and inside a degree as
x^k, x^(k-1)*y, ..., y^k.
"""
from planemaps.errors import ConfigError
from planemaps.jets import PlaneMap
from planemaps.polyring import XY

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

# independent streams per purpose, so adding a draw never shifts another
STREAM_SALTS = {
    'map': 0,
    'shear': 0x5348454152,
    'matrix': 0x4D4154524958,
    'polar': 0x504F4C4152,
}


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    @classmethod
    def stream(cls, seed: int, purpose: str) -> 'SplitMix64':
        return cls(seed ^ STREAM_SALTS[purpose])

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def nonzero(self, bound: int) -> int:
        """Uniform integer in [-bound, bound] other than 0."""
        r = self.next() % (2 * bound)
        return r - bound if r < bound else r - bound + 1


def dense_monomials(degree: int):
    for k in range(degree + 1):
        for j in range(k + 1):
            yield (k - j, j)


def random_poly(rng: SplitMix64, degree: int, coeff_bound: int):
    return XY.from_dict({m: rng.nonzero(coeff_bound) for m in dense_monomials(degree)})


def random_map(d1: int, d2: int, seed: int, coeff_bound: int = 10) -> PlaneMap:
    """Dense map with every coefficient of degree <= (d1, d2) drawn from the seed."""
    if coeff_bound < 1:
        raise ConfigError(f"Coefficient bound must be positive, got {coeff_bound}")
    if d1 < 1 or d2 < 1:
        raise ConfigError(f"Degrees must be at least 1, got ({d1}, {d2})")
    rng = SplitMix64.stream(seed, 'map')
    f = random_poly(rng, d1, coeff_bound)
    g = random_poly(rng, d2, coeff_bound)
    return PlaneMap(f, g, d1, d2)


def random_invertible_matrix(rng: SplitMix64, bound: int = 5):
    while True:
        a, b, c, d = (rng.nonzero(bound) for _ in range(4))
        if a * d - b * c != 0:
            return ((a, b), (c, d))
