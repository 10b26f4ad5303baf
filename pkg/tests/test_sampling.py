"""
Seeded sampling: the splitmix64 stream, coefficient draws and the golden
maps produced by gen.
"""
import pytest

from planemaps.errors import ConfigError
from planemaps.polyring import format_poly, total_degree
from planemaps.sampling import (
    SplitMix64, dense_monomials, random_invertible_matrix, random_map,
)

# (d1, d2, seed) -> (f, g) with coefficient bound 10
GOLDEN_MAPS = {
    (2, 2, 42): ('-6*x^2 + x*y - 8*y^2 + 2*x + 9*y + 4',
                 '5*x^2 - 3*x*y - 4*y^2 - 2*x - 5*y - 5'),
    (3, 2, 7): ('9*x^3 - 8*x^2*y - 5*x*y^2 - 5*y^3 - 7*x^2 + 5*x*y - 5*y^2 - 6*x - 4*y - 3',
                '-6*x^2 + x*y - 10*y^2 + 7*x + y - 7'),
}


class TestSplitMix64:
    """The generator itself."""

    def test_first_output_of_seed_zero(self):
        assert SplitMix64(0).next() == 0xE220A8397B1DCDAF

    def test_deterministic(self):
        a, b = SplitMix64(123), SplitMix64(123)
        assert [a.next() for _ in range(5)] == [b.next() for _ in range(5)]

    def test_streams_differ(self):
        draws = {purpose: SplitMix64.stream(5, purpose).next()
                 for purpose in ('map', 'shear', 'matrix', 'polar')}
        assert len(set(draws.values())) == 4

    def test_nonzero_range(self):
        rng = SplitMix64(99)
        values = [rng.nonzero(3) for _ in range(500)]
        assert set(values) == {-3, -2, -1, 1, 2, 3}

    def test_invertible_matrix(self):
        rng = SplitMix64(1)
        for _ in range(20):
            (a, b), (c, d) = random_invertible_matrix(rng)
            assert a * d - b * c != 0


class TestRandomMaps:
    """Dense maps drawn from a seed."""

    def test_monomial_order(self):
        assert list(dense_monomials(2)) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]

    @pytest.mark.parametrize('key', GOLDEN_MAPS.keys())
    def test_golden(self, key):
        F = random_map(*key)
        f, g = GOLDEN_MAPS[key]
        assert format_poly(F.f) == f, f"{key}: Expected f = {f}, got {format_poly(F.f)}"
        assert format_poly(F.g) == g, f"{key}: Expected g = {g}, got {format_poly(F.g)}"

    @pytest.mark.parametrize('d1,d2', [(1, 1), (3, 2), (4, 4)])
    def test_dense(self, d1, d2):
        F = random_map(d1, d2, seed=11)
        assert len(F.f) == (d1 + 1) * (d1 + 2) // 2
        assert len(F.g) == (d2 + 1) * (d2 + 2) // 2
        assert (total_degree(F.f), total_degree(F.g)) == (d1, d2)

    def test_coefficient_bound(self):
        F = random_map(3, 3, seed=2, coeff_bound=2)
        assert all(0 < abs(c) <= 2 for c in list(F.f.values()) + list(F.g.values()))

    @pytest.mark.parametrize('d1,d2,bound', [(0, 2, 10), (2, 2, 0)])
    def test_rejected(self, d1, d2, bound):
        with pytest.raises(ConfigError):
            random_map(d1, d2, seed=0, coeff_bound=bound)
