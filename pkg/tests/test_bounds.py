import math

import pytest
from fractions import Fraction

from wordlab import bounds
from wordlab.exactmath import (
    ceil_log,
    exact_int_log,
    floor_log,
    integer_root,
    log2_bounds,
    pow2_bounds,
)


class TestExactHelpers:
    def test_exact_int_log(self):
        assert exact_int_log(3, 27) == 3
        assert exact_int_log(3, 28) is None
        assert exact_int_log(2, 1) == 0

    def test_integer_root(self):
        import random

        assert integer_root(3**300, 3) == 3**100
        assert integer_root(2**1024, 2) == 2**512
        rng = random.Random(1)
        for _ in range(200):
            v = rng.randrange(0, 10**30)
            k = rng.randrange(1, 9)
            r = integer_root(v, k)
            assert r**k <= v < (r + 1) ** k

    def test_floor_and_ceil_log(self):
        assert floor_log(3, 80) == 3
        assert floor_log(3, 81) == 4
        assert ceil_log(3, 3) == 1
        assert ceil_log(3, 4) == 2
        assert ceil_log(3, 1) == 0

    @pytest.mark.parametrize(
        "x", [Fraction(3), Fraction(5, 2), Fraction(7), Fraction(1, 3), Fraction(10**6, 7)]
    )
    def test_log2_brackets_enclose(self, x):
        lo, hi = log2_bounds(x, 96)
        true = math.log2(x)
        assert float(lo) <= true + 1e-12
        assert true <= float(hi) + 1e-12
        assert hi - lo < Fraction(1, 10**20)

    def test_log2_exact_powers(self):
        assert log2_bounds(Fraction(8), 64) == (Fraction(3), Fraction(3))
        assert log2_bounds(Fraction(1, 2), 64) == (Fraction(-1), Fraction(-1))

    @pytest.mark.parametrize("x", [Fraction(0), Fraction(1, 2), Fraction(41, 7)])
    def test_pow2_brackets_enclose(self, x):
        lo, hi = pow2_bounds(x, 96)
        true = 2.0 ** float(x)
        assert float(lo) <= true * (1 + 1e-12)
        assert true <= float(hi) * (1 + 1e-12)


class TestBoundValues:
    def test_upsilon_example(self):
        assert bounds.upsilon_bound(3, 2) == 8748

    def test_upsilon_coding_example(self):
        assert bounds.upsilon_coding_bound(2, 1) == 1024

    def test_phi_linear_in_l(self):
        for n in (3, 4, 5):
            assert bounds.phi_bound(n, 2) == 2 * bounds.phi_bound(n, 1)

    def test_phi_exact_power_of_three(self):
        # log3(3) = 1 and log3(1) = 0, so the exponent is 12 + 0 + 91
        assert bounds.phi_bound(3, 1) == 2**96 * 3**103

    def test_psi_exact_paths(self):
        assert bounds.psi_bound(3, 9, 1) == 2**27 * 27**54
        # n*d = 9 = 3**2: the log3(log3) term contributes 2**18 exactly
        assert bounds.psi_bound(3, 3, 1) == 2**27 * 3**84 * 2**18

    def test_psi_log2_exact_power_of_two(self):
        assert bounds.psi_log2_bound(2, 2, 2) == 549755813888

    @pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
    def test_psi_interval_paths_match_float(self, n, d):
        got = bounds.psi_bound(n, d, 1)
        nd = n * d
        est = 2**27 * nd ** (
            3 * math.log(nd, 3) + 9 * math.log(math.log(nd, 3), 3) + 36
        )
        assert est * (1 - 1e-9) <= got <= est * (1 + 1e-9) + 1

    @pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
    def test_psi_log2_matches_float(self, n, d):
        got = bounds.psi_log2_bound(n, d, 2)
        nd = n * d
        est = 256 * 2 * nd ** (2 * math.log2(nd) + 10) * d * d
        assert est * (1 - 1e-9) <= got <= est * (1 + 1e-9) + 1

    def test_monotone_in_l(self):
        for f in (
            lambda l: bounds.psi_bound(3, 3, l),
            lambda l: bounds.psi_log2_bound(2, 3, l),
            lambda l: bounds.phi_bound(4, l),
            lambda l: bounds.upsilon_bound(4, l),
        ):
            assert f(1) < f(2) < f(3)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bounds.psi_bound(1, 2, 1)
        with pytest.raises(ValueError):
            bounds.phi_bound(2, 1)
        with pytest.raises(ValueError):
            bounds.beth_bound("t5", 2, 4)


class TestSmallFormulas:
    def test_p_nd_exact_log(self):
        assert bounds.p_nd(3, 3) == 72
        assert bounds.p_nd(1, 3) == 27

    @pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (4, 5), (5, 7)])
    def test_p_nd_matches_float_floor(self, n, d):
        est = math.floor(1.5 * (n + 1) * d * (math.log(n * d, 3) + 2))
        assert bounds.p_nd(n, d) == est

    def test_q_n(self):
        assert bounds.q_n(5) == 4

    def test_beth_values(self):
        assert bounds.beth_bound("t2", 2, 3) == 3
        assert bounds.beth_bound("t3", 2, 3) == 6
        assert bounds.beth_bound("large", 3, 4) == 3

    def test_alpha(self):
        assert bounds.alpha_lower(4, 10) == 2
        assert bounds.alpha_lower(4, 9) == 1
