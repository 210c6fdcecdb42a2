import math

import mpmath
import numpy as np
import pytest

import oracles
from selfprod import (
    DomainError,
    c0_constant,
    c1_c2_constants,
    f_identity_check,
    g_function,
    gamma,
    lambda_fn,
    lambda_star_fn,
    q_function,
    zeta,
)
from selfprod.constants import zeta_with_error

mpmath.mp.dps = 30

P_SMALL = 10**4


def mp_euler_product(factor, limit):
    """Plain truncated product in 30-digit arithmetic; no tail correction."""
    out = mpmath.mpf(1)
    for p in oracles.reference_primes(limit).tolist():
        out *= factor(mpmath.mpf(p))
    return out


class TestGammaZeta:
    @pytest.mark.parametrize("z", [0.01, 0.2, 1 / 3, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0])
    def test_gamma_against_mpmath(self, z):
        assert gamma(z) == pytest.approx(float(mpmath.gamma(z)), rel=1e-12)

    def test_gamma_examples(self):
        assert gamma(1) == 1 and gamma(2) == 1
        assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-12

    @pytest.mark.parametrize("z", [0, -1, 3.0001])
    def test_gamma_domain(self, z):
        with pytest.raises(DomainError):
            gamma(z)

    @pytest.mark.parametrize("s", [1.2, 1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 7.5])
    def test_zeta_against_mpmath(self, s):
        value, err = zeta_with_error(s)
        ref = float(mpmath.zeta(s))
        assert abs(value - ref) <= 1e-12
        assert abs(value - ref) <= err

    def test_zeta_examples(self):
        assert abs(zeta(2) - math.pi**2 / 6) < 1e-12
        assert abs(zeta(4) - math.pi**4 / 90) < 1e-12

    def test_zeta_one_and_a_half_by_summation(self):
        # partial sum to 10**7 plus the Euler-Maclaurin integral and midpoint correction
        N = 10**7
        k = np.arange(1, N + 1, dtype=np.float64)
        partial = math.fsum((k**-1.5)[::-1].tolist())
        tail = 2 / math.sqrt(N) - 0.5 * N**-1.5
        assert abs(zeta(1.5) - (partial + tail)) < 1e-12
        assert zeta(1.5) == pytest.approx(2.6123753486, abs=1e-10)

    @pytest.mark.parametrize("s", [1.19, 1.0, 0.5, -2])
    def test_zeta_domain(self, s):
        with pytest.raises(DomainError):
            zeta(s)


class TestQ:
    def test_values(self):
        assert q_function(1).q == 0.0
        assert q_function(0.1).q == pytest.approx(0.6697414907, abs=1e-10)
        assert q_function(2).q == pytest.approx(0.3862943611, abs=1e-10)
        assert q_function(0.1).q > 0.6

    @pytest.mark.parametrize("eps", [i / 10 for i in range(-10, 11) if i])
    def test_quadratic_lower_bound(self, eps):
        alpha = 1 + eps
        if alpha <= 0:
            pytest.skip("Q is defined for alpha > 0")
        assert q_function(alpha).q >= eps * eps / 3

    def test_nonnegative(self):
        for a in np.linspace(0.01, 20, 500):
            assert q_function(a).q >= 0

    def test_domain(self):
        with pytest.raises(DomainError):
            q_function(0)


class TestLambda:
    def test_identities(self):
        assert abs(lambda_fn(0).value - 1) < 1e-10
        assert abs(lambda_fn(1).value - 1) < 1e-10
        assert abs(lambda_star_fn(0).value - 1) < 1e-10
        assert abs(lambda_star_fn(1).value - 6 / math.pi**2) < 1e-9

    def test_half(self):
        v = lambda_fn(0.5, 10**6)
        assert 0 < v.value < 2 and v.tail_bound < 1e-8
        w = lambda_star_fn(0.5, 10**6)
        assert w.value > 0 and w.tail_bound < 1e-8

    @pytest.mark.parametrize("z", [0.25, 0.5, 1.5, 2.0])
    def test_lambda_against_mpmath(self, z):
        # the plain product converges like 1/P, so compare with the mpmath product at the same P
        ref = mp_euler_product(lambda p: (1 + z / (p - 1)) * (1 - 1 / p) ** z, P_SMALL) / mpmath.gamma(z + 1)
        ours = lambda_fn(z, P_SMALL)
        assert abs(math.log(ours.value / float(ref))) <= 2 * z * abs(1 - z) / P_SMALL

    @pytest.mark.parametrize("z", [0.25, 0.5, 1.5, 2.0])
    def test_lambda_star_against_mpmath(self, z):
        ref = mp_euler_product(lambda p: (1 + z / p) * (1 - 1 / p) ** z, P_SMALL) / mpmath.gamma(z + 1)
        ours = lambda_star_fn(z, P_SMALL)
        assert abs(math.log(ours.value / float(ref))) <= 2 * z * (1 + z) / P_SMALL

    @pytest.mark.parametrize("z", [0.0, 0.3, 0.5, 0.7, 1.0, 1.3, 2.0])
    def test_domain_boundary_values(self, z):
        assert lambda_fn(z).value > 0 and lambda_star_fn(z).value > 0

    @pytest.mark.parametrize("z", [-0.01, 2.01])
    def test_domain(self, z):
        with pytest.raises(DomainError):
            lambda_fn(z)
        with pytest.raises(DomainError):
            lambda_star_fn(z)

    def test_prime_limit_domain(self):
        with pytest.raises(DomainError):
            lambda_fn(0.5, 99)


class TestC0:
    def test_three_decimals(self):
        v = c0_constant(10**6)
        assert f"{v.value:.3f}"[:5] == "1.365" and math.floor(v.value * 1000) == 1365
        assert v.tail_bound < 1e-5

    def test_first_factor(self):
        assert 1 + 1 / (2 * (1 + math.sqrt(2))) == pytest.approx(1.2071067811, abs=1e-10)

    def test_term_identity(self):
        for p in oracles.reference_primes(10**4).tolist():
            lhs = (math.sqrt(p) - math.sqrt(p - 1)) / (p * math.sqrt(p - 1))
            rhs = 1 / (p * (p - 1 + math.sqrt(p * p - p)))
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_against_mpmath_with_tail(self):
        ref = mp_euler_product(lambda p: 1 + 1 / (p * (p - 1 + mpmath.sqrt(p * p - p))), 10**5)
        # remaining factors are each below 1 + 1/(2 (p - 1)**2)
        tail = 1 / (2 * (10**5 - 1))
        v = c0_constant(10**6)
        assert 0 <= math.log(v.value / float(ref)) <= tail

    def test_continuity_with_g(self):
        c0 = c0_constant(10**6).value
        assert abs(g_function(0.5001).value - c0) < 1e-3
        assert g_function(0.5).value == c0


class TestC1C2:
    @pytest.mark.parametrize("A", [2, 3, 4, 5, 10, 50])
    def test_c1_is_lambda_over_A(self, A):
        c1, _ = c1_c2_constants(A)
        lam = lambda_fn(1 / A)
        assert c1.value == pytest.approx(lam.value / A, rel=1e-12)

    @pytest.mark.parametrize("A", [2, 3, 5])
    def test_against_mpmath(self, A):
        z = mpmath.mpf(1) / A
        g = mpmath.gamma(z)
        r1 = mp_euler_product(lambda p: (1 + z / (p - 1)) * (1 - 1 / p) ** z, P_SMALL) / g
        r2 = mp_euler_product(lambda p: (1 - z / p) ** -1 * (1 - 1 / p) ** z, P_SMALL) / g
        c1, c2 = c1_c2_constants(A, P_SMALL)
        assert abs(math.log(c1.value / float(r1))) <= 1 / P_SMALL
        assert abs(math.log(c2.value / float(r2))) <= 1 / P_SMALL

    def test_two_limits_agree(self):
        a = c1_c2_constants(2, 10**5)
        b = c1_c2_constants(2, 10**6)
        for u, v in zip(a, b):
            assert abs(math.log(u.value / v.value)) <= u.tail_bound + v.tail_bound

    def test_c2_gamma_trend(self):
        vals = [c1_c2_constants(A)[1].value * gamma(1 / A) for A in (2, 5, 10, 50)]
        devs = [abs(v - 1) for v in vals]
        assert devs == sorted(devs, reverse=True) and devs[-1] < 0.01

    def test_domain(self):
        with pytest.raises(DomainError):
            c1_c2_constants(1)


class TestG:
    def test_first_factor(self):
        assert 1 + (2 - 1) / (4 * 1) == 1.25

    def test_g1_against_mpmath(self):
        ref = mp_euler_product(lambda p: 1 + 1 / (p * p * (p - 1)), 10**5)
        tail = 1 / (10**5 - 1) ** 2
        v = g_function(1.0, 10**6)
        assert 0 <= math.log(v.value / float(ref)) <= tail
        assert v.value == pytest.approx(1.33978415357, abs=1e-10)

    @pytest.mark.parametrize("s", [0.6, 0.75, 1.0, 1.5, 2.0])
    def test_general_s_against_mpmath(self, s):
        s_ = mpmath.mpf(s)
        ref = mp_euler_product(lambda p: 1 + (p**s_ - (p - 1) ** s_) / (p ** (2 * s_) * (p - 1) ** s_), P_SMALL)
        v = g_function(s, P_SMALL)
        assert abs(math.log(v.value / float(ref))) <= 1e-13

    @pytest.mark.parametrize("s", [0.49, 2.01])
    def test_domain(self, s):
        with pytest.raises(DomainError):
            g_function(s)


TAIL_CASES = [
    ("lambda(0.5)", lambda P: lambda_fn(0.5, P)),
    ("lambda(1.7)", lambda P: lambda_fn(1.7, P)),
    ("lambda_star(0.5)", lambda P: lambda_star_fn(0.5, P)),
    ("lambda_star(2)", lambda P: lambda_star_fn(2.0, P)),
    ("c0", c0_constant),
    ("c1(3)", lambda P: c1_c2_constants(3, P)[0]),
    ("c2(3)", lambda P: c1_c2_constants(3, P)[1]),
    ("G(0.6)", lambda P: g_function(0.6, P)),
    ("G(1)", lambda P: g_function(1.0, P)),
]


@pytest.mark.parametrize("name, fn", TAIL_CASES, ids=[c[0] for c in TAIL_CASES])
@pytest.mark.parametrize("P", [100, 1000, 10**5])
def test_tail_honesty(name, fn, P):
    a, b = fn(P), fn(10 * P)
    assert a.tail_bound >= b.tail_bound >= 0
    assert a.value > 0
    assert abs(math.log(a.value / b.value)) < a.tail_bound


class TestFIdentity:
    def test_s2_small_cap(self):
        r = f_identity_check(2.0, 10**6)
        assert r.passed and r.gap <= 1e-6

    @pytest.mark.parametrize("s", [0.6, 0.75, 1.0, 1.5, 2.0])
    def test_default_cap(self, s):
        r = f_identity_check(s, 10**6)
        assert r.passed
        assert r.truncation_bound >= 0 and r.bound >= r.truncation_bound

    def test_lhs_is_plain_sum(self):
        s, cap = 1.0, 10**4
        phi = oracles.harmonic_tables(200)["PHI"]
        ns = {k * int(phi[k]) for k in range(1, 201) if k * int(phi[k]) <= cap}
        assert f_identity_check(s, cap).lhs == pytest.approx(math.fsum(1 / n for n in ns), rel=1e-14)

    def test_detects_wrong_rhs(self):
        # the bound must be tight enough that a 1% error in G is not absorbed
        r = f_identity_check(1.5, 10**6)
        assert 0.01 * r.rhs > r.bound

    @pytest.mark.parametrize("s, cap", [(0.59, 10**5), (2.01, 10**5), (1.0, 9999)])
    def test_domain(self, s, cap):
        with pytest.raises(DomainError):
            f_identity_check(s, cap)
