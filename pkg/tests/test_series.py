import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankelbound.series import (
    PowerSeries,
    SeriesDomainError,
    derivative,
    div,
    exp_unit,
    log_unit,
    mul,
    pow_complex,
)


def coeffs_close(s: PowerSeries, expected, tol=1e-12):
    exp = np.asarray(expected, dtype=complex)
    assert s.coeffs.shape == exp.shape
    assert np.max(np.abs(s.coeffs - exp)) <= tol


class TestMul:
    def test_difference_of_squares(self):
        a = PowerSeries.from_poly([1, 1], 2)
        b = PowerSeries.from_poly([1, -1], 2)
        coeffs_close(mul(a, b), [1, 0, -1])

    def test_identity_element(self):
        a = PowerSeries.from_poly([1, 2, 3], 2)
        coeffs_close(mul(a, PowerSeries.one(2)), [1, 2, 3])

    def test_square_truncated(self):
        a = PowerSeries.from_poly([1, 1, 1], 2)
        coeffs_close(mul(a, a), [1, 2, 3])

    def test_truncates_to_smaller_order(self):
        a = PowerSeries.from_poly([1, 1], 5)
        b = PowerSeries.from_poly([1, 1], 2)
        assert mul(a, b).order == 2


class TestDiv:
    def test_geometric_factorization(self):
        num = PowerSeries.from_poly([1, 0, -1], 1)
        den = PowerSeries.from_poly([1, -1], 1)
        coeffs_close(div(num, den), [1, 1])

    def test_self_division(self):
        a = PowerSeries.from_poly([2, 1, -3, 0.5], 3)
        coeffs_close(div(a, a), [1, 0, 0, 0])

    def test_binomial_series(self):
        one = PowerSeries.one(3)
        den = mul(PowerSeries.from_poly([1, -1], 3), PowerSeries.from_poly([1, -1], 3))
        coeffs_close(div(one, den), [1, 2, 3, 4])

    def test_zero_constant_term_raises(self):
        with pytest.raises(SeriesDomainError):
            div(PowerSeries.one(3), PowerSeries.from_poly([0, 1], 3))


class TestLogExp:
    def test_log_of_one(self):
        coeffs_close(log_unit(PowerSeries.one(5)), np.zeros(6))

    def test_koebe_log_coefficients(self):
        # log(f/z) for the Koebe function has coefficient 2/n of z^n.
        fz = pow_complex(PowerSeries.from_poly([1, -1], 8), -2)
        s = log_unit(fz)
        expected = [0.0] + [2.0 / n for n in range(1, 9)]
        coeffs_close(s, expected, tol=1e-12)

    def test_mercator_series(self):
        s = log_unit(PowerSeries.from_poly([1, 1], 3))
        coeffs_close(s, [0, 1, -0.5, 1.0 / 3.0])

    def test_exp_of_zero(self):
        coeffs_close(exp_unit(PowerSeries.from_poly([0], 4)), [1, 0, 0, 0, 0])

    def test_exp_series(self):
        e = exp_unit(PowerSeries.from_poly([0, 1], 3))
        coeffs_close(e, [1, 1, 0.5, 1.0 / 6.0])

    def test_exp_log_round_trip_simple(self):
        a = PowerSeries.from_poly([1, 1], 6)
        coeffs_close(exp_unit(log_unit(a)), a.coeffs, tol=1e-14)

    def test_log_requires_unit_constant_term(self):
        with pytest.raises(SeriesDomainError):
            log_unit(PowerSeries.from_poly([2, 1], 3))

    def test_exp_requires_zero_constant_term(self):
        with pytest.raises(SeriesDomainError):
            exp_unit(PowerSeries.from_poly([1, 1], 3))


class TestPow:
    def test_geometric_in_z_squared(self):
        p = pow_complex(PowerSeries.from_poly([1, 0, -1], 4), -1)
        coeffs_close(p, [1, 0, 1, 0, 1], tol=1e-12)

    def test_binomial(self):
        p = pow_complex(PowerSeries.from_poly([1, -1], 2), -2)
        coeffs_close(p, [1, 2, 3], tol=1e-12)

    def test_spirallike_extremal_expansion(self):
        # (1-z^2)^(-w) with w = 1 (alpha = beta = 0): a2 = 0, a3 = 1.
        p = pow_complex(PowerSeries.from_poly([1, 0, -1], 3), -1)
        assert abs(p[1]) <= 1e-14
        assert abs(p[2] - 1.0) <= 1e-14

    def test_pow_one_and_zero(self):
        rng = np.random.default_rng(11)
        c = rng.uniform(-1, 1, 7) + 1j * rng.uniform(-1, 1, 7)
        c[0] = 1.0
        a = PowerSeries(c)
        coeffs_close(pow_complex(a, 1.0), a.coeffs, tol=1e-12)
        coeffs_close(pow_complex(a, 0.0), PowerSeries.one(6).coeffs, tol=1e-12)


class TestDerivative:
    def test_polynomial(self):
        coeffs_close(derivative(PowerSeries.from_poly([1, 1, 1], 2)), [1, 2])

    def test_constant(self):
        coeffs_close(derivative(PowerSeries.from_poly([7], 0)), [0])

    def test_koebe_derivative(self):
        # f = z/(1-z)^2 has f' with coefficient (n+1)^2 of z^n.
        fz = pow_complex(PowerSeries.from_poly([1, -1], 6), -2)
        f = PowerSeries(np.concatenate([[0], fz.coeffs[:-1]]))  # multiply by z
        expected = [(n + 1) ** 2 for n in range(6)]
        coeffs_close(derivative(f), expected, tol=1e-10)


def _random_unit_series(rng, order):
    c = rng.uniform(-1, 1, order + 1) + 1j * rng.uniform(-1, 1, order + 1)
    c[0] = 1.0
    return PowerSeries(c)


class TestInvariants:
    def test_exp_log_round_trip_random(self):
        rng = np.random.default_rng(0)
        for _ in range(500):
            a = _random_unit_series(rng, int(rng.integers(1, 13)))
            back = exp_unit(log_unit(a))
            assert np.max(np.abs(back.coeffs - a.coeffs)) <= 1e-10

    def test_mul_commutative_associative(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            order = int(rng.integers(1, 11))
            a = _random_unit_series(rng, order)
            b = _random_unit_series(rng, order)
            c = _random_unit_series(rng, order)
            ab = mul(a, b)
            ba = mul(b, a)
            assert np.max(np.abs(ab.coeffs - ba.coeffs)) <= 1e-12
            left = mul(mul(a, b), c)
            right = mul(a, mul(b, c))
            assert np.max(np.abs(left.coeffs - right.coeffs)) <= 1e-12

    def test_div_inverse(self):
        rng = np.random.default_rng(2)
        for _ in range(300):
            order = int(rng.integers(1, 11))
            a = _random_unit_series(rng, order)
            b = _random_unit_series(rng, order)
            if abs(b[0]) < 0.5:
                continue
            back = mul(div(a, b), b)
            assert np.max(np.abs(back.coeffs - a.coeffs)) <= 1e-10


coeff_lists = st.lists(
    st.tuples(
        st.floats(-1, 1, allow_nan=False),
        st.floats(-1, 1, allow_nan=False),
    ),
    min_size=2,
    max_size=11,
)


@settings(deadline=None, max_examples=200)
@given(coeff_lists)
def test_round_trip_property(pairs):
    c = np.array([complex(re, im) for re, im in pairs])
    c[0] = 1.0
    a = PowerSeries(c)
    back = exp_unit(log_unit(a))
    assert np.max(np.abs(back.coeffs - a.coeffs)) <= 1e-10
