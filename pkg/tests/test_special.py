import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from koornwinder.special import gamma_ratio, ln_beta, ln_gamma, pochhammer


def test_ln_gamma_examples():
    assert ln_gamma(1) == 0
    assert ln_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-15)
    assert ln_gamma(5) == pytest.approx(math.log(24), rel=1e-15)


@pytest.mark.parametrize("x", [0, -1, -0.5])
def test_ln_gamma_domain(x):
    with pytest.raises(ValueError):
        ln_gamma(x)


def test_ln_gamma_accuracy_against_mpmath():
    mpmath.mp.dps = 30
    for x in [1e-3, 0.017, 0.3, 0.9, 3.3, 7.25, 42.0, 101.5, 555.5, 1e3]:
        ref = float(mpmath.loggamma(x))
        assert abs(ln_gamma(x) - ref) <= 1e-13 * abs(ref)


@pytest.mark.parametrize("a,b,expected", [(5, 4, 4), (1, 1, 1), (10.5, 9.5, 9.5)])
def test_gamma_ratio_examples(a, b, expected):
    assert gamma_ratio(a, b) == pytest.approx(expected, rel=1e-13)


def test_gamma_ratio_no_overflow():
    assert gamma_ratio(200, 199) == pytest.approx(199, rel=1e-12)
    with pytest.raises(ValueError):
        gamma_ratio(-1, 2)


def test_gamma_ratio_shift_grid():
    for i in range(1, 501):
        a = 0.1 * i
        assert gamma_ratio(a + 1, a) == pytest.approx(a, rel=1e-12)


def test_factorials():
    for n in range(21):
        assert math.exp(ln_gamma(n + 1)) == pytest.approx(math.factorial(n), rel=1e-12)


def test_ln_beta():
    assert math.exp(ln_beta(2, 3)) == pytest.approx(1 / 12, rel=1e-14)


def test_pochhammer_examples():
    assert pochhammer(7.3, 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(0.5, 3) == 1.875
    assert pochhammer(-2.0, 0) == 1
    assert pochhammer(-2.0, 3) == 0  # (-2)(-1)(0)
    with pytest.raises(ValueError):
        pochhammer(1.0, -1)


@given(st.floats(-20, 20), st.integers(0, 30))
def test_pochhammer_step(a, k):
    assert pochhammer(a, k + 1) == pytest.approx(pochhammer(a, k) * (a + k), rel=1e-12, abs=1e-300)
