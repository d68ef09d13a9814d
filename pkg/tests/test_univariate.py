import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from koornwinder.quadrature import gauss_jacobi, gauss_laguerre
from koornwinder.univariate import (
    Expansion1D,
    JacobiParams,
    LaguerreParams,
    jacobi_dalpha,
    jacobi_dbeta,
    jacobi_eval,
    jacobi_norm,
    laguerre_dalpha,
    laguerre_eval,
    laguerre_norm,
)
from oracles import T, central_difference, jacobi_leibniz, jacobi_rodrigues, laguerre_leibniz, laguerre_rodrigues

params = st.floats(-0.9, 4.0)


def J(a, b):
    return JacobiParams(a, b)


def jac_basis(a, b):
    return lambda n, x: jacobi_eval(n, J(a, b), x)


def test_param_validation():
    with pytest.raises(ValueError):
        JacobiParams(-1.0, 0.0)
    with pytest.raises(ValueError):
        LaguerreParams(-1.5)


def test_jacobi_small_cases():
    assert jacobi_eval(0, J(2.5, -0.3), 0.3) == 1
    assert jacobi_eval(1, J(0, 0), 0.5) == 0.5
    assert jacobi_eval(3, J(0, 0), 1.0) == pytest.approx(1.0, rel=1e-15)
    a, b, x = 0.7, -0.4, 0.21
    assert jacobi_eval(1, J(a, b), x) == pytest.approx((a + b + 2) * x / 2 + (a - b) / 2, rel=1e-15)


def test_laguerre_small_cases():
    assert laguerre_eval(0, LaguerreParams(3.1), 2.0) == 1
    assert laguerre_eval(1, LaguerreParams(2), 1.0) == 2
    assert laguerre_eval(2, LaguerreParams(0), 0.0) == 1


def test_array_evaluation_matches_scalar():
    xs = np.linspace(-0.9, 0.9, 7)
    vals = jacobi_eval(4, J(0.3, 1.2), xs)
    assert vals.shape == xs.shape
    assert np.allclose(vals, [jacobi_eval(4, J(0.3, 1.2), float(x)) for x in xs], rtol=0, atol=0)


@pytest.mark.parametrize("a,b", [(0, 0), (0.5, -0.5), (-0.7, 2.25), (3, 1.5)])
def test_jacobi_matches_rodrigues(a, b):
    rng = np.random.default_rng(1)
    xs = rng.uniform(-1, 1, 20)
    for n in range(11):
        poly = sp.lambdify(T, jacobi_rodrigues(n, a, b), "math")
        for x in xs:
            ref = poly(x)
            assert abs(jacobi_eval(n, J(a, b), x) - ref) <= 1e-10 * max(1.0, abs(ref))


@pytest.mark.parametrize("a", [0, -0.5, 1.25, 3.5])
def test_laguerre_matches_rodrigues(a):
    rng = np.random.default_rng(2)
    xs = rng.uniform(0, 10, 20)
    for n in range(11):
        poly = sp.lambdify(T, laguerre_rodrigues(n, a), "math")
        for x in xs:
            ref = poly(x)
            assert abs(laguerre_eval(n, LaguerreParams(a), x) - ref) <= 1e-10 * max(1.0, abs(ref))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10), params, params, st.floats(-1, 1))
def test_jacobi_matches_leibniz_expansion(n, a, b, x):
    ref = float(jacobi_leibniz(n, a, b, x))
    assert abs(jacobi_eval(n, J(a, b), x) - ref) <= 1e-10 * max(1.0, abs(ref))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10), params, st.floats(0, 10))
def test_laguerre_matches_leibniz_expansion(n, a, x):
    ref = float(laguerre_leibniz(n, a, x))
    assert abs(laguerre_eval(n, LaguerreParams(a), x) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_jacobi_norm_examples():
    assert jacobi_norm(0, J(0, 0)) == pytest.approx(2, rel=1e-15)
    assert jacobi_norm(1, J(0, 0)) == pytest.approx(2 / 3, rel=1e-15)
    assert jacobi_norm(0, J(1, 0)) == pytest.approx(2, rel=1e-15)
    # a + b + 1 = 0 and < 0 at n = 0 go through Gamma(a + b + 2)
    assert jacobi_norm(0, J(-0.5, -0.5)) == pytest.approx(np.pi, rel=1e-14)
    assert jacobi_norm(0, J(-0.8, -0.7)) > 0


def test_laguerre_norm_examples():
    assert laguerre_norm(0, LaguerreParams(0)) == 1
    assert laguerre_norm(2, LaguerreParams(0)) == pytest.approx(1, rel=1e-15)
    assert laguerre_norm(1, LaguerreParams(0.5)) == pytest.approx(1.329340388179137, rel=1e-14)


@pytest.mark.parametrize("a,b", [(0, 0), (-0.8, 3.1), (2.2, -0.6), (-0.5, -0.5)])
def test_jacobi_quadrature_orthogonality(a, b):
    rule = gauss_jacobi(12, a, b)
    vals = [jacobi_eval(n, J(a, b), rule.nodes) for n in range(9)]
    for n in range(9):
        dn = jacobi_norm(n, J(a, b))
        for m in range(9):
            ip = float(np.dot(rule.weights, vals[n] * vals[m]))
            assert abs(ip - (dn if n == m else 0.0)) <= 1e-10 * dn


@pytest.mark.parametrize("a", [-0.8, 0, 2.7])
def test_laguerre_quadrature_orthogonality(a):
    rule = gauss_laguerre(12, a)
    vals = [laguerre_eval(n, LaguerreParams(a), rule.nodes) for n in range(9)]
    for n in range(9):
        dn = laguerre_norm(n, LaguerreParams(a))
        for m in range(9):
            ip = float(np.dot(rule.weights, vals[n] * vals[m]))
            assert abs(ip - (dn if n == m else 0.0)) <= 1e-10 * dn


def test_dalpha_examples():
    assert jacobi_dalpha(0, J(1, 1)).is_empty
    e = jacobi_dalpha(1, J(0, 0))
    assert e.self_coefficient == pytest.approx(0.5)
    assert e.lower_terms == ((0, pytest.approx(0.5)),)
    x = 0.37
    assert e.evaluate(jac_basis(0, 0), x) == pytest.approx(x / 2 + 0.5, rel=1e-15)


def test_dalpha_n2_finite_difference():
    e = jacobi_dalpha(2, J(0, 0))
    fd = central_difference(lambda a: jacobi_eval(2, J(a, 0), 0.7), 0.0, 1e-5)
    assert e.evaluate(jac_basis(0, 0), 0.7) == pytest.approx(fd, abs=1e-7)


def test_dbeta_examples():
    assert jacobi_dbeta(0, J(0, 0)).is_empty
    x = -0.3
    assert jacobi_dbeta(1, J(0, 0)).evaluate(jac_basis(0, 0), x) == pytest.approx(x / 2 - 0.5, rel=1e-15)


def test_dalpha_singular_sum_parameter():
    # a + b + 1 = 0 makes (a+b+1)_n vanish; coefficients must stay finite
    a, b = -0.25, -0.75
    for n in range(1, 7):
        e = jacobi_dalpha(n, J(a, b))
        assert all(np.isfinite(c) for _, c in e.lower_terms)
        x = 0.41
        fd = central_difference(lambda t: jacobi_eval(n, J(t, b), x), a, 1e-5)
        assert e.evaluate(jac_basis(a, b), x) == pytest.approx(fd, rel=1e-7, abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 8), params, params, st.floats(-0.95, 0.95))
def test_dbeta_reflection_symmetry(n, a, b, x):
    lhs = jacobi_dbeta(n, J(a, b)).evaluate(jac_basis(a, b), x)
    rhs = (-1) ** n * jacobi_dalpha(n, J(b, a)).evaluate(jac_basis(b, a), -x)
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


def test_expansion_structure():
    for n in range(13):
        for e in (jacobi_dalpha(n, J(0.3, 0.4)), jacobi_dbeta(n, J(0.3, 0.4)), laguerre_dalpha(n)):
            degrees = [k for k, _ in e.lower_terms]
            assert degrees == list(range(n)) or (n == 0 and degrees == [])
            assert e.is_empty == (n == 0)


def test_laguerre_dalpha_examples():
    assert laguerre_dalpha(0).is_empty
    assert laguerre_dalpha(1) == Expansion1D(1, 0.0, ((0, 1.0),))
    assert laguerre_dalpha(3).lower_terms == ((0, 1 / 3), (1, 1 / 2), (2, 1.0))
    assert laguerre_dalpha(1).evaluate(lambda n, x: laguerre_eval(n, LaguerreParams(2.0), x), 4.5) == 1.0


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.floats(-0.8, 4), st.floats(-0.8, 4), st.floats(-0.95, 0.95))
def test_jacobi_expansions_match_finite_differences(n, a, b, x):
    h = 1e-5
    fd_a = central_difference(lambda t: jacobi_eval(n, J(t, b), x), a, h * max(1, abs(a)))
    fd_b = central_difference(lambda t: jacobi_eval(n, J(a, t), x), b, h * max(1, abs(b)))
    ea = jacobi_dalpha(n, J(a, b)).evaluate(jac_basis(a, b), x)
    eb = jacobi_dbeta(n, J(a, b)).evaluate(jac_basis(a, b), x)
    assert abs(ea - fd_a) <= max(1e-8, 1e-6 * abs(fd_a))
    assert abs(eb - fd_b) <= max(1e-8, 1e-6 * abs(fd_b))
