import numpy as np
import pytest

from passivesynth.poly_core import (
    BezoutianSet,
    DegreeZero,
    Polynomial,
    RationalFunction,
    ShapeMismatch,
    bezout_quantities,
    poly_mul,
    poly_val,
    rational_equivalent,
    real_roots,
    resultant_R0,
)


class Coeffs:
    def __init__(self, a3, a2, a1, a0, b3, b2, b1):
        self.alpha3, self.alpha2, self.alpha1, self.alpha0 = a3, a2, a1, a0
        self.beta3, self.beta2, self.beta1 = b3, b2, b1


def test_polynomial_trims_and_evaluates():
    p = Polynomial([1.0, 2.0, 0.0, 0.0])
    assert p.coeffs == (1.0, 2.0)
    assert p.degree() == 1
    assert p(3.0) == 7.0


def test_real_roots_factored_cubic():
    # (s-1)(s-2)(s-3) = s^3 - 6s^2 + 11s - 6
    roots = real_roots(Polynomial([-6.0, 11.0, -6.0, 1.0]))
    assert np.allclose(roots, [1.0, 2.0, 3.0], atol=1e-9)


def test_real_roots_contains_minus_one():
    roots = real_roots(Polynomial([10.0, 17.0, 13.0, 6.0]))
    assert any(abs(r + 1.0) <= 1e-9 for r in roots)


def test_real_roots_collapses_multiplicity():
    # (s+2)^2 (s-1)
    p = poly_mul(poly_mul([2.0, 1.0], [2.0, 1.0]), [-1.0, 1.0])
    roots = real_roots(Polynomial(p), tol=1e-5)
    assert len(roots) == 2
    assert abs(roots[0] + 2.0) < 1e-5 and abs(roots[1] - 1.0) < 1e-9


def test_real_roots_degree_zero_raises():
    with pytest.raises(DegreeZero):
        real_roots(Polynomial([4.0]))


def bisect_roots(coeffs, lo=-50.0, hi=50.0, n=200000):
    xs = np.linspace(lo, hi, n)
    ys = poly_val(np.array(coeffs), xs)
    out = []
    for i in range(n - 1):
        if ys[i] == 0.0:
            out.append(xs[i])
        elif ys[i] * ys[i + 1] < 0:
            a, b = xs[i], xs[i + 1]
            for _ in range(80):
                m = 0.5 * (a + b)
                if poly_val(coeffs, a) * poly_val(coeffs, m) <= 0:
                    b = m
                else:
                    a = m
            out.append(0.5 * (a + b))
    return out


def test_real_roots_matches_bisection_oracle():
    rng = np.random.default_rng(7)
    for _ in range(20):
        c = rng.uniform(-1.0, 1.0, size=5)
        c[4] = rng.uniform(0.5, 1.5) * (1 if c[4] >= 0 else -1)
        expected = bisect_roots(tuple(c))
        got = [r for r in real_roots(Polynomial(c)) if -50 < r < 50]
        assert len(got) == len(expected)
        for g, e in zip(got, sorted(expected)):
            assert abs(g - e) <= 1e-6 * (1 + abs(e))


def test_real_roots_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(30):
        k = rng.integers(2, 7)
        while True:
            roots = np.sort(rng.uniform(-5.0, 5.0, size=k))
            if np.all(np.diff(roots) > 0.1):
                break
        coeffs = np.poly(roots)[::-1]  # ascending, monic
        got = real_roots(Polynomial(coeffs))
        assert len(got) == k
        assert np.allclose(got, roots, atol=1e-7)


def test_resultant_zero_on_shared_root():
    # both vanish at s = -1
    alpha = poly_mul([1.0, 1.0], [5.0, 3.0, 1.0])
    beta = poly_mul([0.0, 1.0], poly_mul([1.0, 1.0], [4.0, 1.0]))
    assert abs(resultant_R0(Polynomial(alpha), Polynomial(beta))) < 1e-6


def test_resultant_nonzero_when_coprime():
    r = resultant_R0(Polynomial([10.0, 17.0, 13.0, 6.0]),
                     Polynomial([0.0, 15.0, 13.0, 7.0]))
    assert abs(r) > 1.0


def test_resultant_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        resultant_R0(Polynomial([1.0, 2.0, 1.0]), Polynomial([0.0, 1.0, 1.0, 1.0]))
    with pytest.raises(ShapeMismatch):
        resultant_R0(Polynomial([1.0, 2.0, 1.0, 1.0]), Polynomial([1.0, 1.0, 1.0, 1.0]))


def test_bezout_quantities_reference_values():
    q = bezout_quantities(Coeffs(6.0, 13.0, 17.0, 10.0, 7.0, 13.0, 15.0))
    assert isinstance(q, BezoutianSet)
    assert q.Bt11 == pytest.approx(125.0, abs=1e-12)
    assert q.Bt13 == pytest.approx(90.0, abs=1e-12)


def bez_matrix(q):
    return np.array([
        [q.B11, q.B12, q.B13],
        [q.B12, q.B22, q.B23],
        [q.B13, q.B23, q.B33],
    ])


def bez_matrix_reduced(q):
    return np.array([
        [q.Bt11, q.Bt12, q.Bt13],
        [q.Bt12, q.Bt22, q.Bt23],
        [q.Bt13, q.Bt23, q.Bt33],
    ])


def test_bezout_bilinear_identity():
    """The quantity set reproduces the two-point divided difference of the
    coefficient polynomials at random evaluation points."""
    rng = np.random.default_rng(3)
    for _ in range(100):
        a3, a2, a1, a0, b3, b2, b1 = rng.uniform(0.2, 3.0, size=7)
        Y = Coeffs(a3, a2, a1, a0, b3, b2, b1)
        q = bezout_quantities(Y)
        alpha = (a0, a1, a2, a3)
        beta = (0.0, b1, b2, b3)
        beta_red = (b1, b2, b3)
        s1, s2 = rng.uniform(-3.0, 3.0, size=2)
        if abs(s2 - s1) < 1e-3:
            s2 += 1.0
        v1 = np.array([1.0, s1, s1 * s1])
        v2 = np.array([1.0, s2, s2 * s2])
        lhs = v2 @ bez_matrix(q) @ v1
        rhs = (poly_val(alpha, s2) * poly_val(beta, s1)
               - poly_val(beta, s2) * poly_val(alpha, s1)) / (s2 - s1)
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)
        lhs_t = v2 @ bez_matrix_reduced(q) @ v1
        rhs_t = (poly_val(alpha, s2) * poly_val(beta_red, s1)
                 - poly_val(beta_red, s2) * poly_val(alpha, s1)) / (s2 - s1)
        assert lhs_t == pytest.approx(rhs_t, rel=1e-9, abs=1e-9)


def test_rational_equivalent_scaled():
    f = RationalFunction([1.0, 1.0], [2.0, 1.0])
    g = RationalFunction([2.0, 2.0], [4.0, 2.0])
    assert rational_equivalent(f, g)


def test_rational_equivalent_common_factor():
    f = RationalFunction([1.0, 1.0], [2.0, 1.0])
    g = RationalFunction(poly_mul([1.0, 1.0], [3.0, 1.0]),
                         poly_mul([2.0, 1.0], [3.0, 1.0]))
    assert rational_equivalent(f, g)


def test_rational_equivalent_rejects_negative_scale_and_mismatch():
    f = RationalFunction([1.0, 1.0], [2.0, 1.0])
    assert not rational_equivalent(f, RationalFunction([-1.0, -1.0], [2.0, 1.0]))
    assert not rational_equivalent(f, RationalFunction([1.0, 1.0], [3.0, 1.0]))


def test_rational_equivalent_properties():
    rng = np.random.default_rng(19)
    for _ in range(50):
        num = rng.uniform(0.1, 2.0, size=3)
        den = rng.uniform(0.1, 2.0, size=4)
        c = float(rng.uniform(0.1, 10.0))
        f = RationalFunction(num, den)
        g = RationalFunction(c * num, c * den)
        bent = num.copy()
        bent[1] *= 1.001
        h = RationalFunction(bent, den)
        assert rational_equivalent(f, f)
        # scaling numerator alone is still equivalence up to a positive scalar
        assert rational_equivalent(f, RationalFunction(c * num, den))
        assert rational_equivalent(f, g) and rational_equivalent(g, f)
        assert not rational_equivalent(f, h)
