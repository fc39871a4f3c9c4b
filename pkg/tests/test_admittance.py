import numpy as np
import pytest

from passivesynth.admittance import (
    AssumptionViolated,
    BicubicAdmittance,
    BiquadraticImpedance,
    NegativeCoefficient,
    check_assumption1,
    extract_parallel_spring,
    is_positive_real,
    is_regular,
    min_real_part,
)

EX1 = BicubicAdmittance(6.0, 13.0, 17.0, 10.0, 7.0, 13.0, 15.0)


def test_assumption1_holds_on_reference_input():
    rep = check_assumption1(EX1)
    assert rep.coefficients_positive
    assert rep.delta_alpha_nonzero
    assert rep.resultant_nonzero
    assert rep.ok


def test_assumption1_zero_coefficient():
    rep = check_assumption1(BicubicAdmittance(6, 13, 17, 0, 7, 13, 15))
    assert not rep.coefficients_positive
    assert not rep.ok


def test_assumption1_negative_coefficient():
    rep = check_assumption1(BicubicAdmittance(6, -13, 17, 10, 7, 13, 15))
    assert not rep.coefficients_positive
    assert not rep.ok


def test_assumption1_degenerate_delta_alpha():
    # alpha1 * alpha2 = alpha0 * alpha3 makes the numerator quantity vanish
    rep = check_assumption1(BicubicAdmittance(2, 3, 4, 6, 1, 1, 1))
    assert rep.coefficients_positive
    assert not rep.delta_alpha_nonzero
    assert not rep.ok


def test_assumption1_shared_factor_kills_resultant():
    # numerator (s+1)(s^2+3s+5), denominator s(s+1)(s+4)
    rep = check_assumption1(BicubicAdmittance(1, 4, 8, 5, 1, 5, 4))
    assert not rep.resultant_nonzero
    assert not rep.ok


def test_positive_real_reference_true():
    assert is_positive_real(EX1)


def test_positive_real_rejects_large_alpha0():
    assert not is_positive_real(BicubicAdmittance(1, 1, 1, 10, 1, 1, 1))


def test_positive_real_raises_without_assumption():
    with pytest.raises(AssumptionViolated):
        is_positive_real(BicubicAdmittance(6, 13, 17, 0, 7, 13, 15))


def sweep_positive_real(Y, n=400):
    w = np.logspace(-4, 4, n)
    vals = Y(1j * w)
    return float(np.min(vals.real))


def test_positive_real_agrees_with_frequency_sweep():
    rng = np.random.default_rng(23)
    checked = 0
    while checked < 300:
        c = rng.uniform(0.1, 10.0, size=7)
        Y = BicubicAdmittance(*c)
        if not check_assumption1(Y).ok:
            continue
        checked += 1
        verdict = is_positive_real(Y)
        floor = sweep_positive_real(Y)
        scale = max(abs(v) for v in c) ** 2
        if verdict:
            assert floor >= -1e-6 * scale
        else:
            # sweep may miss a shallow dip, but a clear dip must mean not PR
            if floor < -1e-6 * scale:
                assert not verdict


def test_extract_parallel_spring_reference():
    k, zb = extract_parallel_spring(EX1)
    assert k == pytest.approx(10.0 / 15.0, rel=1e-12)
    assert (zb.a2, zb.a1, zb.a0) == (105.0, 195.0, 225.0)
    assert (zb.d2, zb.d1, zb.d0) == (90.0, 125.0, 125.0)


def test_extract_parallel_spring_recomposition():
    k, zb = extract_parallel_spring(EX1)
    for s in [0.3 + 0.7j, 2.0 - 1.0j, 0.05 + 3.0j, 5.0 + 0.0j]:
        recomposed = k / s + 1.0 / zb(s)
        assert recomposed == pytest.approx(EX1(s), rel=1e-12)


def test_regular_boundary_minimum():
    # (s^2 + 2s + 1)/(s^2 + s + 1): real part minimal at omega = 0
    assert is_regular(BiquadraticImpedance(1, 2, 1, 1, 1, 1))


def test_not_regular_interior_minimum():
    _, zb = extract_parallel_spring(EX1)
    assert not is_regular(zb)


def test_regular_pure_numerator_side():
    # d1 = d0 = a0 = 0 degenerates both case conditions to equalities
    assert is_regular(BiquadraticImpedance(3, 2, 0, 5, 0, 0))


def test_regular_raises_on_negative():
    with pytest.raises(NegativeCoefficient):
        is_regular(BiquadraticImpedance(1, -1, 1, 1, 1, 1))


def test_regular_matches_numeric_minimum():
    rng = np.random.default_rng(41)
    compared = 0
    for _ in range(400):
        c = rng.uniform(0.05, 5.0, size=6)
        Z = BiquadraticImpedance(*c)
        num = [Z.a0, Z.a1, Z.a2]
        den = [Z.d0, Z.d1, Z.d2]
        vz, _ = min_real_part(num, den)
        if vz <= 1e-6:
            continue
        vy, _ = min_real_part(den, num)
        bz = min(Z.a0 / Z.d0, Z.a2 / Z.d2)
        by = min(Z.d0 / Z.a0, Z.d2 / Z.a2)
        gz = bz - vz
        gy = by - vy
        if 1e-9 < gz < 1e-6 or 1e-9 < gy < 1e-6:
            continue
        boundary = gz <= 1e-9 or gy <= 1e-9
        assert is_regular(Z) == boundary
        compared += 1
    assert compared > 100


def test_regular_scale_invariant():
    rng = np.random.default_rng(5)
    for _ in range(50):
        c = rng.uniform(0.05, 5.0, size=6)
        Z = BiquadraticImpedance(*c)
        Zs = BiquadraticImpedance(*(1e3 * c))
        assert is_regular(Z) == is_regular(Zs)


def test_positive_real_scale_invariant():
    rng = np.random.default_rng(6)
    done = 0
    while done < 50:
        c = rng.uniform(0.1, 10.0, size=7)
        Y = BicubicAdmittance(*c)
        if not check_assumption1(Y).ok:
            continue
        done += 1
        for scale in (1e-3, 1e3):
            assert is_positive_real(Y.scaled(scale)) == is_positive_real(Y)


def test_min_real_part_known_cases():
    # Z = (s+2)/(s+1): Re on axis decreases from 2 to 1, min at infinity
    v, loc = min_real_part([2.0, 1.0], [1.0, 1.0])
    assert loc == 'inf'
    assert v == pytest.approx(1.0, rel=1e-9)
    # Z = (s+1)/(s+2): min at zero
    v, loc = min_real_part([1.0, 1.0], [2.0, 1.0])
    assert loc == 'zero'
    assert v == pytest.approx(0.5, rel=1e-9)
