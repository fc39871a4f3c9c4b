"""Bicubic admittance class, coefficient assumptions, positive-realness test,
parallel-spring extraction, and the biquadratic regularity test."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .poly_core import (
    Polynomial,
    RationalFunction,
    bezout_quantities,
    resultant_R0,
)


class AssumptionViolated(ValueError):
    """Coefficient assumptions (positivity, nondegeneracy) do not hold."""


class NegativeCoefficient(ValueError):
    """A coefficient required to be nonnegative is negative."""


@dataclass(frozen=True)
class BicubicAdmittance:
    """Y(s) = (a3 s^3 + a2 s^2 + a1 s + a0) / (b3 s^3 + b2 s^2 + b1 s),
    defined up to joint positive scaling of numerator and denominator."""

    alpha3: float
    alpha2: float
    alpha1: float
    alpha0: float
    beta3: float
    beta2: float
    beta1: float

    def numerator(self) -> Polynomial:
        return Polynomial([self.alpha0, self.alpha1, self.alpha2, self.alpha3])

    def denominator(self) -> Polynomial:
        return Polynomial([0.0, self.beta1, self.beta2, self.beta3])

    def as_rational(self) -> RationalFunction:
        return RationalFunction(self.numerator(), self.denominator())

    def coeffs(self) -> tuple[float, ...]:
        return (self.alpha3, self.alpha2, self.alpha1, self.alpha0,
                self.beta3, self.beta2, self.beta1)

    def scaled(self, c: float) -> 'BicubicAdmittance':
        return BicubicAdmittance(*(c * v for v in self.coeffs()))

    def __call__(self, s):
        return self.numerator()(s) / self.denominator()(s)


@dataclass(frozen=True)
class BiquadraticImpedance:
    """Zb(s) = (a2 s^2 + a1 s + a0) / (d2 s^2 + d1 s + d0), up to common k > 0."""

    a2: float
    a1: float
    a0: float
    d2: float
    d1: float
    d0: float

    def numerator(self) -> Polynomial:
        return Polynomial([self.a0, self.a1, self.a2])

    def denominator(self) -> Polynomial:
        return Polynomial([self.d0, self.d1, self.d2])

    def as_rational(self) -> RationalFunction:
        return RationalFunction(self.numerator(), self.denominator())

    def __call__(self, s):
        return self.numerator()(s) / self.denominator()(s)


@dataclass(frozen=True)
class AssumptionReport:
    coefficients_positive: bool
    delta_alpha_nonzero: bool
    resultant_nonzero: bool
    ok: bool


def check_assumption1(Y: BicubicAdmittance) -> AssumptionReport:
    """Positivity of all seven coefficients, DeltaAlpha != 0, resultant != 0,
    with a 1e-12 relative zero threshold."""
    c = Y.coeffs()
    scale = max(abs(v) for v in c)
    positive = scale > 0 and all(v > 1e-12 * scale for v in c)
    q = bezout_quantities(Y)
    da_scale = abs(Y.alpha1 * Y.alpha2) + abs(Y.alpha0 * Y.alpha3)
    da_ok = abs(q.DeltaAlpha) > 1e-12 * max(da_scale, 1e-300)
    try:
        r0 = resultant_R0(Y.numerator(), Y.denominator())
        # Hadamard row-norm product bounds |det|, giving a relative scale
        rows = [
            math.hypot(Y.alpha3, Y.alpha2, Y.alpha1, Y.alpha0),
            math.hypot(Y.beta3, Y.beta2, Y.beta1),
        ]
        r0_scale = rows[0] ** 3 * rows[1] ** 3
        r0_ok = abs(r0) > 1e-12 * max(r0_scale, 1e-300)
    except ValueError:
        r0_ok = False
    return AssumptionReport(
        coefficients_positive=bool(positive),
        delta_alpha_nonzero=bool(da_ok),
        resultant_nonzero=bool(r0_ok),
        ok=bool(positive and da_ok and r0_ok),
    )


def require_assumption1(Y: BicubicAdmittance) -> None:
    rep = check_assumption1(Y)
    if not rep.ok:
        fails = [n for n, v in (
            ('coefficients_positive', rep.coefficients_positive),
            ('delta_alpha_nonzero', rep.delta_alpha_nonzero),
            ('resultant_nonzero', rep.resultant_nonzero)) if not v]
        raise AssumptionViolated('assumption check failed: ' + ', '.join(fails))


def is_positive_real(Y: BicubicAdmittance) -> bool:
    """Closed-form positive-realness test for the bicubic class."""
    require_assumption1(Y)
    q = bezout_quantities(Y)
    s1 = abs(Y.alpha1 * Y.beta1) + abs(Y.alpha0 * Y.beta2)
    s2 = abs(Y.alpha2 * Y.beta1) + abs(Y.alpha0 * Y.beta3)
    if q.Bt11 < -1e-8 * s1 or q.Bt12 < -1e-8 * s2:
        return False
    root = math.sqrt(max(q.Bt11, 0.0) * q.Bt33)
    expr = 2.0 * q.Bt13 - q.Bt22 - 2.0 * root
    s3 = 2.0 * abs(q.Bt13) + abs(q.Bt22) + 2.0 * root
    return expr <= 1e-8 * max(s3, 1e-300)


def extract_parallel_spring(Y: BicubicAdmittance) -> tuple[float, BiquadraticImpedance]:
    """Residue of the pole at the origin as a parallel spring, plus the
    impedance left over (normalization constant fixed to 1)."""
    require_assumption1(Y)
    q = bezout_quantities(Y)
    spring_rate = Y.alpha0 / Y.beta1
    zb = BiquadraticImpedance(
        a2=Y.beta1 * Y.beta3, a1=Y.beta1 * Y.beta2, a0=Y.beta1 * Y.beta1,
        d2=q.Bt13, d1=q.Bt12, d0=q.Bt11)
    return spring_rate, zb


def is_regular(Z: BiquadraticImpedance) -> bool:
    """Two-case coefficient test: the minimum of the real part of Z or 1/Z
    on the imaginary axis sits at omega = 0 or infinity."""
    a2, a1, a0, d2, d1, d0 = Z.a2, Z.a1, Z.a0, Z.d2, Z.d1, Z.d0
    coeffs = (a2, a1, a0, d2, d1, d0)
    scale = max(abs(v) for v in coeffs)
    if scale == 0:
        raise NegativeCoefficient('all coefficients zero')
    for v in coeffs:
        if v < -1e-12 * scale:
            raise NegativeCoefficient('coefficients must be nonnegative')

    def geq(value, size):
        return value >= -1e-8 * max(size, 1e-300)

    e = a2 * d0 - a0 * d2
    se = abs(a2 * d0) + abs(a0 * d2)
    c1a = d1 * (a1 * d0 - a0 * d1) - d0 * e
    s1a = abs(d1 * a1 * d0) + abs(d1 * a0 * d1) + abs(d0) * se
    c1b = a1 * (a2 * d1 - a1 * d2) - a2 * e
    s1b = abs(a1 * a2 * d1) + abs(a1 * a1 * d2) + abs(a2) * se
    if geq(e, se) and (geq(c1a, s1a) or geq(c1b, s1b)):
        return True
    c2a = d2 * e - d1 * (a2 * d1 - a1 * d2)
    s2a = abs(d2) * se + abs(d1 * a2 * d1) + abs(d1 * a1 * d2)
    c2b = a0 * e - a1 * (a1 * d0 - a0 * d1)
    s2b = abs(a0) * se + abs(a1 * a1 * d0) + abs(a1 * a0 * d1)
    return geq(-e, se) and (geq(c2a, s2a) or geq(c2b, s2b))


def min_real_part(num, den, include_zero=True, include_inf=True):
    """Minimum of Re(num(jw)/den(jw)) over w >= 0 and where it is attained.

    Returns (value, location) with location in {'zero', 'inf', 'interior'}.
    num/den are ascending coefficient sequences with no imaginary-axis poles
    of the ratio in the scanned set.
    """
    n = np.asarray(num, dtype=float)
    d = np.asarray(den, dtype=float)
    # Re(N(jw)/D(jw)) = P(u)/Q(u) with u = w^2, built from even/odd parts
    ne, no = n[0::2].copy(), n[1::2].copy()
    de, do = d[0::2].copy(), d[1::2].copy()
    sign = lambda k: (-1.0) ** np.arange(k)
    ne *= sign(len(ne))
    no *= sign(len(no))
    de *= sign(len(de))
    do *= sign(len(do))
    P = np.polynomial.polynomial.polymul(ne, de)
    if len(no) and len(do):
        P = np.polynomial.polynomial.polyadd(
            P, np.r_[0.0, np.polynomial.polynomial.polymul(no, do)])
    Q = np.polynomial.polynomial.polymul(de, de)
    if len(do):
        Q = np.polynomial.polynomial.polyadd(
            Q, np.r_[0.0, np.polynomial.polynomial.polymul(do, do)])
    P = np.trim_zeros(P, 'b') if np.any(P) else np.array([0.0])
    Q = np.trim_zeros(Q, 'b')

    def ratio(u):
        return (np.polynomial.polynomial.polyval(u, P)
                / np.polynomial.polynomial.polyval(u, Q))

    candidates = []
    if include_zero:
        candidates.append((float(ratio(0.0)), 'zero'))
    if include_inf:
        dp, dq = len(P) - 1, len(Q) - 1
        if dp == dq:
            candidates.append((float(P[-1] / Q[-1]), 'inf'))
        elif dp < dq:
            candidates.append((0.0, 'inf'))
    # interior stationary points: roots of P'Q - PQ'
    dP = np.polynomial.polynomial.polyder(P) if len(P) > 1 else np.array([0.0])
    dQ = np.polynomial.polynomial.polyder(Q) if len(Q) > 1 else np.array([0.0])
    h = np.polynomial.polynomial.polysub(
        np.polynomial.polynomial.polymul(dP, Q),
        np.polynomial.polynomial.polymul(P, dQ))
    h = np.trim_zeros(h, 'b')
    if len(h) > 1:
        for r in np.roots(h[::-1]):
            if abs(r.imag) <= 1e-8 * (1.0 + abs(r)) and r.real > 0:
                candidates.append((float(ratio(r.real)), 'interior'))
    best = min(candidates, key=lambda t: t[0])
    return best
