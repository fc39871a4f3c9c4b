"""Polynomial and rational-function arithmetic, real root isolation, the
degree-3 resultant test, and the bilinear-form quantity set used by the
realizability conditions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DegreeZero(ValueError):
    """Root isolation requested on a constant polynomial."""


class ShapeMismatch(ValueError):
    """Polynomial degrees do not match the operation's contract."""


# coefficients are stored ascending: coeffs[i] multiplies s**i


def poly_trim(coeffs) -> tuple[float, ...]:
    """Drop trailing (highest-degree) zeros; keep at least one entry."""
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(float(v) for v in c)


def poly_add(p, q) -> tuple[float, ...]:
    n = max(len(p), len(q))
    out = [0.0] * n
    for i, v in enumerate(p):
        out[i] += v
    for i, v in enumerate(q):
        out[i] += v
    return poly_trim(out)


def poly_sub(p, q) -> tuple[float, ...]:
    return poly_add(p, [-v for v in q])


def poly_mul(p, q) -> tuple[float, ...]:
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_scale(p, c) -> tuple[float, ...]:
    return poly_trim([c * v for v in p])


def poly_val(p, s):
    """Evaluate at s (real or complex), Horner on descending order."""
    acc = 0.0 * s
    for c in reversed(tuple(p)):
        acc = acc * s + c
    return acc


def poly_deriv(p) -> tuple[float, ...]:
    if len(p) == 1:
        return (0.0,)
    return poly_trim([i * p[i] for i in range(1, len(p))])


@dataclass(frozen=True)
class Polynomial:
    """Real-coefficient polynomial, coefficients ascending in degree."""

    coeffs: tuple[float, ...]

    def __init__(self, coeffs):
        object.__setattr__(self, 'coeffs', poly_trim(coeffs))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, s):
        return poly_val(self.coeffs, s)


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of two real polynomials; equality is up to a common scalar."""

    num: Polynomial
    den: Polynomial

    def __init__(self, num, den):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if all(c == 0 for c in den.coeffs):
            raise ZeroDivisionError('denominator identically zero')
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    def __call__(self, s):
        return self.num(s) / self.den(s)


@dataclass(frozen=True)
class BezoutianSet:
    """The scalar quantity set entering every realizability condition."""

    B11: float
    B12: float
    B13: float
    B22: float
    B23: float
    B33: float
    Bt11: float
    Bt12: float
    Bt13: float
    Bt22: float
    Bt23: float
    Bt33: float
    M23: float
    M33: float
    Mt12: float
    DeltaAlpha: float
    DeltaBeta: float


def real_roots(p, tol: float = 1e-9) -> list[float]:
    """All real roots, ascending, multiplicities collapsed.

    Companion-matrix eigenvalues with one Newton polish step; a root is
    accepted as real when |imag| <= 1e-8 * (1 + |root|).
    """
    coeffs = poly_trim(p.coeffs if isinstance(p, Polynomial) else p)
    if len(coeffs) < 2:
        raise DegreeZero('constant polynomial has no roots to isolate')
    desc = np.array(coeffs[::-1], dtype=float)
    raw = np.roots(desc)
    dp = poly_deriv(coeffs)
    out = []
    for r in raw:
        if abs(r.imag) > 1e-8 * (1.0 + abs(r)):
            continue
        x = float(r.real)
        fx = poly_val(coeffs, x)
        fpx = poly_val(dp, x)
        if fpx != 0:
            step = fx / fpx
            if abs(step) <= 1e-2 * (1.0 + abs(x)):
                x = x - step
        out.append(x)
    out.sort()
    collapsed: list[float] = []
    for x in out:
        if collapsed and abs(x - collapsed[-1]) <= tol * (1.0 + abs(x)):
            continue
        collapsed.append(x)
    return collapsed


def resultant_R0(alpha, beta) -> float:
    """6x6 resultant-style determinant deciding whether the numerator and
    denominator of the bicubic admittance share a root (degree drop)."""
    a = poly_trim(alpha.coeffs if isinstance(alpha, Polynomial) else alpha)
    b = poly_trim(beta.coeffs if isinstance(beta, Polynomial) else beta)
    if len(a) != 4:
        raise ShapeMismatch('numerator must have degree 3')
    if len(b) != 4 or b[0] != 0:
        raise ShapeMismatch('denominator must be degree 3 with zero constant')
    a3, a2, a1, a0 = a[3], a[2], a[1], a[0]
    b3, b2, b1 = b[3], b[2], b[1]
    m = np.array([
        [a3, a2, a1, a0, 0., 0.],
        [0., a3, a2, a1, a0, 0.],
        [0., 0., a3, a2, a1, a0],
        [b3, b2, b1, 0., 0., 0.],
        [0., b3, b2, b1, 0., 0.],
        [0., 0., b3, b2, b1, 0.],
    ])
    return float(np.linalg.det(m))


def bezout_quantities(Y) -> BezoutianSet:
    """Closed-form quantity set from the seven admittance coefficients."""
    a3, a2, a1, a0 = Y.alpha3, Y.alpha2, Y.alpha1, Y.alpha0
    b3, b2, b1 = Y.beta3, Y.beta2, Y.beta1
    B13 = -a0 * b3
    Bt13 = a3 * b1
    return BezoutianSet(
        B11=-a0 * b1,
        B12=-a0 * b2,
        B13=B13,
        B22=B13 + a2 * b1 - a1 * b2,
        B23=a3 * b1 - a1 * b3,
        B33=a3 * b2 - a2 * b3,
        Bt11=a1 * b1 - a0 * b2,
        Bt12=a2 * b1 - a0 * b3,
        Bt13=Bt13,
        Bt22=Bt13 + a2 * b2 - a1 * b3,
        Bt23=a3 * b2,
        Bt33=a3 * b3,
        M23=a3 * b1 + a1 * b3,
        M33=a3 * b2 + a2 * b3,
        Mt12=a2 * b1 + a0 * b3,
        DeltaAlpha=a1 * a2 - a0 * a3,
        DeltaBeta=b2 * b2 - 4.0 * b1 * b3,
    )


def rational_equivalent(f: RationalFunction, g: RationalFunction,
                        tol: float = 1e-9) -> bool:
    """True iff f and g agree as rational functions up to one positive scalar.

    Compares the cross products num_f*den_g and num_g*den_f coefficient-wise,
    relative to the largest coefficient.
    """
    p = np.array(poly_mul(f.num.coeffs, g.den.coeffs))
    q = np.array(poly_mul(g.num.coeffs, f.den.coeffs))
    n = max(len(p), len(q))
    p = np.pad(p, (0, n - len(p)))
    q = np.pad(q, (0, n - len(q)))
    pmax = np.max(np.abs(p))
    qmax = np.max(np.abs(q))
    if pmax == 0 or qmax == 0:
        return pmax == qmax
    lam = float(np.dot(p, q) / np.dot(q, q))
    if lam <= 0:
        return False
    scale = max(pmax, lam * qmax)
    return bool(np.max(np.abs(p - lam * q)) <= tol * scale)
