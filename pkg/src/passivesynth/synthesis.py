"""Synthesis of bicubic admittances as series-parallel damper-spring-inerter
circuits with at most six elements: pole-removal recursion for the regular
case and closed-form feasibility tests for the special layouts."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .admittance import (
    BicubicAdmittance,
    check_assumption1,
    extract_parallel_spring,
    is_positive_real,
    is_regular,
    min_real_part,
)
from .circuits import (
    CircuitNode,
    _raw_admittance,
    damper,
    inerter,
    parallel,
    series,
    spring,
    verify_realization,
)
from .poly_core import bezout_quantities, real_roots

CONFIGS = ('foster', 'fig2a', 'fig2b', 'fig2c', 'fig2d',
           'fig3a', 'fig3b', 'fig3c',
           'fig4a', 'fig4b', 'fig4c', 'fig4d',
           'fig5a', 'fig5b', 'fig5c', 'fig5d',
           'fig5e', 'fig5f', 'fig5g', 'fig5h')

_TINY = 1e-300


class NotRegular(ValueError):
    """The pole-removal recursion hit a stage with no boundary minimum."""


@dataclass(frozen=True)
class Realization:
    config: str
    elements: dict
    roots: dict
    circuit: CircuitNode
    marginal: bool = False


@dataclass(frozen=True)
class ConditionRecord:
    id: str
    outcome: str
    witness: dict


@dataclass(frozen=True)
class SynthesisReport:
    assumption: object
    positive_real: bool
    per_condition: tuple
    realization: Realization | None


class _Check:
    """Banded sign tests: within 1e-8 of the boundary counts as marginal."""

    def __init__(self):
        self.ok = True
        self.marginal = False

    def pos(self, value, scale):
        band = 1e-8 * max(scale, _TINY)
        if value <= -band:
            self.ok = False
        elif value <= band:
            self.marginal = True
        return self.ok

    def zero(self, value, scale, band=1e-6):
        if abs(value) > band * max(scale, _TINY):
            self.ok = False
        return self.ok


def _quad_roots(A, B, C):
    """Ascending real roots of A x^2 + B x + C, with a marginal flag when the
    discriminant sits inside the zero band."""
    scale = max(abs(A), abs(B), abs(C))
    if scale == 0:
        return [], False
    if abs(A) <= 1e-14 * scale:
        if abs(B) <= 1e-14 * scale:
            return [], False
        return [-C / B], False
    disc = B * B - 4.0 * A * C
    dscale = B * B + 4.0 * abs(A * C)
    marginal = abs(disc) <= 1e-8 * max(dscale, _TINY)
    if disc < 0 and not marginal:
        return [], False
    root = math.sqrt(max(disc, 0.0))
    q = -0.5 * (B + math.copysign(root, B)) if B != 0 else 0.5 * root
    if q == 0.0:
        return [0.0, 0.0], marginal
    return sorted((q / A, C / q)), marginal


def _neg_real_cubic_roots(a3, a2, a1, a0):
    """Negated roots of a3 s^3 + a2 s^2 + a1 s + a0, ascending, when all three
    roots are real and negative; empty list otherwise."""
    raw = np.roots([a3, a2, a1, a0])
    if len(raw) != 3:
        return []
    out = []
    for r in raw:
        if abs(r.imag) > 1e-7 * (1.0 + abs(r)):
            return []
        x = float(r.real)
        f = ((a3 * x + a2) * x + a1) * x + a0
        fp = (3.0 * a3 * x + 2.0 * a2) * x + a1
        if fp != 0.0:
            step = f / fp
            if abs(step) <= 1e-2 * (1.0 + abs(x)):
                x -= step
        if x >= 0.0:
            return []
        out.append(-x)
    out.sort()
    return out


def _normalized(Y):
    """Joint rescale of numerator and denominator for conditioning; element
    values are invariant, but roots of weight-2 condition polynomials must be
    divided by c**2 afterwards."""
    c = 1.0 / max(abs(v) for v in Y.coeffs())
    return Y.scaled(c), c


def _subst_values(circuit, mapping):
    """Copy of a circuit tree with finite element values substituted."""
    if circuit.type == 'element':
        e = circuit.element
        make = {'damper': damper, 'spring': spring, 'inerter': inerter}[e.kind]
        if e.limit != 'finite':
            return make(e.value, e.limit)
        return make(mapping.get(e.value, e.value))
    group = series if circuit.type == 'series' else parallel
    return group(*[_subst_values(ch, mapping) for ch in circuit.children])


def _mismatch_vec(Y, circuit):
    """Cross-multiplied recomposition residual, scaled to the larger side."""
    f = Y.as_rational()
    gnum, gden = _raw_admittance(circuit)
    pm = np.polynomial.polynomial.polymul
    p = pm(np.asarray(f.num.coeffs, float), gden)
    qv = pm(gnum, np.asarray(f.den.coeffs, float))
    m = max(len(p), len(qv))
    p = np.r_[p, np.zeros(m - len(p))]
    qv = np.r_[qv, np.zeros(m - len(qv))]
    qq = float(qv @ qv)
    if qq == 0.0:
        return None
    k = float(p @ qv) / qq
    if k <= 0.0:
        return None
    scale = max(float(np.max(np.abs(p))), k * float(np.max(np.abs(qv))))
    if scale <= 0.0:
        return None
    return (p - k * qv) / scale


def _rescue_root(Yn, make, x0):
    """Recover a solved root whose defining polynomial lost digits to
    cancellation near a realizability wall: scan around x0 for the
    recomposition-mismatch minimum, then shrink the bracket."""
    def f(x):
        built = make(x)
        if built is None:
            return math.inf
        r = _mismatch_vec(Yn, built[1])
        if r is None:
            return math.inf
        return float(np.max(np.abs(r)))

    xs = [x0]
    for t in np.logspace(-12.0, -2.0, 41):
        xs.append(x0 * (1.0 + t))
        xs.append(x0 * (1.0 - t))
    xs.sort()
    errs = [f(x) for x in xs]
    i = int(np.argmin(errs))
    if not math.isfinite(errs[i]):
        return None
    lo = xs[i - 1] if i > 0 else xs[0] * (1.0 - 1e-2)
    hi = xs[i + 1] if i + 1 < len(xs) else xs[-1] * (1.0 + 1e-2)
    inv = 0.6180339887498949
    a, b = lo, hi
    c1 = b - inv * (b - a)
    c2 = a + inv * (b - a)
    f1, f2 = f(c1), f(c2)
    for _ in range(70):
        if f1 <= f2:
            b, c2, f2 = c2, c1, f1
            c1 = b - inv * (b - a)
            f1 = f(c1)
        else:
            a, c1, f1 = c1, c2, f2
            c2 = a + inv * (b - a)
            f2 = f(c2)
    best = c1 if f1 <= f2 else c2
    return best if math.isfinite(f(best)) else None


def _refine_elements(Y, elements, circuit, iters=4):
    """Damped least-squares polish of element values in log space, for draws
    where the closed-form element map amplifies coefficient rounding."""
    keys = sorted(elements)
    vals0 = np.array([float(elements[k]) for k in keys])
    if np.any(vals0 <= 0) or len(set(vals0)) != len(vals0):
        return None, None

    def probe(v):
        if not np.all(np.isfinite(v)):
            return None, None
        try:
            c = _subst_values(circuit, dict(zip(vals0, (float(x) for x in v))))
        except ValueError:
            return None, None
        return _mismatch_vec(Y, c), c

    r0 = _mismatch_vec(Y, circuit)
    if r0 is None:
        return None, None
    u = np.log(vals0)
    best_err, best_u = float(np.max(np.abs(r0))), u.copy()
    h = 1e-7
    for _ in range(iters):
        if best_err <= 1e-9:
            break
        u = best_u.copy()
        r, _ = probe(np.exp(u))
        if r is None:
            break
        jac = np.empty((len(r), len(u)))
        bad = False
        for j in range(len(u)):
            up = u.copy()
            up[j] += h
            rj, _ = probe(np.exp(up))
            if rj is None:
                bad = True
                break
            jac[:, j] = (rj - r) / h
        if bad:
            break
        step, *_ = np.linalg.lstsq(jac, -r, rcond=None)
        norm = float(np.max(np.abs(step)))
        if norm > 0.5:
            step *= 0.5 / norm
        t = 1.0
        improved = False
        for _ in range(3):
            rv, _ = probe(np.exp(u + t * step))
            if rv is not None:
                err = float(np.max(np.abs(rv)))
                if err < best_err:
                    best_err, best_u = err, u + t * step
                    improved = True
                    break
            t *= 0.5
        if not improved:
            break
    vnew = np.exp(best_u)
    rv, circ = probe(vnew)
    if circ is None:
        return None, None
    return {k: float(v) for k, v in zip(keys, vnew)}, circ


def _finish(Y, config, elements, roots, circuit, chk):
    """Final gate shared by all configuration builders: the composed circuit
    must reproduce Y before a realization is returned."""
    rep = verify_realization(Y, circuit, tol=1e-6)
    if rep.equivalent and rep.structural_ok:
        return Realization(config=config, elements=dict(elements),
                           roots=dict(roots), circuit=circuit,
                           marginal=chk.marginal)
    if rep.structural_ok and rep.scale_k > 0 and rep.max_rel_coeff_err < 1e-3:
        vals2, circuit2 = _refine_elements(Y, elements, circuit)
        if vals2 is not None:
            rep2 = verify_realization(Y, circuit2, tol=1e-6)
            if rep2.equivalent and rep2.structural_ok:
                return Realization(config=config, elements=vals2,
                                   roots=dict(roots), circuit=circuit2,
                                   marginal=chk.marginal)
    return None


# pole-removal recursion ----------------------------------------------------

def _trimf(c, rel=1e-12):
    c = np.atleast_1d(np.asarray(c, dtype=float))
    m = np.max(np.abs(c))
    if m == 0:
        return np.zeros(1)
    c = np.where(np.abs(c) > rel * m, c, 0.0)
    nz = np.nonzero(c)[0]
    return c[: nz[-1] + 1] if len(nz) else np.zeros(1)


def _foster_step(num, den, view, counters, elements, depth):
    if depth > 14:
        raise NotRegular('removal chain did not terminate')
    num, den = _trimf(num), _trimf(den)
    if not np.any(num):
        return None
    if not np.any(den):
        raise NotRegular('remainder degenerated')
    s = max(np.max(np.abs(num)), np.max(np.abs(den)))
    num, den = num / s, den / s

    def take(kind):
        counters[kind] += 1
        return f'{kind}{counters[kind]}'

    def join(node, rest):
        if rest is None:
            return node
        return parallel(node, rest) if view == 'Y' else series(node, rest)

    # constant remainder is a damper
    if len(num) == 1 and len(den) == 1:
        value = float(num[0] / den[0]) if view == 'Y' else float(den[0] / num[0])
        if value <= 0:
            raise NotRegular('nonpositive terminal damper')
        elements[take('c')] = value
        return damper(value)

    if num[0] == 0.0 and den[0] == 0.0:
        return _foster_step(num[1:], den[1:], view, counters, elements, depth + 1)

    if den[0] == 0.0 and num[0] != 0.0:
        # pole at s = 0
        d1 = den[1:]
        r = float(num[0] / d1[0])
        if r <= 0:
            raise NotRegular('nonpositive residue at zero frequency')
        if view == 'Y':
            name, value, node = take('k'), r, spring(r)
        else:
            name, value, node = take('b'), 1.0 / r, inerter(1.0 / r)
        elements[name] = value
        m = max(len(num), len(d1))
        a = np.r_[num, np.zeros(m - len(num))]
        b = np.r_[d1, np.zeros(m - len(d1))]
        rest_num = a - r * b
        rest_num[0] = 0.0
        rest = _foster_step(rest_num[1:], d1, view, counters, elements, depth + 1)
        return join(node, rest)

    if len(num) == len(den) + 1:
        # pole at infinity
        r = float(num[-1] / den[-1])
        if r <= 0:
            raise NotRegular('nonpositive residue at high frequency')
        if view == 'Y':
            name, value, node = take('b'), r, inerter(r)
        else:
            name, value, node = take('k'), 1.0 / r, spring(1.0 / r)
        elements[name] = value
        shifted = np.r_[0.0, den]
        rest_num = num - r * shifted
        rest_num[-1] = 0.0
        rest = _foster_step(rest_num, den, view, counters, elements, depth + 1)
        return join(node, rest)

    if num[0] == 0.0 or len(num) < len(den):
        # zero at the origin or at infinity: continue on the inverse
        flipped = 'Z' if view == 'Y' else 'Y'
        return _foster_step(den, num, flipped, counters, elements, depth + 1)

    # biproper stage: subtract the boundary minimum of the real part
    ny, dy = (num, den) if view == 'Y' else (den, num)
    mY, lY = min_real_part(ny, dy)
    mZ, lZ = min_real_part(dy, ny)
    options = []
    for m, loc, v in ((mY, lY, 'Y'), (mZ, lZ, 'Z')):
        if loc in ('zero', 'inf') and m > 0:
            options.append((m, loc, v))
    if not options:
        raise NotRegular('real-part minimum is interior in both views')
    pick = None
    for m, loc, v in options:
        if loc == 'inf':
            pick = (m, loc, v)
            if v == view:
                break
    if pick is None:
        for m, loc, v in options:
            if v == view:
                pick = (m, loc, v)
                break
        else:
            pick = options[0]
    m, loc, v = float(pick[0]), pick[1], pick[2]
    if v != view:
        num, den = den, num
        view = v
    value = m if view == 'Y' else 1.0 / m
    name = take('c')
    elements[name] = value
    node = damper(value)
    rest_num = num - m * den
    if loc == 'zero':
        rest_num[0] = 0.0
    else:
        rest_num[-1] = 0.0
    rest = _foster_step(rest_num, den, view, counters, elements, depth + 1)
    return join(node, rest)


def foster_realize(Y: BicubicAdmittance) -> Realization:
    """Realize a regular admittance by repeatedly removing boundary poles and
    real-part minima; raises NotRegular when a minimum is interior."""
    Yn, _c = _normalized(Y)
    num = np.array([Yn.alpha0, Yn.alpha1, Yn.alpha2, Yn.alpha3])
    den = np.array([0.0, Yn.beta1, Yn.beta2, Yn.beta3])
    counters = {'c': 0, 'k': 0, 'b': 0}
    elements = {}
    circuit = _foster_step(num, den, 'Y', counters, elements, 0)
    if circuit is None:
        raise NotRegular('empty realization')
    return Realization(config='foster', elements=elements, roots={},
                       circuit=circuit, marginal=False)


def _foster_worker(Y):
    try:
        r = foster_realize(Y)
    except NotRegular:
        return None, [ConditionRecord('foster', 'failed', {})]
    rep = verify_realization(Y, r.circuit, tol=1e-6)
    if not (rep.equivalent and rep.structural_ok):
        return None, [ConditionRecord('foster', 'failed', {})]
    return r, [ConditionRecord('foster', 'satisfied', {})]


# spring in parallel with a four-element stage ------------------------------

def _fig2_worker(Y):
    Yn, _c = _normalized(Y)
    k1, Z = extract_parallel_spring(Yn)
    a2, a1, a0 = Z.a2, Z.a1, Z.a0
    d2, d1, d0 = Z.d2, Z.d1, Z.d0
    dscale = max(abs(d2), abs(d1), abs(d0))
    records = []
    gate = _Check()
    gate.pos(d1, dscale)
    gate.pos(d0, dscale)
    if not gate.ok:
        for cid in ('fig2a', 'fig2b', 'fig2c', 'fig2d'):
            records.append(ConditionRecord(cid, 'failed', {}))
        return None, records

    w = a1 * d1 - a2 * d0
    v = a1 * d1 - a0 * d2
    tests = {
        'fig2a': (a2 * w * w - a1 * a1 * d2 * w + a1 * a1 * a0 * d2 * d2,
                  abs(a2 * w * w) + abs(a1 * a1 * d2 * w) + abs(a1 * a1 * a0 * d2 * d2)),
        'fig2b': (d2 * v * v - a2 * d1 * d1 * v + a2 * a2 * d1 * d1 * d0,
                  abs(d2 * v * v) + abs(a2 * d1 * d1 * v) + abs(a2 * a2 * d1 * d1 * d0)),
        'fig2c': (a0 * v * v - a1 * a1 * d0 * v + a2 * a1 * a1 * d0 * d0,
                  abs(a0 * v * v) + abs(a1 * a1 * d0 * v) + abs(a2 * a1 * a1 * d0 * d0)),
        'fig2d': (d0 * w * w - a0 * d1 * d1 * w + a0 * a0 * d2 * d1 * d1,
                  abs(d0 * w * w) + abs(a0 * d1 * d1 * w) + abs(a0 * a0 * d2 * d1 * d1)),
    }
    elems = {
        'fig2a': {'c1': d2 / a2, 'c2': d0 / a0, 'k1': k1, 'k2': d0 / a1,
                  'b1': w / (a1 * a0), 'b2': a2 * d0 / (a1 * a0)},
        'fig2b': {'c1': d2 / a2, 'c2': d0 / a0, 'k1': k1,
                  'k2': d1 * d0 / v if v != 0 else -1.0,
                  'k3': d1 * d0 / (a0 * d2), 'b1': d1 / a0},
        'fig2c': {'c1': d0 / a0, 'c2': d2 / a2, 'k1': k1,
                  'k2': v / (a2 * a1), 'k3': a0 * d2 / (a2 * a1), 'b1': d2 / a1},
        'fig2d': {'c1': d0 / a0, 'c2': d2 / a2, 'k1': k1, 'k2': d1 / a2,
                  'b1': d2 * d1 / w if w != 0 else -1.0,
                  'b2': d2 * d1 / (a2 * d0)},
    }
    builds = {
        'fig2a': lambda e: parallel(
            spring(e['k1']),
            series(inerter(e['b1']), damper(e['c1'])),
            series(spring(e['k2']), parallel(inerter(e['b2']), damper(e['c2'])))),
        'fig2b': lambda e: parallel(
            spring(e['k1']),
            series(parallel(inerter(e['b1']), series(damper(e['c2']), spring(e['k3']))),
                   parallel(damper(e['c1']), spring(e['k2'])))),
        'fig2c': lambda e: parallel(
            spring(e['k1']),
            series(inerter(e['b1']), parallel(damper(e['c2']), spring(e['k3']))),
            series(damper(e['c1']), spring(e['k2']))),
        'fig2d': lambda e: parallel(
            spring(e['k1']),
            series(parallel(inerter(e['b1']), damper(e['c1'])),
                   parallel(spring(e['k2']), series(inerter(e['b2']), damper(e['c2']))))),
    }
    found = None
    for cid, (residual, scale) in tests.items():
        chk = _Check()
        vals = elems[cid]
        feasible = (chk.zero(residual, scale)
                    and all(math.isfinite(val) and val > 0 for val in vals.values()))
        if not feasible:
            records.append(ConditionRecord(cid, 'failed', {}))
            continue
        if found is None:
            r = _finish(Yn, cid, vals, {}, builds[cid](vals), chk)
            if r is None:
                records.append(ConditionRecord(cid, 'failed', {}))
                continue
            found = r
        records.append(ConditionRecord(
            cid, 'marginal' if chk.marginal else 'satisfied', {}))
    return found, records


def synth_fig2(Y: BicubicAdmittance) -> Realization | None:
    """Spring at the port in parallel with a four-element stage; the four
    layouts are tried in order and the first feasible one is returned."""
    return _fig2_worker(Y)[0]


# shared machinery for the closed-form layouts ------------------------------

def _all_pos(vals):
    return all(math.isfinite(v) and v > 0 for v in vals.values())


def _select(Yn, config, survivors, candidates):
    """Pick the first survivor that passes recomposition; the witness lists
    the surviving roots, or every candidate when none survive."""
    keys = sorted({key for roots, _, _, _ in survivors for key in roots})
    for roots, vals, circuit, chk in survivors:
        r = _finish(Yn, config, vals, roots, circuit, chk)
        if r is not None:
            wit = {key: tuple(s[0][key] for s in survivors if key in s[0])
                   for key in keys}
            outcome = 'marginal' if r.marginal else 'satisfied'
            return r, ConditionRecord(config, outcome, wit)
    return None, ConditionRecord(config, 'failed', candidates)


def _bisect(g, lo, hi, glo, ghi, iters=80):
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if not math.isfinite(gm):
            return None
        if gm == 0.0:
            return mid
        if (glo < 0) != (gm < 0):
            hi, ghi = mid, gm
        else:
            lo, glo = mid, gm
        if hi - lo <= 1e-15 * (abs(lo) + abs(hi)):
            break
    return 0.5 * (lo + hi)


def _finite_edge(g, lo, hi, lo_finite, iters=60):
    """Boundary of g's domain inside [lo, hi], one endpoint finite."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if math.isfinite(g(mid)) == lo_finite:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-14 * (abs(lo) + abs(hi)):
            break
    return lo if lo_finite else hi


def _sign_change_roots(g, grid, cap=8, refine=True):
    """Roots of g on a 1-d grid located by bracketing plus bisection."""
    vals = [g(x) for x in grid]
    hits = []
    for i in range(len(grid) - 1):
        g0, g1 = vals[i], vals[i + 1]
        f0, f1 = math.isfinite(g0), math.isfinite(g1)
        if f0 and g0 == 0.0:
            hits.append(grid[i])
        elif f0 and f1 and (g0 < 0) != (g1 < 0):
            root = _bisect(g, grid[i], grid[i + 1], g0, g1)
            if root is not None:
                hits.append(root)
        elif refine and f0 != f1:
            # g's domain ends inside this interval; crowd a sub-grid against
            # the edge so a sign change hugging it is still caught
            edge = _finite_edge(g, grid[i], grid[i + 1], f0)
            far = grid[i + 1] if f1 else grid[i]
            sub = [edge] + [edge + (far - edge) * t
                            for t in np.geomspace(1e-9, 1.0, 33)]
            hits.extend(_sign_change_roots(g, sub, cap=cap, refine=False))
        if len(hits) >= cap:
            break
    return hits[:cap]


def _sylvester_det(p, cq):
    """Resultant of two polynomials given by descending coefficients."""
    n, m = len(p) - 1, len(cq) - 1
    size = n + m
    s = np.zeros((size, size))
    for i in range(m):
        s[i, i:i + n + 1] = p
    for i in range(n):
        s[m + i, i:i + m + 1] = cq
    norms = np.max(np.abs(s), axis=1)
    norms[norms == 0.0] = 1.0
    return float(np.linalg.det(s / norms[:, None]))


def _pair_candidates(quad_coeffs, res_coeffs, grid, cap=6):
    """Solve quad(x, y) = 0 and res(x, y) = 0 by scanning the resultant in y.

    The resultant is continuous in x, so narrow root windows of the quadratic
    never hide a solution.  Returns (x, y) pairs, x ascending, each x paired
    with its quadratic roots ordered by how well they zero the residual.
    """
    def g(x):
        return _sylvester_det(quad_coeffs(x), res_coeffs(x))

    pairs = []
    for x in _sign_change_roots(g, grid, cap=cap, refine=False):
        qc = quad_coeffs(x)
        rc = res_coeffs(x)
        roots, _ = _quad_roots(qc[0], qc[1], qc[2])
        scale = max(abs(t) for t in rc)
        ranked = sorted(
            roots,
            key=lambda y: abs(sum(t * y ** k for k, t in enumerate(rc[::-1])))
            / max(scale * max(1.0, abs(y)) ** (len(rc) - 1), _TINY))
        pairs.extend((x, y) for y in ranked)
    return pairs


# five- and six-element layouts with one free root --------------------------

def _fig3a_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, b3, b2, b1_ = Yn.alpha3, Yn.beta3, Yn.beta2, Yn.beta1
    A = q.DeltaBeta
    B = 2.0 * (b2 * b3 * q.B23 - (b2 * b2 - 2.0 * b1_ * b3) * q.B33
               - 2.0 * b3 * b3 * q.B13)
    C = (b2 * q.B33 - b3 * q.B23) ** 2
    cands, mroot = _quad_roots(A, B, C)
    survivors = []
    for x in cands:
        chk = _Check()
        chk.marginal = mroot
        xs = abs(x) + abs(q.Bt23)
        chk.pos(x, xs)
        gap = q.Bt23 - x
        open_c2 = abs(gap) <= 1e-8 * max(xs, _TINY)
        if not open_c2:
            chk.pos(gap, xs)
        lo = b2 * x - (b2 * q.B33 - b3 * q.B23)
        hi = (b2 * q.B33 + b3 * q.M23) - b2 * x
        bscale = abs(b2 * x) + abs(b2 * q.B33) + abs(b3 * q.B23) + abs(b3 * q.M23)
        chk.pos(lo, bscale)
        chk.pos(hi, bscale)
        k1num = 2.0 * x * x - (q.Bt23 + 2.0 * q.B33) * x + a3 * (b2 * q.B33 - b3 * q.B23)
        chk.pos(k1num, 2.0 * x * x + abs((q.Bt23 + 2.0 * q.B33) * x)
                + abs(a3 * (b2 * q.B33 - b3 * q.B23)))
        if not chk.ok:
            continue
        vals = {'c1': a3 / b3, 'k1': k1num / (2.0 * b3 * b3 * x),
                'k2': a3 * lo / (2.0 * b3 * b3 * x),
                'k3': a3 * hi / (2.0 * b3 * b3 * x), 'b1': a3 * a3 / x}
        if open_c2:
            chk.marginal = True
        else:
            vals['c2'] = a3 * gap / (b3 * x)
        if not _all_pos(vals):
            continue
        inner = [inerter(vals['b1']), spring(vals['k3'])]
        if not open_c2:
            inner.append(damper(vals['c2']))
        circuit = parallel(
            spring(vals['k1']),
            series(parallel(*inner), parallel(damper(vals['c1']), spring(vals['k2']))))
        survivors.append(({'x': x / (_c * _c)}, vals, circuit, chk))
    return _select(Yn, 'fig3a', survivors,
                   {'x': tuple(v / (_c * _c) for v in cands)})


def _fig3b_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    A = q.Bt11 * q.Bt12

    def quad_coeffs(x):
        u = a0 - b1_ * x
        return (A,
                u * ((b3 * q.Bt11 + b1_ * q.Bt13) * x
                     - (a2 * q.Bt11 + a0 * q.Bt13)),
                2.0 * a3 * u ** 3)

    def res_coeffs(x):
        u = a0 - b1_ * x
        return (b1_ * q.Bt11 ** 3,
                q.Bt11 ** 2 * u * (b1_ * b2 * x + q.B12 - 2.0 * q.Bt11),
                q.Bt11 * u * u * (q.Bt11 * (a1 - b2 * x) + b3 * u * u),
                0.0,
                -a3 * u ** 6)

    grid = np.linspace(1e-6, 1.0 - 1e-6, 801) * (a0 / b1_)
    survivors = []
    cands_x, cands_y = [], []
    for x, y in _pair_candidates(quad_coeffs, res_coeffs, grid):
        cands_x.append(x)
        cands_y.append(y)
        u = a0 - b1_ * x
        w = b1_ * (x + y) - a0
        c2d = b3 * q.Bt11 * y * y - a3 * u * u
        chk = _Check()
        chk.pos(y, abs(y) + abs(x))
        chk.pos(w, abs(b1_ * (x + y)) + a0)
        chk.pos(c2d, abs(b3 * q.Bt11 * y * y) + abs(a3 * u * u))
        if not chk.ok:
            continue
        vals = {'c1': q.Bt11 * y * y / (u * u),
                'c2': a3 * q.Bt11 * y * y / c2d,
                'k1': x, 'k2': y, 'k3': y * u / w,
                'b1': a3 * u * u / (q.Bt11 * w)}
        if not _all_pos(vals):
            continue
        circuit = parallel(
            spring(vals['k1']),
            series(parallel(damper(vals['c1']), spring(vals['k2'])),
                   parallel(spring(vals['k3']),
                            series(inerter(vals['b1']), damper(vals['c2'])))))
        survivors.append(({'x': x, 'y': y}, vals, circuit, chk))
    return _select(Yn, 'fig3b', survivors,
                   {'x': tuple(cands_x), 'y': tuple(cands_y)})


def _fig3c_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a2 = Yn.alpha2
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    A = q.DeltaBeta
    B = -4.0 * b3 * (2.0 * b1_ * q.B23 - b2 * (q.B22 - 2.0 * q.B13))
    C = -4.0 * b3 * (b1_ * q.B23 ** 2 - b2 * q.B23 * (q.B22 - 2.0 * q.B13)
                     + b2 * q.B12 * q.B33)
    cands, mroot = _quad_roots(A, B, C)
    survivors = []
    for x in cands:
        chk = _Check()
        chk.marginal = mroot
        lo1 = x + 2.0 * q.B23
        lo2 = b3 * x + (b3 * q.B23 + b2 * q.B33)
        hi = (a2 * b2 - q.B23) - x
        scale = abs(x) + abs(q.B23) + abs(b2 * q.B33 / b3 if b3 else 0.0) + abs(a2 * b2)
        chk.pos(lo1, scale)
        chk.pos(lo2, abs(b3 * x) + abs(b3 * q.B23) + abs(b2 * q.B33))
        chk.pos(hi, scale)
        k3num = -(b2 * b2 - 2.0 * b1_ * b3) * x + 2.0 * b3 * (b1_ * q.B23 - b2 * (q.B22 - q.B13))
        chk.pos(k3num, abs((b2 * b2 - 2.0 * b1_ * b3) * x)
                + abs(2.0 * b3 * (b1_ * q.B23 - b2 * (q.B22 - q.B13))))
        if not chk.ok:
            continue
        vals = {'c1': hi / (b2 * b2),
                'c2': lo2 / (b2 * b2 * b3),
                'b1': lo2 / b2 ** 3,
                'k1': x / (2.0 * b2 * b3),
                'k2': lo1 / (2.0 * b2 * b3),
                'k3': k3num / (2.0 * b2 ** 3 * b3)}
        if not _all_pos(vals):
            continue
        circuit = parallel(
            damper(vals['c1']), spring(vals['k1']),
            series(parallel(inerter(vals['b1']), spring(vals['k3'])),
                   parallel(damper(vals['c2']), spring(vals['k2']))))
        survivors.append(({'x': x / (_c * _c)}, vals, circuit, chk))
    return _select(Yn, 'fig3c', survivors,
                   {'x': tuple(v / (_c * _c) for v in cands)})


def _fig4a_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    A = b3 * b3 * q.DeltaBeta
    B = -2.0 * b3 * (b2 * q.M23 - 2.0 * b3 * (a2 * b1_ + a0 * b3))
    C = q.B23 ** 2 - 4.0 * q.B13 * q.B33
    cands, mroot = _quad_roots(A, B, C)
    survivors = []
    for x in cands:
        chk = _Check()
        chk.marginal = mroot
        den = b1_ * x - a0
        chk.pos(den, abs(b1_ * x) + a0)
        c3num = b2 * b3 * x - q.B23
        c2num = b2 * b3 * x + q.B23
        nscale = abs(b2 * b3 * x) + abs(q.B23)
        open_c3 = abs(c3num) <= 1e-8 * max(nscale, _TINY)
        if not open_c3:
            chk.pos(c3num, nscale)
        chk.pos(c2num, nscale)
        c1num = -(b2 * b3 * x * x - q.M23 * x + 2.0 * a0 * a3)
        cscale = abs(b2 * b3 * x * x) + abs(q.M23 * x) + 2.0 * a0 * a3
        open_c1 = abs(c1num) <= 1e-8 * max(cscale, _TINY)
        if not open_c1:
            chk.pos(c1num, cscale)
        if not chk.ok:
            continue
        vals = {'c2': x * c2num / (2.0 * b3 * den),
                'k1': x, 'k2': a0 * x / den, 'b1': b3 * x * x / den}
        if open_c1 or open_c3:
            chk.marginal = True
        if not open_c1:
            vals['c1'] = c1num / (2.0 * b3 * den)
        if not open_c3:
            vals['c3'] = x * c3num / (2.0 * b3 * den)
        if not _all_pos(vals):
            continue
        inner = [inerter(vals['b1']), spring(vals['k2'])]
        if not open_c3:
            inner.append(damper(vals['c3']))
        stage = series(parallel(*inner),
                       parallel(damper(vals['c2']), spring(vals['k1'])))
        circuit = stage if open_c1 else parallel(damper(vals['c1']), stage)
        survivors.append(({'x': x}, vals, circuit, chk))
    return _select(Yn, 'fig4a', survivors, {'x': tuple(cands)})


def _fig4b_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1

    def quad_coeffs(x):
        v = b1_ * x - a0
        return (b1_ * (b1_ * x - 2.0 * a0) * v,
                -b2 * x * v * v,
                x ** 3 * (b1_ * b1_ * b3 * x + b2 * q.Bt11 - a2 * b1_ * b1_))

    def res_coeffs(x):
        v = b1_ * x - a0
        return (b1_ * v * v,
                -b1_ * b2 * x * x * v,
                b3 * x * x * (b1_ * x + a0) * v,
                -x ** 4 * (b1_ * q.B23 - b2 * q.B13))

    base = a0 / b1_
    grid = base * (1.0 + np.logspace(-9.0, 9.0, 601))
    survivors = []
    cands_x, cands_y = [], []
    for x, y in _pair_candidates(quad_coeffs, res_coeffs, grid):
        cands_x.append(x)
        cands_y.append(y)
        v = b1_ * x - a0
        chk = _Check()
        chk.pos(v * y, abs(v * y) + abs(b2 * x * x))
        gap = b2 * x * x - v * y
        chk.pos(gap, abs(v * y) + abs(b2 * x * x))
        Q = v * v * y * y - b2 * x * x * v * y + b1_ * b3 * x ** 4
        qscale = (v * y) ** 2 + abs(b2 * x * x * v * y) + b1_ * b3 * x ** 4
        chk.pos(Q, qscale)
        c1num = a3 * b1_ * x ** 4 - y * Q
        chk.pos(c1num, a3 * b1_ * x ** 4 + abs(y * Q))
        if not chk.ok:
            continue
        vals = {'c1': c1num / (b1_ * b3 * x ** 4), 'c2': y,
                'c3': Q / (v * gap), 'k1': x, 'k2': a0 * x / v,
                'b1': Q / (b1_ * x * x * v)}
        if not _all_pos(vals):
            continue
        circuit = parallel(
            damper(vals['c1']),
            series(parallel(damper(vals['c2']), spring(vals['k1'])),
                   parallel(spring(vals['k2']),
                            series(inerter(vals['b1']), damper(vals['c3'])))))
        survivors.append(({'x': x, 'y': y}, vals, circuit, chk))
    return _select(Yn, 'fig4b', survivors,
                   {'x': tuple(cands_x), 'y': tuple(cands_y)})


def _fig4c_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2 = Yn.alpha3, Yn.alpha2
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    pre = b1_ * q.Bt13 + 4.0 * b3 * q.B12
    pre_chk = _Check()
    pre_chk.pos(pre, abs(b1_ * q.Bt13) + abs(4.0 * b3 * q.B12))
    if not pre_chk.ok:
        return None, ConditionRecord('fig4c', 'failed', {'x': ()})
    A = 2.0 * b2 * b2 + b1_ * b3
    B = -b2 * (3.0 * b2 * q.B23 + a2 * (b2 * b2 + 2.0 * b1_ * b3))
    C = b2 * b2 * (q.B23 ** 2 + a2 * b2 * q.B23 + a2 * a2 * b1_ * b3)
    cands, mroot = _quad_roots(A, B, C)
    survivors = []
    for x in cands:
        chk = _Check()
        chk.marginal = mroot or pre_chk.marginal
        scale = abs(x) + abs(q.B23) + abs(q.Bt13) + abs(a2 * b2)
        chk.pos(x - q.B23, scale)
        chk.pos(q.Bt13 - x, scale)
        chk.pos(a2 * b2 - x, scale)
        band = x * x - q.Bt13 * x - q.B12 * q.Bt33
        chk.zero(band, x * x + abs(q.Bt13 * x) + abs(q.B12 * q.Bt33))
        if not chk.ok:
            continue
        vals = {'c1': (x - q.B23) / (b1_ * b3),
                'k1': (a2 * b2 - x) / (b2 * b3),
                'k2': x / (b2 * b3),
                'k3': (q.Bt13 - x) / (b2 * b3),
                'b1': a3 / b2}
        if _all_pos(vals):
            vals['c2'] = (vals['b1'] * vals['k1'] ** 2
                          + vals['c1'] ** 2 * (vals['k2'] + vals['k3'])) \
                / (vals['c1'] * vals['k1'])
        if not _all_pos(vals):
            continue
        circuit = parallel(
            series(damper(vals['c1']), spring(vals['k1'])),
            series(parallel(inerter(vals['b1']), spring(vals['k3'])),
                   parallel(damper(vals['c2']), spring(vals['k2']))))
        survivors.append(({'x': x / (_c * _c)}, vals, circuit, chk))
    return _select(Yn, 'fig4c', survivors,
                   {'x': tuple(v / (_c * _c) for v in cands)})


def _fig4d_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    K = a2 * q.Bt11 + a1 * q.B13
    pre_chk = _Check()
    pre_chk.pos(q.DeltaBeta, b2 * b2 + 4.0 * b1_ * b3)
    pre_chk.pos(K, abs(a2 * q.Bt11) + abs(a1 * q.B13))
    if not pre_chk.ok:
        return None, ConditionRecord('fig4d', 'failed', {'x': ()})
    A = b3 * q.Bt11 * (a2 * b2 + a1 * b3)
    B = -q.Bt23 * q.Bt11 * K
    C = a1 * a1 * b3 * K * K
    cands, mroot = _quad_roots(A, B, C)
    survivors = []
    for x in cands:
        chk = _Check()
        chk.marginal = mroot or pre_chk.marginal
        chk.pos(x, abs(x) + abs(K))
        band = b1_ * b3 * x * x - b2 * K * x + K * K
        chk.zero(band, abs(b1_ * b3 * x * x) + abs(b2 * K * x) + K * K)
        if not chk.ok:
            continue
        vals = {'c1': x / q.Bt11,
                'k1': a0 * a1 / q.Bt11,
                'k2': a1 / b2,
                'b1': K / (b1_ * q.Bt11),
                'b2': a1 * a1 * b3 / (b2 * q.Bt11)}
        if _all_pos(vals):
            vals['c2'] = (vals['b1'] ** 2 * (vals['k1'] + vals['k2'])
                          + vals['b2'] * vals['c1'] ** 2) \
                / (vals['b1'] * vals['c1'])
        if not _all_pos(vals):
            continue
        circuit = parallel(
            series(inerter(vals['b1']), damper(vals['c1'])),
            series(parallel(inerter(vals['b2']), spring(vals['k2'])),
                   parallel(damper(vals['c2']), spring(vals['k1']))))
        survivors.append(({'x': x / (_c * _c)}, vals, circuit, chk))
    return _select(Yn, 'fig4d', survivors,
                   {'x': tuple(v / (_c * _c) for v in cands)})


def _fig5a_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    survivors = []
    ycands, xcands = [], []

    # first family: a negative zero of the numerator with a same-sign chain
    for y in real_roots((a0, a1, a2, a3)):
        if y >= 0:
            continue
        ycands.append(y)
        G1 = b3 * y * y + b2 * y + b1_
        s1 = abs(b3 * y * y) + abs(b2 * y) + b1_
        G2 = -2.0 * a3 * y ** 3 - a2 * y * y + a0
        s2 = abs(2.0 * a3 * y ** 3) + abs(a2 * y * y) + a0
        G3 = 2.0 * q.Bt13 * y * y + q.Mt12 * y - q.B12
        s3 = abs(2.0 * q.Bt13 * y * y) + abs(q.Mt12 * y) + abs(q.B12)
        G4 = -q.Bt33 * y ** 3 + q.B33 * y * y + q.Bt13 * y - q.B13
        s4 = (abs(q.Bt33 * y ** 3) + abs(q.B33 * y * y)
              + abs(q.Bt13 * y) + abs(q.B13))
        G5 = (b1_ * b3 * y * y * (a3 * y + a2) ** 2 + (q.Bt13 * y - q.B13) ** 2
              - b2 * y * (a3 * y + a2) * (q.Bt13 * y + q.B13)
              + q.B12 * q.Bt23 * y)
        s5 = (abs(b1_ * b3 * y * y * (a3 * y + a2) ** 2)
              + (q.Bt13 * y - q.B13) ** 2
              + abs(b2 * y * (a3 * y + a2) * (q.Bt13 * y + q.B13))
              + abs(q.B12 * q.Bt23 * y))
        G6 = (-y * (2.0 * a3 * y + a2) * (q.Bt13 * y * y + a2 * b1_ * y - q.B12)
              - a0 * (q.Bt13 * y - q.B13))
        s6 = (abs(y * (2.0 * a3 * y + a2)
                  * (q.Bt13 * y * y + a2 * b1_ * y - q.B12))
              + abs(a0 * (q.Bt13 * y - q.B13)))
        chk = _Check()
        sgn = 1.0 if G1 > 0 else -1.0
        for G, s in ((G1, s1), (G2, s2), (G3, s3), (G4, s4), (G5, s5)):
            if sgn * G <= 1e-8 * max(s, _TINY):
                chk.ok = False
        open_c3 = abs(G6) <= 1e-8 * max(s6, _TINY)
        if not open_c3:
            chk.pos(sgn * G6, s6)
        if not chk.ok:
            continue
        vals = {'c1': -G2 / (y * G1),
                'c2': -G2 * G2 * G5 / (y * G3 * G3 * G4),
                'k1': G2 / G1,
                'k2': -a0 * G2 / (y * G3),
                'b1': -G2 * G2 * G5 / (y * G3 ** 3)}
        if open_c3:
            chk.marginal = True
        else:
            vals['c3'] = -G2 * G6 / (y * G3 * G3)
        if not _all_pos(vals):
            continue
        tail = [spring(vals['k2']),
                series(inerter(vals['b1']), damper(vals['c2']))]
        if not open_c3:
            tail.append(damper(vals['c3']))
        circuit = series(parallel(damper(vals['c1']), spring(vals['k1'])),
                         parallel(*tail))
        survivors.append(({'y': y}, vals, circuit, chk))

    # second family: the series inerter arm shorts out
    disc_chk = _Check()
    disc_chk.pos(q.M23 ** 2 + 8.0 * q.B13 * q.Bt23,
                 q.M23 ** 2 + abs(8.0 * q.B13 * q.Bt23))
    if disc_chk.ok:
        for x in real_roots((-a0 * a3 * a3, a1 * q.Bt33, -a2 * b3 * b3, b3 ** 3)):
            if x <= max(a0 / b1_, a0 * a3 / (a1 * b3)):
                continue
            xcands.append(x)
            chk = _Check()
            chk.marginal = disc_chk.marginal
            band = b2 * b2 * b3 * b3 * x * x - b2 * b3 * q.M23 * x - 2.0 * q.B13 * q.Bt23
            chk.zero(band, (b2 * b2 * b3 * b3 * x * x + abs(b2 * b3 * q.M23 * x)
                            + abs(2.0 * q.B13 * q.Bt23)))
            if not chk.ok:
                continue
            den = b1_ * x - a0
            vals = {'c1': a3 / b3,
                    'c3': (a1 * b3 * x - a0 * a3) / (b3 * den),
                    'k1': x, 'k2': a0 * x / den,
                    'b1': b3 * x * x / den}
            if not _all_pos(vals):
                continue
            circuit = series(parallel(damper(vals['c1']), spring(vals['k1'])),
                             parallel(damper(vals['c3']), spring(vals['k2']),
                                      inerter(vals['b1'])))
            survivors.append(({'x': x}, vals, circuit, chk))
    return _select(Yn, 'fig5a', survivors,
                   {'y': tuple(ycands), 'x': tuple(xcands)})


def _fig5b_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a1, a0 = Yn.alpha3, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    chk = _Check()
    chk.pos(q.DeltaAlpha, abs(q.DeltaAlpha) + a0 * a3)
    d1 = a1 * q.B23 - a3 * q.B12
    d2 = b1_ * q.B23 - b3 * q.B12
    chk.pos(-d1, abs(a1 * q.B23) + abs(a3 * q.B12))
    chk.pos(-d2, abs(b1_ * q.B23) + abs(b3 * q.B12))
    band = (q.B23 ** 3 + Yn.alpha2 * b2 * q.B23 ** 2
            + a1 * b2 * q.Bt23 * q.B23 - q.Bt23 ** 2 * q.B12)
    chk.zero(band, (abs(q.B23) ** 3 + abs(Yn.alpha2 * b2 * q.B23 ** 2)
                    + abs(a1 * b2 * q.Bt23 * q.B23) + abs(q.Bt23 ** 2 * q.B12)))
    survivors = []
    if chk.ok:
        vals = {'c1': -a3 * d1 / q.B23 ** 2,
                'k1': d1 / (b2 * q.B23),
                'k2': a0 * d1 / (a1 * d2),
                'k3': q.DeltaAlpha * d1 / (a1 * a3 * d2),
                'b1': q.DeltaAlpha * d1 / (a1 * a1 * d2)}
        if _all_pos(vals):
            vals['c2'] = (vals['c1']
                          * (vals['b1'] * vals['k1'] ** 2 * (vals['k2'] + vals['k3'])
                             + vals['c1'] ** 2 * vals['k2'] * vals['k3'])
                          / (vals['k1'] * (vals['b1'] * vals['k1'] ** 2
                                           + vals['c1'] ** 2 * vals['k3'])))
        if _all_pos(vals):
            circuit = series(
                parallel(damper(vals['c1']), spring(vals['k1'])),
                parallel(damper(vals['c2']), spring(vals['k2']),
                         series(inerter(vals['b1']), spring(vals['k3']))))
            survivors.append(({}, vals, circuit, chk))
    return _select(Yn, 'fig5b', survivors, {})


def _cubic_band(chk, x, a3, a2, a1_bt33, a0a3sq, b3):
    r = b3 ** 3 * x ** 3 - a2 * b3 * b3 * x * x + a1_bt33 * x - a0a3sq
    s = (b3 ** 3 * abs(x) ** 3 + abs(a2 * b3 * b3 * x * x)
         + abs(a1_bt33 * x) + abs(a0a3sq))
    chk.zero(r, s)


def _fig5c_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    pre = _Check()
    pre.pos(q.DeltaAlpha, abs(q.DeltaAlpha) + a0 * a3)
    if not pre.ok:
        return None, ConditionRecord('fig5c', 'failed', {'x': ()})
    A = b3 * b3 * (a3 * q.Bt12 - a2 * a2 * b2)
    B = a2 * b3 * b3 * q.DeltaAlpha
    C = a0 * a3 * a3 * (q.B23 - a2 * b2)
    cands, mroot = _quad_roots(A, B, C)

    def make(x):
        den = b1_ * x - a0
        if x <= 0 or den <= 0:
            return None
        vals = {'c1': a3 / b3, 'k1': x, 'k2': a0 * x / den,
                'k3': q.DeltaAlpha * x / (a3 * den),
                'b1': a2 * x / den}
        if not _all_pos(vals):
            return None
        vals['c2'] = (vals['c1'] * vals['k3']
                      * (vals['b1'] * vals['k1'] ** 2 + vals['c1'] ** 2 * vals['k2'])
                      / (vals['k1'] * (vals['b1'] * vals['k1'] ** 2
                                       + vals['c1'] ** 2 * (vals['k2'] + vals['k3']))))
        if not _all_pos(vals):
            return None
        circuit = series(
            parallel(inerter(vals['b1']), spring(vals['k2']),
                     series(damper(vals['c2']), spring(vals['k3']))),
            parallel(damper(vals['c1']), spring(vals['k1'])))
        return vals, circuit

    survivors = []
    for x in cands:
        chk = _Check()
        chk.marginal = mroot or pre.marginal
        den = b1_ * x - a0
        chk.pos(den, abs(b1_ * x) + a0)
        _cubic_band(chk, x, a3, a2, a1 * q.Bt33, a0 * a3 * a3, b3)
        if not chk.ok:
            continue
        built = make(x)
        if built is None:
            continue
        survivors.append(({'x': x}, built[0], built[1], chk))
    if not survivors:
        # the solved quadratic loses digits when the draw hugs the den = 0
        # wall; fall back to a mismatch search on the valid side of the wall
        for x0 in cands:
            if x0 <= 0:
                continue
            xr = _rescue_root(Yn, make, x0)
            if xr is None:
                continue
            built = make(xr)
            if built is None:
                continue
            chk = _Check()
            chk.marginal = True
            survivors.append(({'x': xr}, built[0], built[1], chk))
    return _select(Yn, 'fig5c', survivors, {'x': tuple(cands)})


def _fig5d_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    pre = _Check()
    pre.pos(q.DeltaAlpha, abs(q.DeltaAlpha) + a0 * a3)
    if not pre.ok:
        return None, ConditionRecord('fig5d', 'failed', {'x': ()})
    A = b3 * b3 * (a2 * q.Bt11 + a1 * q.B13)
    B = -b3 * q.B13 * q.DeltaAlpha
    C = a0 * a3 * (a1 * q.B23 + a3 * q.B12)
    cands, mroot = _quad_roots(A, B, C)
    survivors = []
    for x in cands:
        chk = _Check()
        chk.marginal = mroot or pre.marginal
        den = b1_ * x - a0
        chk.pos(den, abs(b1_ * x) + a0)
        _cubic_band(chk, x, a3, a2, a1 * q.Bt33, a0 * a3 * a3, b3)
        if not chk.ok:
            continue
        vals = {'c1': a3 / b3, 'k1': x, 'k2': a0 * x / den,
                'b1': a0 * a3 * x / (a1 * den),
                'b2': q.DeltaAlpha * x / (a1 * den)}
        if _all_pos(vals):
            vals['c2'] = (vals['b2'] * vals['k1']
                          * (vals['b1'] * vals['k1'] ** 2 + vals['c1'] ** 2 * vals['k2'])
                          / (vals['c1'] * ((vals['b1'] + vals['b2']) * vals['k1'] ** 2
                                           + vals['c1'] ** 2 * vals['k2'])))
        if not _all_pos(vals):
            continue
        circuit = series(
            parallel(inerter(vals['b1']), spring(vals['k2']),
                     series(inerter(vals['b2']), damper(vals['c2']))),
            parallel(damper(vals['c1']), spring(vals['k1'])))
        survivors.append(({'x': x}, vals, circuit, chk))
    return _select(Yn, 'fig5d', survivors, {'x': tuple(cands)})


def _fig5e_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    chk = _Check()
    chk.pos(q.Bt12, a2 * b1_ + a0 * b3)
    P = b1_ * q.DeltaAlpha + a2 * q.B12
    gap = b2 * P - q.Bt12 ** 2
    # magnitude bounds of the cancelling sums keep the zero test meaningful
    # when the draw sits close to the Bt12 = 0 boundary
    pmag = b1_ * (a1 * a2 + a0 * a3) + a2 * a0 * b2
    bt12mag = a2 * b1_ + a0 * b3
    chk.pos(gap, b2 * pmag + bt12mag ** 2)
    band = (q.B23 + a2 * b2) * P * P - a2 * q.Bt12 ** 2 * P + a0 * a3 * q.Bt12 ** 3
    chk.zero(band, ((a3 * b1_ + a1 * b3 + a2 * b2) * pmag * pmag
                    + a2 * bt12mag ** 2 * pmag + a0 * a3 * bt12mag ** 3))
    survivors = []
    if chk.ok:
        base = a0 * a2 * q.Bt12 ** 2 + P * P
        vals = {'c1': q.DeltaAlpha * P * P / (q.Bt12 * base),
                'k1': a0 * q.DeltaAlpha * P / base,
                'k2': q.DeltaAlpha * P / (a2 * gap),
                'k3': a0 * a3 * P / (a2 * gap),
                'b1': a3 * P / gap}
        if _all_pos(vals):
            vals['c2'] = (vals['c1'] * vals['k2']
                          * (vals['b1'] * vals['k1'] ** 2 + vals['c1'] ** 2 * vals['k3'])
                          / (vals['k1'] * (vals['b1'] * vals['k1'] ** 2
                                           + vals['c1'] ** 2 * (vals['k2'] + vals['k3']))))
        if _all_pos(vals):
            circuit = series(
                parallel(damper(vals['c1']), spring(vals['k1'])),
                parallel(spring(vals['k2']),
                         series(damper(vals['c2']),
                                parallel(inerter(vals['b1']), spring(vals['k3'])))))
            survivors.append(({}, vals, circuit, chk))
    return _select(Yn, 'fig5e', survivors, {})


def _fig5f_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b1_ = Yn.beta1
    pre = _Check()
    pre.pos(q.DeltaAlpha, abs(q.DeltaAlpha) + a0 * a3)
    pre.pos(q.Bt11, abs(a1 * b1_) + abs(a0 * Yn.beta2))
    if not pre.ok:
        return None, ConditionRecord('fig5f', 'failed', {'x': (), 'y': ()})
    A = q.Bt11 * (b1_ * q.DeltaAlpha + a1 * q.B13)
    B = -a0 * q.Bt11 * q.DeltaAlpha
    C = a0 ** 3 * a1 * a3
    cands, mroot = _quad_roots(A, B, C)
    # Bt11 and DeltaAlpha are small differences of like-sized products, so
    # every test involving them is scaled by the pre-cancellation magnitudes
    bt11mag = abs(a1 * b1_) + abs(a0 * Yn.beta2)
    ycands = [r for r in real_roots([a0, a1, a2, a3]) if r < 0.0]
    survivors = []
    ys = []
    for x in cands:
        chk = _Check()
        chk.marginal = mroot or pre.marginal
        den = b1_ * x - a0
        chk.pos(den, abs(b1_ * x) + a0)
        chk.pos(a2 * q.Bt11 * x - a0 * a0 * a3, a2 * abs(x) * bt11mag + a0 * a0 * a3)
        chk.pos(a0 * a1 - q.Bt11 * x, a0 * a1 + abs(x) * bt11mag)
        if not chk.ok:
            continue
        for y in ycands:
            ychk = _Check()
            ychk.marginal = chk.marginal
            ys.append(y)
            # the squared pairing relation between x and y, cross-multiplied
            band = (y * y * (a0 * a0 * a3 - a2 * q.Bt11 * x)
                    - a0 * (q.Bt11 * x - a0 * a1))
            ychk.zero(band, y * y * (a0 * a0 * a3 + a2 * abs(x) * bt11mag)
                      + a0 * (abs(x) * bt11mag + a0 * a1))
            if not ychk.ok:
                continue
            vals = {'c1': -x / y, 'k1': x, 'k2': a0 * x / den,
                    'k3': a0 * a0 * a3 * x / (q.DeltaAlpha * den),
                    'b1': a0 * a3 * x / (a1 * den)}
            if _all_pos(vals):
                vals['c2'] = (vals['c1']
                              * (vals['b1'] * vals['k1'] ** 2 * (vals['k2'] + vals['k3'])
                                 + vals['c1'] ** 2 * vals['k2'] * vals['k3'])
                              / (vals['k1'] * (vals['b1'] * vals['k1'] ** 2
                                               + vals['c1'] ** 2 * vals['k2'])))
            if not _all_pos(vals):
                continue
            circuit = series(
                parallel(damper(vals['c1']), spring(vals['k1'])),
                parallel(spring(vals['k2']),
                         series(inerter(vals['b1']),
                                parallel(damper(vals['c2']), spring(vals['k3'])))))
            survivors.append(({'x': x, 'y': y}, vals, circuit, ychk))
    return _select(Yn, 'fig5f', survivors, {'x': tuple(cands), 'y': tuple(ys)})


def _fig5g_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    empty = {'x': (), 'y': ()}
    gate = _Check()
    gate.pos(q.Bt11, abs(a1 * b1_) + abs(a0 * b2))
    if not gate.ok:
        return None, ConditionRecord('fig5g', 'failed', empty)
    # on a realizable instance the block shared root and the two leftover
    # block roots all survive cancellation as roots of the numerator cubic
    ys3 = _neg_real_cubic_roots(a3, a2, a1, a0)
    if len(ys3) < 3:
        return None, ConditionRecord('fig5g', 'failed', empty)

    def upsilon(x):
        u2 = (b1_ * b1_ * b3 * b3 * x ** 4
              + (a0 * b2 * b2 * b3 - 2.0 * a0 * b1_ * b3 * b3
                 - a1 * b1_ * b2 * b3 - a3 * b1_ * b1_ * b2) * x ** 3
              + (a0 * a0 * b3 * b3 - a0 * a1 * b2 * b3 + 2.0 * a0 * a3 * b1_ * b2
                 + a1 * a1 * b1_ * b3 + a1 * a3 * b1_ * b1_) * x * x
              - a0 * a3 * (a0 * b2 + 2.0 * a1 * b1_) * x
              + a0 * a0 * a1 * a3)
        u1 = (b1_ * b2 * b3 * x ** 3
              - (2.0 * a1 * b1_ * b3 + 2.0 * a3 * b1_ * b1_ - a0 * b2 * b3) * x * x
              + 4.0 * a0 * a3 * b1_ * x - 2.0 * a0 * a0 * a3)
        u0 = (b1_ * b2 * b3 * x ** 3 - b1_ * q.M23 * x * x
              + 2.0 * a0 * a3 * b1_ * x - a0 * a0 * a3)
        return u2, u1, u0

    cand_x, cand_y = [], []
    survivors = []
    for i in range(3):
        y = ys3[i]
        rest = [ys3[j] for j in range(3) if j != i]
        for d1, d2 in (tuple(rest), tuple(rest[::-1])):
            rho = y * d2 / (y + d2)
            c1 = a3 / b3
            b1e = c1 / rho
            x = b1e * y * d2
            cand_x.append(x)
            cand_y.append(y)
            chk = _Check()
            chk.pos(q.Bt11, abs(a1 * b1_) + abs(a0 * b2))
            t_ = b2 - b3 * (d1 + rho)
            chk.pos(t_, abs(b2) + abs(b3 * (d1 + rho)))
            if not chk.ok:
                continue
            b2e = a3 / t_
            chk.zero(b3 * d1 * rho + t_ * d2 - b1_,
                     abs(b3 * d1 * rho) + abs(t_ * d2) + abs(b1_))
            v = b1_ * x - a0
            chk.pos(v, abs(b1_ * x) + a0)
            t = (b2 * x - a1) * y + v
            chk.pos(t, abs((b2 * x - a1) * y) + abs(v))
            num0 = ((b1_ * x - a0)
                    * (b1_ * b3 * b3 * x * x - b3 * q.Mt12 * x
                       - a2 * q.B13 + a3 * q.Bt11))
            den0 = a3 * (b1_ * b1_ * b3 * x * x
                         + (2.0 * b1_ * q.B13 - b2 * q.Bt11) * x
                         - a0 * q.B13 + a1 * q.Bt11)
            chk.zero(y * den0 - num0, abs(y * den0) + abs(num0))
            u2, u1, u0 = upsilon(x)
            band = ((b2 * x - a1) * u2 * y * y
                    + (b2 * x - a1) * v * u1 * y + v * v * u0)
            chk.zero(band, (abs((b2 * x - a1) * u2 * y * y)
                            + abs((b2 * x - a1) * v * u1 * y) + abs(v * v * u0)))
            if not chk.ok:
                continue
            vals = {'c1': c1, 'c2': b2e * (y + d1), 'k1': x, 'k2': b2e * y * d1,
                    'b1': b1e, 'b2': b2e}
            if not _all_pos(vals):
                continue
            circuit = series(
                parallel(inerter(vals['b2']), damper(vals['c2']),
                         spring(vals['k2'])),
                parallel(spring(vals['k1']),
                         series(inerter(vals['b1']), damper(vals['c1']))))
            survivors.append(({'x': x, 'y': y}, vals, circuit, chk))
    survivors.sort(key=lambda s: s[0]['x'])
    return _select(Yn, 'fig5g', survivors,
                   {'x': tuple(cand_x), 'y': tuple(cand_y)})


def _fig5h_worker(Y):
    Yn, _c = _normalized(Y)
    q = bezout_quantities(Yn)
    a3, a2, a1, a0 = Yn.alpha3, Yn.alpha2, Yn.alpha1, Yn.alpha0
    b3, b2, b1_ = Yn.beta3, Yn.beta2, Yn.beta1
    empty = {'x': (), 'y': (), 'z': ()}
    if abs(q.Bt11) > 1e-6 * max(abs(a1 * b1_) + abs(a0 * b2), _TINY):
        return None, ConditionRecord('fig5h', 'failed', empty)
    # both block numerators vanish at the shared root, so it survives the
    # cancellation along with the leftover root of each block
    ys3 = _neg_real_cubic_roots(a3, a2, a1, a0)
    if len(ys3) < 3:
        return None, ConditionRecord('fig5h', 'failed', empty)

    def theta(x, y):
        t0 = -q.Bt12 * x * y + a3 * y * (b1_ * y - 2.0 * a0) + a0 * a2 * x
        t1 = (a0 * (a2 * x - a3 * y) ** 2 - q.Bt12 * x * y * (a2 * x - a3 * y)
              + a1 * a3 * x * x * (b1_ * y - a0))
        t2 = (x * y * (b1_ * q.DeltaAlpha + a1 * q.B13) - a0 * q.DeltaAlpha * x
              - a1 * a3 * y * (b1_ * y - 2.0 * a0))
        t3 = (x * x * y * (b1_ * q.B33 - b3 * q.B13) - a0 * q.B33 * x * x
              + 2.0 * a3 * q.B13 * x * y + a3 * q.Bt13 * y * y)
        return t0, t1, t2, t3

    cand_x, cand_y, cand_z = [], [], []
    survivors = []
    for i in range(3):
        g = ys3[i]
        rest = [ys3[j] for j in range(3) if j != i]
        for d1, d2 in (tuple(rest), tuple(rest[::-1])):
            r1 = g * d1 / (g + d1)
            r2 = g * d2 / (g + d2)
            den = (d1 + r2) - (d2 + r1)
            if abs(den) <= 1e-12 * (d1 + r2 + d2 + r1):
                continue
            p_ = (b2 - b3 * (d2 + r1)) / den
            q_ = b3 - p_
            chk = _Check()
            chk.pos(p_, abs(p_) + abs(q_))
            chk.pos(q_, abs(p_) + abs(q_))
            if not chk.ok:
                continue
            chk.zero(p_ * d1 * r2 + q_ * d2 * r1 - b1_,
                     abs(p_ * d1 * r2) + abs(q_ * d2 * r1) + abs(b1_))
            m = a3 * a3 / (p_ * q_ * r1 * r2)
            rr = p_ * r2 / (q_ * r1)
            z = math.sqrt(m * rr)
            b2e = math.sqrt(m / rr)
            x = z * r1
            y = z * g * d1
            cand_x.append(x)
            cand_y.append(y)
            cand_z.append(z)
            w = b1_ * y - a0
            chk.pos(b3 * x - a3, abs(b3 * x) + a3)
            chk.pos(w, abs(b1_ * y) + a0)
            t0, t1, t2, t3 = theta(x, y)
            chk.pos(t0, (abs(q.Bt12 * x * y) + abs(a3 * y * (b1_ * y - 2.0 * a0))
                         + abs(a0 * a2 * x)))
            band_b = a0 * x * t0 * z * z - y * t1 * z + a3 * a3 * x * x * y * y * w
            chk.zero(band_b, (abs(a0 * x * t0 * z * z) + abs(y * t1 * z)
                              + abs(a3 * a3 * x * x * y * y * w)))
            band_c = a0 * t0 * z * z + x * t2 * z + a0 * a3 * x * y * y * (b3 * x - a3)
            chk.zero(band_c, (abs(a0 * t0 * z * z) + abs(x * t2 * z)
                              + abs(a0 * a3 * x * y * y * (b3 * x - a3))))
            band_d = (x * w * t0 * z * z - y * y * t3 * z
                      + a3 * a3 * x * x * y * y * w)
            chk.zero(band_d, (abs(x * w * t0 * z * z) + abs(y * y * t3 * z)
                              + abs(a3 * a3 * x * x * y * y * w)))
            if not chk.ok:
                continue
            vals = {'c1': x, 'c2': b2e * r2,
                    'k1': y, 'k2': b2e * g * d2,
                    'b1': z, 'b2': b2e}
            if not _all_pos(vals):
                continue
            circuit = series(
                parallel(spring(vals['k1']),
                         series(inerter(vals['b1']), damper(vals['c1']))),
                parallel(spring(vals['k2']),
                         series(inerter(vals['b2']), damper(vals['c2']))))
            survivors.append(({'x': x, 'y': y, 'z': z}, vals, circuit, chk))
    survivors.sort(key=lambda s: s[0]['x'])
    return _select(Yn, 'fig5h', survivors,
                   {'x': tuple(cand_x), 'y': tuple(cand_y), 'z': tuple(cand_z)})


# public entry points --------------------------------------------------------

_WORKERS = (
    ('foster', _foster_worker),
    ('fig2', _fig2_worker),
    ('fig3a', _fig3a_worker),
    ('fig3b', _fig3b_worker),
    ('fig3c', _fig3c_worker),
    ('fig4a', _fig4a_worker),
    ('fig4b', _fig4b_worker),
    ('fig4c', _fig4c_worker),
    ('fig4d', _fig4d_worker),
    ('fig5a', _fig5a_worker),
    ('fig5b', _fig5b_worker),
    ('fig5c', _fig5c_worker),
    ('fig5d', _fig5d_worker),
    ('fig5e', _fig5e_worker),
    ('fig5f', _fig5f_worker),
    ('fig5g', _fig5g_worker),
    ('fig5h', _fig5h_worker),
)


def synth_fig3a(Y):
    """Five- or six-element bridge with a spring across the port."""
    return _fig3a_worker(Y)[0]


def synth_fig3b(Y):
    """Port spring over two parallel pairs, one holding the inerter arm."""
    return _fig3b_worker(Y)[0]


def synth_fig3c(Y):
    """Port damper and spring beside a two-stage series branch."""
    return _fig3c_worker(Y)[0]


def synth_fig4a(Y):
    """Port damper beside a three-way parallel stage; two dampers may drop."""
    return _fig4a_worker(Y)[0]


def synth_fig4b(Y):
    """Port damper beside two stages with a buried inerter-damper arm."""
    return _fig4b_worker(Y)[0]


def synth_fig4c(Y):
    """Two series branches side by side, damper-spring and inerter stage."""
    return _fig4c_worker(Y)[0]


def synth_fig4d(Y):
    """Inerter-damper branch beside a two-inerter stage."""
    return _fig4d_worker(Y)[0]


def synth_fig5a(Y):
    """Series chain whose tail damper can vanish or whose inerter arm can
    short."""
    return _fig5a_worker(Y)[0]


def synth_fig5b(Y):
    """Series chain with an inerter-spring arm in the tail stage."""
    return _fig5b_worker(Y)[0]


def synth_fig5c(Y):
    """Series chain with a damper-spring arm inside the head stage."""
    return _fig5c_worker(Y)[0]


def synth_fig5d(Y):
    """Series chain with an inerter-damper arm inside the head stage."""
    return _fig5d_worker(Y)[0]


def synth_fig5e(Y):
    """Series chain where the tail damper feeds an inerter-spring pair."""
    return _fig5e_worker(Y)[0]


def synth_fig5f(Y):
    """Series chain where the tail inerter feeds a damper-spring pair."""
    return _fig5f_worker(Y)[0]


def synth_fig5g(Y):
    """Three-way head stage in series with a spring plus inerter-damper
    arm."""
    return _fig5g_worker(Y)[0]


def synth_fig5h(Y):
    """Two mirrored spring plus inerter-damper stages in series."""
    return _fig5h_worker(Y)[0]


def realize_six_element(Y: BicubicAdmittance,
                        exhaustive: bool = False) -> SynthesisReport:
    """Search every supported layout for a circuit realizing Y, stopping at
    the first verified hit unless exhaustive evaluation is requested."""
    assumption = check_assumption1(Y)
    if not assumption.ok:
        return SynthesisReport(assumption, False, (), None)
    if not is_positive_real(Y):
        return SynthesisReport(assumption, False, (), None)
    records = []
    chosen = None
    for _config, worker in _WORKERS:
        result, recs = worker(Y)
        if isinstance(recs, ConditionRecord):
            recs = [recs]
        records.extend(recs)
        if result is not None and chosen is None:
            chosen = result
            if not exhaustive:
                break
    return SynthesisReport(assumption, True, tuple(records), chosen)
