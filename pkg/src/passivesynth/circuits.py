"""Series-parallel one-port circuits of dampers, springs, and inerters:
construction helpers, admittance composition, verification, and netlist I/O."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .poly_core import RationalFunction

KINDS = ('damper', 'spring', 'inerter')
LIMITS = ('finite', 'open', 'short')


class DegenerateTopology(ValueError):
    """A limit element sits where it disconnects or shorts the whole port."""


class ParseError(ValueError):
    """Netlist text failed validation."""


@dataclass(frozen=True)
class Element:
    """One passive element; 'open'/'short' mark limits of a removed element."""

    kind: str
    value: float | None = None
    limit: str = 'finite'

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f'unknown element kind {self.kind!r}')
        if self.limit not in LIMITS:
            raise ValueError(f'unknown limit tag {self.limit!r}')
        if self.limit == 'finite':
            v = self.value
            if v is None or not (0.0 < v < math.inf):
                raise ValueError(f'{self.kind} value must be finite and positive')
        elif self.value is not None:
            raise ValueError('limit elements carry no value')


@dataclass(frozen=True)
class CircuitNode:
    """Series-parallel tree node: an element leaf or a series/parallel group."""

    type: str
    element: Element | None = None
    children: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.type == 'element':
            if self.element is None or self.children:
                raise ValueError('element node needs an element and no children')
        elif self.type in ('series', 'parallel'):
            if self.element is not None or len(self.children) < 2:
                raise ValueError(f'{self.type} node needs at least two children')
        else:
            raise ValueError(f'unknown node type {self.type!r}')


def damper(value=None, limit='finite') -> CircuitNode:
    return CircuitNode('element', Element('damper', value, limit))


def spring(value=None, limit='finite') -> CircuitNode:
    return CircuitNode('element', Element('spring', value, limit))


def inerter(value=None, limit='finite') -> CircuitNode:
    return CircuitNode('element', Element('inerter', value, limit))


def _group(type_, children):
    flat = []
    for ch in children:
        if not isinstance(ch, CircuitNode):
            raise TypeError('circuit children must be CircuitNode')
        if ch.type == type_:
            flat.extend(ch.children)
        else:
            flat.append(ch)
    if len(flat) == 1:
        return flat[0]
    return CircuitNode(type_, children=tuple(flat))


def series(*children) -> CircuitNode:
    """Series connection; nested series groups are flattened."""
    return _group('series', children)


def parallel(*children) -> CircuitNode:
    """Parallel connection; nested parallel groups are flattened."""
    return _group('parallel', children)


def element_count(circuit: CircuitNode) -> int:
    """Number of finite elements; open/short placeholders do not count."""
    if circuit.type == 'element':
        return 1 if circuit.element.limit == 'finite' else 0
    return sum(element_count(ch) for ch in circuit.children)


def _prune_limits(node: CircuitNode):
    """Drop vanished limit elements; returns None for open, 'short' marker kept."""
    if node.type == 'element':
        return node
    kept = []
    for ch in node.children:
        p = _prune_limits(ch)
        lim = p.element.limit if p.type == 'element' else 'finite'
        if node.type == 'parallel':
            if lim == 'open':
                continue
            if lim == 'short':
                raise DegenerateTopology('short element inside a parallel group')
        else:
            if lim == 'short':
                continue
            if lim == 'open':
                raise DegenerateTopology('open element inside a series group')
        kept.append(p)
    if not kept:
        raise DegenerateTopology(f'{node.type} group vanished entirely')
    if len(kept) == 1:
        return kept[0]
    return CircuitNode(node.type, children=tuple(kept))


def _trim(c):
    c = np.atleast_1d(np.asarray(c, dtype=float))
    nz = np.nonzero(np.abs(c) > 0)[0]
    return c[: nz[-1] + 1] if len(nz) else np.zeros(1)


def _poly_gcd(p, q, tol=1e-10):
    a, b = _trim(p), _trim(q)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        a = a / np.max(np.abs(a))
        b = b / np.max(np.abs(b))
        _, r = np.polynomial.polynomial.polydiv(a, b)
        r = np.asarray(r)
        if np.max(np.abs(r)) < tol:
            r = np.zeros(1)
        a, b = b, _trim(r)
    if np.any(np.abs(b) > 0):
        return np.ones(1)
    return a / a[-1]


def _divides_back(quot, g, p):
    """True when quot*g reproduces p to working precision."""
    back = np.polynomial.polynomial.polymul(quot, g)
    m = max(len(back), len(p))
    back = np.r_[back, np.zeros(m - len(back))]
    pp = np.r_[p, np.zeros(m - len(p))]
    top = np.max(np.abs(pp))
    return top > 0 and np.max(np.abs(back - pp)) <= 1e-6 * top


def _cancel(num, den, tol=1e-10):
    num, den = _trim(num), _trim(den)
    g = _poly_gcd(num, den, tol)
    if len(g) > 1:
        qn = np.polynomial.polynomial.polydiv(num, g)[0]
        qd = np.polynomial.polynomial.polydiv(den, g)[0]
        # a nearly repeated root can fool the Euclid threshold into an
        # oversized gcd; keep the division only when it reproduces both sides
        if _divides_back(qn, g, num) and _divides_back(qd, g, den):
            num, den = _trim(qn), _trim(qd)
    s = max(np.max(np.abs(num)), np.max(np.abs(den)))
    return num / s, den / s


def _pair_add(n1, d1, n2, d2):
    pm = np.polynomial.polynomial.polymul
    num = np.polynomial.polynomial.polyadd(pm(n1, d2), pm(n2, d1))
    den = pm(d1, d2)
    s = max(np.max(np.abs(num)), np.max(np.abs(den)))
    if s > 0:
        num, den = num / s, den / s
    return num, den


def _compose(node):
    if node.type == 'element':
        e = node.element
        if e.kind == 'damper':
            return np.array([e.value]), np.array([1.0])
        if e.kind == 'spring':
            return np.array([e.value]), np.array([0.0, 1.0])
        return np.array([0.0, e.value]), np.array([1.0])
    parts = [_compose(ch) for ch in node.children]
    if node.type == 'series':
        parts = [(d, n) for n, d in parts]
    n, d = parts[0]
    for n2, d2 in parts[1:]:
        n, d = _pair_add(n, d, n2, d2)
    if node.type == 'series':
        n, d = d, n
    return n, d


def _raw_admittance(circuit: CircuitNode):
    """Uncancelled admittance of the pruned circuit as coefficient arrays."""
    pruned = _prune_limits(circuit)
    if pruned.type == 'element' and pruned.element.limit != 'finite':
        raise DegenerateTopology('circuit reduces to a bare limit element')
    return _compose(pruned)


def admittance_of(circuit: CircuitNode) -> RationalFunction:
    """Compose the driving-point admittance of a series-parallel circuit."""
    num, den = _raw_admittance(circuit)
    num, den = _cancel(num, den)
    return RationalFunction(tuple(num), tuple(den))


def _has_path(node, kind):
    if node.type == 'element':
        return node.element.kind == kind
    if node.type == 'series':
        return all(_has_path(ch, kind) for ch in node.children)
    return any(_has_path(ch, kind) for ch in node.children)


def _has_cut(node, kind):
    if node.type == 'element':
        return node.element.kind == kind
    if node.type == 'series':
        return any(_has_cut(ch, kind) for ch in node.children)
    return all(_has_cut(ch, kind) for ch in node.children)


def structure_check(circuit: CircuitNode) -> bool:
    """Shape test for the target class: a spring-only path through the port,
    no spring-only cut, and no inerter-only path or cut."""
    try:
        pruned = _prune_limits(circuit)
    except DegenerateTopology:
        return False
    return (_has_path(pruned, 'spring')
            and not _has_cut(pruned, 'spring')
            and not _has_path(pruned, 'inerter')
            and not _has_cut(pruned, 'inerter'))


@dataclass(frozen=True)
class VerificationReport:
    equivalent: bool
    max_rel_coeff_err: float
    scale_k: float
    structural_ok: bool


def verify_realization(Y, circuit: CircuitNode, tol: float = 1e-6) -> VerificationReport:
    """Independent check that the circuit admittance equals Y up to a positive
    scale, through cross products so common factors drop out."""
    f = Y.as_rational() if hasattr(Y, 'as_rational') else Y
    # cross products are blind to common factors, so the raw composition is
    # compared directly and no numeric gcd can misjudge a nearly repeated root
    gnum, gden = _raw_admittance(circuit)
    pm = np.polynomial.polynomial.polymul
    p = pm(np.asarray(f.num.coeffs, dtype=float), gden)
    q = pm(gnum, np.asarray(f.den.coeffs, dtype=float))
    m = max(len(p), len(q))
    p = np.r_[p, np.zeros(m - len(p))]
    q = np.r_[q, np.zeros(m - len(q))]
    qq = float(q @ q)
    if qq == 0.0:
        k = 0.0
        err = float(np.max(np.abs(p))) if np.any(p) else 0.0
        err = err if err == 0.0 else math.inf
    else:
        k = float(p @ q) / qq
        scale = max(np.max(np.abs(p)), abs(k) * np.max(np.abs(q)))
        err = float(np.max(np.abs(p - k * q))) / scale if scale > 0 else 0.0
    ok = k > 0 and err <= tol
    return VerificationReport(
        equivalent=bool(ok),
        max_rel_coeff_err=float(err),
        scale_k=float(k),
        structural_ok=structure_check(circuit),
    )


def _node_to_obj(node: CircuitNode):
    if node.type == 'element':
        e = node.element
        if e.limit == 'finite':
            return {'type': 'element', 'kind': e.kind, 'value': e.value}
        return {'type': 'element', 'kind': e.kind, 'limit': e.limit}
    return {'type': node.type, 'children': [_node_to_obj(ch) for ch in node.children]}


def serialize_netlist(circuit: CircuitNode, config: str = '', source: str = '') -> str:
    """Render a circuit as the JSON netlist format."""
    obj = {'circuit': _node_to_obj(circuit),
           'meta': {'config': config, 'source': source}}
    return json.dumps(obj, indent=2) + '\n'


def _obj_to_node(obj, path):
    if not isinstance(obj, dict):
        raise ParseError(f'{path}: expected an object')
    t = obj.get('type')
    if t == 'element':
        kind = obj.get('kind')
        if kind not in KINDS:
            raise ParseError(f'{path}.kind: expected one of {KINDS}, got {kind!r}')
        if 'limit' in obj:
            limit = obj['limit']
            if limit not in ('open', 'short'):
                raise ParseError(f'{path}.limit: expected open or short, got {limit!r}')
            if 'value' in obj:
                raise ParseError(f'{path}: limit element must not carry a value')
            return CircuitNode('element', Element(kind, None, limit))
        value = obj.get('value')
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ParseError(f'{path}.value: expected a number')
        if not (0.0 < float(value) < math.inf):
            raise ParseError(f'{path}.value: must be finite and positive')
        return CircuitNode('element', Element(kind, float(value)))
    if t in ('series', 'parallel'):
        children = obj.get('children')
        if not isinstance(children, list) or not children:
            raise ParseError(f'{path}.children: expected a nonempty list')
        nodes = [_obj_to_node(ch, f'{path}.children[{i}]')
                 for i, ch in enumerate(children)]
        return _group(t, nodes)
    raise ParseError(f'{path}.type: expected element, series, or parallel, got {t!r}')


def parse_netlist(text: str):
    """Parse netlist JSON into (circuit, meta); input is canonicalized."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f'line {e.lineno}, column {e.colno}: {e.msg}') from None
    if not isinstance(obj, dict) or 'circuit' not in obj:
        raise ParseError('top level: expected an object with a circuit field')
    circuit = _obj_to_node(obj['circuit'], 'circuit')
    meta = obj.get('meta', {})
    if not isinstance(meta, dict):
        raise ParseError('meta: expected an object')
    return circuit, {'config': str(meta.get('config', '')),
                     'source': str(meta.get('source', ''))}
