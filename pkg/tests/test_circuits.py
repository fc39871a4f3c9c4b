import numpy as np
import pytest

from passivesynth.admittance import BicubicAdmittance
from passivesynth.circuits import (
    CircuitNode,
    DegenerateTopology,
    Element,
    ParseError,
    admittance_of,
    damper,
    element_count,
    inerter,
    parallel,
    parse_netlist,
    serialize_netlist,
    series,
    spring,
    structure_check,
    verify_realization,
)
from passivesynth.poly_core import RationalFunction, rational_equivalent

EX1 = BicubicAdmittance(6.0, 13.0, 17.0, 10.0, 7.0, 13.0, 15.0)

# series(parallel(c1, k1), parallel(c3, k2, series(b1, c2))) realizes EX1
FIG5A_EX1 = series(
    parallel(damper(1.0), spring(1.0)),
    parallel(damper(1.0), spring(2.0), series(inerter(1.0), damper(5.0))),
)


def test_element_validation():
    with pytest.raises(ValueError):
        Element('resistor', 1.0)
    with pytest.raises(ValueError):
        Element('damper', -1.0)
    with pytest.raises(ValueError):
        Element('damper', 0.0)
    with pytest.raises(ValueError):
        Element('damper', None)
    with pytest.raises(ValueError):
        Element('damper', 1.0, 'open')
    Element('damper', None, 'open')


def test_group_flattening():
    c = series(series(damper(1.0), spring(2.0)), inerter(3.0))
    assert c.type == 'series'
    assert len(c.children) == 3
    p = parallel(damper(1.0), parallel(spring(2.0), inerter(3.0)))
    assert p.type == 'parallel'
    assert len(p.children) == 3


def test_single_element_admittances():
    s = 0.7 + 1.3j
    assert admittance_of(damper(2.5))(s) == pytest.approx(2.5)
    assert admittance_of(spring(3.0))(s) == pytest.approx(3.0 / s)
    assert admittance_of(inerter(4.0))(s) == pytest.approx(4.0 * s)


def test_series_spring_damper():
    # Z = s/k + 1/c, so Y = k*c / (c*s + k)
    Y = admittance_of(series(spring(4.0), damper(2.0)))
    for s in [0.5 + 0.5j, 2.0, 1.0 - 3.0j]:
        assert Y(s) == pytest.approx(8.0 / (2.0 * s + 4.0), rel=1e-12)


def test_common_factor_cancels_to_cubic():
    # three-branch circuit whose raw composition carries a shared factor
    c = parallel(
        spring(1.0),
        series(inerter(1.0), damper(1.0)),
        series(spring(1.0), parallel(inerter(1.0), damper(2.0))),
    )
    Y = admittance_of(c)
    assert Y.num.degree() == 3
    assert Y.den.degree() == 3
    target = RationalFunction((1.0, 4.0, 3.0, 1.0), (0.0, 1.0, 2.0, 1.0))
    assert rational_equivalent(Y, target, tol=1e-9)


def test_limit_elements_prune():
    Y = admittance_of(parallel(spring(1.0), damper(None, 'open')))
    assert Y(2.0) == pytest.approx(0.5)
    Y = admittance_of(series(damper(2.0), spring(None, 'short')))
    assert Y(5.0) == pytest.approx(2.0)


def test_limit_elements_degenerate_positions():
    with pytest.raises(DegenerateTopology):
        admittance_of(series(spring(1.0), damper(None, 'open')))
    with pytest.raises(DegenerateTopology):
        admittance_of(parallel(spring(1.0), damper(None, 'short')))
    with pytest.raises(DegenerateTopology):
        admittance_of(damper(None, 'open'))


def test_element_count_skips_limits():
    c = parallel(spring(1.0), damper(None, 'open'), series(inerter(2.0), damper(3.0)))
    assert element_count(c) == 3


def test_structure_check_accepts_target_shapes():
    assert structure_check(FIG5A_EX1)
    assert structure_check(parallel(damper(1.0), spring(1.0)))
    foster_shape = parallel(
        spring(1.0), damper(1.0),
        series(inerter(1.0), parallel(damper(1.0), series(spring(1.0), damper(1.0)))))
    assert structure_check(foster_shape)


def test_structure_check_rejects_wrong_shapes():
    # no spring path: admittance stays finite at zero frequency
    assert not structure_check(series(spring(1.0), damper(1.0)))
    # spring-only cut: admittance vanishes at zero frequency
    assert not structure_check(parallel(spring(1.0), spring(2.0)))
    # inerter path: admittance grows at high frequency
    assert not structure_check(parallel(spring(1.0), inerter(1.0)))
    # inerter-only cut
    assert not structure_check(series(parallel(spring(1.0), damper(1.0)), inerter(1.0)))


def test_verify_realization_reference_circuit():
    rep = verify_realization(EX1, FIG5A_EX1, tol=1e-6)
    assert rep.equivalent
    assert rep.structural_ok
    assert rep.max_rel_coeff_err < 1e-9
    assert rep.scale_k == pytest.approx(1.0, rel=1e-9)


def test_verify_realization_rejects_wrong_value():
    wrong = series(
        parallel(damper(1.0), spring(1.0)),
        parallel(damper(1.0), spring(2.0), series(inerter(1.0), damper(4.0))),
    )
    rep = verify_realization(EX1, wrong, tol=1e-6)
    assert not rep.equivalent
    assert rep.max_rel_coeff_err > 1e-3


def test_verify_realization_through_common_factor():
    num = np.polynomial.polynomial.polymul([1.0, 1.0], [10.0, 17.0, 13.0, 6.0])
    den = np.polynomial.polynomial.polymul([1.0, 1.0], [0.0, 15.0, 13.0, 7.0])
    padded = RationalFunction(tuple(num), tuple(den))
    rep = verify_realization(padded, FIG5A_EX1, tol=1e-6)
    assert rep.equivalent


def test_netlist_round_trip():
    text = serialize_netlist(FIG5A_EX1, config='fig5a', source='test')
    circuit, meta = parse_netlist(text)
    assert circuit == FIG5A_EX1
    assert meta == {'config': 'fig5a', 'source': 'test'}
    assert serialize_netlist(circuit, **meta) == text


def test_netlist_exact_format():
    text = serialize_netlist(parallel(spring(2.0), damper(None, 'open')),
                             config='demo', source='unit')
    expected = (
        '{\n'
        '  "circuit": {\n'
        '    "type": "parallel",\n'
        '    "children": [\n'
        '      {\n'
        '        "type": "element",\n'
        '        "kind": "spring",\n'
        '        "value": 2.0\n'
        '      },\n'
        '      {\n'
        '        "type": "element",\n'
        '        "kind": "damper",\n'
        '        "limit": "open"\n'
        '      }\n'
        '    ]\n'
        '  },\n'
        '  "meta": {\n'
        '    "config": "demo",\n'
        '    "source": "unit"\n'
        '  }\n'
        '}\n'
    )
    assert text == expected


def test_netlist_canonicalizes_nested_groups():
    text = '''{"circuit": {"type": "series", "children": [
        {"type": "series", "children": [
            {"type": "element", "kind": "damper", "value": 1.0},
            {"type": "element", "kind": "spring", "value": 2.0}]},
        {"type": "element", "kind": "inerter", "value": 3.0}]}}'''
    circuit, meta = parse_netlist(text)
    assert circuit == series(damper(1.0), spring(2.0), inerter(3.0))
    assert meta == {'config': '', 'source': ''}


def test_netlist_parse_errors():
    with pytest.raises(ParseError, match='line 1'):
        parse_netlist('{not json')
    with pytest.raises(ParseError, match='circuit.kind'):
        parse_netlist('{"circuit": {"type": "element", "kind": "mass", "value": 1}}')
    with pytest.raises(ParseError, match=r'children\[1\]'):
        parse_netlist('{"circuit": {"type": "parallel", "children": ['
                      '{"type": "element", "kind": "spring", "value": 1},'
                      '{"type": "element", "kind": "spring", "value": -1}]}}')
    with pytest.raises(ParseError, match='circuit.type'):
        parse_netlist('{"circuit": {"type": "bridge", "children": []}}')


def random_circuit(rng, depth=0):
    kinds = [damper, spring, inerter]
    if depth >= 2 or rng.random() < 0.35:
        return kinds[rng.integers(0, 3)](float(10.0 ** rng.uniform(-1, 1)))
    op = series if rng.random() < 0.5 else parallel
    n = int(rng.integers(2, 4))
    return op(*[random_circuit(rng, depth + 1) for _ in range(n)])


def test_parallel_is_pointwise_sum():
    rng = np.random.default_rng(17)
    for _ in range(40):
        c1 = random_circuit(rng)
        c2 = random_circuit(rng)
        y1, y2 = admittance_of(c1), admittance_of(c2)
        yp = admittance_of(parallel(c1, c2))
        for _ in range(20):
            s = complex(rng.uniform(0.3, 2.0), rng.uniform(-2.0, 2.0))
            total = y1(s) + y2(s)
            assert yp(s) == pytest.approx(total, rel=1e-10, abs=1e-12)


def test_random_circuits_are_positive_real():
    rng = np.random.default_rng(29)
    for _ in range(500):
        c = random_circuit(rng)
        Y = admittance_of(c)
        w = 10.0 ** rng.uniform(-2, 2, size=12)
        vals = Y(1j * w)
        finite = np.isfinite(vals)
        assert np.all(vals.real[finite] >= -1e-9 * np.abs(vals[finite]) - 1e-30)


def test_admittance_degree_bounded_by_elements():
    rng = np.random.default_rng(31)
    for _ in range(100):
        c = random_circuit(rng)
        Y = admittance_of(c)
        n = element_count(c)
        assert Y.num.degree() <= n
        assert Y.den.degree() <= n
