"""Passive one-port synthesis for bicubic admittances with a pole at the
origin, plus the inerter-based suspension control harness built on top."""

from .admittance import (
    AssumptionReport,
    BicubicAdmittance,
    BiquadraticImpedance,
    check_assumption1,
    extract_parallel_spring,
    is_positive_real,
    is_regular,
)
from .circuits import (
    CircuitNode,
    Element,
    VerificationReport,
    admittance_of,
    element_count,
    parse_netlist,
    serialize_netlist,
    structure_check,
    verify_realization,
)
from .poly_core import (
    BezoutianSet,
    Polynomial,
    RationalFunction,
    bezout_quantities,
    rational_equivalent,
    real_roots,
    resultant_R0,
)
from .synthesis import Realization, SynthesisReport, realize_six_element
from .control_harness import (
    ClosedLoopSystem,
    StateSpace,
    TrainParams,
    build_controller,
    build_train_model,
    close_loop,
    evaluate_J1,
    h2_norm,
    optimize_admittance,
    pade_delay,
)

__all__ = [
    'AssumptionReport', 'BicubicAdmittance', 'BiquadraticImpedance',
    'BezoutianSet', 'CircuitNode', 'ClosedLoopSystem', 'Element',
    'Polynomial', 'RationalFunction', 'Realization', 'StateSpace',
    'SynthesisReport', 'TrainParams', 'VerificationReport',
    'admittance_of', 'bezout_quantities', 'build_controller',
    'build_train_model', 'check_assumption1', 'close_loop', 'element_count',
    'evaluate_J1', 'extract_parallel_spring', 'h2_norm', 'is_positive_real',
    'is_regular', 'optimize_admittance', 'pade_delay', 'parse_netlist',
    'rational_equivalent', 'real_roots', 'realize_six_element',
    'resultant_R0', 'serialize_netlist', 'structure_check',
    'verify_realization',
]
