"""Exact computations on zip shift spaces and their interval-map codings."""

from .alphabet import (
    SymbolSet,
    TransitionMap,
    example1,
    example2,
    fiber,
    new_transition_map,
    product_transition,
)
from .point import (
    Window,
    ZipPoint,
    equals,
    make_point,
    project_full_sequence,
    symbol_at,
    window_of,
)
from .space import (
    Cylinder,
    SeparationWitness,
    ZipShiftSystem,
    builtin_system,
    density_witness,
    distance,
    first_disagreement,
    in_cylinder,
    iterate,
    iterate_back,
    mixing_gap,
    periodic_points,
    power_separation,
    preimages,
    product_system,
    sensitivity_witness,
    separation_time,
    shift,
    transitive_window,
    verify_transitive,
)
from .shadowing import PseudoOrbit, TraceReport, perturbed_orbit, trace, validate_pseudo_orbit, verify_tracing

__version__ = "0.1.0"
