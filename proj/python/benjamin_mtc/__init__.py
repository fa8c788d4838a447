"""Rational spectral solver for the Benjamin equation on the real line.

Thin Python facade over the C++ core: transforms between nodal values and
MTC coefficients, coefficient-space operators, the 8th-order implicit
Runge-Kutta integrator, traveling-wave continuation, and the benchmark
experiment drivers.
"""

from ._core import (
    ConfigError,
    DimensionError,
    apply_H,
    apply_J,
    eval_expansion,
    forward,
    grid_nodes,
    grid_weights,
    hamiltonian,
    integrate,
    inverse,
    run_example,
    solve_wave,
)

__all__ = [
    "ConfigError",
    "DimensionError",
    "apply_H",
    "apply_J",
    "eval_expansion",
    "forward",
    "grid_nodes",
    "grid_weights",
    "hamiltonian",
    "integrate",
    "inverse",
    "run_example",
    "solve_wave",
]

__version__ = "1.0.0"
