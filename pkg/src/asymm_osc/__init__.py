"""Numerical toolkit for the one-dimensional asymmetric quantum harmonic
oscillator: eigenvalues of the glued parabolic-cylinder problem, normalized
piecewise eigenfunctions, position matrix elements, quantum-beat signals and
the matching classical oscillator."""

from .classical import (ClassicalState, classical_density, from_config,
                        match_energy, trajectory)
from .errors import (AsymmOscError, ConvergenceError, DomainError, PoleError,
                     RangeError)
from .observables import (BeatSignal, beat_signal, inner_product,
                          mean_position, x_matrix, x_matrix_element)
from .spectrum import (EigenRecord, OscillatorConfig, detect_glued_ratio,
                       eigen_residual, energy, f_ratio, nu_minus,
                       solve_spectrum)
from .wavefun import (CONVENTIONS, PiecewiseEigenfunction, QuadratureSettings,
                      build_eigenfunction, count_zeros, density_grid,
                      normalize)

__version__ = "0.1.0"

__all__ = [
    "AsymmOscError", "BeatSignal", "CONVENTIONS", "ClassicalState",
    "ConvergenceError", "DomainError", "EigenRecord", "OscillatorConfig",
    "PiecewiseEigenfunction", "PoleError", "QuadratureSettings",
    "RangeError", "beat_signal", "build_eigenfunction", "classical_density",
    "count_zeros", "density_grid", "detect_glued_ratio", "eigen_residual",
    "energy", "f_ratio", "from_config", "inner_product", "match_energy",
    "mean_position", "normalize", "nu_minus", "solve_spectrum", "trajectory",
    "x_matrix", "x_matrix_element", "__version__",
]
