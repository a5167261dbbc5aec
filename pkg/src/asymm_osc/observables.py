"""Inner products, position matrix elements and the two-state beat signal."""

import math
from dataclasses import dataclass

import numpy as np

from . import quadrature
from .errors import DomainError
from .spectrum import solve_spectrum
from .wavefun import DEFAULT_SETTINGS, build_eigenfunction


def _overlap(psi_a, psi_b, weight, settings):
    if psi_a.config != psi_b.config:
        raise DomainError("eigenfunctions belong to different configurations")
    radius = max(psi_a.tail_radius(settings.tail_cut),
                 psi_b.tail_radius(settings.tail_cut))
    kw = dict(rel_tol=settings.rel_tol, abs_tol=settings.abs_tol,
              max_subdivisions=settings.max_subdivisions)

    def f(x):
        return weight(x) * psi_a.eval(x) * psi_b.eval(x)

    return (quadrature.integrate(f, -radius, 0.0, **kw)
            + quadrature.integrate(f, 0.0, radius, **kw))


def inner_product(psi_a, psi_b, settings=DEFAULT_SETTINGS):
    """L2 inner product, split at the gluing point."""
    return _overlap(psi_a, psi_b, lambda x: 1.0, settings)


def x_matrix_element(psi_a, psi_b, settings=DEFAULT_SETTINGS):
    """<a| x |b>; symmetric in its arguments by construction."""
    return _overlap(psi_a, psi_b, lambda x: x, settings)


def mean_position(psi, settings=DEFAULT_SETTINGS):
    """Expected position in the given eigenstate."""
    return x_matrix_element(psi, psi, settings)


def x_matrix(config, size, convention="eq6", settings=DEFAULT_SETTINGS):
    """The size x size matrix of position elements between eigenstates."""
    if size < 1:
        raise DomainError("size must be >= 1")
    records = solve_spectrum(config, size)
    funcs = [build_eigenfunction(config, r, convention, settings)
             for r in records]
    mat = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            mat[i, j] = mat[j, i] = x_matrix_element(funcs[i], funcs[j],
                                                     settings)
    return mat


@dataclass(frozen=True)
class BeatSignal:
    """Closed-form <x>(t) for the equal-weight two-state superposition."""

    n: int
    k: int
    omega_plus: float
    center: float
    amplitude: float
    frequency: float
    samples: tuple  # of (t, <x>(t))


def beat_signal(config, n, k, t_max, steps, settings=DEFAULT_SETTINGS,
                convention="eq6"):
    """Mean position of (|n> + |k>)/sqrt(2) on a uniform time grid."""
    if n == k:
        raise DomainError("beat requires two distinct states (n != k)")
    if t_max <= 0.0:
        raise DomainError("t_max must be positive")
    if steps < 2:
        raise DomainError("steps must be >= 2")
    records = solve_spectrum(config, max(n, k) + 1)
    psi_n = build_eigenfunction(config, records[n], convention, settings)
    psi_k = build_eigenfunction(config, records[k], convention, settings)
    x_nn = mean_position(psi_n, settings)
    x_kk = mean_position(psi_k, settings)
    x_nk = x_matrix_element(psi_n, psi_k, settings)
    center = 0.5 * (x_nn + x_kk)
    frequency = config.omega_plus * (records[n].nu_plus - records[k].nu_plus)
    ts = np.linspace(0.0, t_max, steps)
    samples = tuple((float(t), center + x_nk * math.cos(frequency * t))
                    for t in ts)
    return BeatSignal(n=n, k=k, omega_plus=config.omega_plus, center=center,
                      amplitude=x_nk, frequency=frequency, samples=samples)
