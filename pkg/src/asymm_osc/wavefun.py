"""Piecewise eigenfunctions glued at x=0, their normalization, sampling,
density grids and node counting."""

import math
from dataclasses import dataclass, replace

import numpy as np

from . import quadrature
from .errors import AsymmOscError, DomainError, RangeError
from .specfun import _PCF_Z_MAX, pcf_d, pcf_d_prime

# argument scale conventions: 'eq6' uses xi = sqrt(2 omega) x (the
# substitution that actually solves the Schroedinger equation); 'sec4'
# uses sqrt(omega) x, the variant written next to the glued form
CONVENTIONS = ("eq6", "sec4")


class InconsistentRecordError(AsymmOscError, ValueError):
    """The supplied record does not solve the matching conditions."""


@dataclass(frozen=True)
class QuadratureSettings:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 4000
    tail_cut: float = 1e-14  # envelope threshold for truncating the tails

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_subdivisions < 16:
            raise DomainError("max_subdivisions must be at least 16")


DEFAULT_SETTINGS = QuadratureSettings()


def _scale(omega, convention):
    if convention == "eq6":
        return math.sqrt(2.0 * omega)
    if convention == "sec4":
        return math.sqrt(omega)
    raise DomainError(f"unknown convention {convention!r}")


def _tail_xi(nu, threshold):
    """Argument beyond which the decay envelope of D_nu is below threshold.

    Envelope: 2^{|nu|/2} (1+xi)^{max(nu,0)} e^{-xi^2/4}.
    """
    def env(xi):
        return (abs(nu) / 2.0 * math.log(2.0)
                + max(nu, 0.0) * math.log1p(xi) - xi * xi / 4.0)
    log_thr = math.log(threshold)
    xi = 2.0 * math.sqrt(max(nu, 0.0) + 1.0)  # past the turning point
    while env(xi) > log_thr and xi < _PCF_Z_MAX:
        xi *= 1.25
    return min(xi, _PCF_Z_MAX)


@dataclass(frozen=True)
class PiecewiseEigenfunction:
    """Normalized eigenfunction: coeff * D_nu on each half-line, glued at 0."""

    config: object
    record: object
    coeff_right: float
    coeff_left: float
    scale_right: float
    scale_left: float
    norm: float
    sign: float
    convention: str = "eq6"

    def eval(self, x):
        """psi(x); vectorized over x, with x=0 served by the right branch."""
        scalar = np.ndim(x) == 0
        xs = np.asarray(x, dtype=float)
        out = np.zeros(xs.shape)
        amp = self.sign * self.norm
        right = xs >= 0.0
        zr = self.scale_right * xs[right]
        live = zr <= _PCF_Z_MAX  # envelope < 1e-170 beyond the supported box
        vals = np.zeros(zr.shape)
        vals[live] = self.coeff_right * pcf_d(self.record.nu_plus, zr[live])
        out[right] = amp * vals
        zl = -self.scale_left * xs[~right]
        live = zl <= _PCF_Z_MAX
        vals = np.zeros(zl.shape)
        vals[live] = self.coeff_left * pcf_d(self.record.nu_minus, zl[live])
        out[~right] = amp * vals
        return float(out) if scalar else out

    __call__ = eval

    def density(self, x):
        p = self.eval(x)
        return p * p

    def tail_radius(self, threshold=None):
        """|x| beyond which both branch envelopes are below threshold."""
        thr = DEFAULT_SETTINGS.tail_cut if threshold is None else threshold
        r_right = _tail_xi(self.record.nu_plus, thr) / self.scale_right
        r_left = _tail_xi(self.record.nu_minus, thr) / self.scale_left
        return max(r_right, r_left)


def build_eigenfunction(config, record, convention="eq6",
                        settings=DEFAULT_SETTINGS):
    """Construct, validate, normalize and sign-fix the glued eigenfunction."""
    scale_right = _scale(config.omega_plus, convention)
    scale_left = _scale(config.omega_minus, convention)
    d_plus_0 = pcf_d(record.nu_plus, 0.0)
    d_minus_0 = pcf_d(record.nu_minus, 0.0)
    if abs(d_plus_0) > 1e-8 or abs(d_minus_0) > 1e-8:
        coeff_right, coeff_left = d_minus_0, d_plus_0
    else:
        # odd glued pair: both boundary values vanish; solve the
        # derivative-matching row of the linear system instead
        coeff_right = math.sqrt(config.omega_minus) \
            * pcf_d_prime(record.nu_minus, 0.0)
        coeff_left = -math.sqrt(config.omega_plus) \
            * pcf_d_prime(record.nu_plus, 0.0)
    psi = PiecewiseEigenfunction(
        config=config, record=record,
        coeff_right=coeff_right, coeff_left=coeff_left,
        scale_right=scale_right, scale_left=scale_left,
        norm=1.0, sign=1.0, convention=convention)
    _check_matching(psi)
    psi = normalize(psi, settings)
    # deterministic overall sign: psi > 0 on the far right tail
    if coeff_right < 0.0:
        psi = replace(psi, sign=-1.0)
    return psi


def _check_matching(psi):
    rec = psi.record
    v_right = psi.coeff_right * pcf_d(rec.nu_plus, 0.0)
    v_left = psi.coeff_left * pcf_d(rec.nu_minus, 0.0)
    v_scale = max(abs(v_right), abs(v_left))
    if v_scale > 0 and abs(v_right - v_left) > 1e-9 * v_scale:
        raise InconsistentRecordError(
            f"value mismatch at x=0 for nu_+={rec.nu_plus}")
    d_right = psi.coeff_right * psi.scale_right * pcf_d_prime(rec.nu_plus, 0.0)
    d_left = psi.coeff_left * psi.scale_left * pcf_d_prime(rec.nu_minus, 0.0)
    d_scale = max(abs(d_right), abs(d_left), 1e-12 * v_scale)
    if abs(d_right + d_left) > 1e-8 * d_scale:
        raise InconsistentRecordError(
            f"derivative mismatch at x=0 for nu_+={rec.nu_plus}: "
            f"residual {abs(d_right + d_left) / d_scale:.2e}")


def _half_line_norm_sq(psi, settings):
    r_right = _tail_xi(psi.record.nu_plus, settings.tail_cut) / psi.scale_right
    r_left = _tail_xi(psi.record.nu_minus, settings.tail_cut) / psi.scale_left
    kw = dict(rel_tol=settings.rel_tol, abs_tol=settings.abs_tol,
              max_subdivisions=settings.max_subdivisions)
    return (quadrature.integrate(psi.density, -r_left, 0.0, **kw)
            + quadrature.integrate(psi.density, 0.0, r_right, **kw))


def normalize(psi, settings=DEFAULT_SETTINGS):
    """Rescale so the squared integral over the line is 1 (idempotent)."""
    total = _half_line_norm_sq(psi, settings)
    if total <= 0.0:
        raise InconsistentRecordError("zero-norm eigenfunction")
    return replace(psi, norm=psi.norm / math.sqrt(total))


def count_zeros(psi, search_radius, grid_points=4001):
    """Number of interior zeros of psi on (-search_radius, search_radius)."""
    if search_radius <= 0.0:
        raise DomainError("search_radius must be positive")
    xs = np.linspace(-search_radius, search_radius, grid_points)
    ys = psi.eval(xs)
    step = xs[1] - xs[0]
    zeros = []
    floor = 1e-12 * np.max(np.abs(ys))
    tiny = np.abs(ys) <= floor
    # grid points sitting on a zero, flanked by opposite nonzero signs
    # (the x=0 node of odd glued states lands exactly on the grid)
    for i in range(1, len(xs) - 1):
        if tiny[i] and not tiny[i - 1] and not tiny[i + 1] \
                and ys[i - 1] * ys[i + 1] < 0.0:
            zeros.append(xs[i])
    idx = np.nonzero((ys[:-1] * ys[1:] < 0.0)
                     & ~tiny[:-1] & ~tiny[1:])[0]
    for i in idx:
        lo, hi = xs[i], xs[i + 1]
        flo = ys[i]
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            fm = psi.eval(mid)
            if flo * fm <= 0.0:
                hi = mid
            else:
                lo, flo = mid, fm
        zeros.append(0.5 * (lo + hi))
    zeros.sort()
    dedup = []
    for z in zeros:
        if not dedup or z - dedup[-1] > 0.5 * step:
            dedup.append(z)
        elif z - dedup[-1] > 1e-9 * search_radius:
            raise AsymmOscError(
                f"zeros at {dedup[-1]} and {z} too close for grid step {step}")
    return len(dedup)


def density_grid(psi, x_min, x_max, samples):
    """Uniform grid of (x, |psi|^2) pairs."""
    if samples < 2:
        raise DomainError("samples must be >= 2")
    xs = np.linspace(x_min, x_max, samples)
    return list(zip(xs.tolist(), psi.density(xs).tolist()))
