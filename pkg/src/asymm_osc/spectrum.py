"""Eigenvalue solver for the asymmetric oscillator.

The quantization condition couples the boundary-value ratio
F(nu) = Gamma((1-nu)/2)/Gamma(-nu/2) on the two half-lines.  Between
consecutive asymptotes of the merged pole lattice the function
h(nu) = F(nu) + (1/sqrt(s)) F(s nu + (s-1)/2) falls monotonically from
+inf to -inf, so every bracket holds exactly one root; eigenvalues sitting
exactly on a shared asymptote (glued-Hermite cases) are caught separately
through the entire determinant built from reciprocal gammas.
"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, PoleError
from .specfun import gamma, recip_gamma

_COINCIDENT_TOL = 1e-9
_GLUE_TOL = 1e-9


@dataclass(frozen=True)
class OscillatorConfig:
    """Frequency ratio s = omega_+/omega_- and the scale omega_+ (hbar=m=1)."""

    s: float
    omega_plus: float = 1.0

    def __post_init__(self):
        if self.s < 1.0:
            raise DomainError(
                f"s={self.s} < 1; swap the frequencies so the stiffer side "
                "is on the right (s = omega_+/omega_- >= 1)")
        if self.omega_plus <= 0.0:
            raise DomainError(f"omega_plus must be positive, got {self.omega_plus}")

    @property
    def omega_minus(self):
        return self.omega_plus / self.s


@dataclass(frozen=True)
class EigenRecord:
    n: int
    nu_plus: float
    nu_minus: float
    energy: float
    glued_hermite: bool


@dataclass(frozen=True)
class BracketLattice:
    """Sorted asymptote positions with their family tags.

    Tags are 'native' (poles of F at odd integers), 'composed' (poles of
    the rescaled branch at (4M+3)/(2s) - 1/2) or 'coincident' when the two
    families land within 1e-9 of each other.
    """

    poles: tuple
    tags: tuple
    window_max: float

    def intervals(self):
        """Open search intervals, starting with the ground one at -1/2."""
        out = []
        left = -0.5
        for p, tag in zip(self.poles, self.tags):
            out.append((left, p))
            left = p
        return out


def f_ratio(nu):
    """F(nu) = Gamma((1-nu)/2) / Gamma(-nu/2), zero at even non-negative nu."""
    nu = float(nu)
    half = (1.0 - nu) / 2.0
    if half <= 0.0 and half == round(half):
        raise PoleError(f"F has a pole at odd positive nu={nu}")
    return gamma(half) * recip_gamma(-nu / 2.0)


def nu_minus(config, nu_plus):
    """nu_- = s nu_+ + (s-1)/2."""
    return config.s * nu_plus + (config.s - 1.0) / 2.0


def energy(config, nu_plus):
    """E = omega_+ (nu_+ + 1/2) in units hbar = 1."""
    return config.omega_plus * (nu_plus + 0.5)


def eigen_residual(config, nu_plus):
    """Entire determinant of the x=0 matching system.

    Built solely from reciprocal gammas, so it is finite everywhere and
    vanishes exactly at eigenvalues, including the glued-Hermite cases
    where the pole-ratio form of the condition is 0/0.
    """
    nm = nu_minus(config, nu_plus)
    return (recip_gamma((1.0 - nm) / 2.0) * recip_gamma(-nu_plus / 2.0)
            + recip_gamma(-nm / 2.0) * recip_gamma((1.0 - nu_plus) / 2.0)
            / math.sqrt(config.s))


def build_brackets(config, window_max):
    """Merged pole lattice of both families in (-1/2, window_max]."""
    if window_max <= -0.5:
        raise DomainError("window_max must exceed -1/2")
    s = config.s
    native = []
    m = 0
    while 2 * m + 1 <= window_max:
        native.append(2.0 * m + 1.0)
        m += 1
    composed = []
    m = 0
    while True:
        p = (4.0 * m + 3.0) / (2.0 * s) - 0.5
        if p > window_max:
            break
        if p > -0.5:
            composed.append(p)
        m += 1
    merged = [(p, "native") for p in native] + [(p, "composed") for p in composed]
    merged.sort()
    poles, tags = [], []
    for p, tag in merged:
        if poles and abs(p - poles[-1]) <= _COINCIDENT_TOL:
            # native pole position is exact; keep it and drop the twin
            if tags[-1] == "composed" and tag == "native":
                poles[-1] = p
            tags[-1] = "coincident"
        else:
            poles.append(p)
            tags.append(tag)
    return BracketLattice(tuple(poles), tuple(tags), float(window_max))


def detect_glued_ratio(s, max_index=100, tol=1e-9):
    """Smallest (m, n) with s = (4m+3)/(4n+3), or None."""
    if s < 1.0:
        raise DomainError("s must be >= 1")
    for n in range(max_index + 1):
        m_real = (s * (4 * n + 3) - 3.0) / 4.0
        m = round(m_real)
        if 0 <= m <= max_index and abs(s - (4 * m + 3) / (4 * n + 3)) <= tol:
            return (m, n)
    return None


def _h(config, nu):
    return f_ratio(nu) + f_ratio(nu_minus(config, nu)) / math.sqrt(config.s)


def _bisect_bracket(config, a, b, max_iter=300):
    """Root of h in the open interval (a, b); h falls from +inf to -inf."""
    width = b - a
    fa = fb = None
    for frac in (1e-9, 1e-12, 1e-14):
        lo, hi = a + frac * width, b - frac * width
        fa, fb = _h(config, lo), _h(config, hi)
        if fa > 0.0 >= fb or fa >= 0.0 > fb:
            break
    else:
        raise ConvergenceError(
            f"could not establish a sign change in bracket ({a}, {b})")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi or hi - lo <= 5e-14 * max(1.0, abs(mid)):
            return mid
        fm = _h(config, mid)
        if fm > 0.0:
            lo = mid
        elif fm < 0.0:
            hi = mid
        else:
            return mid
    raise ConvergenceError(
        f"bisection did not converge in bracket ({a}, {b})")


def _near_integer(x, tol=_GLUE_TOL):
    return abs(x - round(x)) <= tol


def _glued(config, nu):
    """True if (nu_+, nu_-) are same-parity non-negative integers."""
    nm = nu_minus(config, nu)
    if not (_near_integer(nu) and _near_integer(nm)):
        return False
    i, j = round(nu), round(nm)
    return i >= 0 and j >= 0 and (i - j) % 2 == 0


def _make_record(config, n, nu):
    if _glued(config, nu):
        nu = float(round(nu))
        glued = True
    else:
        glued = False
    return EigenRecord(n=n, nu_plus=nu, nu_minus=nu_minus(config, nu),
                       energy=energy(config, nu), glued_hermite=glued)


def _residual_dip(config, pole):
    """Scale-free test that the determinant vanishes at a shared asymptote."""
    r0 = abs(eigen_residual(config, pole))
    ref = max(abs(eigen_residual(config, pole - 0.05)),
              abs(eigen_residual(config, pole + 0.05)), 1e-300)
    return r0 <= 1e-6 * ref


def solve_spectrum(config, count):
    """Lowest `count` eigenvalues nu_+ in increasing order."""
    if count < 1:
        raise DomainError("count must be >= 1")
    # pole density is (1 + s)/2 per unit nu; pad generously and grow
    window = -0.5 + 2.0 * (count + 2) / (1.0 + config.s) * 2.0 + 2.0
    for _ in range(12):
        lattice = build_brackets(config, window)
        roots = []
        for (a, b), tag in zip(lattice.intervals(),
                               list(lattice.tags)):
            roots.append(_bisect_bracket(config, a, b))
            if tag == "coincident" and _residual_dip(config, b):
                roots.append(b)
            if len(roots) >= count:
                break
        if len(roots) >= count:
            roots = sorted(roots)[:count]
            return [_make_record(config, n, nu) for n, nu in enumerate(roots)]
        window = -0.5 + (window + 0.5) * 2.0
    raise ConvergenceError(
        f"could not locate {count} eigenvalues for s={config.s}")
