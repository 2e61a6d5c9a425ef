"""Compact spherical phase space and its thermal image on the plane.

A sphere of radius R carries the uniform (area) measure, total area
h = 4πR².  Identifying normalized area with probability and mapping the
sphere onto the complex plane produces the Gibbs weight of a harmonic
oscillator; matching the total phase-space volume 2π/(βω) to h ties the
temperature scale to the area quantum through βω = 1/ħ, h = 2πħ.

Two maps are provided: ``thermal_map_paper`` (|z|² = (ln2/β)·3R²·
sin²(θ/2), kept verbatim for fidelity) and ``thermal_map_exact``
(|z|² = −ln(1−sin²(θ/2))/β), which pushes the uniform sphere measure
forward to the Gibbs radial law 1−e^{−βr²} exactly — polar-cap area
fraction and image-disk Gibbs mass agree identically.  The two maps
differ; both are exposed so the discrepancy is measurable rather than
hidden.

Blackbody spectral density and its two classical limits, mean-energy
checks, and the freezing of the temperature/radius scales as the area
quantum vanishes round out the module.  Orientation convention: arg z =
φ, chosen so the induced bracket on the image plane is {q, p} = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, stats

from .errors import NumericalGuardError

__all__ = [
    "SphereGeometry",
    "SpherePoint",
    "ThermalOscillator",
    "PlanckConstants",
    "Rectangle",
    "Disk",
    "stereographic",
    "thermal_map_paper",
    "thermal_map_exact",
    "cap_area_fraction",
    "uniform_sphere_samples",
    "pushforward_radii",
    "pushforward_ks_statistic",
    "gibbs_normalization_check",
    "mean_energy",
    "gibbs_median_radius",
    "region_probability",
    "planck_density",
    "limit_ratios",
    "classical_limit_table",
]


@dataclass(frozen=True)
class SphereGeometry:
    """Sphere of radius R; its surface area 4πR² is the phase-space volume."""

    radius: float

    def __post_init__(self):
        if not (self.radius > 0):
            raise ValueError(f"radius must be positive, got {self.radius}")

    @property
    def area(self) -> float:
        return 4.0 * math.pi * self.radius ** 2


@dataclass(frozen=True)
class SpherePoint:
    """Polar angle θ in [0, π] (0 at the projection pole), azimuth φ."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi):
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not (0.0 <= self.phi < 2.0 * math.pi):
            raise ValueError(f"phi must lie in [0, 2*pi), got {self.phi}")


@dataclass(frozen=True)
class ThermalOscillator:
    """Oscillator H = p²/2m + mω²q²/2 in a Gibbs state at inverse
    temperature β, with the scale ħ tied to it by βω = 1/ħ.

    ``hbar`` may be overridden to represent a deliberately inconsistent
    configuration; ``is_consistent`` reports whether βωħ = 1 holds.
    """

    beta: float
    omega: float = 1.0
    mass: float = 1.0
    hbar: float | None = None

    def __post_init__(self):
        if not (self.beta > 0 and self.omega > 0 and self.mass > 0):
            raise ValueError("beta, omega, mass must all be positive")
        if self.hbar is None:
            object.__setattr__(self, "hbar", 1.0 / (self.beta * self.omega))
        elif not (self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")

    @property
    def is_consistent(self) -> bool:
        return abs(self.beta * self.omega * self.hbar - 1.0) <= 1e-14

    @property
    def h(self) -> float:
        """Phase-space cell 2πħ."""
        return 2.0 * math.pi * self.hbar

    def energy(self, q, p):
        q = np.asarray(q, dtype=float)
        p = np.asarray(p, dtype=float)
        return p * p / (2.0 * self.mass) + 0.5 * self.mass * self.omega ** 2 * q * q


# ---------------------------------------------------------------------------
# Maps from the sphere to the plane
# ---------------------------------------------------------------------------

def stereographic(point: SpherePoint, radius: float = 1.0) -> complex:
    """Stereographic image Z with |Z| = 2R·cot(θ/2), arg Z = φ.

    The projection pole θ = 0 maps to infinity and raises ValueError.
    """
    if point.theta <= 0.0:
        raise ValueError("theta = 0 is the projection pole (image at infinity)")
    magnitude = 2.0 * radius / math.tan(point.theta / 2.0)
    return magnitude * complex(math.cos(point.phi), math.sin(point.phi))


def thermal_map_paper(point: SpherePoint, radius: float,
                      beta: float) -> complex:
    """|z|² = (ln2/β)·3R²·sin²(θ/2), arg z = φ — kept verbatim.

    This scaling does not push the uniform sphere measure exactly onto
    the Gibbs weight; see thermal_map_exact for the measure-preserving
    completion.
    """
    r2 = (math.log(2.0) / beta) * 3.0 * radius ** 2 * math.sin(point.theta / 2.0) ** 2
    return math.sqrt(r2) * complex(math.cos(point.phi), math.sin(point.phi))


def thermal_map_exact(point: SpherePoint, beta: float) -> complex:
    """|z|² = −ln(1 − sin²(θ/2))/β, arg z = φ.

    Exactly measure-preserving: the polar cap of area fraction
    sin²(θ/2) maps onto the disk of Gibbs mass 1−e^{−β|z|²}, and the two
    fractions agree identically.  The far pole θ = π is logarithmically
    singular and raises ValueError.
    """
    if point.theta >= math.pi:
        raise ValueError("theta = pi is the singular pole of the exact map")
    s2 = math.sin(point.theta / 2.0) ** 2
    r2 = -math.log1p(-s2) / beta
    return math.sqrt(r2) * complex(math.cos(point.phi), math.sin(point.phi))


def cap_area_fraction(theta: float) -> float:
    """Normalized area of the polar cap {θ' <= θ}: sin²(θ/2)."""
    return math.sin(theta / 2.0) ** 2


def uniform_sphere_samples(n: int, seed: int, radius: float = 1.0):
    """(θ, φ) samples uniform in area: cosθ uniform on [−1, 1]."""
    rng = np.random.default_rng(seed)
    cos_theta = rng.uniform(-1.0, 1.0, size=n)
    theta = np.arccos(cos_theta)
    phi = rng.uniform(0.0, 2.0 * math.pi, size=n)
    return theta, phi


def pushforward_radii(theta: np.ndarray, beta: float) -> np.ndarray:
    """|z| for uniform-sphere angles θ under the exact thermal map."""
    s2 = np.sin(theta / 2.0) ** 2
    if np.any(s2 >= 1.0):
        raise ValueError("theta = pi is the singular pole of the exact map")
    return np.sqrt(-np.log1p(-s2) / beta)


def pushforward_ks_statistic(beta: float, n: int, seed: int) -> float:
    """Kolmogorov–Smirnov distance between mapped uniform-sphere radii
    and the Gibbs radial law 1 − e^{−βr²}."""
    theta, _ = uniform_sphere_samples(n, seed)
    radii = pushforward_radii(theta, beta)
    result = stats.kstest(radii, lambda r: -np.expm1(-beta * r * r))
    return float(result.statistic)


# ---------------------------------------------------------------------------
# Gibbs-state checks on the plane
# ---------------------------------------------------------------------------

def gibbs_normalization_check(osc: ThermalOscillator,
                              quad_tol: float = 1e-10) -> float:
    """h^{−1} ∫∫ e^{−βH} dq dp, evaluated by Gaussian quadrature.

    The analytic value is 2π/(βω h), which equals 1 exactly when
    βω = 1/ħ; a configuration with an overridden ħ returns the off-1
    value so the inconsistency is visible.  Quadrature and analytic
    values must agree within 1e−8 or NumericalGuardError is raised.
    """
    analytic = 2.0 * math.pi / (osc.beta * osc.omega * osc.h)
    sigma_q = 1.0 / math.sqrt(osc.beta * osc.mass) / osc.omega
    sigma_p = math.sqrt(osc.mass / osc.beta)
    val, abserr = integrate.dblquad(
        lambda p, q: math.exp(-osc.beta * float(osc.energy(q, p))) / osc.h,
        -12.0 * sigma_q, 12.0 * sigma_q,
        lambda q: -12.0 * sigma_p, lambda q: 12.0 * sigma_p,
        epsabs=quad_tol, epsrel=quad_tol)
    if abs(val - analytic) > 1e-8:
        raise NumericalGuardError(
            f"quadrature normalization {val:.12g} differs from analytic "
            f"{analytic:.12g} by more than 1e-8")
    return val


def mean_energy(osc: ThermalOscillator, method: str = "analytic",
                n: int = 10000, seed: int = 0):
    """Mean Gibbs energy with its error bar, as a (value, stderr) pair.

    "analytic": 1/β exactly (equals ħω whenever βω = 1/ħ), stderr 0.
    "monte_carlo": n >= 1000 Gaussian phase-space samples; the estimate
    uses order-insensitive (sorted) summation so it is independent of
    any sample-stream split.
    """
    if method == "analytic":
        return 1.0 / osc.beta, 0.0
    if method != "monte_carlo":
        raise ValueError(f"unknown method {method!r}")
    if n < 1000:
        raise ValueError("monte_carlo needs n >= 1000")
    rng = np.random.default_rng(seed)
    q = rng.normal(0.0, 1.0 / (osc.omega * math.sqrt(osc.beta * osc.mass)),
                   size=n)
    p = rng.normal(0.0, math.sqrt(osc.mass / osc.beta), size=n)
    energies = np.sort(osc.energy(q, p))
    mean = float(math.fsum(energies) / n)
    var = float(math.fsum((energies - mean) ** 2) / (n - 1))
    return mean, math.sqrt(var / n)


@dataclass(frozen=True)
class Rectangle:
    """Axis-aligned region [qmin, qmax] × [pmin, pmax]; infinities allowed."""

    qmin: float
    qmax: float
    pmin: float
    pmax: float

    def __post_init__(self):
        if not (self.qmin <= self.qmax and self.pmin <= self.pmax):
            raise ValueError("rectangle bounds must be ordered")


@dataclass(frozen=True)
class Disk:
    """Disk of given radius centered at (q0, p0) in the phase plane."""

    radius: float
    q0: float = 0.0
    p0: float = 0.0

    def __post_init__(self):
        if not (self.radius > 0):
            raise ValueError(f"radius must be positive, got {self.radius}")


FULL_PLANE = Rectangle(-math.inf, math.inf, -math.inf, math.inf)


def gibbs_median_radius(osc: ThermalOscillator) -> float:
    """Radius of the centered disk holding half the Gibbs mass.

    Defined for isotropic oscillators (mω = 1, circular level sets),
    where the radial mass law is 1 − e^{−βr²/2}: r = sqrt(2 ln2 / β).
    """
    if abs(osc.mass * osc.omega - 1.0) > 1e-12:
        raise ValueError(
            "median disk radius requires an isotropic oscillator (m*omega=1)")
    return math.sqrt(2.0 * math.log(2.0) / osc.beta)


def region_probability(region, osc: ThermalOscillator,
                       quad_tol: float = 1e-10) -> float:
    """P(A) = ∫_A e^{−βH} dq dp / h for a Rectangle or Disk region.

    Adaptive quadrature with exact region boundaries; a reported
    quadrature error above 1e−7 raises NumericalGuardError.
    """
    def integrand(p, q):
        return math.exp(-osc.beta * float(osc.energy(q, p))) / osc.h

    if isinstance(region, Rectangle):
        val, abserr = integrate.dblquad(
            integrand, region.qmin, region.qmax,
            lambda q: region.pmin, lambda q: region.pmax,
            epsabs=quad_tol, epsrel=quad_tol)
    elif isinstance(region, Disk):
        r, q0, p0 = region.radius, region.q0, region.p0

        def p_lo(q):
            return p0 - math.sqrt(max(r * r - (q - q0) ** 2, 0.0))

        def p_hi(q):
            return p0 + math.sqrt(max(r * r - (q - q0) ** 2, 0.0))

        val, abserr = integrate.dblquad(integrand, q0 - r, q0 + r,
                                        p_lo, p_hi,
                                        epsabs=quad_tol, epsrel=quad_tol)
    else:
        raise ValueError(f"unsupported region type {type(region).__name__}")
    if abserr > 1e-7:
        raise NumericalGuardError(
            f"region quadrature error estimate {abserr:.3e} above 1e-7")
    return val


# ---------------------------------------------------------------------------
# Blackbody spectrum and classical limits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanckConstants:
    """Caller-supplied constants; natural units by default."""

    h: float = 1.0
    c: float = 1.0
    k: float = 1.0


def planck_density(nu: float, temperature: float,
                   constants: PlanckConstants = PlanckConstants()) -> float:
    """Spectral energy density u(ν, T) = (8πhν³/c³) / (e^{hν/kT} − 1)."""
    if not (nu > 0 and temperature > 0):
        raise ValueError("nu and temperature must be positive")
    x = constants.h * nu / (constants.k * temperature)
    prefactor = 8.0 * math.pi * constants.h * nu ** 3 / constants.c ** 3
    return prefactor / math.expm1(x)


def limit_ratios(nu: float, temperature: float,
                 constants: PlanckConstants = PlanckConstants()):
    """(u/Wien, u/Rayleigh–Jeans) at x = hν/kT.

    u/Wien = 1/(1 − e^{−x}) → 1 as x → ∞;
    u/RJ = x/(e^x − 1) → 1 as x → 0.
    """
    if not (nu > 0 and temperature > 0):
        raise ValueError("nu and temperature must be positive")
    x = constants.h * nu / (constants.k * temperature)
    return 1.0 / (-math.expm1(-x)), x / math.expm1(x)


def classical_limit_table(hbar_values, omega: float):
    """Rows (ħ, T, R): T = ħω (k_B = 1) and R = sqrt(h/4π) = sqrt(ħ/2).

    Both scales vanish with the area quantum — the freezing regime.
    """
    if not (omega > 0):
        raise ValueError("omega must be positive")
    rows = []
    for hbar in hbar_values:
        if hbar < 0:
            raise ValueError(f"hbar must be nonnegative, got {hbar}")
        rows.append((float(hbar), float(hbar) * omega,
                     math.sqrt(float(hbar) / 2.0)))
    return rows
