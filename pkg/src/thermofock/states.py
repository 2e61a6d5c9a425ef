"""Uncertainty widths, circle eigenstates, and multi-particle field states.

Fourier analysis fixes the root-mean-square width product of any
normalized packet at Δx·Δk ≥ ½, saturated by Gaussians and equal to
n + ½ for the n-th Hermite function.  On the circle the momentum
eigenstates e^{imφ} have uniform modulus, so Δp_φ = 0 while the angle
is spread over the full support 2π (RMS value 2π/sqrt(12)).

On a finite mode set, creating one quantum with a split profile
f = f1 + f2 of disjoint supports yields an exact one-quantum
eigenstate of the total number operator — a single particle whose
excitation density |f1|² + |f2|² lives in two separated regions —
while creating two quanta with the same profiles doubles the number
eigenvalue and is orthogonal to the split one-quantum state.

For two fermions in an antisymmetrized spatial wave function with
disjoint orbitals, the single-position marginal is
½(|f1(x)|² + |f2(x)|²): the orbital that vanishes in a region still
claims half the probability mass elsewhere, so the mass found in the
first orbital's home region is exactly ½.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charfn import DensityGrid, GridWaveFunction
from .chain import MultiModeFockVector, mm_raised
from .errors import NumericalGuardError

__all__ = [
    "ModeProfile",
    "CircleUncertainty",
    "rms_widths",
    "circle_uncertainty",
    "exotic_state",
    "two_particle_state",
    "number_expectation",
    "number_variance",
    "occupation_density",
    "singlet_marginal",
]

_SUPPORT_TOL = 1e-14


@dataclass(frozen=True)
class ModeProfile:
    """Complex coefficients over a finite mode/site set, with a declared
    support.  Mass outside the declared support must be below 1e-14 of
    the total, keeping disjointness decidable."""

    values: np.ndarray
    support: frozenset

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        object.__setattr__(self, "values", values)
        support = frozenset(int(j) for j in self.support)
        object.__setattr__(self, "support", support)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("profile values must form a nonempty 1-d array")
        if any(j < 0 or j >= values.size for j in support):
            raise ValueError("support indices outside the mode range")
        total = float(np.sum(np.abs(values) ** 2))
        if total == 0.0:
            raise ValueError("profile must be nonzero")
        outside = total - sum(abs(values[j]) ** 2 for j in support)
        if outside > _SUPPORT_TOL * total:
            raise ValueError(
                f"mass {outside:.3e} lies outside the declared support")

    @classmethod
    def from_values(cls, values) -> "ModeProfile":
        values = np.asarray(values, dtype=complex)
        return cls(values, frozenset(np.nonzero(np.abs(values) > 0)[0]))

    @property
    def n_modes(self) -> int:
        return self.values.size

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2))

    def overlaps(self, other: "ModeProfile") -> bool:
        """True iff the declared supports intersect."""
        return bool(self.support & other.support)


def _check_disjoint_profiles(f1: ModeProfile, f2: ModeProfile) -> int:
    if f1.n_modes != f2.n_modes:
        raise ValueError("profiles live on different mode sets")
    if f1.overlaps(f2):
        raise ValueError(
            f"supports intersect at modes {sorted(f1.support & f2.support)}")
    return f1.n_modes


# ---------------------------------------------------------------------------
# Width products
# ---------------------------------------------------------------------------

def _moments(weights: np.ndarray, grid: np.ndarray, step: float):
    mass = float(np.sum(weights) * step)
    mean = float(np.sum(grid * weights) * step / mass)
    var = float(np.sum((grid - mean) ** 2 * weights) * step / mass)
    return mass, mean, var


def rms_widths(psi: GridWaveFunction, tail_tol: float = 1e-8):
    """Root-mean-square widths (Δx, Δk) of a normalized packet.

    Position moments come straight from |ψ|²; wavenumber moments from
    the squared modulus of the discrete Fourier transform (continuum
    normalization).  Mass in the outer 2% of either grid above
    ``tail_tol`` trips the guard — the moments would then be
    grid-artifact dominated.  The product obeys Δx·Δk ≥ ½ − 1e−9.
    """
    if not psi.is_normalized:
        raise ValueError("packet must be normalized")
    n = psi.n
    edge = max(2, n // 50)

    weights_x = np.abs(psi.values) ** 2
    tail_x = float((np.sum(weights_x[:edge]) + np.sum(weights_x[-edge:]))
                   * psi.dx)
    if tail_x > tail_tol:
        raise NumericalGuardError(
            f"position tail mass {tail_x:.3e} exceeds {tail_tol:.1e}; "
            "enlarge the grid span")

    spectrum = np.fft.fftshift(np.fft.fft(psi.values)) * psi.dx / math.sqrt(
        2.0 * math.pi)
    k = np.fft.fftshift(2.0 * math.pi * np.fft.fftfreq(n, d=psi.dx))
    dk = k[1] - k[0]
    weights_k = np.abs(spectrum) ** 2
    tail_k = float((np.sum(weights_k[:edge]) + np.sum(weights_k[-edge:])) * dk)
    if tail_k > tail_tol:
        raise NumericalGuardError(
            f"spectral tail mass {tail_k:.3e} exceeds {tail_tol:.1e}; "
            "refine the grid spacing")

    _, _, var_x = _moments(weights_x, psi.x, psi.dx)
    _, _, var_k = _moments(weights_k, k, dk)
    width_x = math.sqrt(var_x)
    width_k = math.sqrt(var_k)
    if width_x * width_k < 0.5 - 1e-9:
        raise NumericalGuardError(
            f"width product {width_x * width_k:.12f} fell below the "
            "lower bound 1/2; the grid under-resolves the packet")
    return width_x, width_k


@dataclass(frozen=True)
class CircleUncertainty:
    """Width data of a circle momentum eigenstate: the momentum width,
    the RMS angle deviation of the uniform density, and the full
    support width of the angle."""

    delta_p: float
    delta_phi_rms: float
    delta_phi_support: float


def circle_uncertainty(momentum_index: int) -> CircleUncertainty:
    """Widths for e^{imφ}/sqrt(2π) on the circle.

    The modulus is uniform regardless of m: the momentum is sharp
    (Δp_φ = 0) while the angle fills its entire range, with support
    width 2π and RMS deviation 2π/sqrt(12).  Both angle measures are
    reported; they answer different questions about "Δφ".
    """
    if momentum_index != int(momentum_index):
        raise ValueError("momentum index must be an integer")
    return CircleUncertainty(
        delta_p=0.0,
        delta_phi_rms=2.0 * math.pi / math.sqrt(12.0),
        delta_phi_support=2.0 * math.pi,
    )


# ---------------------------------------------------------------------------
# One- and two-quantum states over a mode set
# ---------------------------------------------------------------------------

def _create_particle(phi: MultiModeFockVector,
                     profile: ModeProfile) -> MultiModeFockVector:
    """Apply Σ_j f_j â_j⁺ (support sites only) to a multimode vector."""
    result = None
    for j in sorted(profile.support):
        term = mm_raised(phi, j).scaled(profile.values[j])
        result = term if result is None else result.add_scaled(term)
    if result is None:
        raise ValueError("profile has empty support")
    return result


def exotic_state(f1: ModeProfile, f2: ModeProfile) -> MultiModeFockVector:
    """One quantum created with the split profile f1 + f2 (disjoint
    supports): Σ_j (f1 + f2)_j â_j⁺ |0⟩ at unit ladder scale.

    An exact eigenstate of the total number operator with eigenvalue 1
    whose excitation density is |f1|² + |f2|² — one particle living in
    two separated regions.  Norm² = ‖f1‖² + ‖f2‖².
    """
    n_modes = _check_disjoint_profiles(f1, f2)
    vacuum = MultiModeFockVector.vacuum(n_modes, cutoff=2, hbar=1.0)
    return _create_particle(vacuum, f1).add_scaled(
        _create_particle(vacuum, f2))


def two_particle_state(f1: ModeProfile, f2: ModeProfile) -> MultiModeFockVector:
    """Two quanta, one per profile: A⁺(f1) A⁺(f2) |0⟩ at unit ladder
    scale.  Number eigenvalue 2, excited in the same regions as the
    split one-quantum state yet orthogonal to it; for disjoint supports
    the norm is ‖f1‖·‖f2‖."""
    n_modes = _check_disjoint_profiles(f1, f2)
    vacuum = MultiModeFockVector.vacuum(n_modes, cutoff=2, hbar=1.0)
    return _create_particle(_create_particle(vacuum, f2), f1)


def number_expectation(phi: MultiModeFockVector) -> float:
    """⟨N̂⟩ = Σ_occ |c|² (Σ_k n_k) / ‖Φ‖²."""
    norm2 = phi.norm_squared()
    if norm2 == 0.0:
        raise ValueError("zero vector has no number expectation")
    return sum(abs(c) ** 2 * sum(occ) for occ, c in phi.coeffs.items()) / norm2


def number_variance(phi: MultiModeFockVector) -> float:
    """Var(N̂) = ⟨N̂²⟩ − ⟨N̂⟩² over the occupation distribution."""
    norm2 = phi.norm_squared()
    if norm2 == 0.0:
        raise ValueError("zero vector has no number variance")
    mean = sum(abs(c) ** 2 * sum(occ) for occ, c in phi.coeffs.items()) / norm2
    second = sum(abs(c) ** 2 * sum(occ) ** 2
                 for occ, c in phi.coeffs.items()) / norm2
    return second - mean ** 2


def occupation_density(phi: MultiModeFockVector) -> np.ndarray:
    """Per-mode occupation expectations ⟨n̂_j⟩ (unnormalized vector OK)."""
    norm2 = phi.norm_squared()
    if norm2 == 0.0:
        raise ValueError("zero vector has no occupation density")
    density = np.zeros(phi.modes)
    for occ, c in phi.coeffs.items():
        density += (abs(c) ** 2 / norm2) * np.asarray(occ, dtype=float)
    return density


# ---------------------------------------------------------------------------
# Antisymmetrized two-electron marginal
# ---------------------------------------------------------------------------

def _grid_support_overlap(f1: GridWaveFunction, f2: GridWaveFunction) -> float:
    w1 = np.abs(f1.values) ** 2
    w2 = np.abs(f2.values) ** 2
    return float(np.sum(w1[w2 > 0]) * f1.dx + np.sum(w2[w1 > 0]) * f1.dx)


def singlet_marginal(f1: GridWaveFunction, f2: GridWaveFunction,
                     region: tuple[float, float] | None = None):
    """Single-position marginal of the antisymmetrized two-orbital state.

    Ψ(x1, x2) = [f1(x1) f2(x2) − f2(x1) f1(x2)] / sqrt(2) is integrated
    over x2 by quadrature on the full 2-D grid.  For normalized
    orbitals with disjoint supports the marginal is
    ½(|f1(x1)|² + |f2(x1)|²), and the mass inside any region containing
    one orbital's support — and none of the other's — is exactly ½.

    Returns (marginal DensityGrid, mass in ``region``); ``region`` is an
    (xmin, xmax) interval, defaulting to the full grid line.
    """
    if (f1.n != f2.n or f1.x0 != f2.x0 or f1.dx != f2.dx):
        raise ValueError("orbitals must share one grid")
    if not (f1.is_normalized and f2.is_normalized):
        raise ValueError("orbitals must be normalized")
    overlap = _grid_support_overlap(f1, f2)
    if overlap > _SUPPORT_TOL:
        raise ValueError(
            f"orbital supports overlap with mass {overlap:.3e}")

    a1, a2 = f1.values, f2.values
    # |Ψ(x1, x2)|² on the grid, x1 along axis 0.
    psi_sq = 0.5 * np.abs(np.outer(a1, a2) - np.outer(a2, a1)) ** 2
    marginal = np.trapezoid(psi_sq, dx=f1.dx, axis=1)
    density = DensityGrid(f1.x0, f1.dx, marginal)

    if region is None:
        mass = density.total_mass()
    else:
        lo, hi = region
        if not (hi > lo):
            raise ValueError("region must satisfy xmax > xmin")
        masked = np.where((density.x >= lo) & (density.x <= hi), marginal, 0.0)
        mass = float(np.trapezoid(masked, dx=f1.dx))
    return density, mass
