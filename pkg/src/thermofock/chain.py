"""Periodic chain of coupled oscillators as a one-dimensional lattice field.

The chain of N sites with spacing a, mass m and coupling γ carries the
Hamiltonian

    H = Σ_n [ p_n²/2 + m² q_n²/2 + (γ/a²)(q_{n+1} − q_n)²/2 ],

periodic indexing.  Its normal modes live on the discrete Brillouin
grid k_j ∈ (−π/a, π/a] with dispersion ω_k² = m² + 4(γ/a²) sin²(k a/2);
the orthonormal plane-wave transform diagonalizes H into
Σ_k (|p(k)|² + ω_k² |u(k)|²)/2.  Complex normal amplitudes a(k) make
the mode energies ω_k |a(k)|², and the non-canonical rescaling
a_k = sqrt(λ_k) a(k) with λ_k = ω_k/ω̄, ω̄ = sqrt(m² + γ/a²), turns the
total into ω̄ Σ_k |a_k|².

Dynamics integrate with a symplectic leapfrog step; thermal states are
sampled exactly in normal coordinates.  A sparse multimode occupation
algebra provides the quantum counterpart with per-mode ladder
commutator ħ δ_kk' (the discrete stand-in for a continuum δ(k−k')) and
the mode-sum Hamiltonian with eigenvalues Σ_k ω_k ħ (n_k + ½).

With the effective spring fixed at γ/a² = 1/a², the dispersion
converges to sqrt(m² + k²) at second order in a (the relativistic
scalar-field limit); in the heavy-mass regime the stripped positive-
frequency evolution approaches the free-particle phase e^{−ik²t/2m}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .charfn import GridWaveFunction
from .errors import NumericalGuardError

__all__ = [
    "ChainSpec",
    "ChainState",
    "ModeData",
    "Trajectory",
    "MultiModeFockVector",
    "hamiltonian",
    "total_energies",
    "normal_modes",
    "mode_transform",
    "inverse_transform",
    "mode_energies",
    "rescaled_modes",
    "evolve",
    "gibbs_sample",
    "fock_inner",
    "mm_raised",
    "mm_lowered",
    "hamiltonian_operator_apply",
    "continuum_limit_error",
    "nonrelativistic_overlap",
    "standard_packet",
]


@dataclass(frozen=True)
class ChainSpec:
    """Periodic chain: N sites, spacing a, mass m >= 0, coupling γ > 0."""

    n_sites: int
    spacing: float = 1.0
    mass: float = 1.0
    gamma: float = 1.0

    def __post_init__(self):
        if self.n_sites < 2:
            raise ValueError("need at least 2 sites")
        if not (self.spacing > 0):
            raise ValueError(f"spacing must be positive, got {self.spacing}")
        if self.mass < 0:
            raise ValueError(f"mass must be nonnegative, got {self.mass}")
        if not (self.gamma > 0):
            raise ValueError(f"gamma must be positive, got {self.gamma}")

    @property
    def brillouin(self) -> float:
        """Half-width Δ = π/a of the Brillouin zone."""
        return math.pi / self.spacing

    @property
    def spring(self) -> float:
        """Effective spring constant γ/a² multiplying (q_{n+1}−q_n)²/2."""
        return self.gamma / self.spacing ** 2

    @property
    def omega_ref(self) -> float:
        """Reference frequency ω̄ = sqrt(m² + γ/a²) for mode rescaling."""
        return math.sqrt(self.mass ** 2 + self.spring)

    def dispersion(self, k) -> np.ndarray:
        """ω_k = sqrt(m² + 4(γ/a²) sin²(k a / 2))."""
        k = np.asarray(k, dtype=float)
        return np.sqrt(self.mass ** 2
                       + 4.0 * self.spring * np.sin(0.5 * k * self.spacing) ** 2)

    def k_grid(self) -> np.ndarray:
        """Discrete Brillouin wavenumbers in FFT order."""
        return 2.0 * math.pi * np.fft.fftfreq(self.n_sites, d=self.spacing)

    def coupling_matrix(self) -> np.ndarray:
        """Dense quadratic-form matrix M with V(q) = q·M·q/2."""
        n = self.n_sites
        mat = np.zeros((n, n))
        idx = np.arange(n)
        mat[idx, idx] = self.mass ** 2 + 2.0 * self.spring
        mat[idx, (idx + 1) % n] -= self.spring
        mat[idx, (idx - 1) % n] -= self.spring
        return mat


@dataclass(frozen=True)
class ChainState:
    """Phase-space configuration (q_n, p_n) of the chain."""

    q: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.q, dtype=float)
        p = np.asarray(self.p, dtype=float)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)
        if q.shape != p.shape or q.ndim != 1:
            raise ValueError("q and p must be 1-d arrays of equal length")

    @classmethod
    def zero(cls, n: int) -> "ChainState":
        return cls(np.zeros(n), np.zeros(n))


@dataclass(frozen=True)
class ModeData:
    """Normal-mode content of a chain state on the discrete k grid.

    ``u`` and ``p`` are the complex normal coordinates; ``a`` the
    complex amplitudes; ``a_rescaled`` and ``lam`` filled in by
    :func:`rescaled_modes`.  Frequency entries satisfy the dispersion
    law of the generating ChainSpec.
    """

    k: np.ndarray
    omega: np.ndarray
    u: np.ndarray | None = None
    p: np.ndarray | None = None
    a: np.ndarray | None = None
    a_rescaled: np.ndarray | None = None
    lam: np.ndarray | None = None


def hamiltonian(state: ChainState, spec: ChainSpec) -> float:
    """H = Σ_n [p² + m² q² + (γ/a²)(q_{n+1} − q_n)²] / 2, periodic."""
    q, p = state.q, state.p
    if q.size != spec.n_sites:
        raise ValueError("state length does not match the chain")
    dq = np.roll(q, -1) - q
    return float(0.5 * (np.sum(p * p) + spec.mass ** 2 * np.sum(q * q)
                        + spec.spring * np.sum(dq * dq)))


def total_energies(q: np.ndarray, p: np.ndarray, spec: ChainSpec) -> np.ndarray:
    """Row-wise H for sample batches q, p of shape (n_samples, N)."""
    dq = np.roll(q, -1, axis=-1) - q
    return 0.5 * (np.sum(p * p, axis=-1) + spec.mass ** 2 * np.sum(q * q, axis=-1)
                  + spec.spring * np.sum(dq * dq, axis=-1))


def normal_modes(spec: ChainSpec) -> ModeData:
    """Mode grid and dispersion frequencies (no state content)."""
    k = spec.k_grid()
    return ModeData(k=k, omega=spec.dispersion(k))


def mode_transform(state: ChainState, spec: ChainSpec) -> ModeData:
    """Orthonormal discrete plane-wave analysis of a chain state.

    u(k_j) = N^{-1/2} Σ_n q_n e^{−i k_j a n} (same for p); the basis
    functions φ_n(k) = e^{i k a n}/sqrt(N) satisfy
    Σ_k φ_n(k) conj(φ_{n'}(k)) = δ_{nn'}.
    """
    if state.q.size != spec.n_sites:
        raise ValueError("state length does not match the chain")
    root_n = math.sqrt(spec.n_sites)
    k = spec.k_grid()
    return ModeData(k=k, omega=spec.dispersion(k),
                    u=np.fft.fft(state.q) / root_n,
                    p=np.fft.fft(state.p) / root_n)


def inverse_transform(modes: ModeData, spec: ChainSpec) -> ChainState:
    """Reconstruct (q, p) from normal coordinates; imaginary residue of
    the reconstructed real fields must be at roundoff level."""
    if modes.u is None or modes.p is None:
        raise ValueError("mode data carries no state content")
    root_n = math.sqrt(spec.n_sites)
    q = np.fft.ifft(modes.u) * root_n
    p = np.fft.ifft(modes.p) * root_n
    resid = max(float(np.max(np.abs(q.imag), initial=0.0)),
                float(np.max(np.abs(p.imag), initial=0.0)))
    scale = max(1.0, float(np.max(np.abs(q.real), initial=0.0)),
                float(np.max(np.abs(p.real), initial=0.0)))
    if resid > 1e-10 * scale:
        raise ValueError("mode data does not describe a real configuration")
    return ChainState(q.real, p.real)


def mode_energies(modes: ModeData) -> np.ndarray:
    """E_k = (|p(k)|² + ω_k² |u(k)|²)/2 per mode; sums to H."""
    if modes.u is None or modes.p is None:
        raise ValueError("mode data carries no state content")
    return 0.5 * (np.abs(modes.p) ** 2 + modes.omega ** 2 * np.abs(modes.u) ** 2)


def _amplitudes(modes: ModeData) -> np.ndarray:
    """a(k) = sqrt(ω_k/2) conj(u(k)) + i conj(p(k))/sqrt(2 ω_k).

    The inverse of the substitution u(k) = (a*(k) + a(−k))/sqrt(2ω_k),
    p(k) = i (a*(k) − a(−k)) sqrt(ω_k/2) for real chain fields; the
    mode energies become ω_k |a(k)|².
    """
    if modes.u is None or modes.p is None:
        raise ValueError("mode data carries no state content")
    zero = modes.omega <= 0.0
    if np.any(zero):
        bad = np.nonzero(zero)[0][0]
        raise NumericalGuardError(
            f"mode k={modes.k[bad]:.6g} has zero frequency; amplitudes "
            "are undefined for the massless zero mode")
    return (np.sqrt(modes.omega / 2.0) * np.conj(modes.u)
            + 1j * np.conj(modes.p) / np.sqrt(2.0 * modes.omega))


def rescaled_modes(modes: ModeData, spec: ChainSpec) -> ModeData:
    """Fill in amplitudes a(k), ratios λ_k = ω_k/ω̄ and the rescaled
    amplitudes a_k = sqrt(λ_k) a(k), for which
    H = ω̄ Σ_k conj(a_k) a_k."""
    a = _amplitudes(modes)
    lam = modes.omega / spec.omega_ref
    return replace(modes, a=a, a_rescaled=np.sqrt(lam) * a, lam=lam)


# ---------------------------------------------------------------------------
# Dynamics and thermal sampling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Trajectory:
    """Leapfrog trajectory: times and stacked (q, p) rows."""

    times: np.ndarray
    q: np.ndarray
    p: np.ndarray

    def energies(self, spec: ChainSpec) -> np.ndarray:
        return total_energies(self.q, self.p, spec)


def _force(q: np.ndarray, spec: ChainSpec) -> np.ndarray:
    lap = np.roll(q, -1) - 2.0 * q + np.roll(q, 1)
    return -spec.mass ** 2 * q + spec.spring * lap


def evolve(state: ChainState, spec: ChainSpec, dt: float | None = None,
           steps: int = 1000) -> Trajectory:
    """Integrate the chain with the symplectic leapfrog map.

    Default step dt = 0.1/ω_max; steps above the stability bound
    2/ω_max are rejected.  Kick–drift–kick form, exactly time
    reversible, bounded energy oscillation with no secular drift.
    """
    omega_max = float(np.max(spec.dispersion(spec.k_grid())))
    if dt is None:
        dt = 0.1 / omega_max
    if not (0.0 < dt < 2.0 / omega_max):
        raise ValueError(
            f"dt={dt} outside the stability interval (0, {2.0 / omega_max:.6g})")
    q = state.q.copy()
    p = state.p.copy()
    qs = np.empty((steps + 1, q.size))
    ps = np.empty((steps + 1, q.size))
    qs[0], ps[0] = q, p
    for i in range(1, steps + 1):
        p = p + 0.5 * dt * _force(q, spec)
        q = q + dt * p
        p = p + 0.5 * dt * _force(q, spec)
        qs[i], ps[i] = q, p
    return Trajectory(dt * np.arange(steps + 1), qs, ps)


def gibbs_sample(spec: ChainSpec, beta: float, n: int, seed: int):
    """Exact thermal sampling: independent Gaussians per normal mode.

    Returns (q, p) arrays of shape (n, N).  The position covariance is
    (β M)^{-1} for the coupling matrix M (sampled in its eigenbasis),
    momenta are i.i.d. N(0, 1/β); each mode energy averages 1/β.
    A zero-frequency mode (m = 0 with the uniform mode) is rejected.
    """
    if not (beta > 0):
        raise ValueError(f"beta must be positive, got {beta}")
    evals, evecs = np.linalg.eigh(spec.coupling_matrix())
    if np.any(evals <= 1e-12 * np.max(evals)):
        raise NumericalGuardError(
            "zero-frequency mode: the massless uniform mode has no "
            "normalizable thermal distribution")
    rng = np.random.default_rng(seed)
    xi = rng.standard_normal((n, spec.n_sites))
    q = (evecs / np.sqrt(beta * evals)) @ xi.T
    p = rng.standard_normal((n, spec.n_sites)) / math.sqrt(beta)
    return q.T.copy(), p


# ---------------------------------------------------------------------------
# Multimode occupation algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiModeFockVector:
    """Sparse vector over occupation tuples (n_1..n_M), orthonormal basis.

    ``cutoff`` bounds each n_k; ``total_cutoff`` (optional) bounds
    Σ n_k.  Ladder factors carry the scale: sqrt((n_k+1) ħ) up,
    sqrt(n_k ħ) down.
    """

    modes: int
    cutoff: int
    coeffs: dict
    hbar: float = 1.0
    total_cutoff: int | None = None

    def __post_init__(self):
        if self.modes < 1 or self.cutoff < 0:
            raise ValueError("need modes >= 1 and cutoff >= 0")
        if not (self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        clean = {}
        for occ, c in self.coeffs.items():
            occ = tuple(int(v) for v in occ)
            if len(occ) != self.modes or any(v < 0 for v in occ):
                raise ValueError(f"bad occupation tuple {occ}")
            if any(v > self.cutoff for v in occ):
                raise ValueError(f"occupation {occ} exceeds cutoff {self.cutoff}")
            if self.total_cutoff is not None and sum(occ) > self.total_cutoff:
                raise ValueError(
                    f"occupation {occ} exceeds total cutoff {self.total_cutoff}")
            c = complex(c)
            if c != 0:
                clean[occ] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def vacuum(cls, modes: int, cutoff: int, hbar: float = 1.0,
               total_cutoff: int | None = None) -> "MultiModeFockVector":
        return cls(modes, cutoff, {(0,) * modes: 1.0}, hbar, total_cutoff)

    def norm_squared(self) -> float:
        return float(sum(abs(c) ** 2 for c in self.coeffs.values()))

    def _same_structure(self, other: "MultiModeFockVector") -> bool:
        return (self.modes == other.modes
                and abs(self.hbar - other.hbar) <= 1e-15 * max(self.hbar,
                                                               other.hbar))

    def add_scaled(self, other: "MultiModeFockVector",
                   factor: complex = 1.0) -> "MultiModeFockVector":
        if not self._same_structure(other):
            raise ValueError("mode structure / scale mismatch")
        out = dict(self.coeffs)
        for occ, c in other.coeffs.items():
            out[occ] = out.get(occ, 0j) + factor * c
        cutoff = max(self.cutoff, other.cutoff)
        return MultiModeFockVector(self.modes, cutoff, out, self.hbar,
                                   self.total_cutoff)

    def scaled(self, factor: complex) -> "MultiModeFockVector":
        return MultiModeFockVector(
            self.modes, self.cutoff,
            {occ: factor * c for occ, c in self.coeffs.items()},
            self.hbar, self.total_cutoff)


def fock_inner(phi1: MultiModeFockVector,
               phi2: MultiModeFockVector) -> complex:
    """(Φ1, Φ2) = Σ over occupation tuples of c1 conj(c2).

    The factorized Gaussian measure makes the occupation basis
    orthonormal, so the inner product is the coefficient pairing.
    """
    if not phi1._same_structure(phi2):
        raise ValueError("mode structure / scale mismatch")
    small, large = phi1.coeffs, phi2.coeffs
    if len(large) < len(small):
        return complex(np.conj(fock_inner(phi2, phi1)))
    return complex(sum(c * np.conj(large[occ])
                       for occ, c in small.items() if occ in large))


def mm_raised(phi: MultiModeFockVector, mode: int,
              grow: bool = False) -> MultiModeFockVector:
    """Apply the raising operator of one mode: sqrt((n_k+1) ħ) factors."""
    if not (0 <= mode < phi.modes):
        raise ValueError(f"mode {mode} outside 0..{phi.modes - 1}")
    out = {}
    cutoff = phi.cutoff
    for occ, c in phi.coeffs.items():
        n = occ[mode]
        if n + 1 > phi.cutoff or (phi.total_cutoff is not None
                                  and sum(occ) + 1 > phi.total_cutoff):
            if not grow:
                raise ValueError(
                    f"raising mode {mode} overflows the truncation at {occ}; "
                    "pass grow=True to extend it")
            cutoff = max(cutoff, n + 1)
        new = occ[:mode] + (n + 1,) + occ[mode + 1:]
        out[new] = out.get(new, 0j) + math.sqrt((n + 1) * phi.hbar) * c
    total = phi.total_cutoff
    if grow and total is not None:
        total += 1
    return MultiModeFockVector(phi.modes, cutoff, out, phi.hbar, total)


def mm_lowered(phi: MultiModeFockVector, mode: int) -> MultiModeFockVector:
    """Apply the lowering operator of one mode: sqrt(n_k ħ) factors."""
    if not (0 <= mode < phi.modes):
        raise ValueError(f"mode {mode} outside 0..{phi.modes - 1}")
    out = {}
    for occ, c in phi.coeffs.items():
        n = occ[mode]
        if n == 0:
            continue
        new = occ[:mode] + (n - 1,) + occ[mode + 1:]
        out[new] = out.get(new, 0j) + math.sqrt(n * phi.hbar) * c
    return MultiModeFockVector(phi.modes, phi.cutoff, out, phi.hbar,
                               phi.total_cutoff)


def hamiltonian_operator_apply(phi: MultiModeFockVector,
                               spec: ChainSpec) -> MultiModeFockVector:
    """Apply H = Σ_k (ω_k/2)(â_k⁺ â_k + â_k â_k⁺) through the ladders.

    Occupation states are eigenvectors with eigenvalue
    Σ_k ω_k ħ (n_k + ½); applying â â⁺ needs one slot of headroom, so a
    state touching the truncation edge raises.
    """
    if phi.modes != spec.n_sites:
        raise ValueError("mode count does not match the chain")
    omegas = spec.dispersion(spec.k_grid())
    result = None
    for mode, omega_k in enumerate(omegas):
        up_down = mm_raised(mm_lowered(phi, mode), mode)
        down_up = mm_lowered(mm_raised(phi, mode), mode)
        term = up_down.add_scaled(down_up).scaled(0.5 * omega_k)
        result = term if result is None else result.add_scaled(term)
    return result


# ---------------------------------------------------------------------------
# Continuum and nonrelativistic limits
# ---------------------------------------------------------------------------

def continuum_limit_error(m: float, k_window: float, a_list,
                          n_k: int = 257):
    """Max dispersion error vs sqrt(m² + k²) over |k| <= k_window.

    The effective spring is fixed at 1/a² (the continuum scaling), so
    ω_chain(k) = sqrt(m² + (4/a²) sin²(k a/2)).  Returns a list of
    (a, max_error) pairs; the error decreases at second order in a.
    The window must sit inside the Brillouin zone of every a.
    """
    if not (k_window > 0):
        raise ValueError("k_window must be positive")
    results = []
    k = np.linspace(-k_window, k_window, n_k)
    target = np.sqrt(m ** 2 + k ** 2)
    for a in a_list:
        if k_window >= math.pi / a:
            raise ValueError(
                f"window {k_window} exceeds the Brillouin zone pi/a = "
                f"{math.pi / a:.6g} at a={a}")
        chain_omega = np.sqrt(m ** 2 + (4.0 / a ** 2)
                              * np.sin(0.5 * k * a) ** 2)
        results.append((float(a), float(np.max(np.abs(chain_omega - target)))))
    return results


def standard_packet(n: int = 2048, span: float = 40.0) -> GridWaveFunction:
    """Normalized unit-width Gaussian packet centered at the origin."""
    dx = span / n
    x0 = -span / 2.0
    x = x0 + dx * np.arange(n)
    return GridWaveFunction(x0, dx, np.pi ** -0.25
                            * np.exp(-0.5 * x * x)).normalized()


def nonrelativistic_overlap(packet: GridWaveFunction, m: float, t: float,
                            check_momentum: bool = True) -> float:
    """|overlap| between stripped relativistic and free-particle evolution.

    The packet's spectral weights evolve under the positive-frequency
    dispersion e^{−i sqrt(m²+k²) t}; after removing the rest phase
    e^{−imt} the result is compared with e^{−i k² t/2m}.  Returns the
    modulus of the normalized overlap.

    With ``check_momentum`` the spectral mass above |k| = m/10 must be
    below 1e-3, else NumericalGuardError reports the tail mass (the
    heavy-mass regime is where the two evolutions agree).
    """
    if not (m > 0):
        raise ValueError(f"mass must be positive, got {m}")
    psi = packet.values
    k = 2.0 * math.pi * np.fft.fftfreq(packet.n, d=packet.dx)
    spectrum = np.fft.fft(psi)
    weights = np.abs(spectrum) ** 2
    total = float(np.sum(weights))
    if total <= 0:
        raise ValueError("zero-norm packet")
    weights = weights / total
    if check_momentum:
        tail = float(np.sum(weights[np.abs(k) > m / 10.0]))
        if tail > 1e-3:
            raise NumericalGuardError(
                f"spectral mass {tail:.3e} above |k|=m/10 exceeds 1e-3; "
                "the packet is not in the heavy-mass regime")
    phase_gap = (np.sqrt(m * m + k * k) - m - k * k / (2.0 * m)) * t
    return float(np.abs(np.sum(weights * np.exp(-1j * phase_gap))))
