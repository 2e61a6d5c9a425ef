"""Holomorphic-representation oscillator calculus with an explicit scale ħ.

States are finite coefficient vectors in the orthonormal basis
Z_n(z) = z^n / sqrt(n! ħ^n) of entire functions square-integrable
against the normalized Gaussian measure

    dμ = (1/(π ħ)) e^{-|z|^2/ħ} d(Re z) d(Im z).

The raising operator is multiplication by z, the lowering operator is
ħ d/dz, and their commutator is ħ exactly on every interior slot of the
truncation.  A quadrature inner product over the Gaussian measure serves
as an independent oracle for the analytic coefficient formula.  The
kernel U(z, q) = Σ Z_n(z) Ψ_n(q) intertwines the holomorphic and
position representations (Ψ_n the Hermite functions); the classical
trajectory z(t) = z0 e^{-iωt} closes the correspondence with the
coherent-amplitude phase evolved by the Hamiltonian ω a⁺a + ωħ/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .charfn import GridWaveFunction
from .errors import NumericalGuardError

__all__ = [
    "FockVector",
    "GaussianMeasure",
    "inner_product",
    "quadrature_inner_product",
    "raised",
    "lowered",
    "commutator_defect",
    "hamiltonian_apply",
    "evolved",
    "rescale_lambda",
    "hermite_function",
    "bargmann_kernel",
    "to_position",
    "from_position",
    "classical_trajectory",
]

# Cramer bound: |Ψ_n(q)| < 1.086435 / pi^{1/4} for all n, q
_HERMITE_SUP = 1.086435 / np.pi ** 0.25
_HERMITE_N_MAX = 200


@dataclass(frozen=True)
class FockVector:
    """Coefficients c_0..c_{N_max} in the basis Z_n, at a fixed scale ħ."""

    coeffs: np.ndarray
    hbar: float = 1.0

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        object.__setattr__(self, "coeffs", coeffs)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("coefficients must form a nonempty 1-d vector")
        if not (self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")

    @property
    def n_max(self) -> int:
        return self.coeffs.size - 1

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm_squared() - 1.0) <= 1e-12

    @classmethod
    def basis_state(cls, n: int, n_max: int | None = None,
                    hbar: float = 1.0) -> "FockVector":
        """The basis vector Z_n, truncated at n_max (default n)."""
        if n_max is None:
            n_max = n
        if n > n_max:
            raise ValueError(f"basis index {n} exceeds truncation {n_max}")
        c = np.zeros(n_max + 1, dtype=complex)
        c[n] = 1.0
        return cls(c, hbar)

    @classmethod
    def coherent_like(cls, alpha: complex, n_max: int,
                      hbar: float = 1.0) -> "FockVector":
        """Normalized vector with c_n ∝ alpha^n / sqrt(n! ħ^n)."""
        n = np.arange(n_max + 1)
        log_mag = n * np.log(np.abs(alpha) + 1e-300) - 0.5 * (
            _log_factorial(n) + n * np.log(hbar))
        phase = np.exp(1j * n * np.angle(alpha))
        c = np.exp(log_mag - log_mag.max()) * phase
        c /= np.linalg.norm(c)
        return cls(c, hbar)

    def evaluate(self, z) -> np.ndarray:
        """f(z) = Σ c_n Z_n(z) at complex points z."""
        z = np.asarray(z, dtype=complex)
        basis = np.ones(z.shape, dtype=complex)
        total = self.coeffs[0] * basis
        for n in range(1, self.coeffs.size):
            basis = basis * z / np.sqrt(n * self.hbar)
            total = total + self.coeffs[n] * basis
        return total


def _log_factorial(n):
    from scipy.special import gammaln
    return gammaln(np.asarray(n) + 1.0)


def _check_compatible(f: FockVector, g: FockVector):
    if abs(f.hbar - g.hbar) > 1e-15 * max(f.hbar, g.hbar):
        raise ValueError(
            f"mismatched scales hbar={f.hbar} vs {g.hbar}")


def inner_product(f: FockVector, g: FockVector) -> complex:
    """(f, g) = Σ c_n(f) conj(c_n(g)).

    Analytic evaluation of the Gaussian-measure integral in the
    orthonormal basis; truncations may differ (short vector zero-padded).
    """
    _check_compatible(f, g)
    n = max(f.coeffs.size, g.coeffs.size)
    a = np.zeros(n, dtype=complex)
    b = np.zeros(n, dtype=complex)
    a[:f.coeffs.size] = f.coeffs
    b[:g.coeffs.size] = g.coeffs
    return complex(np.sum(a * np.conj(b)))


@dataclass(frozen=True)
class GaussianMeasure:
    """The normalized weight e^{-|z|^2/ħ}/(π ħ) on the complex plane."""

    hbar: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")

    def quadrature_nodes(self, radial_nodes: int, angular_nodes: int):
        """Complex nodes and weights integrating dμ exactly on
        polynomials of degree <= 2*radial_nodes - 1 in |z|^2 and
        angular harmonics |k| < angular_nodes."""
        u, wu = _laggauss(radial_nodes)
        phi = 2.0 * np.pi * np.arange(angular_nodes) / angular_nodes
        r = np.sqrt(self.hbar * u)
        z = np.outer(r, np.exp(1j * phi)).ravel()
        w = np.outer(wu, np.full(angular_nodes, 1.0 / angular_nodes)).ravel()
        return z, w

    def total_mass(self, radial_nodes: int = 24,
                   angular_nodes: int = 16) -> float:
        _, w = self.quadrature_nodes(radial_nodes, angular_nodes)
        return float(np.sum(w))


@lru_cache(maxsize=32)
def _laggauss(n: int):
    u, w = np.polynomial.laguerre.laggauss(n)
    u.setflags(write=False)
    w.setflags(write=False)
    return u, w


def quadrature_inner_product(f: FockVector, g: FockVector,
                             radial_nodes: int = 40,
                             angular_nodes: int = 64) -> complex:
    """∫ dμ f(z) conj(g(z)) by polar quadrature over the Gaussian weight.

    An independent numerical oracle for :func:`inner_product`: radial
    Gauss–Laguerre in u = |z|^2/ħ, uniform angular grid.  The value is
    recomputed with enlarged node counts; a self-estimated error above
    1e-8 raises NumericalGuardError.  Truncations above 12 are outside
    the guaranteed-accuracy domain and are rejected.
    """
    _check_compatible(f, g)
    if f.n_max > 12 or g.n_max > 12:
        raise ValueError("quadrature oracle limited to truncations <= 12")
    measure = GaussianMeasure(f.hbar)

    def evaluate(rn, an):
        z, w = measure.quadrature_nodes(rn, an)
        return complex(np.sum(w * f.evaluate(z) * np.conj(g.evaluate(z))))

    coarse = evaluate(radial_nodes, angular_nodes)
    fine = evaluate(radial_nodes + 8, angular_nodes + 16)
    if abs(coarse - fine) > 1e-8:
        raise NumericalGuardError(
            f"quadrature self-estimate {abs(coarse - fine):.3e} above 1e-8; "
            f"increase radial_nodes/angular_nodes from "
            f"({radial_nodes}, {angular_nodes})")
    return fine


def raised(f: FockVector, grow: bool = False) -> FockVector:
    """Apply the raising operator (multiplication by z).

    c_n contributes sqrt((n+1) ħ) c_n to slot n+1.  The top slot must be
    empty unless ``grow`` extends the truncation by one.
    """
    c = f.coeffs
    if abs(c[-1]) != 0.0 and not grow:
        raise ValueError(
            "raising would overflow the truncation (top coefficient "
            f"{c[-1]!r}); pass grow=True to extend it")
    out = np.zeros(c.size + 1, dtype=complex)
    n = np.arange(c.size)
    out[1:] = np.sqrt((n + 1) * f.hbar) * c
    if not grow:
        out = out[:c.size]
    return FockVector(out, f.hbar)


def lowered(f: FockVector) -> FockVector:
    """Apply the lowering operator ħ d/dz: c_n contributes sqrt(n ħ) c_n
    to slot n-1; the vacuum maps to the zero vector."""
    c = f.coeffs
    out = np.zeros(c.size, dtype=complex)
    n = np.arange(1, c.size)
    out[:-1] = np.sqrt(n * f.hbar) * c[1:]
    return FockVector(out, f.hbar)


def _raised_truncated(f: FockVector) -> FockVector:
    """Raising with silent truncation — only for demonstrating the edge
    artifact in commutator_defect."""
    c = f.coeffs
    out = np.zeros(c.size, dtype=complex)
    n = np.arange(c.size - 1)
    out[1:] = np.sqrt((n + 1) * f.hbar) * c[:-1]
    return FockVector(out, f.hbar)


def commutator_defect(n_max: int, hbar: float = 1.0,
                      include_edge: bool = False) -> float:
    """max_n ||([a, a⁺] - ħ) Z_n|| over basis slots.

    Interior slots n <= n_max - 1 give exact cancellation up to floating
    rounding.  ``include_edge`` adds the top slot using silently
    truncating raising, which manufactures a defect of magnitude
    ħ (n_max + 1) — the reason the edge is excluded by default.
    """
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    worst = 0.0
    top = n_max if include_edge else n_max - 1
    for n in range(top + 1):
        z_n = FockVector.basis_state(n, n_max, hbar)
        if n < n_max:
            a_adag = lowered(raised(z_n))
        else:
            a_adag = lowered(_raised_truncated(z_n))
        adag_a = raised(lowered(z_n))
        defect = a_adag.coeffs - adag_a.coeffs - hbar * z_n.coeffs
        worst = max(worst, float(np.linalg.norm(defect)))
    return worst


def hamiltonian_apply(f: FockVector, omega: float,
                      lam: float = 1.0) -> FockVector:
    """Apply H = ω λ a⁺a + ω λ ħ / 2 through the ladder operators.

    In the unrescaled representation (λ=1) the basis vector Z_n is an
    eigenvector with eigenvalue ω ħ (n + 1/2).  For a vector produced by
    :func:`rescale_lambda` pass the same λ: the spectrum then matches
    the unrescaled one exactly (λ ħ_rescaled recovers the original ħ).
    """
    number_part = raised(lowered(f))
    c = omega * lam * (number_part.coeffs + 0.5 * f.hbar * f.coeffs)
    return FockVector(c, f.hbar)


def evolved(f: FockVector, omega: float, t: float) -> FockVector:
    """Evolve by the phase factors e^{-i E_n t / ħ}, E_n = ω ħ (n + 1/2)."""
    n = np.arange(f.coeffs.size)
    phases = np.exp(-1j * omega * (n + 0.5) * t)
    return FockVector(f.coeffs * phases, f.hbar)


def rescale_lambda(f: FockVector, lam: float) -> FockVector:
    """Non-canonical rescaling a -> a/sqrt(λ): same coefficients, scale
    ħ/λ, so the ladder commutator becomes ħ/λ while the spectrum of
    ω λ a⁺a + ω λ ħ'/2 is unchanged."""
    if not (lam > 0):
        raise ValueError(f"lambda must be positive, got {lam}")
    return FockVector(f.coeffs.copy(), f.hbar / lam)


# ---------------------------------------------------------------------------
# Position representation
# ---------------------------------------------------------------------------

def hermite_function(n: int, q) -> np.ndarray:
    """Orthonormal Hermite function Ψ_n(q) (unit scale).

    Pre-weighted stable recurrence
    Ψ_n = q sqrt(2/n) Ψ_{n-1} - sqrt((n-1)/n) Ψ_{n-2},
    Ψ_0 = π^{-1/4} e^{-q²/2}; accurate for n <= 200.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n > _HERMITE_N_MAX:
        raise ValueError(
            f"order {n} above recurrence accuracy bound {_HERMITE_N_MAX}")
    q = np.asarray(q, dtype=float)
    prev = np.pi ** -0.25 * np.exp(-0.5 * q * q)
    if n == 0:
        return prev
    cur = np.sqrt(2.0) * q * prev
    for m in range(2, n + 1):
        prev, cur = cur, q * np.sqrt(2.0 / m) * cur - np.sqrt((m - 1) / m) * prev
    return cur


def _hermite_scaled(n: int, q, hbar: float) -> np.ndarray:
    """Width-sqrt(ħ) Hermite function, orthonormal in dq."""
    q = np.asarray(q, dtype=float)
    return hbar ** -0.25 * hermite_function(n, q / np.sqrt(hbar))


def _hermite_table(n_max: int, q, hbar: float) -> np.ndarray:
    """Rows Ψ_0..Ψ_{n_max} of width-sqrt(ħ) Hermite functions on q."""
    if n_max > _HERMITE_N_MAX:
        raise ValueError(
            f"order {n_max} above recurrence accuracy bound {_HERMITE_N_MAX}")
    q = np.asarray(q, dtype=float)
    s = q / np.sqrt(hbar)
    table = np.empty((n_max + 1, q.size), dtype=float)
    table[0] = np.pi ** -0.25 * np.exp(-0.5 * s * s)
    if n_max >= 1:
        table[1] = np.sqrt(2.0) * s * table[0]
    for m in range(2, n_max + 1):
        table[m] = (s * np.sqrt(2.0 / m) * table[m - 1]
                    - np.sqrt((m - 1) / m) * table[m - 2])
    return hbar ** -0.25 * table


def _kernel_tail_bound(z_abs: float, n_max: int, hbar: float) -> float:
    """Bound on Σ_{n>N} |Z_n(z)| sup|Ψ_n| for the kernel partial sum."""
    n1 = n_max + 1
    log_term = n1 * np.log(max(z_abs, 1e-300)) - 0.5 * (
        _log_factorial(n1) + n1 * np.log(hbar))
    term = float(np.exp(log_term))
    ratio = z_abs / np.sqrt((n_max + 2) * hbar)
    if ratio >= 1.0:
        return np.inf
    return _HERMITE_SUP * term / (1.0 - ratio)


def bargmann_kernel(z: complex, q, n_max: int = 64,
                    hbar: float = 1.0) -> np.ndarray:
    """U(z, q) = Σ_{n<=n_max} Z_n(z) Ψ_n(q), the intertwining kernel.

    The partial-sum tail must be below 1e-10 for the given |z|
    (geometric bound using the uniform Hermite-function sup); otherwise
    NumericalGuardError suggests a larger n_max.  Satisfies
    ∫ dq U(z, q) conj(U(z', q)) = e^{z conj(z')/ħ}.
    """
    tail = _kernel_tail_bound(abs(z), n_max, hbar)
    if not (tail < 1e-10):
        raise NumericalGuardError(
            f"kernel tail bound {tail:.3e} above 1e-10 at |z|={abs(z):.3g}; "
            f"increase n_max beyond {n_max}")
    q = np.atleast_1d(np.asarray(q, dtype=float))
    table = _hermite_table(n_max, q, hbar)
    # Z_n(z) accumulated stably through the ratio recurrence
    basis = np.empty(n_max + 1, dtype=complex)
    basis[0] = 1.0
    for m in range(1, n_max + 1):
        basis[m] = basis[m - 1] * z / np.sqrt(m * hbar)
    return basis @ table


def to_position(f: FockVector, grid) -> GridWaveFunction:
    """ψ(q) = Σ c_n Ψ_n(q) on a uniform grid of q values."""
    q = np.asarray(grid, dtype=float)
    if q.ndim != 1 or q.size < 2:
        raise ValueError("grid must be a 1-d array of at least 2 points")
    dq = q[1] - q[0]
    if not np.allclose(np.diff(q), dq, rtol=0, atol=1e-12 * max(1.0, abs(dq))):
        raise ValueError("grid must be uniformly spaced")
    table = _hermite_table(f.n_max, q, f.hbar)
    values = f.coeffs @ table
    return GridWaveFunction(float(q[0]), float(dq), values)


def from_position(psi: GridWaveFunction, n_max: int,
                  hbar: float = 1.0, tail_tol: float = 1e-8) -> FockVector:
    """Project grid samples onto the first n_max+1 oscillator modes.

    c_n = ∫ ψ(q) Ψ_n(q) dq by trapezoidal quadrature.  The captured
    coefficient mass must reach ||ψ||² within ``tail_tol`` (this guards
    both a too-narrow grid and a too-small truncation); otherwise
    NumericalGuardError is raised.
    """
    q = psi.x
    w = np.ones(q.size)
    w[0] = w[-1] = 0.5
    wv = psi.values * w * psi.dx
    coeffs = _hermite_table(n_max, q, hbar).astype(complex) @ wv
    captured = float(np.sum(np.abs(coeffs) ** 2))
    total = psi.norm_squared()
    if captured < total - tail_tol:
        raise NumericalGuardError(
            f"projection captures {captured:.12g} of ||psi||^2={total:.12g}; "
            f"widen the grid or increase n_max beyond {n_max}")
    return FockVector(coeffs, hbar)


def classical_trajectory(z0: complex, omega: float, t):
    """z(t) = z0 e^{-iωt}, the solution of dz/dt = -iωz."""
    t = np.asarray(t, dtype=float)
    out = z0 * np.exp(-1j * omega * t)
    if out.ndim == 0:
        return complex(out)
    return out
