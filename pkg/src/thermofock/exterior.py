"""Probabilities as coefficients of graded-algebra products.

Two fixed 4-coefficient graded algebras over a pair of generators:

* :class:`ExteriorElement` — antisymmetric ("vector") generators e1, e2,
  basis {1, e1, e2, e1^e2};
* :class:`GrassmannElement` — anticommuting generators th1, th2,
  basis {1, th1, th2, th1*th2}, with a conjugation that conjugates
  coefficients and reverses factor order.

Probability densities for bilinear, complex-pair, fermionic and bosonic
amplitude configurations are extracted as coefficients of a fixed unit
(bi)vector in products of such elements.  An executable checker for the
amplitude-measure axioms (bijectivity, additivity, normalization,
positivity of the extracted density) operates on finite event spaces.

Two generators suffice for every construction here; no general
n-generator engine is provided.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ExteriorElement",
    "GrassmannElement",
    "AmplitudeEventSpace",
    "AxiomReport",
    "bilinear_density",
    "sum_density",
    "complex_pair_density",
    "fermion_density",
    "boson_density",
    "check_axioms",
]


def _coerce(value):
    """Accept plain scalars alongside graded elements in sums/products."""
    return value


class _Graded2:
    """A 4-coefficient element c0 + c1*g1 + c2*g2 + c12*g1g2 over two
    anticommuting generators g1, g2 (g1*g1 = g2*g2 = 0, g1*g2 = -g2*g1).

    Coefficients may be complex scalars or, for nested constructions,
    other graded elements (the two factors are then treated as mutually
    commuting, i.e. a tensor product of algebras).
    """

    __slots__ = ("c0", "c1", "c2", "c12")

    def __init__(self, c0=0, c1=0, c2=0, c12=0):
        self.c0 = c0
        self.c1 = c1
        self.c2 = c2
        self.c12 = c12

    def coefficients(self):
        return (self.c0, self.c1, self.c2, self.c12)

    def __add__(self, other):
        if isinstance(other, _Graded2):
            if type(other) is not type(self):
                return NotImplemented
            return type(self)(self.c0 + other.c0, self.c1 + other.c1,
                              self.c2 + other.c2, self.c12 + other.c12)
        # scalar lives in grade 0
        return type(self)(self.c0 + other, self.c1, self.c2, self.c12)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * (other if isinstance(other, _Graded2)
                              else type(self)(other))

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        """Graded (wedge) product; scalars multiply coefficient-wise."""
        if not isinstance(other, _Graded2):
            return type(self)(self.c0 * other, self.c1 * other,
                              self.c2 * other, self.c12 * other)
        if type(other) is not type(self):
            return NotImplemented
        a0, a1, a2, a12 = self.coefficients()
        b0, b1, b2, b12 = other.coefficients()
        return type(self)(
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0,
            a0 * b12 + a12 * b0 + a1 * b2 - a2 * b1,
        )

    def __rmul__(self, other):
        # scalar * element (coefficient multiplication is commutative)
        return self * other

    def wedge(self, other):
        return self * other

    def is_zero(self, tol=0.0):
        return all(_abs_coeff(c) <= tol for c in self.coefficients())

    def __repr__(self):
        return (f"{type(self).__name__}(c0={self.c0!r}, c1={self.c1!r}, "
                f"c2={self.c2!r}, c12={self.c12!r})")


def _abs_coeff(c):
    if isinstance(c, _Graded2):
        return max(_abs_coeff(x) for x in c.coefficients())
    return abs(c)


class ExteriorElement(_Graded2):
    """Element of the exterior algebra over two vector generators e1, e2.

    Basis order of the stored coefficients: (1, e1, e2, e1^e2).
    """

    @classmethod
    def vector(cls, a, b):
        """a*e1 + b*e2."""
        return cls(0, a, b, 0)

    def conjugate(self):
        """Complex-conjugate all coefficients, slots unchanged."""
        return type(self)(*(np.conj(c) if not isinstance(c, _Graded2)
                            else c.conjugate() for c in self.coefficients()))


class GrassmannElement(_Graded2):
    """Element of the Grassmann algebra over real generators th1, th2.

    Basis order of the stored coefficients: (1, th1, th2, th1*th2).
    ``theta()`` and ``theta_bar()`` build the complex combinations
    th1 + i*th2 and th1 - i*th2.
    """

    @classmethod
    def theta(cls):
        return cls(0, 1.0, 1.0j, 0)

    @classmethod
    def theta_bar(cls):
        return cls(0, 1.0, -1.0j, 0)

    def conjugate(self):
        """Conjugate coefficients and reverse factor order.

        Order reversal is trivial on grades 0 and 1 and flips the sign of
        the grade-2 coefficient (th1*th2 -> th2*th1 = -th1*th2).
        """
        return type(self)(np.conj(self.c0), np.conj(self.c1),
                          np.conj(self.c2), -np.conj(self.c12))


# ---------------------------------------------------------------------------
# Probability densities as coefficient extractions
# ---------------------------------------------------------------------------

def bilinear_density(w1: float, w2: float) -> float:
    """Probability of a two-component configuration with weights (w1, w2).

    Builds w = w1*e1 + i*w2*e2 and its metric conjugate
    wbar = w1*e1 - i*w2*e2 (sign flip on the second slot), wedges them,
    and extracts the coefficient of the oriented unit bivector
    i*(e1^e2) from (1/2) wbar^w.  The result equals w1*w2 exactly.

    Negative weights lie outside the physical region and raise ValueError.
    """
    if w1 < 0 or w2 < 0:
        raise ValueError(
            f"weights must be nonnegative, got ({w1}, {w2})")
    w = ExteriorElement.vector(w1, 1j * w2)
    wbar = ExteriorElement.vector(w1, -1j * w2)
    paired = wbar.wedge(w)
    coeff = 0.5 * paired.c12          # equals i*w1*w2
    value = coeff / 1j                # measure against the unit i*(e1^e2)
    if abs(value.imag) > 1e-12 * max(1.0, abs(value.real)):
        raise ValueError(f"bivector coefficient not real: {value!r}")
    return float(value.real)


def sum_density(terms) -> float:
    """Probability of a sum of factorized two-component configurations.

    ``terms`` is a sequence of (w1k, w2k) pairs.  Each term is carried by
    its own tagged copy of the generator pair (tags are orthonormal,
    tag_k * tag_l = delta_kl), so cross terms between different k vanish
    identically and the total coefficient is the diagonal sum
    sum_k w1k*w2k.  The empty list is the vacuous sum, 0.
    """
    total = 0.0
    for w1k, w2k in terms:
        # tag orthonormality kills every k != l cross pairing, leaving
        # one unit-bivector coefficient per term
        total += bilinear_density(w1k, w2k)
    return total


def complex_pair_density(z_q: complex, z_p: complex) -> float:
    """Coefficient of the unit bivector in i*zbar^z for z = z_q*e1 + z_p*e2.

    Expands to i*(conj(z_q)*z_p - conj(z_p)*z_q), which is real for all
    inputs and changes sign under z_q <-> z_p.
    """
    z = ExteriorElement.vector(z_q, z_p)
    zbar = ExteriorElement.vector(np.conj(z_q), np.conj(z_p))
    coeff = 1j * zbar.wedge(z).c12
    if abs(coeff.imag) > 1e-12 * max(1.0, abs(coeff.real)):
        raise ValueError(f"pair density not real: {coeff!r}")
    return float(coeff.real)


def _fermion_pair(q: complex):
    """Grassmann amplitude pair psi = q*theta/sqrt(2), psi+ = conj(q)*theta_bar/sqrt(2)."""
    root2 = np.sqrt(2.0)
    psi = GrassmannElement.theta() * (q / root2)
    psi_plus = GrassmannElement.theta_bar() * (np.conj(q) / root2)
    return psi, psi_plus


def fermion_density(q: complex) -> float:
    """Probability |q|^2 of a one-mode fermionic amplitude q.

    Builds z = psi*e_q + psi+*e_p with psi = q*theta/sqrt(2) and
    psi+ = conj(q)*theta_bar/sqrt(2), wedges the pair, and extracts the
    coefficient of the fermionic probability unit theta*theta_bar*(e_q^e_p).
    All anticommutation is exact in the 4-coefficient algebra; only the
    orientation of the unit is a fixed convention, chosen so the physical
    region gives nonnegative values.
    """
    psi, psi_plus = _fermion_pair(q)
    z = ExteriorElement(GrassmannElement(), psi, psi_plus, GrassmannElement())
    paired = z.wedge(z)
    top = paired.c12                  # GrassmannElement on e_q^e_p
    # unit: theta*theta_bar on e_q^e_p; its th1*th2 coefficient is -2i
    unit_top = (GrassmannElement.theta() * GrassmannElement.theta_bar()).c12
    value = top.c12 / unit_top
    residual = max(abs(top.c0), _abs_coeff(top.c1), _abs_coeff(top.c2))
    if residual > 1e-12 or abs(value.imag) > 1e-12 * max(1.0, abs(value.real)):
        raise ValueError("fermionic pairing left a non-scalar remainder")
    return float(value.real)


def boson_density(E, A, x, t, k=0.0):
    """Conserved-current density rho = i(conj(phi) d_t phi - d_t conj(phi) phi).

    ``E``, ``A``, ``k`` describe one plane wave phi = A*exp(i(k*x - E*t))
    or, given equal-length sequences, a finite superposition of them.
    For a single wave rho = 2*E*|A|^2, independent of (x, t).  For a
    two-wave superposition rho = 2[E1|A1|^2 + E2|A2|^2
    + (E1+E2)|A1 A2| cos(theta)] with a traveling phase theta, so the
    density is indefinite whenever (|A1|-|A2|)(E1|A1|-E2|A2|) < 0 —
    e.g. E=(3,1), |A|=(0.6,0.8) sweeps through both signs on a grid.
    Degenerate exception: for E2 = -E1 the cross term is exactly real
    and rho is constant, vanishing identically at equal weights.

    ``x`` and ``t`` may be scalars or broadcastable arrays; the returned
    density matches their broadcast shape.
    """
    E = np.atleast_1d(np.asarray(E, dtype=float))
    A = np.atleast_1d(np.asarray(A, dtype=complex))
    k = np.broadcast_to(np.asarray(k, dtype=float), E.shape)
    if A.shape != E.shape:
        raise ValueError("E and A must have matching lengths")
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    # phase[j, ...] = k_j*x - E_j*t on the broadcast (x, t) grid
    grid_shape = np.broadcast(x, t).shape
    phi = np.zeros(grid_shape, dtype=complex)
    dphi = np.zeros(grid_shape, dtype=complex)
    for Ej, Aj, kj in zip(E, A, k):
        wave = Aj * np.exp(1j * (kj * x - Ej * t))
        phi = phi + wave
        dphi = dphi + (-1j * Ej) * wave
    rho = -2.0 * np.imag(np.conj(phi) * dphi)
    if rho.ndim == 0:
        return float(rho)
    return rho


# ---------------------------------------------------------------------------
# Amplitude-measure axioms on finite event spaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AmplitudeEventSpace:
    """Finite event space with an amplitude two-sided assignment.

    ``amp_e[j]`` and ``amp_ebar[j]`` are the two one-sided amplitudes of
    the j-th elementary event; the event's amplitude is their product
    amp_ebar[j] * amp_e[j] (the two sides are paired diagonally), and a
    subset's amplitude is the sum over its elements unless an explicit
    override is supplied (overrides exist so that additivity violations
    are constructible and detectable).
    """

    amp_e: tuple
    amp_ebar: tuple
    subset_overrides: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "amp_e", tuple(complex(a) for a in self.amp_e))
        object.__setattr__(self, "amp_ebar",
                           tuple(complex(a) for a in self.amp_ebar))

    @property
    def n_events(self) -> int:
        return len(self.amp_e)

    def event_amplitude(self, j: int) -> complex:
        return self.amp_ebar[j] * self.amp_e[j]

    def subset_amplitude(self, indices) -> complex:
        key = frozenset(indices)
        if key in self.subset_overrides:
            return complex(self.subset_overrides[key])
        return sum((self.event_amplitude(j) for j in key), 0j)


@dataclass
class AxiomReport:
    """Outcome of check_axioms: per-axiom violations and the extracted
    per-event probabilities (None when an axiom failure blocks them)."""

    passed: bool
    violations: list
    probabilities: list | None
    mode: str

    def __bool__(self):
        return self.passed


_MODES = ("nonrelativistic", "relativistic-bivector", "fermionic")


def check_axioms(space: AmplitudeEventSpace, mode: str = "nonrelativistic",
                 skip=(), tol: float = 1e-12) -> AxiomReport:
    """Verify the amplitude-measure axioms on a finite event space.

    Checks, in order:

    * Q1 — the two amplitude sides are in bijection with the events
      (equal finite lengths);
    * Q2 — every event carries a finite amplitude on both sides;
    * Q3 — subset amplitudes are additive on disjoint unions (every
      singleton/complement and pairwise-disjoint split is compared);
    * Q4 — the full space has amplitude 1;
    * positivity — the per-event density extracted for ``mode`` is real
      and nonnegative.

    ``mode`` selects the density rule: "nonrelativistic" pairs each
    amplitude with its conjugate side (P_j = amp_ebar_j * amp_e_j, which
    equals |amp_e_j|^2 when the sides are conjugate); "fermionic" routes
    each amplitude through the Grassmann pairing of
    :func:`fermion_density`; "relativistic-bivector" evaluates the
    commutator-style bivector coefficient, which vanishes identically
    for commuting scalar amplitudes and is reported as such.

    ``skip`` names axiom labels (e.g. {"Q3"}) excluded from checking —
    used by the axiom-independence smoke test.
    """
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {_MODES}")
    skip = set(skip)
    violations = []

    if "Q1" not in skip:
        if len(space.amp_e) != len(space.amp_ebar):
            violations.append(
                f"Q1: amplitude sides have different sizes "
                f"({len(space.amp_e)} vs {len(space.amp_ebar)})")

    if "Q2" not in skip:
        for j, (a, b) in enumerate(zip(space.amp_e, space.amp_ebar)):
            if not (np.isfinite(a) and np.isfinite(b)):
                violations.append(f"Q2: event {j} has non-finite amplitude")

    n = space.n_events
    if "Q3" not in skip:
        full = frozenset(range(n))
        for j in range(n):
            a = space.subset_amplitude({j})
            rest = full - {j}
            lhs = space.subset_amplitude(full)
            rhs = a + space.subset_amplitude(rest)
            if abs(lhs - rhs) > tol:
                violations.append(
                    f"Q3: additivity fails on {{{j}}} vs complement "
                    f"(gap {abs(lhs - rhs):.3e})")
        for j in range(n):
            for l in range(j + 1, n):
                lhs = space.subset_amplitude({j, l})
                rhs = space.subset_amplitude({j}) + space.subset_amplitude({l})
                if abs(lhs - rhs) > tol:
                    violations.append(
                        f"Q3: additivity fails on {{{j},{l}}} "
                        f"(gap {abs(lhs - rhs):.3e})")

    if "Q4" not in skip:
        total = space.subset_amplitude(range(n))
        if abs(total - 1.0) > 1e-9:
            violations.append(
                f"Q4: full-space amplitude {total!r} differs from 1")

    probabilities = None
    if not violations or skip:
        probabilities = []
        for j in range(n):
            if mode == "nonrelativistic":
                p = space.event_amplitude(j)
            elif mode == "fermionic":
                p = fermion_density(space.amp_e[j])
            else:  # relativistic-bivector: antisymmetrized scalar pairing
                a, b = space.amp_e[j], space.amp_ebar[j]
                p = 0.5 * (a * b - b * a)   # identically zero for scalars
            p = complex(p)
            if abs(p.imag) > tol * max(1.0, abs(p.real)):
                violations.append(
                    f"positivity: event {j} density {p!r} is not real")
            elif p.real < -tol:
                violations.append(
                    f"positivity: event {j} density {p.real:.3e} is negative")
            probabilities.append(p.real)

    return AxiomReport(passed=not violations, violations=violations,
                       probabilities=probabilities, mode=mode)
