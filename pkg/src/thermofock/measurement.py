"""Entangling measurements, decoherence as block projection, and sectors.

A measurement couples object and apparatus into Σ_k c_k |k⟩|A_k⟩ with
orthonormal pointer states; for two or more nonzero branches no product
form exists (Schmidt rank ≥ 2).  Tracing out the object leaves the
apparatus in the diagonal mixture Σ |c_k|² |A_k⟩⟨A_k| — the Born
weights appear as relative frequencies under repeated sampling.

Decoherence is modeled as the exact projection onto the block diagonal
of a sector partition: trace preserved, purity never increased,
idempotent.  A charge operator S = Σ_i s_i Π_i built from the sectors
commutes with every block-diagonal ("physical") operator, and no
operator with vanishing cross-sector matrix elements connects distinct
sectors — the superselection rule at the level where it is exact.
A 2π rotation multiplies half-integer-spin components by −1 and leaves
integer-spin components alone: pure sectors stay on their ray, mixed
superpositions move to a different ray, which is why such mixtures are
forbidden observables.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalGuardError

__all__ = [
    "DensityMatrix",
    "SectorStructure",
    "BipartiteState",
    "OutcomeFrequencies",
    "entangle",
    "reduced_density",
    "decohere",
    "purity",
    "sample_outcomes",
    "sector_defect",
    "charge_commutator_norm",
    "rotation_2pi",
    "random_density",
]

_HERM_TOL = 1e-12
_EIG_TOL = 1e-12
_TRACE_TOL = 1e-12


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive-semidefinite, unit-trace d×d matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise ValueError("density matrix must be square and nonempty")
        if float(np.max(np.abs(m - m.conj().T))) > _HERM_TOL:
            raise ValueError("matrix is not Hermitian within 1e-12")
        if float(np.min(np.linalg.eigvalsh(m))) < -_EIG_TOL:
            raise ValueError("matrix has an eigenvalue below -1e-12")
        if abs(float(np.trace(m).real) - 1.0) > _TRACE_TOL:
            raise ValueError("trace differs from 1 by more than 1e-12")

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def pure(cls, vector) -> "DensityMatrix":
        v = np.asarray(vector, dtype=complex)
        norm = float(np.linalg.norm(v))
        if norm == 0.0:
            raise ValueError("zero vector")
        v = v / norm
        return cls(np.outer(v, v.conj()))

    @classmethod
    def diagonal(cls, probs) -> "DensityMatrix":
        p = np.asarray(probs, dtype=float)
        return cls(np.diag(p.astype(complex)))

    @classmethod
    def maximally_mixed(cls, d: int) -> "DensityMatrix":
        return cls(np.eye(d, dtype=complex) / d)

    def diagonal_part(self) -> np.ndarray:
        return np.real(np.diag(self.matrix)).copy()

    def off_diagonal_max(self) -> float:
        m = self.matrix - np.diag(np.diag(self.matrix))
        return float(np.max(np.abs(m)))


@dataclass(frozen=True)
class SectorStructure:
    """Partition of basis indices 0..d−1 into labeled charge sectors."""

    sectors: dict
    charges: dict

    def __post_init__(self):
        sectors = {label: tuple(int(i) for i in idx)
                   for label, idx in self.sectors.items()}
        object.__setattr__(self, "sectors", sectors)
        charges = {label: float(v) for label, v in self.charges.items()}
        object.__setattr__(self, "charges", charges)
        if set(charges) != set(sectors):
            raise ValueError("sector labels and charge labels differ")
        seen = [i for idx in sectors.values() for i in idx]
        if sorted(seen) != list(range(len(seen))) or not seen:
            raise ValueError("sectors must partition 0..d-1 exactly once")

    @property
    def d(self) -> int:
        return sum(len(idx) for idx in self.sectors.values())

    @classmethod
    def singletons(cls, d: int, charges=None) -> "SectorStructure":
        """One sector per basis index; default charges are the indices."""
        if charges is None:
            charges = list(range(d))
        return cls({i: (i,) for i in range(d)},
                   {i: charges[i] for i in range(d)})

    def labels_by_index(self) -> list:
        out = [None] * self.d
        for label, idx in self.sectors.items():
            for i in idx:
                out[i] = label
        return out

    def block_mask(self) -> np.ndarray:
        """Boolean d×d mask, True where row and column share a sector."""
        labels = self.labels_by_index()
        arr = np.empty((self.d, self.d), dtype=bool)
        for i, li in enumerate(labels):
            for j, lj in enumerate(labels):
                arr[i, j] = li == lj
        return arr

    def charge_operator(self) -> np.ndarray:
        """S = Σ_i s_i Π_i as a diagonal matrix."""
        diag = np.empty(self.d)
        for label, idx in self.sectors.items():
            for i in idx:
                diag[i] = self.charges[label]
        return np.diag(diag)


@dataclass(frozen=True)
class BipartiteState:
    """Object ⊗ apparatus pure state as a d_o × d_A amplitude table."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", a)
        if a.ndim != 2 or min(a.shape) == 0:
            raise ValueError("amplitude table must be a nonempty 2-d array")
        if abs(float(np.sum(np.abs(a) ** 2)) - 1.0) > 1e-12:
            raise ValueError("state is not normalized within 1e-12")

    @property
    def d_object(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def d_apparatus(self) -> int:
        return self.amplitudes.shape[1]

    def schmidt_values(self) -> np.ndarray:
        """Singular values of the amplitude table, descending."""
        return np.linalg.svd(self.amplitudes, compute_uv=False)

    def schmidt_rank(self, tol: float = 1e-12) -> int:
        return int(np.sum(self.schmidt_values() > tol))

    def is_product(self, tol: float = 1e-12) -> bool:
        return self.schmidt_rank(tol) == 1


def entangle(c, d_object: int | None = None,
             d_apparatus: int | None = None) -> BipartiteState:
    """Measurement transition target Σ_k c_k |k⟩|A_k⟩.

    Pointer states |A_k⟩ are orthonormal basis vectors, so the branch
    amplitudes sit on the table diagonal; the Schmidt rank equals the
    number of nonzero branches, and any two-or-more-branch state has no
    product representation.
    """
    c = np.asarray(c, dtype=complex)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("need a nonempty 1-d amplitude list")
    k = c.size
    if abs(float(np.sum(np.abs(c) ** 2)) - 1.0) > 1e-12:
        raise ValueError("branch amplitudes must satisfy sum |c_k|^2 = 1")
    d_object = k if d_object is None else int(d_object)
    d_apparatus = k if d_apparatus is None else int(d_apparatus)
    if d_object < k or d_apparatus < k:
        raise ValueError("subsystem dimensions must be at least len(c)")
    table = np.zeros((d_object, d_apparatus), dtype=complex)
    table[np.arange(k), np.arange(k)] = c
    return BipartiteState(table)


def reduced_density(state: BipartiteState, subsystem: str) -> DensityMatrix:
    """Partial trace onto "object" or "apparatus".

    For the measurement state with orthonormal pointers, the apparatus
    reduction is exactly diagonal with entries |c_k|².
    """
    m = state.amplitudes
    if subsystem == "object":
        rho = m @ m.conj().T
    elif subsystem == "apparatus":
        rho = m.T @ m.conj()
    else:
        raise ValueError("subsystem must be 'object' or 'apparatus'")
    return DensityMatrix(rho)


def decohere(rho: DensityMatrix, sectors: SectorStructure) -> DensityMatrix:
    """Project onto the sector block diagonal (zero cross-sector entries).

    Exactly trace preserving and idempotent; purity never increases.
    With singleton sectors this is full diagonalization in the pointer
    basis: the branch weights |c_k|² become classical frequencies.
    """
    if sectors.d != rho.d:
        raise ValueError("sector partition size does not match the matrix")
    projected = np.where(sectors.block_mask(), rho.matrix, 0.0)
    return DensityMatrix(projected)


def purity(rho: DensityMatrix) -> float:
    """Tr ρ², between 1/d (maximally mixed) and 1 (pure)."""
    return float(np.trace(rho.matrix @ rho.matrix).real)


@dataclass(frozen=True)
class OutcomeFrequencies:
    """Empirical outcome table from repeated diagonal-state sampling."""

    counts: np.ndarray
    n: int
    probabilities: np.ndarray

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / self.n

    def standard_errors(self) -> np.ndarray:
        p = self.probabilities
        return np.sqrt(np.maximum(p * (1.0 - p), 0.0) / self.n)

    def within_3_sigma(self) -> np.ndarray:
        """Per-outcome check |freq − p| ≤ 3 binomial standard errors."""
        return np.abs(self.frequencies - self.probabilities) \
            <= 3.0 * self.standard_errors()


def sample_outcomes(rho: DensityMatrix, n: int, seed: int) -> OutcomeFrequencies:
    """Draw n outcomes with Born weights p_k = ρ_kk (diagonal ρ only)."""
    if n < 1:
        raise ValueError("need at least one draw")
    if rho.off_diagonal_max() > 1e-12:
        raise ValueError("matrix has coherences; decohere before sampling")
    p = rho.diagonal_part()
    p = np.maximum(p, 0.0)
    p = p / np.sum(p)
    rng = np.random.default_rng(seed)
    outcomes = rng.choice(rho.d, size=n, p=p)
    counts = np.bincount(outcomes, minlength=rho.d)
    return OutcomeFrequencies(counts=counts, n=n, probabilities=p)


def sector_defect(op: np.ndarray, sectors: SectorStructure) -> float:
    """Largest cross-sector matrix element |⟨ψ_j|F|ψ_i⟩| of an operator.

    Zero defect certifies F as physical under the superselection rule;
    such F is block diagonal, hence commutes with the charge operator
    exactly (verified internally — the charge is constant on each
    block, so the commutator entries (s_i − s_j) F_ij vanish).
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (sectors.d, sectors.d):
        raise ValueError("operator shape does not match the sector space")
    mask = sectors.block_mask()
    cross = np.where(mask, 0.0, op)
    defect = float(np.max(np.abs(cross)))
    if defect == 0.0:
        if charge_commutator_norm(op, sectors) != 0.0:
            raise NumericalGuardError(
                "block-diagonal operator failed to commute with the "
                "sector charge; sector bookkeeping is inconsistent")
    return defect


def charge_commutator_norm(op: np.ndarray, sectors: SectorStructure) -> float:
    """max |[S, F]_ij| for the diagonal charge S = Σ_i s_i Π_i."""
    op = np.asarray(op, dtype=complex)
    s = sectors.charge_operator()
    return float(np.max(np.abs(s @ op - op @ s)))


def rotation_2pi(state, spins) -> np.ndarray:
    """Full-turn rotation: −1 on half-integer-spin components, +1 on
    integer-spin components.

    Pure-sector states return to the same ray (global ±1); a mixture of
    both spin classes returns on a different ray, so no observable
    state can superpose them.
    """
    state = np.asarray(state, dtype=complex)
    spins = np.asarray(spins, dtype=float)
    if state.ndim != 1 or spins.shape != state.shape:
        raise ValueError("need one spin label per component")
    doubled = 2.0 * spins
    if np.any(np.abs(doubled - np.round(doubled)) > 1e-12):
        raise ValueError("spin labels must be integer or half-integer")
    half = np.abs(doubled.astype(int)) % 2 == 1
    return np.where(half, -state, state)


def random_density(d: int, rng: np.random.Generator,
                   rank: int | None = None) -> DensityMatrix:
    """Random density matrix: normalized Wishart A A† with A of shape
    (d, rank)."""
    rank = d if rank is None else rank
    a = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    m = a @ a.conj().T
    return DensityMatrix(m / np.trace(m).real)
