"""Two-site, discrete-time triple: deterministic, Markov, unitary.

The same two-point configuration space supports three dynamics:
a deterministic site map, a column-stochastic transition matrix acting
on probability pairs, and a unitary 2×2 matrix acting on amplitude
pairs with outcome probabilities |ψ_i|².  No scale constant appears
anywhere in these rules.

The unitary theory is not a disguised Markov chain: with the
equal-weight orthogonal involution S = (1/√2)[[1, 1], [1, −1]], both
basis states map to outcome distribution (½, ½) after one step, which
forces any single time-homogeneous stochastic matrix reproducing the
one-step law to have both columns (½, ½); but then two Markov steps
still give (½, ½), while two unitary steps return (1, 0) exactly —
interference with total-variation gap ½.  The feasibility search
returns either a stochastic matrix satisfying all requested
(input, output, steps) constraints to 1e−6, or an infeasibility
certificate: exact column forcing plus a violated constraint, an
inconsistent linear system, or an exhaustive Lipschitz covering bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

__all__ = [
    "StochasticMatrix",
    "ToyUnitary",
    "Constraint",
    "FeasibilityResult",
    "InterferenceRow",
    "classical_step",
    "markov_step",
    "quantum_step",
    "markov_feasibility",
    "interference_demo",
    "total_variation",
]

_COLUMN_TOL = 1e-12


@dataclass(frozen=True)
class StochasticMatrix:
    """2×2 column-stochastic matrix: w_ij ≥ 0, each column summing to 1.

    Acts as p(t+1) = w p(t) (column convention: entry w_ij is the
    transition weight j → i)."""

    entries: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.entries, dtype=float)
        object.__setattr__(self, "entries", w)
        if w.shape != (2, 2):
            raise ValueError("need a 2x2 matrix")
        if np.any(w < -_COLUMN_TOL) or np.any(w > 1.0 + _COLUMN_TOL):
            raise ValueError("entries must lie in [0, 1]")
        sums = np.sum(w, axis=0)
        if np.any(np.abs(sums - 1.0) > _COLUMN_TOL):
            raise ValueError(f"columns must sum to 1, got {sums}")

    @classmethod
    def identity(cls) -> "StochasticMatrix":
        return cls(np.eye(2))

    @classmethod
    def swap(cls) -> "StochasticMatrix":
        return cls(np.array([[0.0, 1.0], [1.0, 0.0]]))

    @classmethod
    def from_params(cls, a: float, b: float) -> "StochasticMatrix":
        """The full 2-parameter family [[a, b], [1−a, 1−b]], a, b ∈ [0,1]."""
        return cls(np.array([[a, b], [1.0 - a, 1.0 - b]]))

    @property
    def params(self) -> tuple[float, float]:
        return float(self.entries[0, 0]), float(self.entries[0, 1])


@dataclass(frozen=True)
class ToyUnitary:
    """2×2 unitary acting on amplitude pairs: ψ(t+1) = S ψ(t)."""

    entries: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.entries, dtype=complex)
        object.__setattr__(self, "entries", s)
        if s.shape != (2, 2):
            raise ValueError("need a 2x2 matrix")
        defect = float(np.max(np.abs(s.conj().T @ s - np.eye(2))))
        if defect > 1e-12:
            raise ValueError(f"matrix is not unitary (defect {defect:.3e})")

    @classmethod
    def hadamard(cls) -> "ToyUnitary":
        """Equal-weight orthogonal involution (1/√2)[[1, 1], [1, −1]]."""
        r = 1.0 / math.sqrt(2.0)
        return cls(np.array([[r, r], [r, -r]]))


def classical_step(site: int, rule) -> int:
    """Deterministic update: apply a site map to one of the two sites."""
    if site not in (0, 1):
        raise ValueError("site must be 0 or 1")
    nxt = rule(site)
    if nxt not in (0, 1):
        raise ValueError(f"rule left the two-site space: {nxt!r}")
    return int(nxt)


def _check_probability_pair(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (2,):
        raise ValueError("need a probability pair")
    if np.any(p < -_COLUMN_TOL) or abs(float(np.sum(p)) - 1.0) > _COLUMN_TOL:
        raise ValueError(f"not a normalized probability pair: {p}")
    return p


def markov_step(p, w: StochasticMatrix) -> np.ndarray:
    """One stochastic step p ↦ w p; stays on the probability simplex."""
    p = _check_probability_pair(p)
    return w.entries @ p


def quantum_step(psi, s: ToyUnitary) -> np.ndarray:
    """One unitary step ψ ↦ S ψ; stays on the unit sphere, outcome
    probabilities are |ψ_i|²."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (2,):
        raise ValueError("need an amplitude pair")
    if abs(float(np.sum(np.abs(psi) ** 2)) - 1.0) > 1e-12:
        raise ValueError("amplitude pair must be normalized")
    return s.entries @ psi


def total_variation(p, q) -> float:
    """Total-variation distance ½ Σ |p_i − q_i| of two distributions."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return 0.5 * float(np.sum(np.abs(p - q)))


# ---------------------------------------------------------------------------
# Feasibility of a single time-homogeneous Markov competitor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Constraint:
    """One requirement: after ``steps`` applications of the unknown w,
    the input pair must map to the output pair."""

    p_in: tuple[float, float]
    p_out: tuple[float, float]
    steps: int = 1

    def __post_init__(self):
        object.__setattr__(self, "p_in", tuple(
            float(v) for v in _check_probability_pair(self.p_in)))
        object.__setattr__(self, "p_out", tuple(
            float(v) for v in _check_probability_pair(self.p_out)))
        if self.steps < 1:
            raise ValueError("steps must be >= 1")


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of the search: a witness matrix or a certificate string."""

    feasible: bool
    w: StochasticMatrix | None
    residual: float
    certificate: str | None

    def __bool__(self) -> bool:
        return self.feasible


def _as_constraints(step_maps) -> list[Constraint]:
    out = []
    for item in step_maps:
        if isinstance(item, Constraint):
            out.append(item)
        elif len(item) == 2:
            out.append(Constraint(item[0], item[1]))
        else:
            out.append(Constraint(item[0], item[1], int(item[2])))
    if not out:
        raise ValueError("need at least one constraint")
    return out


def _residual(a: float, b: float, constraints) -> float:
    w = np.array([[a, b], [1.0 - a, 1.0 - b]])
    worst = 0.0
    for c in constraints:
        p = np.array(c.p_in)
        for _ in range(c.steps):
            p = w @ p
        worst = max(worst, float(np.max(np.abs(p - np.array(c.p_out)))))
    return worst


def _grid_residuals(constraints, resolution: float):
    """Vectorized residual over the (a, b) grid; returns (a, b, R) arrays."""
    ticks = np.linspace(0.0, 1.0, int(round(1.0 / resolution)) + 1)
    a, b = np.meshgrid(ticks, ticks, indexing="ij")
    worst = np.zeros_like(a)
    for c in constraints:
        p0, p1 = c.p_in
        x, y = np.full_like(a, p0), np.full_like(a, p1)
        for _ in range(c.steps):
            x, y = a * x + b * y, (1.0 - a) * x + (1.0 - b) * y
        err = np.maximum(np.abs(x - c.p_out[0]), np.abs(y - c.p_out[1]))
        worst = np.maximum(worst, err)
    return ticks, worst


def _forced_columns(constraints):
    """Solve the 1-step constraints for (a, b) when they pin a unique
    point: each gives the line a p_in[0] + b p_in[1] = p_out[0]."""
    rows, rhs = [], []
    for c in constraints:
        if c.steps == 1:
            rows.append([c.p_in[0], c.p_in[1]])
            rhs.append(c.p_out[0])
    if not rows:
        return None, None
    mat = np.array(rows)
    vec = np.array(rhs)
    sol, *_ = np.linalg.lstsq(mat, vec, rcond=None)
    gap = float(np.max(np.abs(mat @ sol - vec)))
    if gap > 1e-12:
        return None, ("the one-step requirements alone are mutually "
                      "inconsistent as linear conditions on the columns")
    if np.linalg.matrix_rank(mat, tol=1e-12) < 2:
        return None, None  # consistent but underdetermined
    return (float(sol[0]), float(sol[1])), None


def markov_feasibility(step_maps, resolution: float = 1e-3,
                       tol: float = 1e-6) -> FeasibilityResult:
    """Search all 2×2 column-stochastic matrices for one satisfying
    every (input, output, steps) requirement.

    The family is two-dimensional: w = [[a, b], [1−a, 1−b]].  One-step
    requirements are linear in (a, b); when they pin a unique point,
    the remaining requirements are checked there directly, producing an
    exact forcing certificate on failure.  Otherwise an exhaustive grid
    at the given resolution plus local refinement either exhibits a
    witness with residual ≤ tol or certifies infeasibility through a
    Lipschitz covering bound (each n-step map moves at distance at most
    2n per unit parameter step).
    """
    constraints = _as_constraints(step_maps)

    forced, inconsistency = _forced_columns(constraints)
    if inconsistency is not None:
        return FeasibilityResult(False, None, math.inf,
                                 "infeasible: " + inconsistency)
    if forced is not None:
        a, b = forced
        if not (-_COLUMN_TOL <= a <= 1 + _COLUMN_TOL
                and -_COLUMN_TOL <= b <= 1 + _COLUMN_TOL):
            return FeasibilityResult(
                False, None, math.inf,
                f"infeasible: the one-step requirements force columns "
                f"({a:.6g}, {1 - a:.6g}) and ({b:.6g}, {1 - b:.6g}), "
                "outside [0, 1]")
        a, b = min(max(a, 0.0), 1.0), min(max(b, 0.0), 1.0)
        residual = _residual(a, b, constraints)
        if residual <= tol:
            return FeasibilityResult(True, StochasticMatrix.from_params(a, b),
                                     residual, None)
        bad = max(constraints,
                  key=lambda c: _residual(a, b, [c]))
        p = np.array(bad.p_in)
        w = np.array([[a, b], [1.0 - a, 1.0 - b]])
        for _ in range(bad.steps):
            p = w @ p
        return FeasibilityResult(
            False, None, residual,
            "infeasible: the one-step requirements force both columns — "
            f"w = [[{a:.6g}, {b:.6g}], [{1 - a:.6g}, {1 - b:.6g}]] — and "
            f"then {bad.steps} step(s) send {bad.p_in} to "
            f"({p[0]:.6g}, {p[1]:.6g}) instead of {bad.p_out}")

    ticks, worst = _grid_residuals(constraints, resolution)
    idx = np.unravel_index(int(np.argmin(worst)), worst.shape)
    start = np.array([ticks[idx[0]], ticks[idx[1]]])
    refine = optimize.minimize(
        lambda ab: _residual(ab[0], ab[1], constraints), start,
        method="Nelder-Mead",
        bounds=[(0.0, 1.0), (0.0, 1.0)],
        options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 2000})
    a, b = refine.x
    residual = _residual(float(a), float(b), constraints)
    if residual <= tol:
        return FeasibilityResult(
            True, StochasticMatrix.from_params(float(a), float(b)),
            residual, None)
    grid_min = float(np.min(worst))
    lipschitz = 2.0 * max(c.steps for c in constraints)
    margin = grid_min - lipschitz * (ticks[1] - ticks[0])
    certificate = (
        f"infeasible: exhaustive grid at resolution {ticks[1] - ticks[0]:.3g} "
        f"has minimum residual {grid_min:.6g}; with parameter Lipschitz "
        f"constant {lipschitz:.3g} every matrix in the family keeps residual "
        f"above {margin:.6g}" if margin > tol else
        f"no matrix found: best refined residual {residual:.6g} exceeds "
        f"{tol:.1g} but the covering bound is inconclusive")
    return FeasibilityResult(False, None, residual, certificate)


# ---------------------------------------------------------------------------
# Interference table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InterferenceRow:
    """One comparison row: unitary-theory outcome probabilities versus
    the matched Markov competitor, and their total-variation gap."""

    step: int
    quantum: tuple[float, float]
    markov: tuple[float, float]
    gap: float


def interference_demo(steps: int = 2,
                      unitary: ToyUnitary | None = None) -> list:
    """Track (1, 0) under the unitary theory against the one Markov
    chain that reproduces its single-step law.

    The competitor's columns are the unitary's one-step outcome
    distributions of the two basis states — the only time-homogeneous
    stochastic matrix matching the theory (not just one trajectory) for
    one step.  For the equal-weight involution the quantum walk returns
    to (1, 0) at step 2 while the forced competitor stays at (½, ½):
    total-variation gap ½.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    s = ToyUnitary.hadamard() if unitary is None else unitary
    w = StochasticMatrix(np.abs(s.entries) ** 2)

    psi = np.array([1.0 + 0j, 0.0 + 0j])
    p = np.array([1.0, 0.0])
    rows = []
    for step in range(steps + 1):
        quantum = tuple(float(v) for v in np.abs(psi) ** 2)
        markov = tuple(float(v) for v in p)
        rows.append(InterferenceRow(step, quantum, markov,
                                    total_variation(quantum, markov)))
        psi = s.entries @ psi
        p = w.entries @ p
    return rows
