"""Why a two-state walk with interference cannot be a Markov chain.

A balanced unitary sends either basis state to a 50/50 mixture in one
step, yet returns it exactly in two: the amplitudes cancel.  Any
column-stochastic matrix matching the one-step statistics is pinned
to the flat matrix, which then fails the two-step requirement.  The
feasibility search below does not hand-wave this: over the full
two-parameter family of 2x2 stochastic matrices it either exhibits a
witness or produces a concrete certificate of infeasibility.

- the interference table shows where amplitudes and probabilities part
  ways;
- a satisfiable requirement set yields an explicit witness matrix;
- the walk's own requirement set yields a forced-columns certificate
  with the exact residual.
"""

from thermofock.toy import (
    Constraint,
    StochasticMatrix,
    interference_demo,
    markov_feasibility,
    markov_step,
)

print("=" * 70)
print("1. The interference table")
print("=" * 70)
print(f"  {'step':>4s} {'amplitude walk':>22s} {'best flat chain':>22s}"
      f" {'gap':>8s}")
for row in interference_demo(steps=4):
    quantum = f"({row.quantum[0]:.3f}, {row.quantum[1]:.3f})"
    markov = f"({row.markov[0]:.3f}, {row.markov[1]:.3f})"
    print(f"  {row.step:>4d} {quantum:>22s} {markov:>22s} {row.gap:8.3f}")
print("  The chain built from squared entries tracks step 1 and never")
print("  recovers the return at step 2.")

print()
print("=" * 70)
print("2. A satisfiable requirement set has a witness")
print("=" * 70)
target = StochasticMatrix.from_params(0.3, 0.7)
requirements = [
    Constraint((1.0, 0.0), tuple(markov_step((1.0, 0.0), target)), steps=1),
    Constraint((0.2, 0.8), tuple(markov_step((0.2, 0.8), target)), steps=1),
]
found = markov_feasibility(requirements)
print(f"  feasible: {found.feasible}, residual {found.residual:.2e}")
print(f"  witness columns: a = {found.w.params[0]:.6f}, "
      f"b = {found.w.params[1]:.6f}  (planted 0.3, 0.7)")

print()
print("=" * 70)
print("3. The walk's requirements are infeasible, with a certificate")
print("=" * 70)
walk = [
    Constraint((1.0, 0.0), (0.5, 0.5), steps=1),
    Constraint((0.0, 1.0), (0.5, 0.5), steps=1),
    Constraint((1.0, 0.0), (1.0, 0.0), steps=2),
    Constraint((0.0, 1.0), (0.0, 1.0), steps=2),
]
verdict = markov_feasibility(walk)
print(f"  feasible: {verdict.feasible}")
print(f"  best residual: {verdict.residual:.3f}")
print(f"  certificate: {verdict.certificate}")
