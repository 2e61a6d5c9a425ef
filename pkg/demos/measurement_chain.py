"""The measurement pipeline: entangle, reduce, decohere, sample.

A measurement couples the object to an apparatus, traces the object
out, kills the cross terms between pointer sectors, and reads off
outcome statistics.  Every step here is exact linear algebra, so each
claim can be checked to machine precision:

- the reduced apparatus state carries the branch weights on its
  diagonal;
- decoherence projects onto the block diagonal, preserves the trace,
  and never increases purity;
- sampling the decohered state reproduces the weights within binomial
  error bars;
- operators that respect a charge split have exactly zero cross-sector
  elements, and a full turn sends a boson-fermion superposition to an
  orthogonal ray.
"""

import numpy as np

from thermofock.measurement import (
    SectorStructure,
    charge_commutator_norm,
    decohere,
    entangle,
    purity,
    random_density,
    reduced_density,
    rotation_2pi,
    sample_outcomes,
    sector_defect,
)

print("=" * 70)
print("1. Branch weights survive the reduction")
print("=" * 70)
amplitudes = np.array([0.36, 0.48, 0.80])
amplitudes = amplitudes / np.linalg.norm(amplitudes)
state = entangle(amplitudes)
rho = reduced_density(state, "apparatus")
print(f"  branch weights |c_k|^2: {np.round(np.abs(amplitudes)**2, 6)}")
print(f"  reduced diagonal:       {np.round(np.diag(rho.matrix).real, 6)}")
print(f"  purity before decoherence: {purity(rho):.6f}")

print()
print("=" * 70)
print("2. Decoherence = exact block projection")
print("=" * 70)
sectors = SectorStructure.singletons(3)
diagonal = decohere(rho, sectors)
print(f"  off-diagonal maximum after: {diagonal.off_diagonal_max():.1e}")
print(f"  purity after:  {purity(diagonal):.6f}  (never above before)")
rng = np.random.default_rng(42)
drops = [purity(random_density(4, rng)) for _ in range(3)]
print(f"  spot check, random 4x4 states: purities {np.round(drops, 4)}")

print()
print("=" * 70)
print("3. Sampling the pointer")
print("=" * 70)
table = sample_outcomes(diagonal, n=100000, seed=9)
for k in range(3):
    print(f"  outcome {k}: frequency {table.frequencies[k]:.5f}, "
          f"probability {table.probabilities[k]:.5f}, "
          f"within 3 sigma: {bool(table.within_3_sigma()[k])}")

print()
print("=" * 70)
print("4. Charge sectors are walls")
print("=" * 70)
charge_split = SectorStructure(sectors={"even": (0, 1), "odd": (2, 3)},
                               charges={"even": 0.0, "odd": 1.0})
op = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
op[np.ix_((0, 1), (2, 3))] = 0.0
op[np.ix_((2, 3), (0, 1))] = 0.0
print(f"  block-diagonal operator: cross-sector defect "
      f"{sector_defect(op, charge_split)}")
print(f"  commutator with the charge: "
      f"{charge_commutator_norm(op, charge_split)}")
psi = np.array([1.0, 1.0]) / np.sqrt(2.0)
rotated = rotation_2pi(psi, (0.0, 0.5))
print(f"  equal-weight integer/half-integer state, full turn:")
print(f"    before {np.round(psi, 6)},  after {np.round(rotated, 6)}")
overlap = abs(sum(complex(a).conjugate() * complex(b)
                  for a, b in zip(psi, rotated)))
print(f"    overlap: {overlap}  (the superposition is not a state)")
