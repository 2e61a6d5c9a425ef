"""From a uniform sphere to a thermal plane, and out to radiation laws.

A sphere of area h carries exactly one cell of phase space, so "pick a
point uniformly" is a legitimate probability rule.  Mapping the sphere
onto the plane with a measure-preserving stereographic-style map turns
that uniform rule into the thermal weight of a harmonic degree of
freedom.  This script shows the pipeline end to end:

- cap areas match disk masses exactly under the measure-preserving map;
- sampled radii pass a Kolmogorov–Smirnov test against the radial law;
- the thermal normalization integrates to one, and the mean energy
  lands on the classical value;
- summing independent modes gives a spectral density with the right
  high- and low-frequency limits;
- shrinking the area quantum freezes the thermal motion.
"""

import numpy as np

from thermofock.sphere import (
    Disk,
    SpherePoint,
    ThermalOscillator,
    cap_area_fraction,
    classical_limit_table,
    gibbs_median_radius,
    gibbs_normalization_check,
    limit_ratios,
    mean_energy,
    pushforward_ks_statistic,
    region_probability,
    thermal_map_exact,
)

BETA = 1.0

print("=" * 70)
print("1. Caps map to disks of equal mass")
print("=" * 70)
osc = ThermalOscillator(beta=BETA)
for theta in (0.5, 1.0, 2.0):
    z = thermal_map_exact(SpherePoint(theta, 0.3), beta=BETA)
    cap = cap_area_fraction(theta)
    disk = region_probability(Disk(abs(z)), osc)
    print(f"  polar angle {theta:.1f}:  cap fraction {cap:.10f},  "
          f"disk mass {disk:.10f}")

print()
print("=" * 70)
print("2. Sampled radii against the radial law")
print("=" * 70)
ks = pushforward_ks_statistic(beta=BETA, n=100000, seed=7)
print(f"  KS statistic at n = 1e5: {ks:.5f}  (threshold 0.01)")

print()
print("=" * 70)
print("3. Normalization and mean energy")
print("=" * 70)
mass = gibbs_normalization_check(osc)
print(f"  quadrature mass: {mass:.12f}  (analytic 1)")
mc, stderr = mean_energy(osc, method="monte_carlo", n=200000, seed=3)
print(f"  Monte Carlo mean energy: {mc:.6f} +- {stderr:.6f}  "
      f"(target {1.0 / BETA})")
median = gibbs_median_radius(osc)
half = region_probability(Disk(median), osc)
print(f"  median-radius disk holds {half:.10f} of the mass")

print()
print("=" * 70)
print("4. Spectral density limits")
print("=" * 70)
print("  x = (energy gap)/(temperature); ratios of the full density")
print(f"  {'x':>8s} {'vs high-freq law':>18s} {'vs low-freq law':>18s}")
for x in (0.01, 0.1, 1.0, 10.0):
    wien, rj = limit_ratios(x, 1.0)
    print(f"  {x:8.2f} {wien:18.10f} {rj:18.10f}")
print("  -> 1 on the right end at high x, 1 on the left end at low x.")

print()
print("=" * 70)
print("5. Shrinking the area quantum freezes the motion")
print("=" * 70)
print(f"  {'area quantum/2pi':>18s} {'temperature':>14s} {'rms radius':>12s}")
for hbar, temp, radius in classical_limit_table([1.0, 0.1, 0.01], 1.0):
    print(f"  {hbar:18.3g} {temp:14.3g} {radius:12.4f}")
print("  Thermal spread vanishes with the quantum: the classical limit")
print("  is a frozen point, not a recovered classical ensemble.")
