"""Radial blow-up on the disk: shooting, Pohozaev checks, quantized masses.

Shooting the radial equation u'' + u'/r + h1 e^u - h2 e^{-2u} = 0 from a
large central value alpha produces a sharpening bubble whose local masses
(sigma1, sigma2) approach the quantized blow-up lattice: admissible limits
satisfy (sigma1 - sigma2)^2 = 4 (sigma1 + sigma2/2) with sigma1 in 4N and
sigma2 in 2N.  The Pohozaev identity holds exactly along true solutions,
so its residual measures nothing but integration error.
"""

from tzlab import (alpha_sweep, classify_mass_pair, limit_mass_relation,
                   pohozaev_residual_profile, quantization_table, shoot)

print("-- the admissible mass lattice (m in [-2, 3]) --")
for mp in quantization_table(-2, 3):
    s1, s2 = int(mp.sigma1), int(mp.sigma2)
    print(f"   {mp.label:10s} (sigma1, sigma2) = ({s1:3d}, {s2:3d})   "
          f"relation = {limit_mass_relation(s1, s2)}")

print("\n-- a Liouville bubble forming (h2 = 0) --")
rows = alpha_sweep((4.0, 6.0, 8.0, 10.0, 12.0), h1=1.0, h2=0.0, step=2e-4)
print("   alpha   sigma1(1)   distance to (4,0)   classified")
for row in rows:
    print(f"   {row.alpha:5.1f}   {row.sigma1:.6f}   {row.distance:.6f}            "
          f"{'TypeI(1)' if row.family == 'I' else 'none'}")
print("   sigma1 climbs monotonically toward the quantum 4.")

print("\n-- Pohozaev residual is pure integration error --")
for step in (1e-3, 5e-4, 2.5e-4):
    prof = shoot(8.0, 1.0, 1.0, 1.0, step)
    res, lhs = pohozaev_residual_profile(prof)
    print(f"   step {step:7.1e}: |residual| at r=1 is {abs(res[-1]):.3e}")
print("   each halving divides it by ~16: the integrator is fourth order.")

print("\n-- both species active (h1 = h2 = 1) --")
prof = shoot(12.0, 1.0, 1.0, 1.0, 1e-4)
s1, s2 = float(prof.sigma1[-1]), float(prof.sigma2[-1])
mp = classify_mass_pair(s1, s2, tol=0.05)
print(f"   alpha=12: (sigma1, sigma2)(1) = ({s1:.4f}, {s2:.4f})")
print(f"   hyperbola relation value = {limit_mass_relation(s1, s2):+.4f}")
print(f"   nearest admissible pair: {mp.label} at distance {mp.distance:.4f}")
print("   finite-alpha profiles sit near, not on, the asymptotic lattice.")
