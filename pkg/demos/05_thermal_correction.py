"""Low-temperature thermal correction: universal T^4 law at D = 3.

Delta_T E = E(T) - E_0 is computed by differencing the Matsubara sum against
the frequency integral angular number by angular number, which cancels the
huge common part analytically-in-spirit and leaves the tiny correction at
full precision.  The leading term is (pi^3/15) a1^3 T^4 for every boundary
combination -- independent of the outer sphere entirely -- while the TM and
TE channels split it as +2 : -1 when the inner sphere conducts.
"""

import math

from casimir_spheres import (BoundaryCondition, BoundaryPair, Geometry,
                             TruncationPolicy, thermal_correction,
                             thermal_leading)

print(__doc__)

PC = BoundaryCondition.PERFECTLY_CONDUCTING
IP = BoundaryCondition.INFINITELY_PERMEABLE
g = Geometry.from_eps(0.1, 3)
policy = TruncationPolicy(rel_tol=1e-9)
target = math.pi ** 3 / 15
print(f"pi^3/15 = {target:.6f}\n")
print("Delta_T E / T^4 at eps = 0.1, D = 3:")
print("  pair    T=0.05      T=0.08      T=0.12")
for name, bp in (("pc,pc", BoundaryPair(PC, PC)), ("pc,ip", BoundaryPair(PC, IP)),
                 ("ip,pc", BoundaryPair(IP, PC)), ("ip,ip", BoundaryPair(IP, IP))):
    row = [thermal_correction(g, bp, None, T, policy).value / T ** 4
           for T in (0.05, 0.08, 0.12)]
    print(f"  {name}  " + "  ".join(f"{v:10.6f}" for v in row))

print("\nconducting inner sphere, per channel at T = 0.05:")
res = thermal_correction(g, BoundaryPair(PC, PC), None, 0.05, policy)
te, tm = res.per_channel["TE"], res.per_channel["TM"]
print(f"  TE: {te:+.4e}   TM: {tm:+.4e}   ratio TM/TE = {tm / te:.4f} (leading: -2)")

print("\nclosed-form leading terms (independent of the outer sphere):")
for dim in (3, 4, 5):
    for bc in (PC, IP):
        v = thermal_leading(dim, bc, None, 1.0, 0.05)
        print(f"  D={dim}, inner {bc.value}: {v:+.4e}")
