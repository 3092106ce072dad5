"""The classical (zeroth Matsubara) term and its small-gap series.

At a2 T >> 1 the free energy collapses onto T times an elementary series
over angular numbers -- no Bessel functions at all -- which makes it the
cheapest place to probe the expansions deeply.  Shown here:

* the free energy converging onto T * classical as T grows;
* the homogeneous D=3 series with its eps^2 log eps correction;
* the mixed-boundary D=3 fit that pins the log term to eps^2 log eps with
  coefficient -2/(3 zeta(3)), and the opposite-sign eps log 2 terms the TE
  and TM channels carry.
"""

import json
import math

from casimir_spheres import (BoundaryCondition, BoundaryPair, Geometry,
                             TruncationPolicy, classical_term, free_energy,
                             high_T_expansion, riemann_zeta)
from casimir_spheres.selftest import fit_mixed_log_reading

print(__doc__)

PC = BoundaryCondition.PERFECTLY_CONDUCTING
IP = BoundaryCondition.INFINITELY_PERMEABLE
g = Geometry.from_eps(0.2, 3)
cl = classical_term(g, BoundaryPair(PC, PC))
print("free energy vs T * classical at eps = 0.2, D = 3:")
for T in (0.5, 1.0, 2.0, 5.0, 20.0):
    e = free_energy(g, BoundaryPair(PC, PC), None, T, TruncationPolicy(rel_tol=1e-8))
    print(f"  a1 T = {T:>4}: E = {e.value:+.6e}   T*classical = "
          f"{T * cl.value:+.6e}   ratio = {e.value / (T * cl.value):.6f}")

z3 = riemann_zeta(3.0)
print("\nhomogeneous D=3 series: 1 + eps + 11/(6 zeta3) eps^2 ln eps")
for eps in (0.1, 0.03, 0.01):
    res = classical_term(Geometry.from_eps(eps, 3), BoundaryPair(PC, PC),
                         policy=TruncationPolicy(rel_tol=1e-12, l_max_hard=10 ** 5))
    ratio = 2 * eps ** 2 * res.value / (-z3)
    series = 1 + eps + 11 / (6 * z3) * eps ** 2 * math.log(eps)
    print(f"  eps={eps:>5}: exact ratio {ratio:.8f}   series {series:.8f}")

print("\nmixed D=3 channel slopes (note the 8 ln2 / (3 zeta3) = 1.5377 split):")
ht_te = high_T_expansion(3, BoundaryPair(PC, IP), None)
for ch in ("TE", "TM"):
    from casimir_spheres import Channel
    s = high_T_expansion(3, BoundaryPair(PC, IP), Channel[ch])
    print(f"  {ch}: eps-coefficient = {s.coefficient(1):+.6f}")

print("\nlog-term reading fit (the selftest artifact):")
print(json.dumps(fit_mixed_log_reading(), indent=1, sort_keys=True))
