"""Angular mode counting in D space dimensions.

Each angular number l >= 1 carries one TM multiplet family and (D-2) TE
families; their sizes are ratios of factorials that collapse to 2l+1 for
both at D = 3.  The small-gap expansions need the same counts as exact
polynomials in nu = l + (D-2)/2, so the library expands the factorial
ratios symbolically; this script prints both representations and the Robin
coefficient table that encodes the boundary conditions.
"""

from casimir_spheres import (BoundaryCondition, Channel, bc_coefficients,
                             degeneracy, degeneracy_polynomial)

print(__doc__)

print("degeneracies b_l (TM) and h_l (TE):")
print("  D\\l |" + "".join(f"{l:>8}" for l in range(1, 7)))
for dim in (3, 4, 5, 7, 10):
    btm = [degeneracy(Channel.TM, l, dim) for l in range(1, 7)]
    hte = [degeneracy(Channel.TE, l, dim) for l in range(1, 7)]
    print(f"  {dim:>3} |" + "".join(f"{b:>8}" for b in btm) + "   (TM)")
    print("      |" + "".join(f"{h:>8}" for h in hte) + "   (TE)")

print("\npolynomial expansion in nu (exact rationals, index = power):")
for dim in (3, 4, 6):
    for ch in (Channel.TE, Channel.TM):
        poly = degeneracy_polynomial(ch, dim)
        coeffs = {j: str(c) for j, c in enumerate(poly.coefficients) if c}
        print(f"  D={dim} {ch.value}: {coeffs}")

print("\nRobin coefficients (alpha, beta) per mode type and wall:")
for ch in (Channel.TE, Channel.TM):
    for bc in BoundaryCondition:
        for dim in (3, 4, 6):
            a, b = bc_coefficients(ch, bc, dim)
            print(f"  {ch.value} on {bc.value} wall, D={dim}: "
                  f"(alpha, beta) = ({a}, {b})")
