"""Decomposed double vector bundles: the two additions, the pairing of the
two duals, and the canonical Z-maps.

Run with:  python3 demos/02_double_vector_bundles.py
"""

from fractions import Fraction

from liedouble import (DecomposedDVB, check_interchange,
                       check_pairing_nondegenerate, check_zmaps,
                       cotangent_model, dvb_add)

D = DecomposedDVB(dim_h=2, dim_v=2, dim_k=1)

print("== elements carry a horizontal part, a vertical part and a core ==")
a = D.element((1, 0), (2, 3), (5,))
b = D.element((1, 0), (1, 1), (7,))
print("vertical sum:", dvb_add("vertical", a, b))

print()
print("== interchange law (verified symbolically in all coordinates) ==")
print(check_interchange(D).to_text())

print()
print("== pairing of the vertical and horizontal duals ==")
kappa = (Fraction(1),)
Phi = D.dual_v((1, 0), kappa, (2, -1))
Psi = D.dual_h((0, 3), kappa, (1, 1))
xi = D.element(Phi.h, Psi.v, (9,))          # any core works
print("<Phi, Psi> =", D.pair_duals(Phi, Psi, xi))
print(check_pairing_nondegenerate(D).to_text())

print()
print("== Z-maps: the duals pairing against the canonical pairings ==")
print(check_zmaps(D).to_text())
print(check_zmaps(DecomposedDVB(2, 2, 1, sign="minus")).to_text())

print()
print("== the cotangent model T*(A) with its evaluation identity ==")
print(cotangent_model(n=2, d=2).check_vue().to_text())
