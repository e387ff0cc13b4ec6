"""Lie bialgebroids: the semidirect dual pair of a matched pair, the
tangent/cotangent pair of a Poisson base, and Manin doubles at a point.

Run with:  python3 demos/04_bialgebroids_and_manin.py
"""

from liedouble import (LieAlgebroid, LieBialgebroid, MatchedPair,
                       PoissonAlgebra, Representation, base_poisson,
                       bialgebroid_from_matched_pair, check_bialgebroid,
                       check_manin, check_matched_pair, cotangent_algebroid,
                       manin_double, Polynomial)

A = LieAlgebroid.lie_algebra(2, {(0, 1): [0, 1]}, name="aff1")
B = LieAlgebroid.lie_algebra(2, {}, name="ab2")
rho = Representation(A, 2, [[[1, 0], [0, 0]], [[0, 1], [0, 0]]])
mp = MatchedPair(A, B, rho, Representation.zero(B, 2), name="demo")
check_matched_pair(mp)

print("== (A + B*, A* + B) with the signed duality pairing ==")
bi = bialgebroid_from_matched_pair(mp)
print(check_bialgebroid(bi).to_text())
print("induced bivector on the base (a point):", base_poisson(bi))

print()
print("== the standard pair: tangent vs cotangent of a Poisson plane ==")
x, y = Polynomial.var("x"), Polynomial.var("y")
P = PoissonAlgebra(("x", "y"), {("x", "y"): x})   # pi = x d/dx ^ d/dy
bi2 = LieBialgebroid(LieAlgebroid.tangent(("x", "y")), cotangent_algebroid(P))
print(check_bialgebroid(bi2).to_text())
print("base_poisson recovers pi(x,y) =", base_poisson(bi2)[("x", "y")])

print()
print("== Manin double of aff(1) with abelian dual ==")
g = LieAlgebroid.lie_algebra(2, {(0, 1): [0, 1]}, name="aff1")
gs = LieAlgebroid.lie_algebra(2, {}, frame_names=("eps1", "eps2"))
md = manin_double(g, gs)
print(check_manin(md).to_text())
print("[e1, eps2] =", [str(c) for c in md.double.struct(0, 3)],
      " (the coadjoint action, note the minus sign)")

print()
print("== an incompatible dual bracket on sl(2)* fails Jacobi ==")
sl2 = LieAlgebroid.lie_algebra(
    3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]})
bad = manin_double(sl2, LieAlgebroid.lie_algebra(3, {(0, 1): [1, 0, 0]}))
print(check_manin(bad).to_text())
