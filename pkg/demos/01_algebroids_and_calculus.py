"""A tour of the symbolic core: exact polynomials, Lie algebroids and the
Cartan calculus on their sections.

Run with:  python3 demos/01_algebroids_and_calculus.py
"""

from fractions import Fraction

from liedouble import (LieAlgebroid, MultiSection, Polynomial, bracket_sections,
                       check_axioms, differential, lie_derivative, schouten)

x = Polynomial.var("x")

print("== exact polynomial arithmetic ==")
p = x ** 2 - Fraction(1, 2) * x
print("p       =", p)
print("dp/dx   =", p.diff("x"))
print("p(x=2)  =", p.evaluate({"x": 2}))

print()
print("== sl(2) as a Lie algebroid over a point ==")
sl2 = LieAlgebroid.lie_algebra(
    3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}, name="sl2")
print(check_axioms(sl2).to_text())

print()
print("== the tangent algebroid of a line: brackets are Leibniz-extended ==")
T = LieAlgebroid.tangent(("x",))
e = T.frame_section(0)
print("[x*e, e] =", [str(c) for c in bracket_sections(T, [x], e)],
      " (the second slot differentiates x)")

print()
print("== Cartan differential on the dual frame of aff(1) ==")
aff = LieAlgebroid.lie_algebra(2, {(0, 1): [0, 1]}, name="aff1")
eps2 = MultiSection(2, 1, {(1,): Polynomial.one()})
print("d eps2 =", differential(aff, eps2), "  (detects [e1,e2] = e2)")

print()
print("== Schouten bracket: [H, E ^ F] vanishes for sl(2) ==")
H = MultiSection.from_section(3, sl2.frame_section(0))
EF = MultiSection(3, 2, {(1, 2): Polynomial.one()})
print("[H, E^F] =", schouten(sl2, H, EF))

print()
print("== Lie derivative along H of the wedge E ^ F ==")
print("L_H (E^F) =", lie_derivative(sl2, sl2.frame_section(0), EF))
