"""Polynomial Poisson algebras and their interplay with Lie algebroids.

Bivectors are stored as antisymmetric coordinate tables; every bracket of
general polynomials goes through the bivector formula, so the table is
the single source of truth.  The linear Poisson structure on the dual of
an algebroid, the cotangent algebroid of a Poisson structure, and the
tangent lift are all produced here.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .poly import Polynomial, poly, ZERO
from .report import CheckReport
from .algebroid import LieAlgebroid, check_axioms


class PoissonAlgebra:
    """Polynomial Poisson algebra given by an antisymmetric bivector table."""

    def __init__(self, variables: Sequence[str], bivector: Mapping | None = None,
                 name: str = ""):
        self.vars = tuple(variables)
        self.name = name
        self._index = {v: i for i, v in enumerate(self.vars)}
        self.table = {}
        if bivector:
            for (a, b), val in bivector.items():
                val = poly(val)
                if a not in self._index or b not in self._index:
                    raise ValueError("unknown coordinate in bivector: (%s,%s)" % (a, b))
                if a == b:
                    if not val.is_zero:
                        raise ValueError("bivector not antisymmetric at (%s,%s)" % (a, b))
                    continue
                if self._index[a] > self._index[b]:
                    a, b, val = b, a, -val
                prev = self.table.get((a, b))
                if prev is not None and not (prev - val).is_zero:
                    raise ValueError("bivector not antisymmetric at (%s,%s)" % (a, b))
                if not val.is_zero:
                    self.table[(a, b)] = val

    def pi(self, a: str, b: str) -> Polynomial:
        if self._index[a] < self._index[b]:
            return self.table.get((a, b), ZERO)
        if a == b:
            return ZERO
        return -self.table.get((b, a), ZERO)

    def __eq__(self, other):
        if not isinstance(other, PoissonAlgebra):
            return NotImplemented
        if self.vars != other.vars:
            return False
        keys = set(self.table) | set(other.table)
        return all((self.pi(a, b) - other.pi(a, b)).is_zero for a, b in keys)


def poisson_bracket(P: PoissonAlgebra, f, g) -> Polynomial:
    f, g = poly(f), poly(g)
    total = ZERO
    for (a, b), pab in P.table.items():
        total = total + pab * (f.diff(a) * g.diff(b) - f.diff(b) * g.diff(a))
    return total


def check_jacobi_poisson(P: PoissonAlgebra) -> CheckReport:
    """Jacobi identity on all coordinate triples, exactly."""
    out = CheckReport("poisson-jacobi%s" % (":" + P.name if P.name else ""))
    n = len(P.vars)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = P.vars[i], P.vars[j], P.vars[k]
                res = (poisson_bracket(P, Polynomial.var(a), P.pi(b, c))
                       + poisson_bracket(P, Polynomial.var(b), P.pi(c, a))
                       + poisson_bracket(P, Polynomial.var(c), P.pi(a, b)))
                out.require("jacobi(%s,%s,%s)" % (a, b, c), res)
    return out


def _fresh_fiber_names(prefix, count, taken):
    out, i = [], 1
    while len(out) < count:
        v = "%s%d" % (prefix, i)
        if v not in taken:
            out.append(v)
        i += 1
    return out


def linear_dual_poisson(A: LieAlgebroid, fiber_prefix: str = "u") -> PoissonAlgebra:
    """Fiberwise-linear Poisson structure on the dual of an algebroid.

    Characterized by {u_i, u_j} = C^k_{ij} u_k, {u_i, f} = a(e_i)(f) and
    {f, g} = 0 for base functions; the Jacobiator of the result vanishes
    exactly when the algebroid axioms hold, so no validity gate is applied
    here.
    """
    fib = _fresh_fiber_names(fiber_prefix, A.rank, set(A.base_vars))
    variables = tuple(A.base_vars) + tuple(fib)
    table = {}
    for i in range(A.rank):
        for j in range(i + 1, A.rank):
            cij = A.struct(i, j)
            val = sum((cij[k] * Polynomial.var(fib[k]) for k in range(A.rank)), ZERO)
            if not val.is_zero:
                table[(fib[i], fib[j])] = val
        for mu, v in enumerate(A.base_vars):
            if not A.anchor[i][mu].is_zero:
                table[(fib[i], v)] = A.anchor[i][mu]
    return PoissonAlgebra(variables, table, name=A.name and "dual(%s)" % A.name)


def cotangent_algebroid(P: PoissonAlgebra) -> LieAlgebroid:
    """Cotangent Lie algebroid of a Poisson structure: frame dx^a, anchor
    pi#, and the Koszul bracket [dx^a, dx^b] = d{x^a, x^b}."""
    rep = check_jacobi_poisson(P)
    if not rep.passed:
        raise ValueError("Poisson structure fails Jacobi; refusing cotangent "
                         "algebroid (%s)" % rep.witnesses[0].identity)
    n = len(P.vars)
    anchor = [[P.pi(a, b) for b in P.vars] for a in P.vars]
    structure = {}
    for i in range(n):
        for j in range(i + 1, n):
            pab = P.pi(P.vars[i], P.vars[j])
            entry = [pab.diff(c) for c in P.vars]
            if any(not e.is_zero for e in entry):
                structure[(i, j)] = entry
    names = tuple("d%s" % v for v in P.vars)
    return LieAlgebroid(P.vars, n, anchor=anchor, structure=structure,
                        frame_names=names,
                        name=P.name and "cotangent(%s)" % P.name)


def tangent_lift_poisson(P: PoissonAlgebra, dot_suffix: str = "dot") -> PoissonAlgebra:
    """Tangent lift on doubled coordinates (x, xdot), computed from the
    vertical/complete-lift generator relations."""
    rep = check_jacobi_poisson(P)
    if not rep.passed:
        raise ValueError("Poisson structure fails Jacobi; refusing tangent lift")
    dots = ["%s%s" % (v, dot_suffix) for v in P.vars]
    if set(dots) & set(P.vars):
        raise ValueError("dotted coordinate names collide with base names")
    table = {}
    for i, a in enumerate(P.vars):
        for j, b in enumerate(P.vars):
            pab = P.pi(a, b)
            if i < j and not pab.is_zero:
                # {a^c, b^v} with a^c = adot: {adot, b} = pi^{ab} pulled back
                table[(dots[i], b)] = pab
                # complete lift on the dotted pair
                lift = sum((Polynomial.var(dots[m]) * pab.diff(P.vars[m])
                            for m in range(len(P.vars))), ZERO)
                if not lift.is_zero:
                    table[(dots[i], dots[j])] = lift
            elif i > j and not pab.is_zero:
                table[(dots[i], b)] = pab
    return PoissonAlgebra(tuple(P.vars) + tuple(dots), table,
                          name=P.name and "lift(%s)" % P.name)


class PolyMap:
    """Polynomial map between Poisson coordinate algebras."""

    def __init__(self, source: PoissonAlgebra, target: PoissonAlgebra,
                 components: Mapping, name: str = ""):
        self.source, self.target = source, target
        self.name = name
        self.components = {v: poly(c) for v, c in components.items()}
        missing = set(target.vars) - set(self.components)
        if missing:
            raise ValueError("map is missing components for %s" % sorted(missing))

    @staticmethod
    def identity(P: PoissonAlgebra) -> "PolyMap":
        return PolyMap(P, P, {v: Polynomial.var(v) for v in P.vars}, name="id")

    def pull(self, f) -> Polynomial:
        """f o m: substitute the component expressions into f."""
        return poly(f).substitute(self.components)


def check_poisson_map(m: PolyMap, sign: str = "poisson") -> CheckReport:
    """{f o m, g o m}_source = +/- {f, g}_target o m on coordinate pairs."""
    if sign not in ("poisson", "anti"):
        raise ValueError("sign must be 'poisson' or 'anti'")
    s = 1 if sign == "poisson" else -1
    out = CheckReport("%s-map%s" % (sign, ":" + m.name if m.name else ""))
    tv = m.target.vars
    for i in range(len(tv)):
        for j in range(i + 1, len(tv)):
            lhs = poisson_bracket(m.source, m.pull(Polynomial.var(tv[i])),
                                  m.pull(Polynomial.var(tv[j])))
            rhs = m.pull(m.target.pi(tv[i], tv[j]))
            out.require("bracket(%s,%s)" % (tv[i], tv[j]), lhs - s * rhs)
    return out
