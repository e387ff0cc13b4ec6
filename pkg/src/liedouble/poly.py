"""Exact multivariate polynomial arithmetic over the rationals.

This is the scalar substrate for the whole library: every structure
function, anchor component and residual is a ``Polynomial``.  Coefficients
are :class:`fractions.Fraction`, so every identity check in the other
modules is exact; there is no floating point anywhere.

Representation: a polynomial is a map from exponent multi-indices to
nonzero rational coefficients, over a sorted tuple of variable names.
Variable contexts are unified by name, so ``var('x') + var('y')`` just
works; the empty variable tuple models functions on a point.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]
PolyLike = Union["Polynomial", int, Fraction]


class Polynomial:
    """Multivariate polynomial with Fraction coefficients in canonical form.

    Invariants: ``vars`` is sorted; ``terms`` stores no zero coefficients;
    two polynomials are equal iff their unified canonical forms agree.
    Instances are immutable; all operations return new objects.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[tuple, Scalar] | None = None):
        vs = tuple(variables)
        if list(vs) != sorted(vs):
            raise ValueError("variable list must be sorted: %r" % (vs,))
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable in %r" % (vs,))
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != len(vs):
                    raise ValueError("exponent tuple %r does not match %r" % (exps, vs))
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent in %r" % (exps,))
                c = Fraction(coeff)
                if c != 0:
                    clean[exps] = clean.get(exps, Fraction(0)) + c
            clean = {e: c for e, c in clean.items() if c != 0}
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "Polynomial":
        return Polynomial((), {(): Fraction(c)} if Fraction(c) != 0 else {})

    @staticmethod
    def var(name: str) -> "Polynomial":
        return Polynomial((name,), {(1,): Fraction(1)})

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial.const(1)

    # -- context unification ---------------------------------------------

    def in_vars(self, variables: Iterable[str]) -> "Polynomial":
        """Reindex onto a superset variable tuple (sorted)."""
        vs = tuple(variables)
        if vs == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vs)}
        for v in self.vars:
            if v not in pos:
                raise ValueError("variable %r missing from target context %r" % (v, vs))
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(vs)
            for v, e in zip(self.vars, exps):
                new[pos[v]] = e
            terms[tuple(new)] = c
        return Polynomial(vs, terms)

    @staticmethod
    def unify(p: "Polynomial", q: "Polynomial"):
        vs = tuple(sorted(set(p.vars) | set(q.vars)))
        return p.in_vars(vs), q.in_vars(vs)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(x: PolyLike) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, (int, Fraction)):
            return Polynomial.const(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: PolyLike) -> "Polynomial":
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q = Polynomial.unify(self, other)
        terms = dict(p.terms)
        for e, c in q.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(p.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "Polynomial":
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "Polynomial":
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q = Polynomial.unify(self, other)
        terms: dict = {}
        for e1, c1 in p.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(p.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus --------------------------------------------------------

    def diff(self, var: str) -> "Polynomial":
        """Formal partial derivative; unknown variables differentiate to 0."""
        if var not in self.vars:
            return Polynomial.zero()
        i = self.vars.index(var)
        terms = {}
        for exps, c in self.terms.items():
            if exps[i] == 0:
                continue
            new = list(exps)
            new[i] -= 1
            terms[tuple(new)] = terms.get(tuple(new), Fraction(0)) + c * exps[i]
        return Polynomial(self.vars, terms)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point; every variable must be bound."""
        for v in self.vars:
            if v not in point:
                raise ValueError("unbound variable: %s" % v)
        total = Fraction(0)
        for exps, c in self.terms.items():
            val = c
            for v, e in zip(self.vars, exps):
                if e:
                    val *= Fraction(point[v]) ** e
            total += val
        return total

    def substitute(self, mapping: Mapping[str, PolyLike]) -> "Polynomial":
        """Composition: replace variables by polynomials (others survive)."""
        result = Polynomial.zero()
        for exps, c in self.terms.items():
            term = Polynomial.const(c)
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                repl = mapping.get(v)
                if repl is None:
                    repl = Polynomial.var(v)
                else:
                    repl = Polynomial._coerce(repl)
                term = term * repl ** e
            result = result + term
        return result

    # -- predicates and views --------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("polynomial %s is not constant" % self)
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, variables: Iterable[str]) -> int:
        """Largest combined exponent over the given variables; -1 if zero."""
        if not self.terms:
            return -1
        names = set(variables)
        idx = [i for i, v in enumerate(self.vars) if v in names]
        return max(sum(e[i] for i in idx) for e in self.terms)

    def used_vars(self) -> tuple:
        used = set()
        for exps in self.terms:
            for v, e in zip(self.vars, exps):
                if e:
                    used.add(v)
        return tuple(sorted(used))

    def trim(self) -> "Polynomial":
        """Drop variables that no term actually uses."""
        return Polynomial(self.used_vars(), {}) if self.is_zero else self.in_context_of_used()

    def in_context_of_used(self) -> "Polynomial":
        used = self.used_vars()
        pos = [self.vars.index(v) for v in used]
        return Polynomial(used, {tuple(e[i] for i in pos): c for e, c in self.terms.items()})

    # -- equality and rendering ------------------------------------------

    def __eq__(self, other) -> bool:
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q = Polynomial.unify(self.trim(), other.trim())
        return p.terms == q.terms

    def __hash__(self):
        t = self.trim()
        return hash((t.vars, frozenset(t.terms.items())))

    def _sorted_terms(self):
        # graded lexicographic, largest first: total degree, then exponents
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self._sorted_terms():
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append("%s^%d" % (v, e))
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%s*%s" % (mag, mono)
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return "Polynomial(%s)" % self


ZERO = Polynomial.zero()
ONE = Polynomial.one()


def poly(x: PolyLike) -> Polynomial:
    p = Polynomial._coerce(x)
    if p is NotImplemented:
        raise TypeError("cannot interpret %r as a polynomial" % (x,))
    return p


class RationalMatrix:
    """Rectangular matrix with Fraction or Polynomial entries.

    Rank computation (Gaussian elimination) requires rational entries and
    is exact; products and transposes work for polynomial entries too.
    """

    def __init__(self, entries):
        rows = [list(r) for r in entries]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "RationalMatrix":
        return RationalMatrix([[Fraction(0)] * c for _ in range(r)])

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self.entries[i][j] for i in range(self.rows)]
                               for j in range(self.cols)])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            [[sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                  Fraction(0)) for j in range(other.cols)] for i in range(self.rows)])

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-x for x in row] for row in self.entries])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(self.entries[i][j] == other.entries[i][j]
                   for i in range(self.rows) for j in range(self.cols))

    def rank(self) -> int:
        """Exact rank; entries must be rational (not polynomial)."""
        m = [[Fraction(x) for x in row] for row in self.entries]
        rank = 0
        col = 0
        while rank < len(m) and col < self.cols:
            pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
            if pivot is None:
                col += 1
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            pv = m[rank][col]
            m[rank] = [x / pv for x in m[rank]]
            for r in range(len(m)):
                if r != rank and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            rank += 1
            col += 1
        return rank

    def __repr__(self):
        return "RationalMatrix(%r)" % (self.entries,)


def random_polynomial(rng, variables, max_degree=2, max_terms=3, coeff_range=4) -> Polynomial:
    """Small random polynomial for the randomized identity layers (seeded)."""
    variables = tuple(sorted(variables))
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * len(variables)
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            if variables:
                exps[rng.randrange(len(variables))] += 1
        num = rng.randint(-coeff_range, coeff_range)
        den = rng.randint(1, 3)
        c = Fraction(num, den)
        if c != 0:
            terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + c
    return Polynomial(variables, terms)
