"""Lie algebroids in frame presentation over a polynomial base ring.

An algebroid is presented by a frame e_1..e_n, an anchor matrix with
polynomial entries, and an antisymmetric table of structure functions;
base dimension 0 is the Lie algebra case.  Brackets of arbitrary sections
extend the frame table by the Leibniz rule, and the coboundary operator,
Schouten bracket and Lie derivatives are all computed exactly, so axiom
failures come with explicit polynomial residuals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .poly import Polynomial, poly, random_polynomial, ZERO
from .report import CheckReport

Section = list  # list of Polynomial, one coefficient per frame element


def sort_with_sign(indices):
    """Sort an index tuple, returning (sorted tuple, permutation sign).

    Sign 0 for repeated indices (the wedge term vanishes).
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return tuple(sorted(idx)), 0
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return tuple(idx), sign


class LieAlgebroid:
    """Frame-presented Lie algebroid (or Lie algebra, for an empty base)."""

    def __init__(self, base_vars: Sequence[str], rank: int,
                 anchor: Sequence[Sequence] | None = None,
                 structure: Mapping | None = None,
                 frame_names: Sequence[str] | None = None,
                 name: str = ""):
        self.base_vars = tuple(base_vars)
        if len(set(self.base_vars)) != len(self.base_vars):
            raise ValueError("duplicate base variable")
        self.rank = int(rank)
        self.name = name
        d = len(self.base_vars)
        if anchor is None:
            anchor = [[ZERO] * d for _ in range(self.rank)]
        self.anchor = [[poly(x) for x in row] for row in anchor]
        if len(self.anchor) != self.rank or any(len(r) != d for r in self.anchor):
            raise ValueError("anchor must be rank x base-dimension")
        self.structure = {}
        if structure:
            for (i, j), coeffs in structure.items():
                coeffs = [poly(c) for c in coeffs]
                if len(coeffs) != self.rank:
                    raise ValueError("structure entry (%d,%d) has wrong length" % (i, j))
                if not (0 <= i < self.rank and 0 <= j < self.rank):
                    raise ValueError("frame index out of range in (%d,%d)" % (i, j))
                if i == j:
                    if any(not c.is_zero for c in coeffs):
                        raise ValueError("antisymmetry violated at (%d,%d)" % (i, j))
                    continue
                if i > j:
                    i, j = j, i
                    coeffs = [-c for c in coeffs]
                prev = self.structure.get((i, j))
                if prev is not None and any((a - b).is_zero is False for a, b in zip(prev, coeffs)):
                    raise ValueError("antisymmetry violated at (%d,%d)" % (i, j))
                if any(not c.is_zero for c in coeffs):
                    self.structure[(i, j)] = coeffs
        if frame_names is None:
            frame_names = tuple("e%d" % (i + 1) for i in range(self.rank))
        self.frame_names = tuple(frame_names)
        if len(self.frame_names) != self.rank:
            raise ValueError("frame_names length mismatch")

    def __eq__(self, other):
        if not isinstance(other, LieAlgebroid):
            return NotImplemented
        if (self.base_vars, self.rank) != (other.base_vars, other.rank):
            return False
        if any(not (a - b).is_zero for ra, rb in zip(self.anchor, other.anchor)
               for a, b in zip(ra, rb)):
            return False
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if any(not (a - b).is_zero
                       for a, b in zip(self.struct(i, j), other.struct(i, j))):
                    return False
        return True

    # -- constructors ----------------------------------------------------

    @staticmethod
    def abelian(rank: int, base_vars: Sequence[str] = (), anchor=None, name="") -> "LieAlgebroid":
        return LieAlgebroid(base_vars, rank, anchor=anchor, name=name)

    @staticmethod
    def tangent(base_vars: Sequence[str], name="") -> "LieAlgebroid":
        """Tangent algebroid: rank = dim, identity anchor, zero brackets."""
        d = len(base_vars)
        anchor = [[poly(int(i == j)) for j in range(d)] for i in range(d)]
        return LieAlgebroid(base_vars, d, anchor=anchor, name=name)

    @staticmethod
    def lie_algebra(rank: int, structure, frame_names=None, name="") -> "LieAlgebroid":
        return LieAlgebroid((), rank, structure=structure, frame_names=frame_names, name=name)

    # -- basic section algebra -------------------------------------------

    def zero_section(self) -> Section:
        return [ZERO] * self.rank

    def frame_section(self, i: int) -> Section:
        sec = self.zero_section()
        sec[i] = Polynomial.one()
        return sec

    def struct(self, i: int, j: int) -> Section:
        """Bracket of frame elements [e_i, e_j] as a section."""
        if i == j:
            return self.zero_section()
        if i < j:
            entry = self.structure.get((i, j))
            return list(entry) if entry else self.zero_section()
        entry = self.structure.get((j, i))
        return [-c for c in entry] if entry else self.zero_section()

    def anchor_of_frame(self, i: int, f: Polynomial) -> Polynomial:
        """a(e_i) applied to a base function."""
        total = ZERO
        for mu, v in enumerate(self.base_vars):
            total = total + self.anchor[i][mu] * f.diff(v)
        return total

    def anchor_vf(self, X: Section) -> list:
        """Vector field a(X) as components over the base variables."""
        comps = []
        for mu in range(len(self.base_vars)):
            total = ZERO
            for i in range(self.rank):
                total = total + X[i] * self.anchor[i][mu]
            comps.append(total)
        return comps


def apply_anchor(A: LieAlgebroid, X: Section, f) -> Polynomial:
    """The derivation a(X) applied to f; zero for a point base."""
    f = poly(f)
    total = ZERO
    for i in range(A.rank):
        if not X[i].is_zero:
            total = total + X[i] * A.anchor_of_frame(i, f)
    return total


def bracket_sections(A: LieAlgebroid, X: Section, Y: Section) -> Section:
    """Leibniz extension of the frame bracket to arbitrary sections."""
    out = A.zero_section()
    for i in range(A.rank):
        if X[i].is_zero:
            continue
        for j in range(A.rank):
            if Y[j].is_zero:
                continue
            cij = A.struct(i, j)
            for k in range(A.rank):
                out[k] = out[k] + X[i] * Y[j] * cij[k]
    for k in range(A.rank):
        out[k] = out[k] + apply_anchor(A, X, Y[k]) - apply_anchor(A, Y, X[k])
    return out


def vector_field_bracket(variables: Sequence[str], V: Sequence, W: Sequence) -> list:
    """[V, W] of vector fields given by polynomial component lists."""
    out = []
    for nu in range(len(variables)):
        total = ZERO
        for mu, v in enumerate(variables):
            total = total + V[mu] * W[nu].diff(v) - W[mu] * V[nu].diff(v)
        out.append(total)
    return out


def check_axioms(A: LieAlgebroid) -> CheckReport:
    """Jacobi identity on frame triples and the anchor morphism identity."""
    rep = CheckReport("algebroid-axioms%s" % (":" + A.name if A.name else ""))
    n, d = A.rank, len(A.base_vars)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                jac = A.zero_section()
                for (p, q, r) in ((i, j, k), (j, k, i), (k, i, j)):
                    term = bracket_sections(A, A.struct(p, q), A.frame_section(r))
                    for l in range(n):
                        jac[l] = jac[l] + term[l]
                for l in range(n):
                    rep.require("J(%d,%d,%d)[l=%d]" % (i + 1, j + 1, k + 1, l + 1), jac[l])
    for i in range(n):
        for j in range(i + 1, n):
            cij = A.struct(i, j)
            for nu in range(d):
                lhs = ZERO
                for k in range(n):
                    lhs = lhs + cij[k] * A.anchor[k][nu]
                rhs = (A.anchor_of_frame(i, A.anchor[j][nu])
                       - A.anchor_of_frame(j, A.anchor[i][nu]))
                rep.require("M(%d,%d)[nu=%d]" % (i + 1, j + 1, nu + 1), lhs - rhs)
    return rep


class MultiSection:
    """Antisymmetric multisection of degree p over a rank-n frame.

    Canonical storage uses strictly increasing index tuples; lookups for
    arbitrary index orders are resolved by permutation sign.  The same
    container serves sections of exterior powers of the bundle and of its
    dual; the interpretation is fixed by the operation applied.
    """

    def __init__(self, rank: int, degree: int, coeffs: Mapping | None = None):
        self.rank = rank
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for idx, c in coeffs.items():
                c = poly(c)
                if c.is_zero:
                    continue
                srt, sign = sort_with_sign(idx)
                if sign == 0:
                    continue
                if len(srt) != degree or (srt and (srt[0] < 0 or srt[-1] >= rank)):
                    raise ValueError("bad index tuple %r for degree %d" % (idx, degree))
                cur = self.coeffs.get(srt, ZERO) + sign * c
                if cur.is_zero:
                    self.coeffs.pop(srt, None)
                else:
                    self.coeffs[srt] = cur

    @staticmethod
    def zero(rank: int, degree: int) -> "MultiSection":
        return MultiSection(rank, degree)

    @staticmethod
    def scalar(rank: int, f) -> "MultiSection":
        return MultiSection(rank, 0, {(): poly(f)})

    @staticmethod
    def from_section(rank: int, X: Section) -> "MultiSection":
        return MultiSection(rank, 1, {(i,): X[i] for i in range(rank)})

    def to_section(self) -> Section:
        if self.degree != 1:
            raise ValueError("not a degree-1 multisection")
        return [self.coeffs.get((i,), ZERO) for i in range(self.rank)]

    def to_scalar(self) -> Polynomial:
        if self.degree != 0:
            raise ValueError("not a degree-0 multisection")
        return self.coeffs.get((), ZERO)

    def get(self, idx) -> Polynomial:
        srt, sign = sort_with_sign(idx)
        if sign == 0:
            return ZERO
        c = self.coeffs.get(srt)
        return sign * c if c is not None else ZERO

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "MultiSection") -> "MultiSection":
        if (self.rank, self.degree) != (other.rank, other.degree):
            raise ValueError("degree or rank mismatch")
        coeffs = dict(self.coeffs)
        out = MultiSection(self.rank, self.degree, coeffs)
        for idx, c in other.coeffs.items():
            cur = out.coeffs.get(idx, ZERO) + c
            if cur.is_zero:
                out.coeffs.pop(idx, None)
            else:
                out.coeffs[idx] = cur
        return out

    def __sub__(self, other: "MultiSection") -> "MultiSection":
        return self + other.scale(-1)

    def scale(self, f) -> "MultiSection":
        f = poly(f)
        return MultiSection(self.rank, self.degree,
                            {idx: f * c for idx, c in self.coeffs.items()})

    def wedge(self, other: "MultiSection") -> "MultiSection":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        out = MultiSection(self.rank, self.degree + other.degree)
        for i1, c1 in self.coeffs.items():
            for i2, c2 in other.coeffs.items():
                srt, sign = sort_with_sign(i1 + i2)
                if sign == 0:
                    continue
                cur = out.coeffs.get(srt, ZERO) + sign * c1 * c2
                if cur.is_zero:
                    out.coeffs.pop(srt, None)
                else:
                    out.coeffs[srt] = cur
        return out

    def eval_mixed(self, args) -> Polynomial:
        """Evaluate on a list of frame indices and/or sections."""
        slots = [[(a, Polynomial.one())] if isinstance(a, int)
                 else [(i, a[i]) for i in range(self.rank) if not a[i].is_zero]
                 for a in args]
        total = ZERO
        from itertools import product
        for combo in product(*slots):
            idx = tuple(i for i, _ in combo)
            coeff = Polynomial.one()
            for _, c in combo:
                coeff = coeff * c
            total = total + coeff * self.get(idx)
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSection):
            return NotImplemented
        return (self - other).is_zero

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            label = "^".join("e%d" % (i + 1) for i in idx) or "1"
            parts.append("(%s)*%s" % (self.coeffs[idx], label))
        return " + ".join(parts)


def _differential(A: LieAlgebroid, omega: MultiSection) -> MultiSection:
    p = omega.degree
    out = MultiSection(A.rank, p + 1)
    from itertools import combinations
    for S in combinations(range(A.rank), p + 1):
        total = ZERO
        for r in range(p + 1):
            rest = S[:r] + S[r + 1:]
            term = apply_anchor(A, A.frame_section(S[r]), omega.get(rest))
            total = total + (term if r % 2 == 0 else -term)
        for r in range(p + 1):
            for s in range(r + 1, p + 1):
                rest = tuple(x for t, x in enumerate(S) if t not in (r, s))
                br = A.struct(S[r], S[s])
                val = omega.eval_mixed([br] + list(rest))
                total = total + (val if (r + s) % 2 == 0 else -val)
        if not total.is_zero:
            out.coeffs[S] = total
    return out


def differential(A: LieAlgebroid, omega: MultiSection) -> MultiSection:
    """Coboundary operator (Cartan formula) on forms of the algebroid."""
    if omega.degree + 1 > A.rank:
        raise ValueError("degree exceeds rank")
    return _differential(A, omega)


def interior(A: LieAlgebroid, X: Section, omega: MultiSection) -> MultiSection:
    """Contraction of a form with a section in the first slot."""
    if omega.degree == 0:
        return MultiSection.zero(A.rank, 0)
    out = MultiSection(A.rank, omega.degree - 1)
    from itertools import combinations
    for J in combinations(range(A.rank), omega.degree - 1):
        total = ZERO
        for k in range(A.rank):
            if not X[k].is_zero:
                total = total + X[k] * omega.get((k,) + J)
        if not total.is_zero:
            out.coeffs[J] = total
    return out


def lie_derivative(A: LieAlgebroid, X: Section, T: MultiSection) -> MultiSection:
    """Cartan magic formula L_X = d(i_X T) + i_X(dT) on forms."""
    term1 = MultiSection.zero(A.rank, T.degree)
    if T.degree >= 1:
        term1 = _differential(A, interior(A, X, T))
    else:
        # L_X f = a(X)(f)
        return MultiSection.scalar(A.rank, apply_anchor(A, X, T.to_scalar()))
    term2 = interior(A, X, _differential(A, T)) if T.degree < A.rank \
        else MultiSection.zero(A.rank, T.degree)
    return term1 + term2


def schouten(A: LieAlgebroid, P: MultiSection, Q: MultiSection) -> MultiSection:
    """Schouten bracket of multivector fields on the algebroid.

    Degree (1,1) agrees with the section bracket, (1,0) with the anchor
    action; higher degrees follow the graded Leibniz extension.
    """
    p, q = P.degree, Q.degree
    deg = p + q - 1
    if deg < 0:
        return MultiSection.zero(A.rank, 0)
    out = MultiSection.zero(A.rank, deg)
    for I, f in P.coeffs.items():
        for J, g in Q.coeffs.items():
            out = out + _schouten_term(A, f, I, g, J)
    return out


def _frame_multi(A: LieAlgebroid, I: tuple, coeff) -> MultiSection:
    return MultiSection(A.rank, len(I), {I: coeff})


def _schouten_term(A: LieAlgebroid, f, I: tuple, g, J: tuple) -> MultiSection:
    p, q = len(I), len(J)
    if p == 0 and q == 0:
        return MultiSection.zero(A.rank, 0)
    if p == 0:
        # graded antisymmetry: [f, Q] = (-1)^q [Q, f]
        res = _schouten_term(A, g, J, f, ())
        return res if q % 2 == 0 else res.scale(-1)
    if p == 1:
        X = A.zero_section()
        X[I[0]] = poly(f)
        if q == 0:
            return MultiSection.scalar(A.rank, apply_anchor(A, X, g))
        out = _frame_multi(A, J, apply_anchor(A, X, g))
        for r in range(q):
            br = bracket_sections(A, X, A.frame_section(J[r]))
            ins = MultiSection(A.rank, q,
                               {J[:r] + (k,) + J[r + 1:]: poly(g) * br[k]
                                for k in range(A.rank) if not br[k].is_zero})
            out = out + ins
        return out
    # p >= 2: split off the leading frame element
    head, tail = (I[0],), I[1:]
    left = _schouten_term(A, Polynomial.one(), head, g, J)
    part_a = left.wedge(_frame_multi(A, tail, poly(f)))
    if ((q - 1) * (p - 1)) % 2 == 1:
        part_a = part_a.scale(-1)
    part_b = _frame_multi(A, head, Polynomial.one()).wedge(_schouten_term(A, f, tail, g, J))
    return part_a + part_b


def check_action(B: LieAlgebroid, fiber_vars: Sequence[str], action) -> CheckReport:
    """Validity of a linear action of B on a vector bundle carrier.

    ``action`` lists, per B-frame, the vector field components over the
    combined coordinates (base vars then fiber vars).  Checks: base
    components reproduce the anchor and are fiber-independent, fiber
    components are linear in the fiber, and the action brackets match the
    structure functions.
    """
    rep = CheckReport("action%s" % (":" + B.name if B.name else ""))
    d = len(B.base_vars)
    allvars = tuple(B.base_vars) + tuple(fiber_vars)
    action = [[poly(c) for c in comps] for comps in action]
    if len(action) != B.rank or any(len(v) != len(allvars) for v in action):
        raise ValueError("action must give one vector field per frame element")
    for alpha, vf in enumerate(action):
        for mu in range(d):
            if vf[mu].degree_in(fiber_vars) > 0:
                rep.add("linear over base [frame %d]" % (alpha + 1),
                        "base component %d depends on the fiber: %s" % (mu + 1, vf[mu]))
            rep.require("base part matches anchor [frame %d, var %d]" % (alpha + 1, mu + 1),
                        vf[mu] - B.anchor[alpha][mu])
        for i, fv in enumerate(fiber_vars):
            comp = vf[d + i]
            for exps in comp.terms:
                fdeg = sum(e for v, e in zip(comp.vars, exps) if v in fiber_vars)
                if fdeg != 1:
                    rep.add("linear over base [frame %d]" % (alpha + 1),
                            "fiber component %s is not linear: %s" % (fv, comp))
                    break
    for alpha in range(B.rank):
        for beta in range(alpha + 1, B.rank):
            lhs = vector_field_bracket(allvars, action[alpha], action[beta])
            cab = B.struct(alpha, beta)
            rhs = [ZERO] * len(allvars)
            for gamma in range(B.rank):
                for m in range(len(allvars)):
                    rhs[m] = rhs[m] + cab[gamma] * action[gamma][m]
            for m in range(len(allvars)):
                rep.require("action bracket [%d,%d] comp %s" % (alpha + 1, beta + 1, allvars[m]),
                            lhs[m] - rhs[m])
    return rep


def action_algebroid(B: LieAlgebroid, fiber_vars: Sequence[str], action,
                     name: str = "") -> LieAlgebroid:
    """Pullback (action) Lie algebroid of B acting on a vector bundle.

    Frames are the pullbacks of B's frame; the anchor sends them to the
    action vector fields and the bracket is the pullback bracket extended
    by Leibniz.
    """
    fiber_vars = tuple(fiber_vars)
    if set(fiber_vars) & set(B.base_vars):
        raise ValueError("fiber variables collide with base variables")
    rep = check_action(B, fiber_vars, action)
    linear_fail = [w for w in rep.witnesses if w.identity.startswith("linear over base")]
    if linear_fail:
        raise ValueError("action not linear over base: %s" % linear_fail[0].residual)
    if not rep.passed:
        raise ValueError("action is not a Lie algebra action: %s: %s"
                         % (rep.witnesses[0].identity, rep.witnesses[0].residual))
    allvars = tuple(B.base_vars) + fiber_vars
    anchor = [[poly(c) for c in comps] for comps in action]
    structure = {(i, j): list(B.struct(i, j)) for i in range(B.rank)
                 for j in range(i + 1, B.rank)}
    return LieAlgebroid(allvars, B.rank, anchor=anchor, structure=structure,
                        frame_names=B.frame_names, name=name or (B.name and "act(%s)" % B.name))


def random_section(rng, A: LieAlgebroid, max_degree=2) -> Section:
    return [random_polynomial(rng, A.base_vars, max_degree=max_degree)
            for _ in range(A.rank)]
