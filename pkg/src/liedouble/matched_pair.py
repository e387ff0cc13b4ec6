"""Matched pairs of Lie algebroids, their doubles, and vacant doubles.

A representation is stored as one square polynomial matrix per actor
frame, in the convention (rho_{e_i} f_alpha) = sum_beta R^beta_{i alpha}
f_beta (column index = acted-on frame element); the covariant-derivative
extension to arbitrary sections adds the anchor derivation on
coefficients.  The matched-pair equations are verified both on frames and
on randomly drawn polynomial sections, since the equations are stated for
all sections and their frame reduction is not term-by-term tensorial.
"""

from __future__ import annotations

import random
from typing import Sequence

from .poly import Polynomial, poly, random_polynomial, ZERO
from .report import CheckReport
from .algebroid import (LieAlgebroid, Section, action_algebroid, apply_anchor,
                        bracket_sections, check_axioms, random_section,
                        vector_field_bracket)


class Representation:
    """Representation of a Lie algebroid on a vector bundle over its base."""

    def __init__(self, actor: LieAlgebroid, carrier_rank: int, matrices,
                 carrier_names: Sequence[str] | None = None, name: str = ""):
        self.actor = actor
        self.carrier_rank = int(carrier_rank)
        self.name = name
        self.matrices = [[[poly(c) for c in row] for row in M] for M in matrices]
        if len(self.matrices) != actor.rank:
            raise ValueError("dimension mismatch: need one matrix per actor frame")
        for M in self.matrices:
            if len(M) != self.carrier_rank or any(len(r) != self.carrier_rank for r in M):
                raise ValueError("dimension mismatch between matrices and carrier rank")
        if carrier_names is None:
            carrier_names = tuple("f%d" % (a + 1) for a in range(self.carrier_rank))
        self.carrier_names = tuple(carrier_names)

    @staticmethod
    def zero(actor: LieAlgebroid, carrier_rank: int, name="") -> "Representation":
        m = carrier_rank
        return Representation(actor, m,
                              [[[ZERO] * m for _ in range(m)] for _ in range(actor.rank)],
                              name=name)

    def apply(self, X: Section, s: Sequence) -> list:
        """rho_X(s) with the covariant-derivative extension on coefficients."""
        s = [poly(c) for c in s]
        out = [ZERO] * self.carrier_rank
        for beta in range(self.carrier_rank):
            total = ZERO
            for i in range(self.actor.rank):
                if X[i].is_zero:
                    continue
                for alpha in range(self.carrier_rank):
                    total = total + X[i] * self.matrices[i][beta][alpha] * s[alpha]
            out[beta] = total + apply_anchor(self.actor, X, s[beta])
        return out

    def apply_frame(self, i: int, alpha: int) -> list:
        return [self.matrices[i][beta][alpha] for beta in range(self.carrier_rank)]

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        if (self.actor.rank, self.carrier_rank) != (other.actor.rank, other.carrier_rank):
            return False
        return all((self.matrices[i][b][a] - other.matrices[i][b][a]).is_zero
                   for i in range(self.actor.rank)
                   for b in range(self.carrier_rank)
                   for a in range(self.carrier_rank))


def dualize_representation(rep: Representation) -> Representation:
    """Dual representation on frame covectors: matrices become -R^T."""
    m = rep.carrier_rank
    mats = [[[-rep.matrices[i][a][b] for a in range(m)] for b in range(m)]
            for i in range(rep.actor.rank)]
    return Representation(rep.actor, m, mats, name=rep.name and rep.name + "*")


def check_representation(rep: Representation, seed: int = 0, samples: int = 8,
                         max_degree: int = 2) -> CheckReport:
    """Flatness on frames, plus randomized Leibniz / linearity-in-X checks."""
    A = rep.actor
    out = CheckReport("representation%s" % (":" + rep.name if rep.name else ""), seed=seed)
    m = rep.carrier_rank
    for i in range(A.rank):
        for j in range(i + 1, A.rank):
            Ri, Rj = rep.matrices[i], rep.matrices[j]
            cij = A.struct(i, j)
            for beta in range(m):
                for alpha in range(m):
                    comm = ZERO
                    for g in range(m):
                        comm = comm + Ri[beta][g] * Rj[g][alpha] - Rj[beta][g] * Ri[g][alpha]
                    deriv = (A.anchor_of_frame(i, Rj[beta][alpha])
                             - A.anchor_of_frame(j, Ri[beta][alpha]))
                    rhs = ZERO
                    for k in range(A.rank):
                        rhs = rhs + cij[k] * rep.matrices[k][beta][alpha]
                    out.require("flatness(%d,%d)[%d,%d]" % (i + 1, j + 1, beta + 1, alpha + 1),
                                comm + deriv - rhs)
    rng = random.Random(seed)
    for t in range(samples):
        X = random_section(rng, A, max_degree)
        f = random_polynomial(rng, A.base_vars, max_degree)
        s = [random_polynomial(rng, A.base_vars, max_degree) for _ in range(m)]
        lhs = rep.apply(X, [f * c for c in s])
        rhs = [f * c for c in rep.apply(X, s)]
        ax_f = apply_anchor(A, X, f)
        for beta in range(m):
            out.require("Leibniz trial %d [%d]" % (t + 1, beta + 1),
                        lhs[beta] - rhs[beta] - ax_f * s[beta])
        lhs2 = rep.apply([f * c for c in X], s)
        rhs2 = [f * c for c in rep.apply(X, s)]
        for beta in range(m):
            out.require("C(M)-linearity trial %d [%d]" % (t + 1, beta + 1),
                        lhs2[beta] - rhs2[beta])
    return out


class MatchedPair:
    """A pair of algebroids over one base with mutual representations."""

    def __init__(self, A: LieAlgebroid, B: LieAlgebroid,
                 rho: Representation, sigma: Representation, name: str = ""):
        if A.base_vars != B.base_vars:
            raise ValueError("matched pair requires a common base")
        if rho.actor is not A and rho.actor.base_vars != A.base_vars:
            raise ValueError("rho must act from A")
        if rho.carrier_rank != B.rank or sigma.carrier_rank != A.rank:
            raise ValueError("dimension mismatch between representations and sides")
        if len(rho.matrices) != A.rank or len(sigma.matrices) != B.rank:
            raise ValueError("dimension mismatch between representations and sides")
        self.A, self.B, self.rho, self.sigma = A, B, rho, sigma
        self.name = name
        self.verified = False

    def __eq__(self, other):
        if not isinstance(other, MatchedPair):
            return NotImplemented
        def same_alg(P, Q):
            if (P.rank, P.base_vars) != (Q.rank, Q.base_vars):
                return False
            if any((a - b).is_zero is False for ra, rb in zip(P.anchor, Q.anchor)
                   for a, b in zip(ra, rb)):
                return False
            for i in range(P.rank):
                for j in range(i + 1, P.rank):
                    if any(not (a - b).is_zero for a, b in zip(P.struct(i, j), Q.struct(i, j))):
                        return False
            return True
        return (same_alg(self.A, other.A) and same_alg(self.B, other.B)
                and self.rho == other.rho and self.sigma == other.sigma)


def _eq1_residual(mp: MatchedPair, X: Section, Y1: Section, Y2: Section) -> list:
    """rho_X[Y1,Y2] - [rho_X Y1, Y2] - [Y1, rho_X Y2] - rho_{sigma_{Y2}X}(Y1) + rho_{sigma_{Y1}X}(Y2)."""
    A, B, rho, sigma = mp.A, mp.B, mp.rho, mp.sigma
    lhs = rho.apply(X, bracket_sections(B, Y1, Y2))
    t1 = bracket_sections(B, rho.apply(X, Y1), Y2)
    t2 = bracket_sections(B, Y1, rho.apply(X, Y2))
    t3 = rho.apply(sigma.apply(Y2, X), Y1)
    t4 = rho.apply(sigma.apply(Y1, X), Y2)
    return [lhs[k] - t1[k] - t2[k] - t3[k] + t4[k] for k in range(B.rank)]


def _eq3_residual(mp: MatchedPair, X: Section, Y: Section) -> list:
    """a(sigma_Y X) - b(rho_X Y) - [b(Y), a(X)] as a vector field."""
    A, B = mp.A, mp.B
    lhs1 = A.anchor_vf(mp.sigma.apply(Y, X))
    lhs2 = B.anchor_vf(mp.rho.apply(X, Y))
    comm = vector_field_bracket(A.base_vars, B.anchor_vf(Y), A.anchor_vf(X))
    return [lhs1[mu] - lhs2[mu] - comm[mu] for mu in range(len(A.base_vars))]


def _flip(mp: MatchedPair) -> MatchedPair:
    out = MatchedPair(mp.B, mp.A, mp.sigma, mp.rho, name=mp.name)
    return out


def check_matched_pair(mp: MatchedPair, seed: int = 0, samples: int = 50,
                       max_degree: int = 2) -> CheckReport:
    """The three matched-pair equations, on frames and on random sections."""
    out = CheckReport("matched-pair%s" % (":" + mp.name if mp.name else ""), seed=seed)
    for label, pre in (("A axioms", check_axioms(mp.A)),
                       ("B axioms", check_axioms(mp.B)),
                       ("rho", check_representation(mp.rho, seed=seed)),
                       ("sigma", check_representation(mp.sigma, seed=seed))):
        if not pre.passed:
            out.add("precondition: %s" % label, pre.witnesses[0].residual)
    A, B = mp.A, mp.B
    flipped = _flip(mp)
    for i in range(A.rank):
        for a in range(B.rank):
            for b in range(a + 1, B.rank):
                res = _eq1_residual(mp, A.frame_section(i),
                                    B.frame_section(a), B.frame_section(b))
                for k in range(B.rank):
                    out.require("eq1(e%d;f%d,f%d)[%d]" % (i + 1, a + 1, b + 1, k + 1), res[k])
    for a in range(B.rank):
        for i in range(A.rank):
            for j in range(i + 1, A.rank):
                res = _eq1_residual(flipped, B.frame_section(a),
                                    A.frame_section(i), A.frame_section(j))
                for k in range(A.rank):
                    out.require("eq2(f%d;e%d,e%d)[%d]" % (a + 1, i + 1, j + 1, k + 1), res[k])
    for i in range(A.rank):
        for a in range(B.rank):
            res = _eq3_residual(mp, A.frame_section(i), B.frame_section(a))
            for mu in range(len(A.base_vars)):
                out.require("eq3(e%d,f%d)[%s]" % (i + 1, a + 1, A.base_vars[mu]), res[mu])
    rng = random.Random(seed)
    for t in range(samples):
        X = random_section(rng, A, max_degree)
        Y1 = random_section(rng, B, max_degree)
        Y2 = random_section(rng, B, max_degree)
        for k, r in enumerate(_eq1_residual(mp, X, Y1, Y2)):
            out.require("eq1 trial %d [%d]" % (t + 1, k + 1), r)
        X1 = random_section(rng, A, max_degree)
        X2 = random_section(rng, A, max_degree)
        for k, r in enumerate(_eq1_residual(flipped, Y1, X1, X2)):
            out.require("eq2 trial %d [%d]" % (t + 1, k + 1), r)
        for mu, r in enumerate(_eq3_residual(mp, X, Y1)):
            out.require("eq3 trial %d [%s]" % (t + 1, A.base_vars[mu]), r)
    if out.passed:
        mp.verified = True
    return out


def build_double_sum(mp: MatchedPair, force: bool = False) -> LieAlgebroid:
    """Lie algebroid on A + B with summed anchor and the mixed bracket
    [X+0, 0+Y] = -sigma_Y(X) + rho_X(Y).

    Refuses unverified pairs unless ``force`` is set (used to inspect how
    the double degenerates when the matched-pair equations fail).
    """
    if not (mp.verified or force):
        raise ValueError("matched pair has not been verified; "
                         "run check_matched_pair first")
    A, B = mp.A, mp.B
    n, m = A.rank, B.rank
    anchor = [list(row) for row in A.anchor] + [list(row) for row in B.anchor]
    structure = {}
    for i in range(n):
        for j in range(i + 1, n):
            structure[(i, j)] = list(A.struct(i, j)) + [ZERO] * m
    for a in range(m):
        for b in range(a + 1, m):
            structure[(n + a, n + b)] = [ZERO] * n + list(B.struct(a, b))
    for i in range(n):
        for a in range(m):
            sig = mp.sigma.apply_frame(a, i)
            rho = mp.rho.apply_frame(i, a)
            structure[(i, n + a)] = [-c for c in sig] + list(rho)
    names = tuple(A.frame_names) + tuple(B.frame_names)
    return LieAlgebroid(A.base_vars, n + m, anchor=anchor, structure=structure,
                        frame_names=names, name=mp.name and "double(%s)" % mp.name)


def extract_matched_pair(D: LieAlgebroid, split) -> MatchedPair:
    """Read a matched pair off a direct-sum algebroid and a frame partition.

    ``split`` is a pair of index lists (A-part, B-part) partitioning D's
    frame; both parts must be closed under the bracket.
    """
    part_a, part_b = [list(p) for p in split]
    if sorted(part_a + part_b) != list(range(D.rank)):
        raise ValueError("split must partition the frame indices")
    pos = {g: t for t, g in enumerate(part_a)}
    pos_b = {g: t for t, g in enumerate(part_b)}
    for part, other, label in ((part_a, part_b, "A"), (part_b, part_a, "B")):
        for i in part:
            for j in part:
                br = D.struct(i, j)
                for g in other:
                    if not br[g].is_zero:
                        raise ValueError("%s is not closed under the bracket" % label)
    def sub(part):
        anchor = [list(D.anchor[g]) for g in part]
        structure = {}
        for t, i in enumerate(part):
            for s, j in enumerate(part):
                if t < s:
                    structure[(t, s)] = [D.struct(i, j)[g] for g in part]
        return LieAlgebroid(D.base_vars, len(part), anchor=anchor, structure=structure,
                            frame_names=[D.frame_names[g] for g in part])
    A, B = sub(part_a), sub(part_b)
    n, m = len(part_a), len(part_b)
    rho_mats = [[[ZERO] * m for _ in range(m)] for _ in range(n)]
    sig_mats = [[[ZERO] * n for _ in range(n)] for _ in range(m)]
    for t, i in enumerate(part_a):
        for s, a in enumerate(part_b):
            br = D.struct(i, a)  # = -sigma_{f_a}(e_i) + rho_{e_i}(f_a)
            for g in part_a:
                sig_mats[s][pos[g]][t] = -br[g]
            for g in part_b:
                rho_mats[t][pos_b[g]][s] = br[g]
    rho = Representation(A, m, rho_mats, carrier_names=B.frame_names)
    sigma = Representation(B, n, sig_mats, carrier_names=A.frame_names)
    return MatchedPair(A, B, rho, sigma)


class VacantDouble:
    """A matched-pair double realized on the fibered product of the sides.

    ``vertical`` is the action algebroid of B on the total space of A
    (base coordinates plus A-fiber coordinates); ``horizontal`` the action
    of A on the total space of B.
    """

    def __init__(self, A, B, vertical, horizontal, fiber_vars_a, fiber_vars_b,
                 name=""):
        self.A, self.B = A, B
        self.vertical, self.horizontal = vertical, horizontal
        self.fiber_vars_a = tuple(fiber_vars_a)
        self.fiber_vars_b = tuple(fiber_vars_b)
        self.name = name


def _fresh_vars(prefix, count, taken):
    out = []
    i = 1
    while len(out) < count:
        v = "%s%d" % (prefix, i)
        if v not in taken:
            out.append(v)
        i += 1
    return out


def build_vacant_double(mp: MatchedPair, force: bool = False) -> VacantDouble:
    """Action-algebroid realization of the double of a matched pair.

    The action of a B-frame on the total space of A is the linear vector
    field with base part b(f_a) and fiber part -S^i_{a j} y^j d/dy^i read
    off the sigma matrices; symmetrically for A acting on B via rho.
    """
    if not (mp.verified or force):
        raise ValueError("matched pair has not been verified; "
                         "run check_matched_pair first")
    A, B = mp.A, mp.B
    taken = set(A.base_vars)
    yv = _fresh_vars("y", A.rank, taken)
    vv = _fresh_vars("v", B.rank, taken | set(yv))
    def action_fields(actor, rep, fibers):
        fields = []
        for i in range(actor.rank):
            comps = list(actor.anchor[i])
            for al in range(rep.carrier_rank):
                total = ZERO
                for be in range(rep.carrier_rank):
                    total = total - rep.matrices[i][al][be] * Polynomial.var(fibers[be])
                comps.append(total)
            fields.append(comps)
        return fields
    vertical = action_algebroid(B, yv, action_fields(B, mp.sigma, yv),
                                name="vertical")
    horizontal = action_algebroid(A, vv, action_fields(A, mp.rho, vv),
                                  name="horizontal")
    return VacantDouble(A, B, vertical, horizontal, yv, vv, name=mp.name)


def vacant_representations(V: VacantDouble):
    """Recover (rho, sigma) matrices from the two action anchors."""
    d = len(V.A.base_vars)
    def read(alg, fibers, actor_rank):
        m = len(fibers)
        mats = []
        for i in range(actor_rank):
            M = [[ZERO] * m for _ in range(m)]
            for al in range(m):
                comp = alg.anchor[i][d + al]
                for be in range(m):
                    M[al][be] = -comp.diff(fibers[be])
            mats.append(M)
        return mats
    sig = read(V.vertical, V.fiber_vars_a, V.B.rank)
    rho = read(V.horizontal, V.fiber_vars_b, V.A.rank)
    return (Representation(V.A, V.B.rank, rho, carrier_names=V.B.frame_names),
            Representation(V.B, V.A.rank, sig, carrier_names=V.A.frame_names))


def check_vacant_conditions(V: VacantDouble, seed: int = 0) -> CheckReport:
    """Linearity of the action anchors, pullback-closed brackets, and the
    anchor-compatibility (third matched-pair) equation."""
    out = CheckReport("vacant%s" % (":" + V.name if V.name else ""), seed=seed)
    d = len(V.A.base_vars)
    for alg, side, fibers, tag in ((V.vertical, V.B, V.fiber_vars_a, "eta"),
                                   (V.horizontal, V.A, V.fiber_vars_b, "xi")):
        for i in range(alg.rank):
            for mu in range(d):
                if alg.anchor[i][mu].degree_in(fibers) > 0:
                    out.add("(a) %s(%d) base part fiber-free" % (tag, i + 1),
                            alg.anchor[i][mu])
                out.require("(a) %s(%d) over side anchor [%s]" % (tag, i + 1,
                                                                  V.A.base_vars[mu]),
                            alg.anchor[i][mu] - side.anchor[i][mu])
            for al in range(len(fibers)):
                comp = alg.anchor[i][d + al]
                if comp.degree_in(fibers) > 1:
                    out.add("(a) %s(%d) linear in fibers [%s]" % (tag, i + 1, fibers[al]),
                            comp)
        for i in range(alg.rank):
            for j in range(i + 1, alg.rank):
                for k, c in enumerate(alg.struct(i, j)):
                    if c.degree_in(fibers) > 0:
                        out.add("(b) %s bracket (%d,%d) pullback [%d]" % (tag, i + 1,
                                                                          j + 1, k + 1), c)
    linear = not any(w.identity.startswith("(a)") for w in out.witnesses)
    if linear:
        rho, sigma = vacant_representations(V)
        mp = MatchedPair(V.A, V.B, rho, sigma)
        for i in range(V.A.rank):
            for a in range(V.B.rank):
                res = _eq3_residual(mp, V.A.frame_section(i), V.B.frame_section(a))
                for mu in range(d):
                    out.require("(c) anchors(e%d,f%d)[%s]" % (i + 1, a + 1,
                                                              V.A.base_vars[mu]),
                                res[mu])
    return out
