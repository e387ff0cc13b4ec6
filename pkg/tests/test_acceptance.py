"""Acceptance suite: one criterion per test, one printed verdict line each.

All comparisons are exact (rational arithmetic, zero tolerance).  The
shared corpus and its validated mutations live in corpus.py.
"""

import random
import time
from fractions import Fraction

import pytest

from liedouble.poly import Polynomial, ZERO, ONE
from liedouble.algebroid import (LieAlgebroid, MultiSection, check_axioms,
                                 differential, random_section, schouten)
from liedouble.matched_pair import (build_double_sum, build_vacant_double,
                                    check_matched_pair,
                                    check_vacant_conditions,
                                    vacant_representations)
from liedouble.bialgebroid import (LieBialgebroid, base_poisson,
                                   bialgebroid_from_matched_pair,
                                   check_bialgebroid, check_lied_lemma,
                                   check_manin, manin_double)
from liedouble.poisson import (PoissonAlgebra, check_jacobi_poisson,
                               cotangent_algebroid, linear_dual_poisson)
from liedouble.dvb import (DecomposedDVB, check_interchange,
                           check_pairing_nondegenerate, check_zmaps,
                           cotangent_model)
from liedouble.modelfile import parse_model, print_model

import corpus

SUITE_START = time.monotonic()


def verdict(capsys, num, ok, desc):
    with capsys.disabled():
        print("[criterion %d] %s - %s" % (num, "PASS" if ok else "FAIL", desc))
    assert ok, "criterion %d failed: %s" % (num, desc)


def test_criterion_1_double_equivalence(capsys):
    """Direct-sum double <-> matched pair, both directions, 15/15 mutants."""
    t0 = time.monotonic()
    ok = True
    for maker in corpus.ALL_PAIRS:
        mp = maker()
        ok &= check_matched_pair(mp, samples=20).passed
        ok &= check_axioms(build_double_sum(mp)).passed
    agree = 0
    total = 0
    for maker in corpus.MUTATION_PAIRS:
        for label, mut in corpus.mutants(maker):
            total += 1
            bad_pair = not check_matched_pair(mut, samples=20).passed
            bad_double = not check_axioms(build_double_sum(mut, force=True)).passed
            if bad_pair and bad_double:
                agree += 1
    elapsed = time.monotonic() - t0
    ok &= (agree == total == 15) and elapsed < 10.0
    verdict(capsys, 1, ok,
            "double construction equivalence, %d/15 mutant agreement, %.1fs"
            % (agree, elapsed))


def test_criterion_2_vacant_round_trip(capsys):
    """Vacant doubles verify and give back the acting representations."""
    ok = True
    for maker in corpus.ALL_PAIRS:
        mp = maker()
        check_matched_pair(mp, samples=20)
        V = build_vacant_double(mp)
        ok &= check_vacant_conditions(V).passed
        rho2, sigma2 = vacant_representations(V)
        ok &= rho2.matrices == mp.rho.matrices
        ok &= sigma2.matrices == mp.sigma.matrices
    verdict(capsys, 2, ok,
            "vacant double conditions and exact representation recovery "
            "on all %d corpus pairs" % len(corpus.ALL_PAIRS))


def test_criterion_3_bialgebroid_criterion(capsys):
    """Semidirect duals form bialgebroids with zero base bivector; every
    mutation breaks the criterion; the mixed Lie-derivative identity holds."""
    ok = True
    for maker in corpus.ALL_PAIRS:
        mp = maker()
        check_matched_pair(mp, samples=20)
        bi = bialgebroid_from_matched_pair(mp)
        ok &= check_bialgebroid(bi).passed
        ok &= all(v.is_zero for v in base_poisson(bi).values())
    broken = 0
    for maker in corpus.MUTATION_PAIRS:
        for label, mut in corpus.mutants(maker):
            rep = check_bialgebroid(bialgebroid_from_matched_pair(mut, force=True))
            broken += 0 if rep.passed else 1
    ok &= broken == 15
    # mixed Lie derivative closed form on all frame/coordinate instances
    lied_ok = True
    for maker in (corpus.pair_gl2, corpus.pair_aff, corpus.pair_tt):
        mp = maker()
        check_matched_pair(mp, samples=20)
        n, m = mp.A.rank, mp.B.rank
        for i in range(n):
            for a in range(m):
                phi = [ONE if k == i else ZERO for k in range(n)]
                Y = [ONE if b == a else ZERO for b in range(m)]
                X = [ONE if k == (n - 1 - i) else ZERO for k in range(n)]
                psi = [ONE if b == a else ZERO for b in range(m)]
                lied_ok &= check_lied_lemma(mp, phi, Y, X, psi).passed
    ok &= lied_ok
    verdict(capsys, 3, ok,
            "bialgebroid criterion, zero base bivector, %d/15 mutations "
            "detected, Lie-derivative lemma residuals zero" % broken)


def test_criterion_4_manin_triples(capsys):
    """Abelian duals give Manin triples for abelian^2, aff(1) and sl2; an
    incompatible dual bracket on sl2* fails Jacobi with a witness."""
    triples = {
        "abelian2": LieAlgebroid.lie_algebra(2, {}),
        "aff1": LieAlgebroid.lie_algebra(2, {(0, 1): [0, 1]}),
        "sl2": LieAlgebroid.lie_algebra(
            3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}),
    }
    ok = True
    for name, g in triples.items():
        gs = LieAlgebroid.lie_algebra(g.rank, {})
        md = manin_double(g, gs, name=name)
        rep = check_manin(md)
        ok &= rep.passed
    bad = manin_double(triples["sl2"],
                       LieAlgebroid.lie_algebra(3, {(0, 1): [1, 0, 0]}))
    rep = check_manin(bad)
    witnessed = (not rep.passed) and any(
        w.identity.startswith("jacobi:") and w.residual != "0"
        for w in rep.witnesses)
    ok &= witnessed
    verdict(capsys, 4, ok,
            "Manin triples for abelian^2/aff(1)/sl2 pass; incompatible "
            "sl2* bracket fails Jacobi with a nonzero witness")


def test_criterion_5_duality_suite(capsys):
    """Interchange, duals pairing, nondegeneracy, Z-maps and the
    vertical-dual evaluation identity, dims <= 3."""
    ok = True
    dims = [(1, 1, 1), (2, 1, 1), (1, 2, 2), (2, 2, 2), (3, 2, 1), (2, 3, 3)]
    for dh, dv, dk in dims:
        for sign in ("plus", "minus"):
            D = DecomposedDVB(dh, dv, dk, sign=sign)
            ok &= check_zmaps(D).passed
            rep = check_pairing_nondegenerate(D)
            ok &= rep.passed and rep.details["rank"] == dh + dv
            ok &= check_interchange(D).passed
    # exhaustive 4-value grid where it is tractable (symbolic identity
    # above covers all dims)
    ok &= check_interchange(DecomposedDVB(1, 1, 1),
                            grid=(-1, 0, 1, 2)).passed
    # pairing through an arbitrary compatible element: 1000 trials, five
    # core parts each, identical values
    D = DecomposedDVB(3, 3, 3)
    rng = random.Random(0)
    def rv(n):
        return tuple(Fraction(rng.randint(-9, 9)) for _ in range(n))
    independent = True
    for _ in range(1000):
        kappa = rv(3)
        Phi = D.dual_v(rv(3), kappa, rv(3))
        Psi = D.dual_h(rv(3), kappa, rv(3))
        vals = {D.pair_duals(Phi, Psi, D.element(Phi.h, Psi.v, rv(3)))
                for _ in range(5)}
        independent &= len(vals) == 1
    ok &= independent
    for n in (1, 2, 3):
        for d in (1, 2, 3):
            ok &= cotangent_model(n, d).check_vue().passed
    verdict(capsys, 5, ok,
            "duality suite: interchange (symbolic + grid), xi-independent "
            "pairing, full rank, Z-map identities, cotangent evaluation law")


def test_criterion_6_standard_instance(capsys):
    """Tangent/cotangent pair of a Poisson base is a Lie bialgebroid and
    returns the Poisson bivector."""
    ok = True
    plane = PoissonAlgebra(("x", "y"), {("x", "y"): ONE})
    y, z = Polynomial.var("y"), Polynomial.var("z")
    xv = Polynomial.var("x")
    sl2lin = PoissonAlgebra(("x", "y", "z"),
                            {("x", "y"): 2 * y, ("x", "z"): -2 * z,
                             ("y", "z"): xv})
    for P in (plane, sl2lin):
        bi = LieBialgebroid(LieAlgebroid.tangent(P.vars),
                            cotangent_algebroid(P))
        ok &= check_bialgebroid(bi).passed
        rec = base_poisson(bi)
        for a in P.vars:
            for b in P.vars:
                if a < b:
                    ok &= rec.get((a, b), ZERO) == P.pi(a, b)
    verdict(capsys, 6, ok,
            "standard tangent/cotangent bialgebroid passes and base_poisson "
            "recovers pi exactly (plane and linear sl2)")


def test_criterion_7_engine_health(capsys):
    """d^2 = 0, Schouten graded Jacobi, linear dual Poisson structures,
    parser round trip, JSON determinism, overall runtime."""
    ok = True
    A = LieAlgebroid.lie_algebra(
        3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]})
    rng = random.Random(42)
    for _ in range(5):
        omega = MultiSection(3, 1, {(i,): random_section(rng, A)[i]
                                    for i in range(3)})
        ok &= differential(A, differential(A, omega)).is_zero
    # graded Jacobi for degree (1,1,2) samples
    def rnd_multi(p):
        out = MultiSection.zero(3, p)
        for _ in range(2):
            idx = tuple(sorted(rng.sample(range(3), p)))
            out = out + MultiSection(3, p, {idx: Polynomial.const(rng.randint(-3, 3))})
        return out
    for _ in range(5):
        P1, Q1, R2 = rnd_multi(1), rnd_multi(1), rnd_multi(2)
        lhs = schouten(A, P1, schouten(A, Q1, R2))
        mid = schouten(A, schouten(A, P1, Q1), R2)
        rhs = schouten(A, Q1, schouten(A, P1, R2))
        ok &= (lhs - mid - rhs).is_zero
    # linear dual Poisson across every algebroid the corpus touches
    for maker in corpus.ALL_PAIRS:
        mp = maker()
        for side in (mp.A, mp.B):
            if not side.base_vars:
                ok &= check_jacobi_poisson(linear_dual_poisson(side)).passed
    # parser fixed point and JSON determinism
    text = ("algebroid A { base; rank 2; bracket [1,2] = e2; }\n"
            "poisson P { vars x y; pi [x,y] = x^2 + 1/2; }\n")
    model = parse_model(text)
    printed = print_model(model)
    ok &= parse_model(printed) == model and print_model(parse_model(printed)) == printed
    r1 = check_axioms(model.objects["A"]).to_json()
    r2 = check_axioms(model.objects["A"]).to_json()
    ok &= r1 == r2
    elapsed = time.monotonic() - SUITE_START
    ok &= elapsed < 60.0
    verdict(capsys, 7, ok,
            "engine health: d^2=0, graded Jacobi, dual Poisson, parser "
            "round trip, deterministic JSON (%.1fs into the suite)" % elapsed)
