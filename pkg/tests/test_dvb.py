"""Decomposed double vector bundles, dual pairings and Z-maps."""

from fractions import Fraction
import random

from liedouble.dvb import (DecomposedDVB, build_Z_maps, check_interchange,
                           check_pairing_nondegenerate, check_zmaps,
                           cotangent_model, dvb_add, dvb_scale, pair_duals)


def test_zmaps_both_sign_conventions():
    for sign in ("plus", "minus"):
        D = DecomposedDVB(2, 2, 1, sign=sign)
        rep = check_zmaps(D)
        assert rep.passed, rep.to_text()


def test_pairing_nondegenerate_reports_rank():
    D = DecomposedDVB(2, 1, 2)
    rep = check_pairing_nondegenerate(D)
    assert rep.passed
    assert rep.details["rank"] == 1 + 2  # core + complement block


def test_interchange_identity():
    for sign in ("plus", "minus"):
        rep = check_interchange(DecomposedDVB(1, 2, 1, sign=sign))
        assert rep.passed, rep.to_text()


def test_pair_duals_is_independent_of_element():
    D = DecomposedDVB(2, 2, 2)
    rng = random.Random(1)
    def rv(n):
        return tuple(Fraction(rng.randint(-4, 4)) for _ in range(n))
    kappa = rv(2)
    Phi = D.dual_v(rv(2), kappa, rv(2))
    Psi = D.dual_h(rv(2), kappa, rv(2))
    vals = {D.pair_duals(Phi, Psi, D.element(Phi.h, Psi.v, rv(2)))
            for _ in range(20)}
    assert len(vals) == 1


def test_additivity_in_both_directions():
    D = DecomposedDVB(1, 1, 1)
    a = D.element((1,), (2,), (3,))
    b = D.element((1,), (5,), (7,))
    s = dvb_add("vertical", a, b)
    assert s.h == (1,) and s.v == (7,) and s.k == (10,)
    t = dvb_scale("horizontal", 2, a)
    assert t.h == (2,) and t.k == (6,) and t.v == (2,)


def test_cotangent_model_vue():
    for n, d in ((1, 1), (2, 1), (2, 2)):
        rep = cotangent_model(n, d).check_vue()
        assert rep.passed, rep.to_text()


def test_zmaps_are_built_consistently():
    D = DecomposedDVB(2, 1, 1, sign="minus")
    Z = build_Z_maps(D)
    rep = check_zmaps(D)
    assert rep.passed
    assert Z.D is D
