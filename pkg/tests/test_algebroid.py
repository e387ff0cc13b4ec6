"""Lie algebroid axioms, Cartan calculus and the Schouten bracket."""

import random

import pytest

from liedouble.poly import Polynomial, ZERO, ONE
from liedouble.algebroid import (LieAlgebroid, MultiSection, action_algebroid,
                                 apply_anchor, bracket_sections, check_action,
                                 check_axioms, differential, interior,
                                 lie_derivative, random_section, schouten)

x = Polynomial.var("x")


def sl2():
    return LieAlgebroid.lie_algebra(
        3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]},
        name="sl2")


def aff1():
    return LieAlgebroid.lie_algebra(2, {(0, 1): [0, 1]}, name="aff1")


def test_sl2_satisfies_axioms():
    rep = check_axioms(sl2())
    assert rep.passed and rep.witnesses == []


def test_broken_structure_fails_jacobi():
    bad = LieAlgebroid.lie_algebra(
        3, {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0]})
    rep = check_axioms(bad)
    assert not rep.passed
    assert any(w.identity.startswith("J(1,2,3)") for w in rep.witnesses)


def test_tangent_algebroid_and_anchor():
    T = LieAlgebroid.tangent(("x", "y"))
    rep = check_axioms(T)
    assert rep.passed
    f = x * x
    assert apply_anchor(T, T.frame_section(0), f) == 2 * x


def test_bracket_leibniz_rule():
    # on T(line): [x e, e] = -e since the second slot differentiates x
    T = LieAlgebroid.tangent(("x",))
    e = T.frame_section(0)
    out = bracket_sections(T, [x], e)
    assert out == [Polynomial.const(-1)]


def test_differential_of_dual_frame():
    A = aff1()
    eps2 = MultiSection(2, 1, {(1,): ONE})
    d = differential(A, eps2)
    # d eps^2 (e1, e2) = -eps^2([e1,e2]) = -1
    assert d.get((0, 1)) == Polynomial.const(-1)


def test_differential_squares_to_zero():
    A = sl2()
    rng = random.Random(3)
    for _ in range(5):
        omega = MultiSection(3, 1, {(i,): random_section(rng, A)[i]
                                    for i in range(3)})
        assert differential(A, differential(A, omega)).is_zero


def test_differential_refuses_top_degree():
    A = aff1()
    top = MultiSection(2, 2, {(0, 1): ONE})
    with pytest.raises(ValueError, match="degree exceeds rank"):
        differential(A, top)


def test_cartan_magic_formula_degree_one():
    A = sl2()
    rng = random.Random(11)
    X = random_section(rng, A)
    omega = MultiSection(3, 1, {(i,): random_section(rng, A)[i] for i in range(3)})
    lhs = lie_derivative(A, X, omega)
    rhs = interior(A, X, differential(A, omega)) + differential(
        A, interior(A, X, omega))
    assert (lhs - rhs).is_zero


def test_schouten_known_value_and_identities():
    A = sl2()
    H = MultiSection.from_section(3, A.frame_section(0))
    EF = MultiSection(3, 2, {(1, 2): ONE})
    # [H, E^F] = [H,E]^F + E^[H,F] = 2E^F - 2E^F = 0
    assert schouten(A, H, EF).is_zero

    rng = random.Random(5)
    def rnd(p):
        out = MultiSection.zero(3, p)
        for _ in range(2):
            idx = tuple(sorted(rng.sample(range(3), p)))
            out = out + MultiSection(3, p, {idx: Polynomial.const(rng.randint(-3, 3))})
        return out
    for _ in range(4):
        P, Q = rnd(2), rnd(1)
        # graded antisymmetry [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]
        sign = -1 if ((2 - 1) * (1 - 1)) % 2 == 0 else 1
        assert (schouten(A, P, Q) - schouten(A, Q, P).scale(sign)).is_zero


def test_schouten_degree_one_matches_bracket():
    A = sl2()
    rng = random.Random(9)
    Xs, Ys = random_section(rng, A), random_section(rng, A)
    lhs = schouten(A, MultiSection.from_section(3, Xs),
                   MultiSection.from_section(3, Ys))
    assert lhs.to_section() == bracket_sections(A, Xs, Ys)


def test_action_algebroid_round_trip():
    B = LieAlgebroid.tangent(("x",))
    v = Polynomial.var("v")
    act = action_algebroid(B, ("v",), [[ONE, v]])
    assert check_axioms(act).passed
    assert act.anchor[0][1] == v


def test_action_algebroid_rejects_nonlinear():
    B = LieAlgebroid.tangent(("x",))
    v = Polynomial.var("v")
    with pytest.raises(ValueError, match="action not linear over base"):
        action_algebroid(B, ("v",), [[ONE, v * v]])


def test_check_action_flags_bad_bracket():
    B = LieAlgebroid.lie_algebra(2, {(0, 1): [0, 1]})
    v = Polynomial.var("v")
    # both frames act identically, so [a1,a2]=0 but [e1,e2]=e2 acts by v d/dv
    rep = check_action(B, ("v",), [[v], [v]])
    assert not rep.passed
    assert any(w.identity.startswith("action bracket") for w in rep.witnesses)
