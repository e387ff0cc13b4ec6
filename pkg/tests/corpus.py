"""Shared corpus of matched pairs and validated single-equation mutations.

Each entry yields a fresh MatchedPair (tests mutate them freely).  The
mutation recipes below were validated computationally: every mutant fails
check_matched_pair, fails check_axioms on the forced direct-sum double,
and fails check_bialgebroid on the derived semidirect pair, while every
unmutated pair passes all three.

Not every equation of the matched-pair definition is expressible for
every base pair (point-base pairs have no eq3 instances; abelian low-rank
sides trivialise eq1), so the three mutations per pair target whichever
identities are actually breakable for that shape.
"""

from liedouble.poly import Polynomial, ZERO, ONE
from liedouble.algebroid import LieAlgebroid
from liedouble.matched_pair import MatchedPair, Representation

X = Polynomial.var("x")


def pair_point():
    """Rank-1 action pair over a point: rho_X(Y) = Y, sigma = 0."""
    A = LieAlgebroid.lie_algebra(1, {})
    B = LieAlgebroid.lie_algebra(1, {})
    return MatchedPair(A, B, Representation(A, 1, [[[1]]]),
                       Representation.zero(B, 1), name="point")


def pair_aff():
    """aff(1) acting on an abelian rank-2 pair over a point."""
    A = LieAlgebroid.lie_algebra(2, {(0, 1): [0, 1]})
    B = LieAlgebroid.lie_algebra(2, {})
    rho = Representation(A, 2, [[[1, 0], [0, 0]], [[0, 1], [0, 0]]])
    return MatchedPair(A, B, rho, Representation.zero(B, 2), name="aff")


def pair_gl2():
    """Borel-type rank-3 algebra matched with a rank-1 complement; both
    representations are nonzero."""
    A = LieAlgebroid.lie_algebra(3, {(0, 2): [0, 0, 1], (1, 2): [0, 0, -1]})
    B = LieAlgebroid.lie_algebra(1, {})
    rho = Representation(A, 1, [[[-1]], [[1]], [[0]]])
    sigma = Representation(B, 3, [[[0, 0, 0], [0, 0, 0], [-1, 1, 0]]])
    return MatchedPair(A, B, rho, sigma, name="gl2")


def pair_line():
    """Trivial rank-1 bundle matched with the tangent algebroid of a line."""
    A = LieAlgebroid(("x",), 1)
    B = LieAlgebroid.tangent(("x",))
    return MatchedPair(A, B, Representation.zero(A, 1),
                       Representation.zero(B, 1), name="line")


def pair_plane():
    """Trivial rank-1 bundle matched with the tangent algebroid of a plane."""
    A = LieAlgebroid(("x", "y"), 1)
    B = LieAlgebroid.tangent(("x", "y"))
    return MatchedPair(A, B, Representation.zero(A, 2),
                       Representation.zero(B, 1), name="plane")


def pair_tt():
    """Two copies of the tangent algebroid of a line, zero cross actions."""
    A = LieAlgebroid.tangent(("x",))
    B = LieAlgebroid.tangent(("x",))
    return MatchedPair(A, B, Representation.zero(A, 1),
                       Representation.zero(B, 1), name="tt")


def _mut_aff_rho(mp):
    """Breaks flatness of rho: [R1,R2] no longer matches rho_[e1,e2]."""
    mp.rho = Representation(mp.A, 2, [[[1, 0], [0, 0]], [[1, 0], [0, 1]]])


def _mut_aff_sigma(mp):
    """sigma_f1(e1) = e1 violates the sigma compatibility equation."""
    mp.sigma = Representation(mp.B, 2, [[[1, 0], [0, 0]], [[0, 0], [0, 0]]])


def _mut_aff_bracket(mp):
    """Changing [e1,e2] to e1 keeps A a Lie algebra but breaks rho."""
    A2 = LieAlgebroid.lie_algebra(2, {(0, 1): [1, 0]})
    mp.A = A2
    mp.rho = Representation(A2, 2, mp.rho.matrices)


def _mut_gl2_rho1(mp):
    mp.rho = Representation(mp.A, 1, [[[1]], [[1]], [[0]]])


def _mut_gl2_sigma(mp):
    mp.sigma = Representation(mp.B, 3, [[[0, 0, 0], [0, 0, 0], [1, 0, 0]]])


def _mut_gl2_rho3(mp):
    mp.rho = Representation(mp.A, 1, [[[-1]], [[1]], [[1]]])


def _mut_line_rho1(mp):
    mp.rho = Representation(mp.A, 1, [[[ONE]]])


def _mut_line_rhox(mp):
    mp.rho = Representation(mp.A, 1, [[[X]]])


def _mut_line_anchor(mp):
    A2 = LieAlgebroid(("x",), 1, anchor=[[X]])
    mp.A = A2
    mp.rho = Representation(A2, 1, mp.rho.matrices)


def _mut_plane_rho1(mp):
    mp.rho = Representation(mp.A, 2, [[[ONE, ZERO], [ZERO, ZERO]]])


def _mut_plane_sigma(mp):
    Y = Polynomial.var("y")
    mp.sigma = Representation(mp.B, 1, [[[Y]], [[ZERO]]])


def _mut_plane_rho2(mp):
    mp.rho = Representation(mp.A, 2, [[[ZERO, ONE], [ZERO, ZERO]]])


def _mut_tt_rho1(mp):
    mp.rho = Representation(mp.A, 1, [[[ONE]]])


def _mut_tt_sigma(mp):
    mp.sigma = Representation(mp.B, 1, [[[ONE]]])


def _mut_tt_rhox(mp):
    mp.rho = Representation(mp.A, 1, [[[X]]])


# pair constructor -> three mutation recipes, each applied to a fresh copy
MUTATIONS = {
    pair_aff: (_mut_aff_rho, _mut_aff_sigma, _mut_aff_bracket),
    pair_gl2: (_mut_gl2_rho1, _mut_gl2_sigma, _mut_gl2_rho3),
    pair_line: (_mut_line_rho1, _mut_line_rhox, _mut_line_anchor),
    pair_plane: (_mut_plane_rho1, _mut_plane_sigma, _mut_plane_rho2),
    pair_tt: (_mut_tt_rho1, _mut_tt_sigma, _mut_tt_rhox),
}

ALL_PAIRS = (pair_point, pair_aff, pair_gl2, pair_line, pair_plane, pair_tt)
MUTATION_PAIRS = tuple(MUTATIONS)


def mutants(maker):
    """Yield (label, mutated pair) for each recipe registered for maker."""
    for recipe in MUTATIONS[maker]:
        mp = maker()
        recipe(mp)
        yield recipe.__name__.lstrip("_"), mp
