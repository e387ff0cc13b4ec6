"""Decomposed double vector bundles over exact rationals.

A double vector bundle is modelled fiberwise as H + V + K at a fixed base
point: an element carries coordinates (h; v; k) and the two additions act
on (v, k) with h fixed (vertical) or on (h, k) with v fixed (horizontal).
The two duals, their pairing over K*, the maps Z_V and Z_H, and the
tangent/cotangent models with the isomorphisms R and I are all realized
as finite exact computations.  Coordinates may be rationals or
polynomials, so every identity can be checked symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, RationalMatrix
from .report import CheckReport


def _dot(a, b):
    total = Fraction(0)
    for x, y in zip(a, b):
        total = x * y + total
    return total


def _addv(a, b):
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class DVBElement:
    """Element (h; v; k) of a decomposed double vector bundle."""
    h: tuple
    v: tuple
    k: tuple


@dataclass(frozen=True)
class DualElementV:
    """Element of the vertical dual: sits over h, projects to kappa in K*,
    with core coordinates phi in (A^V)*."""
    h: tuple
    kappa: tuple
    phi: tuple

    def eval(self, xi: DVBElement):
        if tuple(self.h) != tuple(xi.h):
            raise ValueError("incompatible elements for this pairing")
        return _dot(self.phi, xi.v) + _dot(self.kappa, xi.k)


@dataclass(frozen=True)
class DualElementH:
    """Element of the horizontal dual, over v, with core psi in (A^H)*."""
    v: tuple
    kappa: tuple
    psi: tuple

    def eval(self, xi: DVBElement):
        if tuple(self.v) != tuple(xi.v):
            raise ValueError("incompatible elements for this pairing")
        return _dot(self.psi, xi.h) + _dot(self.kappa, xi.k)


def dvb_add(direction: str, xi1: DVBElement, xi2: DVBElement) -> DVBElement:
    """The two additions of the decomposed model.

    Vertical addition requires equal h; horizontal requires equal v.  The
    interchange law holds wherever both sides are defined.
    """
    if direction == "vertical":
        if tuple(xi1.h) != tuple(xi2.h):
            raise ValueError("incompatible elements for this addition")
        return DVBElement(xi1.h, _addv(xi1.v, xi2.v), _addv(xi1.k, xi2.k))
    if direction == "horizontal":
        if tuple(xi1.v) != tuple(xi2.v):
            raise ValueError("incompatible elements for this addition")
        return DVBElement(_addv(xi1.h, xi2.h), xi1.v, _addv(xi1.k, xi2.k))
    raise ValueError("direction must be 'vertical' or 'horizontal'")


def dvb_scale(direction: str, t, xi: DVBElement) -> DVBElement:
    """Scalar multiplication of each structure (core always scales)."""
    if direction == "vertical":
        return DVBElement(xi.h, tuple(t * x for x in xi.v), tuple(t * x for x in xi.k))
    if direction == "horizontal":
        return DVBElement(tuple(t * x for x in xi.h), xi.v, tuple(t * x for x in xi.k))
    raise ValueError("direction must be 'vertical' or 'horizontal'")


def dual_project(Phi: DualElementV) -> tuple:
    """Projection of the vertical dual to K*: just kappa in this model."""
    return tuple(Phi.kappa)


def pair_duals(Phi: DualElementV, Psi: DualElementH, xi: DVBElement, sign: int = 1):
    """Pairing of the two duals over K*, evaluated through any compatible xi.

    Returns eval(Psi, xi) - eval(Phi, xi) = psi.h - phi.v, which is
    independent of the core part of xi; negated for the minus convention.
    """
    if tuple(Phi.kappa) != tuple(Psi.kappa):
        raise ValueError("elements not composable over K*")
    if tuple(Phi.h) != tuple(xi.h) or tuple(Psi.v) != tuple(xi.v):
        raise ValueError("elements not composable over K*")
    value = Psi.eval(xi) - Phi.eval(xi)
    return value if sign > 0 else -value


class DecomposedDVB:
    """Fiber model with dimensions (dim_h, dim_v, dim_k) and a sign flag.

    The sign decorates the duals pairing: 'minus' replaces it by its
    negative, and the Z maps adjust so they still intertwine the pairing
    with the canonical dualities.
    """

    def __init__(self, dim_h: int, dim_v: int, dim_k: int, sign: str = "plus"):
        if min(dim_h, dim_v, dim_k) < 0:
            raise ValueError("dimensions must be nonnegative")
        if sign not in ("plus", "minus"):
            raise ValueError("sign must be 'plus' or 'minus'")
        self.dim_h = dim_h
        self.dim_v = dim_v
        self.dim_k = dim_k
        self.sign = sign

    @property
    def sign_factor(self) -> int:
        return 1 if self.sign == "plus" else -1

    def element(self, h, v, k) -> DVBElement:
        h, v, k = tuple(h), tuple(v), tuple(k)
        if (len(h), len(v), len(k)) != (self.dim_h, self.dim_v, self.dim_k):
            raise ValueError("coordinate lengths do not match the model")
        return DVBElement(h, v, k)

    def dual_v(self, h, kappa, phi) -> DualElementV:
        h, kappa, phi = tuple(h), tuple(kappa), tuple(phi)
        if (len(h), len(kappa), len(phi)) != (self.dim_h, self.dim_k, self.dim_v):
            raise ValueError("coordinate lengths do not match the model")
        return DualElementV(h, kappa, phi)

    def dual_h(self, v, kappa, psi) -> DualElementH:
        v, kappa, psi = tuple(v), tuple(kappa), tuple(psi)
        if (len(v), len(kappa), len(psi)) != (self.dim_v, self.dim_k, self.dim_h):
            raise ValueError("coordinate lengths do not match the model")
        return DualElementH(v, kappa, psi)

    def pair_duals(self, Phi, Psi, xi):
        return pair_duals(Phi, Psi, xi, self.sign_factor)

    def symbolic_element(self, prefix: str) -> DVBElement:
        v = Polynomial.var
        return DVBElement(
            tuple(v("%sh%d" % (prefix, i)) for i in range(self.dim_h)),
            tuple(v("%sv%d" % (prefix, i)) for i in range(self.dim_v)),
            tuple(v("%sk%d" % (prefix, i)) for i in range(self.dim_k)))


class ZMaps:
    """The canonical isomorphisms induced by the duals pairing.

    Z_V maps the dual (over K*) of the horizontal dual onto the vertical
    dual; Z_H is its counterpart.  Inputs are (side; kappa; core) triples:
    Z_V takes (h, kappa, phi~) with phi~ over (A^V)*, Z_H takes
    (v, kappa, psi) with psi over (A^H)*.
    """

    def __init__(self, D: DecomposedDVB):
        self.D = D
        s = D.sign_factor

        def blockdiag(*blocks):
            size = sum(len(b.entries) for b in blocks)
            m = RationalMatrix.zeros(size, size)
            off = 0
            for b in blocks:
                for i in range(b.rows):
                    for j in range(b.cols):
                        m.entries[off + i][off + j] = b.entries[i][j]
                off += b.rows
            return m

        Ih = RationalMatrix.identity(D.dim_h)
        Iv = RationalMatrix.identity(D.dim_v)
        Ik = RationalMatrix.identity(D.dim_k)
        if s > 0:
            self.zv_matrix = blockdiag(Ih, Ik, -Iv)
            self.zh_matrix = blockdiag(-Iv, Ik, Ih)
        else:
            self.zv_matrix = blockdiag(-Ih, Ik, Iv)
            self.zh_matrix = blockdiag(Iv, Ik, -Ih)

    def z_v(self, h, kappa, phi_tilde) -> DualElementV:
        s = self.D.sign_factor
        if s > 0:
            return self.D.dual_v(h, kappa, tuple(-x for x in phi_tilde))
        return self.D.dual_v(tuple(-x for x in h), kappa, phi_tilde)

    def z_h(self, v, kappa, psi) -> DualElementH:
        s = self.D.sign_factor
        if s > 0:
            return self.D.dual_h(tuple(-x for x in v), kappa, psi)
        return self.D.dual_h(v, kappa, tuple(-x for x in psi))


def build_Z_maps(D: DecomposedDVB) -> ZMaps:
    return ZMaps(D)


def canonical_pairing_v(G, Phi: DualElementV):
    """Canonical pairing over K* of the vertical dual with its dual.

    G is a triple (v', kappa, psi') from the dual of the vertical dual;
    the value is psi'.h + phi.v'.
    """
    v_, kappa, psi_ = G
    if tuple(kappa) != tuple(Phi.kappa):
        raise ValueError("elements not composable over K*")
    return _dot(psi_, Phi.h) + _dot(Phi.phi, v_)


def canonical_pairing_h(F, Psi: DualElementH):
    """Canonical pairing over K* of the horizontal dual with its dual.

    F is a triple (h', kappa, phi~); the value is phi~.v + h'.psi.
    """
    h_, kappa, phit = F
    if tuple(kappa) != tuple(Psi.kappa):
        raise ValueError("elements not composable over K*")
    return _dot(phit, Psi.v) + _dot(h_, Psi.psi)


def check_zmaps(D: DecomposedDVB) -> CheckReport:
    """Verify the defining properties of Z_V and Z_H symbolically.

    Checks: both maps intertwine the duals pairing with the canonical
    pairings; adjointness <Z_V(F), G> = <F, Z_H(G)> over K*; Z_V fixes the
    sides and is -id on the core, Z_H fixes K* and the core and is -id on
    the side (for the plus convention, mirrored for minus).
    """
    rep = CheckReport("zmaps")
    z = build_Z_maps(D)
    var = Polynomial.var
    h = tuple(var("h%d" % i) for i in range(D.dim_h))
    v = tuple(var("v%d" % i) for i in range(D.dim_v))
    k = tuple(var("k%d" % i) for i in range(D.dim_k))
    kappa = tuple(var("q%d" % i) for i in range(D.dim_k))
    phit = tuple(var("a%d" % i) for i in range(D.dim_v))
    psi = tuple(var("b%d" % i) for i in range(D.dim_h))
    phi = tuple(var("c%d" % i) for i in range(D.dim_v))
    psi2 = tuple(var("d%d" % i) for i in range(D.dim_h))
    vprime = tuple(var("e%d" % i) for i in range(D.dim_v))

    F = (h, kappa, phit)                     # element of (A^{*H})-dagger
    G = (vprime, kappa, psi2)                # element of (A^{*V})-dagger
    Psi = D.dual_h(v, kappa, psi)
    xi = D.element(z.z_v(*F).h, v, k)

    # Z_V intertwines the duals pairing with the canonical pairing
    lhs = D.pair_duals(z.z_v(*F), Psi, xi)
    rep.require("Z_V intertwines Eq(3)", lhs - canonical_pairing_h(F, Psi))

    # Z_H likewise
    PhiV = D.dual_v(h, kappa, phi)
    xi2 = D.element(h, z.z_h(*G).v, k)
    lhs2 = D.pair_duals(PhiV, z.z_h(*G), xi2)
    rep.require("Z_H intertwines Eq(3)", lhs2 - canonical_pairing_v(G, PhiV))

    # adjointness over K*: Z_V = Z_H^dagger
    left = canonical_pairing_v(G, z.z_v(*F))
    right = canonical_pairing_h(F, z.z_h(*G))
    rep.require("Z_V = Z_H^dagger", left - right)

    # side and core behavior
    s = D.sign_factor
    zv = z.z_v(*F)
    rep.require("Z_V side A^H", _dot(zv.h, psi) - s * _dot(h, psi))
    rep.require("Z_V kappa", _dot(zv.kappa, k) - _dot(kappa, k))
    rep.require("Z_V core -id", _dot(zv.phi, v) + s * _dot(phit, v))
    zh = z.z_h(*G)
    rep.require("Z_H side -id", _dot(zh.v, phi) + s * _dot(vprime, phi))
    rep.require("Z_H kappa", _dot(zh.kappa, k) - _dot(kappa, k))
    rep.require("Z_H core (A^H)*", _dot(zh.psi, h) - s * _dot(psi2, h))
    return rep


def check_pairing_nondegenerate(D: DecomposedDVB) -> CheckReport:
    """Rank of the fiberwise Gram matrix of the duals pairing.

    Over each kappa the pairing couples (h, phi) against (v, psi) through
    sign * (psi.h - phi.v); full rank dim_h + dim_v means nondegenerate.
    """
    rep = CheckReport("pairing-nondegenerate")
    s = D.sign_factor
    n = D.dim_h + D.dim_v
    gram = RationalMatrix.zeros(n, n)
    # rows: (h, phi); cols: (v, psi)
    for i in range(D.dim_h):
        gram.entries[i][D.dim_v + i] = Fraction(s)
    for j in range(D.dim_v):
        gram.entries[D.dim_h + j][j] = Fraction(-s)
    rank = gram.rank()
    rep.details["rank"] = rank
    if rank != n:
        rep.add("pairing rank", "rank %d != %d" % (rank, n))
    return rep


def check_interchange(D: DecomposedDVB, grid=None) -> CheckReport:
    """Interchange law of the two additions.

    Verified symbolically as a polynomial identity in all free
    coordinates of a compatible quadruple; when ``grid`` is given, also
    exhaustively over that value grid (only practical for small models).
    """
    rep = CheckReport("interchange")

    def quad_residual(xs1, xs2, xs3, xs4):
        lhs = dvb_add("horizontal",
                      dvb_add("vertical", xs1, xs2),
                      dvb_add("vertical", xs3, xs4))
        rhs = dvb_add("vertical",
                      dvb_add("horizontal", xs1, xs3),
                      dvb_add("horizontal", xs2, xs4))
        res = []
        for a, b in zip(lhs.h + lhs.v + lhs.k, rhs.h + rhs.v + rhs.k):
            res.append(a - b)
        return res

    # symbolic: free coordinates h1, h3, v1, v2, k1..k4 (h2=h1, h4=h3,
    # v3=v1, v4=v2 for a fully compatible quadruple)
    var = Polynomial.var

    def sym(prefix, n):
        return tuple(var(prefix + str(i)) for i in range(n))

    h1, h3 = sym("h1_", D.dim_h), sym("h3_", D.dim_h)
    v1, v2 = sym("v1_", D.dim_v), sym("v2_", D.dim_v)
    ks = [sym("k%d_" % j, D.dim_k) for j in range(4)]
    xs = [D.element(h1, v1, ks[0]), D.element(h1, v2, ks[1]),
          D.element(h3, v1, ks[2]), D.element(h3, v2, ks[3])]
    for i, r in enumerate(quad_residual(*xs)):
        rep.require("interchange[coord %d]" % i, r)

    if grid is not None:
        import itertools
        coords = 2 * D.dim_h + 2 * D.dim_v + 4 * D.dim_k
        for values in itertools.product([Fraction(g) for g in grid], repeat=coords):
            it = iter(values)
            gh1 = tuple(next(it) for _ in range(D.dim_h))
            gh3 = tuple(next(it) for _ in range(D.dim_h))
            gv1 = tuple(next(it) for _ in range(D.dim_v))
            gv2 = tuple(next(it) for _ in range(D.dim_v))
            gks = [tuple(next(it) for _ in range(D.dim_k)) for _ in range(4)]
            gxs = [D.element(gh1, gv1, gks[0]), D.element(gh1, gv2, gks[1]),
                   D.element(gh3, gv1, gks[2]), D.element(gh3, gv2, gks[3])]
            for r in quad_residual(*gxs):
                if r != 0:
                    rep.add("interchange grid", "at %s: %s" % (values, r))
                    return rep
    return rep


class CotangentModel:
    """Decomposed models of the tangent/cotangent doubles of a bundle.

    For a vector bundle with fiber dimension n over a base of dimension d:
    TA has coordinates (y, xdot, ydot), T(A*) has (phi, xdot, phidot),
    T*A has (y, phi_cov, p) and T*A* has (phi, y_cov, p').  The canonical
    isomorphisms R and I and the three pairings tie these together by the
    identity <F, X> + <R(F), xi> = <<X, xi>>.
    """

    def __init__(self, n: int, d: int):
        if n < 0 or d < 0:
            raise ValueError("dimensions must be nonnegative")
        self.n = n
        self.d = d

    # elements are plain coordinate triples
    def pair_cotangent_dual(self, F, X):
        """Standard pairing of T*A* with T(A*) over A*.

        F = (phi, y, p'), X = (phi, xdot, phidot); value p'.xdot + y.phidot.
        """
        phiF, y, pprime = F
        phiX, xdot, phidot = X
        if tuple(phiF) != tuple(phiX):
            raise ValueError("elements not over the same point of A*")
        return _dot(pprime, xdot) + _dot(y, phidot)

    def pair_cotangent(self, Phi, xi):
        """Standard pairing of T*A with TA over A.

        Phi = (y, phi, p), xi = (y, xdot, ydot); value p.xdot + phi.ydot.
        """
        yP, phi, p = Phi
        yX, xdot, ydot = xi
        if tuple(yP) != tuple(yX):
            raise ValueError("elements not over the same point of A")
        return _dot(p, xdot) + _dot(phi, ydot)

    def tangent_pairing(self, X, xi):
        """Tangent pairing of T(A*) and TA over TM: phidot.y + phi.ydot."""
        phi, xdotX, phidot = X
        y, xdot, ydot = xi
        if tuple(xdotX) != tuple(xdot):
            raise ValueError("elements not over the same point of TM")
        return _dot(phidot, y) + _dot(phi, ydot)

    def R(self, F):
        """The isomorphism T*A* -> T*A: (phi, y, p') -> (y, phi, -p').

        Preserves the sides A and A*, induces -id on the core T*M.
        """
        phi, y, pprime = F
        return (tuple(y), tuple(phi), tuple(-x for x in pprime))

    def I(self, X):
        """The isomorphism T(A*) -> horizontal dual of TA.

        Output as a DualElementH of the TA model: sides TM and A*, core A*.
        """
        phi, xdot, phidot = X
        return DualElementH(v=tuple(xdot), kappa=tuple(phi), psi=tuple(phidot))

    def tangent_dvb(self) -> DecomposedDVB:
        """TA as a decomposed double vector bundle: h=y, v=xdot, core=ydot."""
        return DecomposedDVB(self.n, self.d, self.n)

    def check_vue(self) -> CheckReport:
        """The very useful equation, as an exact polynomial identity."""
        rep = CheckReport("vue")
        var = Polynomial.var
        phi = tuple(var("p%d" % i) for i in range(self.n))
        y = tuple(var("y%d" % i) for i in range(self.n))
        pprime = tuple(var("c%d" % i) for i in range(self.d))
        xdot = tuple(var("u%d" % i) for i in range(self.d))
        phidot = tuple(var("f%d" % i) for i in range(self.n))
        ydot = tuple(var("w%d" % i) for i in range(self.n))
        F = (phi, y, pprime)
        X = (phi, xdot, phidot)
        xi = (y, xdot, ydot)
        lhs = self.pair_cotangent_dual(F, X) + self.pair_cotangent(self.R(F), xi)
        rep.require("Eq(5)", lhs - self.tangent_pairing(X, xi))
        # I realizes the tangent pairing through the horizontal-dual pairing
        rep.require("I defining property",
                    self.I(X).eval(DVBElement(y, xdot, ydot)) - self.tangent_pairing(X, xi))
        # R is -id on the core T*M
        core = self.R((tuple([0] * self.n), tuple([0] * self.n), pprime))
        for i, entry in enumerate(core[2]):
            rep.require("R core -id[%d]" % i, entry + pprime[i])
        return rep


def cotangent_model(n: int, d: int) -> CotangentModel:
    return CotangentModel(n, d)
