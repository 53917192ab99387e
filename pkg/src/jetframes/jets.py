"""Truncated second-order Taylor calculus: the independent ground truth.

A ``Map2Jet`` is the order-2 Taylor data of a map R^n -> R^n at a base
point: value, Jacobian and symmetric Hessian tensor, where
``hess[k][i][j]`` is the second partial of component ``k`` by arguments
``i`` and ``j``.  The represented map is

    F(base + r) = value + jac . r + 1/2 hess(r, r) + O(r^3),

so a pair (a, f) with symmetric f encodes as jac = a, hess = f with no
extra factor: the 1/2 lives in the evaluation above, not in the stored
tensor.

Everything here re-derives compositions and frame actions from the chain
rule with its own index loops.  It intentionally does not call the
contraction kernels of the core algebra, so agreement between this module
and the group laws is a genuine cross-check of two implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .bilinear import Bilinear, is_symmetric
from .errors import CompositionDomainError, NotAFrameError
from .frames import NonHolFrame, Point
from .groups import G2
from .matrices import SquareMatrix, det


def _ints2(entries) -> tuple[list[list[int]], int]:
    """Clear denominators of a matrix; local twin of the core helper."""
    den = 1
    for row in entries:
        for e in row:
            den = lcm(den, e.denominator)
    return [[e.numerator * (den // e.denominator) for e in row]
            for row in entries], den


def _ints3(coeffs) -> tuple[list[list[list[int]]], int]:
    den = 1
    for plane in coeffs:
        for row in plane:
            for e in row:
                den = lcm(den, e.denominator)
    return [[[e.numerator * (den // e.denominator) for e in row]
             for row in plane] for plane in coeffs], den


def _fr2(ints, den) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(e, den) for e in row) for row in ints)


def _fr3(ints, den) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
    return tuple(tuple(tuple(Fraction(e, den) for e in row) for row in plane)
                 for plane in ints)


@dataclass(frozen=True, slots=True)
class Map2Jet:
    base: Point
    value: Point
    jac: SquareMatrix
    hess: Bilinear

    def __post_init__(self) -> None:
        n = self.jac.n
        if len(self.base) != n or len(self.value) != n or self.hess.n != n:
            raise ValueError("dimension mismatch between components")
        if not is_symmetric(self.hess):
            raise ValueError("hessian must be symmetric in its argument slots")

    @property
    def n(self) -> int:
        return self.jac.n

    @classmethod
    def identity(cls, base: Point) -> "Map2Jet":
        n = len(base)
        return cls(base, base, SquareMatrix.identity(n), Bilinear.zero(n))


@dataclass(frozen=True, slots=True)
class FMJetData:
    """Raw 1-jet data of a frame-field map r -> (phi(r), phi_lin(r)).

    ``phi0`` and ``phi_lin`` are the values at 0 of the base map and the
    frame part; ``dphi`` and ``dphi_lin`` are their first derivatives at 0,
    with ``dphi_lin.coeffs[k][l][j]`` the derivative of entry (k, l) by
    ``r^j``.
    """

    phi0: Point
    phi_lin: SquareMatrix
    dphi: SquareMatrix
    dphi_lin: Bilinear

    def __post_init__(self) -> None:
        n = self.phi_lin.n
        if len(self.phi0) != n or self.dphi.n != n or self.dphi_lin.n != n:
            raise ValueError("dimension mismatch between components")

    @property
    def n(self) -> int:
        return self.phi_lin.n


def compose_2jets(g: Map2Jet, f: Map2Jet) -> Map2Jet:
    """Jet of g o f by the truncated chain rule; needs g.base == f.value."""
    if g.n != f.n:
        raise CompositionDomainError("jets of different dimension")
    if g.base != f.value:
        raise CompositionDomainError("outer jet is not based at the inner value")
    n = g.n
    gj, gjd = _ints2(g.jac.entries)
    fj, fjd = _ints2(f.jac.entries)
    gh, ghd = _ints3(g.hess.coeffs)
    fh, fhd = _ints3(f.hess.coeffs)
    rng = range(n)
    jac = _fr2([[sum(gj[k][m] * fj[m][i] for m in rng) for i in rng]
                for k in rng], gjd * fjd)
    # common denominator for gj.fh (gjd*fhd) and gh.fj.fj (ghd*fjd*fjd)
    den1 = gjd * fhd
    den2 = ghd * fjd * fjd
    common = lcm(den1, den2)
    m1 = common // den1
    m2 = common // den2
    hess = _fr3(
        [[[m1 * sum(gj[k][m] * fh[m][i][j] for m in rng)
           + m2 * sum(gh[k][p][q] * fj[p][i] * fj[q][j]
                      for p in rng for q in rng)
           for j in rng] for i in rng] for k in rng],
        common)
    return Map2Jet(f.base, g.value, SquareMatrix(n, jac), Bilinear(n, hess))


def _jet_of_pair(a: SquareMatrix, f: Bilinear) -> Map2Jet:
    origin = (Fraction(0),) * a.n
    return Map2Jet(origin, origin, a, f)


def g2_law_via_jets(p: G2, q: G2) -> G2:
    """Product of two symmetric pairs computed purely by jet composition."""
    composed = compose_2jets(_jet_of_pair(p.a, p.f), _jet_of_pair(q.a, q.f))
    return G2(composed.jac, composed.hess)


def frame_from_fm_map(d: FMJetData) -> NonHolFrame:
    """Read the frame (phi0, phi_lin, dphi, dphi_lin) off frame-field data."""
    if det(d.dphi) == 0:
        raise NotAFrameError("base-map derivative is singular")
    if det(d.phi_lin) == 0:
        raise NotAFrameError("frame part is singular")
    return NonHolFrame(d.phi0, d.phi_lin, d.dphi, d.dphi_lin)


def left_act_diffeo(F: Map2Jet, q: NonHolFrame) -> NonHolFrame:
    """Push a frame forward along the prolongation of a local diffeo.

    The frame field r -> (phi(r), PHI(r)) maps to
    r -> (F(phi(r)), DF(phi(r)) . PHI(r)); differentiating at 0 gives

        x' = F(x),  a' = DF(x) a,  b' = DF(x) b,
        f'[k][l][j] = sum_m DF[k][m] f[m][l][j]
                    + sum_{m,p} D2F[k][m][p] a[m][l] b[p][j].
    """
    if F.n != q.n:
        raise CompositionDomainError("jet and frame dimensions differ")
    if F.base != q.x:
        raise CompositionDomainError("jet is not based at the frame's point")
    if det(F.jac) == 0:
        raise NotAFrameError("jet is not a local diffeomorphism")
    n = q.n
    J, Jd = _ints2(F.jac.entries)
    H, Hd = _ints3(F.hess.coeffs)
    A, Ad = _ints2(q.a.entries)
    B, Bd = _ints2(q.b.entries)
    f, fd = _ints3(q.f.coeffs)
    rng = range(n)
    a_new = _fr2([[sum(J[k][m] * A[m][i] for m in rng) for i in rng]
                  for k in rng], Jd * Ad)
    b_new = _fr2([[sum(J[k][m] * B[m][i] for m in rng) for i in rng]
                  for k in rng], Jd * Bd)
    den1 = Jd * fd
    den2 = Hd * Ad * Bd
    common = lcm(den1, den2)
    m1 = common // den1
    m2 = common // den2
    f_new = _fr3(
        [[[m1 * sum(J[k][m] * f[m][l][j] for m in rng)
           + m2 * sum(H[k][m][p] * A[m][l] * B[p][j] for m in rng for p in rng)
           for j in rng] for l in rng] for k in rng],
        common)
    return NonHolFrame(F.value, SquareMatrix(n, a_new), SquareMatrix(n, b_new),
                       Bilinear(n, f_new))
