"""Coordinate models of second-order frames over the single global chart R^n.

A frame is stored as its base point plus a group part; the right actions of
the structure groups are then just the group laws applied to the group part,
with the base point fixed.  Three kinds exist:

* ``NonHolFrame``  (x, a, b, f): two independent invertible matrices and an
  unrestricted bilinear part.
* ``SemiHolFrame`` (x, a, f): the two matrices agree; embedding into the
  non-holonomic model sets b := a.
* ``HolFrame``     (x, a, f): additionally f is symmetric in its two
  argument slots.

The projection ``proj_pi`` from non-holonomic to semi-holonomic frames
follows the coordinate formula (x, a, f(I, a)) literally, contracting the
second argument slot of f with the a-part.  Note that this contraction uses
a and not b, so embedded semi-holonomic frames are not fixed pointwise
unless a = I; see the README for the consequences on orbit invariance of the
composed projection ``proj_tilde22``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _scaled as sc
from .bilinear import Bilinear, is_skew, is_symmetric, sym_part
from .errors import SingularMatrixError
from .groups import G2, GHat2, GTilde2, GTilde22, inv_g2, mul_hat2
from .matrices import SquareMatrix, det

Point = tuple[Fraction, ...]


def _m(x: SquareMatrix) -> sc.Mat:
    return sc.smat(x.entries)


def _b(x: Bilinear) -> sc.Bil:
    return sc.sbil(x.coeffs)


def _mat(n: int, s: sc.Mat) -> SquareMatrix:
    return SquareMatrix(n, sc.mat_entries(s))


def _bil(n: int, s: sc.Bil) -> Bilinear:
    return Bilinear(n, sc.bil_coeffs(s))


def _require_invertible(m: SquareMatrix, what: str) -> None:
    if det(m) == 0:
        raise SingularMatrixError(f"{what} must be invertible")


def _check_point(x: Point, n: int) -> None:
    if len(x) != n:
        raise ValueError("base point has wrong dimension")


@dataclass(frozen=True, slots=True)
class NonHolFrame:
    x: Point
    a: SquareMatrix
    b: SquareMatrix
    f: Bilinear

    def __post_init__(self) -> None:
        n = self.a.n
        _check_point(self.x, n)
        if not (self.b.n == n == self.f.n):
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "frame part a")
        _require_invertible(self.b, "frame part b")

    @property
    def n(self) -> int:
        return self.a.n


@dataclass(frozen=True, slots=True)
class SemiHolFrame:
    x: Point
    a: SquareMatrix
    f: Bilinear

    def __post_init__(self) -> None:
        n = self.a.n
        _check_point(self.x, n)
        if self.f.n != n:
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "frame part a")

    @property
    def n(self) -> int:
        return self.a.n


@dataclass(frozen=True, slots=True)
class HolFrame:
    x: Point
    a: SquareMatrix
    f: Bilinear

    def __post_init__(self) -> None:
        n = self.a.n
        _check_point(self.x, n)
        if self.f.n != n:
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "frame part a")
        if not is_symmetric(self.f):
            raise ValueError("holonomic frame needs a symmetric bilinear part")

    @property
    def n(self) -> int:
        return self.a.n


@dataclass(frozen=True, slots=True)
class LinFrame:
    x: Point
    a: SquareMatrix

    def __post_init__(self) -> None:
        _check_point(self.x, self.a.n)
        _require_invertible(self.a, "frame part a")

    @property
    def n(self) -> int:
        return self.a.n


AnySecondOrderFrame = NonHolFrame | SemiHolFrame | HolFrame


# ---------------------------------------------------------------------------
# embeddings and classification


def embed_hol(q: HolFrame) -> SemiHolFrame:
    return SemiHolFrame(q.x, q.a, q.f)


def embed_semihol(q: SemiHolFrame) -> NonHolFrame:
    return NonHolFrame(q.x, q.a, q.a, q.f)


def classify(q: NonHolFrame) -> str:
    """Strongest class of a frame: holonomic > semiholonomic > nonholonomic."""
    if q.a != q.b:
        return "nonholonomic"
    if is_symmetric(q.f):
        return "holonomic"
    return "semiholonomic"


# ---------------------------------------------------------------------------
# right actions (base point fixed, group law on the group part)


def act_nonhol(q: NonHolFrame, g: GTilde2) -> NonHolFrame:
    n = q.n
    a1, b1, f1 = _m(q.a), _m(q.b), _b(q.f)
    a2, b2, f2 = _m(g.a), _m(g.b), _b(g.f)
    bilinear = sc.s_add(sc.s_post(a1, f2), sc.s_pre(f1, a2, b2))
    return NonHolFrame(q.x, _mat(n, sc.s_matmul(a1, a2)),
                       _mat(n, sc.s_matmul(b1, b2)), _bil(n, bilinear))


def act_semihol(q: SemiHolFrame, g: GHat2 | G2) -> SemiHolFrame:
    n = q.n
    a1, f1 = _m(q.a), _b(q.f)
    a2, f2 = _m(g.a), _b(g.f)
    bilinear = sc.s_add(sc.s_post(a1, f2), sc.s_pre(f1, a2, a2))
    return SemiHolFrame(q.x, _mat(n, sc.s_matmul(a1, a2)), _bil(n, bilinear))


def act_hol(q: HolFrame, g: G2) -> HolFrame:
    moved = act_semihol(SemiHolFrame(q.x, q.a, q.f), g)
    return HolFrame(moved.x, moved.a, moved.f)


def act_tilde22(q: NonHolFrame, g: GTilde22) -> NonHolFrame:
    """Right action (x, a, b, f)(I, l, h) = (x, a, bl, a o h + f(I, l))."""
    return act_nonhol(q, GTilde2(SquareMatrix.identity(q.n), g.l, g.h))


# ---------------------------------------------------------------------------
# projections


def proj_pi(q: NonHolFrame) -> SemiHolFrame:
    """Drop b and contract: (x, a, b, f) -> (x, a, f(I, a))."""
    return SemiHolFrame(q.x, q.a, _bil(q.n, sc.s_pre_right(_b(q.f), _m(q.a))))


def proj_hat22(q: SemiHolFrame) -> HolFrame:
    """Symmetrize the bilinear part: (x, a, f) -> (x, a, sym_part(f))."""
    return HolFrame(q.x, q.a, sym_part(q.f))


def proj_tilde22(q: NonHolFrame) -> HolFrame:
    return proj_hat22(proj_pi(q))


def proj_21(q: AnySecondOrderFrame) -> LinFrame:
    return LinFrame(q.x, q.a)


def proj_20(q: AnySecondOrderFrame) -> Point:
    return q.x


def proj_10(q: LinFrame) -> Point:
    return q.x


def fiber_hat22_contains(q: HolFrame, p: SemiHolFrame) -> bool:
    """Is p in the fiber of ``proj_hat22`` over q (i.e. p = q . (I, skew))?"""
    return p.x == q.x and p.a == q.a and sym_part(p.f) == q.f


# ---------------------------------------------------------------------------
# the extension model of semi-holonomic frames


@dataclass(frozen=True, slots=True)
class ExtClass:
    """A class [(p, k)] with p holonomic and k a GHat2 element.

    (p, k) and (p auto, auto^-1 k) are identified for every symmetric-group
    element auto; the stored representative is canonical with k = (I, h),
    h skew, obtained by absorbing the symmetric part of k into p.  Build
    instances through ``ext_class`` unless the data is already canonical.
    """

    p: HolFrame
    k: GHat2

    def __post_init__(self) -> None:
        if self.p.n != self.k.n:
            raise ValueError("dimension mismatch between components")
        if not self.k.a.is_identity():
            raise ValueError("canonical class needs k = (I, h); use ext_class()")
        if not is_skew(self.k.f):
            raise ValueError("canonical class needs skew k.f; use ext_class()")


def ext_class(p: HolFrame, k: GHat2) -> ExtClass:
    """Canonicalize (p, k): absorb (k.a, sym k.f) into p, leaving (I, skew)."""
    alpha = G2(k.a, sym_part(k.f))
    p_new = act_hol(p, alpha)
    k_new = mul_hat2(inv_g2(alpha), k)
    return ExtClass(p_new, k_new)


def theta(c: ExtClass) -> SemiHolFrame:
    """Evaluate the class: [(p, k)] -> p . k as a semi-holonomic frame."""
    return act_semihol(embed_hol(c.p), c.k)


def theta_inv(q: SemiHolFrame) -> ExtClass:
    p = HolFrame(q.x, q.a, sym_part(q.f))
    k = GHat2.from_bilinear(
        _bil(q.n, sc.s_post(sc.s_matinv(_m(q.a)), sc.s_skew(_b(q.f)))))
    return ExtClass(p, k)


# ---------------------------------------------------------------------------
# the principal structure of proj_hat22


def omega(member: SemiHolFrame) -> HolFrame:
    """Image of the skew-orbit of ``member``; independent of the member."""
    return proj_hat22(member)


def sigma(p: SemiHolFrame) -> Bilinear:
    """Skew fiber coordinate of the trivialization over holonomic frames.

    Defined by (a, f) = (a, sym_part(f)) * (I, sigma(p)) in GHat2, which
    solves to a^-1 o skew_part(f).
    """
    return _bil(p.n, sc.s_post(sc.s_matinv(_m(p.a)), sc.s_skew(_b(p.f))))
