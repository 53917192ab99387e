"""The second-order jet group structures and the maps between them.

Every group element pairs one or two invertible matrices with a bilinear map;
what differs between the groups is only the multiplication law, so each law
gets its own element type and the laws never share code paths.  Products,
inverses and conjugations are all exact.

The element types:

* ``GTilde2``  -- triples (a, b, f); law (aa', bb', a o f' + f(a', b')).
* ``GHat2``    -- pairs (a, f) with f unrestricted; law
  (aa', a o f' + f(a', a')).
* ``G2``       -- pairs (a, f) with f symmetric; same law as ``GHat2``,
  closed because symmetrization commutes with both compositions.
* ``GTilde21`` -- pairs (a, f); law (aa', f' + f(I, a')).
* ``GTilde22`` -- pairs (l, h); the same law as ``GTilde21`` on (l, h).
  Canonical elements carry skew h, but the law does not preserve skewness
  (pre-composing a skew map on one slot only breaks the symmetry type), so
  products may leave the skew subset; construction therefore does not
  enforce it.  ``GTilde22.is_canonical`` reports it.
* ``T1nL1n``   -- pairs (a, f); law (aa', f(a', I) + a o f'(I, a^-1)),
  isomorphic to ``GHat2`` through ``tau``.

``QuotClassHat`` represents a class of ``GHat2`` modulo the skew maps; the
canonical representative keeps the unique symmetric bilinear part, which
makes class equality plain equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _scaled as sc
from .bilinear import Bilinear, is_skew, is_symmetric, sym_part
from .errors import SingularMatrixError
from .matrices import SquareMatrix, det, mat_inv, mat_mul


def _require_invertible(m: SquareMatrix, what: str) -> None:
    if det(m) == 0:
        raise SingularMatrixError(f"{what} must be invertible")


def _m(x: SquareMatrix) -> sc.Mat:
    return sc.smat(x.entries)


def _b(x: Bilinear) -> sc.Bil:
    return sc.sbil(x.coeffs)


def _mat(n: int, s: sc.Mat) -> SquareMatrix:
    return SquareMatrix(n, sc.mat_entries(s))


def _bil(n: int, s: sc.Bil) -> Bilinear:
    return Bilinear(n, sc.bil_coeffs(s))


@dataclass(frozen=True, slots=True)
class GTilde2:
    a: SquareMatrix
    b: SquareMatrix
    f: Bilinear

    def __post_init__(self) -> None:
        if not (self.a.n == self.b.n == self.f.n):
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "first matrix part")
        _require_invertible(self.b, "second matrix part")

    @property
    def n(self) -> int:
        return self.a.n

    @classmethod
    def identity(cls, n: int) -> "GTilde2":
        eye = SquareMatrix.identity(n)
        return cls(eye, eye, Bilinear.zero(n))


@dataclass(frozen=True, slots=True)
class GHat2:
    a: SquareMatrix
    f: Bilinear

    def __post_init__(self) -> None:
        if self.a.n != self.f.n:
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "matrix part")

    @property
    def n(self) -> int:
        return self.a.n

    @classmethod
    def identity(cls, n: int) -> "GHat2":
        return cls(SquareMatrix.identity(n), Bilinear.zero(n))

    @classmethod
    def from_bilinear(cls, h: Bilinear) -> "GHat2":
        """Embed a bilinear map as (I, h)."""
        return cls(SquareMatrix.identity(h.n), h)


@dataclass(frozen=True, slots=True)
class G2:
    a: SquareMatrix
    f: Bilinear

    def __post_init__(self) -> None:
        if self.a.n != self.f.n:
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "matrix part")
        if not is_symmetric(self.f):
            raise ValueError("bilinear part must be symmetric")

    @property
    def n(self) -> int:
        return self.a.n

    @classmethod
    def identity(cls, n: int) -> "G2":
        return cls(SquareMatrix.identity(n), Bilinear.zero(n))

    def as_hat2(self) -> GHat2:
        return GHat2(self.a, self.f)


@dataclass(frozen=True, slots=True)
class GTilde21:
    a: SquareMatrix
    f: Bilinear

    def __post_init__(self) -> None:
        if self.a.n != self.f.n:
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "matrix part")

    @property
    def n(self) -> int:
        return self.a.n

    @classmethod
    def identity(cls, n: int) -> "GTilde21":
        return cls(SquareMatrix.identity(n), Bilinear.zero(n))


@dataclass(frozen=True, slots=True)
class GTilde22:
    l: SquareMatrix
    h: Bilinear

    def __post_init__(self) -> None:
        if self.l.n != self.h.n:
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.l, "matrix part")

    @property
    def n(self) -> int:
        return self.l.n

    def is_canonical(self) -> bool:
        return is_skew(self.h)

    @classmethod
    def identity(cls, n: int) -> "GTilde22":
        return cls(SquareMatrix.identity(n), Bilinear.zero(n))


@dataclass(frozen=True, slots=True)
class T1nL1n:
    a: SquareMatrix
    f: Bilinear

    def __post_init__(self) -> None:
        if self.a.n != self.f.n:
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "matrix part")

    @property
    def n(self) -> int:
        return self.a.n

    @classmethod
    def identity(cls, n: int) -> "T1nL1n":
        return cls(SquareMatrix.identity(n), Bilinear.zero(n))


# ---------------------------------------------------------------------------
# multiplication laws


def mul_tilde2(x: GTilde2, y: GTilde2) -> GTilde2:
    n = x.n
    a1, b1, f1 = _m(x.a), _m(x.b), _b(x.f)
    a2, b2, f2 = _m(y.a), _m(y.b), _b(y.f)
    bilinear = sc.s_add(sc.s_post(a1, f2), sc.s_pre(f1, a2, b2))
    return GTilde2(_mat(n, sc.s_matmul(a1, a2)), _mat(n, sc.s_matmul(b1, b2)),
                   _bil(n, bilinear))


def mul_hat2(x: GHat2 | G2, y: GHat2 | G2) -> GHat2:
    n = x.n
    a1, f1 = _m(x.a), _b(x.f)
    a2, f2 = _m(y.a), _b(y.f)
    bilinear = sc.s_add(sc.s_post(a1, f2), sc.s_pre(f1, a2, a2))
    return GHat2(_mat(n, sc.s_matmul(a1, a2)), _bil(n, bilinear))


def mul_g2(x: G2, y: G2) -> G2:
    """The same law as ``mul_hat2``, statically closed on symmetric parts."""
    z = mul_hat2(x, y)
    return G2(z.a, z.f)


def mul_tilde21(x: GTilde21, y: GTilde21) -> GTilde21:
    n = x.n
    a2 = _m(y.a)
    bilinear = sc.s_add(_b(y.f), sc.s_pre_right(_b(x.f), a2))
    return GTilde21(_mat(n, sc.s_matmul(_m(x.a), a2)), _bil(n, bilinear))


def mul_tilde22(x: GTilde22, y: GTilde22) -> GTilde22:
    n = x.n
    l2 = _m(y.l)
    bilinear = sc.s_add(_b(y.h), sc.s_pre_right(_b(x.h), l2))
    return GTilde22(_mat(n, sc.s_matmul(_m(x.l), l2)), _bil(n, bilinear))


def mul_t1n(x: T1nL1n, y: T1nL1n) -> T1nL1n:
    n = x.n
    a1, f1 = _m(x.a), _b(x.f)
    a2, f2 = _m(y.a), _b(y.f)
    a1_inv = sc.s_matinv(a1)
    bilinear = sc.s_add(sc.s_pre_left(f1, a2),
                        sc.s_post(a1, sc.s_pre_right(f2, a1_inv)))
    return T1nL1n(_mat(n, sc.s_matmul(a1, a2)), _bil(n, bilinear))


def mul_t1n_coordinate(x: T1nL1n, y: T1nL1n) -> T1nL1n:
    """The same product computed from the raw coordinate law.

    With F[i][l][k] the bilinear coordinates, A = x.a, C = y.a and
    B = A^-1, the product bilinear is

        M[i][j][k] = sum_l F[i][l][k] C[l][j]
                   + sum_{l,m} A[i][l] G[l][j][m] B[m][k]

    written here as explicit loops so the structural form above can be
    cross-checked against an independent computation.
    """
    n = x.n
    A = x.a.entries
    C = y.a.entries
    B = mat_inv(x.a).entries
    F = x.f.coeffs
    G = y.f.coeffs
    rng = range(n)
    coeffs = tuple(
        tuple(tuple(
            sum(F[i][l][k] * C[l][j] for l in rng)
            + sum(A[i][l] * G[l][j][m] * B[m][k] for l in rng for m in rng)
            for k in rng) for j in rng)
        for i in rng)
    return T1nL1n(mat_mul(x.a, y.a), Bilinear(n, coeffs))


def mul_deleon_1(
    x: tuple[SquareMatrix, Bilinear], y: tuple[SquareMatrix, Bilinear]
) -> tuple[SquareMatrix, Bilinear]:
    """First alternative law on (a, f): (aa', a'^-1 o f(a', a') + f')."""
    a, f = x
    a2, f2 = y
    n = a.n
    sa, sf = _m(a), _b(f)
    sa2, sf2 = _m(a2), _b(f2)
    bilinear = sc.s_add(sc.s_post(sc.s_matinv(sa2), sc.s_pre(sf, sa2, sa2)), sf2)
    return _mat(n, sc.s_matmul(sa, sa2)), _bil(n, bilinear)


def mul_deleon_2(
    x: tuple[SquareMatrix, Bilinear], y: tuple[SquareMatrix, Bilinear]
) -> tuple[SquareMatrix, Bilinear]:
    """Second alternative law on (a, f): (aa', f + a o f'(a^-1, a^-1))."""
    a, f = x
    a2, f2 = y
    n = a.n
    sa, sf = _m(a), _b(f)
    sa2, sf2 = _m(a2), _b(f2)
    a_inv = sc.s_matinv(sa)
    bilinear = sc.s_add(sf, sc.s_post(sa, sc.s_pre(sf2, a_inv, a_inv)))
    return _mat(n, sc.s_matmul(sa, sa2)), _bil(n, bilinear)


# ---------------------------------------------------------------------------
# inverses


def inv_hat2(x: GHat2) -> GHat2:
    n = x.n
    a_inv = sc.s_matinv(_m(x.a))
    bilinear = sc.s_neg(sc.s_post(a_inv, sc.s_pre(_b(x.f), a_inv, a_inv)))
    return GHat2(_mat(n, a_inv), _bil(n, bilinear))


def inv_g2(x: G2) -> G2:
    z = inv_hat2(x.as_hat2())
    return G2(z.a, z.f)


def inv_tilde2(x: GTilde2) -> GTilde2:
    n = x.n
    a_inv = sc.s_matinv(_m(x.a))
    b_inv = sc.s_matinv(_m(x.b))
    bilinear = sc.s_neg(sc.s_post(a_inv, sc.s_pre(_b(x.f), a_inv, b_inv)))
    return GTilde2(_mat(n, a_inv), _mat(n, b_inv), _bil(n, bilinear))


def inv_tilde21(x: GTilde21) -> GTilde21:
    n = x.n
    a_inv = sc.s_matinv(_m(x.a))
    return GTilde21(_mat(n, a_inv),
                    _bil(n, sc.s_neg(sc.s_pre_right(_b(x.f), a_inv))))


def inv_tilde22(x: GTilde22) -> GTilde22:
    n = x.n
    l_inv = sc.s_matinv(_m(x.l))
    return GTilde22(_mat(n, l_inv),
                    _bil(n, sc.s_neg(sc.s_pre_right(_b(x.h), l_inv))))


def inv_t1n(x: T1nL1n) -> T1nL1n:
    return tau_inv(inv_hat2(tau(x)))


def inv_deleon_1(x: tuple[SquareMatrix, Bilinear]) -> tuple[SquareMatrix, Bilinear]:
    a, f = x
    n = a.n
    sa = _m(a)
    a_inv = sc.s_matinv(sa)
    bilinear = sc.s_neg(sc.s_post(sa, sc.s_pre(_b(f), a_inv, a_inv)))
    return _mat(n, a_inv), _bil(n, bilinear)


def inv_deleon_2(x: tuple[SquareMatrix, Bilinear]) -> tuple[SquareMatrix, Bilinear]:
    a, f = x
    n = a.n
    sa = _m(a)
    a_inv = sc.s_matinv(sa)
    bilinear = sc.s_neg(sc.s_post(a_inv, sc.s_pre(_b(f), sa, sa)))
    return _mat(n, a_inv), _bil(n, bilinear)


# ---------------------------------------------------------------------------
# conjugation and the symmetric/skew decomposition


def conj_hat2(outer: GHat2, inner: GHat2) -> GHat2:
    """outer * inner * outer^-1 in closed form."""
    n = outer.n
    a, f = _m(outer.a), _b(outer.f)
    b, g = _m(inner.a), _b(inner.f)
    a_inv = sc.s_matinv(a)
    aba = sc.s_matmul(sc.s_matmul(a, b), a_inv)
    ba = sc.s_matmul(b, a_inv)
    bilinear = sc.s_add(
        sc.s_neg(sc.s_post(aba, sc.s_pre(f, a_inv, a_inv))),
        sc.s_post(a, sc.s_pre(g, a_inv, a_inv)),
        sc.s_pre(f, ba, ba),
    )
    return GHat2(_mat(n, aba), _bil(n, bilinear))


def decompose_hat2(x: GHat2) -> tuple[G2, Bilinear]:
    """Split (a, f) = (a, f_s) * (I, a^-1 o f_a); the pair is unique."""
    sym = G2(x.a, sym_part(x.f))
    skew = _bil(x.n, sc.s_post(sc.s_matinv(_m(x.a)), sc.s_skew(_b(x.f))))
    return sym, skew


def in_g2(x: GHat2) -> bool:
    return is_symmetric(x.f)


def in_g1_x_a2(x: GHat2) -> bool:
    return is_skew(x.f)


# ---------------------------------------------------------------------------
# the quotient by skew maps


@dataclass(frozen=True, slots=True)
class QuotClassHat:
    """A class of GHat2 elements that differ by a right factor (I, skew).

    Stored by its canonical representative: the unique member whose bilinear
    part is symmetric.  Two elements land in the same class exactly when
    their matrix parts agree and their symmetric parts agree.
    """

    a: SquareMatrix
    f_sym: Bilinear

    def __post_init__(self) -> None:
        if self.a.n != self.f_sym.n:
            raise ValueError("dimension mismatch between components")
        _require_invertible(self.a, "matrix part")
        if not is_symmetric(self.f_sym):
            raise ValueError("canonical representative must be symmetric")

    @property
    def n(self) -> int:
        return self.a.n

    @classmethod
    def of(cls, x: GHat2) -> "QuotClassHat":
        return cls(x.a, sym_part(x.f))

    def representative(self) -> GHat2:
        return GHat2(self.a, self.f_sym)


def mul_quot(x: QuotClassHat, y: QuotClassHat) -> QuotClassHat:
    """Class product: multiply representatives, then re-canonicalize."""
    return QuotClassHat.of(mul_hat2(x.representative(), y.representative()))


def coset_equal(x: GHat2, y: GHat2) -> bool:
    return x.a == y.a and sym_part(x.f) == sym_part(y.f)


def mu(c: QuotClassHat) -> G2:
    return G2(c.a, c.f_sym)


def mu_inv(g: G2) -> QuotClassHat:
    return QuotClassHat(g.a, g.f)


# ---------------------------------------------------------------------------
# the isomorphism with T1nL1n


def tau(x: T1nL1n) -> GHat2:
    return GHat2(x.a, _bil(x.n, sc.s_pre_right(_b(x.f), _m(x.a))))


def tau_inv(y: GHat2) -> T1nL1n:
    return T1nL1n(y.a, _bil(y.n, sc.s_pre_right(_b(y.f), sc.s_matinv(_m(y.a)))))
