"""Named verification suites over seeded random instances.

Each suite is a list of properties; a property takes a dimension and a
dedicated random stream, checks one exact identity on freshly generated
data and returns ``None`` on success or a JSON-able counterexample payload
on failure.  The runner executes every property for each requested
dimension and trial index, with the per-trial stream derived from
``(seed, suite, property, n, trial)``, so any failure is reproducible from
the (seed, trial-index) pair printed in the report.

All comparisons are exact equality of rationals; there are no tolerances
anywhere.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import randgen as rg
from .bilinear import (
    Bilinear,
    is_skew,
    is_symmetric,
    post_compose,
    pre_compose,
    skew_part,
    sym_part,
    transpose,
)
from .frames import (
    NonHolFrame,
    SemiHolFrame,
    act_hol,
    act_nonhol,
    act_semihol,
    act_tilde22,
    classify,
    embed_hol,
    embed_semihol,
    ext_class,
    fiber_hat22_contains,
    omega,
    proj_10,
    proj_20,
    proj_21,
    proj_hat22,
    proj_pi,
    proj_tilde22,
    sigma,
    theta,
    theta_inv,
)
from .groups import (
    G2,
    GHat2,
    GTilde2,
    GTilde21,
    GTilde22,
    T1nL1n,
    conj_hat2,
    coset_equal,
    decompose_hat2,
    inv_deleon_1,
    inv_deleon_2,
    inv_g2,
    inv_hat2,
    inv_t1n,
    inv_tilde2,
    inv_tilde21,
    inv_tilde22,
    mu,
    mu_inv,
    mul_deleon_1,
    mul_deleon_2,
    mul_g2,
    mul_hat2,
    mul_quot,
    mul_t1n,
    mul_t1n_coordinate,
    mul_tilde2,
    mul_tilde21,
    mul_tilde22,
    tau,
    tau_inv,
)
from .jets import Map2Jet, compose_2jets, g2_law_via_jets, left_act_diffeo
from .matrices import SquareMatrix, mat_inv, mat_mul
from .randgen import SplitMix64, stream
from .serialize import (
    bilinear_to_doc,
    frame_to_doc,
    group_to_doc,
    jet_to_doc,
    matrix_to_doc,
)

PropertyFn = Callable[[int, SplitMix64], dict | None]


@dataclass(frozen=True)
class Property:
    name: str
    fn: PropertyFn


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    properties: tuple[Property, ...]


@dataclass
class PropertyResult:
    name: str
    passed: bool
    trials_run: int
    failures: int
    counterexample: dict | None

    def to_doc(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "trials_run": self.trials_run,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }


@dataclass
class SuiteReport:
    suite: str
    ns: tuple[int, ...]
    trials: int
    seed: int
    properties: list[PropertyResult] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_doc(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "ns": list(self.ns),
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "properties": [p.to_doc() for p in self.properties],
            "wall_time_s": self.wall_time_s,
        }


def _pair_doc(x: tuple[SquareMatrix, Bilinear]) -> dict[str, Any]:
    return {"a": matrix_to_doc(x[0]), "f": bilinear_to_doc(x[1])}


# ---------------------------------------------------------------------------
# core algebra identities


def _prel_post_transpose(n, rng):
    a = rg.rand_invertible(rng, n)
    f = rg.rand_bilinear(rng, n)
    ok = (
        transpose(post_compose(a, f)) == post_compose(a, transpose(f))
        and sym_part(post_compose(a, f)) == post_compose(a, sym_part(f))
        and skew_part(post_compose(a, f)) == post_compose(a, skew_part(f))
    )
    if ok:
        return None
    return {"a": matrix_to_doc(a), "f": bilinear_to_doc(f)}


def _prel_pre_transpose(n, rng):
    a = rg.rand_invertible(rng, n)
    f = rg.rand_bilinear(rng, n)
    ok = (
        transpose(pre_compose(f, a, a)) == pre_compose(transpose(f), a, a)
        and sym_part(pre_compose(f, a, a)) == pre_compose(sym_part(f), a, a)
        and skew_part(pre_compose(f, a, a)) == pre_compose(skew_part(f), a, a)
    )
    if ok:
        return None
    return {"a": matrix_to_doc(a), "f": bilinear_to_doc(f)}


def _prel_split(n, rng):
    f = rg.rand_bilinear(rng, n)
    fs, fa = sym_part(f), skew_part(f)
    ok = (
        fs + fa == f
        and is_symmetric(fs)
        and is_skew(fa)
        and sym_part(fs) == fs
        and skew_part(fs).is_zero()
    )
    if ok:
        return None
    return {"f": bilinear_to_doc(f)}


def _prel_two_sided(n, rng):
    a = rg.rand_invertible(rng, n)
    b = rg.rand_invertible(rng, n)
    c = rg.rand_invertible(rng, n)
    f = rg.rand_bilinear(rng, n)
    if pre_compose(post_compose(a, f), b, c) == post_compose(a, pre_compose(f, b, c)):
        return None
    return {"a": matrix_to_doc(a), "b": matrix_to_doc(b), "c": matrix_to_doc(c),
            "f": bilinear_to_doc(f)}


# ---------------------------------------------------------------------------
# group law axioms


@dataclass(frozen=True)
class _Law:
    tag: str
    gen: Callable[[SplitMix64, int], Any]
    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    identity: Callable[[int], Any]
    doc: Callable[[Any], dict]


def _deleon_gen(rng, n):
    return (rg.rand_invertible(rng, n), rg.rand_bilinear(rng, n))


def _deleon_identity(n):
    return (SquareMatrix.identity(n), Bilinear.zero(n))


_LAWS = {
    "tilde2": _Law("tilde2", rg.rand_tilde2, mul_tilde2, inv_tilde2,
                   GTilde2.identity, group_to_doc),
    "hat2": _Law("hat2", rg.rand_hat2, mul_hat2, inv_hat2,
                 GHat2.identity, group_to_doc),
    "g2": _Law("g2", rg.rand_g2, mul_g2, inv_g2, G2.identity, group_to_doc),
    "tilde21": _Law("tilde21", rg.rand_tilde21, mul_tilde21, inv_tilde21,
                    GTilde21.identity, group_to_doc),
    "tilde22": _Law("tilde22", rg.rand_tilde22, mul_tilde22, inv_tilde22,
                    GTilde22.identity, group_to_doc),
    "t1n": _Law("t1n", rg.rand_t1n, mul_t1n, inv_t1n,
                T1nL1n.identity, group_to_doc),
    "deleon1": _Law("deleon1", _deleon_gen, mul_deleon_1, inv_deleon_1,
                    _deleon_identity, _pair_doc),
    "deleon2": _Law("deleon2", _deleon_gen, mul_deleon_2, inv_deleon_2,
                    _deleon_identity, _pair_doc),
}


def _law_associative(law: _Law) -> PropertyFn:
    def prop(n, rng):
        x, y, z = law.gen(rng, n), law.gen(rng, n), law.gen(rng, n)
        if law.mul(law.mul(x, y), z) == law.mul(x, law.mul(y, z)):
            return None
        return {"x": law.doc(x), "y": law.doc(y), "z": law.doc(z)}
    return prop


def _law_identity(law: _Law) -> PropertyFn:
    def prop(n, rng):
        x = law.gen(rng, n)
        e = law.identity(n)
        if law.mul(x, e) == x and law.mul(e, x) == x:
            return None
        return {"x": law.doc(x)}
    return prop


def _law_inverse(law: _Law) -> PropertyFn:
    def prop(n, rng):
        x = law.gen(rng, n)
        e = law.identity(n)
        xi = law.inv(x)
        if law.mul(x, xi) == e and law.mul(xi, x) == e:
            return None
        return {"x": law.doc(x), "x_inv": law.doc(xi)}
    return prop


def _axiom_properties(tags) -> tuple[Property, ...]:
    props = []
    for tag in tags:
        law = _LAWS[tag]
        props.append(Property(f"{tag}_associative", _law_associative(law)))
        props.append(Property(f"{tag}_identity", _law_identity(law)))
        props.append(Property(f"{tag}_inverse", _law_inverse(law)))
    return tuple(props)


# ---------------------------------------------------------------------------
# conjugation, decomposition, normality


def _grol1_conj_sym(n, rng):
    x = rg.rand_hat2(rng, n)
    h = rg.rand_symmetric(rng, n)
    c = conj_hat2(x, GHat2.from_bilinear(h))
    if c.a.is_identity() and is_symmetric(c.f):
        return None
    return {"x": group_to_doc(x), "h": bilinear_to_doc(h), "conj": group_to_doc(c)}


def _grol1_conj_skew(n, rng):
    x = rg.rand_hat2(rng, n)
    h = rg.rand_skew(rng, n)
    c = conj_hat2(x, GHat2.from_bilinear(h))
    if c.a.is_identity() and is_skew(c.f):
        return None
    return {"x": group_to_doc(x), "h": bilinear_to_doc(h), "conj": group_to_doc(c)}


def _grol1_conj_closed_form(n, rng):
    x = rg.rand_hat2(rng, n)
    y = rg.rand_hat2(rng, n)
    direct = conj_hat2(x, y)
    explicit = mul_hat2(mul_hat2(x, y), inv_hat2(x))
    if direct == explicit:
        return None
    return {"x": group_to_doc(x), "y": group_to_doc(y),
            "closed_form": group_to_doc(direct), "triple": group_to_doc(explicit)}


def _grol1_decompose_recompose(n, rng):
    x = rg.rand_hat2(rng, n)
    sym_el, skew = decompose_hat2(x)
    ok = (
        is_skew(skew)
        and mul_hat2(sym_el.as_hat2(), GHat2.from_bilinear(skew)) == x
    )
    if ok:
        return None
    return {"x": group_to_doc(x), "sym": group_to_doc(sym_el),
            "skew": bilinear_to_doc(skew)}


def _grol1_decompose_unique(n, rng):
    x = rg.rand_hat2(rng, n)
    sym_el, skew = decompose_hat2(x)
    delta = rg.rand_nonzero_skew(rng, n)
    if delta is not None:
        if mul_hat2(sym_el.as_hat2(), GHat2.from_bilinear(skew + delta)) == x:
            return {"x": group_to_doc(x), "perturbation": bilinear_to_doc(delta),
                    "reason": "skew perturbation also recomposes"}
    bump = rg.rand_nonzero_symmetric(rng, n)
    other = GHat2(sym_el.a, sym_el.f + bump)
    if mul_hat2(other, GHat2.from_bilinear(skew)) == x:
        return {"x": group_to_doc(x), "perturbation": bilinear_to_doc(bump),
                "reason": "symmetric perturbation also recomposes"}
    return None


def _grol3_sym_normal(n, rng):
    x = rg.rand_hat2(rng, n)
    s = rg.rand_symmetric(rng, n)
    c = conj_hat2(x, GHat2.from_bilinear(s))
    if c.a.is_identity() and is_symmetric(c.f):
        return None
    return {"x": group_to_doc(x), "s": bilinear_to_doc(s), "conj": group_to_doc(c)}


def _grol3_skew_normal(n, rng):
    x = rg.rand_hat2(rng, n)
    h = rg.rand_skew(rng, n)
    c = conj_hat2(x, GHat2.from_bilinear(h))
    if c.a.is_identity() and is_skew(c.f):
        return None
    return {"x": group_to_doc(x), "h": bilinear_to_doc(h), "conj": group_to_doc(c)}


def _grol3_conj_ignores_f(n, rng):
    a = rg.rand_invertible(rng, n)
    f = rg.rand_bilinear(rng, n)
    g = rg.rand_bilinear(rng, n)
    inner = GHat2.from_bilinear(g)
    with_f = conj_hat2(GHat2(a, f), inner)
    without_f = conj_hat2(GHat2(a, Bilinear.zero(n)), inner)
    if with_f == without_f:
        return None
    return {"a": matrix_to_doc(a), "f": bilinear_to_doc(f), "g": bilinear_to_doc(g)}


# ---------------------------------------------------------------------------
# the quotient isomorphism


def _grop1_homomorphism(n, rng):
    c1 = rg.rand_quot_class(rng, n)
    c2 = rg.rand_quot_class(rng, n)
    lhs = mu(mul_quot(c1, c2))
    rhs = mul_g2(mu(c1), mu(c2))
    if lhs == rhs:
        return None
    return {"c1": group_to_doc(c1.representative()),
            "c2": group_to_doc(c2.representative()),
            "mu_of_product": group_to_doc(lhs), "product_of_mu": group_to_doc(rhs)}


def _grop1_injective(n, rng):
    c1 = rg.rand_quot_class(rng, n)
    c2 = rg.rand_quot_class(rng, n)
    if c1 == c2:
        return None
    if mu(c1) != mu(c2):
        return None
    return {"c1": group_to_doc(c1.representative()),
            "c2": group_to_doc(c2.representative())}


def _grop1_surjective(n, rng):
    g = rg.rand_g2(rng, n)
    if mu(mu_inv(g)) == g:
        return None
    return {"g": group_to_doc(g)}


def _grop1_roundtrip(n, rng):
    c = rg.rand_quot_class(rng, n)
    if mu_inv(mu(c)) == c:
        return None
    return {"c": group_to_doc(c.representative())}


def _grop1_coset_equal(n, rng):
    x = rg.rand_hat2(rng, n)
    h = rg.rand_skew(rng, n)
    same = mul_hat2(x, GHat2.from_bilinear(h))
    if not coset_equal(x, same):
        return {"x": group_to_doc(x), "h": bilinear_to_doc(h),
                "reason": "skew right factor left the class"}
    if not coset_equal(x, GHat2(x.a, sym_part(x.f))):
        return {"x": group_to_doc(x), "reason": "symmetric part left the class"}
    y = rg.rand_hat2(rng, n)
    want = x.a == y.a and sym_part(x.f) == sym_part(y.f)
    if coset_equal(x, y) != want:
        return {"x": group_to_doc(x), "y": group_to_doc(y)}
    return None


# ---------------------------------------------------------------------------
# the T1nL1n isomorphism


def _grol4_coordinate(n, rng):
    x = rg.rand_t1n(rng, n)
    y = rg.rand_t1n(rng, n)
    if mul_t1n(x, y) == mul_t1n_coordinate(x, y):
        return None
    return {"x": group_to_doc(x), "y": group_to_doc(y)}


def _grol4_tau_homomorphism(n, rng):
    x = rg.rand_t1n(rng, n)
    y = rg.rand_t1n(rng, n)
    if tau(mul_t1n(x, y)) == mul_hat2(tau(x), tau(y)):
        return None
    return {"x": group_to_doc(x), "y": group_to_doc(y)}


def _grol4_tau_roundtrip(n, rng):
    x = rg.rand_t1n(rng, n)
    y = rg.rand_hat2(rng, n)
    if tau_inv(tau(x)) == x and tau(tau_inv(y)) == y:
        return None
    return {"x": group_to_doc(x), "y": group_to_doc(y)}


def _grol4_law_recovered(n, rng):
    x = rg.rand_t1n(rng, n)
    y = rg.rand_t1n(rng, n)
    recovered = tau_inv(mul_hat2(tau(x), tau(y)))
    if recovered == mul_t1n(x, y):
        return None
    return {"x": group_to_doc(x), "y": group_to_doc(y),
            "recovered": group_to_doc(recovered)}


def _grol4_inverse_via_tau(n, rng):
    x = rg.rand_t1n(rng, n)
    e = T1nL1n.identity(n)
    xi = inv_t1n(x)
    if mul_t1n(x, xi) == e and mul_t1n(xi, x) == e:
        return None
    return {"x": group_to_doc(x), "x_inv": group_to_doc(xi)}


# ---------------------------------------------------------------------------
# symmetrization against products, and the projection's well-definedness


def _rbsp1_group_level(n, rng):
    g = rg.rand_g2(rng, n)
    k = rg.rand_hat2(rng, n)
    product = mul_hat2(g.as_hat2(), k)
    symmetrized = mul_hat2(g.as_hat2(), GHat2(k.a, sym_part(k.f)))
    if symmetrized == GHat2(product.a, sym_part(product.f)):
        return None
    return {"g": group_to_doc(g), "k": group_to_doc(k),
            "product": group_to_doc(product)}


def _rbsp1_frame_level(n, rng):
    p = rg.rand_hol(rng, n)
    k = rg.rand_hat2(rng, n)
    moved = act_semihol(embed_hol(p), k)
    direct = act_hol(p, G2(k.a, sym_part(k.f)))
    if proj_hat22(moved) == direct:
        return None
    return {"p": frame_to_doc(p), "k": group_to_doc(k)}


def _rbsp1_well_defined(n, rng):
    p = rg.rand_hol(rng, n)
    k = rg.rand_hat2(rng, n)
    alpha = rg.rand_g2(rng, n)
    p2 = act_hol(p, alpha)
    k2 = mul_hat2(inv_g2(alpha).as_hat2(), k)
    q1 = act_semihol(embed_hol(p), k)
    q2 = act_semihol(embed_hol(p2), k2)
    if q1 != q2:
        return {"p": frame_to_doc(p), "k": group_to_doc(k),
                "alpha": group_to_doc(alpha),
                "reason": "the two factorizations name different frames"}
    via1 = act_hol(p, G2(k.a, sym_part(k.f)))
    via2 = act_hol(p2, G2(k2.a, sym_part(k2.f)))
    if via1 == via2 == proj_hat22(q1):
        return None
    return {"p": frame_to_doc(p), "k": group_to_doc(k), "alpha": group_to_doc(alpha),
            "via_first": frame_to_doc(via1), "via_second": frame_to_doc(via2)}


# ---------------------------------------------------------------------------
# level compatibility and the fiber description


def _rbsl1_base(n, rng):
    p = rg.rand_semihol(rng, n)
    if proj_20(p) == proj_20(proj_hat22(p)):
        return None
    return {"p": frame_to_doc(p)}


def _rbsl3_linear(n, rng):
    p = rg.rand_semihol(rng, n)
    if proj_21(p) == proj_21(proj_hat22(p)):
        return None
    return {"p": frame_to_doc(p)}


def _rbsl2_fiber_iff(n, rng):
    p = rg.rand_semihol(rng, n)
    q = rg.rand_hol(rng, n)
    if fiber_hat22_contains(q, p) != (proj_hat22(p) == q):
        return {"q": frame_to_doc(q), "p": frame_to_doc(p)}
    own = proj_hat22(p)
    if not fiber_hat22_contains(own, p):
        return {"q": frame_to_doc(own), "p": frame_to_doc(p),
                "reason": "frame missing from its own fiber"}
    # near miss: same base point and linear part, independent bilinear part
    probe = SemiHolFrame(q.x, q.a, rg.rand_bilinear(rng, n))
    if fiber_hat22_contains(q, probe) != (proj_hat22(probe) == q):
        return {"q": frame_to_doc(q), "p": frame_to_doc(probe),
                "reason": "membership disagrees with projection on a probe"}
    return None


def _rbsl2_orbit_in_fiber(n, rng):
    q = rg.rand_hol(rng, n)
    h = rg.rand_skew(rng, n)
    moved = act_semihol(embed_hol(q), GHat2.from_bilinear(h))
    if proj_hat22(moved) == q and fiber_hat22_contains(q, moved):
        return None
    return {"q": frame_to_doc(q), "h": bilinear_to_doc(h)}


def _rbsl2_rejects_other_linear_part(n, rng):
    q = rg.rand_hol(rng, n)
    p = rg.rand_semihol(rng, n)
    if p.a == q.a:
        return None
    if fiber_hat22_contains(q, p):
        return {"q": frame_to_doc(q), "p": frame_to_doc(p)}
    return None


# ---------------------------------------------------------------------------
# the principal structure over holonomic frames


def _rbst1_free(n, rng):
    q = rg.rand_semihol(rng, n)
    h = rg.rand_nonzero_skew(rng, n)
    if h is None:
        return None
    if act_semihol(q, GHat2.from_bilinear(h)) != q:
        return None
    return {"q": frame_to_doc(q), "h": bilinear_to_doc(h)}


def _rbst1_omega_well_defined(n, rng):
    q = rg.rand_semihol(rng, n)
    h1 = rg.rand_skew(rng, n)
    h2 = rg.rand_skew(rng, n)
    m1 = act_semihol(q, GHat2.from_bilinear(h1))
    m2 = act_semihol(q, GHat2.from_bilinear(h2))
    if omega(m1) == omega(m2) == omega(q):
        return None
    return {"q": frame_to_doc(q), "h1": bilinear_to_doc(h1),
            "h2": bilinear_to_doc(h2)}


def _rbst1_omega_injective(n, rng):
    # equal orbit-map values must come from the same orbit: exhibit the
    # connecting skew element, both for a constructed same-fiber pair and
    # for an independent pair
    q1 = rg.rand_semihol(rng, n)
    pairs = [(q1, SemiHolFrame(q1.x, q1.a, sym_part(q1.f) + rg.rand_skew(rng, n))),
             (q1, rg.rand_semihol(rng, n))]
    for qa, qb in pairs:
        if omega(qa) != omega(qb):
            continue
        diff = post_compose(mat_inv(qa.a), qb.f - qa.f)
        if not is_skew(diff):
            return {"q1": frame_to_doc(qa), "q2": frame_to_doc(qb),
                    "reason": "connecting element is not skew"}
        if act_semihol(qa, GHat2.from_bilinear(diff)) != qb:
            return {"q1": frame_to_doc(qa), "q2": frame_to_doc(qb),
                    "reason": "connecting element does not map q1 to q2"}
    return None


def _rbst1_sigma_equation(n, rng):
    p = rg.rand_semihol(rng, n)
    s = sigma(p)
    lhs = mul_hat2(GHat2(p.a, sym_part(p.f)), GHat2.from_bilinear(s))
    if is_skew(s) and lhs == GHat2(p.a, p.f):
        return None
    return {"p": frame_to_doc(p), "sigma": bilinear_to_doc(s)}


def _rbst1_sigma_reconstruction(n, rng):
    p = rg.rand_semihol(rng, n)
    quotient = mul_hat2(inv_hat2(GHat2(p.a, sym_part(p.f))), GHat2(p.a, p.f))
    if quotient == GHat2.from_bilinear(sigma(p)):
        return None
    return {"p": frame_to_doc(p), "quotient": group_to_doc(quotient)}


def _rbst1_sigma_equivariance(n, rng):
    p = rg.rand_semihol(rng, n)
    h = rg.rand_skew(rng, n)
    if sigma(act_semihol(p, GHat2.from_bilinear(h))) == sigma(p) + h:
        return None
    return {"p": frame_to_doc(p), "h": bilinear_to_doc(h)}


def _rbst1_extension_roundtrip(n, rng):
    q = rg.rand_semihol(rng, n)
    c = theta_inv(q)
    if theta(c) != q:
        return {"q": frame_to_doc(q), "reason": "theta(theta_inv(q)) != q"}
    p = rg.rand_hol(rng, n)
    k = rg.rand_hat2(rng, n)
    c2 = ext_class(p, k)
    if theta_inv(theta(c2)) != c2:
        return {"p": frame_to_doc(p), "k": group_to_doc(k),
                "reason": "theta_inv(theta(c)) != c on a canonical class"}
    return None


def _rbst1_extension_invariant(n, rng):
    p = rg.rand_hol(rng, n)
    k = rg.rand_hat2(rng, n)
    alpha = rg.rand_g2(rng, n)
    shifted = ext_class(act_hol(p, alpha), mul_hat2(inv_g2(alpha).as_hat2(), k))
    if ext_class(p, k) == shifted:
        return None
    return {"p": frame_to_doc(p), "k": group_to_doc(k), "alpha": group_to_doc(alpha)}


def _rbst1_theta_equivariant(n, rng):
    p = rg.rand_hol(rng, n)
    k = rg.rand_hat2(rng, n)
    k2 = rg.rand_hat2(rng, n)
    lhs = act_semihol(theta(ext_class(p, k)), k2)
    rhs = theta(ext_class(p, mul_hat2(k, k2)))
    if lhs == rhs:
        return None
    return {"p": frame_to_doc(p), "k": group_to_doc(k), "k2": group_to_doc(k2)}


# ---------------------------------------------------------------------------
# the composite projection to holonomic frames


def _rbst2_free(n, rng):
    q = rg.rand_nonhol(rng, n)
    g = rg.rand_tilde22(rng, n)
    if g == GTilde22.identity(n):
        return None
    if act_tilde22(q, g) != q:
        return None
    return {"q": frame_to_doc(q), "g": group_to_doc(g)}


def _rbst2_composite(n, rng):
    q = rg.rand_nonhol(rng, n)
    if proj_tilde22(q) == proj_hat22(proj_pi(q)):
        return None
    return {"q": frame_to_doc(q)}


def _rbst2_staged(n, rng):
    q = rg.rand_nonhol(rng, n)
    g = rg.rand_tilde22(rng, n)
    eye = SquareMatrix.identity(n)
    staged = act_nonhol(
        act_nonhol(q, GTilde2(eye, g.l, Bilinear.zero(n))),
        GTilde2(eye, eye, g.h),
    )
    if act_tilde22(q, g) == staged:
        return None
    return {"q": frame_to_doc(q), "g": group_to_doc(g)}


def _rbst2_law_matches_tilde21(n, rng):
    x = rg.rand_tilde22(rng, n)
    y = rg.rand_tilde22(rng, n)
    z = mul_tilde22(x, y)
    w = mul_tilde21(GTilde21(x.l, x.h), GTilde21(y.l, y.h))
    if z.l == w.a and z.h == w.f:
        return None
    return {"x": group_to_doc(x), "y": group_to_doc(y)}


def _rbst2_projection_invariant(n, rng):
    q = rg.rand_nonhol(rng, n)
    g = rg.rand_tilde22(rng, n)
    if proj_tilde22(act_tilde22(q, g)) == proj_tilde22(q):
        return None
    return {"q": frame_to_doc(q), "g": group_to_doc(g),
            "projected": frame_to_doc(proj_tilde22(q)),
            "projected_after_action": frame_to_doc(proj_tilde22(act_tilde22(q, g)))}


def _rbst2_surjective(n, rng):
    target = rg.rand_hol(rng, n)
    eye = SquareMatrix.identity(n)
    preimage_f = pre_compose(target.f, eye, mat_inv(target.a))
    preimage = NonHolFrame(target.x, target.a, target.a, preimage_f)
    if proj_tilde22(preimage) == target:
        return None
    return {"target": frame_to_doc(target), "preimage": frame_to_doc(preimage)}


# ---------------------------------------------------------------------------
# the projection diagram


def _diagram_nonhol(n, rng):
    q = rg.rand_nonhol(rng, n)
    checks = (
        proj_20(q) == proj_10(proj_21(q)),
        proj_20(proj_pi(q)) == proj_20(q),
        proj_21(proj_pi(q)) == proj_21(q),
        proj_20(proj_tilde22(q)) == proj_20(q),
        proj_21(proj_tilde22(q)) == proj_21(q),
        proj_tilde22(q) == proj_hat22(proj_pi(q)),
    )
    if all(checks):
        return None
    return {"q": frame_to_doc(q), "checks": list(checks)}


def _diagram_semihol(n, rng):
    p = rg.rand_semihol(rng, n)
    checks = (
        proj_20(p) == proj_10(proj_21(p)),
        proj_20(proj_hat22(p)) == proj_20(p),
        proj_21(proj_hat22(p)) == proj_21(p),
    )
    if all(checks):
        return None
    return {"p": frame_to_doc(p), "checks": list(checks)}


def _diagram_hol(n, rng):
    t = rg.rand_hol(rng, n)
    checks = (
        proj_20(t) == proj_10(proj_21(t)),
        proj_hat22(embed_hol(t)) == t,
        proj_hat22(embed_hol(proj_hat22(embed_hol(t)))) == proj_hat22(embed_hol(t)),
    )
    if all(checks):
        return None
    return {"t": frame_to_doc(t), "checks": list(checks)}


# ---------------------------------------------------------------------------
# the jet oracle


def _oracle_group_law(n, rng):
    p = rg.rand_g2(rng, n)
    q = rg.rand_g2(rng, n)
    via_jets = g2_law_via_jets(p, q)
    via_law = mul_g2(p, q)
    if via_jets == via_law:
        return None
    return {"p": group_to_doc(p), "q": group_to_doc(q),
            "via_jets": group_to_doc(via_jets), "via_law": group_to_doc(via_law)}


def _oracle_associative(n, rng):
    x0 = rg.rand_point(rng, n)
    x1 = rg.rand_point(rng, n)
    x2 = rg.rand_point(rng, n)
    x3 = rg.rand_point(rng, n)
    f = rg.rand_map2jet(rng, n, base=x0, value=x1)
    g = rg.rand_map2jet(rng, n, base=x1, value=x2)
    h = rg.rand_map2jet(rng, n, base=x2, value=x3)
    if compose_2jets(compose_2jets(h, g), f) == compose_2jets(h, compose_2jets(g, f)):
        return None
    return {"f": jet_to_doc(f), "g": jet_to_doc(g), "h": jet_to_doc(h)}


def _oracle_identity(n, rng):
    f = rg.rand_map2jet(rng, n)
    left = compose_2jets(Map2Jet.identity(f.value), f)
    right = compose_2jets(f, Map2Jet.identity(f.base))
    if left == f and right == f:
        return None
    return {"f": jet_to_doc(f)}


def _oracle_functorial(n, rng):
    q = rg.rand_nonhol(rng, n)
    mid = rg.rand_point(rng, n)
    end = rg.rand_point(rng, n)
    G = rg.rand_map2jet(rng, n, base=q.x, value=mid)
    F = rg.rand_map2jet(rng, n, base=mid, value=end)
    if left_act_diffeo(compose_2jets(F, G), q) == left_act_diffeo(F, left_act_diffeo(G, q)):
        return None
    return {"q": frame_to_doc(q), "F": jet_to_doc(F), "G": jet_to_doc(G)}


def _oracle_class_preserved(n, rng):
    frames = (
        rg.rand_nonhol(rng, n),
        embed_semihol(rg.rand_semihol(rng, n)),
        embed_semihol(embed_hol(rg.rand_hol(rng, n))),
    )
    for q in frames:
        F = rg.rand_map2jet(rng, n, base=q.x)
        if classify(left_act_diffeo(F, q)) != classify(q):
            return {"q": frame_to_doc(q), "F": jet_to_doc(F),
                    "before": classify(q),
                    "after": classify(left_act_diffeo(F, q))}
    return None


def _oracle_linear_part(n, rng):
    q = rg.rand_nonhol(rng, n)
    F = rg.rand_map2jet(rng, n, base=q.x)
    moved = left_act_diffeo(F, q)
    lin = proj_21(moved)
    if lin.x == F.value and lin.a == mat_mul(F.jac, q.a):
        return None
    return {"q": frame_to_doc(q), "F": jet_to_doc(F)}


# ---------------------------------------------------------------------------
# registry and runner


def _suite(name: str, description: str, props) -> Suite:
    return Suite(name, description, tuple(props))


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        _suite("axioms",
               "group axioms (associativity, identity, inverses) for the six "
               "typed element kinds",
               _axiom_properties(("tilde2", "hat2", "g2", "tilde21", "tilde22",
                                  "t1n"))),
        _suite("deleon",
               "group axioms for the two alternative laws on matrix-bilinear "
               "pairs",
               _axiom_properties(("deleon1", "deleon2"))),
        _suite("prel1",
               "transpose/symmetric/skew parts against post- and diagonal "
               "pre-composition",
               [Property("post_compose_respects_parts", _prel_post_transpose),
                Property("diag_pre_compose_respects_parts", _prel_pre_transpose),
                Property("sym_plus_skew_recovers", _prel_split),
                Property("post_and_pre_commute", _prel_two_sided)]),
        _suite("grol1",
               "conjugation preserves the symmetric and skew subsets; unique "
               "symmetric-times-skew factorization",
               [Property("conjugation_preserves_symmetric", _grol1_conj_sym),
                Property("conjugation_preserves_skew", _grol1_conj_skew),
                Property("conjugation_closed_form", _grol1_conj_closed_form),
                Property("decompose_recompose", _grol1_decompose_recompose),
                Property("decompose_unique", _grol1_decompose_unique)]),
        _suite("grol3",
               "normality of the symmetric and skew additive subgroups; "
               "conjugation of pure bilinear elements ignores the outer "
               "bilinear part",
               [Property("symmetric_subgroup_normal", _grol3_sym_normal),
                Property("skew_subgroup_normal", _grol3_skew_normal),
                Property("conjugation_ignores_outer_bilinear",
                         _grol3_conj_ignores_f)]),
        _suite("grop1",
               "the symmetrizing map from classes-modulo-skew is a bijective "
               "homomorphism onto symmetric pairs",
               [Property("mu_homomorphism", _grop1_homomorphism),
                Property("mu_injective", _grop1_injective),
                Property("mu_surjective", _grop1_surjective),
                Property("mu_roundtrip", _grop1_roundtrip),
                Property("coset_equality", _grop1_coset_equal)]),
        _suite("grol4",
               "the alternative pair law matches its raw coordinate form and "
               "is isomorphic to the standard pair law",
               [Property("structural_equals_coordinate", _grol4_coordinate),
                Property("tau_homomorphism", _grol4_tau_homomorphism),
                Property("tau_roundtrip", _grol4_tau_roundtrip),
                Property("law_recovered_through_tau", _grol4_law_recovered),
                Property("inverse_via_tau", _grol4_inverse_via_tau)]),
        _suite("rbsp1",
               "multiplying by a symmetric pair commutes with symmetrizing "
               "the bilinear part; the symmetrizing projection is "
               "factorization-independent",
               [Property("symmetrize_after_product", _rbsp1_group_level),
                Property("symmetrize_after_frame_action", _rbsp1_frame_level),
                Property("projection_well_defined", _rbsp1_well_defined)]),
        _suite("rbsl1",
               "the symmetrizing projection preserves the base point",
               [Property("base_point_preserved", _rbsl1_base)]),
        _suite("rbsl2",
               "fibers of the symmetrizing projection are exactly the skew "
               "orbits",
               [Property("fiber_membership_matches_projection", _rbsl2_fiber_iff),
                Property("skew_orbit_inside_fiber", _rbsl2_orbit_in_fiber),
                Property("fiber_rejects_other_linear_part",
                         _rbsl2_rejects_other_linear_part)]),
        _suite("rbsl3",
               "the symmetrizing projection preserves the linear frame",
               [Property("linear_frame_preserved", _rbsl3_linear)]),
        _suite("rbst1",
               "principal structure of the symmetrizing projection: free skew "
               "action, orbit bijection, trivialization fiber coordinate",
               [Property("skew_action_free", _rbst1_free),
                Property("orbit_map_well_defined", _rbst1_omega_well_defined),
                Property("orbit_map_injective", _rbst1_omega_injective),
                Property("sigma_defining_equation", _rbst1_sigma_equation),
                Property("sigma_by_group_quotient", _rbst1_sigma_reconstruction),
                Property("sigma_equivariance", _rbst1_sigma_equivariance),
                Property("extension_model_roundtrip", _rbst1_extension_roundtrip),
                Property("extension_class_invariant", _rbst1_extension_invariant),
                Property("extension_map_equivariant", _rbst1_theta_equivariant)]),
        _suite("rbst2",
               "the composite projection from non-holonomic to holonomic "
               "frames and the matrix-skew action",
               [Property("action_free", _rbst2_free),
                Property("composite_definition", _rbst2_composite),
                Property("staged_action_identity", _rbst2_staged),
                Property("law_matches_tilde21", _rbst2_law_matches_tilde21),
                Property("projection_invariant_on_orbits",
                         _rbst2_projection_invariant),
                Property("surjective_by_explicit_preimage", _rbst2_surjective)]),
        _suite("diagram",
               "all composable pairs of projections between the frame levels "
               "commute",
               [Property("nonholonomic_frames", _diagram_nonhol),
                Property("semiholonomic_frames", _diagram_semihol),
                Property("holonomic_frames", _diagram_hol)]),
        _suite("oracle",
               "jet-composition ground truth: group law from the chain rule, "
               "associativity, prolonged action functoriality",
               [Property("group_law_from_jets", _oracle_group_law),
                Property("composition_associative", _oracle_associative),
                Property("identity_jet_neutral", _oracle_identity),
                Property("prolonged_action_functorial", _oracle_functorial),
                Property("prolonged_action_preserves_class",
                         _oracle_class_preserved),
                Property("prolonged_action_linear_part", _oracle_linear_part)]),
    )
}

ALL_SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, ns, trials: int, seed: int) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    suite = SUITES[name]
    report = SuiteReport(suite=name, ns=tuple(ns), trials=trials, seed=seed)
    start = time.perf_counter()
    for prop in suite.properties:
        failures = 0
        ran = 0
        first = None
        for n in report.ns:
            for trial in range(trials):
                rng = stream(seed, name, prop.name, n, trial)
                ce = prop.fn(n, rng)
                ran += 1
                if ce is not None:
                    failures += 1
                    if first is None:
                        first = {"suite": name, "property": prop.name,
                                 "n": n, "trial": trial, "seed": seed, **ce}
        report.properties.append(PropertyResult(
            name=prop.name, passed=failures == 0, trials_run=ran,
            failures=failures, counterexample=first))
    report.wall_time_s = time.perf_counter() - start
    return report


def run_suites(names, ns, trials: int, seed: int) -> list[SuiteReport]:
    return [run_suite(name, ns, trials, seed) for name in names]
