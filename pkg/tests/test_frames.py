import pytest

from exact_oracles import ref_pre, ref_sym
from jetframes import (
    Bilinear,
    ExtClass,
    G2,
    GHat2,
    GTilde2,
    GTilde22,
    HolFrame,
    LinFrame,
    NonHolFrame,
    SemiHolFrame,
    SquareMatrix,
    act_hol,
    act_nonhol,
    act_semihol,
    act_tilde22,
    classify,
    embed_hol,
    embed_semihol,
    ext_class,
    fiber_hat22_contains,
    inv_g2,
    is_skew,
    mul_hat2,
    mul_tilde2,
    omega,
    proj_10,
    proj_20,
    proj_21,
    proj_hat22,
    proj_pi,
    proj_tilde22,
    sigma,
    skew_part,
    sym_part,
    theta,
    theta_inv,
)
from jetframes.randgen import (
    rand_bilinear,
    rand_g2,
    rand_hat2,
    rand_hol,
    rand_invertible,
    rand_nonhol,
    rand_point,
    rand_semihol,
    rand_skew,
    rand_symmetric,
    rand_tilde2,
    rand_tilde22,
    stream,
)


def _eye(n):
    return SquareMatrix.identity(n)


# ---------------------------------------------------------------------------
# actions


def test_nonhol_action_identity():
    rng = stream(60, "acts")
    q = rand_nonhol(rng, 2)
    assert act_nonhol(q, GTilde2.identity(2)) == q


def test_nonhol_action_is_torsor_at_origin_frame():
    rng = stream(61, "torsor")
    g = rand_tilde2(rng, 2)
    x = rand_point(rng, 2)
    origin = NonHolFrame(x, _eye(2), _eye(2), Bilinear.zero(2))
    moved = act_nonhol(origin, g)
    assert (moved.a, moved.b, moved.f) == (g.a, g.b, g.f)
    assert moved.x == x


def test_nonhol_action_delegates_to_group_law():
    rng = stream(62, "delegate")
    for _ in range(10):
        q = rand_nonhol(rng, 2)
        g = rand_tilde2(rng, 2)
        h = rand_tilde2(rng, 2)
        product = mul_tilde2(GTilde2(q.a, q.b, q.f), g)
        moved = act_nonhol(q, g)
        assert (moved.a, moved.b, moved.f) == (product.a, product.b, product.f)
        assert act_nonhol(act_nonhol(q, g), h) == act_nonhol(q, mul_tilde2(g, h))


def test_semihol_action_matches_pair_law():
    rng = stream(63, "semiact")
    for _ in range(10):
        q = rand_semihol(rng, 3)
        g = rand_hat2(rng, 3)
        product = mul_hat2(GHat2(q.a, q.f), g)
        moved = act_semihol(q, g)
        assert (moved.a, moved.f) == (product.a, product.f)
    q = rand_semihol(rng, 3)
    assert act_semihol(q, GHat2.identity(3)) == q


def test_hol_action_stays_holonomic():
    rng = stream(64, "holact")
    q = rand_hol(rng, 3)
    g = rand_g2(rng, 3)
    moved = act_hol(q, g)
    assert isinstance(moved, HolFrame)
    x = rand_point(rng, 3)
    fresh = HolFrame(x, _eye(3), Bilinear.zero(3))
    assert act_hol(fresh, g) == HolFrame(x, g.a, g.f)


# ---------------------------------------------------------------------------
# classification and embeddings


def test_classify():
    rng = stream(65, "classify")
    x = rand_point(rng, 2)
    a = rand_invertible(rng, 2)
    b = rand_invertible(rng, 2)
    sym = rand_symmetric(rng, 2)
    assert classify(NonHolFrame(x, a, a, sym)) == "holonomic"
    nonsym = Bilinear.single(2, 0, 0, 1)
    assert classify(NonHolFrame(x, a, a, nonsym)) == "semiholonomic"
    if a != b:
        assert classify(NonHolFrame(x, a, b, nonsym)) == "nonholonomic"


def test_embeddings():
    rng = stream(66, "embed")
    t = rand_hol(rng, 2)
    p = embed_hol(t)
    assert (p.x, p.a, p.f) == (t.x, t.a, t.f)
    q = embed_semihol(p)
    assert q.b == q.a and classify(q) == "holonomic"


# ---------------------------------------------------------------------------
# projections


def test_proj_pi_with_identity_linear_part():
    rng = stream(67, "pi")
    x = rand_point(rng, 2)
    b = rand_invertible(rng, 2)
    f = rand_bilinear(rng, 2)
    assert proj_pi(NonHolFrame(x, _eye(2), b, f)) == SemiHolFrame(x, _eye(2), f)


def test_proj_pi_coordinate_formula():
    # f'[k][l][j] = sum_r f[k][l][r] a[r][j], checked by independent loops
    rng = stream(68, "picoord")
    for _ in range(10):
        q = rand_nonhol(rng, 2)
        expected = ref_pre(q.f, _eye(2), q.a)
        assert proj_pi(q) == SemiHolFrame(q.x, q.a, expected)


def test_proj_hat22_fixes_holonomic_frames():
    rng = stream(69, "hat22")
    t = rand_hol(rng, 3)
    assert proj_hat22(embed_hol(t)) == t


def test_proj_hat22_kills_pure_skew():
    rng = stream(70, "hat22skew")
    x = rand_point(rng, 2)
    h = rand_skew(rng, 2)
    assert (proj_hat22(SemiHolFrame(x, _eye(2), h))
            == HolFrame(x, _eye(2), Bilinear.zero(2)))


def test_proj_hat22_factorization_independent():
    rng = stream(71, "hat22fact")
    for _ in range(10):
        p = rand_hol(rng, 3)
        k = rand_hat2(rng, 3)
        alpha = rand_g2(rng, 3)
        q = act_semihol(embed_hol(p), k)
        p2 = act_hol(p, alpha)
        k2 = mul_hat2(inv_g2(alpha).as_hat2(), k)
        assert act_semihol(embed_hol(p2), k2) == q
        via1 = act_hol(p, G2(k.a, sym_part(k.f)))
        via2 = act_hol(p2, G2(k2.a, sym_part(k2.f)))
        assert via1 == via2 == proj_hat22(q)


def test_proj_tilde22_is_the_composite():
    rng = stream(72, "tilde22")
    for _ in range(10):
        q = rand_nonhol(rng, 2)
        assert proj_tilde22(q) == proj_hat22(proj_pi(q))


def test_proj_tilde22_on_embedded_holonomic():
    # the composite projection contracts with the a-part first, so embedded
    # holonomic frames land on (x, a, sym(f(I, a))), not on themselves
    rng = stream(73, "tilde22hol")
    t = rand_hol(rng, 2)
    q = embed_semihol(embed_hol(t))
    expected = ref_sym(ref_pre(t.f, _eye(2), t.a))
    assert proj_tilde22(q) == HolFrame(t.x, t.a, expected)


def test_proj_tilde22_kills_pure_skew_at_identity():
    rng = stream(74, "tilde22skew")
    x = rand_point(rng, 2)
    h = rand_skew(rng, 2)
    q = NonHolFrame(x, _eye(2), _eye(2), h)
    assert proj_tilde22(q) == HolFrame(x, _eye(2), Bilinear.zero(2))


def test_level_projections():
    rng = stream(75, "levels")
    q = rand_nonhol(rng, 3)
    lin = proj_21(q)
    assert lin == LinFrame(q.x, q.a)
    assert proj_20(q) == q.x
    assert proj_10(lin) == q.x
    p = rand_semihol(rng, 3)
    assert proj_21(p) == LinFrame(p.x, p.a)
    t = rand_hol(rng, 3)
    assert proj_21(t) == LinFrame(t.x, t.a)


# ---------------------------------------------------------------------------
# fibers


def test_fiber_membership():
    rng = stream(76, "fiber")
    t = rand_hol(rng, 2)
    h = rand_skew(rng, 2)
    member = act_semihol(embed_hol(t), GHat2.from_bilinear(h))
    assert fiber_hat22_contains(t, member)
    other = rand_semihol(rng, 2)
    if other.a != t.a:
        assert not fiber_hat22_contains(t, other)
    assert fiber_hat22_contains(t, other) == (proj_hat22(other) == t)


# ---------------------------------------------------------------------------
# the extension model


def test_theta_on_canonical_trivial_class():
    rng = stream(77, "theta")
    t = rand_hol(rng, 2)
    c = ExtClass(t, GHat2.identity(2))
    assert theta(c) == embed_hol(t)


def test_theta_inv_of_holonomic_frame():
    rng = stream(78, "thetainv")
    t = rand_hol(rng, 2)
    c = theta_inv(embed_hol(t))
    assert c.p == t and c.k == GHat2.identity(2)


def test_theta_roundtrip_and_class_invariance():
    rng = stream(79, "thetaround")
    for _ in range(10):
        q = rand_semihol(rng, 3)
        assert theta(theta_inv(q)) == q
        p = rand_hol(rng, 3)
        k = rand_hat2(rng, 3)
        c = ext_class(p, k)
        assert theta_inv(theta(c)) == c
        alpha = rand_g2(rng, 3)
        shifted = ext_class(act_hol(p, alpha),
                            mul_hat2(inv_g2(alpha).as_hat2(), k))
        assert shifted == c


def test_ext_class_constructor_requires_canonical_form():
    rng = stream(80, "extval")
    t = rand_hol(rng, 2)
    k = rand_hat2(rng, 2)
    if not (k.a.is_identity() and is_skew(k.f)):
        with pytest.raises(ValueError):
            ExtClass(t, k)


# ---------------------------------------------------------------------------
# orbit map and fiber coordinate


def test_omega_representative_independent():
    rng = stream(81, "omega")
    q = rand_semihol(rng, 2)
    h = rand_skew(rng, 2)
    assert omega(act_semihol(q, GHat2.from_bilinear(h))) == omega(q)
    t = rand_hol(rng, 2)
    assert omega(embed_hol(t)) == t


def test_sigma_special_cases():
    rng = stream(82, "sigma")
    t = rand_hol(rng, 2)
    assert sigma(embed_hol(t)).is_zero()
    x = rand_point(rng, 2)
    h = rand_skew(rng, 2)
    assert sigma(SemiHolFrame(x, _eye(2), h)) == h


def test_sigma_solves_the_trivialization_equation():
    rng = stream(83, "sigmaeq")
    for _ in range(10):
        p = rand_semihol(rng, 3)
        s = sigma(p)
        assert is_skew(s)
        assert (mul_hat2(GHat2(p.a, sym_part(p.f)), GHat2.from_bilinear(s))
                == GHat2(p.a, p.f))
        assert s == skew_part(sigma(p)) + sym_part(sigma(p))


# ---------------------------------------------------------------------------
# the matrix-skew action


def test_act_tilde22_identity_and_matrix_part():
    rng = stream(84, "t22act")
    q = rand_nonhol(rng, 2)
    assert act_tilde22(q, GTilde22.identity(2)) == q
    l = rand_invertible(rng, 2)
    zero = Bilinear.zero(2)
    base = NonHolFrame(q.x, q.a, q.b, zero)
    moved = act_tilde22(base, GTilde22(l, zero))
    assert moved == NonHolFrame(q.x, q.a, q.b @ l, zero)


def test_act_tilde22_staged_identity():
    rng = stream(85, "t22staged")
    for _ in range(10):
        q = rand_nonhol(rng, 2)
        g = rand_tilde22(rng, 2)
        staged = act_nonhol(
            act_nonhol(q, GTilde2(_eye(2), g.l, Bilinear.zero(2))),
            GTilde2(_eye(2), _eye(2), g.h))
        assert act_tilde22(q, g) == staged
