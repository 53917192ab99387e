from fractions import Fraction

import pytest

from exact_oracles import (
    poly_compose_component,
    poly_compose_jets,
    poly_diff,
    polys_to_jet_data,
)
from jetframes import (
    Bilinear,
    CompositionDomainError,
    FMJetData,
    G2,
    Map2Jet,
    NonHolFrame,
    NotAFrameError,
    SquareMatrix,
    classify,
    compose_2jets,
    frame_from_fm_map,
    g2_law_via_jets,
    left_act_diffeo,
    mul_g2,
    mul_hat2,
    post_compose,
    proj_21,
)
from jetframes.randgen import (
    rand_g2,
    rand_map2jet,
    rand_nonhol,
    rand_point,
    stream,
)


def _eye(n):
    return SquareMatrix.identity(n)


def _origin(n):
    return (Fraction(0),) * n


# ---------------------------------------------------------------------------
# composition


def test_compose_with_identity():
    rng = stream(90, "jetid")
    f = rand_map2jet(rng, 3)
    assert compose_2jets(Map2Jet.identity(f.value), f) == f
    assert compose_2jets(f, Map2Jet.identity(f.base)) == f


def test_compose_pure_quadratics_add_hessians():
    rng = stream(91, "jetquad")
    n = 2
    h1 = rand_g2(rng, n).f
    h2 = rand_g2(rng, n).f
    j1 = Map2Jet(_origin(n), _origin(n), _eye(n), h1)
    j2 = Map2Jet(_origin(n), _origin(n), _eye(n), h2)
    assert compose_2jets(j1, j2).hess == h1 + h2


def test_compose_requires_chained_points():
    rng = stream(92, "jetchain")
    f = rand_map2jet(rng, 2)
    g = rand_map2jet(rng, 2)
    if g.base != f.value:
        with pytest.raises(CompositionDomainError):
            compose_2jets(g, f)


def test_compose_matches_polynomial_expansion():
    # compose two explicit quadratic maps as polynomials, truncate, compare
    rng = stream(93, "jetpoly")
    for n in (1, 2, 3):
        for _ in range(10):
            x0 = rand_point(rng, n)
            x1 = rand_point(rng, n)
            x2 = rand_point(rng, n)
            inner = rand_map2jet(rng, n, base=x0, value=x1)
            outer = rand_map2jet(rng, n, base=x1, value=x2)
            polys = poly_compose_jets(outer, inner)
            value, jac, hess = polys_to_jet_data(polys, n)
            composed = compose_2jets(outer, inner)
            assert composed.value == value
            assert composed.jac == SquareMatrix.from_rows(jac)
            assert composed.hess == Bilinear.from_coeffs(hess)


def test_compose_associative():
    rng = stream(94, "jetassoc")
    n = 2
    points = [rand_point(rng, n) for _ in range(4)]
    f = rand_map2jet(rng, n, base=points[0], value=points[1])
    g = rand_map2jet(rng, n, base=points[1], value=points[2])
    h = rand_map2jet(rng, n, base=points[2], value=points[3])
    assert (compose_2jets(compose_2jets(h, g), f)
            == compose_2jets(h, compose_2jets(g, f)))


# ---------------------------------------------------------------------------
# the group law from jets


def test_jet_law_identity_and_linear_parts():
    assert g2_law_via_jets(G2.identity(2), G2.identity(2)) == G2.identity(2)
    rng = stream(95, "jetlaw")
    a = rand_g2(rng, 2).a
    a2 = rand_g2(rng, 2).a
    zero = Bilinear.zero(2)
    assert g2_law_via_jets(G2(a, zero), G2(a2, zero)) == G2(a @ a2, zero)


def test_jet_law_equals_group_law():
    rng = stream(96, "jetlawfull")
    for n in (1, 2, 3):
        for _ in range(15):
            p, q = rand_g2(rng, n), rand_g2(rng, n)
            via_jets = g2_law_via_jets(p, q)
            assert via_jets == mul_g2(p, q)
            assert via_jets.as_hat2() == mul_hat2(p.as_hat2(), q.as_hat2())


# ---------------------------------------------------------------------------
# frames from frame-field data


def test_frame_field_with_matching_derivative_is_holonomic():
    # section style: r -> (phi(r), Dphi(r)) with phi quadratic
    n = 2
    phi0 = _origin(n)
    dphi = SquareMatrix.from_rows([[1, 2], [0, 1]])
    hess = Bilinear.from_coeffs(
        [[[1, 0], [0, 2]], [[0, 1], [1, 0]]])  # symmetric second derivatives
    d = FMJetData(phi0, dphi, dphi, hess)
    frame = frame_from_fm_map(d)
    assert classify(frame) == "holonomic"


def test_identity_section_is_holonomic():
    n = 2
    d = FMJetData(_origin(n), _eye(n), _eye(n), Bilinear.zero(n))
    assert classify(frame_from_fm_map(d)) == "holonomic"


def test_mismatched_linear_parts_give_nonholonomic():
    n = 2
    phi_lin = SquareMatrix.from_rows([[1, 1], [0, 1]])
    dphi = SquareMatrix.from_rows([[1, 0], [0, 1]])
    d = FMJetData(_origin(n), phi_lin, dphi, Bilinear.zero(n))
    assert classify(frame_from_fm_map(d)) == "nonholonomic"


def test_singular_data_is_not_a_frame():
    n = 2
    singular = SquareMatrix.from_rows([[1, 1], [1, 1]])
    with pytest.raises(NotAFrameError):
        frame_from_fm_map(FMJetData(_origin(n), _eye(n), singular,
                                    Bilinear.zero(n)))
    with pytest.raises(NotAFrameError):
        frame_from_fm_map(FMJetData(_origin(n), singular, _eye(n),
                                    Bilinear.zero(n)))


def test_explicit_quadratic_frame_field():
    # phi(r) = (r0 + r0*r1, r1 + 1/2 r1^2), frame part PHI(r) = A + r0*G
    # differentiated by hand via the polynomial helpers
    n = 2
    A = SquareMatrix.from_rows([[2, 1], [1, 1]])
    G = SquareMatrix.from_rows([[0, 1], [1, 0]])
    phi_polys = [
        {(0,): Fraction(1), (0, 1): Fraction(1)},
        {(1,): Fraction(1), (1, 1): Fraction(1, 2)},
    ]
    dphi = [[poly_diff(phi_polys[k], j).get((), Fraction(0)) for j in range(n)]
            for k in range(n)]
    # entries of PHI are linear polynomials; their r^j derivative at 0
    dphi_lin = [[[G.entries[k][l] if j == 0 else Fraction(0) for j in range(n)]
                 for l in range(n)] for k in range(n)]
    d = FMJetData(_origin(n), A, SquareMatrix.from_rows(dphi),
                  Bilinear.from_coeffs(dphi_lin))
    frame = frame_from_fm_map(d)
    assert frame.x == _origin(n)
    assert frame.a == A
    assert frame.b == SquareMatrix.from_rows([[1, 0], [0, 1]])
    assert frame.f.coeffs[0][1][0] == 1  # d PHI^0_1 / d r^0


# ---------------------------------------------------------------------------
# the prolonged action


def test_identity_jet_acts_trivially():
    rng = stream(97, "actid")
    q = rand_nonhol(rng, 2)
    assert left_act_diffeo(Map2Jet.identity(q.x), q) == q


def test_linear_jet_acts_by_post_composition():
    rng = stream(98, "actlin")
    q = rand_nonhol(rng, 2)
    F = rand_map2jet(rng, 2, base=q.x)
    F_linear = Map2Jet(F.base, F.value, F.jac, Bilinear.zero(2))
    moved = left_act_diffeo(F_linear, q)
    assert moved.x == F.value
    assert moved.a == F.jac @ q.a
    assert moved.b == F.jac @ q.b
    assert moved.f == post_compose(F.jac, q.f)


def test_action_matches_polynomial_differentiation():
    # push an explicit polynomial frame field through an explicit quadratic
    # diffeo and differentiate the composite symbolically
    n = 2
    rng = stream(99, "actpoly")
    for _ in range(5):
        q = rand_nonhol(rng, n)
        F = rand_map2jet(rng, n, base=q.x)
        # represent the frame field psi(r) = (phi(r), PHI(r)) to first order:
        # phi has value q.x, jacobian q.b; PHI has value q.a, derivative q.f
        # F as Taylor polynomials around its base, in displacement variables
        F_polys = [
            {**{(): F.value[k]},
             **{(i,): F.jac.entries[k][i] for i in range(n)
                if F.jac.entries[k][i] != 0}}
            for k in range(n)
        ]
        for k in range(n):
            for i in range(n):
                for j in range(i, n):
                    c = F.hess.coeffs[k][i][j]
                    if c != 0:
                        F_polys[k][(i, j)] = c * (Fraction(1, 2) if i == j
                                                  else Fraction(1))
        displacement = [dict({(i,): q.b.entries[k][i] for i in range(n)
                              if q.b.entries[k][i] != 0})
                        for k in range(n)]
        # composite base map F(phi(r)): substitute the displacement
        composite = [poly_compose_component(F_polys[k], displacement)
                     for k in range(n)]
        x_new = tuple(p.get((), Fraction(0)) for p in composite)
        b_new = [[poly_diff(composite[k], j).get((), Fraction(0))
                  for j in range(n)] for k in range(n)]
        # composite frame part DF(phi(r)) . PHI(r), entry (k, l):
        # sum_m dF^k/du^m (phi(r)) * PHI^m_l(r)
        dF = [[poly_compose_component(poly_diff(F_polys[k], m), displacement)
               for m in range(n)] for k in range(n)]
        a_new = [[sum((dF[k][m].get((), Fraction(0)) * q.a.entries[m][l]
                       for m in range(n)), Fraction(0))
                  for l in range(n)] for k in range(n)]
        f_new = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for k in range(n):
            for l in range(n):
                for j in range(n):
                    total = Fraction(0)
                    for m in range(n):
                        # product rule: (dF^k_m o phi)' PHI^m_l + value * dPHI
                        total += (poly_diff(dF[k][m], j).get((), Fraction(0))
                                  * q.a.entries[m][l])
                        total += (dF[k][m].get((), Fraction(0))
                                  * q.f.coeffs[m][l][j])
                    f_new[k][l][j] = total
        expected = NonHolFrame(x_new, SquareMatrix.from_rows(a_new),
                               SquareMatrix.from_rows(b_new),
                               Bilinear.from_coeffs(f_new))
        assert left_act_diffeo(F, q) == expected


def test_action_preserves_class_and_projects():
    rng = stream(100, "actclass")
    for _ in range(5):
        q = rand_nonhol(rng, 2)
        F = rand_map2jet(rng, 2, base=q.x)
        moved = left_act_diffeo(F, q)
        assert classify(moved) == classify(q)
        lin = proj_21(moved)
        assert lin.x == F.value and lin.a == F.jac @ q.a


def test_action_is_functorial():
    rng = stream(101, "actfunct")
    q = rand_nonhol(rng, 2)
    mid = rand_point(rng, 2)
    end = rand_point(rng, 2)
    G = rand_map2jet(rng, 2, base=q.x, value=mid)
    F = rand_map2jet(rng, 2, base=mid, value=end)
    assert (left_act_diffeo(compose_2jets(F, G), q)
            == left_act_diffeo(F, left_act_diffeo(G, q)))


def test_action_requires_matching_base():
    rng = stream(102, "actdomain")
    q = rand_nonhol(rng, 2)
    F = rand_map2jet(rng, 2)
    if F.base != q.x:
        with pytest.raises(CompositionDomainError):
            left_act_diffeo(F, q)


def test_hessian_must_be_symmetric():
    with pytest.raises(ValueError):
        Map2Jet(_origin(2), _origin(2), _eye(2), Bilinear.single(2, 0, 0, 1))
