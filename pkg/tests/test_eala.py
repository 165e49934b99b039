import random
from fractions import Fraction

import pytest

from lietor.graded import GradedAssocAlgebra
from lietor.matlie import DirectSumSl, MatrixLieAlgebra
from lietor.eala import (
    IaraData,
    build_E,
    classify_variant,
    core_and_tameness,
    default_iara_data,
    degree_derivation_basis,
    jacobi_sample,
    nullity_of,
    root_reflection_data,
    sigma_d_values,
    validate_inv_data,
    verify_eala,
    verify_iara,
)
from lietor.scalars import cyclotomic_field


def F(*args):
    return Fraction(*args)


@pytest.fixture(scope="module")
def affine_E():
    L = MatrixLieAlgebra(3, GradedAssocAlgebra.laurent())
    data = default_iara_data(L, window=3)
    return build_E(data, window=2)


@pytest.fixture(scope="module")
def qtorus_E():
    F3 = cyclotomic_field(3)
    z3 = F3.zeta()
    q = [[F3.one, z3], [z3.inverse(), F3.one]]
    L = MatrixLieAlgebra(3, GradedAssocAlgebra.quantum_torus(q, F3))
    data = default_iara_data(L, window=2)
    return build_E(data, window=2)


def test_sigma_d_grading(affine_E):
    E = affine_E
    L = E.L
    # degrees summing to a nonzero value: functional on D^0 vanishes
    l1 = L.E(0, 1, L.A.monomial((1,)))
    l2 = L.E(1, 0, L.A.monomial((1,)))
    assert sigma_d_values(E.data, l1, l2) == [F(0)]
    # degree-derivation pairing: sigma(l1, l2)(d) = m (l1 | l2)
    m = 2
    l1 = L.E(0, 1, L.A.monomial((m,)))
    l2 = L.E(1, 0, L.A.monomial((-m,)))
    form = E.data.form
    assert sigma_d_values(E.data, l1, l2) == [F(m) * form.pair(l1, l2)]
    # d in T_D acting as zero: sigma vanishes on degree-0 pairs
    assert sigma_d_values(E.data, L.E(0, 1), L.E(1, 0)) == [F(0)]


def test_sigma_d_is_a_central_cocycle(qtorus_E):
    # alternating plus the 2-cocycle identity on sampled homogeneous triples
    E = qtorus_E
    L = E.L
    from lietor.matlie import bracket as mb

    basis = L.windowed_basis(1)
    rng = random.Random(9)
    for _ in range(60):
        l = rng.choice(basis)
        assert sigma_d_values(E.data, l, l) == [L.field.zero] * len(E.data.D)
    for _ in range(80):
        l1, l2, l3 = (rng.choice(basis) for _ in range(3))
        total = [
            a + b + c
            for a, b, c in zip(
                sigma_d_values(E.data, mb(l1, l2), l3),
                sigma_d_values(E.data, mb(l2, l3), l1),
                sigma_d_values(E.data, mb(l3, l1), l2),
            )
        ]
        assert total == [L.field.zero] * len(E.data.D)


def test_block_brackets(affine_E):
    E = affine_E
    c = E.c_basis_elem(0)
    d = E.d_basis_elem(0)
    assert E.bracket(c, c).is_zero()
    # [d, c] lies in C (contragredient action; zero for abelian D)
    dc = E.bracket(d, c)
    assert not dc.l and not any(dc.d)
    l = E.from_l(E.L.E(0, 1, E.L.A.monomial((2,))))
    dl = E.bracket(d, l)
    assert dl.l == E.L.E(0, 1, E.L.A.monomial((2,))).scale(F(2))


def test_form_blocks(affine_E):
    E = affine_E
    c = E.c_basis_elem(0)
    d = E.d_basis_elem(0)
    assert E.form(c, d) == E.data.C[0].values[0]
    assert E.form(c, c) == 0
    assert E.form(d, d) == 0


def test_affine_block_dimensions(affine_E):
    E = affine_E
    assert E.t_labels() == ["C", "h", "h", "D"]
    zero_root = (F(0),) * 3
    assert len(E.root_space_basis(zero_root, (0,))) == 4
    for m in (1, 2):
        assert len(E.root_space_basis(zero_root, (m,))) == 2


def test_affine_iara_eala(affine_E):
    ia = verify_iara(affine_E, window=2)
    assert ia.ok, ia.failures()[0].witness
    ea = verify_eala(affine_E, window=2, iara=ia)
    assert ea.ok, ea.failures()[0].witness
    assert nullity_of(affine_E, 2) == 1
    assert core_and_tameness(affine_E, 2)["tame"] is True


def test_affine_root_data_matches_ars(affine_E):
    from lietor.refl import build_affine_rs
    from lietor.rootsys import build_classical

    ars, mp, kac = build_affine_rs(build_classical("A", 2), 1)
    real_E, imag_E = root_reflection_data(affine_E, 2)
    real_R, imag_R = set(), set()
    for a in ars.windowed_roots(2):
        xi, lam = ars.split(a)
        vec = tuple(xi) + tuple(F(x) for x in lam)
        (real_R if any(xi) else imag_R).add(vec)
    assert real_E == real_R and imag_E == imag_R


def test_jacobi_and_invariance(affine_E):
    E = affine_E
    assert jacobi_sample(E, 150, seed=0, window=1)
    rng = random.Random(1)
    pool = E.windowed_basis(1)
    for _ in range(100):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert E.form(E.bracket(a, b), c) == E.form(a, E.bracket(b, c))


def test_gradedness_of_form(affine_E):
    E = affine_E
    zero_root = (F(0),) * 3
    x = E.root_space_basis(zero_root, (1,))[0]
    y = E.root_space_basis(zero_root, (2,))[0]
    assert E.form(x, y) == 0


def test_qtorus_eala(qtorus_E):
    E = qtorus_E
    ia = verify_iara(E, window=2)
    assert ia.ok
    ea = verify_eala(E, window=2, iara=ia)
    assert ea.ok
    assert nullity_of(E, 2) == 2
    assert core_and_tameness(E, 2)["tame"] is True
    cv = classify_variant(E, window=2, iara=ia, eala=ea)
    assert cv["EALA"] and cv["LEALA"] and cv["IARA"]


def test_invalid_tau_rejected(affine_E):
    L = affine_E.L
    data = default_iara_data(L, window=2)
    bad = dict(data.tau)
    bad[(0, 0)] = [F(1)]  # tau(d, d) != 0 is not alternating
    data = IaraData(L=data.L, form=data.form, D=data.D, T_D=data.T_D,
                    C=data.C, T_C=data.T_C, tau=bad)
    rep = validate_inv_data(data, window=1)
    assert not rep["INV-f"].ok


def test_tau_on_td_rejected():
    # Any nonzero tau on T_D x D violates INV(f) when T_D = D.
    L = MatrixLieAlgebra(3, GradedAssocAlgebra.group_algebra(2))
    data = default_iara_data(L, window=1)
    assert len(data.D) == 2
    tau = {(0, 1): [F(1) if not any(c.degree) else F(0) for c in data.C][:len(data.C)]}
    data = IaraData(L=data.L, form=data.form, D=data.D, T_D=data.T_D,
                    C=data.C, T_C=data.T_C, tau=tau)
    rep = validate_inv_data(data, window=1)
    assert not rep["INV-f"].ok


def test_degenerate_t_detected():
    # psi(1) = 0 makes the form on h degenerate: IA1 must fail with a witness.
    L = MatrixLieAlgebra(3, GradedAssocAlgebra.laurent())
    data = default_iara_data(L, phi=F(0), window=2)
    E = build_E(data, window=1, validate=False)
    rep = verify_iara(E, window=1)
    assert not rep["IA1"].ok
    assert "radical" in rep["IA1"].witness


def test_inv_c_requires_injectivity():
    # dropping one degree derivation on a rank-2 lattice breaks INV(c)
    L = MatrixLieAlgebra(3, GradedAssocAlgebra.group_algebra(2))
    D = degree_derivation_basis(L)[:1]
    data = default_iara_data(L, window=1, D=D)
    rep = validate_inv_data(data, window=1)
    assert not rep["INV-c"].ok


def test_direct_sum_is_iara_not_leala():
    L = DirectSumSl(3, 3, GradedAssocAlgebra.laurent())
    data = default_iara_data(L, window=2)
    E = build_E(data, window=1)
    ia = verify_iara(E, window=1)
    assert ia.ok
    ea = verify_eala(E, window=1, iara=ia)
    assert not ea["EA4"].ok
    cv = classify_variant(E, window=1, iara=ia, eala=ea)
    assert cv["IARA"] is True
    assert cv["LEALA"] is False
    assert cv["EALA"] is False


def test_qtorus_root_data_matches_untwisted_extension(qtorus_E):
    # the root datum of E over the zeta_3 torus is the untwisted extension
    # of A_2 by Z^2: every Lambda_xi is the full lattice
    from lietor.refl import untwisted_datum, AffineReflectionSystem

    E = qtorus_E
    ed = untwisted_datum(E.L.S, 2)
    ars = AffineReflectionSystem(E.L.S, ed.S_prime, ed)
    window = 2
    real_E, imag_E = root_reflection_data(E, window)
    real_R, imag_R = set(), set()
    for a in ars.windowed_roots(window):
        xi, lam = ars.split(a)
        vec = tuple(xi) + tuple(F(x) for x in lam)
        (real_R if any(xi) else imag_R).add(vec)
    assert real_E == real_R and imag_E == imag_R


def test_centreless_core_embeds_l(affine_E):
    # brackets of L-block elements reproduce L up to the central C-part
    E = affine_E
    L = E.L
    x = L.E(0, 1, L.A.monomial((1,)))
    y = L.E(1, 2, L.A.monomial((-1,)))
    from lietor.matlie import bracket as mat_bracket

    br = E.bracket(E.from_l(x), E.from_l(y))
    assert br.l == mat_bracket(x, y)
    assert not any(br.d)


def test_split_simple_nullity_zero():
    # no lattice directions at all: E = sl_3(Q), an EALA of nullity 0
    A0 = GradedAssocAlgebra.group_algebra(0)
    L = MatrixLieAlgebra(3, A0)
    data = default_iara_data(L, window=1)
    assert not data.D and not data.C
    E = build_E(data, window=1)
    ia = verify_iara(E, window=1)
    assert ia.ok
    ea = verify_eala(E, window=1, iara=ia)
    assert ea.ok
    assert nullity_of(E, 1) == 0
    assert core_and_tameness(E, 1)["tame"] is True


def test_reductive_not_tame():
    # coordinates concentrated in degree 0 with a phantom lattice direction:
    # D and C commute with everything, E = Z(E) + [E,E] with Z(E) != 0.
    Az = GradedAssocAlgebra.group_algebra(1, support="zero")
    L = MatrixLieAlgebra(3, Az)
    data = default_iara_data(L, window=2, C="dual")
    E = build_E(data, window=1)
    ia = verify_iara(E, window=1)
    assert ia.ok
    ct = core_and_tameness(E, 1)
    assert ct["tame"] is False
    assert nullity_of(E, 1) == 0
    d = E.d_basis_elem(0)
    for b in E.windowed_basis(1):
        assert E.bracket(d, b).is_zero()  # D is central junk here


def test_ad_nilpotence_bound(affine_E):
    # explicit (ad e)^6 = 0 witness for an anisotropic root
    E = affine_E
    e = E.from_l(E.L.E(0, 1, E.L.A.monomial((1,))))
    for b in E.windowed_basis(1):
        y = b
        for _ in range(6):
            y = E.bracket(e, y)
            if y.is_zero():
                break
        assert y.is_zero()
