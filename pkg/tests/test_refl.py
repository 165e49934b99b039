from fractions import Fraction

import pytest

from lietor.lattices import LatticeSubset
from lietor.refl import (
    ExtensionDatum,
    PreReflectionSystem,
    ars_structure,
    build_affine_rs,
    build_extension,
    check_form,
    extract_datum,
    predicates,
    quotient_by_affine_form,
    untwisted_datum,
    validate_ars_axioms,
    validate_axioms,
    validate_extension_datum,
)
from lietor.rootsys import (
    build_classical,
    build_exceptional,
    classify,
    indivisible_part,
    length_partition,
    normalized,
)


def F(*args):
    return Fraction(*args)


def prs_of(rs):
    return PreReflectionSystem.from_root_system(rs)


def test_root_systems_pass_axioms():
    for fam, rk in [("A", 2), ("B", 3), ("C", 3), ("BC", 2)]:
        rep = validate_axioms(prs_of(build_classical(fam, rk)))
        assert rep.ok, rep.failures()[0].name


def test_res2_failure_with_witness():
    # {0, +-e1, e2}: e2 has no negative, reflections move it out.
    roots = {(F(0), F(0)), (F(1), F(0)), (F(-1), F(0)), (F(0), F(1))}
    coroots = {
        (F(0), F(0)): (F(0), F(0)),
        (F(1), F(0)): (F(2), F(0)),
        (F(-1), F(0)): (F(-2), F(0)),
        (F(0), F(1)): (F(0), F(2)),
    }
    rep = validate_axioms(PreReflectionSystem(2, roots, coroots))
    assert not rep["ReS2"].ok
    assert rep["ReS2"].witness


def test_res3_failure_on_rescaled_coroot():
    # 2 e1 declared real with a coroot that is not alpha_check / 2.
    roots = {(F(0), F(0)), (F(1), F(0)), (F(-1), F(0)), (F(2), F(0)), (F(-2), F(0))}
    coroots = {
        (F(0), F(0)): (F(0), F(0)),
        (F(1), F(0)): (F(2), F(0)),
        (F(-1), F(0)): (F(-2), F(0)),
        (F(2), F(0)): (F(1), F(1)),
        (F(-2), F(0)): (F(-1), F(-1)),
    }
    rep = validate_axioms(PreReflectionSystem(2, roots, coroots))
    assert not rep["ReS3"].ok


def test_predicates():
    flags = predicates(prs_of(build_classical("BC", 2)))
    assert flags["reduced"] is False
    assert flags["integral"] and flags["coherent"] and flags["nondegenerate"]
    flags = predicates(prs_of(build_classical("A", 3)))
    assert flags["reduced"] and flags["symmetric"] and flags["tame"]


def test_tame_fails_on_isolated_imaginary_root():
    # delta = (0,1) imaginary but not a sum of two real roots.
    roots = {(F(0), F(0)), (F(1), F(0)), (F(-1), F(0)), (F(0), F(1)), (F(0), F(-1))}
    coroots = {r: ((F(2) * r[0], F(0)) if r[0] else (F(0), F(0))) for r in roots}
    flags = predicates(PreReflectionSystem(2, roots, coroots))
    assert flags["tame"] is False


def test_check_form_flags():
    rs = normalized(build_classical("B", 2))
    flags = check_form(prs_of(rs), rs.space.form)
    assert flags == {"invariant": True, "strictly_invariant": True, "affine": True}


def test_form_with_nonisotropic_imaginary_root():
    # delta imaginary with b(delta, delta) != 0: invariant but not strict.
    roots = {(F(0), F(0)), (F(1), F(0)), (F(-1), F(0)), (F(0), F(1)), (F(0), F(-1))}
    coroots = {r: ((F(2) * r[0], F(0)) if r[0] else (F(0), F(0))) for r in roots}
    prs = PreReflectionSystem(2, roots, coroots)
    form = ((F(1), F(0)), (F(0), F(1)))
    flags = check_form(prs, form)
    assert flags["invariant"] is True
    assert flags["strictly_invariant"] is False
    assert flags["affine"] is False


def test_untwisted_datum_valid():
    ed = untwisted_datum(build_classical("A", 1), 1)
    rep = validate_extension_datum(ed, window=3)
    assert rep.ok, rep.failures()[0]


def test_affine_b2_datum_valid():
    ars, _, _ = build_affine_rs(build_classical("B", 2), 2)
    rep = validate_extension_datum(ars.datum, window=3)
    assert rep.ok
    lg = sorted(a for a in length_partition(ars.S)[1])[0]
    assert ars.datum.lam(lg) == LatticeSubset.scaled_full(1, 2)


def test_ed2_failure():
    rs = normalized(build_classical("B", 2))
    sh, lg, div, k = length_partition(rs)
    odd = LatticeSubset(1, gens=[[2]], cosets=((1,),))
    full = LatticeSubset.full(1)
    fam = {a: (odd if a in lg else full) for a in rs.roots}
    ed = ExtensionDatum(rs, frozenset(indivisible_part(rs)), 1, fam)
    rep = validate_extension_datum(ed, window=2)
    assert not rep["ED2"].ok


def test_build_extension_passes_axioms():
    for fam, rk, tier in [("A", 2, 1), ("B", 2, 2), ("BC", 1, 1), ("BC", 2, 1)]:
        S = build_classical(fam, rk)
        ars, _, _ = build_affine_rs(S, tier)
        rep = validate_ars_axioms(ars, window=2)
        assert rep.ok, (fam, rep.failures()[0].name, rep.failures()[0].witness)


def test_trivial_extension_is_s():
    a2 = build_classical("A", 2)
    fam = {a: LatticeSubset.finite(0, [()]) for a in a2.roots}
    ed = ExtensionDatum(a2, frozenset(indivisible_part(a2)), 0, fam)
    ars = build_extension(a2, ed.S_prime, ed, window=2)
    assert set(ars.windowed_roots(2)) == a2.roots
    assert ars_structure(ars, window=2)["nullity"] == 0


def test_extract_datum_round_trip():
    ars, _, _ = build_affine_rs(build_classical("B", 2), 2)
    ed = extract_datum(ars)
    for a in ars.S.roots:
        assert ed.lam(a) == ars.datum.lam(a)


def test_extract_datum_shifted_section():
    ars, _, _ = build_affine_rs(build_classical("B", 2), 2)
    phi = {(F(1), F(0)): (1,), (F(0), F(1)): (1,)}
    ed = extract_datum(ars, phi)
    # Lambda'_xi = Lambda_xi - phi(xi); Z and 2Z are shift-invariant here.
    assert ed.lam((F(1), F(0))) == ars.datum.lam((F(1), F(0)))
    assert ed.lam((F(1), F(1))) == ars.datum.lam((F(1), F(1)))
    rep = validate_extension_datum(ed, window=2)
    assert rep.ok


def test_extract_rejects_non_section():
    ars, _, _ = build_affine_rs(build_classical("B", 2), 2)
    phi = {(F(1), F(0)): (1,), (F(0), F(1)): (0,)}  # phi(long (1,1)) = 1 odd
    with pytest.raises(ValueError):
        extract_datum(ars, phi)


def _ambient_affine_form(ars):
    dim = ars.dim
    form = [[F(0)] * dim for _ in range(dim)]
    for i in range(ars.y_dim):
        for j in range(ars.y_dim):
            form[i][j] = ars.S.space.form[i][j]
    return form


def test_quotient_by_affine_form():
    ars, _, _ = build_affine_rs(build_classical("A", 2), 1)
    S, project, fibers = quotient_by_affine_form(ars.to_prs(3), _ambient_affine_form(ars))
    assert str(classify(S)) == "A2"
    arsg, _, _ = build_affine_rs(build_exceptional("G2"), 3)
    S, project, fibers = quotient_by_affine_form(arsg.to_prs(2), _ambient_affine_form(arsg))
    assert str(classify(S)) == "G2"


def test_quotient_of_nondegenerate_form_is_identity():
    rs = normalized(build_classical("B", 2))
    S, project, fibers = quotient_by_affine_form(prs_of(rs), rs.space.form)
    assert len(S.roots) == len(rs.roots)
    assert str(classify(S)) == "B2"


def test_quotient_rejects_non_affine_form():
    rs = normalized(build_classical("B", 2))
    bad = [[F(0)] * 2 for _ in range(2)]
    with pytest.raises(ValueError):
        quotient_by_affine_form(prs_of(rs), bad)


def test_affine_labels_whole_table():
    expect = {
        ("A", 2, 1): ("A_2^(1)", "A_2^(1)"),
        ("B", 3, 2): ("B_3^(2)", "D_4^(2)"),
        ("C", 3, 2): ("C_3^(2)", "A_5^(2)"),
        ("F4", 4, 2): ("F_4^(2)", "E_6^(2)"),
        ("G2", 2, 3): ("G_2^(3)", "D_4^(3)"),
        ("BC", 1, 1): ("BC_1^(2)", "A_2^(2)"),
        ("BC", 2, 1): ("BC_2^(2)", "A_4^(2)"),
        ("D", 4, 1): ("D_4^(1)", "D_4^(1)"),
    }
    for (fam, rk, tier), labels in expect.items():
        S = build_exceptional(fam) if fam in ("G2", "F4") else build_classical(fam, rk)
        ars, mp, kac = build_affine_rs(S, tier)
        assert (mp, kac) == labels


def test_invalid_tier_rejected():
    with pytest.raises(ValueError):
        build_affine_rs(build_classical("A", 2), 2)
    with pytest.raises(ValueError):
        build_affine_rs(build_classical("BC", 2), 2)
    with pytest.raises(ValueError):
        build_affine_rs(build_classical("B", 3), 3)


def test_ars_structure_flags():
    ars, _, _ = build_affine_rs(build_classical("A", 2), 1)
    st = ars_structure(ars, window=3)
    assert st["nullity"] == 1
    assert st["class_flags"]["EARS"] is True
    assert st["tame"] and st["unbroken"] and st["symmetric"]
    assert st["max_string_len"] <= 5

    arsbc, _, _ = build_affine_rs(build_classical("BC", 1), 1)
    stbc = ars_structure(arsbc, window=3)
    assert stbc["reduced"] is True  # the odd coset of the divisible part
    assert stbc["max_string_len"] == 5
    assert stbc["class_flags"]["EARS"] is True


def test_untamed_lambda0_detected():
    # Lambda_0 = Z but Lambda_xi = 2Z everywhere: Lambda_diff = 2Z, not tame.
    a1 = build_classical("A", 1)
    two = LatticeSubset.scaled_full(1, 2)
    full = LatticeSubset.full(1)
    fam = {a: (full if not any(a) else two) for a in a1.roots}
    ed = ExtensionDatum(a1, frozenset(indivisible_part(a1)), 1, fam)
    ars = build_extension(a1, ed.S_prime, ed, window=2)
    st = ars_structure(ars, window=2)
    assert st["tame"] is False
    assert st["unbroken"] is True


def test_broken_strings_and_asymmetry_detected():
    # Lambda_0 = {0}: strings through the imaginary part break; an
    # asymmetric Lambda_0 = {0, 1} kills the symmetry flag.
    a1 = build_classical("A", 1)
    full = LatticeSubset.full(1)
    fam = {a: (LatticeSubset.zero(1) if not any(a) else full) for a in a1.roots}
    ed = ExtensionDatum(a1, frozenset(indivisible_part(a1)), 1, fam)
    ars = build_extension(a1, ed.S_prime, ed, window=2)
    st = ars_structure(ars, window=2)
    assert st["unbroken"] is False
    assert st["tame"] is True
    assert st["class_flags"]["EARS"] is False

    fam = {a: (LatticeSubset.finite(1, [(0,), (1,)]) if not any(a) else full)
           for a in a1.roots}
    ed = ExtensionDatum(a1, frozenset(indivisible_part(a1)), 1, fam)
    ars = build_extension(a1, ed.S_prime, ed, window=2)
    st = ars_structure(ars, window=2)
    assert st["symmetric"] is False
