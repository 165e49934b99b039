"""Pre-reflection and reflection systems, extension data, affine reflection
systems and the affine root systems with their twisted labels.

Finite data is checked exhaustively.  Data quantified over the lattice Z^n
is checked on a box window and the verdict records the window; lattice
membership itself is always exact (see lattices.LatticeSubset).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattices import LatticeSubset
from .linalg import kernel, rank as mat_rank
from .report import AxiomReport
from .rootsys import (
    RootSpace,
    RootSystem,
    classify,
    connected_components,
    indivisible_part,
    length_partition,
    normalized,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
)
from .scalars import QQ

ZERO = Fraction(0)


class PreReflectionSystem:
    """Finite set of roots with an explicit coroot assignment.

    Real roots are exactly those with nonzero coroot; the reflection is
    always s_alpha(x) = x - <x, alpha_check> alpha.
    """

    def __init__(self, dim: int, roots, coroots: dict):
        self.dim = dim
        self.roots = frozenset(tuple(r) for r in roots)
        self.coroots = {tuple(k): tuple(v) for k, v in coroots.items()}
        missing = [r for r in self.roots if r not in self.coroots]
        if missing:
            raise ValueError(f"coroot missing for {missing[0]}")
        self._pair_cache = {}

    @classmethod
    def from_root_system(cls, rs: RootSystem) -> "PreReflectionSystem":
        return cls(rs.dim, rs.roots, dict(rs.coroots))

    def real_roots(self):
        return [a for a in sorted(self.roots) if any(self.coroots[a])]

    def imaginary_roots(self):
        return [a for a in sorted(self.roots) if not any(self.coroots[a])]

    def pairing(self, x, alpha) -> Fraction:
        key = (x, alpha)
        got = self._pair_cache.get(key)
        if got is None:
            cor = self.coroots[tuple(alpha)]
            got = sum((xi * ci for xi, ci in zip(x, cor) if xi and ci), ZERO)
            self._pair_cache[key] = got
        return got

    def reflect(self, alpha, x):
        x = tuple(x)
        c = self.pairing(x, alpha)
        if not c:
            return x
        return vec_sub(x, vec_scale(c, tuple(alpha)))


class _IntModel:
    """Integer-rescaled view of a pre-reflection system for the hot loops.

    Roots are scaled by a common denominator dr, coroots by dc; pairings are
    integer dot products divided by dr*dc.  Only built when that quotient is
    integral for every pair, which covers all integral systems.
    """

    def __init__(self, prs: PreReflectionSystem):
        dr = dc = 1
        for a in prs.roots:
            for x in a:
                dr = dr * x.denominator // _gcd(dr, x.denominator)
        for c in prs.coroots.values():
            for x in c:
                dc = dc * x.denominator // _gcd(dc, x.denominator)
        self.den = dr * dc
        self.to_int = {a: tuple(int(x * dr) for x in a) for a in prs.roots}
        self.from_int = {v: k for k, v in self.to_int.items()}
        self.cor = {self.to_int[a]: tuple(int(x * dc) for x in prs.coroots[a])
                    for a in prs.roots}
        self.roots = set(self.to_int.values())
        self.real = {self.to_int[a] for a in prs.roots if any(prs.coroots[a])}
        self.imag = self.roots - self.real
        self.integral = True
        self._pair = {}
        for a in self.roots:
            cor = self.cor[a]
            if not any(cor):
                continue
            for b in self.roots:
                dot = sum(x * y for x, y in zip(b, cor) if x and y)
                q, r = divmod(dot, self.den)
                if r:
                    self.integral = False
                    return
                self._pair[(b, a)] = q

    def pairing(self, b, a) -> int:
        return self._pair[(b, a)] if any(self.cor[a]) else 0

    def reflect(self, a, b):
        c = self.pairing(b, a)
        if not c:
            return b
        return tuple(x - c * y for x, y in zip(b, a))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def validate_axioms(prs: PreReflectionSystem) -> AxiomReport:
    """ReS0 through ReS4, each reported separately with a witness on failure."""
    model = _IntModel(prs)
    if model.integral:
        return _validate_axioms_int(prs, model)
    return _validate_axioms_generic(prs)


def _validate_axioms_int(prs: PreReflectionSystem, m: _IntModel) -> AxiomReport:
    rep = AxiomReport()
    zero = (0,) * prs.dim
    note0 = f"X = span(R), rank {mat_rank([list(r) for r in prs.roots], QQ)} in ambient dim {prs.dim}"

    ok0, witness0 = zero in m.roots, None
    if not ok0:
        witness0 = "0 missing from R"
    else:
        for a in m.real:
            if m.pairing(a, a) != 2:
                ok0 = False
                witness0 = f"s_alpha^2 != id at alpha={m.from_int[a]}"
                break
    rep.add("ReS0", ok0, witness0, note=note0)

    ok1, witness1 = True, None
    for a in m.real:
        if not any(a):
            ok1, witness1 = False, "0 assigned a nonzero coroot"
            break
        if m.reflect(a, a) != tuple(-x for x in a):
            ok1, witness1 = False, f"s_alpha(alpha) != -alpha at alpha={m.from_int[a]}"
            break
    rep.add("ReS1", ok1, witness1)

    ok2, witness2 = True, None
    for a in sorted(m.roots):
        for b in sorted(m.real):
            img = m.reflect(a, b)
            if img not in m.real:
                ok2, witness2 = False, f"s_{m.from_int[a]}({m.from_int[b]}) leaves the real part"
                break
        if not ok2:
            break
        for b in sorted(m.imag):
            img = m.reflect(a, b)
            if img not in m.imag:
                ok2, witness2 = False, f"s_{m.from_int[a]}({m.from_int[b]}) leaves the imaginary part"
                break
        if not ok2:
            break
    rep.add("ReS2", ok2, witness2)

    ok3, witness3 = True, None
    real_frac = sorted(prs.real_roots())
    for a in real_frac:
        for b in real_frac:
            if a >= b:
                continue
            c = _collinearity(a, b)
            if c is None:
                continue
            expect = tuple(x / c for x in prs.coroots[a])
            if prs.coroots[b] != expect:
                ok3, witness3 = False, f"s_({c})*{a} != s_{a}"
                break
        if not ok3:
            break
    rep.add("ReS3", ok3, witness3)

    ok4, witness4 = True, None
    for a in sorted(m.roots):
        cor_a = m.cor[a]
        a_real = any(cor_a)
        for b in sorted(m.roots):
            cor_b = m.cor[b]
            if not a_real and not any(cor_b):
                continue
            img = m.reflect(a, b)
            if img not in m.roots:
                continue
            pba = m.pairing(a, b)
            expect = cor_b if not pba else tuple(
                cb - pba * ca for cb, ca in zip(cor_b, cor_a)
            )
            if m.cor[img] != expect:
                ok4, witness4 = False, f"s_a s_b s_a != s_(s_a b) at a={m.from_int[a]}, b={m.from_int[b]}"
                break
        if not ok4:
            break
    rep.add("ReS4", ok4, witness4)
    return rep


def _validate_axioms_generic(prs: PreReflectionSystem) -> AxiomReport:
    rep = AxiomReport()
    zero = (ZERO,) * prs.dim
    real = set(prs.real_roots())
    imag = set(prs.imaginary_roots())

    # X is the span of R; the ambient coordinates are only a carrier, so the
    # spanning half of ReS0 holds by construction and we record the rank.
    ok0 = zero in prs.roots
    witness0 = None if ok0 else "0 missing from R"
    note0 = f"X = span(R), rank {mat_rank([list(r) for r in prs.roots], QQ)} in ambient dim {prs.dim}"
    if ok0:
        for a in real:
            if prs.pairing(a, a) != 2:
                ok0, witness0 = False, f"s_alpha^2 != id at alpha={a} (<a,a_check>={prs.pairing(a, a)})"
                break
    rep.add("ReS0", ok0, witness0, note=note0)

    ok1, witness1 = True, None
    for a in real:
        if vec_is_zero(a):
            ok1, witness1 = False, "0 assigned a nonzero coroot"
            break
        if prs.reflect(a, a) != vec_scale(-1, a):
            ok1, witness1 = False, f"s_alpha(alpha) != -alpha at alpha={a}"
            break
    rep.add("ReS1", ok1, witness1)

    ok2, witness2 = True, None
    for a in sorted(prs.roots):
        for b in sorted(real):
            img = prs.reflect(a, b)
            if img not in real:
                ok2, witness2 = False, f"s_{a}({b}) = {img} leaves the real part"
                break
        if not ok2:
            break
        for b in sorted(imag):
            img = prs.reflect(a, b)
            if img not in imag:
                ok2, witness2 = False, f"s_{a}({b}) = {img} leaves the imaginary part"
                break
        if not ok2:
            break
    rep.add("ReS2", ok2, witness2)

    ok3, witness3 = True, None
    real_sorted = sorted(real)
    for a in real_sorted:
        for b in real_sorted:
            if a >= b:
                continue
            c = _collinearity(a, b)
            if c is None:
                continue
            # b = c a; s_b == s_a iff b_check = a_check / c.
            expect = tuple(x / c for x in prs.coroots[a])
            if prs.coroots[b] != expect:
                ok3, witness3 = False, f"s_({c})*{a} != s_{a}"
                break
        if not ok3:
            break
    rep.add("ReS3", ok3, witness3)

    ok4, witness4 = True, None
    roots_sorted = sorted(prs.roots)
    for a in roots_sorted:
        cor_a = prs.coroots[a]
        a_real = any(cor_a)
        for b in roots_sorted:
            cor_b = prs.coroots[b]
            if not a_real and not any(cor_b):
                continue  # both reflections are the identity
            img = prs.reflect(a, b)
            if img not in prs.roots:
                continue  # already a ReS2 failure
            pba = prs.pairing(a, b)
            expect = cor_b if not pba else tuple(
                cb - pba * ca for cb, ca in zip(cor_b, cor_a)
            )
            if prs.coroots[img] != expect:
                ok4, witness4 = False, f"s_a s_b s_a != s_(s_a b) at a={a}, b={b}"
                break
        if not ok4:
            break
    rep.add("ReS4", ok4, witness4)
    return rep


def _collinearity(a, b):
    """c with b = c a, or None."""
    ratio = None
    for x, y in zip(a, b):
        if bool(x) != bool(y):
            return None
        if x:
            r = y / x
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
    return ratio


def predicates(prs: PreReflectionSystem) -> dict:
    """The six basic flags evaluated by direct quantification."""
    model = _IntModel(prs)
    if model.integral:
        return _predicates_int(prs, model)
    real = prs.real_roots()
    imag = prs.imaginary_roots()
    reduced = True
    for a in real:
        for b in real:
            if a < b:
                c = _collinearity(a, b)
                if c is not None and c not in (1, -1):
                    reduced = False
    integral = all(
        prs.pairing(b, a).denominator == 1 for a in real for b in prs.roots
    )
    # Nondegenerate: no nonzero vector of span(R) killed by every coroot.
    cors = [list(prs.coroots[a]) for a in real]
    span_rows = [list(r) for r in prs.roots if any(r)]
    ker = kernel(cors, QQ, prs.dim) if cors else [list(_unit_vec(prs.dim, i)) for i in range(prs.dim)]
    span_rank = mat_rank(span_rows, QQ) if span_rows else 0
    nondegenerate = True
    if ker and span_rows:
        nondegenerate = mat_rank(span_rows + ker, QQ) == span_rank + mat_rank(ker, QQ)
    elif ker and not span_rows:
        nondegenerate = False
    symmetric = all(vec_scale(-1, a) in prs.roots for a in prs.roots)
    coherent = all(
        (prs.pairing(a, b) == 0) == (prs.pairing(b, a) == 0)
        for a in real
        for b in real
    )
    real_set = set(real)
    tame = True
    for d in imag:
        if not any(vec_sub(d, a) in real_set for a in real):
            tame = False
            break
    return {
        "reduced": reduced,
        "integral": integral,
        "nondegenerate": nondegenerate,
        "symmetric": symmetric,
        "coherent": coherent,
        "tame": tame,
    }


def _predicates_int(prs: PreReflectionSystem, m: _IntModel) -> dict:
    real = sorted(m.real)
    reduced = True
    for i, a in enumerate(real):
        for b in real[i + 1:]:
            c = _collinearity(a, b)
            if c is not None and c not in (1, -1):
                reduced = False
    cors = [list(prs.coroots[a]) for a in prs.real_roots()]
    span_rows = [list(r) for r in prs.roots if any(r)]
    ker = kernel(cors, QQ, prs.dim) if cors else [
        list(_unit_vec(prs.dim, i)) for i in range(prs.dim)
    ]
    span_rank = mat_rank(span_rows, QQ) if span_rows else 0
    nondegenerate = True
    if ker and span_rows:
        nondegenerate = mat_rank(span_rows + ker, QQ) == span_rank + mat_rank(ker, QQ)
    elif ker and not span_rows:
        nondegenerate = False
    symmetric = all(tuple(-x for x in a) in m.roots for a in m.roots)
    coherent = all(
        (m.pairing(a, b) == 0) == (m.pairing(b, a) == 0)
        for a in real for b in real
    )
    tame = True
    for d in sorted(m.imag):
        if not any(tuple(x - y for x, y in zip(d, a)) in m.real for a in real):
            tame = False
            break
    return {
        "reduced": reduced,
        "integral": True,
        "nondegenerate": nondegenerate,
        "symmetric": symmetric,
        "coherent": coherent,
        "tame": tame,
    }


def check_form(prs: PreReflectionSystem, form) -> dict:
    """Invariance flags of a symmetric bilinear form on the ambient space."""
    space = RootSpace(prs.dim, tuple(tuple(Fraction(x) for x in row) for row in form))
    basis = sorted(prs.roots)

    def pair(x, y):
        return space.pair(x, y)

    invariant = True
    for a in prs.real_roots():
        na = pair(a, a)
        for x in basis:
            if 2 * pair(x, a) != prs.pairing(x, a) * na:
                invariant = False
                break
        if not invariant:
            break
    rad_cond = all(
        all(pair(d, x) == 0 for x in basis) for d in prs.imaginary_roots()
    )
    strictly = invariant and rad_cond
    in_rad = {
        a for a in prs.roots if all(pair(a, x) == 0 for x in basis)
    }
    affine = invariant and in_rad == set(prs.imaginary_roots())
    return {"invariant": invariant, "strictly_invariant": strictly, "affine": affine}


@dataclass
class ExtensionDatum:
    """Family of lattice subsets indexed by the roots of a finite root system."""

    S: RootSystem
    S_prime: frozenset
    z_rank: int
    family: dict  # root -> LatticeSubset

    def __post_init__(self):
        self.S_prime = frozenset(tuple(r) for r in self.S_prime)
        self.family = {tuple(k): v for k, v in self.family.items()}
        for r in self.S.roots:
            if tuple(r) not in self.family:
                raise ValueError(f"Lambda missing for root {r}")

    def lam(self, xi) -> LatticeSubset:
        return self.family[tuple(xi)]


def untwisted_datum(S: RootSystem, z_rank: int) -> ExtensionDatum:
    full = LatticeSubset.full(z_rank)
    return ExtensionDatum(
        S, frozenset(indivisible_part(S)), z_rank, {a: full for a in S.roots}
    )


def default_datum_window(ed: ExtensionDatum) -> int:
    """4 times the largest |<beta, alpha_check>| in delta-degree directions."""
    if ed.z_rank != 1:
        return 4
    biggest = 1
    for a in ed.S.nonzero_roots():
        for b in ed.S.roots:
            biggest = max(biggest, abs(int(ed.S.pairing(b, a))))
    return 4 * biggest


def validate_extension_datum(ed: ExtensionDatum, window: int = None) -> AxiomReport:
    rep = AxiomReport()
    if window is None:
        window = default_datum_window(ed)
    S = ed.S
    roots = S.sorted_roots()
    n = ed.z_rank

    wins = {a: ed.lam(a).window_elements(window) for a in roots}

    ok, witness = True, None
    for xi in roots:
        if not any(xi):
            continue
        for eta in roots:
            k = S.pairing(eta, xi)
            target = ed.lam(_reflect_root(S, xi, eta))
            for lam in wins[xi]:
                for mu in wins[eta]:
                    moved = tuple(m - int(k) * l for m, l in zip(mu, lam))
                    if moved not in target:
                        ok, witness = False, f"ED1 fails at xi={xi}, eta={eta}, lambda={lam}, mu={mu}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("ED1", ok, witness, window=window)

    zero_vec = (0,) * n
    bad = [x for x in sorted(ed.S_prime) if zero_vec not in ed.lam(x)]
    rep.add("ED2", not bad, f"0 not in Lambda_{bad[0]}" if bad else None)

    gens = []
    for a in roots:
        gens.extend(ed.lam(a).group_gens())
    ok3 = mat_rank([[Fraction(x) for x in g] for g in gens], QQ) == n if n else True
    rep.add("ED3", ok3, None if ok3 else "union of Lambda_xi does not span")

    # Derived properties of 3.3.
    real = [a for a in roots if any(a)]
    ok, witness = True, None
    for xi in real:
        if ed.lam(vec_scale(-1, xi)) != ed.lam(xi).neg():
            ok, witness = False, f"Lambda_(-xi) != -Lambda_xi at xi={xi}"
            break
    rep.add("negation", ok, witness)

    ok, witness = True, None
    for xi in real:
        lam = ed.lam(xi)
        for a in wins[xi]:
            for b in wins[xi]:
                v = tuple(2 * x - y for x, y in zip(a, b))
                if v not in lam:
                    ok, witness = False, f"2L-L not in L at xi={xi}, pair={(a, b)}"
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("reflection-subspace", ok, witness, window=window)

    ok, witness = True, None
    for xi_p in sorted(ed.S_prime):
        if not any(xi_p):
            continue
        for eta in roots:
            if ed.lam(_reflect_root(S, xi_p, eta)) != ed.lam(eta):
                ok, witness = False, f"W_S'-invariance fails at xi'={xi_p}, eta={eta}"
                break
        if not ok:
            break
    rep.add("WS'-invariance", ok, witness)

    ok, witness = True, None
    for xi_p in sorted(ed.S_prime):
        if not any(xi_p):
            continue
        for eta in roots:
            k = int(S.pairing(eta, xi_p))
            lam_eta = ed.lam(eta)
            for mu in wins[eta]:
                for lam in wins[xi_p]:
                    v = tuple(m - k * l for m, l in zip(mu, lam))
                    if v not in lam_eta:
                        ok, witness = False, f"Lambda_eta - <eta,xi'>Lambda_xi' escapes at eta={eta}, xi'={xi_p}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("S'-shift", ok, witness, window=window)

    ok, witness = True, None
    for xi_p in sorted(ed.S_prime):
        if any(xi_p) and ed.lam(xi_p) != ed.lam(vec_scale(-1, xi_p)):
            ok, witness = False, f"Lambda_xi' != Lambda_(-xi') at xi'={xi_p}"
            break
    rep.add("S'-symmetry", ok, witness)

    _type_specific_checks(ed, rep, window, wins)
    return rep


def _reflect_root(S: RootSystem, alpha, beta):
    c = S.pairing(beta, alpha)
    return vec_sub(tuple(beta), vec_scale(c, tuple(alpha)))


def _type_specific_checks(ed, rep: AxiomReport, window, wins):
    S = ed.S
    if len(connected_components(S)) != 1:
        return
    rs = normalized(S)
    sh, lg, div, k = length_partition(rs)
    pick_sh = sorted(sh)[0]
    lam_sh = ed.lam(pick_sh)

    def sum_check(name, A, B, target, factor=1):
        ok, witness = True, None
        for a in A.window_elements(window):
            for b in B.window_elements(window):
                v = tuple(x + factor * y for x, y in zip(a, b))
                if v not in target:
                    ok, witness = False, f"{name} escapes at {(a, b)}"
                    break
            if not ok:
                break
        rep.add(name, ok, witness, window=window)

    if lg:
        lam_lg = ed.lam(sorted(lg)[0])
        sum_check("Lsh+Llg<Lsh", lam_sh, lam_lg, lam_sh)
        sum_check(f"Llg+{k}Lsh<Llg", lam_lg, lam_sh, lam_lg, factor=k)
    div_nz = sorted(a for a in div if any(a))
    if div_nz:
        lam_div = ed.lam(div_nz[0])
        if not lg:  # BC_1
            sum_check("Lsh+Ldiv<Lsh", lam_sh, lam_div, lam_sh)
            sum_check("Ldiv+4Lsh<Ldiv", lam_div, lam_sh, lam_div, factor=4)
        else:  # BC_I, |I| >= 2
            sum_check("Llg+Ldiv<Llg", ed.lam(sorted(lg)[0]), lam_div, ed.lam(sorted(lg)[0]))
            sum_check("Ldiv+2Llg<Ldiv", lam_div, ed.lam(sorted(lg)[0]), lam_div, factor=2)


class AffineReflectionSystem:
    """R = union of xi + Lambda_xi inside Y + Z for an extension datum."""

    def __init__(self, S: RootSystem, S_prime, datum: ExtensionDatum):
        self.S = S
        self.S_prime = frozenset(tuple(r) for r in S_prime)
        self.datum = datum
        self.y_dim = S.dim
        self.z_rank = datum.z_rank
        self.dim = self.y_dim + self.z_rank

    def root(self, xi, lam):
        return tuple(xi) + tuple(Fraction(x) for x in lam)

    def split(self, alpha):
        return tuple(alpha[: self.y_dim]), tuple(int(x) for x in alpha[self.y_dim:])

    def contains(self, alpha) -> bool:
        xi, lam = self.split(alpha)
        if tuple(xi) not in self.S.roots:
            return False
        return lam in self.datum.lam(xi)

    def coroot(self, xi):
        """Coroot covector of xi + lambda (independent of lambda)."""
        cor = self.S.coroots[tuple(xi)]
        return tuple(cor) + (ZERO,) * self.z_rank

    def windowed_roots(self, window: int):
        out = []
        for xi in self.S.sorted_roots():
            for lam in self.datum.lam(xi).window_elements(window):
                out.append(self.root(xi, lam))
        return out

    def to_prs(self, window: int) -> PreReflectionSystem:
        roots = self.windowed_roots(window)
        coroots = {}
        for alpha in roots:
            xi, _ = self.split(alpha)
            if any(xi):
                coroots[alpha] = self.coroot(xi)
            else:
                coroots[alpha] = (ZERO,) * self.dim
        return PreReflectionSystem(self.dim, roots, coroots)

    def reflect(self, alpha, x):
        """s_alpha(x) per the extension formula; alpha = xi + lambda real."""
        xi, lam = self.split(alpha)
        cor = self.coroot(xi)
        c = sum((xi_ * ci for xi_, ci in zip(x, cor) if xi_ and ci), ZERO)
        return vec_sub(tuple(x), vec_scale(c, tuple(alpha)))

    def fiber_window(self, xi, window: int):
        return self.datum.lam(xi).window_elements(window)

    def imaginary_lattice(self) -> LatticeSubset:
        return self.datum.lam((ZERO,) * self.y_dim)

    def lambda_diff_gens(self):
        gens = []
        for xi in self.S.sorted_roots():
            if any(xi):
                gens.extend(self.datum.lam(xi).difference_group_gens())
        return gens


def build_extension(S: RootSystem, S_prime, ed: ExtensionDatum, validate: bool = True,
                    window: int = 4) -> AffineReflectionSystem:
    if validate:
        rep = validate_extension_datum(ed, window=window)
        if not rep.ok:
            bad = rep.failures()[0]
            raise ValueError(f"invalid extension datum: {bad.name} ({bad.witness})")
    return AffineReflectionSystem(S, S_prime, ed)


def validate_ars_axioms(ars: AffineReflectionSystem, window: int = 4) -> AxiomReport:
    """ReS0-ReS4 for an affine reflection system.

    Windowed roots are reflected and tested for membership in the full
    system, so a reflection leaving the window is not a spurious failure.
    """
    rep = AxiomReport()
    zero = (ZERO,) * ars.dim
    roots = ars.windowed_roots(window)

    ok0, witness0 = ars.contains(zero), None
    if not ok0:
        witness0 = "0 missing from R"
    else:
        for a in roots:
            xi, _ = ars.split(a)
            if any(xi):
                val = ars.S.pairing(xi, xi)
                if val != 2:
                    ok0, witness0 = False, f"<a,a_check> = {val} at {a}"
                    break
    rep.add("ReS0", ok0, witness0, window=window)

    ok1, witness1 = True, None
    for a in roots:
        xi, _ = ars.split(a)
        if any(xi):
            if ars.reflect(a, a) != vec_scale(-1, a):
                ok1, witness1 = False, f"s_alpha(alpha) != -alpha at {a}"
                break
    rep.add("ReS1", ok1, witness1, window=window)

    ok2, witness2 = True, None
    for a in roots:
        xi_a, _ = ars.split(a)
        if not any(xi_a):
            continue
        for b in roots:
            img = ars.reflect(a, b)
            if not ars.contains(img):
                ok2, witness2 = False, f"s_{a}({b}) = {img} leaves R"
                break
            xi_b, _ = ars.split(b)
            xi_i, _ = ars.split(img)
            if bool(any(xi_b)) != bool(any(xi_i)):
                ok2, witness2 = False, f"s_{a}({b}) crosses the real/imaginary partition"
                break
        if not ok2:
            break
    rep.add("ReS2", ok2, witness2, window=window)

    # For c(xi + lam) both real, s uses ((c xi)_check, c lam); equality of the
    # two reflections reduces to ReS3 of the quotient system S.
    s_rep = validate_axioms(PreReflectionSystem.from_root_system(ars.S))
    rep.add("ReS3", s_rep["ReS3"].ok, s_rep["ReS3"].witness,
            note="reduces to ReS3 of the quotient root system")

    ok4, witness4 = True, None
    for a in roots:
        xi_a, lam_a = ars.split(a)
        if not any(xi_a):
            continue
        cor_a = ars.coroot(xi_a)
        for b in roots:
            xi_b, _ = ars.split(b)
            img = ars.reflect(a, b)
            xi_img, _ = ars.split(img)
            if tuple(xi_img) not in ars.S.roots:
                continue
            cor_b = ars.coroot(xi_b) if any(xi_b) else (ZERO,) * ars.dim
            cor_img = ars.coroot(xi_img) if any(xi_img) else (ZERO,) * ars.dim
            pba = sum((x * c for x, c in zip(a, cor_b)), ZERO)
            expect = tuple(cb - pba * ca for cb, ca in zip(cor_b, cor_a))
            if cor_img != expect:
                ok4, witness4 = False, f"ReS4 fails at a={a}, b={b}"
                break
        if not ok4:
            break
    rep.add("ReS4", ok4, witness4, window=window)
    return rep


def quotient_by_affine_form(prs: PreReflectionSystem, form):
    """(S, projection) obtained by dividing out the radical of an affine form."""
    flags = check_form(prs, form)
    if not flags["affine"]:
        raise ValueError("form is not an affine form for this system")
    space = RootSpace(prs.dim, tuple(tuple(Fraction(x) for x in row) for row in form))
    gram = [[space.pair(_unit_vec(prs.dim, i), _unit_vec(prs.dim, j)) for j in range(prs.dim)]
            for i in range(prs.dim)]
    rad = kernel(gram, QQ, prs.dim)
    rad_basis = [tuple(v) for v in rad]
    comp = []
    for i in range(prs.dim):
        cand = _unit_vec(prs.dim, i)
        if mat_rank([list(v) for v in rad_basis] + [list(c) for c in comp] + [list(cand)], QQ) > len(rad_basis) + len(comp):
            comp.append(cand)
    basis = [list(v) for v in rad_basis] + [list(c) for c in comp]
    from .rootsys import _matrix_inverse

    binv = _matrix_inverse([list(col) for col in zip(*basis)])

    def project(x):
        coords = [sum(binv[i][j] * x[j] for j in range(prs.dim)) for i in range(prs.dim)]
        return tuple(coords[len(rad_basis):])

    img_form = [[space.pair(c1, c2) for c2 in comp] for c1 in comp]
    img_roots = {project(a) for a in prs.roots}
    fibers = {}
    for a in sorted(prs.roots):
        fibers.setdefault(project(a), []).append(a)
    S = RootSystem(RootSpace(len(comp), tuple(tuple(r) for r in img_form)), img_roots)
    srep = validate_axioms(PreReflectionSystem.from_root_system(S))
    if not srep.ok:
        raise ValueError(f"projected set is not a root system: {srep.failures()[0].name}")
    # connectedness transfers along the projection
    real_comps = _real_components(prs)
    if len(connected_components(S)) != real_comps:
        raise AssertionError("component count changed under the quotient map")
    return S, project, fibers


def _real_components(prs: PreReflectionSystem) -> int:
    real = prs.real_roots()
    index = {a: i for i, a in enumerate(real)}
    parent = list(range(len(real)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, a in enumerate(real):
        for j in range(i + 1, len(real)):
            if prs.pairing(real[j], a) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return len({find(i) for i in range(len(real))})


def _unit_vec(n, i):
    return tuple(Fraction(1) if j == i else ZERO for j in range(n))


def extract_datum(ars: AffineReflectionSystem, phi=None, window: int = 4) -> ExtensionDatum:
    """Datum extracted along the partial section g(xi) = xi + phi(xi).

    phi maps the roots of S linearly into Z^n; it is given on a spanning set
    and must satisfy phi(xi') in Lambda_xi' for xi' in S'.  phi=None is the
    canonical section g = iota.
    """
    if phi is None:
        phi = {}
    phi = {tuple(k): tuple(v) for k, v in phi.items()}
    span_keys = sorted(phi)
    family = {}
    for xi in ars.S.sorted_roots():
        shift = _linear_extend(phi, span_keys, xi, ars.z_rank)
        if any(xi) and tuple(xi) in ars.S_prime and shift != (0,) * ars.z_rank:
            if shift not in ars.datum.lam(xi):
                raise ValueError(f"g is not a partial section: phi({xi}) not in Lambda")
        family[xi] = ars.datum.lam(xi).shift(tuple(-s for s in shift))
    return ExtensionDatum(ars.S, ars.S_prime, ars.z_rank, family)


def _linear_extend(phi, span_keys, xi, z_rank):
    if tuple(xi) in phi:
        return tuple(int(x) for x in phi[tuple(xi)])
    if not span_keys:
        return (0,) * z_rank
    from .linalg import solve

    mat = [[Fraction(k[i]) for k in span_keys] for i in range(len(xi))]
    sol = solve(mat, [Fraction(x) for x in xi], QQ)
    if sol is None:
        raise ValueError(f"{xi} outside the span of the section data")
    out = [Fraction(0)] * z_rank
    for c, key in zip(sol, span_keys):
        for i in range(z_rank):
            out[i] += c * phi[key][i]
    if any(x.denominator != 1 for x in out):
        raise ValueError(f"section shift at {xi} is not a lattice point")
    return tuple(int(x) for x in out)


AFFINE_TABLE = (
    ("reduced", "1", "S^(1)", "S^(1)"),
    ("B_l (l >= 2)", "2", "B_l^(2)", "D_{l+1}^(2)"),
    ("C_l (l >= 3)", "2", "C_l^(2)", "A_{2l-1}^(2)"),
    ("F_4", "2", "F_4^(2)", "E_6^(2)"),
    ("G_2", "3", "G_2^(3)", "D_4^(3)"),
    ("BC_1", "-", "BC_1^(2)", "A_2^(2)"),
    ("BC_l (l >= 2)", "1", "BC_l^(2)", "A_{2l}^(2)"),
)


def affine_labels(family: str, rank: int, tier: int):
    """(Moody-Pianzola label, Kac label) for R(S, t(S))."""
    if family == "BC":
        if rank == 1:
            return ("BC_1^(2)", "A_2^(2)")
        if tier != 1:
            raise ValueError("tier must be 1 for BC with rank >= 2")
        return (f"BC_{rank}^(2)", f"A_{2 * rank}^(2)")
    if tier == 1:
        base = family if family in ("E6", "E7", "E8", "F4", "G2") else f"{family}_{rank}"
        base = {"E6": "E_6", "E7": "E_7", "E8": "E_8", "F4": "F_4", "G2": "G_2"}.get(base, base)
        return (f"{base}^(1)", f"{base}^(1)")
    if family == "B" and tier == 2 and rank >= 2:
        return (f"B_{rank}^(2)", f"D_{rank + 1}^(2)")
    if family == "C" and tier == 2 and rank >= 3:
        return (f"C_{rank}^(2)", f"A_{2 * rank - 1}^(2)")
    if family == "F4" and tier == 2:
        return ("F_4^(2)", "E_6^(2)")
    if family == "G2" and tier == 3:
        return ("G_2^(3)", "D_4^(3)")
    raise ValueError(f"invalid (family, rank, tier) = ({family}, {rank}, {tier})")


def build_affine_rs(S: RootSystem, tier: int):
    """The affine root system R(S, t(S)); returns (ars, mp_label, kac_label)."""
    comps = connected_components(S)
    if len(comps) != 1:
        raise ValueError("S must be irreducible")
    rs = normalized(S)
    label = classify(rs)
    family, rank_ = label.components[0]
    sh, lg, div, k = length_partition(rs)
    if family == "BC":
        if rank_ >= 2 and tier not in (1,):
            raise ValueError("tier must be 1 for BC with rank >= 2")
        tier_eff = 1
    else:
        if tier == 1:
            tier_eff = 1
        elif k is not None and tier == k:
            tier_eff = tier
        else:
            raise ValueError(f"tier must be 1 or k(S)={k} for type {family}")
    mp, kac = affine_labels(family, rank_, tier if family != "BC" else (1 if rank_ >= 2 else tier))

    full = LatticeSubset.full(1)
    family_map = {}
    for a in rs.roots:
        if not any(a):
            family_map[a] = full  # Lambda_0 = Z: R contains the whole line Z delta
        elif a in sh:
            family_map[a] = full
        elif a in lg:
            family_map[a] = LatticeSubset.scaled_full(1, tier_eff)
        else:  # divisible
            family_map[a] = LatticeSubset(1, gens=[[2]], cosets=((1,),))
    ed = ExtensionDatum(rs, frozenset(indivisible_part(rs)), 1, family_map)
    ars = AffineReflectionSystem(rs, frozenset(indivisible_part(rs)), ed)
    return ars, mp, kac


def ars_structure(ars: AffineReflectionSystem, window: int = 4) -> dict:
    """Nullity, symmetry, string bounds and the EARS-family class flags."""
    from .linalg import lattice_rank

    lam0 = ars.imaginary_lattice()
    nullity = lattice_rank(lam0.group_gens())
    symmetric_im = lam0 == lam0.neg()

    diff_gens = ars.lambda_diff_gens()
    diff_lattice = LatticeSubset(ars.z_rank, gens=diff_gens)
    unbroken = diff_lattice.is_subset_of(lam0)
    tame = lam0.is_subset_of(diff_lattice)

    prs = ars.to_prs(window)
    max_len = 0
    real = prs.real_roots()
    roots = sorted(prs.roots)
    for a in real:
        for b in roots:
            length = 0
            for i in range(-6, 7):
                if vec_add(b, vec_scale(i, a)) in prs.roots:
                    length += 1
            max_len = max(max_len, length)
    strings_ok = max_len <= 5

    s_comps = connected_components(ars.S)
    connected = len(s_comps) == 1
    s_prs = PreReflectionSystem.from_root_system(ars.S)
    s_flags = predicates(s_prs)
    reduced = _ars_reduced(ars, window)

    # R = Re(R) means the only imaginary root is 0 itself.
    sears = lam0.basis == [] and lam0.cosets == ((0,) * ars.z_rank,)
    flags = {
        "EARS": connected and symmetric_im and reduced and tame and unbroken,
        "SEARS": connected and symmetric_im and sears,
        "LEARS": connected and sears,
        "GRRS": symmetric_im and reduced and unbroken,
    }
    return {
        "nullity": nullity,
        "symmetric": symmetric_im,
        "unbroken": unbroken,
        "tame": tame,
        "max_string_len": max_len,
        "strings_bounded": strings_ok,
        "connected": connected,
        "reduced": reduced,
        "class_flags": flags,
        "window": window,
        "note": "discreteness holds by the lattice model (datum lives in Z^n)",
    }


def _ars_reduced(ars: AffineReflectionSystem, window: int) -> bool:
    # R is reduced iff Lambda_(c xi) and c Lambda_xi are disjoint whenever
    # xi and c xi are both roots, c != 0, +-1.
    for xi in ars.S.sorted_roots():
        if not any(xi):
            continue
        for c in (2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3):
            cxi = vec_scale(c, xi)
            if cxi in ars.S.roots and any(cxi):
                lam_c = ars.datum.lam(cxi)
                lam = ars.datum.lam(xi)
                for v in lam.window_elements(window):
                    scaled = tuple(Fraction(c) * x for x in v)
                    if all(x.denominator == 1 for x in scaled):
                        if tuple(int(x) for x in scaled) in lam_c:
                            return False
    return True
