"""Finite root systems with exact coordinates.

0 is always stored as a root.  Coroots are covectors computed from the
carried symmetric bilinear form via alpha_check = 2 (alpha | .) / (alpha | alpha).
Classical families use their standard coordinate lists; type A_n lives in
Q^(n+1) and spans the sum-zero hyperplane.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import mat_vec, rank as mat_rank, rref
from .scalars import QQ

FAMILIES = ("A", "B", "C", "D", "BC", "E6", "E7", "E8", "F4", "G2")


def _v(*coords):
    return tuple(Fraction(c) for c in coords)


def _unit(n, i):
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(Fraction(c) * x for x in a)


def vec_is_zero(a):
    return not any(a)


@dataclass(frozen=True)
class RootSpace:
    dim: int
    form: tuple  # rows of the symmetric bilinear form

    def pair(self, x, y) -> Fraction:
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.form[i]
                for j, yj in enumerate(y):
                    if yj and row[j]:
                        total += xi * row[j] * yj
        return total


def _identity_form(n):
    return tuple(tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n))


@dataclass
class TypeLabel:
    components: list  # list of (family, rank) pairs

    @property
    def family(self):
        if len(self.components) != 1:
            raise ValueError("reducible system has no single family")
        return self.components[0][0]

    @property
    def rank(self):
        if len(self.components) != 1:
            raise ValueError("reducible system has no single rank")
        return self.components[0][1]

    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    def __str__(self):
        return " x ".join(
            f if f in ("E6", "E7", "E8", "F4", "G2") else f"{f}{r}"
            for f, r in self.components
        )


class RootSystem:
    """A finite set of vectors containing 0, closed under its reflections."""

    def __init__(self, space: RootSpace, roots, coroots=None, label=None):
        self.space = space
        self.roots = frozenset(tuple(r) for r in roots)
        zero = (Fraction(0),) * space.dim
        if zero not in self.roots:
            raise ValueError("0 must be a root")
        if coroots is None:
            coroots = {}
            for a in self.roots:
                coroots[a] = self._coroot_from_form(a)
        self.coroots = coroots
        self.label = label
        self._pair_cache = {}

    def _coroot_from_form(self, a):
        if vec_is_zero(a):
            return (Fraction(0),) * self.space.dim
        norm = self.space.pair(a, a)
        if norm == 0:
            raise ValueError(f"isotropic nonzero root {a} under the given form")
        fa = mat_vec([list(r) for r in self.space.form], list(a), QQ)
        return tuple(2 * x / norm for x in fa)

    @property
    def dim(self):
        return self.space.dim

    def nonzero_roots(self):
        return [a for a in self.roots if any(a)]

    def pairing(self, beta, alpha) -> Fraction:
        """<beta, alpha_check>."""
        key = (beta, alpha)
        got = self._pair_cache.get(key)
        if got is None:
            cor = self.coroots[alpha]
            got = sum((b * c for b, c in zip(beta, cor) if b and c), Fraction(0))
            self._pair_cache[key] = got
        return got

    def sorted_roots(self):
        return sorted(self.roots)

    def span_rank(self) -> int:
        return mat_rank([list(a) for a in self.nonzero_roots()], QQ)


def reflect(rs: RootSystem, alpha, x):
    """s_alpha(x) = x - <x, alpha_check> alpha; identity for alpha imaginary."""
    alpha = tuple(alpha)
    if alpha not in rs.roots:
        raise ValueError(f"{alpha} is not a root")
    cor = rs.coroots[alpha]
    c = sum((xi * ci for xi, ci in zip(x, cor) if xi and ci), Fraction(0))
    if not c:
        return tuple(x)
    return vec_sub(tuple(x), vec_scale(c, alpha))


def build_classical(family: str, n: int) -> RootSystem:
    """Standard coordinate realization of A, B, C, D or BC of rank n."""
    family = family.upper()
    if n < 1:
        raise ValueError("rank must be at least 1")
    if family == "A":
        dim = n + 1
        roots = {(Fraction(0),) * dim}
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    roots.add(vec_sub(_unit(dim, i), _unit(dim, j)))
        return RootSystem(RootSpace(dim, _identity_form(dim)), roots)
    dim = n
    zero = (Fraction(0),) * dim
    short = {vec_scale(s, _unit(dim, i)) for i in range(dim) for s in (1, -1)}
    double = {vec_scale(s, _unit(dim, i)) for i in range(dim) for s in (2, -2)}
    dpart = {zero}
    for i in range(dim):
        for j in range(dim):
            if i < j:
                for si in (1, -1):
                    for sj in (1, -1):
                        dpart.add(vec_add(vec_scale(si, _unit(dim, i)), vec_scale(sj, _unit(dim, j))))
    if family == "B":
        roots = dpart | short
    elif family == "C":
        roots = dpart | double
    elif family == "D":
        if n < 2:
            raise ValueError("type D needs rank >= 2 (D_1 cannot span its space)")
        roots = dpart
    elif family == "BC":
        roots = dpart | short | double
    else:
        raise ValueError(f"unknown classical family {family!r}")
    return RootSystem(RootSpace(dim, _identity_form(dim)), roots)


def build_exceptional(family: str) -> RootSystem:
    family = family.upper()
    if family == "G2":
        dim = 3
        roots = {(Fraction(0),) * dim}
        for i in range(3):
            for j in range(3):
                if i != j:
                    roots.add(vec_sub(_unit(dim, i), _unit(dim, j)))
        for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
            long = vec_sub(vec_scale(2, _unit(dim, i)), vec_add(_unit(dim, j), _unit(dim, k)))
            roots.add(long)
            roots.add(vec_scale(-1, long))
        return RootSystem(RootSpace(dim, _identity_form(dim)), roots)
    if family == "F4":
        dim = 4
        roots = {(Fraction(0),) * dim}
        for i in range(4):
            for s in (1, -1):
                roots.add(vec_scale(s, _unit(dim, i)))
        for i in range(4):
            for j in range(i + 1, 4):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.add(vec_add(vec_scale(si, _unit(dim, i)), vec_scale(sj, _unit(dim, j))))
        half = Fraction(1, 2)
        for signs in itertools.product((1, -1), repeat=4):
            roots.add(tuple(half * s for s in signs))
        return RootSystem(RootSpace(dim, _identity_form(dim)), roots)
    if family in ("E6", "E7", "E8"):
        dim = 8
        half = Fraction(1, 2)
        roots = {(Fraction(0),) * dim}
        if family == "E8":
            for i in range(8):
                for j in range(i + 1, 8):
                    for si in (1, -1):
                        for sj in (1, -1):
                            roots.add(vec_add(vec_scale(si, _unit(dim, i)), vec_scale(sj, _unit(dim, j))))
            for signs in itertools.product((1, -1), repeat=8):
                if signs.count(-1) % 2 == 0:
                    roots.add(tuple(half * s for s in signs))
        elif family == "E7":
            for i in range(6):
                for j in range(i + 1, 6):
                    for si in (1, -1):
                        for sj in (1, -1):
                            roots.add(vec_add(vec_scale(si, _unit(dim, i)), vec_scale(sj, _unit(dim, j))))
            e78 = vec_sub(_unit(dim, 6), _unit(dim, 7))
            roots.add(e78)
            roots.add(vec_scale(-1, e78))
            for signs in itertools.product((1, -1), repeat=6):
                if signs.count(-1) % 2 == 1:
                    vec = [half * s for s in signs] + [-half, half]
                    roots.add(tuple(vec))
                    roots.add(tuple(-x for x in vec))
        else:  # E6
            for i in range(5):
                for j in range(i + 1, 5):
                    for si in (1, -1):
                        for sj in (1, -1):
                            roots.add(vec_add(vec_scale(si, _unit(dim, i)), vec_scale(sj, _unit(dim, j))))
            for signs in itertools.product((1, -1), repeat=5):
                if signs.count(-1) % 2 == 0:
                    vec = [half * s for s in signs] + [-half, -half, half]
                    roots.add(tuple(vec))
                    roots.add(tuple(-x for x in vec))
        return RootSystem(RootSpace(dim, _identity_form(dim)), roots)
    raise ValueError(f"unknown exceptional family {family!r}")


def direct_sum(*systems) -> RootSystem:
    """Direct sum on the orthogonal direct sum of the ambient spaces."""
    dim = sum(rs.dim for rs in systems)
    form = [[Fraction(0)] * dim for _ in range(dim)]
    offset = 0
    roots = {(Fraction(0),) * dim}
    for rs in systems:
        d = rs.dim
        for i in range(d):
            for j in range(d):
                form[offset + i][offset + j] = rs.space.form[i][j]
        for a in rs.roots:
            vec = [Fraction(0)] * dim
            vec[offset:offset + d] = list(a)
            roots.add(tuple(vec))
        offset += d
    return RootSystem(RootSpace(dim, tuple(tuple(r) for r in form)), roots)


def root_string(rs: RootSystem, beta, alpha):
    """The alpha-string through beta: (interval, p, q) with p - q = -<beta, alpha_check>."""
    beta, alpha = tuple(beta), tuple(alpha)
    if alpha not in rs.roots or vec_is_zero(alpha):
        raise ValueError("alpha must be a nonzero root")
    if beta not in rs.roots:
        raise ValueError("beta must be a root")
    members = []
    bound = 9
    for i in range(-bound, bound + 1):
        if vec_add(beta, vec_scale(i, alpha)) in rs.roots:
            members.append(i)
    lo, hi = members[0], members[-1]
    if members != list(range(lo, hi + 1)):
        raise ArithmeticError(f"broken root string at beta={beta}, alpha={alpha}")
    p, q = hi, -lo
    a = -rs.pairing(beta, alpha)
    if p - q != a:
        raise ArithmeticError(
            f"string bounds p={p}, q={q} violate p - q = -<beta,alpha_check> = {a}"
        )
    return list(range(lo, hi + 1)), p, q


def root_strings_exhaustive(rs: RootSystem, buffer: int = 3):
    """Check every alpha-string: unbroken and p - q = -<beta, alpha_check>.

    Roots are rescaled to integer tuples once so the membership walks stay
    cheap; returns (ok, max_string_length, witness).
    """
    den = 1
    for a in rs.roots:
        for x in a:
            den = den * x.denominator // _gcd_int(den, x.denominator)
    scaled = {tuple(int(x * den) for x in a) for a in rs.roots}
    nonzero = [a for a in rs.nonzero_roots()]
    max_len = 0
    for alpha in nonzero:
        ia = tuple(int(x * den) for x in alpha)
        for beta in rs.roots:
            ib = tuple(int(x * den) for x in beta)
            lo = 0
            cur = ib
            while True:
                nxt = tuple(c - a for c, a in zip(cur, ia))
                if nxt in scaled:
                    cur, lo = nxt, lo - 1
                else:
                    break
            hi = 0
            cur = ib
            while True:
                nxt = tuple(c + a for c, a in zip(cur, ia))
                if nxt in scaled:
                    cur, hi = nxt, hi + 1
                else:
                    break
            for i in range(lo - buffer, lo):
                if tuple(b + i * a for b, a in zip(ib, ia)) in scaled:
                    return False, max_len, (beta, alpha, "broken string")
            for i in range(hi + 1, hi + buffer + 1):
                if tuple(b + i * a for b, a in zip(ib, ia)) in scaled:
                    return False, max_len, (beta, alpha, "broken string")
            if hi - (-lo) != -rs.pairing(beta, alpha):
                return False, max_len, (beta, alpha, "p - q mismatch")
            max_len = max(max_len, hi - lo + 1)
    return True, max_len, None


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def weyl_orbit(rs: RootSystem, alpha):
    """Closure of {alpha} under all reflections s_beta, beta a nonzero root."""
    alpha = tuple(alpha)
    if alpha not in rs.roots:
        raise ValueError(f"{alpha} is not a root")
    generators = rs.nonzero_roots()
    orbit = {alpha}
    frontier = [alpha]
    while frontier:
        nxt = []
        for x in frontier:
            for b in generators:
                y = reflect(rs, b, x)
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return orbit


def connected_components(rs: RootSystem):
    """Partition of the nonzero roots into connection components."""
    nonzero = sorted(rs.nonzero_roots())
    index = {a: i for i, a in enumerate(nonzero)}
    parent = list(range(len(nonzero)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, a in enumerate(nonzero):
        for j in range(i + 1, len(nonzero)):
            if rs.pairing(nonzero[j], a) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups = {}
    for i, a in enumerate(nonzero):
        groups.setdefault(find(i), []).append(a)
    return [sorted(g) for g in sorted(groups.values(), key=lambda g: min(g))]


def _span_basis_vectors(vectors):
    rows = [list(v) for v in vectors]
    red, pivots = rref(rows, QQ)
    return [tuple(red[i]) for i in range(len(pivots))]


def normalized_form(rs: RootSystem):
    """The invariant form rescaled so each component has minimal norm 2."""
    comps = connected_components(rs)
    dim = rs.dim
    basis = []
    owners = []
    for k, comp in enumerate(comps):
        for v in _span_basis_vectors(comp):
            basis.append(v)
            owners.append(k)
    # Extend to a basis of the ambient space with standard vectors.
    for i in range(dim):
        cand = _unit(dim, i)
        if mat_rank([list(b) for b in basis] + [list(cand)], QQ) > len(basis):
            basis.append(cand)
            owners.append(None)
    scales = []
    for comp in comps:
        norms = [rs.space.pair(a, a) for a in comp]
        if any(n == 0 for n in norms):
            raise ValueError("degenerate form on an irreducible component")
        mn = min(norms)
        scales.append(Fraction(2) / mn)
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            v = rs.space.pair(basis[i], basis[j])
            if owners[i] is None and owners[j] is None:
                gram[i][j] = v
            elif owners[i] == owners[j]:
                gram[i][j] = scales[owners[i]] * v
            elif owners[i] is None or owners[j] is None:
                # component-complement cross terms scale with the component,
                # otherwise the reflections in that component lose invariance
                k = owners[i] if owners[i] is not None else owners[j]
                gram[i][j] = scales[k] * v
            else:
                gram[i][j] = Fraction(0)
    # Solve M F M^T = G for the coordinate matrix F.
    m = [list(b) for b in basis]
    minv = _matrix_inverse(m)
    tmp = _mat_mul(minv, gram)
    f = _mat_mul(tmp, _transpose(minv))
    return tuple(tuple(row) for row in f)


def _matrix_inverse(m):
    n = len(m)
    aug = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug, QQ)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix not invertible")
    return [row[n:] for row in red[:n]]


def _mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            c = a[i][t]
            if c:
                for j in range(m):
                    if b[t][j]:
                        out[i][j] += c * b[t][j]
    return out


def _transpose(m):
    return [list(col) for col in zip(*m)]


def with_form(rs: RootSystem, form) -> RootSystem:
    """Same roots, different form (coroots recomputed)."""
    return RootSystem(RootSpace(rs.dim, tuple(tuple(r) for r in form)), rs.roots, label=rs.label)


def normalized(rs: RootSystem) -> RootSystem:
    return with_form(rs, normalized_form(rs))


def length_partition(rs: RootSystem):
    """(S_sh, S_lg, S_div, k) for an irreducible system carrying its normalized form.

    Divisible means alpha/2 is again a root; k is the tier constant used by
    affine root systems (2 for B/C/BC with rank >= 2 and F4, 3 for G2, None
    when there are no long roots).
    """
    comps = connected_components(rs)
    if len(comps) != 1:
        raise ValueError("length partition needs an irreducible system")
    pair = rs.space.pair
    norms = {a: pair(a, a) for a in rs.nonzero_roots()}
    if min(norms.values()) != 2:
        raise ValueError("form is not normalized (minimal nonzero norm must be 2)")
    sh = {a for a, n in norms.items() if n == 2}
    div = {a for a in rs.roots if vec_scale(Fraction(1, 2), a) in rs.roots}
    lg = {a for a in norms if a not in sh and a not in div}
    bad = [a for a in lg if norms[a] not in (4, 6)]
    if bad:
        raise ValueError(f"unexpected long-root norm at {bad[0]}: {norms[bad[0]]}")
    k = None
    if lg:
        k = 3 if any(norms[a] == 6 for a in lg) else 2
    return sh, lg, div, k


def indivisible_part(rs: RootSystem):
    """R_ind = {0} plus the roots alpha with alpha/2 not a root."""
    return {a for a in rs.roots if vec_is_zero(a) or vec_scale(Fraction(1, 2), a) not in rs.roots}


_PRIMES = (97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149)


def _generic_functional(vectors, dim):
    for p in _PRIMES:
        t = Fraction(1, p)
        weights = [t**i for i in range(dim)]
        if all(sum(w * x for w, x in zip(weights, v)) != 0 for v in vectors):
            return weights
    raise ArithmeticError("no generic functional found (extend prime list)")


def _simple_roots(component_ind, dim):
    """Simple roots of an (indivisible) component via a generic height functional."""
    weights = _generic_functional(component_ind, dim)

    def height(v):
        return sum(w * x for w, x in zip(weights, v))

    positive = sorted(a for a in component_ind if height(a) > 0)
    pos_set = set(positive)
    simple = []
    for a in positive:
        if not any(vec_sub(a, b) in pos_set for b in positive if b != a):
            simple.append(a)
    return simple


def _classify_component(rs: RootSystem, comp):
    comp_ind = sorted(a for a in comp if vec_scale(Fraction(1, 2), a) not in rs.roots)
    has_divisible = len(comp_ind) != len(comp)
    simple = _simple_roots(comp_ind, rs.dim)
    n = len(simple)
    cartan = [[rs.pairing(simple[j], simple[i]) for j in range(n)] for i in range(n)]
    fam = _diagram_family(cartan, [rs.space.pair(a, a) for a in simple])
    family, rank_ = fam
    if has_divisible:
        if family not in ("A", "B") or (family == "A" and rank_ != 1):
            raise ValueError("divisible roots outside a BC-shaped component")
        return ("BC", rank_)
    return fam


def _diagram_family(cartan, norms):
    n = len(cartan)
    if n == 1:
        return ("A", 1)
    weight = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                weight[i][j] = int(cartan[i][j] * cartan[j][i])
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if weight[i][j]]
    if len(edges) != n - 1:
        raise ValueError("simple-root graph is not a tree")
    deg = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    triple = [(i, j) for i, j in edges if weight[i][j] == 3]
    double = [(i, j) for i, j in edges if weight[i][j] == 2]
    if triple:
        if n == 2 and not double:
            return ("G2", 2)
        raise ValueError("triple edge in a diagram of rank != 2")
    if double:
        if len(double) > 1:
            raise ValueError("more than one double edge")
        if max(deg) > 2:
            raise ValueError("double edge in a branched diagram")
        order = _path_order(edges, deg, n)
        i, j = double[0]
        pi, pj = order.index(i), order.index(j)
        if {pi, pj} == {n // 2 - 1, n // 2} and n == 4:
            # Central double edge in a path of four nodes.
            return ("F4", 4)
        if not ({pi, pj} == {0, 1} or {pi, pj} == {n - 2, n - 1}):
            raise ValueError("double edge must sit at an end of the path (or be F4)")
        if {pi, pj} == {0, 1}:
            order = order[::-1]
            pi, pj = n - 1 - pi, n - 1 - pj
        end = order[-1]
        before = order[-2]
        if n == 2:
            return ("B", 2)
        return ("B", n) if norms[end] < norms[before] else ("C", n)
    # Simply laced tree.
    if max(deg) <= 2:
        return ("A", n)
    branch = [i for i in range(n) if deg[i] == 3]
    if len(branch) != 1 or max(deg) > 3:
        raise ValueError("unrecognized branching")
    arms = sorted(_arm_lengths(edges, branch[0], n))
    if arms[:2] == [1, 1]:
        return ("D", n)
    if arms == [1, 2, 2]:
        return ("E6", 6)
    if arms == [1, 2, 3]:
        return ("E7", 7)
    if arms == [1, 2, 4]:
        return ("E8", 8)
    raise ValueError(f"unrecognized diagram with arms {arms}")


def _path_order(edges, deg, n):
    adj = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    start = min(i for i in range(n) if deg[i] == 1)
    order = [start]
    prev = None
    cur = start
    while len(order) < n:
        nxt = [x for x in adj[cur] if x != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def _arm_lengths(edges, center, n):
    adj = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    arms = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return arms


def classify(rs: RootSystem) -> TypeLabel:
    """Canonical type label; components sorted by (family, rank)."""
    comps = connected_components(rs)
    if not comps:
        return TypeLabel(components=[])
    labels = [_classify_component(rs, comp) for comp in comps]
    labels.sort(key=lambda t: (t[0], t[1]))
    return TypeLabel(components=labels)
