import random
from fractions import Fraction

from lietor.lattices import LatticeSubset, lattice_from_congruences
from lietor.linalg import (
    hnf,
    in_lattice,
    integer_kernel,
    kernel,
    lattice_reduce,
    rank,
    solve,
)
from lietor.scalars import QQ, cyclotomic_field


def F(*args):
    return Fraction(*args)


def test_kernel_rank_one():
    m = [[F(1), F(1)], [F(1), F(1)]]
    basis = kernel(m, QQ)
    assert len(basis) == 1
    v = basis[0]
    assert all(sum(r * x for r, x in zip(row, v)) == 0 for row in m)


def test_kernel_identity_empty():
    m = [[F(1) if i == j else F(0) for j in range(3)] for i in range(3)]
    assert kernel(m, QQ) == []


def test_kernel_zero_map():
    m = [[F(0)] * 3 for _ in range(2)]
    assert len(kernel(m, QQ)) == 3


def test_rank_nullity_randomized():
    rng = random.Random(7)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[F(rng.randint(-4, 4)) for _ in range(cols)] for _ in range(rows)]
        r = rank(m, QQ)
        k = kernel(m, QQ)
        assert r + len(k) == cols
        for v in k:
            assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in m)


def test_kernel_over_cyclotomic():
    F3 = cyclotomic_field(3)
    z = F3.zeta()
    m = [[F3.one, z], [z.inverse(), F3.one]]
    basis = kernel(m, F3)
    assert len(basis) == 1


def test_solve():
    m = [[F(2), F(0)], [F(0), F(3)]]
    assert solve(m, [F(4), F(9)], QQ) == [F(2), F(3)]
    assert solve([[F(1), F(1)], [F(1), F(1)]], [F(0), F(1)], QQ) is None


def test_hnf_and_membership():
    basis = hnf([[2, 4], [6, 8]])
    assert in_lattice([2, 0], basis)
    assert not in_lattice([1, 0], basis)
    assert lattice_reduce((3, 5), basis) == lattice_reduce((1, 1), basis)


def test_integer_kernel():
    ker = integer_kernel([[1, 1, 1]])
    assert len(ker) == 2
    for v in ker:
        assert sum(v) == 0


def test_lattice_subset_cosets():
    odd = LatticeSubset(1, gens=[[2]], cosets=((1,),))
    assert (3,) in odd and (0,) not in odd
    assert odd.neg() == odd
    assert odd.window_elements(3) == [(-3,), (-1,), (1,), (3,)]
    # pointed reflection subspace: union of cosets mod 2Z[A] containing 2Z[A]
    pointed = LatticeSubset(1, gens=[[2]], cosets=((0,), (1,)))
    for a in pointed.window_elements(3):
        for b in pointed.window_elements(3):
            assert (2 * a[0] - b[0],) in pointed


def test_lattice_subset_algebra():
    full = LatticeSubset.full(2)
    three = LatticeSubset.scaled_full(2, 3)
    assert three.is_subset_of(full)
    assert not full.is_subset_of(three)
    assert three.add(three) == three
    assert three.scale(2) == LatticeSubset.scaled_full(2, 6)
    assert full.subgroup_rank() == 2
    assert LatticeSubset.finite(2, [(1, 2)]).subgroup_rank() == 1


def test_congruence_lattice():
    got = lattice_from_congruences([[0, 1], [-1, 0]], 3, 2)
    assert got == [[3, 0], [0, 3]]
    got = lattice_from_congruences([[1, 1]], 2, 2)
    sub = LatticeSubset(2, got)
    assert (1, 1) in sub and (2, 0) in sub and (1, 0) not in sub
