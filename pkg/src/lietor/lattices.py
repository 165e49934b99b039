"""Subsets of Z^n of the form (union of cosets of a sublattice).

This is the exact representation behind extension data: membership is
decidable, enumeration happens on a box window.  Finite sets are the rank-0
case (sublattice {0}).
"""

from __future__ import annotations

import itertools

from .linalg import hnf, lattice_rank, lattice_reduce


class LatticeSubset:
    """Union of cosets c + L for a sublattice L of Z^n."""

    def __init__(self, n: int, gens=(), cosets=((),)):
        self.n = n
        self.basis = hnf([list(g) for g in gens])
        reps = sorted(
            {lattice_reduce(tuple(c) if c else (0,) * n, self.basis) for c in cosets}
        )
        self.cosets = tuple(reps)

    @classmethod
    def full(cls, n: int) -> "LatticeSubset":
        return cls(n, gens=[[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "LatticeSubset":
        return cls(n)

    @classmethod
    def scaled_full(cls, n: int, k: int) -> "LatticeSubset":
        """The sublattice k Z^n."""
        return cls(n, gens=[[k if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def finite(cls, n: int, points) -> "LatticeSubset":
        return cls(n, gens=(), cosets=tuple(tuple(p) for p in points))

    def is_empty(self) -> bool:
        return not self.cosets

    def __contains__(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.n:
            return False
        return lattice_reduce(v, self.basis) in set(self.cosets)

    def __eq__(self, other):
        return (
            isinstance(other, LatticeSubset)
            and self.n == other.n
            and self.basis == other.basis
            and self.cosets == other.cosets
        )

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, self.basis)), self.cosets))

    def neg(self) -> "LatticeSubset":
        return LatticeSubset(self.n, self.basis, tuple(tuple(-x for x in c) for c in self.cosets))

    def shift(self, v) -> "LatticeSubset":
        v = tuple(v)
        return LatticeSubset(
            self.n, self.basis, tuple(tuple(a + b for a, b in zip(c, v)) for c in self.cosets)
        )

    def scale(self, k: int) -> "LatticeSubset":
        if k == 0:
            return LatticeSubset.finite(self.n, [(0,) * self.n]) if self.cosets else LatticeSubset(self.n, (), ())
        return LatticeSubset(
            self.n,
            [[k * x for x in row] for row in self.basis],
            tuple(tuple(k * x for x in c) for c in self.cosets),
        )

    def add(self, other: "LatticeSubset") -> "LatticeSubset":
        """Pointwise sum {a + b}."""
        gens = [list(r) for r in self.basis] + [list(r) for r in other.basis]
        cos = tuple(
            tuple(a + b for a, b in zip(c1, c2))
            for c1 in self.cosets
            for c2 in other.cosets
        )
        return LatticeSubset(self.n, gens, cos)

    def difference_group_gens(self):
        """Generators of the subgroup generated by {a - b : a, b in self}."""
        gens = [list(r) for r in self.basis]
        if self.cosets:
            c0 = self.cosets[0]
            for c in self.cosets[1:]:
                gens.append([a - b for a, b in zip(c, c0)])
        return gens

    def group_gens(self):
        """Generators of the subgroup generated by the subset itself."""
        return [list(r) for r in self.basis] + [list(c) for c in self.cosets]

    def subgroup_rank(self) -> int:
        return lattice_rank(self.group_gens())

    def is_subset_of(self, other: "LatticeSubset") -> bool:
        """Exact containment test."""
        if self.is_empty():
            return True
        if other.is_empty():
            return False
        other_set = set(other.cosets)
        # Image of our sublattice in Z^n / L_other: each of our cosets covers
        # |image| residues, so containment is impossible once the image
        # outgrows the other side's coset list.
        frontier = {(0,) * self.n}
        image = {(0,) * self.n}
        step_gens = [tuple(r) for r in self.basis] + [tuple(-x for x in r) for r in self.basis]
        while frontier:
            nxt = set()
            for g in step_gens:
                for f in frontier:
                    r = lattice_reduce(tuple(a + b for a, b in zip(f, g)), other.basis)
                    if r not in image:
                        image.add(r)
                        nxt.add(r)
            if len(image) > len(other.cosets):
                return False
            frontier = nxt
        for c in self.cosets:
            base = lattice_reduce(c, other.basis)
            for img in image:
                r = lattice_reduce(tuple(a + b for a, b in zip(base, img)), other.basis)
                if r not in other_set:
                    return False
        return True

    def window_elements(self, w: int):
        """All members v with max |v_i| <= w, in lexicographic order."""
        out = []
        for point in itertools.product(range(-w, w + 1), repeat=self.n):
            if point in self:
                out.append(point)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lattice": [[str(x) for x in row] for row in self.basis],
            "cosets": [[str(x) for x in c] for c in self.cosets],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LatticeSubset":
        n = int(data["n"])
        gens = [[int(x) for x in row] for row in data.get("lattice", [])]
        cosets = tuple(tuple(int(x) for x in c) for c in data.get("cosets", [[0] * n]))
        return cls(n, gens, cosets)

    def __repr__(self):
        return f"LatticeSubset(n={self.n}, basis={self.basis}, cosets={list(self.cosets)})"


def lattice_from_congruences(A, modulus: int, n: int):
    """Basis of {v in Z^n : A v = 0 (mod modulus)} as HNF rows."""
    if modulus == 0:
        from .linalg import integer_kernel

        return integer_kernel([list(r) for r in A], n)
    rows = []
    m = len(A)
    # Solve [A | modulus I] (v, k) = 0 over Z and project to v.
    from .linalg import integer_kernel

    block = [list(A[i]) + [modulus if j == i else 0 for j in range(m)] for i in range(m)]
    for sol in integer_kernel(block, n + m):
        rows.append(sol[:n])
    return hnf(rows)
