"""Signed-permutation symmetries of the tiling.

The symmetry group of any cube tiling sits inside the hyperoctahedral
group, realized as signed permutation matrices (exactly one +-1 entry per
row and column).  The stabilizer of this particular tiling turns out to
be the cyclic group of order 2n generated by the negacyclic coordinate
shift g (g maps e_i to e_{i+1}, and e_n to -e_1); its elements follow a
wrap-around diagonal pattern that ``stabilizer_closed_form`` instantiates
directly, and ``stabilizer_brute_force`` re-derives by exhaustive search.

Lattice equality is decided by comparing Hermite normal forms of
integer-scaled bases: one canonical form, one comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, lcm

from . import ratlin
from .errors import DimensionMismatchError, SingularMatrixError, TooLargeError
from .ratlin import Mat
from .tiling import Basis, TilingParams

# worst case 2^6 * 6! = 46080 candidates; above that exhaustive search
# over the hyperoctahedral group stops being a desk-scale operation
BRUTE_FORCE_MAX_DIM = 6


@dataclass(frozen=True)
class SignedPermutation:
    """Matrix S with S @ e_j = signs[j] * e_{perm[j]} (0-based)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n-1}: {self.perm}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1, got {self.signs}")

    @property
    def dim(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(perm=tuple(range(n)), signs=(1,) * n)

    @classmethod
    def negacyclic_shift(cls, n: int) -> "SignedPermutation":
        """The generator g: e_i -> e_{i+1} for i < n, e_n -> -e_1."""
        return cls(
            perm=tuple((i + 1) % n for i in range(n)),
            signs=(1,) * (n - 1) + (-1,),
        )

    @classmethod
    def from_matrix(cls, m) -> "SignedPermutation":
        n = len(m)
        perm = [-1] * n
        signs = [0] * n
        for j in range(n):
            hits = [(i, int(m[i][j])) for i in range(n) if m[i][j] != 0]
            if len(hits) != 1 or hits[0][1] not in (1, -1):
                raise ValueError("not a signed permutation matrix")
            perm[j], signs[j] = hits[0]
        return cls(perm=tuple(perm), signs=tuple(signs))

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.dim
        rows = [[0] * n for _ in range(n)]
        for j in range(n):
            rows[self.perm[j]][j] = self.signs[j]
        return tuple(tuple(r) for r in rows)

    def inverse(self) -> "SignedPermutation":
        n = self.dim
        perm = [0] * n
        signs = [0] * n
        for j in range(n):
            perm[self.perm[j]] = j
            signs[self.perm[j]] = self.signs[j]
        return SignedPermutation(perm=tuple(perm), signs=tuple(signs))

    def __matmul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition: (self @ other) v = self(other(v))."""
        if self.dim != other.dim:
            raise DimensionMismatchError("dimensions differ")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.dim))
        signs = tuple(
            self.signs[other.perm[j]] * other.signs[j] for j in range(self.dim)
        )
        return SignedPermutation(perm=perm, signs=signs)

    def __neg__(self) -> "SignedPermutation":
        return SignedPermutation(
            perm=self.perm, signs=tuple(-s for s in self.signs)
        )

    def apply(self, v):
        """S @ v for a vector of numbers."""
        out = [None] * self.dim
        for j in range(self.dim):
            out[self.perm[j]] = self.signs[j] * v[j]
        return tuple(out)

    def apply_rows(self, rows):
        """S @ M: row j of M lands (signed) on row perm[j] of the result."""
        out = [None] * self.dim
        for j in range(self.dim):
            s = self.signs[j]
            out[self.perm[j]] = tuple(s * e for e in rows[j])
        return out

    def det(self) -> int:
        sign = 1
        seen = [False] * self.dim
        for start in range(self.dim):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        for s in self.signs:
            sign *= s
        return sign

    def serialize(self) -> str:
        """External form, 1-based: perm=[2,3,1], signs=[+,+,-]."""
        imgs = ",".join(str(i + 1) for i in self.perm)
        sgns = ",".join("+" if s > 0 else "-" for s in self.signs)
        return f"perm=[{imgs}], signs=[{sgns}]"


def enumerate_group(n: int):
    """All 2^n * n! signed permutations in deterministic lexicographic order."""
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            yield SignedPermutation(perm=perm, signs=signs)


def group_order(n: int) -> int:
    return 2**n * factorial(n)


def is_stabilizer(s: SignedPermutation, basis: Basis) -> bool:
    """True iff S maps the lattice onto itself: A^{-1} S^{-1} A integral.

    Computed exactly on an integer-scaled copy of A; the scale cancels in
    the product adj(A) S^{-1} A / det(A).
    """
    n = basis.params.n
    if s.dim != n:
        raise DimensionMismatchError("signed permutation dimension differs from basis")
    int_a, _ = basis.int_scaled
    adj, d = basis.int_inverse_data
    b_rows = s.inverse().apply_rows(int_a)
    # early-exit columnwise divisibility of adj(A) @ (S^{-1} A) by det
    for j in range(n):
        col = [b_rows[i][j] for i in range(n)]
        for i in range(n):
            acc = 0
            arow = adj[i]
            for t in range(n):
                acc += arow[t] * col[t]
            if acc % d != 0:
                return False
    return True


def stabilizer_closed_form(n: int) -> list[SignedPermutation]:
    """The 2n stabilizer elements, instantiated from the diagonal pattern.

    Each element is fixed by the row position and sign of its first
    column entry; the rest of the matrix follows the wrap-around diagonal
    with a sign flip at each row wrap.  The result is exactly the cyclic
    group generated by the negacyclic shift.  Ordered by (position, sign).
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n!r}")
    out = []
    for row0 in range(n):
        for sign in (1, -1):
            perm = []
            signs = []
            r, s = row0, sign
            for _ in range(n):
                perm.append(r)
                signs.append(s)
                if r == n - 1:
                    s = -s
                r = (r + 1) % n
            out.append(SignedPermutation(perm=tuple(perm), signs=tuple(signs)))
    return out


def stabilizer_brute_force(n: int, basis: Basis) -> list[SignedPermutation]:
    """Exhaustive filter of the full hyperoctahedral group by is_stabilizer."""
    if n > BRUTE_FORCE_MAX_DIM:
        raise TooLargeError(
            f"brute force over {group_order(n)} candidates refused (n > {BRUTE_FORCE_MAX_DIM})"
        )
    return [s for s in enumerate_group(n) if is_stabilizer(s, basis)]


def lattice_equivalent(candidate: Mat, params: TilingParams):
    """A signed permutation S with S @ A spanning the candidate's lattice.

    Both bases are scaled by one common denominator and compared through
    their Hermite normal forms.  Returns None when no element of the
    hyperoctahedral group works.
    """
    n = params.n
    if len(candidate) != n:
        raise DimensionMismatchError("candidate basis dimension differs from params")
    if n > BRUTE_FORCE_MAX_DIM:
        raise TooLargeError(f"equivalence search refused for n > {BRUTE_FORCE_MAX_DIM}")
    cand = ratlin.mat(candidate)
    if ratlin.det(cand) == 0:
        raise SingularMatrixError("candidate basis is singular")
    basis = Basis(params)
    scale = lcm(ratlin.denominator_lcm(cand), ratlin.denominator_lcm(basis.matrix))
    int_cand = [[int(e * scale) for e in row] for row in cand]
    int_a = [[int(e * scale) for e in row] for row in basis.matrix]
    if abs(ratlin._int_det_bareiss([r[:] for r in int_cand])) != abs(
        ratlin._int_det_bareiss([r[:] for r in int_a])
    ):
        return None
    target = ratlin.hnf(int_cand)
    for s in enumerate_group(n):
        if ratlin.hnf(s.apply_rows(int_a)) == target:
            return s
    return None
