"""Two-size hypercube lattice tilings: basis, fundamental domain, point location.

The tiling of R^n by hypercubes of side lengths p < q is generated by the
lattice basis A whose columns are

    a_i = q*e_i - p*e_{i+1}   for i < n,        a_n = p*e_1 + q*e_n,

with det(A) = p^n + q^n.  Its fundamental domain is the half-open set

    C = [0,q)^n  union  [0,p)^{n-1} x [q, q+p)

(a big cube with a small cube sitting on top of its first corner).  The
domain is taken half-open so that every point of R^n belongs to exactly
one translated cube and point location is a total function.

Convention: p is the SMALL side and q the BIG side, 0 < p < q.  Both are
rationals; the tiling only depends on the ratio p/q.

Canonicalization clears denominators once and then runs an all-integer
reduction (see the kernel modules); the integer coordinate vector k of
the applied basis columns is accumulated on the fly, so the caller gets
x == rep + A @ k exactly, without a final linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import ceil, floor, lcm

from . import _backend, ratlin
from .errors import DimensionMismatchError, InvalidParamsError
from .ratlin import Mat, Vec


class TileKind(str, Enum):
    BIG = "big"
    SMALL = "small"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TilingParams:
    """Dimension n >= 2 and rational side lengths 0 < p < q."""

    n: int
    p: Fraction
    q: Fraction

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidParamsError(f"dimension must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        if self.p <= 0:
            raise InvalidParamsError(f"small side must be positive, got {self.p}")
        if self.p >= self.q:
            raise InvalidParamsError(
                f"sides must satisfy p < q, got p={self.p}, q={self.q}"
            )


@dataclass(frozen=True)
class CanonicalPoint:
    """Representative inside the fundamental domain plus lattice coordinates.

    The original point equals rep + A @ k exactly.
    """

    rep: Vec
    k: tuple[int, ...]


@dataclass(frozen=True)
class TileRef:
    """One tile: its size class and the integer anchor vector k.

    The big tile occupies A@k + [0,q]^n, the small tile
    A@k + [0,p]^{n-1} x [q, q+p].
    """

    kind: TileKind
    anchor: tuple[int, ...]


class Basis:
    """The lattice basis A for given parameters, with cached exact inverses."""

    def __init__(self, params: TilingParams):
        self.params = params
        n, p, q = params.n, params.p, params.q
        cols = []
        for i in range(n - 1):
            col = [Fraction(0)] * n
            col[i] = q
            col[i + 1] = -p
            cols.append(col)
        last = [Fraction(0)] * n
        last[0] = p
        last[n - 1] = q
        cols.append(last)
        self.matrix: Mat = ratlin.from_columns(cols)
        self.columns = ratlin.columns(self.matrix)

    @cached_property
    def det(self) -> Fraction:
        return ratlin.det(self.matrix)

    @cached_property
    def adjugate(self) -> Mat:
        return ratlin.adjugate(self.matrix)

    @cached_property
    def int_scaled(self) -> tuple[list[list[int]], int]:
        """(rows of L*A as ints, L) for denominator-free arithmetic."""
        return ratlin.int_scaled(self.matrix)

    @cached_property
    def int_inverse_data(self) -> tuple[list[list[int]], int]:
        """(adj(L*A) rows, det(L*A)) for denominator-free integrality checks."""
        _, scale = self.int_scaled
        n = self.params.n
        adj = [
            [int(e * scale ** (n - 1)) for e in row] for row in self.adjugate
        ]
        return adj, int(self.det * scale**n)

    def coords(self, v: Vec) -> Vec:
        """Exact A^{-1} v via the cached adjugate."""
        if len(v) != self.params.n:
            raise DimensionMismatchError(
                f"vector has {len(v)} entries, basis dimension is {self.params.n}"
            )
        return tuple(e / self.det for e in ratlin.mat_vec(self.adjugate, v))

    def contains(self, v: Vec) -> bool:
        """True iff v is an integer combination of the basis columns."""
        return ratlin.is_integral(self.coords(v))

    def apply(self, k) -> Vec:
        """A @ k for an integer (or rational) coefficient vector."""
        return ratlin.mat_vec(self.matrix, tuple(Fraction(e) for e in k))


def build_basis(params: TilingParams) -> Basis:
    return Basis(params)


@lru_cache(maxsize=128)
def _cached_basis(params: TilingParams) -> Basis:
    # Basis is immutable after construction, so sharing one per params is safe
    return Basis(params)


def build_reduction_basis(params: TilingParams) -> Mat:
    """Matrix whose columns b_1..b_n drive the last-coordinate reduction.

    b_1 is the last basis column and b_k = b_{k-1} - a_{k-1}; every b_k is
    a lattice vector.
    """
    basis = _cached_basis(params)
    cols = [basis.columns[params.n - 1]]
    for i in range(1, params.n):
        cols.append(ratlin.vec_sub(cols[-1], basis.columns[i - 1]))
    return ratlin.from_columns(cols)


def domain_boxes(params: TilingParams) -> tuple[tuple[Vec, Vec], tuple[Vec, Vec]]:
    """The two half-open boxes (lo, hi) forming the fundamental domain."""
    n, p, q = params.n, params.p, params.q
    zero = Fraction(0)
    big = (tuple([zero] * n), tuple([q] * n))
    small = (
        tuple([zero] * (n - 1) + [q]),
        tuple([p] * (n - 1) + [q + p]),
    )
    return big, small


def in_domain(v: Vec, params: TilingParams) -> bool:
    """Half-open membership in the fundamental domain."""
    if len(v) != params.n:
        raise DimensionMismatchError(
            f"vector has {len(v)} entries, expected {params.n}"
        )
    p, q = params.p, params.q
    head = v[:-1]
    last = v[-1]
    if any(c < 0 for c in v):
        return False
    if all(c < q for c in head) and last < q:
        return True
    return all(c < p for c in head) and q <= last < q + p


def domain_volume(params: TilingParams) -> Fraction:
    return params.p**params.n + params.q**params.n


def canonicalize(x, params: TilingParams) -> CanonicalPoint:
    """Map x to its unique representative in the fundamental domain.

    Returns (rep, k) with rep in the domain and x == rep + A @ k exactly.
    """
    x = ratlin.vec(x)
    if len(x) != params.n:
        raise DimensionMismatchError(
            f"point has {len(x)} entries, expected {params.n}"
        )
    p, q = params.p, params.q
    scale = lcm(p.denominator, q.denominator, *(c.denominator for c in x))
    y = [int(c * scale) for c in x]
    big, small = int(q * scale), int(p * scale)

    # the reduction loop walks the last coordinate in steps of ~q, so for
    # points far from the origin do one exact pre-reduction into the basis
    # parallelepiped (coordinates then bounded by p+q)
    k0 = [0] * params.n
    if any(abs(v) > 8 * (big + small) for v in y):
        basis = _cached_basis(params)
        k0 = [floor(c) for c in basis.coords(x)]
        shift = basis.apply(k0)
        y = [v - int(a * scale) for v, a in zip(y, shift)]

    rep, k, _ = _backend.canonicalize_scaled(y, big, small)
    return CanonicalPoint(
        rep=tuple(Fraction(v, scale) for v in rep),
        k=tuple(a + b for a, b in zip(k0, k)),
    )


def locate(x, params: TilingParams) -> TileRef:
    """The tile containing x (boundary ties resolved by the half-open domain)."""
    cp = canonicalize(x, params)
    kind = TileKind.BIG if cp.rep[-1] < params.q else TileKind.SMALL
    return TileRef(kind=kind, anchor=cp.k)


def is_lattice_member(v, basis: Basis) -> bool:
    """True iff v lies in the lattice spanned by the basis columns."""
    return basis.contains(ratlin.vec(v))


def unilateral_violations(params: TilingParams) -> list[Vec]:
    """The vectors p*e_i / q*e_i that are lattice members (always none).

    A same-size full-facet contact exists exactly when one of these 2n
    vectors lies in the lattice; any hit is returned as a counterexample.
    """
    basis = _cached_basis(params)
    n = params.n
    hits = []
    for i in range(n):
        for side in (params.p, params.q):
            v = ratlin.unit_vector(n, i, side)
            if basis.contains(v):
                hits.append(v)
    return hits


def check_unilateral(params: TilingParams) -> bool:
    """No two same-size cubes share a full facet.

    Equivalent to: p*e_i and q*e_i are non-members of the lattice for
    every axis i.
    """
    return not unilateral_violations(params)


def _tile_offsets(params: TilingParams, kind: TileKind) -> tuple[Vec, Vec]:
    """Closed offset box (relative to the anchor point) of one tile kind."""
    n, p, q = params.n, params.p, params.q
    zero = Fraction(0)
    if kind is TileKind.BIG:
        return tuple([zero] * n), tuple([q] * n)
    return (
        tuple([zero] * (n - 1) + [q]),
        tuple([p] * (n - 1) + [q + p]),
    )


def tile_box(ref: TileRef, params: TilingParams) -> tuple[Vec, Vec]:
    """Closed box (lo, hi) occupied by the tile in R^n."""
    basis = _cached_basis(params)
    anchor = basis.apply(ref.anchor)
    off_lo, off_hi = _tile_offsets(params, ref.kind)
    return ratlin.vec_add(anchor, off_lo), ratlin.vec_add(anchor, off_hi)


def tiles_in_box(lo, hi, params: TilingParams) -> list[TileRef]:
    """Every tile whose closed box meets [lo, hi] in positive volume.

    Anchor candidates are found by mapping the inflated box through the
    exact inverse basis and enumerating the integer points of the image's
    bounding box; each candidate is then checked by direct interval
    overlap.
    """
    lo = ratlin.vec(lo)
    hi = ratlin.vec(hi)
    n = params.n
    if len(lo) != n or len(hi) != n:
        raise DimensionMismatchError("box corners must match the tiling dimension")
    if any(a >= b for a, b in zip(lo, hi)):
        raise InvalidParamsError("box must have positive volume (lo < hi)")
    basis = _cached_basis(params)
    inv_rows = [
        tuple(e / basis.det for e in row) for row in basis.adjugate
    ]
    found = []
    for kind in (TileKind.BIG, TileKind.SMALL):
        off_lo, off_hi = _tile_offsets(params, kind)
        # anchor point A@k must lie in the open box (lo-off_hi, hi-off_lo)
        t_lo = ratlin.vec_sub(lo, off_hi)
        t_hi = ratlin.vec_sub(hi, off_lo)
        ranges = []
        for row in inv_rows:
            kmin = sum(c * (t_lo[j] if c > 0 else t_hi[j]) for j, c in enumerate(row))
            kmax = sum(c * (t_hi[j] if c > 0 else t_lo[j]) for j, c in enumerate(row))
            ranges.append(range(ceil(kmin), floor(kmax) + 1))
        for k in product(*ranges):
            anchor = basis.apply(k)
            if all(
                max(lo[i], anchor[i] + off_lo[i]) < min(hi[i], anchor[i] + off_hi[i])
                for i in range(n)
            ):
                found.append(TileRef(kind=kind, anchor=tuple(k)))
    found.sort(key=lambda t: (t.kind.value, t.anchor))
    return found
