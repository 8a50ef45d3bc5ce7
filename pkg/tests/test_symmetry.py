"""Stabilizer enumeration, group structure, lattice equivalence."""

import random
from fractions import Fraction

import pytest

from hyptile import ratlin, symmetry, tiling
from hyptile.errors import SingularMatrixError, TooLargeError
from hyptile.symmetry import SignedPermutation
from hyptile.tiling import TilingParams


def params(n=2, p=1, q=2):
    return TilingParams(n=n, p=Fraction(p), q=Fraction(q))


def as_set(elements):
    return {(s.perm, s.signs) for s in elements}


def test_signed_permutation_matrix_roundtrip():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(2, 5)
        perm = list(range(n))
        rng.shuffle(perm)
        signs = tuple(rng.choice((1, -1)) for _ in range(n))
        s = SignedPermutation(perm=tuple(perm), signs=signs)
        assert SignedPermutation.from_matrix(s.matrix()) == s
        ident = s @ s.inverse()
        assert ident == SignedPermutation.identity(n)


def test_signed_permutation_validation():
    with pytest.raises(ValueError):
        SignedPermutation(perm=(0, 0), signs=(1, 1))
    with pytest.raises(ValueError):
        SignedPermutation(perm=(0, 1), signs=(1, 2))


def test_serialize_format():
    s = SignedPermutation(perm=(1, 2, 0), signs=(1, 1, -1))
    assert s.serialize() == "perm=[2,3,1], signs=[+,+,-]"


def test_apply_matches_matrix():
    s = SignedPermutation(perm=(1, 0), signs=(1, -1))
    v = (Fraction(3), Fraction(5))
    m = s.matrix()
    expect = tuple(sum(m[i][j] * v[j] for j in range(2)) for i in range(2))
    assert s.apply(v) == expect


def test_is_stabilizer_examples():
    pr = params()
    b = tiling.build_basis(pr)
    assert symmetry.is_stabilizer(SignedPermutation.identity(2), b)
    rot = SignedPermutation.from_matrix([[0, 1], [-1, 0]])
    assert symmetry.is_stabilizer(rot, b)
    # the rotation sends the basis columns onto (minus) each other
    a1, a2 = b.columns
    assert rot.apply(a1) == tuple(-e for e in a2)
    assert rot.apply(a2) == a1
    reflection = SignedPermutation.from_matrix([[1, 0], [0, -1]])
    assert not symmetry.is_stabilizer(reflection, b)


def test_closed_form_two_dim_frozen():
    got = as_set(symmetry.stabilizer_closed_form(2))
    expect = as_set(
        [
            SignedPermutation.from_matrix(m)
            for m in (
                [[1, 0], [0, 1]],
                [[-1, 0], [0, -1]],
                [[0, 1], [-1, 0]],
                [[0, -1], [1, 0]],
            )
        ]
    )
    assert got == expect


def test_closed_form_order_is_2n():
    for n in (2, 3, 4, 5, 6):
        elements = symmetry.stabilizer_closed_form(n)
        assert len(elements) == 2 * n
        assert len(as_set(elements)) == 2 * n


def test_closed_form_is_cyclic_group_of_shift():
    for n in (2, 3, 4, 5):
        g = SignedPermutation.negacyclic_shift(n)
        acc = SignedPermutation.identity(n)
        generated = set()
        for _ in range(n):
            generated.add((acc.perm, acc.signs))
            neg = -acc
            generated.add((neg.perm, neg.signs))
            acc = g @ acc
        assert generated == as_set(symmetry.stabilizer_closed_form(n))


def test_generator_powers():
    for n in (2, 3, 4, 5):
        g = SignedPermutation.negacyclic_shift(n)
        acc = SignedPermutation.identity(n)
        for _ in range(n):
            acc = g @ acc
        assert acc == -SignedPermutation.identity(n)
        for _ in range(n):
            acc = g @ acc
        assert acc == SignedPermutation.identity(n)


def test_closed_form_closure_and_inverses():
    for n in (2, 3, 4):
        elements = symmetry.stabilizer_closed_form(n)
        eset = as_set(elements)
        for a in elements:
            assert (a.inverse().perm, a.inverse().signs) in eset
            for b in elements:
                c = a @ b
                assert (c.perm, c.signs) in eset


def test_closed_form_all_stabilize():
    for n in (2, 3, 4):
        for p, q in ((1, 2), (2, 3)):
            b = tiling.build_basis(params(n=n, p=p, q=q))
            for s in symmetry.stabilizer_closed_form(n):
                assert symmetry.is_stabilizer(s, b)


def test_stabilizer_action_permutes_columns():
    for n in (2, 3, 4):
        b = tiling.build_basis(params(n=n))
        signed_cols = set()
        for col in b.columns:
            signed_cols.add(col)
            signed_cols.add(tuple(-e for e in col))
        for s in symmetry.stabilizer_closed_form(n):
            for col in b.columns:
                assert s.apply(col) in signed_cols


@pytest.mark.parametrize(
    "n,p,q,expected",
    [
        (2, 1, 2, 4),
        (2, 1, 3, 4),
        (3, 1, 2, 6),
        (3, 2, 3, 6),
        (3, 1, 3, 6),
        (4, 2, 3, 8),
        (5, 1, 3, 10),
    ],
)
def test_brute_force_counts(n, p, q, expected):
    b = tiling.build_basis(params(n=n, p=p, q=q))
    brute = symmetry.stabilizer_brute_force(n, b)
    assert len(brute) == expected
    assert as_set(brute) == as_set(symmetry.stabilizer_closed_form(n))


def test_brute_force_too_large():
    with pytest.raises(TooLargeError):
        symmetry.stabilizer_brute_force(7, tiling.build_basis(params(n=7)))


def test_lattice_equivalent_identity():
    pr = params()
    b = tiling.build_basis(pr)
    s = symmetry.lattice_equivalent(b.matrix, pr)
    assert s == SignedPermutation.identity(2)


def test_lattice_equivalent_permuted_negated():
    pr = params()
    found = symmetry.lattice_equivalent(ratlin.mat([[1, -2], [2, 1]]), pr)
    assert found is not None
    # verify via HNF that the claimed S really maps lattice onto lattice
    b = tiling.build_basis(pr)
    int_a = [[int(e) for e in row] for row in b.matrix]
    assert ratlin.hnf(found.apply_rows(int_a)) == ratlin.hnf([[1, -2], [2, 1]])


def test_lattice_equivalent_mirror_is_reflection():
    pr = params()
    found = symmetry.lattice_equivalent(ratlin.mat([[2, 1], [1, -2]]), pr)
    assert found is not None
    assert found.det() == -1


def test_lattice_equivalent_full_group():
    for n in (2, 3):
        pr = params(n=n)
        b = tiling.build_basis(pr)
        for s in symmetry.enumerate_group(n):
            rows = ratlin.mat(s.apply_rows(b.matrix))
            assert symmetry.lattice_equivalent(rows, pr) is not None


def test_lattice_equivalent_unimodular_rebasis():
    # the same lattice written in a different (non-signed-permutation)
    # basis: A times a unimodular matrix
    pr = params()
    b = tiling.build_basis(pr)
    u = ratlin.mat([[1, 3], [1, 4]])  # det 1
    rebased = ratlin.mat_mul(b.matrix, u)
    found = symmetry.lattice_equivalent(rebased, pr)
    assert found == SignedPermutation.identity(2)


def test_lattice_equivalent_rejects_other_lattice():
    pr = params()
    # index-5 sublattice of Z^2 that is not the tiling lattice
    assert symmetry.lattice_equivalent(ratlin.mat([[1, 0], [0, 5]]), pr) is None


def test_lattice_equivalent_singular_raises():
    with pytest.raises(SingularMatrixError):
        symmetry.lattice_equivalent(ratlin.mat([[1, 2], [2, 4]]), params())


def test_lattice_equivalent_rational_scaling():
    # same lattice described with rational entries
    pr = params(n=2, p=Fraction(1, 2), q=1)
    b = tiling.build_basis(pr)
    s = symmetry.lattice_equivalent(b.matrix, pr)
    assert s == SignedPermutation.identity(2)


def test_brute_force_deterministic_order():
    b = tiling.build_basis(params(n=3))
    first = symmetry.stabilizer_brute_force(3, b)
    second = symmetry.stabilizer_brute_force(3, b)
    assert first == second
