"""Bit-packed GF(2) algebra: ranks, nullspaces, polynomials, wrapping, reduction."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wgc.gf2 import (
    BinaryMatrix,
    BinaryPoly,
    PolyMatrix,
    canonical_form,
    kernel_basis,
    minimal_basic,
    nullspace_basis,
    nullspace_rational,
    permutation_equivalent,
    poly_mul,
    poly_row_space_equal,
    rank,
    rank_over_rational_field,
    row_reduce,
    tailbite,
    tailbite_generator,
)
from conftest import HEAWOOD_ROWS, THREE_PARTITE_ROWS, UTILITY_ROWS, dense_rank


# ---------------------------------------------------------------------------
# rank and nullspace


def test_rank_identity():
    assert rank(BinaryMatrix.identity(3)) == 3


def test_rank_heawood_incidence(heawood_incidence):
    assert rank(heawood_incidence) == 13


def test_rank_three_partite_incidence(three_partite_incidence):
    assert rank(three_partite_incidence) == 10


def test_rank_matches_dense_oracle_on_references():
    for rows in (HEAWOOD_ROWS, THREE_PARTITE_ROWS, UTILITY_ROWS):
        assert rank(BinaryMatrix.from_strings(rows)) == dense_rank(rows)


def test_rank_equals_transpose_rank_randomized():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randrange(1, 64)
        n = rng.randrange(1, 64)
        mat = BinaryMatrix([rng.getrandbits(n) for _ in range(m)], n)
        assert rank(mat) == rank(mat.transpose())


def test_nullspace_identity_empty():
    basis = nullspace_basis(BinaryMatrix.identity(3))
    assert basis.rows == 0


def test_nullspace_heawood(heawood_incidence):
    basis = nullspace_basis(heawood_incidence)
    assert basis.rows == 8
    for row in basis.data:
        assert heawood_incidence.mul_vec(row) == 0


def test_nullspace_count_utility(utility_incidence):
    assert dense_rank(UTILITY_ROWS) == 5
    assert nullspace_basis(utility_incidence).rows == 9 - 5


def test_nullspace_exact_randomized():
    rng = random.Random(3)
    for _ in range(40):
        m = rng.randrange(1, 20)
        n = rng.randrange(1, 20)
        mat = BinaryMatrix([rng.getrandbits(n) for _ in range(m)], n)
        basis = nullspace_basis(mat)
        assert basis.rows == n - rank(mat)
        for row in basis.data:
            assert mat.mul_vec(row) == 0
        assert rank(basis) == basis.rows


# ---------------------------------------------------------------------------
# polynomials


def test_poly_mul_square_char2():
    p = BinaryPoly.parse("11")  # 1 + D
    assert poly_mul(p, p) == BinaryPoly.parse("101")


def test_poly_mul_zero():
    assert poly_mul(BinaryPoly.parse("1101"), BinaryPoly(0)) == BinaryPoly(0)


def test_poly_mul_matches_convolution_oracle():
    from conftest import coeffs, convolve_mod2

    h1 = BinaryPoly.parse("11001")
    h3 = BinaryPoly.parse("101111")
    expected = convolve_mod2(coeffs(h1), coeffs(h3))
    got = poly_mul(h3, h1)
    assert coeffs(got) == expected


@settings(max_examples=200, deadline=None)
@given(st.integers(0, (1 << 33) - 1), st.integers(0, (1 << 33) - 1),
       st.integers(0, (1 << 33) - 1))
def test_poly_mul_ring_axioms(a, b, c):
    pa, pb, pc = BinaryPoly(a), BinaryPoly(b), BinaryPoly(c)
    assert pa * pb == pb * pa
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa * (pb + pc) == pa * pb + pa * pc


def test_poly_degree_sentinel_and_product_degree():
    assert BinaryPoly(0).degree is None
    a, b = BinaryPoly.parse("1101"), BinaryPoly.parse("011")
    assert (a * b).degree == a.degree + b.degree


def test_poly_text_round_trip():
    for text in ("0", "1", "11001", "000001"):
        p = BinaryPoly.parse(text)
        assert BinaryPoly.parse(p.to_string()) == p
    assert BinaryPoly.parse("11001").to_string() == "11001"


# ---------------------------------------------------------------------------
# rational-field rank


def test_rational_rank_single_row(constituent_check):
    assert rank_over_rational_field(constituent_check) == 1


def test_rational_rank_proportional_rows():
    m = PolyMatrix([[1, 0b10], [0b10, 0b100]])  # [[1, D], [D, D^2]]
    assert rank_over_rational_field(m) == 1


def test_rational_rank_generator_matches_minor_oracle(constituent_generator):
    g = constituent_generator
    # oracle: some 2x2 minor is nonzero
    from wgc.gf2 import clmul

    bits = g.bits()
    minors = []
    for j1 in range(3):
        for j2 in range(j1 + 1, 3):
            minors.append(clmul(bits[0][j1], bits[1][j2]) ^ clmul(bits[0][j2], bits[1][j1]))
    assert any(minors)
    assert rank_over_rational_field(g) == 2


def test_rational_nullspace_is_orthogonal(constituent_generator):
    ns = nullspace_rational(constituent_generator)
    assert ns.rows == 1
    assert (constituent_generator @ ns.transpose()).is_zero()


def test_kernel_basis_orthogonal_and_full(graph_parent_check):
    basis = kernel_basis(graph_parent_check)
    assert basis.rows == 1
    assert (graph_parent_check @ basis.transpose()).is_zero()
    # the single kernel row is the known parent generator
    assert [p.to_string() for p in basis.entries[0]] == ["011", "111", "1"]


# ---------------------------------------------------------------------------
# tailbiting


def test_tailbite_constant_matrix_is_identity_wrap():
    h = PolyMatrix([[1, 1, 0], [0, 1, 1]])
    assert tailbite(h, 1) == h.constant_matrix()


def test_tailbite_rejects_zero_length(graph_parent_check):
    with pytest.raises(ValueError):
        tailbite(graph_parent_check, 0)


def test_tailbite_parent_equals_incidence_up_to_permutation(
        graph_parent_check, heawood_incidence):
    wrapped = tailbite(graph_parent_check, 7)
    assert wrapped.rows == 14 and wrapped.cols == 21
    assert sorted(wrapped.data) == sorted(heawood_incidence.data)
    assert permutation_equivalent(wrapped, heawood_incidence)


def test_tailbite_nullspace_is_quasicyclic(graph_parent_check):
    wrapped = tailbite(graph_parent_check, 7)
    basis = nullspace_basis(wrapped)
    cols = wrapped.cols
    shift = 3
    mask = (1 << cols) - 1
    for row in basis.data:
        assert wrapped.mul_vec(row) == 0
        rotated = ((row << shift) | (row >> (cols - shift))) & mask
        assert wrapped.mul_vec(rotated) == 0


def test_tailbite_generator_rows_have_zero_syndrome(graph_parent_check):
    parent_gen = kernel_basis(graph_parent_check)
    for length in (1, 2, 7, 10):
        wrapped_h = tailbite(graph_parent_check, length)
        wrapped_g = tailbite_generator(parent_gen, length)
        for row in wrapped_g.data:
            assert wrapped_h.mul_vec(row) == 0


def test_tailbite_short_length_accumulates(graph_parent_check):
    wrapped = tailbite(graph_parent_check, 1)  # length below the memory
    assert wrapped == BinaryMatrix.from_strings(["111", "111"])


# ---------------------------------------------------------------------------
# reduction


def test_row_reduce_fixed_point_nonsingular_leading():
    g = PolyMatrix([[0b11, 0b11], [0b1, 0b10]])  # [[1+D, 1+D], [1, D]]
    assert row_reduce(g) == g


def test_row_reduce_rejects_rank_deficient():
    g = PolyMatrix([[0b11, 0b11], [0b110, 0b110]])
    with pytest.raises(ValueError):
        row_reduce(g)


def test_minimal_basic_identity_like_row_space():
    # full-rank square input spans everything; the reduced form has length 0
    g = PolyMatrix([[0b11, 0b11], [0b1, 0b10]])
    reduced = minimal_basic(g)
    assert reduced.constraint_length == 0
    assert poly_row_space_equal(reduced, g)


def test_minimal_basic_preserves_row_space_and_never_grows(constituent_generator):
    reduced = minimal_basic(constituent_generator)
    assert poly_row_space_equal(reduced, constituent_generator)
    assert reduced.constraint_length <= constituent_generator.constraint_length
    again = minimal_basic(reduced)
    assert again.constraint_length == reduced.constraint_length


def test_minimal_basic_rejects_rank_deficient():
    g = PolyMatrix([[0b1, 0b10], [0b10, 0b100]])
    with pytest.raises(ValueError):
        minimal_basic(g)


# ---------------------------------------------------------------------------
# text formats and canonical form


def test_binary_matrix_text_round_trip(utility_incidence):
    text = utility_incidence.to_text()
    assert BinaryMatrix.from_text(text) == utility_incidence
    assert text.splitlines()[0] == "6 9"


def test_poly_matrix_text_round_trip(constituent_check):
    text = constituent_check.to_text()
    assert PolyMatrix.from_text(text) == constituent_check
    assert text.splitlines()[0] == "1 3"
    assert text.splitlines()[1] == "11001"


def test_canonical_form_invariant_under_permutations():
    rng = random.Random(11)
    base = BinaryMatrix.from_strings(UTILITY_ROWS)
    for _ in range(5):
        rp = list(range(base.rows))
        cp = list(range(base.cols))
        rng.shuffle(rp)
        rng.shuffle(cp)
        shuffled = base.permuted(rp, cp)
        assert canonical_form(shuffled) == canonical_form(base)
        assert permutation_equivalent(shuffled, base)


def test_canonical_form_separates_different_matrices():
    a = BinaryMatrix.from_strings(["110", "011"])
    b = BinaryMatrix.from_strings(["111", "011"])
    assert not permutation_equivalent(a, b)


def test_matrix_is_immutable(heawood_incidence):
    with pytest.raises(AttributeError):
        heawood_incidence.rows = 1
