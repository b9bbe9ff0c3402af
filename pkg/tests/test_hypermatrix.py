from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from dhspec import (
    DimensionMismatch,
    DimensionTooLargeForExhaustiveSearch,
    Hypermatrix,
    NonpositiveDiagonal,
    ParseError,
    diagonal_matrix,
    diagonal_similarity,
    format_ht,
    gershgorin_disks,
    identity_matrix,
    in_disk_union,
    is_strongly_connected,
    is_supersymmetric,
    is_weak_star_irreducible,
    is_weakly_irreducible,
    laplacian,
    out_adjacency,
    parse_ht,
    power_vector,
    reducibility_report,
    reducible_witness,
    shao_product,
    symmetrize,
    validate,
    verify_h_eigenpair,
)
from conftest import dense_apply, random_hypergraph, random_rational_vector

HALF = Fraction(1, 2)


@pytest.fixture
def pair_tensor():
    """Order 3, dim 3, nonzero only at (1,2,3) and (1,3,2), both 1/2."""
    return Hypermatrix(3, 3, {(1, 2, 3): HALF, (1, 3, 2): HALF})


def random_sparse(rng, order=3, dim=3, nnz=5):
    entries = {}
    for _ in range(nnz):
        key = tuple(rng.randint(1, dim) for _ in range(order))
        entries[key] = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
    return Hypermatrix(order, dim, entries)


class TestConstruction:
    def test_zero_values_are_dropped(self):
        a = Hypermatrix(3, 2, {(1, 1, 2): Fraction(0), (2, 1, 1): Fraction(1)})
        assert a.nnz == 1
        assert a[(1, 1, 2)] == 0

    def test_absent_lookup_is_zero(self, pair_tensor):
        assert pair_tensor[(3, 3, 3)] == 0

    def test_bad_arity_rejected(self):
        with pytest.raises(DimensionMismatch):
            Hypermatrix(3, 2, {(1, 1): Fraction(1)})

    def test_out_of_range_index_rejected(self):
        with pytest.raises(DimensionMismatch):
            Hypermatrix(2, 2, {(1, 3): Fraction(1)})

    def test_float_entries_rejected(self):
        with pytest.raises(TypeError):
            Hypermatrix(2, 2, {(1, 1): 0.5})


class TestApply:
    def test_pair_tensor_on_ones(self, pair_tensor):
        assert pair_tensor.apply([1, 1, 1]) == [1, 0, 0]

    def test_zero_vector(self, pair_tensor):
        assert pair_tensor.apply([0, 0, 0]) == [0, 0, 0]

    def test_counterexample_row_sums(self, four_vertex_counterexample):
        adjacency = out_adjacency(four_vertex_counterexample)
        assert adjacency.apply([1, 1, 1, 1]) == [1, 1, 1, 1]

    def test_matches_dense_enumeration(self, rng):
        for _ in range(20):
            a = random_sparse(rng)
            x = random_rational_vector(rng, a.dim)
            assert a.apply(x) == dense_apply(a, x)

    def test_dimension_mismatch(self, pair_tensor):
        with pytest.raises(DimensionMismatch):
            pair_tensor.apply([1, 1])

    def test_float_mode_tracks_exact_mode(self, rng):
        for _ in range(10):
            a = random_sparse(rng)
            x = random_rational_vector(rng, a.dim)
            exact = a.apply(x)
            approx = a.apply([float(c) for c in x])
            assert all(
                abs(float(e) - g) < 1e-12 for e, g in zip(exact, approx)
            )


class TestForm:
    def test_pair_tensor_on_ones(self, pair_tensor):
        assert pair_tensor.form([1, 1, 1]) == 1

    def test_zero_vector(self, pair_tensor):
        assert pair_tensor.form([0, 0, 0]) == 0

    def test_nonnegative_inputs_give_nonnegative_form(self, rng):
        for _ in range(10):
            hg = random_hypergraph(rng, n_range=(3, 5))
            a = out_adjacency(hg)
            x = [Fraction(rng.randint(0, 3)) for _ in range(a.dim)]
            assert a.form(x) >= 0

    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_form_equals_weighted_apply(self, data):
        dim = data.draw(st.integers(2, 4))
        order = data.draw(st.integers(2, 4))
        keys = st.tuples(*([st.integers(1, dim)] * order))
        entries = data.draw(
            st.dictionaries(
                keys,
                st.fractions(min_value=-3, max_value=3, max_denominator=4),
                max_size=6,
            )
        )
        a = Hypermatrix(order, dim, entries)
        x = [
            data.draw(st.fractions(min_value=-3, max_value=3, max_denominator=3))
            for _ in range(dim)
        ]
        applied = a.apply(x)
        assert a.form(x) == sum(x[i] * applied[i] for i in range(dim))


def test_power_vector():
    assert power_vector([2, 3], 2) == [4, 9]
    assert power_vector([1, 1, 1], 5) == [1, 1, 1]
    assert power_vector([-1, 2], 3) == [-1, 8]
    with pytest.raises(ValueError):
        power_vector([1], 0)


class TestShaoProduct:
    def test_identity_is_neutral(self, rng):
        for _ in range(10):
            a = random_sparse(rng)
            assert shao_product(a, identity_matrix(a.dim)) == a

    def test_matrix_specialization(self):
        a = Hypermatrix(2, 2, {(1, 2): Fraction(1)})
        b = Hypermatrix(2, 2, {(2, 1): Fraction(1)})
        assert shao_product(a, b) == Hypermatrix(2, 2, {(1, 1): Fraction(1)})

    def test_diagonal_scaling_of_trailing_slots(self, pair_tensor):
        d = diagonal_matrix([2, 1, 1])
        c = shao_product(pair_tensor, d)
        assert c[(1, 2, 3)] == HALF
        assert c[(1, 3, 2)] == HALF

    def test_output_order(self, pair_tensor):
        c = shao_product(pair_tensor, pair_tensor)
        assert c.order == (3 - 1) * (3 - 1) + 1

    def test_dimension_mismatch(self, pair_tensor):
        with pytest.raises(DimensionMismatch):
            shao_product(pair_tensor, identity_matrix(4))


class TestDiagonalSimilarity:
    def test_all_ones_is_identity(self, pair_tensor):
        assert diagonal_similarity(pair_tensor, [1, 1, 1]) == pair_tensor

    def test_entrywise_value(self):
        a = Hypermatrix(3, 3, {(1, 2, 3): HALF})
        b = diagonal_similarity(a, [2, 1, 1])
        assert b[(1, 2, 3)] == Fraction(1, 8)

    def test_matches_entrywise_formula(self, rng):
        for _ in range(10):
            a = random_sparse(rng, order=3, dim=3)
            diag = [Fraction(rng.randint(1, 4)) for _ in range(3)]
            b = diagonal_similarity(a, diag)
            expected = {}
            for key, value in a.entries.items():
                scale = Fraction(1)
                for j in key[1:]:
                    scale *= diag[j - 1]
                expected[key] = value * scale / diag[key[0] - 1] ** 2
            assert b == Hypermatrix(3, 3, expected)

    def test_eigenpair_transport(self, cycle_triple):
        a = out_adjacency(cycle_triple)
        diag = [Fraction(2), Fraction(3), Fraction(5)]
        b = diagonal_similarity(a, diag)
        transported = [Fraction(1) / d for d in diag]
        cert = verify_h_eigenpair(b, Fraction(1), transported)
        assert cert.exact

    def test_nonpositive_diagonal_rejected(self, pair_tensor):
        with pytest.raises(NonpositiveDiagonal):
            diagonal_similarity(pair_tensor, [1, 0, 1])


class TestSymmetrize:
    def test_fixed_point_on_supersymmetric(self):
        entries = {key: Fraction(1, 6) for key in permutations((1, 2, 3))}
        a = Hypermatrix(3, 3, entries)
        assert symmetrize(a) == a

    def test_single_edge_adjacency(self, pair_tensor):
        sym = symmetrize(pair_tensor)
        assert sym.nnz == 6
        assert all(
            sym[key] == Fraction(1, 6) for key in permutations((1, 2, 3))
        )

    def test_form_is_preserved(self, rng):
        for _ in range(10):
            a = random_sparse(rng)
            sym = symmetrize(a)
            for _ in range(20):
                x = random_rational_vector(rng, a.dim)
                assert a.form(x) == sym.form(x)

    def test_result_is_permutation_invariant(self, rng):
        for _ in range(5):
            sym = symmetrize(random_sparse(rng))
            for key, value in sym.entries.items():
                for _ in range(5):
                    shuffled = list(key)
                    rng.shuffle(shuffled)
                    assert sym[tuple(shuffled)] == value

    def test_is_supersymmetric_detector(self, pair_tensor):
        assert not is_supersymmetric(pair_tensor)
        assert is_supersymmetric(symmetrize(pair_tensor))


class TestRowSums:
    def test_worked_example_first_row(self, worked_example):
        sums = out_adjacency(worked_example).row_sums()
        assert sums[0] == 2

    def test_zero_tensor(self):
        assert Hypermatrix(3, 3).row_sums() == [0, 0, 0]

    def test_cycle_triple(self, cycle_triple):
        assert out_adjacency(cycle_triple).row_sums() == [1, 1, 1]


class TestGershgorin:
    def test_single_edge_laplacian_disks(self):
        hg = validate(3, [({1}, {2, 3})])
        disks = gershgorin_disks(laplacian(hg, "out"))
        assert (disks[0].center, disks[0].radius) == (1, 1)
        assert (disks[1].center, disks[1].radius) == (0, 0)
        assert (disks[2].center, disks[2].radius) == (0, 0)

    def test_diagonal_tensor_has_zero_radii(self):
        a = Hypermatrix(4, 2, {(1, 1, 1, 1): Fraction(3), (2, 2, 2, 2): Fraction(1)})
        assert all(d.radius == 0 for d in gershgorin_disks(a))

    def test_disk_union_membership(self):
        a = Hypermatrix(4, 2, {(1, 1, 1, 1): Fraction(3)})
        disks = gershgorin_disks(a)
        assert in_disk_union(disks, 3.0)
        assert not in_disk_union(disks, 2.0)
        assert in_disk_union(disks, 2.0, tol=1.5)


class TestReducibility:
    def test_counterexample_hierarchy(self, four_vertex_counterexample):
        adjacency = out_adjacency(four_vertex_counterexample)
        report = reducibility_report(adjacency)
        assert report.weakly_irreducible
        assert not report.weak_star_irreducible

    def test_zero_tensor_is_reducible(self):
        report = reducibility_report(Hypermatrix(3, 3))
        assert report.reducible_witness is not None
        assert not report.weakly_irreducible

    def test_one_dimensional_tensor_is_irreducible(self):
        assert reducible_witness(Hypermatrix(2, 1, {(1, 1): Fraction(1)})) is None

    def test_cycle_triple_is_weak_star(self, cycle_triple):
        assert is_weak_star_irreducible(out_adjacency(cycle_triple))

    def test_weak_star_implies_weak(self, rng):
        for _ in range(40):
            a = random_sparse(rng, order=3, dim=rng.randint(2, 4), nnz=4)
            if is_weak_star_irreducible(a):
                assert is_weakly_irreducible(a)

    def test_connectivity_bridge(self, rng):
        for _ in range(40):
            hg = random_hypergraph(rng, n_range=(2, 7), max_edges=5)
            connected, _ = is_strongly_connected(hg)
            assert connected == is_weak_star_irreducible(out_adjacency(hg))

    def test_dimension_cap(self):
        with pytest.raises(DimensionTooLargeForExhaustiveSearch):
            reducible_witness(Hypermatrix(2, 30), cap=24)

    def test_matrix_reducibility_matches_weak_irreducibility(self, rng):
        # for order 2 the two notions coincide, giving an independent
        # completeness check of the subset search
        for _ in range(30):
            n = rng.randint(2, 5)
            entries = {}
            for _ in range(rng.randint(1, n * n)):
                entries[(rng.randint(1, n), rng.randint(1, n))] = Fraction(
                    rng.randint(1, 3)
                )
            a = Hypermatrix(2, n, entries)
            assert (reducible_witness(a) is None) == is_weakly_irreducible(a)

    def test_witness_is_valid_by_definition(self, rng):
        for _ in range(20):
            a = random_sparse(rng, order=3, dim=3, nnz=3)
            witness = reducible_witness(a)
            if witness is None:
                continue
            for key, value in a.entries.items():
                if key[0] in witness and all(j not in witness for j in key[1:]):
                    pytest.fail(f"witness {witness} violated by {key}={value}")


class TestHtFormat:
    def test_round_trip(self, rng):
        for _ in range(10):
            a = random_sparse(rng, order=rng.randint(2, 4), dim=rng.randint(2, 4))
            assert parse_ht(format_ht(a)) == a

    def test_header_and_order(self, pair_tensor):
        text = format_ht(pair_tensor)
        lines = text.strip().splitlines()
        assert lines[0] == "order 3 dim 3"
        assert lines[1] == "1 2 3 1/2"
        assert lines[2] == "1 3 2 1/2"

    def test_empty_tensor_is_header_only(self):
        assert format_ht(Hypermatrix(2, 4)) == "order 2 dim 4\n"

    def test_parse_rejects_bad_header(self):
        with pytest.raises(ParseError):
            parse_ht("order 3\n")

    def test_parse_rejects_wrong_arity(self):
        with pytest.raises(ParseError):
            parse_ht("order 3 dim 2\n1 2 1/2\n")

    def test_parse_rejects_duplicate_tuple(self):
        with pytest.raises(ParseError):
            parse_ht("order 2 dim 2\n1 2 1/2\n1 2 1/3\n")


def test_add_sub_merge_and_drop_zeros(pair_tensor):
    total = pair_tensor + pair_tensor
    assert total[(1, 2, 3)] == 1
    diff = pair_tensor - pair_tensor
    assert diff.nnz == 0
