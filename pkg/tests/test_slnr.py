"""Split real form: spacing/double box conditions, enumeration, points,
measurable and non-measurable partial flags."""

from itertools import permutations as iter_permutations

import pytest

from flagslice import slnr
from flagslice.geometry import (FlagMatrix, bilinear_b, is_isotropic_flag,
                                is_tau_generic, orientation_class,
                                schubert_cell_membership, standard_reference)
from flagslice.permutations import (flag_manifold_dimension, inversion_length,
                                    parse_word, prefix_sums)


def test_spacing_check_examples():
    assert slnr.spacing_check((2, 6, 5, 4, 3, 1))
    assert not slnr.spacing_check((2, 6, 1, 5, 3, 4))
    for n in (4, 5, 6, 7):
        assert slnr.spacing_check(tuple(range(n, 0, -1)))


def test_double_box_examples():
    assert slnr.double_box_check((2, 5, 6, 3, 4, 1))
    assert not slnr.double_box_check((2, 6, 5, 4, 3, 1))
    assert slnr.double_box_check((2, 4, 3, 1))


def test_double_box_implies_spacing_with_strict_inclusion():
    for n in (4, 5, 6):
        witnesses = 0
        for word in iter_permutations(range(1, n + 1)):
            if slnr.double_box_check(word):
                assert slnr.spacing_check(word)
            elif slnr.spacing_check(word):
                witnesses += 1
        assert witnesses > 0
    assert slnr.spacing_check((2, 6, 5, 4, 3, 1))
    assert not slnr.double_box_check((2, 6, 5, 4, 3, 1))


def test_enumerate_gb_small_cases():
    assert slnr.enumerate_gb(2) == [(2, 1)]
    assert slnr.enumerate_gb(4) == [(2, 4, 3, 1), (3, 4, 1, 2), (4, 2, 1, 3)]
    assert len(slnr.enumerate_gb(6)) == 15
    assert slnr.enumerate_gb(1) == []


def test_enumerate_gb_matches_filtering():
    for n in (2, 3, 4, 5, 6):
        generated = set(slnr.enumerate_gb(n))
        filtered = {w for w in iter_permutations(range(1, n + 1))
                    if slnr.double_box_check(w)}
        assert generated == filtered


def test_cycle_dimension_and_lengths():
    assert slnr.cycle_dimension_gb(2) == 0
    assert slnr.cycle_dimension_gb(6) == 6
    assert slnr.cycle_dimension_gb(7) == 9
    for n in range(2, 9):
        complement = flag_manifold_dimension((1,) * n) - slnr.cycle_dimension_gb(n)
        assert complement == slnr.expected_length_gb(n)
        for word in slnr.enumerate_gb(n):
            assert inversion_length(word) == complement


def test_intersection_points_counts_and_oracle():
    for n in (2, 3, 4, 5):
        reference = standard_reference(n)
        for word in slnr.enumerate_gb(n):
            points = slnr.intersection_points_gb(word)
            assert len(points) == 2 ** (n // 2)
            for point in points:
                assert is_isotropic_flag(point, bilinear_b())
                assert is_tau_generic(point)
                assert schubert_cell_membership(point, word, reference)
            if n % 2 == 0:
                classes = [orientation_class(p) for p in points]
                assert classes.count(1) == classes.count(-1)


def test_intersection_points_spot_checks_larger_n():
    for n in (7, 8):
        words = slnr.enumerate_gb(n)
        sample = words[:2] + words[len(words) // 2:len(words) // 2 + 1] + words[-2:]
        reference = standard_reference(n)
        for word in sample:
            for point in slnr.intersection_points_gb(word):
                assert is_isotropic_flag(point, bilinear_b())
                assert is_tau_generic(point)
                assert schubert_cell_membership(point, word, reference)


def test_intersection_points_requires_double_box():
    with pytest.raises(ValueError):
        slnr.intersection_points_gb((2, 6, 5, 4, 3, 1))


def test_generalized_spacing_examples():
    assert slnr.generalized_spacing_check((2, 4, 1, 3), (2, 2))
    assert not slnr.generalized_spacing_check((1, 2, 3, 4), (2, 2))
    for n in (4, 5, 6):
        for word in iter_permutations(range(1, n + 1)):
            assert slnr.generalized_spacing_check(word, (1,) * n) == \
                slnr.spacing_check(word)
    with pytest.raises(ValueError):
        slnr.generalized_spacing_check((1, 2, 3), (2, 1))


def test_generalized_double_box_examples():
    assert slnr.generalized_double_box_check(parse_word("(57)(2)(38)(1)(46)"),
                                             (2, 1, 2, 1, 2))
    for n in (4, 5, 6):
        for word in iter_permutations(range(1, n + 1)):
            assert slnr.generalized_double_box_check(word, (1,) * n) == \
                slnr.double_box_check(word)


def test_canonical_rearrangement_examples():
    assert slnr.canonical_rearrangement((2, 4, 1, 3), (2, 2)) == (2, 4, 3, 1)
    assert inversion_length((2, 4, 1, 3)) == 3
    assert inversion_length((2, 4, 3, 1)) == 4
    assert slnr.rearrangement_length_drop((2, 2)) == 1
    word = parse_word("(2)(3456)(1)")
    assert slnr.canonical_rearrangement(word, (1, 4, 1)) == (2, 5, 6, 3, 4, 1)


def test_enumerate_measurable_reduces_to_complete_flags():
    for n in (2, 3, 4, 5, 6):
        assert slnr.enumerate_measurable((1,) * n) == slnr.enumerate_gb(n)


def test_enumerate_measurable_lifts_into_gb():
    for dims in ((2, 2), (1, 2, 1), (2, 1, 1, 2), (2, 1, 2, 1, 2), (1, 2, 2, 1)):
        n = sum(dims)
        gb = set(slnr.enumerate_gb(n))
        lifted = set()
        drop = slnr.rearrangement_length_drop(dims)
        for word in slnr.enumerate_measurable(dims):
            what = slnr.canonical_rearrangement(word, dims)
            assert what in gb
            assert what not in lifted
            lifted.add(what)
            assert inversion_length(word) == inversion_length(what) - drop


def test_intersection_count_measurable_cases():
    assert slnr.intersection_count_measurable((1, 1)) == 1
    # d shape, n = 2m: 2^(m-1)
    assert slnr.intersection_count_measurable((2, 2)) == 2 ** 1
    assert slnr.intersection_count_measurable((3, 3)) == 2 ** 2
    # e shape, odd n: 2^(sum of core parts)
    assert slnr.intersection_count_measurable((1, 3, 1)) == 2 ** 1
    assert slnr.intersection_count_measurable((2, 1, 2)) == 2 ** 2
    assert slnr.intersection_count_measurable((1, 1, 1, 1, 1)) == 2 ** 2
    # e shape, even n: 2^(sum of core parts - 1)
    assert slnr.intersection_count_measurable((1, 2, 1)) == 2 ** 0
    assert slnr.intersection_count_measurable((2, 2, 2)) == 2 ** 1
    with pytest.raises(ValueError):
        slnr.intersection_count_measurable((2, 4, 3))


def test_measurable_model_worked_example():
    model = slnr.measurable_model((2, 4, 3))
    assert model.dhat == (2, 1, 3, 1, 2)
    assert model.t == (1, 2, 2)
    assert model.delta == (1, 3, 5)
    assert slnr.model_dimension_drop(model) == 1 * 3 + 1 * 2
    assert slnr.measurable_model((1, 5)).dhat == (1, 4, 1)
    symmetric = slnr.measurable_model((2, 1, 1, 2))
    assert symmetric.dhat == (2, 1, 1, 2)
    assert symmetric.t == (1, 1, 1, 1)


def test_strictly_decreasing_blocks_examples():
    model = slnr.measurable_model((3, 3, 2))
    assert model.t == (2, 2, 1)
    assert slnr.strictly_decreasing_blocks_check(parse_word("(57)(2)(38)(1)(46)"), model)
    assert not slnr.strictly_decreasing_blocks_check(parse_word("(57)(3)(18)(2)(46)"), model)
    trivial = slnr.measurable_model((2, 1, 1, 2))
    for word in slnr.enumerate_measurable((2, 1, 1, 2)):
        assert slnr.strictly_decreasing_blocks_check(word, trivial)


def test_enumerate_nonmeasurable_projective_spaces():
    for n in range(2, 9):
        expected = (2, 1) + tuple(range(3, n + 2))
        assert slnr.enumerate_nonmeasurable((1, n)) == [expected]


def test_enumerate_nonmeasurable_filter_counts():
    f = (3, 3, 2)
    words = slnr.enumerate_nonmeasurable(f)
    assert len(words) <= len(slnr.enumerate_measurable((2, 1, 2, 1, 2)))
    published = {parse_word(s) for s in
                 ("(257)(138)(46)", "(258)(136)(47)", "(268)(134)(57)")}
    assert published <= set(words)
    codim = flag_manifold_dimension(f) - 11
    for word in words:
        assert inversion_length(word) == codim


def test_certified_extra_measurable_members():
    """The enumeration for (2,1,2,1,2) strictly contains the published
    36-row table: the nine extra words carry machine-checked intersection
    certificates (point in cell, isotropic, generic, complementary length),
    so they are genuine members.  See also test_acceptance for the faithful
    (and failing) fixture comparison."""
    dims = (2, 1, 2, 1, 2)
    n = 8
    reference = standard_reference(n)
    deltas = prefix_sums(dims)
    extras = [parse_word(s) for s in (
        "(46)(2)(78)(1)(35)", "(46)(7)(18)(2)(35)", "(46)(8)(12)(7)(35)",
        "(47)(2)(58)(1)(36)", "(47)(5)(18)(2)(36)", "(47)(8)(12)(5)(36)",
        "(48)(2)(56)(1)(37)", "(48)(5)(16)(2)(37)", "(48)(6)(12)(5)(37)",
    )]
    enumerated = set(slnr.enumerate_measurable(dims))
    for word in extras:
        assert word in enumerated
        assert inversion_length(word) == flag_manifold_dimension(dims) - 11
        lifted = slnr.canonical_rearrangement(word, dims)
        assert slnr.double_box_check(lifted)
        point = slnr.intersection_points_gb(lifted)[0]
        partial = FlagMatrix(n, deltas, point.columns)
        assert is_isotropic_flag(partial, bilinear_b())
        assert is_tau_generic(partial)
        assert schubert_cell_membership(partial, word, reference)


def test_spacing_equivalence_is_a_complementary_length_statement():
    """At complementary length, spacing exactly detects cells meeting the
    open orbit (the sampling checks assert this exhaustively).  Beyond that
    length the equivalence genuinely fails: the cell of 4231 (length 5)
    contains an explicit generic point although spacing does not hold."""
    from flagslice.gaussian import I, gq_vector
    from flagslice.geometry import is_tau_generic
    word = (4, 2, 3, 1)
    assert inversion_length(word) != slnr.expected_length_gb(4)
    assert not slnr.spacing_check(word)
    witness = FlagMatrix(4, (1, 2, 3, 4), (
        gq_vector((I, 0, I, 1)), gq_vector((I, 1, 0, 0)),
        gq_vector((0, 0, 1, 0)), gq_vector((1, 0, 0, 0))))
    assert schubert_cell_membership(witness, word, standard_reference(4))
    assert is_tau_generic(witness)


def test_projected_point_counts():
    # d shape, even ambient dimension: all sign patterns survive projection;
    # the two orientation classes each hold the per-cycle count
    points = slnr.projected_cycle_points((2, 4, 1, 3), (2, 2))
    assert len(points) == 2 * slnr.intersection_count_measurable((2, 2))
    classes = [orientation_class(p) for p in points]
    assert classes.count(1) == classes.count(-1) == 2
    # e shape, odd ambient dimension: single open orbit, count is exact
    word = slnr.enumerate_measurable((1, 3, 1))[0]
    assert len(slnr.projected_cycle_points(word, (1, 3, 1))) == \
        slnr.intersection_count_measurable((1, 3, 1))
    # e shape, even ambient dimension: the middle-block signs collapse, so
    # twice the per-cycle count survives in total
    word = slnr.enumerate_measurable((1, 2, 1))[0]
    assert len(slnr.projected_cycle_points(word, (1, 2, 1))) == \
        2 * slnr.intersection_count_measurable((1, 2, 1))
