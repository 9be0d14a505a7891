"""Indefinite unitary form: orbit parametrization, pairing conditions,
per-orbit algorithms, transposition variants, and partial flags."""

from itertools import combinations, permutations as iter_permutations

import pytest

from flagslice import supq
from flagslice.geometry import (in_base_cycle_su, in_open_orbit_su,
                                iwasawa_reference_su, orbit_label_su,
                                schubert_cell_membership)
from flagslice.permutations import inversion_length, parse_word


def all_alphas(p, q):
    n = p + q
    for minus in combinations(range(n), q):
        yield "".join("-" if i in minus else "+" for i in range(n))


def test_sign_sequence_examples():
    # complete flags: cumulative counts 0,1,1,2,2 / 1,1,2,2,3 mean the
    # per-step growth pattern +-+-+
    desc = supq.OrbitDescriptor(3, 2, (0, 1, 0, 1, 0), (1, 0, 1, 0, 1))
    assert supq.sign_sequence_of(desc) == "+-+-+"
    gp = supq.OrbitDescriptor(6, 3, (1, 1, 1), (1, 3, 2))
    assert supq.format_sign_sequence(supq.sign_sequence_of(gp), gp.dims) == \
        "(-+)(-+++)(-++)"
    pure = supq.OrbitDescriptor(3, 1, (1,), (3,))
    assert supq.sign_sequence_of(pure) == "-+++"


def test_definite_signature_degenerates_to_one_variety():
    # q = 0: a single orbit (all plus), one Schubert variety (the identity)
    assert supq.enumerate_i_pq(3, 0) == [(1, 2, 3)]
    assert supq.count_i_pq(3, 0) == 1
    assert supq.perm_w((1, 2, 3), 3, 0) == [(1, 2, 3)]
    assert supq.sign_sequence_of(supq.OrbitDescriptor(3, 0, (0,), (3,))) == "+++"


def test_descriptor_validation():
    with pytest.raises(ValueError):
        supq.OrbitDescriptor(2, 3, (1, 1, 1), (1, 1, 0))  # p < q
    with pytest.raises(ValueError):
        supq.OrbitDescriptor(3, 2, (1, 1), (1, 1))  # sums wrong


def test_open_orbit_count():
    assert supq.open_orbit_count(3, 2) == 10
    assert supq.open_orbit_count(2, 2) == 6
    assert supq.open_orbit_count(5, 1) == 6
    assert len(list(all_alphas(3, 2))) == 10


def test_dimension_formulas():
    assert supq.cycle_dimension_su((0, 1, 0, 1, 0), (1, 0, 1, 0, 1)) == 4
    assert supq.cycle_dimension_su((2,), (3,)) == 0
    assert supq.cycle_dimension_su((3, 1), (2, 5)) == 3 * 1 + 2 * 5
    assert supq.schubert_dimension_su((3, 1), (2, 5)) == 17
    # complete flags: complementary dimension pq
    a = (0, 1, 0, 1, 0)
    b = (1, 0, 1, 0, 1)
    assert supq.cycle_dimension_su(a, b) + supq.schubert_dimension_su(a, b) == \
        sum(supq.OrbitDescriptor(3, 2, a, b).dims) * 4 // 2


def test_gamma_isomorphism():
    assert supq.gamma_i(6, 4, 2) == 4
    assert supq.gamma_i(2, 4, 2) == 2
    assert supq.gamma_i_word((6, 1, 5, 2, 3, 4), 4, 2) == (4, 1, 3, 2, 5, 6)
    # p = q: identity
    assert supq.gamma_i_word((4, 1, 3, 2), 2, 2) == (4, 1, 3, 2)


def test_pairing_examples():
    assert supq.pairing_check((6, 1, 5, 2, 3, 4), 4, 2)
    assert not supq.pairing_check((1, 6, 5, 2, 3, 4), 4, 2)
    for p, q in ((2, 1), (2, 2), (3, 2)):
        n = p + q
        for word in iter_permutations(range(1, n + 1)):
            if supq.strictly_pairing_check_su(word, p, q):
                assert supq.pairing_check(word, p, q)


def test_strictly_pairing_examples():
    assert supq.strictly_pairing_check_su((6, 1, 5, 2, 3, 4), 4, 2)
    assert supq.strictly_pairing_check_su((5, 6, 1, 2, 3, 4), 4, 2)  # nested pair
    assert not supq.strictly_pairing_check_su((4, 5, 6, 1, 2, 3), 4, 2)


def test_enumerate_i_pq_published_lists():
    su32 = {parse_word(s) for s in
            ("51423", "51342", "35142", "42513", "42351",
             "34251", "45123", "34512")}
    assert set(supq.enumerate_i_pq(3, 2)) == su32
    su42 = {parse_word(s) for s in
            ("615234", "613524", "361524", "613452", "361452", "346152",
             "526134", "523614", "352614", "523461", "352461", "345261",
             "561234", "356124", "345612")}
    assert set(supq.enumerate_i_pq(4, 2)) == su42


def test_enumerate_i_pq_counts_and_lengths():
    for q in range(1, 5):
        for p in range(q, 10 - q + 1):
            words = supq.enumerate_i_pq(p, q)
            assert len(words) == supq.count_i_pq(p, q)
            assert all(inversion_length(w) == p * q for w in words)
    assert supq.count_i_pq(4, 2) == 15 == 5 * 3
    assert len(supq.enumerate_i_pq(4, 1)) == 4


def test_perm_w_published_example():
    got = supq.perm_w((6, 1, 5, 2, 3, 4), 4, 2)
    assert set(got) == {parse_word(s) for s in
                        ("413256", "143256", "412356", "142356")}
    assert len(got) == 2 ** 2
    for p, q in ((2, 1), (3, 2)):
        for word in supq.enumerate_i_pq(p, q):
            assert len(supq.perm_w(word, p, q)) == 2 ** q


def test_t_w_flags_in_distinct_cycles():
    p, q = 3, 2
    for word in supq.enumerate_i_pq(p, q):
        flags = supq.t_w(word, p, q)
        labels = [orbit_label_su(flag, p, q) for flag in flags]
        assert len(set(labels)) == 2 ** q
        for flag, label in zip(flags, labels):
            desc = supq.descriptor_for_gb(p, q, label)
            assert in_base_cycle_su(flag, desc.a, desc.b)


def test_enumerate_for_orbit_extreme_patterns():
    # all pluses then all minuses: single variety
    for p, q in ((3, 1), (3, 2), (4, 2)):
        n = p + q
        alpha = "+" * p + "-" * q
        rows = supq.enumerate_for_orbit(alpha, p, q)
        assert len(rows) == 1
        word, flag = rows[0]
        assert word == tuple(range(q + 1, p + 1)) + \
            tuple(range(n - q + 1, n + 1)) + tuple(range(1, q + 1))
        expected_point = tuple(range(2 * q + 1, n + 1)) + \
            tuple(range(q + 1, 2 * q + 1)) + tuple(range(1, q + 1))
        assert flag.same_flag(
            supq.FlagMatrix.coordinate_flag(expected_point))
    # trailing (+-) pairs: double factorial many
    assert len(supq.enumerate_for_orbit("+" + "+-" * 2, 3, 2)) == 3
    assert len(supq.enumerate_for_orbit("++" + "+-" * 2, 4, 2)) == 3
    assert len(supq.enumerate_for_orbit("+-" * 2, 2, 2)) == 3
    # leading (+-+) groups: 2q(2q-2)... many
    assert len(supq.enumerate_for_orbit("+-+" * 2, 4, 2)) == 8
    assert len(supq.enumerate_for_orbit("+-+", 2, 1)) == 2


def test_enumerate_for_orbit_membership_oracle():
    p, q = 3, 2
    reference = iwasawa_reference_su(p, q)
    ipq = set(supq.enumerate_i_pq(p, q))
    for alpha in all_alphas(p, q):
        desc = supq.descriptor_for_gb(p, q, alpha)
        for word, flag in supq.enumerate_for_orbit(alpha, p, q):
            assert word in ipq
            assert in_open_orbit_su(flag, desc.a, desc.b)
            assert in_base_cycle_su(flag, desc.a, desc.b)
            assert schubert_cell_membership(flag, word, reference)
            assert orbit_label_su(flag, p, q) == alpha


def test_per_orbit_points_at_wider_signature():
    from flagslice import checks
    result = checks.check_points_supq(((4, 2),))
    assert result.passed, result.detail


def test_double_counting_identity():
    for p, q in ((2, 1), (2, 2), (3, 2), (4, 2)):
        totals = {}
        for alpha in all_alphas(p, q):
            for word, _ in supq.enumerate_for_orbit(alpha, p, q):
                totals[word] = totals.get(word, 0) + 1
        assert sum(totals.values()) == 2 ** q * supq.count_i_pq(p, q)
        assert set(totals) == set(supq.enumerate_i_pq(p, q))
        assert all(count == 2 ** q for count in totals.values())


def test_generalized_pairing_examples():
    assert supq.generalized_pairing_check((3, 4, 1, 5, 6, 2), (1, 1, 3, 1), 4, 2)
    # word with 1 strictly left of 6's block cannot be repaired
    assert not supq.generalized_pairing_check((1, 2, 3, 4, 5, 6), (1, 1, 3, 1), 4, 2)
    for word in iter_permutations(range(1, 5)):
        assert supq.generalized_pairing_check(word, (1, 1, 1, 1), 2, 2) == \
            supq.pairing_check(word, 2, 2)


def test_grassmannian_worked_example():
    desc = supq.OrbitDescriptor(7, 4, (3, 1), (2, 5))
    rows = supq.enumerate_for_orbit_gp(desc)
    words = [w for w, _ in rows]
    assert words == [
        (1, 2, 8, 10, 11, 3, 4, 5, 6, 7, 9),
        (1, 3, 8, 9, 11, 2, 4, 5, 6, 7, 10),
        (2, 3, 8, 9, 10, 1, 4, 5, 6, 7, 11),
    ]
    reference = iwasawa_reference_su(7, 4)
    target = supq.schubert_dimension_su(desc.a, desc.b)
    for word, flag in rows:
        assert inversion_length(word) == target
        assert in_open_orbit_su(flag, desc.a, desc.b)
        assert in_base_cycle_su(flag, desc.a, desc.b)
        assert schubert_cell_membership(flag, word, reference)


def test_maximal_parabolic_binomial_counts():
    cases = [
        ((7, 4), (3, 1), (2, 5)),
        ((5, 3), (2, 1), (1, 4)),
        ((4, 2), (1, 1), (2, 2)),
        ((3, 3), (2, 1), (1, 2)),
    ]
    from math import comb
    for (p, q), a, b in cases:
        desc = supq.OrbitDescriptor(p, q, a, b)
        f1, f2 = desc.f
        expected = comb(f1 + f2, max(f1, f2))
        assert len(supq.enumerate_for_orbit_gp(desc)) == expected


def test_gp_reduces_to_gb():
    p, q = 3, 2
    for alpha in all_alphas(p, q):
        desc = supq.descriptor_for_gb(p, q, alpha)
        gp = supq.enumerate_for_orbit_gp(desc)
        gb = supq.enumerate_for_orbit(alpha, p, q)
        assert [w for w, _ in gp] == [w for w, _ in gb]
        for (_, f1), (_, f2) in zip(gp, gb):
            assert f1.same_flag(f2)


def test_canonical_rearrangement_and_lifting():
    desc = supq.OrbitDescriptor(7, 4, (3, 1), (2, 5))
    drop = sum(x * y for x, y in zip(desc.a, desc.b))
    lift_alpha = supq.canonical_lifting(desc)
    assert lift_alpha == "-++--+++++-"
    lifted_words = [w for w, _ in supq.enumerate_for_orbit(lift_alpha, 7, 4)]
    for word, _ in supq.enumerate_for_orbit_gp(desc):
        lifted = supq.canonical_rearrangement_su(word, desc)
        assert supq.strictly_pairing_check_su(lifted, 7, 4)
        assert inversion_length(lifted) - inversion_length(word) == drop
        assert lifted in lifted_words
    # single block: lifting leaves the sign pattern length alone
    single = supq.OrbitDescriptor(2, 1, (1,), (2,))
    assert supq.canonical_lifting(single) == "++-"


def test_fixed_points_count():
    assert supq.fixed_points_in_cycle_count(3, 2) == 12
    assert supq.fixed_points_in_cycle_count(1, 1) == 1
    # direct enumeration at (2,1)
    p, q = 2, 1
    desc = supq.descriptor_for_gb(p, q, "-++")
    count = sum(
        in_base_cycle_su(supq.FlagMatrix.coordinate_flag(word), desc.a, desc.b)
        for word in iter_permutations(range(1, 4)))
    assert count == supq.fixed_points_in_cycle_count(p, q) == 2


def test_orbit_point_sets_injective():
    p, q = 3, 2
    seen = {}
    for alpha in all_alphas(p, q):
        key = frozenset(flag.canonical_key()
                        for _, flag in supq.enumerate_for_orbit(alpha, p, q))
        assert key not in seen
        seen[key] = alpha
