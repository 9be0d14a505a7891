"""
Cross-check suites: every combinatorial claim the package makes is replayed
against the exact-arithmetic geometric oracle at desk scale.

Each check returns a CheckResult; the CLI ``verify`` command runs a
configurable batch and exits nonzero when anything fails.  Tests reuse the
same functions.  All randomness is seeded and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations as iter_permutations
from math import factorial

from . import slmh, slnr, supq
from .geometry import (FlagMatrix, bilinear_b, in_base_cycle_su,
                       in_open_orbit_su, is_isotropic_flag, is_tau_generic,
                       iwasawa_reference_h, iwasawa_reference_su,
                       orbit_label_su, orientation_class, random_cell_sample,
                       schubert_cell_membership, standard_reference,
                       symplectic_omega, tau_generic_full_flag)
from .permutations import (Word, classify_symmetry, inversion_length,
                           word_text)


@dataclass
class CheckResult:
    name: str
    scope: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        tail = f" :: {self.detail}" if self.detail else ""
        return f"[{status}] {self.name} ({self.scope}){tail}"


def _result(name: str, scope: str, failures: list[str]) -> CheckResult:
    return CheckResult(name, scope, not failures,
                       "; ".join(failures[:4]) if failures else "")


def _derived_seed(seed: int, tag: int, word: Word, trial: int) -> int:
    acc = seed * 7919 + tag
    for v in word:
        acc = acc * 31 + v
    return acc * 1009 + trial


def double_factorial_descending(n: int, steps: int | None = None) -> int:
    """(n-1)(n-3)... with the given number of factors (all, by default)."""
    total = 1
    k = n - 1
    while k > 0 and (steps is None or steps > 0):
        total *= k
        k -= 2
        if steps is not None:
            steps -= 1
    return total


# -- counting and length laws ---------------------------------------------------


def check_counts_slnr(n_values=range(2, 11)) -> CheckResult:
    failures = []
    for n in n_values:
        words = slnr.enumerate_gb(n)
        expect = double_factorial_descending(n)
        if len(words) != expect:
            failures.append(f"n={n}: {len(words)} != {expect}")
        bad = [w for w in words if inversion_length(w) != slnr.expected_length_gb(n)]
        if bad:
            failures.append(f"n={n}: wrong length at {word_text(bad[0])}")
        if len(set(words)) != len(words):
            failures.append(f"n={n}: duplicates")
    return _result("count+length, split form, complete flags",
                   f"n in {list(n_values)}", failures)


def check_counts_slmh(m_values=range(1, 7)) -> CheckResult:
    failures = []
    for m in m_values:
        words = slmh.enumerate_gb_h(m)
        if len(words) != factorial(m):
            failures.append(f"m={m}: {len(words)} != {m}!")
        bad = [w for w in words if inversion_length(w) != slmh.expected_length_gb_h(m)]
        if bad:
            failures.append(f"m={m}: wrong length at {word_text(bad[0])}")
        roundtrip = all(slmh.sigma_m_to_w(slmh.w_to_sigma_m(w)) == w for w in words)
        if not roundtrip:
            failures.append(f"m={m}: inflation round-trip broken")
    return _result("count+length, quaternionic form, complete flags",
                   f"m in {list(m_values)}", failures)


def check_counts_supq(max_n: int = 10) -> CheckResult:
    failures = []
    for q in range(1, max_n // 2 + 1):
        for p in range(q, max_n - q + 1):
            words = supq.enumerate_i_pq(p, q)
            if len(words) != supq.count_i_pq(p, q):
                failures.append(f"(p,q)=({p},{q}): {len(words)}")
            bad = [w for w in words if inversion_length(w) != p * q]
            if bad:
                failures.append(f"(p,q)=({p},{q}): wrong length {word_text(bad[0])}")
    return _result("count+length, indefinite unitary form, complete flags",
                   f"n <= {max_n}", failures)


# -- constructed intersection points against the oracle ---------------------------


def check_points_slnr(n_values=range(2, 7)) -> CheckResult:
    form = bilinear_b()
    failures = []
    for n in n_values:
        reference = standard_reference(n)
        m = n // 2
        for word in slnr.enumerate_gb(n):
            points = slnr.intersection_points_gb(word)
            if len(points) != 2 ** m:
                failures.append(f"n={n} {word_text(word)}: {len(points)} points")
                continue
            for point in points:
                if not is_isotropic_flag(point, form):
                    failures.append(f"n={n} {word_text(word)}: point not isotropic")
                if not is_tau_generic(point):
                    failures.append(f"n={n} {word_text(word)}: point not generic")
                if not schubert_cell_membership(point, word, reference):
                    failures.append(f"n={n} {word_text(word)}: point outside cell")
            if n % 2 == 0:
                classes = [orientation_class(pt) for pt in points]
                if classes.count(1) != 2 ** (m - 1) or classes.count(-1) != 2 ** (m - 1):
                    failures.append(f"n={n} {word_text(word)}: orientation split {classes}")
    return _result("intersection points, split form", f"n in {list(n_values)}", failures)


def check_points_slmh(m_values=range(1, 4)) -> CheckResult:
    failures = []
    for m in m_values:
        reference = iwasawa_reference_h(m)
        form = symplectic_omega(m)
        for word in slmh.enumerate_gb_h(m):
            point = slmh.intersection_point_h(word)
            if not is_isotropic_flag(point, form):
                failures.append(f"m={m} {word_text(word)}: not isotropic")
            if not is_tau_generic(point, "quaternion-j"):
                failures.append(f"m={m} {word_text(word)}: not generic")
            if not schubert_cell_membership(point, word, reference):
                failures.append(f"m={m} {word_text(word)}: outside cell")
    return _result("intersection points, quaternionic form",
                   f"m in {list(m_values)}", failures)


def _all_sign_sequences(p: int, q: int):
    n = p + q
    for minus_positions in combinations(range(n), q):
        yield "".join("-" if i in minus_positions else "+" for i in range(n))


def check_points_supq(sizes=((2, 1), (2, 2), (3, 2))) -> CheckResult:
    failures = []
    for p, q in sizes:
        reference = iwasawa_reference_su(p, q)
        ipq = set(supq.enumerate_i_pq(p, q))
        for alpha in _all_sign_sequences(p, q):
            desc = supq.descriptor_for_gb(p, q, alpha)
            for word, flag in supq.enumerate_for_orbit(alpha, p, q):
                if word not in ipq:
                    failures.append(f"({p},{q}) {alpha}: stray word {word_text(word)}")
                if not in_open_orbit_su(flag, desc.a, desc.b):
                    failures.append(f"({p},{q}) {alpha} {word_text(word)}: point outside orbit")
                if not in_base_cycle_su(flag, desc.a, desc.b):
                    failures.append(f"({p},{q}) {alpha} {word_text(word)}: point outside cycle")
                if not schubert_cell_membership(flag, word, reference):
                    failures.append(f"({p},{q}) {alpha} {word_text(word)}: point outside cell")
    return _result("per-orbit intersection points, indefinite unitary form",
                   f"sizes {list(sizes)}", failures)


def check_transposition_points_supq(sizes=((2, 1), (2, 2), (3, 2))) -> CheckResult:
    """Each strictly pairing word meets exactly 2^q orbits, once each, at its
    transposition-variant coordinate flags."""
    failures = []
    for p, q in sizes:
        for word in supq.enumerate_i_pq(p, q):
            flags = supq.t_w(word, p, q)
            labels = [orbit_label_su(flag, p, q) for flag in flags]
            if None in labels or len(set(labels)) != 2 ** q:
                failures.append(f"({p},{q}) {word_text(word)}: labels {labels}")
            for flag, label in zip(flags, labels):
                desc = supq.descriptor_for_gb(p, q, label)
                if not in_base_cycle_su(flag, desc.a, desc.b):
                    failures.append(f"({p},{q}) {word_text(word)}: {label} point off-cycle")
    return _result("transposition variants hit 2^q distinct cycles",
                   f"sizes {list(sizes)}", failures)


# -- randomized genericity sampling vs the open-orbit predicates ------------------


def check_sampling_slnr(n_values=range(2, 7), seed: int = 0, samples: int = 20,
                        escalation: int = 100) -> CheckResult:
    failures = []
    for n in n_values:
        reference = standard_reference(n)
        target = slnr.expected_length_gb(n)
        for word in iter_permutations(range(1, n + 1)):
            if inversion_length(word) != target:
                continue
            predicted = slnr.spacing_check(word)
            found = _sampled_hit(word, reference, "real-conjugation", seed, 1,
                                 samples, escalation if predicted else samples)
            if predicted != found:
                failures.append(f"n={n} {word_text(word)}: predicted {predicted}, sampled {found}")
    return _result("spacing predicate == sampled open-orbit membership",
                   f"n in {list(n_values)}, {samples} seeds", failures)


def check_sampling_slmh(m_values=range(1, 4), seed: int = 0, samples: int = 20,
                        escalation: int = 100) -> CheckResult:
    failures = []
    for m in m_values:
        reference = iwasawa_reference_h(m)
        target = slmh.expected_length_gb_h(m)
        for word in iter_permutations(range(1, 2 * m + 1)):
            if inversion_length(word) != target:
                continue
            predicted = slmh.spacing_check_h(word)
            found = _sampled_hit(word, reference, "quaternion-j", seed, 2,
                                 samples, escalation if predicted else samples)
            if predicted != found:
                failures.append(f"m={m} {word_text(word)}: predicted {predicted}, sampled {found}")
    return _result("quaternionic spacing == sampled open-orbit membership",
                   f"m in {list(m_values)}, {samples} seeds", failures)


def _sampled_hit(word, reference, conj, seed, tag, samples, limit) -> bool:
    for trial in range(limit):
        flag = random_cell_sample(word, reference, _derived_seed(seed, tag, word, trial))
        if tau_generic_full_flag(flag, conj):
            return True
    return False


def check_sampling_supq(sizes=((2, 1), (2, 2), (3, 2)), seed: int = 0,
                        samples: int = 20, escalation: int = 100) -> CheckResult:
    failures = []
    for p, q in sizes:
        n = p + q
        reference = iwasawa_reference_su(p, q)
        for word in iter_permutations(range(1, n + 1)):
            if inversion_length(word) != p * q:
                continue
            predicted = supq.pairing_check(word, p, q)
            limit = escalation if predicted else samples
            found = False
            for trial in range(limit):
                flag = random_cell_sample(word, reference,
                                          _derived_seed(seed, 3, word, trial))
                if orbit_label_su(flag, p, q) is not None:
                    found = True
                    break
            if predicted != found:
                failures.append(f"({p},{q}) {word_text(word)}: predicted {predicted}, sampled {found}")
    return _result("pairing predicate == sampled nondegenerate-orbit membership",
                   f"sizes {list(sizes)}, {samples} seeds", failures)


# -- partial-flag machinery --------------------------------------------------------


def _symmetric_sequences(n: int):
    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    for dims in compositions(n):
        if classify_symmetry(dims).is_symmetric and len(dims) > 1:
            yield dims


def check_measurable_lift_slnr(n_values=range(2, 9)) -> CheckResult:
    failures = []
    for n in n_values:
        gb = set(slnr.enumerate_gb(n))
        for dims in _symmetric_sequences(n):
            drop = slnr.rearrangement_length_drop(dims)
            lifted = {}
            for word in slnr.enumerate_measurable(dims):
                what = slnr.canonical_rearrangement(word, dims)
                if what not in gb:
                    failures.append(f"{dims} {word_text(word)}: lift not double box")
                if what in lifted:
                    failures.append(f"{dims}: lift collision at {word_text(what)}")
                lifted[what] = word
                if inversion_length(word) != inversion_length(what) - drop:
                    failures.append(f"{dims} {word_text(word)}: wrong length drop")
    return _result("measurable lifts: injective, double box, exact length drop",
                   f"split form, n in {list(n_values)}", failures)


def check_measurable_lift_slmh(m_values=range(1, 5)) -> CheckResult:
    failures = []
    for m in m_values:
        n = 2 * m
        gb = set(slmh.enumerate_gb_h(m))
        for dims in _symmetric_sequences(n):
            cls = classify_symmetry(dims)
            if cls.kind == "symmetric-e" and cls.middle % 2:
                continue
            drop = slmh.rearrangement_length_drop_h(dims)
            lifted = {}
            for word in slmh.enumerate_measurable_h(dims):
                what = slmh.canonical_rearrangement_h(word, dims)
                if what not in gb:
                    failures.append(f"{dims} {word_text(word)}: lift not strictly pairing")
                if what in lifted:
                    failures.append(f"{dims}: lift collision at {word_text(what)}")
                lifted[what] = word
                if inversion_length(word) != inversion_length(what) - drop:
                    failures.append(f"{dims} {word_text(word)}: wrong length drop")
    return _result("measurable lifts: injective, strictly pairing, exact length drop",
                   f"quaternionic form, m in {list(m_values)}", failures)


def check_projected_point_counts_slnr(n_values=range(2, 7)) -> CheckResult:
    """Distinct projected intersection points per measurable type: equal to
    the stated per-cycle count for one open orbit (odd n), twice it when the
    two orientation classes both project (even n)."""
    failures = []
    for n in n_values:
        for dims in _symmetric_sequences(n):
            words = slnr.enumerate_measurable(dims)
            if not words:
                continue
            expected = slnr.intersection_count_measurable(dims)
            if n % 2 == 0:
                expected *= 2
            for word in words[:3]:
                points = slnr.projected_cycle_points(word, dims)
                if len(points) != expected:
                    failures.append(f"{dims} {word_text(word)}: {len(points)} != {expected}")
    return _result("projected point counts match the stated case table",
                   f"split form, n in {list(n_values)}", failures)


def check_double_counting_supq(sizes=((2, 1), (2, 2), (3, 2), (4, 2))) -> CheckResult:
    failures = []
    for p, q in sizes:
        total = 0
        per_word: dict[Word, int] = {}
        for alpha in _all_sign_sequences(p, q):
            rows = supq.enumerate_for_orbit(alpha, p, q)
            total += len(rows)
            for word, _ in rows:
                per_word[word] = per_word.get(word, 0) + 1
        expect = 2 ** q * supq.count_i_pq(p, q)
        if total != expect:
            failures.append(f"({p},{q}): total {total} != {expect}")
        if set(per_word) != set(supq.enumerate_i_pq(p, q)):
            failures.append(f"({p},{q}): orbit union mismatch")
        bad = [w for w, c in per_word.items() if c != 2 ** q]
        if bad:
            failures.append(f"({p},{q}): {word_text(bad[0])} meets {per_word[bad[0]]} orbits")
    return _result("double counting: each variety meets exactly 2^q orbits",
                   f"sizes {list(sizes)}", failures)


def check_orbit_injectivity_supq(sizes=((2, 1), (2, 2), (3, 2), (4, 2))) -> CheckResult:
    failures = []
    for p, q in sizes:
        seen: dict[frozenset, str] = {}
        for alpha in _all_sign_sequences(p, q):
            key = frozenset(flag.canonical_key()
                            for _, flag in supq.enumerate_for_orbit(alpha, p, q))
            if key in seen:
                failures.append(f"({p},{q}): {alpha} and {seen[key]} share points")
            seen[key] = alpha
    return _result("orbit -> point-set map is injective", f"sizes {list(sizes)}", failures)


def check_fixed_point_count_supq(sizes=((2, 1), (2, 2))) -> CheckResult:
    """Count coordinate complete flags inside one base cycle directly."""
    failures = []
    for p, q in sizes:
        n = p + q
        alpha = "-" * q + "+" * p
        desc = supq.descriptor_for_gb(p, q, alpha)
        count = 0
        for word in iter_permutations(range(1, n + 1)):
            flag = FlagMatrix.coordinate_flag(word)
            if in_base_cycle_su(flag, desc.a, desc.b):
                count += 1
        if count != supq.fixed_points_in_cycle_count(p, q):
            failures.append(f"({p},{q}): {count} != q! p!")
    return _result("torus-fixed points per cycle = q! p!", f"sizes {list(sizes)}", failures)


# -- batches -----------------------------------------------------------------------


def fast_suite() -> list[CheckResult]:
    """Counting, lifting, and point-construction checks (no sampling)."""
    return [
        check_counts_slnr(),
        check_counts_slmh(),
        check_counts_supq(),
        check_points_slnr(),
        check_points_slmh(),
        check_points_supq(),
        check_transposition_points_supq(),
        check_measurable_lift_slnr(),
        check_measurable_lift_slmh(),
        check_projected_point_counts_slnr(),
        check_double_counting_supq(),
        check_orbit_injectivity_supq(),
        check_fixed_point_count_supq(),
    ]


def sampling_suite(seed: int = 0, samples: int = 20,
                   escalation: int = 100) -> list[CheckResult]:
    return [
        check_sampling_slnr(seed=seed, samples=samples, escalation=escalation),
        check_sampling_slmh(seed=seed, samples=samples, escalation=escalation),
        check_sampling_supq(seed=seed, samples=samples, escalation=escalation),
    ]


def full_suite(seed: int = 0, samples: int = 20,
               escalation: int = 100) -> list[CheckResult]:
    return fast_suite() + sampling_suite(seed, samples, escalation)
