"""
Combinatorics of Schubert varieties meeting the base cycle for the split
real form acting on flag manifolds of SL(n,C).

A word w = k_1..k_m [l_*] l_m..l_1 splits into heads k_i (first half),
tails l_i (second half, read right to left) and, in odd ambient dimension, a
middle letter l_*.  The spacing condition (l_i < k_i for all i) detects
Schubert varieties meeting the open orbit; the double box contraction
condition (every pair (l_i, k_i) formed from adjacent survivors of the
ordered set 1..n) detects those of complementary dimension meeting the
cycle, and the intersection points are explicit flags built from
(+-i) e_(l_i) + e_(k_i).

Partial-flag variants: symmetric dimension sequences lift block-by-block to
the complete-flag case (generalized spacing / double box, canonical
rearrangement); asymmetric ones reduce to their symmetric model and a
strictly-decreasing-blocks projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .gaussian import GQ, ONE, ZERO
from .geometry import FlagMatrix
from .permutations import (Dims, SymmetryClassification, Word, blocks,
                           check_dims, check_word, classify_symmetry,
                           minimal_coset_representative, prefix_sums)


@dataclass(frozen=True)
class KlSplit:
    """Head/tail split of a word: heads k, tails l (l[0] is the last letter),
    and the middle letter for odd length."""

    k: Word
    l: Word
    middle: int | None

    def rebuild(self) -> Word:
        mid = (self.middle,) if self.middle is not None else ()
        return self.k + mid + tuple(reversed(self.l))


def kl_split(word: Sequence[int]) -> KlSplit:
    """
    >>> kl_split((2, 6, 5, 4, 3, 1))
    KlSplit(k=(2, 6, 5), l=(1, 3, 4), middle=None)
    >>> kl_split((2, 3, 1))
    KlSplit(k=(2,), l=(1,), middle=3)
    """
    word = check_word(word)
    n = len(word)
    m = n // 2
    k = word[:m]
    l = tuple(word[n - 1 - i] for i in range(m))
    middle = word[m] if n % 2 else None
    return KlSplit(k, l, middle)


def spacing_check(word: Sequence[int]) -> bool:
    """l_i < k_i for every head/tail pair.

    >>> spacing_check((2, 6, 5, 4, 3, 1))
    True
    >>> spacing_check((2, 6, 1, 5, 3, 4))
    False
    """
    split = kl_split(word)
    return all(l < k for k, l in zip(split.k, split.l))


def double_box_check(word: Sequence[int]) -> bool:
    """True iff each tail l_i is the immediate predecessor of its head k_i in
    the ordered set 1..n with earlier pairs removed.

    >>> double_box_check((2, 5, 6, 3, 4, 1))
    True
    >>> double_box_check((2, 6, 5, 4, 3, 1))
    False
    >>> double_box_check((2, 4, 3, 1))
    True
    """
    split = kl_split(word)
    residual = list(range(1, len(word) + 1))
    for k, l in zip(split.k, split.l):
        if k not in residual or l not in residual:
            return False
        idx = residual.index(k)
        if idx == 0 or residual[idx - 1] != l:
            return False
        residual.remove(k)
        residual.remove(l)
    return True


def cycle_dimension_gb(n: int) -> int:
    """Dimension of the base cycle in the complete-flag case.

    >>> [cycle_dimension_gb(n) for n in (2, 6, 7)]
    [0, 6, 9]
    """
    if n < 1:
        raise ValueError("ambient dimension must be positive")
    m = n // 2
    return m * m - m if n % 2 == 0 else m * m


def expected_length_gb(n: int) -> int:
    """Complementary Schubert dimension: m^2 for n=2m, m^2+m for n=2m+1."""
    m = n // 2
    return m * m if n % 2 == 0 else m * m + m


def enumerate_gb(n: int) -> list[Word]:
    """All words passing the double box contraction, lexicographically.

    The construction picks, at each step, an adjacent pair of the surviving
    ordered set; the count is (n-1)(n-3)...

    >>> enumerate_gb(4)
    [(2, 4, 3, 1), (3, 4, 1, 2), (4, 2, 1, 3)]
    >>> len(enumerate_gb(6))
    15
    """
    if n < 1:
        raise ValueError("ambient dimension must be positive")
    if n == 1:
        return []
    words: list[Word] = []
    heads: list[int] = []
    tails: list[int] = []

    def step(residual: tuple[int, ...]) -> None:
        if len(residual) <= 1:
            word = tuple(heads) + residual + tuple(reversed(tails))
            words.append(word)
            return
        for t in range(len(residual) - 1):
            heads.append(residual[t + 1])
            tails.append(residual[t])
            step(residual[:t] + residual[t + 2:])
            heads.pop()
            tails.pop()

    step(tuple(range(1, n + 1)))
    return sorted(words)


def intersection_points_gb(word: Sequence[int]) -> list[FlagMatrix]:
    """The complete flags where the Schubert variety meets the cycle(s): one
    per sign pattern, built from (+-i) e_(l_i) + e_(k_i) and the tail basis
    vectors.  For even n the two orientation classes each hold half of them.
    """
    if not double_box_check(word):
        raise ValueError(f"word fails the double box contraction: {word!r}")
    split = kl_split(word)
    n = len(word)
    m = len(split.k)
    points = []
    for signs in product((1, -1), repeat=m):
        cols = []
        for sign, k, l in zip(signs, split.k, split.l):
            col = [ZERO] * n
            col[l - 1] = GQ(0, sign)
            col[k - 1] = ONE
            cols.append(tuple(col))
        if split.middle is not None:
            mid = [ZERO] * n
            mid[split.middle - 1] = ONE
            cols.append(tuple(mid))
        for l in reversed(split.l):
            col = [ZERO] * n
            col[l - 1] = ONE
            cols.append(tuple(col))
        points.append(FlagMatrix(n, tuple(range(1, n + 1)), tuple(cols)))
    return points


# -- measurable partial flags --------------------------------------------------


def _require_symmetric(dims: Sequence[int]) -> SymmetryClassification:
    cls = classify_symmetry(dims)
    if not cls.is_symmetric:
        raise ValueError(f"dimension sequence {tuple(dims)} is not symmetric")
    return cls


def _block_pairs(word: Sequence[int], cls: SymmetryClassification,
                 ) -> tuple[list[tuple[Word, Word]], Word]:
    """Symmetric block pairs (B_j, mirror B_j), each sorted, plus the middle
    block (empty for the d shape)."""
    blks = [tuple(sorted(b)) for b in blocks(word, cls.parts)]
    s = len(cls.core)
    pairs = [(blks[j], blks[len(blks) - 1 - j]) for j in range(s)]
    middle = blks[s] if cls.kind == "symmetric-e" else ()
    return pairs, middle


def generalized_spacing_check(word: Sequence[int], dims: Sequence[int]) -> bool:
    """Per symmetric block pair, the tail block admits an arrangement with
    l_i < k_i throughout; decided by the sorted elementwise comparison.

    >>> generalized_spacing_check((2, 4, 1, 3), (2, 2))
    True
    >>> generalized_spacing_check((1, 2, 3, 4), (2, 2))
    False
    """
    cls = _require_symmetric(dims)
    pairs, _ = _block_pairs(word, cls)
    for heads, tails in pairs:
        if any(l >= k for k, l in zip(heads, tails)):
            return False
    return True


def generalized_double_box_check(word: Sequence[int], dims: Sequence[int]) -> bool:
    """Block-by-block double box contraction: block pair j must consist of
    disjoint pairs (l, k) with l the immediate predecessor of k in the
    ordered set with earlier block pairs removed.

    >>> generalized_double_box_check((5, 7, 2, 3, 8, 1, 4, 6), (2, 1, 2, 1, 2))
    True
    >>> generalized_double_box_check((1, 2, 3, 4), (2, 2))
    False
    """
    cls = _require_symmetric(dims)
    pairs, _ = _block_pairs(word, cls)
    residual = list(range(1, len(word) + 1))
    for heads, tails in pairs:
        tail_set = set(tails)
        for k in heads:
            idx = residual.index(k)
            if idx == 0 or residual[idx - 1] not in tail_set:
                return False
        for v in heads:
            residual.remove(v)
        for v in tails:
            residual.remove(v)
    return True


def rearrangement_length_drop(dims: Sequence[int]) -> int:
    """Length lost when a canonical rearrangement is sorted back into block
    order: sum d_i(d_i-1)/2 over the core, plus the middle-block term."""
    cls = _require_symmetric(dims)
    drop = sum(d * (d - 1) // 2 for d in cls.core)
    if cls.kind == "symmetric-e":
        e = cls.middle
        drop += (e // 2) ** 2 if e % 2 == 0 else (e - 1) * (e + 1) // 4
    return drop


def canonical_rearrangement(word: Sequence[int], dims: Sequence[int]) -> Word:
    """The distinguished coset member passing the complete-flag double box
    contraction: tail blocks reversed, middle block rotated.

    >>> canonical_rearrangement((2, 4, 1, 3), (2, 2))
    (2, 4, 3, 1)
    """
    if not generalized_double_box_check(word, dims):
        raise ValueError("word fails the generalized double box contraction")
    cls = _require_symmetric(dims)
    pairs, middle = _block_pairs(word, cls)
    front = [heads for heads, _ in pairs]
    back = [tuple(reversed(tails)) for _, tails in pairs]
    rotated = ()
    if cls.kind == "symmetric-e":
        shift = (len(middle) + 1) // 2
        rotated = middle[shift:] + middle[:shift]
    out: list[int] = []
    for blk in front:
        out.extend(blk)
    out.extend(rotated)
    for blk in reversed(back):
        out.extend(blk)
    return tuple(out)


def _disjoint_adjacent_pairs(residual: Sequence[int], count: int,
                             ) -> Iterable[list[tuple[int, int]]]:
    """All ways to pick ``count`` disjoint adjacent pairs (l, k) from the
    ordered residual set."""
    edges = range(len(residual) - 1)
    for chosen in combinations(edges, count):
        if any(b - a < 2 for a, b in zip(chosen, chosen[1:])):
            continue
        yield [(residual[t], residual[t + 1]) for t in chosen]


def enumerate_measurable(dims: Sequence[int]) -> list[Word]:
    """All minimal representatives passing the generalized double box
    contraction for a symmetric dimension sequence, lexicographically.

    >>> enumerate_measurable((1, 1, 1, 1)) == enumerate_gb(4)
    True
    >>> enumerate_measurable((2, 2))
    [(2, 4, 1, 3)]
    """
    cls = _require_symmetric(dims)
    n = sum(dims)
    if n == 1:
        return []
    core = cls.core
    words: list[Word] = []
    front: list[Word] = []
    back: list[Word] = []

    def step(j: int, residual: tuple[int, ...]) -> None:
        if j == len(core):
            middle = tuple(sorted(residual))
            word: list[int] = []
            for blk in front:
                word.extend(blk)
            word.extend(middle)
            for blk in reversed(back):
                word.extend(blk)
            words.append(tuple(word))
            return
        for pairs in _disjoint_adjacent_pairs(residual, core[j]):
            chosen = {v for pair in pairs for v in pair}
            front.append(tuple(sorted(k for _, k in pairs)))
            back.append(tuple(sorted(l for l, _ in pairs)))
            step(j + 1, tuple(v for v in residual if v not in chosen))
            front.pop()
            back.pop()

    step(0, tuple(range(1, n + 1)))
    return sorted(words)


def intersection_count_measurable(dims: Sequence[int]) -> int:
    """Stated intersection-point count per cycle for a symmetric sequence:
    2^(sum of core parts) for the e shape in odd ambient dimension, 2^(m-1)
    for the d shape, 2^(sum of core parts - 1) for the e shape in even
    ambient dimension."""
    cls = _require_symmetric(dims)
    n = sum(dims)
    core_sum = sum(cls.core)
    if not cls.core:
        return 1
    if cls.kind == "symmetric-d":
        return 2 ** (n // 2 - 1)
    if n % 2:
        return 2 ** core_sum
    return 2 ** (core_sum - 1)


def projected_cycle_points(word: Sequence[int], dims: Sequence[int],
                           ) -> list[FlagMatrix]:
    """Distinct partial flags obtained by projecting the complete-flag
    intersection points of the canonical rearrangement.  Used to cross-check
    the counting formulas geometrically."""
    lifted = canonical_rearrangement(word, dims)
    deltas = prefix_sums(check_dims(dims))
    seen = {}
    for point in intersection_points_gb(lifted):
        partial = FlagMatrix(point.n, deltas, point.columns)
        seen.setdefault(partial.canonical_key(), partial)
    return list(seen.values())


# -- non-measurable partial flags -----------------------------------------------


@dataclass(frozen=True)
class MeasurableModel:
    """Symmetric refinement of an arbitrary dimension sequence.

    ``dhat`` is the common refinement of the sequence and its reversal;
    grouping its parts by ``t`` (cut positions ``delta``) recovers ``f``.
    """

    f: Dims
    dhat: Dims
    t: Dims
    delta: Dims

    @property
    def groups(self) -> tuple[tuple[int, int], ...]:
        """Half-open block index ranges of dhat forming each part of f."""
        out = []
        start = 0
        for size in self.t:
            out.append((start, start + size))
            start += size
        return tuple(out)


def measurable_model(f: Sequence[int]) -> MeasurableModel:
    """Refine a dimension sequence to its symmetric model.

    >>> model = measurable_model((2, 4, 3))
    >>> model.dhat, model.t, model.delta
    ((2, 1, 3, 1, 2), (1, 2, 2), (1, 3, 5))
    >>> measurable_model((1, 5)).dhat
    (1, 4, 1)
    """
    f = check_dims(f)
    n = sum(f)
    cuts = set(prefix_sums(f)) | set(prefix_sums(tuple(reversed(f))))
    ordered = sorted(cuts)
    dhat = tuple(b - a for a, b in zip([0] + ordered, ordered))
    t = []
    idx = 0
    for part in f:
        acc = 0
        size = 0
        while acc < part:
            acc += dhat[idx]
            idx += 1
            size += 1
        assert acc == part
        t.append(size)
    return MeasurableModel(f, dhat, tuple(t), prefix_sums(tuple(t)))


def model_dimension_drop(model: MeasurableModel) -> int:
    """Dimension lost by the projection from the model's flag manifold:
    sum over merged groups of the pairwise products of their parts."""
    drop = 0
    for start, stop in model.groups:
        parts = model.dhat[start:stop]
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                drop += a * b
    return drop


def strictly_decreasing_blocks_check(word: Sequence[int],
                                     model: MeasurableModel) -> bool:
    """Within every merged group, consecutive blocks must be strictly
    decreasing: the last element of each later block below the first element
    of the block before it.

    >>> model = measurable_model((3, 3, 2))
    >>> strictly_decreasing_blocks_check((5, 7, 2, 3, 8, 1, 4, 6), model)
    True
    >>> strictly_decreasing_blocks_check((5, 7, 3, 1, 8, 2, 4, 6), model)
    False
    """
    blks = [tuple(sorted(b)) for b in blocks(word, model.dhat)]
    for start, stop in model.groups:
        for i in range(start, stop - 1):
            if blks[i + 1][-1] >= blks[i][0]:
                return False
    return True


def project_to_coarse(word: Sequence[int], model: MeasurableModel) -> Word:
    """Merge each group's blocks and sort: the minimal representative for f."""
    return minimal_coset_representative(tuple(word), model.f)


def enumerate_nonmeasurable(f: Sequence[int]) -> list[Word]:
    """Schubert words for an asymmetric dimension sequence: filter the
    symmetric model's enumeration by the strictly-decreasing-blocks condition
    and project.

    >>> enumerate_nonmeasurable((1, 5))
    [(2, 1, 3, 4, 5, 6)]
    """
    f = check_dims(f)
    if classify_symmetry(f).is_symmetric:
        return enumerate_measurable(f)
    model = measurable_model(f)
    out = []
    for word in enumerate_measurable(model.dhat):
        if strictly_decreasing_blocks_check(word, model):
            out.append(project_to_coarse(word, model))
    return sorted(out)


def homology_coefficient(dims: Sequence[int]) -> int:
    """Coefficient of the cycle's class expansion for this real form: the
    per-cycle intersection-point count of the relevant (model) sequence."""
    dims = check_dims(dims)
    cls = classify_symmetry(dims)
    if cls.is_symmetric:
        return intersection_count_measurable(dims)
    return intersection_count_measurable(measurable_model(dims).dhat)
