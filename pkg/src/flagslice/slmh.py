"""
Combinatorics of Schubert varieties meeting the base cycle for the
quaternionic real form on C^(2m).

The head/tail split of a word works as in the split case, but the ambient
quaternionic structure weakens the spacing condition (l_i < k_i, or k_i odd
with l_i = k_i + 1) and strengthens the complementary-dimension condition to
the strictly pairing condition: every pair must be (odd, odd+1).  Words
passing it biject with permutations on m letters, and each Schubert variety
meets the cycle in a single explicit flag, written in the Iwasawa-adapted
ordered basis (e_1, j(e_1), ..., e_m, j(e_m)).
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Sequence

from .gaussian import ONE, ZERO
from .geometry import FlagMatrix
from .permutations import (Word, check_dims, check_word,
                           classify_symmetry, prefix_sums)
from .slnr import (_block_pairs, _require_symmetric, kl_split,
                   measurable_model, project_to_coarse,
                   strictly_decreasing_blocks_check)


def _check_even(word: Sequence[int]) -> Word:
    word = check_word(word)
    if len(word) % 2:
        raise ValueError("quaternionic words need even length")
    return word


def spacing_check_h(word: Sequence[int]) -> bool:
    """l_i < k_i, or k_i odd with l_i = k_i + 1, for every head/tail pair.

    >>> spacing_check_h((3, 2, 5, 6, 1, 4))
    True
    >>> spacing_check_h((1, 2, 3, 4))
    False
    """
    split = kl_split(_check_even(word))
    return all(l < k or (k % 2 == 1 and l == k + 1)
               for k, l in zip(split.k, split.l))


def strictly_pairing_check_h(word: Sequence[int]) -> bool:
    """Every head odd and its tail the next integer.

    >>> strictly_pairing_check_h((3, 1, 5, 6, 2, 4))
    True
    >>> strictly_pairing_check_h((3, 2, 5, 6, 1, 4))
    False
    """
    split = kl_split(_check_even(word))
    return all(k % 2 == 1 and l == k + 1 for k, l in zip(split.k, split.l))


def sigma_m_to_w(s: Sequence[int]) -> Word:
    """Inflate a permutation on m letters to the word k_i = 2 s_i - 1,
    l_i = k_i + 1 on 2m letters.

    >>> sigma_m_to_w((1, 2, 3, 4))
    (1, 3, 5, 7, 8, 6, 4, 2)
    >>> sigma_m_to_w((1,))
    (1, 2)
    """
    s = check_word(s)
    heads = tuple(2 * v - 1 for v in s)
    tails = tuple(2 * v for v in reversed(s))
    return heads + tails


def w_to_sigma_m(word: Sequence[int]) -> Word:
    """Inverse of the inflation map on strictly pairing words."""
    if not strictly_pairing_check_h(word):
        raise ValueError(f"word fails the strictly pairing condition: {word!r}")
    m = len(word) // 2
    return tuple((k + 1) // 2 for k in word[:m])


def enumerate_gb_h(m: int) -> list[Word]:
    """All strictly pairing words on 2m letters, lexicographically: the
    inflation image of the m! permutations.

    >>> enumerate_gb_h(1)
    [(1, 2)]
    >>> len(enumerate_gb_h(4))
    24
    """
    if m < 1:
        raise ValueError("m must be positive")
    return sorted(sigma_m_to_w(s) for s in permutations(range(1, m + 1)))


def cycle_dimension_gb_h(m: int) -> int:
    """Base-cycle dimension m^2 for complete flags on C^(2m)."""
    if m < 1:
        raise ValueError("m must be positive")
    return m * m


def expected_length_gb_h(m: int) -> int:
    """Complementary Schubert dimension m^2 - m."""
    return m * m - m


def quaternion_pair_columns(s: Sequence[int]) -> list[tuple]:
    """Columns e_(s_1), ..., e_(s_m), j(e_(s_m)), ..., j(e_(s_1)) in standard
    coordinates, with j(e_i) = -e_(m+i)."""
    m = len(s)
    n = 2 * m
    cols = []
    for v in s:
        col = [ZERO] * n
        col[v - 1] = ONE
        cols.append(tuple(col))
    for v in reversed(s):
        col = [ZERO] * n
        col[m + v - 1] = -ONE
        cols.append(tuple(col))
    return cols


def intersection_point_h(word: Sequence[int]) -> FlagMatrix:
    """The single complete flag where the Schubert variety meets the cycle.

    >>> intersection_point_h((1, 2)).dims
    (1, 2)
    """
    s = w_to_sigma_m(word)
    n = len(word)
    return FlagMatrix(n, tuple(range(1, n + 1)),
                      tuple(quaternion_pair_columns(s)))


# -- measurable partial flags ---------------------------------------------------


def _quaternionic_pair_ok(k: int, l: int) -> bool:
    return l < k or (k % 2 == 1 and l == k + 1)


def _matchable(heads: Sequence[int], tails: Sequence[int]) -> bool:
    """Bipartite matching: can the tails be arranged against the heads so
    every pair satisfies the quaternionic spacing predicate?"""
    accepts = [[t for t, l in enumerate(tails) if _quaternionic_pair_ok(k, l)]
               for k in heads]
    matched: dict[int, int] = {}

    def assign(h: int, visited: set[int]) -> bool:
        for t in accepts[h]:
            if t in visited:
                continue
            visited.add(t)
            if t not in matched or assign(matched[t], visited):
                matched[t] = h
                return True
        return False

    return all(assign(h, set()) for h in range(len(heads)))


def generalized_spacing_check_h(word: Sequence[int], dims: Sequence[int]) -> bool:
    """Per symmetric block pair, some arrangement of the tail block satisfies
    the quaternionic spacing predicate against the heads.

    >>> generalized_spacing_check_h((1, 3, 2, 4), (2, 2))
    True
    >>> generalized_spacing_check_h((1, 2, 3, 4), (2, 2))
    False
    """
    cls = _require_symmetric(dims)
    pairs, _ = _block_pairs(_check_even(word), cls)
    return all(_matchable(heads, tails) for heads, tails in pairs)


def generalized_strictly_pairing_check_h(word: Sequence[int],
                                         dims: Sequence[int]) -> bool:
    """Positional strictly pairing blockwise: the i-th tail of each mirror
    block is the successor of the i-th (odd) head, and the middle block
    consists of (odd, odd+1) pairs.

    >>> generalized_strictly_pairing_check_h((1, 3, 2, 4), (2, 2))
    True
    >>> generalized_strictly_pairing_check_h((1, 5, 3, 4, 2, 6), (2, 2, 2))
    True
    """
    cls = _require_symmetric(dims)
    pairs, middle = _block_pairs(_check_even(word), cls)
    for heads, tails in pairs:
        if any(k % 2 == 0 or l != k + 1 for k, l in zip(heads, tails)):
            return False
    if len(middle) % 2:
        return False
    for i in range(0, len(middle), 2):
        if middle[i] % 2 == 0 or middle[i + 1] != middle[i] + 1:
            return False
    return True


def rearrangement_length_drop_h(dims: Sequence[int]) -> int:
    """Length lost between a word and its canonical rearrangement:
    sum d_i(d_i-1)/2 over the core plus (e'/2)^2 - e'/2 for the middle."""
    cls = _require_symmetric(dims)
    drop = sum(d * (d - 1) // 2 for d in cls.core)
    if cls.kind == "symmetric-e":
        half = cls.middle // 2
        drop += half * half - half
    return drop


def canonical_rearrangement_h(word: Sequence[int], dims: Sequence[int]) -> Word:
    """The coset member passing the complete-flag strictly pairing condition:
    tail blocks reversed, middle block interleaved as odd-position letters
    then even-position letters backwards.

    >>> canonical_rearrangement_h((1, 5, 3, 4, 2, 6), (2, 2, 2))
    (1, 5, 3, 4, 6, 2)
    """
    if not generalized_strictly_pairing_check_h(word, dims):
        raise ValueError("word fails the generalized strictly pairing condition")
    cls = _require_symmetric(dims)
    pairs, middle = _block_pairs(word, cls)
    out: list[int] = []
    for heads, _ in pairs:
        out.extend(heads)
    out.extend(middle[0::2])
    out.extend(reversed(middle[1::2]))
    for _, tails in reversed(pairs):
        out.extend(reversed(tails))
    return tuple(out)


def _ordered_partitions(values: tuple[int, ...], sizes: Sequence[int]):
    if not sizes:
        yield []
        return
    for chosen in combinations(values, sizes[0]):
        rest = tuple(v for v in values if v not in chosen)
        for tail in _ordered_partitions(rest, sizes[1:]):
            yield [chosen] + tail


def enumerate_measurable_h(dims: Sequence[int]) -> list[Word]:
    """All minimal representatives passing the generalized strictly pairing
    condition, lexicographically.  They correspond to distributions of the m
    letters into the core blocks (sizes d_i) and the half middle block.

    >>> enumerate_measurable_h((1, 1, 1, 1)) == enumerate_gb_h(2)
    True
    >>> enumerate_measurable_h((2, 2))
    [(1, 3, 2, 4)]
    """
    cls = _require_symmetric(dims)
    n = sum(dims)
    if n % 2:
        raise ValueError("quaternionic dimension sequences must sum to an even number")
    m = n // 2
    sizes = list(cls.core)
    if cls.kind == "symmetric-e":
        if cls.middle % 2:
            raise ValueError("middle part must be even for the quaternionic form")
        sizes.append(cls.middle // 2)
    words = []
    for assignment in _ordered_partitions(tuple(range(1, m + 1)), sizes):
        core_blocks = assignment[: len(cls.core)]
        middle_letters = assignment[len(cls.core)] if cls.kind == "symmetric-e" else ()
        word: list[int] = []
        for block in core_blocks:
            word.extend(2 * v - 1 for v in sorted(block))
        word.extend(sorted(x for v in middle_letters for x in (2 * v - 1, 2 * v)))
        for block in reversed(core_blocks):
            word.extend(2 * v for v in sorted(block))
        words.append(tuple(word))
    return sorted(words)


def sigma_blocks_of(word: Sequence[int], dims: Sequence[int]) -> tuple[Word, ...]:
    """The m-letter blocks behind a generalized strictly pairing word: heads
    deflated per core block, then the middle block's odd letters deflated."""
    if not generalized_strictly_pairing_check_h(word, dims):
        raise ValueError("word fails the generalized strictly pairing condition")
    cls = _require_symmetric(dims)
    pairs, middle = _block_pairs(word, cls)
    out = [tuple((k + 1) // 2 for k in heads) for heads, _ in pairs]
    if middle:
        out.append(tuple((k + 1) // 2 for k in middle[0::2]))
    return tuple(out)


def intersection_point_measurable_h(word: Sequence[int],
                                    dims: Sequence[int]) -> FlagMatrix:
    """The single partial flag where the Schubert variety meets the cycle,
    spanned by e_(s_1), ..., e_(s_m), j(e_(s_m)), ..., j(e_(s_1))."""
    s = tuple(v for block in sigma_blocks_of(word, dims) for v in block)
    n = len(word)
    return FlagMatrix(n, prefix_sums(check_dims(dims)),
                      tuple(quaternion_pair_columns(s)))


def enumerate_nonmeasurable_h(f: Sequence[int]) -> list[Word]:
    """Quaternionic words for an asymmetric dimension sequence, via the
    symmetric model and the strictly-decreasing-blocks projection.

    >>> enumerate_nonmeasurable_h((1, 3))
    [(1, 2, 3, 4)]
    """
    f = check_dims(f)
    if sum(f) % 2:
        raise ValueError("quaternionic dimension sequences must sum to an even number")
    if classify_symmetry(f).is_symmetric:
        return enumerate_measurable_h(f)
    model = measurable_model(f)
    out = []
    for word in enumerate_measurable_h(model.dhat):
        if strictly_decreasing_blocks_check(word, model):
            out.append(project_to_coarse(word, model))
    return sorted(out)
