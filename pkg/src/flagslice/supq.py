"""
Combinatorics of Schubert varieties meeting base cycles for the indefinite
unitary real form SU(p,q) on C^n, n = p + q.

Open orbits carry signature data: per block, counts (a_i, b_i) of negative
and positive directions, equivalently a sign sequence with q minuses and p
pluses.  Words live in the Weyl group adapted to the Iwasawa reference basis
(e_1 + e_2q, ..., e_q + e_(q+1), e_(2q+1), ..., e_n, e_q - e_(q+1), ...,
e_1 - e_2q); the canonical isomorphism gamma maps them back to the standard
torus.  The pairing condition (n-i+1 left of i) detects Schubert varieties
meeting some open orbit; the strictly pairing condition (pairs placed
adjacently, ignoring earlier pairs, singles increasing) detects the
complementary-dimension ones.  Each such variety meets exactly 2^q open
orbits, once each, in a coordinate flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence

from .geometry import FlagMatrix
from .permutations import (Dims, Word, check_dims, check_word,
                           minimal_coset_representative, prefix_sums)


@dataclass(frozen=True)
class OrbitDescriptor:
    """An open orbit: per-block negative counts ``a`` and positive counts
    ``b`` against a dimension sequence d_i = a_i + b_i."""

    p: int
    q: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if self.p < self.q or self.q < 0 or self.p < 1:
            raise ValueError("need p >= q >= 0 and p >= 1")
        if len(self.a) != len(self.b):
            raise ValueError("a and b need the same number of blocks")
        if any(x < 0 for x in self.a + self.b):
            raise ValueError("block counts must be nonnegative")
        if sum(self.a) != self.q or sum(self.b) != self.p:
            raise ValueError("block counts must sum to q and p")
        if any(x + y < 1 for x, y in zip(self.a, self.b)):
            raise ValueError("every block must be nonempty")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dims(self) -> Dims:
        return tuple(x + y for x, y in zip(self.a, self.b))

    @property
    def f(self) -> tuple[int, ...]:
        """Per-block pair capacities min(a_i, b_i)."""
        return tuple(min(x, y) for x, y in zip(self.a, self.b))


def descriptor_for_gb(p: int, q: int, alpha: str) -> OrbitDescriptor:
    """Descriptor of the complete-flag orbit with the given sign sequence."""
    alpha = parse_sign_sequence(alpha)
    if len(alpha) != p + q or alpha.count("-") != q:
        raise ValueError(f"sign sequence must have {q} minuses and {p} pluses")
    a = tuple(1 if ch == "-" else 0 for ch in alpha)
    b = tuple(1 - x for x in a)
    return OrbitDescriptor(p, q, a, b)


def parse_sign_sequence(text: str) -> str:
    """Strip block parentheses and validate the sign alphabet.

    >>> parse_sign_sequence("(-+)(-+++)(-++)")
    '-+-+++-++'
    """
    flat = text.replace("(", "").replace(")", "").replace(" ", "")
    if not flat or any(ch not in "+-" for ch in flat):
        raise ValueError(f"not a sign sequence: {text!r}")
    return flat


def format_sign_sequence(alpha: str, dims: Sequence[int] | None = None) -> str:
    """
    >>> format_sign_sequence("-+-+++-++", (2, 4, 3))
    '(-+)(-+++)(-++)'
    """
    if dims is None:
        return alpha
    out = []
    start = 0
    for d in dims:
        out.append("(" + alpha[start:start + d] + ")")
        start += d
    return "".join(out)


def sign_sequence_of(desc: OrbitDescriptor) -> str:
    """Canonical sign pattern of an orbit: per block, min(a,b) minuses, the
    majority sign |a-b| times, then min(a,b) pluses.

    >>> desc = OrbitDescriptor(6, 3, (1, 1, 1), (1, 3, 2))
    >>> format_sign_sequence(sign_sequence_of(desc), desc.dims)
    '(-+)(-+++)(-++)'
    """
    parts = []
    for x, y in zip(desc.a, desc.b):
        f = min(x, y)
        majority = "-" * (x - y) if x > y else "+" * (y - x)
        parts.append("-" * f + majority + "+" * f)
    return "".join(parts)


def orbit_from_signs(p: int, q: int, alpha: str, dims: Sequence[int],
                     ) -> OrbitDescriptor:
    """Read per-block counts off a sign sequence."""
    alpha = parse_sign_sequence(alpha)
    dims = check_dims(dims)
    if len(alpha) != sum(dims):
        raise ValueError("sign sequence and dimension sequence disagree")
    a, b = [], []
    start = 0
    for d in dims:
        block = alpha[start:start + d]
        a.append(block.count("-"))
        b.append(block.count("+"))
        start += d
    return OrbitDescriptor(p, q, tuple(a), tuple(b))


def open_orbit_count(p: int, q: int) -> int:
    """Number of open orbits on complete flags: n choose p.

    >>> open_orbit_count(3, 2)
    10
    """
    return comb(p + q, p)


def cycle_dimension_su(a: Sequence[int], b: Sequence[int]) -> int:
    """dim C for the orbit with block counts (a, b):
    sum_{i<j} a_i a_j + sum_{i<j} b_i b_j.

    >>> cycle_dimension_su((0, 1, 0, 1, 0), (1, 0, 1, 0, 1))
    4
    """
    total = 0
    for seq in (a, b):
        for i, x in enumerate(seq):
            for y in seq[i + 1:]:
                total += x * y
    return total


def schubert_dimension_su(a: Sequence[int], b: Sequence[int]) -> int:
    """Complementary dimension sum_{i<j} (a_i b_j + b_i a_j).

    >>> schubert_dimension_su((3, 1), (2, 5))
    17
    """
    total = 0
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            total += a[i] * b[j] + b[i] * a[j]
    return total


def gamma_i(i: int, p: int, q: int) -> int:
    """Canonical isomorphism between the Iwasawa-adapted and standard Weyl
    letters: fixes 1..q, shifts q+1..p up by q, pulls >p down by p-q.

    >>> gamma_i(6, 4, 2), gamma_i(2, 4, 2), gamma_i(3, 4, 2)
    (4, 2, 5)
    """
    if i <= q:
        return i
    if i <= p:
        return i + q
    return i - p + q


def gamma_i_word(word: Sequence[int], p: int, q: int) -> Word:
    """
    >>> gamma_i_word((6, 1, 5, 2, 3, 4), 4, 2)
    (4, 1, 3, 2, 5, 6)
    """
    return tuple(gamma_i(v, p, q) for v in check_word(word))


def pairing_check(word: Sequence[int], p: int, q: int) -> bool:
    """n-i+1 sits left of i for every i <= q.

    >>> pairing_check((6, 1, 5, 2, 3, 4), 4, 2)
    True
    >>> pairing_check((1, 6, 5, 2, 3, 4), 4, 2)
    False
    """
    word = check_word(word)
    n = p + q
    if len(word) != n:
        raise ValueError("word length must be p + q")
    pos = {v: idx for idx, v in enumerate(word)}
    return all(pos[n - i + 1] < pos[i] for i in range(1, q + 1))


def strictly_pairing_check_su(word: Sequence[int], p: int, q: int) -> bool:
    """Pairs (n-i+1, i) adjacent once earlier pairs are deleted, in order
    i = 1..q, with the singles q+1..p left in increasing order.

    >>> strictly_pairing_check_su((5, 6, 1, 2, 3, 4), 4, 2)
    True
    >>> strictly_pairing_check_su((4, 5, 6, 1, 2, 3), 4, 2)
    False
    """
    word = check_word(word)
    n = p + q
    if len(word) != n or not pairing_check(word, p, q):
        return False
    survivors = list(word)
    for i in range(1, q + 1):
        big, small = n - i + 1, i
        idx = survivors.index(big)
        if idx + 1 >= len(survivors) or survivors[idx + 1] != small:
            return False
        del survivors[idx:idx + 2]
    singles = [v for v in word if q < v <= p]
    return singles == sorted(singles)


def expected_length_su(p: int, q: int) -> int:
    """Complementary Schubert dimension pq for complete flags."""
    return p * q


def count_i_pq(p: int, q: int) -> int:
    """(n-1)(n-3)...(n-2q+1), the number of complementary-dimension Schubert
    varieties meeting some open orbit.

    >>> count_i_pq(4, 2)
    15
    """
    n = p + q
    total = 1
    for i in range(q):
        total *= n - 1 - 2 * i
    return total


def _placements(n: int, q: int, free: tuple[int, ...], admissible,
                skip: int = 0) -> Iterable[dict[int, int]]:
    """Recursive placement of the pairs (n-i+1, i), i = skip+1..q, into
    transparently adjacent free slots; ``admissible(s1, s2)`` filters slot
    pairs.  Yields assignments position -> value, big letter leftmost."""

    def step(i: int, free: tuple[int, ...], placed: dict[int, int]):
        if i > q:
            yield dict(placed)
            return
        for t in range(len(free) - 1):
            s1, s2 = free[t], free[t + 1]
            if not admissible(s1, s2):
                continue
            placed[s1] = n - i + 1
            placed[s2] = i
            yield from step(i + 1, free[:t] + free[t + 2:], placed)
            del placed[s1]
            del placed[s2]

    yield from step(skip + 1, free, {})


def enumerate_i_pq(p: int, q: int) -> list[Word]:
    """All words passing the strictly pairing condition, lexicographically.

    >>> [len(enumerate_i_pq(p, q)) for p, q in ((3, 2), (4, 2), (3, 0))]
    [8, 15, 1]
    """
    if p < q or q < 0 or p < 1:
        raise ValueError("need p >= q >= 0 and p >= 1")
    n = p + q
    words = []
    for placed in _placements(n, q, tuple(range(n)), lambda s1, s2: True):
        word = [0] * n
        for pos, v in placed.items():
            word[pos] = v
        singles = iter(range(q + 1, p + 1))
        for pos in range(n):
            if word[pos] == 0:
                word[pos] = next(singles)
        words.append(tuple(word))
    return sorted(words)


def perm_w(word: Sequence[int], p: int, q: int) -> list[Word]:
    """Standard-torus images of the 2^q transposition variants of the word.

    >>> perm_w((6, 1, 5, 2, 3, 4), 4, 2)
    [(1, 4, 2, 3, 5, 6), (1, 4, 3, 2, 5, 6), (4, 1, 2, 3, 5, 6), (4, 1, 3, 2, 5, 6)]
    """
    word = check_word(word)
    n = p + q
    if not pairing_check(word, p, q):
        raise ValueError("word fails the pairing condition")
    out = set()
    for picks in range(2 ** q):
        swapped = list(word)
        for i in range(1, q + 1):
            if picks >> (i - 1) & 1:
                big, small = n - i + 1, i
                bi, si = swapped.index(big), swapped.index(small)
                swapped[bi], swapped[si] = small, big
        out.add(gamma_i_word(tuple(swapped), p, q))
    return sorted(out)


def t_w(word: Sequence[int], p: int, q: int) -> list[FlagMatrix]:
    """The coordinate flags of the transposition variants: the points where
    the Schubert variety meets the 2^q base cycles."""
    return [FlagMatrix.coordinate_flag(v) for v in perm_w(word, p, q)]


def enumerate_for_orbit(alpha: str, p: int, q: int,
                        ) -> list[tuple[Word, FlagMatrix]]:
    """Complementary-dimension Schubert varieties meeting the complete-flag
    orbit of the sign sequence, each with its single intersection point.

    Pairs (n-i+1, i) consume a minus and a plus slot that are adjacent once
    already-consumed slots are ignored; the intersection point places e_i on
    the minus slot and e_(2q-i+1) on the plus slot; leftovers fill in
    increasing order.

    >>> [w for w, _ in enumerate_for_orbit("+++-", 3, 1)]
    [(2, 3, 4, 1)]
    """
    alpha = parse_sign_sequence(alpha)
    n = p + q
    if len(alpha) != n or alpha.count("-") != q or alpha.count("+") != p:
        raise ValueError(f"sign sequence must have {q} minuses and {p} pluses")

    def admissible(s1: int, s2: int) -> bool:
        return {alpha[s1], alpha[s2]} == {"-", "+"}

    results = []
    for placed in _placements(n, q, tuple(range(n)), admissible):
        word = [0] * n
        evec = [0] * n
        for pos, v in placed.items():
            word[pos] = v
            i = min(v, n - v + 1)
            evec[pos] = i if alpha[pos] == "-" else 2 * q - i + 1
        singles_w = iter(range(q + 1, p + 1))
        singles_e = iter(range(2 * q + 1, n + 1))
        for pos in range(n):
            if word[pos] == 0:
                word[pos] = next(singles_w)
                evec[pos] = next(singles_e)
        results.append((tuple(word), FlagMatrix.coordinate_flag(tuple(evec))))
    return sorted(results, key=lambda pair: pair[0])


def fixed_points_in_cycle_count(p: int, q: int) -> int:
    """Torus-fixed points inside any single base cycle: q! p!.

    >>> fixed_points_in_cycle_count(3, 2)
    12
    """
    return factorial(q) * factorial(p)


# -- partial flags ---------------------------------------------------------------


def generalized_pairing_check(word: Sequence[int], dims: Sequence[int],
                              p: int, q: int) -> bool:
    """Blockwise pairing feasibility: rearrangements inside blocks can move
    n-i+1 left of i exactly when its block is not strictly to the right.

    >>> generalized_pairing_check((3, 4, 1, 5, 6, 2), (1, 1, 3, 1), 4, 2)
    True
    """
    word = check_word(word)
    dims = check_dims(dims)
    n = p + q
    block_of = {}
    start = 0
    for j, d in enumerate(dims):
        for v in word[start:start + d]:
            block_of[v] = j
        start += d
    return all(block_of[n - i + 1] <= block_of[i] for i in range(1, q + 1))


def _ordered_partitions(values: tuple[int, ...], sizes: Sequence[int]):
    if not sizes:
        yield []
        return
    for chosen in combinations(values, sizes[0]):
        rest = tuple(v for v in values if v not in chosen)
        for tail in _ordered_partitions(rest, sizes[1:]):
            yield [chosen] + tail


def enumerate_for_orbit_gp(desc: OrbitDescriptor,
                           ) -> list[tuple[Word, FlagMatrix]]:
    """Schubert varieties of complementary dimension meeting a partial-flag
    orbit, each with its single intersection point.

    Per block j, some min(a_j, b_j) of the innermost pairs land entirely
    inside the block: their small letters on the block's first minus slots
    and their big letters on its last plus slots, indices increasing.  The
    remaining pairs and the singles run through the complete-flag placement
    algorithm on the leftover sign word.

    >>> desc = OrbitDescriptor(7, 4, (3, 1), (2, 5))
    >>> [len(enumerate_for_orbit_gp(desc)[0][0]), len(enumerate_for_orbit_gp(desc))]
    [11, 3]
    """
    dims = desc.dims
    deltas = prefix_sums(dims)
    n = desc.n
    p, q = desc.p, desc.q
    alpha = sign_sequence_of(desc)
    fs = desc.f
    total_f = sum(fs)

    block_minus_slots = []
    block_plus_slots = []
    start = 0
    for j, d in enumerate(dims):
        slots = list(range(start, start + d))
        minus = [s for s in slots if alpha[s] == "-"]
        plus = [s for s in slots if alpha[s] == "+"]
        block_minus_slots.append(minus[: fs[j]])
        block_plus_slots.append(plus[len(plus) - fs[j]:])
        start += d

    collected: dict[Word, FlagMatrix] = {}
    for assignment in _ordered_partitions(tuple(range(1, total_f + 1)), fs):
        word = [0] * n
        evec = [0] * n
        for j, chosen in enumerate(assignment):
            smalls = sorted(chosen)
            bigs = sorted(n - i + 1 for i in chosen)
            e_minus = sorted(i for i in chosen)
            e_plus = sorted(2 * q - i + 1 for i in chosen)
            for slot, v, e in zip(block_minus_slots[j], smalls, e_minus):
                word[slot] = v
                evec[slot] = e
            for slot, v, e in zip(block_plus_slots[j], bigs, e_plus):
                word[slot] = v
                evec[slot] = e
        free = tuple(s for s in range(n) if word[s] == 0)

        def admissible(s1: int, s2: int) -> bool:
            return {alpha[s1], alpha[s2]} == {"-", "+"}

        for placed in _placements(n, q, free, admissible, skip=total_f):
            w = list(word)
            e = list(evec)
            for pos, v in placed.items():
                w[pos] = v
                i = min(v, n - v + 1)
                e[pos] = i if alpha[pos] == "-" else 2 * q - i + 1
            singles_w = iter(range(q + 1, p + 1))
            singles_e = iter(range(2 * q + 1, n + 1))
            for pos in range(n):
                if w[pos] == 0:
                    w[pos] = next(singles_w)
                    e[pos] = next(singles_e)
            rep = minimal_coset_representative(tuple(w), dims)
            flag = FlagMatrix.coordinate_flag(tuple(e), deltas)
            if rep in collected:
                if collected[rep].canonical_key() != flag.canonical_key():
                    raise AssertionError(
                        f"conflicting intersection points for {rep}")
            else:
                collected[rep] = flag
    return sorted(collected.items(), key=lambda pair: pair[0])


def canonical_rearrangement_su(word: Sequence[int], desc: OrbitDescriptor) -> Word:
    """Lift of a partial-flag word to a strictly pairing complete-flag word:
    inside each block the small pair letters move, in increasing order, past
    the block's largest big letter (i.e. to the block's end).

    The small letters of block j are exactly its values <= sum of the pair
    capacities; the lift loses sum a_i b_i in length when sorted back.
    """
    word = check_word(word)
    dims = desc.dims
    total_f = sum(desc.f)
    out: list[int] = []
    start = 0
    for j, d in enumerate(dims):
        block = sorted(word[start:start + d])
        smalls = [v for v in block if v <= total_f]
        if len(smalls) != desc.f[j]:
            raise ValueError(
                f"block {j} does not carry {desc.f[j]} paired small letters")
        rest = [v for v in block if v > total_f]
        out.extend(rest + smalls)
        start += d
    return tuple(out)


def canonical_lifting(desc: OrbitDescriptor) -> str:
    """Complete-flag sign sequence over the canonical pattern with each
    block's first min(a,b) minuses moved to the block's end.

    >>> canonical_lifting(OrbitDescriptor(7, 4, (3, 1), (2, 5)))
    '-++--+++++-'
    """
    out = []
    for x, y in zip(desc.a, desc.b):
        f = min(x, y)
        majority = "-" * (x - y) if x > y else "+" * (y - x)
        out.append(majority + "+" * f + "-" * f)
    return "".join(out)
