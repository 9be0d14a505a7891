"""
Flags as exact matrices over Q(i), the three ambient structures (symmetric
bilinear form, symplectic form, indefinite Hermitian form), and the
rank-based membership tests used as an independent geometric oracle:
conjugation-genericity (open orbits), isotropy (base cycles), signature
conditions, Schubert-cell membership, and randomized cell sampling.

Everything here is exact; no floating point is ever used.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .gaussian import (GQ, I, ONE, ZERO, GaussianRational, det, gq_vector,
                       pivot_rows, rank, solve_columns, subspace_canonical)
from .permutations import Dims, check_word

Vector = tuple[GaussianRational, ...]


@dataclass(frozen=True)
class FlagMatrix:
    """A (partial) flag given by n spanning columns over Q(i).

    ``dims`` lists the cumulative subspace dimensions; the first ``dims[i]``
    columns span the i-th subspace.  Columns are always a basis of the full
    space, so the last entry of ``dims`` is n.
    """

    n: int
    dims: Dims
    columns: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.columns) != self.n or any(len(c) != self.n for c in self.columns):
            raise ValueError("flag needs n independent columns of length n")
        if (not self.dims or self.dims[-1] != self.n
                or any(a >= b for a, b in zip(self.dims, self.dims[1:]))
                or self.dims[0] < 1):
            raise ValueError(f"bad cumulative dimensions {self.dims!r}")
        if rank(self.columns) != self.n:
            raise ValueError("flag columns are linearly dependent")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], dims: Sequence[int] | None = None,
                     ) -> "FlagMatrix":
        cols = tuple(gq_vector(c) for c in columns)
        n = len(cols)
        if dims is None:
            dims = tuple(range(1, n + 1))
        return cls(n, tuple(dims), cols)

    @classmethod
    def coordinate_flag(cls, word: Sequence[int], dims: Sequence[int] | None = None,
                        ) -> "FlagMatrix":
        """The flag spanned by standard basis vectors in the word's order."""
        word = check_word(word)
        n = len(word)
        cols = []
        for v in word:
            col = [ZERO] * n
            col[v - 1] = ONE
            cols.append(tuple(col))
        if dims is None:
            dims = tuple(range(1, n + 1))
        return cls(n, tuple(dims), tuple(cols))

    def prefix(self, size: int) -> tuple[Vector, ...]:
        return self.columns[:size]

    def subspaces(self) -> tuple[tuple[Vector, ...], ...]:
        return tuple(self.columns[:d] for d in self.dims)

    def canonical_key(self):
        """Hashable key identifying the flag (column-span equivalence)."""
        return (self.dims,
                tuple(subspace_canonical(self.columns[:d]) for d in self.dims))

    def same_flag(self, other: "FlagMatrix") -> bool:
        return (self.n == other.n and self.dims == other.dims
                and self.canonical_key() == other.canonical_key())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dims": list(self.dims),
            "columns": [[x.to_quad() for x in col] for col in self.columns],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FlagMatrix":
        cols = tuple(tuple(GaussianRational.from_quad(q) for q in col)
                     for col in data["columns"])
        return cls(data["n"], tuple(data["dims"]), cols)


# -- conjugations -------------------------------------------------------------


def conj_real(vec: Sequence[GaussianRational]) -> Vector:
    """Entrywise complex conjugation."""
    return tuple(x.conjugate() for x in vec)


def conj_quaternion(vec: Sequence[GaussianRational]) -> Vector:
    """The quaternionic structure v -> J conj(v) on C^(2m)."""
    n = len(vec)
    if n % 2:
        raise ValueError("quaternionic structure needs even ambient dimension")
    m = n // 2
    w = [x.conjugate() for x in vec]
    return tuple(w[m:]) + tuple(-x for x in w[:m])


_CONJUGATIONS: dict[str, Callable[[Sequence[GaussianRational]], Vector]] = {
    "real-conjugation": conj_real,
    "quaternion-j": conj_quaternion,
}


def conjugation(name: str) -> Callable[[Sequence[GaussianRational]], Vector]:
    try:
        return _CONJUGATIONS[name]
    except KeyError:
        raise ValueError(f"unknown conjugation {name!r}") from None


# -- forms --------------------------------------------------------------------


@dataclass(frozen=True)
class FormSpec:
    """One of the three ambient structures.

    kind "symmetric-b": b(v,w) = v^t w;
    kind "symplectic-omega": omega(v,w) = v^t J w on C^(2m);
    kind "hermitian-h": h(v,w) = -sum_{i<=q} v_i conj(w_i) + sum_{i>q} v_i conj(w_i).
    """

    kind: str
    p: int = 0
    q: int = 0
    m: int = 0

    def value(self, u: Sequence[GaussianRational], v: Sequence[GaussianRational],
              ) -> GaussianRational:
        if self.kind == "symmetric-b":
            return sum((a * b for a, b in zip(u, v)), ZERO)
        if self.kind == "symplectic-omega":
            m = self.m or len(u) // 2
            total = ZERO
            for i in range(m):
                total = total + u[i] * v[m + i] - u[m + i] * v[i]
            return total
        if self.kind == "hermitian-h":
            total = ZERO
            for i, (a, b) in enumerate(zip(u, v)):
                term = a * b.conjugate()
                total = total - term if i < self.q else total + term
            return total
        raise ValueError(f"unknown form kind {self.kind!r}")


def bilinear_b() -> FormSpec:
    return FormSpec("symmetric-b")


def symplectic_omega(m: int) -> FormSpec:
    return FormSpec("symplectic-omega", m=m)


def hermitian_h(p: int, q: int) -> FormSpec:
    if p < 1 or q < 0:
        raise ValueError("hermitian form needs p >= 1, q >= 0")
    return FormSpec("hermitian-h", p=p, q=q)


# -- membership tests ----------------------------------------------------------


def is_tau_generic(flag: FlagMatrix, conj: str = "real-conjugation") -> bool:
    """Minimal intersection with the conjugated flag at every pair of levels.

    dim(V_i ∩ conj(V_j)) must equal max(0, d_i + d_j - n) for all i, j; this
    characterizes the open orbit(s).
    """
    cmap = conjugation(conj)
    n = flag.n
    conj_cols = tuple(cmap(c) for c in flag.columns)
    for di in flag.dims:
        for dj in flag.dims:
            need = min(n, di + dj)
            if rank(flag.columns[:di] + conj_cols[:dj]) != need:
                return False
    return True


def tau_generic_full_flag(flag: FlagMatrix, conj: str = "real-conjugation") -> bool:
    """Fast genericity test for complete flags: conj(V_j) + V_(n-j) = C^n for
    j <= n/2 suffices, which needs only floor(n/2) rank computations."""
    if flag.dims != tuple(range(1, flag.n + 1)):
        return is_tau_generic(flag, conj)
    cmap = conjugation(conj)
    n = flag.n
    conj_cols = tuple(cmap(c) for c in flag.columns)
    for j in range(1, n // 2 + 1):
        if rank(conj_cols[:j] + flag.columns[: n - j]) != n:
            return False
    return True


def is_isotropic_flag(flag: FlagMatrix, form: FormSpec) -> bool:
    """Maximal intersection with perpendicular complements at every level
    pair: dim(V_i ∩ V_j^perp) = min(d_i, n - d_j).  Characterizes the base
    cycle inside the relevant open orbit."""
    n = flag.n
    # dim(V_i ∩ V_j^perp) = d_i - rank of the form-evaluation matrix
    # [form(u, v)]_{u in basis(V_j), v in basis(V_i)}.
    gram = [[form.value(u, v) for v in flag.columns] for u in flag.columns]
    for di in flag.dims:
        for dj in flag.dims:
            sub = [row[:di] for row in gram[:dj]]
            if di - rank(sub) != min(di, n - dj):
                return False
    return True


def signature(vectors: Sequence[Sequence[GaussianRational]], p: int, q: int,
              ) -> tuple[int, int, int]:
    """Exact inertia (neg, pos, null) of the Hermitian form restricted to the
    span, via rational congruence diagonalization."""
    form = hermitian_h(p, q)
    basis = [list(gq_vector(v)) for v in vectors]
    k = len(basis)
    gram = [[form.value(basis[a], basis[b]) for b in range(k)] for a in range(k)]
    neg = pos = 0
    active = list(range(k))
    while active:
        pivot = next((a for a in active if gram[a][a]), None)
        if pivot is None:
            hot = None
            for a in active:
                for b in active:
                    if a != b and gram[a][b]:
                        hot = (a, b)
                        break
                if hot:
                    break
            if hot is None:
                break  # remaining vectors are totally null
            a, b = hot
            # mix v_a += c v_b so the diagonal entry becomes 2|gram[a][b]|^2 > 0
            c = gram[a][b].conjugate()
            for r in range(k):
                gram[a][r] = gram[a][r] + c.conjugate() * gram[b][r]
            for r in range(k):
                gram[r][a] = gram[r][a] + c * gram[r][b]
            continue
        d = gram[pivot][pivot]
        assert d.is_real()
        if d.re > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        for a in list(active):
            factor = gram[pivot][a] / d
            if factor:
                for r in range(k):
                    gram[a][r] = gram[a][r] - factor.conjugate() * gram[pivot][r]
                for r in range(k):
                    gram[r][a] = gram[r][a] - factor * gram[r][pivot]
    null = k - neg - pos
    return (neg, pos, null)


def in_open_orbit_su(flag: FlagMatrix, a: Sequence[int], b: Sequence[int]) -> bool:
    """Every subspace nondegenerate with the prescribed cumulative signature."""
    p, q = sum(b), sum(a)
    acc_a = acc_b = 0
    for i, d in enumerate(flag.dims):
        acc_a += a[i] if i < len(a) else 0
        acc_b += b[i] if i < len(b) else 0
        if signature(flag.prefix(d), p, q) != (acc_a, acc_b, 0):
            return False
    return True


def in_base_cycle_su(flag: FlagMatrix, a: Sequence[int], b: Sequence[int]) -> bool:
    """Exact intersection dimensions with the coordinate splitting
    E^- = <e_1..e_q>, E^+ = <e_(q+1)..e_n>."""
    p, q = sum(b), sum(a)
    acc_a = acc_b = 0
    for i, d in enumerate(flag.dims):
        acc_a += a[i] if i < len(a) else 0
        acc_b += b[i] if i < len(b) else 0
        cols = flag.prefix(d)
        # dim(V ∩ E^-) = d - rank of the rows q+1..n of the column matrix
        plus_rows = [tuple(col[q:]) for col in cols]
        minus_rows = [tuple(col[:q]) for col in cols]
        if d - rank(plus_rows) != acc_a:
            return False
        if d - rank(minus_rows) != acc_b:
            return False
    return True


def orbit_label_su(flag: FlagMatrix, p: int, q: int) -> str | None:
    """Sign sequence of the open orbit containing a complete flag, or None if
    some subspace is degenerate for the Hermitian form."""
    labels = []
    prev = (0, 0)
    for d in flag.dims:
        neg, pos, null = signature(flag.prefix(d), p, q)
        if null:
            return None
        gained_neg, gained_pos = neg - prev[0], pos - prev[1]
        labels.extend(["-"] * gained_neg + ["+"] * gained_pos)
        prev = (neg, pos)
    return "".join(labels)


def is_maximally_isotropic(flag: FlagMatrix, p: int, q: int) -> bool:
    """V_i ⊆ V_i^perp for i <= q and V_(p+i) = V_(q-i)^perp: the closed orbit
    condition for a complete flag."""
    if flag.dims != tuple(range(1, flag.n + 1)):
        raise ValueError("maximal isotropy is a complete-flag condition")
    form = hermitian_h(p, q)
    cols = flag.columns
    # total isotropy of V_q covers V_i ⊆ V_i^perp for all i <= q
    for a in range(q):
        for b in range(q):
            if form.value(cols[a], cols[b]):
                return False
    # V_(p+i) = V_(q-i)^perp: dimensions match, so containment suffices
    for i in range(1, q):
        for a in range(q - i):
            for b in range(p + i):
                if form.value(cols[a], cols[b]):
                    return False
    return True


def schubert_cell_membership(flag: FlagMatrix, word: Sequence[int],
                             reference: FlagMatrix) -> bool:
    """True iff the flag lies in the Schubert cell of the word's coset with
    respect to the reference complete flag.

    The test expresses the flag in reference coordinates and compares the
    pivot-row sets of every prefix against the word's prefixes: V is in the
    cell iff dim(V_i ∩ F_j) jumps exactly at the rows the word prescribes.
    """
    word = check_word(word)
    if reference.dims != tuple(range(1, reference.n + 1)):
        raise ValueError("reference must be a complete flag")
    if flag.n != reference.n or len(word) != flag.n:
        raise ValueError("ambient dimensions disagree")
    coords = solve_columns(reference.columns, flag.columns)
    for d in flag.dims:
        expected = set(v - 1 for v in word[:d])
        if set(pivot_rows(coords[:d])) != expected:
            return False
    return True


def random_cell_sample(word: Sequence[int], reference: FlagMatrix, seed: int,
                       dims: Sequence[int] | None = None) -> FlagMatrix:
    """A pseudo-random point of the Schubert cell of ``word`` relative to the
    reference flag, deterministic per seed.

    Free entries of the canonical cell matrix are filled with complex
    rationals whose numerators and denominators are bounded by 100.
    """
    word = check_word(word)
    n = len(word)
    rng = random.Random(seed)

    def draw() -> GaussianRational:
        return GQ(Fraction(rng.randint(-100, 100), rng.randint(1, 100)),
                  Fraction(rng.randint(-100, 100), rng.randint(1, 100)))

    cols = []
    for i, v in enumerate(word):
        taken = set(word[:i])
        col = [ZERO] * n
        col[v - 1] = ONE
        for row in range(1, v):
            if row not in taken:
                col[row - 1] = draw()
        cols.append(tuple(col))
    # rotate into actual coordinates through the reference basis
    actual = []
    for col in cols:
        vec = [ZERO] * n
        for coeff, ref_col in zip(col, reference.columns):
            if coeff:
                vec = [acc + coeff * entry for acc, entry in zip(vec, ref_col)]
        actual.append(tuple(vec))
    if dims is None:
        dims = tuple(range(1, n + 1))
    return FlagMatrix(n, tuple(dims), tuple(actual))


def orientation_class(flag: FlagMatrix) -> int:
    """Orientation (+1 or -1) of a conjugation-generic flag in even ambient
    dimension: the sign of det[v_1..v_m | conj(v_1)..conj(v_m)] / i^m, which
    is a nonzero real number exactly on the generic locus."""
    n = flag.n
    if n % 2:
        raise ValueError("orientation requires even ambient dimension")
    m = n // 2
    if m not in flag.dims:
        raise ValueError("orientation needs the middle subspace in the flag")
    half = flag.prefix(m)
    value = det(half + tuple(conj_real(c) for c in half))
    for _ in range(m):
        value = value / I
    if not value.is_real() or not value:
        raise ValueError("orientation undefined: flag is not generic at the middle level")
    return 1 if value.re > 0 else -1


# -- reference flags -----------------------------------------------------------


def standard_reference(n: int) -> FlagMatrix:
    """The coordinate flag e_1 ⊂ <e_1,e_2> ⊂ ...: reference for SL(n,R)."""
    return FlagMatrix.coordinate_flag(tuple(range(1, n + 1)))


def iwasawa_reference_h(m: int) -> FlagMatrix:
    """Ordered basis (e_1, j(e_1), e_2, j(e_2), ..., e_m, j(e_m)) with
    j(e_i) = -e_(m+i): the quaternionic reference flag on C^(2m)."""
    n = 2 * m
    cols = []
    for i in range(1, m + 1):
        e = [ZERO] * n
        e[i - 1] = ONE
        cols.append(tuple(e))
        je = [ZERO] * n
        je[m + i - 1] = -ONE
        cols.append(tuple(je))
    return FlagMatrix(n, tuple(range(1, n + 1)), tuple(cols))


def iwasawa_reference_su(p: int, q: int) -> FlagMatrix:
    """Ordered basis (e_1+e_2q, ..., e_q+e_(q+1), e_(2q+1), ..., e_n,
    e_q-e_(q+1), ..., e_1-e_2q): a maximally isotropic reference flag."""
    if p < q or q < 1:
        raise ValueError("need p >= q >= 1")
    n = p + q
    cols = []
    for i in range(1, q + 1):
        v = [ZERO] * n
        v[i - 1] = ONE
        v[2 * q - i] = ONE
        cols.append(tuple(v))
    for i in range(2 * q + 1, n + 1):
        v = [ZERO] * n
        v[i - 1] = ONE
        cols.append(tuple(v))
    for i in range(q, 0, -1):
        v = [ZERO] * n
        v[i - 1] = ONE
        v[2 * q - i] = -ONE
        cols.append(tuple(v))
    return FlagMatrix(n, tuple(range(1, n + 1)), tuple(cols))
