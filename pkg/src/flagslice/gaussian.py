"""
Exact arithmetic over the Gaussian rationals Q(i), plus the small amount of
exact linear algebra the geometric membership tests need: rank, determinant,
linear solves, and reduced column-echelon forms of subspaces.

Scalars are `GaussianRational` values (a pair of `fractions.Fraction`).  Rank
is computed fraction-free: denominators are cleared per vector and Bareiss
elimination runs over the Gaussian integers, so intermediate growth stays
determinant-bounded and no rounding ever happens.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class GaussianRational:
    """A complex number re + im*i with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def of(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(value)

    @classmethod
    def from_quad(cls, quad: Sequence[int]) -> "GaussianRational":
        """Build from the wire form [re_num, re_den, im_num, im_den]."""
        a, b, c, d = quad
        return cls(Fraction(a, b), Fraction(c, d))

    def to_quad(self) -> list[int]:
        """Wire form [re_num, re_den, im_num, im_den], lowest terms."""
        return [self.re.numerator, self.re.denominator,
                self.im.numerator, self.im.denominator]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.of(other) - self

    def __mul__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.of(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational((self.re * other.re + self.im * other.im) / norm,
                                (self.im * other.re - self.re * other.im) / norm)

    def __rtruediv__(self, other):
        return GaussianRational.of(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- comparisons and misc ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        if not self.im:
            return f"GQ({self.re})"
        return f"GQ({self.re}, {self.im})"


GQ = GaussianRational
ZERO = GQ(0)
ONE = GQ(1)
I = GQ(0, 1)


def gq_vector(entries: Iterable) -> tuple[GaussianRational, ...]:
    return tuple(GQ.of(e) for e in entries)


# -- fraction-free rank over the Gaussian integers ---------------------------


def _clear_vector(vec: Sequence[GaussianRational]) -> list[tuple[int, int]]:
    """Scale a vector by the lcm of its denominators; return (re, im) int pairs."""
    denoms = [x.re.denominator for x in vec] + [x.im.denominator for x in vec]
    scale = lcm(*denoms) if denoms else 1
    out = []
    for x in vec:
        re = x.re.numerator * (scale // x.re.denominator)
        im = x.im.numerator * (scale // x.im.denominator)
        out.append((re, im))
    return out


def _gi_mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _gi_div_exact(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    # Exact division in Z[i]; Bareiss guarantees divisibility, and a failed
    # guarantee must fail loudly rather than corrupt the elimination.
    a, b = x
    c, d = y
    n = c * c + d * d
    re_q, re_r = divmod(a * c + b * d, n)
    im_q, im_r = divmod(b * c - a * d, n)
    if re_r or im_r:
        raise ArithmeticError("inexact division during fraction-free elimination")
    return (re_q, im_q)


def rank(vectors: Sequence[Sequence[GaussianRational]]) -> int:
    """Exact rank of the matrix whose rows are the given vectors.

    Scaling each vector to Gaussian-integer entries keeps the rank and lets
    Bareiss fraction-free elimination run over Z[i].
    """
    rows = [_clear_vector(v) for v in vectors if any(v)]
    if not rows:
        return 0
    ncols = len(rows[0])
    prev = (1, 0)
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != (0, 0):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        row_r = rows[r]
        for i in range(r + 1, len(rows)):
            row_i = rows[i]
            head = row_i[c]
            if head == (0, 0) and prev == (1, 0) and lead == (1, 0):
                continue
            for j in range(c + 1, ncols):
                a = _gi_mul(lead, row_i[j])
                b = _gi_mul(head, row_r[j])
                row_i[j] = _gi_div_exact((a[0] - b[0], a[1] - b[1]), prev)
            row_i[c] = (0, 0)
        prev = lead
        r += 1
        if r == len(rows):
            break
    return r


def det(columns: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    """Exact determinant of a square matrix given by its columns."""
    n = len(columns)
    if any(len(col) != n for col in columns):
        raise ValueError("determinant requires a square matrix")
    m = [[columns[c][r] for c in range(n)] for r in range(n)]
    result = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        lead = m[c][c]
        result = result * lead
        inv = ONE / lead
        for i in range(c + 1, n):
            factor = m[i][c] * inv
            if factor:
                m[i] = [m[i][j] - factor * m[c][j] for j in range(n)]
    return result


def solve_columns(basis: Sequence[Sequence[GaussianRational]],
                  targets: Sequence[Sequence[GaussianRational]],
                  ) -> list[tuple[GaussianRational, ...]]:
    """Express each target vector in the given basis (both as column lists).

    Returns the coefficient columns, i.e. solves B * X = T exactly.  Raises
    ValueError if the basis is singular.
    """
    n = len(basis)
    if any(len(col) != n for col in basis):
        raise ValueError("basis vectors must have length equal to their count")
    k = len(targets)
    # augmented rows: [B | T]
    aug = [[basis[c][r] for c in range(n)] + [t[r] for t in targets]
           for r in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c]), None)
        if pivot is None:
            raise ValueError("singular basis matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = ONE / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [aug[i][j] - factor * aug[c][j] for j in range(n + k)]
    return [tuple(aug[r][n + t] for r in range(n)) for t in range(k)]


# -- column echelon with lowest-entry pivots ---------------------------------


def _reduce_column(col, pivots):
    """Cancel a column against pivot columns until its lowest nonzero row is free."""
    v = list(col)
    while True:
        row = None
        for r in range(len(v) - 1, -1, -1):
            if v[r]:
                row = r
                break
        if row is None:
            return None, v
        if row not in pivots:
            inv = ONE / v[row]
            return row, [x * inv for x in v]
        pivot_col = pivots[row]
        factor = v[row]
        v = [a - factor * b for a, b in zip(v, pivot_col)]


def pivot_rows(columns: Sequence[Sequence[GaussianRational]]) -> tuple[int, ...]:
    """Rows (0-based) where the span of the columns jumps across the
    coordinate flag, i.e. the lowest-nonzero-entry pivot rows of the column
    echelon form.  The span of k independent columns yields k pivot rows."""
    pivots: dict[int, list[GaussianRational]] = {}
    for col in columns:
        row, v = _reduce_column(col, pivots)
        if row is not None:
            pivots[row] = v
    return tuple(sorted(pivots))


def subspace_canonical(columns: Sequence[Sequence[GaussianRational]],
                       ) -> tuple[tuple[GaussianRational, ...], ...]:
    """Canonical form of the span: fully reduced column echelon, columns
    ordered by pivot row.  Equal spans give equal (hashable) values."""
    pivots: dict[int, list[GaussianRational]] = {}
    for col in columns:
        row, v = _reduce_column(col, pivots)
        if row is not None:
            pivots[row] = v
    for row in sorted(pivots):
        v = pivots[row]
        for other_row, other in pivots.items():
            if other_row != row and other[row]:
                factor = other[row]
                pivots[other_row] = [a - factor * b for a, b in zip(other, v)]
    return tuple(tuple(pivots[row]) for row in sorted(pivots))
