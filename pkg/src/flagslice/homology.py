"""
Formal homology expansions: a base cycle (or the total cycle, for the
indefinite unitary form) written as coefficient times a sum of Schubert
classes, keyed by minimal representative words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import slmh, slnr, supq
from .permutations import Dims, Word, check_dims, word_text


@dataclass(frozen=True)
class HomologyExpansion:
    """coefficient * sum of the Schubert classes of ``classes``."""

    coefficient: int
    classes: tuple[Word, ...]
    context: tuple[tuple[str, str], ...]

    def __post_init__(self):
        if self.coefficient < 1:
            raise ValueError("coefficient must be positive")
        if len(set(self.classes)) != len(self.classes):
            raise ValueError("classes must be distinct")

    def to_json(self) -> dict:
        return {
            "coefficient": self.coefficient,
            "classes": [word_text(w) for w in self.classes],
            "context": dict(self.context),
        }


def base_cycle_class(form: str, *, n: int | None = None, p: int | None = None,
                     q: int | None = None, dims: Sequence[int] | None = None,
                     orbit: str | None = None) -> HomologyExpansion:
    """Expansion of one base cycle in Schubert classes.

    ``form`` is one of "slnr", "slmh", "supq".  For the first two, ``n``
    fixes the ambient dimension and ``dims`` the flag type (complete flags
    by default).  For "supq" an orbit sign sequence is required, since each
    open orbit carries its own cycle.
    """
    if form == "slnr":
        if n is None:
            raise ValueError("slnr needs n")
        dims = check_dims(dims) if dims is not None else (1,) * n
        if sum(dims) != n:
            raise ValueError("dims must sum to n")
        classes = _slnr_classes(n, dims)
        coeff = slnr.homology_coefficient(dims)
        ctx = (("form", "slnr"), ("n", str(n)), ("dims", _fmt(dims)))
        return HomologyExpansion(coeff, tuple(classes), ctx)
    if form == "slmh":
        if n is None:
            raise ValueError("slmh needs n")
        if n % 2:
            raise ValueError("slmh needs even n")
        dims = check_dims(dims) if dims is not None else (1,) * n
        if sum(dims) != n:
            raise ValueError("dims must sum to n")
        classes = _slmh_classes(n, dims)
        ctx = (("form", "slmh"), ("n", str(n)), ("dims", _fmt(dims)))
        return HomologyExpansion(1, tuple(classes), ctx)
    if form == "supq":
        if p is None or q is None or orbit is None:
            raise ValueError("supq needs p, q and an orbit sign sequence")
        alpha = supq.parse_sign_sequence(orbit)
        dims = check_dims(dims) if dims is not None else (1,) * (p + q)
        if sum(dims) != p + q:
            raise ValueError("dims must sum to p + q")
        if dims == (1,) * (p + q):
            classes = tuple(w for w, _ in supq.enumerate_for_orbit(alpha, p, q))
        else:
            desc = supq.orbit_from_signs(p, q, alpha, dims)
            classes = tuple(w for w, _ in supq.enumerate_for_orbit_gp(desc))
        ctx = (("form", "supq"), ("p", str(p)), ("q", str(q)),
               ("dims", _fmt(dims)), ("orbit", alpha))
        return HomologyExpansion(1, classes, ctx)
    raise ValueError(f"unknown real form {form!r}")


def total_cycle_class_su(p: int, q: int) -> HomologyExpansion:
    """Expansion of the sum of all base cycles over the complete-flag open
    orbits: coefficient 2^q against every strictly pairing word."""
    classes = tuple(supq.enumerate_i_pq(p, q))
    ctx = (("form", "supq"), ("p", str(p)), ("q", str(q)), ("cycle", "total"))
    return HomologyExpansion(2 ** q, classes, ctx)


def _slnr_classes(n: int, dims: Dims) -> list[Word]:
    from .permutations import classify_symmetry

    if dims == (1,) * n:
        return slnr.enumerate_gb(n)
    if classify_symmetry(dims).is_symmetric:
        return slnr.enumerate_measurable(dims)
    return slnr.enumerate_nonmeasurable(dims)


def _slmh_classes(n: int, dims: Dims) -> list[Word]:
    from .permutations import classify_symmetry

    if dims == (1,) * n:
        return slmh.enumerate_gb_h(n // 2)
    if classify_symmetry(dims).is_symmetric:
        return slmh.enumerate_measurable_h(dims)
    return slmh.enumerate_nonmeasurable_h(dims)


def _fmt(dims: Dims) -> str:
    return ",".join(str(d) for d in dims)
