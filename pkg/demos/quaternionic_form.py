#!/usr/bin/env python3
"""Walkthrough for the quaternionic real form on C^(2m): the m! bijection,
single intersection points in the Iwasawa-adapted basis, and the symplectic
oracle checks."""

from itertools import permutations

from flagslice import slmh
from flagslice.geometry import (is_isotropic_flag, is_tau_generic,
                                iwasawa_reference_h, schubert_cell_membership,
                                symplectic_omega)
from flagslice.permutations import format_word, inversion_length

m = 3
n = 2 * m
print(f"m = {m}: base cycle dimension {slmh.cycle_dimension_gb_h(m)}, "
      f"Schubert dimension {slmh.expected_length_gb_h(m)}")
print()

print(f"the {len(slmh.enumerate_gb_h(m))} varieties (= m!) and their "
      "m-letter shadows:")
for word in slmh.enumerate_gb_h(m):
    shadow = slmh.w_to_sigma_m(word)
    print(f"  {format_word(word)}  <->  {format_word(shadow)}   "
          f"length {inversion_length(word)}")
print()

reference = iwasawa_reference_h(m)
form = symplectic_omega(m)
word = slmh.enumerate_gb_h(m)[0]
point = slmh.intersection_point_h(word)
print(f"single intersection point of {format_word(word)}:")
print(f"  isotropic: {is_isotropic_flag(point, form)}")
print(f"  quaternionically generic: {is_tau_generic(point, 'quaternion-j')}")
print(f"  in the cell (Iwasawa reference): "
      f"{schubert_cell_membership(point, word, reference)}")
print()

print("spacing is weaker than strictly pairing:")
both = sum(1 for w in permutations(range(1, n + 1)) if slmh.spacing_check_h(w))
strict = sum(1 for w in permutations(range(1, n + 1))
             if slmh.strictly_pairing_check_h(w))
print(f"  words passing spacing: {both}; passing strictly pairing: {strict}")
print(f"  witness 325614: spacing={slmh.spacing_check_h((3, 2, 5, 6, 1, 4))}, "
      f"strict={slmh.strictly_pairing_check_h((3, 2, 5, 6, 1, 4))}")
