#!/usr/bin/env python3
"""Walkthrough for the indefinite unitary form: many open orbits, the
per-orbit placement algorithm, transposition variants, double counting, and
the Grassmannian example."""

from itertools import combinations

from flagslice import supq
from flagslice.geometry import orbit_label_su
from flagslice.permutations import format_word, inversion_length

p, q = 3, 2
n = p + q
print(f"signature ({p},{q}): {supq.open_orbit_count(p, q)} open orbits on "
      f"complete flags; each cycle has dimension "
      f"{supq.cycle_dimension_su((0, 1, 0, 1, 0), (1, 0, 1, 0, 1))}")
print()

print(f"the {supq.count_i_pq(p, q)} varieties meeting some orbit:")
for word in supq.enumerate_i_pq(p, q):
    print(f"  {format_word(word)}   length {inversion_length(word)}")
print()

word = supq.enumerate_i_pq(p, q)[0]
print(f"variety {format_word(word)} meets exactly 2^q = {2 ** q} orbits, "
      "once each, at coordinate flags:")
for variant, flag in zip(supq.perm_w(word, p, q), supq.t_w(word, p, q)):
    print(f"  flag of {format_word(variant)}   orbit {orbit_label_su(flag, p, q)}")
print()

print("per-orbit tallies (sum = 2^q * count):")
total = 0
for minus in combinations(range(n), q):
    alpha = "".join("-" if i in minus else "+" for i in range(n))
    rows = supq.enumerate_for_orbit(alpha, p, q)
    total += len(rows)
    print(f"  {alpha}: {len(rows)}")
print(f"  total {total} = {2 ** q} * {supq.count_i_pq(p, q)}")
print()

print("== Grassmannian of 5-planes in C^11, signature (7,4) ==")
desc = supq.OrbitDescriptor(7, 4, (3, 1), (2, 5))
alpha = supq.sign_sequence_of(desc)
print(f"orbit {supq.format_sign_sequence(alpha, desc.dims)}: "
      f"Schubert dimension {supq.schubert_dimension_su(desc.a, desc.b)}")
for word, _ in supq.enumerate_for_orbit_gp(desc):
    lifted = supq.canonical_rearrangement_su(word, desc)
    print(f"  {format_word(word, dims=desc.dims)}  lifts to  {format_word(lifted)}")
