#!/usr/bin/env python3
"""Partial flags for the split form: symmetric sequences lift block-by-block
to complete flags; asymmetric ones factor through their symmetric model and
a strictly-decreasing-blocks projection."""

from flagslice import slnr
from flagslice.permutations import format_word, inversion_length

print("== measurable case: symmetric dimension sequence (2,1,2,1,2) ==")
dims = (2, 1, 2, 1, 2)
words = slnr.enumerate_measurable(dims)
print(f"{len(words)} varieties; the first few with their complete-flag lifts:")
for word in words[:5]:
    lifted = slnr.canonical_rearrangement(word, dims)
    print(f"  {format_word(word, dims=dims)}  ->  {format_word(lifted)}   "
          f"lengths {inversion_length(word)} -> {inversion_length(lifted)}")
print(f"length drop: {slnr.rearrangement_length_drop(dims)}; "
      f"points per cycle: {slnr.intersection_count_measurable(dims)}")
print()

print("== non-measurable case: (3,3,2) ==")
f = (3, 3, 2)
model = slnr.measurable_model(f)
print(f"symmetric model {model.dhat}, grouping t={model.t}, "
      f"dimension drop {slnr.model_dimension_drop(model)}")
survivors = [w for w in slnr.enumerate_measurable(model.dhat)
             if slnr.strictly_decreasing_blocks_check(w, model)]
print(f"{len(survivors)} of {len(slnr.enumerate_measurable(model.dhat))} model "
      "varieties project (strictly decreasing merged blocks):")
for word in survivors:
    projected = slnr.project_to_coarse(word, model)
    print(f"  {format_word(word, dims=model.dhat)}  ->  {format_word(projected, dims=f)}")
print()

print("== projective spaces ==")
for n in range(2, 7):
    [word] = slnr.enumerate_nonmeasurable((1, n))
    print(f"  P_{n}: single variety {format_word(word, dims=(1, n))}")
