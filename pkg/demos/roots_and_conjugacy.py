#!/usr/bin/env python3
"""Tour of the word primitives: periods, primitive roots, conjugacy transfer.

Run: python demos/roots_and_conjugacy.py
"""

from wordeq import (
    are_conjugate,
    commutes,
    is_primitive,
    longest_common_prefix,
    periodicity_lemma_check,
    primitive_root,
    smallest_period,
    transfer_decomposition,
)

print("== primitive roots ==")
for w in ["abab", "aabaab", "abaab", "aaaa", "ab"]:
    root = primitive_root(w)
    e = len(w) // len(root)
    tag = "primitive" if is_primitive(w) else f"= {root!r}^{e}"
    print(f"  {w!r:10} root {root!r:8} period {smallest_period(w)}  {tag}")

print()
print("== commutation is sharing a root ==")
for u, v in [("ab", "abab"), ("a", "b"), ("aba", "baab")]:
    print(f"  {u!r} and {v!r}: commute={commutes(u, v)}", end="")
    print(f"  roots {primitive_root(u)!r} / {primitive_root(v)!r}")

print()
print("== conjugacy: rotations of one another ==")
for u, v in [("ab", "ba"), ("aab", "aba"), ("aab", "abb")]:
    print(f"  {u!r} ~ {v!r}: {are_conjugate(u, v)}")

print()
print("== the transfer relation u z = z v ==")
# z drags u onto its conjugate v; the decomposition exposes the seed
for u, z in [("ab", "a"), ("abab", "a"), ("aabaab", "aabaa")]:
    v = (u + z)[len(z):]
    assert u + z == z + v
    d = transfer_decomposition(u, z, v)
    print(f"  u={u!r} z={z!r} v={v!r}")
    print(f"    sigma={d.sigma!r} tau={d.tau!r} ell={d.ell} m={d.m}")
    print(f"    reconstructs: u={(d.sigma + d.tau) * d.m!r} "
          f"z={(d.sigma + d.tau) * d.ell + d.sigma!r} v={(d.tau + d.sigma) * d.m!r}")

print()
print("== periodicity lemma hypothesis at work ==")
# a long enough common factor of two primitive powers forces conjugacy
p, q, w = "ab", "ba", "abab"
print(f"  p={p!r} q={q!r} w={w!r}: hypothesis={periodicity_lemma_check(p, q, w)}, "
      f"conjugate={are_conjugate(p, q)}")
print(f"  lcp('aabaa', 'aabab') = {longest_common_prefix('aabaa', 'aabab')!r}")
