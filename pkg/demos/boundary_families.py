#!/usr/bin/env python3
"""The closed-form non-periodic families at the boundary exponents.

Both forcing bounds are tight, witnessed constructively: a family for
j = 2 with i = k + 1, and a family for i = k = 1 with odd j.  Every
parameter choice with non-commuting words yields a valid solution.

Run: python demos/boundary_families.py
"""

from wordeq import family_i1k1, family_j2, is_periodic_solution, validate_family_grid

print("== j = 2, i = k + 1 ==")
for alpha, beta, k in [("a", "b", 1), ("a", "b", 2), ("ab", "ba", 1)]:
    inst = family_j2(alpha, beta, k)
    i, j, kk = inst.exps
    print(f"  alpha={alpha!r} beta={beta!r} k={k}: solves "
          f"x^{i} y^{j} x^{kk} = u^{i} v^{j} u^{kk}")
    print(f"    x={inst.x!r} y={inst.y!r} u={inst.u!r} v={inst.v!r}")
    print(f"    value length {len(inst.lhs())}, periodic={is_periodic_solution(inst)}")

print()
print("== i = k = 1, odd j ==")
for alpha, gamma, j in [("a", "b", 3), ("a", "b", 5), ("ab", "a", 3)]:
    inst = family_i1k1(alpha, gamma, j)
    print(f"  alpha={alpha!r} gamma={gamma!r} j={j}:")
    print(f"    x={inst.x!r} y={inst.y!r} u={inst.u!r} v={inst.v!r}")
    print(f"    value length {len(inst.lhs())}, periodic={is_periodic_solution(inst)}")

print()
print("== grid validation ==")
summary = validate_family_grid(max_param_len=2, max_k=2, max_j=5)
print(f"  {summary.pairs} non-commuting parameter pairs, "
      f"{summary.total} instances built, all valid and non-periodic")
