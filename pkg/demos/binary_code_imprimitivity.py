#!/usr/bin/env python3
"""Binary codes {x, y}: unique decoding and the rare imprimitive expansions.

A product of x's and y's is almost always primitive.  The exceptions are
tightly constrained: the cross set x y^n / x^n y holds at most one, and
the code-primitive exceptions form a single centered family.

Run: python demos/binary_code_imprimitivity.py
"""

from wordeq import (
    BinaryCode,
    classify_x_power,
    decode,
    imprimitive_in_cross_set,
    x_primitive_imprimitive_set,
)

print("== unique decoding ==")
code = BinaryCode("ab", "a")
for w in ["abaab", "aabab", "b", ""]:
    got = decode(w, code)
    print(f"  {w!r:8} -> {got.letters if got else None}")

print()
print("== at most one imprimitive word in the cross set ==")
for x, y in [("aba", "baab"), ("a", "ab"), ("ab", "ba")]:
    hits = imprimitive_in_cross_set(BinaryCode(x, y), max_exp=6)
    shown = [(c.letters, c.expansion) for c in hits]
    print(f"  x={x!r} y={y!r}: {shown or 'none'}")

print()
print("== the centered family of code-primitive squares ==")
code = BinaryCode("aba", "baab")
family = x_primitive_imprimitive_set(code, max_code_len=4)
print(f"  x={code.x!r} y={code.y!r}: shape={family.shape} k={family.k}")
for member in family.members:
    shape = classify_x_power(member, 2)
    print(f"    {member.letters}  expands to ({member.expansion[:5]!r})^2"
          f"  shape {shape.repeated}^{shape.k} {('y' if shape.repeated == 'x' else 'x')} "
          f"{shape.repeated}^{shape.ell}")

print()
print("== codes with no exceptional words at all ==")
for x, y in [("a", "b"), ("ab", "a")]:
    family = x_primitive_imprimitive_set(BinaryCode(x, y), max_code_len=5)
    print(f"  x={x!r} y={y!r}: {family.shape}")
