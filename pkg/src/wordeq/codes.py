"""Binary codes {x, y}: decoding, code-letter primitivity, imprimitive expansions.

Two non-commuting words form a code, so every product of x's and y's
has a unique factorization.  Words of the free monoid over the code are
represented by their code-letter sequence, a string over "xy".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .words import are_conjugate, commutes, exponent, is_primitive

CODE_LETTERS = "xy"

SHAPE_EMPTY = "empty"
SHAPE_X_CENTERED = "x-centered"
SHAPE_Y_CENTERED = "y-centered"


@dataclass(frozen=True)
class BinaryCode:
    """An ordered pair of non-commuting words regarded as the code {x, y}."""

    x: str
    y: str

    def __post_init__(self) -> None:
        if not self.x or not self.y:
            raise ValueError("code words must be non-empty")
        if commutes(self.x, self.y):
            raise ValueError(f"{self.x!r} and {self.y!r} commute, not a code")

    def expand(self, letters: str) -> str:
        """Substitute x and y into a code-letter sequence."""
        return "".join(self.x if c == "x" else self.y for c in letters)

    def word(self, letters: str) -> "CodeWord":
        return CodeWord(self, letters)


@dataclass(frozen=True)
class CodeWord:
    """An element of {x, y}* given by its sequence of code letters."""

    code: BinaryCode
    letters: str

    def __post_init__(self) -> None:
        if any(c not in CODE_LETTERS for c in self.letters):
            raise ValueError(f"code letters must be over {CODE_LETTERS!r}")

    @property
    def expansion(self) -> str:
        return self.code.expand(self.letters)

    def code_length(self) -> int:
        return len(self.letters)


def decode(w: str, code: BinaryCode) -> CodeWord | None:
    """Factor w over {x, y}, or None when no factorization exists.

    Backtracking over the two possible prefixes at each position.  Since
    {x, y} is a code the factorization, when it exists, is unique; the
    property suite certifies uniqueness independently.
    """
    x, y = code.x, code.y
    out: list[str] = []

    def walk(pos: int) -> bool:
        if pos == len(w):
            return True
        if w.startswith(x, pos):
            out.append("x")
            if walk(pos + len(x)):
                return True
            out.pop()
        if w.startswith(y, pos):
            out.append("y")
            if walk(pos + len(y)):
                return True
            out.pop()
        return False

    if walk(0):
        return CodeWord(code, "".join(out))
    return None


def count_factorizations(w: str, x: str, y: str) -> int:
    """Number of ways to write w as a product of copies of x and y.

    Plain dynamic program, independent of decode; used to certify that
    non-commuting words admit at most one factorization.
    """
    ways = [0] * (len(w) + 1)
    ways[0] = 1
    for pos in range(1, len(w) + 1):
        if len(x) <= pos and w[pos - len(x):pos] == x:
            ways[pos] += ways[pos - len(x)]
        if y != x and len(y) <= pos and w[pos - len(y):pos] == y:
            ways[pos] += ways[pos - len(y)]
    return ways[len(w)]


def code_words(code: BinaryCode, max_code_len: int, min_code_len: int = 1) -> Iterator[CodeWord]:
    """All code words with code length in the given range, shortest first."""
    for n in range(min_code_len, max_code_len + 1):
        for tup in product(CODE_LETTERS, repeat=n):
            yield CodeWord(code, "".join(tup))


def is_x_primitive(c: CodeWord) -> bool:
    """Primitivity measured in code letters: c is not a proper power inside {x, y}*."""
    if not c.letters:
        raise ValueError("empty code word")
    return is_primitive(c.letters)


def are_x_conjugate(c1: CodeWord, c2: CodeWord) -> bool:
    """Conjugacy via factors from {x, y}*, i.e. rotation of code-letter sequences."""
    return are_conjugate(c1.letters, c2.letters)


def imprimitive_in_cross_set(code: BinaryCode, max_exp: int) -> list[CodeWord]:
    """Members of {x y^n} u {x^n y}, 1 <= n <= max_exp, whose expansion is imprimitive.

    By the Lentin and Schuetzenberger result the whole (unbounded) cross
    set contains at most one imprimitive word, so this list has length
    0 or 1; the property suite asserts that.
    """
    if max_exp < 1:
        raise ValueError("max_exp must be >= 1")
    candidates = {"x" + "y" * n for n in range(1, max_exp + 1)}
    candidates |= {"x" * n + "y" for n in range(1, max_exp + 1)}
    found = []
    for letters in sorted(candidates, key=lambda s: (len(s), s)):
        c = CodeWord(code, letters)
        if not is_primitive(c.expansion):
            found.append(c)
    return found


@dataclass(frozen=True)
class ImprimitiveSet:
    """The code-primitive words beyond x and y whose expansions are proper powers.

    The set is either empty or, for a single k >= 1, consists of exactly
    the k+1 arrangements of one y among k x's (x-centered) or of one x
    among k y's (y-centered).
    """

    shape: str
    k: int | None
    members: tuple[CodeWord, ...]

    def to_json_obj(self) -> dict:
        return {
            "shape": self.shape,
            "k": self.k,
            "members": [c.letters for c in self.members],
        }


def _centered_family(repeated: str, single: str, k: int) -> set[str]:
    return {repeated * i + single + repeated * (k - i) for i in range(k + 1)}


def x_primitive_imprimitive_set(code: BinaryCode, max_code_len: int) -> ImprimitiveSet:
    """Collect and classify the code-primitive imprimitive words up to a code length.

    All members share one code length k+1, so the bounded view either
    sees the complete family or nothing.  A set that matches neither
    centered family would contradict the classification and raises; that
    path is unreachable.
    """
    if max_code_len < 2:
        raise ValueError("max_code_len must be >= 2")
    members = [
        c for c in code_words(code, max_code_len, min_code_len=2)
        if is_x_primitive(c) and not is_primitive(c.expansion)
    ]
    if not members:
        return ImprimitiveSet(SHAPE_EMPTY, None, ())
    k = members[0].code_length() - 1
    found = {c.letters for c in members}
    if found == _centered_family("x", "y", k):
        shape = SHAPE_X_CENTERED
    elif found == _centered_family("y", "x", k):
        shape = SHAPE_Y_CENTERED
    else:
        raise RuntimeError(
            f"imprimitive-set shape violation for x={code.x!r} y={code.y!r}: {sorted(found)}"
        )
    ordered = tuple(sorted(members, key=lambda c: c.letters))
    return ImprimitiveSet(shape, k, ordered)


@dataclass(frozen=True)
class PowerShape:
    """Shape of a code word: `repeated`^k single `repeated`^ell."""

    repeated: str
    k: int
    ell: int


def classify_x_power(c: CodeWord, i: int) -> PowerShape:
    """Shape of a code-primitive word whose expansion is an i-th power.

    Such a word carries exactly one occurrence of one code letter; the
    result names the other, repeated letter and the split around the
    single one.  Raises if c is not code-primitive or its expansion is
    not an i-th power.
    """
    if i < 2:
        raise ValueError("exponent must be >= 2")
    if not c.letters or not is_primitive(c.letters):
        raise ValueError("not an imprimitive X-primitive word")
    if exponent(c.expansion) % i != 0:
        raise ValueError("not an imprimitive X-primitive word")
    if c.letters.count("y") == 1:
        k = c.letters.index("y")
        return PowerShape("x", k, len(c.letters) - k - 1)
    if c.letters.count("x") == 1:
        k = c.letters.index("x")
        return PowerShape("y", k, len(c.letters) - k - 1)
    raise RuntimeError(f"power-shape violation: {c.letters}")
