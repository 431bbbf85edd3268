"""Bounded exhaustive solver for x^i y^j x^k = u^i v^j u^k.

Two morphisms g, h on the letters a, b agree on the pattern a^i b^j a^k
exactly when the images (x, y) = (g(a), g(b)) and (u, v) = (h(a), h(b))
satisfy the equation above.  The pattern forces periodicity up to a
length bound when every solution with (x, y) != (u, v) found within the
bound is periodic, i.e. all four images are powers of a single word.

The search enumerates (x, y), builds the common value w = x^i y^j x^k
once, and reads each candidate (u, v) directly out of w: for every
admissible |u| the word u is the forced prefix block and v the forced
middle factor, so the second side is never enumerated freely.  The
candidate space splits into independent shards; reports are identical
for every shard count because results are merged and sorted canonically.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, NamedTuple

from .words import alphabet, primitive_root, words_of_length


class Exponents(NamedTuple):
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class EquationInstance:
    """A candidate quadruple (x, y, u, v) for given exponents."""

    exps: Exponents
    x: str
    y: str
    u: str
    v: str

    def lhs(self) -> str:
        i, j, k = self.exps
        return self.x * i + self.y * j + self.x * k

    def rhs(self) -> str:
        i, j, k = self.exps
        return self.u * i + self.v * j + self.u * k

    def words(self) -> tuple[str, str, str, str]:
        return (self.x, self.y, self.u, self.v)

    def to_json_obj(self) -> dict:
        return {"x": self.x, "y": self.y, "u": self.u, "v": self.v}


def check(inst: EquationInstance) -> bool:
    """Letter-for-letter equality of the two sides."""
    return inst.lhs() == inst.rhs()


def is_periodic_solution(inst: EquationInstance) -> bool:
    """True iff the non-empty words among x, y, u, v share one primitive root."""
    if not check(inst):
        raise ValueError("not a solution")
    roots = {primitive_root(w) for w in inst.words() if w}
    return len(roots) <= 1


def theorem_applies(exps: Exponents) -> bool:
    """Exponent range in which the pattern is known to force periodicity."""
    i, j, k = exps
    return j >= 3 and i + k >= 3 and i >= 1 and k >= 1


def _validate_search_args(exps: Exponents, alphabet_size: int, max_total_len: int) -> None:
    i, j, k = exps
    if i < 0 or j < 0 or k < 0:
        raise ValueError("exponents must be non-negative")
    if j == 0 or i + k == 0:
        raise ValueError("need j >= 1 and i + k >= 1, otherwise one unknown pair is unconstrained")
    if alphabet_size < 2:
        raise ValueError("alphabet_size must be >= 2")
    if max_total_len < i + j + k:
        raise ValueError(f"bound too small: need max_total_len >= {i + j + k}")


def _forced_factorizations(w: str, exps: Exponents, allow_empty: bool) -> Iterator[tuple[str, str]]:
    i, j, k = exps
    n = len(w)
    lo = 0 if allow_empty else 1
    for lu in range(lo, n // (i + k) + 1):
        rem = n - (i + k) * lu
        if rem % j:
            continue
        lv = rem // j
        if lv == 0 and not allow_empty:
            continue
        if i >= 1:
            u = w[:lu]
            v = w[i * lu:i * lu + lv]
        else:
            # i == 0: the left block of w is v^j, u sits after it
            v = w[:lv]
            u = w[j * lv:j * lv + lu]
        if u * i + v * j + u * k == w:
            yield u, v


def _candidate_pairs(
    exps: Exponents, alphabet_size: int, max_total_len: int, allow_empty: bool
) -> Iterator[tuple[str, str]]:
    i, j, k = exps
    letters = alphabet(alphabet_size)
    lo = 0 if allow_empty else 1
    for lx in range(lo, max_total_len // (i + k) + 1):
        budget = max_total_len - (i + k) * lx
        for ly in range(lo, budget // j + 1):
            if lx == 0 and ly == 0:
                continue
            for x in words_of_length(lx, letters):
                for y in words_of_length(ly, letters):
                    yield x, y


def iter_solutions(
    exps: Exponents | tuple[int, int, int],
    alphabet_size: int,
    max_total_len: int,
    *,
    distinct_only: bool = True,
    allow_empty: bool = False,
) -> Iterator[EquationInstance]:
    """Every solution quadruple within the bound, in enumeration order."""
    exps = Exponents(*exps)
    _validate_search_args(exps, alphabet_size, max_total_len)
    i, j, k = exps
    for x, y in _candidate_pairs(exps, alphabet_size, max_total_len, allow_empty):
        w = x * i + y * j + x * k
        for u, v in _forced_factorizations(w, exps, allow_empty):
            if distinct_only and u == x and v == y:
                continue
            yield EquationInstance(exps, x, y, u, v)


def _solve_shard(
    exps: Exponents,
    alphabet_size: int,
    max_total_len: int,
    distinct_only: bool,
    allow_empty: bool,
    shard: int,
    nshards: int,
) -> list[tuple[int, int, str, str, str, str]]:
    i, j, k = exps
    found = []
    for idx, (x, y) in enumerate(_candidate_pairs(exps, alphabet_size, max_total_len, allow_empty)):
        if idx % nshards != shard:
            continue
        w = x * i + y * j + x * k
        for fidx, (u, v) in enumerate(_forced_factorizations(w, exps, allow_empty)):
            if distinct_only and u == x and v == y:
                continue
            found.append((idx, fidx, x, y, u, v))
    return found


def _solve_shard_args(args) -> list[tuple[int, int, str, str, str, str]]:
    return _solve_shard(*args)


def _letter_maps(words: tuple[str, ...], alphabet_size: int) -> Iterator[dict[str, str]]:
    occurring = sorted(set("".join(words)))
    for image in permutations(alphabet(alphabet_size), len(occurring)):
        yield dict(zip(occurring, image))


def orbit_tuples(inst: EquationInstance, alphabet_size: int) -> Iterator[tuple[str, str, str, str]]:
    """All images of (x, y, u, v) under the declared symmetries.

    Symmetries: relabelling the alphabet, swapping the two sides of the
    equation, and, when i == k, mirroring (reversing every word).  The
    mirror of a solution with i != k solves the reversed exponents and
    therefore stays out of this orbit.
    """
    i, _, k = inst.exps
    base = [inst.words(), (inst.u, inst.v, inst.x, inst.y)]
    if i == k:
        base += [tuple(w[::-1] for w in t) for t in base]
    for t in base:
        for mapping in _letter_maps(t, alphabet_size):
            yield tuple("".join(mapping[c] for c in w) for w in t)


def canonical_instance(inst: EquationInstance, alphabet_size: int) -> EquationInstance:
    """Lexicographically least member of the instance's symmetry orbit."""
    return EquationInstance(inst.exps, *min(orbit_tuples(inst, alphabet_size)))


@dataclass(frozen=True)
class SolutionReport:
    """Classified output of the enumeration.

    ``solutions`` holds every raw quadruple in deterministic order;
    ``nonperiodic`` holds one canonical representative per symmetry
    orbit of the non-periodic ones.
    """

    exps: Exponents
    alphabet_size: int
    bound: int
    total_solutions: int
    solutions: tuple[EquationInstance, ...]
    nonperiodic: tuple[EquationInstance, ...]

    @property
    def periodic_only(self) -> bool:
        return not self.nonperiodic

    def to_json_obj(self) -> dict:
        i, j, k = self.exps
        return {
            "i": i,
            "j": j,
            "k": k,
            "alphabet": self.alphabet_size,
            "bound": self.bound,
            "total_solutions": self.total_solutions,
            "periodic_only": self.periodic_only,
            "nonperiodic": [inst.to_json_obj() for inst in self.nonperiodic],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"


def enumerate_solutions(
    exps: Exponents | tuple[int, int, int],
    alphabet_size: int,
    max_total_len: int,
    *,
    distinct_only: bool = True,
    allow_empty: bool = False,
    shards: int = 1,
) -> SolutionReport:
    """Visit every quadruple within the bound and classify the solutions.

    The bound limits the length of the common value x^i y^j x^k.  With
    ``distinct_only`` the trivial solutions (x, y) == (u, v) are skipped.
    ``shards`` only controls parallelism; the report is byte-identical
    for any shard count.
    """
    exps = Exponents(*exps)
    _validate_search_args(exps, alphabet_size, max_total_len)
    nshards = max(1, shards)
    common = (exps, alphabet_size, max_total_len, distinct_only, allow_empty)
    if nshards == 1:
        rows = _solve_shard(*common, 0, 1)
    else:
        argsets = [common + (s, nshards) for s in range(nshards)]
        with ProcessPoolExecutor(max_workers=nshards) as pool:
            rows = [row for chunk in pool.map(_solve_shard_args, argsets) for row in chunk]
        rows.sort(key=lambda r: (r[0], r[1]))
    solutions = tuple(EquationInstance(exps, x, y, u, v) for _, _, x, y, u, v in rows)
    reps: dict[tuple[str, str, str, str], EquationInstance] = {}
    for inst in solutions:
        if not is_periodic_solution(inst):
            rep = canonical_instance(inst, alphabet_size)
            reps[rep.words()] = rep
    nonperiodic = tuple(reps[key] for key in sorted(reps))
    return SolutionReport(exps, alphabet_size, max_total_len, len(solutions), solutions, nonperiodic)


@dataclass(frozen=True)
class ForcingVerdict:
    """Outcome of the bounded periodicity-forcing check for a^i b^j a^k."""

    report: SolutionReport

    @property
    def forced_up_to_bound(self) -> bool:
        return self.report.periodic_only

    @property
    def witnesses(self) -> tuple[EquationInstance, ...]:
        return self.report.nonperiodic

    def to_json_obj(self) -> dict:
        i, j, k = self.report.exps
        return {
            "i": i,
            "j": j,
            "k": k,
            "alphabet": self.report.alphabet_size,
            "bound": self.report.bound,
            "total_solutions": self.report.total_solutions,
            "forced_up_to_bound": self.forced_up_to_bound,
            "witnesses": [inst.to_json_obj() for inst in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"


def forcing_verdict(
    exps: Exponents | tuple[int, int, int],
    alphabet_size: int,
    max_total_len: int,
    *,
    shards: int = 1,
) -> ForcingVerdict:
    """Decide whether a^i b^j a^k forces periodicity within the bound.

    Forced means every pair of morphisms agreeing on the pattern, with
    (x, y) != (u, v), has all images powers of one word.
    """
    report = enumerate_solutions(
        exps, alphabet_size, max_total_len, distinct_only=True, shards=shards
    )
    return ForcingVerdict(report)


def split_even_j(inst: EquationInstance) -> tuple[tuple[str, str], tuple[str, str]] | None:
    """Halve the equation when i == k and j is even; None otherwise.

    Returns the word pairs (x^i y^h, u^i v^h) and (y^h x^i, v^h u^i)
    with h = j // 2.  The instance solves the full equation iff both
    pairs are equal: matching halves have equal length, so the full
    value splits in the middle.
    """
    i, j, k = inst.exps
    if i != k or j % 2:
        return None
    h = j // 2
    first = (inst.x * i + inst.y * h, inst.u * i + inst.v * h)
    second = (inst.y * h + inst.x * i, inst.v * h + inst.u * i)
    return first, second


def conjecture_scan(
    exps: Exponents | tuple[int, int, int],
    alphabet_size: int,
    max_total_len: int,
    *,
    shards: int = 1,
) -> SolutionReport:
    """Scan x^i y^2 x^k = u^i v^2 u^k with |i - k| >= 2 for non-periodic solutions.

    These exponents are conjectured to force periodicity; any
    non-periodic entry in the returned report is a counterexample.
    """
    i, j, k = Exponents(*exps)
    if j != 2 or abs(i - k) < 2 or i == 0 or k == 0:
        raise ValueError("conjecture scan needs j == 2, |i - k| >= 2 and i, k >= 1")
    return enumerate_solutions(
        exps, alphabet_size, max_total_len, distinct_only=True, shards=shards
    )
