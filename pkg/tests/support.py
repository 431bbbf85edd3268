"""Shared slow-path oracles for the test suite.

These deliberately avoid the library's optimized code paths so the
fast implementations are checked against independent computations.
"""

from itertools import product


def naive_primitive_root(w: str) -> str:
    """Try every divisor-length prefix by direct repetition."""
    for d in range(1, len(w) + 1):
        if len(w) % d == 0 and w[:d] * (len(w) // d) == w:
            return w[:d]
    raise ValueError("empty word")


def naive_smallest_period(w: str) -> int:
    for p in range(1, len(w) + 1):
        if all(w[t] == w[t + p] for t in range(len(w) - p)):
            return p
    raise ValueError("empty word")


def words_up_to(max_len: int, letters: str = "ab", min_len: int = 1):
    for n in range(min_len, max_len + 1):
        for tup in product(letters, repeat=n):
            yield "".join(tup)


def naive_solutions(exps, alphabet_size: int, max_total_len: int, distinct_only: bool = False):
    """Four independent loops over non-empty words; the slow reference path.

    Unlike the engine, u and v are enumerated freely (only pruned by the
    length budget) and the two sides are compared verbatim.
    """
    i, j, k = exps
    letters = "abcdefghijklmnopqrstuvwxyz"[:alphabet_size]
    sols = set()
    max_side = max_total_len // (i + k)
    for x in words_up_to(max_side, letters):
        y_budget = (max_total_len - (i + k) * len(x)) // j
        for y in words_up_to(y_budget, letters):
            lhs = x * i + y * j + x * k
            for u in words_up_to((len(lhs) - j) // (i + k), letters):
                rem = len(lhs) - (i + k) * len(u)
                if rem % j:
                    continue
                lv = rem // j
                if lv == 0:
                    continue
                for v in words_up_to(lv, letters, min_len=lv):
                    if distinct_only and (u, v) == (x, y):
                        continue
                    if u * i + v * j + u * k == lhs:
                        sols.add((x, y, u, v))
    return sols
