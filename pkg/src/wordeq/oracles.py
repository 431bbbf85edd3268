"""Bounded oracles for the classical word-combinatorics lemmas.

Each check enumerates every input within its bound and asserts the
lemma's conclusion verbatim on that range.  The checks are universally
quantified statements, so shrinking a bound can only shrink the case
count, never flip a verdict.  ``run_lemma_suite`` runs all fourteen with
bounds derived from a single size knob whose default reproduces the
documented desk-scale ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .codes import (
    BinaryCode,
    code_words,
    imprimitive_in_cross_set,
    x_primitive_imprimitive_set,
    classify_x_power,
)
from .words import (
    all_words,
    alphabet,
    are_conjugate,
    commutes,
    exponent,
    is_primitive,
    power_factors,
    primitive_root,
    transfer_decomposition,
)

MAX_RECORDED_FAILURES = 3


@dataclass(frozen=True)
class OracleResult:
    name: str
    cases: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "failures": list(self.failures),
        }


class _Recorder:
    def __init__(self) -> None:
        self.cases = 0
        self.failures: list[str] = []

    def record(self, ok: bool, describe: str) -> None:
        self.cases += 1
        if not ok and len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(describe)

    def result(self, name: str) -> OracleResult:
        return OracleResult(name, self.cases, tuple(self.failures))


def _noncommuting_pairs(max_len: int) -> Iterator[tuple[str, str]]:
    letters = alphabet(2)
    for x in all_words(max_len, letters):
        for y in all_words(max_len, letters):
            if not commutes(x, y):
                yield x, y


def check_periodicity_lemma(max_root_len: int = 5) -> OracleResult:
    """Primitive p, q sharing a factor of length |p|+|q|-1 must be conjugate.

    Also checks the two side claims: distinct prefix-comparable
    primitive words never share such a factor, and the bound is sharp,
    i.e. some non-conjugate pair shares a factor of length |p|+|q|-2.
    """
    rec = _Recorder()
    sharp = False
    prims = [w for w in all_words(max_root_len, alphabet(2)) if is_primitive(w)]
    for p in prims:
        for q in prims:
            long_len = len(p) + len(q) - 1
            shared = power_factors(p, long_len) & power_factors(q, long_len)
            if not are_conjugate(p, q):
                rec.record(not shared, f"non-conjugate p={p!r} q={q!r} share a long factor")
                short_len = long_len - 1
                if not sharp and short_len >= 1:
                    if power_factors(p, short_len) & power_factors(q, short_len):
                        sharp = True
            elif p != q and (p.startswith(q) or q.startswith(p)):
                rec.record(not shared, f"prefix-comparable p={p!r} q={q!r} share a long factor")
    rec.record(sharp, "no non-conjugate pair attains a common factor of length |p|+|q|-2")
    return rec.result("periodicity-lemma")


def _code_tails(max_code_len: int) -> list[str]:
    tails = [""]
    for n in range(1, max_code_len):
        tails.extend("".join(t) for t in product("xy", repeat=n))
    return tails


def check_code_prefix_bound(max_xy_total: int = 8, max_code_len: int = 4) -> OracleResult:
    """Expansions starting with different code letters branch before |x|+|y| letters."""
    rec = _Recorder()
    tails = _code_tails(max_code_len)
    for x, y in _noncommuting_pairs(max_xy_total - 1):
        if len(x) + len(y) > max_xy_total:
            continue
        code = BinaryCode(x, y)
        limit = len(x) + len(y)
        heads_x = [code.expand("x" + t) for t in tails]
        heads_y = [code.expand("y" + t) for t in tails]
        for a in heads_x:
            for b in heads_y:
                clash = len(a) >= limit and len(b) >= limit and a[:limit] == b[:limit]
                rec.record(not clash, f"x={x!r} y={y!r}: common prefix reaches {limit}")
    return rec.result("code-prefix-bound")


def check_code_suffix_bound(max_xy_total: int = 8, max_code_len: int = 4) -> OracleResult:
    """Mirror bound: expansions ending with different code letters branch from the right."""
    rec = _Recorder()
    tails = _code_tails(max_code_len)
    for x, y in _noncommuting_pairs(max_xy_total - 1):
        if len(x) + len(y) > max_xy_total:
            continue
        code = BinaryCode(x, y)
        limit = len(x) + len(y)
        ends_x = [code.expand(t + "x") for t in tails]
        ends_y = [code.expand(t + "y") for t in tails]
        for a in ends_x:
            for b in ends_y:
                clash = len(a) >= limit and len(b) >= limit and a[-limit:] == b[-limit:]
                rec.record(not clash, f"x={x!r} y={y!r}: common suffix reaches {limit}")
    return rec.result("code-suffix-bound")


def check_overlap_commutation(max_word_len: int = 10) -> OracleResult:
    """If s = s1 s2 with s1 a suffix of s and s2 a prefix of s, then s1 and s2 commute."""
    rec = _Recorder()
    for s in all_words(max_word_len, alphabet(2)):
        for cut in range(len(s) + 1):
            s1, s2 = s[:cut], s[cut:]
            if s.endswith(s1) and s.startswith(s2):
                rec.record(commutes(s1, s2), f"s={s!r} cut={cut}")
    return rec.result("overlap-commutation")


def check_conjugacy_transfer(max_u_len: int = 5, max_z_len: int = 7) -> OracleResult:
    """Round-trip and canonical-choice invariants of the u z = z v decomposition."""
    rec = _Recorder()
    letters = alphabet(2)
    for u in all_words(max_u_len, letters):
        root = primitive_root(u)
        for z in all_words(max_z_len, letters, min_len=0):
            uz = u + z
            if not uz.startswith(z):
                continue  # no v completes u z = z v
            v = uz[len(z):]
            d = transfer_decomposition(u, z, v)
            seed = d.sigma + d.tau
            ok = (
                d.u == u
                and d.z == z
                and d.v == v
                and d.m >= 1
                and d.ell >= 0
                and is_primitive(seed)
                and seed == root
            )
            if z:
                r = len(z) % len(seed)
                ok = ok and len(d.sigma) == (r if r else len(seed))
            else:
                ok = ok and d.sigma == ""
            rec.record(ok, f"u={u!r} z={z!r}: got {d}")
    return rec.result("conjugacy-transfer")


def check_cross_set(max_word_len: int = 4, max_exp: int = 6) -> OracleResult:
    """The cross set x y^+ u x^+ y holds at most one imprimitive word."""
    rec = _Recorder()
    for x, y in _noncommuting_pairs(max_word_len):
        hits = imprimitive_in_cross_set(BinaryCode(x, y), max_exp)
        rec.record(len(hits) <= 1, f"x={x!r} y={y!r}: {[c.letters for c in hits]}")
    return rec.result("cross-set-imprimitivity")


def check_imprimitive_conjugacy(max_word_len: int = 4, max_code_len: int = 5) -> OracleResult:
    """Code-primitive imprimitive words are code-conjugate to a cross-set word.

    Beyond the code letters themselves, their existence also forces the
    primitive roots of x and y to be non-conjugate.
    """
    rec = _Recorder()
    for x, y in _noncommuting_pairs(max_word_len):
        code = BinaryCode(x, y)
        longer_member = False
        for c in code_words(code, max_code_len):
            if not is_primitive(c.letters) or is_primitive(c.expansion):
                continue
            n = len(c.letters)
            in_cross = are_conjugate(c.letters, "x" * (n - 1) + "y") or are_conjugate(
                c.letters, "y" * (n - 1) + "x"
            )
            rec.record(in_cross, f"x={x!r} y={y!r}: {c.letters} not conjugate into the cross set")
            if n >= 2:
                longer_member = True
        if longer_member:
            roots_apart = not are_conjugate(primitive_root(x), primitive_root(y))
            rec.record(roots_apart, f"x={x!r} y={y!r}: roots conjugate despite a member")
    return rec.result("imprimitive-conjugacy")


def check_imprimitive_set_shape(max_word_len: int = 4, max_code_len: int = 5) -> OracleResult:
    """The collected code-primitive imprimitive set always has a centered shape."""
    rec = _Recorder()
    for x, y in _noncommuting_pairs(max_word_len):
        code = BinaryCode(x, y)
        try:
            result = x_primitive_imprimitive_set(code, max_code_len)
        except RuntimeError as err:
            rec.record(False, str(err))
            continue
        if result.shape == "empty":
            ok = result.k is None and not result.members
        else:
            repeated, single = ("x", "y") if result.shape == "x-centered" else ("y", "x")
            k = result.k or 0
            expected = {repeated * i + single + repeated * (k - i) for i in range(k + 1)}
            ok = k >= 1 and {c.letters for c in result.members} == expected
        rec.record(ok, f"x={x!r} y={y!r}: {result.to_json_obj()}")
    return rec.result("imprimitive-set-shape")


def check_power_shape(max_word_len: int = 4, max_code_len: int = 5) -> OracleResult:
    """A code-primitive word whose expansion is a proper power carries a single odd letter."""
    rec = _Recorder()
    for x, y in _noncommuting_pairs(max_word_len):
        code = BinaryCode(x, y)
        for c in code_words(code, max_code_len):
            if not is_primitive(c.letters) or is_primitive(c.expansion):
                continue
            e = exponent(c.expansion)
            for i in range(2, e + 1):
                if e % i:
                    continue
                shape = classify_x_power(c, i)
                single = "y" if shape.repeated == "x" else "x"
                rebuilt = shape.repeated * shape.k + single + shape.repeated * shape.ell
                rec.record(rebuilt == c.letters, f"x={x!r} y={y!r}: {c.letters} vs {shape}")
    return rec.result("power-shape")


def check_prefix_power_absorption(max_word_len: int = 4, max_exp: int = 3) -> OracleResult:
    """If z is a suffix of v and u v a prefix of z v^i, then u v lies in z root(v)^*."""
    rec = _Recorder()
    for v in all_words(max_word_len, alphabet(2)):
        pv = primitive_root(v)
        for zcut in range(len(v) + 1):
            z = v[zcut:]
            for i in range(1, max_exp + 1):
                base = z + v * i
                for t in range(len(base) - len(v) + 1):
                    if base[t:t + len(v)] != v:
                        continue
                    uv = base[:t + len(v)]
                    rest = uv[len(z):]
                    ok = (
                        uv.startswith(z)
                        and len(rest) % len(pv) == 0
                        and rest == pv * (len(rest) // len(pv))
                    )
                    rec.record(ok, f"v={v!r} z={z!r} i={i} |u|={t}")
    return rec.result("prefix-power-absorption")


def check_short_prefix_absorption(max_word_len: int = 4, max_exp: int = 3) -> OracleResult:
    """If |t| <= |w| and w v is a prefix of t v^i, then w lies in t root(v)^*."""
    rec = _Recorder()
    letters = alphabet(2)
    for v in all_words(max_word_len, letters):
        pv = primitive_root(v)
        for t in all_words(max_word_len, letters, min_len=0):
            for i in range(1, max_exp + 1):
                base = t + v * i
                for pos in range(len(t), len(base) - len(v) + 1):
                    if base[pos:pos + len(v)] != v:
                        continue
                    w = base[:pos]
                    rest = w[len(t):]
                    ok = (
                        w.startswith(t)
                        and len(rest) % len(pv) == 0
                        and rest == pv * (len(rest) // len(pv))
                    )
                    rec.record(ok, f"v={v!r} t={t!r} i={i} |w|={pos}")
    return rec.result("short-prefix-absorption")


def check_straddling_factor_commutation(max_v_len: int = 4, max_exp: int = 3) -> OracleResult:
    """With |u| >= |v|, a u a prefix of v^i and u b a suffix of v^i force a u b to commute with v."""
    rec = _Recorder()
    for v in all_words(max_v_len, alphabet(2)):
        for i in range(1, max_exp + 1):
            s = v * i
            n = len(s)
            for a in range(n + 1):
                for lu in range(len(v), n - a + 1):
                    u = s[a:a + lu]
                    for b in range(n - lu + 1):
                        if s[n - b - lu:n - b] != u:
                            continue
                        rec.record(
                            commutes(s[:a] + u + s[n - b:], v),
                            f"v={v!r} i={i} a={a} |u|={lu} b={b}",
                        )
    return rec.result("straddling-factor-commutation")


def check_aligned_prefix_difference(max_v_len: int = 4, max_exp: int = 3) -> OracleResult:
    """Two prefix occurrences a u, b u in v^i with |u| >= |v| differ by a word commuting with v.

    The shorter front a is then a suffix of the longer front b, and b
    with that suffix removed commutes with v.
    """
    rec = _Recorder()
    for v in all_words(max_v_len, alphabet(2)):
        for i in range(1, max_exp + 1):
            s = v * i
            n = len(s)
            for lu in range(len(v), n + 1):
                spots: dict[str, list[int]] = {}
                for a in range(n - lu + 1):
                    spots.setdefault(s[a:a + lu], []).append(a)
                for positions in spots.values():
                    for ai in positions:
                        for bi in positions:
                            if ai > bi:
                                continue
                            front_a, front_b = s[:ai], s[:bi]
                            ok = front_b.endswith(front_a) and commutes(
                                front_b[:bi - ai], v
                            )
                            rec.record(ok, f"v={v!r} i={i} |u|={lu} a={ai} b={bi}")
    return rec.result("aligned-prefix-difference")


def check_aligned_suffix_difference(max_v_len: int = 4, max_exp: int = 3) -> OracleResult:
    """Mirror statement for suffix occurrences u a, u b of v^i."""
    rec = _Recorder()
    for v in all_words(max_v_len, alphabet(2)):
        for i in range(1, max_exp + 1):
            s = v * i
            n = len(s)
            for lu in range(len(v), n + 1):
                spots: dict[str, list[int]] = {}
                for a in range(n - lu + 1):
                    # tail of length a follows an occurrence of u at n - a - lu
                    spots.setdefault(s[n - a - lu:n - a], []).append(a)
                for positions in spots.values():
                    for ai in positions:
                        for bi in positions:
                            if ai > bi:
                                continue
                            tail_a, tail_b = s[n - ai:], s[n - bi:]
                            ok = tail_b.startswith(tail_a) and commutes(tail_b[ai:], v)
                            rec.record(ok, f"v={v!r} i={i} |u|={lu} a={ai} b={bi}")
    return rec.result("aligned-suffix-difference")


def run_lemma_suite(max_len: int = 6) -> list[OracleResult]:
    """Run every bounded oracle with ranges derived from one size knob.

    The default knob value reproduces the documented desk-scale ranges:
    roots up to 5 letters, code pairs up to 4 letters each, overlap
    words up to 10 letters, cross-set exponents up to 6.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    word_cap = max(1, max_len - 2)
    code_cap = max(2, max_len - 1)
    return [
        check_periodicity_lemma(max_root_len=max(2, max_len - 1)),
        check_code_prefix_bound(max_xy_total=max_len + 2, max_code_len=max(1, max_len - 2)),
        check_code_suffix_bound(max_xy_total=max_len + 2, max_code_len=max(1, max_len - 2)),
        check_overlap_commutation(max_word_len=max(2, 2 * (max_len - 1))),
        check_conjugacy_transfer(max_u_len=max(1, max_len - 1), max_z_len=max_len + 1),
        check_cross_set(max_word_len=word_cap, max_exp=max(1, max_len)),
        check_imprimitive_conjugacy(max_word_len=word_cap, max_code_len=code_cap),
        check_imprimitive_set_shape(max_word_len=word_cap, max_code_len=code_cap),
        check_power_shape(max_word_len=word_cap, max_code_len=code_cap),
        check_prefix_power_absorption(max_word_len=word_cap, max_exp=3),
        check_short_prefix_absorption(max_word_len=word_cap, max_exp=3),
        check_straddling_factor_commutation(max_v_len=word_cap, max_exp=3),
        check_aligned_prefix_difference(max_v_len=word_cap, max_exp=3),
        check_aligned_suffix_difference(max_v_len=word_cap, max_exp=3),
    ]
