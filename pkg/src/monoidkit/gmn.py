"""The g(m,n) family: one central-ish generator s, two free families t, u.

Generators are s, t1..tm, u1..un with all rotations of s*t1..tm equated, all
rotations of s*u1..un equated, and every t commuting with every u.  The
product delta = s*t1..tm*u1..un is fundamental and the monoid is cancellative,
which makes the family the well-behaved counterpart to the six-generator
fixtures.

This module also houses the combinatorial helpers that the cancellativity
argument runs on: the maximal consecutive-index suffix run of a one-family
word, quotients of delta1/delta2 by such runs, the order-reversing symmetry
that swaps left and right cancellation, and a bounded checker for the six
division laws which together give left cancellativity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .presentation import Presentation, Relation, Word, expand_cyclic
from .rewrite import DEFAULT_CAP, engine


@dataclass(frozen=True)
class GmnContext:
    m: int
    n: int
    presentation: Presentation
    delta1: Word  # s t1..tm
    delta2: Word  # s u1..un
    delta: Word  # s t1..tm u1..un

    @property
    def t_letters(self) -> tuple[str, ...]:
        return self.presentation.letters[1 : self.m + 1]

    @property
    def u_letters(self) -> tuple[str, ...]:
        return self.presentation.letters[self.m + 1 :]

    def family_of(self, letter: str) -> tuple[str, int]:
        """("s", 0), ("t", i) or ("u", j) for a generator name."""
        if letter == "s":
            return ("s", 0)
        fam, idx = letter[0], letter[1:]
        if fam in ("t", "u") and idx.isdigit():
            i = int(idx)
            bound = self.m if fam == "t" else self.n
            if 1 <= i <= bound:
                return (fam, i)
        raise ValueError(f"{letter!r} is not a generator of g({self.m},{self.n})")


@dataclass(frozen=True)
class ConsecutiveWord:
    """The word t_start t_(start+1) .. t_end (family "t") or the u analog."""

    family: str
    start: int
    end: int

    def __post_init__(self):
        if self.family not in ("t", "u"):
            raise ValueError("family must be 't' or 'u'")
        if not 1 <= self.start <= self.end:
            raise ValueError("need 1 <= start <= end")

    def word(self) -> Word:
        return tuple(f"{self.family}{i}" for i in range(self.start, self.end + 1))


def build_gmn(m: int, n: int) -> GmnContext:
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    ts = tuple(f"t{i}" for i in range(1, m + 1))
    us = tuple(f"u{j}" for j in range(1, n + 1))
    letters = ("s",) + ts + us
    relations: list[Relation] = []
    relations.extend(expand_cyclic(("s",) + ts))
    relations.extend(expand_cyclic(("s",) + us))
    for t in ts:
        for u in us:
            relations.append(Relation((t, u), (u, t)))
    p = Presentation(letters, tuple(relations), cancellative=True)
    return GmnContext(
        m=m,
        n=n,
        presentation=p,
        delta1=("s",) + ts,
        delta2=("s",) + us,
        delta=("s",) + ts + us,
    )


# ---------------------------------------------------------------------------
# one-family words and consecutive runs


def _family_indices(ctx: GmnContext, w: Word) -> tuple[str, list[int]]:
    fams = {ctx.family_of(x)[0] for x in w}
    if not fams <= {"t"} and not fams <= {"u"}:
        raise ValueError(f"{w!r} mixes letter families")
    fam = fams.pop() if fams else ""
    return fam, [ctx.family_of(x)[1] for x in w]


def as_consecutive(ctx: GmnContext, w: Word) -> ConsecutiveWord | None:
    """The run t_i t_(i+1) .. t_j equal to ``w`` letter by letter, if any."""
    if not w:
        return None
    fam, idx = _family_indices(ctx, w)
    if all(idx[k + 1] == idx[k] + 1 for k in range(len(idx) - 1)):
        return ConsecutiveWord(fam, idx[0], idx[-1])
    return None


def split_tail_run(ctx: GmnContext, w: Word) -> tuple[Word, Word]:
    """Split a one-family word as rest + maximal consecutive-index suffix run.

    Inside one free family every relation is vacuous, so right divisors are
    literal suffixes and the maximal consecutive divisor is the longest
    suffix whose indices increase by one; for non-empty words it has at least
    the final letter.  Returns ((), ()) for the empty word.
    """
    if not w:
        return (), ()
    _, idx = _family_indices(ctx, w)
    start = len(w) - 1
    while start > 0 and idx[start - 1] + 1 == idx[start]:
        start -= 1
    return w[:start], w[start:]


def tail_run(ctx: GmnContext, w: Word) -> Word:
    return split_tail_run(ctx, w)[1]


def tail_run_complement(ctx: GmnContext, w: Word) -> Word:
    return split_tail_run(ctx, w)[0]


def delta_quotient(ctx: GmnContext, family: int, w: Word) -> Word:
    """The unique q with delta_family = q * w, for w a consecutive run, s, or empty.

    Reading the rotations of s t1..tm: the run t_i..t_j right-divides with
    quotient t_(j+1)..tm s t1..t_(i-1); the letter s with quotient t1..tm.
    """
    if family not in (1, 2):
        raise ValueError("family must be 1 or 2")
    fam_name = "t" if family == 1 else "u"
    size = ctx.m if family == 1 else ctx.n
    full = tuple(f"{fam_name}{i}" for i in range(1, size + 1))
    if not w:
        return ("s",) + full
    if w == ("s",):
        return full
    run = as_consecutive(ctx, w)
    if run is None or run.family != fam_name or run.end > size:
        raise ValueError(f"{w!r} is not a consecutive {fam_name!r}-run, 's', or empty")
    after = tuple(f"{fam_name}{i}" for i in range(run.end + 1, size + 1))
    before = tuple(f"{fam_name}{i}" for i in range(1, run.start))
    return after + ("s",) + before


def in_rm(ctx: GmnContext, w: Word, family: int) -> bool:
    """Membership in the family's words not right-divisible by the full product.

    One-family words are rigid, so right divisibility is a literal suffix
    check against t1..tm (family 1) or u1..un (family 2).  The empty word is
    a member.
    """
    fam_name = "t" if family == 1 else "u"
    fam, _ = _family_indices(ctx, w)
    if w and fam != fam_name:
        raise ValueError(f"{w!r} is not a {fam_name!r}-word")
    size = ctx.m if family == 1 else ctx.n
    full = tuple(f"{fam_name}{i}" for i in range(1, size + 1))
    return w[len(w) - size :] != full


def anti_involution(ctx: GmnContext, w: Word) -> Word:
    """Reverse the word and swap t_i with t_(m+1-i), u_j with u_(n+1-j).

    This maps each defining relation to a defining relation while reversing
    products, so it exchanges left and right divisibility and left and right
    cancellation; applying it twice is the identity.
    """
    out = []
    for x in reversed(w):
        fam, i = ctx.family_of(x)
        if fam == "s":
            out.append("s")
        elif fam == "t":
            out.append(f"t{ctx.m + 1 - i}")
        else:
            out.append(f"u{ctx.n + 1 - i}")
    return tuple(out)


# ---------------------------------------------------------------------------
# bounded verification of the six division laws


@dataclass(frozen=True)
class DivisionLawViolation:
    case: str
    lhs: Word
    rhs: Word


@dataclass(frozen=True)
class DivisionLawReport:
    case: str
    max_len: int
    instances: int
    violations: tuple[DivisionLawViolation, ...]


CASES = ("i", "ii", "iii", "iv", "v", "vi")


def check_division_law(
    ctx: GmnContext, case: str, max_len: int, cap: int = DEFAULT_CAP
) -> DivisionLawReport:
    """Enumerate every instance of one division law up to a total length bound.

    The laws, for equal products of total length at most ``max_len`` (X, Y
    positive words, v any generator, w(t)/w(u) non-empty one-family words,
    Z the asserted witness):

      i    v X = v Y                  implies  X = Y
      ii   t_i X = u_j Y              implies  X = u_j Z and Y = t_i Z
      iii  s X = w(t) Y               implies  X = D1s R(w) Z, Y = D1C(w) Z
      iv   s X = w(u) Y               implies  the u-family mirror of iii
      v    t_i X = w(t) Y, t_i not a  implies  X = w(u) D1t_i R(w) Z and
           left divisor of w(t)                Y = w(u) D1C(w) Z for some
                                               w(u) with no full u1..un suffix
      vi   u_i X = w(u) Y, mirrored

    where D1s, D1t_i, D1C(w) abbreviate quotients of delta1 (delta2 for the
    mirrored cases) by s, t_i and the tail run C(w).  Witness words Z are
    searched through quotient classes, never by blind enumeration.
    """
    if case not in CASES:
        raise ValueError(f"case must be one of {CASES}")
    eng = engine(ctx.presentation)
    handler = {
        "i": _check_case_i,
        "ii": _check_case_ii,
        "iii": lambda c, e, L, cp: _check_case_iii(c, e, L, cp, family=1),
        "iv": lambda c, e, L, cp: _check_case_iii(c, e, L, cp, family=2),
        "v": lambda c, e, L, cp: _check_case_v(c, e, L, cp, family=1),
        "vi": lambda c, e, L, cp: _check_case_v(c, e, L, cp, family=2),
    }[case]
    instances, raw = handler(ctx, eng, max_len, cap)
    violations = tuple(
        DivisionLawViolation(case, eng.decode(a), eng.decode(b)) for a, b in raw
    )
    return DivisionLawReport(case, max_len, instances, violations)


def _fam_chars(ctx: GmnContext, eng, family: int) -> tuple[str, ...]:
    letters = ctx.t_letters if family == 1 else ctx.u_letters
    return tuple(eng.encode((x,)) for x in letters)


def _quot_chars(ctx: GmnContext, eng, family: int, run: str) -> str:
    """delta_quotient on char-encoded runs."""
    return eng.encode(delta_quotient(ctx, family, eng.decode(run)))


def _split_run_chars(chars: tuple[str, ...], w: str) -> tuple[str, str]:
    pos = {c: i for i, c in enumerate(chars)}
    start = len(w) - 1
    while start > 0 and pos[w[start - 1]] + 1 == pos[w[start]]:
        start -= 1
    return w[:start], w[start:]


def _check_case_i(ctx, eng, max_len, cap):
    instances = 0
    violations = []
    for r in range(1, max_len):
        part = eng.partition(r + 1, cap)
        canons = eng.canonicals_at(r, cap)
        if eng.balanced:
            buckets: dict[str, list[str]] = {}
            for c in canons:
                buckets.setdefault("".join(sorted(c)), []).append(c)
            groups = list(buckets.values())
        else:
            groups = [list(canons)]
        for group in groups:
            for i, x in enumerate(group):
                for y in group[i + 1 :]:
                    for v in eng.chars:
                        if part[v + x] == part[v + y]:
                            instances += 1
                            violations.append((v + x, v + y))
    return instances, violations


def _check_case_ii(ctx, eng, max_len, cap):
    t_set = set(_fam_chars(ctx, eng, 1))
    u_set = set(_fam_chars(ctx, eng, 2))
    instances = 0
    violations = []
    for r in range(1, max_len):
        part_r = eng.partition(r, cap)
        for canon in eng.canonicals_at(r + 1, cap):
            cls = eng.closure(canon, cap)
            t_starts: dict[str, set[str]] = {}
            u_starts: dict[str, set[str]] = {}
            for mem in cls:
                c0 = mem[0]
                if c0 in t_set:
                    t_starts.setdefault(c0, set()).add(min(eng.closure(mem[1:], cap)))
                elif c0 in u_set:
                    u_starts.setdefault(c0, set()).add(min(eng.closure(mem[1:], cap)))
            for ti, xs in sorted(t_starts.items()):
                for uj, ys in sorted(u_starts.items()):
                    for x in sorted(xs):
                        zs = {m2[1:] for m2 in eng.closure(x, cap) if m2.startswith(uj)}
                        for y in sorted(ys):
                            instances += 1
                            if not any(part_r[ti + z] == y for z in zs):
                                violations.append((ti + x, uj + y))
    return instances, violations


def _leading_splits(eng, cls, fam_set, cap):
    """Distinct (one-family prefix, canonical rest) splits over a class."""
    out = set()
    for mem in cls:
        k = 0
        while k < len(mem) and mem[k] in fam_set:
            k += 1
        for j in range(1, k + 1):
            out.add((mem[:j], min(eng.closure(mem[j:], cap))))
    return out


def _check_case_iii(ctx, eng, max_len, cap, family):
    s_char = eng.encode(("s",))
    fam = _fam_chars(ctx, eng, family)
    fam_set = set(fam)
    quot_by_s = "".join(fam)  # quotient of delta_family by the letter s
    instances = 0
    violations = []
    for n in range(2, max_len + 1):
        for canon in eng.canonicals_at(n, cap):
            cls = eng.closure(canon, cap)
            xs = {min(eng.closure(mem[1:], cap)) for mem in cls if mem[0] == s_char}
            if not xs:
                continue
            splits = _leading_splits(eng, cls, fam_set, cap)
            if not splits:
                continue
            for x in sorted(xs):
                xcls = eng.closure(x, cap)
                for w, y in sorted(splits):
                    instances += 1
                    rest, run = _split_run_chars(fam, w)
                    p1 = quot_by_s + rest
                    p2 = _quot_chars(ctx, eng, family, run)
                    zs = {m2[len(p1):] for m2 in xcls if m2.startswith(p1)}
                    part_h = eng.partition(n - len(w), cap)
                    if not any(part_h[p2 + z] == y for z in zs):
                        violations.append((s_char + x, w + y))
    return instances, violations


def _check_case_v(ctx, eng, max_len, cap, family):
    fam = _fam_chars(ctx, eng, family)
    other = _fam_chars(ctx, eng, 3 - family)
    fam_set = set(fam)
    full_other = "".join(other)
    size = len(fam)
    instances = 0
    violations = []
    for n in range(2, max_len + 1):
        for canon in eng.canonicals_at(n, cap):
            cls = eng.closure(canon, cap)
            starts: dict[str, set[str]] = {}
            for mem in cls:
                if mem[0] in fam_set:
                    starts.setdefault(mem[0], set()).add(min(eng.closure(mem[1:], cap)))
            if not starts:
                continue
            splits = _leading_splits(eng, cls, fam_set, cap)
            for tc, xs in sorted(starts.items()):
                d1ti = _quot_chars(ctx, eng, family, tc)
                usable = [(w, y) for w, y in sorted(splits) if w[0] != tc]
                for x in sorted(xs):
                    xcls = eng.closure(x, cap)
                    for w, y in usable:
                        instances += 1
                        rest, run = _split_run_chars(fam, w)
                        p2 = _quot_chars(ctx, eng, family, run)
                        part_h = eng.partition(n - len(w), cap)
                        max_ku = (n - 1) - size - len(rest)
                        found = False
                        for ku in range(0, max_ku + 1):
                            for tup in product(other, repeat=ku):
                                wu = "".join(tup)
                                if len(wu) >= len(full_other) and wu.endswith(full_other):
                                    continue
                                p1 = wu + d1ti + rest
                                zs = {
                                    m2[len(p1):] for m2 in xcls if m2.startswith(p1)
                                }
                                if any(part_h[wu + p2 + z] == y for z in zs):
                                    found = True
                                    break
                            if found:
                                break
                        if not found:
                            violations.append((tc + x, w + y))
    return instances, violations
