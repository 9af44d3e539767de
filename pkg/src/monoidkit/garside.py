"""Atoms, fundamental elements and Garside elements.

A word D is *fundamental* when some permutation sigma of the atoms satisfies
D = s * D_s = D_s * sigma(s) for every atom s (with D_s the left quotient).
It is a *Garside element* when its left- and right-divisor sets coincide,
are finite, and generate the monoid.  For atomic cancellative monoids the two
notions agree; `cross_check_fundamental_garside` tests that agreement on
concrete words, which is a useful self-check of the whole divisor machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import lcm

from .errors import NotFundamentalError
from .presentation import Presentation, Word
from .rewrite import DEFAULT_CAP, engine, _require_homogeneous


@dataclass(frozen=True)
class FundamentalCertificate:
    """Witness that ``delta`` is fundamental.

    ``quotients[s]`` is a canonical word with delta = s * quotients[s] and
    delta = quotients[s] * sigma[s]; ``order`` is the order of sigma as a
    permutation of the atoms.  When the monoid is not cancellative several
    permutations may fit; ``sigma_count`` reports how many, and sigma is the
    lexicographically first.
    """

    delta: Word
    sigma: dict[str, str]
    quotients: dict[str, Word]
    order: int
    sigma_count: int = 1


@dataclass(frozen=True)
class GarsideReport:
    left_divisors: frozenset[Word]
    right_divisors: frozenset[Word]
    coincide: bool
    generate: bool

    @property
    def is_garside(self) -> bool:
        return self.coincide and self.generate


@dataclass(frozen=True)
class FundamentalGarsideCheck:
    fundamental: bool
    garside: bool

    @property
    def consistent(self) -> bool:
        return self.fundamental == self.garside


def atoms(p: Presentation, cap: int = DEFAULT_CAP) -> frozenset[str]:
    """One representative letter per equivalence class of generators.

    In a homogeneous presentation the only way a generator decomposes is to
    equal another single letter, so the atom classes are exactly the classes
    of letters; the earliest letter in declaration order represents each.
    """
    _require_homogeneous(p)
    eng = engine(p)
    reps: dict[str, str] = {}
    for x in p.letters:
        canon = eng.canonical_raw(eng.encode((x,)), cap)
        reps.setdefault(canon, x)
    return frozenset(reps.values())


def _permutation_order(sigma: dict[str, str]) -> int:
    seen: set[str] = set()
    cycle_lengths = []
    for start in sigma:
        if start in seen:
            continue
        length = 0
        cur = start
        while cur not in seen:
            seen.add(cur)
            cur = sigma[cur]
            length += 1
        cycle_lengths.append(length)
    return lcm(*cycle_lengths) if cycle_lengths else 1


def verify_fundamental(
    delta: Word,
    p: Presentation,
    cap: int = DEFAULT_CAP,
    strict: bool = False,
) -> FundamentalCertificate | None:
    """Check delta = s * D_s = D_s * sigma(s) for a bijection sigma of the atoms.

    Returns the certificate, or None when no such sigma exists (the empty
    word is never fundamental).  With ``strict`` a NotFundamentalError names
    the first obstruction instead.
    """
    _require_homogeneous(p)
    eng = engine(p)
    ats = sorted(atoms(p, cap), key=p.index.__getitem__)
    if not delta:
        if strict:
            raise NotFundamentalError("the empty word is not fundamental")
        return None
    cls = eng.closure(eng.encode(delta), cap)

    # Per atom: every left quotient class, and for each the letters x with
    # quotient * x back in the class of delta.  Candidate pairs feed a
    # bipartite matching that assembles sigma.
    cand: dict[str, dict[str, str]] = {}
    for s in ats:
        c = eng.encode((s,))
        quots = sorted({m[1:] for m in cls if m.startswith(c)})
        if not quots:
            if strict:
                raise NotFundamentalError(f"atom {s!r} does not left-divide", atom=s)
            return None
        options: dict[str, str] = {}
        for q in quots:
            for x in ats:
                if q + eng.encode((x,)) in cls and x not in options:
                    options[x] = q
        if not options:
            if strict:
                raise NotFundamentalError(
                    f"no letter completes a quotient of atom {s!r}", atom=s
                )
            return None
        cand[s] = options

    chosen: dict[str, str] | None = None
    count = 0
    for perm in permutations(ats):
        if all(perm[i] in cand[s] for i, s in enumerate(ats)):
            count += 1
            if chosen is None:
                chosen = {s: perm[i] for i, s in enumerate(ats)}
    if chosen is None:
        if strict:
            raise NotFundamentalError("no atom permutation fits the quotients")
        return None
    quotients = {
        s: eng.decode(eng.canonical_raw(cand[s][chosen[s]], cap)) for s in ats
    }
    return FundamentalCertificate(
        delta=tuple(delta),
        sigma=chosen,
        quotients=quotients,
        order=_permutation_order(chosen),
        sigma_count=count,
    )


def verify_garside(delta: Word, p: Presentation, cap: int = DEFAULT_CAP) -> GarsideReport:
    """Divisor sets of delta from class prefixes and suffixes.

    ``generate`` holds when every atom class appears among the divisors
    (atoms generate the monoid, so that is all generation requires);
    finiteness is automatic for homogeneous presentations.
    """
    _require_homogeneous(p)
    eng = engine(p)
    cls = eng.closure(eng.encode(delta), cap)
    lefts: set[str] = set()
    rights: set[str] = set()
    for m in cls:
        for i in range(len(m) + 1):
            lefts.add(m[:i])
            rights.add(m[i:])
    left_canon = {eng.canonical_raw(w, cap) for w in lefts}
    right_canon = {eng.canonical_raw(w, cap) for w in rights}
    atom_canons = {eng.canonical_raw(eng.encode((s,)), cap) for s in atoms(p, cap)}
    return GarsideReport(
        left_divisors=frozenset(eng.decode(w) for w in left_canon),
        right_divisors=frozenset(eng.decode(w) for w in right_canon),
        coincide=left_canon == right_canon,
        generate=atom_canons <= (left_canon | right_canon),
    )


def cross_check_fundamental_garside(
    delta: Word, p: Presentation, cap: int = DEFAULT_CAP
) -> FundamentalGarsideCheck:
    """Run both characterizations; on a cancellative monoid they must agree."""
    cert = verify_fundamental(delta, p, cap)
    report = verify_garside(delta, p, cap)
    return FundamentalGarsideCheck(fundamental=cert is not None, garside=report.is_garside)
