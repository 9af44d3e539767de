"""Equivalence classes and the monoid word problem by exhaustive rewriting.

Two words are equivalent when one can be turned into the other by repeatedly
substituting one side of a defining relation for the other inside the word.
For a homogeneous (length-preserving) presentation every class is finite, so
the class of a word can be enumerated outright by breadth-first closure and
equality decided by membership.  That brute-force route is the point: the
presentations this package targets are not confluent and admit no completed
rewriting system, so there is no normal form to reduce to.

Internally words are encoded as strings over chr(0..n-1) with character order
matching alphabet declaration order; substring search and slicing then run at
C speed and the lexicographic minimum of a class doubles as its canonical
representative.  Engines cache completed classes per presentation instance;
lookups are pure and inserts idempotent, so concurrent readers are fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import CapExceededError, NonHomogeneousError
from .presentation import Presentation, Word

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class EquivClass:
    """The set of words equivalent to ``seed``.

    ``canonical`` is the lexicographically least member under alphabet
    declaration order.  ``truncated`` means enumeration stopped at a cap and
    ``members`` is only the part discovered so far (in deterministic order).
    """

    seed: Word
    members: frozenset[Word]
    canonical: Word
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: Word) -> bool:
        return w in self.members


class RewriteEngine:
    """Char-encoded rewriting core for one presentation.

    Not part of the public API, but shared by the sibling modules; obtain one
    with :func:`engine`.
    """

    def __init__(self, p: Presentation):
        self.presentation = p
        self.chars = [chr(i) for i in range(len(p.letters))]
        self._to_char = {x: chr(i) for i, x in enumerate(p.letters)}
        self._to_letter = {chr(i): x for i, x in enumerate(p.letters)}
        directed = set()
        for r in p.relations:
            a = "".join(self._to_char[x] for x in r.lhs)
            b = "".join(self._to_char[x] for x in r.rhs)
            directed.add((a, b))
            directed.add((b, a))
        self.rules: tuple[tuple[str, str], ...] = tuple(sorted(directed))
        self.balanced = p.letter_balanced
        self._classes: dict[str, frozenset[str]] = {}
        self._partitions: dict[int, dict[str, str]] = {}

    # -- encoding -----------------------------------------------------------

    def encode(self, w: Word) -> str:
        try:
            return "".join(self._to_char[x] for x in w)
        except KeyError as e:
            raise ValueError(f"letter {e.args[0]!r} not in alphabet") from None

    def decode(self, s: str) -> Word:
        return tuple(self._to_letter[c] for c in s)

    # -- closure ------------------------------------------------------------

    def successors(self, w: str):
        for pat, rep in self.rules:
            i = w.find(pat)
            while i >= 0:
                yield w[:i] + rep + w[i + len(pat):]
                i = w.find(pat, i + 1)

    def closure(self, w: str, cap: int = DEFAULT_CAP) -> frozenset[str]:
        """All words reachable from ``w``; cached once complete."""
        cached = self._classes.get(w)
        if cached is not None:
            return cached
        seen = {w}
        frontier = [w]
        rules = self.rules
        while frontier:
            nxt = []
            for cur in frontier:
                for pat, rep in rules:
                    i = cur.find(pat)
                    while i >= 0:
                        v = cur[:i] + rep + cur[i + len(pat):]
                        if v not in seen:
                            if len(seen) >= cap:
                                err = CapExceededError(
                                    f"class of a {len(w)}-letter word exceeded cap {cap}"
                                )
                                err.raw_partial = frozenset(seen)
                                raise err
                            seen.add(v)
                            nxt.append(v)
                        i = cur.find(pat, i + 1)
            frontier = nxt
        cls = frozenset(seen)
        classes = self._classes
        for m in cls:
            classes[m] = cls
        return cls

    def closure_search(self, start: str, target: str, cap: int = DEFAULT_CAP) -> bool:
        """Is ``target`` reachable from ``start``?  Early exit on success.

        A completed unsuccessful search caches the full class as a side
        effect; a successful one caches nothing (the set is partial).
        """
        if start == target:
            return True
        seen = {start}
        frontier = [start]
        rules = self.rules
        while frontier:
            nxt = []
            for cur in frontier:
                for pat, rep in rules:
                    i = cur.find(pat)
                    while i >= 0:
                        v = cur[:i] + rep + cur[i + len(pat):]
                        if v == target:
                            return True
                        if v not in seen:
                            if len(seen) >= cap:
                                err = CapExceededError(
                                    f"equality search exceeded cap {cap}"
                                )
                                err.raw_partial = frozenset(seen)
                                raise err
                            seen.add(v)
                            nxt.append(v)
                        i = cur.find(pat, i + 1)
            frontier = nxt
        cls = frozenset(seen)
        classes = self._classes
        for m in cls:
            classes[m] = cls
        return False

    def equal_raw(self, a: str, b: str, cap: int = DEFAULT_CAP) -> bool:
        if a == b:
            return True
        if len(a) != len(b):
            return False
        if self.balanced and sorted(a) != sorted(b):
            return False
        ca = self._classes.get(a)
        if ca is not None:
            return b in ca
        cb = self._classes.get(b)
        if cb is not None:
            return a in cb
        return self.closure_search(a, b, cap)

    def canonical_raw(self, w: str, cap: int = DEFAULT_CAP) -> str:
        return min(self.closure(w, cap))

    # -- exhaustive enumeration by length ------------------------------------

    def partition(self, n: int, cap: int = DEFAULT_CAP) -> dict[str, str]:
        """Map every length-n word to its canonical representative."""
        part = self._partitions.get(n)
        if part is not None:
            return part
        part = {}
        for tup in product(self.chars, repeat=n):
            w = "".join(tup)
            if w not in part:
                cls = self.closure(w, cap)
                canon = min(cls)
                for m in cls:
                    part[m] = canon
        self._partitions[n] = part
        return part

    def canonicals_at(self, n: int, cap: int = DEFAULT_CAP) -> tuple[str, ...]:
        return tuple(sorted(set(self.partition(n, cap).values())))


def engine(p: Presentation) -> RewriteEngine:
    """The cached rewriting engine of a presentation instance."""
    eng = p.__dict__.get("_engine")
    if eng is None:
        eng = RewriteEngine(p)
        p.__dict__["_engine"] = eng
    return eng


def _require_homogeneous(p: Presentation) -> None:
    if not p.homogeneous:
        raise NonHomogeneousError(
            "presentation is not length-preserving; classes may be infinite"
        )


# ---------------------------------------------------------------------------
# public operations


def neighbors(w: Word, p: Presentation) -> set[Word]:
    """All words one substitution away from ``w`` (either direction, any spot)."""
    eng = engine(p)
    return {eng.decode(v) for v in eng.successors(eng.encode(w))}


def equivalence_class(w: Word, p: Presentation, cap: int = DEFAULT_CAP) -> EquivClass:
    """Breadth-first closure of {w} under single substitutions.

    Raises CapExceededError carrying the truncated partial class if more than
    ``cap`` members are found.
    """
    _require_homogeneous(p)
    eng = engine(p)
    s = eng.encode(w)
    try:
        cls = eng.closure(s, cap)
    except CapExceededError as e:
        raw = getattr(e, "raw_partial", frozenset())
        members = frozenset(eng.decode(m) for m in raw)
        e.partial = EquivClass(w, members, eng.decode(min(raw)), truncated=True)
        raise
    return EquivClass(w, frozenset(eng.decode(m) for m in cls), eng.decode(min(cls)))


def equal(u: Word, v: Word, p: Presentation, cap: int = DEFAULT_CAP) -> bool:
    """Monoid equality; CapExceededError means undecided, never False."""
    _require_homogeneous(p)
    eng = engine(p)
    return eng.equal_raw(eng.encode(u), eng.encode(v), cap)


def canonical(w: Word, p: Presentation, cap: int = DEFAULT_CAP) -> Word:
    """Lexicographically least member of the class of ``w``."""
    _require_homogeneous(p)
    eng = engine(p)
    return eng.decode(eng.canonical_raw(eng.encode(w), cap))
