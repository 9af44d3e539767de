"""Positive monoid presentations: data model, classification, parsing, fixtures.

A presentation is an alphabet of named generators plus a set of unordered
relations between non-empty positive words over that alphabet.  Words are
plain tuples of letter names; the empty tuple is the identity.  Instances are
immutable, and the derived classification flags are computed lazily and
cached, so presentations can be shared freely between threads.

The line-oriented file format::

    # comment lines and blank lines are ignored
    generators: a b c d e f        (exactly once, first)
    cyclic: a b f                  (equates all rotations of the product)
    relation: ad = da              (n-way chains allowed: w1 = w2 = w3)

A word in a relation is either dot-separated tokens (``s.t1.t2``) or, when
every generator name is a single character, plain concatenation (``abf``).
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field, replace
from functools import cached_property
from collections import Counter
from typing import Sequence

from .errors import ParseError

Word = tuple[str, ...]
EMPTY_WORD: Word = ()

_LETTER_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def check_letter(name: str) -> str:
    if not _LETTER_RE.match(name):
        raise ValueError(f"bad letter name {name!r}: use [A-Za-z0-9_], no '.', no '~'")
    return name


@dataclass(frozen=True, order=True)
class Relation:
    """An unordered pair of non-empty positive words declared equal.

    The two sides are stored in a normalized order so that Relation(u, v)
    and Relation(v, u) compare equal; sides may be identical (such pairs are
    dropped at Presentation construction).
    """

    lhs: Word
    rhs: Word

    def __post_init__(self):
        lhs, rhs = tuple(self.lhs), tuple(self.rhs)
        if not lhs or not rhs:
            raise ValueError("relation sides must be non-empty")
        if (len(rhs), rhs) < (len(lhs), lhs):
            lhs, rhs = rhs, lhs
        object.__setattr__(self, "lhs", lhs)
        object.__setattr__(self, "rhs", rhs)

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def letters(self) -> set[str]:
        return set(self.lhs) | set(self.rhs)


@dataclass(frozen=True)
class Presentation:
    """A finite alphabet with relations, plus derived classification flags.

    ``cancellative`` is bookkeeping, not derived data: True means proven
    cancellative (the built g(m,n) family), False means known not to be, None
    means unknown.  It is excluded from equality.
    """

    letters: tuple[str, ...]
    relations: tuple[Relation, ...]
    cancellative: bool | None = field(default=None, compare=False)

    def __post_init__(self):
        letters = tuple(check_letter(x) for x in self.letters)
        if len(set(letters)) != len(letters):
            raise ValueError("duplicate generator names")
        alphabet = set(letters)
        kept = sorted({r for r in self.relations if not r.trivial})
        for r in kept:
            unknown = r.letters() - alphabet
            if unknown:
                raise ValueError(f"relation uses unknown letters {sorted(unknown)}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "relations", tuple(kept))

    @cached_property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.letters)}

    def word_key(self, w: Word) -> tuple[int, ...]:
        """Sort key ordering words by alphabet declaration order."""
        idx = self.index
        return tuple(idx[x] for x in w)

    @cached_property
    def homogeneous(self) -> bool:
        return all(len(r.lhs) == len(r.rhs) for r in self.relations)

    @cached_property
    def letter_balanced(self) -> bool:
        return all(Counter(r.lhs) == Counter(r.rhs) for r in self.relations)

    @cached_property
    def dummy_letters(self) -> frozenset[str]:
        # g is dummy when some relation equates the one-letter word g to a
        # word not containing g.
        out = set()
        for r in self.relations:
            for one, other in ((r.lhs, r.rhs), (r.rhs, r.lhs)):
                if len(one) == 1 and one[0] not in other:
                    out.add(one[0])
        return frozenset(out)


@dataclass(frozen=True)
class Classification:
    homogeneous: bool
    letter_balanced: bool
    dummy_letters: frozenset[str]


def classify(p: Presentation) -> Classification:
    """Classification flags of a presentation (always succeeds)."""
    return Classification(p.homogeneous, p.letter_balanced, p.dummy_letters)


def expand_cyclic(letters: Sequence[str]) -> tuple[Relation, ...]:
    """Relations equating all k rotations of the product of ``letters``.

    Returns exactly k-1 pairs, each equating the j-th left rotation to the
    unrotated product.  Repeated letters may produce duplicate or trivial
    pairs; Presentation construction cleans those up.
    """
    word = tuple(letters)
    k = len(word)
    if k < 2:
        raise ValueError("cyclic relation needs at least two letters")
    return tuple(Relation(word, word[j:] + word[:j]) for j in range(1, k))


# ---------------------------------------------------------------------------
# word and file syntax


def _tokenize_word(text: str, letters: Sequence[str]) -> Word:
    text = text.strip()
    if not text:
        return EMPTY_WORD
    if "." in text:
        toks = [t for t in text.split(".") if t]
    elif all(len(x) == 1 for x in letters):
        toks = list(text)
    else:
        toks = [text]
    alphabet = set(letters)
    for t in toks:
        if t not in alphabet:
            raise ParseError(f"unknown letter {t!r}")
    return tuple(toks)


def parse_word(p: Presentation, text: str) -> Word:
    """Parse a word over ``p``'s alphabet.

    ``1`` denotes the empty word (unless a generator is literally named "1").
    """
    text = text.strip()
    if text == "" or (text == "1" and "1" not in p.index):
        return EMPTY_WORD
    return _tokenize_word(text, p.letters)


def format_word(p: Presentation, w: Word) -> str:
    if not w:
        return "1"
    if all(len(x) == 1 for x in p.letters):
        return "".join(w)
    return ".".join(w)


def parse_presentation(text: str) -> Presentation:
    letters: list[str] | None = None
    relations: list[Relation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected '<directive>: ...'", lineno)
        directive = head.strip()
        if directive == "generators":
            if letters is not None:
                raise ParseError("duplicate generators line", lineno)
            toks = rest.split()
            if not toks:
                raise ParseError("empty generator list", lineno)
            try:
                letters = [check_letter(t) for t in toks]
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
            if len(set(letters)) != len(letters):
                raise ParseError("duplicate generator names", lineno)
        elif letters is None:
            raise ParseError("generators must be declared first", lineno)
        elif directive == "cyclic":
            toks = rest.split()
            if len(toks) < 2:
                raise ParseError("cyclic needs at least two letters", lineno)
            try:
                relations.extend(expand_cyclic(_require_known(toks, letters, lineno)))
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
        elif directive == "relation":
            sides = rest.split("=")
            if len(sides) < 2:
                raise ParseError("relation needs at least two sides", lineno)
            words = []
            for s in sides:
                if not s.strip():
                    raise ParseError("empty relation side", lineno)
                try:
                    words.append(_tokenize_word(s, letters))
                except ParseError as e:
                    raise ParseError(str(e), lineno) from None
            for w in words[1:]:
                relations.append(Relation(words[0], w))
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno)
    if letters is None:
        raise ParseError("missing generators line")
    return Presentation(tuple(letters), tuple(relations))


def _require_known(toks: list[str], letters: Sequence[str], lineno: int) -> list[str]:
    alphabet = set(letters)
    for t in toks:
        if t not in alphabet:
            raise ParseError(f"unknown letter {t!r}", lineno)
    return toks


def serialize_presentation(p: Presentation) -> str:
    """Canonical text form; parse(serialize(parse(x))) is stable."""
    lines = [f"generators: {' '.join(p.letters)}"]
    for r in sorted(p.relations, key=lambda r: (p.word_key(r.lhs), p.word_key(r.rhs))):
        lines.append(f"relation: {format_word(p, r.lhs)} = {format_word(p, r.rhs)}")
    return "\n".join(lines) + "\n"


def presentation_digest(p: Presentation) -> str:
    return hashlib.sha256(serialize_presentation(p).encode()).hexdigest()


# ---------------------------------------------------------------------------
# bundled example presentations

_M6_TEXT = """\
generators: a b c d e f
cyclic: a b f
cyclic: a c e
cyclic: d e f
relation: ad = da
relation: cd = dc
relation: bc = cb
relation: bd = db
relation: be = eb
relation: cf = fc
"""

_M6P_TEXT = """\
generators: a b c d e f
cyclic: a b f
cyclic: b c d
cyclic: d e f
relation: ad = da
relation: cf = fc
relation: be = eb
relation: abce = eabc
relation: cdea = acde
"""

_FIXTURES = {
    "M6": _M6_TEXT,
    "M6p": _M6P_TEXT,
    "M6p_completed": _M6P_TEXT + "relation: cefa = efac\n",
}


def fixture(name: str) -> Presentation:
    """One of the bundled six-generator example presentations.

    All three are homogeneous and letter-balanced but not cancellative.
    """
    key = name.replace("-", "_")
    if key not in _FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(_FIXTURES)}")
    return replace(parse_presentation(_FIXTURES[key]), cancellative=False)


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(_FIXTURES))
