"""Bounded search for cancellation failures, and single completion steps.

A monoid is cancellative when a*x*b = a*y*b forces x = y.  Any failing
context contains a failing single-letter step (peel letters off the context
until the first equality that breaks), so searching products g*x vs g*y and
x*g vs y*g over single letters g is complete for a given total length bound.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import CapExceededError
from .presentation import Presentation, Relation, Word
from .rewrite import DEFAULT_CAP, engine, equal, _require_homogeneous


@dataclass(frozen=True)
class CancellationFailure:
    """Witness: equal(context+x, context+y) but not equal(x, y) (side="left"),
    or the mirror with the context appended (side="right")."""

    side: str
    context: Word
    x: Word
    y: Word


@dataclass(frozen=True)
class ClaimCheck:
    holds: bool
    cancelled_holds: bool


def search_failures(
    p: Presentation, max_len: int, cap: int = DEFAULT_CAP
) -> list[CancellationFailure]:
    """All single-letter cancellation failures with product length <= max_len.

    Pairs (x, y) run over canonical representatives of distinct classes of
    equal length; when the presentation is letter-balanced only pairs with
    matching letter multisets can collide, which prunes the quadratic scan
    drastically.
    """
    _require_homogeneous(p)
    eng = engine(p)
    failures: list[CancellationFailure] = []
    # one context letter per letter class: equal letters cancel identically
    contexts = sorted({min(eng.closure(g, cap)) for g in eng.chars})
    for n in range(1, max_len):
        try:
            part_prod = eng.partition(n + 1, cap)
            canons = eng.canonicals_at(n, cap)
        except CapExceededError as e:
            e.args = (
                f"{e.args[0]}; search covered products up to length {n}",
            )
            raise
        if eng.balanced:
            buckets = defaultdict(list)
            for c in canons:
                buckets["".join(sorted(c))].append(c)
            groups = [b for b in buckets.values() if len(b) > 1]
        else:
            groups = [list(canons)]
        for group in groups:
            for i, x in enumerate(group):
                for y in group[i + 1:]:
                    for g in contexts:
                        if part_prod[g + x] == part_prod[g + y]:
                            failures.append(
                                CancellationFailure(
                                    "left", eng.decode(g), eng.decode(x), eng.decode(y)
                                )
                            )
                        if part_prod[x + g] == part_prod[y + g]:
                            failures.append(
                                CancellationFailure(
                                    "right", eng.decode(g), eng.decode(x), eng.decode(y)
                                )
                            )
    key = p.word_key
    failures.sort(key=lambda f: (len(f.x), f.side, key(f.context), key(f.x), key(f.y)))
    return failures


def verify_claim(
    p: Presentation,
    lhs: Word,
    rhs: Word,
    cancelled_lhs: Word,
    cancelled_rhs: Word,
    cap: int = DEFAULT_CAP,
) -> ClaimCheck:
    """Evaluate a targeted pair of equalities (cheap check for long witnesses)."""
    return ClaimCheck(
        holds=equal(lhs, rhs, p, cap),
        cancelled_holds=equal(cancelled_lhs, cancelled_rhs, p, cap),
    )


def add_relation(p: Presentation, u: Word, v: Word) -> Presentation:
    """A new presentation with u = v appended; flags are recomputed.

    Requires |u| = |v| so homogeneity survives.  Equal words add nothing and
    return an equal presentation.
    """
    if len(u) != len(v):
        raise ValueError(f"relation sides have different lengths {len(u)} and {len(v)}")
    if tuple(u) == tuple(v):
        return Presentation(p.letters, p.relations)
    return Presentation(p.letters, p.relations + (Relation(tuple(u), tuple(v)),))
