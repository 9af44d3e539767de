import pytest

import monoidkit as mk
from monoidkit import CancellationFailure

from conftest import W


def test_m6_failure_found(m6):
    fails = mk.search_failures(m6, 5)
    assert CancellationFailure("left", W("c"), W("deaf"), W("eafd")) in fails
    # the two other claim families surface as right-context failures
    assert CancellationFailure("right", W("c"), W("bfea"), W("feab")) in fails
    assert CancellationFailure("right", W("b"), W("cefa"), W("efac")) in fails


def test_g22_and_g32_clean(p22):
    assert mk.search_failures(p22, 5) == []
    assert mk.search_failures(mk.build_gmn(3, 2).presentation, 5) == []


def test_free_monoid_clean(free2):
    assert mk.search_failures(free2, 6) == []


def test_failures_reverify(m6):
    for f in mk.search_failures(m6, 5):
        assert not mk.equal(f.x, f.y, m6)
        if f.side == "left":
            assert mk.equal(f.context + f.x, f.context + f.y, m6)
        else:
            assert mk.equal(f.x + f.context, f.y + f.context, m6)


def test_failures_monotone_in_bound(m6):
    small = set(mk.search_failures(m6, 4))
    large = set(mk.search_failures(m6, 5))
    assert small <= large


def test_search_deterministic(m6):
    twin = mk.fixture("M6")
    assert mk.search_failures(m6, 5) == mk.search_failures(twin, 5)


def test_multi_letter_contexts_imply_letter_failures(m6):
    # whenever a longer context breaks cancellation, peeling its letters off
    # one at a time reaches a first failing step, which has a single-letter
    # context at no greater total length; so the letter search misses nothing
    x, y = W("deaf"), W("eafd")
    for g in m6.letters:
        context = (g, "c")
        assert mk.equal(context + x, context + y, m6)  # congruence
        assert not mk.equal(x, y, m6)
        # peel until the first failure
        depth = len(context)
        while depth > 0 and not mk.equal(context[depth:] + x, context[depth:] + y, m6):
            depth -= 1
        step_context = context[depth:]
        assert len(step_context) == 1
        total = len(step_context) + len(x)
        found = mk.search_failures(m6, total)
        assert CancellationFailure("left", step_context, x, y) in found


def test_verify_claim_m6p(m6p):
    res = mk.verify_claim(m6p, W("dbcefa"), W("dbefac"), W("cefa"), W("efac"))
    assert res.holds and not res.cancelled_holds


@pytest.mark.parametrize("k", [1, 2])
def test_verify_claim_m6p_completed(m6pc, k):
    lhs = W("acd" + "e" * (k + 1) + "abf")
    rhs = W("d" + "e" * k + "aabcef")
    res = mk.verify_claim(m6pc, lhs, rhs, lhs[:-1], rhs[:-1])
    assert res.holds and not res.cancelled_holds


def test_verify_claim_trivial(m6):
    res = mk.verify_claim(m6, W("ab"), W("ab"), (), ())
    assert res.holds and res.cancelled_holds


def test_add_relation_builds_completed_fixture(m6p, m6pc):
    built = mk.add_relation(m6p, W("cefa"), W("efac"))
    assert built == m6pc
    assert mk.equal(W("cefa"), W("efac"), built)


def test_add_relation_trivial_and_errors(m6):
    assert mk.add_relation(m6, W("ab"), W("ab")) == m6
    with pytest.raises(ValueError, match="length"):
        mk.add_relation(m6, W("a"), W("ab"))


def test_completion_does_not_terminate(m6pc):
    # adding the failing k-indexed relation leaves the next one failing
    p = m6pc
    for k in (1, 2):
        lhs = W("acd" + "e" * (k + 1) + "ab")
        rhs = W("d" + "e" * k + "aabce")
        assert not mk.equal(lhs, rhs, p)
        assert mk.equal(lhs + W("f"), rhs + W("f"), p)
        p = mk.add_relation(p, lhs, rhs)
        assert mk.equal(lhs, rhs, p)
    # after two completion steps the k=3 instance is still broken
    lhs = W("acd" + "e" * 4 + "ab")
    rhs = W("d" + "e" * 3 + "aabce")
    assert mk.equal(lhs + W("f"), rhs + W("f"), p)
    assert not mk.equal(lhs, rhs, p)
