"""Brute-force language semantics of regular expressions.

This module is the trusted oracle for the rest of the library: it is
deliberately naive and independent of the automata pipeline.  Words are
tuples of variable labels; the empty word is ``()``.

Two membership routines are provided on purpose.  ``matches`` is a
memoized recursive descent over split points; ``matches_dp`` computes,
bottom-up, the full table of matching subwords per subexpression.  They
share no code path and are checked against each other by the test suite.
"""
from __future__ import annotations

from .regex import Dot, One, Plus, Regex, Star, Var, Zero, labels_of

Word = tuple[int, ...]


def matches(x: Regex, word: Word | list[int]) -> bool:
    """True iff ``word`` belongs to the language of ``x``."""
    w = tuple(word)
    n = len(w)
    # memo[(id(node), i, j)] = whether w[i:j] is in the node's language;
    # node ids stay valid while the root is alive.
    memo: dict[tuple[int, int, int], bool] = {}

    def go(node: Regex, i: int, j: int) -> bool:
        key = (id(node), i, j)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if isinstance(node, Zero):
            res = False
        elif isinstance(node, One):
            res = i == j
        elif isinstance(node, Var):
            res = j == i + 1 and w[i] == node.label
        elif isinstance(node, Plus):
            res = go(node.left, i, j) or go(node.right, i, j)
        elif isinstance(node, Dot):
            res = any(
                go(node.left, i, k) and go(node.right, k, j)
                for k in range(i, j + 1)
            )
        else:
            assert isinstance(node, Star)
            if i == j:
                res = True
            else:
                # Decompose over a non-empty first block; terminates
                # because the remaining suffix strictly shrinks.
                res = any(
                    go(node.body, i, k) and go(node, k, j)
                    for k in range(i + 1, j + 1)
                )
        memo[key] = res
        return res

    return go(x, 0, n)


def matches_dp(x: Regex, word: Word | list[int]) -> bool:
    """Independent membership check: bottom-up dynamic programming over
    the sets of matching (start, end) spans of each subexpression."""
    w = tuple(word)
    n = len(w)

    def spans(node: Regex) -> set[tuple[int, int]]:
        if isinstance(node, Zero):
            return set()
        if isinstance(node, One):
            return {(i, i) for i in range(n + 1)}
        if isinstance(node, Var):
            return {(i, i + 1) for i in range(n) if w[i] == node.label}
        if isinstance(node, Plus):
            return spans(node.left) | spans(node.right)
        if isinstance(node, Dot):
            left, right = spans(node.left), spans(node.right)
            by_start: dict[int, list[int]] = {}
            for k, j in right:
                by_start.setdefault(k, []).append(j)
            return {(i, j) for i, k in left for j in by_start.get(k, ())}
        assert isinstance(node, Star)
        body = {(i, j) for i, j in spans(node.body) if i != j}
        closed = {(i, i) for i in range(n + 1)}
        while True:
            extra = {
                (i, j2)
                for i, j in closed
                for j2 in range(j + 1, n + 1)
                if (j, j2) in body
            }
            if extra <= closed:
                return closed
            closed |= extra

    return (0, n) in spans(x)


def enumerate_words(x: Regex, maxlen: int) -> set[Word]:
    """All words of length at most ``maxlen`` in the language of ``x``.

    Computed compositionally on the AST; the result only ever mentions
    labels occurring in ``x``.
    """
    memo: dict[int, set[Word]] = {}

    def concat(left: set[Word], right: set[Word]) -> set[Word]:
        by_len: dict[int, list[Word]] = {}
        for v in right:
            by_len.setdefault(len(v), []).append(v)
        out: set[Word] = set()
        for u in left:
            budget = maxlen - len(u)
            for length, vs in by_len.items():
                if length <= budget:
                    for v in vs:
                        out.add(u + v)
        return out

    def go(node: Regex) -> set[Word]:
        cached = memo.get(id(node))
        if cached is not None:
            return cached
        if isinstance(node, Zero):
            res: set[Word] = set()
        elif isinstance(node, One):
            res = {()}
        elif isinstance(node, Var):
            res = {(node.label,)} if maxlen >= 1 else set()
        elif isinstance(node, Plus):
            res = go(node.left) | go(node.right)
        elif isinstance(node, Dot):
            res = concat(go(node.left), go(node.right))
        else:
            assert isinstance(node, Star)
            step = {v for v in go(node.body) if v}
            res = {()}
            frontier: set[Word] = {()}
            while frontier:
                frontier = concat(frontier, step) - res
                res |= frontier
        memo[id(node)] = res
        return res

    return go(x)


def distinguishing_word(x: Regex, y: Regex, maxlen: int) -> Word | None:
    """Shortest word of length <= maxlen accepted by exactly one of the
    two expressions (ties broken lexicographically), or None.

    Words are drawn from the union of the two alphabets; a word using a
    label foreign to an expression is never in its language, so the
    symmetric difference of the two enumerations is exhaustive.
    """
    diff = enumerate_words(x, maxlen) ^ enumerate_words(y, maxlen)
    if not diff:
        return None
    return min(diff, key=lambda w: (len(w), w))


def alphabet_of(x: Regex, y: Regex | None = None) -> tuple[int, ...]:
    """Sorted union alphabet of one or two expressions."""
    labels = labels_of(x)
    if y is not None:
        labels |= labels_of(y)
    return tuple(sorted(labels))
