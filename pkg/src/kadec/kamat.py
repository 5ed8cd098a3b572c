"""Dense matrices over an arbitrary Kleene algebra.

The algebra is passed explicitly to every operation as a small record of
its constants and operations.  Matrices here back the algebraic
correctness oracles of the test suite; they are not on the decision
procedure's hot path, so the representation favours clarity (immutable
tuple-of-tuples, explicit bounds checks) over speed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import regex as _re

Entry = Any


@dataclass(frozen=True)
class KleeneAlgebra:
    """A Kleene algebra instance: carrier constants, operations, and the
    equality predicate used for entry-wise matrix comparison."""

    zero: Entry
    one: Entry
    plus: Callable[[Entry, Entry], Entry]
    dot: Callable[[Entry, Entry], Entry]
    star: Callable[[Entry], Entry]
    equal: Callable[[Entry, Entry], bool]


#: Booleans with or/and/constant-one star: the smallest Kleene algebra,
#: used throughout the tests as an exhaustively checkable model.
BOOL = KleeneAlgebra(
    zero=0,
    one=1,
    plus=lambda a, b: a | b,
    dot=lambda a, b: a & b,
    star=lambda a: 1,
    equal=lambda a, b: a == b,
)


def regex_ka(equal: Callable[[_re.Regex, _re.Regex], bool] | None = None) -> KleeneAlgebra:
    """The syntactic instance over regular expressions.

    Sums, products and stars collapse 0/1 units eagerly (the same rules
    as regex.simplify), keeping symbolic entries small; ``equal``
    defaults to structural equality and is typically supplied by the
    caller (e.g. bounded language equivalence).
    """
    return KleeneAlgebra(
        zero=_re.ZERO,
        one=_re.ONE,
        plus=_re.splus,
        dot=_re.sdot,
        star=_re.sstar,
        equal=equal if equal is not None else lambda a, b: a == b,
    )


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[tuple[Entry, ...], ...]

    def __getitem__(self, pos: tuple[int, int]) -> Entry:
        i, j = pos
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[i][j]


def from_rows(rows: list[list[Entry]]) -> Matrix:
    """Build a matrix from a rectangular list of lists."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    if any(len(r) != m for r in rows):
        raise ValueError("ragged rows")
    return Matrix(n, m, tuple(tuple(r) for r in rows))


def _build(n: int, m: int, f: Callable[[int, int], Entry]) -> Matrix:
    return Matrix(n, m, tuple(tuple(f(i, j) for j in range(m)) for i in range(n)))


def mx_zero(ka: KleeneAlgebra, n: int, m: int) -> Matrix:
    return _build(n, m, lambda i, j: ka.zero)


def mx_one(ka: KleeneAlgebra, n: int) -> Matrix:
    return _build(n, n, lambda i, j: ka.one if i == j else ka.zero)


def mx_point(ka: KleeneAlgebra, n: int, m: int, i: int, j: int, x: Entry) -> Matrix:
    """The n x m matrix with ``x`` at (i, j) and zero elsewhere."""
    if not (0 <= i < n and 0 <= j < m):
        raise ValueError(f"point ({i},{j}) outside {n}x{m} matrix")
    return _build(n, m, lambda a, b: x if (a, b) == (i, j) else ka.zero)


def mx_plus(ka: KleeneAlgebra, a: Matrix, b: Matrix) -> Matrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} + {b.rows}x{b.cols}")
    return _build(a.rows, a.cols, lambda i, j: ka.plus(a.entries[i][j], b.entries[i][j]))


def mx_dot(ka: KleeneAlgebra, a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} . {b.rows}x{b.cols}")

    def cell(i: int, j: int) -> Entry:
        acc = ka.zero
        for k in range(a.cols):
            acc = ka.plus(acc, ka.dot(a.entries[i][k], b.entries[k][j]))
        return acc

    return _build(a.rows, b.cols, cell)


def mx_equal(ka: KleeneAlgebra, a: Matrix, b: Matrix) -> bool:
    if (a.rows, a.cols) != (b.rows, b.cols):
        return False
    return all(
        ka.equal(a.entries[i][j], b.entries[i][j])
        for i in range(a.rows)
        for j in range(a.cols)
    )


def mx_leq(ka: KleeneAlgebra, a: Matrix, b: Matrix) -> bool:
    """Entry-wise order: a <= b iff a + b = b."""
    return mx_equal(ka, mx_plus(ka, a, b), b)


def mx_sub(a: Matrix, i0: int, j0: int, n: int, m: int) -> Matrix:
    """The n x m block of ``a`` starting at (i0, j0)."""
    if i0 + n > a.rows or j0 + m > a.cols:
        raise ValueError("sub-matrix outside bounds")
    return _build(n, m, lambda i, j: a.entries[i0 + i][j0 + j])


def mx_sub00(a: Matrix, x: int, y: int) -> Matrix:
    return mx_sub(a, 0, 0, x, y)


def mx_sub01(a: Matrix, x: int, y: int) -> Matrix:
    return mx_sub(a, 0, y, x, a.cols - y)


def mx_sub10(a: Matrix, x: int, y: int) -> Matrix:
    return mx_sub(a, x, 0, a.rows - x, y)


def mx_sub11(a: Matrix, x: int, y: int) -> Matrix:
    return mx_sub(a, x, y, a.rows - x, a.cols - y)


def mx_blocks(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """Assemble [[a, b], [c, d]]; shapes must agree along shared edges."""
    if a.rows != b.rows or c.rows != d.rows or a.cols != c.cols or b.cols != d.cols:
        raise ValueError("incompatible block shapes")

    def cell(i: int, j: int) -> Entry:
        if i < a.rows:
            return a.entries[i][j] if j < a.cols else b.entries[i][j - a.cols]
        return c.entries[i - a.rows][j] if j < a.cols else d.entries[i - a.rows][j - a.cols]

    return _build(a.rows + c.rows, a.cols + b.cols, cell)


def _star_split(ka: KleeneAlgebra, m: Matrix, x: int,
                star_top: Callable[[Matrix], Matrix],
                star_bot: Callable[[Matrix], Matrix]) -> Matrix:
    """Star of a square matrix via the block decomposition at row/col x:

        [[A, B],    [[A',        A'.B.D'],
         [C, D]]* =  [D'.C.A',   D' + D'.C.A'.B.D']]

    where D' = star(D) and A' = star(A + B.D'.C).
    """
    a = mx_sub00(m, x, x)
    b = mx_sub01(m, x, x)
    c = mx_sub10(m, x, x)
    d = mx_sub11(m, x, x)
    ds = star_bot(d)
    as_ = star_top(mx_plus(ka, a, mx_dot(ka, mx_dot(ka, b, ds), c)))
    top_right = mx_dot(ka, mx_dot(ka, as_, b), ds)
    bot_left = mx_dot(ka, mx_dot(ka, ds, c), as_)
    bot_right = mx_plus(ka, ds, mx_dot(ka, mx_dot(ka, bot_left, b), ds))
    return mx_blocks(as_, top_right, bot_left, bot_right)


def mx_star(ka: KleeneAlgebra, m: Matrix) -> Matrix:
    """Star of a square matrix, recursing on a 1x1 leading block."""
    if m.rows != m.cols:
        raise ValueError(f"star of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return m
    if n == 1:
        return Matrix(1, 1, ((ka.star(m.entries[0][0]),),))
    return _star_split(ka, m, 1, lambda t: mx_star(ka, t), lambda t: mx_star(ka, t))


def mx_star_block(ka: KleeneAlgebra, m: Matrix, x: int) -> Matrix:
    """Star computed by splitting at an arbitrary point x (0 <= x <= n),
    with the sub-stars delegated to mx_star.  Equal to mx_star(m) for
    every split point."""
    if m.rows != m.cols:
        raise ValueError(f"star of non-square {m.rows}x{m.cols} matrix")
    if not 0 <= x <= m.rows:
        raise ValueError(f"split point {x} outside 0..{m.rows}")
    if x == 0 or x == m.rows:
        return mx_star(ka, m)
    return _star_split(ka, m, x, lambda t: mx_star(ka, t), lambda t: mx_star(ka, t))
