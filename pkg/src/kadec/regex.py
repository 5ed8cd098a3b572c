"""Regular expression ASTs, concrete syntax, and normalization.

Expressions are built from 0 (empty language), 1 (empty word), numbered
variables, sum, product, and star.  The concrete grammar is

    expr   := term ('+' term)*
    term   := factor ('.'? factor)*
    factor := atom '*'*
    atom   := '0' | '1' | letter | 'v' digits | '(' expr ')'

with star binding tighter than concatenation, which binds tighter than
sum.  Concatenation may be written by juxtaposition.  Letters a..z name
variables 0..25; ``v<N>`` names variable N (so larger alphabets stay
printable).  Whitespace between tokens is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass


class Regex:
    """Base class of the six expression node types."""

    __slots__ = ()

    def __str__(self) -> str:
        return unparse(self)


@dataclass(frozen=True, slots=True)
class Zero(Regex):
    pass


@dataclass(frozen=True, slots=True)
class One(Regex):
    pass


@dataclass(frozen=True, slots=True)
class Var(Regex):
    label: int


@dataclass(frozen=True, slots=True)
class Plus(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True, slots=True)
class Dot(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True, slots=True)
class Star(Regex):
    body: Regex


ZERO = Zero()
ONE = One()


def label_name(label: int) -> str:
    """Printable name of a variable: a..z for 0..25, v<N> beyond."""
    if 0 <= label < 26:
        return chr(ord("a") + label)
    return f"v{label}"


def format_word(word: tuple[int, ...] | list[int]) -> str:
    """Render a word as concatenated variable names; the empty word as ε."""
    if not word:
        return "ε"
    return "".join(label_name(a) for a in word)


def labels_of(x: Regex) -> frozenset[int]:
    """Set of variable labels occurring in ``x``."""
    out: set[int] = set()
    stack = [x]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.label)
        elif isinstance(node, (Plus, Dot)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Star):
            stack.append(node.body)
    return frozenset(out)


def node_count(x: Regex) -> int:
    """Number of AST nodes (leaves and internal nodes)."""
    total = 0
    stack = [x]
    while stack:
        node = stack.pop()
        total += 1
        if isinstance(node, (Plus, Dot)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Star):
            stack.append(node.body)
    return total


# ---------------------------------------------------------------------------
# Parsing


class RegexSyntaxError(ValueError):
    """Malformed concrete syntax; ``position`` is a 0-based text offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_ATOM_START = frozenset("01(") | frozenset(chr(c) for c in range(ord("a"), ord("z") + 1))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._skip_ws()

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _advance(self) -> None:
        self.pos += 1
        self._skip_ws()

    def expr(self) -> Regex:
        node = self.term()
        while self._peek() == "+":
            self._advance()
            node = Plus(node, self.term())
        return node

    def term(self) -> Regex:
        node = self.factor()
        while True:
            c = self._peek()
            if c == ".":
                self._advance()
                node = Dot(node, self.factor())
            elif c in _ATOM_START:
                node = Dot(node, self.factor())
            else:
                return node

    def factor(self) -> Regex:
        node = self.atom()
        while self._peek() == "*":
            self._advance()
            node = Star(node)
        return node

    def atom(self) -> Regex:
        c = self._peek()
        if c == "0":
            self._advance()
            return ZERO
        if c == "1":
            self._advance()
            return ONE
        if c == "(":
            self._advance()
            node = self.expr()
            if self._peek() != ")":
                raise RegexSyntaxError("expected ')'", self.pos)
            self._advance()
            return node
        if c == "v" and self.pos + 1 < len(self.text) and self.text[self.pos + 1].isdigit():
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            label = int(self.text[start : self.pos])
            self._skip_ws()
            return Var(label)
        if "a" <= c <= "z":
            self._advance()
            return Var(ord(c) - ord("a"))
        if c == "":
            raise RegexSyntaxError("unexpected end of input", self.pos)
        raise RegexSyntaxError(f"unexpected character {c!r}", self.pos)


def parse(text: str) -> Regex:
    """Parse concrete syntax into an AST.

    Raises RegexSyntaxError (with a position) on malformed input.
    """
    parser = _Parser(text)
    node = parser.expr()
    if parser.pos != len(text):
        raise RegexSyntaxError(
            f"unexpected character {text[parser.pos]!r}", parser.pos
        )
    return node


# ---------------------------------------------------------------------------
# Printing

# Precedence levels: 0 = sum, 1 = product, 2 = star, 3 = atom.


def _prec(x: Regex) -> int:
    if isinstance(x, Plus):
        return 0
    if isinstance(x, Dot):
        return 1
    if isinstance(x, Star):
        return 2
    return 3


def _needs_sep(left: str, right: str) -> bool:
    # Juxtaposed chunks may merge into one token when a digit follows a
    # 'v' or another digit (the v<N> numeral would absorb it).
    return right[0].isdigit() and (left[-1] == "v" or left[-1].isdigit())


def _render(x: Regex, min_prec: int) -> str:
    if isinstance(x, Zero):
        return "0"
    if isinstance(x, One):
        return "1"
    if isinstance(x, Var):
        return label_name(x.label)
    if isinstance(x, Star):
        s = _render(x.body, 2) + "*"
    elif isinstance(x, Dot):
        a = _render(x.left, 1)
        b = _render(x.right, 2)
        s = a + "." + b if _needs_sep(a, b) else a + b
    else:
        assert isinstance(x, Plus)
        s = _render(x.left, 0) + "+" + _render(x.right, 1)
    if _prec(x) < min_prec:
        return "(" + s + ")"
    return s


def unparse(x: Regex) -> str:
    """Concrete syntax for ``x`` with minimal grouping.

    Round-trips: ``parse(unparse(x))`` is structurally equal to ``x``.
    """
    return _render(x, 0)


# ---------------------------------------------------------------------------
# Semantics-preserving rewriting


def nullable(x: Regex) -> bool:
    """True iff the empty word belongs to the language of ``x``."""
    if isinstance(x, (One, Star)):
        return True
    if isinstance(x, (Zero, Var)):
        return False
    if isinstance(x, Plus):
        return nullable(x.left) or nullable(x.right)
    assert isinstance(x, Dot)
    return nullable(x.left) and nullable(x.right)


def splus(x: Regex, y: Regex) -> Regex:
    """Sum with the unit rules applied at the root (x+0 -> x, 0+x -> x)."""
    if isinstance(x, Zero):
        return y
    if isinstance(y, Zero):
        return x
    return Plus(x, y)


def sdot(x: Regex, y: Regex) -> Regex:
    """Product with annihilation and unit rules applied at the root."""
    if isinstance(x, Zero) or isinstance(y, Zero):
        return ZERO
    if isinstance(x, One):
        return y
    if isinstance(y, One):
        return x
    return Dot(x, y)


def sstar(x: Regex) -> Regex:
    """Star with 0* -> 1 applied at the root."""
    if isinstance(x, Zero):
        return ONE
    return Star(x)


def simplify(x: Regex) -> Regex:
    """Normal form of the unit/annihilation rewriting system.

    Applies x·0 -> 0, 0·x -> 0, x+0 -> x, 0+x -> x, x·1 -> x, 1·x -> x and
    0* -> 1 bottom-up; the result is language-equivalent to ``x`` and
    contains no redex.  Idempotent.
    """
    if isinstance(x, Plus):
        return splus(simplify(x.left), simplify(x.right))
    if isinstance(x, Dot):
        return sdot(simplify(x.left), simplify(x.right))
    if isinstance(x, Star):
        return sstar(simplify(x.body))
    return x


def _star_body(x: Regex) -> Regex:
    """Strict body equivalent for iteration: language((_star_body(x))*)
    equals language(x*) and the result never accepts the empty word.

    Uses the star-normal-form laws: drop 1 and inner stars under a star,
    and turn a product of two nullable factors into their sum.
    """
    if isinstance(x, (Zero, One)):
        return ZERO
    if isinstance(x, Var):
        return x
    if isinstance(x, Plus):
        return splus(_star_body(x.left), _star_body(x.right))
    if isinstance(x, Star):
        return _star_body(x.body)
    assert isinstance(x, Dot)
    if nullable(x.left) and nullable(x.right):
        return splus(_star_body(x.left), _star_body(x.right))
    return sdot(ssf(x.left), ssf(x.right))


def ssf(x: Regex) -> Regex:
    """Strict star form: language-equivalent rewrite of ``x`` in which
    every starred subterm denies the empty word."""
    if isinstance(x, Plus):
        return splus(ssf(x.left), ssf(x.right))
    if isinstance(x, Dot):
        return sdot(ssf(x.left), ssf(x.right))
    if isinstance(x, Star):
        return sstar(_star_body(x.body))
    return x


def is_strict_star_form(x: Regex) -> bool:
    """True iff every Star subterm of ``x`` has a non-nullable body."""
    if isinstance(x, Star):
        return not nullable(x.body) and is_strict_star_form(x.body)
    if isinstance(x, (Plus, Dot)):
        return is_strict_star_form(x.left) and is_strict_star_form(x.right)
    return True
