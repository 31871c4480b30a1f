"""Braid words, a small expression language for them, and named braids.

Grammar::

    expr := term*
    term := atom ("^" int)?
    atom := "s" int | "(" expr ")" | "[" expr "," expr "]" | "@" name
    int  := "-"? digit+

Whitespace and ``.`` separate terms; ``σ`` is accepted for ``s``.
Commutators follow ``[a, b] = a b a^-1 b^-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union


class BraidSyntaxError(ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class BraidError(ValueError):
    """Invalid braid word or expression (strand mismatch, unknown name, ...)."""


@dataclass(frozen=True)
class BraidWord:
    """A braid word on ``strands`` strands: a sequence of (generator, exponent).

    Composition is concatenation, read left to right; representation
    matrices of a word are the product of the letter matrices in the same
    order.
    """

    strands: int
    letters: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("a braid needs at least one strand")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i < self.strands:
                raise BraidError(f"generator s{i} does not exist on {self.strands} strands")
            if e == 0:
                raise BraidError("letters must have nonzero exponent")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_letters(cls, strands, letters):
        return cls(strands, tuple(letters))

    def __mul__(self, other):
        if self.strands != other.strands:
            raise BraidError("cannot multiply braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def exponent_sum(self):
        return sum(e for _, e in self.letters)

    def unit_letters(self):
        """Letters expanded to exponent +-1, as (generator, sign) pairs."""
        for i, e in self.letters:
            s = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield i, s

    def on_strands(self, n):
        """The same word viewed in B_n for n >= the current strand count."""
        return BraidWord(n, self.letters)

    def __str__(self):
        return to_text(Word(tuple(_letter_node(i, e) for i, e in self.letters)))


# --- expression trees -------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Group:
    body: "Expr"


@dataclass(frozen=True)
class Commutator:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Power:
    base: Union[Gen, Ref, Group, Commutator]
    exponent: int


@dataclass(frozen=True)
class Word:
    terms: Tuple["Expr", ...]


Expr = Union[Gen, Ref, Group, Commutator, Power, Word]


def _letter_node(i, e):
    return Gen(i) if e == 1 else Power(Gen(i), e)


def to_text(expr):
    if isinstance(expr, Gen):
        return f"s{expr.index}"
    if isinstance(expr, Ref):
        return f"@{expr.name}"
    if isinstance(expr, Group):
        return f"({to_text(expr.body)})"
    if isinstance(expr, Commutator):
        return f"[{to_text(expr.left)}, {to_text(expr.right)}]"
    if isinstance(expr, Power):
        return f"{to_text(expr.base)}^{expr.exponent}"
    if isinstance(expr, Word):
        return " ".join(to_text(t) for t in expr.terms)
    raise TypeError(f"not a braid expression: {expr!r}")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        offset = len(self.text[: self.pos].encode("utf-8"))
        raise BraidSyntaxError(message, offset)

    def skip(self):
        t = self.text
        while self.pos < len(t) and (t[self.pos].isspace() or t[self.pos] == "."):
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self, signed):
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if self.pos == digits:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def expr(self, closers):
        terms = []
        while True:
            c = self.peek()
            if c == "" or c in closers:
                break
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Word(tuple(terms))

    def term(self):
        atom = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            return Power(atom, self.integer(signed=True))
        return atom

    def atom(self):
        c = self.peek()
        if c in ("s", "σ"):
            self.pos += 1
            return Gen(self.integer(signed=False))
        if c == "(":
            self.pos += 1
            body = self.expr(")")
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return Group(body)
        if c == "[":
            self.pos += 1
            left = self.expr(",]")
            if self.peek() != ",":
                self.error("expected ',' in commutator")
            self.pos += 1
            right = self.expr(",]")
            if self.peek() != "]":
                self.error("expected ']'")
            self.pos += 1
            return Commutator(left, right)
        if c == "@":
            self.pos += 1
            start = self.pos
            t = self.text
            while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] == "_"):
                self.pos += 1
            if self.pos == start:
                self.error("expected a catalog name after '@'")
            return Ref(t[start : self.pos])
        if c == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {c!r}")


def parse(text, strands=None):
    """Parse braid expression text; with ``strands`` given, check generator range.

    Catalog references are left unresolved until :func:`flatten`.
    """
    p = _Parser(text)
    expr = p.expr("")
    if p.peek() != "":
        p.error(f"unexpected character {p.peek()!r}")
    if strands is not None:
        for i in _generators(expr):
            if not 1 <= i < strands:
                raise BraidError(f"generator s{i} out of range for {strands} strands")
    return expr


def _generators(expr):
    if isinstance(expr, Gen):
        yield expr.index
    elif isinstance(expr, Group):
        yield from _generators(expr.body)
    elif isinstance(expr, Power):
        yield from _generators(expr.base)
    elif isinstance(expr, Commutator):
        yield from _generators(expr.left)
        yield from _generators(expr.right)
    elif isinstance(expr, Word):
        for t in expr.terms:
            yield from _generators(t)


def _flat(expr, seen):
    if isinstance(expr, Gen):
        return ((expr.index, 1),)
    if isinstance(expr, Ref):
        if expr.name in seen:
            raise BraidError(f"recursive catalog reference @{expr.name}")
        return _flat(catalog(expr.name), seen | {expr.name})
    if isinstance(expr, Group):
        return _flat(expr.body, seen)
    if isinstance(expr, Word):
        out = ()
        for t in expr.terms:
            out += _flat(t, seen)
        return out
    if isinstance(expr, Commutator):
        x = _flat(expr.left, seen)
        y = _flat(expr.right, seen)
        return x + y + _inv(x) + _inv(y)
    if isinstance(expr, Power):
        if isinstance(expr.base, Gen):
            return ((expr.base.index, expr.exponent),) if expr.exponent else ()
        body = _flat(expr.base, seen)
        if expr.exponent < 0:
            body = _inv(body)
        return body * abs(expr.exponent)
    raise TypeError(f"not a braid expression: {expr!r}")


def _inv(letters):
    return tuple((i, -e) for i, e in reversed(letters))


def flatten(expr, strands):
    """Expand an expression (including catalog references) into a BraidWord."""
    return BraidWord(strands, _flat(expr, frozenset()))


def word(text, strands):
    """Shorthand for ``flatten(parse(text, strands), strands)``."""
    return flatten(parse(text, strands), strands)


# --- named braids -----------------------------------------------------------

# Auxiliary names (brown_*, bigelow_*) hold the sub-braids the main entries
# are written in terms of.
_CATALOG = {
    "brown_eta": (6, "s4^2 s5 s4^2 s5^2 s4^2 s5 s4^2"),
    "brown_delta": (6, "s4 s5 s3 s2 s1 s2^-1 s3^-1 s5^-1 s4^-1"),
    "brown_gamma": (6, "@brown_delta s3 s2^-1 s1^-1 @brown_delta s1 s2 s3^-1 @brown_delta^-1"),
    "brown_xi": (6, "@brown_gamma @brown_eta @brown_gamma^-1"),
    "brown": (6, "@brown_eta @brown_xi^-1"),
    "bigelow_psi1": (5, "s3^-1 s2 s1^2 s2 s4^3 s3 s2"),
    "bigelow_psi2": (5, "s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5"),
    "bigelow": (
        5,
        "[@bigelow_psi1^-1 s4 @bigelow_psi1, @bigelow_psi2^-1 s4 s3 s2 s1^2 s2 s3 s4 @bigelow_psi2]",
    ),
    "lt3": (3, "s1 s2^-1"),
    "lt4": (4, "s1 s2 s3^-1"),
    "lt5": (5, "(s1 s2 s3)^2 s4 s3^-1"),
    "lt6": (6, "(s2 s1)^2 (s1 s2 s3 s4 s5)^2"),
    "lt7": (7, "s4^-2 (s1 s2 s3 s4 s5 s6)^2"),
    "lt8": (8, "s2^-1 s1^-1 (s1 s2 s3 s4 s5 s6 s7)^5"),
}

CATALOG_NAMES = ("brown", "bigelow", "lt3", "lt4", "lt5", "lt6", "lt7", "lt8")


def catalog(name):
    """Expression tree of a named braid, unexpanded."""
    if name not in _CATALOG:
        raise BraidError(f"unknown braid name {name!r}")
    strands, text = _CATALOG[name]
    return parse(text, strands)


def catalog_strands(name):
    if name not in _CATALOG:
        raise BraidError(f"unknown braid name {name!r}")
    return _CATALOG[name][0]


def catalog_word(name, strands=None):
    return flatten(catalog(name), strands or catalog_strands(name))


def is_penner_type(w):
    """Sign pattern of the Penner-type construction on an even number of strands.

    True iff every generator occurs, odd-indexed generators all carry one
    sign and even-indexed generators all carry the opposite sign.
    """
    if w.strands % 2:
        raise BraidError("Penner-type sign pattern is defined for an even number of strands")
    seen = set()
    odd_signs = set()
    even_signs = set()
    for i, e in w.letters:
        seen.add(i)
        (odd_signs if i % 2 else even_signs).add(e > 0)
    if seen != set(range(1, w.strands)):
        return False
    if len(odd_signs) != 1 or len(even_signs) > 1:
        return False
    return not even_signs or odd_signs != even_signs
