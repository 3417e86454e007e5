"""Cyclic words in the free group on ``a`` and ``b``.

Letters are printed ``a``, ``b`` with ``A`` = a^-1 and ``B`` = b^-1.  The
parser also understands parentheses and positive exponents, so the family
``(ab)^m(a^2b)^nb^j`` can be typed directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import SingleFamilyError, TrivialWordError, WordSyntaxError


class Letter(enum.IntEnum):
    # integer values fix the canonical order a < b < A < B
    a = 0
    b = 1
    A = 2
    B = 3

    @property
    def base(self) -> str:
        return "ab"[self % 2]

    @property
    def sign(self) -> int:
        return 1 if self < 2 else -1

    @property
    def family(self) -> int:
        """0 for the a-family, 1 for the b-family."""
        return self % 2

    @property
    def inverse(self) -> "Letter":
        return Letter((self + 2) % 4)

    def __str__(self) -> str:
        return self.name


_CHARS = {"a": Letter.a, "b": Letter.b, "A": Letter.A, "B": Letter.B}


@dataclass(frozen=True)
class CyclicWord:
    """A nonempty cyclically reduced word, read cyclically."""

    letters: tuple[Letter, ...]

    def __post_init__(self):
        letters = tuple(Letter(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise TrivialWordError("a cyclic word must be nonempty")
        n = len(letters)
        for i in range(n if n > 1 else 0):
            if letters[i].inverse == letters[(i + 1) % n]:
                raise ValueError(f"word {self} is not cyclically reduced at index {i}")

    @classmethod
    def from_string(cls, text: str) -> "CyclicWord":
        return parse_word(text)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> Letter:
        return self.letters[i % len(self.letters)]

    def __str__(self) -> str:
        return "".join(x.name for x in self.letters)

    def __repr__(self) -> str:
        return f"CyclicWord({str(self)!r})"

    def rotate(self, t: int) -> "CyclicWord":
        t %= len(self.letters)
        return CyclicWord(self.letters[t:] + self.letters[:t])

    def inverse(self) -> "CyclicWord":
        return CyclicWord(tuple(x.inverse for x in reversed(self.letters)))

    def swap_generators(self) -> "CyclicWord":
        """Image under the automorphism exchanging a and b."""
        return CyclicWord(tuple(Letter(x ^ 1) for x in self.letters))

    @property
    def families(self) -> frozenset[int]:
        return frozenset(x.family for x in self.letters)

    @property
    def is_single_family(self) -> bool:
        return len(self.families) == 1

    def pretty(self) -> str:
        """Compact exponent notation, e.g. ``a^2b^3``."""
        out = []
        for letter, exp in runs(self.letters):
            out.append(letter.name if exp == 1 else f"{letter.name}^{exp}")
        return "".join(out)


def runs(letters: Sequence[Letter]) -> list[tuple[Letter, int]]:
    """Maximal runs of equal letters in a linear sequence."""
    out: list[list] = []
    for x in letters:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(x, e) for x, e in out]


def free_reduce(letters: Iterable[Letter]) -> list[Letter]:
    stack: list[Letter] = []
    for x in letters:
        x = Letter(x)
        if stack and stack[-1] == x.inverse:
            stack.pop()
        else:
            stack.append(x)
    return stack


def cyclic_reduce(letters: Iterable[Letter]) -> CyclicWord:
    """Cancel inverse pairs, including across the wrap-around.

    The result is conjugate to the input.  Raises ``TrivialWordError`` if
    everything cancels.
    """
    reduced = free_reduce(letters)
    lo, hi = 0, len(reduced)
    while hi - lo >= 2 and reduced[lo] == reduced[hi - 1].inverse:
        lo += 1
        hi -= 1
    if hi <= lo:
        raise TrivialWordError("word is trivial in the free group")
    return CyclicWord(tuple(reduced[lo:hi]))


class _Parser:
    # word := term+ ; term := atom ('^' int)* ; atom := letter | '(' word ')'

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise WordSyntaxError(message, self.pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def word(self) -> list[Letter]:
        out: list[Letter] = []
        while True:
            c = self.peek()
            if c in _CHARS or c == "(":
                out.extend(self.term())
            elif not out:
                self.error("expected a letter or '('" if c else "unexpected end of input")
            else:
                return out

    def term(self) -> list[Letter]:
        c = self.peek()
        if c == "(":
            self.pos += 1
            body = self.word()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
        else:
            body = [_CHARS[c]]
            self.pos += 1
        while self.peek() == "^":
            self.pos += 1
            body = body * self.exponent()
        return body

    def exponent(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a positive integer exponent")
        value = int(self.text[start:self.pos])
        if value < 1:
            self.pos = start
            self.error("exponent must be positive")
        return value

    def parse(self) -> list[Letter]:
        letters = self.word()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return letters


def parse_word(text: str) -> CyclicWord:
    """Parse ``text`` and return its cyclic reduction.

    >>> str(parse_word("(ab)^2 b^2"))
    'ababbb'
    """
    return cyclic_reduce(_Parser(text).parse())


def _least_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    return min(seq[t:] + seq[:t] for t in range(len(seq)))


def canonical_form(w: CyclicWord) -> CyclicWord:
    """Least rotation of ``w`` or ``w^-1`` in the order a < b < A < B.

    Two words share a canonical form iff they give the same unoriented free
    homotopy class.  The a<->b swap is deliberately not quotiented out.
    """
    fwd = _least_rotation(tuple(int(x) for x in w.letters))
    bwd = _least_rotation(tuple(int(x) for x in w.inverse().letters))
    return CyclicWord(tuple(Letter(x) for x in min(fwd, bwd)))


def is_primitive(w: CyclicWord) -> bool:
    """True iff no nontrivial rotation fixes ``w`` (``w`` is not a proper power)."""
    s = w.letters
    n = len(s)
    return all(s[t:] + s[:t] != s for t in range(1, n) if n % t == 0)


@dataclass(frozen=True)
class SyllableForm:
    """Alternating syllables ``s_1^{i_1} r_1^{j_1} ... s_n^{i_n} r_n^{j_n}``.

    ``syllables`` alternates a-family and b-family entries starting with an
    a-family one.  ``offset`` is the index of the source word where the
    first syllable begins.
    """

    syllables: tuple[tuple[Letter, int], ...]
    offset: int = 0

    @property
    def n(self) -> int:
        return len(self.syllables) // 2

    @property
    def s(self) -> tuple[tuple[Letter, int], ...]:
        return self.syllables[0::2]

    @property
    def r(self) -> tuple[tuple[Letter, int], ...]:
        return self.syllables[1::2]

    @property
    def i_exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.s)

    @property
    def j_exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.r)

    @property
    def starts(self) -> tuple[int, ...]:
        """Start index of each syllable inside :meth:`word`."""
        out, pos = [], 0
        for _, e in self.syllables:
            out.append(pos)
            pos += e
        return tuple(out)

    def word(self) -> CyclicWord:
        return CyclicWord(tuple(x for x, e in self.syllables for _ in range(e)))

    def __len__(self) -> int:
        return sum(e for _, e in self.syllables)

    def __str__(self) -> str:
        return " ".join(f"{x.name}^{e}" for x, e in self.syllables)


def syllables(w: CyclicWord) -> SyllableForm:
    """Block decomposition of ``w`` rotated to begin with an a-syllable.

    The first a-syllable starting at or after index 0 of ``w`` is used.
    """
    if w.is_single_family:
        raise SingleFamilyError(f"{w} is a power of a single generator", word=str(w))
    letters = w.letters
    n = len(letters)
    start = next(p for p in range(n) if letters[p].family == 0 and letters[p - 1].family == 1)
    rotated = letters[start:] + letters[:start]
    return SyllableForm(tuple(runs(rotated)), offset=start)
