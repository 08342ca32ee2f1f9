"""Words over a free group of finite rank.

Letters are nonzero signed integers: +i stands for the i-th generator,
-i for its inverse.  A word is a finite letter sequence together with the
ambient rank.  Raw length len(w) counts letters as written; reduced
length counts letters after free reduction.
"""

from __future__ import annotations

import string
from dataclasses import dataclass


class RankMismatchError(ValueError):
    """Operands live in free groups of different ranks."""


class WordParseError(ValueError):
    """Text does not parse under the compact word format."""


def letter_key(x: int) -> tuple[int, bool]:
    """Canonical letter order: x1 < x1^-1 < x2 < x2^-1 < ..."""
    return (abs(x), x < 0)


def letter_to_char(x: int) -> str:
    if x > 0:
        return string.ascii_lowercase[x - 1]
    return string.ascii_uppercase[-x - 1]


def char_to_letter(c: str) -> int:
    if c in string.ascii_lowercase:
        return string.ascii_lowercase.index(c) + 1
    if c in string.ascii_uppercase:
        return -(string.ascii_uppercase.index(c) + 1)
    raise WordParseError(f"unknown symbol {c!r}")


def reduce_letters(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Single left-to-right stack pass; canonical reduced form."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")

    def __len__(self) -> int:
        """Raw length: letters as written, no reduction."""
        return len(self.letters)

    @property
    def reduced_length(self) -> int:
        return len(reduce_letters(self.letters))

    @property
    def is_reduced(self) -> bool:
        return all(self.letters[i] != -self.letters[i + 1] for i in range(len(self.letters) - 1))

    @property
    def is_cyclically_reduced(self) -> bool:
        if not self.is_reduced:
            return False
        return not self.letters or self.letters[0] != -self.letters[-1]

    def __repr__(self) -> str:
        return f"Word({render_word(self)!r}, rank={self.rank})"


@dataclass(frozen=True)
class CyclicDecomposition:
    conjugator: Word
    core: Word


def word(rank: int, *letters: int) -> Word:
    return Word(tuple(letters), rank)


def empty_word(rank: int) -> Word:
    return Word((), rank)


def free_reduce(w: Word) -> Word:
    return Word(reduce_letters(w.letters), w.rank)


def concat(u: Word, v: Word) -> Word:
    if u.rank != v.rank:
        raise RankMismatchError(f"rank {u.rank} != rank {v.rank}")
    return Word(reduce_letters(u.letters + v.letters), u.rank)


def invert(w: Word) -> Word:
    return Word(tuple(-x for x in reversed(w.letters)), w.rank)


def graphically_equal(u: Word, v: Word) -> bool:
    """Letter-by-letter equality; no reduction applied."""
    return u.letters == v.letters


def cyclic_reduce(w: Word) -> CyclicDecomposition:
    reduced = list(reduce_letters(w.letters))
    conj: list[int] = []
    while len(reduced) >= 2 and reduced[0] == -reduced[-1]:
        conj.append(reduced[0])
        reduced = reduced[1:-1]
    return CyclicDecomposition(Word(tuple(conj), w.rank), Word(tuple(reduced), w.rank))


def parse_word(text: str, rank: int) -> Word:
    """Compact format: "abA" = x1 x2 x1^-1; "1" is the empty word.

    The letter sequence is kept as written; reduction is a separate step.
    """
    if text == "1":
        return empty_word(rank)
    if not text:
        raise WordParseError("empty string is not a word; use '1' for the empty word")
    letters = []
    for c in text:
        x = char_to_letter(c)
        if abs(x) > rank:
            raise WordParseError(f"symbol {c!r} exceeds rank {rank}")
        letters.append(x)
    return Word(tuple(letters), rank)


def render_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return "".join(letter_to_char(x) for x in w.letters)


def all_reduced_words(rank: int, max_len: int):
    """All reduced words of length <= max_len, in (length, canonical) order."""
    alphabet = sorted(
        [g for i in range(1, rank + 1) for g in (i, -i)], key=letter_key
    )
    level: list[tuple[int, ...]] = [()]
    yield Word((), rank)
    for _ in range(max_len):
        nxt = []
        for w in level:
            for x in alphabet:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        for w in nxt:
            yield Word(w, rank)
        level = nxt
