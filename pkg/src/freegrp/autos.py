"""Whitehead automorphisms, inner automorphisms, kill maps and endomorphisms.

A Whitehead automorphism is either a signed permutation of the generators
(type W1) or a cut move defined by a letter set S and a multiplier letter
a with a in S, a^-1 not in S (type W2).  The cut move sends a letter x to

    x          if x = a or x = a^-1,
    x a        if x in S, x^-1 not in S (and x != a),
    a^-1 x a   if both x and x^-1 are in S,
    x          if neither x nor x^-1 is in S.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .words import (
    RankMismatchError,
    Word,
    char_to_letter,
    letter_key,
    letter_to_char,
    reduce_letters,
)


@dataclass(frozen=True)
class Perm:
    """Signed permutation of the generators (type W1).

    images[i-1] is the image letter of the i-th generator; the image of an
    inverse letter is forced by commuting with inversion.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(abs(x) for x in self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def rank(self) -> int:
        return len(self.images)

    def image_of(self, x: int) -> int:
        return self.images[x - 1] if x > 0 else -self.images[-x - 1]


@dataclass(frozen=True)
class Cut:
    """Cut move (type W2) given by its member set and multiplier letter."""

    members: frozenset[int]
    multiplier: int

    def __post_init__(self) -> None:
        if self.multiplier not in self.members:
            raise ValueError("multiplier must belong to the member set")
        if -self.multiplier in self.members:
            raise ValueError("inverse of the multiplier must not belong to the member set")


WhiteheadDescriptor = Perm | Cut


@dataclass(frozen=True)
class Endomorphism:
    """Endomorphism given by the images of the generators, stored reduced."""

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError(f"expected {self.rank} images, got {len(self.images)}")
        reduced = tuple(Word(reduce_letters(w.letters), self.rank) for w in self.images)
        object.__setattr__(self, "images", reduced)

    def image_letters(self, x: int) -> tuple[int, ...]:
        if x > 0:
            return self.images[x - 1].letters
        return tuple(-y for y in reversed(self.images[-x - 1].letters))


@dataclass(frozen=True)
class InnerAut:
    """Conjugation x -> y x y^-1 by a single letter y."""

    conjugating_letter: int

    def as_endo(self, rank: int) -> Endomorphism:
        y = self.conjugating_letter
        return Endomorphism(
            rank,
            tuple(Word(reduce_letters((y, i, -y)), rank) for i in range(1, rank + 1)),
        )


@dataclass(frozen=True)
class KillMap:
    """Endomorphism sending one generator to the identity, fixing the rest."""

    killed_letter: int

    def as_endo(self, rank: int) -> Endomorphism:
        k = abs(self.killed_letter)
        return Endomorphism(
            rank,
            tuple(Word(() if i == k else (i,), rank) for i in range(1, rank + 1)),
        )


def cut_suffix_set(d: Cut) -> frozenset[int]:
    """Letters that pick up an 'a' suffix under d (S minus the multiplier)."""
    return d.members - {d.multiplier}


def apply_letter(d: WhiteheadDescriptor, x: int, rank: int) -> Word:
    if isinstance(d, Perm):
        return Word((d.image_of(x),), rank)
    a = d.multiplier
    if x == a or x == -a:
        return Word((x,), rank)
    suffix = x in d.members
    prefix = -x in d.members
    letters = ((-a,) if prefix else ()) + (x,) + ((a,) if suffix else ())
    return Word(letters, rank)


def apply_letters(d: WhiteheadDescriptor, letters: tuple[int, ...]) -> tuple[int, ...]:
    """Image letter sequence, freely reduced."""
    if isinstance(d, Perm):
        return reduce_letters(tuple(d.image_of(x) for x in letters))
    a = d.multiplier
    out: list[int] = []
    for x in letters:
        if x != a and x != -a:
            if -x in d.members:
                if out and out[-1] == a:
                    out.pop()
                else:
                    out.append(-a)
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
        if x != a and x != -a and x in d.members:
            if out and out[-1] == -a:
                out.pop()
            else:
                out.append(a)
    return reduce_letters(tuple(out))


def apply(d: WhiteheadDescriptor, w: Word) -> Word:
    return Word(apply_letters(d, w.letters), w.rank)


def inverse_descriptor(d: WhiteheadDescriptor) -> WhiteheadDescriptor:
    if isinstance(d, Perm):
        inv = [0] * len(d.images)
        for i, y in enumerate(d.images, start=1):
            if y > 0:
                inv[y - 1] = i
            else:
                inv[-y - 1] = -i
        return Perm(tuple(inv))
    # Swapping the multiplier for its inverse in S reverses every rule:
    # xa -> xa^-1 and a^-1 x a -> a x a^-1 on the same letters.
    a = d.multiplier
    return Cut((d.members - {a}) | {-a}, -a)


def as_endo(d: WhiteheadDescriptor, rank: int) -> Endomorphism:
    return Endomorphism(
        rank, tuple(apply_letter(d, i, rank) for i in range(1, rank + 1))
    )


def identity_endo(rank: int) -> Endomorphism:
    return Endomorphism(rank, tuple(Word((i,), rank) for i in range(1, rank + 1)))


def apply_endo(phi: Endomorphism, w: Word) -> Word:
    if w.rank > phi.rank:
        raise RankMismatchError(f"word rank {w.rank} exceeds endomorphism rank {phi.rank}")
    out: list[int] = []
    for x in w.letters:
        for y in phi.image_letters(x):
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return Word(tuple(out), phi.rank)


def compose(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """(f o g)(x) = f(g(x))."""
    if f.rank != g.rank:
        raise RankMismatchError(f"rank {f.rank} != rank {g.rank}")
    return Endomorphism(f.rank, tuple(apply_endo(f, img) for img in g.images))


def signed_letters(rank: int) -> list[int]:
    """All letters in canonical order x1, x1^-1, x2, x2^-1, ..."""
    return [g for i in range(1, rank + 1) for g in (i, -i)]


@lru_cache(maxsize=None)
def enumerate_whitehead(rank: int) -> tuple[WhiteheadDescriptor, ...]:
    """All cut descriptors, then all signed permutations, in canonical order.

    Cut count is 2n * 4^(n-1): a multiplier letter and, for every other
    generator g, one of four membership states for {g, g^-1} in S.
    """
    if rank < 1:
        raise ValueError("rank must be >= 1")
    # Canonical order: multiplier in plain signed-integer order, then the
    # member set as a bitmask over the letters, again in signed-integer order.
    mask_bit = {x: i for i, x in enumerate(sorted(signed_letters(rank)))}
    out: list[WhiteheadDescriptor] = []
    for a in sorted(signed_letters(rank)):
        others = [i for i in range(1, rank + 1) if i != abs(a)]
        cuts = []
        for states in itertools.product(((), (1,), (-1,), (1, -1)), repeat=len(others)):
            members = {a}
            for g, signs in zip(others, states):
                for s in signs:
                    members.add(s * g)
            cuts.append(Cut(frozenset(members), a))
        cuts.sort(key=lambda d: sum(1 << mask_bit[x] for x in d.members))
        out.extend(cuts)
    perms = [
        Perm(tuple(s * p for s, p in zip(signs, perm)))
        for perm in itertools.permutations(range(1, rank + 1))
        for signs in itertools.product((1, -1), repeat=rank)
    ]
    perms.sort(key=lambda d: tuple(mask_bit[x] for x in d.images))
    out.extend(perms)
    return tuple(out)


def is_identity_descriptor(d: WhiteheadDescriptor, rank: int) -> bool:
    if isinstance(d, Perm):
        return d.images == tuple(range(1, rank + 1))
    return cut_suffix_set(d) == frozenset()


def descriptor_sort_key(d: WhiteheadDescriptor, rank: int):
    order = {x: i for i, x in enumerate(sorted(signed_letters(rank)))}
    if isinstance(d, Cut):
        mask = sum(1 << order[x] for x in d.members)
        return (0, order[d.multiplier], mask)
    return (1, tuple(order[x] for x in d.images))


def format_descriptor(d: WhiteheadDescriptor) -> str:
    if isinstance(d, Cut):
        members = ",".join(
            letter_to_char(x) for x in sorted(d.members, key=letter_key)
        )
        return f"W2(a={letter_to_char(d.multiplier)}; S={members})"
    pairs = ", ".join(
        f"{letter_to_char(i)}→{letter_to_char(y)}"
        for i, y in enumerate(d.images, start=1)
    )
    return f"W1(perm: {pairs})"


def descriptor_to_json(d: WhiteheadDescriptor) -> dict:
    if isinstance(d, Cut):
        return {
            "type": "W2",
            "a": letter_to_char(d.multiplier),
            "S": [letter_to_char(x) for x in sorted(d.members, key=letter_key)],
        }
    return {
        "type": "W1",
        "perm": {
            letter_to_char(i): letter_to_char(y)
            for i, y in enumerate(d.images, start=1)
        },
    }


class DescriptorParseError(ValueError):
    """Text does not parse as a Whitehead descriptor."""


def parse_descriptor(text: str, rank: int) -> WhiteheadDescriptor:
    """Parse the text forms emitted by format_descriptor.

    Accepts both the arrow character and '->' in W1 forms.
    """
    text = text.strip()
    if text.startswith("W2(") and text.endswith(")"):
        body = text[3:-1]
        try:
            a_part, s_part = body.split(";")
            a = char_to_letter(a_part.strip().removeprefix("a="))
            s_body = s_part.strip().removeprefix("S=")
            members = frozenset(
                char_to_letter(tok.strip()) for tok in s_body.split(",") if tok.strip()
            )
            return Cut(members, a)
        except ValueError as e:
            raise DescriptorParseError(f"bad W2 descriptor {text!r}: {e}") from e
    if text.startswith("W1(perm:") and text.endswith(")"):
        body = text[len("W1(perm:"):-1]
        images = [0] * rank
        try:
            for pair in body.split(","):
                pair = pair.replace("->", "→")
                src, dst = pair.split("→")
                i = char_to_letter(src.strip())
                images[i - 1] = char_to_letter(dst.strip())
            return Perm(tuple(images))
        except (ValueError, IndexError) as e:
            raise DescriptorParseError(f"bad W1 descriptor {text!r}: {e}") from e
    raise DescriptorParseError(f"unrecognized descriptor {text!r}")
