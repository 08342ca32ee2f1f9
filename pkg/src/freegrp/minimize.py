"""Length minimization over the automorphism orbit via Whitehead moves.

Greedy descent on cut moves is enough: while a word is not orbit-minimal
there is a cut move that strictly shortens it, and permutation moves never
change length.  A breadth-first orbit search doubles as an independent
oracle for the greedy result.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .autos import (
    Cut,
    WhiteheadDescriptor,
    apply_letters,
    cut_suffix_set,
    enumerate_whitehead,
    format_descriptor,
    is_identity_descriptor,
    signed_letters,
)
from .words import Word, letter_key, reduce_letters, render_word


@dataclass(frozen=True)
class MinimizationTrace:
    start: Word
    steps: tuple[tuple[WhiteheadDescriptor, Word], ...]

    @property
    def final(self) -> Word:
        if self.steps:
            return self.steps[-1][1]
        return Word(reduce_letters(self.start.letters), self.start.rank)


def _letter_index(rank: int) -> dict[int, int]:
    return {x: i for i, x in enumerate(signed_letters(rank))}


@lru_cache(maxsize=None)
def _cut_tables(rank: int):
    """Per cut move: index sets driving the length-change count.

    A letter x gains an 'a' suffix iff x is in S - {a} and an 'a^-1' prefix
    iff x^-1 is.  One letter pair cancels at each adjacency y z of the word
    with y in S and z^-1 in S (this covers suffix-meets-prefix as well as an
    inserted multiplier meeting a literal a^-1 or a letter).  Identity-acting
    cuts (S = {a}) are dropped: they never shorten.
    """
    idx = _letter_index(rank)
    tables = []
    for d in enumerate_whitehead(rank):
        if not isinstance(d, Cut) or is_identity_descriptor(d, rank):
            continue
        suffix = cut_suffix_set(d)
        tables.append(
            (
                d,
                tuple(sorted(idx[x] for x in suffix)),
                tuple(sorted(idx[-x] for x in suffix)),
                tuple(sorted(idx[x] for x in d.members)),
                tuple(sorted(idx[-x] for x in d.members)),
            )
        )
    return tuple(tables)


def _cut_delta(
    suffix: tuple[int, ...],
    prefix: tuple[int, ...],
    members: tuple[int, ...],
    inv_members: tuple[int, ...],
    cnt: list[int],
    adj: list[list[int]],
) -> int:
    """Reduced-length change of a cut move on a reduced word."""
    gain = sum(cnt[i] for i in suffix) + sum(cnt[j] for j in prefix)
    cancel = sum(adj[i][j] for i in members for j in inv_members)
    return gain - 2 * cancel


@lru_cache(maxsize=None)
def _np_tables(rank: int):
    """Indicator matrices over the cut moves for vectorized delta scans."""
    tables = _cut_tables(rank)
    m = 2 * rank
    gain = np.zeros((len(tables), m), dtype=np.int64)
    mem = np.zeros((len(tables), m), dtype=np.int64)
    inv = np.zeros((len(tables), m), dtype=np.int64)
    cuts = []
    for k, (d, suffix, prefix, members, inv_members) in enumerate(tables):
        cuts.append(d)
        for i in suffix:
            gain[k, i] += 1
        for j in prefix:
            gain[k, j] += 1
        mem[k, list(members)] = 1
        inv[k, list(inv_members)] = 1
    return tuple(cuts), gain, mem, inv


def _best_cut_from_counts(cnt, adj, rank: int):
    """Canonically-first cut move with the largest decrease, or None.

    cnt and adj are the letter counts and adjacency-pair counts of the
    reduced word (or summed over a word tuple).
    """
    cuts, gain, mem, inv = _np_tables(rank)
    deltas = gain @ cnt - 2 * ((mem @ adj) * inv).sum(axis=1)
    k = int(np.argmin(deltas))
    if deltas[k] >= 0:
        return None
    return cuts[k]


def _counts(letters: tuple[int, ...], rank: int):
    idx = _letter_index(rank)
    m = 2 * rank
    cnt = np.zeros(m, dtype=np.int64)
    adj = np.zeros((m, m), dtype=np.int64)
    prev = None
    for x in letters:
        i = idx[x]
        cnt[i] += 1
        if prev is not None:
            adj[prev, i] += 1
        prev = i
    return cnt, adj


def _best_cut(letters: tuple[int, ...], rank: int):
    """Most-shortening cut move in canonical order, or None."""
    cnt, adj = _counts(letters, rank)
    return _best_cut_from_counts(cnt, adj, rank)


def minimize(w: Word) -> MinimizationTrace:
    current = reduce_letters(w.letters)
    steps = []
    while True:
        d = _best_cut(current, w.rank)
        if d is None:
            break
        current = apply_letters(d, current)
        steps.append((d, Word(current, w.rank)))
    return MinimizationTrace(w, tuple(steps))


def _rle(letters: tuple[int, ...]) -> list[list[int]]:
    runs: list[list[int]] = []
    for x in letters:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    return runs


def _rle_len(runs) -> int:
    return sum(c for _, c in runs)


def _rle_push(stack: list[list[int]], letter: int, count: int) -> None:
    while count:
        if stack and stack[-1][0] == -letter:
            c = min(stack[-1][1], count)
            stack[-1][1] -= c
            count -= c
            if stack[-1][1] == 0:
                stack.pop()
        elif stack and stack[-1][0] == letter:
            stack[-1][1] += count
            count = 0
        else:
            stack.append([letter, count])
            count = 0


def _counts_rle(runs, rank: int):
    idx = _letter_index(rank)
    m = 2 * rank
    cnt = np.zeros(m, dtype=np.int64)
    adj = np.zeros((m, m), dtype=np.int64)
    prev = None
    for x, c in runs:
        i = idx[x]
        cnt[i] += c
        adj[i, i] += c - 1
        if prev is not None:
            adj[prev, i] += 1
        prev = i
    return cnt, adj


def _apply_cut_rle(d: Cut, runs) -> list[list[int]]:
    a = d.multiplier
    out: list[list[int]] = []
    for x, c in runs:
        if x == a or x == -a:
            _rle_push(out, x, c)
            continue
        suffix = x in d.members
        prefix = -x in d.members
        if prefix and suffix:
            _rle_push(out, -a, 1)
            _rle_push(out, x, c)
            _rle_push(out, a, 1)
        elif suffix:
            for _ in range(c):
                _rle_push(out, x, 1)
                _rle_push(out, a, 1)
        elif prefix:
            for _ in range(c):
                _rle_push(out, -a, 1)
                _rle_push(out, x, 1)
        else:
            _rle_push(out, x, c)
    return out


@lru_cache(maxsize=1 << 20)
def _orbit_min_length(letters: tuple[int, ...], rank: int) -> int:
    """Greedy descent identical to minimize, on run-length encoded words."""
    runs = _rle(reduce_letters(letters))
    while True:
        cnt, adj = _counts_rle(runs, rank)
        best = _best_cut_from_counts(cnt, adj, rank)
        if best is None:
            return _rle_len(runs)
        runs = _apply_cut_rle(best, runs)


def orbit_min_length(w: Word) -> int:
    return _orbit_min_length(w.letters, w.rank)


def is_primitive(w: Word) -> bool:
    return orbit_min_length(w) == 1


def orbit_min_bfs(w: Word, cap: int) -> int:
    """Breadth-first closure under all Whitehead moves, lengths capped.

    Independent of the greedy path: applies every enumerated descriptor
    directly and tracks the shortest word reached.
    """
    start = reduce_letters(w.letters)
    if cap < len(start):
        raise ValueError(f"cap {cap} is below the reduced length {len(start)}")
    if not start:
        return 0
    descriptors = enumerate_whitehead(w.rank)
    visited = {start}
    frontier = [start]
    best = len(start)
    while frontier and best > 1:
        nxt = []
        for letters in frontier:
            for d in descriptors:
                image = apply_letters(d, letters)
                if len(image) > cap or image in visited:
                    continue
                visited.add(image)
                nxt.append(image)
                if len(image) < best:
                    best = len(image)
                    if best <= 1:
                        return best
        frontier = nxt
    return best


def primitives_up_to(rank: int, max_len: int) -> set[Word]:
    """All primitive elements with reduced length <= max_len.

    Reverse breadth-first search from the length-1 words: any longer
    primitive descends to length 1 through strictly shorter words, so the
    capped closure of the length-1 words under all moves is exhaustive.
    """
    if max_len < 1:
        raise ValueError("length bound must be >= 1")
    descriptors = enumerate_whitehead(rank)
    seeds = [(x,) for x in signed_letters(rank)]
    visited: set[tuple[int, ...]] = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for letters in frontier:
            for d in descriptors:
                image = apply_letters(d, letters)
                if len(image) > max_len or image in visited:
                    continue
                visited.add(image)
                nxt.append(image)
        frontier = nxt
    return {Word(letters, rank) for letters in visited}


def tuple_minimize(
    words: tuple[tuple[int, ...], ...], rank: int
) -> tuple[tuple[int, ...], ...]:
    """Greedy descent on the total reduced length of a word tuple.

    Each cut move is applied to every word simultaneously; the move with
    the largest total decrease (canonically first on ties) is taken until
    none decreases.
    """
    current = tuple(reduce_letters(w) for w in words)
    m = 2 * rank
    while True:
        cnt = np.zeros(m, dtype=np.int64)
        adj = np.zeros((m, m), dtype=np.int64)
        for w in current:
            c, a = _counts(w, rank)
            cnt += c
            adj += a
        best = _best_cut_from_counts(cnt, adj, rank)
        if best is None:
            return current
        current = tuple(apply_letters(best, w) for w in current)


def sorted_words(words) -> list[Word]:
    """Deterministic order: by length, then canonical letter order."""
    return sorted(words, key=lambda w: (len(w.letters), [letter_key(x) for x in w.letters]))


def trace_to_json(trace: MinimizationTrace) -> list[dict]:
    out = [
        {
            "descriptor": None,
            "word": render_word(trace.start),
            "length": trace.start.reduced_length,
        }
    ]
    for d, word in trace.steps:
        out.append(
            {
                "descriptor": format_descriptor(d),
                "word": render_word(word),
                "length": len(word.letters),
            }
        )
    return out
