"""Endomorphism-level checks: primitivity preservation, automorphism
recognition, appender moves, padded witness words, and the desk-scale
classification sweep.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .autos import (
    Cut,
    Endomorphism,
    apply_endo,
    apply_letter,
    enumerate_whitehead,
)
from .minimize import (
    is_primitive,
    primitives_up_to,
    sorted_words,
    tuple_minimize,
)
from .words import Word, all_reduced_words, letter_key, reduce_letters, render_word

WITNESS_KINDS = ("A", "B", "B'", "C")


class WitnessError(ValueError):
    """Witness parameters violate a bound or a reducedness condition."""


def find_appenders(u: Word):
    """Cut moves with multiplier x1^-1 appending x1^-1 to, or prepending
    x1 to, the word; exhaustive search, absences returned as None.

    The match is letter by letter: gamma1 must fix every letter of the
    word except the last, which maps to itself followed by x1^-1, and
    gamma2 must fix every letter except the first, which maps to x1
    followed by itself.  Matching reduced images as bare strings would
    accept moves that rewrite interior letters and only hit the target
    word by coincidence.
    """
    if not u.letters:
        return None, None
    gamma1 = gamma2 = None
    last = len(u.letters) - 1
    for d in enumerate_whitehead(u.rank):
        if not isinstance(d, Cut) or d.multiplier != -1:
            continue
        if gamma1 is None and all(
            apply_letter(d, x, u.rank).letters == ((x, -1) if i == last else (x,))
            for i, x in enumerate(u.letters)
        ):
            gamma1 = d
        if gamma2 is None and all(
            apply_letter(d, x, u.rank).letters == ((1, x) if i == 0 else (x,))
            for i, x in enumerate(u.letters)
        ):
            gamma2 = d
    return gamma1, gamma2


def minimal_witness_bounds(u: Word, v: Word) -> tuple[int, int]:
    """Smallest (s, r) satisfying the strict padding bounds."""
    lu, lv = len(u.letters), len(v.letters)
    s = lv + 6 * lu + 11
    r = lv + (2 * s + 6) * lu + 4 * s + 9
    return s, r


@dataclass(frozen=True)
class WitnessSpec:
    kind: str
    u: Word
    v: Word
    s: int
    r: int

    def __post_init__(self) -> None:
        if self.kind not in WITNESS_KINDS:
            raise WitnessError(f"unknown witness kind {self.kind!r}")
        if self.u.rank != self.v.rank:
            raise WitnessError("U and V must share a rank")
        u, v = self.u, self.v
        if not u.is_reduced or not v.is_reduced:
            raise WitnessError("U and V must be reduced")
        if not u.is_cyclically_reduced:
            raise WitnessError("U must be cyclically reduced")
        if u.letters and (abs(u.letters[0]) == 1 or abs(u.letters[-1]) == 1):
            raise WitnessError("U must not begin or end with x1 or its inverse")
        lu, lv = len(u.letters), len(v.letters)
        if not self.s > lv + 6 * lu + 10:
            raise WitnessError(
                f"bound violated: s > |V|+6|U|+10 requires s > {lv + 6 * lu + 10}, got {self.s}"
            )
        if not self.r > lv + (2 * self.s + 6) * lu + 4 * self.s + 8:
            need = lv + (2 * self.s + 6) * lu + 4 * self.s + 8
            raise WitnessError(
                f"bound violated: r > |V|+(2s+6)|U|+4s+8 requires r > {need}, got {self.r}"
            )
        if self.kind == "B" and not _raw_reduced(v.letters + u.letters):
            raise WitnessError("kind B requires VU reduced")
        if self.kind == "B'" and not _raw_reduced(u.letters + v.letters):
            raise WitnessError("kind B' requires UV reduced")
        if self.kind == "C" and not _raw_reduced(u.letters + v.letters + u.letters):
            raise WitnessError("kind C requires UVU reduced")


def _raw_reduced(letters: tuple[int, ...]) -> bool:
    return all(letters[i] != -letters[i + 1] for i in range(len(letters) - 1))


def _inv(letters: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


def make_witness(spec: WitnessSpec) -> Word:
    """Padded word of the given kind, built by graphical concatenation.

    The construction aborts if any cancellation would occur, so the raw
    length of the result always equals its reduced length.
    """
    u, r, s = spec.u.letters, spec.r, spec.s
    v = spec.v.letters
    ui = _inv(u)
    p = (1,) * r   # x1^r
    q = (-1,) * r  # x1^-r
    if spec.kind == "A":
        segments = [(u + p) * s, u * 3, p, v, p, ui * 3, (q + u) * s]
    elif spec.kind == "B":
        segments = [(ui + q) * s, ui * 3, p, v, u * 3, q, (u + q) * s]
    elif spec.kind == "B'":
        segments = [(q + u) * s, q, u * 3, v, p, ui * 3, (q + ui) * s]
    else:  # C
        segments = [(p + u) * s, p, u * 3, v, u * 3, q, (ui + p) * s]
    letters = tuple(itertools.chain.from_iterable(segments))
    if not _raw_reduced(letters):
        raise WitnessError(
            f"kind {spec.kind} witness is not reduced for the given U, V"
        )
    return Word(letters, spec.u.rank)


@dataclass(frozen=True)
class PreservationReport:
    bound: int
    tested_count: int
    counterexample: tuple[Word, Word] | None  # (primitive, non-primitive image)

    @property
    def preserves(self) -> bool:
        return self.counterexample is None


@lru_cache(maxsize=None)
def _primitives_sorted(rank: int, bound: int) -> tuple[Word, ...]:
    return tuple(sorted_words(primitives_up_to(rank, bound)))


def check_preserves_primitivity(phi: Endomorphism, bound: int) -> PreservationReport:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    tested = 0
    for p in _primitives_sorted(phi.rank, bound):
        tested += 1
        image = apply_endo(phi, p)
        if not is_primitive(image):
            return PreservationReport(bound, tested, (p, image))
    return PreservationReport(bound, tested, None)


def nielsen_reduce(t: tuple[Word, ...]) -> tuple[Word, ...]:
    """Greedy length-reducing elementary transformations on a word tuple.

    Replaces some entry by a product with another entry or its inverse
    whenever that strictly shortens it; the result is put in canonical
    order (each word or its inverse, whichever is smaller, sorted).
    """
    if not t:
        return t
    rank = t[0].rank
    words = [reduce_letters(w.letters) for w in t]
    changed = True
    while changed:
        changed = False
        for i, j in itertools.permutations(range(len(words)), 2):
            wi, wj = words[i], words[j]
            for candidate in (
                reduce_letters(wi + wj),
                reduce_letters(wi + _inv(wj)),
                reduce_letters(wj + wi),
                reduce_letters(_inv(wj) + wi),
            ):
                if len(candidate) < len(wi):
                    words[i] = candidate
                    changed = True
                    break
    def key(w: tuple[int, ...]):
        return (len(w), [letter_key(x) for x in w])

    canonical = sorted((min(w, _inv(w), key=key) for w in words), key=key)
    return tuple(Word(w, rank) for w in canonical)


def _is_basis_tuple(words: tuple[tuple[int, ...], ...], rank: int) -> bool:
    if len(words) != rank:
        return False
    if any(len(w) != 1 for w in words):
        return False
    return len({abs(w[0]) for w in words}) == rank


def is_automorphism(phi: Endomorphism) -> bool:
    """Whitehead descent on the image tuple, cross-checked by Nielsen
    reduction; disagreement raises as an internal-consistency failure.
    """
    terminal = tuple_minimize(tuple(w.letters for w in phi.images), phi.rank)
    by_whitehead = _is_basis_tuple(terminal, phi.rank)
    reduced = nielsen_reduce(phi.images)
    by_nielsen = _is_basis_tuple(tuple(w.letters for w in reduced), phi.rank)
    if by_whitehead != by_nielsen:
        raise RuntimeError(
            "automorphism checks disagree on "
            f"{render_endo(phi)}: whitehead={by_whitehead}, nielsen={by_nielsen}"
        )
    return by_whitehead


def render_endo(phi: Endomorphism) -> str:
    return ",".join(render_word(w) for w in phi.images)


def parse_endo(text: str, rank: int) -> Endomorphism:
    from .words import parse_word

    parts = text.split(",")
    if len(parts) != rank:
        raise ValueError(f"expected {rank} comma-separated images, got {len(parts)}")
    return Endomorphism(rank, tuple(parse_word(p.strip(), rank) for p in parts))


def enumerate_endomorphisms(rank: int, image_len: int):
    """All endomorphisms whose images are reduced words of length <=
    image_len, in lexicographic order over image tuples.
    """
    pool = list(all_reduced_words(rank, image_len))
    for images in itertools.product(pool, repeat=rank):
        yield Endomorphism(rank, images)


@dataclass(frozen=True)
class SweepEntry:
    endo: Endomorphism
    automorphism: bool
    preserves_at_bound: bool
    resolved_bound: int | None  # bound at which a counterexample appeared
    counterexample: tuple[Word, Word] | None
    unresolved: bool


@dataclass(frozen=True)
class SweepReport:
    rank: int
    image_len: int
    bound: int
    ceiling: int
    entries: tuple[SweepEntry, ...]

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def preserving(self) -> tuple[SweepEntry, ...]:
        """Entries resolved as preserving (no counterexample found)."""
        return tuple(
            e for e in self.entries if e.counterexample is None and not e.unresolved
        )

    @property
    def automorphisms(self) -> tuple[SweepEntry, ...]:
        return tuple(e for e in self.entries if e.automorphism)

    @property
    def unresolved_entries(self) -> tuple[SweepEntry, ...]:
        return tuple(e for e in self.entries if e.unresolved)


def _classify(phi: Endomorphism, bound: int, ceiling: int) -> SweepEntry:
    auto = is_automorphism(phi)
    report = check_preserves_primitivity(phi, bound)
    if not report.preserves:
        return SweepEntry(phi, auto, False, bound, report.counterexample, False)
    if auto:
        return SweepEntry(phi, True, True, None, None, False)
    # Bounded preservation is necessary, not sufficient: escalate until the
    # predicted counterexample appears or the ceiling is hit.
    for higher in range(bound + 1, ceiling + 1):
        report = check_preserves_primitivity(phi, higher)
        if not report.preserves:
            return SweepEntry(phi, False, True, higher, report.counterexample, False)
    return SweepEntry(phi, False, True, None, None, True)


def _classify_chunk(args) -> list[SweepEntry]:
    rank, image_len, bound, ceiling, start, stop = args
    endos = itertools.islice(enumerate_endomorphisms(rank, image_len), start, stop)
    return [_classify(phi, bound, ceiling) for phi in endos]


def sweep_workers() -> int:
    return int(os.environ.get("FREEGRP_WORKERS", "0")) or (os.cpu_count() or 1)


def theorem_sweep(
    rank: int,
    image_len: int,
    bound: int,
    ceiling_extra: int = 4,
    workers: int | None = None,
    progress=None,
) -> SweepReport:
    """Classify every endomorphism with images of length <= image_len by
    bounded primitivity preservation and automorphism recognition.

    Rank 2 is allowed and reported the same way; the n >= 3 regime is the
    interesting one.
    """
    if rank < 2:
        raise ValueError("sweep requires rank >= 2")
    ceiling = bound + ceiling_extra
    total = len(list(all_reduced_words(rank, image_len))) ** rank
    if workers is None:
        workers = sweep_workers()
    entries: list[SweepEntry] = []
    if workers <= 1:
        for k, phi in enumerate(enumerate_endomorphisms(rank, image_len)):
            entries.append(_classify(phi, bound, ceiling))
            if progress and (k + 1) % 2000 == 0:
                progress(k + 1, total)
    else:
        chunk = max(1, total // (workers * 8))
        jobs = [
            (rank, image_len, bound, ceiling, start, min(start + chunk, total))
            for start in range(0, total, chunk)
        ]
        done = 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_classify_chunk, jobs):
                entries.extend(part)
                done += len(part)
                if progress:
                    progress(done, total)
    return SweepReport(rank, image_len, bound, ceiling, tuple(entries))


def sweep_to_json(report: SweepReport) -> dict:
    counterexamples = [
        {
            "endo": render_endo(e.endo),
            "bound": e.resolved_bound,
            "primitive": render_word(e.counterexample[0]),
            "image": render_word(e.counterexample[1]),
        }
        for e in report.entries
        if e.counterexample is not None
    ]
    return {
        "params": {
            "rank": report.rank,
            "image_len": report.image_len,
            "bound": report.bound,
            "ceiling": report.ceiling,
        },
        "total": report.total,
        "preserving": len(report.preserving),
        "automorphisms": len(report.automorphisms),
        "unresolved": [render_endo(e.endo) for e in report.unresolved_entries],
        "counterexamples": counterexamples,
    }
