#!/usr/bin/env python3
"""Census of primitive elements by reduced length.

Counts, for the free group of the given rank, how many reduced words of
each length up to --max-len are primitive, and prints one row per
length.  Useful as a quick sanity check of the minimizer: the counts are
invariant under inversion and under relabeling generators.
"""

from __future__ import annotations

import argparse
from collections import Counter

from freegrp.minimize import primitives_up_to
from freegrp.words import render_word


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--show-words", action="store_true")
    ns = ap.parse_args(argv)

    found = primitives_up_to(ns.rank, ns.max_len)
    by_length = Counter(len(w.letters) for w in found)
    print(f"rank {ns.rank}, lengths 1..{ns.max_len}")
    for length in range(1, ns.max_len + 1):
        print(f"length {length}: {by_length.get(length, 0)} primitives")
    print(f"total: {len(found)}")
    if ns.show_words:
        for w in sorted(found, key=lambda w: (len(w.letters), w.letters)):
            print(" ", render_word(w))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
