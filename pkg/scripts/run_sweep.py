#!/usr/bin/env python3
"""Exhaustive endomorphism classification sweep.

Enumerates every endomorphism of the free group of the given rank whose
generator images have length at most --image-len, tests each for
primitivity preservation up to --bound, checks which ones are
automorphisms, and reports whether any primitivity-preserving
non-automorphism shows up.  The expected outcome for rank >= 3 is none.

Example:

    python3 scripts/run_sweep.py --rank 3 --image-len 2 --bound 4 \
        --out sweep_3_2_4.json
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from freegrp.endo import sweep_to_json, theorem_sweep


@dataclass(frozen=True)
class SweepConfig:
    rank: int
    image_len: int
    bound: int
    ceiling_extra: int
    workers: int | None
    out: str | None


def parse_config(argv: list[str] | None = None) -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--image-len", type=int, default=2)
    ap.add_argument("--bound", type=int, default=4)
    ap.add_argument(
        "--ceiling-extra",
        type=int,
        default=4,
        help="extra length allowance when escalating ambiguous cases",
    )
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--out", default=None, help="write the JSON report here")
    ns = ap.parse_args(argv)
    return SweepConfig(ns.rank, ns.image_len, ns.bound, ns.ceiling_extra, ns.workers, ns.out)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    started = time.time()

    def progress(done: int, total: int) -> None:
        if done % 1000 == 0 or done == total:
            elapsed = time.time() - started
            print(f"\r{done}/{total} ({elapsed:.0f}s)", end="", file=sys.stderr)

    report = theorem_sweep(
        cfg.rank,
        cfg.image_len,
        cfg.bound,
        ceiling_extra=cfg.ceiling_extra,
        workers=cfg.workers,
        progress=progress,
    )
    print(file=sys.stderr)
    payload = sweep_to_json(report)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(payload, fh, indent=2)
        print(f"report written to {cfg.out}", file=sys.stderr)

    print(f"rank {cfg.rank}, image length <= {cfg.image_len}, bound {cfg.bound}")
    print(f"endomorphisms:             {payload['total']}")
    print(f"preserve primitivity:      {payload['preserving']}")
    print(f"automorphisms:             {payload['automorphisms']}")
    print(f"unresolved:                {len(payload['unresolved'])}")
    preserving_non_autos = payload["preserving"] - payload["automorphisms"]
    if preserving_non_autos == 0 and not payload["unresolved"]:
        print("no primitivity-preserving non-automorphism found")
        return 0
    print(f"ATTENTION: {preserving_non_autos} preserving non-automorphisms, "
          f"{len(payload['unresolved'])} unresolved")
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
