"""Command-line front end.

Words use the compact format (x1 = "a", x1^-1 = "A", empty word = "1");
rank is always explicit.  Exit codes: 0 success, 1 domain error, 2 usage
error.  `--json` switches the payload to JSON on standard output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import autos, endo, graphs, words
from .minimize import (
    is_primitive,
    minimize,
    primitives_up_to,
    sorted_words,
    trace_to_json,
)


class DomainError(Exception):
    """Wraps domain-level failures for the exit-code contract."""


def _parse_word(text: str, rank: int) -> words.Word:
    try:
        return words.parse_word(text, rank)
    except words.WordParseError as e:
        raise DomainError(str(e)) from e


def _emit(args, payload, text: str) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(text)


def cmd_reduce(args) -> None:
    w = words.free_reduce(_parse_word(args.word, args.rank))
    _emit(args, {"word": words.render_word(w), "length": len(w.letters)}, words.render_word(w))


def cmd_invert(args) -> None:
    w = words.invert(_parse_word(args.word, args.rank))
    _emit(args, {"word": words.render_word(w)}, words.render_word(w))


def cmd_cyclic(args) -> None:
    dec = words.cyclic_reduce(_parse_word(args.word, args.rank))
    payload = {
        "conjugator": words.render_word(dec.conjugator),
        "core": words.render_word(dec.core),
    }
    _emit(args, payload, f"conjugator={payload['conjugator']} core={payload['core']}")


def cmd_apply(args) -> None:
    try:
        d = autos.parse_descriptor(args.descriptor, args.rank)
    except autos.DescriptorParseError as e:
        raise DomainError(str(e)) from e
    w = autos.apply(d, _parse_word(args.word, args.rank))
    _emit(args, {"word": words.render_word(w)}, words.render_word(w))


def cmd_autos(args) -> None:
    descriptors = autos.enumerate_whitehead(args.rank)
    if args.json:
        json.dump([autos.descriptor_to_json(d) for d in descriptors], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for d in descriptors:
            print(autos.format_descriptor(d))


def _graph_output(args, g: graphs.WhiteheadGraph) -> None:
    if args.dot:
        print(graphs.graph_to_dot(g))
    elif args.json:
        json.dump(graphs.graph_to_json(g), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        payload = graphs.graph_to_json(g)
        print("vertices:", " ".join(payload["vertices"]))
        for u, v, count in payload["edges"]:
            suffix = f" x{count}" if count > 1 else ""
            print(f"edge: {u} -- {v}{suffix}")


def cmd_graph(args) -> None:
    w = words.free_reduce(_parse_word(args.word, args.rank))
    _graph_output(args, graphs.standard_graph(w))


def cmd_gengraph(args) -> None:
    w = words.free_reduce(_parse_word(args.word, args.rank))
    if args.wrt < 1 or args.wrt > args.rank:
        raise DomainError(f"generator index {args.wrt} out of range for rank {args.rank}")
    _graph_output(args, graphs.generalized_graph(w, args.wrt))


def cmd_components(args) -> None:
    w = words.free_reduce(_parse_word(args.word, args.rank))
    if args.wrt is not None:
        if args.wrt < 1 or args.wrt > args.rank:
            raise DomainError(f"generator index {args.wrt} out of range for rank {args.rank}")
        g = graphs.generalized_graph(w, args.wrt)
    else:
        g = graphs.standard_graph(w)
    blocks = [
        sorted(words.letter_to_char(v) for v in block)
        for block in graphs.components(g).blocks
    ]
    if args.json:
        json.dump({"blocks": blocks}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for block in blocks:
            print("{" + ",".join(block) + "}")


def cmd_minimize(args) -> None:
    trace = minimize(_parse_word(args.word, args.rank))
    if args.json:
        json.dump(trace_to_json(trace), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for step in trace_to_json(trace):
            d = step["descriptor"] or "start"
            print(f"{d}: {step['word']} (length {step['length']})")


def cmd_primitive(args) -> None:
    result = is_primitive(_parse_word(args.word, args.rank))
    _emit(args, {"primitive": result}, "true" if result else "false")


def cmd_primitives(args) -> None:
    found = sorted_words(primitives_up_to(args.rank, args.max_len))
    rendered = [words.render_word(w) for w in found]
    if args.json:
        json.dump({"count": len(rendered), "primitives": rendered}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for text in rendered:
            print(text)


def cmd_appenders(args) -> None:
    u = words.free_reduce(_parse_word(args.word, args.rank))
    gamma1, gamma2 = endo.find_appenders(u)
    payload = {
        "gamma1": autos.format_descriptor(gamma1) if gamma1 else None,
        "gamma2": autos.format_descriptor(gamma2) if gamma2 else None,
    }
    _emit(
        args,
        payload,
        f"gamma1: {payload['gamma1'] or 'none'}\ngamma2: {payload['gamma2'] or 'none'}",
    )


def cmd_witness(args) -> None:
    kind = {"A": "A", "B": "B", "B'": "B'", "Bp": "B'", "C": "C"}.get(args.kind)
    if kind is None:
        raise DomainError(f"unknown witness kind {args.kind!r}")
    u = _parse_word(args.u, args.rank)
    v = _parse_word(args.v, args.rank)
    s, r = args.s, args.r
    if s is None or r is None:
        min_s, min_r = endo.minimal_witness_bounds(u, v)
        s = s if s is not None else min_s
        r = r if r is not None else min_r
    try:
        spec = endo.WitnessSpec(kind, u, v, s, r)
        w = endo.make_witness(spec)
    except endo.WitnessError as e:
        raise DomainError(str(e)) from e
    payload = {
        "kind": kind,
        "s": s,
        "r": r,
        "length": len(w.letters),
        "word": words.render_word(w),
    }
    _emit(args, payload, words.render_word(w))


def _parse_endo(args) -> autos.Endomorphism:
    try:
        return endo.parse_endo(args.images, args.rank)
    except (ValueError, words.WordParseError) as e:
        raise DomainError(str(e)) from e


def cmd_check_endo(args) -> None:
    report = endo.check_preserves_primitivity(_parse_endo(args), args.bound)
    if report.preserves:
        payload = {"verdict": "preserves", "bound": report.bound, "tested": report.tested_count}
        text = f"preserves (tested {report.tested_count} primitives up to length {report.bound})"
    else:
        p, image = report.counterexample
        payload = {
            "verdict": "counterexample",
            "bound": report.bound,
            "primitive": words.render_word(p),
            "image": words.render_word(image),
        }
        text = (
            f"counterexample: {words.render_word(p)} maps to "
            f"non-primitive {words.render_word(image)}"
        )
    _emit(args, payload, text)


def cmd_is_auto(args) -> None:
    result = endo.is_automorphism(_parse_endo(args))
    _emit(args, {"automorphism": result}, "true" if result else "false")


def cmd_sweep(args) -> None:
    def progress(done, total):
        print(f"sweep: {done}/{total}", file=sys.stderr)

    report = endo.theorem_sweep(
        args.rank,
        args.image_len,
        args.bound,
        ceiling_extra=args.ceiling_extra,
        workers=args.workers,
        progress=progress,
    )
    payload = endo.sweep_to_json(report)
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(f"total endomorphisms: {payload['total']}")
        print(f"preserving: {payload['preserving']}")
        print(f"automorphisms: {payload['automorphisms']}")
        print(f"unresolved: {len(payload['unresolved'])}")
        print(f"counterexamples: {len(payload['counterexamples'])}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freegrp", description="Free group Whitehead-move toolkit"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)
        return p

    for name, fn, help_text in [
        ("reduce", cmd_reduce, "freely reduce a word"),
        ("invert", cmd_invert, "invert a word"),
        ("cyclic", cmd_cyclic, "cyclic reduction into conjugator and core"),
    ]:
        p = add(name, fn, help=help_text)
        p.add_argument("word")

    p = add("apply", cmd_apply, help="apply a Whitehead descriptor to a word")
    p.add_argument("--desc", dest="descriptor", required=True)
    p.add_argument("word")

    add("autos", cmd_autos, help="list all Whitehead descriptors for the rank")

    p = add("graph", cmd_graph, help="standard Whitehead graph")
    p.add_argument("word")
    p.add_argument("--dot", action="store_true")

    p = add("gengraph", cmd_gengraph, help="generalized Whitehead graph")
    p.add_argument("word")
    p.add_argument("--wrt", type=int, required=True, help="generator index ignored as powers")
    p.add_argument("--dot", action="store_true")

    p = add("components", cmd_components, help="connected components of a Whitehead graph")
    p.add_argument("word")
    p.add_argument("--wrt", type=int, default=None)

    p = add("minimize", cmd_minimize, help="greedy Whitehead length minimization trace")
    p.add_argument("word")

    p = add("primitive", cmd_primitive, help="test primitivity")
    p.add_argument("word")

    p = add("primitives", cmd_primitives, help="all primitives up to a length bound")
    p.add_argument("--max-len", type=int, required=True)

    p = add("appenders", cmd_appenders, help="search for x1-appending cut moves")
    p.add_argument("word")

    p = add("witness", cmd_witness, help="build a padded witness word")
    p.add_argument("--kind", required=True, help="A, B, B' (or Bp), C")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--r", type=int, default=None)

    p = add("check-endo", cmd_check_endo, help="bounded primitivity-preservation check")
    p.add_argument("--images", required=True, help="comma-separated images, e.g. a,ab,c")
    p.add_argument("--bound", type=int, required=True)

    p = add("is-auto", cmd_is_auto, help="automorphism recognition")
    p.add_argument("--images", required=True)

    p = add("sweep", cmd_sweep, help="classify endomorphisms against the theorem")
    p.add_argument("--image-len", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--ceiling-extra", type=int, default=4)
    p.add_argument("--workers", type=int, default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.rank < 1:
        print("error: rank must be >= 1", file=sys.stderr)
        return 1
    try:
        args.fn(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
