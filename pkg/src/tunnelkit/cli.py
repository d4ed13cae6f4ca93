"""Command-line frontend.

Subcommands: middle, split, classify, atlas, braid, identify.  Every
command has a human-readable text form and, with --json, emits
line-delimited JSON records carrying every value the text form prints.
Exit status is 0 on success and 2 on validation errors, with messages
naming the offending parameter.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .braid import position_template_verified, position_word, torus_braid_word
from .classify import coincident, identify_torus_middle, multiple_splittings
from .slopes import SlopeClass, render_slope
from .splitting import SplittingKind, SplittingSpec, gamma_slope, sigma_slope, split
from .torus import (
    TorusKnot,
    associated_matrix,
    continued_fraction,
    invariant_slopes,
    iter_normalized,
    middle_tunnel_sequence,
    normalize,
)

IDENTIFY_BOUND_ENV = "TUNNELKIT_IDENTIFY_BOUND"
KIND_CHOICES = [k.value for k in SplittingKind]


def _knot(a: int, b: int, name: str = "knot") -> TorusKnot:
    try:
        return TorusKnot(a, b)
    except ValueError as err:
        raise CommandError(f"{name}: {err}") from None


class CommandError(Exception):
    pass


def _emit(record: dict, args) -> None:
    if args.json:
        print(json.dumps(record))


def _word_blocks(terms) -> str:
    # Factor form, rightmost factor applied first, zero exponents kept.
    blocks = []
    for i, n in enumerate(terms):
        letter = "L" if i % 2 == 0 else "U"
        exp = n - 1 if i == len(terms) - 1 else n
        blocks.append(f"{letter}^{exp}")
    return " ".join(reversed(blocks))


def _step_rows(steps):
    rows = []
    for i, step in enumerate(steps, start=1):
        rows.append({
            "index": i,
            "kind": step.kind,
            "replaces": step.replaces,
            "trivial": step.trivial,
            "knot": [step.knot.a, step.knot.b] if step.knot else None,
            "slope": render_slope(step.slope) if step.slope is not None else None,
        })
    return rows


def _slopes_text(slopes) -> str:
    return ", ".join(str(s) if isinstance(s, SlopeClass) else render_slope(s)
                     for s in slopes)


def cmd_middle(args) -> int:
    knot = _knot(args.a, args.b)
    if knot.a <= 0:
        norm = normalize(knot)
        raise CommandError(
            f"a must be positive: {knot} reduces to {norm.knot}"
            + (" (mirror image: slopes negate)" if norm.mirrored else ""))
    steps = middle_tunnel_sequence(knot)
    invariants = invariant_slopes(steps)
    record = {"command": "middle", "knot": [knot.a, knot.b],
              "trivial": knot.is_trivial}
    if knot.b != 0:
        terms, negative = continued_fraction(knot.a, knot.b)
        m = associated_matrix(knot)
        record.update({
            "continued_fraction": {"terms": list(terms), "negative": negative},
            "word": list(m.word),
            "matrix": {"p": m.p, "q": m.q, "r": m.r, "s": m.s, "det": m.det()},
            "steps": _step_rows(steps),
            "invariants": [str(s) if isinstance(s, SlopeClass) else render_slope(s)
                           for s in invariants],
        })
        if not args.json:
            sign = "-" if negative else ""
            print(f"knot: {knot}")
            print(f"continued fraction: {knot.a}/{knot.b} = "
                  f"{sign}[{','.join(str(t) for t in terms)}]")
            print(f"matrix word: {_word_blocks(terms)}"
                  f"{' * seed(1 0; 0 -1)' if negative else ''}"
                  f"  (applied first to last: {' '.join(m.word) or '-'})")
            print(f"associated matrix: {m}  det {m.det():+d}")
            print("steps:")
            first_seen = False
            for row, step in zip(_step_rows(steps), steps):
                if step.trivial:
                    detail = "trivial"
                elif not first_seen:
                    detail = (f"slope {render_slope(step.slope)}  "
                              f"invariant {invariants[0]}")
                    first_seen = True
                else:
                    detail = f"slope {render_slope(step.slope)}"
                print(f"  {row['index']}. {step.kind}  replaces {step.replaces:<6}"
                      f"  -> {step.knot}  {detail}")
    if not invariants:
        record["invariants"] = []
        if not args.json:
            print(f"{knot}: trivial knot: no nontrivial cablings")
    elif not args.json:
        print(f"invariants: {_slopes_text(invariants)}")
    _emit(record, args)
    return 0


def cmd_split(args) -> int:
    knot = _knot(args.a, args.b, "base")
    if args.n == 0:
        raise CommandError(
            "n must be nonzero: with no half-twists the twisted disk is the "
            "original disk again and no new tunnel is produced")
    spec = SplittingSpec(knot, SplittingKind(args.kind), args.n)
    try:
        descriptor = split(spec)
    except ValueError as err:
        raise CommandError(str(err)) from None
    _slope, pair = gamma_slope(sigma_slope(spec), spec.n)
    record = descriptor.to_record()
    record["command"] = "split"
    record["sigma_slope"] = sigma_slope(spec)
    record["slope_pair"] = [pair.a, pair.b]
    record["steps"] = _step_rows(descriptor.steps)
    if not args.json:
        bs = descriptor.band_sum
        print(f"base: {knot}  kind: {spec.kind}  n: {spec.n}")
        print(f"band sum: upper {bs.upper}, lower {bs.lower}, "
              f"half-twists {bs.half_twists}")
        print(f"split slope: {render_slope(descriptor.steps[-1].slope)} "
              f"(pair {pair}, untwisted slope {sigma_slope(spec)})")
        binary = descriptor.binary_text() or "trivial"
        print(f"slopes {descriptor.slopes_text()}; binary {binary}; "
              f"depth {descriptor.depth}; {descriptor.classification}")
    _emit(record, args)
    return 0


def cmd_classify(args) -> int:
    knot = _knot(args.a, args.b, "base")
    for n, which in ((args.n1, "n1"), (args.n2, "n2")):
        if n == 0:
            raise CommandError(f"{which} must be nonzero")
    try:
        spec_a = SplittingSpec(knot, SplittingKind(args.kind1), args.n1)
        spec_b = SplittingSpec(knot, SplittingKind(args.kind2), args.n2)
        verdict = coincident(spec_a, spec_b)
    except ValueError as err:
        raise CommandError(str(err)) from None
    record = {
        "command": "classify",
        "base": [knot.a, knot.b],
        "first": {"kind": spec_a.kind.value, "n": spec_a.n},
        "second": {"kind": spec_b.kind.value, "n": spec_b.n},
        "same": verdict.same,
        "case": verdict.case_label(),
        "identification": str(verdict.tunnel) if verdict.tunnel else None,
    }
    if not args.json:
        if verdict.same and verdict.case:
            ident = f": {verdict.tunnel}" if verdict.tunnel else ""
            print(f"SAME (case {verdict.case_label()}){ident}")
        elif verdict.same:
            print("SAME (identical splittings)")
        else:
            print("DISTINCT")
    _emit(record, args)
    return 0


def cmd_atlas(args) -> int:
    if args.max_a < 3:
        raise CommandError("--max-a must be at least 3")
    count = 0
    for knot in iter_normalized(args.max_a):
        families = multiple_splittings(knot, max_twist=args.max_twist)
        if not args.json:
            print(f"{knot}:")
        for family in families:
            count += 1
            record = family.to_record()
            record["command"] = "atlas"
            record["base"] = [knot.a, knot.b]
            if args.json:
                print(json.dumps(record))
            else:
                members = ", ".join(f"{s.kind} n={s.n}" for s in family.members)
                cases = "".join(record["cases"])
                print(f"  {{{members}}}  cases {cases}  "
                      f"slopes {_slopes_text(family.slopes)}  "
                      f"-> {family.identification}")
    if not args.json:
        print(f"{count} families on bases with a <= {args.max_a} "
              f"(twist parameters up to |n| = {args.max_twist})")
    return 0


def cmd_braid(args) -> int:
    knot = _knot(args.a, args.b)
    if args.kind is None:
        try:
            word = torus_braid_word(knot.a, knot.b)
        except ValueError as err:
            raise CommandError(str(err)) from None
        print(word.render())
        _emit({"command": "braid", "knot": [knot.a, knot.b],
               "word": word.render()}, args)
        return 0
    if args.n is None:
        raise CommandError("braid with a splitting kind also needs n")
    kind = SplittingKind(args.kind)
    try:
        word = position_word(knot, kind, args.n)
    except ValueError as err:
        raise CommandError(str(err)) from None
    verified = position_template_verified(kind)
    if not verified:
        print(f"note: the {kind} word template is an unverified analogue "
              "of the drop-rho one", file=sys.stderr)
    print(word.render())
    _emit({"command": "braid", "base": [knot.a, knot.b], "kind": kind.value,
           "n": args.n, "word": word.render(), "verified": verified}, args)
    return 0


def cmd_identify(args) -> int:
    bound = int(os.environ.get(IDENTIFY_BOUND_ENV, "100"))
    slopes = _parse_invariants(args.slopes)
    knot = identify_torus_middle(slopes, max_a=bound)
    record = {
        "command": "identify",
        "slopes": [str(s) for s in slopes],
        "bound": bound,
        "knot": [knot.a, knot.b] if knot else None,
    }
    if not args.json:
        if knot:
            print(f"middle tunnel of {knot}")
        else:
            print(f"no torus-knot middle tunnel matches (searched a <= {bound})")
    _emit(record, args)
    return 0


def _parse_invariants(text: str):
    entries = [piece.strip() for piece in text.replace(",", " ").split()]
    if not entries:
        raise CommandError("slopes: empty invariant sequence")
    first = entries[0]
    if not (first.startswith("[") and first.endswith("]")):
        raise CommandError(
            f"slopes: first invariant must be a mod-1 class in brackets, "
            f"got {first!r}")
    try:
        out = [SlopeClass.of(Fraction(first[1:-1]))]
        out.extend(Fraction(e) for e in entries[1:])
    except (ValueError, ZeroDivisionError) as err:
        raise CommandError(f"slopes: {err}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tunnelkit",
        description="Exact invariants of torus-knot middle tunnels and "
                    "band-sum splitting tunnels.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit line-delimited JSON records")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("middle", parents=[common],
                       help="cabling sequence and slopes of a middle tunnel")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=cmd_middle)

    p = sub.add_parser("split", parents=[common],
                       help="full tunnel descriptor of a splitting")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("kind", choices=KIND_CHOICES)
    p.add_argument("n", type=int, help="half-twists, nonzero")
    p.set_defaults(handler=cmd_split)

    p = sub.add_parser("classify", parents=[common],
                       help="decide whether two splittings give the same tunnel")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("kind1", choices=KIND_CHOICES)
    p.add_argument("n1", type=int)
    p.add_argument("kind2", choices=KIND_CHOICES)
    p.add_argument("n2", type=int)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("atlas", parents=[common],
                       help="all coincidence families over a grid of bases")
    p.add_argument("--max-a", type=int, default=10,
                   help="largest base parameter a (default 10)")
    p.add_argument("--max-twist", type=int, default=3,
                   help="largest |n| for twist-indexed families (default 3)")
    p.set_defaults(handler=cmd_atlas)

    p = sub.add_parser("braid", parents=[common],
                       help="braid word of a torus knot or a splitting position")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("kind", nargs="?", choices=KIND_CHOICES,
                   help="omit for the plain torus-knot word")
    p.add_argument("n", nargs="?", type=int,
                   help="half-twists (0 allowed: untwisted position word)")
    p.set_defaults(handler=cmd_braid)

    p = sub.add_parser("identify", parents=[common],
                       help="find the torus knot with a given middle-tunnel "
                            "invariant sequence")
    p.add_argument("slopes",
                   help='invariant sequence, e.g. "[1/3], 5" '
                        f"(search bound from ${IDENTIFY_BOUND_ENV}, default 100)")
    p.set_defaults(handler=cmd_identify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CommandError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
