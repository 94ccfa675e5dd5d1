"""Command-line entry point: ``collatz-struct {table,classify,invert}``.

Exit codes: 0 pass, 2 usage error, 3 a checked property failed, 4 order cap
exceeded. Data goes to stdout (or ``--output``); verdict lines go to stderr.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import classify as cl
from . import export as ex
from . import inverse as inv
from . import tables as tb
from .structure import Convention, ParityWord, parity_vector

EXIT_OK, EXIT_USAGE, EXIT_PROPERTY, EXIT_CAP = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _word(text: str) -> ParityWord:
    try:
        return ParityWord.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def _orders(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad order list {text!r}") from None


def _glyphs(text: str) -> str:
    if len(text) != 2 or text[0] == text[1]:
        raise argparse.ArgumentTypeError("glyphs must be two distinct characters, e.g. '#.'")
    return text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="collatz-struct", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=_positive, default=None, help="row-range workers (default: CPU count)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("csv", "json", "text"), default=None):
        sp.add_argument("--format", choices=formats, default=default or formats[0])
        sp.add_argument("--output", type=Path, default=None)
        sp.add_argument("--digits", type=int, default=20, help="decimal places when rendering rationals")

    t = sub.add_parser("table", help="chromoform / chromologue tables and completeness checks")
    common(t)
    t.add_argument("--first", type=_positive, default=1)
    t.add_argument("--order", type=int, required=True)
    t.add_argument("--view", choices=("chromoform", "structural", "decompose", "chromologue", "prolong", "poly"),
                   default="chromoform")
    t.add_argument("--rows", type=_positive, default=1, help="chromologue rows q")
    t.add_argument("--extra", type=int, default=1, help="prolongation columns k (uses 2^k rows)")
    t.add_argument("--blocks", type=_positive, default=2, help="chromoforms in a polychromoform prefix")
    t.add_argument("--order-cap", type=int, default=None, help="override the order cap (env COLLATZ_ORDER_CAP)")
    t.add_argument("--glyphs", type=_glyphs, default="#.")

    c = sub.add_parser("classify", help="sequence / word classification and type counts")
    common(c, ("json", "csv"))
    c.add_argument("--order", type=int, default=None)
    mode = c.add_mutually_exclusive_group(required=True)
    mode.add_argument("--gen", type=_positive)
    mode.add_argument("--word", type=_word)
    mode.add_argument("--counts", action="store_true")
    mode.add_argument("--trend", type=_orders)
    mode.add_argument("--poly", action="store_true")
    c.add_argument("--reversal", action="store_true", help="with --gen: chromologue reversal point")

    i = sub.add_parser("invert", help="generators of parity words and periodic-word analysis")
    # growth tables default to CSV, every other invert report to JSON
    common(i, ("json", "csv"), default="auto")
    mode = i.add_mutually_exclusive_group(required=True)
    mode.add_argument("--word", type=_word)
    mode.add_argument("--base", type=_word)
    mode.add_argument("--cycle", type=_word)
    mode.add_argument("--bound", action="store_true")
    i.add_argument("--i0", type=int, choices=(0, 1), default=None, help="generator parity for G: words")
    i.add_argument("--tail", type=_word, default=None)
    i.add_argument("--repeat", type=_positive, default=1)
    i.add_argument("--order", type=_positive, default=None)
    i.add_argument("--ratio", type=Fraction, default=Fraction(1, 2))
    return p


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8", newline="\n")


def _verdict(name: str, ok: bool) -> int:
    print(f"{name}: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_PROPERTY


def _render_structural(s: tb.StructuralMatrix, args) -> str:
    if args.format == "json":
        return ex.structural_json(s)
    if args.format == "text":
        return ex.chromatic_text(s, args.glyphs)
    return ex.structural_csv(s)


def _render_matrix(m: tb.ChromoformMatrix, args) -> str:
    if args.format == "json":
        return ex.matrix_json(m)
    if args.format == "text":
        return ex.chromatic_text(tb.structural_matrix(m), args.glyphs)
    return ex.matrix_csv(m)


def cmd_table(args) -> int:
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    cap = args.order_cap
    n = args.order
    if args.view in ("chromoform", "structural", "decompose", "poly"):
        tb.check_order(n, cap)
    if args.view == "chromoform":
        m = tb.build_chromoform(args.first, n, cap=cap, workers=args.threads)
        _emit(_render_matrix(m, args), args.output)
        return _verdict("completeness", tb.verify_completeness(tb.structural_matrix(m)))
    if args.view == "structural":
        s = tb.structural_words(args.first, n, cap=cap, workers=args.threads)
        _emit(_render_structural(s, args), args.output)
        return _verdict("completeness", tb.verify_completeness(s))
    if args.view == "decompose":
        d = tb.decompose_perfect(tb.build_chromoform(args.first, n, cap=cap, workers=args.threads))
        if args.format == "json":
            _emit(ex.dumps({"odd_first": ex.matrix_dict(d.odd_first),
                            "even_first": ex.matrix_dict(d.even_first)}), args.output)
        else:
            _emit("\n".join(_render_matrix(h, args) for h in (d.odd_first, d.even_first)), args.output)
        return _verdict("completeness", all(tb.verify_completeness(s) for s in d.reduced_structures()))
    if args.view == "chromologue":
        c = tb.build_chromologue(args.first, n, args.rows)
        _emit(_render_chromologue(c, args), args.output)
        return _verdict("isochromatic", c.is_isochromatic())
    if args.view == "prolong":
        if args.extra < 0:
            raise UsageError("--extra must be >= 0")
        if args.extra:
            tb.check_order(args.extra, cap)
        c = tb.build_chromologue(args.first, n, 1 << args.extra)
        p = tb.prolong_chromologue(c, args.extra)
        longer = tb.FractionalChromologue(c.fundamental_generator, n + args.extra, p.rows)
        _emit(_render_chromologue(longer, args), args.output)
        return _verdict("completeness", args.extra == 0 or tb.verify_completeness(p.suffix_structure()))
    blocks = tb.polychromoform_prefix(args.first, n, args.blocks, cap=cap, workers=args.threads)
    structs = [tb.structural_matrix(b) for b in blocks]
    if args.format == "json":
        _emit(ex.dumps([ex.matrix_dict(b) for b in blocks]), args.output)
    else:
        _emit("\n".join(_render_matrix(b, args) for b in blocks), args.output)
    ok = all(tb.verify_completeness(s) and s.same_as(structs[0]) for s in structs)
    return _verdict("isoformy", ok)


def _render_chromologue(c: tb.FractionalChromologue, args) -> str:
    if args.format == "json":
        return ex.chromologue_json(c)
    if args.format == "text":
        s = tb.StructuralMatrix.from_bits([[t & 1 for t in r.terms] for r in c.rows], c.generators)
        return ex.chromatic_text(s, args.glyphs)
    return ex.chromologue_csv(c)


def cmd_classify(args) -> int:
    if args.gen is not None:
        if args.order is None or args.order < 1:
            raise UsageError("--gen needs --order >= 1")
        sc = cl.classify_sequence(args.gen, args.order)
        word = parity_vector(args.gen, args.order, Convention.GENERATED)
        report = {
            "generator": args.gen,
            "order": args.order,
            "word": str(word),
            "principal": sc.principal.value,
            "growth": sc.growth.value,
            "b_subtype": sc.b_subtype.value if sc.b_subtype else None,
            "odd_count": word.popcount,
            "alpha": cl.reversal_coefficient(args.order),
        }
        if args.reversal:
            if sc.principal is cl.Principal.A:
                raise UsageError("reversal point is only defined for type B chromologues")
            info = cl.chromologue_reversal_point(args.gen, args.order)
            report["reversal"] = {"threshold": ex.rational(info.threshold), "i_max": info.i_max,
                                  "p_i_max": info.p_i_max}
        _emit(ex.dumps(report), args.output)
        return EXIT_OK
    if args.word is not None:
        if args.word.convention is not Convention.GENERATED:
            raise UsageError("classify --word expects a G: word")
        wc = cl.classify_word(args.word)
        _emit(ex.dumps({
            "word": str(args.word),
            "principal": wc.principal.value,
            "threshold": ex.rational(wc.reversal.threshold) if wc.reversal else None,
        }), args.output)
        return EXIT_OK
    if args.counts:
        if args.order is None:
            raise UsageError("--counts needs --order")
        try:
            counts = cl.count_types(args.order)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit(ex.dumps(ex.counts_report(counts, args.digits)), args.output)
        return EXIT_OK
    if args.poly:
        if args.order is None or args.order < 1:
            raise UsageError("--poly needs --order >= 1")
        pc = cl.polychromologue_counts(args.order)
        _emit(ex.dumps({"order": pc.order, "h_A": pc.h_A, "h_B": pc.h_B, "r_A": ex.rational(pc.r_A),
                        "r_B": ex.rational(pc.r_B), "method": pc.method}), args.output)
        return EXIT_OK
    try:
        trend = cl.proportion_trend(args.trend)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        _emit(ex.trend_csv(trend.counts, args.digits), args.output)
    else:
        _emit(ex.dumps([ex.counts_report(c, args.digits) for c in trend.counts]), args.output)
    return _verdict("r_A strictly decreasing", trend.strictly_decreasing)


def cmd_invert(args) -> int:
    if args.format == "csv" and args.base is None:
        raise UsageError("--format csv applies to --base growth tables only")
    if args.word is not None:
        if args.word.convention is Convention.GENERATED and args.i0 is None:
            raise UsageError("G: words need --i0")
        try:
            g = inv.generator_for_word(args.word, args.i0)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit(ex.dumps({"word": str(args.word), "modulus": g.modulus, "residue": g.residue,
                        "minimal": g.minimal}), args.output)
        return EXIT_OK
    if args.base is not None:
        if args.base.convention is not Convention.INCLUSIVE or (args.tail and args.tail.convention
                                                                is not Convention.INCLUSIVE):
            raise UsageError("--base and --tail must be I: words")
        rows = inv.minimal_generator_growth(args.base, args.tail, args.repeat)
        if args.format == "json":
            _emit(ex.dumps([{"k": r.k, "length": r.length, "minimal_generator": r.minimal_generator}
                            for r in rows]), args.output)
        else:
            _emit(ex.growth_csv(rows), args.output)
        return EXIT_OK
    if args.cycle is not None:
        if args.cycle.convention is not Convention.INCLUSIVE:
            raise UsageError("--cycle expects an I: word")
        a = inv.cycle_fixed_point(args.cycle)
        _emit(ex.dumps({
            "word": str(a.word),
            "map": str(a.map),
            "fixed_point": ex.rational(a.fixed_point) if a.fixed_point is not None else None,
            "verdict": a.verdict.value,
        }), args.output)
        return EXIT_OK
    if args.order is None:
        raise UsageError("--bound needs --order")
    try:
        rep = inv.nonconvertible_bound(args.order, args.ratio)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(ex.dumps({
        "order": rep.order, "r": ex.rational(rep.r), "r_n": ex.rational(rep.r_n), "p0": rep.p0,
        "z_plus": ex.rational(rep.z_plus), "rho_plus": ex.rational(rep.rho_plus),
        "bound": ex.rational(rep.bound), "decimal_rho_plus": ex.render_decimal(rep.rho_plus, args.digits),
    }), args.output)
    return _verdict("density bound", rep.holds)


COMMANDS = {"table": cmd_table, "classify": cmd_classify, "invert": cmd_invert}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except tb.OrderCapExceeded as exc:
        print(f"error: {exc}; raise --order-cap or set COLLATZ_ORDER_CAP", file=sys.stderr)
        return EXIT_CAP
    except AssertionError as exc:
        print(f"property failure: {exc}", file=sys.stderr)
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
