"""Command-line surface: transforms, codes, rendering, and verification.

Exit code contract: 0 on success, 1 when a verification check fails, 2 on
usage errors (bad arguments, unparseable words, I/O trouble).  All words on
stdin/stdout use the canonical digit-string form with x_0 leftmost.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .codes import builtin_code, enumerate_codewords, minimum_distance
from .flowergeom import features
from .gfield import Word, format_word, format_word_list, parse_word, \
    parse_word_list
from .modlinalg import MatrixOverGfp, mat_vec, parse_matrix
from .ntt import BUILTIN_TRANSFORMS, eigen_spectrum, fixed_space
from .render import RenderSpec, panel, to_svg, to_tikz
from .verify import format_report, run_checks


@dataclass(frozen=True)
class CommandOutcome:
    """Exit code plus the text the command wants on stdout."""

    exit_code: int
    report: str = ""


def _render_spec_from(args: argparse.Namespace) -> RenderSpec:
    return RenderSpec(
        canvas=args.canvas,
        radius_scale=args.radius_scale,
        stroke_width=args.stroke_width,
        light_color=args.light_color,
        dark_color=args.dark_color,
        marker_radius=args.marker_radius,
        grid=not args.no_grid,
        label=args.label,
    )


def _add_render_options(sub: argparse.ArgumentParser) -> None:
    d = RenderSpec()
    sub.add_argument("--canvas", type=float, default=d.canvas,
                     help="cell side length in abstract units")
    sub.add_argument("--radius-scale", type=float, default=d.radius_scale,
                     help="units per field value")
    sub.add_argument("--stroke-width", type=float, default=d.stroke_width)
    sub.add_argument("--light-color", default=d.light_color,
                     help="6-hex-digit RGB for light petals")
    sub.add_argument("--dark-color", default=d.dark_color,
                     help="6-hex-digit RGB for dark petals, thorns, markers")
    sub.add_argument("--marker-radius", type=float, default=d.marker_radius)
    sub.add_argument("--no-grid", action="store_true",
                     help="omit the polar grid behind each flower")
    sub.add_argument("--label", action="store_true",
                     help="print the word under each flower")


def _resolve_matrix(name: str | None, matrix_file: str | None) -> MatrixOverGfp:
    if (name is None) == (matrix_file is None):
        raise ValueError(
            "give exactly one transform: a built-in name or --matrix-file"
        )
    if matrix_file is not None:
        return parse_matrix(Path(matrix_file).read_text(encoding="utf-8"))
    if name not in BUILTIN_TRANSFORMS:
        raise ValueError(
            f"unknown transform {name!r}, expected one of: "
            + ", ".join(sorted(BUILTIN_TRANSFORMS))
        )
    return BUILTIN_TRANSFORMS[name].matrix


def _resolve_code_name(positional: str | None, flag: str | None) -> str:
    if (positional is None) == (flag is None):
        raise ValueError("give exactly one code: positional name or --code")
    return positional if positional is not None else flag


def cmd_transform(args: argparse.Namespace) -> CommandOutcome:
    m = _resolve_matrix(args.name, args.matrix_file)
    word = parse_word(args.word, m.modulus)
    return CommandOutcome(0, format_word(mat_vec(m, word)))


def cmd_invariants(args: argparse.Namespace) -> CommandOutcome:
    m = _resolve_matrix(args.name, args.matrix_file)
    space = fixed_space(m)
    lines = [f"dim={space.dimension}"]
    lines.extend(format_word(w) for w in space.basis)
    return CommandOutcome(0, "\n".join(lines))


def cmd_spectrum(args: argparse.Namespace) -> CommandOutcome:
    m = _resolve_matrix(args.name, args.matrix_file)
    lines = []
    for space in eigen_spectrum(m):
        lines.append(f"lambda={space.eigenvalue.value} dim={space.dimension}")
        lines.extend(format_word(w) for w in space.basis)
    if not lines:
        lines.append("no eigenvalues in the base field")
    return CommandOutcome(0, "\n".join(lines))


def cmd_render(args: argparse.Namespace) -> CommandOutcome:
    spec = _render_spec_from(args)
    word = parse_word(args.word, args.p)
    shape = features(word)
    out = args.out or f"{args.word}.{args.format}"
    if args.format == "svg":
        Path(out).write_bytes(to_svg(shape, spec))
    else:
        Path(out).write_text(to_tikz(shape, spec), encoding="utf-8")
    return CommandOutcome(
        0, f"petals={len(shape.petals)} thorns={len(shape.thorns)}"
    )


def _panel_words(source: str, p: int) -> list[Word]:
    if source == "all-binary-7":
        return [Word(2, tuple((i >> (6 - k)) & 1 for k in range(7)))
                for i in range(128)]
    return parse_word_list(Path(source).read_text(encoding="utf-8"), p)


def cmd_panel(args: argparse.Namespace) -> CommandOutcome:
    spec = _render_spec_from(args)
    words = _panel_words(args.source, args.p)
    data = panel(words, columns=args.columns, spec=spec, workers=args.workers)
    Path(args.out).write_bytes(data)
    return CommandOutcome(0, f"cells={len(words)}")


def cmd_verify(args: argparse.Namespace) -> CommandOutcome:
    results = run_checks()
    code = 0 if all(r.passed for r in results) else 1
    return CommandOutcome(code, format_report(results))


def cmd_mindist(args: argparse.Namespace) -> CommandOutcome:
    code = builtin_code(_resolve_code_name(args.code_name, args.code))
    d = minimum_distance(code)
    return CommandOutcome(0, f"n={code.length} k={code.dimension} d={d}")


def cmd_codewords(args: argparse.Namespace) -> CommandOutcome:
    code = builtin_code(_resolve_code_name(args.code_name, args.code))
    listing = format_word_list(enumerate_codewords(code))
    if args.out:
        Path(args.out).write_text(listing, encoding="utf-8")
        return CommandOutcome(0, f"words={code.size}")
    return CommandOutcome(0, listing.rstrip("\n"))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fieldflower",
        description="Finite-field transforms, linear block codes, and "
                    "flower renderings of GF(p) words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("transform", help="apply a transform to a word")
    tr.add_argument("name", nargs="?", help="built-in transform: hamming | golay")
    tr.add_argument("word", help="input word, digit string with x_0 leftmost")
    tr.add_argument("--matrix-file", help="matrix text file instead of a name")
    tr.set_defaults(handler=cmd_transform)

    inv = sub.add_parser("invariants",
                         help="canonical basis of the fixed space of a transform")
    inv.add_argument("name", nargs="?", help="built-in transform: hamming | golay")
    inv.add_argument("--matrix-file", help="matrix text file instead of a name")
    inv.set_defaults(handler=cmd_invariants)

    sp = sub.add_parser("spectrum",
                        help="all eigenspaces of a transform over its base field")
    sp.add_argument("name", nargs="?", help="built-in transform: hamming | golay")
    sp.add_argument("--matrix-file", help="matrix text file instead of a name")
    sp.set_defaults(handler=cmd_spectrum)

    rd = sub.add_parser("render", help="draw one word as a flower")
    rd.add_argument("word", help="word to draw")
    rd.add_argument("--p", type=int, default=2, help="field modulus (default 2)")
    rd.add_argument("--format", choices=("svg", "tikz"), default="svg")
    rd.add_argument("--out", help="output path (default <word>.<format>)")
    _add_render_options(rd)
    rd.set_defaults(handler=cmd_render)

    pn = sub.add_parser("panel", help="draw many words in a grid layout")
    pn.add_argument("source",
                    help="word-list file, or all-binary-7 for every 7-bit word")
    pn.add_argument("--columns", type=int, default=16)
    pn.add_argument("--p", type=int, default=2,
                    help="field modulus for word-list files (default 2)")
    pn.add_argument("--out", default="panel.svg")
    pn.add_argument("--workers", type=int, default=1,
                    help="parallel cell rendering (output is identical)")
    _add_render_options(pn)
    pn.set_defaults(handler=cmd_panel)

    vf = sub.add_parser("verify", help="run every built-in reference check")
    vf.set_defaults(handler=cmd_verify)

    md = sub.add_parser("mindist", help="code parameters n, k, d of a built-in code")
    md.add_argument("code_name", nargs="?", metavar="code",
                    help="built-in code: hamming | golay")
    md.add_argument("--code", help="alternative to the positional name")
    md.set_defaults(handler=cmd_mindist)

    cw = sub.add_parser("codewords", help="enumerate all codewords of a built-in code")
    cw.add_argument("code_name", nargs="?", metavar="code",
                    help="built-in code: hamming | golay")
    cw.add_argument("--code", help="alternative to the positional name")
    cw.add_argument("--out", help="write the word-list here instead of stdout")
    cw.set_defaults(handler=cmd_codewords)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        outcome = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if outcome.report:
        print(outcome.report.rstrip("\n"))
    return outcome.exit_code


def entrypoint() -> None:
    sys.exit(main())
