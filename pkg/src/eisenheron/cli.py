"""Command-line surface: enumerate, classify, family, pell, verify, embed, render."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import IO, Iterable

from .classify import ClassifiedTriangle, classify, enumerate_perimeter_dominant, family_member
from .errors import (
    EmbeddabilityViolationError,
    FigureError,
    InvalidTriangleError,
    NotLatticeHeronError,
    TheoremViolationError,
)
from .lattice import area_quantum_of, embed, embed_all
from .pell import PellForm, solutions
from .render import figure1_spec, figure_spec_from_json, render_svg
from .triangles import TriangleSides, area_quantum, is_perimeter_dominant
from .verify import run_verification

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_TRIANGLE = 2
EXIT_NOT_HERON = 3
EXIT_NOT_DOMINANT = 4
EXIT_THEOREM_VIOLATION = 10
EXIT_EMBED_VIOLATION = 11

_RECORD_FIELDS = (
    "a", "b", "c", "n", "perimeter_over_sqrt3", "area_times4_over_sqrt3",
    "family", "x", "y", "index",
)


@dataclass(frozen=True)
class TriangleRecord:
    """Serialized classified triangle; x and y are decimal strings because
    family c witnesses outgrow 64-bit consumers by the fifth index."""

    a: int
    b: int
    c: int
    n: int
    perimeter_over_sqrt3: int
    area_times4_over_sqrt3: int
    family: str
    x: str | None
    y: str | None
    index: int | None

    @classmethod
    def from_classified(cls, ct: ClassifiedTriangle) -> "TriangleRecord":
        a, b, c = ct.sides.sorted_desc()
        fam = ct.family
        return cls(
            a=a, b=b, c=c, n=ct.n,
            perimeter_over_sqrt3=a + b + c,
            area_times4_over_sqrt3=ct.n,
            family=fam.tag,
            x=None if fam.x is None else str(fam.x),
            y=None if fam.y is None else str(fam.y),
            index=fam.index,
        )

    def json_line(self) -> str:
        # Fixed field order keeps output byte-stable.
        return json.dumps(
            {name: getattr(self, name) for name in _RECORD_FIELDS},
            separators=(",", ":"),
        )


def _emit_records(records: Iterable[TriangleRecord], fmt: str, out: IO[str]) -> None:
    if fmt == "jsonl":
        for record in records:
            out.write(record.json_line() + "\n")
        return
    header = f"{'a':>12} {'b':>12} {'c':>4} {'n':>12} {'perim':>12} {'family':<12} {'x':>14} {'y':>14} {'index':>5}"
    out.write(header + "\n")
    for r in records:
        out.write(
            f"{r.a:>12} {r.b:>12} {r.c:>4} {r.n:>12} {r.perimeter_over_sqrt3:>12} "
            f"{r.family:<12} {r.x or '-':>14} {r.y or '-':>14} "
            f"{r.index if r.index is not None else '-':>5}\n"
        )


def _threads(args: argparse.Namespace) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("EH_THREADS", "").strip()
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"EH_THREADS must be an integer, got {env!r}") from None
        if value >= 1:
            return value
        raise ValueError(f"EH_THREADS must be >= 1, got {value}")
    return 1


def _open_output(path: str | None) -> tuple[IO[str], bool]:
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def cmd_enumerate(args: argparse.Namespace) -> int:
    records = (
        TriangleRecord.from_classified(ct)
        for ct in enumerate_perimeter_dominant(args.max_w, _threads(args))
    )
    out, owned = _open_output(args.output)
    try:
        _emit_records(records, args.format, out)
    finally:
        if owned:
            out.close()
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        sides = TriangleSides(args.a, args.b, args.c)
    except InvalidTriangleError:
        print("not-a-triangle")
        return EXIT_NOT_TRIANGLE
    if not is_perimeter_dominant(sides):
        print("not-perimeter-dominant")
        return EXIT_NOT_DOMINANT
    if area_quantum(sides) is None:
        print("not-heron")
        return EXIT_NOT_HERON
    ct = classify(sides)
    assert ct is not None
    _emit_records([TriangleRecord.from_classified(ct)], args.format, sys.stdout)
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    records = (
        TriangleRecord.from_classified(family_member(args.family, k))
        for k in range(1, args.count + 1)
    )
    _emit_records(records, args.format, sys.stdout)
    return EXIT_OK


def cmd_pell(args: argparse.Namespace) -> int:
    form = PellForm(4 if args.even_x else 1, args.d)
    for sol in solutions(form, args.count):
        if args.format == "jsonl":
            print(json.dumps(
                {"index": sol.index, "x": str(sol.x), "y": str(sol.y)},
                separators=(",", ":"),
            ))
        else:
            print(f"{sol.index:>4} {sol.x} {sol.y}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(args.max_w, _threads(args))
    for line in report.lines():
        print(line)
    if report.passed:
        print(f"all checks passed (max_w={args.max_w})")
        return EXIT_OK
    print("verification FAILED", file=sys.stderr)
    return EXIT_ERROR


def cmd_embed(args: argparse.Namespace) -> int:
    try:
        sides = TriangleSides(args.a, args.b, args.c)
    except InvalidTriangleError:
        print("not-a-triangle")
        return EXIT_NOT_TRIANGLE
    try:
        embeddings = embed_all(sides) if args.all else [embed(sides)]
    except NotLatticeHeronError:
        print("not-heron")
        return EXIT_NOT_HERON
    a, b, c = sides.sorted_desc()
    for tri in embeddings:
        vertices = " ".join(f"({v.m},{v.n})" for v in tri.vertices)
        squared = " ".join(str(s) for s in tri.squared_sides())
        print(f"{vertices}  squared-sides: {squared}  area-quantum: {area_quantum_of(tri)}")
    expected = " ".join(str(s) for s in sorted((3 * a * a, 3 * b * b, 3 * c * c)))
    print(f"expected squared-sides: {expected}  expected area-quantum: {area_quantum(sides)}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    if args.preset:
        fig = figure1_spec()
    else:
        with open(args.spec, "r", encoding="utf-8") as handle:
            try:
                data = json.load(handle)
            except json.JSONDecodeError as exc:
                raise FigureError(f"spec file is not valid JSON: {exc}") from None
        fig = figure_spec_from_json(data)
    document = render_svg(fig)
    if args.out is None or args.out == "-":
        sys.stdout.write(document)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(document)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenheron",
        description="Perimeter-dominant triangles with sides in sqrt(3)*N: "
        "enumeration, classification, Pell families, lattice embedding, SVG figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="brute-force scan up to a w bound")
    p.add_argument("--max-w", dest="max_w", type=int, required=True)
    p.add_argument("--format", choices=("jsonl", "table"), default="jsonl")
    p.add_argument("--output", "-o", default=None, help="file path, or - for stdout")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="classify one triangle by its sides")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--format", choices=("jsonl", "table"), default="jsonl")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("family", help="first members of a Pell family")
    p.add_argument("family", choices=("a", "b", "c"))
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--format", choices=("jsonl", "table"), default="jsonl")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("pell", help="solutions of x^2 - d*y^2 = 1 (or 4x^2 with --even-x)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--even-x", dest="even_x", action="store_true")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--format", choices=("jsonl", "table"), default="table")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("verify", help="run all consistency suites")
    p.add_argument("--max-w", dest="max_w", type=int, required=True)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("embed", help="lattice embedding of one triangle")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--all", action="store_true", help="every embedding up to symmetry")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("render", help="emit an SVG figure")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", choices=("figure1",))
    group.add_argument("--spec", help="JSON figure description")
    p.add_argument("--out", default=None, help="file path, or - for stdout")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolationError as exc:
        print(f"theorem-violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM_VIOLATION
    except EmbeddabilityViolationError as exc:
        print(f"embeddability-violation: {exc}", file=sys.stderr)
        return EXIT_EMBED_VIOLATION
    except (FigureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
