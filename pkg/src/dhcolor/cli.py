"""Command-line front end: check, color, generate, containment and oracle runs.

Exit codes: 0 success / 1 property or colorability negative / 2 input error /
3 internal structure violation / 4 work cap exceeded.  Data (colorings,
generated hypergraphs, witnesses) goes to stdout or ``--out``; a one-line run
report goes to stderr.  No command uses randomness, so identical invocations
produce identical bytes.
"""
from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass

from . import constructions, oracle
from .errors import (
    CapExceeded,
    ConditionViolated,
    HypergraphError,
    ParseError,
    PropertySViolation,
    StructureViolated,
)
from .model import (
    DirectedHypergraph,
    is_two_one,
    parse,
    serialize,
    serialize_coloring,
)
from .properties import (
    check_linear,
    check_poly_condition,
    check_property_s,
    check_specboth,
    is_polychromatic,
    is_proper_coloring,
)
from .recolor import color_linear, color_polychromatic, color_specboth
from .twocolor import analyze_two_one, describe_decomposition

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_STRUCTURE = 3
EXIT_CAP = 4


@dataclass
class RunReport:
    command: str
    input_digest: str
    outcome: str  # ok | violation | error
    detail: str
    wall_time: float

    def format(self) -> str:
        return (
            f"report: command={self.command!r} input={self.input_digest} "
            f"outcome={self.outcome} time={self.wall_time:.3f}s"
            + (f" detail={self.detail}" if self.detail else "")
        )


def _read_input(path: str) -> tuple[str, str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]
    return text, digest


def _load(path: str) -> tuple[DirectedHypergraph, str]:
    text, digest = _read_input(path)
    return parse(text), digest


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _outcome_for(code: int) -> str:
    return {EXIT_OK: "ok", EXIT_NEGATIVE: "violation"}.get(code, "error")


def cmd_check(args) -> tuple[int, str, str]:
    if args.property == "poly-condition":
        hs = []
        digests = []
        for path in args.inputs:
            h, digest = _load(path)
            hs.append(h)
            digests.append(digest)
        witness = check_poly_condition(hs, len(hs), cap=args.cap)
        digest = "+".join(digests)
    else:
        if len(args.inputs) != 1:
            raise ParseError(f"'check {args.property}' takes exactly one input file")
        h, digest = _load(args.inputs[0])
        checker = {
            "property-s": check_property_s,
            "property-s-weak": lambda g: check_property_s(g, allow_equal_heads=True),
            "specboth": check_specboth,
            "linear": check_linear,
        }[args.property]
        witness = checker(h)
    if witness is None:
        print("ok")
        return EXIT_OK, digest, ""
    print(f"violation: {witness}")
    return EXIT_NEGATIVE, digest, str(witness)


def _pick_auto(h: DirectedHypergraph) -> str | None:
    if check_specboth(h) is None:
        return "specboth"
    if is_two_one(h) and check_property_s(h) is None:
        return "main"
    if check_linear(h) is None and check_property_s(h) is None:
        return "linear"
    return None


def cmd_color(args) -> tuple[int, str, str]:
    h, digest = _load(args.input)
    algorithm = args.algorithm
    if algorithm == "auto":
        algorithm = _pick_auto(h)
        if algorithm is None:
            print("violation: no algorithm's precondition holds (tried specboth, main, linear)")
            return EXIT_NEGATIVE, digest, "no applicable algorithm"

    if algorithm == "poly":
        if args.c is None:
            raise ParseError("--c is required for the poly algorithm")
        coloring = color_polychromatic(h, args.c, cap=args.cap)
        if is_polychromatic(h, coloring, args.c) is not None:
            raise StructureViolated("poly coloring failed post-verification")
    elif algorithm == "specboth":
        witness = check_specboth(h)
        if witness is not None:
            print(f"violation: {witness}")
            return EXIT_NEGATIVE, digest, str(witness)
        coloring, _ = color_specboth(h)
        if is_proper_coloring(h, coloring) is not None:
            raise StructureViolated("specboth coloring failed post-verification")
    elif algorithm == "linear":
        for checker in (check_linear, check_property_s):
            witness = checker(h)
            if witness is not None:
                print(f"violation: {witness}")
                return EXIT_NEGATIVE, digest, str(witness)
        coloring = color_linear(h)
        if is_proper_coloring(h, coloring) is not None:
            raise StructureViolated("linear coloring failed post-verification")
    elif algorithm == "main":
        result = analyze_two_one(h)
        coloring = result.coloring
        if is_proper_coloring(h, coloring) is not None:
            raise StructureViolated("structural coloring failed post-verification")
        if args.dump_structure:
            sys.stderr.write(describe_decomposition(result))
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown algorithm {algorithm!r}")

    _emit(serialize_coloring(coloring, h), args.out)
    return EXIT_OK, digest, f"algorithm={algorithm}"


def cmd_gen(args) -> tuple[int, str, str]:
    if args.name == "lower-bound":
        if args.n is None:
            raise ParseError("--n is required")
        h = constructions.lower_bound_construction(args.n)
    elif args.name == "oriented-lower-bound":
        if args.n is None:
            raise ParseError("--n is required")
        h = constructions.oriented_lower_bound(args.n)
    elif args.name == "tightness":
        if args.k is None:
            raise ParseError("--k is required")
        h = constructions.tightness_construction(args.k)
    elif args.name == "star":
        if args.n is None or args.k is None:
            raise ParseError("--n and --k are required")
        h = constructions.star_construction(args.n, args.k)
    else:  # pattern
        if args.pattern is None:
            raise ParseError("--name is required for 'gen pattern'")
        h = constructions.pattern(args.pattern).hypergraph
    _emit(serialize(h), args.out)
    return EXIT_OK, "-", f"{len(h.edges)} hyperedges on {h.n} vertices"


def cmd_contains(args) -> tuple[int, str, str]:
    host, digest = _load(args.input)
    if args.pattern in constructions.PATTERN_NAMES:
        pat = constructions.pattern(args.pattern).hypergraph
    else:
        pat, _ = _load(args.pattern)
    embedding = oracle.contains_subhypergraph(host, pat, cap=args.cap)
    if embedding is None:
        print("avoided")
        return EXIT_OK, digest, "avoided"
    mapping = " ".join(
        f"{pat.name_of(p)}->{host.name_of(v)}" for p, v in enumerate(embedding.vertex_map)
    )
    print(f"contained: {mapping} (host edges {' '.join(map(str, embedding.edge_map))})")
    return EXIT_NEGATIVE, digest, "contained"


def cmd_oracle(args) -> tuple[int, str, str]:
    h, digest = _load(args.input)
    if args.kind == "2color":
        coloring = oracle.brute_force_k_colorable(h, 2, cap_vertices=args.cap_vertices)
    else:
        if args.c is None:
            raise ParseError("--c is required for 'oracle poly'")
        coloring = oracle.brute_force_polychromatic(h, args.c, cap=args.cap)
    if coloring is None:
        print("none")
        return EXIT_NEGATIVE, digest, "no such coloring"
    _emit(serialize_coloring(coloring, h), args.out)
    return EXIT_OK, digest, "coloring found"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dhcolor",
        description="Coloring toolkit for directed hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test a hyperedge-intersection property")
    p_check.add_argument(
        "property",
        choices=["property-s", "property-s-weak", "specboth", "linear", "poly-condition"],
    )
    p_check.add_argument("inputs", nargs="+", help="hypergraph file(s); '-' for stdin")
    p_check.add_argument("--cap", type=int, default=1_000_000, help="tuple cap for poly-condition")
    p_check.set_defaults(handler=cmd_check)

    p_color = sub.add_parser("color", help="compute a verified coloring")
    p_color.add_argument("input")
    p_color.add_argument(
        "--algorithm", choices=["auto", "main", "linear", "specboth", "poly"], default="auto"
    )
    p_color.add_argument("--c", type=int, default=None, help="color count for poly")
    p_color.add_argument("--cap", type=int, default=1_000_000, help="tuple cap for the poly precheck")
    p_color.add_argument("--out", default=None, help="write the coloring here instead of stdout")
    p_color.add_argument(
        "--dump-structure",
        action="store_true",
        help="with --algorithm main, print the decomposition report to stderr",
    )
    p_color.set_defaults(handler=cmd_color)

    p_gen = sub.add_parser("gen", help="generate a construction or fixed pattern")
    p_gen.add_argument(
        "name", choices=["lower-bound", "oriented-lower-bound", "tightness", "star", "pattern"]
    )
    p_gen.add_argument("--n", type=int, default=None)
    p_gen.add_argument("--k", type=int, default=None)
    p_gen.add_argument(
        "--name", dest="pattern", choices=list(constructions.PATTERN_NAMES), default=None
    )
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(handler=cmd_gen)

    p_contains = sub.add_parser("contains", help="search for a pattern as a subhypergraph")
    p_contains.add_argument("input")
    p_contains.add_argument(
        "--pattern", required=True, help="pattern name (S, F, F_alt, F0) or a hypergraph file"
    )
    p_contains.add_argument("--cap", type=int, default=oracle.DEFAULT_INJECTION_CAP)
    p_contains.set_defaults(handler=cmd_contains)

    p_oracle = sub.add_parser("oracle", help="exhaustive colorability search")
    p_oracle.add_argument("kind", choices=["2color", "poly"])
    p_oracle.add_argument("input")
    p_oracle.add_argument("--c", type=int, default=None)
    p_oracle.add_argument("--cap", type=int, default=oracle.DEFAULT_ASSIGNMENT_CAP)
    p_oracle.add_argument("--cap-vertices", type=int, default=oracle.DEFAULT_VERTEX_CAP)
    p_oracle.add_argument("--out", default=None)
    p_oracle.set_defaults(handler=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    command = " ".join(argv if argv is not None else sys.argv[1:])
    digest, detail = "-", ""
    try:
        code, digest, detail = args.handler(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        code, detail = EXIT_INPUT, str(exc)
    except (PropertySViolation, ConditionViolated) as exc:
        print(f"violation: {exc}")
        code, detail = EXIT_NEGATIVE, str(exc)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        code, detail = EXIT_CAP, str(exc)
    except StructureViolated as exc:
        print(f"internal structure violation: {exc}", file=sys.stderr)
        code, detail = EXIT_STRUCTURE, str(exc)
    except (ValueError, OSError, HypergraphError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        code, detail = EXIT_INPUT, str(exc)
    report = RunReport(command, digest, _outcome_for(code), detail, time.perf_counter() - started)
    print(report.format(), file=sys.stderr)
    return code


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
