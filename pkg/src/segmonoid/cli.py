"""Command-line front end.

Exit codes: 0 on success, 1 for parse or validation errors (and failed
``check`` runs), 2 for domain errors such as the root of zero.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import algebra as alg
from . import checks, rook
from . import structure as st
from .algebra import AmbientError, DomainError, Element, ValidationError
from .parse import ParseError, evaluate, parse_rational

EXIT_OK, EXIT_INVALID, EXIT_DOMAIN = 0, 1, 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="segmonoid", description="Exact algebra of segments in a square.")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help, fmt=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("--n", type=int, required=True, help="ambient size (>= 2)")
        p.add_argument("--format", choices=fmt, default="text")
        return p

    p = cmd("eval", "evaluate a product/power/transpose expression")
    p.add_argument("expr")
    p = cmd("mul", "multiply elements left to right")
    p.add_argument("elements", nargs="+")
    p = cmd("pow", "j-th power")
    p.add_argument("element")
    p.add_argument("j", type=int)
    p = cmd("root", "unique j-th root of a nonzero element")
    p.add_argument("element")
    p.add_argument("j", type=int)
    p = cmd("inv", "semigroup inverse")
    p.add_argument("element")
    p = cmd("index", "nilpotent index")
    p.add_argument("element")
    p = cmd("height", "height of the segment (-1 for zero)")
    p.add_argument("element")
    p = cmd("phi", "image in the circle group with zero")
    p.add_argument("element")
    p = cmd("green", "test a Green's relation")
    p.add_argument("relation", type=st.GreenRelation.parse)
    p.add_argument("x")
    p.add_argument("y")
    p = cmd("order", "natural partial order x <= y")
    p.add_argument("x")
    p.add_argument("y")
    p = cmd("ideal", "membership in I(mu) or, with --open, K(mu)")
    p.add_argument("--mu", required=True)
    p.add_argument("--open", action="store_true")
    p.add_argument("element")
    p = cmd("iso", "transport to ambient size q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("element")
    cmd("enum", "list the integer submonoid", fmt=("text", "json", "dot"))
    p = cmd("check", "run the seeded property and oracle suite")
    p.add_argument("--samples", type=_positive_int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _element_out(x: Element, fmt: str) -> str:
    return json.dumps(alg.to_json(x)) if fmt == "json" else alg.format_element(x)


def _scalar_out(key: str, value, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({key: value if isinstance(value, (bool, int)) else str(value)})
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _dispatch(args, out) -> int:
    n, fmt = args.n, args.format
    el = lambda text: evaluate(text, n)  # noqa: E731
    c = args.command

    if c == "eval":
        out.append(_element_out(el(args.expr), fmt))
    elif c == "mul":
        acc = el(args.elements[0])
        for text in args.elements[1:]:
            acc = alg.multiply(acc, el(text))
        out.append(_element_out(acc, fmt))
    elif c == "pow":
        out.append(_element_out(alg.power(el(args.element), args.j), fmt))
    elif c == "root":
        out.append(_element_out(st.jth_root(el(args.element), args.j), fmt))
    elif c == "inv":
        out.append(_element_out(alg.inverse(el(args.element)), fmt))
    elif c == "index":
        x = el(args.element)
        i = st.nilpotent_index(x)
        if i is None:
            raise DomainError(f"{x} is not nilpotent")
        out.append(_scalar_out("index", i, fmt))
    elif c == "height":
        out.append(_scalar_out("height", alg.height(el(args.element)), fmt))
    elif c == "phi":
        image = st.circle_morphism(el(args.element))
        if fmt == "json":
            out.append(json.dumps({"zero": True} if image.is_zero else {"angle": str(image.angle)}))
        else:
            out.append(str(image))
    elif c == "green":
        out.append(_scalar_out("related", st.green_related(args.relation, el(args.x), el(args.y)), fmt))
    elif c == "order":
        out.append(_scalar_out("leq", alg.leq_natural(el(args.x), el(args.y)), fmt))
    elif c == "ideal":
        ideal = st.Ideal(n, parse_rational(args.mu), closed=not args.open)
        out.append(_scalar_out("member", st.ideal_contains(ideal, el(args.element)), fmt))
    elif c == "iso":
        out.append(_element_out(st.iso_map(el(args.element), args.q), fmt))
    elif c == "enum":
        if fmt == "dot":
            out.append(rook.eggbox_dot(n).rstrip("\n"))
        elif fmt == "json":
            out.append(json.dumps(rook.enumeration_json(n)))
        else:
            out.extend(alg.format_element(x) for x in rook.enumerate_integer_monoid(n))
    elif c == "check":
        mul = checks.faulty_multiply if args.inject_fault else alg.multiply
        results = checks.run_checks(n, args.samples, args.seed, mul=mul)
        if fmt == "json":
            out.append(json.dumps([vars(r) | {"passed": r.passed} for r in results]))
        else:
            out.extend(r.line() for r in results)
        return EXIT_OK if all(r.passed for r in results) else EXIT_INVALID
    return EXIT_OK


def run_command(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Run one CLI invocation and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    out: List[str] = []
    try:
        code = _dispatch(args, out)
    except (ParseError, ValidationError, AmbientError, ValueError) as exc:
        code = EXIT_DOMAIN if isinstance(exc, DomainError) else EXIT_INVALID
        print(f"error: {exc}", file=stderr)
        return code
    for line in out:
        print(line, file=stdout)
    return code


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
