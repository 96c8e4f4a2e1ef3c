"""Command-line front end.

Exit codes: 0 computed (also for a nonexistent integral), 1 suite failure or
example mismatch, 2 input error, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import string
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .alpha import AlphaCapacity, Segment
from .capacity import Capacity, GroundSpace, classify, variation
from .curve import ScenarioInterval
from .errors import GRLError, ScenarioError
from .extended import format_ext
from .formats import dumps, load_capacity, load_scenario, loads_scenario, report_to_text
from .integral import ScenarioFinite, grl_integrate
from .rl import rl_integrate
from .step import StepFunction
from .theorems import parse_theorem_ids, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_USAGE = 64

DEFAULT_SEED = 42
DEFAULT_INSTANCES = 200


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _subset_arg(space: GroundSpace, text: str) -> int:
    text = text.strip()
    if text.lower() == "all":
        return space.full
    if text.lower() in ("", "none", "empty", "{}"):
        return 0
    mask = 0
    for tok in text.strip("{}").split(","):
        tok = tok.strip()
        if space.labels and tok in space.labels:
            mask |= 1 << space.labels.index(tok)
        elif tok.isdigit() and int(tok) < space.size:
            mask |= 1 << int(tok)
        else:
            raise ScenarioError(f"subset member {tok!r} is not a point of S", "subset")
    return mask


def cmd_integrate(args) -> int:
    rep = grl_integrate(load_scenario(args.path), probe=args.probe)
    if args.format == "structured":
        sys.stdout.write(dumps(rep.to_dict()))
    else:
        sys.stdout.write(report_to_text(rep))
    return EXIT_OK


def cmd_classify(args) -> int:
    c = load_capacity(args.path)
    flags = classify(c)
    names = ("monotone", "fuzzy", "additive", "subadditive", "superadditive", "submodular")
    if args.format == "structured":
        sys.stdout.write(dumps({k: getattr(flags, k) for k in names}))
    else:
        for k in names:
            print(f"{k:<14}{'yes' if getattr(flags, k) else 'no'}")
    return EXIT_OK


def cmd_variation(args) -> int:
    c = load_capacity(args.path)
    mask = _subset_arg(c.space, args.subset)
    val = variation(c, mask)
    if args.format == "structured":
        sys.stdout.write(dumps({"subset": c.space.members(mask), "variation": format_ext(val)}))
    else:
        print(format_ext(val))
    return EXIT_OK


def builtin_examples() -> list[tuple[str, Fraction, object]]:
    """The four reference scenarios as ``(name, expected, computed)``."""
    out = []

    space = GroundSpace(3)
    nu = AlphaCapacity.sigma_additive([(Fraction(1), Fraction(2))], [Segment(0, 5, Fraction(1, 2))])
    rep = grl_integrate(ScenarioFinite(Capacity.zero(space), nu, (1, 4, Fraction(5, 2)), space.full))
    out.append(("zero mu, finite-variation nu", Fraction(0), rep.value))

    space = GroundSpace(2)
    mu = Capacity.from_function(space, lambda m: {0: 0, 1: Fraction(1, 3), 2: Fraction(1, 2), 3: 1}[m])
    rep = grl_integrate(ScenarioFinite(mu, AlphaCapacity.lebesgue(), (2, 2), space.full))
    out.append(("constant f = 2, mu(S) = 1, Lebesgue nu", Fraction(2), rep.value))

    sc = ScenarioInterval(1, 2, AlphaCapacity.lebesgue(), ((0, 0), (1, 1)), ((0, 1),))
    out.append(("f(x) = x on [0,1], mu = lambda^2", Fraction(1, 3), grl_integrate(sc).value))

    vanishing = AlphaCapacity.vanishing_on_bounded(1)
    values = {rl_integrate(StepFunction.constant(1), vanishing).value}
    for n in range(1, 9):
        space = GroundSpace(n)
        mu = Capacity.from_function(space, lambda m: 1 if m else 0)
        values.add(grl_integrate(ScenarioFinite(mu, vanishing, tuple(range(1, n + 1)), space.full)).value)
    computed = values.pop() if len(values) == 1 else sorted(values)
    out.append(("f(n) = n, mu = 1 on nonempty sets, nu vanishing on bounded sets", Fraction(0), computed))
    return out


def cmd_examples(args) -> int:
    rows = builtin_examples()
    ok = True
    for name, expected, got in rows:
        match = got == expected
        ok &= match
        shown = format_ext(got) if isinstance(got, (Fraction, int, float)) else str(got)
        print(f"{'ok ' if match else 'BAD'}  {name}: expected {format_ext(expected)}, computed {shown}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args) -> int:
    try:
        ids = parse_theorem_ids(args.theorems)
    except GRLError as exc:
        raise UsageError(str(exc)) from exc
    if args.instances < 1:
        raise UsageError("--instances must be at least 1")
    report = run_suite(ids, args.instances, args.seed, negative_controls=not args.no_controls)
    if args.out:
        Path(args.out).write_text(report.to_csv())
    if args.format == "structured":
        sys.stdout.write(dumps(report.to_dict(include_clock=not args.no_clock)))
    else:
        sys.stdout.write(report.to_csv())
        for c in report.controls:
            print(f"{c.name}: {c.violations} violation(s) in {c.attempts} attempt(s)")
        for f in report.failures[:10]:
            print(f"FAIL {f.theorem} seed={f.instance_seed}: {f.reason}")
        print(f"{'PASS' if report.ok else 'FAIL'} in {report.wall_clock:.2f}s")
    return EXIT_OK if report.ok else EXIT_FAILED


def _grid(params: Sequence[str]) -> list[dict]:
    keys, values = [], []
    for p in params:
        if "=" not in p:
            raise UsageError(f"--param expects key=v1,v2,...; got {p!r}")
        k, vs = p.split("=", 1)
        keys.append(k.strip())
        values.append([v.strip() for v in vs.split(",") if v.strip()])
    return [dict(zip(keys, combo)) for combo in itertools.product(*values)]


def cmd_sweep(args) -> int:
    template = string.Template(Path(args.template).read_text())
    rows = []
    for point in _grid(args.param):
        try:
            text = template.substitute(point)
        except KeyError as exc:
            raise UsageError(f"template placeholder {exc} has no --param") from exc
        rep = grl_integrate(loads_scenario(text))
        rows.append(
            {
                **point,
                "value": "" if rep.value is None else format_ext(rep.value),
                "integrable": str(rep.integrable).lower(),
                "method": rep.method,
            }
        )
    fields = list(rows[0]) if rows else ["value", "integrable", "method"]
    handle = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(handle, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    finally:
        if args.out:
            handle.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grl", description="Generalized RL integral of non-negative functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("integrate", help="compute the integral of a scenario file")
    s.add_argument("path")
    s.add_argument("--format", choices=("human", "structured"), default="human")
    s.add_argument("--probe", action="store_true", help="attach the refinement-envelope trace")
    s.set_defaults(func=cmd_integrate)

    s = sub.add_parser("classify", help="list the properties of a capacity file")
    s.add_argument("path")
    s.add_argument("--format", choices=("human", "structured"), default="human")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("variation", help="variation of a capacity on a subset")
    s.add_argument("path")
    s.add_argument("subset", help="comma-separated indices or labels, or 'all'")
    s.add_argument("--format", choices=("human", "structured"), default="human")
    s.set_defaults(func=cmd_variation)

    s = sub.add_parser("examples", help="reproduce the four reference examples")
    s.set_defaults(func=cmd_examples)

    s = sub.add_parser("verify", help="run the property suite")
    s.add_argument("--theorems", default="all", help="comma-separated ids T1..T16, or 'all'")
    s.add_argument("--instances", type=int, default=DEFAULT_INSTANCES)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--format", choices=("human", "structured"), default="human")
    s.add_argument("--out", help="also write the per-theorem CSV here")
    s.add_argument("--no-controls", action="store_true", help="skip the negative controls")
    s.add_argument("--no-clock", action="store_true", help="omit wall-clock from structured output")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="integrate a scenario template over a parameter grid")
    s.add_argument("template", help="scenario JSON with $name placeholders")
    s.add_argument("--param", action="append", default=[], help="key=v1,v2,... (repeatable)")
    s.add_argument("--out", help="CSV destination (default stdout)")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"grl: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GRLError, OSError, json.JSONDecodeError) as exc:
        print(f"grl: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
