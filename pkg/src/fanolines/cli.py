"""Command-line frontend for the line-system pipelines.

Every command reduces to a JSON report whose numeric values are strings;
the human-readable summary is printed from that same dict, so the file
written by --json is the single source of truth. Identical configuration
(seed included) reproduces the report byte for byte.

Exit codes: 0 all predicted values matched, 2 bad usage or input,
3 verification failure, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import (BudgetExceeded, DegenerateInstance, Inconclusive,
                     InvalidParameters, MultiplicityMismatch, NotPrime,
                     NotZeroDimensional, ParseError, UnknownVariable,
                     ZeroPolynomial)
from .fano import (PointedHypersurface, analyze_lines, multiplicity_at,
                   run_line_analysis)
from .field import DEFAULT_PRIME, PrimeField
from .idealkit import (DEFAULT_BUDGET, Ideal, complete_intersection_report,
                       groebner_of, hilbert_data, singular_points)
from .poly import GREVLEX, LEX, Polynomial, default_names, parse_polynomial
from .projgeo import ProjectivePoint
from .voisin import run_node_analysis

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run's output."""

    command: str
    seed: int
    prime: int
    k_max: Optional[int]
    trials: Optional[int]
    budget: int
    params: Dict[str, str]

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "command": self.command,
            "seed": str(self.seed),
            "prime": str(self.prime),
            "budget": str(self.budget),
        }
        if self.k_max is not None:
            out["k_max"] = str(self.k_max)
        if self.trials is not None:
            out["trials"] = str(self.trials)
        out.update(self.params)
        return out


def _render(config: RunConfig, report: Dict[str, object]) -> str:
    doc = {"config": config.to_dict(), "report": report}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _write_json(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".fanolines-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _summarize(report: Dict[str, object], stream=None):
    # resolve lazily so stream redirection after import is respected
    stream = sys.stdout if stream is None else stream
    predicted = report.get("predicted", {})
    computed = report.get("computed", {})
    if isinstance(predicted, dict) and predicted:
        print("predicted vs computed:", file=stream)
        for key in sorted(set(predicted) | set(computed)):
            want = predicted.get(key, "-")
            got = computed.get(key, "-")
            tick = "ok" if key not in predicted or want == got else "MISMATCH"
            print(f"  {key:<22} {want:>10}  {got:>10}  {tick}", file=stream)
    plain = ("basis", "count", "singular_points")
    if not predicted:
        plain = ("dimension", "degree") + plain
    for key in plain:
        value = report.get(key)
        if isinstance(value, list):
            if value:
                print(f"{key}:", file=stream)
                for line in value:
                    if isinstance(line, list):
                        line = " : ".join(line)
                    print(f"  {line}", file=stream)
        elif value is not None:
            print(f"{key}: {value}", file=stream)
    counts = report.get("counts_by_degree")
    if counts:
        pairs = ", ".join(f"{k}:{v}" for k, v in sorted(
            counts.items(), key=lambda kv: int(kv[0])))
        print(f"points by residue degree: {pairs}", file=stream)
    solutions = report.get("solutions")
    if solutions:
        print(f"solutions found: {len(solutions)}", file=stream)
    for flag in report.get("flags", []):
        print(f"flag: {flag}", file=stream)
    attempts = report.get("attempts", [])
    if len(attempts) > 1:
        print(f"attempts: {len(attempts)} (reseeded "
              f"{len(attempts) - 1} times)", file=stream)
    if "matched" in report:
        print(f"matched: {report['matched']}", file=stream)


def _finish(config: RunConfig, report: Dict[str, object],
            args: argparse.Namespace, matched: bool) -> int:
    text = _render(config, report)
    if args.json:
        _write_json(args.json, text)
    if not args.quiet and args.json != "-":
        _summarize(report)
    return EXIT_OK if matched else EXIT_VERIFY


def _infer_nvars(text: str) -> int:
    indices = [int(m.group(1)) for m in re.finditer(r"\bx(\d+)\b", text)]
    if not indices:
        raise InvalidParameters("no variables of the form x<i> found")
    return max(indices) + 1


def _read_poly_file(path: str, field) -> List[Polynomial]:
    with open(path) as handle:
        lines = [ln.strip() for ln in handle]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InvalidParameters(f"{path} contains no polynomials")
    nvars = _infer_nvars(" ".join(lines))
    names = default_names(nvars)
    return [parse_polynomial(ln, names, field) for ln in lines]


def _parse_point(text: str, field) -> ProjectivePoint:
    parts = text.replace(",", ":").split(":")
    coords = [field.from_int(int(p.strip())) for p in parts]
    return ProjectivePoint(coords)


def cmd_lines_through(args: argparse.Namespace) -> int:
    field = PrimeField(args.prime)
    k_max = args.kmax if args.kmax is not None else 6
    samples = args.trials if args.trials is not None else 8
    if args.random:
        n, d, m = args.random
        config = RunConfig("lines-through", args.seed, args.prime, k_max,
                           samples, args.budget,
                           {"n": str(n), "d": str(d), "m": str(m)})
        report = run_line_analysis(n, d, m, field, args.seed, k_max=k_max,
                                   samples=samples, budget=args.budget)
    else:
        polys = _read_poly_file(args.poly, field)
        if len(polys) != 1:
            raise InvalidParameters("--poly file must hold exactly one form")
        f = polys[0]
        point = _parse_point(args.point, field)
        m = multiplicity_at(f, point)
        if m == 0:
            raise InvalidParameters("the point does not lie on the hypersurface")
        ph = PointedHypersurface(f, point, m)
        config = RunConfig("lines-through", args.seed, args.prime, k_max,
                           samples, args.budget,
                           {"poly": f.to_text(), "point": ":".join(
                               point.serialize()), "m": str(m)})
        report = analyze_lines(ph, k_max=k_max, samples=samples,
                               seed=args.seed, budget=args.budget)
    return _finish(config, report.to_dict(), args, report.matched())


def cmd_voisin_demo(args: argparse.Namespace) -> int:
    field = PrimeField(args.prime)
    config = RunConfig("voisin-demo", args.seed, args.prime, None, None,
                       args.budget, {"r": str(args.r)})
    analysis = run_node_analysis(args.r, field, args.seed, budget=args.budget)
    report = analysis.report.to_dict()
    report["chosen_node"] = " : ".join(analysis.chosen_node.serialize())
    return _finish(config, report, args, analysis.report.matched())


def cmd_groebner(args: argparse.Namespace) -> int:
    field = PrimeField(args.prime)
    order = LEX if args.order == "lex" else GREVLEX
    gens = _read_poly_file(args.file, field)
    ideal = Ideal(gens, order)
    basis = groebner_of(ideal)
    names = default_names(ideal.nvars)
    report: Dict[str, object] = {
        "order": args.order,
        "generators": [g.to_text(names) for g in gens],
        "basis": [g.to_text(names) for g in basis] or ["0"],
    }
    if ideal.is_homogeneous():
        dim, degree = hilbert_data(ideal)
        report["dimension"] = "empty" if dim < 0 else str(dim)
        report["degree"] = str(degree)
    config = RunConfig("groebner", args.seed, args.prime, None, None,
                       args.budget, {"file": os.path.basename(args.file),
                                     "order": args.order})
    return _finish(config, report, args, True)


def cmd_sing_locus(args: argparse.Namespace) -> int:
    field = PrimeField(args.prime)
    k_max = args.kmax if args.kmax is not None else 1
    gens = _read_poly_file(args.file, field)
    ideal = Ideal(gens)
    points = singular_points(ideal, k_max=k_max, budget=args.budget)
    dim, degree = hilbert_data(ideal)
    report: Dict[str, object] = {
        "dimension": "empty" if dim < 0 else str(dim),
        "degree": str(degree),
        "count": str(len(points)),
        "singular_points": [p.serialize() for p in points],
    }
    config = RunConfig("sing-locus", args.seed, args.prime, k_max, None,
                       args.budget, {"file": os.path.basename(args.file)})
    return _finish(config, report, args, True)


def cmd_bezout_check(args: argparse.Namespace) -> int:
    field = PrimeField(args.prime)
    k_max = args.kmax if args.kmax is not None else 4
    samples = args.trials if args.trials is not None else 6
    report = complete_intersection_report(args.degrees, args.n, field,
                                          args.seed, samples=samples,
                                          k_max=k_max, budget=args.budget)
    config = RunConfig("bezout-check", args.seed, args.prime, k_max, samples,
                       args.budget, {"n": str(args.n), "degrees": ",".join(
                           str(d) for d in args.degrees)})
    return _finish(config, report.to_dict(), args, report.matched())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanolines",
        description="Line systems through singular points of hypersurfaces, "
                    "verified over finite fields.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int,
                        default=int(os.environ.get("FANO_SEED", "0")),
                        help="RNG seed (falls back to $FANO_SEED, then 0)")
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME,
                        help="odd prime for the ground field")
    common.add_argument("--kmax", type=int, default=None,
                        help="extension-degree search bound")
    common.add_argument("--trials", type=int, default=None,
                        help="sample count for smoothness certificates")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="enumeration budget ceiling")
    common.add_argument("--json", metavar="PATH",
                        help="write the JSON report here ('-' for stdout)")
    common.add_argument("--quiet", action="store_true",
                        help="suppress the human-readable summary")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lines-through", parents=[common],
                       help="analyze the lines through a point of a "
                            "hypersurface")
    p.add_argument("--random", nargs=3, type=int, metavar=("N", "D", "M"),
                   help="random degree-D hypersurface in P^N with a "
                        "multiplicity-M point")
    p.add_argument("--poly", metavar="FILE",
                   help="file holding one homogeneous form in x0..xn")
    p.add_argument("--point", metavar="P",
                   help="colon-separated point coordinates, e.g. 1:0:0:0")
    p.set_defaults(func=cmd_lines_through)

    p = sub.add_parser("voisin-demo", parents=[common],
                       help="normal-form nodal cubic: certify the 2^r nodes "
                            "and the lines through one of them")
    p.add_argument("r", type=int, help="half the even ambient dimension")
    p.set_defaults(func=cmd_voisin_demo)

    p = sub.add_parser("groebner", parents=[common],
                       help="reduced Groebner basis of the forms in a file")
    p.add_argument("file", help="one polynomial per line, variables x0..xn")
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("sing-locus", parents=[common],
                       help="enumerate singular points of a projective scheme")
    p.add_argument("file", help="one polynomial per line, variables x0..xn")
    p.set_defaults(func=cmd_sing_locus)

    p = sub.add_parser("bezout-check", parents=[common],
                       help="random complete intersection: degree must be "
                            "the product of the generator degrees")
    p.add_argument("n", type=int, help="ambient projective dimension")
    p.add_argument("degrees", nargs="+", type=int,
                   help="generator degrees, e.g. 2 3")
    p.set_defaults(func=cmd_bezout_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "lines-through":
            if bool(args.random) == bool(args.poly):
                parser.error("exactly one of --random or --poly is required")
            if args.poly and not args.point:
                parser.error("--poly needs --point")
    except SystemExit as exc:  # argparse exits; keep main() returning
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidParameters, NotPrime, ParseError, UnknownVariable,
            ZeroPolynomial, NotZeroDimensional, OSError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegenerateInstance, MultiplicityMismatch, Inconclusive) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
