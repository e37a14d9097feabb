"""Command-line front end.

Exit codes: 0 success, 1 domain error (bad parameters, infeasible
construction, exceeded budget, failed verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Optional, Sequence

from . import __version__
from .asymptotics import bound_table, lower_bound_log, parse_n_list
from .constructions import DEFAULT_ITERATION_CAP, make_family
from .constructions.verify import family_verify
from .errors import ConsistencyError, InfeasibleError, ParameterError, ParseError, ResourceLimitError
from .geometry import FAMILIES, PolygonSpec, boundary_integer_length, sigma_profile
from .oracle import DEFAULT_NODE_BUDGET, count_marked_admissible
from .render import canonical_marks, plot_bound, plot_collection, render_svg
from .segments import find_partition, strip_check
from .serialization import SystemDocument, read_documents, serialize_system, write_csv
from .systems import MarkedSystem, is_admissible, validate_proper

DOMAIN_ERRORS = (ParameterError, InfeasibleError, ResourceLimitError, ConsistencyError, ParseError)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _n_list(text: str) -> list[int]:
    try:
        return parse_n_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_polygon(p: argparse.ArgumentParser, with_n: bool = True) -> None:
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--d1", type=int)
    p.add_argument("--d2", type=int)
    if with_n:
        p.add_argument("--n", type=int, default=1)


def _params(args) -> tuple:
    return tuple(v for v in (args.d, args.d1, args.d2) if v is not None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropicount", description="Proper and admissible interval systems of lattice polygons.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="print m, sigma and the interval budget")
    _add_polygon(p)

    p = sub.add_parser("oracle", help="count proper, admissible and marked admissible systems")
    _add_polygon(p)
    p.add_argument("--strategy", choices=("sweep", "naive"), default="sweep")
    p.add_argument("--node-budget", type=_positive, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("construct", help="generate a construction family")
    _add_polygon(p)
    p.add_argument("--mode", choices=("count", "iterate", "sample"), default="count")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--samples", type=_positive, default=10)
    p.add_argument("--cap", type=_positive, default=DEFAULT_ITERATION_CAP)
    p.add_argument("--marks", action="store_true", help="emit each instance with its leftmost allowed marking")
    p.add_argument("--out", help="write JSON lines here instead of stdout")

    p = sub.add_parser("verify", help="check a family exhaustively and run the strip criterion on samples")
    _add_polygon(p)
    p.add_argument("--oracle", action="store_true", help="also compare with the oracle enumeration")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--cap", type=_positive, default=DEFAULT_ITERATION_CAP)

    p = sub.add_parser("check", help="validate system documents (JSON lines) against their polygons")
    p.add_argument("path", help="file of documents, or - for stdin")

    p = sub.add_parser("bound", help="tabulate the log lower bound and fit its n log n coefficient")
    _add_polygon(p, with_n=False)
    p.add_argument("--n-list", type=_n_list, default=parse_n_list("64:8192:x2"))
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--plot", help="figure path (.svg, .png or .pdf)")

    p = sub.add_parser("render", help="draw one instance of a family")
    _add_polygon(p)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--no-overlays", action="store_true")
    p.add_argument("--no-marks", action="store_true")
    p.add_argument("--out", help="output path; .svg is hand-written, .png/.pdf use matplotlib (default: SVG on stdout)")
    return parser


@contextlib.contextmanager
def _output(path: Optional[str], stdout):
    if path is None or path == "-":
        yield stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _cmd_profile(args, out):
    spec = PolygonSpec(args.family, args.d, args.d1, args.d2, args.n)
    prof = sigma_profile(spec)
    print(f"m={prof.m}", file=out)
    print("sigma=" + ",".join(map(str, prof.sigma)), file=out)
    print("levels=" + ",".join(map(str, prof.levels)), file=out)
    print(f"boundary={boundary_integer_length(spec)}", file=out)
    print(f"budget={prof.budget}", file=out)
    return 0


def _cmd_oracle(args, out):
    prof = sigma_profile(PolygonSpec(args.family, args.d, args.d1, args.d2, args.n))
    rep = count_marked_admissible(prof, strategy=args.strategy, node_budget=args.node_budget)
    print(f"proper={rep.proper_count}", file=out)
    print(f"admissible={rep.admissible_count}", file=out)
    print(f"marked_admissible={rep.marked_admissible_count}", file=out)
    return 0


def _document(fam, inst, marks: bool) -> SystemDocument:
    if marks:
        pairs = [(iv, lo) for iv, (lo, _) in zip(inst.intervals(), inst.mark_ranges)]
        return SystemDocument.from_marked(fam.spec, MarkedSystem(tuple(pairs)))
    return SystemDocument.from_intervals(fam.spec, inst.intervals())


def _cmd_construct(args, out):
    fam = make_family(args.family, _params(args), args.n)
    if args.mode == "count":
        size = fam.size()
        print(f"family_size={size}", file=out)
        if size <= args.cap:
            print(f"marked_size={fam.marked_size(args.cap)}", file=out)
        lb = lower_bound_log(args.family, _params(args), args.n, exact=True)
        print(f"lower_bound={lb.exact}" + (" (floor)" if lb.rounded else ""), file=out)
        print(f"log_lower_bound={lb.log_value!r}", file=out)
        return 0
    instances = fam.iterate(args.cap) if args.mode == "iterate" else fam.sample(args.seed, args.samples)
    with _output(args.out, out) as fh:
        for inst in instances:
            fh.write(serialize_system(_document(fam, inst, args.marks)) + "\n")
    return 0


def _cmd_verify(args, out):
    fam = make_family(args.family, _params(args), args.n)
    rep = family_verify(fam, oracle=args.oracle, cap=args.cap)
    lines = rep.lines()
    m = sigma_profile(fam.spec).m
    failed = 0
    for inst in fam.sample(args.seed, args.samples) if args.samples > 0 else []:
        labels = find_partition(inst.collection, m)
        if labels is None or not strip_check(inst.collection, labels, m):
            failed += 1
    if args.samples > 0:
        lines.append(f"{'PASS' if not failed else 'FAIL'} strip criterion on {args.samples} seeded samples: {failed} failures")
    print(f"instances={rep.instances}", file=out)
    print(f"marked={rep.marked}", file=out)
    if rep.oracle_marked is not None:
        print(f"oracle_marked={rep.oracle_marked}", file=out)
    for line in lines:
        print(line, file=out)
    return 0 if rep.ok and not failed else 1


def _cmd_check(args, out):
    stream = sys.stdin if args.path == "-" else open(args.path, encoding="utf-8")
    bad = 0
    with contextlib.closing(stream) if stream is not sys.stdin else contextlib.nullcontext(stream):
        for k, doc in enumerate(read_documents(stream), start=1):
            prof = sigma_profile(doc.spec())
            viol = validate_proper(doc.intervals, prof)
            if viol is not None:
                status = f"not proper: {viol}"
                bad += 1
            elif not is_admissible(doc.intervals, prof.m):
                status = "proper, not admissible"
                bad += 1
            else:
                status = "admissible"
            print(f"{k}: {status}", file=out)
    return 0 if not bad else 1


def _cmd_bound(args, out):
    rep = bound_table(args.family, _params(args), args.n_list)
    with _output(args.out, out) as fh:
        write_csv([rep], fh)
    # keep stdout pure CSV when that is where the table went
    info = sys.stderr if args.out in (None, "-") else out
    if rep.insufficient:
        print("fit: insufficient points", file=info)
    else:
        print(f"fit: A={rep.A:.6f} B={rep.B:.6f} target={rep.target} relative_error={rep.relative_error:.4%}", file=info)
    if args.plot:
        plot_bound([rep], args.plot)
    return 0


def _cmd_render(args, out):
    fam = make_family(args.family, _params(args), args.n)
    if not 0 <= args.index < fam.size():
        raise ParameterError("index", f"index {args.index} outside 0..{fam.size() - 1}")
    inst = fam.instance(args.index)
    marks = None if args.no_marks else canonical_marks(inst)
    title = f"{fam.spec.label()} instance {args.index}"
    if args.out and not args.out.lower().endswith(".svg") and args.out != "-":
        plot_collection(inst.collection, args.out, marks, not args.no_overlays, title)
        return 0
    with _output(args.out, out) as fh:
        fh.write(render_svg(inst.collection, marks, not args.no_overlays, title))
    return 0


COMMANDS = {
    "profile": _cmd_profile,
    "oracle": _cmd_oracle,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "check": _cmd_check,
    "bound": _cmd_bound,
    "render": _cmd_render,
}


def run_cli(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())
