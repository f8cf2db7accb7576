"""Command-line front end and batch scanner.

JSON goes to stdout, diagnostics to stderr. Exit status: 0 success, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import BinaryIO, Iterator, Optional, Sequence

from . import fixtures
from .errors import StarpackError, TheoremViolation
from .forbidden import precludes_p0, scan_forbidden
from .fullerene_io import (
    HEADER,
    export_json,
    fullerene_document,
    graph_from_document,
    read_planar_code,
    spiral_to_graph,
)
from .graph_core import Fullerene, RotationSystem, validate_fullerene
from .packing_solver import StarPacking, count_packings, enumerate_packings, find_p0_packing, find_packing
from .spectral import det_shifted_adjacency, has_minus_one_eigenvalue
from .structure_analysis import packing_report
from .transforms import canonical_chamfer_packing, chamfer

log = logging.getLogger("starpack")


class ScanError(StarpackError):
    pass


@dataclass(frozen=True)
class ScanOptions:
    enumerate: bool = False
    limit: Optional[int] = None
    filter_necessary: bool = False
    timing: bool = True


@dataclass
class ScanRecord:
    index: int
    n: int
    packing_found: bool = False
    packing_count: Optional[int] = None
    p0_found: bool = False
    div8: bool = False
    eig_minus1: Optional[bool] = None
    forbidden: list[str] = field(default_factory=list)
    filtered_by: Optional[str] = None
    timing: dict[str, float] = field(default_factory=dict)

    def to_dict(self, options: ScanOptions) -> dict:
        d = {
            "index": self.index,
            "n": self.n,
            "packing_found": self.packing_found,
            "p0_found": self.p0_found,
            "div8": self.div8,
            "eig_minus1": self.eig_minus1,
            "forbidden": self.forbidden,
        }
        if options.enumerate:
            d["packing_count"] = self.packing_count
        if options.filter_necessary:
            d["filtered_by"] = self.filtered_by
        if options.timing:
            d["timing"] = self.timing
        return d


def scan_graph(index: int, g: RotationSystem, options: ScanOptions) -> ScanRecord:
    timing: dict[str, float] = {}

    def timed(stage, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        timing[stage] = round(time.perf_counter() - t0, 6)
        return out

    try:
        f = timed("validate", validate_fullerene, g)
    except StarpackError as exc:
        raise ScanError(f"graph {index}: {exc}") from exc
    rec = ScanRecord(index=index, n=f.n, div8=f.n % 8 == 0, timing=timing)
    rec.forbidden = sorted({m.kind.value for m in timed("forbidden", scan_forbidden, f)})

    if options.filter_necessary and not rec.div8:
        rec.filtered_by = "div8"
        return rec
    rec.eig_minus1 = timed("spectral", has_minus_one_eigenvalue, f)
    if options.filter_necessary and not rec.eig_minus1:
        rec.filtered_by = "spectral"
        return rec

    rec.packing_found = timed("solve", find_packing, f) is not None
    if options.enumerate:
        rec.packing_count = timed("enumerate", count_packings, f, options.limit) if rec.packing_found else 0
    if rec.packing_found:
        rec.p0_found = timed("p0", find_p0_packing, f) is not None
        if not (rec.div8 and rec.eig_minus1):
            raise TheoremViolation("necessary conditions", f"graph {index}: packing without div8/eigenvalue")
    return rec


def _scan_star(args):
    return scan_graph(*args)


def run_scan(stream: BinaryIO | bytes, options: ScanOptions = ScanOptions(), jobs: int = 1) -> Iterator[ScanRecord]:
    """One record per graph, in input order (also with ``jobs > 1``)."""
    graphs = read_planar_code(stream)
    if jobs <= 1:
        for i, g in enumerate(graphs):
            yield scan_graph(i, g, options)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        work = ((i, g, options) for i, g in enumerate(graphs))
        yield from pool.map(_scan_star, work)


# --- single-graph subcommands ------------------------------------------------

def _read_input(args) -> RotationSystem:
    return _read_input_doc(args)[0]


def _read_input_doc(args) -> tuple[RotationSystem, Optional[dict]]:
    """The input graph, plus the JSON document when the input was one."""
    if getattr(args, "fixture", None):
        return fixtures.fixture(args.fixture).graph, None
    if args.input in (None, "-"):
        data = sys.stdin.buffer.read()
    else:
        with open(args.input, "rb") as fh:
            data = fh.read()
    if data.startswith(HEADER):
        graphs = list(read_planar_code(io.BytesIO(data)))
        if not 0 <= args.index < len(graphs):
            raise StarpackError(f"input holds {len(graphs)} graph(s); no index {args.index}")
        return graphs[args.index], None
    try:
        doc = json.loads(data)
    except ValueError as exc:
        raise StarpackError("input is neither planar code nor a starpack JSON document") from exc
    return graph_from_document(doc), doc


def _load(args) -> Fullerene:
    return validate_fullerene(_read_input(args))


def _emit(obj) -> None:
    sys.stdout.write(obj if isinstance(obj, str) else json.dumps(obj, sort_keys=True))
    sys.stdout.write("\n")


def cmd_validate(args) -> None:
    _emit(export_json(_load(args)))


def cmd_spiral(args) -> None:
    if args.pentagons:
        positions = [int(x) for x in args.pentagons.split(",")]
        if args.n is None:
            raise StarpackError("--pentagons needs --n")
        sizes = fixtures.spiral_code(args.n, tuple(positions))
    else:
        sizes = args.sizes
    if not sizes:
        raise StarpackError("give face sizes or --pentagons")
    _emit(export_json(validate_fullerene(spiral_to_graph(sizes))))


def cmd_pack(args) -> None:
    f = _load(args)
    out: dict = {"n": f.n}
    if args.enumerate:
        packs = enumerate_packings(f, args.limit)
        out["count"] = len(packs)
        out["packings"] = [list(p.centers) for p in packs]
        out["packing_found"] = bool(packs)
        out["centers"] = list(packs[0].centers) if packs else None
    else:
        p = find_p0_packing(f) if args.p0 else find_packing(f)
        out["packing_found"] = p is not None
        out["centers"] = list(p.centers) if p else None
    if not out["packing_found"]:
        log.info("no packing")
    _emit(out)


def cmd_report(args) -> None:
    g, src = _read_input_doc(args)
    f = validate_fullerene(g)
    if args.centers:
        s = StarPacking.from_centers(f, (int(x) for x in args.centers.split(",")))
    elif src and "canonical_centers" in src:
        # output of the chamfer subcommand
        s = StarPacking.from_centers(f, src["canonical_centers"])
    else:
        s = find_packing(f)
    doc = fullerene_document(f)
    doc["packing_found"] = s is not None
    if s is not None:
        doc["report"] = packing_report(f, s, spectral=not args.no_spectral).to_dict()
    _emit(doc)


def cmd_chamfer(args) -> None:
    r = chamfer(_load(args))
    doc = fullerene_document(r.graph)
    doc["canonical_centers"] = list(canonical_chamfer_packing(r).centers)
    _emit(doc)


def cmd_spectral(args) -> None:
    g = _read_input(args)
    det = det_shifted_adjacency(g, args.shift)
    minus_one = det == 0 if args.shift == 1 else has_minus_one_eigenvalue(g)
    _emit({"n": g.n, "shift": args.shift, "determinant": det, "minus_one_eigenvalue": minus_one})


def cmd_forbidden(args) -> None:
    f = _load(args)
    matches = scan_forbidden(f)
    hit, first = precludes_p0(f)
    _emit({"precludes_p0": hit, "first": first.to_dict() if first else None, "matches": [m.to_dict() for m in matches]})


def cmd_scan(args) -> None:
    options = ScanOptions(
        enumerate=args.enumerate,
        limit=args.limit,
        filter_necessary=args.filter_necessary,
        timing=not args.no_timing,
    )
    stream = sys.stdin.buffer if args.input in (None, "-") else open(args.input, "rb")
    try:
        for rec in run_scan(stream, options, args.jobs):
            _emit(rec.to_dict(options))
            sys.stdout.flush()
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starpack", description="Perfect star packings in fullerenes.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", nargs="?", default="-", help="planar code or JSON file ('-' = stdin)")
        p.add_argument("--index", type=int, default=0, help="graph index within a planar-code stream")
        p.add_argument("--fixture", choices=fixtures.names(), help="use a built-in fixture instead of input")
        p.set_defaults(func=fn)
        return p

    graph_cmd("validate", cmd_validate, "validate a fullerene and print it as JSON")
    p = graph_cmd("pack", cmd_pack, "find (or enumerate) perfect star packings")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--p0", action="store_true", help="only packings with no centre on a pentagon")
    p = graph_cmd("report", cmd_report, "verify the structural theorems on a packing")
    p.add_argument(
        "--centers",
        help="comma-separated centre set (default: canonical_centers of a chamfer document, else first packing found)",
    )
    p.add_argument("--no-spectral", action="store_true")
    graph_cmd("chamfer", cmd_chamfer, "apply the chamfer transformation")
    p = graph_cmd("spectral", cmd_spectral, "exact det(A + shift I)")
    p.add_argument("--shift", type=int, default=1)
    graph_cmd("forbidden", cmd_forbidden, "scan for configurations that preclude a P0 packing")

    p = sub.add_parser("spiral", help="build a fullerene from a face spiral")
    p.add_argument("sizes", nargs="*", type=int, help="face sizes (5/6) in spiral order")
    p.add_argument("--pentagons", help="comma-separated 1-based pentagon positions")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_spiral)

    p = sub.add_parser("scan", help="batch scan a planar-code stream, JSON lines out")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--enumerate", action="store_true", help="count packings")
    p.add_argument("--limit", type=int, default=None, help="cap on packings counted with --enumerate")
    p.add_argument("--filter-necessary", action="store_true", help="run div-by-8 and spectral tests before solving")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args.func(args)
    except StarpackError as exc:
        print(f"starpack: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"starpack: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
