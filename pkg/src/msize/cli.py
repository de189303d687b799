"""Command line entry point: ``msize compute | compare | vineyard``.

Shapes are given in order with ``--mesh PATH`` or ``--demo cube|sphere``; a
following ``--subdiv N`` refines the most recent demo shape. A single
``--measure`` applies to every shape, several attach to the shape before each.

Exit codes: 0 success, 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from msize.errors import InvariantViolation
from msize.foliation import AdmissiblePair, reduce, sample_admissible
from msize.io import dumps, read_columns, write_json
from msize.meshes import Mesh, demo_mesh, load_mesh, measure, parse_measure_spec
from msize.multidist import (
    MultiDistReport,
    compute_D_match,
    pseudo_distance_gap_report,
    report_to_csv,
    report_to_json,
)
from msize.plot import size_function_svg
from msize.shape import FilteredGraph
from msize.sizefn1d import compute_corner_series
from msize.vineyard import build_product, load_homotopy, probe_vineyard_link, threshold_probes

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3
DEFAULT_MEASURE = "abs_x,abs_z"


@dataclass
class ShapeSource:
    kind: str  # "mesh" or "demo"
    value: str
    subdiv: int | None = None
    measure: str | None = None

    @property
    def label(self) -> str:
        if self.kind == "demo":
            return f"{self.value}" + (f"-subdiv{self.subdiv}" if self.subdiv is not None else "")
        return Path(self.value).stem

    def load(self) -> Mesh:
        return demo_mesh(self.value, self.subdiv) if self.kind == "demo" else load_mesh(self.value)


@dataclass
class RunConfig:
    shapes: list[ShapeSource] = field(default_factory=list)
    grid_l: int = 1
    grid_b: int = 1
    b_radius: float | None = None
    out: Path | None = None
    plot: bool = False

    def __post_init__(self):
        if self.grid_l < 1 or self.grid_b < 1:
            raise ValueError("--grid-l and --grid-b must be >= 1")
        if self.b_radius is not None and self.b_radius < 0:
            raise ValueError("--b-radius must be >= 0")


class _ShapeToken(argparse.Action):
    """Record shape-related options in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        tokens = list(getattr(namespace, "shape_tokens", None) or [])
        tokens.append((self.dest, values))
        namespace.shape_tokens = tokens


def _resolve_shapes(tokens) -> list[ShapeSource]:
    shapes: list[ShapeSource] = []
    pending_subdiv = None
    global_measure = None
    n_measures = sum(kind == "measure" for kind, _ in tokens)
    for kind, value in tokens:
        if kind in ("mesh", "demo"):
            shapes.append(ShapeSource(kind, value, subdiv=pending_subdiv if kind == "demo" else None))
        elif kind == "subdiv":
            if not shapes:
                pending_subdiv = value
            elif shapes[-1].kind == "demo":
                shapes[-1].subdiv = value
            else:
                raise ValueError("--subdiv must follow a --demo shape")
        elif kind == "measure":
            if n_measures == 1 or not shapes:
                global_measure = value
            else:
                shapes[-1].measure = value
    for shape in shapes:
        if shape.measure is None:
            shape.measure = global_measure or DEFAULT_MEASURE
    return shapes


def _shape_graph(source: ShapeSource) -> FilteredGraph:
    mesh = source.load()
    return mesh.to_graph(measure(mesh, parse_measure_spec(source.measure)))


def _default_b_radius(graphs) -> float:
    values = np.vstack([g.values for g in graphs])
    return 0.5 * float(np.max(values.max(axis=0) - values.min(axis=0)))


def _admissible_family(config: RunConfig, graphs) -> list[AdmissiblePair]:
    k = graphs[0].k
    radius = config.b_radius if config.b_radius is not None else _default_b_radius(graphs)
    return sample_admissible(k, config.grid_l, config.grid_b, radius)


def _check_report(report: MultiDistReport, k: int) -> None:
    top = 1 / math.sqrt(k) + 1e-12
    for e in report.entries:
        if not 0 < e.weight <= top:
            raise InvariantViolation(f"weight {e.weight} outside (0, 1/sqrt(k)]")
    if report.d_match_sup != max(e.weighted for e in report.entries):
        raise InvariantViolation("d_match_sup is not the maximum weighted entry")


def cmd_compute(config: RunConfig) -> int:
    if len(config.shapes) != 1:
        raise ValueError("compute takes exactly one shape (--mesh or --demo)")
    source = config.shapes[0]
    graph = _shape_graph(source)
    family = _admissible_family(config, [graph])
    results = []
    for pair in family:
        series = compute_corner_series(graph, reduce(graph, pair))
        if len(series.cornerlines) < 1:
            raise InvariantViolation("corner series without cornerlines")
        results.append((pair, series))

    index = {
        "shape": source.label,
        "measure": source.measure,
        "vertex_count": graph.vertex_count,
        "k": graph.k,
        "pairs": [],
    }
    for i, (pair, series) in enumerate(results):
        name = f"series_{i:03d}"
        index["pairs"].append({"file": f"{name}.json", "pair": pair.to_dict(),
                               "cornerpoints": len(series.cornerpoints),
                               "cornerlines": len(series.cornerlines)})
        if config.out is not None:
            config.out.mkdir(parents=True, exist_ok=True)
            write_json(config.out / f"{name}.json", {"pair": pair.to_dict(), "series": series.to_json()})
            if config.plot:
                l = ", ".join(f"{v:.4g}" for v in pair.l)
                b = ", ".join(f"{v:.4g}" for v in pair.b)
                svg = size_function_svg(series, title=f"{source.label}  l=({l})  b=({b})")
                (config.out / f"{name}.svg").write_text(svg)
    if config.out is not None:
        write_json(config.out / "index.json", index)
    sys.stdout.write(dumps(index))
    return EXIT_OK


def cmd_compare(config: RunConfig) -> int:
    if len(config.shapes) != 2:
        raise ValueError("compare takes exactly two shapes (--mesh/--demo twice)")
    g1, g2 = (_shape_graph(s) for s in config.shapes)
    if g1.k != g2.k:
        raise ValueError(
            f"measuring functions differ in dimension: {config.shapes[0].measure!r} (k={g1.k}) "
            f"vs {config.shapes[1].measure!r} (k={g2.k})"
        )
    report = compute_D_match(g1, g2, _admissible_family(config, [g1, g2]))
    _check_report(report, g1.k)
    if config.out is not None:
        config.out.mkdir(parents=True, exist_ok=True)
        payload = report_to_json(report)
        payload["shapes"] = [{"label": s.label, "measure": s.measure} for s in config.shapes]
        write_json(config.out / "report.json", payload)
        (config.out / "report.csv").write_text(report_to_csv(report))
    print(pseudo_distance_gap_report(report))
    return EXIT_OK


def cmd_vineyard(args) -> int:
    h = load_homotopy(args.frames, args.edges)
    if args.probes:
        table = read_columns(args.probes)
        if table.shape[1] != 3:
            raise ValueError(f"{args.probes}: probes need three columns x, y, frame")
        probes = [(x, y, int(j)) for x, y, j in table.tolist()]
    else:
        probes = threshold_probes(h)
    corrupted = args.drop_spatial or args.drop_temporal
    product = build_product(h, spatial=not args.drop_spatial, temporal=not args.drop_temporal)
    results = probe_vineyard_link(h, probes, product)
    ok = all(r.equal for r in results)
    report = {
        "frames": h.frame_count,
        "vertex_count": h.vertex_count,
        "probes": len(results),
        "mismatches": [r.__dict__ for r in results if not r.equal],
        "all_equal": ok,
        "product": {"spatial_edges": not args.drop_spatial, "temporal_edges": not args.drop_temporal},
    }
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        write_json(args.out / "vineyard.json", report)
    print(f"probes checked: {len(results)}")
    print(f"all probes equal: {'true' if ok else 'false'}")
    if not ok and not corrupted:
        raise InvariantViolation("vineyard identity failed on an intact product graph")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msize", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def shape_options(p):
        p.add_argument("--mesh", dest="mesh", action=_ShapeToken, metavar="PATH", help="OFF or OBJ mesh")
        p.add_argument("--demo", dest="demo", action=_ShapeToken, choices=["cube", "sphere"])
        p.add_argument("--subdiv", dest="subdiv", action=_ShapeToken, type=int, metavar="N")
        p.add_argument("--measure", dest="measure", action=_ShapeToken, metavar="SPEC",
                       help=f"comma-separated measuring functions (default {DEFAULT_MEASURE})")
        p.add_argument("--grid-l", type=int, default=1)
        p.add_argument("--grid-b", type=int, default=1)
        p.add_argument("--b-radius", type=float, default=None,
                       help="offset range; default half the largest coordinate spread")
        p.add_argument("--out", type=Path, default=None)
        p.set_defaults(shape_tokens=[])

    p = sub.add_parser("compute", help="corner series of one shape per admissible pair")
    shape_options(p)
    p.add_argument("--plot", action="store_true", help="also write one SVG per pair")

    p = sub.add_parser("compare", help="D_match and pseudo-distance lower bound between two shapes")
    shape_options(p)

    p = sub.add_parser("vineyard", help="check the vineyard / product size function identity")
    p.add_argument("--frames", type=Path, required=True, help="CSV, one row per vertex, one column per frame")
    p.add_argument("--edges", type=Path, required=True, help="CSV of 0-based vertex index pairs")
    p.add_argument("--probes", type=Path, default=None, help="CSV rows x,y,frame (default: all thresholds)")
    p.add_argument("--drop-spatial", action="store_true", help="corrupt the product: remove in-frame edges")
    p.add_argument("--drop-temporal", action="store_true", help="corrupt the product: remove time edges")
    p.add_argument("--out", type=Path, default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "vineyard":
            return cmd_vineyard(args)
        config = RunConfig(
            shapes=_resolve_shapes(args.shape_tokens),
            grid_l=args.grid_l,
            grid_b=args.grid_b,
            b_radius=args.b_radius,
            out=args.out,
            plot=getattr(args, "plot", False),
        )
        if args.command == "compute":
            return cmd_compute(config)
        return cmd_compare(config)
    except InvariantViolation as exc:
        print(f"msize: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, OSError) as exc:
        print(f"msize: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
