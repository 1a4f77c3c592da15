"""Command line front end.

Commands operate on graph files or cell files (formats in files.py) and emit
line-oriented ``key=value`` reports with stable key order, or one JSON object
with ``--json``.  Exit codes: 0 success, 2 unreadable/malformed input or
usage error, 3 semantic failure (not a partial cube, not a tree), 4 index
overflow.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chem import BenzenoidSpec, C4C8Spec, build_benzenoid, build_c4c8, c4c8_report, direction_partition
from .core import GraphError, IndexOverflowError
from .files import (
    ParseError,
    format_coords_sidecar,
    format_graph_file,
    parse_cell_text,
    parse_graph_text,
    sniff_kind,
)
from .indices import (
    VertexEdgeWeightedGraph,
    VertexWeightedGraph,
    cut_class_summaries,
    szeged_brute,
    szeged_cut,
    szeged_via_partition,
    wiener_brute,
    wiener_cut,
    wiener_via_partition,
)
from .quotient import build_quotient, coarsest_partition, finest_partition, quotient_theta_classes, validate_coarser
from .theta import PartialCube, recognize_partial_cube
from .treedp import szeged_tree_linear, wiener_tree_linear


class _UsageError(Exception):
    pass


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_input(path: str):
    """Parse a graph or cell file into (graph, tags, c4c8_spec, is_cells)."""
    text = _read(path)
    if sniff_kind(text) == "cells":
        kind, cells = parse_cell_text(text)
        try:
            if kind == "c4c8":
                spec = C4C8Spec(cells)
                g, tags, coords = build_c4c8(spec)
                return g, tags, coords, spec, True, None
            bspec = BenzenoidSpec(cells)
            g, tags, coords = build_benzenoid(bspec)
            return g, tags, coords, None, True, None
        except GraphError as exc:
            # Invalid cell sets are input errors, like any other bad file.
            raise ParseError(1, str(exc)) from None
    data = parse_graph_text(text)
    return data.graph, None, None, None, False, data


def _witness_payload(witness):
    payload = {"kind": witness.kind}
    if witness.odd_cycle is not None:
        payload["odd_cycle"] = list(witness.odd_cycle)
    if witness.class_edges is not None:
        payload["class_edges"] = list(witness.class_edges)
        payload["component_count"] = witness.component_count
    if witness.pair is not None:
        payload["pair"] = list(witness.pair)
    return payload


def _print_witness(witness, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"partial_cube": False, "witness": _witness_payload(witness)}))
        return
    print("partial_cube=false")
    print(f"witness={witness.kind}")
    if witness.odd_cycle is not None:
        print("witness_cycle=" + ",".join(map(str, witness.odd_cycle)))
    if witness.class_edges is not None:
        print("witness_class_edges=" + ",".join(map(str, witness.class_edges)))
        print(f"witness_components={witness.component_count}")
    if witness.pair is not None:
        print("witness_pair=" + ",".join(map(str, witness.pair)))


def _parse_explicit_groups(spec: str):
    try:
        groups = [[int(x) for x in part.split(",")] for part in spec.split(";")]
    except ValueError:
        raise _UsageError(
            f"bad --partition value {spec!r}; expected finest, direction,"
            " or groups like '0,1;2'"
        ) from None
    return groups


def _class_rows_for_partition(pc, cp):
    rows = []
    for i in range(cp.group_count):
        wq = build_quotient(pc, cp, i)
        for s in quotient_theta_classes(wq):
            rows.append((s.original_class, s.edge_weight_sum, s.side1_weight, s.side2_weight))
    rows.sort()
    return rows


def _emit_index_report(args, method, partition, wiener, szeged, rows) -> None:
    if args.json:
        payload = {"command": "index", "method": method}
        if method == "partition":
            payload["partition"] = partition
        payload["wiener"] = wiener
        payload["szeged"] = szeged
        if rows is not None:
            payload["classes"] = [
                {"class": j, "size": size, "n1": n1, "n2": n2,
                 "wiener_term": n1 * n2, "szeged_term": size * n1 * n2}
                for j, size, n1, n2 in rows
            ]
        print(json.dumps(payload))
        return
    print(f"wiener={wiener}")
    print(f"szeged={szeged}")
    if rows is not None:
        for j, size, n1, n2 in rows:
            print(
                f"class={j} size={size} n1={n1} n2={n2}"
                f" wiener_term={n1 * n2} szeged_term={size * n1 * n2}"
            )


def cmd_index(args) -> int:
    g, tags, _, c4c8_spec, is_cells, data = _load_input(args.file)
    if data is not None and data.has_nondefault_weights:
        raise _UsageError(
            "index computes unweighted graph indices; wv/we weights apply to tree-index"
        )
    method = args.method
    partition = args.partition
    rows = None

    if method == "brute":
        wiener, szeged = wiener_brute(g), szeged_brute(g)
        if args.verbose:
            result = recognize_partial_cube(g)
            if isinstance(result, PartialCube):
                rows = [(s.class_index, s.size, s.n1, s.n2) for s in cut_class_summaries(result)]
    elif method == "partition" and partition == "direction" and c4c8_spec is not None:
        # C4C8 systems take the linear pipeline: geometric cuts, tree quotients.
        wiener, szeged, all_rows = c4c8_report(c4c8_spec)
        rows = all_rows if args.verbose else None
    else:
        if partition == "direction" and method == "partition" and not is_cells:
            raise _UsageError("--partition direction requires a cell file")
        result = recognize_partial_cube(g)
        if not isinstance(result, PartialCube):
            _print_witness(result, args.json)
            return 3
        pc = result
        if method == "cut":
            wiener, szeged = wiener_cut(pc), szeged_cut(pc)
            if args.verbose:
                rows = [(s.class_index, s.size, s.n1, s.n2) for s in cut_class_summaries(pc)]
        else:
            if partition == "finest":
                cp = finest_partition(pc.theta)
            elif partition == "coarsest":
                cp = coarsest_partition(pc.theta)
            elif partition == "direction":
                cp = direction_partition(pc.graph, tags, pc.theta)
            else:
                cp = validate_coarser(pc.theta, _parse_explicit_groups(partition))
            wiener = wiener_via_partition(pc, cp)
            szeged = szeged_via_partition(pc, cp)
            if args.verbose:
                rows = _class_rows_for_partition(pc, cp)

    _emit_index_report(args, method, partition, wiener, szeged, rows)
    return 0


def cmd_recognize(args) -> int:
    g, _, _, _, _, _ = _load_input(args.file)
    result = recognize_partial_cube(g)
    if isinstance(result, PartialCube):
        sizes = [len(cls) for cls in result.theta.classes]
        if args.json:
            print(json.dumps({
                "partial_cube": True,
                "classes": result.theta.class_count,
                "class_sizes": sizes,
            }))
        else:
            print("partial_cube=true")
            print(f"classes={result.theta.class_count}")
            print("class_sizes=" + ",".join(map(str, sizes)))
    else:
        _print_witness(result, args.json)
    return 0


def cmd_generate(args) -> int:
    try:
        kind, cells = parse_cell_text(_read(args.cellfile))
        if kind == "c4c8":
            g, tags, coords = build_c4c8(C4C8Spec(cells))
        else:
            g, tags, coords = build_benzenoid(BenzenoidSpec(cells))
    except GraphError as exc:
        _fail(str(exc))
        return 2
    sidecar = args.out + ".coords"
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_graph_file(g))
    with open(sidecar, "w", encoding="utf-8") as fh:
        fh.write(format_coords_sidecar(coords, tags))
    print(f"graph_file={args.out}")
    print(f"sidecar={sidecar}")
    return 0


def cmd_tree_index(args) -> int:
    data = parse_graph_text(_read(args.file))
    weighted = VertexEdgeWeightedGraph(data.graph, data.vertex_weights, data.edge_weights)
    wiener = wiener_tree_linear(VertexWeightedGraph(data.graph, data.vertex_weights))
    szeged = szeged_tree_linear(weighted)
    if args.json:
        print(json.dumps({"command": "tree-index", "wiener": wiener, "szeged": szeged}))
    else:
        print(f"wiener={wiener}")
        print(f"szeged={szeged}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutindex",
        description="Wiener and Szeged indices of partial cubes via the cut method.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="compute both indices of a graph or cell file")
    p_index.add_argument("file")
    p_index.add_argument("--method", choices=("brute", "cut", "partition"), default="brute")
    p_index.add_argument(
        "--partition",
        default="finest",
        help="with --method partition: finest, coarsest, direction (cell files"
        " only), or explicit class groups like '0,1;2'",
    )
    p_index.add_argument("--verbose", action="store_true", help="per-class cut table")
    p_index.add_argument("--json", action="store_true")
    p_index.set_defaults(func=cmd_index)

    p_rec = sub.add_parser("recognize", help="partial-cube recognition report")
    p_rec.add_argument("file")
    p_rec.add_argument("--json", action="store_true")
    p_rec.set_defaults(func=cmd_recognize)

    p_gen = sub.add_parser("generate", help="expand a cell file into a graph file")
    p_gen.add_argument("cellfile")
    p_gen.add_argument("out")
    p_gen.set_defaults(func=cmd_generate)

    p_tree = sub.add_parser("tree-index", help="weighted tree indices, linear time")
    p_tree.add_argument("file")
    p_tree.add_argument("--json", action="store_true")
    p_tree.set_defaults(func=cmd_tree_index)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        _fail(str(exc))
        return 2
    except _UsageError as exc:
        _fail(str(exc))
        return 2
    except IndexOverflowError as exc:
        _fail(str(exc))
        return 4
    except GraphError as exc:
        _fail(str(exc))
        return 3
    except OSError as exc:
        _fail(str(exc))
        return 2


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
