"""Command-line front end.

Exit codes: 0 success, 1 valid input that fails verification, 2 input
error, 3 internal invariant violation.

    transdecomp verify --graph G.json --partition P.json --group A.json
    transdecomp quotient --graph G.json --blocks B.json -o Q.json
    transdecomp lift --graph G.json --blocks B.json --quotient-partition QP.json \\
        --group A.json -o P.json
    transdecomp origami --format dot -o dodecahedron.dot
    transdecomp pls to-decomp --space S.json --graph-out G.json --partition-out P.json
    transdecomp pls from-decomp --graph G.json --partition P.json --group A.json -o S.json
    transdecomp aut --graph G.json
    transdecomp sample petersen -o petersen.json
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import formats
from .decomposition import lift, verify
from .errors import InputError, PipelineError, ResourceError
from .graph import automorphism_group, quotient
from .origami import export_coloring, run_pipeline
from .pls import from_decomposition, is_line_transitive, to_decomposition
from .samples import SAMPLES

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class _Out:
    """Routes the payload to -o or stdout, and reports to stdout or stderr."""

    def __init__(self, args: argparse.Namespace):
        self.path = getattr(args, "output", None)
        self.json = args.json
        self.report_stream = sys.stdout if self.path else sys.stderr

    def payload(self, text: str | bytes) -> None:
        if isinstance(text, bytes):
            text = text.decode()
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)

    def report(self, human: str, machine: dict[str, Any]) -> None:
        if self.json:
            self.report_stream.write(formats.dumps(machine))
        else:
            self.report_stream.write(human.rstrip("\n") + "\n")


def _graph_and_group(args):
    graph = formats.load_graph(args.graph)
    group = formats.load_group(args.group)
    if group.degree != graph.n:
        raise InputError(f"group degree {group.degree} != graph vertex count {graph.n}")
    return graph, group


def cmd_verify(args) -> int:
    graph, group = _graph_and_group(args)
    partition = formats.load_partition(args.partition, graph)
    report = verify(partition, group)
    out = _Out(args)
    out.report_stream = sys.stdout
    out.report(report.summary(), {"report": report.to_dict(), "ok": report.ok})
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_quotient(args) -> int:
    graph = formats.load_graph(args.graph)
    blocks = formats.load_blocks(args.blocks)
    q = quotient(graph, blocks)
    out = _Out(args)
    out.payload(formats.dumps(formats.graph_to_json(q)))
    out.report(f"quotient: {q.n} vertices, {len(q.edges)} edges",
               {"n": q.n, "num_edges": len(q.edges)})
    return EXIT_OK


def cmd_lift(args) -> int:
    graph, group = _graph_and_group(args)
    blocks = formats.load_blocks(args.blocks)
    blocks.validate(graph.n)
    qgraph = quotient(graph, blocks)
    qpart = formats.load_partition(args.quotient_partition, qgraph)
    partition = lift(graph, blocks, qpart, group)
    report = verify(partition, group)
    out = _Out(args)
    out.payload(formats.dumps(formats.partition_to_json(partition)))
    out.report(report.summary(), {"report": report.to_dict(), "ok": report.ok})
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_origami(args) -> int:
    result = run_pipeline()
    out = _Out(args)
    out.payload(export_coloring(result.coloring, args.format))
    sizes = [len(c) for c in result.coloring.classes()]
    human = (f"dodecahedron: {result.graph.n} vertices, {len(result.graph.edges)} edges\n"
             f"rotation group order: {result.rotations.order}\n"
             f"colour classes: {dict(zip(result.coloring.color_names, sizes))}\n"
             + result.report.summary())
    out.report(human, {"report": result.report.to_dict(), "ok": result.report.ok,
                       "group_order": result.rotations.order, "class_sizes": sizes})
    return EXIT_OK if result.report.ok else EXIT_INTERNAL


def cmd_pls_to(args) -> int:
    space = formats.load_space(args.space)
    graph, partition = to_decomposition(space)
    gdoc = formats.graph_to_json(graph)
    pdoc = formats.partition_to_json(partition)
    if args.graph_out:
        with open(args.graph_out, "w", encoding="utf-8") as fh:
            fh.write(formats.dumps(gdoc))
    if args.partition_out:
        with open(args.partition_out, "w", encoding="utf-8") as fh:
            fh.write(formats.dumps(pdoc))
    files_written = bool(args.graph_out or args.partition_out)
    if not files_written:
        sys.stdout.write(formats.dumps({"graph": gdoc, "partition": pdoc}))
    stream = sys.stdout if files_written else sys.stderr
    machine: dict[str, Any] = {"num_edges": len(graph.edges), "num_parts": len(partition)}
    human = f"graph: {graph.n} vertices, {len(graph.edges)} edges; {len(partition)} parts"
    if args.group:
        group = formats.load_group(args.group)
        lt = is_line_transitive(space, group)
        report = verify(partition, group)
        machine.update(line_transitive=lt.ok, report=report.to_dict())
        human += f"\nline transitive: {'yes' if lt else 'NO'}\n" + report.summary()
    stream.write(formats.dumps(machine) if args.json else human + "\n")
    return EXIT_OK


def cmd_pls_from(args) -> int:
    graph, group = _graph_and_group(args)
    partition = formats.load_partition(args.partition, graph)
    space = from_decomposition(graph, partition, group)
    out = _Out(args)
    out.payload(formats.dumps(formats.space_to_json(space)))
    out.report(f"partial linear space: {space.points} points, {len(space.lines)} lines, "
               f"line transitive",
               {"points": space.points, "num_lines": len(space.lines), "line_transitive": True})
    return EXIT_OK


def cmd_aut(args) -> int:
    graph = formats.load_graph(args.graph)
    group = automorphism_group(graph, bound=args.bound)
    doc = formats.group_to_json(group)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(formats.dumps(doc))
    if args.json:
        sys.stdout.write(formats.dumps({"order": group.order, **doc}))
    else:
        sys.stdout.write(f"order: {group.order}\n")
        if not args.output:
            sys.stdout.write(formats.dumps(doc))
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.name == "list":
        for name, (desc, _) in SAMPLES.items():
            sys.stdout.write(f"{name:24s} {desc}\n")
        return EXIT_OK
    if args.name not in SAMPLES:
        raise InputError(f"unknown sample {args.name!r}; try 'transdecomp sample list'")
    _, build = SAMPLES[args.name]
    text = formats.dumps(build())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transdecomp",
        description="Construct and verify transitive decompositions of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(func=func)
        return p

    p = add("verify", cmd_verify, "check that a partition is a G-transitive decomposition")
    p.add_argument("--graph", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--group", required=True)

    p = add("quotient", cmd_quotient, "imprimitive quotient by a block system")
    p.add_argument("--graph", required=True)
    p.add_argument("--blocks", required=True)
    p.add_argument("-o", "--output")

    p = add("lift", cmd_lift, "lift a quotient decomposition back to the graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--blocks", required=True)
    p.add_argument("--quotient-partition", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("-o", "--output")

    p = add("origami", cmd_origami, "five-colour the dodecahedron's edges")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output")

    p = add("aut", cmd_aut, "automorphism group of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--bound", type=int, default=32, help="maximum vertex count to search")
    p.add_argument("-o", "--output", help="write the group file here")

    p = add("sample", cmd_sample, "write a built-in example file ('list' to show all)")
    p.add_argument("name")
    p.add_argument("-o", "--output")

    pls = sub.add_parser("pls", help="partial linear space conversions")
    pls_sub = pls.add_subparsers(dest="direction", required=True)
    p = pls_sub.add_parser("to-decomp", help="space -> graph + partition")
    p.add_argument("--space", required=True)
    p.add_argument("--graph-out")
    p.add_argument("--partition-out")
    p.add_argument("--group", help="also check line transitivity under this group")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pls_to)
    p = pls_sub.add_parser("from-decomp", help="graph + partition + group -> space")
    p.add_argument("--graph", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pls_from)
    return parser


def _error(exc: BaseException, as_json: bool) -> None:
    witness = getattr(exc, "witness", None)
    if as_json:
        doc = {"error": type(exc).__name__, "message": str(exc)}
        if witness is not None:
            doc["witness"] = witness
        sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"error: {exc}\n")
        if witness is not None:
            sys.stderr.write(f"witness: {json.dumps(witness, sort_keys=True)}\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ResourceError, OSError) as exc:
        _error(exc, args.json)
        return EXIT_INPUT
    except (PipelineError, AssertionError) as exc:
        _error(exc, args.json)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
