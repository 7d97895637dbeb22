"""Command-line entry point: ``entropy-nand <subcommand> ...``.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import itertools
import json
import logging
import sys

import numpy as np

from . import circuits, core, gates, patterns, thermo

log = logging.getLogger("entropy_nand")


def _bit(text: str) -> bool:
    if text not in ("0", "1"):
        raise argparse.ArgumentTypeError(f"expected 0 or 1, got {text!r}")
    return text == "1"


def _input_pair(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated bits, got {text!r}")
    return tuple(_bit(p.strip()) for p in parts)


def _assignment(text: str) -> dict:
    out = {}
    for item in filter(None, text.split(",")):
        name, sep, value = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected name=bit, got {item!r}")
        out[name.strip()] = _bit(value.strip())
    return out


def _samples(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("at least 2 samples are needed")
    return n


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


# subcommands -------------------------------------------------------------------

def cmd_enumerate(args, out):
    found = patterns.enumerate_patterns(args.n)
    if args.format == "names":
        for net in found:
            out.write(patterns.classify_pattern(net).kind + "\n")
    elif args.format == "labels":
        for net in found:
            pc = patterns.classify_pattern(net)
            out.write(f"{pc.canonical_label.hex()} {pc.kind}\n")
    elif args.format == "json":
        docs = [dict(core.network_to_dict(n), kind=patterns.classify_pattern(n).kind) for n in found]
        out.write(json.dumps(docs, indent=2) + "\n")
    else:
        for i, net in enumerate(found):
            out.write(patterns.to_dot(net, f"pattern{i}", patterns.classify_pattern(net).kind))


def cmd_classify(args, out):
    net = core.network_from_json(_read(args.network))
    pc = patterns.classify_pattern(net)
    out.write(f"{pc.kind} {pc.canonical_label.hex()}\n")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(patterns.to_dot(net, label=pc.kind))


def cmd_gate(args, out):
    a, b = args.inputs
    output, state = gates.evaluate(a, b, args.kind)
    if args.trace == "json":
        out.write(state.to_json(indent=2) + "\n")
    elif args.trace == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["a", "b", "kind", "pattern", "a_S", "b_S", "o_S", "o_physical_nats", "u", "threshold", "output"])
        w.writerow([int(a), int(b), args.kind, state.pattern, *state.entropies,
                    core.element_entropy(state.entropies[2]), state.u, state.threshold, int(output)])
    else:
        out.write(f"{int(output)}\n")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(patterns.to_dot(state.network, f"{args.kind}_{int(a)}{int(b)}", state.pattern))


def cmd_search(args, out):
    found = gates.search_reachable_tables(args.n, args.budget)
    for table in sorted(found, key=gates.table_name):
        bits = "".join(str(int(x)) for x in table)
        out.write(f"{gates.table_name(table)} {bits}\n")


def cmd_synthesize(args, out):
    netlist = circuits.synthesize_nand_netlist(circuits.parse_expression(args.expr))
    if args.emit == "netlist":
        out.write(circuits.format_netlist(netlist))
    elif args.emit == "dot":
        out.write(circuits.netlist_to_dot(netlist))
    else:
        r = circuits.netlist_report(netlist, args.temperature)
        out.write(json.dumps(r.__dict__, indent=2) + "\n")


def cmd_eval_netlist(args, out):
    netlist = circuits.parse_netlist(_read(args.netlist))
    if args.assign is not None:
        values = circuits.evaluate_netlist(netlist, args.assign, args.mode)
        out.write(" ".join(str(int(v)) for v in values) + "\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow([*netlist.primary_inputs, *netlist.outputs])
    for bits in itertools.product((False, True), repeat=len(netlist.primary_inputs)):
        values = circuits.evaluate_netlist(netlist, dict(zip(netlist.primary_inputs, bits)), args.mode)
        w.writerow([int(x) for x in (*bits, *values)])


def cmd_simulate(args, out):
    config = thermo.load_config(args.config) if args.config else thermo.load_preset(args.preset)
    if args.noise is not None:
        config = dataclasses.replace(config, noise_sigma=args.noise)
    rows = thermo.monte_carlo_report(config, args.trials, args.seed)
    if args.report == "csv":
        out.write(thermo.report_csv(rows))
    else:
        out.write(json.dumps([r.__dict__ for r in rows], indent=2) + "\n")


def cmd_profile(args, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["t", "entropy_nats"])
    for t in np.linspace(0.0, 1.0, args.samples):
        t = float(t)
        w.writerow([repr(t), repr(core.transition_profile(t, args.mode))])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="entropy-nand", description="Observation networks and the entropy NAND gate.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list observation patterns up to isomorphism")
    p.add_argument("--n", type=int, required=True, help="number of observations (1-5)")
    p.add_argument("--format", choices=("names", "labels", "json", "dot"), default="names")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="name the pattern of a network JSON file")
    p.add_argument("network", help="network JSON file")
    p.add_argument("--dot", metavar="FILE", help="also write the network as DOT")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gate", help="evaluate the entropy gate")
    p.add_argument("--kind", choices=gates.KINDS, default="nand")
    p.add_argument("--inputs", type=_input_pair, required=True, metavar="A,B", help="two bits, e.g. 1,0")
    p.add_argument("--trace", choices=("json", "csv"), help="print the full trace instead of the bare output")
    p.add_argument("--dot", metavar="FILE", help="write the gate network as DOT")
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("search", help="truth tables reachable with n observations")
    p.add_argument("--n", type=int, default=2, help="number of observations (1-3)")
    p.add_argument("--budget", type=int, default=gates.MAX_SEARCH_BUDGET, help="number of elements (2-6)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("synthesize", help="compile a boolean expression to NAND gates")
    p.add_argument("--expr", required=True, help="expression over ! & ^ | and parentheses")
    p.add_argument("--emit", choices=("netlist", "dot", "report"), default="netlist")
    p.add_argument("--temperature", type=float, default=300.0, help="kelvin, for the energy budget")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("eval-netlist", help="evaluate a netlist file")
    p.add_argument("--netlist", required=True, help="netlist text file")
    p.add_argument("--assign", type=_assignment, metavar="a=1,b=0", help="one assignment; omit for a full sweep")
    p.add_argument("--mode", choices=("entropy", "pure"), default="entropy")
    p.set_defaults(func=cmd_eval_netlist)

    p = sub.add_parser("simulate", help="Monte Carlo run of the heat-reservoir gate")
    p.add_argument("--config", help="config JSON file (default: bundled preset)")
    p.add_argument("--preset", default="ice_cube", help="bundled preset name")
    p.add_argument("--trials", type=_positive_int, default=10000)
    p.add_argument("--seed", type=int, help="overrides the config seed")
    p.add_argument("--noise", type=float, help="overrides noise_sigma")
    p.add_argument("--report", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("profile", help="sample the entropy of a state transition")
    p.add_argument("--mode", choices=("kronecker", "hp"), default="kronecker")
    p.add_argument("--samples", type=_samples, default=11)
    p.set_defaults(func=cmd_profile)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=stderr)
    log.info("running %s", args.command)
    buf = io.StringIO()
    try:
        args.func(args, buf)
    except (ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"entropy-nand {args.command}: error: {msg}\n")
        return 1
    stdout.write(buf.getvalue())
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
