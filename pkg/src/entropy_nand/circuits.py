"""Boolean expressions, NAND-only netlists and their evaluation.

Netlists are evaluated either with plain boolean NAND (``pure``) or by
running every gate instance as a fresh entropy gate (``entropy``); gates are
coupled at the boolean level, so a downstream gate builds its own network
from the upstream gate's read-out output.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Union

from . import gates
from .core import LN2, landauer_energy


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    x: "BoolExpr"


@dataclass(frozen=True)
class And:
    x: "BoolExpr"
    y: "BoolExpr"


@dataclass(frozen=True)
class Or:
    x: "BoolExpr"
    y: "BoolExpr"


@dataclass(frozen=True)
class Xor:
    x: "BoolExpr"
    y: "BoolExpr"


BoolExpr = Union[Var, Not, And, Or, Xor]

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\S))")
_BINARY = {"|": Or, "^": Xor, "&": And}
_LEVELS = ("|", "^", "&")  # loosest first


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(1) if m.group(1) else m.start(2)
        tok = m.group(1) or m.group(2)
        if m.group(2) and tok not in "!&|^()":
            raise ExpressionSyntaxError(f"unexpected character {tok!r}", start)
        tokens.append((tok, start))
        pos = m.end()
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def binary(self, level: int):
        if level == len(_LEVELS):
            return self.unary()
        op = _LEVELS[level]
        left = self.binary(level + 1)
        while self.peek()[0] == op:
            self.take()
            left = _BINARY[op](left, self.binary(level + 1))
        return left

    def unary(self):
        tok, pos = self.take()
        if tok == "!":
            return Not(self.unary())
        if tok == "(":
            inner = self.binary(0)
            close, cpos = self.take()
            if close != ")":
                raise ExpressionSyntaxError("expected ')'", cpos)
            return inner
        if tok and (tok[0].isalpha() or tok[0] == "_"):
            return Var(tok)
        raise ExpressionSyntaxError("expected a variable, '!' or '('" if tok else "unexpected end of input", pos)


def parse_expression(text: str) -> BoolExpr:
    """Parse ``!``, ``&``, ``^``, ``|`` (tightest first, left-associative) and parentheses."""
    p = _Parser(text)
    expr = p.binary(0)
    tok, pos = p.peek()
    if tok:
        raise ExpressionSyntaxError(f"unexpected token {tok!r}", pos)
    return expr


def format_expression(expr: BoolExpr) -> str:
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Not):
        return f"!{format_expression(expr.x)}"
    op = {And: "&", Or: "|", Xor: "^"}[type(expr)]
    return f"({format_expression(expr.x)} {op} {format_expression(expr.y)})"


def variables(expr: BoolExpr) -> list:
    if isinstance(expr, Var):
        return [expr.name]
    if isinstance(expr, Not):
        return variables(expr.x)
    return sorted(set(variables(expr.x)) | set(variables(expr.y)))


def truth_evaluate(expr: BoolExpr, assignment: dict) -> bool:
    """Direct evaluation with Python booleans."""
    if isinstance(expr, Var):
        return bool(assignment[expr.name])
    if isinstance(expr, Not):
        return not truth_evaluate(expr.x, assignment)
    x, y = truth_evaluate(expr.x, assignment), truth_evaluate(expr.y, assignment)
    if isinstance(expr, And):
        return x and y
    if isinstance(expr, Or):
        return x or y
    return x != y


def random_expression(rng: random.Random, names=("a", "b", "c", "d"), depth: int = 4) -> BoolExpr:
    if depth == 0 or rng.random() < 0.2:
        return Var(rng.choice(names))
    kind = rng.choice((Not, And, Or, Xor))
    if kind is Not:
        return Not(random_expression(rng, names, depth - 1))
    return kind(random_expression(rng, names, depth - 1), random_expression(rng, names, depth - 1))


# netlists --------------------------------------------------------------------

@dataclass(frozen=True)
class NandNetlist:
    primary_inputs: tuple
    gates: tuple  # (gate_id, ref, ref)
    outputs: tuple

    def __post_init__(self):
        known = set(self.primary_inputs)
        for gid, x, y in self.gates:
            if gid in known:
                raise ValueError(f"duplicate signal name {gid!r}")
            for ref in (x, y):
                if ref not in known:
                    raise ValueError(f"gate {gid} refers to {ref!r}, which is not an input or an earlier gate")
            known.add(gid)
        for ref in self.outputs:
            if ref not in known:
                raise ValueError(f"output {ref!r} does not resolve")


class _Builder:
    def __init__(self, inputs):
        self.inputs = tuple(inputs)
        self.gates = []
        self.cache = {}

    def nand(self, x: str, y: str) -> str:
        key = (min(x, y), max(x, y))
        if key not in self.cache:
            gid = f"g{len(self.gates) + 1}"
            self.gates.append((gid, x, y))
            self.cache[key] = gid
        return self.cache[key]

    def lower(self, e: BoolExpr) -> str:
        if isinstance(e, Var):
            return e.name
        if isinstance(e, Not):
            x = self.lower(e.x)
            return self.nand(x, x)
        x, y = self.lower(e.x), self.lower(e.y)
        if isinstance(e, And):
            n = self.nand(x, y)
            return self.nand(n, n)
        if isinstance(e, Or):
            return self.nand(self.nand(x, x), self.nand(y, y))
        n1 = self.nand(x, y)
        return self.nand(self.nand(x, n1), self.nand(y, n1))


def synthesize_nand_netlist(expr: BoolExpr) -> NandNetlist:
    """Lower ``expr`` to NAND gates, sharing structurally identical gates."""
    b = _Builder(variables(expr))
    out = b.lower(expr)
    return NandNetlist(b.inputs, tuple(b.gates), (out,))


def _entropy_nand(x: bool, y: bool) -> bool:
    return gates.evaluate(x, y, "nand")[0]


def evaluate_netlist(netlist: NandNetlist, assignment: dict, mode: str = "entropy") -> list:
    if mode == "pure":
        gate_fn = lambda x, y: not (x and y)
    elif mode == "entropy":
        gate_fn = _entropy_nand
    else:
        raise ValueError(f"unknown mode {mode!r}")
    missing = [n for n in netlist.primary_inputs if n not in assignment]
    if missing:
        raise KeyError(f"no value for input(s) {', '.join(missing)}")
    values = {n: bool(assignment[n]) for n in netlist.primary_inputs}
    for gid, x, y in netlist.gates:  # gates are stored in topological order
        values[gid] = gate_fn(values[x], values[y])
    return [values[r] for r in netlist.outputs]


@dataclass(frozen=True)
class NetlistReport:
    gate_count: int
    depth: int
    budget_splits: int
    budget_physical_nats: float
    budget_joules: float
    temperature_kelvin: float


def netlist_report(netlist: NandNetlist, temperature_kelvin: float = 300.0) -> NetlistReport:
    """Size, depth and worst-case entropy budget (2 splits per gate)."""
    level = {n: 0 for n in netlist.primary_inputs}
    for gid, x, y in netlist.gates:
        level[gid] = 1 + max(level[x], level[y])
    depth = max((level[r] for r in netlist.outputs), default=0)
    splits = 2 * len(netlist.gates)
    return NetlistReport(
        gate_count=len(netlist.gates),
        depth=depth,
        budget_splits=splits,
        budget_physical_nats=splits * LN2,
        budget_joules=splits * landauer_energy(temperature_kelvin),
        temperature_kelvin=temperature_kelvin,
    )


def format_netlist(netlist: NandNetlist) -> str:
    lines = ["inputs: " + " ".join(netlist.primary_inputs)]
    lines += [f"{gid} = NAND({x}, {y})" for gid, x, y in netlist.gates]
    lines.append("outputs: " + " ".join(netlist.outputs))
    return "\n".join(lines) + "\n"


_GATE_LINE = re.compile(r"^\s*(\w+)\s*=\s*NAND\(\s*(\w+)\s*,\s*(\w+)\s*\)\s*$")


def parse_netlist(text: str) -> NandNetlist:
    inputs, outputs, gate_list = None, None, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("inputs:"):
            inputs = tuple(line[len("inputs:"):].split())
        elif line.startswith("outputs:"):
            outputs = tuple(line[len("outputs:"):].split())
        else:
            m = _GATE_LINE.match(line)
            if not m:
                raise ValueError(f"line {lineno}: cannot parse {raw!r}")
            gate_list.append(m.groups())
    if inputs is None or outputs is None:
        raise ValueError("netlist needs an 'inputs:' header and an 'outputs:' footer")
    return NandNetlist(inputs, tuple(gate_list), outputs)


def netlist_to_dot(netlist: NandNetlist, name: str = "netlist") -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    for n in netlist.primary_inputs:
        lines.append(f'  "{n}" [shape=box];')
    for gid, x, y in netlist.gates:
        lines.append(f'  "{gid}" [label="{gid}\\nNAND"];')
        for ref in dict.fromkeys((x, y)):
            lines.append(f'  "{ref}" -> "{gid}";')
    for i, ref in enumerate(netlist.outputs):
        lines.append(f'  "out{i}" [shape=doublecircle];')
        lines.append(f'  "{ref}" -> "out{i}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
