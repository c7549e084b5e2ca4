"""Line-oriented text format for netlists (.qnl), parser and emitter.

Grammar (tokens are whitespace separated, `#` starts a comment):

    design <name>
    supply single|triple
    input <net> bit|quat
    output <net> bit|quat
    inst <name> <BLOCK> <in-nets...> -> <out-nets...>

Directives may appear in any order; the emitter writes the canonical form
(design, supply, inputs, outputs, instances, LF line endings, single-space
separation), so parse(emit(n)) reproduces n exactly.
"""

from __future__ import annotations

import re

from .blocks import CATALOG, SupplyMode
from .netlist import Instance, Netlist

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class QnlError(Exception):
    """Base for netlist-text errors; carries a 1-based source position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}" if line else message)


class QnlSyntaxError(QnlError):
    def __init__(self, line: int, column: int, expected: str):
        self.expected = expected
        super().__init__(f"expected {expected}", line, column)


class UnknownBlockError(QnlError):
    def __init__(self, name: str, line: int, column: int):
        self.block = name
        super().__init__(f"unknown block {name!r}", line, column)


class DuplicateNameError(QnlError):
    def __init__(self, name: str, line: int, column: int):
        self.duplicate = name
        super().__init__(f"name {name!r} already defined", line, column)


def _tokens(line: str):
    # (column, token) pairs; comments stripped
    code = line.split("#", 1)[0]
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", code)]


def parse_netlist(text: str) -> Netlist:
    """Parse .qnl text into a Netlist over the block catalog."""
    design_name = None
    supply = None
    inputs: list[tuple[str, str]] = []
    outputs: list[tuple[str, str]] = []
    instances: list[Instance] = []
    declared: dict[str, int] = {}  # name -> line of first declaration
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        toks = _tokens(raw)
        if not toks:
            continue
        col0, head = toks[0]
        args = toks[1:]

        if head == "design":
            if design_name is not None:
                raise QnlSyntaxError(lineno, col0, "at most one design directive")
            if len(args) != 1 or not IDENT.match(args[0][1]):
                raise QnlSyntaxError(lineno, col0 + len(head) + 1, "design name")
            design_name = args[0][1]
        elif head == "supply":
            if supply is not None:
                raise QnlSyntaxError(lineno, col0, "at most one supply directive")
            if len(args) != 1 or args[0][1] not in ("single", "triple"):
                raise QnlSyntaxError(lineno, col0 + len(head) + 1, "'single' or 'triple'")
            supply = SupplyMode(args[0][1])
        elif head in ("input", "output"):
            if len(args) != 2 or not IDENT.match(args[0][1]):
                raise QnlSyntaxError(lineno, col0 + len(head) + 1, "net name and kind")
            if args[1][1] not in ("bit", "quat"):
                raise QnlSyntaxError(lineno, args[1][0], "'bit' or 'quat'")
            net = args[0][1]
            if head == "input":
                if net in declared:
                    raise DuplicateNameError(net, lineno, args[0][0])
                declared[net] = lineno
                inputs.append((net, args[1][1]))
            else:
                if any(net == n for n, _ in outputs):
                    raise DuplicateNameError(net, lineno, args[0][0])
                outputs.append((net, args[1][1]))
        elif head == "inst":
            if len(args) < 2:
                raise QnlSyntaxError(lineno, col0, "instance name and block")
            (ncol, name), (bcol, blockname) = args[0], args[1]
            if not IDENT.match(name):
                raise QnlSyntaxError(lineno, ncol, "instance name")
            if name in declared:
                raise DuplicateNameError(name, lineno, ncol)
            declared[name] = lineno
            if blockname not in CATALOG:
                raise UnknownBlockError(blockname, lineno, bcol)
            block = CATALOG[blockname]
            rest = args[2:]
            arrows = [i for i, (_, t) in enumerate(rest) if t == "->"]
            if len(arrows) != 1:
                where = rest[0][0] if rest else bcol + len(blockname) + 1
                raise QnlSyntaxError(lineno, where, "input nets, '->', output nets")
            ins = rest[: arrows[0]]
            outs = rest[arrows[0] + 1:]
            for c, t in ins + outs:
                if not IDENT.match(t):
                    raise QnlSyntaxError(lineno, c, "net name")
            if len(ins) != len(block.in_ports):
                raise QnlSyntaxError(
                    lineno, rest[0][0] if rest else bcol,
                    f"{len(block.in_ports)} input nets for {blockname}, got {len(ins)}")
            if len(outs) != len(block.out_ports):
                raise QnlSyntaxError(
                    lineno, outs[0][0] if outs else rest[arrows[0]][0],
                    f"{len(block.out_ports)} output nets for {blockname}, got {len(outs)}")
            instances.append(Instance(
                name, block,
                tuple(t for _, t in ins),
                tuple(t for _, t in outs),
            ))
        else:
            raise QnlSyntaxError(
                lineno, col0, "directive: design, supply, input, output or inst")

    if design_name is None:
        raise QnlSyntaxError(last_line + 1, 1, "design directive")
    if supply is None:
        raise QnlSyntaxError(last_line + 1, 1, "supply directive")
    return Netlist(
        name=design_name,
        supply=supply,
        inputs=tuple(inputs),
        outputs=tuple(outputs),
        instances=tuple(instances),
    )


def emit_netlist(netlist: Netlist) -> str:
    """Canonical .qnl text: LF endings, single-space token separation."""
    lines = [f"design {netlist.name}", f"supply {netlist.supply.value}"]
    for net, kind in netlist.inputs:
        lines.append(f"input {net} {kind}")
    for net, kind in netlist.outputs:
        lines.append(f"output {net} {kind}")
    for inst in netlist.instances:
        parts = ["inst", inst.name, inst.block.name, *inst.inputs, "->", *inst.outputs]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
