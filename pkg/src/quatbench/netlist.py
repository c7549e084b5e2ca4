"""Circuit graphs: construction, checking, evaluation, verification, cost.

A netlist is a flat acyclic graph of block instances over named nets.  Nets
are implicit: they exist wherever an instance port or a declared input or
output names them, every non-input net must have exactly one driver, and
all values are fully defined (combinational circuits, no unknown state).

Evaluation walks the instances in a deterministic topological order; block
behaviors accept numpy arrays, so an exhaustive sweep over the whole input
space of a design is a single evaluation with vector-valued nets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .blocks import KIND_RANGE, BlockSpec, SupplyMode


class MissingInputError(Exception):
    pass


@dataclass(frozen=True)
class Instance:
    """One placed block: ordered input nets and ordered output nets."""

    name: str
    block: BlockSpec
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]


@dataclass(frozen=True)
class Net:
    name: str
    kind: str
    driver: str | None  # instance name, or None for a declared input


@dataclass(frozen=True)
class Netlist:
    name: str
    supply: SupplyMode
    inputs: tuple[tuple[str, str], ...]
    outputs: tuple[tuple[str, str], ...]
    instances: tuple[Instance, ...]

    def input_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.inputs)

    def output_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.outputs)


@dataclass(frozen=True)
class Diagnostic:
    code: str  # CYCLE, DANGLING_NET, KIND_MISMATCH, SUPPLY_MODE_VIOLATION, ...
    element: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.element}: {self.message}"


def nets(netlist: Netlist) -> dict[str, Net]:
    """Derived net table: kind and driver per net name."""
    kinds: dict[str, str] = {}
    drivers: dict[str, str | None] = {}
    for name, kind in netlist.inputs:
        kinds[name] = kind
        drivers[name] = None
    for inst in netlist.instances:
        for net, (_, kind) in zip(inst.outputs, inst.block.out_ports):
            kinds.setdefault(net, kind)
            drivers.setdefault(net, inst.name)
    for inst in netlist.instances:
        for net, (_, kind) in zip(inst.inputs, inst.block.in_ports):
            kinds.setdefault(net, kind)
            drivers.setdefault(net, drivers.get(net))
    for name, kind in netlist.outputs:
        kinds.setdefault(name, kind)
        drivers.setdefault(name, drivers.get(name))
    return {n: Net(n, kinds[n], drivers[n]) for n in kinds}


def check_well_formed(netlist: Netlist) -> list[Diagnostic]:
    """All structural invariants; an empty list means the netlist is sound."""
    diags: list[Diagnostic] = []
    declared_inputs = {n for n, _ in netlist.inputs}

    seen_inst: set[str] = set()
    for inst in netlist.instances:
        if inst.name in seen_inst:
            diags.append(Diagnostic("DUPLICATE_NAME", inst.name, "instance name reused"))
        seen_inst.add(inst.name)
        if len(inst.inputs) != len(inst.block.in_ports) or \
                len(inst.outputs) != len(inst.block.out_ports):
            diags.append(Diagnostic(
                "ARITY_MISMATCH", inst.name,
                f"block {inst.block.name} wants {len(inst.block.in_ports)} inputs / "
                f"{len(inst.block.out_ports)} outputs, got "
                f"{len(inst.inputs)} / {len(inst.outputs)}"))
        if not inst.block.supports(netlist.supply):
            diags.append(Diagnostic(
                "SUPPLY_MODE_VIOLATION", inst.name,
                f"block {inst.block.name} has no {netlist.supply.value}-supply implementation"))

    # drivers: exactly one per non-input net
    driver_of: dict[str, str] = {}
    for inst in netlist.instances:
        for net in inst.outputs:
            if net in declared_inputs:
                diags.append(Diagnostic(
                    "MULTIPLE_DRIVERS", net, f"declared input driven by instance {inst.name}"))
            elif net in driver_of:
                diags.append(Diagnostic(
                    "MULTIPLE_DRIVERS", net,
                    f"driven by both {driver_of[net]} and {inst.name}"))
            else:
                driver_of[net] = inst.name

    # kind consistency across every port and declaration touching a net
    kind_seen: dict[str, tuple[str, str]] = {}

    def note_kind(net: str, kind: str, where: str):
        if net in kind_seen and kind_seen[net][0] != kind:
            diags.append(Diagnostic(
                "KIND_MISMATCH", net,
                f"{where} uses {kind}, {kind_seen[net][1]} uses {kind_seen[net][0]}"))
        else:
            kind_seen.setdefault(net, (kind, where))

    for name, kind in netlist.inputs:
        note_kind(name, kind, "input declaration")
    for inst in netlist.instances:
        for net, (port, kind) in zip(inst.inputs, inst.block.in_ports):
            note_kind(net, kind, f"{inst.name}.{port}")
        for net, (port, kind) in zip(inst.outputs, inst.block.out_ports):
            note_kind(net, kind, f"{inst.name}.{port}")
    for name, kind in netlist.outputs:
        note_kind(name, kind, "output declaration")

    # drivenness: every consumed or declared-output net needs a source
    for inst in netlist.instances:
        for net in inst.inputs:
            if net not in declared_inputs and net not in driver_of:
                diags.append(Diagnostic(
                    "DANGLING_NET", net, f"consumed by {inst.name} but never driven"))
    for name, _ in netlist.outputs:
        if name not in declared_inputs and name not in driver_of:
            diags.append(Diagnostic("DANGLING_NET", name, "declared output is never driven"))

    # acyclicity (instances whose inputs never become available)
    try:
        topo_order(netlist)
    except CycleError as exc:
        diags.append(Diagnostic("CYCLE", ", ".join(exc.instances),
                                "instances form a combinational cycle"))
    return diags


class CycleError(Exception):
    def __init__(self, instances):
        self.instances = list(instances)
        super().__init__(f"combinational cycle through {', '.join(self.instances)}")


def topo_order(netlist: Netlist) -> list[Instance]:
    """Topological instance order, stable by declaration order."""
    available = {n for n, _ in netlist.inputs}
    remaining = list(netlist.instances)
    order: list[Instance] = []
    while remaining:
        for idx, inst in enumerate(remaining):
            if all(net in available for net in inst.inputs):
                order.append(inst)
                available.update(inst.outputs)
                del remaining[idx]
                break
        else:
            raise CycleError([inst.name for inst in remaining])
    return order


def evaluate(netlist: Netlist, assignment: Mapping[str, object]) -> dict[str, object]:
    """Deterministic evaluation of all declared outputs.

    Input values may be ints (returns ints) or equal-length numpy arrays
    (returns arrays), one entry per declared input.
    """
    values: dict[str, object] = {}
    scalar = True
    for name, kind in netlist.inputs:
        if name not in assignment:
            raise MissingInputError(f"no value for input {name}")
        value = assignment[name]
        if isinstance(value, np.ndarray):
            scalar = False
        else:
            value = int(value)
            if not 0 <= value < KIND_RANGE[kind]:
                raise ValueError(f"input {name}: {value} out of range for {kind}")
        values[name] = np.asarray(value, dtype=np.int64)
    unknown = set(assignment) - {n for n, _ in netlist.inputs}
    if unknown:
        raise MissingInputError(f"values given for unknown inputs: {sorted(unknown)}")

    for inst in topo_order(netlist):
        outs = inst.block.behavior(*(values[net] for net in inst.inputs))
        for net, out in zip(inst.outputs, outs):
            values[net] = out

    if scalar:
        return {name: int(values[name]) for name, _ in netlist.outputs}
    return {name: values[name] for name, _ in netlist.outputs}


@dataclass(frozen=True)
class Mismatch:
    inputs: dict[str, int]
    expected: dict[str, int]
    actual: dict[str, int]


@dataclass(frozen=True)
class VerifyReport:
    design: str
    total: int
    passed: int
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def input_space(netlist: Netlist) -> dict[str, np.ndarray]:
    """Full-factorial assignment covering every input combination."""
    shape = tuple(KIND_RANGE[kind] for _, kind in netlist.inputs)
    grids = np.indices(shape, dtype=np.int64).reshape(len(shape), -1)
    return {name: grids[i] for i, (name, _) in enumerate(netlist.inputs)}


def exhaustive_verify(
    netlist: Netlist,
    oracle: Callable[[Mapping[str, np.ndarray]], Mapping[str, np.ndarray]],
) -> VerifyReport:
    """Sweep the complete input domain and compare against an oracle.

    The oracle receives the same vectored assignment and must return the
    expected value array for every declared output.  Mismatching vectors
    are returned as data, not raised.
    """
    assignment = input_space(netlist)
    actual = evaluate(netlist, assignment)
    expected = oracle(assignment)
    total = next(iter(assignment.values())).size if assignment else 1

    bad = np.zeros(total, dtype=bool)
    for name, _ in netlist.outputs:
        bad |= np.asarray(actual[name]) != np.asarray(expected[name])

    mismatches = []
    for idx in np.flatnonzero(bad):
        mismatches.append(Mismatch(
            inputs={n: int(v[idx]) for n, v in assignment.items()},
            expected={n: int(np.asarray(expected[n])[idx]) for n, _ in netlist.outputs},
            actual={n: int(np.asarray(actual[n])[idx]) for n, _ in netlist.outputs},
        ))
    return VerifyReport(netlist.name, total, total - len(mismatches), tuple(mismatches))


@dataclass(frozen=True)
class CostBreakdown:
    """Additive transistor roll-up of a netlist in its supply mode."""

    design: str
    supply: SupplyMode
    instances: tuple[tuple[str, str, int], ...]  # (instance, block, cost)
    by_block: tuple[tuple[str, int, int], ...]   # (block, count, subtotal)
    total: int


def total_cost(netlist: Netlist) -> CostBreakdown:
    rows = []
    subtotal: dict[str, list[int]] = {}
    for inst in netlist.instances:
        cost = inst.block.cost[netlist.supply]
        rows.append((inst.name, inst.block.name, cost))
        agg = subtotal.setdefault(inst.block.name, [0, 0])
        agg[0] += 1
        agg[1] += cost
    by_block = tuple((name, count, tot) for name, (count, tot) in sorted(subtotal.items()))
    return CostBreakdown(
        design=netlist.name,
        supply=netlist.supply,
        instances=tuple(rows),
        by_block=by_block,
        total=sum(cost for _, _, cost in rows),
    )
