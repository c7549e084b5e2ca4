"""Catalog of behavioral circuit blocks with transistor costs.

Each block is a total function from input signals to output signals plus a
transistor count per supply mode.  Behaviors are written with numpy
operations so the netlist evaluator can run them either on scalars or on
whole input-space sweeps at once.  Costs are immutable published constants;
the provenance string says which published figure each count reproduces.

The module also carries the switch-level path models of the two
single-supply encoders: their output level is obtained by evaluating which
resistor-divider path conducts, and exactly one path must conduct for every
valid input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping

import numpy as np

from .values import BitPair


class SupplyMode(str, Enum):
    """Whether intermediate levels come from one rail or three."""

    SINGLE = "single"
    TRIPLE = "triple"


BIT = "bit"
QUAT = "quat"

KIND_RANGE = {BIT: 2, QUAT: 4}


class ArityMismatchError(Exception):
    pass


class KindMismatchError(Exception):
    pass


class PathConflictError(Exception):
    """Not exactly one conducting path in a switch-level encoder model."""


def _i(x):
    return np.asarray(x, dtype=np.int64)


@dataclass(frozen=True)
class BlockSpec:
    """A named behavioral block: port signature, behavior, transistor costs."""

    name: str
    in_ports: tuple[tuple[str, str], ...]
    out_ports: tuple[tuple[str, str], ...]
    behavior: Callable[..., tuple]
    cost: Mapping[SupplyMode, int]
    provenance: str

    def supports(self, mode: SupplyMode) -> bool:
        return mode in self.cost


def apply(block: BlockSpec, inputs: tuple) -> tuple:
    """Evaluate a block on scalar inputs with arity and kind checking."""
    if len(inputs) != len(block.in_ports):
        raise ArityMismatchError(
            f"{block.name}: expected {len(block.in_ports)} inputs, got {len(inputs)}"
        )
    for value, (port, kind) in zip(inputs, block.in_ports):
        if not isinstance(value, (int, np.integer)) or not 0 <= int(value) < KIND_RANGE[kind]:
            raise KindMismatchError(
                f"{block.name}.{port}: {value!r} is not a valid {kind} value"
            )
    outs = block.behavior(*(_i(v) for v in inputs))
    return tuple(int(v) for v in outs)


# ---------------------------------------------------------------------------
# Single-supply encoder switch models
# ---------------------------------------------------------------------------

# Conduction paths per output level and device polarity per transistor.
# p-type transistors conduct on a low control input, n-type on a high one.
ENCODER_PATHS = {
    "v1": {0: ("T9",), 1: ("T0", "T3"), 2: ("T4", "T7"), 3: ("T8",)},
    "v2": {0: ("T9",), 1: ("T0", "T7"), 2: ("T5", "T6"), 3: ("T8",)},
}

ENCODER_POLARITY = {
    "v1": {"T0": "p", "T3": "n", "T4": "p", "T7": "n", "T8": "p", "T9": "n"},
    "v2": {"T0": "p", "T5": "n", "T6": "p", "T7": "n", "T8": "p", "T9": "n"},
}


@dataclass(frozen=True)
class ControlVector:
    """Control inputs of one single-supply encoder variant."""

    variant: str
    signals: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict[str, int]:
        return dict(self.signals)


def control_signals_v1(p: BitPair) -> ControlVector:
    """Controls for the first single-supply encoder (T0/T3/T4/T7/T8/T9).

    Derived from the published gate equations; the published table row for
    (x1, x0) = (1, 0) contradicts them and is recorded in the errata.
    """
    x1, x0 = p.x1, p.x0
    it0 = 1 - ((1 - x1) & x0)
    it4 = 1 - (x1 & (1 - x0))
    return ControlVector(
        "v1",
        (
            ("IT0", it0),
            ("IT3", 1 - it0),
            ("IT4", it4),
            ("IT7", 1 - it4),
            ("IT8", 1 - (x1 & x0)),
            ("IT9", (1 - x1) & (1 - x0)),
        ),
    )


def control_signals_v2(p: BitPair) -> ControlVector:
    """Controls for the second single-supply encoder (T0/T5/T6/T7/T8/T9)."""
    x1, x0 = p.x1, p.x0
    it0 = 1 - ((1 - x1) & x0)
    it5 = x1 & (1 - x0)
    return ControlVector(
        "v2",
        (
            ("IT0", it0),
            ("IT5", it5),
            ("IT6", 1 - it5),
            ("IT7", 1 - it0),
            ("IT8", 1 - (x1 & x0)),
            ("IT9", (1 - x1) & (1 - x0)),
        ),
    )


def conducting_levels(controls: ControlVector) -> list[int]:
    """Output levels whose full transistor path conducts."""
    signals = controls.as_dict()
    polarity = ENCODER_POLARITY[controls.variant]
    levels = []
    for level, path in ENCODER_PATHS[controls.variant].items():
        # the control named ITk drives the input of transistor Tk
        on = all(
            signals[f"I{t}"] == (1 if polarity[t] == "n" else 0)
            for t in path
        )
        if on:
            levels.append(level)
    return levels


def switch_encode_single(p: BitPair, variant: str) -> int:
    """Output level of a single-supply encoder via its path model.

    Raises PathConflictError unless exactly one path conducts; agreement
    with bits_to_q over all inputs is a catalog invariant.
    """
    controls = {"v1": control_signals_v1, "v2": control_signals_v2}[variant](p)
    levels = conducting_levels(controls)
    if len(levels) != 1:
        raise PathConflictError(
            f"encoder {variant} at x1={p.x1} x0={p.x0}: paths for levels {levels} conduct"
        )
    return levels[0]


def _switch_encode_array(variant: str):
    # table-driven vector form of the path model; construction fails loudly
    # if the scalar model ever loses the one-path property
    table = np.zeros((2, 2), dtype=np.int64)
    for x1 in (0, 1):
        for x0 in (0, 1):
            table[x1, x0] = switch_encode_single(BitPair(x1, x0), variant)

    def behavior(x1, x0):
        return (_i(table[x1, x0]),)

    return behavior


# ---------------------------------------------------------------------------
# Block behaviors (vector-safe)
# ---------------------------------------------------------------------------


def _onehot_value(i1, i2, i3):
    # digit from one-hot indicators plus the <=2 threshold (i3 low means 3);
    # reduced mod 4 so physically impossible indicator combinations still
    # map into the value domain
    return _i((i1 + 2 * i2 + 3 * (1 - i3)) % 4)


def _complement_value(ge1, ge2, eq3):
    # digit from complemented threshold outputs (>=1, >=2, ==3)
    return _i(ge1 + ge2 + eq3)


def _fa(a, b, cin):
    total = a + b + cin
    return _i(total % 2), _i(total // 2)


def _dec_bits(q):
    return _i(q // 2), _i(q % 2)


def _qdec18(q):
    i1 = _i(q == 1)
    i2 = _i(q == 2)
    return (
        _i(q == 0),
        i1,
        _i(1 - i1),
        _i(q <= 1),
        _i(1 - i2),
        i2,
        _i(q <= 2),
    )


def _qdec8(q):
    return _i(q == 0), _i(q == 1), _i(q == 2), _i(q <= 2)


def _qsum16(a0, a1, a1b, ai, a2b, a2, a3, b0, b1, b1b, bi, b2b, b2, b3):
    # published three-plane decomposition; the weight-k plane is the
    # sum-of-products over operand pairs adding to k mod 4
    a3h = 1 - a3
    b3h = 1 - b3
    f3 = (a0 & b3h) | (a1 & b2) | (a2 & b1) | (a3h & b0)
    f2 = (a0 & b2) | (a1 & b1) | (a2 & b0) | (a3h & b3h)
    f1 = (a0 & b1) | (a1 & b0) | (a2 & b3h) | (a3h & b2)
    return (_i((3 * f3 + 2 * f2 + f1) % 4),)


def _qcar35(a0, a1, a1b, ai, a2b, a2, a3, b0, b1, b1b, bi, b2b, b2, b3):
    a3h = 1 - a3
    b3h = 1 - b3
    carry = (a1 & b3h) | (a2 & b2) | (a2 & b3h) | (a3h & b1) | (a3h & b2) | (a3h & b3h)
    return (_i(carry),)


def _qsum28(i0, i1, i2, i3, c0, c1):
    h = _onehot_value(i1, i2, i3)
    return (_i((c0 * h + c1 * ((h + 1) % 4)) % 4),)


def _qcgen19(h0, h1, h2, h3, a0, ai, a3, cin):
    not_cout = (h0 & a0) | (h1 & ai) | (h2 & a3) | ((1 - cin) & (1 - h3))
    return (_i(1 - not_cout),)


def _qdec16(q):
    return _i(q == 0), _i(q <= 1), _i(q <= 2)


def _qtg_sel(k):
    def behavior(an, ai, ap, bn, bi, bp, alt):
        sel = (an, ai & (1 - an), ap & (1 - ai), 1 - ap)[k]
        b = _complement_value(1 - bn, 1 - bi, 1 - bp)
        return (_i(np.where(sel == 1, (b + k) % 4, alt)),)

    return behavior


def _qtg_shift(k):
    def behavior(q):
        return (_i((q + k) % 4),)

    return behavior


def _qtg_c16(c, s):
    return (_i(c | (s == 3)),)


def _carry_ge4(a, b):
    return (_i(a + b >= 4),)


def _tmux_quat(sel, d0, d1):
    return (_i(np.where(sel == 1, d1, d0)),)


def _tmux_bit(sel, d0, d1):
    return (_i(np.where(sel == 1, d1, d0)),)


def _ibank6(q):
    return _i(q >= 1), _i(q >= 2), _i(q == 3)


def _shift_from_complements(k):
    def behavior(ge1, ge2, eq3):
        return (_i((_complement_value(ge1, ge2, eq3) + k) % 4),)

    return behavior


def _qmux4(sel, d0, d1, d2, d3):
    out = (
        (sel == 0) * d0
        + (sel == 1) * d1
        + (sel == 2) * d2
        + (sel == 3) * d3
    )
    return (_i(out),)


def _rsum(s, cin):
    return (_i((s + cin) % 4),)


def _rcarry20(c0, s, cin):
    return (_i(c0 | (cin & (s == 3))),)


def _cla_c1(g0, p0, c0):
    return (_i(g0 | (p0 & c0)),)


def _cla_c2(g1, p1, g0, p0, c0):
    return (_i(g1 | (g0 & p1) | (p0 & p1 & c0)),)


def _cla_c3(g2, p2, g1, p1, g0, p0, c0):
    return (_i(g2 | (g1 & p2) | (g0 & p1 & p2) | (p0 & p1 & p2 & c0)),)


def _cla_c4(g3, p3, g2, p2, g1, p1, g0, p0, c0):
    out = g3 | (g2 & p3) | (g1 & p2 & p3) | (g0 & p1 & p2 & p3) | (p0 & p1 & p2 & p3 & c0)
    return (_i(out),)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def _cost(single=None, triple=None):
    cost = {}
    if single is not None:
        cost[SupplyMode.SINGLE] = single
    if triple is not None:
        cost[SupplyMode.TRIPLE] = triple
    return cost


def _both(n):
    return _cost(single=n, triple=n)


def _bits(*names):
    return tuple((n, BIT) for n in names)


def _quats(*names):
    return tuple((n, QUAT) for n in names)


_DECODED = ("i0", "i1", "i1b", "ii", "i2b", "i2", "i3")


def _build_catalog() -> dict[str, BlockSpec]:
    specs = [
        # threshold inverters and binary gates
        BlockSpec("TINV_N", _quats("q"), _bits("y"), lambda q: (_i(q == 0),),
                  _both(2), "threshold inverter, high iff input is 0 (2 T)"),
        BlockSpec("TINV_I", _quats("q"), _bits("y"), lambda q: (_i(q <= 1),),
                  _both(2), "threshold inverter, high iff input <= 1 (2 T)"),
        BlockSpec("TINV_P", _quats("q"), _bits("y"), lambda q: (_i(q <= 2),),
                  _both(2), "threshold inverter, high iff input <= 2 (2 T)"),
        BlockSpec("INV", _bits("a"), _bits("y"), lambda a: (_i(1 - a),),
                  _both(2), "binary inverter (2 T)"),
        BlockSpec("NAND2", _bits("a", "b"), _bits("y"), lambda a, b: (_i(1 - (a & b)),),
                  _both(4), "two-input NAND (4 T)"),
        BlockSpec("NOR2", _bits("a", "b"), _bits("y"), lambda a, b: (_i(1 - (a | b)),),
                  _both(4), "two-input NOR (4 T)"),
        BlockSpec("NAND3", _bits("a", "b", "c"), _bits("y"),
                  lambda a, b, c: (_i(1 - (a & b & c)),),
                  _both(6), "three-input NAND (6 T)"),
        BlockSpec("XOR16", _bits("a", "b"), _bits("y"), lambda a, b: (_i(a ^ b),),
                  _both(16), "exclusive-or from four NAND gates (16 T)"),
        BlockSpec("XOR9", _bits("a", "b"), _bits("y"), lambda a, b: (_i(a ^ b),),
                  _both(9), "conventional full-swing exclusive-or (9 T)"),
        BlockSpec("XOR3", _bits("a", "b"), _bits("y"), lambda a, b: (_i(a ^ b),),
                  _both(3), "pass-transistor exclusive-or (3 T)"),
        # binary full adders
        BlockSpec("FA36", _bits("a", "b", "cin"), _bits("s", "cout"), _fa,
                  _both(36), "full adder from nine NAND gates (36 T)"),
        BlockSpec("FA18", _bits("a", "b", "cin"), _bits("s", "cout"), _fa,
                  _both(18), "full adder from XOR and NAND gates (18 T)"),
        BlockSpec("FA8", _bits("a", "b", "cin"), _bits("s", "cout"), _fa,
                  _both(8), "pass-transistor full adder, non-restoring (8 T)"),
        # quaternary-to-binary decoders (cost varies with the XOR used)
        BlockSpec("DEC28", _quats("q"), _bits("x1", "x0"), _dec_bits,
                  _both(28), "2-bit decoder, 16 T XOR variant (28 T)"),
        BlockSpec("DEC21", _quats("q"), _bits("x1", "x0"), _dec_bits,
                  _both(21), "2-bit decoder, 9 T XOR variant (21 T)"),
        BlockSpec("DEC15", _quats("q"), _bits("x1", "x0"), _dec_bits,
                  _both(15), "2-bit decoder, 3 T XOR variant (15 T)"),
        # binary-to-quaternary encoders
        BlockSpec("ENC16", _bits("x1", "x0"), _quats("q"),
                  lambda x1, x0: (_i(2 * x1 + x0),),
                  _cost(triple=16), "transmission-gate encoder on three rails (16 T)"),
        BlockSpec("ENC34A", _bits("x1", "x0"), _quats("q"), _switch_encode_array("v1"),
                  _cost(single=34),
                  "single-rail encoder, first divider topology (10 T core + 24 T controls)"),
        BlockSpec("ENC34B", _bits("x1", "x0"), _quats("q"), _switch_encode_array("v2"),
                  _cost(single=34),
                  "single-rail encoder, bypass divider topology (10 T core + 24 T controls)"),
        # direct-implementation blocks (single-supply design family)
        BlockSpec("QDEC18", _quats("q"), _bits(*_DECODED), _qdec18,
                  _cost(single=18), "full seven-output input decoder (18 T)"),
        BlockSpec("QDEC8", _quats("q"), _bits("i0", "i1", "i2", "i3"), _qdec8,
                  _cost(single=8), "reduced decoder for the carry-free sum (8 T published)"),
        BlockSpec("CDEC4", _bits("cin"), _bits("c0", "c1"),
                  lambda cin: (_i(1 - cin), _i(cin)),
                  _cost(single=4), "carry-input inverter pair (4 T)"),
        BlockSpec("QSUM16", tuple((f"a_{n}", BIT) for n in _DECODED)
                  + tuple((f"b_{n}", BIT) for n in _DECODED), _quats("h"), _qsum16,
                  _cost(single=16), "carry-free digit sum from decoded operands (16 T)"),
        BlockSpec("QCAR35", tuple((f"a_{n}", BIT) for n in _DECODED)
                  + tuple((f"b_{n}", BIT) for n in _DECODED), _bits("c"), _qcar35,
                  _cost(single=35), "half-adder carry from decoded operands (87 T total minus 52 T sum part)"),
        BlockSpec("QSUM28", _bits("i0", "i1", "i2", "i3", "c0", "c1"), _quats("s"), _qsum28,
                  _cost(single=28), "carry-select sum stage on the decoded carry-free sum (28 T)"),
        BlockSpec("QCGEN19", _bits("h0", "h1", "h2", "h3", "a0", "ai", "a3", "cin"),
                  _bits("cout"), _qcgen19,
                  _cost(single=19), "binary carry generator over carry-free sum indicators (19 T)"),
        # transmission-gate mux design family (three rails)
        BlockSpec("QDEC16", _quats("q"), _bits("nq", "iq", "pq"), _qdec16,
                  _cost(triple=16), "threshold decoder feeding transmission gates (16 T)"),
        BlockSpec("QTG_A0", _bits("an", "ai", "ap") + _bits("bn", "bi", "bp")
                  + _quats("alt"), _quats("y"), _qtg_sel(0),
                  _cost(triple=16), "transmission-gate stage, selects operand b when a = 0 (16 T)"),
        BlockSpec("QTG_A1", _bits("an", "ai", "ap") + _bits("bn", "bi", "bp")
                  + _quats("alt"), _quats("y"), _qtg_sel(1),
                  _cost(triple=16), "transmission-gate stage, selects b+1 when a = 1 (16 T)"),
        BlockSpec("QTG_A2", _bits("an", "ai", "ap") + _bits("bn", "bi", "bp")
                  + _quats("alt"), _quats("y"), _qtg_sel(2),
                  _cost(triple=16), "transmission-gate stage, selects b+2 when a = 2 (16 T)"),
        BlockSpec("QTG_A3", _bits("an", "ai", "ap") + _bits("bn", "bi", "bp")
                  + _quats("alt"), _quats("y"), _qtg_sel(3),
                  _cost(triple=16), "transmission-gate stage, selects b-1 when a = 3 (16 T)"),
        BlockSpec("QTG_S1", _quats("q"), _quats("y"), _qtg_shift(1),
                  _cost(triple=16), "transmission-gate successor stage (16 T)"),
        BlockSpec("QTG_S2", _quats("q"), _quats("y"), _qtg_shift(2),
                  _cost(triple=16), "transmission-gate second-successor stage (16 T)"),
        BlockSpec("QTG_S3", _quats("q"), _quats("y"), _qtg_shift(3),
                  _cost(triple=16), "transmission-gate predecessor stage (16 T)"),
        BlockSpec("QTG_C16", _bits("c") + _quats("s"), _bits("y"), _qtg_c16,
                  _cost(triple=16), "carry extension transmission gate (16 T)"),
        BlockSpec("QHC32", _quats("a", "b"), _bits("c"), _carry_ge4,
                  _cost(triple=32),
                  "half-adder carry network (32 T as totalled; its printed 12+6+16 breakdown sums to 34)"),
        BlockSpec("TMUX_Q6", _bits("sel") + _quats("d0", "d1"), _quats("y"), _tmux_quat,
                  _cost(triple=6), "two transmission gates plus inverter selecting a digit (6 T)"),
        BlockSpec("TMUX_B4", _bits("sel", "d0", "d1"), _bits("y"), _tmux_bit,
                  _cost(triple=4), "two transmission gates selecting a bit (4 T)"),
        # successor-based mux design family (both supply modes)
        BlockSpec("IBANK6", _quats("q"), _bits("ge1", "ge2", "eq3"), _ibank6,
                  _both(6), "three inverters producing complemented threshold outputs (6 T)"),
        BlockSpec("SUCC1", _bits("ge1", "ge2", "eq3"), _quats("y"), _shift_from_complements(1),
                  _cost(single=13, triple=6), "successor circuit (6 T on three rails, 13 T on one)"),
        BlockSpec("SUCC2", _bits("ge1", "ge2", "eq3"), _quats("y"), _shift_from_complements(2),
                  _cost(single=12, triple=6), "second-level successor circuit (6 T / 12 T)"),
        BlockSpec("PRED", _bits("ge1", "ge2", "eq3"), _quats("y"), _shift_from_complements(3),
                  _cost(single=17, triple=6), "predecessor circuit (6 T / 17 T)"),
        BlockSpec("QMUX4", _quats("sel", "d0", "d1", "d2", "d3"), _quats("y"), _qmux4,
                  _both(12), "4:1 quaternary multiplexer (12 T)"),
        BlockSpec("QMUX2", _bits("sel") + _quats("d0", "d1"), _quats("y"), _tmux_quat,
                  _both(6), "2:1 quaternary multiplexer (6 T)"),
        BlockSpec("RHCARRY14", _quats("a", "b"), _bits("c"), _carry_ge4,
                  _both(14), "half-adder carry block of the successor-mux design (14 T)"),
        BlockSpec("RSUM", _quats("s") + _bits("cin"), _quats("y"), _rsum,
                  _cost(single=36, triple=12),
                  "full-adder sum stage applying the carry to the half sum (12 T / 36 T)"),
        BlockSpec("RCARRY20", _bits("c0") + _quats("s") + _bits("cin"), _bits("y"), _rcarry20,
                  _both(20), "full-adder carry extension (20 T)"),
        # lookahead and skip carry networks
        BlockSpec("G6", _bits("a", "b"), _bits("g"), lambda a, b: (_i(a & b),),
                  _both(6), "bit generate, NAND plus inverter (6 T)"),
        BlockSpec("P6", _bits("a", "b"), _bits("p"), lambda a, b: (_i(a | b),),
                  _both(6), "bit propagate, NOR plus inverter, inclusive form (6 T)"),
        BlockSpec("PX6", _bits("a", "b"), _bits("p"), lambda a, b: (_i(a ^ b),),
                  _both(6),
                  "bit propagate, exact form required by skip bypassing (6 T, same published count)"),
        BlockSpec("QG12", _quats("a", "b"), _bits("g"), _carry_ge4,
                  _both(12), "digit generate, high iff a+b >= 4 (12 T)"),
        BlockSpec("QP16", _quats("a", "b"), _bits("p"),
                  lambda a, b: (_i(a + b == 3),),
                  _both(16), "digit propagate, high iff a+b = 3 (16 T)"),
        BlockSpec("CLA_C1", _bits("g0", "p0", "c0"), _bits("c"), _cla_c1,
                  _both(8), "first lookahead carry, complex gate plus inverter (8 T)"),
        BlockSpec("CLA_C2", _bits("g1", "p1", "g0", "p0", "c0"), _bits("c"), _cla_c2,
                  _both(12), "second lookahead carry (12 T)"),
        BlockSpec("CLA_C3", _bits("g2", "p2", "g1", "p1", "g0", "p0", "c0"), _bits("c"),
                  _cla_c3, _both(16),
                  "third lookahead carry (16 T; the quaternary table misprints 26)"),
        BlockSpec("CLA_C4", _bits("g3", "p3", "g2", "p2", "g1", "p1", "g0", "p0", "c0"),
                  _bits("c"), _cla_c4, _both(20), "block lookahead carry (20 T)"),
        BlockSpec("AND4", _bits("p0", "p1", "p2", "p3"), _bits("y"),
                  lambda p0, p1, p2, p3: (_i(p0 & p1 & p2 & p3),),
                  _both(10), "four-input AND, NAND plus inverter (10 T)"),
        BlockSpec("SKIPMUX14", _bits("en", "skip", "ripple"), _bits("y"),
                  lambda en, skip, ripple: (_i(np.where(en == 1, skip, ripple)),),
                  _both(14), "carry-skip bypass multiplexer (14 T)"),
    ]
    by_name = {}
    for spec in specs:
        if spec.name in by_name:
            raise ValueError(f"duplicate block name {spec.name}")
        by_name[spec.name] = spec
    return by_name


CATALOG: dict[str, BlockSpec] = _build_catalog()


def catalog() -> list[BlockSpec]:
    """All blocks, in a stable order."""
    return list(CATALOG.values())


def lookup(name: str) -> BlockSpec:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown block {name!r}") from None


def block_cost(name: str, mode: SupplyMode) -> int:
    spec = lookup(name)
    if mode not in spec.cost:
        raise KindMismatchError(f"{name} has no {mode.value}-supply implementation")
    return spec.cost[mode]
