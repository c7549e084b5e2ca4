"""Ground-truth value domains and pure quaternary helper functions.

Quaternary signals take the four ordered levels 0 < 1 < 2 < 3.  Binary
signals are represented logically as 0/1; the physical convention maps
logical 1 to level 3 (all published truth tables print binary highs as 3).
Everything in this module is a pure function on small immutable values and
serves as the reference ("oracle") side of every check in the workbench.
"""

from __future__ import annotations

from dataclasses import dataclass

QUAT_VALUES = (0, 1, 2, 3)
BIT_VALUES = (0, 1)

# physical voltage level of a logical bit
BIT_LEVELS = {0: 0, 1: 3}


def check_quat(q: int) -> int:
    if q not in QUAT_VALUES:
        raise ValueError(f"quaternary value out of range: {q!r}")
    return q


def check_bit(b: int) -> int:
    if b not in BIT_VALUES:
        raise ValueError(f"bit value out of range: {b!r}")
    return b


def bit_level(b: int) -> int:
    """Physical level of a logical bit (0 -> 0, 1 -> 3)."""
    return BIT_LEVELS[check_bit(b)]


@dataclass(frozen=True)
class BitPair:
    """Two-bit encoding of a quaternary digit: x1 has weight 2, x0 weight 1."""

    x1: int
    x0: int

    def __post_init__(self):
        check_bit(self.x1)
        check_bit(self.x0)


@dataclass(frozen=True)
class DecodedQuat:
    """The seven indicator signals of the full quaternary input decoder.

    i0, i1, i2 are one-hot value indicators (q == 0, 1, 2); ii and i3 are
    threshold indicators (q <= 1 and q <= 2); i1_bar and i2_bar are the
    complements of the one-hots.  Note i3 is a threshold, not the one-hot
    for q == 3: q == 3 is signalled by i3 == 0.
    """

    i0: int
    i1: int
    i1_bar: int
    ii: int
    i2_bar: int
    i2: int
    i3: int


def quat_add_oracle(a: int, b: int, cin: int) -> tuple[int, int]:
    """One-digit quaternary addition: returns (sum mod 4, carry out)."""
    check_quat(a)
    check_quat(b)
    check_bit(cin)
    total = a + b + cin
    return total % 4, int(total >= 4)


def nqi(q: int) -> int:
    """Negative threshold inverter: high iff q == 0."""
    return int(check_quat(q) == 0)


def iqi(q: int) -> int:
    """Intermediate threshold inverter: high iff q <= 1."""
    return int(check_quat(q) <= 1)


def pqi(q: int) -> int:
    """Positive threshold inverter: high iff q <= 2."""
    return int(check_quat(q) <= 2)


def decode_full(q: int) -> DecodedQuat:
    """All seven indicator signals for one quaternary input."""
    check_quat(q)
    i1 = int(q == 1)
    i2 = int(q == 2)
    return DecodedQuat(
        i0=int(q == 0),
        i1=i1,
        i1_bar=1 - i1,
        ii=int(q <= 1),
        i2_bar=1 - i2,
        i2=i2,
        i3=int(q <= 2),
    )


def q_to_bits(q: int) -> BitPair:
    """Quaternary digit to its two-bit encoding."""
    check_quat(q)
    return BitPair(x1=q // 2, x0=q % 2)


def bits_to_q(p: BitPair) -> int:
    """Exact inverse of q_to_bits."""
    return 2 * p.x1 + p.x0


def successor_k(q: int, k: int) -> int:
    """(q + k) mod 4 for k in {1, 2, 3}; k == 3 is the predecessor."""
    check_quat(q)
    if k not in (1, 2, 3):
        raise ValueError(f"shift amount must be 1, 2 or 3: {k!r}")
    return (q + k) % 4


def h_mod(a: int, b: int) -> int:
    """Carry-free digit sum (a + b) mod 4."""
    check_quat(a)
    check_quat(b)
    return (a + b) % 4


def cout_from_h(h: int, a: int, cin: int) -> int:
    """Carry out reconstructed from the carry-free sum h = (a+b) mod 4.

    Complemented form: ~cout = h0.a0 + h1.(a<=1) + h2.(a<=2) + ~cin.(h==3),
    with h0/h1/h2 the one-hot indicators of h.  Equals the oracle carry for
    every (a, b, cin) when h is consistent with (a, b).
    """
    check_quat(h)
    check_quat(a)
    check_bit(cin)
    not_cout = (
        (h == 0 and a == 0)
        or (h == 1 and a <= 1)
        or (h == 2 and a <= 2)
        or (cin == 0 and h == 3)
    )
    return int(not not_cout)


def quat_g_p(a: int, b: int) -> tuple[int, int]:
    """Per-digit generate and propagate: g iff a+b >= 4, p iff a+b == 3."""
    check_quat(a)
    check_quat(b)
    return int(a + b >= 4), int(a + b == 3)


def g_gate_form(a: int, b: int) -> int:
    """Generate as the published three-clause gate expression.

    Indicator reading: the '3' suffix means the positive threshold output
    (value <= 2), the 'i' suffix the intermediate threshold (value <= 1),
    the '0' suffix the one-hot zero indicator.  Equivalent to a+b >= 4 on
    the full 16-vector domain.
    """
    a3, b3 = pqi(a), pqi(b)
    ai, bi = iqi(a), iqi(b)
    a0, b0 = nqi(a), nqi(b)
    return int(not ((a3 or b0) and (ai or bi) and (b3 or a0)))


def p_formula_onehot(a: int, b: int) -> int:
    """The published propagate sum-of-products under the one-hot reading.

    Does NOT equal (a+b == 3): it misses the (0,3) and (3,0) vectors.
    Kept as the published broken form for the errata checks.
    """
    check_quat(a)
    check_quat(b)
    return int((a == 3 and b == 1) or (a == 2 and b == 2) or (a == 1 and b == 3))


def p_formula_threshold(a: int, b: int) -> int:
    """The published propagate form under the threshold reading of the
    '3' suffix (value <= 2).  Also distinct from (a+b == 3)."""
    check_quat(a)
    check_quat(b)
    return int((a <= 2 and b == 1) or (a == 2 and b == 2) or (a == 1 and b <= 2))


def binary_full_add(a: int, b: int, cin: int) -> tuple[int, int]:
    """One-bit full addition: returns (sum, carry out)."""
    check_bit(a)
    check_bit(b)
    check_bit(cin)
    total = a + b + cin
    return total % 2, total // 2


def multidigit_oracle(a_digits, b_digits, cin: int, radix: int = 4) -> tuple[list[int], int]:
    """Multi-digit addition oracle, least significant digit first."""
    if len(a_digits) != len(b_digits):
        raise ValueError("operand widths differ")
    acc = cin
    out = []
    for ad, bd in zip(a_digits, b_digits):
        acc += ad + bd
        out.append(acc % radix)
        acc //= radix
    return out, acc
