"""Design builders: exhaustive functional verification of every family and
composition, published-arithmetic costs, netlist roll-ups, discrepancies."""

import numpy as np
import pytest

from quatbench import designs
from quatbench.blocks import SupplyMode
from quatbench.designs import InvalidDesignError, make_design
from quatbench.netlist import check_well_formed, evaluate, input_space


# ---------------------------------------------------------------------------
# design ids and validation
# ---------------------------------------------------------------------------


def test_defaults_and_labels():
    d = make_design("qb", 3)
    assert (d.xor, d.fa) == (3, 18)
    assert d.label() == "qb_3s_x3_fa18"
    assert make_design("roosta", 1).inverters == "shared"
    assert make_design("ebrahimi").supply is SupplyMode.SINGLE
    assert make_design("moaiyeri").supply is SupplyMode.TRIPLE
    assert make_design("binary").supply is SupplyMode.SINGLE


@pytest.mark.parametrize("family,kwargs", [
    ("nosuch", {}),
    ("moaiyeri", dict(supply=1)),
    ("ebrahimi", dict(supply=3)),
    ("binary", dict(supply=3)),
    ("qb", dict(supply=2)),
    ("qb", dict(supply=3, xor=5)),
    ("qb", dict(supply=3, fa=10)),
    ("qb", dict(supply=3, encoder="v2")),
    ("qb", dict(supply=1, encoder="v3")),
    ("roosta", dict(supply=3, inverters="both")),
    ("roosta", dict(supply=3, fa=18)),
    ("ebrahimi", dict(xor=3)),
    ("binary", dict(inverters="shared")),
])
def test_invalid_design_options(family, kwargs):
    with pytest.raises(InvalidDesignError):
        make_design(family, **kwargs)


def test_build_width_validation():
    d = make_design("qb", 3)
    with pytest.raises(InvalidDesignError):
        designs.build(d, "cla", 3)
    with pytest.raises(InvalidDesignError):
        designs.build(d, "cpa", 5)
    with pytest.raises(InvalidDesignError):
        designs.build(d, "ha")
    with pytest.raises(InvalidDesignError):
        designs.build(make_design("binary"), "ha")
    with pytest.raises(InvalidDesignError):
        designs.build(d, "fa", 2)


# ---------------------------------------------------------------------------
# functional exhaustiveness
# ---------------------------------------------------------------------------


def test_every_digit_design_matches_oracle():
    all_designs = designs.all_digit_designs(full=True)
    assert len(all_designs) == 27
    for d in all_designs:
        netlist = designs.build(d)
        assert check_well_formed(netlist) == [], d.label()
        report = designs.verify_design(d)
        assert report.ok and report.total == 32, d.label()


def test_half_adders_match_oracle():
    for family in ("ebrahimi", "moaiyeri"):
        report = designs.verify_design(make_design(family), "ha")
        assert report.ok and report.total == 16


@pytest.mark.parametrize("kind", ["cpa", "cla", "csa"])
@pytest.mark.parametrize("family", designs.FAMILIES)
def test_four_digit_compositions_match_oracle(family, kind):
    for supply in designs.supported_supplies(family):
        for d in designs.tier_designs(family, supply):
            netlist = designs.build(d, kind, 4)
            assert check_well_formed(netlist) == [], netlist.name
            report = designs.verify_design(d, kind, 4)
            assert report.ok, netlist.name
            assert report.total == 131072


def test_intermediate_cpa_widths():
    for digits in (1, 2, 3):
        report = designs.verify_design(make_design("roosta", 3), "cpa", digits)
        assert report.ok and report.total == 4 ** (2 * digits) * 2


def test_one_digit_cpa_equivalent_to_digit_design():
    d = make_design("ebrahimi")
    digit = designs.build(d)
    cpa1 = designs.build(d, "cpa", 1)
    space = input_space(digit)
    out_digit = evaluate(digit, space)
    out_cpa = evaluate(cpa1, {"A0": space["A"], "B0": space["B"], "Cin": space["Cin"]})
    assert np.array_equal(out_digit["QS"], out_cpa["QS0"])
    assert np.array_equal(out_digit["QC"], out_cpa["QC"])


def test_cpa_cla_csa_functionally_identical():
    d = make_design("roosta", 3)
    nets = {kind: designs.build(d, kind, 4) for kind in ("cpa", "cla", "csa")}
    space = input_space(nets["cpa"])
    outs = {kind: evaluate(n, space) for kind, n in nets.items()}
    for name in nets["cpa"].output_names():
        assert np.array_equal(outs["cpa"][name], outs["cla"][name])
        assert np.array_equal(outs["cpa"][name], outs["csa"][name])


# ---------------------------------------------------------------------------
# published-arithmetic costs (one digit)
# ---------------------------------------------------------------------------

T6_EXPECTED = {
    ("qb", 1): (134, 85, 65),
    ("qb", 3): (116, 67, 47),
    ("ebrahimi", 1): (111,),
    ("moaiyeri", 3): (154,),
    ("roosta", 1): (148, 130),
    ("roosta", 3): (100, 82),
    ("binary", 1): (72, 36, 16),
}


@pytest.mark.parametrize("key,expected", sorted(T6_EXPECTED.items()))
def test_digit_paper_costs(key, expected):
    family, supply = key
    mode = SupplyMode.SINGLE if supply == 1 else SupplyMode.TRIPLE
    got = tuple(designs.paper_cost(d) for d in designs.tier_designs(family, mode))
    assert got == expected


def test_qb_paper_cost_is_compositional():
    # any decoder/adder pairing, not only the three published tiers
    assert designs.paper_cost(make_design("qb", 3, xor=16, fa=36)) == 116
    assert designs.paper_cost(make_design("qb", 1, xor=3, fa=18)) == 85
    assert designs.paper_cost(make_design("qb", 3, xor=9, fa=18)) == 73
    assert designs.paper_cost(make_design("qb", 1, xor=9, fa=18)) == 91
    assert designs.paper_cost(make_design("qb", 1, xor=16, fa=8)) == 78


def test_half_adder_paper_costs():
    assert designs.paper_cost(make_design("ebrahimi"), "ha") == 87
    assert designs.paper_cost(make_design("moaiyeri"), "ha") == 128


def test_ebrahimi_component_structure():
    rows = dict(designs.paper_components(make_design("ebrahimi")))
    assert sorted(rows.values()) == [19, 40, 52]
    assert sum(rows.values()) == 111


def test_roosta_component_structure():
    for supply, inv, total in ((3, "shared", 82), (3, "split", 100),
                               (1, "shared", 130), (1, "split", 148)):
        rows = designs.paper_components(make_design("roosta", supply, inverters=inv))
        assert sum(v for _, v in rows) == total


# ---------------------------------------------------------------------------
# as-built roll-ups and discrepancies
# ---------------------------------------------------------------------------

ASBUILT_EXPECTED = [
    (("qb", dict(supply=3, xor=16, fa=36)), 144),   # paper counts 116
    (("qb", dict(supply=1, xor=3, fa=18)), 100),    # paper counts 85
    (("ebrahimi", dict()), 111),
    (("moaiyeri", dict()), 186),                    # paper counts 154
    (("roosta", dict(supply=3)), 82),
    (("roosta", dict(supply=3, inverters="split")), 100),
    (("roosta", dict(supply=1)), 130),
    (("roosta", dict(supply=1, inverters="split")), 148),
    (("binary", dict(fa=36)), 72),
]


@pytest.mark.parametrize("spec,expected", ASBUILT_EXPECTED)
def test_asbuilt_costs(spec, expected):
    family, opts = spec
    assert designs.asbuilt_cost(make_design(family, **opts)) == expected


def test_asbuilt_never_below_paper():
    for d in designs.all_digit_designs(full=True):
        for kind in ("fa", "cpa", "cla", "csa"):
            digits = 1 if kind == "fa" else 4
            assert designs.asbuilt_cost(d, kind, digits) >= \
                designs.paper_cost(d, kind, digits), (d.label(), kind)


def test_qb_discrepancy_is_the_second_decoder():
    for xor, dec in ((16, 28), (9, 21), (3, 15)):
        d = make_design("qb", 3, xor=xor, fa=18)
        rec = designs.cost_discrepancy(d)
        assert rec is not None and rec.delta == dec


def test_moaiyeri_discrepancy_is_the_sum_stage_pair():
    rec = designs.cost_discrepancy(make_design("moaiyeri"))
    assert rec is not None
    assert (rec.paper, rec.asbuilt, rec.delta) == (154, 186, 32)


def test_exact_families_have_no_discrepancy():
    assert designs.cost_discrepancy(make_design("ebrahimi")) is None
    assert designs.cost_discrepancy(make_design("roosta", 3)) is None
    assert designs.cost_discrepancy(make_design("binary")) is None


# ---------------------------------------------------------------------------
# composition costs (4 digits)
# ---------------------------------------------------------------------------

T7_EXPECTED = {  # one power supply; canonical composition
    ("cpa", "qb"): (536, 340, 260),
    ("cpa", "ebrahimi"): (444,),
    ("cpa", "roosta"): (592, 520),
    ("cpa", "binary"): (288, 144, 64),
    ("cla", "qb"): (744, 548, 468),  # printed 784/588/508, see errata
    ("cla", "ebrahimi"): (612,),
    ("cla", "roosta"): (760, 688),
    ("cla", "binary"): (496, 352, 272),
    ("csa", "qb"): (632, 436, 356),
    ("csa", "ebrahimi"): (532,),
    ("csa", "roosta"): (680, 608),
    ("csa", "binary"): (384, 240, 160),
}

T8_EXPECTED = {  # three power supplies; canonical composition
    ("cpa", "qb"): (464, 268, 188),
    ("cpa", "moaiyeri"): (616,),
    ("cpa", "roosta"): (400, 328),
    ("cla", "qb"): (672, 476, 396),
    ("cla", "moaiyeri"): (784,),
    ("cla", "roosta"): (568, 496),
    ("csa", "qb"): (560, 364, 284),  # printed middle value 436, see errata
    ("csa", "moaiyeri"): (704,),
    ("csa", "roosta"): (488, 416),
}


@pytest.mark.parametrize("key,expected", sorted(T7_EXPECTED.items()))
def test_canonical_4digit_costs_single(key, expected):
    kind, family = key
    got = tuple(designs.canonical_cost(d, kind, 4)
                for d in designs.tier_designs(family, SupplyMode.SINGLE))
    assert got == expected


@pytest.mark.parametrize("key,expected", sorted(T8_EXPECTED.items()))
def test_canonical_4digit_costs_triple(key, expected):
    kind, family = key
    got = tuple(designs.canonical_cost(d, kind, 4)
                for d in designs.tier_designs(family, SupplyMode.TRIPLE))
    assert got == expected


def test_paper_mode_reproduces_published_qb_single_cla():
    # the published table implies a 248 T overhead there; the paper view
    # keeps it, the canonical view uses the 208 T lookahead network
    got = tuple(designs.paper_cost(d, "cla", 4)
                for d in designs.tier_designs("qb", SupplyMode.SINGLE))
    assert got == (784, 588, 508)
    assert designs.paper_cost(make_design("qb", 3, xor=3, fa=18), "cla", 4) == 476


def test_asbuilt_composition_overheads_match_canonical():
    # the functional carry networks cost exactly the published overheads
    for family, supply in (("ebrahimi", 1), ("moaiyeri", 3), ("roosta", 3), ("qb", 3),
                           ("binary", 1)):
        d = designs.tier_designs(family, SupplyMode.SINGLE if supply == 1
                                 else SupplyMode.TRIPLE)[0]
        cpa = designs.asbuilt_cost(d, "cpa", 4)
        style = designs.carry_style(d)
        assert designs.asbuilt_cost(d, "cla", 4) - cpa == designs.CLA_OVERHEAD[style]
        assert designs.asbuilt_cost(d, "csa", 4) - cpa == designs.CSA_OVERHEAD[style]


def test_cpa_cost_is_linear_in_width():
    d = make_design("roosta", 3)
    digit = designs.paper_cost(d)
    for digits in (1, 2, 3, 4):
        assert designs.paper_cost(d, "cpa", digits) == digits * digit
        assert designs.asbuilt_cost(d, "cpa", digits) == digits * digit


def test_oracle_for_multidigit():
    d = make_design("qb", 3)
    oracle = designs.oracle_for(d, "cpa", 2)
    out = oracle({"A0": np.asarray(3), "A1": np.asarray(3),
                  "B0": np.asarray(1), "B1": np.asarray(0), "Cin": np.asarray(1)})
    # 33_4 + 01_4 + 1 = 101_4
    assert int(out["QS0"]) == 1 and int(out["QS1"]) == 0 and int(out["QC"]) == 1
