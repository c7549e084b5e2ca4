"""HTTP service exposing the workbench.

Every operation is stateless request/response: verify a design against its
arithmetic oracle, roll up costs in either counting mode, reproduce a
published table, fetch the errata report, or emit/check/evaluate netlists
in the .qnl text format.  Structured errors use a `code` the clients map
to exit codes: `invalid_options` / `invalid_inputs` for bad requests,
`parse_error` / `netlist_error` for bad netlist text.

Run with: uvicorn quatbench.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, designs, qnl, tables
from .blocks import CATALOG, SupplyMode
from .netlist import MissingInputError, check_well_formed, evaluate, total_cost
from .qnl import QnlError


# ---------------------------------------------------------------------------
# Request / response models
# ---------------------------------------------------------------------------


class DesignParams(BaseModel):
    family: str
    supply: int | None = Field(default=None, description="1 or 3 power supplies")
    xor: int | None = Field(default=None, description="qb decoder XOR variant: 16, 9 or 3")
    fa: int | None = Field(default=None, description="full adder variant: 36, 18 or 8")
    inverters: str | None = Field(default=None, description="roosta: shared or split")
    encoder: str | None = Field(default=None, description="qb single-supply encoder: v1 or v2")
    kind: str = Field(default="fa", description="fa, ha, cpa, cla or csa")
    digits: int = Field(default=1, ge=1, le=4)


class CostParams(DesignParams):
    mode: str = Field(default="paper", description="paper or asbuilt")


class MismatchModel(BaseModel):
    inputs: dict[str, int]
    expected: dict[str, int]
    actual: dict[str, int]


class VerifyResponse(BaseModel):
    design: str
    netlist: str
    kind: str
    digits: int
    total: int
    passed: int
    ok: bool
    mismatches: list[MismatchModel]


class CostComponent(BaseModel):
    label: str
    transistors: int


class InstanceCost(BaseModel):
    instance: str
    block: str
    transistors: int


class BlockSubtotal(BaseModel):
    block: str
    count: int
    transistors: int


class CostResponse(BaseModel):
    design: str
    kind: str
    digits: int
    mode: str
    total: int
    components: list[CostComponent] = []
    instances: list[InstanceCost] = []
    by_block: list[BlockSubtotal] = []
    paper_total: int
    asbuilt_total: int
    discrepancy: str | None = None


class CellValueModel(BaseModel):
    computed: int
    printed: int | None = None
    match: bool


class TableCellModel(BaseModel):
    values: list[CellValueModel]


class TableRowModel(BaseModel):
    label: str
    cells: list[TableCellModel]


class TableResponse(BaseModel):
    id: str
    title: str
    columns: list[str]
    rows: list[TableRowModel]
    match: bool


class ErrataModel(BaseModel):
    id: str
    location: str
    printed: str
    computed: str
    method: str
    detail: str
    verified: bool


class PortModel(BaseModel):
    name: str
    kind: str


class BlockModel(BaseModel):
    name: str
    inputs: list[PortModel]
    outputs: list[PortModel]
    cost: dict[str, int]
    provenance: str


class DesignInfo(BaseModel):
    family: str
    supplies: list[int]
    variants: str


class EmitResponse(BaseModel):
    name: str
    text: str


class NetlistText(BaseModel):
    text: str


class DiagnosticModel(BaseModel):
    code: str
    element: str
    message: str


class CheckResponse(BaseModel):
    name: str
    ok: bool
    diagnostics: list[DiagnosticModel]


class EvalRequest(BaseModel):
    text: str
    inputs: dict[str, int]


class EvalResponse(BaseModel):
    netlist: str
    outputs: dict[str, int]


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _bad_request(code: str, message: str, status: int = 400, **extra):
    raise HTTPException(status_code=status, detail={"code": code, "message": message, **extra})


def _design(params: DesignParams) -> designs.DesignId:
    try:
        return designs.make_design(
            params.family, params.supply, xor=params.xor, fa=params.fa,
            inverters=params.inverters, encoder=params.encoder)
    except designs.InvalidDesignError as exc:
        _bad_request("invalid_options", str(exc))


def _build(params: DesignParams):
    design = _design(params)
    try:
        return design, designs.build(design, params.kind, params.digits)
    except designs.InvalidDesignError as exc:
        _bad_request("invalid_options", str(exc))


def _table_model(table: tables.CostTable) -> TableResponse:
    return TableResponse(
        id=table.id, title=table.title, columns=list(table.columns),
        rows=[TableRowModel(
            label=row.label,
            cells=[TableCellModel(values=[
                CellValueModel(computed=v.computed, printed=v.printed, match=v.match)
                for v in cell.values]) for cell in row.cells],
        ) for row in table.rows],
        match=table.match,
    )


def _parse(text: str):
    try:
        return qnl.parse_netlist(text)
    except QnlError as exc:
        _bad_request("parse_error", str(exc), line=exc.line, column=exc.column)


# ---------------------------------------------------------------------------
# Application
# ---------------------------------------------------------------------------


def create_app() -> FastAPI:
    app = FastAPI(
        title="quatbench",
        version=__version__,
        description="Quaternary adder workbench: exhaustive functional verification "
                    "and transistor-cost auditing of published adder designs.",
    )

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.get("/designs", response_model=list[DesignInfo])
    def list_designs():
        variants = {
            "qb": "xor in {16,9,3} x fa in {36,18,8}; encoder v1/v2 with one supply",
            "ebrahimi": "none",
            "moaiyeri": "none",
            "roosta": "inverters shared or split",
            "binary": "fa in {36,18,8}",
        }
        return [
            DesignInfo(
                family=family,
                supplies=[1 if s is SupplyMode.SINGLE else 3
                          for s in designs.supported_supplies(family)],
                variants=variants[family],
            )
            for family in designs.FAMILIES
        ]

    @app.get("/blocks", response_model=list[BlockModel])
    def list_blocks():
        return [
            BlockModel(
                name=spec.name,
                inputs=[PortModel(name=n, kind=k) for n, k in spec.in_ports],
                outputs=[PortModel(name=n, kind=k) for n, k in spec.out_ports],
                cost={mode.value: c for mode, c in spec.cost.items()},
                provenance=spec.provenance,
            )
            for spec in CATALOG.values()
        ]

    @app.post("/verify", response_model=VerifyResponse)
    def verify(params: DesignParams):
        design, netlist = _build(params)
        report = designs.verify_design(design, params.kind, params.digits)
        return VerifyResponse(
            design=design.label(), netlist=netlist.name, kind=params.kind,
            digits=params.digits, total=report.total, passed=report.passed,
            ok=report.ok,
            mismatches=[MismatchModel(inputs=m.inputs, expected=m.expected,
                                      actual=m.actual) for m in report.mismatches],
        )

    @app.post("/cost", response_model=CostResponse)
    def cost(params: CostParams):
        if params.mode not in ("paper", "asbuilt"):
            _bad_request("invalid_options", f"mode must be paper or asbuilt, got {params.mode!r}")
        design, netlist = _build(params)
        paper = designs.paper_cost(design, params.kind, params.digits)
        breakdown = total_cost(netlist)
        discrepancy = designs.cost_discrepancy(design, params.kind, params.digits)
        resp = CostResponse(
            design=design.label(), kind=params.kind, digits=params.digits,
            mode=params.mode,
            total=paper if params.mode == "paper" else breakdown.total,
            paper_total=paper, asbuilt_total=breakdown.total,
            discrepancy=None if discrepancy is None else
            f"published arithmetic {discrepancy.paper} T vs functional netlist "
            f"{discrepancy.asbuilt} T (+{discrepancy.delta}); {discrepancy.note}",
        )
        if params.mode == "paper":
            resp.components = [
                CostComponent(label=label, transistors=v)
                for label, v in designs.paper_components(design, params.kind, params.digits)]
        else:
            resp.instances = [InstanceCost(instance=i, block=b, transistors=c)
                              for i, b, c in breakdown.instances]
            resp.by_block = [BlockSubtotal(block=b, count=n, transistors=t)
                             for b, n, t in breakdown.by_block]
        return resp

    @app.get("/tables/{table_id}", response_model=TableResponse)
    def table(table_id: str):
        try:
            return _table_model(tables.cost_table(table_id))
        except KeyError as exc:
            _bad_request("invalid_options", str(exc.args[0]), status=404)

    @app.get("/errata", response_model=list[ErrataModel])
    def errata_report():
        return [ErrataModel(**e.__dict__) for e in tables.errata()]

    @app.post("/netlists/emit", response_model=EmitResponse)
    def emit(params: DesignParams):
        _, netlist = _build(params)
        return EmitResponse(name=netlist.name, text=qnl.emit_netlist(netlist))

    @app.post("/netlists/check", response_model=CheckResponse)
    def check(body: NetlistText):
        netlist = _parse(body.text)
        diags = check_well_formed(netlist)
        return CheckResponse(
            name=netlist.name, ok=not diags,
            diagnostics=[DiagnosticModel(code=d.code, element=d.element, message=d.message)
                         for d in diags],
        )

    @app.post("/netlists/eval", response_model=EvalResponse)
    def eval_netlist(body: EvalRequest):
        netlist = _parse(body.text)
        diags = check_well_formed(netlist)
        if diags:
            _bad_request("netlist_error", "netlist is not well-formed",
                         diagnostics=[str(d) for d in diags])
        declared = {name.lower(): name for name, _ in netlist.inputs}
        assignment = {}
        for key, value in body.inputs.items():
            if key.lower() not in declared:
                _bad_request("invalid_inputs", f"no such input: {key}")
            assignment[declared[key.lower()]] = value
        try:
            outputs = evaluate(netlist, assignment)
        except (MissingInputError, ValueError) as exc:
            _bad_request("invalid_inputs", str(exc))
        return EvalResponse(netlist=netlist.name, outputs=outputs)

    return app


app = create_app()
