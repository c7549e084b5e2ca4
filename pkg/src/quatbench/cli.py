"""Command-line client for the workbench service.

The CLI is a thin client over the HTTP API: by default it talks to an
in-process instance of the service, with ``--server URL`` it targets a
running one, so scripted use and service use see the same contract.

Exit codes: 0 success / verification pass, 1 verification mismatch,
2 netlist parse or well-formedness error, 3 invalid options or inputs.
"""

from __future__ import annotations

import argparse
import sys

import httpx

from .render import FORMATS, render_cost, render_errata, render_outputs, \
    render_table, render_verify

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_OPTIONS = 3

_ERROR_EXIT = {
    "parse_error": EXIT_PARSE,
    "netlist_error": EXIT_PARSE,
    "invalid_options": EXIT_OPTIONS,
    "invalid_inputs": EXIT_OPTIONS,
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.exit_code = code


class Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the workbench reserves 2 for
    # netlist parse errors and reports bad options as 3
    def error(self, message):
        raise CliError(f"{self.prog}: {message}", EXIT_OPTIONS)


class _InProcessTransport(httpx.BaseTransport):
    """Synchronous bridge to the ASGI app for serverless CLI use."""

    def __init__(self, app):
        self._asgi = httpx.ASGITransport(app=app)

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        import asyncio

        async def run():
            response = await self._asgi.handle_async_request(request)
            body = await response.aread()
            return httpx.Response(response.status_code, headers=response.headers,
                                  content=body)

        return asyncio.run(run())


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    from .service import app  # imported lazily: only the local path needs it

    return httpx.Client(transport=_InProcessTransport(app),
                        base_url="http://quatbench.local")


def _call(client: httpx.Client, method: str, path: str, **kwargs) -> dict | list:
    resp = client.request(method, path, **kwargs)
    if resp.status_code >= 400:
        detail = {}
        try:
            detail = resp.json().get("detail", {})
        except ValueError:
            pass
        if isinstance(detail, dict) and "code" in detail:
            message = detail.get("message", "request failed")
            for diag in detail.get("diagnostics", []):
                message += f"\n  {diag}"
            raise CliError(message, _ERROR_EXIT.get(detail["code"], EXIT_OPTIONS))
        raise CliError(f"{resp.status_code}: {resp.text}", EXIT_OPTIONS)
    return resp.json()


def _design_payload(args) -> dict:
    payload = {"family": args.design, "kind": args.kind, "digits": args.digits}
    for key in ("supply", "xor", "fa", "inverters", "encoder"):
        value = getattr(args, key, None)
        if value is not None:
            payload[key] = value
    return payload


def _add_design_options(p: argparse.ArgumentParser, kinds=("fa", "ha", "cpa", "cla", "csa")):
    p.add_argument("--design", "-d", required=True,
                   help="design family: qb, ebrahimi, moaiyeri, roosta or binary")
    p.add_argument("--supply", type=int, choices=(1, 3), help="power supplies")
    p.add_argument("--xor", type=int, choices=(16, 9, 3),
                   help="qb decoder XOR variant (transistors)")
    p.add_argument("--fa", type=int, choices=(36, 18, 8),
                   help="binary full adder variant (transistors)")
    p.add_argument("--inverters", choices=("shared", "split"),
                   help="roosta inverter sharing")
    p.add_argument("--encoder", choices=("v1", "v2"),
                   help="qb single-supply encoder variant")
    p.add_argument("--kind", choices=kinds, default="fa", help="adder organization")
    p.add_argument("--digits", type=int, default=None,
                   help="width in digits (default 1, or 4 for cla/csa)")


def _normalize_width(args):
    if args.digits is None:
        args.digits = 4 if args.kind in ("cla", "csa") else 1


def build_parser() -> Parser:
    parser = Parser(prog="quatbench",
                    description="Quaternary adder workbench: verify published designs, "
                                "reproduce their transistor-cost tables, audit the errata.")
    parser.add_argument("--server", help="URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="exhaustively verify a design against the oracle")
    _add_design_options(p)

    p = sub.add_parser("cost", help="transistor cost of a design")
    _add_design_options(p)
    p.add_argument("--mode", choices=("paper", "asbuilt"), default="paper",
                   help="published arithmetic or functional netlist roll-up")
    p.add_argument("--format", choices=FORMATS, default="markdown")

    p = sub.add_parser("table", help="reproduce a published cost table")
    p.add_argument("--id", required=True, dest="table_id",
                   help="T6, T7, T8, BCCLA, QCCLA or CCSA")
    p.add_argument("--format", choices=FORMATS, default="markdown")

    p = sub.add_parser("errata", help="machine-verified publication inconsistencies")
    p.add_argument("--format", choices=FORMATS, default="markdown")

    p = sub.add_parser("netlist", help="emit a design as .qnl text")
    _add_design_options(p)
    p.add_argument("--out", "-o", help="output file (default: stdout)")

    p = sub.add_parser("eval", help="evaluate a .qnl netlist on given inputs")
    p.add_argument("--netlist", "-n", required=True, help=".qnl file")
    p.add_argument("--inputs", "-i", required=True,
                   help='comma-separated assignments, e.g. "A=1,B=3,Cin=0"')

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _parse_inputs(text: str) -> dict[str, int]:
    values = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise CliError(f"bad input assignment {part!r}; expected name=value", EXIT_OPTIONS)
        name, _, raw = part.partition("=")
        try:
            values[name.strip()] = int(raw)
        except ValueError:
            raise CliError(f"bad input value {raw!r} for {name.strip()}", EXIT_OPTIONS) from None
    if not values:
        raise CliError("no input assignments given", EXIT_OPTIONS)
    return values


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)

        if args.command == "serve":
            import uvicorn

            from .service import app

            uvicorn.run(app, host=args.host, port=args.port)
            return EXIT_OK

        with _client(args.server) as client:
            if args.command == "verify":
                _normalize_width(args)
                report = _call(client, "POST", "/verify", json=_design_payload(args))
                sys.stdout.write(render_verify(report))
                return EXIT_OK if report["ok"] else EXIT_MISMATCH

            if args.command == "cost":
                _normalize_width(args)
                payload = _design_payload(args)
                payload["mode"] = args.mode
                result = _call(client, "POST", "/cost", json=payload)
                sys.stdout.write(render_cost(result, args.format))
                return EXIT_OK

            if args.command == "table":
                result = _call(client, "GET", f"/tables/{args.table_id}")
                sys.stdout.write(render_table(result, args.format))
                return EXIT_OK

            if args.command == "errata":
                result = _call(client, "GET", "/errata")
                sys.stdout.write(render_errata(result, args.format))
                return EXIT_OK

            if args.command == "netlist":
                _normalize_width(args)
                result = _call(client, "POST", "/netlists/emit", json=_design_payload(args))
                if args.out:
                    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                        fh.write(result["text"])
                    sys.stderr.write(f"wrote {result['name']} to {args.out}\n")
                else:
                    sys.stdout.write(result["text"])
                return EXIT_OK

            if args.command == "eval":
                try:
                    with open(args.netlist, encoding="utf-8") as fh:
                        text = fh.read()
                except OSError as exc:
                    raise CliError(f"cannot read {args.netlist}: {exc}", EXIT_OPTIONS) from None
                inputs = _parse_inputs(args.inputs)
                result = _call(client, "POST", "/netlists/eval",
                               json={"text": text, "inputs": inputs})
                sys.stdout.write(render_outputs(result["outputs"]))
                return EXIT_OK

        raise CliError(f"unknown command {args.command}", EXIT_OPTIONS)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
