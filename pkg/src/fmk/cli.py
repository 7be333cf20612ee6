"""Command line front end.

The CLI is a thin client of the HTTP service: every subcommand builds one
JSON request and renders the JSON response.  By default the service app is
mounted in-process (no server required); pass --server to talk to a
running instance instead.

Exit codes: 0 success, 1 a verification reported failure, 2 usage or
parameter errors.  FMK_THREADS caps the parallelism of verification runs.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _request(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.post(path, json=payload)
    # no server: mount the service app in-process over an ASGI transport
    import asyncio

    from .service import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://fmk.local", timeout=600.0,
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _post(args, path: str, payload: dict) -> dict:
    resp = _request(args.server, path, payload)
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return resp.json()


def _emit(args, data: dict, table: str) -> None:
    text = json.dumps(data, indent=2) if args.format == "json" else table
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers), fmt.format(*["-" * w for w in widths])]
    lines += [fmt.format(*row) for row in rows]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_classify(args) -> int:
    payload = {
        "n": args.n, "k_max": args.kmax, "family": args.family,
        "include_operators": not args.no_operators,
    }
    if args.alpha:
        payload["alpha"] = args.alpha
    data = _post(args, "/v1/classify", payload)
    rows = [
        [r["family"], str(r["k"]), r["alpha"], r["beta"], r["fiber"],
         r["lambda"], r["nu"], r.get("s", "-"), r.get("r", "-"), str(r["homDim"])]
        for r in data["records"]
    ]
    _emit(args, data, _table(
        ["family", "k", "alpha", "beta", "fiber", "lambda", "nu", "s", "r", "homDim"], rows,
    ))
    return EXIT_OK


def cmd_build_operator(args) -> int:
    data = _post(args, "/v1/operator", {"n": args.n, "k": args.k})
    comps = data["operator"]["components"]
    rows = [
        [str(c["label"]), " + ".join(
            f'{t["coeff"]}*d^{t["deriv"]}' for t in c["terms"]
        )]
        for c in comps
    ]
    table = (
        f'operator: n={data["n"]} k={data["k"]} lambda={data["lam"]} nu={data["nu"]}\n'
        + _table(["component", "constant-coefficient terms"], rows)
    )
    _emit(args, data, table)
    return EXIT_OK


def cmd_verify(args) -> int:
    payload = {"n": args.n, "k": args.k}
    if args.lam is not None:
        payload["lam"] = args.lam
    if args.max_deg is not None:
        payload["max_deg"] = args.max_deg
    data = _post(args, "/v1/verify", payload)
    status = "PASS" if data["passed"] else "FAIL"
    table = f'{status}: intertwining check {json.dumps(data["parameters"])}'
    if not data["passed"]:
        table += "\nwitness: " + json.dumps(data["report"]["counterexample"])
    _emit(args, data, table)
    return EXIT_OK if data["passed"] else EXIT_VERIFY_FAILED


def cmd_ktypes(args) -> int:
    data = _post(args, "/v1/ktypes", {"n": args.n, "k": args.k, "alpha": args.alpha})
    t = data["table"]

    def fmt(formula: dict) -> str:
        kind = formula["kind"]
        if kind == "zero":
            return "0"
        if kind == "finite":
            body = " + ".join(
                f'H^{term["harmonic_degree"]}(dim {term["dim"]})' for term in formula["terms"]
            )
            return f'{body}  [total {formula["total_dim"]}]'
        if kind == "tail":
            return f'sum of H^m, m >= {formula["min_degree"]}, m = {formula["parity"]} parity'
        return f'full {formula["parity"]}-parity series'

    table = _table(
        ["n", "k", "alpha", "kernel", "image"],
        [[str(t["n"]), str(t["k"]), t["alpha"], fmt(t["kernel"]), fmt(t["image"])]],
    )
    if data.get("finite_model"):
        fm = data["finite_model"]
        table += f'\nfinite model check: {"PASS" if fm["passed"] else "FAIL"} ' \
                 f'(kernel dim {fm["kernel_dim"]}, table dim {fm["table_dim"]})'
    _emit(args, data, table)
    return EXIT_OK


def cmd_standardness(args) -> int:
    data = _post(args, "/v1/standardness", {
        "n": args.n, "k_max": args.kmax, "depth": args.depth,
    })
    rows = [
        [str(r["k"]),
         "(" + ", ".join(r["mu"]) + ")",
         "(" + ", ".join(r["eta"]) + ")",
         str(len(r["links"])), r["verdict"]]
        for r in data["rows"]
    ]
    _emit(args, data, _table(["k", "mu", "eta", "links", "verdict"], rows))
    return EXIT_OK


def _parse_s_values(spec: str) -> list[str]:
    """Either a comma list of rationals or an inclusive a..b half-integer scan."""
    from fractions import Fraction
    if ".." in spec:
        lo_s, hi_s = spec.split("..", 1)
        lo, hi = Fraction(lo_s), Fraction(hi_s)
        if lo > hi:
            raise ValueError(f"empty range {spec!r}")
        out = []
        v = lo
        while v <= hi:
            out.append(str(v))
            v += Fraction(1, 2)
        return out
    return [str(Fraction(tok)) for tok in spec.split(",") if tok.strip()]


def cmd_reducibility(args) -> int:
    try:
        s_values = _parse_s_values(args.s)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: bad --s value: {exc}", file=sys.stderr)
        return EXIT_USAGE
    data = _post(args, "/v1/reducibility", {
        "n": args.n, "s_values": s_values, "certify": not args.no_certify,
    })
    rows = [
        [v["s"], "reducible" if v["reducible"] else "irreducible",
         str(v["witness_degree"]) if v["witness_degree"] is not None else "-"]
        for v in data["verdicts"]
    ]
    _emit(args, data, _table(["s", "verdict", "witness k"], rows))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn
    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmk",
        description="Exact classification and verification of projectively "
        "covariant differential operators.",
    )
    parser.add_argument("--server", help="URL of a running service; default runs in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_default=None):
        p.add_argument("--n", type=int, required=n_default is None, default=n_default)
        p.add_argument("--format", choices=["json", "table"], default="table")
        p.add_argument("--out", help="write output to a file instead of stdout")

    p = sub.add_parser("classify", help="emit classification tables")
    common(p)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--alpha", choices=["+", "-"])
    p.add_argument("--family", choices=["G", "gP", "g", "all"], default="G")
    p.add_argument("--no-operators", action="store_true", help="omit operator bodies")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("build-operator", help="construct the degree-k operator and module map")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_build_operator)

    p = sub.add_parser("verify", help="verify equivariance of the degree-k operator")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", help='source parameter "p/q"; default: classified value')
    p.add_argument("--max-deg", type=int, help="monomial degree bound (default k+3)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("ktypes", help="kernel/image K-type table (n >= 3)")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", choices=["+", "-"], required=True)
    p.set_defaults(fn=cmd_ktypes)

    p = sub.add_parser("standardness", help="linkage and standardness report (n >= 3)")
    common(p)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--depth", type=int, default=3, help="linkage search depth")
    p.set_defaults(fn=cmd_standardness)

    p = sub.add_parser("reducibility", help="scan reducibility of the scalar module")
    common(p)
    p.add_argument("--s", required=True, help='rational list "0,1/2,3" or scan "a..b"')
    p.add_argument("--no-certify", action="store_true", help="skip solver certification")
    p.set_defaults(fn=cmd_reducibility)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def _mend_dash_values(argv: list[str]) -> list[str]:
    """Let value flags accept leading-dash rationals, e.g. --s -3..5."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--s", "--lambda") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_mend_dash_values(list(argv)))
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except httpx.HTTPError as exc:
        print(f"error: transport failure: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
