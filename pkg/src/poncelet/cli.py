"""Thin command-line client for the service.

Subcommands build a JSON request, post it to the service (mounted
in-process by default, or a remote base URL via --server), and write the
response unchanged.  Exit codes: 0 success or verification pass,
1 verification failure, 2 invalid input, 3 degenerate input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Any, Sequence

import httpx


class SystemExit2(Exception):
    """Invalid command-line input (mapped to exit code 2)."""


def _client(server: str | None):
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # this starlette still works with httpx; the nudge toward httpx2 is noise here
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _load_json_arg(value: str) -> Any:
    """Inline JSON if the value looks like it, otherwise a file path."""
    text = value.strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    with open(value, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _parse_roots(value: str) -> list[dict]:
    points = []
    for chunk in value.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            a, b = chunk.split(":")
        except ValueError:
            raise SystemExit2(f"bad root {chunk!r}: expected a:b")
        points.append({"a": a.strip(), "b": b.strip()})
    return points


def _write_output(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
        return
    directory = os.path.dirname(os.path.abspath(out)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".poncelet-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, out)  # atomic: readers never see a partial file
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _canonical_json(payload: Any) -> bytes:
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _finish(response, out: str | None, fail_field: str | None = None) -> int:
    if response.status_code == 200:
        content_type = response.headers.get("content-type", "")
        if content_type.startswith("image/svg"):
            _write_output(response.text.encode("utf-8"), out)
            return 0
        body = response.json()
        _write_output(_canonical_json(body), out)
        if fail_field is not None and not body.get(fail_field, False):
            return 1
        return 0
    try:
        detail = response.json()
    except ValueError:  # pragma: no cover - non-JSON error body
        detail = {"error": {"code": "unknown", "message": response.text}}
    message = detail.get("error", {}).get("message") or json.dumps(detail)
    print(f"error: {message}", file=sys.stderr)
    if response.status_code == 409:
        return 3
    return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poncelet", description="determinantal curves and surfaces, exactly"
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canonical-matrix", help="print the canonical matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("hypersurface", help="determinant of a full system")
    p.add_argument("--sections", required=True, help="system JSON (inline or file)")
    p.add_argument("--out")

    p = sub.add_parser("subvariety", help="maximal minors of a partial system")
    p.add_argument("--sections", required=True)
    p.add_argument("--out")

    p = sub.add_parser("verify-darboux", help="exact vertex-vanishing check")
    p.add_argument("--sections", required=True)
    p.add_argument("--member-roots", required=True, help='roots "a:b,a:b,..."')
    p.add_argument("--out")

    p = sub.add_parser("quadric-demo", help="rank 4,3,2,1 minors of the (3,1) matrix")
    p.add_argument("--out")

    p = sub.add_parser("quadric-rank", help="Gram rank of a quadratic form")
    p.add_argument("--quadric", required=True, help="term-list JSON (inline or file)")
    p.add_argument("--num-vars", type=int, default=4)
    p.add_argument("--out")

    p = sub.add_parser("cubic-from-A", help="determinantal cubic of a quintic subspace")
    p.add_argument("--A", required=True, help="3x6 rational matrix JSON (inline or file)")
    p.add_argument("--out")

    p = sub.add_parser("six-point", help="multiplication tensor and Hankel flattening")
    p.add_argument("--A", required=True)
    p.add_argument("--out")

    p = sub.add_parser("hilbert", help="graded dimensions of the minor ideal")
    p.add_argument("--A", required=True)
    p.add_argument("--degrees", default="2,3,4,5,6")
    p.add_argument("--out")

    p = sub.add_parser("dim-probe", help="Jacobian rank of the family parametrization")
    p.add_argument("--case", required=True, choices=["plane-curve", "quadric", "cubic"])
    p.add_argument("--k", type=int)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")

    p = sub.add_parser("plot", help="SVG of a plane scene")
    p.add_argument("--sections", required=True)
    p.add_argument(
        "--member-roots",
        action="append",
        default=[],
        help='roots "a:b,a:b,..." (repeatable, one per member)',
    )
    p.add_argument("--chart", type=int, default=0)
    p.add_argument("--window", default="-5,5,-5,5")
    p.add_argument("--resolution", type=int, default=160)
    p.add_argument("--out")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        with _client(args.server) as client:
            if args.command == "canonical-matrix":
                resp = client.post("/canonical-matrix", json={"n": args.n, "k": args.k})
                return _finish(resp, args.out)
            if args.command == "hypersurface":
                system = _load_json_arg(args.sections)
                resp = client.post("/hypersurface", json={"system": system})
                return _finish(resp, args.out)
            if args.command == "subvariety":
                system = _load_json_arg(args.sections)
                resp = client.post("/subvariety", json={"system": system})
                return _finish(resp, args.out)
            if args.command == "verify-darboux":
                system = _load_json_arg(args.sections)
                resp = client.post(
                    "/darboux-check",
                    json={"system": system, "member_roots": _parse_roots(args.member_roots)},
                )
                return _finish(resp, args.out, fail_field="pass")
            if args.command == "quadric-demo":
                return _finish(client.post("/quadric-demo"), args.out)
            if args.command == "quadric-rank":
                quadric = _load_json_arg(args.quadric)
                resp = client.post(
                    "/quadric-rank", json={"quadric": quadric, "num_vars": args.num_vars}
                )
                return _finish(resp, args.out)
            if args.command == "cubic-from-A":
                matrix = _load_json_arg(args.A)
                if isinstance(matrix, dict):
                    matrix = matrix.get("A")
                return _finish(client.post("/cubic-from-a", json={"A": matrix}), args.out)
            if args.command == "six-point":
                matrix = _load_json_arg(args.A)
                if isinstance(matrix, dict):
                    matrix = matrix.get("A")
                return _finish(client.post("/six-point", json={"A": matrix}), args.out)
            if args.command == "hilbert":
                matrix = _load_json_arg(args.A)
                if isinstance(matrix, dict):
                    matrix = matrix.get("A")
                try:
                    degrees = [int(d) for d in args.degrees.split(",") if d.strip()]
                except ValueError:
                    raise SystemExit2(f"bad degree list {args.degrees!r}")
                resp = client.post("/hilbert", json={"A": matrix, "degrees": degrees})
                return _finish(resp, args.out)
            if args.command == "dim-probe":
                payload: dict[str, Any] = {"case": args.case, "samples": args.samples}
                if args.k is not None:
                    payload["k"] = args.k
                if args.seed is not None:
                    payload["seed"] = args.seed
                return _finish(client.post("/dim-probe", json=payload), args.out)
            if args.command == "plot":
                system = _load_json_arg(args.sections)
                window = [w.strip() for w in args.window.split(",")]
                members = [_parse_roots(chunk) for chunk in args.member_roots]
                resp = client.post(
                    "/plot",
                    json={
                        "system": system,
                        "members": members,
                        "chart": args.chart,
                        "window": window,
                        "resolution": args.resolution,
                    },
                )
                return _finish(resp, args.out)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")  # pragma: no cover


def run() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    run()
