"""Command-line front end.

The CLI is a thin client of the service operation layer: it parses argv,
builds the same request payloads the HTTP API accepts, executes them either
in process (default) or against a running server (``--server URL``), and
renders the response. Exit codes: 0 success/verified, 1 refuted theorem,
2 usage error, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import DomreconError, FormatError, GraphConstructionError, SizeLimit
from .formats import graph6_encode, read_graph_file, to_dot
from .graphs import Graph, make_graph
from .service import ops
from .service.models import (
    GenRequest,
    MdsRequest,
    ReconRequest,
    ScanRequest,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_SIZE = 3


class HttpBackend:
    """Forward payloads to a running service; responses mirror local mode."""

    def __init__(self, base_url: str):
        self.base_url = base_url.rstrip("/")

    def call(self, endpoint: str, payload: dict | None = None):
        import httpx

        if payload is None:
            resp = httpx.get(f"{self.base_url}/{endpoint}", timeout=600.0)
        else:
            resp = httpx.post(f"{self.base_url}/{endpoint}", json=payload, timeout=600.0)
        if resp.status_code == 413:
            raise SizeLimit(resp.json().get("detail", "size limit"))
        if resp.status_code >= 400:
            raise FormatError(resp.json().get("detail", f"HTTP {resp.status_code}"))
        return resp.json()


class LocalBackend:
    """Run the same operations in process."""

    def call(self, endpoint: str, payload: dict | None = None):
        if endpoint == "gen":
            return ops.gen(GenRequest(**payload)).model_dump()
        if endpoint == "mds":
            return ops.mds(MdsRequest(**payload)).model_dump()
        if endpoint == "recon":
            return ops.recon(ReconRequest(**payload)).model_dump()
        if endpoint == "verify":
            return ops.verify(VerifyRequest(**payload)).model_dump()
        if endpoint == "scan":
            return [r.model_dump() for r in ops.scan(ScanRequest(**payload))]
        if endpoint.startswith("graphs/"):
            return ops.graphs_endpoint(int(endpoint.split("/", 1)[1])).model_dump()
        raise KeyError(endpoint)


def _graph_payload(source: str, seed: int | None = None) -> dict:
    """Resolve a graph source client-side: g6 record, file, or family spec."""
    if source.startswith("g6:"):
        return {"g6": source[3:]}
    if os.path.exists(source):
        with open(source, encoding="ascii") as fh:
            g = read_graph_file(fh.read())
        return {"g6": graph6_encode(g)}
    return {"spec": _with_seed(source, seed)}


def _with_seed(spec: str, seed: int | None) -> str:
    if seed is not None and "seed=" not in spec:
        return f"{spec}:seed={seed}"
    return spec


def _graph_param(source: str, seed: int | None = None) -> str:
    payload = _graph_payload(source, seed)
    return f"g6:{payload['g6']}" if "g6" in payload else payload["spec"]


def _print_graph(payload: dict, fmt: str) -> None:
    if fmt == "g6":
        print(payload["g6"])
    elif fmt == "json":
        print(json.dumps(
            {k: payload[k] for k in ("n", "edges", "labels")},
            separators=(",", ":"),
        ))
    else:
        g = make_graph(payload["n"], payload["edges"], payload.get("labels"))
        sys.stdout.write(to_dot(g))


def _set_labels(sets: list[list[int]]) -> list[str]:
    return ["{" + ",".join(str(v) for v in s) + "}" for s in sets]


def _ints_arg(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p != ""]
    except ValueError as exc:
        raise FormatError(f"expected comma-separated integers, got {text!r}") from exc


def _verify_params(args) -> dict:
    needs = {
        "families": ("n",),
        "disjoint_union": ("g", "h"),
        "union_empty": ("g", "n"),
        "join_k1": ("g",),
        "join_general": ("g", "h"),
        "kmn": ("m_int", "n"),
        "multipartite": ("parts",),
        "rook": ("n",),
        "threshold_forward": ("seq",),
        "subgraph_lemma": ("g", "set_s"),
        "gnv_empty": ("g",),
        "forest_connected": ("g",),
        "tree_lemma": ("g", "set_m", "vertex_s"),
        "split_connected": ("g",),
        "split_lemma": ("g", "set_m", "vertex_v"),
        "matching_join": ("g", "h", "matching?"),
        "product_k2": ("g",),
        "maxdegree": ("g",),
    }
    if args.theorem not in needs:
        raise FormatError(
            f"unknown theorem {args.theorem!r}; known: {', '.join(sorted(needs))}"
        )
    params: dict = {}
    for item in needs[args.theorem]:
        optional = item.endswith("?")
        name = item.rstrip("?")
        if name == "g":
            if args.graph is None:
                raise FormatError("this check needs --graph")
            params["g"] = _graph_param(args.graph, args.seed)
        elif name == "h":
            if args.other is None:
                raise FormatError("this check needs --other")
            params["h"] = _graph_param(args.other, args.seed)
        elif name == "n":
            if args.n is None:
                raise FormatError("this check needs --n")
            params["n"] = args.n
        elif name == "m_int":
            if args.m is None:
                raise FormatError("this check needs --m")
            params["m"] = args.m
        elif name == "parts":
            if args.parts is None:
                raise FormatError("this check needs --parts")
            params["parts"] = _ints_arg(args.parts)
        elif name == "seq":
            if args.seq is None:
                raise FormatError("this check needs --seq")
            params["seq"] = args.seq
        elif name == "set_s":
            if args.set is None:
                raise FormatError("this check needs --set")
            params["s"] = _ints_arg(args.set)
        elif name == "set_m":
            if args.set is None:
                raise FormatError("this check needs --set")
            params["m"] = _ints_arg(args.set)
        elif name == "vertex_s":
            if args.vertex is None:
                raise FormatError("this check needs --vertex")
            params["s"] = args.vertex
        elif name == "vertex_v":
            if args.vertex is None:
                raise FormatError("this check needs --vertex")
            params["v"] = args.vertex
        elif name == "matching":
            if args.matching is not None:
                params["matching"] = _ints_arg(args.matching)
        elif not optional:
            raise FormatError(f"missing parameter {name}")
    return params


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domrecon",
        description="Minimal dominating sets and their reconfiguration graphs.",
    )
    parser.add_argument("--server", help="base URL of a running service (remote mode)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family graph")
    gen.add_argument("spec", help="family spec, e.g. kmn:2,3 or threshold:iuu")
    gen.add_argument("--format", choices=("g6", "dot", "json"), default="g6")
    gen.add_argument("--seed", type=int, default=None)

    for name, help_text in (
        ("mds", "enumerate minimal dominating sets"),
        ("recon", "build the reconfiguration graph"),
        ("gamma", "build the token-sliding graph on minimum sets"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, help="family spec, g6:<record>, or file")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--limit-mds", type=int, default=None)
        if name != "mds":
            p.add_argument("--format", choices=("g6", "dot", "json"), default="g6")
            p.add_argument("--stats", action="store_true", help="emit a summary instead")

    verify = sub.add_parser("verify", help="verify a named claim")
    verify.add_argument("theorem")
    verify.add_argument("--graph", help="primary graph input")
    verify.add_argument("--other", help="secondary graph input")
    verify.add_argument("--n", type=int, default=None)
    verify.add_argument("--m", type=int, default=None)
    verify.add_argument("--parts", help="comma-separated part sizes")
    verify.add_argument("--seq", help="threshold creation sequence over i/u")
    verify.add_argument("--set", help="comma-separated vertex set")
    verify.add_argument("--vertex", type=int, default=None)
    verify.add_argument("--matching", help="comma-separated permutation")
    verify.add_argument("--seed", type=int, default=None)

    scan = sub.add_parser("scan", help="run corpus scans")
    scan.add_argument("--corpus", required=True,
                      help="upto:N, order:N, trees:C:n=N:seed=S, splits:..., a family spec, or a graph6 file")
    scan.add_argument("--checks", help="comma-separated scan ids (default: all)")
    scan.add_argument("--jobs", type=int, default=1)
    scan.add_argument("--limit-mds", type=int, default=None)
    scan.add_argument("--seed", type=int, default=None)

    graphs = sub.add_parser("graphs", help="all isomorphism classes of one order")
    graphs.add_argument("n", type=int)
    graphs.add_argument("--format", choices=("g6", "json"), default="g6")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _run(args, backend) -> int:
    if args.command == "gen":
        payload = backend.call("gen", {"spec": _with_seed(args.spec, args.seed)})
        _print_graph(payload, args.format)
        return EXIT_OK

    if args.command == "mds":
        payload = backend.call("mds", {"graph": _graph_payload(args.graph, args.seed)})
        print(json.dumps(payload["sets"], separators=(",", ":")))
        return EXIT_OK

    if args.command in ("recon", "gamma"):
        request = {
            "graph": _graph_payload(args.graph, args.seed),
            "kind": "gamma" if args.command == "gamma" else "full",
            "limit": args.limit_mds,
        }
        payload = backend.call("recon", request)
        if args.stats:
            summary = {
                "vertices": len(payload["sets"]),
                "edges": len(payload["edges"]),
                "components": len(payload["components"]),
                "diameter": payload["diameter"],
                "kind": payload["kind"],
            }
            print(json.dumps(summary, separators=(",", ":")))
        elif args.format == "g6":
            print(payload["g6"])
        elif args.format == "json":
            print(json.dumps(payload, separators=(",", ":")))
        else:
            k = len(payload["sets"])
            g = Graph(k, _adj_from_edges(k, payload["edges"]))
            sys.stdout.write(to_dot(g, name="R", node_labels=_set_labels(payload["sets"])))
        return EXIT_OK

    if args.command == "verify":
        payload = backend.call(
            "verify", {"theorem": args.theorem, "params": _verify_params(args)}
        )
        print(json.dumps(payload, indent=2))
        return EXIT_REFUTED if payload["verdict"] == "refuted" else EXIT_OK

    if args.command == "scan":
        request: dict = {"jobs": args.jobs, "limit": args.limit_mds}
        if os.path.exists(args.corpus):
            with open(args.corpus, encoding="ascii") as fh:
                request["records"] = fh.read().splitlines()
            request["corpus"] = args.corpus
        else:
            request["corpus"] = _with_seed(args.corpus, args.seed)
        if args.checks:
            request["checks"] = args.checks.split(",")
        payload = backend.call("scan", request)
        print(json.dumps(payload, indent=2))
        return EXIT_OK

    if args.command == "graphs":
        payload = backend.call(f"graphs/{args.n}")
        if args.format == "json":
            print(json.dumps(payload, separators=(",", ":")))
        else:
            for record in payload["graphs"]:
                print(record)
        return EXIT_OK

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return EXIT_OK

    raise FormatError(f"unknown command {args.command!r}")


def _adj_from_edges(n: int, edges: list) -> tuple[int, ...]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    backend = HttpBackend(args.server) if args.server else LocalBackend()
    try:
        return _run(args, backend)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (FormatError, GraphConstructionError, DomreconError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
