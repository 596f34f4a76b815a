"""Command-line surface.

Exit codes: 0 = yes / solved / verified, 1 = no / infeasible (with a
reason), 2 = usage or parse error, 3 = internal contract violation (a
guarantee the constructions rely on was contradicted; CI should treat
this as a bug alarm, not an infeasible instance).

Every construction subcommand re-verifies its own output before
reporting success; the CLI never trusts a construction.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import certify as certify_mod
from . import classes, construct, factor, gadget, oracle
from .errors import (
    BudgetExceededError,
    CertificationError,
    ContractViolationError,
    GraphFormatError,
    InfeasibleError,
    PreconditionError,
)
from .graph import (
    Graph,
    edge_connectivity_at_least,
    is_connected,
    parse_graph,
    two_edge_connected,
)
from .parity import (
    format_vector,
    format_walk,
    parse_vector,
    parse_vertex_set,
    verify_mod_factor,
    verify_phc,
    verify_s_odd,
)

REASON_TEXT = {
    "even-order": "even order",
    "non-bipartite": "non-bipartite",
    "bipartite-odd-order": "bipartite, odd order",
    "disconnected": "disconnected",
    "bipartite-odd-s": "bipartite graph, odd |S|",
    "odd-t-component": "odd T-count in a component",
    "infeasible-target": "target map fails the parity conditions",
    "no-connected-factor": "no connected factor within the cap",
    "packing-infeasible": "no two edge-disjoint spanning trees",
    "even-degree-cut-vertex": "bridge-isolated vertex of even degree",
    "component-infeasible": "a two-edge-connected component cannot absorb its forced target",
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, obj, lines = args.handler(args)
    except GraphFormatError as exc:
        return _fail(args, 2, f"parse error: {exc}")
    except (PreconditionError, ValueError) as exc:
        return _fail(args, 2, f"usage error: {exc}")
    except BudgetExceededError as exc:
        return _fail(args, 2, f"budget exceeded: {exc}")
    except (InfeasibleError, CertificationError) as exc:
        return _fail(args, 1, f"no: {exc}")
    except ContractViolationError as exc:
        return _fail(args, 3, f"contract violation: {exc}")
    if getattr(args, "json", False):
        obj.setdefault("status", "ok" if code == 0 else "no")
        print(json.dumps(obj))
    else:
        for line in lines:
            print(line)
    return code


def run(argv=None) -> None:  # console entry point
    sys.exit(main(argv))


def _fail(args, code: int, message: str) -> int:
    if getattr(args, "json", False):
        print(json.dumps({"status": "error" if code >= 2 else "no", "message": message}))
    else:
        print(message, file=sys.stderr if code >= 2 else sys.stdout)
    return code


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _load_target(args, g: Graph) -> factor.ParityTarget:
    if getattr(args, "target", None):
        return factor.parse_target(_read(args.target), g)
    return factor.ParityTarget.constant(g.n, 2)


# ---------------------------------------------------------------------------
# handlers


def _cmd_decide(args):
    g = _load_graph(args.graph)
    decision = construct.decide_phc(g)
    text = REASON_TEXT[decision.reason]
    obj = {"answer": decision.has_phc, "reason": decision.reason}
    if decision:
        return 0, obj, [f"yes: {text}"]
    return 1, obj, [f"no: {text}"]


def _cmd_construct(args):
    if args.cap < 4:
        raise PreconditionError("construct guarantees cap 4; use `phc phc3` for cap 3")
    g = _load_graph(args.graph)
    decision = construct.decide_phc(g)
    if not decision:
        return 1, {"answer": False, "reason": decision.reason}, [
            f"no: {REASON_TEXT[decision.reason]}"
        ]
    x = construct.construct_phc4(g)
    check = verify_phc(g, x, args.cap)
    if not check:
        raise ContractViolationError(f"construction failed re-verification: {check.reason}")
    obj = {"answer": True, "reason": decision.reason, "witness": x}
    return 0, obj, [f"yes: {REASON_TEXT[decision.reason]}", format_vector(x)]


def _cmd_sodd(args):
    g = _load_graph(args.graph)
    s = parse_vertex_set(_read(args.set), g)
    x = construct.construct_s_odd(g, s)
    if not verify_s_odd(g, x, s):
        raise ContractViolationError("S-odd construction failed re-verification")
    return 0, {"answer": True, "s": s, "witness": x}, ["yes", format_vector(x)]


def _cmd_factor(args):
    g = _load_graph(args.graph)
    target = _load_target(args, g)
    x = certify_mod.connected_mod4_factor(g, target)
    check = verify_mod_factor(g, x, target.residues, 4, 3)
    if not check:
        raise ContractViolationError(f"factor failed re-verification: {check.reason}")
    return 0, {"answer": True, "witness": x}, ["yes", format_vector(x)]


def _cmd_phc3(args):
    g = _load_graph(args.graph)
    if not is_connected(g):
        return 1, {"answer": False, "reason": "disconnected"}, ["no: disconnected"]
    if edge_connectivity_at_least(g, 4):
        route = "four-edge-connected"
        x = factor.phc3_4ec(g)
    elif two_edge_connected(g):
        route = "certified-two-edge-connected"
        x = certify_mod.connected_mod4_factor(g, factor.ParityTarget.constant(g.n, 2))
    else:
        route = "bridge-decomposition"
        answer = certify_mod.phc3_with_bridges(g)
        if not answer:
            text = REASON_TEXT[answer.reason]
            obj = {
                "answer": False,
                "reason": answer.reason,
                "witness_vertex": answer.witness_vertex,
                "witness_component": answer.witness_component,
            }
            return 1, obj, [f"no: {text}"]
        x = list(answer.x)
    check = verify_phc(g, x, 3)
    if not check:
        raise ContractViolationError(f"PHC3 route {route} failed re-verification: {check.reason}")
    return 0, {"answer": True, "route": route, "witness": x}, [
        f"yes: {route}",
        format_vector(x),
    ]


def _cmd_oracle(args):
    g = _load_graph(args.graph)
    if args.oracle_op == "factor":
        target = _load_target(args, g)
        x = oracle.solve_mod_d_factor(
            g,
            target.residues,
            args.modulus,
            args.cap,
            budget=args.budget,
        )
        if x is None:
            return 1, {"answer": False}, ["none"]
        return 0, {"answer": True, "witness": x}, ["yes", format_vector(x)]
    if args.oracle_op == "phc":
        ok, x = oracle.phc_exists(g, args.cap, budget=args.budget)
        if not ok:
            return 1, {"answer": False}, ["none"]
        return 0, {"answer": True, "witness": x}, ["yes", format_vector(x)]
    if args.oracle_op == "allround":
        report = oracle.all_round(g, budget=args.budget)
        if report:
            return 0, {"answer": True}, ["all-round"]
        return 1, {"answer": False, "witness_target": list(report.witness)}, [
            "not all-round",
            "witness target: " + " ".join(map(str, report.witness)),
        ]
    if args.oracle_op == "bipallround":
        report = oracle.bipartite_all_round(g, budget=args.budget)
        if report:
            return 0, {"answer": True}, ["bipartite-all-round"]
        return 1, {"answer": False, "witness_target": list(report.witness)}, [
            "not bipartite-all-round",
            "witness target: " + " ".join(map(str, report.witness)),
        ]
    if args.oracle_op == "hc":
        cyc = oracle.hamiltonian_cycle(g)
        if cyc is None:
            return 1, {"answer": False}, ["none"]
        return 0, {"answer": True, "cycle": cyc}, [format_walk(cyc)]
    raise PreconditionError(f"unknown oracle operation {args.oracle_op!r}")


def _cmd_gadget(args):
    g = _load_graph(args.graph)
    gm = gadget.build_gadget(g)
    if args.gadget_op == "build":
        return 0, {
            "host_vertices": gm.host.n,
            "host_edges": gm.host.m,
            "edges": [list(e) for e in gm.host.edges],
        }, [gadget.format_gadget(gm).rstrip("\n")]
    if args.gadget_op == "forward":
        if not args.cycle:
            raise PreconditionError("gadget forward needs --cycle FILE")
        hc = [int(t) for t in _read(args.cycle).split()]
        x = gadget.phc2_from_hc(gm, hc)
        return 0, {"answer": True, "witness": x}, [format_vector(x)]
    if args.gadget_op == "backward":
        if not args.vector:
            raise PreconditionError("gadget backward needs --vector FILE")
        x = parse_vector(_read(args.vector), gm.host)
        cyc = gadget.hc_from_phc(gm, x, args.cap)
        return 0, {"answer": True, "cycle": cyc}, [format_walk(cyc)]
    raise PreconditionError(f"unknown gadget operation {args.gadget_op!r}")


def _cmd_certify(args):
    g = _load_graph(args.graph)
    if args.dense:
        cert = certify_mod.dense_all_round(g)
        return 0, {"kind": cert.kind}, [certify_mod.format_certificate(cert).rstrip("\n")]
    edge_ids = [args.edge] if args.edge is not None else list(range(g.m))
    lines = []
    obj = {"certificates": []}
    for eid in edge_ids:
        cert = certify_mod.certify_edge(g, eid)
        obj["certificates"].append({"edge": eid, "kind": cert.kind})
        lines.append(f"edge {eid}:")
        lines.append(certify_mod.format_certificate(cert).rstrip("\n"))
    return 0, obj, lines


def _cmd_verify(args):
    g = _load_graph(args.graph)
    x = parse_vector(_read(args.vector), g)
    if args.set:
        s = parse_vertex_set(_read(args.set), g)
        ok = verify_s_odd(g, x, s)
        obj = {"answer": ok}
        return (0 if ok else 1), obj, ["valid S-odd walk vector" if ok else "invalid"]
    if args.target:
        target = factor.parse_target(_read(args.target), g)
        check = verify_mod_factor(g, x, target.residues, args.modulus, args.cap)
    else:
        check = verify_phc(g, x, args.cap)
    obj = {"answer": check.ok, "reason": check.reason, "witness": check.witness}
    if check:
        return 0, obj, ["valid"]
    return 1, obj, [f"invalid: {check.reason} at {check.witness}"]


def _cmd_classify(args):
    g = _load_graph(args.graph)
    preds = classes.classify(g)
    lines = [f"{name}: {'yes' if val else 'no'}" for name, val in preds.items()]
    return 0, dict(preds), lines


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phc",
        description="Parity Hamiltonian cycle toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(handler=handler)
        return p

    p = add("decide", _cmd_decide, "decide PHC existence")
    p.add_argument("graph")

    p = add("construct", _cmd_construct, "construct a PHC with per-edge cap >= 4")
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("graph")

    p = add("sodd", _cmd_sodd, "construct an S-odd walk vector (cap 4)")
    p.add_argument("--set", required=True, help="file of S vertex ids")
    p.add_argument("graph")

    p = add("factor", _cmd_factor, "connected mod-4 factor via certificates")
    p.add_argument("--target", help="target map file (lines 'v r'; default all 2)")
    p.add_argument("graph")

    p = add("phc3", _cmd_phc3, "construct a PHC with per-edge cap 3")
    p.add_argument("graph")

    p = add("oracle", _cmd_oracle, "exhaustive brute-force reference solvers")
    p.add_argument("oracle_op", choices=["factor", "phc", "allround", "bipallround", "hc"])
    p.add_argument("--modulus", type=int, default=4)
    p.add_argument("--cap", type=int, default=3)
    p.add_argument("--target", help="target map file")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("graph")

    p = add("gadget", _cmd_gadget, "cubic-Hamiltonicity hardness gadget")
    p.add_argument("gadget_op", choices=["build", "forward", "backward"])
    p.add_argument("graph")
    p.add_argument("--cycle", help="Hamiltonian cycle file (forward)")
    p.add_argument("--vector", help="host multiplicity vector file (backward)")
    p.add_argument("--cap", type=int, default=2, choices=[2, 3])

    p = add("certify", _cmd_certify, "all-roundness certificates")
    p.add_argument("--edge", type=int, help="certify just this edge id")
    p.add_argument("--dense", action="store_true", help="whole-graph dense certificate")
    p.add_argument("graph")

    p = add("verify", _cmd_verify, "verify a supplied witness vector")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--set", help="verify as S-odd walk for this vertex set file")
    p.add_argument("--target", help="verify as mod-4 factor for this target file")
    p.add_argument("--modulus", type=int, default=4)
    p.add_argument("graph")
    p.add_argument("vector")

    p = add("classify", _cmd_classify, "graph-class predicates")
    p.add_argument("graph")

    return parser


if __name__ == "__main__":
    run()
