"""Command-line front end.

Subcommands: check (is one map flow-continuous over a group), ffset (the
divisor set of a map or a graph pair), count (how many maps are
flow-continuous), search (find a witness map), construct (build a pair
realizing a prescribed divisor set), selftest (seeded cross-checks).

Exit codes: 0 yes/pass, 1 no/fail, 2 unknown (budget ran out before a
decision), 3 usage or input error.  --json prints one JSON object on
stdout; plain output otherwise.  FF_BUDGET in the environment overrides
default enumeration budgets, and --budget overrides both.

Graph arguments take a file path or builtin syntax "name" / "name:k",
with comma-separated parts unioned ("digon:9,digon:4").  Map arguments
take a file path, "identity" (or "bijection"), "constant:j", or an
explicit comma list of target edge indices.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .algebra import GroupSyntaxError, exponent, parse_group
from .constructions import DigonFamily, as_digon_union, build_witness, ff_set_digons, verify_witness
from .decide import (
    EdgeMap,
    constant_map,
    ff_gcd,
    format_edge_map,
    index_bijection,
    is_ff_group,
    is_ff_n,
    parse_edge_map,
)
from .ffsets import DEFAULT_MAP_BUDGET, count_ff_maps, exists_ff_map, ff_set_of_graphs, ff_set_of_map
from .flows import BudgetExceededError
from .graphs import (
    BUILTIN_NAMES,
    GraphFormatError,
    MultiDigraph,
    builtin,
    disjoint_union,
    format_digraph,
    parse_digraph,
)
from .selftest import DEFAULT_SEED, run_selftest

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3


@dataclass(frozen=True)
class CommandResult:
    status: str
    payload: dict
    exit_code: int
    lines: tuple[str, ...]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for
    # "unknown", so route usage problems to 3
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_budget() -> int:
    raw = os.environ.get("FF_BUDGET")
    if raw is None:
        return DEFAULT_MAP_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"FF_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"FF_BUDGET must be positive, got {value}")
    return value


def _budget_from(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    return _default_budget()


def parse_graph_argument(text: str) -> MultiDigraph:
    """Resolve a graph argument: builtins, builtin unions, or a file."""
    if not text:
        raise GraphFormatError("empty graph argument")
    parts = text.split(",")
    graphs = []
    for part in parts:
        name, _, parameter = part.partition(":")
        if name in BUILTIN_NAMES:
            graphs.append(builtin(name, int(parameter) if parameter else None))
        elif os.path.exists(part):
            with open(part, encoding="utf-8") as handle:
                graphs.append(parse_digraph(handle.read()))
        else:
            raise GraphFormatError(
                f"graph argument {part!r} is neither a builtin ({', '.join(BUILTIN_NAMES)}) nor a file"
            )
    return graphs[0] if len(graphs) == 1 else disjoint_union(graphs)


def parse_map_argument(text: str, source: MultiDigraph, target: MultiDigraph) -> EdgeMap:
    """Resolve a map argument: named forms, an index list, or a file."""
    if text in ("identity", "bijection"):
        return index_bijection(source, target)
    name, _, parameter = text.partition(":")
    if name == "constant":
        if not parameter:
            raise ValueError("constant map needs a target edge index, e.g. constant:0")
        return constant_map(source, target, int(parameter))
    tokens = [token.strip() for token in text.split(",") if token.strip()]
    if tokens and all(token.lstrip("-").isdigit() for token in tokens):
        return EdgeMap(source, target, tuple(int(token) for token in tokens))
    if os.path.exists(text):
        with open(text, encoding="utf-8") as handle:
            return parse_edge_map(handle.read(), source, target)
    raise ValueError(f"map argument {text!r} is neither a named form, an index list, nor a file")


def _parse_modulus(text: str) -> int:
    if text.strip().lower() == "z":
        return 0
    value = int(text)
    if value < 0:
        raise ValueError(f"modulus must be nonnegative or Z, got {text}")
    return value


def cmd_check(args) -> CommandResult:
    source = parse_graph_argument(args.g)
    target = parse_graph_argument(args.h)
    f = parse_map_argument(args.map, source, target)
    m = parse_group(args.group)
    gcd_value = ff_gcd(f)
    ok = is_ff_group(f, m)
    payload = {"group": str(m), "gcd": gcd_value, "ff": ok}
    if ok:
        return CommandResult(
            "yes", payload, EXIT_YES,
            (f"yes: flow-continuous over {m} (discrepancy gcd {gcd_value})",),
        )
    e = exponent(m)
    certificate = is_ff_n(f, 0 if e is None else e)[1]
    assert certificate is not None
    payload["certificate"] = {
        "vertex": certificate.vertex,
        "circuit": certificate.circuit,
        "value": certificate.value,
        "modulus": certificate.modulus,
    }
    return CommandResult(
        "no", payload, EXIT_NO,
        (
            f"no: not flow-continuous over {m} (discrepancy gcd {gcd_value})",
            f"certificate: vertex {certificate.vertex}, circuit {certificate.circuit}, "
            f"value {certificate.value}, modulus {certificate.modulus or 'Z'}",
        ),
    )


def _ffset_payload(ff_set, extra: dict | None = None) -> tuple[dict, tuple[str, ...]]:
    payload = dict(ff_set.to_json())
    if extra:
        payload.update(extra)
    if ff_set.all_of_n:
        lines = ("all n >= 1",)
    elif not ff_set.maximal_elements:
        lines = ("empty: no map exists",)
    else:
        lines = (" ".join(str(n) for n in ff_set.members()),)
    return payload, lines


def cmd_ffset(args) -> CommandResult:
    source = parse_graph_argument(args.g)
    target = parse_graph_argument(args.h)
    budget = _budget_from(args)
    if args.map is not None:
        f = parse_map_argument(args.map, source, target)
        ff_set = ff_set_of_map(f)
        extra = {"gcd": ff_gcd(f), "budget_state": {"budget": budget, "maps_covered": 1}}
        payload, lines = _ffset_payload(ff_set, extra)
        return CommandResult("yes", payload, EXIT_YES, lines)
    if args.digons:
        source_parts = as_digon_union(source)
        target_parts = as_digon_union(target)
        if source_parts is None or target_parts is None:
            raise ValueError("--digons requires both graphs to be unions of digons")
        if not source_parts or not target_parts:
            # edgeless on either side: trivially all of N or empty
            ff_set = ff_set_of_graphs(source, target)
        else:
            ff_set = ff_set_digons(
                DigonFamily(frozenset(len(p) for p in source_parts)),
                DigonFamily(frozenset(len(p) for p in target_parts)),
            )
        # the cone route answers arithmetically, no maps evaluated
        state = {"budget": budget, "maps_covered": 0}
    else:
        ff_set = ff_set_of_graphs(source, target, budget=budget)
        state = {
            "budget": budget,
            "maps_covered": target.num_edges**source.num_edges if source.num_edges else 1,
        }
    payload, lines = _ffset_payload(ff_set, {"budget_state": state})
    return CommandResult("yes", payload, EXIT_YES, lines)


def cmd_count(args) -> CommandResult:
    source = parse_graph_argument(args.g)
    target = parse_graph_argument(args.h)
    m = parse_group(args.group)
    budget = _budget_from(args)
    count = count_ff_maps(source, target, m, budget=budget, method=args.method)
    payload = {"group": str(m), "count": count, "method": args.method}
    lines = [f"{count}"]
    exit_code, status = EXIT_YES, "yes"
    if args.cross_check:
        other = parse_group(args.cross_check)
        if exponent(other) != exponent(m):
            raise ValueError(
                f"cross-check group {other} has exponent {exponent(other)}, "
                f"expected {exponent(m)}"
            )
        other_count = count_ff_maps(source, target, other, budget=budget, method=args.method)
        equal = other_count == count
        payload["cross_check"] = {"group": str(other), "count": other_count, "equal": equal}
        lines.append(f"cross-check {other}: {other_count} ({'equal' if equal else 'MISMATCH'})")
        if not equal:
            exit_code, status = EXIT_NO, "no"
    return CommandResult(status, payload, exit_code, tuple(lines))


def cmd_search(args) -> CommandResult:
    source = parse_graph_argument(args.g)
    target = parse_graph_argument(args.h)
    n = _parse_modulus(args.n)
    outcome = exists_ff_map(source, target, n, budget=_budget_from(args))
    label = "Z" if n == 0 else str(n)
    if outcome.status == "found":
        witness = outcome.witness
        assert witness is not None
        body = format_edge_map(witness)
        payload = {
            "modulus": label,
            "witness": list(witness.assignment),
            "gcd": ff_gcd(witness),
            "nodes": outcome.nodes,
        }
        lines = (f"# witness map, flow-continuous for {label}",) + tuple(body.splitlines())
        return CommandResult("yes", payload, EXIT_YES, lines)
    if outcome.status == "none":
        payload = {"modulus": label, "witness": None, "nodes": outcome.nodes}
        return CommandResult("no", payload, EXIT_NO, ("none",))
    payload = {"modulus": label, "witness": None, "nodes": outcome.nodes}
    return CommandResult(
        "unknown", payload, EXIT_UNKNOWN,
        (f"unknown: budget exhausted after {outcome.nodes} nodes",),
    )


def cmd_construct(args) -> CommandResult:
    targets = [int(token) for token in args.t.split(",") if token.strip()] if args.t else []
    g, h, plan = build_witness(targets)
    report = verify_witness(plan)
    os.makedirs(args.out, exist_ok=True)
    g_path = os.path.join(args.out, "G.dg")
    h_path = os.path.join(args.out, "H.dg")
    plan_path = os.path.join(args.out, "plan.json")
    with open(g_path, "w", encoding="utf-8") as handle:
        handle.write(format_digraph(g))
    with open(h_path, "w", encoding="utf-8") as handle:
        handle.write(format_digraph(h))
    plan_record = plan.to_json()
    plan_record["verified"] = report.passed
    plan_record["ff_set"] = report.computed.to_json()
    with open(plan_path, "w", encoding="utf-8") as handle:
        json.dump(plan_record, handle, indent=2, sort_keys=True)
        handle.write("\n")
    payload = dict(plan_record)
    payload["files"] = [g_path, h_path, plan_path]
    status = "yes" if report.passed else "no"
    lines = [f"wrote {g_path}, {h_path}, {plan_path}"]
    lines.append(
        f"verification: {'pass' if report.passed else 'FAIL'} "
        f"(set {report.computed}, wanted {report.expected})"
    )
    return CommandResult(status, payload, EXIT_YES if report.passed else EXIT_NO, tuple(lines))


def cmd_selftest(args) -> CommandResult:
    results = run_selftest(seed=args.seed, deep=args.deep)
    all_passed = all(r.passed for r in results)
    lines = [f"seed {args.seed}"]
    for r in results:
        verdict = "ok" if r.passed else "FAIL"
        lines.append(f"{r.name}: {r.checks} checks, {verdict}")
        for failure in r.failures[:5]:
            lines.append(f"  {failure}")
    payload = {
        "seed": args.seed,
        "suites": [
            {
                "name": r.name,
                "checks": r.checks,
                "passed": r.passed,
                "failures": list(r.failures),
            }
            for r in results
        ],
    }
    status = "yes" if all_passed else "no"
    return CommandResult(status, payload, EXIT_YES if all_passed else EXIT_NO, tuple(lines))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flowcont", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit one JSON object on stdout")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = commands.add_parser("check", help="decide flow-continuity of one map")
    check.add_argument("--g", required=True, help="source graph (file or builtin)")
    check.add_argument("--h", required=True, help="target graph (file or builtin)")
    check.add_argument("--map", required=True, help="edge map (file, identity, constant:j, or list)")
    check.add_argument("--group", required=True, help="group, e.g. Z, Z6, Z2xZ3")
    check.set_defaults(handler=cmd_check)

    ffset = commands.add_parser("ffset", help="divisor set of a map or a graph pair")
    ffset.add_argument("--g", required=True)
    ffset.add_argument("--h", required=True)
    ffset.add_argument("--map", help="restrict to one map instead of all maps")
    ffset.add_argument("--digons", action="store_true", help="use the digon-union cone analysis")
    ffset.add_argument("--budget", type=int, help="map evaluation budget")
    ffset.set_defaults(handler=cmd_ffset)

    count = commands.add_parser("count", help="count flow-continuous maps")
    count.add_argument("--g", required=True)
    count.add_argument("--h", required=True)
    count.add_argument("--group", required=True)
    count.add_argument("--method", choices=("gcd", "oracle"), default="gcd")
    count.add_argument("--cross-check", help="second group; counts must agree when exponents do")
    count.add_argument("--budget", type=int)
    count.set_defaults(handler=cmd_count)

    search = commands.add_parser("search", help="find a flow-continuous map")
    search.add_argument("--g", required=True)
    search.add_argument("--h", required=True)
    search.add_argument("--n", required=True, help="modulus, or Z for the integers")
    search.add_argument("--budget", type=int)
    search.set_defaults(handler=cmd_search)

    construct = commands.add_parser(
        "construct", help="build a pair realizing a divisor down-set"
    )
    construct.add_argument("--t", required=True, help="comma list of targets; empty for the empty set")
    construct.add_argument("--out", required=True, help="output directory")
    construct.set_defaults(handler=cmd_construct)

    selftest = commands.add_parser("selftest", help="run the seeded cross-check suites")
    selftest.add_argument("--deep", action="store_true", help="tenfold trial counts")
    selftest.add_argument("--seed", type=int, default=DEFAULT_SEED)
    selftest.set_defaults(handler=cmd_selftest)
    return parser


def _emit(result: CommandResult, json_mode: bool) -> None:
    if json_mode:
        print(json.dumps({"status": result.status, **result.payload}, sort_keys=True))
        return
    stream = sys.stderr if result.exit_code == EXIT_USAGE else sys.stdout
    for line in result.lines:
        print(line, file=stream)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except BudgetExceededError as exc:
        result = CommandResult(
            "unknown", {"message": str(exc)}, EXIT_UNKNOWN, (f"unknown: {exc}",)
        )
    except (GraphFormatError, GroupSyntaxError, ValueError, OSError) as exc:
        result = CommandResult("error", {"message": str(exc)}, EXIT_USAGE, (f"error: {exc}",))
    _emit(result, args.json)
    return result.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
