"""Command line interface for block inspection, construction and verification.

All subcommands print JSON (DOT for export-dot) on stdout or to --out.
Domain errors print a structured JSON object on stderr and exit 1; flag
errors exit 2 via argparse. Identical invocations produce byte-identical
output: dict keys are emitted in insertion order and id lists are sorted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .builder import build_connection_set
from .cosets import Subgroup, all_subgroups, class_decomposition, load_subgroup_json
from .errors import InputFormatError, PerfectCodeRequired, RegsetsError
from .factorization import build_layered_graph
from .groups import GroupTable, catalog, load_group_json
from .perfect_code import ORACLE_CAP_DEFAULT, is_perfect_code, oracle_inverse_closed_transversal
from .verifier import _validated_ids, check_regular_set

__all__ = ["RunConfig", "main", "run"]


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation."""

    command: str
    group: str
    subgroup: str | None
    a: int | None
    b: int | None
    set_path: str | None
    out: str | None
    oracle_cap: int
    strict_precheck: bool
    render: str


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regsets",
        description="Build and verify connection sets that make a subgroup an (a,b)-regular set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, subgroup: bool = True) -> None:
        p.add_argument("--group", required=True, help="catalog:NAME or path to a group JSON file")
        if subgroup:
            p.add_argument(
                "--subgroup",
                required=True,
                help="members:[ids], generators:[ids], or path to a subgroup JSON file",
            )
        p.add_argument("--out", help="write the output to this path instead of stdout")

    p = sub.add_parser("classes", help="dump the block decomposition of G minus H")
    common(p)

    p = sub.add_parser("check-pc", help="decide whether H is a perfect code of some Cayley graph")
    common(p)
    p.add_argument(
        "--oracle-cap",
        type=int,
        default=ORACLE_CAP_DEFAULT,
        help="also run the backtracking transversal search when |G| is at most this (0 disables)",
    )

    p = sub.add_parser("build", help="construct a connection set for the given (a, b)")
    common(p)
    p.add_argument("--a", type=int, required=True, help="neighbors inside H for vertices of H")
    p.add_argument("--b", type=int, required=True, help="neighbors inside H for outside vertices")
    p.add_argument(
        "--strict-precheck",
        action="store_true",
        help="for odd b, test the perfect-code criterion before building anything",
    )
    p.add_argument(
        "--render",
        choices=("ids", "perm"),
        default="ids",
        help="with 'perm', also list S as permutations when the group has them",
    )

    p = sub.add_parser("verify", help="check a connection set against the (a, b) counts")
    common(p)
    p.add_argument("--set", dest="set_path", required=True, help="JSON array of ids, or object with key S")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("export-dot", help="write the Cayley graph of a set as DOT text")
    common(p)
    p.add_argument("--set", dest="set_path", required=True, help="JSON array of ids, or object with key S")

    p = sub.add_parser("layers", help="dump every block's labelled coset graph")
    common(p)

    p = sub.add_parser("sweep", help="build and verify all feasible (a, b) for every subgroup")
    common(p, subgroup=False)
    return parser


def _load_group(source: str) -> GroupTable:
    if source.startswith("catalog:"):
        return catalog(source[len("catalog:") :])
    return load_group_json(source)


def _load_subgroup(g: GroupTable, source: str) -> Subgroup:
    for prefix, key in (("members:", "members"), ("generators:", "generators")):
        if source.startswith(prefix):
            try:
                ids = json.loads(source[len(prefix) :])
            except json.JSONDecodeError as exc:
                raise InputFormatError(f"bad id list in {source!r}: {exc}") from exc
            if not isinstance(ids, list):
                raise InputFormatError("subgroup id list must be a JSON array")
            return load_subgroup_json(g, {key: ids})
    return load_subgroup_json(g, source)


def _load_set(path: str) -> list[int]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON in {path}: {exc}") from exc
    if isinstance(data, dict):
        if "S" not in data:
            raise InputFormatError('set file must be a JSON array or an object with key "S"')
        data = data["S"]
    if not isinstance(data, list):
        raise InputFormatError("set file must hold a JSON array of ids")
    return [int(v) for v in data]


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cmd_classes(g: GroupTable, h: Subgroup) -> tuple[int, str]:
    dec = class_decomposition(h)
    payload = {
        "group_order": g.order,
        "subgroup": list(h.members),
        "blocks": [block.to_json() for block in dec.blocks],
    }
    return 0, _dump(payload)


def _cmd_check_pc(g: GroupTable, h: Subgroup, oracle_cap: int) -> tuple[int, str]:
    verdict = is_perfect_code(h)
    payload: dict = {"perfect_code": verdict.is_perfect_code}
    if verdict.is_perfect_code:
        payload["witnesses"] = [list(w) for w in verdict.witnesses]
    else:
        payload["violation"] = verdict.violation.to_json()
    if 0 < g.order <= oracle_cap:
        transversal = oracle_inverse_closed_transversal(h, cap=oracle_cap)
        payload["witness_transversal"] = list(transversal) if transversal is not None else None
    return 0, _dump(payload)


def _cmd_build(
    g: GroupTable, h: Subgroup, a: int, b: int, strict_precheck: bool, render: str
) -> tuple[int, str]:
    cs = build_connection_set(h, a, b, strict_precheck=strict_precheck)
    report = check_regular_set(g, cs.elements, h, a, b)
    if not report.ok:
        raise AssertionError("constructed set failed verification; please report this")
    payload = cs.to_json()
    if render == "perm" and g.perm_images is not None:
        payload["S_permutations"] = [list(g.perm_images[v]) for v in cs.elements]
    return 0, _dump(payload)


def _cmd_verify(g: GroupTable, h: Subgroup, ids: list[int], a: int, b: int) -> tuple[int, str]:
    report = check_regular_set(g, ids, h, a, b)
    return (0 if report.ok else 1), _dump(report.to_json())


def _cmd_export_dot(g: GroupTable, h: Subgroup, ids: list[int]) -> tuple[int, str]:
    checked = _validated_ids(g, ids)
    lines = ["graph {"]
    for v in range(g.order):
        mark = " [incode=true]" if v in h.member_set else ""
        lines.append(f"  v{v}{mark};")
    edges: set[tuple[int, int]] = set()
    for s in checked:
        for x in range(g.order):
            y = int(g.table[s, x])
            edges.add((x, y) if x < y else (y, x))
    for x, y in sorted(edges):
        lines.append(f"  v{x} -- v{y};")
    lines.append("}")
    return 0, "\n".join(lines) + "\n"


def _cmd_layers(g: GroupTable, h: Subgroup) -> tuple[int, str]:
    dec = class_decomposition(h)
    blocks = []
    for block in dec.blocks:
        graph = build_layered_graph(block)
        edges = []
        for layer in range(graph.n_layers):
            for (u, v), pair in graph.layer_edges(layer):
                edges.append({"pair": [u, v], "label": layer, "elements": list(pair)})
        blocks.append(
            {
                "block": block.rep_x,
                "layer_count": graph.n_layers,
                "cores": [list(core) for core in graph.cores],
                "edges": edges,
            }
        )
    return 0, _dump({"blocks": blocks})


def _valid_inner_sizes(h: Subgroup) -> list[int]:
    step = 2 if h.order % 2 else 1
    return list(range(0, h.order, step))


def _cmd_sweep(g: GroupTable) -> tuple[int, str]:
    rows = []
    for h in all_subgroups(g):
        if h.order in (1, g.order):
            continue
        dec = class_decomposition(h)
        verdict = is_perfect_code(h, dec)
        builds = verified = odd_b_rejected = 0
        for a in _valid_inner_sizes(h):
            for b in range(h.order + 1):
                if b % 2 and not verdict.is_perfect_code:
                    try:
                        build_connection_set(h, a, b, decomposition=dec)
                    except PerfectCodeRequired:
                        odd_b_rejected += 1
                        continue
                    raise AssertionError("odd b slipped past a non-perfect-code subgroup")
                cs = build_connection_set(h, a, b, decomposition=dec)
                builds += 1
                if check_regular_set(g, cs.elements, h, a, b).ok:
                    verified += 1
        rows.append(
            {
                "subgroup": list(h.members),
                "order": h.order,
                "index": h.index,
                "perfect_code": verdict.is_perfect_code,
                "builds": builds,
                "verified": verified,
                "odd_b_rejected": odd_b_rejected,
            }
        )
    return 0, _dump({"group_order": g.order, "subgroups": rows})


def _dispatch(config: RunConfig) -> tuple[int, str]:
    g = _load_group(config.group)
    if config.command == "sweep":
        return _cmd_sweep(g)
    h = _load_subgroup(g, config.subgroup)
    if config.command == "classes":
        return _cmd_classes(g, h)
    if config.command == "check-pc":
        return _cmd_check_pc(g, h, config.oracle_cap)
    if config.command == "build":
        return _cmd_build(g, h, config.a, config.b, config.strict_precheck, config.render)
    if config.command == "verify":
        return _cmd_verify(g, h, _load_set(config.set_path), config.a, config.b)
    if config.command == "export-dot":
        return _cmd_export_dot(g, h, _load_set(config.set_path))
    if config.command == "layers":
        return _cmd_layers(g, h)
    raise AssertionError(f"unhandled command {config.command}")


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run one command, return the process exit code."""
    args = _build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        group=args.group,
        subgroup=getattr(args, "subgroup", None),
        a=getattr(args, "a", None),
        b=getattr(args, "b", None),
        set_path=getattr(args, "set_path", None),
        out=args.out,
        oracle_cap=getattr(args, "oracle_cap", ORACLE_CAP_DEFAULT),
        strict_precheck=getattr(args, "strict_precheck", False),
        render=getattr(args, "render", "ids"),
    )
    try:
        code, text = _dispatch(config)
    except RegsetsError as exc:
        payload: dict = {"error": type(exc).__name__, "message": str(exc)}
        block = getattr(exc, "block", None)
        if block is not None:
            payload["block"] = block.to_json()
        sys.stderr.write(json.dumps(payload, indent=2) + "\n")
        return 1
    if config.out:
        Path(config.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(main())
