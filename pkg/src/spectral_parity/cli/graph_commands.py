"""Single-graph commands: rho, check, factor, extremal.

Commands:
    - rho: Spectral radius of a graph
    - check: Strong-parity-factor verdict by the subset criterion and/or the oracle
    - factor: Parity factor realizing one demand set
    - extremal: Build G*, G2 or G3 and print the graph, its cubic, or its radius
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any

from spectral_parity.cli.common import (
    add_graph_input,
    add_output_flag,
    positive_float,
    read_graph,
)
from spectral_parity.config.settings import load_settings
from spectral_parity.extremal.families import family_instance
from spectral_parity.extremal.polynomials import phi_B2, phi_B3, phi_Bstar
from spectral_parity.graphs.graph import VertexSet, members, vertex_set
from spectral_parity.graphs.io import serialize_graph
from spectral_parity.harness.report import format_number, format_set
from spectral_parity.parity.criterion import criterion_check
from spectral_parity.parity.oracle import find_parity_factor, oracle_check
from spectral_parity.parity.verdict import SpfVerdict, check_factor
from spectral_parity.spectra.cubic import CubicPoly, largest_root
from spectral_parity.spectra.power import spectral_radius

logger = logging.getLogger(__name__)

FAMILIES = {"gstar": "Gstar", "g2": "G2", "g3": "G3"}


def add_graph_commands(subparsers) -> None:
    """
    Add single-graph commands to CLI parser.

    Args:
        subparsers: argparse subparsers object
    """
    rho_parser = subparsers.add_parser("rho", help="Spectral radius of a graph")
    add_graph_input(rho_parser)
    add_output_flag(rho_parser)
    rho_parser.add_argument(
        "--tol", type=positive_float, help="Residual tolerance (default: 1e-10)"
    )
    rho_parser.set_defaults(func=cmd_rho)

    check_parser = subparsers.add_parser(
        "check", help="Decide whether a graph has a strong parity factor"
    )
    add_graph_input(check_parser)
    add_output_flag(check_parser, default="json")
    check_parser.add_argument(
        "--method",
        choices=["criterion", "oracle", "both"],
        default="criterion",
        help="Subset criterion (n <= 24), definitional oracle (n <= 12), or both",
    )
    check_parser.add_argument(
        "--strategy",
        choices=["profile", "search"],
        default="profile",
        help="Oracle strategy (default: profile)",
    )
    check_parser.set_defaults(func=cmd_check)

    factor_parser = subparsers.add_parser(
        "factor", help="Find F with d_F >= 1 everywhere and odd degree exactly on a demand set"
    )
    add_graph_input(factor_parser)
    add_output_flag(factor_parser, default="json")
    factor_parser.add_argument(
        "--demand",
        required=True,
        help="Comma-separated vertices of even size X (empty string for X = {})",
    )
    factor_parser.set_defaults(func=cmd_factor)

    extremal_parser = subparsers.add_parser(
        "extremal", help="Build an extremal family member"
    )
    extremal_parser.add_argument("--delta", type=int, required=True, help="Minimum degree (>= 3)")
    extremal_parser.add_argument("--n", type=int, required=True, help="Order")
    extremal_parser.add_argument(
        "--family", choices=sorted(FAMILIES), default="gstar", help="Family (default: gstar)"
    )
    extremal_parser.add_argument("--s", type=int, help="Joined clique size (g2, g3)")
    extremal_parser.add_argument(
        "--emit",
        choices=["graph", "phi", "rho"],
        help="Print only the graph, the cubic [c2,c1,c0], or the largest root",
    )
    extremal_parser.add_argument(
        "--format",
        choices=["edgelist", "graph6"],
        default="edgelist",
        help="Graph format for --emit graph (default: edgelist)",
    )
    extremal_parser.set_defaults(func=cmd_extremal)


def _cell(value: Any) -> Any:
    if isinstance(value, list | dict):
        return json.dumps(value, separators=(",", ":"))
    return value


def _write_records(records: list[dict[str, Any]], output: str, text_lines: list[str]) -> None:
    if output == "json":
        for record in records:
            sys.stdout.write(json.dumps(record, separators=(",", ":")) + "\n")
    elif output == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow({key: _cell(value) for key, value in record.items()})
        sys.stdout.write(buffer.getvalue())
    else:
        sys.stdout.write("".join(line + "\n" for line in text_lines))


def cmd_rho(args: argparse.Namespace) -> int:
    """Print rho(G)."""
    G = read_graph(args)
    result = spectral_radius(G, tol=args.tol)
    record = {
        "rho": result.value,
        "residual": result.residual,
        "iterations": result.iterations,
        "order": G.order,
    }
    _write_records([record], args.output, [format_number(result.value)])
    return 0


def _verdict_text(verdict: SpfVerdict) -> str:
    if verdict.has_spf:
        return f"{verdict.method}: strong parity factor exists"
    symbol = "S" if verdict.method == "criterion" else "X"
    line = f"{verdict.method}: no strong parity factor, {symbol}={format_set(verdict.witness)}"
    if verdict.detail:
        detail = verdict.detail
        line += (
            f" (components={detail['components']}, degree_sum={detail['degree_sum']}, "
            f"size={detail['size']})"
        )
    return line


def cmd_check(args: argparse.Namespace) -> int:
    """
    Print one verdict per method.

    Returns:
        0 if every method finds a strong parity factor, 1 if some method
        reports a witness or the two methods disagree
    """
    G = read_graph(args)
    limits = load_settings().limits

    verdicts = []
    if args.method in ("criterion", "both"):
        verdicts.append(criterion_check(G, max_order=limits.criterion_order))
    if args.method in ("oracle", "both"):
        verdicts.append(oracle_check(G, strategy=args.strategy, limits=limits))

    if len({v.has_spf for v in verdicts}) > 1:
        logger.error(
            f"Criterion and oracle disagree on n={G.order}, m={G.edge_count}: "
            + ", ".join(f"{v.method}={v.has_spf}" for v in verdicts)
        )

    _write_records(
        [v.to_dict() for v in verdicts], args.output, [_verdict_text(v) for v in verdicts]
    )
    return 0 if all(v.has_spf for v in verdicts) else 1


def _parse_demand(text: str) -> VertexSet:
    tokens = [token.strip() for token in text.split(",") if token.strip()]
    try:
        return vertex_set(int(token) for token in tokens)
    except ValueError as e:
        raise ValueError(f"--demand must be comma-separated vertex indices, got {text!r}") from e


def cmd_factor(args: argparse.Namespace) -> int:
    """
    Print a factor for the demand set, or report that none exists.

    Returns:
        0 if a factor was found (and re-checked), 1 otherwise
    """
    G = read_graph(args)
    X = _parse_demand(args.demand)
    witness = find_parity_factor(G, X)

    if witness is None:
        record = {"demand": list(members(X)), "found": False, "edges": None, "degrees": None}
        text = [f"no factor with odd set X={format_set(X)}"]
        _write_records([record], args.output, text)
        return 1

    findings = check_factor(G, X, witness)
    if findings:
        raise RuntimeError(f"Factor search returned an invalid factor: {'; '.join(findings)}")

    record = {"demand": list(members(X)), "found": True, **witness.to_dict()}
    text = [f"{u} {v}" for u, v in witness.edges]
    _write_records([record], args.output, text)
    return 0


def _family_cubic(family: str, delta: int, n: int, s: int | None) -> CubicPoly:
    if family == "Gstar":
        return phi_Bstar(delta, n)
    if family == "G2":
        return phi_B2(s, delta, n)
    return phi_B3(s, delta, n)


def cmd_extremal(args: argparse.Namespace) -> int:
    """Build the family member; print the chosen artifact or the full record."""
    family = FAMILIES[args.family]
    s = None if family == "Gstar" else args.s
    instance = family_instance(family, args.delta, args.n, s=s)
    if instance.below_theorem_range:
        logger.warning(f"n={args.n} is below n >= 2*delta^2 = {2 * args.delta**2}")

    phi = _family_cubic(family, args.delta, args.n, s)
    rho = largest_root(phi)

    if args.emit == "graph":
        sys.stdout.write(serialize_graph(instance.graph, args.format).rstrip("\n") + "\n")
    elif args.emit == "phi":
        print(json.dumps(phi.as_list(), separators=(",", ":")))
    elif args.emit == "rho":
        print(format_number(rho))
    else:
        record = {
            "family": family,
            "params": instance.params.to_dict(),
            "order": instance.graph.order,
            "phi": phi.as_list(),
            "rho": rho,
            "below_theorem_range": instance.below_theorem_range,
        }
        print(json.dumps(record, separators=(",", ":")))
    return 0
