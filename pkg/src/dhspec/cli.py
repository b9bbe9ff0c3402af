"""Command line front end.

Reads .dhg hypergraph files, builds .ht tensor files, and runs the solver,
bound, and check machinery with machine-readable output.  Exit codes: 0
success, 1 input error, 2 solver non-convergence, 3 check failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
import time
from fractions import Fraction
from pathlib import Path
from random import Random

from . import __version__, builders, spectra
from .errors import DhspecError, NoConvergence, ParseError
from .hypergraph import (
    DirectedHypergraph,
    degree_profile,
    fingerprint,
    is_out_regular,
    is_strongly_connected,
    parse_dhg,
    rank_corank,
)
from .hypermatrix import (
    format_ht,
    is_weak_star_irreducible,
    is_weakly_irreducible,
    reducible_witness,
    symmetrize,
)

DEFAULT_SEED = spectra.DEFAULT_SEED

CHECK_NAMES = (
    "isospectral",
    "weak-star",
    "weak",
    "reducible",
    "strong-connectivity",
    "laplacian-theorem",
    "signless-theorem",
    "degree-lemma",
    "symmetrize-b",
    "subadditivity",
)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        code = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DhspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        elapsed = time.perf_counter() - started
        print(f"dhspec: {elapsed:.3f}s", file=sys.stderr)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dhspec",
        description="Directed hypergraph tensors, spectra, and connectivity.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="path to a .dhg hypergraph file")
    common.add_argument(
        "--format", choices=("json", "text"), default="json", dest="fmt"
    )
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--eps", type=float, default=1e-10)
    common.add_argument("--max-iter", type=int, default=100_000)
    common.add_argument("--restarts", type=int, default=20)
    common.add_argument("--resolution", type=int, default=8)
    common.add_argument("--cap-n", type=int, default=24)
    common.add_argument(
        "--allow-shared-unions",
        action="store_true",
        help="accept edges that cover the same vertex set",
    )

    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", parents=[common], help="emit a tensor in .ht format")
    p.add_argument("--tensor", choices=builders.TENSOR_KINDS, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser("degrees", parents=[common], help="degree profile and rank")
    p.set_defaults(handler=_cmd_degrees)

    p = sub.add_parser("bounds", parents=[common], help="row-sum bounds on a tensor")
    p.add_argument("--tensor", choices=builders.TENSOR_KINDS, default="out-adj")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser(
        "refined-bounds", parents=[common], help="degree-sequence bracket"
    )
    p.set_defaults(handler=_cmd_refined_bounds)

    p = sub.add_parser("rho", parents=[common], help="spectral radius estimate")
    p.add_argument("--tensor", choices=builders.TENSOR_KINDS, default="out-adj")
    p.set_defaults(handler=_cmd_rho)

    p = sub.add_parser(
        "zmax", parents=[common], help="largest Z-eigenvalue of the symmetrized tensor"
    )
    p.add_argument("--tensor", choices=builders.TENSOR_KINDS, default="out-adj")
    p.set_defaults(handler=_cmd_zmax)

    p = sub.add_parser("verify", parents=[common], help="verify an eigenpair claim")
    p.add_argument("--tensor", choices=builders.TENSOR_KINDS, default="out-adj")
    p.add_argument("--kind", choices=("H", "Z"), required=True)
    p.add_argument("--value", required=True, help="eigenvalue, e.g. 2 or 1/2 or 0.5")
    p.add_argument(
        "--vector", required=True, help="comma-separated components, e.g. 1,1/2,-3"
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "structural", parents=[common], help="structural zero eigenvectors"
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--support", help="comma-separated vertex ids")
    group.add_argument("--edge", type=int, help="edge index (0-based)")
    p.add_argument("--h", help="kept head vertices for --edge, comma-separated")
    p.add_argument("--coeffs", help="comma-separated coefficients, one per vertex")
    p.set_defaults(handler=_cmd_structural)

    p = sub.add_parser("check", parents=[common], help="run a named verification")
    p.add_argument("--name", choices=CHECK_NAMES, required=True)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser(
        "connectivity", parents=[common], help="connectivity and irreducibility"
    )
    p.set_defaults(handler=_cmd_connectivity)

    p = sub.add_parser("report", parents=[common], help="aggregate analysis report")
    p.set_defaults(handler=_cmd_report)
    return parser


# ---------------------------------------------------------------------------
# helpers


def _load(args) -> DirectedHypergraph:
    text = Path(args.input).read_text(encoding="utf-8")
    return parse_dhg(text, require_distinct_unions=not args.allow_shared_unions)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("DHSPEC_SEED")
    if env is not None:
        return int(env)
    return DEFAULT_SEED


def _options(args) -> spectra.SolverOptions:
    return spectra.SolverOptions(
        max_iterations=args.max_iter,
        tolerance=args.eps,
        restarts=args.restarts,
        seed=_seed(args),
    )


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (frozenset, set)):
        return sorted(_jsonable(o) for o in obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(o) for o in obj]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return _jsonable(dataclasses.asdict(obj))
    return obj


def _emit(args, hg: DirectedHypergraph, results: dict) -> None:
    payload = {
        "command": args.verb,
        "input": args.input,
        "fingerprint": fingerprint(hg),
        "version": __version__,
        "seed": _seed(args),
        "results": _jsonable(results),
    }
    if args.fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"# {args.verb} {args.input} (fingerprint {payload['fingerprint'][:12]})")
        _print_text(payload["results"])


def _print_text(results, indent=0):
    pad = "  " * indent
    if isinstance(results, dict):
        for key, value in results.items():
            if isinstance(value, (dict, list)):
                print(f"{pad}{key}:")
                _print_text(value, indent + 1)
            else:
                print(f"{pad}{key}: {value}")
    elif isinstance(results, list):
        for value in results:
            if isinstance(value, (dict, list)):
                _print_text(value, indent + 1)
            else:
                print(f"{pad}- {value}")
    else:
        print(f"{pad}{results}")


def _parse_scalar(token: str):
    token = token.strip()
    if "/" in token or "." not in token:
        try:
            return Fraction(token)
        except ValueError:
            pass
    return float(token)


def _parse_vector(text: str):
    return [_parse_scalar(tok) for tok in text.split(",") if tok.strip()]


# ---------------------------------------------------------------------------
# command handlers


def _cmd_build(args) -> int:
    hg = _load(args)
    built = builders.build(hg, args.tensor)
    text = format_ht(built.tensor)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {built.tensor.nnz} entries to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_degrees(args) -> int:
    hg = _load(args)
    profile = degree_profile(hg)
    results = {
        "out_degrees": list(profile.out_degrees),
        "in_degrees": list(profile.in_degrees),
        "max_out": profile.max_out,
        "min_out": profile.min_out,
        "max_in": profile.max_in,
        "min_in": profile.min_in,
        "out_regular": is_out_regular(hg),
    }
    if hg.edges:
        info = rank_corank(hg)
        results.update(rank=info.rank, corank=info.corank, uniform=info.uniform)
    _emit(args, hg, results)
    return 0


def _bounds_payload(report: spectra.BoundsReport) -> dict:
    return {
        "method": report.method,
        "lower": report.lower,
        "upper": report.upper,
        "lower_witness": report.lower_witness,
        "upper_witness": report.upper_witness,
        "record": spectra.bounds_record(report),
    }


def _cmd_bounds(args) -> int:
    hg = _load(args)
    tensor = builders.build(hg, args.tensor).tensor
    report = spectra.row_sum_bounds(tensor)
    _emit(args, hg, {"tensor": args.tensor, "bounds": _bounds_payload(report)})
    return 0


def _cmd_refined_bounds(args) -> int:
    hg = _load(args)
    report = spectra.refined_degree_bounds(hg)
    _emit(args, hg, {"bounds": _bounds_payload(report)})
    return 0


def _cmd_rho(args) -> int:
    hg = _load(args)
    tensor = builders.build(hg, args.tensor).tensor
    result = spectra.nqz_spectral_radius(tensor, _options(args))
    _emit(
        args,
        hg,
        {
            "tensor": args.tensor,
            "rho": result.value,
            "vector": list(result.vector),
            "diagnostics": result.diagnostics,
        },
    )
    return 0


def _cmd_zmax(args) -> int:
    hg = _load(args)
    tensor = builders.build(hg, args.tensor).tensor
    result = spectra.sshopm_max_z(symmetrize(tensor), _options(args))
    cert = result.certificate
    _emit(
        args,
        hg,
        {
            "tensor": args.tensor,
            "value": cert.value,
            "vector": list(cert.vector),
            "residual": cert.residual,
            "diagnostics": result.diagnostics,
        },
    )
    return 0


def _certificate_payload(cert: spectra.EigenCertificate) -> dict:
    return {
        "kind": cert.kind,
        "value": cert.value,
        "vector": list(cert.vector),
        "residual": cert.residual,
        "exact": cert.exact,
        "record": spectra.certificate_record(cert),
    }


def _cmd_verify(args) -> int:
    hg = _load(args)
    tensor = builders.build(hg, args.tensor).tensor
    value = _parse_scalar(args.value)
    vector = _parse_vector(args.vector)
    if args.kind == "H":
        cert = spectra.verify_h_eigenpair(tensor, value, vector)
    else:
        cert = spectra.verify_z_eigenpair(tensor, value, vector)
    _emit(args, hg, {"tensor": args.tensor, "certificate": _certificate_payload(cert)})
    return 0


def _cmd_structural(args) -> int:
    hg = _load(args)
    if args.support is not None:
        support = [int(tok) for tok in args.support.split(",") if tok.strip()]
        coeffs = _structural_coeffs(args, support)
        vec, cert = spectra.support_zero_vector(hg, coeffs)
    else:
        if args.h is None:
            print("error: --edge requires --h", file=sys.stderr)
            return 1
        kept = [int(tok) for tok in args.h.split(",") if tok.strip()]
        edge = hg.edges[args.edge]
        support = sorted(edge.tail | frozenset(kept))
        coeffs = _structural_coeffs(args, support)
        vec, cert = spectra.edge_zero_vector(hg, args.edge, kept, coeffs)
    collisions = spectra.colliding_edges(hg, vec.support)
    _emit(
        args,
        hg,
        {
            "support": sorted(vec.support),
            "vector": list(vec.vector),
            "certificate": _certificate_payload(cert),
            "collisions": collisions,
        },
    )
    return 0


def _structural_coeffs(args, support) -> dict:
    if args.coeffs:
        values = [_parse_scalar(tok) for tok in args.coeffs.split(",") if tok.strip()]
        if len(values) != len(support):
            raise ParseError(
                f"need {len(support)} coefficients, got {len(values)}"
            )
        return dict(zip(sorted(support), values))
    return {v: Fraction(pos + 1) for pos, v in enumerate(sorted(support))}


def _cmd_connectivity(args) -> int:
    hg = _load(args)
    connected, witness = is_strongly_connected(hg)
    results: dict = {"strongly_connected": connected, "witness": witness}
    if hg.edges:
        adjacency = builders.out_adjacency(hg)
        results["weakly_irreducible"] = is_weakly_irreducible(adjacency)
        results["weak_star_irreducible"] = is_weak_star_irreducible(adjacency)
        if hg.n <= args.cap_n:
            witness_set = reducible_witness(adjacency, cap=args.cap_n)
            results["reducible"] = witness_set is not None
            results["reducible_witness"] = witness_set
        else:
            results["reducible"] = None
            results["reducible_note"] = (
                f"subset search skipped: n={hg.n} exceeds cap {args.cap_n}"
            )
    _emit(args, hg, results)
    return 0


def _cmd_check(args) -> int:
    hg = _load(args)
    passed, details = _run_check(hg, args)
    _emit(args, hg, {"check": args.name, "passed": passed, "details": details})
    return 0 if passed else 3


def _run_check(hg: DirectedHypergraph, args) -> tuple[bool, dict]:
    name = args.name
    opts = _options(args)
    if name == "strong-connectivity":
        connected, witness = is_strongly_connected(hg)
        return connected, {"witness": witness}
    if name in ("weak", "weak-star", "reducible"):
        adjacency = builders.out_adjacency(hg)
        if name == "weak":
            return is_weakly_irreducible(adjacency), {}
        if name == "weak-star":
            return is_weak_star_irreducible(adjacency), {}
        witness_set = reducible_witness(adjacency, cap=args.cap_n)
        return witness_set is None, {"witness": witness_set}
    if name == "isospectral":
        ok = spectra.isospectral_identity_check(hg, rng=Random(_seed(args)))
        return ok, {"probes": 100}
    if name == "degree-lemma":
        profile = degree_profile(hg)
        out_ok = [
            Fraction(d) for d in profile.out_degrees
        ] == builders.out_adjacency(hg).row_sums()
        in_ok = [
            Fraction(d) for d in profile.in_degrees
        ] == builders.in_adjacency(hg).row_sums()
        details = {"out_row_sums": out_ok, "in_row_sums": in_ok}
        weighted_ok = True
        if hg.edges and rank_corank(hg).uniform:
            weighted_ok = builders.in_degree_identity_check(hg)
            details["weighted_in_degrees"] = weighted_ok
        return out_ok and in_ok and weighted_ok, details
    if name == "symmetrize-b":
        direct = builders.direct_symmetrized_adjacency(hg)
        averaged = symmetrize(builders.out_adjacency(hg))
        return direct == averaged, {"nnz": direct.nnz}
    if name == "laplacian-theorem":
        report = spectra.laplacian_theorem_checks(hg)
        uniform = bool(hg.edges) and rank_corank(hg).uniform
        passed = report.universal_passed and (
            not uniform or not report.basis_failures
        )
        return passed, {
            "ones_exact": report.ones_certificate.exact,
            "disk_bound_ok": report.disk_bound_ok,
            "basis_failures": list(report.basis_failures),
            "basis_skipped": report.basis_skipped_reason,
        }
    if name == "signless-theorem":
        report = spectra.signless_theorem_checks(hg)
        uniform = bool(hg.edges) and rank_corank(hg).uniform
        passed = report.bounds_match_degrees and (
            not uniform or not report.basis_failures
        )
        for cert in (
            report.common_vertex_certificate,
            report.out_regular_certificate,
        ):
            if cert is not None and not cert.exact:
                passed = False
        return passed, {
            "bounds_match_degrees": report.bounds_match_degrees,
            "basis_failures": list(report.basis_failures),
            "common_vertex": (
                None
                if report.common_vertex_certificate is None
                else report.common_vertex_certificate.exact
            ),
            "out_regular": (
                None
                if report.out_regular_certificate is None
                else report.out_regular_certificate.exact
            ),
        }
    if name == "subadditivity":
        if len(hg.edges) < 2:
            partition = [list(range(len(hg.edges)))]
        else:
            partition = [
                list(range(0, len(hg.edges), 2)),
                list(range(1, len(hg.edges), 2)),
            ]
        report = spectra.zmax_subadditivity_check(hg, partition, opts)
        return report.passed, {
            "whole": report.whole_value,
            "parts": list(report.part_values),
        }
    raise ValueError(f"unknown check {name!r}")  # pragma: no cover


def _cmd_report(args) -> int:
    hg = _load(args)
    profile = degree_profile(hg)
    results: dict = {
        "n": hg.n,
        "edges": len(hg.edges),
        "out_degrees": list(profile.out_degrees),
        "in_degrees": list(profile.in_degrees),
    }
    connected, witness = is_strongly_connected(hg)
    results["strongly_connected"] = connected
    results["witness"] = witness
    if hg.edges:
        info = rank_corank(hg)
        results.update(rank=info.rank, corank=info.corank, uniform=info.uniform)
        adjacency = builders.out_adjacency(hg)
        results["weakly_irreducible"] = is_weakly_irreducible(adjacency)
        results["weak_star_irreducible"] = is_weak_star_irreducible(adjacency)
        results["out_adjacency_bounds"] = _bounds_payload(
            spectra.row_sum_bounds(adjacency)
        )
        if hg.n >= 2:
            results["refined_bounds"] = _bounds_payload(
                spectra.refined_degree_bounds(hg)
            )
        lap_report = spectra.laplacian_theorem_checks(hg)
        results["laplacian"] = {
            "ones_exact": lap_report.ones_certificate.exact,
            "disk_bound_ok": lap_report.disk_bound_ok,
            "basis_failures": list(lap_report.basis_failures),
        }
        signless_report = spectra.signless_theorem_checks(hg)
        results["signless"] = {
            "bounds_match_degrees": signless_report.bounds_match_degrees,
            "basis_failures": list(signless_report.basis_failures),
        }
        grid_points = math.comb(args.resolution + hg.n - 1, hg.n - 1)
        if grid_points <= 20_000:
            probe = spectra.copositivity_probe(
                builders.total_laplacian(hg), resolution=args.resolution
            )
            results["laplacian_copositivity"] = {
                "resolution": args.resolution,
                "min_value": probe.min_value,
                "certificate": probe.certificate,
            }
        else:
            results["laplacian_copositivity"] = {
                "skipped": f"grid has {grid_points} points, over the 20000 cap"
            }
    _emit(args, hg, results)
    return 0


if __name__ == "__main__":
    sys.exit(main())
