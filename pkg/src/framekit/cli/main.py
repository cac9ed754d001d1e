"""framekit command line: construct, analyze, verify, fusion, dual, scale, naimark.

Exit codes: 0 when the command (or check) succeeds, 1 when a verification
check fails, 2 on usage, parse, or input contract errors.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .. import construct, frames, fusion, numerics, verify
from ..tolerances import DEFAULT_TOL
from . import documents
from .documents import DocumentError


def _tolerance(args):
    tol = getattr(args, "tol", None)
    if tol is None:
        return DEFAULT_TOL
    if tol <= 0:
        raise DocumentError(f"--tol must be positive, got {tol}")
    return DEFAULT_TOL.with_eq_tol(tol)


def _parse_floats(text: str):
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise DocumentError(f"expected a comma separated number list, got {text!r}") from exc
    if not values:
        raise DocumentError(f"expected a comma separated number list, got {text!r}")
    return values


def _resolve_seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("FRAMEKIT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise DocumentError(f"FRAMEKIT_SEED must be an integer, got {env!r}") from exc
    return 0


def _emit(doc, out) -> None:
    if out:
        documents.save_document(doc, out)
    else:
        sys.stdout.write(documents.dumps_document(doc))


def _cmd_construct(args, tol) -> int:
    kind = args.kind
    if kind == "tetris":
        f = construct.spectral_tetris(args.dim, args.count, tol)
        meta = {"generator": "tetris", "dim": args.dim, "count": args.count}
    elif kind == "simplex":
        f = construct.simplex_frame(args.dim, tol)
        meta = {"generator": "simplex", "dim": args.dim}
    elif kind == "random-parseval":
        seed = _resolve_seed(args)
        f = construct.random_parseval(args.dim, args.count, seed, args.field, tol)
        meta = {
            "generator": "random-parseval",
            "dim": args.dim,
            "count": args.count,
            "seed": seed,
            "field": args.field,
        }
    elif kind == "spectrum-norms":
        spectrum = _parse_floats(args.spectrum)
        norms_squared = _parse_floats(args.norms_squared)
        f = construct.frame_with_spectrum_and_norms(spectrum, norms_squared, args.field, tol)
        meta = {"generator": "spectrum-norms", "spectrum": spectrum, "norms_squared": norms_squared}
    elif kind == "equal-norm-op":
        spectrum = _parse_floats(args.spectrum)
        f = construct.equal_norm_with_operator(spectrum, args.count, args.field, tol)
        meta = {"generator": "equal-norm-op", "spectrum": spectrum, "count": args.count}
    elif kind == "tight-complete":
        base = documents.load_frame(args.frame)
        f = construct.tight_completion(base, tol)
        meta = {"generator": "tight-complete", "source": str(args.frame), "added": f.count - base.count}
    else:  # pragma: no cover - argparse restricts choices
        raise DocumentError(f"unknown construction {kind!r}")
    _emit(documents.frame_to_document(f, meta), args.out)
    return 0


def _flag_map(report) -> dict:
    return {
        "is_frame": report.is_frame,
        "is_tight": report.is_tight,
        "is_parseval": report.is_parseval,
        "is_equal_norm": report.is_equal_norm,
        "is_unit_norm": report.is_unit_norm,
        "is_equiangular": report.is_equiangular,
        "equiangular_lines": report.equiangular_lines,
        "is_exact": report.is_exact,
    }


def _report_document(f, tol) -> dict:
    report = verify.frame_report(f, tol)
    audits = verify.constants_audit(f, tol)
    duals = {}
    if report.is_frame:
        dual = frames.canonical_dual(f, tol)
        _, distance = frames.nearest_parseval(f, tol)
        duals = {
            "canonical_dual_norms": [float(x) for x in np.linalg.norm(dual.vectors, axis=1)],
            "is_dual_pair": frames.is_dual_pair(f, dual, tol),
            "distance_to_nearest_parseval": distance,
        }
    return {
        "dim": f.dim,
        "count": f.count,
        "field": f.field,
        "bounds": {"lower": report.bounds.lower, "upper": report.bounds.upper},
        "eigenvalues": [float(x) for x in report.eigenvalues],
        "norms": [float(x) for x in report.norms],
        "redundancy": report.redundancy,
        "coherence": report.coherence,
        "flags": _flag_map(report),
        "constants_audit": [
            {
                "name": a.name,
                "applicable": a.applicable,
                "lhs": a.lhs,
                "rhs": a.rhs,
                "passed": a.passed,
            }
            for a in audits
        ],
        "duals": duals,
        "tolerances": {
            "eq_tol": tol.eq_tol,
            "eig_offdiag_tol": tol.eig_offdiag_tol,
            "rank_tol": tol.rank_tol,
        },
    }


def _cmd_analyze(args, tol) -> int:
    f = documents.load_frame(args.frame)
    _emit(_report_document(f, tol), args.report)
    return 0


def _exactness_witness(f, tol):
    s = frames.frame_operator(f)
    for i in range(f.count):
        sub = s - np.outer(f.vectors[i], f.vectors[i].conj())
        values, _ = numerics.hermitian_eig((sub + sub.conj().T) / 2.0, tol)
        top = max(float(values[0]), 0.0)
        if top > 0.0 and float(values[-1]) > tol.rank_tol * top:
            return i
    return None


def _cmd_verify(args, tol) -> int:
    f = documents.load_frame(args.frame)
    check = args.check
    report = verify.frame_report(f, tol)
    lo, hi = report.bounds

    if check == "frame":
        passed = report.is_frame
        witness = f"bounds=({lo:.12g}, {hi:.12g})"
    elif check == "parseval":
        passed = report.is_parseval
        witness = f"bounds=({lo:.12g}, {hi:.12g})"
    elif check == "tight":
        passed = report.is_tight
        witness = f"bounds=({lo:.12g}, {hi:.12g})"
    elif check == "equal-norm":
        passed = report.is_equal_norm
        witness = f"norms in [{report.norms.min():.12g}, {report.norms.max():.12g}]"
    elif check == "equiangular":
        passed = report.is_equiangular
        witness = (
            f"unit_norm={report.is_unit_norm}, coherence={report.coherence:.12g}"
        )
    elif check == "exact":
        passed = report.is_exact
        index = None if passed or not report.is_frame else _exactness_witness(f, tol)
        witness = (
            "every deletion breaks spanning"
            if passed
            else (f"vector {index} can be removed" if index is not None else "not a frame")
        )
    elif check == "welch-equality":
        bound = verify.welch_bound(f.count, f.dim)
        passed = verify.welch_equality_check(f, tol)
        witness = f"coherence={report.coherence:.12g}, welch_bound={bound:.12g}"
    elif check in ("complement-property", "phase-retrieval"):
        if check == "phase-retrieval" and f.field == "complex":
            passed = False
            witness = "criterion applies to real frames"
            print(f"FAIL {check}: {witness}")
            return 2
        passed, subset = verify._complement_search(f, args.limit, tol)
        witness = (
            "every split leaves a spanning side"
            if passed
            else f"split {list(subset)} vs complement leaves no spanning side"
        )
    elif check == "scaling":
        solution = construct.scale_to_parseval(f, tol)
        passed = solution.feasible
        witness = f"residual={solution.residual:.6g}, scales={[round(float(s), 9) for s in solution.scales]}"
    elif check == "dual-of":
        if not args.other:
            raise DocumentError("--check dual-of needs --other FILE")
        other = documents.load_frame(args.other)
        passed = frames.is_dual_pair(f, other, tol)
        prod = frames.synthesis_matrix(f) @ other.vectors.conj()
        witness = f"|synthesis.analysis - id| = {np.linalg.norm(prod - np.eye(f.dim)):.6g}"
    else:  # pragma: no cover - argparse restricts choices
        raise DocumentError(f"unknown check {check!r}")

    print(f"{'PASS' if passed else 'FAIL'} {check}: {witness}")
    return 0 if passed else 1


def _cmd_fusion(args, tol) -> int:
    ff = documents.fusion_from_document(documents.load_document(args.doc))
    if args.op == "bounds":
        lo, hi = fusion.fusion_bounds(ff, tol)
        _emit({"lower": lo, "upper": hi}, args.out)
        return 0
    if args.op == "operator":
        _emit(documents.matrix_to_document(fusion.fusion_operator(ff)), args.out)
        return 0
    if args.op == "redundancy":
        value = fusion.tight_redundancy(ff, tol)
        _emit({"redundancy": value}, args.out)
        return 0
    if args.op == "local-global":
        report = fusion.local_global_check(ff, tol)
        doc = {
            "local_lower": report.local_lower,
            "local_upper": report.local_upper,
            "fusion_lower": report.fusion_lower,
            "fusion_upper": report.fusion_upper,
            "flattened_lower": report.flattened_lower,
            "flattened_upper": report.flattened_upper,
            "forward_lower_ok": report.forward_lower_ok,
            "forward_upper_ok": report.forward_upper_ok,
            "converse_lower_ok": report.converse_lower_ok,
            "converse_upper_ok": report.converse_upper_ok,
            "consistent": report.consistent,
        }
        _emit(doc, args.out)
        return 0 if report.consistent else 1
    raise DocumentError(f"unknown fusion op {args.op!r}")  # pragma: no cover


def _cmd_dual(args, tol) -> int:
    f = documents.load_frame(args.frame)
    dual = frames.canonical_dual(f, tol)
    _emit(documents.frame_to_document(dual, {"generator": "canonical-dual", "source": str(args.frame)}), args.out)
    return 0


def _cmd_scale(args, tol) -> int:
    f = documents.load_frame(args.frame)
    solution = construct.scale_to_parseval(f, tol)
    if not solution.feasible:
        print(f"FAIL scaling: residual={solution.residual:.6g}")
        return 1
    scaled = frames.Frame(f.vectors * solution.scales[:, None])
    meta = {
        "generator": "scale-to-parseval",
        "scales": [float(s) for s in solution.scales],
        "residual": solution.residual,
    }
    _emit(documents.frame_to_document(scaled, meta), args.out)
    return 0


def _cmd_naimark(args, tol) -> int:
    f = documents.load_frame(args.frame)
    unitary = frames.naimark_complete(f, tol)
    _emit(documents.matrix_to_document(unitary, {"generator": "naimark-completion"}), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framekit",
        description="finite frame construction and verification toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tol_parent = argparse.ArgumentParser(add_help=False)
    tol_parent.add_argument("--tol", type=float, help="override the relative equality tolerance")
    out_parent = argparse.ArgumentParser(add_help=False)
    out_parent.add_argument("--out", help="write the result here instead of stdout")

    cons = sub.add_parser("construct", help="build a frame")
    kinds = cons.add_subparsers(dest="kind", required=True)

    tetris = kinds.add_parser("tetris", parents=[tol_parent, out_parent])
    tetris.add_argument("--dim", type=int, required=True)
    tetris.add_argument("--count", type=int, required=True)

    simplex = kinds.add_parser("simplex", parents=[tol_parent, out_parent])
    simplex.add_argument("--dim", type=int, required=True)

    randp = kinds.add_parser("random-parseval", parents=[tol_parent, out_parent])
    randp.add_argument("--dim", type=int, required=True)
    randp.add_argument("--count", type=int, required=True)
    randp.add_argument("--seed", type=int, help="defaults to FRAMEKIT_SEED, then 0")
    randp.add_argument("--field", choices=("real", "complex"), default="real")

    spn = kinds.add_parser("spectrum-norms", parents=[tol_parent, out_parent])
    spn.add_argument("--spectrum", required=True, help="comma separated, descending")
    spn.add_argument("--norms-squared", required=True, help="comma separated, descending")
    spn.add_argument("--field", choices=("real", "complex"), default="real")

    eno = kinds.add_parser("equal-norm-op", parents=[tol_parent, out_parent])
    eno.add_argument("--spectrum", required=True, help="comma separated, descending")
    eno.add_argument("--count", type=int, required=True)
    eno.add_argument("--field", choices=("real", "complex"), default="real")

    tc = kinds.add_parser("tight-complete", parents=[tol_parent, out_parent])
    tc.add_argument("--frame", required=True, help="frame document to complete")

    for kind_parser in (tetris, simplex, randp, spn, eno, tc):
        kind_parser.set_defaults(handler=_cmd_construct)

    analyze = sub.add_parser("analyze", parents=[tol_parent], help="full diagnostic report")
    analyze.add_argument("frame")
    analyze.add_argument("--report", help="write the report here instead of stdout")
    analyze.set_defaults(handler=_cmd_analyze)

    ver = sub.add_parser("verify", parents=[tol_parent], help="run one named check")
    ver.add_argument("frame")
    ver.add_argument(
        "--check",
        required=True,
        choices=(
            "frame",
            "parseval",
            "tight",
            "equal-norm",
            "equiangular",
            "exact",
            "welch-equality",
            "complement-property",
            "phase-retrieval",
            "dual-of",
            "scaling",
        ),
    )
    ver.add_argument("--other", help="second frame for dual-of")
    ver.add_argument("--limit", type=int, default=22, help="subset search cap")
    ver.set_defaults(handler=_cmd_verify)

    fus = sub.add_parser("fusion", parents=[tol_parent, out_parent], help="fusion frame operations")
    fus.add_argument("doc")
    fus.add_argument("--op", required=True, choices=("bounds", "operator", "redundancy", "local-global"))
    fus.set_defaults(handler=_cmd_fusion)

    dual = sub.add_parser("dual", parents=[tol_parent, out_parent], help="canonical dual frame")
    dual.add_argument("frame")
    dual.set_defaults(handler=_cmd_dual)

    scale = sub.add_parser("scale", parents=[tol_parent, out_parent], help="scale to a Parseval frame")
    scale.add_argument("frame")
    scale.set_defaults(handler=_cmd_scale)

    naimark = sub.add_parser("naimark", parents=[tol_parent, out_parent], help="unitary completion of a Parseval frame")
    naimark.add_argument("frame")
    naimark.set_defaults(handler=_cmd_naimark)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        tol = _tolerance(args)
        return args.handler(args, tol)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
