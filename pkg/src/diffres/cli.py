"""Command-line surface.

Verbs: gen, sets, build, carra-ferro, certificate, det, lp-partition,
moves, oracle, check, export.  Every command is deterministic given its
flags and seed.  Exit codes: 0 success, 1 check failure, 2 usage error
(argparse's convention), 3 internal invariant violation.

An optional JSON config file supplies lifting/perturbation defaults:

    {"liftings": [7, -4, -5, 5, -9, 5, 6, 2, 1, 8, 4, 7],
     "delta": ["1/100", "1/100", "1/100"]}

Flags override the config.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .certificate import certify, unique_monomial_coefficient
from .checks import OPTIONAL_SUITES, SUITES, run_checks
from .determinant import (DetResult, common_zero_specialization, crt_combine,
                          det_modular, det_specialized, det_symbolic,
                          random_specialization)
from .diffsys import (SystemSpec, delta, generic_system, system_symbols,
                      ym_render)
from .errors import DiffresError
from .matrices import (build_carra_ferro, build_square_matrix, zero_columns)
from .monomials import (closed_form_sets, column_set, default_main_monomials,
                        partition_divisibility)
from .oracle import eliminate_iterated
from .sparse import (DEFAULT_LIFTINGS, DEFAULT_PERTURBATION, Liftings,
                     MOVES_TO_DIVISIBILITY_2_2, apply_moves,
                     build_sparse_matrix, grc_partition, lattice_points,
                     validate_liftings)
from .sympoly import Specialization
from .diffsys import YMonomial


def _spec(args) -> SystemSpec:
    return SystemSpec(args.d1, args.d2).validate()


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    with open(path) as fh:
        return json.load(fh)


def _liftings(args, config: dict) -> Liftings:
    values = args.liftings if args.liftings else config.get("liftings")
    if values is None:
        return DEFAULT_LIFTINGS
    values = [int(v) for v in values]
    if len(values) != 12:
        raise SystemExit(2)
    return Liftings(tuple(values[0:3]), tuple(values[3:6]),
                    tuple(values[6:9]), tuple(values[9:12]))


def _delta_vec(args, config: dict):
    values = args.delta if args.delta else config.get("delta")
    if values is None:
        return DEFAULT_PERTURBATION
    return tuple(Fraction(v) for v in values)


def _load_specialization(path: str, spec: SystemSpec,
                         include_fresh: bool = False) -> Specialization:
    with open(path) as fh:
        data = json.load(fh)
    universe = system_symbols(spec, include_fresh=include_fresh)
    return Specialization.from_json(data, universe)


def _emit(payload, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
        print(f"wrote {args.out}")
    else:
        print(json.dumps(payload, indent=2))


def _eq1_legend(degree: int, system: str) -> List[str]:
    """Positional coefficient names, highest degree then highest y1 first."""
    monos = [(k, l) for k in range(degree + 1) for l in range(degree - k + 1)]
    monos.sort(key=lambda kl: (-(kl[0] + kl[1]), -kl[1]))
    return [f"{system}{i} = {system}({k},{l})" for i, (k, l) in enumerate(monos)]


def cmd_gen(args) -> int:
    spec = _spec(args)
    f1, f2 = generic_system(spec)
    payload = {"spec": [spec.d1, spec.d2],
               "f1": f1.to_json(), "f2": f2.to_json(),
               "df1": delta(f1).to_json(), "df2": delta(f2).to_json()}
    if args.legend:
        payload["legend"] = (_eq1_legend(spec.d1, "a")
                             + _eq1_legend(spec.d2, "b"))
    _emit(payload, args)
    return 0


def cmd_sets(args) -> int:
    spec = _spec(args)
    E = column_set(spec)
    mm = default_main_monomials(spec)
    part = partition_divisibility(E, mm)
    m1, m2, t1, t2 = closed_form_sets(spec)
    payload = {
        "spec": [spec.d1, spec.d2], "D": spec.D, "N": spec.N,
        "columns": E.to_json(),
        "main_monomials": [ym_render(m) for m in mm.as_tuple()],
        "partition": part.to_json(),
        "multiplier_sets": [s.to_json() for s in (m1, m2, t1, t2)],
    }
    _emit(payload, args)
    return 0


def cmd_build(args) -> int:
    spec = _spec(args)
    matrix = build_square_matrix(spec)
    payload = matrix.to_json()
    payload["spec"] = [spec.d1, spec.d2]
    _emit(payload, args)
    return 0


def cmd_carra_ferro(args) -> int:
    matrix = build_carra_ferro(args.d1, args.d2, args.n, args.m)
    payload = matrix.to_json()
    payload["zero_columns"] = [ym_render(c) for c in zero_columns(matrix)]
    _emit(payload, args)
    return 0


def cmd_certificate(args) -> int:
    spec = _spec(args)
    transformed, cert = certify(spec)
    coefficient = unique_monomial_coefficient(transformed, cert)
    payload = {
        "spec": [spec.d1, spec.d2],
        "counts": list(cert.counts),
        "unique_monomial": " * ".join(
            f"{sym.render()}^{e}" for sym, e in cert.unique_monomial),
        "coefficient": str(coefficient),
        "sign": cert.sign,
        "steps": [{
            "symbol": step.symbol.render(),
            "block": step.block,
            "rows": len(step.deleted_rows),
            "columns": [ym_render(c) for c in step.deleted_cols],
        } for step in cert.steps],
    }
    _emit(payload, args)
    return 0


def cmd_det(args) -> int:
    spec = _spec(args)
    matrix = build_square_matrix(spec)
    if args.mode == "symbolic":
        value = det_symbolic(matrix, cap=args.cap)
        result = DetResult("Symbolic", value)
        payload = {"mode": result.mode, "value": value.render(),
                   "sign_convention": result.sign_convention}
    else:
        if args.spec_file:
            s = _load_specialization(args.spec_file, spec)
        elif args.common_zero:
            point = tuple(Fraction(v) for v in args.common_zero)
            s = common_zero_specialization(spec, point, rng_seed=args.seed)
        else:
            s = random_specialization(spec, args.seed)
        if args.mode == "specialized":
            value = det_specialized(matrix, s)
            payload = {"mode": "SpecializedExact", "value": str(value),
                       "sign_convention": DetResult("SpecializedExact", value).sign_convention}
        else:
            moduli = [int(p) for p in args.moduli]
            residues = det_modular(matrix, s, moduli)
            payload = {"mode": "Modular", "moduli": moduli,
                       "residues": residues,
                       "crt": str(crt_combine(residues, moduli))}
    _emit(payload, args)
    return 0


def cmd_lp_partition(args) -> int:
    spec = _spec(args)
    config = _load_config(args.config)
    lift = _liftings(args, config)
    delta_vec = _delta_vec(args, config)
    report = validate_liftings(lift)
    result = grc_partition(spec, lift, delta_vec)
    payload = {
        "spec": [spec.d1, spec.d2],
        "liftings": [list(v) for v in lift.as_tuple()],
        "delta": [str(d) for d in delta_vec],
        "lifting_report": {"passed": report.passed,
                           "violations": list(report.violations),
                           "degenerate": list(report.degenerate)},
        "partition": result.partition.to_json(),
        "points": [{
            "point": list(q),
            "grc": [a.case, a.vertex_index],
            "basis": a.basis_id,
            "lambda": [str(v) for v in a.lam],
        } for q, a in sorted(result.assignments.items())],
    }
    _emit(payload, args)
    return 0


def cmd_moves(args) -> int:
    spec = _spec(args)
    config = _load_config(args.config)
    lift = _liftings(args, config)
    delta_vec = _delta_vec(args, config)
    if args.moves_file:
        with open(args.moves_file) as fh:
            raw = json.load(fh)
        moves = [(YMonomial(*m["monomial"]), int(m["from"]), int(m["to"]))
                 for m in raw]
    else:
        moves = list(MOVES_TO_DIVISIBILITY_2_2)
    result = grc_partition(spec, lift, delta_vec)
    E = column_set(spec)
    mm = default_main_monomials(spec)
    moved = apply_moves(result.partition, moves, E, mm)
    matrix = build_sparse_matrix(moved, spec)
    payload = {"before": result.partition.to_json(),
               "after": moved.to_json(),
               "matrix_shape": [matrix.nrows, matrix.ncols]}
    _emit(payload, args)
    return 0


def cmd_oracle(args) -> int:
    spec = _spec(args)
    candidate = eliminate_iterated(spec)
    payload = {"spec": [spec.d1, spec.d2],
               "terms": len(candidate),
               "degree": candidate.total_degree(),
               "polynomial": candidate.render() if args.full else None}
    _emit(payload, args)
    return 0


def cmd_check(args) -> int:
    reports = run_checks(args.suite, seed=args.seed)
    for report in reports:
        print(report.line())
        if args.verbose and report.witness:
            print(f"       {json.dumps(report.witness, default=str)}")
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


def cmd_export(args) -> int:
    spec = _spec(args)
    if args.what == "matrix":
        matrix = build_square_matrix(spec)
    else:
        matrix = build_carra_ferro(spec.d1, spec.d2, 1, 1)
    if args.format == "json":
        _emit(matrix.to_json(), args)
        return 0
    if not args.spec_file:
        print("csv export needs --spec-file (numeric entries only)",
              file=sys.stderr)
        return 2
    s = _load_specialization(args.spec_file, spec)
    text = matrix.to_csv(s)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return 0


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--d1", type=int, required=True)
    parser.add_argument("--d2", type=int, required=True)
    parser.add_argument("--out", help="write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffres",
        description="Matrix constructions for first-order generic "
                    "differential systems, with exact verification tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print the generic system and derivatives")
    _add_spec_args(p)
    p.add_argument("--legend", action="store_true",
                   help="positional coefficient names for the degree shown")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("sets", help="column set, main monomials, partition")
    _add_spec_args(p)
    p.set_defaults(fn=cmd_sets)

    p = sub.add_parser("build", help="build the square matrix")
    _add_spec_args(p)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("carra-ferro", help="build the rectangular matrix")
    _add_spec_args(p)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(fn=cmd_carra_ferro)

    p = sub.add_parser("certificate",
                       help="run the nonsingularity certificate")
    _add_spec_args(p)
    p.set_defaults(fn=cmd_certificate)

    p = sub.add_parser("det", help="determinant in one of three exact modes")
    _add_spec_args(p)
    p.add_argument("--mode", choices=["symbolic", "specialized", "modular"],
                   default="specialized")
    p.add_argument("--cap", type=int, default=8,
                   help="size cap for the symbolic mode")
    p.add_argument("--spec-file", help="JSON symbol-to-rational map")
    p.add_argument("--common-zero", nargs=3, metavar=("Y", "Y1", "Y2"),
                   help="build a common-zero specialization at this point")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--moduli", nargs="+", default=["2147483647", "2147483629"])
    p.set_defaults(fn=cmd_det)

    p = sub.add_parser("lp-partition",
                       help="partition the columns via exact LPs")
    _add_spec_args(p)
    p.add_argument("--liftings", nargs=12, type=int, metavar="L")
    p.add_argument("--delta", nargs=3, metavar="D",
                   help="perturbation components, exact rationals")
    p.add_argument("--config", help="JSON file with lifting/delta defaults")
    p.set_defaults(fn=cmd_lp_partition)

    p = sub.add_parser("moves", help="apply partition moves and rebuild")
    _add_spec_args(p)
    p.add_argument("--moves-file",
                   help='JSON list of {"monomial": [e,e,e], "from": i, "to": j}')
    p.add_argument("--liftings", nargs=12, type=int, metavar="L")
    p.add_argument("--delta", nargs=3, metavar="D")
    p.add_argument("--config")
    p.set_defaults(fn=cmd_moves)

    p = sub.add_parser("oracle", help="iterated-resultant elimination")
    _add_spec_args(p)
    p.add_argument("--full", action="store_true",
                   help="include the full polynomial text")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--suite", default="all",
                   choices=["all"] + sorted(SUITES) + sorted(OPTIONAL_SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("export", help="JSON or CSV matrix export")
    _add_spec_args(p)
    p.add_argument("--what", choices=["matrix", "carra-ferro"],
                   default="matrix")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--spec-file", help="specialization for numeric CSV")
    p.set_defaults(fn=cmd_export)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DiffresError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
