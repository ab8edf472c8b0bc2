#!/usr/bin/env python
"""
Main entry point for momentcone.

Results go to standard output, logs and error JSON to standard error.
Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from momentcone.config import settings
from momentcone.exceptions import MomentConeError

logger = logging.getLogger("momentcone")

_SHORTHAND = {"affine": "affine-monomial", "projective": "projective-monomial", "gapped": "gapped-1d"}


class UsageError(Exception):
    """Input that could not be read; reported with exit code 2."""


# Input readers
def _read_text(value: str) -> str:
    if os.path.isfile(value):
        with open(value) as f:
            return f.read()
    return value


def _load_model(model: type, value: str) -> BaseModel:
    try:
        return model.model_validate_json(_read_text(value))
    except ValidationError as e:
        raise UsageError(f"cannot read {model.__name__} from {value!r}: {e}") from None


def _system(args):
    """--system: a JSON file, inline JSON, a shorthand like affine:2:4 or gapped:0,1,2,6, or a catalog name."""
    from momentcone.api.schemas import SystemSpec

    if not args.system:
        raise UsageError("--system is required")
    text = _read_text(args.system).strip()
    if text.startswith("{"):
        return _load_model(SystemSpec, text).to_domain()
    kind, _, rest = text.partition(":")
    if kind in _SHORTHAND:
        parts = rest.split(":")
        try:
            if kind == "gapped":
                return SystemSpec(kind=_SHORTHAND[kind], exponents=[int(e) for e in rest.split(",")]).to_domain()
            order = parts[2] if len(parts) > 2 else "grlex"
            return SystemSpec(kind=_SHORTHAND[kind], n=int(parts[0]), d=int(parts[1]), order=order).to_domain()
        except (ValueError, IndexError):
            raise UsageError(f"malformed system shorthand {text!r}") from None
    return SystemSpec(kind="catalog", name=text).to_domain()


def _measure(args, system):
    from momentcone.api.schemas import MeasureSpec

    if not args.measure:
        raise UsageError("--measure is required")
    return _load_model(MeasureSpec, args.measure).to_domain(system.chart)


def _sequence(args, system):
    """--sequence: a JSON file, inline JSON, or comma-separated exact values."""
    from momentcone.api.schemas import SequenceSpec

    if not args.sequence:
        raise UsageError("--sequence is required")
    text = _read_text(args.sequence).strip()
    if text.startswith("{"):
        return _load_model(SequenceSpec, text).to_domain(system)
    return SequenceSpec(values=[v.strip() for v in text.split(",")]).to_domain(system)


def _ground(args, system):
    from momentcone.api.schemas import GroundSetSpec

    if not args.ground:
        raise UsageError("--ground is required")
    text = _read_text(args.ground).strip()
    if text.startswith("{"):
        return _load_model(GroundSetSpec, text).to_domain(system.chart)
    return GroundSetSpec(points=_coordinate_rows(text)).to_domain(system.chart)


def _coordinate_rows(text: str) -> List[List[str]]:
    """Points as "1,0,0;0,1,0"."""
    return [[c.strip() for c in row.split(",")] for row in text.split(";") if row.strip()]


def _points(text: Optional[str], system) -> Optional[list]:
    from momentcone.basis.points import Point

    if not text:
        return None
    return [Point(row, system.chart) for row in _coordinate_rows(text)]


def _require(args, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


# Output
def _scalar(value: Any, approx: bool) -> str:
    text = str(value)
    if approx and ("/" in text or "sqrt" in text):
        return f"{text} (~{float(value):.6g})"
    return text


def _point(point) -> str:
    return str(point)


def _emit(args, payload: Dict[str, Any], lines: Sequence[str], csv: Optional[Sequence[str]] = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif args.format == "csv" and csv is not None:
        print("\n".join(csv))
    else:
        print("\n".join(lines))


def _dump(model: BaseModel) -> Dict[str, Any]:
    return model.model_dump(mode="json", exclude_none=True)


# Commands
def cmd_basis(args) -> None:
    system = _system(args)
    payload = {"name": system.name, "size": system.size, "chart": system.chart.value, "labels": list(system.labels)}
    _emit(args, payload, [f"{system!r}", " ".join(system.labels)], list(system.labels))


def cmd_moments(args) -> None:
    from momentcone.api.schemas import exact
    from momentcone.momentmap.moment_map import moments

    system = _system(args)
    s = moments(system, _measure(args, system))
    values = exact(s.values)
    lines = [f"{label}: {_scalar(v, args.float)}" for label, v in zip(system.labels, s.values)]
    _emit(args, {"values": values}, lines, [",".join(values)])


def cmd_jacobian(args) -> None:
    from momentcone.api.schemas import exact
    from momentcone.exactla.matrix import rank
    from momentcone.momentmap.moment_map import classify, jacobian

    system = _system(args)
    measure = _measure(args, system)
    matrix = jacobian(system, measure)
    rows = [exact(row) for row in matrix.tolist()]
    r = rank(matrix)
    regularity = classify(system, measure).value
    lines = [" ".join(row) for row in rows] + [f"rank {r} of {system.size}: {regularity}"]
    _emit(args, {"rank": r, "regularity": regularity, "rows": rows}, lines, [",".join(row) for row in rows])


def cmd_na(args) -> None:
    from momentcone.api.schemas import MeasureSpec
    from momentcone.basis.system import affine_system
    from momentcone.momentmap.moment_map import estimate_NA, na_formula

    if args.system:
        system = _system(args)
        formula = None
    else:
        _require(args, "n", "d")
        system = affine_system(args.n, args.d)
        formula = na_formula(args.n, args.d)
    payload: Dict[str, Any] = {"system": system.name, "m": system.size, "formula": formula}
    lines = [f"{system!r}"]
    if formula is not None:
        lines.append(f"N_A by formula: {formula}")
    if args.estimate or formula is None:
        found = estimate_NA(system, seed=args.seed, max_trials=args.trials)
        payload.update(estimate=found.count, trials=found.trials, witness=_dump(MeasureSpec.from_domain(found.witness)))
        lines.append(f"N_A <= {found.count} (witness after {found.trials} trials)")
        lines.extend(f"  {_point(p)}" for p in found.witness.points)
    _emit(args, payload, lines)


def _measure_output(args, measure, title: str) -> None:
    from momentcone.api.schemas import MeasureSpec

    lines = [f"{title}: {len(measure)} atoms"]
    lines.extend(f"  {_scalar(c, args.float)} at {_point(p)}" for c, p in measure)
    csv = [f"{c}," + ",".join(str(x) for x in p.coordinates) for c, p in measure]
    _emit(args, _dump(MeasureSpec.from_domain(measure)), lines, csv)


def cmd_reduce(args) -> None:
    from momentcone.decompose.richter import reduce

    system = _system(args)
    _measure_output(args, reduce(system, _measure(args, system)), "reduced measure")


def cmd_signed(args) -> None:
    from momentcone.decompose.richter import signed_decompose

    system = _system(args)
    s = _sequence(args, system)
    _measure_output(args, signed_decompose(system, s, _ground(args, system)), "signed measure")


def cmd_member(args) -> None:
    from momentcone.api.schemas import CertificateModel
    from momentcone.decompose.membership import membership

    system = _system(args)
    s = _sequence(args, system)
    certificate = membership(system, _ground(args, system), s)
    lines = [certificate.verdict.value]
    if certificate.measure is not None:
        lines.extend(f"  {_scalar(c, args.float)} at {_point(p)}" for c, p in certificate.measure)
    if certificate.separator is not None:
        lines.append("separator: " + " ".join(str(c) for c in certificate.separator))
    _emit(args, _dump(CertificateModel.from_domain(certificate)), lines)


def cmd_min_atoms(args) -> None:
    from momentcone.decompose.membership import minimal_support

    system = _system(args)
    s = _sequence(args, system)
    ground = _ground(args, system)
    _measure_output(args, minimal_support(system, ground, s), "minimal representing measure")


def _point_lines(title: str, points) -> List[str]:
    return [f"{title}: {len(points)} points"] + [f"  {_point(p)}" for p in points]


def cmd_face(args) -> None:
    from momentcone.api.schemas import FaceReportModel
    from momentcone.facial.faces import face_report

    system = _system(args)
    s = _sequence(args, system)
    report = face_report(system, _ground(args, system), s, tangent_at=_points(args.tangent, system))
    lines = _point_lines("W(s)", report.atoms) + _point_lines("V(s)", report.zeros)
    lines.append(f"D_s = {report.face_dimension}, gamma_s = {report.gamma_dimension}")
    lines.append("p: " + " ".join(str(c) for c in report.functional))
    _emit(args, _dump(FaceReportModel.from_domain(report)), lines)


def cmd_wset(args) -> None:
    from momentcone.api.schemas import point_rows
    from momentcone.facial.faces import atom_set

    system = _system(args)
    s = _sequence(args, system)
    atoms = atom_set(system, _ground(args, system), s)
    _emit(args, {"points": point_rows(atoms)}, _point_lines("W(s)", atoms))


def cmd_vset(args) -> None:
    from momentcone.api.schemas import ZeroSetModel
    from momentcone.facial.faces import v_set

    system = _system(args)
    s = _sequence(args, system)
    zeros = v_set(system, _ground(args, system), s, tangent_at=_points(args.tangent, system))
    lines = _point_lines("V(s)", zeros.points) + ["p: " + " ".join(str(c) for c in zeros.functional)]
    _emit(args, _dump(ZeroSetModel.from_domain(zeros)), lines)


def cmd_core(args) -> None:
    from momentcone.api.schemas import CoreVarietyModel
    from momentcone.facial.faces import core_variety

    system = _system(args)
    functional = _sequence(args, system)
    core = core_variety(system, _ground(args, system), functional.values, tangent_at=_points(args.tangent, system))
    lines = [f"V_{j}: {len(step)} points" for j, step in enumerate(core.trace)]
    lines += _point_lines(f"core variety after {core.iterations} iterations", core.points)
    _emit(args, _dump(CoreVarietyModel.from_domain(core)), lines)


def cmd_maxmass(args) -> None:
    from momentcone.api.schemas import MaxMassModel
    from momentcone.basis.points import Point
    from momentcone.facial.max_mass import max_mass

    system = _system(args)
    s = _sequence(args, system)
    _require(args, "point")
    x = Point([c.strip() for c in args.point.split(",")], system.chart)
    report = max_mass(system, _ground(args, system), s, x)
    lines = [
        f"rho = {_scalar(report.rho, args.float)}",
        f"kappa = {_scalar(report.kappa, args.float)}",
        "p: " + " ".join(str(c) for c in report.functional),
        "residual: " + " ".join(str(c) for c in report.residual.values),
        f"x outside W(s'): {report.outside_atoms}, outside V(s'): {report.outside_zeros}",
    ]
    _emit(args, _dump(MaxMassModel.from_domain(report)), lines)


def cmd_psp(args) -> None:
    from momentcone.api.schemas import SeparationModel
    from momentcone.facial.max_mass import psp_check

    system = _system(args)
    points = _points(args.points, system)
    if not points:
        raise UsageError("--points is required")
    result = psp_check(system, _ground(args, system), points)
    if result.feasible:
        lines = [f"positive separation holds for {len(points)} points"]
    else:
        lines = [f"no separating function for point {result.failed_index}: {_point(points[result.failed_index])}"]
    _emit(args, _dump(SeparationModel.from_domain(result)), lines)


def cmd_table1(args) -> None:
    from momentcone.catalog.harris import increments, table1

    ranks = table1()
    steps = increments(ranks)
    lines = [
        "k    " + " ".join(f"{k:>2}" for k in range(1, len(ranks) + 1)),
        "rank " + " ".join(f"{r:>2}" for r in ranks),
        "inc  " + " ".join(f"{i:>2}" for i in steps),
    ]
    csv = ["k,rank,increment"] + [f"{k},{r},{i}" for k, (r, i) in enumerate(zip(ranks, steps), 1)]
    _emit(args, {"ranks": ranks, "increments": steps}, lines, csv)


def cmd_table2(args) -> None:
    from momentcone.api.schemas import TableRowModel
    from momentcone.catalog.grids import observed_trends, table2, table2_grid

    if args.n is not None and args.d is not None:
        rows = [table2(args.n, args.d, primed=args.primed, budget=args.budget, method=args.method)]
    elif args.n is None and args.d is None:
        rows = table2_grid(primed=args.primed, budget=args.budget, method=args.method)
    else:
        raise UsageError("give both --n and --d, or neither for the whole table")
    header = "n,d,m,Z,r',r'/m,r'/Z" if args.primed else "n,d,m,Z,r,r/m,r/Z"
    csv = [header] + [row.csv() for row in rows]
    payload: Dict[str, Any] = {"rows": [_dump(TableRowModel.from_domain(row)) for row in rows]}
    lines = list(csv)
    if args.trends:
        trends = observed_trends(rows)
        payload["trends"] = [{"name": t.name, "holds": t.holds, "comparisons": t.comparisons} for t in trends]
        lines += [f"{t.name}: {'holds' if t.holds else 'fails'} ({t.comparisons} comparisons)" for t in trends]
    _emit(args, payload, lines, csv)


def cmd_harris(args) -> None:
    from momentcone.api.schemas import point_rows
    from momentcone.catalog.harris import harris

    h = harris()
    terms = h.terms()
    vanishes = h.vanishes_on_zeros()
    payload = {
        "terms": [[label, str(c)] for label, c in terms],
        "zeros": point_rows(h.zeros),
        "vanishes_on_zeros": vanishes,
    }
    lines = [" ".join(f"{c}*{label}" for label, c in terms)]
    lines += _point_lines("zeros", h.zeros)
    lines.append(f"h vanishes on all zeros: {vanishes}")
    if args.sample:
        positive = h.sample_nonnegative(count=args.sample, seed=args.seed)
        payload["sampled_nonnegative"] = positive
        lines.append(f"nonnegative at {args.sample} random points: {positive}")
    _emit(args, payload, lines)


def cmd_examples(args) -> None:
    from momentcone.api.schemas import exact, point_rows
    from momentcone.catalog.examples import example_systems

    payload = []
    lines = []
    for example in example_systems():
        r = example.jacobian_rank()
        payload.append({
            "name": example.name,
            "system": example.system.name,
            "points": point_rows(example.points),
            "functional": exact(example.functional) if example.functional is not None else None,
            "rank": r,
            "cara": example.cara,
            "na": example.na,
            "cara_equals_na": example.cara_equals_na,
            "interior_iff_regular": example.interior_iff_regular,
        })
        lines.append(
            f"{example.name}: C_A = {example.cara}, N_A = {example.na}, rank {r} of {example.system.size}; "
            f"C_A = N_A: {example.cara_equals_na}, interior iff regular: {example.interior_iff_regular}"
        )
    _emit(args, {"examples": payload}, lines)


def cmd_bounds(args) -> None:
    from momentcone.catalog.bounds import cara_bounds

    _require(args, "n", "d")
    found = cara_bounds(args.n, args.d, args.space)
    entries = [{"kind": b.kind, "value": str(b.value), "source": b.source} for b in found.entries]
    payload = {
        "n": found.n, "degree": found.degree, "space": found.space.value, "m": found.m,
        "lower": found.lower, "upper": found.upper, "sard_lower": found.sard_lower,
        "signed_upper": found.signed_upper, "entries": entries,
    }
    lines = [f"{found.lower} <= C_A <= {found.upper} (m = {found.m}, signed <= {found.signed_upper})"]
    lines += [f"  {e['kind']} {e['value']}: {e['source']}" for e in entries]
    _emit(args, payload, lines)


def cmd_pythagoras(args) -> None:
    from momentcone.catalog.bounds import pythagoras_lower, square_dimension

    system = _system(args)
    dim, bound = square_dimension(system), pythagoras_lower(system)
    payload = {"size": system.size, "square_dimension": dim, "lower": bound}
    _emit(args, payload, [f"|A| = {system.size}, dim lin A^2 = {dim}, Pythagoras number >= {bound}"])


def cmd_flatext(args) -> None:
    from momentcone.catalog.bounds import flat_extension_counts

    _require(args, "n", "d", "atoms")
    counts = flat_extension_counts(args.n, args.d, args.atoms)
    payload = {"matrix_size": counts.matrix_size, "degree": counts.degree, "lower": counts.lower, "upper": counts.upper}
    lines = [
        f"moment matrix {counts.matrix_size} x {counts.matrix_size}, flat at degree {counts.degree}",
        f"{counts.lower} <= added moments <= {counts.upper}",
    ]
    _emit(args, payload, lines)


COMMANDS: Dict[str, Callable[[argparse.Namespace], None]] = {
    "basis": cmd_basis,
    "moments": cmd_moments,
    "jacobian": cmd_jacobian,
    "na": cmd_na,
    "reduce": cmd_reduce,
    "signed": cmd_signed,
    "member": cmd_member,
    "min-atoms": cmd_min_atoms,
    "face": cmd_face,
    "wset": cmd_wset,
    "vset": cmd_vset,
    "core": cmd_core,
    "maxmass": cmd_maxmass,
    "psp": cmd_psp,
    "table1": cmd_table1,
    "table2": cmd_table2,
    "harris": cmd_harris,
    "examples": cmd_examples,
    "bounds": cmd_bounds,
    "pythagoras": cmd_pythagoras,
    "flatext": cmd_flatext,
}

_HELP = {
    "basis": "List the functions of a system",
    "moments": "Moment sequence of a measure",
    "jacobian": "Total derivative of the moment map and its rank",
    "na": "N_A by formula and by randomized search",
    "reduce": "Reduce a measure to at most m atoms",
    "signed": "Signed representing measure on a ground set",
    "member": "Membership with certificate",
    "min-atoms": "Fewest atoms on a ground set",
    "face": "W(s), V(s), D_s and gamma_s",
    "wset": "Atom set W(s)",
    "vset": "Common zeros V(s)",
    "core": "Core variety iteration",
    "maxmass": "Maximal mass rho and dual value kappa",
    "psp": "Positive separation check",
    "table1": "Ranks at prefixes of the Harris zeros",
    "table2": "Face dimensions of the grid zero sets",
    "harris": "The Harris polynomial and its zeros",
    "examples": "The four example systems",
    "bounds": "Known Caratheodory bounds",
    "pythagoras": "Pythagoras lower bound",
    "flatext": "Flat extension moment counts",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momentcone", description="momentcone - exact truncated moment problem computations"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "json"], default="table", help="Output format")
    common.add_argument("--float", action="store_true", help="Add approximate decimals to exact values")
    common.add_argument("--seed", type=int, default=settings.seed, help="Seed for randomized operations")
    common.add_argument("--log-level", default=None, help="Log level (default from MOMENTCONE_LOG_LEVEL)")
    common.add_argument("--system", help="System file, JSON, shorthand (affine:2:4) or catalog name")
    common.add_argument("--measure", help="Measure JSON file or inline JSON")
    common.add_argument("--sequence", help="Sequence file, JSON or comma-separated values")
    common.add_argument("--ground", help="Ground set file, JSON or points as 1,0;0,1")
    common.add_argument("--point", help="A point as comma-separated coordinates")
    common.add_argument("--points", help="Points as 1,0;0,1")
    common.add_argument("--tangent", help="Atoms for tangency constraints, as 1,0;0,1")
    common.add_argument("--n", type=int, help="Number of variables")
    common.add_argument("--d", type=int, help="Degree; half degree for table2 and flatext")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    for name in COMMANDS:
        sub = subparsers.add_parser(name, parents=[common], help=_HELP[name])
        if name == "na":
            sub.add_argument("--estimate", action="store_true", help="Also run the randomized search")
            sub.add_argument("--trials", type=int, default=None, help="Trials per atom count")
        elif name == "table2":
            sub.add_argument("--primed", action="store_true", help="Use the q grid {0..d}^n")
            sub.add_argument("--budget", type=int, default=None, help="Largest grid size")
            sub.add_argument(
                "--method", choices=["auto", "elimination", "normal-form"], default="auto", help="Rank method"
            )
            sub.add_argument("--trends", action="store_true", help="Report observed monotonicity")
        elif name == "harris":
            sub.add_argument("--sample", type=int, default=0, help="Random points for a nonnegativity check")
        elif name == "bounds":
            sub.add_argument(
                "--space", choices=["affine", "projective", "cube", "line"], default="affine", help="Domain"
            )
        elif name == "flatext":
            sub.add_argument("--atoms", type=int, help="Atoms the extension must carry")

    server_parser = subparsers.add_parser("serve", help="Run the API server")
    server_parser.add_argument("--host", default=settings.host, help="Server host")
    server_parser.add_argument("--port", type=int, default=settings.port, help="Server port")
    server_parser.add_argument("--log-level", default=None, help="Log level")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    settings.configure_logging(getattr(args, "log_level", None))

    if args.command == "serve":
        from momentcone.api.server import run_server

        run_server(host=args.host, port=args.port)
        return 0
    if args.command is None:
        parser.print_help()
        return 2

    try:
        COMMANDS[args.command](args)
    except UsageError as e:
        print(f"momentcone {args.command}: {e}", file=sys.stderr)
        return 2
    except MomentConeError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(json.dumps(e.to_dict(), sort_keys=True), file=sys.stderr)
        return 1
    return 0


def main() -> int:
    """Main entry point."""
    return run()


if __name__ == "__main__":
    sys.exit(main())
