"""Command-line interface.

Subcommands read a line-oriented problem file (`key: value`, `#` comments)
and print deterministic text or JSON.  Exit codes: 0 success, 2 malformed
input, 3 improper ideal, 4 invalid cover hypothesis, 5 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .cover import (
    REGULARITY_WARNING,
    CoverHypothesisError,
    CoverProblem,
    base_multiplicity,
    degree_bound_check,
    mult_table,
    product_structure_check,
)
from .hilbert import (
    ImproperIdealError,
    hs_dimension_and_multiplicity,
    hs_function_sequence,
    multiplicity_of_local_ring,
)
from .parsing import ParseError
from .rings import Ordering, PrimeField, QQ, RingContext
from .standard_bases import IdealBasis, leading_ideal

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IMPROPER = 3
EXIT_HYPOTHESIS = 4
EXIT_INTERNAL = 5


class ProblemFileError(ValueError):
    pass


@dataclass
class ProblemFile:
    vars: tuple[str, ...]
    field: str
    order: str
    ideal: tuple[str, ...]
    g: str | None
    cover_var: str | None
    range: tuple[int, int] | None


def load_problem_file(path: str) -> ProblemFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from None
    values: dict[str, str] = {}
    ideals: list[str] = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ProblemFileError(f"line {lineno}: expected 'key: value'")
        key, value = line.split(":", 1)
        key = key.strip()
        value = value.strip()
        if key == "ideal":
            ideals.append(value)
        elif key in {"vars", "field", "order", "g", "cover_var", "range"}:
            if key in values:
                raise ProblemFileError(f"line {lineno}: duplicate key {key!r}")
            values[key] = value
        else:
            raise ProblemFileError(f"line {lineno}: unknown key {key!r}")
    if "vars" not in values:
        raise ProblemFileError("missing 'vars'")
    names = tuple(v for v in values["vars"].replace(",", " ").split() if v)
    if not names:
        raise ProblemFileError("empty 'vars'")
    nrange = None
    if "range" in values:
        text = values["range"]
        parts = text.split("..") if ".." in text else text.split()
        if len(parts) != 2:
            raise ProblemFileError(f"bad range {text!r} (expected 'lo..hi')")
        try:
            lo, hi = int(parts[0]), int(parts[1])
        except ValueError:
            raise ProblemFileError(f"bad range {text!r}") from None
        if lo < 1 or lo > hi:
            raise ProblemFileError(f"bad range {text!r} (need 1 <= lo <= hi)")
        nrange = (lo, hi)
    return ProblemFile(
        vars=names,
        field=values.get("field", "Q"),
        order=values.get("order", "ds"),
        ideal=tuple(ideals),
        g=values.get("g"),
        cover_var=values.get("cover_var"),
        range=nrange,
    )


def build_ring(pf: ProblemFile) -> RingContext:
    if pf.order != "ds":
        raise ProblemFileError(f"unsupported order {pf.order!r} (only 'ds')")
    tokens = pf.field.split()
    if tokens == ["Q"]:
        field = QQ
    elif len(tokens) == 2 and tokens[0] == "Fp":
        try:
            field = PrimeField(int(tokens[1]))
        except ValueError as exc:
            raise ProblemFileError(str(exc)) from None
    else:
        raise ProblemFileError(f"unsupported field {pf.field!r}")
    try:
        return RingContext(pf.vars, Ordering.LOCAL_DEGREVLEX, field)
    except ValueError as exc:
        raise ProblemFileError(str(exc)) from None


def resolve_cover_var(pf: ProblemFile) -> str:
    if pf.cover_var is not None:
        if pf.cover_var in pf.vars:
            raise ProblemFileError(
                f"cover_var {pf.cover_var!r} clashes with a base variable")
        return pf.cover_var
    if "y" not in pf.vars:
        return "y"
    if "z" not in pf.vars:
        return "z"
    raise ProblemFileError(
        "both 'y' and 'z' are base variables; set cover_var explicitly")


def parse_ideal(pf: ProblemFile, ring: RingContext) -> IdealBasis:
    if not pf.ideal:
        raise ProblemFileError("empty ideal")
    return IdealBasis.from_strings(ring, pf.ideal)


def _banner(ring: RingContext, out) -> None:
    print(f"ring: {ring}  order: {ring.ordering.value}", file=out)


def cmd_std(args, out) -> int:
    pf = load_problem_file(args.problem_file)
    ring = build_ring(pf)
    basis = parse_ideal(pf, ring)
    from .standard_bases import standard_basis

    sb, chain = standard_basis(basis)
    lead = leading_ideal(sb)
    if lead.is_unit:
        raise ImproperIdealError("not a proper ideal at the origin")
    _banner(ring, out)
    print(f"standard basis ({len(sb)} elements, chain length {len(chain)}):",
          file=out)
    for g in sb:
        print(f"  {g}", file=out)
    print(f"leading ideal: {lead.format(ring.variables)}", file=out)
    return EXIT_OK


def cmd_mult(args, out) -> int:
    pf = load_problem_file(args.problem_file)
    ring = build_ring(pf)
    basis = parse_ideal(pf, ring)
    dimension, multiplicity, _ = multiplicity_of_local_ring(basis)
    _banner(ring, out)
    print(f"dimension: {dimension}", file=out)
    print(f"multiplicity: {multiplicity}", file=out)
    if args.oracle:
        seq = hs_function_sequence(basis, args.oracle_degree)
        odim, omult = hs_dimension_and_multiplicity(seq)
        agree = (odim, omult) == (dimension, multiplicity)
        status = "agreement" if agree else "MISMATCH"
        print(f"oracle check (degrees 0..{args.oracle_degree}): "
              f"dimension {odim}, multiplicity {omult} -- {status}", file=out)
        if not agree:
            raise AssertionError("oracle disagrees with the leading-ideal route")
    return EXIT_OK


def _cover_analysis(pf: ProblemFile):
    ring = build_ring(pf)
    basis = parse_ideal(pf, ring)
    if pf.g is None:
        raise ProblemFileError("missing 'g'")
    if pf.range is None:
        raise ProblemFileError("missing 'range'")
    cover_var = resolve_cover_var(pf)
    branch = ring.poly(pf.g)
    problem = CoverProblem(ring, basis, branch, cover_var)
    analysis = mult_table(problem, *pf.range)
    base_dim, base_mult = base_multiplicity(problem)
    return problem, analysis, base_mult


def cmd_cover(args, out) -> int:
    pf = load_problem_file(args.problem_file)
    problem, analysis, base_mult = _cover_analysis(pf)
    product_ok, offender = product_structure_check(analysis)
    bound_ok = degree_bound_check(analysis, base_mult)
    if args.json:
        payload = {
            "problem": {
                "vars": list(pf.vars),
                "field": pf.field,
                "order": pf.order,
                "ideal": [str(g) for g in problem.ideal_gens],
                "g": str(problem.branch),
                "cover_var": problem.cover_var,
                "range": list(pf.range),
            },
            "threshold_N": analysis.threshold_N,
            "stable_cone": [str(f) for f in analysis.stable_cone_gens],
            "rows": [
                {
                    "n": row.n,
                    "cone_gens": [str(f) for f in row.cone_gens],
                    "dim": row.dimension,
                    "mult": row.multiplicity,
                    "stable": row.stable,
                }
                for row in analysis.rows
            ],
            "checks": {
                "product_structure": product_ok,
                "degree_bound": bound_ok,
                "stabilized_in_range": analysis.stabilized_in_range,
            },
        }
        print(json.dumps(payload, indent=2), file=out)
        return EXIT_OK
    ring = problem.base_ring
    _banner(ring, out)
    print(f"cover variable: {problem.cover_var}", file=out)
    print(f"WARNING: {REGULARITY_WARNING}", file=out)
    print(file=out)
    cone_col = max([len(", ".join(str(f) for f in row.cone_gens))
                    for row in analysis.rows] + [len("In(I_n) generators")])
    header = (f"  {'n':>3} | {'In(I_n) generators':<{cone_col}} | dim | mult | stable")
    print(header, file=out)
    print("  " + "-" * (len(header) - 2), file=out)
    for row in analysis.rows:
        cone = ", ".join(str(f) for f in row.cone_gens)
        flag = "yes" if row.stable else "no"
        print(f"  {row.n:>3} | {cone:<{cone_col}} | {row.dimension:>3} "
              f"| {row.multiplicity:>4} | {flag}", file=out)
    print(file=out)
    print(f"threshold N = {analysis.threshold_N}", file=out)
    stable = ", ".join(str(f) for f in analysis.stable_cone_gens)
    print(f"stable tangent cone generators: {stable}", file=out)
    print(f"predicted stable multiplicity: {analysis.stable_multiplicity} "
          f"(dimension {analysis.stable_dimension})", file=out)
    print(f"base multiplicity: {base_mult}", file=out)
    onset = analysis.observed_multiplicity_onset
    onset_text = str(onset) if onset is not None else "not in range"
    print(f"observed multiplicity stabilization onset: {onset_text}", file=out)
    print(f"product structure: {'yes' if product_ok else 'no'}"
          + (f" (offending generator: {offender})" if offender else ""),
          file=out)
    print(f"degree bound mult <= n*base: {'yes' if bound_ok else 'no'}",
          file=out)
    print(f"stabilized in range: "
          f"{'yes' if analysis.stabilized_in_range else 'no'}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covermult",
        description="Standard bases for local orderings, tangent cones, and "
                    "multiplicities of cyclic branched covers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_std = sub.add_parser("std", help="standard basis and leading ideal")
    p_std.add_argument("problem_file")
    p_std.set_defaults(func=cmd_std)

    p_mult = sub.add_parser("mult", help="dimension and multiplicity")
    p_mult.add_argument("problem_file")
    p_mult.add_argument("--oracle", action="store_true",
                        help="cross-check against the linear-algebra oracle")
    p_mult.add_argument("--oracle-degree", type=int, default=12)
    p_mult.set_defaults(func=cmd_mult)

    p_cover = sub.add_parser("cover", help="cover threshold and mult table")
    p_cover.add_argument("problem_file")
    p_cover.add_argument("--json", action="store_true",
                         help="machine-readable output")
    p_cover.set_defaults(func=cmd_cover)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ImproperIdealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IMPROPER
    except CoverHypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry_point() -> None:
    sys.exit(main())
