"""Command-line surface.

Subcommands: mult, character, epoly, ppoly-cleared, positivity, reduce,
verify.  Results go to stdout (text or canonical JSON); diagnostics go to
stderr, as single-line JSON when --format json.  Exit codes: 0 success,
1 parse/validation error, 2 resource guard, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .affine import apply_affine_reflection, reduce_to_minuscule
from .engine import (
    CherednikContext,
    cleared_symmetric_sum,
    clearing_constant,
    multiplicity_table,
    nonsymmetric_poly,
    nonsymmetric_poly_cleared,
    verify_positivity,
    SUBSET_SUM_GUARD,
)
from .errors import ConstructionError, ResourceGuardError, SingularParameterError
from .identities import run_identity_suite
from .kpoly import VAR_NAMES
from .root_system import build_root_system


class CliError(Exception):
    """Invalid invocation or input; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_weight(text: str, rank: int, name: str):
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CliError(f"{name} must be comma-separated integers, got {text!r}")
    if len(coords) != rank:
        raise CliError(f"{name} has {len(coords)} coordinates, expected {rank}")
    return coords


def _require_dominant(coords, name: str):
    if any(c < 0 for c in coords):
        raise CliError(f"{name} must be dominant (no negative coordinates)")
    return coords


def _parse_k(text: str):
    """Parse the parameter assignment: 'symbolic', one rational for both
    classes, or 'short,long'."""
    if text.strip() == "symbolic":
        return None
    parts = [p.strip() for p in text.split(",")]
    if len(parts) > 2:
        raise CliError(f"at most two parameter classes, got {text!r}")
    try:
        values = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise CliError(f"cannot parse parameter value {text!r}")
    if len(values) == 1:
        values.append(values[0])
    return {0: values[0], 1: values[1]}


def _emit(payload, fmt: str, text_lines):
    if fmt == "json":
        print(canonical_json(payload))
    else:
        for line in text_lines:
            print(line)


def _weight_key(mu):
    return tuple(-c for c in mu)


def _coeff_ratio_str(cls: int, den) -> str:
    var = VAR_NAMES[cls]
    if den == 1:
        return var
    return f"{var}/({den})"


def cmd_reduce(args, fmt):
    rs = build_root_system(args.type)
    lam = _parse_weight(args.highest, rs.rank, "--highest")
    chain = reduce_to_minuscule(rs, lam)
    coeffs = [
        _coeff_ratio_str(cls, den)
        for cls, den in zip(chain.coeff_classes, chain.denominators)
    ]
    payload = {
        "type": args.type,
        "highest": list(lam),
        "minuscule": list(chain.minuscule),
        "word": list(chain.word),
        "chain": [list(mu) for mu in chain.chain],
        "denominators": [str(d) for d in chain.denominators],
        "coefficients": coeffs,
    }
    lines = [
        f"weight      : {list(lam)}",
        f"minuscule   : {list(chain.minuscule)}",
        f"word        : {list(chain.word)}",
    ]
    for j, (mu, den, c) in enumerate(
        zip(chain.chain, chain.denominators, coeffs), 1
    ):
        lines.append(f"step {j:>2}: chain {list(mu)}  d = {den}  c = {c}")
    _emit(payload, fmt, lines)
    return 0


def cmd_mult(args, fmt):
    rs = build_root_system(args.type)
    lam = _require_dominant(
        _parse_weight(args.highest, rs.rank, "--highest"), "--highest"
    )
    mu = _parse_weight(args.weight, rs.rank, "--weight")
    dom, _ = rs.dominant_representative(mu)
    table = multiplicity_table(rs, lam)
    value = table.get(dom, 0)
    payload = {
        "type": args.type,
        "highest": list(lam),
        "weight": list(mu),
        "multiplicity": value,
    }
    lines = [f"multiplicity: {value}"]
    chain = reduce_to_minuscule(rs, lam)
    if len(chain) <= SUBSET_SUM_GUARD:
        ratio = Fraction(rs.orbit_size(lam), rs.orbit_size(dom))
        terms = _qualifying_subsets(rs, chain, dom)
        total = sum((c for _, c in terms), Fraction(0))
        payload["decomposition"] = {
            "orbit_ratio": str(ratio),
            "subset_sum": str(total),
            "terms": [
                {"deleted": list(J), "coeff": str(c)} for J, c in terms
            ],
        }
        lines.append(f"decomposition: {ratio} x {total}")
        for J, c in terms:
            lines.append(f"  J = {list(J)}: {c}")
        if Fraction(value) != ratio * total:
            raise AssertionError("deletion expansion disagrees with character")
    _emit(payload, fmt, lines)
    return 0


def _qualifying_subsets(rs, chain, dom):
    """All deletion subsets whose surviving walk lands in the orbit of dom,
    with their coefficient products (parameters at 1)."""
    from .affine import apply_affine_reflection

    coeffs = chain.coeffs_at({0: Fraction(1), 1: Fraction(1)})
    m = len(chain.word)
    found = []

    def walk(t, weight, deleted, product):
        if t == m:
            if rs.dominant_representative(weight)[0] == dom:
                found.append((tuple(deleted), product))
            return
        walk(
            t + 1,
            apply_affine_reflection(rs, chain.word[t], weight),
            deleted,
            product,
        )
        deleted.append(t + 1)
        walk(t + 1, weight, deleted, product * coeffs[t])
        deleted.pop()

    walk(0, chain.minuscule, [], Fraction(1))
    found.sort(key=lambda jc: jc[0])
    return found


def cmd_character(args, fmt):
    rs = build_root_system(args.type)
    lam = _require_dominant(
        _parse_weight(args.highest, rs.rank, "--highest"), "--highest"
    )
    table = multiplicity_table(rs, lam)
    rows = []
    dim = 0
    for dom, m in table.items():
        for nu in rs.weyl_orbit(dom):
            rows.append((nu, m))
        dim += m * rs.orbit_size(dom)
    rows.sort(key=lambda row: _weight_key(row[0]))
    payload = {
        "type": args.type,
        "highest": list(lam),
        "dimension": dim,
        "table": [
            {"weight": list(nu), "multiplicity": m} for nu, m in rows
        ],
    }
    lines = [f"dimension: {dim}"]
    lines += [f"{list(nu)}: {m}" for nu, m in rows]
    _emit(payload, fmt, lines)
    return 0


def cmd_epoly(args, fmt):
    rs = build_root_system(args.type)
    lam = _parse_weight(args.highest, rs.rank, "--highest")
    k = _parse_k(args.k)
    if k is None:
        raise CliError("epoly needs numeric parameters; use ppoly-cleared for symbolic output")
    ctx = CherednikContext(rs, k)
    poly = nonsymmetric_poly(ctx, lam)
    rows = sorted(poly.items(), key=lambda row: _weight_key(row[0]))
    payload = {
        "type": args.type,
        "highest": list(lam),
        "k": {VAR_NAMES[0]: str(ctx.k[0]), VAR_NAMES[1]: str(ctx.k[1])},
        "terms": [{"weight": list(nu), "coeff": str(c)} for nu, c in rows],
    }
    lines = [f"{list(nu)}: {c}" for nu, c in rows]
    _emit(payload, fmt, lines)
    return 0


def cmd_ppoly_cleared(args, fmt):
    rs = build_root_system(args.type)
    lam = _require_dominant(
        _parse_weight(args.highest, rs.rank, "--highest"), "--highest"
    )
    _, denom = nonsymmetric_poly_cleared(rs, lam)
    table = cleared_symmetric_sum(rs, lam)
    rows = sorted(table.items(), key=lambda row: _weight_key(row[0]))
    payload = {
        "type": args.type,
        "highest": list(lam),
        "denominator": str(denom),
        "clearing_constant": str(clearing_constant(rs, lam)),
        "terms": [{"weight": list(nu), "coeff": str(p)} for nu, p in rows],
    }
    lines = [f"denominator: {denom}"]
    lines += [f"{list(nu)}: {p}" for nu, p in rows]
    _emit(payload, fmt, lines)
    return 0


def cmd_positivity(args, fmt):
    rs = build_root_system(args.type)
    lam = _require_dominant(
        _parse_weight(args.highest, rs.rank, "--highest"), "--highest"
    )
    report = verify_positivity(rs, lam)
    rows = sorted(
        report.coefficients.items(), key=lambda row: _weight_key(row[0])
    )
    payload = {
        "type": args.type,
        "highest": list(lam),
        "clearing_constant": str(report.scale_poly),
        "clearing_ok": report.scale_ok,
        "coefficients": [
            {"weight": list(nu), "poly": str(p), "ok": nu not in report.failures}
            for nu, p in rows
        ],
        "passed": report.passed,
    }
    lines = [
        f"clearing constant: {report.scale_poly}  "
        f"[{'ok' if report.scale_ok else 'FAIL'}]"
    ]
    for nu, p in rows:
        ok = nu not in report.failures
        lines.append(f"{list(nu)}: {p}  [{'ok' if ok else 'FAIL'}]")
    lines.append("passed" if report.passed else "FAILED")
    _emit(payload, fmt, lines)
    return 0


def cmd_verify(args, fmt):
    rs = build_root_system(args.type)
    results = run_identity_suite(rs, args.seed, args.cases)
    all_ok = all(ok for _, ok, _ in results)
    payload = {
        "type": args.type,
        "seed": args.seed,
        "cases": args.cases,
        "results": [
            {"name": name, "passed": ok, "detail": detail}
            for name, ok, detail in results
        ],
        "passed": all_ok,
    }
    lines = [
        f"{name:<20} {'pass' if ok else 'FAIL'}  ({detail})"
        for name, ok, detail in results
    ]
    lines.append("all checks passed" if all_ok else "verification FAILED")
    _emit(payload, fmt, lines)
    return 0 if all_ok else 3


def build_parser() -> _Parser:
    parser = _Parser(prog="liemult", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, highest=True):
        p = sub.add_parser(name)
        p.add_argument("--type", required=True, help="Cartan type, e.g. A2")
        if highest:
            p.add_argument("--highest", required=True,
                           help="weight in fundamental-weight coordinates, e.g. 1,2")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(handler=handler)
        return p

    add("mult", cmd_mult).add_argument("--weight", required=True,
                                       help="target weight, e.g. 0,1")
    add("character", cmd_character)
    p = add("epoly", cmd_epoly)
    p.add_argument("--k", default="1",
                   help="'p/q', 'short,long', or 'symbolic' (default 1)")
    add("ppoly-cleared", cmd_ppoly_cleared)
    add("positivity", cmd_positivity)
    add("reduce", cmd_reduce)
    p = add("verify", cmd_verify, highest=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=25)
    return parser


def _report_error(message: str, kind: str, fmt: str):
    if fmt == "json":
        print(canonical_json({"error": message, "kind": kind}), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)


def _detect_format(argv) -> str:
    tokens = list(argv if argv is not None else sys.argv[1:])
    for t, token in enumerate(tokens):
        if token == "--format=json":
            return "json"
        if token == "--format" and t + 1 < len(tokens) and tokens[t + 1] == "json":
            return "json"
    return "text"


def main(argv=None) -> int:
    fmt = _detect_format(argv)
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "format", "text")
        return args.handler(args, fmt)
    except CliError as exc:
        _report_error(str(exc), "usage", fmt)
        return 1
    except (ConstructionError, SingularParameterError, ValueError) as exc:
        _report_error(str(exc), "validation", fmt)
        return 1
    except ResourceGuardError as exc:
        _report_error(str(exc), "resource", fmt)
        return 2


if __name__ == "__main__":
    sys.exit(main())
