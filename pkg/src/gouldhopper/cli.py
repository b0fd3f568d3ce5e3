"""Command-line front end: compute / verify / audit / heat.

All output is deterministic: canonical term order, sorted reports,
sorted JSON keys, no timestamps.  Exit codes: 0 success, 1 at least one
effective identity/property failure, 2 usage error.

The deformation parameter is spelled ``gamma`` (or ``g``) in all
textual interfaces; the Unicode letter is accepted on input and ASCII
is emitted on output.  Rationals travel as ``num/den`` strings.
"""

from __future__ import annotations

import argparse
import io
import json
import re
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction

from .exactalg import Poly, TruncationError, VAR_NAMES
from .ghcore import (
    STRATEGIES,
    FamilyParams,
    InvalidParamsError,
    UnsupportedRepresentationError,
)
from .heatrep import HeatProblem, property_suite, residual, solve
from .identity import (
    CHECKS,
    MISPRINT_LEDGER,
    POLICIES,
    GridRanges,
    IdentityReport,
    audit_grid,
    effective_failures,
    parse_tag,
    summarize,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

STRATEGY_ORDER = ("explicit", "operational", "creation", "recurrence", "genfun", "hypergeom")

_VAR_ALIASES = {
    "gamma": "g",
    "γ": "g",
    "z'": "zp",
    "w'": "wp",
    "g'": "gp",
    "gamma'": "gp",
    "γ'": "gp",
}


def canonical_var(name: str) -> str:
    return _VAR_ALIASES.get(name, name)


class ExprError(ValueError):
    """Expression syntax/semantic error carrying a source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_NUM_RE = re.compile(r"\d+(?:/\d+)?")
_NAME_RE = re.compile(r"[A-Za-zγ][A-Za-z0-9]*'?")


def _tokenize(src: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        match = _NUM_RE.match(src, i)
        if match:
            # keep the raw text: the power rule needs to tell 2 from 2/1
            tokens.append(("num", match.group(), i))
            i = match.end()
            continue
        match = _NAME_RE.match(src, i)
        if match:
            tokens.append(("name", match.group(), i))
            i = match.end()
            continue
        if ch in "+-*^()":
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ExprError(f"unexpected character {ch!r}", i)
    return tokens


class _ExprParser:
    """Recursive-descent parser for polynomial expressions.

    Grammar: rational literals (``3``, ``3/2``), variables, ``+ - *``,
    ``^`` with nonnegative integer exponents, parentheses, and implicit
    multiplication by adjacency (``2z``, ``3(z+w)``).
    """

    def __init__(self, src: str, allowed: frozenset[str]):
        self.src = src
        self.tokens = _tokenize(src)
        self.k = 0
        self.allowed = allowed

    def _peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None, len(self.src))

    def _next(self):
        token = self._peek()
        self.k += 1
        return token

    def parse(self) -> Poly:
        if not self.tokens:
            raise ExprError("empty expression", 0)
        result = self._expr()
        kind, value, pos = self._peek()
        if kind is not None:
            raise ExprError(f"unexpected {value!r}", pos)
        return result

    def _expr(self) -> Poly:
        total = self._term()
        while True:
            kind, value, _ = self._peek()
            if kind == "op" and value in "+-":
                self.k += 1
                rhs = self._term()
                total = total + rhs if value == "+" else total - rhs
            else:
                return total

    def _term(self) -> Poly:
        product = self._factor()
        while True:
            kind, value, _ = self._peek()
            if kind == "op" and value == "*":
                self.k += 1
                product = product * self._factor()
            elif kind in ("num", "name") or (kind == "op" and value == "("):
                product = product * self._factor()
            else:
                return product

    def _factor(self) -> Poly:
        kind, value, _ = self._peek()
        if kind == "op" and value == "-":
            self.k += 1
            return -self._factor()
        return self._power()

    def _power(self) -> Poly:
        base = self._atom()
        kind, value, pos = self._peek()
        if kind == "op" and value == "^":
            self.k += 1
            kind, value, pos = self._next()
            if kind == "op" and value == "-":
                raise ExprError("negative exponent", pos)
            if kind != "num" or not value.isdigit():
                raise ExprError("expected a nonnegative integer exponent", pos)
            return base ** int(value)
        return base

    def _atom(self) -> Poly:
        kind, value, pos = self._next()
        if kind == "num":
            return Poly.const(Fraction(value))
        if kind == "name":
            var = canonical_var(value)
            if var not in self.allowed:
                raise ExprError(f"variable {value!r} is not allowed here", pos)
            return Poly.variable(var)
        if kind == "op" and value == "(":
            inner = self._expr()
            kind, value, pos = self._next()
            if not (kind == "op" and value == ")"):
                raise ExprError("expected ')'", pos)
            return inner
        if kind is None:
            raise ExprError("unexpected end of expression", pos)
        raise ExprError(f"unexpected {value!r}", pos)


def parse_poly_expr(src: str, allowed_vars=("z", "w")) -> Poly:
    """Parse a polynomial expression over the allowed variables."""
    allowed = frozenset(canonical_var(name) for name in allowed_vars)
    unknown = allowed - set(VAR_NAMES)
    if unknown:
        raise ValueError(f"unknown variables in allowed_vars: {sorted(unknown)}")
    return _ExprParser(src, allowed).parse()


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_pq_list(text: str) -> tuple[tuple[int, int], ...]:
    """Parse '1,1;2,1' into ((1,1),(2,1))."""
    pairs = []
    for piece in text.split(";"):
        piece = piece.strip()
        if not piece:
            continue
        parts = piece.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'p,q' but got {piece!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"expected integers in {piece!r}") from None
    if not pairs:
        raise ValueError("no (p,q) pairs given")
    return tuple(pairs)


def parse_subst(text: str) -> dict[str, Fraction]:
    """Parse 'z=1/2,w=2,gamma=3' into canonical-variable bindings."""
    bindings: dict[str, Fraction] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise ValueError(f"expected 'var=value' but got {piece!r}")
        key, _, value = piece.partition("=")
        var = canonical_var(key.strip())
        if var not in ("z", "w", "g"):
            raise ValueError(f"cannot substitute {key.strip()!r}; use z, w, or gamma")
        bindings[var] = parse_rational(value)
    if not bindings:
        raise ValueError("empty substitution")
    return bindings


# ---------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------

def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _poly_json(poly: Poly) -> dict:
    return {"text": poly.text(), "terms": poly.to_json_obj()}


def _poly_csv_rows(poly: Poly, columns: tuple[str, ...]) -> list[list[str]]:
    rows = []
    indices = [VAR_NAMES.index(name) for name in columns]
    for exps, coeff in poly.sorted_terms():
        stray = [VAR_NAMES[i] for i, e in enumerate(exps) if e and i not in indices]
        if stray:
            raise ValueError(f"polynomial contains unexpected variables {stray}")
        rows.append(
            [str(exps[i]) for i in indices]
            + [str(coeff.numerator), str(coeff.denominator)]
        )
    return rows


def _csv_document(header: list[str], rows: list[list[str]]) -> str:
    # plain joins: every field is an integer or a bare identifier
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _report_params_text(report: IdentityReport) -> str:
    keys = CHECKS[report.tag].keys
    return " ".join(f"{key}={_scalar_text(report.params[key])}" for key in keys)


def _scalar_text(value) -> str:
    return str(value) if isinstance(value, int) else str(Fraction(value))


def _reports_text(reports, summary) -> str:
    out = io.StringIO()
    for report in reports:
        out.write(
            f"{report.status:<10} {report.tag.value:<18} "
            f"{_report_params_text(report)}  [{report.variant}]\n"
        )
        if report.status == "Fail":
            out.write(f"    difference: {report.difference.text()}\n")
        if report.notes:
            out.write(f"    notes: {report.notes}\n")
    out.write(
        "summary: total={total} exact_pass={exact_pass} series_pass={series_pass} "
        "fail={fail} known_misprints={known_misprints} "
        "effective_fail={effective_fail}\n".format(**summary)
    )
    return out.getvalue()


def _reports_junit(reports) -> str:
    suite = ET.Element("testsuite", name="identity-verify")
    tests = failures = skipped = 0
    for report in reports:
        tests += 1
        case = ET.SubElement(
            suite,
            "testcase",
            classname=report.tag.value,
            name=f"{_report_params_text(report)} [{report.variant}]",
        )
        if report.status == "Fail":
            if report.known_misprint:
                skipped += 1
                ET.SubElement(case, "skipped", message=report.notes or "known misprint")
            else:
                failures += 1
            if not report.known_misprint:
                failure = ET.SubElement(case, "failure", message="nonzero difference")
                failure.text = report.difference.text()
    suite.set("tests", str(tests))
    suite.set("failures", str(failures))
    suite.set("skipped", str(skipped))
    body = ET.tostring(suite, encoding="unicode")
    return '<?xml version="1.0" encoding="utf-8"?>\n' + body + "\n"


def _grid_json(ranges: GridRanges) -> dict:
    return {
        "n_max": ranges.n_max,
        "m_max": ranges.m_max,
        "pq_pairs": [list(pair) for pair in ranges.pq_pairs],
        "aux_max": ranges.aux_max,
        "jk_max": ranges.jk_max,
        "series_order": ranges.series_order,
        "weighted_series_order": ranges.weighted_series_order,
        "hyp_points": [str(point) for point in ranges.hyp_points],
        "weighted_points": [
            [str(value) for value in point] for point in ranges.weighted_points
        ],
    }


# ---------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------

def _cmd_compute(args) -> int:
    try:
        params = FamilyParams(args.p, args.q, args.n, args.m)
    except InvalidParamsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    bindings = {}
    if args.gamma is not None:
        bindings["g"] = args.gamma
    if args.subst:
        bindings.update(args.subst)

    names = STRATEGY_ORDER if args.strategy == "all" else (args.strategy,)
    results = []
    for name in names:
        try:
            gh = STRATEGIES[name](params, args.order)
        except UnsupportedRepresentationError as exc:
            if args.strategy == "all":
                continue
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except TruncationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        poly = gh.poly.subst(bindings) if bindings else gh.poly
        results.append((name, poly))

    if args.format == "json":
        document = {
            "params": {"p": args.p, "q": args.q, "n": args.n, "m": args.m},
            "substitution": {key: str(value) for key, value in bindings.items()} or None,
            "results": [
                {"strategy": name, **_poly_json(poly)} for name, poly in results
            ],
        }
        sys.stdout.write(_dump_json(document))
    elif args.format == "csv":
        header = ["strategy", "z", "w", "g", "num", "den"]
        rows = []
        for name, poly in results:
            for row in _poly_csv_rows(poly, ("z", "w", "g")):
                rows.append([name] + row)
        sys.stdout.write(_csv_document(header, rows))
    elif args.format == "latex":
        if len(results) == 1:
            sys.stdout.write(results[0][1].latex() + "\n")
        else:
            for name, poly in results:
                sys.stdout.write(f"{name}: {poly.latex()}\n")
    else:
        if len(results) == 1:
            sys.stdout.write(results[0][1].text() + "\n")
        else:
            for name, poly in results:
                sys.stdout.write(f"{name}: {poly.text()}\n")
    return EXIT_OK


def _make_ranges(args) -> GridRanges:
    return GridRanges(
        n_max=args.nmax,
        m_max=args.mmax,
        pq_pairs=args.pq,
        aux_max=args.aux_max,
        jk_max=args.jk_max,
        series_order=args.order,
        weighted_series_order=min(8, args.order),
    )


def _cmd_verify(args) -> int:
    if args.tag == "all":
        tags = None
    else:
        try:
            tags = {parse_tag(args.tag)}
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        ranges = _make_ranges(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    reports = audit_grid(tags, ranges, policy=args.variant, jobs=args.jobs)
    summary = summarize(reports)
    if args.format == "json":
        sys.stdout.write(_dump_json([report.to_json_obj() for report in reports]))
    elif args.format == "junit":
        sys.stdout.write(_reports_junit(reports))
    else:
        sys.stdout.write(_reports_text(reports, summary))
    return EXIT_FAIL if effective_failures(reports) else EXIT_OK


def _cmd_audit(args) -> int:
    try:
        ranges = _make_ranges(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    reports = audit_grid(None, ranges, policy=args.variant, jobs=args.jobs)
    summary = summarize(reports)
    heat = property_suite(
        seed=args.seed, trials=args.trials, pq_pairs=ranges.pq_pairs
    )
    failed = bool(effective_failures(reports)) or bool(heat["failures"])
    if args.format == "json":
        document = {
            "grid": _grid_json(ranges),
            "policy": args.variant,
            "reports": [report.to_json_obj() for report in reports],
            "summary": summary,
            "heat": heat,
        }
        sys.stdout.write(_dump_json(document))
    else:
        out = io.StringIO()
        out.write(_reports_text([r for r in reports if r.status == "Fail"], summary))
        out.write(
            "heat: seed={seed} trials={trials} cases={cases} "
            "failures={nfail}\n".format(
                seed=heat["seed"],
                trials=heat["trials"],
                cases=heat["cases"],
                nfail=len(heat["failures"]),
            )
        )
        for line in heat["failures"]:
            out.write(f"    {line}\n")
        sys.stdout.write(out.getvalue())
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_heat(args) -> int:
    try:
        initial = parse_poly_expr(args.initial, ("z", "w"))
        problem = HeatProblem(args.p, args.q, args.c, initial)
    except (ExprError, InvalidParamsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    solution = solve(problem)
    res = residual(problem, solution.u)

    if args.format == "json":
        document = {
            "p": args.p,
            "q": args.q,
            "c": str(problem.c),
            "initial": _poly_json(problem.initial),
            "solution": _poly_json(solution.u),
            "residual": _poly_json(res),
        }
        sys.stdout.write(_dump_json(document))
    elif args.format == "csv":
        header = ["part", "z", "w", "t", "num", "den"]
        rows = []
        for part, poly in (("solution", solution.u), ("residual", res)):
            for row in _poly_csv_rows(poly, ("z", "w", "t")):
                rows.append([part] + row)
        sys.stdout.write(_csv_document(header, rows))
    elif args.format == "latex":
        sys.stdout.write(f"solution: {solution.u.latex()}\n")
        sys.stdout.write(f"residual: {res.latex()}\n")
    else:
        sys.stdout.write(f"solution: {solution.u.text()}\n")
        sys.stdout.write(f"residual: {res.text()}\n")
    return EXIT_OK


# ---------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------

def _add_grid_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--nmax", type=int, default=6, help="largest first index n")
    sub.add_argument("--mmax", type=int, default=6, help="largest second index m")
    sub.add_argument(
        "--pq",
        type=parse_pq_list,
        default=((1, 1), (2, 1), (1, 2), (2, 2)),
        help="semicolon-separated derivative orders, e.g. '1,1;2,1'",
    )
    sub.add_argument("--aux-max", type=int, default=3, help="largest shifted index n', m'")
    sub.add_argument("--jk-max", type=int, default=3, help="largest derivative/weight order")
    sub.add_argument("--order", type=int, default=10, help="series truncation order")
    sub.add_argument(
        "--variant",
        choices=POLICIES,
        default="auto",
        help="printed form, corrected form, both, or printed-else-corrected",
    )
    sub.add_argument("--jobs", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gouldhopper",
        description=(
            "Exact construction and identity auditing for two-variable "
            "Gould-Hopper polynomials, and exact solutions of the "
            "associated higher-order heat equation."
        ),
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    compute = subparsers.add_parser(
        "compute", help="construct one family member by any strategy"
    )
    compute.add_argument("--p", type=int, required=True)
    compute.add_argument("--q", type=int, required=True)
    compute.add_argument("--n", type=int, required=True)
    compute.add_argument("--m", type=int, required=True)
    compute.add_argument(
        "--strategy",
        choices=STRATEGY_ORDER + ("all",),
        default="explicit",
    )
    compute.add_argument(
        "--gamma", type=parse_rational, default=None,
        help="substitute a rational value for the deformation parameter",
    )
    compute.add_argument(
        "--subst", type=parse_subst, default=None,
        help="partial substitution, e.g. 'z=1/2,w=2,gamma=3'",
    )
    compute.add_argument(
        "--order", type=int, default=None,
        help="series truncation for the genfun strategy (default n+m)",
    )
    compute.add_argument(
        "--format", choices=("text", "json", "csv", "latex"), default="text"
    )
    compute.set_defaults(handler=_cmd_compute)

    verify = subparsers.add_parser(
        "verify", help="check identities on a parameter grid"
    )
    verify.add_argument("--tag", default="all", help="identity tag name, or 'all'")
    _add_grid_flags(verify)
    verify.add_argument(
        "--format", choices=("text", "json", "junit"), default="text"
    )
    verify.set_defaults(handler=_cmd_verify)

    audit = subparsers.add_parser(
        "audit",
        help="run the whole identity catalog plus the heat property suite",
    )
    _add_grid_flags(audit)
    audit.add_argument("--seed", type=int, default=0, help="seed for the property suite")
    audit.add_argument("--trials", type=int, default=25, help="random initial data count")
    audit.add_argument("--format", choices=("text", "json"), default="json")
    audit.set_defaults(handler=_cmd_audit)

    heat = subparsers.add_parser(
        "heat", help="solve the higher-order heat equation for polynomial data"
    )
    heat.add_argument("--p", type=int, required=True)
    heat.add_argument("--q", type=int, required=True)
    heat.add_argument("--c", type=parse_rational, default=Fraction(1))
    heat.add_argument("--initial", required=True, help="polynomial in z and w")
    heat.add_argument(
        "--format", choices=("text", "json", "csv", "latex"), default="text"
    )
    heat.set_defaults(handler=_cmd_heat)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize other codes
        return int(exc.code) if exc.code else EXIT_OK
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
