"""Command line front end.

    w0h1 run <file> [--param k=v]... [--json] [--oracle]
    w0h1 spectrum <a> <b> <c> [--json] [--oracle]
    w0h1 example <name> [--param k=v]... [--json] [--oracle]
    w0h1 list

Exit codes: 0 success, 1 computation or oracle failure, 2 input error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import gcd

from . import covers, kunneth, spectrum, strata, weights
from .scenario import Scenario, ScenarioError, example_names, load_example, load_scenario


class OracleMismatch(RuntimeError):
    pass


def _expect(ok: bool, what: str, failures: list[str]) -> None:
    if not ok:
        failures.append(what)


def _branch_oracles(d: strata.StratifiedBranchData, report: weights.WeightReport,
                    failures: list[str]) -> list[str]:
    for s in d.strata:
        a, b = strata.stalk_invariant_dim(s), strata.stalk_invariant_dim_linear(s)
        _expect(a == b, f"stratum {s.id}: orbit count gives {a}, linear algebra {b}", failures)
    bound = strata.sum_stalk_invariants(d.strata)
    _expect(report.dim_h0_F <= bound, f"H0(F)={report.dim_h0_F} exceeds sum of stalk "
            f"invariants {bound}", failures)
    if not d.adjacencies and all(s.closed for s in d.strata):
        _expect(report.dim_h0_F == bound, "closed strata: H0(F) differs from the sum of "
                "stalk invariants", failures)
    _expect(report.b0_X - report.b0_norm + report.dim_h0_F - report.dim_w0_h1 == 0,
            "exact sequence ranks do not cancel", failures)
    return ["orbit/linear stalk invariants", "H0(F) bound", "rank identity"]


def _covering_oracles(spec: covers.CoveringSpec, d: strata.StratifiedBranchData,
                      failures: list[str]) -> list[str]:
    for s in d.strata:
        if not s.id.startswith("D:"):
            continue
        shifts = [g(0) for g in s.monodromy]
        expected = gcd(s.branches, *shifts)
        got = strata.orbit_count(s.branches, s.monodromy)
        _expect(got == expected, f"stratum {s.id}: {got} orbits, gcd gives {expected}", failures)
    return ["torsor orbits = gcd(e, shifts)"]


def _pipeline_result(d, failures, run_oracles):
    report = weights.full_pipeline(d)
    checks = _branch_oracles(d, report, failures) if run_oracles else []
    return report, checks


TERM_LABELS = [
    ("b0_X", "b0(X)", "connected components of X"),
    ("b0_norm", "b0(X~)", "connected components of the normalization"),
    ("dim_h0_F", "dim H0(X,F)", "global sections of coker(Q_X -> pi_* Q_X~)"),
    ("dim_w0_h1", "dim W0H1(X,Q)", "= dim H0(X,F) - b0(X~) + b0(X)"),
]


def _weight_table(report: weights.WeightReport) -> list[str]:
    lines = []
    for key, label, note in TERM_LABELS:
        lines.append(f"  {label:<15}{getattr(report, key):>6}   {note}")
    lines.append("  (assumes H1 of the normalization has weights >= 1 and H0(X,F) is pure "
                 "of weight 0)")
    return lines


def evaluate(s: Scenario, run_oracles: bool = False) -> tuple[dict, list[str], list[str]]:
    """Compute the result of a scenario.

    Returns the JSON-ready result, human-readable lines, and the names of
    oracle checks run.  Raises :class:`OracleMismatch` if any check fails.
    """
    failures: list[str] = []
    checks: list[str] = []
    lines: list[str] = []
    if s.kind in ("stratified", "covering"):
        if s.kind == "covering":
            spec = s.payload
            d = covers.compile(spec)
            if run_oracles:
                checks += _covering_oracles(spec, d, failures)
        else:
            d = s.payload
        report, more = _pipeline_result(d, failures, run_oracles)
        checks += more
        result = {"kind": s.kind, **report.as_dict()}
        if s.kind == "covering":
            result["irreducibility_hint"] = covers.irreducibility_hint(spec)
            result["strata"] = len(d.strata)
        lines += _weight_table(report)
        if s.kind == "covering":
            lines.append(f"  gcd(m, all a_i) = 1 (sufficient for irreducible): "
                         f"{result['irreducibility_hint']}")
    elif s.kind == "spectrum":
        a, b, c = s.payload
        sp = spectrum.bp_spectrum(a, b, c)
        h1 = spectrum.unipotent_h1_dim(a, b, c)
        mu = spectrum.milnor_number(a, b, c)
        sym = sp.is_symmetric(Fraction(3, 2))
        if run_oracles:
            checks += ["lattice count at 1 and 2", "total mass", "symmetry"]
            for target in (1, 2):
                n = spectrum.lattice_count(a, b, c, target)
                _expect(n == sp.multiplicity(target),
                        f"multiplicity at {target}: {sp.multiplicity(target)} vs lattice {n}",
                        failures)
            _expect(sp.total_mass == mu, f"total mass {sp.total_mass} != {mu}", failures)
            _expect(sym, "spectrum not symmetric about 3/2", failures)
        result = {"kind": "spectrum", "a": a, "b": b, "c": c,
                  "spectrum": sp.as_strings(), "milnor_number": mu,
                  "unipotent_h1_dim": h1, "symmetric": sym}
        lines += [f"  f = v^{b} - x^{a} - z^{c}",
                  f"  Sp(f) = {sp}",
                  f"  milnor number       {mu}",
                  f"  dim H1 (unipotent)  {h1}   = 2 * #{{i/a + j/b + k/c = 1}}",
                  f"  symmetric about 3/2 {'OK' if sym else 'FAILED'}",
                  "  (exponents in (0, 3); unipotent part at exponents 1 and 2)"]
    elif s.kind == "kunneth":
        p = s.payload
        rep = kunneth.quotient_report(p["x"], p["z"], p["degree"], p["z_quotient_smooth"])
        if run_oracles:
            checks.append("invariants by averaging")
            for side in ("x", "z"):
                a = kunneth.invariant_dim(p[side])
                b = kunneth.invariant_dim_by_averaging(p[side])
                _expect(a == b, f"{side}: kernel gives {a}, averaging {b}", failures)
        result = {"kind": "kunneth", **rep.as_dict()}
        lines += [f"  order e              {rep.order}",
                  f"  dim H1(X)^inv        {rep.invariant_dim_x}",
                  f"  dim H1(Z)^inv        {rep.invariant_dim_z}",
                  f"  dim H1(quotient)     {rep.dim_h1}"]
        if rep.w0_zero:
            lines.append("  W0H1(quotient) = 0   (e = m and Z/mu_e smooth)")
    elif s.kind == "curve_graph":
        g = s.payload
        d = weights.curve_branch_data(g)
        report, more = _pipeline_result(d, failures, run_oracles)
        checks += more
        betti = weights.curve_w0_from_graph(g)
        if run_oracles:
            checks.append("dual graph Betti number")
            _expect(betti == report.dim_w0_h1,
                    f"pipeline W0H1={report.dim_w0_h1}, graph Betti number {betti}", failures)
        result = {"kind": "curve_graph", **report.as_dict(), "graph_betti": betti}
        lines += _weight_table(report)
        lines.append(f"  E - V + C of dual graph {betti}")
    else:
        raise ScenarioError(f"unknown kind {s.kind!r}")
    if s.name:
        result["name"] = s.name
    if s.params:
        result["params"] = dict(s.params)
    if failures:
        raise OracleMismatch("; ".join(failures))
    return result, lines, checks


def run(s: Scenario, emit_json: bool = False, run_oracles: bool = False) -> tuple[str, int]:
    """Report text and exit code for a validated scenario."""
    try:
        result, lines, checks = evaluate(s, run_oracles)
    except OracleMismatch as exc:
        return f"oracle mismatch: {exc}", 1
    except (ValueError, ArithmeticError) as exc:
        return f"{type(exc).__module__}.{type(exc).__name__}: {exc}", 1
    if emit_json:
        if run_oracles:
            result["oracles"] = checks
        return json.dumps(result, sort_keys=True, indent=2), 0
    title = s.name or s.kind
    out = [f"{title} [{s.kind}]"] + lines
    if run_oracles:
        out.append(f"  oracles passed: {', '.join(checks)}")
    return "\n".join(out), 0


def list_examples() -> list[dict[str, str]]:
    rows = []
    for name in example_names():
        s = load_example(name)
        rows.append({"name": name, "kind": s.kind, "description": s.description,
                     "reference": s.reference,
                     "params": ", ".join(f"{k}={v}" for k, v in s.params)})
    return rows


def _parse_params(items: list[str]) -> dict[str, int]:
    params = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ScenarioError(f"--param expects k=v, got {item!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise ScenarioError(f"--param {key}: {value!r} is not an integer") from None
    return params


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="w0h1", description="Dimension of the weight-zero part of H^1 from branch data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--oracle", action="store_true",
                       help="run independent brute-force cross-checks")

    p = sub.add_parser("run", help="evaluate a scenario file")
    p.add_argument("file")
    p.add_argument("--param", action="append", default=[], metavar="K=V")
    common(p)
    p = sub.add_parser("spectrum", help="spectrum of v^b - x^a - z^c")
    for name in "abc":
        p.add_argument(name, type=int)
    common(p)
    p = sub.add_parser("example", help="evaluate a bundled example")
    p.add_argument("name")
    p.add_argument("--param", action="append", default=[], metavar="K=V")
    common(p)
    sub.add_parser("list", help="list bundled examples")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        if args.command == "list":
            rows = list_examples()
            w = max(len(r["name"]) for r in rows)
            for r in rows:
                params = f" [{r['params']}]" if r["params"] else ""
                print(f"{r['name']:<{w}}  {r['kind']:<12} {r['description']}{params}")
                print(f"{'':<{w}}  {'':<12} source: {r['reference']}")
            return 0
        if args.command == "run":
            s = load_scenario(args.file, _parse_params(args.param))
        elif args.command == "example":
            s = load_example(args.name, _parse_params(args.param))
        else:
            try:
                spectrum.bp_spectrum(args.a, args.b, args.c)
            except ValueError as exc:
                raise ScenarioError(str(exc)) from exc
            s = Scenario("spectrum", (args.a, args.b, args.c))
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text, code = run(s, args.json, args.oracle)
    print(text, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
