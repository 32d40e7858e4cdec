"""Command-line front end.

Subcommands cover every computation in the library: the binomial-gcd
functions, carry counts, the upper and lower index bounds, cup-power
admissibility, exact cohomology of a cellular complex loaded from JSON, the
mod-r connecting map, and fixture emission.  Every subcommand takes --json to
emit a machine-readable envelope {command, inputs, result, citations}.

Exit codes: 0 on success, 1 on a domain error (reported on stderr), 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ahss, bounds, homology
from .numtheory import factorize, kummer_carries, m_closed, n_func
from .stable_tables import load_exponent_table

_FIXTURE_HELP = "fixture names: bzr-R-D, sphere-N, rp-N (e.g. bzr-2-9, sphere-4, rp-2)"


def _entry_dict(entry) -> dict:
    return {"value": entry.value, "provenance": entry.provenance}


def _report_dict(report: bounds.BoundReport) -> dict:
    return {
        "bound": report.bound,
        "known": report.known,
        "kind": report.kind,
        "theorem": report.theorem,
        "factors": [
            {"index": j, **_entry_dict(entry)} for j, entry in report.factors
        ],
        "partial_product": report.partial_product,
        "assumptions": list(report.assumptions),
    }


def _group_dict(g: homology.CohomologyGroup) -> dict:
    return {"degree": g.degree, "free_rank": g.free_rank, "torsion": list(g.torsion)}


def _report_lines(report: bounds.BoundReport) -> list[str]:
    lines = [f"{report.describe()}   [{report.theorem}]"]
    for j, entry in report.factors:
        shown = entry.value if entry.known else "unknown"
        lines.append(f"  j={j}: {shown} ({entry.provenance})")
    lines.extend(f"  note: {a}" for a in report.assumptions)
    return lines


def _load_table(args):
    path = getattr(args, "tables", None)
    return load_exponent_table(path) if path else None


def _cmd_m(args):
    value = m_closed(args.a, args.s)
    return value, [str(value)], ["binomial-gcd"]


def _cmd_n(args):
    value = n_func(args.b, args.s)
    return value, [str(value)], ["degree-forcing-function"]


def _cmd_kummer(args):
    value = kummer_carries(args.p, args.a, args.b)
    return value, [str(value)], ["base-p-carry-count"]


def _cmd_upper_bound(args):
    table = _load_table(args)
    if args.prime_power:
        fact = factorize(args.period)
        if len(fact.pairs) != 1:
            raise ValueError(f"--prime-power needs a prime-power period, got {args.period}")
        ell, k = fact.pairs[0]
        report = bounds.upper_bound_prime_power(args.dim, ell, k)
    else:
        report = bounds.upper_bound_product(args.dim, args.period, table)
    return _report_dict(report), _report_lines(report), [report.theorem]


def _cmd_lower_bound(args):
    report = bounds.lower_bound_skeleton(args.period, args.skeleton)
    return _report_dict(report), _report_lines(report), [report.theorem]


def _cmd_sandwich(args):
    lower = bounds.lower_bound_skeleton(args.period, args.skeleton)
    upper = bounds.upper_bound_product(args.skeleton + 1, args.period)
    lines = _report_lines(lower) + _report_lines(upper)
    if upper.known:
        if upper.bound % lower.bound != 0:
            raise ValueError(
                f"sandwich violated: lower bound {lower.bound} does not divide "
                f"upper bound {upper.bound}"
            )
        lines.append(f"coherent: {lower.bound} | {upper.bound}")
    else:
        lines.append("upper bound unknown; divisibility not checked")
    payload = {"lower": _report_dict(lower), "upper": _report_dict(upper)}
    return payload, lines, [lower.theorem, upper.theorem]


def _cmd_pu_order(args):
    value = bounds.pu_eta_power_order(args.n, args.s)
    return value, [str(value)], ["projective-unitary-cup-order"]


def _parse_orders(text: str) -> bounds.OrdersProfile:
    try:
        orders = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"--orders must be comma-separated integers: {exc}") from exc
    return bounds.OrdersProfile(orders[0] if orders else 0, orders)


def _cmd_admissible(args):
    profile = _parse_orders(args.orders)
    ok = bounds.degree_admissible(args.degree, profile)
    return ok, ["admissible" if ok else "not admissible"], ["cup-order-obstruction"]


def _cmd_min_degree(args):
    profile = _parse_orders(args.orders)
    result = bounds.min_admissible_degree(profile, args.cap)
    if result is None:
        return None, [f"none-found (searched degrees 2..{args.cap})"], ["cup-order-obstruction"]
    return result, [str(result)], ["cup-order-obstruction", "degree-forcing-function"]


def _cmd_per_ind_check(args):
    ok = bounds.check_per_ind_consistency(args.per, args.ind)
    line = "consistent" if ok else "inconsistent: per must divide ind and share its primes"
    return ok, [line], ["period-index-prime-support"]


def _cmd_cohomology(args):
    complex_ = homology.load_chain_complex(args.file)
    degrees = [args.degree] if args.degree is not None else list(range(complex_.top_dim + 1))
    groups = []
    for k in degrees:
        if args.mod is not None:
            groups.append(homology.cohomology_mod(complex_, k, args.mod))
        else:
            groups.append(homology.cohomology_Z(complex_, k))
    coeff = f"Z/{args.mod}" if args.mod is not None else "Z"
    lines = [f"H^{g.degree}({complex_.name or 'X'}; {coeff}) = {g}" for g in groups]
    payload = [_group_dict(g) for g in groups]
    if args.degree is not None:
        payload = payload[0]
    return payload, lines, ["smith-normal-form"]


def _cmd_bockstein(args):
    complex_ = homology.load_chain_complex(args.file)
    beta = homology.bockstein(complex_, args.degree, args.mod)
    lines = [
        f"beta: H^{beta.degree}(X; Z/{beta.modulus}) -> H^{beta.degree + 1}(X; Z)",
        f"source: {beta.source}",
        f"target: {beta.target}",
        f"matrix (target generators x source generators): {beta.matrix.to_lists()}",
    ]
    payload = {
        "degree": beta.degree,
        "modulus": beta.modulus,
        "source": _group_dict(beta.source),
        "target": _group_dict(beta.target),
        "matrix": beta.matrix.to_lists(),
        "source_orders": list(beta.source_orders),
        "target_orders": list(beta.target_orders),
    }
    return payload, lines, ["coefficient-bockstein"]


def _cmd_ahss_bound(args):
    if (args.file is None) == (args.shape is None):
        raise ValueError("provide exactly one of FILE (a chain complex) or --shape FILE")
    if args.file is not None:
        if args.period is None:
            raise ValueError("--period is required with a chain-complex FILE")
        complex_ = homology.load_chain_complex(args.file)
        shape = ahss.TwistedShape.from_complex(complex_, args.period)
    else:
        shape = ahss.load_twisted_shape(args.shape)
        if args.period is not None and args.period != shape.r:
            raise ValueError(
                f"--period {args.period} disagrees with the shape file period {shape.r}"
            )
    table = _load_table(args)
    report = ahss.best_upper_bound(shape, table)
    payload = {
        "shape": shape.to_json_dict(),
        "bound": _report_dict(report),
    }
    return payload, _report_lines(report), [report.theorem, ahss.TAG_AHSS, bounds.TAG_PRODUCT]


def _build_fixture(name: str) -> homology.ChainComplex:
    tokens = name.split("-")
    if not all(tok.lstrip("-").isdigit() for tok in tokens[1:]):
        raise ValueError(f"unknown fixture name {name!r}; {_FIXTURE_HELP}")
    if tokens[0] == "bzr" and len(tokens) == 3:
        return homology.bzr_skeleton_complex(int(tokens[1]), int(tokens[2]))
    if tokens[0] == "sphere" and len(tokens) == 2:
        return homology.sphere_complex(int(tokens[1]))
    if tokens[0] == "rp" and len(tokens) == 2:
        return homology.rp_complex(int(tokens[1]))
    raise ValueError(f"unknown fixture name {name!r}; {_FIXTURE_HELP}")


def _cmd_fixtures(args):
    payload = homology.chain_complex_to_json(_build_fixture(args.name))
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return payload, [f"wrote {args.out}"], []
    return payload, [text], []


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perindex",
        description="Exact divisibility bounds for the topological period-index problem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit a JSON envelope")
        return p

    p = add("m", _cmd_m, "gcd of the binomial coefficients C(a,1..s)")
    p.add_argument("a", type=int)
    p.add_argument("s", type=int)

    p = add("n", _cmd_n, "the divisor forced on any degree whose binomial gcd retains b")
    p.add_argument("b", type=int)
    p.add_argument("s", type=int)

    p = add("kummer", _cmd_kummer, "carries when adding a and b in base p")
    p.add_argument("p", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("upper-bound", _cmd_upper_bound, "upper bound on the index from dimension and period")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--period", type=int, required=True)
    p.add_argument(
        "--prime-power",
        action="store_true",
        help="use the half-dimension bound (period must be a prime power, 2l > d+1)",
    )
    p.add_argument("--tables", help="JSON file extending the stable exponent tables")

    p = add("lower-bound", _cmd_lower_bound, "lower bound from the universal-space skeleton")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--skeleton", type=int, required=True)

    p = add("sandwich", _cmd_sandwich, "both bounds for the skeleton class; asserts lower | upper")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--skeleton", type=int, required=True)

    p = add("pu-order", _cmd_pu_order, "order of the s-th cup power of the degree-2 generator")
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)

    p = add("admissible", _cmd_admissible, "can a degree-N algebra carry these cup-power orders")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--orders", required=True, help="comma-separated cup-power orders o1,o2,...")

    p = add("min-degree", _cmd_min_degree, "smallest admissible degree up to a cap")
    p.add_argument("--orders", required=True, help="comma-separated cup-power orders o1,o2,...")
    p.add_argument("--cap", type=int, required=True)

    p = add("per-ind-check", _cmd_per_ind_check, "per | ind with equal prime support")
    p.add_argument("per", type=int)
    p.add_argument("ind", type=int)

    p = add("cohomology", _cmd_cohomology, "exact cohomology of a chain complex JSON file")
    p.add_argument("file")
    p.add_argument("--mod", type=int, help="coefficients Z/R instead of Z")
    p.add_argument("--degree", type=int, help="single degree instead of all")

    p = add("bockstein", _cmd_bockstein, "connecting map of the mod-r coefficient sequence")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)

    p = add("ahss-bound", _cmd_ahss_bound, "combined upper bound from concrete cohomology")
    p.add_argument("file", nargs="?", help="chain complex JSON (requires --period)")
    p.add_argument("--shape", help="twisted shape JSON {d, r, h}")
    p.add_argument("--period", type=int)
    p.add_argument("--tables", help="JSON file extending the stable exponent tables")

    p = add("fixtures", _cmd_fixtures, "emit built-in complexes as JSON")
    p.add_argument("action", choices=["emit"])
    p.add_argument("name", help=_FIXTURE_HELP)
    p.add_argument("--out", help="write to a file instead of stdout")

    return parser


def _inputs_dict(args) -> dict:
    skip = {"command", "handler", "json"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, lines, citations = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": _inputs_dict(args),
            "result": payload,
            "citations": citations,
        }
        print(json.dumps(envelope, indent=2))
    else:
        for line in lines:
            print(line)
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
