"""Command line: export posets, print dimension and Betti tables, characters,
series, and run verification suites.

Exit status: 0 when every check passes, 1 when any fails, 2 on usage errors
(including budget violations).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb

from . import checks
from .combinatorics import WeakComposition, count_ninc, enumerate_weak_compositions

# element count of B_n^[k] is sum_j C(n, j) C(j + k - 1, k - 1)
POSET_ELEMENT_BUDGET = 20000
MODULE_SIZE_BUDGET = 5  # |mu| for anything that builds exterior modules or order complexes
SERIES_DEGREE_BUDGET = 8
DEFAULTS = {"n": 4, "k": 2, "degree": 4}

# suite -> [(check function, {keyword: (budget slot, value under --profile full)})]
SUITES = {
    "el": [
        (checks.check_el, {"n_max": ("n", 4), "k_max": ("k", 2)}),
        (checks.check_ascent_free_betti, {"n_max": ("n", 4), "k_max": ("k", 2)}),
    ],
    "dims": [
        (checks.check_dimensions, {"n_max": ("n", 5), "k": ("k", 3)}),
        (checks.check_mobius, {"n_max": ("n", 5), "k": ("k", 3)}),
    ],
    "characters": [
        (checks.check_characters, {"n_max": ("n", 4)}),
        (checks.check_symmetric_modules, {"n_max": ("n", 4)}),
        (checks.check_presentation, {"n_max": ("n", 3)}),
    ],
    "series": [
        (checks.check_series, {"n_max": ("n", 5)}),
        (checks.check_dimension_series, {"n_max": ("degree", 6)}),
        (checks.check_regular_representation, {"n_max": ("degree", 6)}),
    ],
    "specializations": [
        (checks.check_specializations, {"h_max": ("degree", 8), "euler_max": ("degree", 7)}),
        (checks.check_htoe, {"n_max": ("degree", 8)}),
    ],
    "gessel": [(checks.check_gessel, {"max_length": ("degree", 5)})],
    "whitney": [(checks.check_whitney, {"n_max": ("n", 4), "k": ("k", 2)})],
}


class UsageError(Exception):
    pass


def poset_size(n: int, k: int) -> int:
    return sum(comb(n, j) * comb(j + k - 1, k - 1) for j in range(n + 1))


def plan(suite: str, profile: str, n=None, k=None, degree=None) -> list[tuple]:
    """Checks to run with their keyword arguments, in canonical order."""
    names = list(SUITES) if suite == "all" else [suite]
    given = {"n": n, "k": k, "degree": degree}
    out = []
    for name in names:
        for fn, params in SUITES[name]:
            kwargs = {}
            for kw, (slot, full_value) in params.items():
                if given[slot] is not None:
                    kwargs[kw] = given[slot]
                else:
                    kwargs[kw] = full_value if profile == "full" else DEFAULTS[slot]
            out.append((name, fn, kwargs))
    return out


def _emit(text: str, path) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_budget(n: int, k: int, element_limit: bool = False) -> None:
    if n < 0 or k < 1:
        raise UsageError("need n >= 0 and k >= 1")
    if element_limit and poset_size(n, k) > POSET_ELEMENT_BUDGET:
        raise UsageError(f"B_{n}^[{k}] has {poset_size(n, k)} elements, over the budget of {POSET_ELEMENT_BUDGET}")


def cmd_poset(args) -> int:
    from .poset import build_weighted_boolean, el_label, hat_weighted_boolean, to_dot, to_json

    n, k = _arg(args.n, "n"), _arg(args.k, "k")
    _check_budget(n, k, element_limit=True)
    fmt = args.format or "dot"
    if fmt not in ("dot", "json"):
        raise UsageError(f"poset format must be dot or json, not {fmt}")
    colors = range(1, k + 1)
    p = hat_weighted_boolean(n, colors) if args.hat else build_weighted_boolean(n, colors)
    labeling = None if args.no_labels else el_label
    text = to_dot(p, labeling, f"B_{n}^[{k}]") if fmt == "dot" else to_json(p, labeling) + "\n"
    _emit(text, args.out)
    return 0


def _compositions(n_max: int, k: int) -> list[WeakComposition]:
    out = []
    for n in range(1, n_max + 1):
        out.extend(enumerate_weak_compositions(n, k))
    return out


def _mu_str(mu: WeakComposition) -> str:
    return "(" + ",".join(map(str, mu.parts)) + ")"


def cmd_dims(args) -> int:
    n, k = _arg(args.n, "n"), _arg(args.k, "k")
    _check_budget(n, k)
    if n > MODULE_SIZE_BUDGET:
        raise UsageError(f"--n {n} is over the budget of {MODULE_SIZE_BUDGET}")
    fmt = args.format or "csv"
    rows = []
    all_agree = True
    for mu in _compositions(n, k):
        enumerated, dim, top, _ = checks.dimension_row(mu)
        agree = enumerated == dim == top == count_ninc(mu)
        all_agree &= agree
        rows.append({"mu": _mu_str(mu), "ninc": enumerated, "rank_nullity": dim, "top_betti": top})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["mu", "ninc", "rank_nullity", "top_betti"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    elif fmt == "json":
        text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)
    else:
        raise UsageError(f"dims format must be csv or json, not {fmt}")
    _emit(text, args.out)
    return 0 if all_agree else 1


def cmd_betti(args) -> int:
    from .topology import interval_betti

    n, k = _arg(args.n, "n"), _arg(args.k, "k")
    _check_budget(n, k)
    if n > MODULE_SIZE_BUDGET:
        raise UsageError(f"--n {n} is over the budget of {MODULE_SIZE_BUDGET}")
    lines = []
    for mu in _compositions(n, k):
        betti = interval_betti(mu)
        lines.append(json.dumps({"mu": mu.to_json(), "betti": {str(d): b for d, b in sorted(betti.items())}},
                                sort_keys=True))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_characters(args) -> int:
    from .algebra import character_exterior_cached
    from .symfunc import frobenius, to_basis
    from .topology import top_cohomology_character

    n, k = _arg(args.n, "n"), _arg(args.k, "k")
    _check_budget(n, k)
    if n > MODULE_SIZE_BUDGET:
        raise UsageError(f"--n {n} is over the budget of {MODULE_SIZE_BUDGET}")
    source = character_exterior_cached if args.source == "exterior" else top_cohomology_character
    lines = []
    for mu in enumerate_weak_compositions(n, k):
        chi = source(mu)
        schur = to_basis(frobenius(chi), "s")
        lines.append(json.dumps({
            "mu": mu.to_json(),
            "source": args.source,
            "character": chi.to_json(),
            "schur": {",".join(map(str, lam)): str(c) for lam, c in sorted(schur.items(), reverse=True)},
        }, sort_keys=True))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_series(args) -> int:
    from .symfunc import assemble_lhs_series, explicit_rhs_series, invert_double_series, koszul_dual_series

    d = _arg(args.degree, "degree")
    limit = MODULE_SIZE_BUDGET if args.which == "lhs" else SERIES_DEGREE_BUDGET
    if d < 0 or d > limit:
        raise UsageError(f"--degree for {args.which} must lie in [0, {limit}]")
    if args.which == "lhs":
        series = assemble_lhs_series(d, d)
    elif args.which == "inverse":
        series = invert_double_series(koszul_dual_series(d), d)
    else:
        series = explicit_rhs_series(d)
    doc = {"which": args.which, "degree": d, "basis": "m(x) m(y)", "terms": series.to_json()}
    _emit(json.dumps(doc, sort_keys=True, indent=1) + "\n", args.out)
    return 0


def cmd_eulerian(args) -> int:
    from .combinatorics import eulerian_polynomial

    n_max = _arg(args.n, "n")
    if not 1 <= n_max <= 10:
        raise UsageError("--n must lie in [1, 10] (direct enumeration of S_n)")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n"] + [f"t^{i}" for i in range(n_max + 1)])
    for n in range(1, n_max + 1):
        poly = eulerian_polynomial(n)
        writer.writerow([n] + [poly[i] for i in range(n_max + 1)])
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_verify(args) -> int:
    for slot, value in (("n", args.n), ("k", args.k), ("degree", args.degree)):
        if value is not None and value < (1 if slot == "k" else 0):
            raise UsageError(f"--{slot} must be nonnegative" + (" and k >= 1" if slot == "k" else ""))
    if args.n is not None and args.n > MODULE_SIZE_BUDGET:
        raise UsageError(f"--n {args.n} is over the budget of {MODULE_SIZE_BUDGET}")
    reports = []
    for suite, fn, kwargs in plan(args.suite, args.profile, args.n, args.k, args.degree):
        report = fn(**kwargs)
        report.parameters = {"suite": suite, **report.parameters}
        reports.append(report)
        print(f"{report.verdict}  {suite}/{report.name}  {kwargs}  {report.wall_time:.2f}s", file=sys.stderr)
    text = "".join(r.to_json(timings=args.timings) + "\n" for r in reports)
    _emit(text, args.out)
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed", file=sys.stderr)
    return 1 if failed else 0


def _arg(value, slot):
    return DEFAULTS[slot] if value is None else value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coloredext", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def budgets(p, degree=False):
        p.add_argument("--n", type=int, default=None, help=f"size bound (default {DEFAULTS['n']})")
        p.add_argument("--k", type=int, default=None, help=f"number of colors (default {DEFAULTS['k']})")
        if degree:
            p.add_argument("--degree", type=int, default=None, help=f"series degree (default {DEFAULTS['degree']})")
        p.add_argument("--out", default=None, help="write to this file instead of standard output")

    p = sub.add_parser("poset", help="export B_n^[k] as DOT or JSON")
    budgets(p)
    p.add_argument("--format", choices=["dot", "json"], default=None)
    p.add_argument("--hat", action="store_true", help="adjoin a top element")
    p.add_argument("--no-labels", action="store_true", help="omit edge labels")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("dims", help="table of |Ninc|, rank-nullity dimension and top Betti number")
    budgets(p)
    p.add_argument("--format", choices=["csv", "json"], default=None)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("betti", help="reduced Betti numbers of maximal open intervals (JSON lines)")
    budgets(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("characters", help="S_n characters and Schur expansions for |mu| = n (JSON lines)")
    budgets(p)
    p.add_argument("--source", choices=["exterior", "cohomology"], default="exterior")
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("series", help="truncated double series in the m(x) m(y) basis (JSON)")
    p.add_argument("--degree", type=int, default=None, help=f"truncation degree (default {DEFAULTS['degree']})")
    p.add_argument("--which", choices=["lhs", "inverse", "rhs"], default="rhs")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("eulerian", help="CSV table of Eulerian polynomial coefficients for n = 1 .. --n")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_eulerian)

    p = sub.add_parser("verify", help="run a verification suite; JSON lines on stdout, summary on stderr")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    budgets(p, degree=True)
    p.add_argument("--profile", choices=["quick", "full"], default="quick",
                   help="quick uses n=4, k=2, degree=4; full uses the acceptance budgets")
    p.add_argument("--timings", action="store_true", help="include wall_time in the JSON output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"coloredext: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
