"""Command-line front end.

Subcommands:

    present  emit a presentation document (json / latex / text)
    verify   run verification suites, optionally writing report files
    det      quantum or braided determinant
    twist    apply the twisting map to a word
    sigma    the q-scalar of a composition, optionally at a root of unity
    count    term counts of the diagonal power relation

All randomness is seeded (--seed, default 0) and the seed is echoed in
reports.  Output goes to stdout or --out; errors go to stderr with a
nonzero exit status.
"""

import argparse
import json
import os
import sys

from .laurent import CyclotomicCtx, sigma_q
from .compositions import parse_composition
from .matrix_algebra import context, parse_word, qdet, render_element
from .braided import det_terms
from .twisting import twist
from . import presentations
from .presentations import present, count_terms, count_terms_closed, render_side
from . import verify as verify_mod
from . import report as report_mod


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="smallre",
        description="Exact computation in quantum matrix algebras and their small reflection-equation quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", help="emit a presentation document")
    p.add_argument("--family", required=True, choices=presentations.FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--format", choices=("json", "latex", "text"), default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        default="all",
        choices=("all",) + verify_mod.SUITE_NAMES,
    )
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--ell", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("SMALLRE_WORKERS", "1")),
    )
    p.add_argument("--budget", type=float, default=verify_mod.DEFAULT_BUDGET)
    p.add_argument("--out-dir", default=None, help="write report.json/.csv/.png here")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("det", help="quantum determinant (or braided determinant)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--braided", action="store_true")
    p.add_argument("--format", choices=("json", "latex", "text"), default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("twist", help="apply the twisting map to a word")
    p.add_argument("--word", required=True, help='e.g. "x[1,1]^3" or "x[1,2]*x[2,1]"')
    p.add_argument("--n", type=int, default=None, help="default: max index in the word")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("sigma", help="q-scalar of a composition")
    p.add_argument("--composition", required=True, help='e.g. "3,1,2"')
    p.add_argument("--ell", type=int, default=None, help="reduce at a root of unity")
    p.add_argument("--out", default=None)

    p = sub.add_parser("count", help="term counts of the diagonal power relation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--kmax", type=int, default=None, help="default: n")
    p.add_argument("--plot", default=None, help="write a comparison chart PNG here")
    p.add_argument("--out", default=None)

    return parser


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _cmd_present(args):
    doc = present(args.family, args.n, args.ell)
    if args.format == "json":
        _emit(doc.dumps(), args.out)
    elif args.format == "latex":
        _emit(doc.to_latex(), args.out)
    else:
        _emit(doc.to_text(), args.out)
    return 0


def _cmd_verify(args):
    names = verify_mod.SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = [
        verify_mod.run_suite(
            name,
            n=args.n,
            ell=args.ell,
            seed=args.seed,
            workers=args.workers,
            budget=args.budget,
        )
        for name in names
    ]
    if args.out_dir:
        paths = report_mod.write_report(reports, args.out_dir)
        sys.stderr.write(
            "wrote " + " ".join(paths[k] for k in ("json", "csv", "png")) + "\n"
        )
    if args.format == "json":
        print(json.dumps(report_mod.report_json(reports), sort_keys=True, indent=2))
    else:
        for rep in reports:
            print(rep.to_text())
    return 0 if all(rep.passed for rep in reports) else 1


def _cmd_det(args):
    if args.braided:
        # the determinant as written: signed q-power coefficients on the
        # generator chains, not its normalized PBW expansion
        terms = det_terms(args.n)
        if args.format == "json":
            payload = {
                "n": args.n,
                "terms": [
                    {"coeff": c.to_json(args.n), "word": [list(l) for l in w]}
                    for c, w in terms
                ],
            }
            _emit(json.dumps(payload, sort_keys=True), args.out)
        else:
            _emit(
                render_side(terms, args.n, latex=(args.format == "latex")), args.out
            )
        return 0
    element = qdet(context(args.n))
    if args.format == "json":
        _emit(json.dumps(element.to_json(), sort_keys=True), args.out)
    else:
        _emit(render_element(element, "x", star=False), args.out)
    return 0


def _cmd_twist(args):
    word = parse_word(args.word)
    n = args.n if args.n is not None else max((max(i, j) for i, j in word), default=1)
    ctx = context(n)
    from .matrix_algebra import Element

    element = twist(Element.from_word(ctx, word))
    if args.format == "json":
        _emit(json.dumps(element.to_json(), sort_keys=True), args.out)
    else:
        _emit(render_element(element, "u", star=True), args.out)
    return 0


def _cmd_sigma(args):
    parts = parse_composition(args.composition)
    value = sigma_q(parts, 1)
    if args.ell is not None:
        cyc = CyclotomicCtx(args.ell, 1)
        _emit(cyc.reduce(value).render(1, qvar="e"), args.out)
    else:
        _emit(value.render(1), args.out)
    return 0


def _cmd_count(args):
    kmax = args.kmax if args.kmax is not None else args.n
    rows = [
        (k, count_terms(args.n, args.ell, k), count_terms_closed(args.ell, k))
        for k in range(1, kmax + 1)
    ]
    lines = ["k\tenumerated\tclosed_form\tmatch"]
    for k, enum, closed in rows:
        lines.append(f"{k}\t{enum}\t{closed}\t{'yes' if enum == closed else 'NO'}")
    _emit("\n".join(lines), args.out)
    if args.plot:
        report_mod.write_count_plot(args.ell, rows, args.plot)
        sys.stderr.write(f"wrote {args.plot}\n")
    return 0


_COMMANDS = {
    "present": _cmd_present,
    "verify": _cmd_verify,
    "det": _cmd_det,
    "twist": _cmd_twist,
    "sigma": _cmd_sigma,
    "count": _cmd_count,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
