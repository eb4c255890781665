"""Report rendering: JSON and CSV payloads plus a matplotlib summary.

The JSON and CSV files carry the deterministic check results; the PNG
is a per-suite pass/fail bar chart written alongside them.  matplotlib
is imported lazily with the Agg backend so the verify path works in
headless batch environments.
"""

import csv
import json
import os


def report_json(reports):
    return {"reports": [r.to_json() for r in reports]}


def write_report(reports, out_dir):
    """Write report.json, report.csv, and report.png into out_dir;
    returns the mapping of artifact name to path."""
    os.makedirs(out_dir, exist_ok=True)
    paths = {
        "json": os.path.join(out_dir, "report.json"),
        "csv": os.path.join(out_dir, "report.csv"),
        "png": os.path.join(out_dir, "report.png"),
    }
    with open(paths["json"], "w") as fh:
        json.dump(report_json(reports), fh, sort_keys=True, indent=2)
        fh.write("\n")
    with open(paths["csv"], "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "check", "ok", "detail"])
        for rep in reports:
            for key, ok, detail in rep.checks:
                writer.writerow([rep.suite, key, "pass" if ok else "fail", detail])
    _write_figure(reports, paths["png"])
    return paths


def _write_figure(reports, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    suites = [r.suite for r in reports]
    passed = [r.counts[0] for r in reports]
    failed = [r.counts[1] - r.counts[0] for r in reports]
    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(suites)), 4))
    xs = range(len(suites))
    ax.bar(xs, passed, color="#2a7e43", label="pass")
    ax.bar(xs, failed, bottom=passed, color="#b33a3a", label="fail")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(suites, rotation=30, ha="right")
    ax.set_ylabel("checks")
    ax.set_title("verification suites")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_count_plot(ell, rows, path):
    """Bar chart comparing enumerated monomial counts against the
    documented closed form; rows are (k, enumerated, closed)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ks = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    width = 0.4
    ax.bar([k - width / 2 for k in ks], [r[1] for r in rows], width, label="enumerated")
    ax.bar([k + width / 2 for k in ks], [r[2] for r in rows], width, label="closed form")
    ax.set_xlabel("k")
    ax.set_ylabel("monomials")
    ax.set_title(f"diagonal power relation term counts, ell={ell}")
    ax.set_xticks(ks)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
