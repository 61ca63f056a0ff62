#!/usr/bin/env python3
"""Analyze the built-in generator corpus and dump reports.

Writes one JSON report plus defect-profile and complexity CSVs per corpus
word into the output directory.  Useful as a smoke test and as a data
source for plots.

Usage: python3 scripts/corpus_report.py --out-dir out/ --len 8000
"""
import argparse
import json
import pathlib
import sys

from palrich.cli import main as cli_main

CORPUS = {
    "fibonacci": ["--gen", "fibonacci"],
    "tribonacci": ["--gen", "tribonacci"],
    "thue_morse": ["--gen", "thue_morse"],
    "periodic_aab": ["--gen", "periodic:aab"],
    "ts_exchange": ["--gen", "theta_standard", "--theta", "pairs:a-b",
                    "--directive", "(ab)"],
    "ts_mixed3": ["--gen", "theta_standard", "--theta", "pairs:a-b,c-c",
                  "--directive", "(abc)"],
    "ts_seeded_rev": ["--gen", "theta_standard", "--theta", "pairs:a-a,b-b",
                      "--seed-word", "ab", "--directive", "(ab)"],
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="corpus_reports")
    ap.add_argument("--len", type=int, default=8000)
    args = ap.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name, argv in CORPUS.items():
        report_path = out / f"{name}.json"
        code = cli_main(["analyze", *argv, "--len", str(args.len),
                         "--out", str(report_path),
                         "--profile-csv", str(out / f"{name}_profile.csv"),
                         "--table-csv", str(out / f"{name}_table.csv")])
        if code != 0:
            print(f"{name}: analyze failed with exit code {code}",
                  file=sys.stderr)
            return code
        rep = json.loads(report_path.read_text())
        summary[name] = {
            "defect": rep["defect"]["of_prefix"],
            "rich_by_T": rep["rich_by_T"],
            "closed": rep["closure"]["closed"],
        }
        print(f"{name:16s} defect={summary[name]['defect']:<4} "
              f"rich_by_T={summary[name]['rich_by_T']} "
              f"closed={summary[name]['closed']}")
    (out / "summary.json").write_text(json.dumps(summary, indent=2,
                                                 sort_keys=True) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
