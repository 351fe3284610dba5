#!/usr/bin/env python3
"""Run the default verification sweep and write report.json next to this file.

Equivalent to `orthopara sweep --out report.json`; exit status 0 iff every
case passed.
"""

import sys
from pathlib import Path

from orthopara.cli import SweepConfig, run_sweep


def main():
    out = Path(__file__).resolve().parent / "report.json"
    cfg = SweepConfig(out_path=str(out))
    summary = run_sweep(cfg, stream=sys.stdout)
    print(f"report written to {out}")
    return 0 if summary.failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
