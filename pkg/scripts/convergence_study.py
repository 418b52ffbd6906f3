"""Degree sweeps for a few analytic principal values, written as CSV.

    python scripts/convergence_study.py [OUTDIR]
"""

import sys
from pathlib import Path

from chebpv.cli import main

CASES = {
    "exp_over_x": ["--expr", "exp(x)/x", "--singularity", "0"],
    "cos_over_x": ["--expr", "cos(x)/x", "--singularity", "0"],
    "shifted_pole": ["--expr", "1/(x-0.5)", "--singularity", "0.5"],
    "reciprocal_shift": ["--expr", "1/((2+x)*x)", "--singularity", "0"],
    "off_center_exp": ["--expr", "exp(x)/(x-0.3)", "--interval", "-1", "2", "--singularity", "0.3"],
}


def run(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        target = outdir / f"{name}.csv"
        code = main(["study", *argv, "--degrees", "2:256:x2", "--out", str(target)])
        if code:
            raise SystemExit(f"{name}: exit {code}")
        print(f"--- {name}")
        print(target.read_text(), end="")


if __name__ == "__main__":
    run(Path(sys.argv[1] if len(sys.argv) > 1 else "results"))
