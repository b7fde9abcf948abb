"""Run every CLI check command over the bundled JSON inputs and summarize."""
import argparse
from pathlib import Path

from matbrion.cli import run

DATA = Path(__file__).parent / "data"

JOBS = [
    ["qm", "--matroid", "bool2.json", "--polytope", "triangle.json", "--eval-points", "20"],
    ["brion-check", "--polytope", "hexagon.json", "--eval-points", "20"],
    ["recursion-check", "--matroid", "u23.json", "--polytope", "hexagon.json"],
    ["recip-check", "--matroid", "u23.json", "--polytope", "hexagon.json"],
    ["euler", "--matroid", "u12.json", "--delta", "zero2.json"],
    ["axiom-check", "--matroid", "u23.json", "--delta", "hexagon.json"],
    ["hstar", "--matroid", "u23.json", "--polytope", "hexagon.json"],
    ["serre-check", "--matroid", "bool2.json", "--polytope", "triangle.json"],
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--verbose", action="store_true")
    ap.add_argument("--threads", default=None)
    args = ap.parse_args()
    worst = 0
    for job in JOBS:
        argv = [str(DATA / a) if a.endswith(".json") else a for a in job]
        if args.threads:
            argv += ["--threads", args.threads]
        code, out, err = run(argv)
        worst = max(worst, code)
        print(f"[exit {code}] {' '.join(job)}")
        if args.verbose or code:
            print(out or err, end="")
    raise SystemExit(worst)


if __name__ == "__main__":
    main()
