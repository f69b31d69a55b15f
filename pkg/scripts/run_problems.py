#!/usr/bin/env python3
"""Run every CLI command that applies to each sample problem file."""
import argparse
import pathlib
import subprocess
import sys

COMMANDS = {
    "span3_l16.json": ["analyze", "norming-set", "solve", "classify"],
    "pair_l17_coproximinal.json": ["analyze", "solve", "classify", "threshold"],
    "pair_l17_not_coproximinal.json": ["analyze", "classify"],
    "pair_l15_cochebyshev.json": ["analyze", "solve", "classify"],
    "line_l12_polytope.json": ["solve", "classify"],
    "span3_l17_threshold.json": ["solve", "classify", "threshold"],
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--problems",
        default=str(pathlib.Path(__file__).resolve().parent.parent / "problems"),
    )
    args = parser.parse_args()
    problems = pathlib.Path(args.problems)
    for name, commands in COMMANDS.items():
        path = problems / name
        for command in commands:
            print(f"\n=== coapprox {command} --input {path.name} ===", flush=True)
            proc = subprocess.run(
                [sys.executable, "-m", "coapprox.cli", command, "--input", str(path)],
                text=True,
            )
            if proc.returncode != 0:
                return proc.returncode
    return 0


if __name__ == "__main__":
    sys.exit(main())
