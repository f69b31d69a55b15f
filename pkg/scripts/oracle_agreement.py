#!/usr/bin/env python3
"""Solver-versus-oracle agreement experiment on random instances.

Every reported solution must survive the orthogonality oracle, and every
non-existence verdict must leave the brute-force grid empty-handed.
"""
import argparse
import random
import sys
import time
from fractions import Fraction as Q

from coapprox import (
    OutcomeKind,
    brute_force_existence,
    prepare,
    solve_general,
    verify_best_coapprox,
)
from coapprox.instances import random_basis, random_vector


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--trials", type=int, default=200)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    kinds = {k.value: 0 for k in OutcomeKind}
    disagreements = 0
    start = time.perf_counter()
    for i in range(args.count):
        n = rng.randint(2, args.max_n)
        m = rng.randint(1, min(3, n - 1))
        zero_rows = min(rng.choice((0, 0, 0, 1, 2)), n - m)
        basis = random_basis(rng, n, m, zero_rows=zero_rows)
        pb = prepare(basis)
        b = random_vector(rng, n)
        out = solve_general(basis, pb.profile, b, prepared=pb)
        kinds[out.kind.value] += 1
        if out.kind is OutcomeKind.NOT_EXISTS:
            agreed = not brute_force_existence(basis, b, Q(5), Q(1, 2)).exists
        else:
            agreed = verify_best_coapprox(
                basis, b, out.chosen_alpha, trials=args.trials, seed=args.seed
            ).confirmed
        if not agreed:
            disagreements += 1
            print(f"instance {i}: DISAGREEMENT\n  matrix={basis.matrix}\n  b={b}")
    elapsed = time.perf_counter() - start
    print(
        f"{args.count} instances in {elapsed:.1f}s: {kinds}, "
        f"{disagreements} disagreements"
    )
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
