"""Cross-check the common-curve certificate against the gcd + Newton-polygon oracle.

Builds random pairs g*h1, g*h2, certifies truncated (and perturbed)
branches of g, and for every certified query looks for a branch of
gcd(f1, f2) that agrees with theta through the certified index. Also checks
the resultant degree bound on the same corpus.
"""

import argparse
import time

from puiseux_cert.harness import HarnessConfig, run_oracle_harness


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-degree", type=int, default=3)
    parser.add_argument("--coeff-range", type=int, default=3)
    args = parser.parse_args()
    config = HarnessConfig(args.pairs, args.max_degree, args.coeff_range, args.seed)
    start = time.perf_counter()
    res = run_oracle_harness(config)
    print(f"pairs={res.cases} queries={res.queries} certified={res.certified} oracle_failures={len(res.failures)}")
    print(f"resultants={res.resultants_checked} degree_bound_failures={len(res.resultant_failures)}")
    for query in res.failures[:5]:
        print("FAIL", query.to_dict())
    print(f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
