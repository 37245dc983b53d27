"""
Reproduce the n = 45, k = 22 census: closed form, both brute-force oracles
and (with --exhaustive) the independent meet-in-the-middle count.

Usage:
    python3 scripts/reproduce_census.py [--workers 4] [--exhaustive]
"""

import argparse
import logging
import sys
from pathlib import Path

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from census import case2_profiles, census_45, exhaustive_census, verify_census_45
from utils.formatting import format_times_ten
from utils.settings import DEFAULT_EXHAUSTIVE_LIMIT, Settings


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--exhaustive", action="store_true", help="Also run the exhaustive census (minutes)")
    parser.add_argument("--exhaustive-limit", type=int, default=DEFAULT_EXHAUSTIVE_LIMIT,
                        help="Largest n accepted by the exhaustive census")
    args = parser.parse_args()
    settings = Settings(workers=args.workers, exhaustive_limit=args.exhaustive_limit)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")

    report = census_45()
    print("Case 1 (Phi_45 | f)")
    for t, count in report.breakdown.items():
        print(f"   {t} class(es) carrying h_9: {count}")
    print(f"   total: {report.count_phi_n}")

    print("\nCase 2 (Phi_15 | f)")
    print(f"   {'b':<18} {'c':<10} {'perms':>5}  multiplier")
    for profile in case2_profiles():
        print(f"   {str(profile.b):<18} {str(profile.c):<10} {profile.permutations:>5}  3^{profile.free_residues}")
    print(f"   total: {report.count_phi_sub}")

    print(f"\nBoth: {report.count_both}")
    print(f"Singular: {report.total} of {report.universe}")
    print(f"Probability: {report.probability} ~ {format_times_ten(report.probability, 3)}")

    check = verify_census_45(workers=settings.workers)
    print(f"\nBrute force: case 1 {check.case1_bruteforce}, case 2 {check.case2_bruteforce}, "
          f"{check.residue_vectors} residue vectors")
    print("✅ Oracles agree" if check.agrees else "❌ Oracles disagree")

    ok = check.agrees
    if args.exhaustive:
        result = exhaustive_census(45, 22, workers=settings.workers, limit=settings.exhaustive_limit)
        print(f"\nExhaustive: {result.singular} singular (per divisor {result.per_divisor})")
        ok = ok and result.singular == report.total
        print("✅ Exhaustive count agrees" if result.singular == report.total else "❌ Exhaustive count differs")

    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
