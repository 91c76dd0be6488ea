#!/usr/bin/env python3
"""Exhaustive three-qubit sign-pattern search for ME states, with the four-term pair-rule check."""
import argparse

from maxconc.search import EnumerationQuery, compare_pair_rule, enumerate_sign_patterns


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--predicate", default="ME")
    ap.add_argument("--dedupe", action="store_true")
    args = ap.parse_args()

    res = enumerate_sign_patterns(EnumerationQuery(3, tuple(range(1, 9)), args.predicate, args.dedupe))
    print(f"examined {res.examined} patterns in {res.seconds:.2f}s")
    for size, count in res.hits_by_size.items():
        print(f"  support {size}: {count} hits")
    if args.dedupe:
        for p, _ in res.hits:
            print("  ", p.ket_string())

    cmp = compare_pair_rule(3)
    print(f"four-term hits: {cmp.hits}; complementary pairs with negative product: {cmp.matching}")
    print(f"rule patterns not found: {cmp.rule_patterns_missed} of {cmp.rule_patterns}")
    for p in cmp.counterexamples[:8]:
        print("  outside the pair rule:", p.ket_string())


if __name__ == "__main__":
    main()
