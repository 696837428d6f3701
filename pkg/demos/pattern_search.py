"""Search digit alphabets {0..K} for extremal one-digit patterns.

The score of a pattern is log(#pairs) / log(largest slice): tensoring
drives the pair count to (#pairs)**n against slice sizes (slice)**n, so
a higher score means a denser construction at the same slice budget.
Comparisons between scores are resolved with integer power arithmetic,
never with float log ratios.
"""

from arithproj import SearchSpec, certify, search


def run(k, constrain_d):
    tag = "sum+diff+skew" if constrain_d else "sum+diff"
    spec = SearchSpec(alphabet_max=k, constrain_d=constrain_d, mode="exhaustive")
    res = search(spec)
    print(f"K={k} slices={tag}")
    print(f"  best exponent {res.best_exponent:.6f} "
          f"({res.nodes_explored} nodes, exhaustive={res.exhaustive})")
    for w in res.witnesses:
        print(f"  witness: {w}")
    cert = certify(res, spec)
    print(f"  certified: {cert.ok}")

    bb = search(SearchSpec(alphabet_max=k, constrain_d=constrain_d,
                           mode="branch-bound"))
    assert set(bb.witnesses) == set(res.witnesses)
    print(f"  branch-bound finds the same witnesses in {bb.nodes_explored} nodes")
    print()


def main():
    run(2, constrain_d=False)
    run(3, constrain_d=False)
    run(4, constrain_d=True)


if __name__ == "__main__":
    main()
