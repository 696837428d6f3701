"""Build the two digit-pattern constructions and check their slice sizes.

Both families pick a handful of digit pairs in one position and tensor
them across n positions. The base is chosen large enough that sums,
differences, and skew sums never carry, so every slice size is just the
one-digit slice size raised to the n-th power.
"""

from arithproj import (
    DIFFERENCE,
    SKEW_SUM,
    SUM,
    EXAMPLE_ONE_PATTERN,
    EXAMPLE_TWO_PATTERN,
    build_example_one,
    build_example_two,
    min_base,
    project,
    tensor_sizes,
)


def describe(name, build, pattern, lengths):
    print(f"== {name} ==")
    print(f"pattern pairs: {pattern.pairs}")
    print(f"carry-free from base {min_base(pattern)}")
    for n in lengths:
        inst = build(length=n)
        a, b = len(inst.a_set), len(inst.b_set)
        c = len(project(inst, SUM))
        d = len(project(inst, SKEW_SUM))
        diff = len(project(inst, DIFFERENCE))
        predicted = tensor_sizes(pattern, n)
        print(
            f"  n={n}: #A={a} #B={b} #C={c} #D={d} #pairs={len(inst.pairs)}"
            f" #differences={diff} predicted={predicted}"
        )
    print()


def main():
    describe("six pairs, three slices small", build_example_one,
             EXAMPLE_ONE_PATTERN, (1, 2, 3, 4))
    describe("eight pairs, all four slices small", build_example_two,
             EXAMPLE_TWO_PATTERN, (1, 2, 3))

    # any base at or above the carry-free threshold gives identical counts
    base = min_base(EXAMPLE_ONE_PATTERN)
    inst_ok = build_example_one(length=2, base=base)
    inst_roomy = build_example_one(length=2, base=base + 3)
    print(f"base {base} and base {base + 3} give the same difference count:",
          len(project(inst_ok, DIFFERENCE)),
          len(project(inst_roomy, DIFFERENCE)))


if __name__ == "__main__":
    main()
