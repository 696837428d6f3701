"""Seeded random generators for property tests and batch verification."""

from __future__ import annotations

import random

from .chains import ChainProblem, Labeling
from .groups import AmbientGroup
from .instances import Instance

__all__ = ["random_chain_problem", "random_instance"]


def random_instance(rng: random.Random, max_side: int = 12) -> Instance:
    """Random instance over the integers or a random modular group.

    Side sets have 1..max_side elements; the relation keeps each pair of
    the Cartesian product with a density drawn once per instance, so both
    sparse and dense relations occur.  The relation may come out empty.
    """
    if max_side < 1:
        raise ValueError("max_side must be >= 1")
    if rng.random() < 0.5:
        group = AmbientGroup.integers()
        universe = range(-25, 26)
    else:
        group = AmbientGroup.integers_mod(rng.randrange(2, 61))
        universe = range(group.modulus)  # type: ignore[arg-type]
    a_size = rng.randrange(1, max_side + 1)
    b_size = rng.randrange(1, max_side + 1)
    a_set = rng.sample(universe, min(a_size, len(universe)))
    b_set = rng.sample(universe, min(b_size, len(universe)))
    density = rng.random()
    pairs = tuple(
        (a, b) for a in a_set for b in b_set if rng.random() < density
    )
    return Instance(group=group, a_set=tuple(a_set), b_set=tuple(b_set), pairs=pairs)


def random_chain_problem(
    rng: random.Random, max_items: int = 50, max_steps: int = 4
) -> ChainProblem:
    """Random chain problem with small label sets so collisions are common."""
    if max_items < 1 or max_steps < 1:
        raise ValueError("max_items and max_steps must be >= 1")
    item_count = rng.randrange(1, max_items + 1)
    items = tuple(range(item_count))
    steps = rng.randrange(1, max_steps + 1)
    labelings = []
    for _ in range(steps):
        label_count = rng.randrange(1, item_count + 1)
        assignment = {x: rng.randrange(label_count) for x in items}
        labelings.append(Labeling(assignment=assignment, label_count=label_count))
    return ChainProblem(items=items, labelings=tuple(labelings))
