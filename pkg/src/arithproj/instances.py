"""Instances: finite sets A, B and a relation G inside A x B over an ambient group.

The objects of study are the projections {alpha*a + beta*b : (a, b) in G}
under integer linear forms.  Three forms matter here: (1, 1) gives the sum
slice C, (1, -1) the difference set, and (1, 2) the skew slice D.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import HypothesisViolated, MalformedInstance
from .groups import AmbientGroup

__all__ = [
    "DIFFERENCE",
    "SKEW_SUM",
    "SUM",
    "HypothesisReport",
    "Instance",
    "LinearForm",
    "check_hypotheses",
    "is_difference_injective",
    "load_instance",
    "project",
    "reduce_to_difference_injective",
    "require_hypotheses",
    "save_instance",
]


@dataclass(frozen=True)
class LinearForm:
    """The map (a, b) -> alpha*a + beta*b with fixed integer coefficients."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha == 0 and self.beta == 0:
            raise ValueError("linear form must have a nonzero coefficient")

    def apply(self, group: AmbientGroup, a: int, b: int) -> int:
        return group.add(group.scale(self.alpha, a), group.scale(self.beta, b))


SUM = LinearForm(1, 1)
DIFFERENCE = LinearForm(1, -1)
SKEW_SUM = LinearForm(1, 2)


def _check_element(group: AmbientGroup, x: object, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise MalformedInstance(f"{what} must be an int, got {x!r}")
    if not group.is_canonical(x):
        raise MalformedInstance(
            f"{what} {x} is not canonical for modulus {group.modulus}"
        )
    return x


@dataclass(frozen=True)
class Instance:
    """A, B, and pairs G, all stored sorted and deduplicated.

    G is a subset of A x B; A and B must be nonempty (G may be empty).
    """

    group: AmbientGroup
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        g = self.group
        a_sorted = tuple(sorted({_check_element(g, x, "A element") for x in self.a_set}))
        b_sorted = tuple(sorted({_check_element(g, x, "B element") for x in self.b_set}))
        if not a_sorted or not b_sorted:
            raise MalformedInstance("A and B must be nonempty")
        seen: set[tuple[int, int]] = set()
        for pair in self.pairs:
            if not (isinstance(pair, (tuple, list)) and len(pair) == 2):
                raise MalformedInstance(f"pair {pair!r} is not a 2-sequence")
            x = _check_element(g, pair[0], "pair first coordinate")
            y = _check_element(g, pair[1], "pair second coordinate")
            seen.add((x, y))
        a_lookup = set(a_sorted)
        b_lookup = set(b_sorted)
        for x, y in seen:
            if x not in a_lookup or y not in b_lookup:
                raise MalformedInstance(f"pair ({x}, {y}) lies outside A x B")
        object.__setattr__(self, "a_set", a_sorted)
        object.__setattr__(self, "b_set", b_sorted)
        object.__setattr__(self, "pairs", tuple(sorted(seen)))

    def partners(self) -> dict[int, tuple[int, ...]]:
        """For each a, the sorted tuple of b with (a, b) in G."""
        out: dict[int, list[int]] = {}
        for x, y in self.pairs:
            out.setdefault(x, []).append(y)
        return {x: tuple(ys) for x, ys in out.items()}

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.to_json(),
            "A": list(self.a_set),
            "B": list(self.b_set),
            "G": [list(p) for p in self.pairs],
        }

    @classmethod
    def from_json_dict(cls, obj: object) -> "Instance":
        if not isinstance(obj, dict):
            raise MalformedInstance(f"instance document must be an object, got {type(obj).__name__}")
        missing = {"group", "A", "B", "G"} - set(obj)
        if missing:
            raise MalformedInstance(f"instance document missing keys: {sorted(missing)}")
        try:
            group = AmbientGroup.from_json(obj["group"])
        except ValueError as exc:
            raise MalformedInstance(str(exc)) from exc
        for key in ("A", "B", "G"):
            if not isinstance(obj[key], list):
                raise MalformedInstance(f"{key} must be a list")
        return cls(
            group=group,
            a_set=tuple(obj["A"]),
            b_set=tuple(obj["B"]),
            pairs=tuple(tuple(p) if isinstance(p, list) else p for p in obj["G"]),
        )


def load_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedInstance(f"{path}: not valid JSON ({exc})") from exc
    return Instance.from_json_dict(doc)


def save_instance(inst: Instance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(inst.to_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def project(inst: Instance, form: LinearForm) -> frozenset[int]:
    """The set {alpha*a + beta*b : (a, b) in G}."""
    g = inst.group
    return frozenset(form.apply(g, x, y) for x, y in inst.pairs)


@dataclass(frozen=True)
class HypothesisReport:
    """Cardinalities of the slices and which budget hypotheses they satisfy."""

    budget: int
    sizes: dict[str, int]
    satisfied: dict[str, bool]

    @property
    def all_satisfied(self) -> bool:
        return all(self.satisfied.values())

    def to_json_dict(self) -> dict:
        return {
            "N": self.budget,
            "sizes": dict(self.sizes),
            "satisfied": dict(self.satisfied),
        }


def check_hypotheses(inst: Instance, budget: int, with_d: bool = False) -> HypothesisReport:
    """Check #A, #B <= budget, #C <= budget, and optionally #D <= budget.

    C = project under (1, 1) and D = project under (1, 2).
    """
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    sizes = {
        "A": len(inst.a_set),
        "B": len(inst.b_set),
        "C": len(project(inst, SUM)),
    }
    satisfied = {
        "ab-card": sizes["A"] <= budget and sizes["B"] <= budget,
        "c-card": sizes["C"] <= budget,
    }
    if with_d:
        sizes["D"] = len(project(inst, SKEW_SUM))
        satisfied["d-card"] = sizes["D"] <= budget
    return HypothesisReport(budget=budget, sizes=sizes, satisfied=satisfied)


def require_hypotheses(inst: Instance, budget: int, with_d: bool = False) -> HypothesisReport:
    """check_hypotheses, but raise HypothesisViolated on any failure."""
    report = check_hypotheses(inst, budget, with_d=with_d)
    if not report.all_satisfied:
        failed = sorted(name for name, ok in report.satisfied.items() if not ok)
        raise HypothesisViolated(
            f"hypotheses {failed} fail for budget {budget} (sizes {report.sizes})"
        )
    return report


def is_difference_injective(inst: Instance) -> bool:
    """True when a - b is distinct across the pairs of G."""
    g = inst.group
    return len({g.sub(x, y) for x, y in inst.pairs}) == len(inst.pairs)


def reduce_to_difference_injective(inst: Instance) -> Instance:
    """Keep one pair per distinct difference a - b.

    The kept pair is the lexicographically smallest with that difference, so
    the result is deterministic and the map is idempotent.  The difference
    projection is unchanged; no slice grows.
    """
    g = inst.group
    kept: dict[int, tuple[int, int]] = {}
    for pair in inst.pairs:  # pairs are sorted, so first hit is lex-smallest
        delta = g.sub(pair[0], pair[1])
        if delta not in kept:
            kept[delta] = pair
    return Instance(
        group=inst.group,
        a_set=inst.a_set,
        b_set=inst.b_set,
        pairs=tuple(sorted(kept.values())),
    )
