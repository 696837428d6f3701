"""Dimension lower bound formulas and crossover thresholds."""

from __future__ import annotations

from fractions import Fraction

import pytest

from arithproj.errors import InvalidDimension
from arithproj.kakeya import (
    dimension_report,
    hausdorff_bound,
    minkowski_bound,
    novelty_threshold,
    wolff_bound,
)


def test_bounds_are_exact_fractions():
    assert minkowski_bound(2) == Fraction(11, 7)
    assert minkowski_bound(3) == Fraction(15, 7)
    assert hausdorff_bound(2) == Fraction(17, 11)
    assert hausdorff_bound(3) == Fraction(23, 11)
    assert wolff_bound(2) == Fraction(2)
    assert wolff_bound(7) == Fraction(9, 2)
    for n in range(2, 40):
        assert minkowski_bound(n) == Fraction(4 * n + 3, 7)
        assert hausdorff_bound(n) == Fraction(6 * n + 5, 11)
        assert wolff_bound(n) == Fraction(n + 2, 2)


def test_dimension_validation():
    for bad in (1, 0, -3):
        with pytest.raises(InvalidDimension):
            minkowski_bound(bad)
        with pytest.raises(InvalidDimension):
            dimension_report(bad)
    with pytest.raises(InvalidDimension):
        hausdorff_bound(True)
    with pytest.raises(InvalidDimension):
        wolff_bound(2.0)


def test_thresholds_match_independent_scan():
    assert novelty_threshold("minkowski") == 9
    assert novelty_threshold("hausdorff") == 13
    # independent re-derivation straight from the formulas
    expected_mink = next(
        n for n in range(2, 100) if Fraction(4 * n + 3, 7) > Fraction(n + 2, 2)
    )
    expected_haus = next(
        n for n in range(2, 100) if Fraction(6 * n + 5, 11) > Fraction(n + 2, 2)
    )
    assert novelty_threshold("minkowski") == expected_mink
    assert novelty_threshold("hausdorff") == expected_haus
    with pytest.raises(ValueError):
        novelty_threshold("box")


def test_crossover_at_eight():
    report = dimension_report(8)
    assert report.minkowski == Fraction(5)
    assert report.wolff == Fraction(5)
    assert report.best_minkowski == "equal"
    assert report.best_hausdorff == "wolff"


def test_report_winners():
    assert dimension_report(2).best_minkowski == "wolff"
    assert dimension_report(9).best_minkowski == "minkowski"
    assert dimension_report(11).best_hausdorff == "wolff"
    assert dimension_report(12).best_hausdorff == "equal"  # 77/11 = 14/2 = 7
    assert dimension_report(13).best_hausdorff == "hausdorff"
    for n in range(9, 30):
        assert dimension_report(n).best_minkowski == "minkowski"
    for n in range(13, 30):
        assert dimension_report(n).best_hausdorff == "hausdorff"


def test_report_json_shape():
    doc = dimension_report(5).to_json_dict()
    assert doc == {
        "dimension": 5,
        "minkowski": {"num": 23, "den": 7},
        "hausdorff": {"num": 35, "den": 11},
        "wolff": {"num": 7, "den": 2},
        "best_minkowski": "wolff",
        "best_hausdorff": "wolff",
    }
