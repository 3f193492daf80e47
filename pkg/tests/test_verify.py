import random
from fractions import Fraction as F

import pytest

from oracles import family_plans
from tricover import methods
from tricover.geometry import Placement, Point2, TargetTriangle, contains
from tricover.verify import (
    CheckMethod,
    WidthFunction,
    pointwise_necessity_check,
    sample_check,
    target_width,
    verify_coverage,
    width_function,
    width_identity_check,
)

U, D = Placement.up, Placement.down


def all_generated_plans():
    for n in range(1, 7):
        for d in (F(1, 7), F(1, 3), F(1, 2), F(5, 7), F(9, 10)):
            yield from family_plans(n, d)
        yield methods.grid_cover(n)


def random_plan(rng):
    """A generated plan, forced past its threshold about half the time."""
    n = rng.randint(2, 6)
    kind = rng.choice(["cs1", "bl3", "even", "odd", "consolidated"])
    excess = F(rng.randint(0, 40), 400) if rng.random() < 0.5 else 0
    if kind == "cs1":
        return methods.cs1_cover(n, min(F(1, n + 1) + excess, F(99, 100)), force=True)
    if kind == "bl3":
        return methods.bl3_cover(n, min(F(1, n) + excess, F(99, 100)), force=True)
    if kind == "even":
        j = rng.randint(1, n)
        return methods.even_cover(n, min(1 - F(j, n + 1) + excess, F(99, 100)), j, force=True)
    if kind == "odd":
        j = rng.randint(2, n)
        return methods.odd_cover(n, min(F(j - 1, n) + excess, F(99, 100)), j, force=True)
    return methods.consolidated_cover(n, F(rng.randint(1, 99), 100))


class TestExactSlab:
    def test_grid_one(self):
        report = verify_coverage(methods.grid_cover(1))
        assert report.covered and report.witness is None
        assert report.checked_method is CheckMethod.EXACT_SLAB

    def test_single_up_too_small(self):
        target = TargetTriangle(1, F(1, 2))
        report = verify_coverage([U(0, 0)], target)
        w = report.witness
        assert not report.covered
        assert target.contains(w) and w.x + w.y > 1 and not contains(U(0, 0), w)

    def test_fig3(self):
        assert verify_coverage(methods.even_cover(2, F(2, 3), 1), TargetTriangle(2, F(2, 3))).covered

    def test_gap_strictly_between_levels(self):
        # the strip 1 < y < 11/10 is empty, but both of its boundary levels are covered:
        # the down-triangle's top edge at y = 1, the raised up-triangle's base at 11/10
        plan = [U(0, 0), D(0, 1), U(1, 0), U(0, F(11, 10))]
        report = verify_coverage(plan, TargetTriangle(2))
        assert not report.covered
        assert 1 < report.witness.y < F(11, 10)

    def test_touching_intervals_are_contiguous(self):
        assert verify_coverage([U(0, 0), D(0, 1), U(1, 0), U(0, 1)], TargetTriangle(2)).covered

    def test_empty_plan(self):
        report = verify_coverage([], TargetTriangle(1))
        assert not report.covered and report.witness == Point2(F(1, 2), 0)

    def test_triangles_outside_target_do_not_matter(self):
        plan = list(methods.grid_cover(2).placements) + [U(10, 10), D(-5, -5)]
        assert verify_coverage(plan, TargetTriangle(2)).covered

    def test_every_gap_witness_is_genuine(self):
        rng = random.Random(11)
        for _ in range(100):
            plan = random_plan(rng)
            report = verify_coverage(plan)
            if not report.covered:
                assert plan.target.contains(report.witness)
                assert not any(contains(p, report.witness) for p in plan.placements)


class TestSampling:
    def test_covered_plan(self):
        plan = methods.even_cover(3, F(3, 4), 1)
        report = sample_check(plan, seed=3, count=10_000)
        assert report.covered and report.checked_method is CheckMethod.SAMPLING

    def test_finds_alpha_gap(self):
        report = sample_check(methods.cs1_cover(2, F(1, 3) + F(1, 100), force=True), seed=5, count=100_000)
        assert not report.covered
        assert not any(contains(p, report.witness) for p in methods.cs1_cover(2, F(1, 3) + F(1, 100), force=True))

    def test_deterministic(self):
        plan = methods.bl3_cover(4, F(1, 3), force=True)
        assert sample_check(plan, seed=9, count=2000) == sample_check(plan, seed=9, count=2000)

    def test_rejects_zero_count(self):
        with pytest.raises(ValueError):
            sample_check(methods.grid_cover(1), count=0)

    def test_agrees_with_exact(self):
        rng = random.Random(2024)
        both_gap = 0
        for i in range(200):
            plan = random_plan(rng)
            exact = verify_coverage(plan)
            sampled = sample_check(plan, seed=i, count=400)
            if not sampled.covered:
                assert not exact.covered
                both_gap += 1
        assert both_gap > 20


class TestWidthFunction:
    def test_single_up(self):
        f = width_function(U(0, 0))
        assert f(F(1, 4)) == F(3, 4)
        assert f.integral == F(1, 2) and f.slope == -1

    def test_grid_three(self):
        assert width_function(methods.grid_cover(3)).integral == F(9, 2)
        assert width_function(TargetTriangle(3)).integral == F(9, 2)

    def test_kinked_target_not_in_group(self):
        with pytest.raises(ValueError):
            width_function(TargetTriangle(3, F(1, 2)))

    def test_integral_and_parity_laws(self):
        for plan in all_generated_plans():
            f = width_function(plan)
            ups = sum(p.is_up for p in plan.placements)
            assert f.integral == F(plan.count, 2)
            assert f.slope == (plan.count - ups) - ups
            b = f.integral * 2
            assert b.denominator == 1 and (b - f.slope) % 2 == 0

    def test_single_placement_parity(self):
        for p in (U(F(1, 3), F(2, 7)), D(F(-1, 2), F(5, 4))):
            f = width_function(p)
            assert f.integral == F(1, 2) and (1 - f.slope) % 2 == 0

    def test_generators_wrap(self):
        f = WidthFunction([(1, F(3, 4)), (-1, F(5, 4))])
        assert f.terms == ((-1, F(1, 4)), (1, F(3, 4)))
        assert f(0) == F(1, 4) + (1 - F(3, 4))

    def test_target_width_by_hand(self):
        # T_{3.5}: heights 1/4, 5/4, 9/4, 13/4 give widths 13/4, 9/4, 5/4, 1/4
        assert target_width(TargetTriangle(3, F(1, 2)), F(1, 4)) == F(28, 4)


class TestWidthIdentity:
    def test_examples(self):
        assert width_identity_check(3, F(1, 2), F(1, 4))
        assert width_identity_check(3, F(1, 2), F(3, 4))
        assert width_identity_check(4, F(2, 7), F(2, 7))

    def test_random(self):
        rng = random.Random(7)
        for _ in range(20):
            n, d = rng.randint(1, 6), F(rng.randint(1, 999), 1000)
            for _ in range(100):
                assert width_identity_check(n, d, F(rng.randint(0, 9999), 10000))

    def test_detects_a_wrong_side(self):
        # dropping the apex term breaks the identity below the kink
        t, n, d = F(1, 4), 3, F(1, 2)
        assert target_width(TargetTriangle(n, d), t) != width_function(TargetTriangle(n))(t) + n * d


class TestNecessity:
    def test_verified_plans_dominate(self):
        rng = random.Random(1)
        for n in range(2, 6):
            plan = methods.consolidated_cover(n, F(rng.randint(1, 99), 100))
            assert verify_coverage(plan).covered
            for _ in range(100):
                assert pointwise_necessity_check(plan, None, F(rng.randint(0, 999), 1000))

    def test_flags_non_coverage(self):
        target = TargetTriangle(1, F(1, 2))
        assert width_function([U(0, 0)])(F(3, 5)) == F(2, 5)
        assert target_width(target, F(3, 5)) == F(9, 10)
        assert not pointwise_necessity_check([U(0, 0)], target, F(3, 5))

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_grid_is_tight(self, n):
        plan = methods.grid_cover(n)
        for t in (0, F(1, 3), F(1, 2), F(99, 100)):
            assert width_function(plan)(t) == target_width(TargetTriangle(n), t)
