import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigrid.diagnostics import ParamError
from trigrid.spacing import (Circular, Stripe, Uniform, eval_spacing,
                             parse_spacing)

from oracles import circular_reference, stripe_reference

coord = st.floats(-50, 50, allow_nan=False)


class TestUniform:
    def test_constant_everywhere(self):
        f = Uniform(0.7)
        assert f(0, 0) == 0.7
        assert f(1e6, -1e6) == 0.7

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ParamError):
            Uniform(bad)


class TestCircular:
    def test_center_value_is_inner_delta(self):
        f = Circular(0.2, 0.01, 1.0)
        assert f(0.0, 0.0) == pytest.approx(0.01, abs=1e-15)

    def test_unit_radius_value(self):
        f = Circular(0.2, 0.01, 1.0)
        assert f(1.0, 0.0) == pytest.approx(0.13010290617742598, abs=1e-15)
        assert f(0.0, -1.0) == pytest.approx(0.13010290617742598, abs=1e-15)

    def test_far_field_tends_to_outer_delta(self):
        f = Circular(0.2, 0.01, 1.0)
        assert f(100.0, 0.0) == pytest.approx(0.2, abs=1e-12)

    def test_offset_center(self):
        f = Circular(0.2, 0.01, 2.5, 3.0, -4.0)
        assert f(3.0, -4.0) == pytest.approx(0.01, abs=1e-15)

    def test_matches_high_precision_reference(self):
        rng = random.Random(7)
        f = Circular(0.2, 0.01, 1.0, 1.5, 0.5)
        for _ in range(200):
            x, y = rng.uniform(-3, 3), rng.uniform(-3, 3)
            want = circular_reference(0.2, 0.01, 1.0, 1.5, 0.5, x, y)
            assert f(x, y) == pytest.approx(want, abs=1e-12)

    @given(coord, coord)
    def test_bounded_between_the_two_deltas(self, x, y):
        f = Circular(0.2, 0.01, 1.0)
        v = f(x, y)
        assert 0.01 - 1e-15 <= v <= 0.2 + 1e-15

    def test_rejects_bad_params(self):
        with pytest.raises(ParamError):
            Circular(0.2, 0.01, 0.0)
        with pytest.raises(ParamError):
            Circular(-0.2, 0.01, 1.0)


class TestStripe:
    def test_on_the_line_value_is_base_delta(self):
        f = Stripe(0.1, 0.4, 0.0, 2.0)
        assert f(5.0, 0.0) == pytest.approx(0.1, abs=1e-15)
        assert f(-3.0, 0.0) == pytest.approx(0.1, abs=1e-15)

    def test_one_length_away_adds_full_increment(self):
        f = Stripe(0.1, 0.4, 0.0, 2.0)
        assert f(0.0, 2.0) == pytest.approx(0.5, abs=1e-15)
        assert f(0.0, -2.0) == pytest.approx(0.5, abs=1e-15)

    def test_rotated_line(self):
        alpha = math.radians(30)
        f = Stripe(0.1, 0.4, alpha, 2.0)
        along = (math.cos(alpha) * 7, math.sin(alpha) * 7)
        assert f(*along) == pytest.approx(0.1, abs=1e-12)

    def test_matches_high_precision_reference(self):
        rng = random.Random(11)
        f = Stripe(0.05, 0.3, math.radians(20), 1.5, 0.2, -0.1)
        for _ in range(200):
            x, y = rng.uniform(-3, 3), rng.uniform(-3, 3)
            want = stripe_reference(0.05, 0.3, math.radians(20), 1.5,
                                    0.2, -0.1, x, y)
            assert f(x, y) == pytest.approx(want, abs=1e-12)

    @given(coord, coord)
    def test_never_below_base_delta(self, x, y):
        f = Stripe(0.1, 0.4, 0.3, 2.0)
        assert f(x, y) >= 0.1 - 1e-15

    def test_rejects_bad_params(self):
        with pytest.raises(ParamError):
            Stripe(0.1, 0.4, 0.0, 0.0)
        with pytest.raises(ParamError):
            Stripe(0.1, -0.4, 0.0, 2.0)


class TestParse:
    def test_uniform(self):
        f = parse_spacing("uniform:0.25")
        assert isinstance(f, Uniform) and f.delta == 0.25

    def test_circular_with_center(self):
        f = parse_spacing("circular:0.2,0.01,1,1.5,0.5")
        assert isinstance(f, Circular)
        assert (f.delta_a, f.delta_b, f.beta, f.xs, f.ys) == \
            (0.2, 0.01, 1.0, 1.5, 0.5)

    def test_circular_center_defaults_to_origin(self):
        f = parse_spacing("circular:0.2,0.01,1")
        assert (f.xs, f.ys) == (0.0, 0.0)

    def test_stripe_angle_given_in_degrees(self):
        f = parse_spacing("stripe:0.1,0.4,30,2")
        assert isinstance(f, Stripe)
        assert f.alpha == pytest.approx(math.radians(30))
        assert (f.xc, f.yc) == (0.0, 0.0)

    def test_stripe_with_center(self):
        f = parse_spacing("stripe:0.1,0.4,0,2,5,6")
        assert (f.xc, f.yc) == (5.0, 6.0)

    def test_whitespace_tolerated(self):
        f = parse_spacing("  uniform:2.5 ")
        assert f.delta == 2.5

    @pytest.mark.parametrize("bad", [
        "uniform", "uniform:", "uniform:1,2", "uniform:abc",
        "circular:0.2,0.01", "circular:0.2,0.01,1,1.5",
        "stripe:0.1,0.4,30", "gauss:1", "", "uniform:-3",
    ])
    def test_bad_specs_rejected(self, bad):
        with pytest.raises(ParamError):
            parse_spacing(bad)

    def test_eval_helper_dispatches(self):
        assert eval_spacing(Uniform(2.0), 9.0, 9.0) == 2.0
        assert eval_spacing(lambda x, y: x + y, 1.0, 2.0) == 3.0
