import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FIG2_DRIFT, FIG2_IN, FIG2_OUT, valid_params
from exponacci.core import FIBONACCI, Params, Winding, classify, g_closed, iterate_sequence, solve, solve_closed_form
from exponacci.errors import NotInwinding, NotOutwinding, ZeroDenominator, ZeroGamma
from exponacci.spiral import (
    AmplitudeMode,
    SpiralSample,
    ZMode,
    arc_points_inwinding,
    arc_points_large_n,
    arc_points_outwinding,
    arc_spec,
    arched_spiral,
    asymptote_slopes,
    corner_points,
    ellipticity,
    ellipticity_limit,
    empirical_slope,
    intersection_point,
    intersection_quadruple,
    segment_lengths,
    spatial_points,
    star_is_attractor,
    total_length_inwinding,
)
from exponacci.sums import gamma_brute, geometric_sum


def dist(p, q):
    return math.hypot(p[0] - q[0], p[1] - q[1])


class TestCornerPoints:
    def test_fibonacci_p7(self):
        p7 = corner_points(FIBONACCI, solve_closed_form(FIBONACCI), 7)[7]
        assert (p7.x, p7.y) == pytest.approx((-6.0, -9.0), abs=1e-12)
        assert p7.directional_index == 3

    def test_first_two(self, fig2_out):
        p, cf = fig2_out
        pts = corner_points(p, cf, 1)
        assert (pts[0].x, pts[0].y) == pytest.approx((p.g0, 0.0))
        assert (pts[1].x, pts[1].y) == pytest.approx((p.g0, p.g1))

    def test_fig2_against_alternating_sums(self, fig2_out):
        p, cf = fig2_out
        values = iterate_sequence(p, 14)
        for c in corner_points(p, cf, 12):
            n = c.n
            prev = 0.0 if n == 0 else gamma_brute(p, n - 1, values)
            expected = (gamma_brute(p, n, values), prev) if n % 2 == 0 else (prev, gamma_brute(p, n, values))
            assert (c.x, c.y) == pytest.approx(expected, rel=1e-10, abs=1e-10)

    def test_negative_n_max(self, fig2_out):
        with pytest.raises(ValueError):
            corner_points(*fig2_out, -1)


class TestSegments:
    def test_fibonacci_segment(self):
        pts = corner_points(FIBONACCI, solve_closed_form(FIBONACCI), 6)
        assert segment_lengths(pts)[4] == pytest.approx(5.0)

    def test_zero_segment(self):
        p = Params(1.0, 1.0, 0.0, 0.0, 1.0, 0.0)
        lengths = segment_lengths(corner_points(p, solve_closed_form(p), 3))
        assert lengths[0] == 0.0

    def test_needs_two_points(self, fig2_out):
        with pytest.raises(ValueError):
            segment_lengths(corner_points(*fig2_out, 0))

    @given(valid_params(d_min=0.05))
    def test_distance_law_and_right_angles(self, p):
        cf = solve_closed_form(p)
        pts = corner_points(p, cf, 40)
        values = iterate_sequence(p, 42)
        scale = max(1.0, *(abs(v) for v in values))
        for n, length in enumerate(segment_lengths(pts), start=1):
            assert abs(length - abs(g_closed(cf, p, n))) <= 1e-9 * scale
        for n in range(1, 40):
            u = (pts[n].x - pts[n - 1].x, pts[n].y - pts[n - 1].y)
            v = (pts[n + 1].x - pts[n].x, pts[n + 1].y - pts[n].y)
            # Each arm is axis-parallel: one coordinate changes, the other is fixed.
            assert abs(u[0] * v[0] + u[1] * v[1]) <= 1e-9 * scale * scale


class TestAsymptotes:
    def test_fibonacci(self):
        even, odd = asymptote_slopes(classify(FIBONACCI, solve_closed_form(FIBONACCI)))
        assert float(even) == pytest.approx(-0.6180339887, abs=1e-10)
        assert float(odd) == pytest.approx(1.6180339887, abs=1e-10)

    def test_cyclic(self):
        _, cls = solve(Params(0.0, 1.0, 0.0, 0.0, 1.0, 1.0))
        assert asymptote_slopes(cls) == (-1, 1)

    def test_horadam_slope_is_alpha(self):
        p = Params(0.7, 1.3, 0.0, 0.0, 2.0, 1.0)
        cf, cls = solve(p)
        assert float(asymptote_slopes(cls)[1]) == cf.alpha

    @given(valid_params())
    def test_exactly_orthogonal(self, p):
        even, odd = asymptote_slopes(classify(p, solve_closed_form(p)))
        assert isinstance(even, Fraction) and even * odd == -1

    def test_zero_gamma(self):
        cls = classify(FIBONACCI, solve_closed_form(FIBONACCI))
        with pytest.raises(ZeroGamma):
            asymptote_slopes(cls.__class__(0.0, Winding.INWINDING, True, True, True))

    def test_empirical_slopes_fig2(self, fig2_out):
        p, cf = fig2_out
        gamma = classify(p, cf).gamma
        pts = corner_points(p, cf, 70)
        assert empirical_slope(pts, 60) == pytest.approx(-1 / gamma, abs=1e-4)
        assert empirical_slope(pts, 61) == pytest.approx(gamma, abs=1e-4)


class TestIntersection:
    def test_fibonacci(self):
        star = intersection_point(FIBONACCI, solve_closed_form(FIBONACCI))
        assert star.x == pytest.approx(-0.2, abs=1e-12)
        assert star.y == pytest.approx(0.4, abs=1e-12)

    def test_inwinding(self, fig2_in):
        star = intersection_point(*fig2_in)
        assert (star.x, star.y) == pytest.approx((10.63, 8.52), abs=0.005)

    def test_inwinding_is_limit(self, fig2_in):
        p, cf = fig2_in
        star = intersection_point(p, cf)
        p200 = corner_points(p, cf, 200)[200].point
        assert dist(p200, star) < 1e-6 * max(1.0, math.hypot(*star))

    def test_outwinding_star_matches_quadruple_limit(self, fig2_out):
        p, cf = fig2_out
        star = intersection_point(p, cf)
        res = intersection_quadruple(p, cf, 60)
        assert res.converged and star_is_attractor(p, cf)
        assert max(dist(q, star) for q in res.quadruple) < 1e-3

    def test_published_point_corresponds_to_smaller_base(self):
        # The printed (1.033, 1.502) is reproduced by the same sequence with d = 0.8.
        p = Params(0.5, 0.8, 1.0, 0.8, 3.0, 4.0)
        star = intersection_point(p, solve_closed_form(p))
        assert (star.x, star.y) == pytest.approx((1.033, 1.502), abs=5e-4)

    def test_drift(self):
        p = FIG2_DRIFT
        cf = solve_closed_form(p)
        r24, r48 = intersection_quadruple(p, cf, 24), intersection_quadruple(p, cf, 48)
        assert not r48.converged and not star_is_attractor(p, cf)
        far = lambda r: max(dist(q, r.p_star) for q in r.quadruple)
        assert far(r48) > far(r24)

    def test_p48_magnitude(self):
        cf = solve_closed_form(FIG2_DRIFT)
        p48 = corner_points(FIG2_DRIFT, cf, 48)[48]
        assert (p48.x, p48.y) == pytest.approx((17478, -14798), abs=1)

    def test_quadruple_needs_outwinding(self, fig2_in):
        with pytest.raises(NotOutwinding):
            intersection_quadruple(*fig2_in, 40)


class TestTotalLength:
    def test_matches_truncated_series(self, fig2_in):
        p, cf = fig2_in
        total = math.fsum(iterate_sequence(p, 300))
        assert total_length_inwinding(p, cf) == pytest.approx(total, rel=1e-6)

    def test_horadam(self):
        p = Params(0.3, 0.2, 0.0, 0.0, 2.0, 1.0)
        expected = ((p.a - 1) * p.g0 - p.g1) / (p.a + p.b - 1)
        assert total_length_inwinding(p, solve_closed_form(p)) == pytest.approx(expected)

    def test_outwinding_rejected(self):
        with pytest.raises(NotInwinding):
            total_length_inwinding(FIBONACCI, solve_closed_form(FIBONACCI))


class TestArcs:
    def test_fibonacci_quarter_circles(self):
        cf = solve_closed_form(FIBONACCI)
        for n in range(1, 25):
            spec = arc_spec(FIBONACCI, cf, n, Winding.OUTWINDING)
            assert abs(spec.e_x - spec.e_y) <= 1e-12 * max(1.0, spec.e_x)

    def test_starting_points(self, fig2_out):
        p, cf = fig2_out
        G = lambda k: g_closed(cf, p, k)
        assert arc_points_outwinding(p, cf, 1, 8)[0] == pytest.approx((0.0, G(1)))
        assert arc_points_outwinding(p, cf, 2, 8)[0] == pytest.approx((G(0) - G(2), 0.0))

    def test_arc_start_is_interpolation_anchor(self, fig2_out):
        p, cf = fig2_out
        from exponacci.sums import gamma_n
        gm = lambda k: gamma_n(p, cf, k).value
        for n in range(3, 12):
            start = arc_points_outwinding(p, cf, n, 8)[0]
            expected = (gm(n), gm(n - 3)) if n % 2 == 0 else (gm(n - 3), gm(n))
            assert start == pytest.approx(expected, rel=1e-10, abs=1e-10)

    def test_outwinding_continuity(self, fig2_out):
        p, cf = fig2_out
        for n in range(1, 16):
            end = arc_points_outwinding(p, cf, n, 12)[-1]
            start = arc_points_outwinding(p, cf, n + 1, 12)[0]
            assert dist(end, start) <= 1e-9 * max(1.0, math.hypot(*start))

    def test_inwinding_continuity_and_centres(self, fig2_in):
        p, cf = fig2_in
        corners = corner_points(p, cf, 20)
        for n in range(1, 13):
            spec = arc_spec(p, cf, n)
            assert spec.center == corners[n + 4].point
            end = arc_points_inwinding(p, cf, n, 12)[-1]
            start = arc_points_inwinding(p, cf, n + 1, 12)[0]
            assert dist(end, start) <= 1e-9 * max(1.0, math.hypot(*start))

    def test_inwinding_semi_axes(self, fig2_in):
        p, cf = fig2_in
        G = lambda k: g_closed(cf, p, k)
        spec = arc_spec(p, cf, 4)
        assert (spec.e_x, spec.e_y) == (abs(G(8) - G(6)), G(7))
        spec = arc_spec(p, cf, 5)
        assert (spec.e_x, spec.e_y) == (G(8), abs(G(9) - G(7)))

    def test_inwinding_requires_inwinding(self, fig2_out):
        with pytest.raises(NotInwinding):
            arc_points_inwinding(*fig2_out, 3)

    def test_collapsed_inwinding_arc(self):
        # a = 0, b = 1 gives G_{n+2} = G_n, so the even-arc x semi-axis vanishes.
        p = Params(0.0, 1.0, 0.0, 0.0, 1.0, 2.0)
        cf = solve_closed_form(p)
        spec = arc_spec(p, cf, 2, Winding.INWINDING, samples=4)
        assert spec.e_x == 0.0 and spec.e_y > 0
        xs = {round(s.x, 12) for s in arched_spiral(p, cf, 2, 4, Winding.INWINDING) if s.n == 2}
        assert len(xs) == 1

    def test_sample_count_and_angles(self, fig2_out):
        p, cf = fig2_out
        spec = arc_spec(p, cf, 5, samples=10)
        assert spec.phi_range == (5 * math.pi / 2, 6 * math.pi / 2)
        assert len(arc_points_outwinding(p, cf, 5, 10)) == 11

    def test_arched_spiral_order(self, fig2_out):
        samples = arched_spiral(*fig2_out, 4, samples=5)
        assert [(s.n, s.i) for s in samples] == [(n, i) for n in range(1, 5) for i in range(6)]

    def test_too_few_samples(self, fig2_out):
        with pytest.raises(ValueError):
            arc_points_outwinding(*fig2_out, 3, samples=1)


class TestEllipticity:
    def test_fibonacci_circles(self):
        cf = solve_closed_form(FIBONACCI)
        for n in range(1, 30):
            assert ellipticity(FIBONACCI, cf, n) == pytest.approx(0.0, abs=1e-12)
        assert ellipticity_limit(classify(FIBONACCI, cf).gamma, Winding.OUTWINDING) == pytest.approx(0.0, abs=1e-15)

    def test_outwinding_limit(self, fig2_out):
        p, cf = fig2_out
        gamma = classify(p, cf).gamma
        assert abs(ellipticity(p, cf, 50) - ellipticity_limit(gamma, Winding.OUTWINDING)) < 1e-3

    def test_inwinding_limit(self, fig2_in):
        # The input term decays like (d/alpha)^n = 0.897^n, so go well past n = 50.
        p, cf = fig2_in
        gamma = classify(p, cf).gamma
        assert abs(ellipticity(p, cf, 150) - ellipticity_limit(gamma, Winding.INWINDING)) < 1e-3

    def test_zero_denominator(self):
        p = Params(1.0, 1.0, 0.0, 0.0, 0.0, 1.0)
        with pytest.raises(ZeroDenominator):
            ellipticity(p, solve_closed_form(p), 0, Winding.OUTWINDING)


class TestLargeN:
    def test_axes_swap_with_parity(self):
        cf = solve_closed_form(FIBONACCI)
        gamma = classify(FIBONACCI, cf).gamma
        even = arc_points_large_n(FIBONACCI, cf, 20, 4)
        odd = arc_points_large_n(FIBONACCI, cf, 21, 4)
        # Semi-axes (gamma^n, gamma^(n+1)) for n even become (gamma^(n+1), gamma^n) for n odd.
        assert dist(even[0], even[-1]) == pytest.approx(math.hypot(gamma**20, gamma**21))
        assert dist(odd[0], odd[-1]) == pytest.approx(math.hypot(gamma**22, gamma**21))

    def test_drops_dominant_amplitude(self):
        # The approximation keeps the growth gamma^n but not the amplitude A of
        # the dominant term: for Fibonacci the x semi-axis is sqrt(5) = 1/A times
        # the exact one and shares its centre.
        cf = solve_closed_form(FIBONACCI)
        exact = arc_points_outwinding(FIBONACCI, cf, 20, 6)
        approx = arc_points_large_n(FIBONACCI, cf, 20, 6)
        centre = arc_spec(FIBONACCI, cf, 20).center
        ratio = (approx[0][0] - centre.x) / (exact[0][0] - centre.x)
        assert ratio == pytest.approx(1 / cf.cap_a, rel=1e-6)
        assert approx[0][1] == pytest.approx(exact[0][1])

    def test_inwinding_runs(self, fig2_in):
        pts = arc_points_large_n(*fig2_in, 10, 6)
        assert len(pts) == 7 and all(math.isfinite(x) and math.isfinite(y) for x, y in pts)

    def test_needs_three(self, fig2_out):
        with pytest.raises(ValueError):
            arc_points_large_n(*fig2_out, 2)


class TestSpatial:
    def _planar(self, n_max, samples):
        return [SpiralSample(n, i, 0.0, 0.0) for n in range(1, n_max + 1) for i in range(samples + 1)]

    def test_linear(self, fig2_out):
        pts = spatial_points(*fig2_out, [SpiralSample(3, 5, 0.0, 0.0)], samples=10, z_mode=ZMode.LINEAR)
        assert pts[0].z == 3.5

    def test_local_input(self, fig2_out):
        p, cf = fig2_out
        pt = spatial_points(p, cf, [SpiralSample(2, 5, 0.0, 0.0)], samples=10, z_mode=ZMode.LOCAL_INPUT)[0]
        assert pt.z == pytest.approx(p.c * p.d**2.5)
        pt = spatial_points(p, cf, [SpiralSample(2, 5, 0.0, 0.0)], samples=10,
                            z_mode=ZMode.LOCAL_INPUT, amplitude_mode=AmplitudeMode.USE_P)[0]
        assert pt.z == pytest.approx(cf.p * p.d**2.5)

    def test_cumulative_limit(self):
        p = Params(0.5, 0.8, 1.0, 0.9, 3.0, 4.0)
        cf = solve_closed_form(p)
        pts = spatial_points(p, cf, self._planar(80, 10), samples=10)
        assert all(pt.z < 10 for pt in pts)
        assert [pt.z for pt in pts if pt.n == 80][0] > 9.99

    def test_cumulative_anchor_is_geometric_sum(self, fig2_out):
        p, cf = fig2_out
        pts = spatial_points(p, cf, self._planar(12, 4), samples=4)
        for pt in pts:
            if pt.i == 0:
                assert pt.z == pytest.approx(p.c * geometric_sum(p.d, pt.n), rel=1e-14)

    def test_cumulative_unit_base(self):
        p = Params(0.5, 0.35, 2.0, 1.0, 1.0, 1.0)
        pts = spatial_points(p, solve_closed_form(p), [SpiralSample(3, 2, 0.0, 0.0)], samples=4)
        assert pts[0].z == pytest.approx(2.0 * 4.5)

    @given(st.floats(0.0, 1.9), st.floats(0.0, 2.0))
    def test_cumulative_nondecreasing(self, d, c):
        p = Params(0.5, 0.35, c, d, 1.0, 1.0)
        if not p.restriction2_ok:
            return
        pts = spatial_points(p, solve_closed_form(p), self._planar(15, 6), samples=6)
        zs = [pt.z for pt in pts]
        assert all(b >= a - 1e-12 * max(1.0, abs(a)) for a, b in zip(zs, zs[1:]))
