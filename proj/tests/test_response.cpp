#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "nfbeam/errors.hpp"
#include "nfbeam/response.hpp"
#include "test_util.hpp"

using namespace nfbeam;
using namespace nfbeam::testutil;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

TEST_CASE("spherical round trip") {
    for (const focus_point p :
         {focus_point{0.3, 1.1, 2.5}, focus_point{-2.0, 0.4, 7.0}, focus_point{2.9, 3.0, 0.5}}) {
        const focus_point q = from_cartesian(cartesian(p));
        CHECK(q.azimuth_rad == doctest::Approx(p.azimuth_rad).epsilon(1e-12));
        CHECK(q.elevation_rad == doctest::Approx(p.elevation_rad).epsilon(1e-12));
        CHECK(q.range_m == doctest::Approx(p.range_m).epsilon(1e-12));
    }
    // On the polar axis the azimuth is pinned to zero.
    const focus_point pole = from_cartesian({0.0, 0.0, 3.0});
    CHECK(pole.azimuth_rad == 0.0);
    CHECK(pole.elevation_rad == 0.0);
    CHECK(from_cartesian({0.0, 0.0, -3.0}).elevation_rad ==
          doctest::Approx(std::numbers::pi).epsilon(1e-15));
}

TEST_CASE("steering entries have uniform magnitude") {
    const array_layout layout = build_layout(uca_spec(12));
    const steering_vector sv = make_steering_vector(layout, {0.0, kHalfPi, 1.5});
    REQUIRE(sv.entries.size() == 12);
    for (const auto& e : sv.entries) {
        CHECK(std::abs(e) == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(make_steering_vector(layout, {0.0, kHalfPi, 0.0}), config_error);
}

TEST_CASE("self-gain is exactly 1") {
    for (const geometry_spec spec :
         {ula_spec(16), ura_spec(5, 3), uca_spec(9), ucca_spec(3, 12)}) {
        const array_layout layout = build_layout(spec);
        const focus_point focus = {0.2, 1.0, 2.0};
        CHECK(gain_exact(layout, focus, focus) == 1.0);
    }
}

TEST_CASE("exact gains match frozen values") {
    const array_layout ula = build_layout(ula_spec(4));
    CHECK(ula.aperture_m == doctest::Approx(2.99792457999999984e-02).epsilon(1e-14));
    CHECK(gain_exact(ula, {0.0, kHalfPi, 3.0}, {0.1, kHalfPi, 5.0}) ==
          doctest::Approx(8.82743499153613165e-01).epsilon(1e-12));

    const array_layout ura = build_layout(ura_spec(3, 2));
    CHECK(ura.aperture_m == doctest::Approx(2.23452105076583571e-02).epsilon(1e-14));
    CHECK(gain_exact(ura, {0.0, kHalfPi, 2.0}, {-0.05, 1.4, 4.0}) ==
          doctest::Approx(9.15633320659743011e-01).epsilon(1e-12));

    const array_layout uca = build_layout(uca_spec(5));
    CHECK(uca.aperture_m == doctest::Approx(1.51260630172854391e-02).epsilon(1e-14));
    CHECK(gain_exact(uca, {0.0, kHalfPi, 2.5}, {0.2, 1.3, 6.0}) ==
          doctest::Approx(8.81454929939899712e-01).epsilon(1e-12));

    const array_layout ucca = build_layout(ucca_spec(2, 6));
    REQUIRE(ucca.count() == 9);
    CHECK(ucca.aperture_m == doctest::Approx(1.90853806369477713e-02).epsilon(1e-14));
    CHECK(gain_exact(ucca, {0.0, 0.0, 2.0}, {0.3, 0.4, 3.5}) ==
          doctest::Approx(5.82767211725190637e-01).epsilon(1e-12));
}

TEST_CASE("gain is symmetric in focus and observation") {
    const array_layout layout = build_layout(ucca_spec(2, 10));
    const focus_point a = {0.1, 0.7, 2.2};
    const focus_point b = {-0.6, 1.9, 5.5};
    CHECK(gain_exact(layout, a, b) == gain_exact(layout, b, a));
}

TEST_CASE("gains stay within the unit interval") {
    const array_layout layout = build_layout(ula_spec(32));
    const focus_point focus = {0.0, kHalfPi, 2.0};
    for (int i = 0; i < 200; ++i) {
        const focus_point obs = {-1.5 + 0.015 * i, 0.3 + 0.012 * i, 0.7 + 0.09 * i};
        const double g = gain_exact(layout, focus, obs);
        CHECK(g >= 0.0);
        CHECK(g <= 1.0 + 1e-12);
    }
}

TEST_CASE("far-field limit reduces to direction matching") {
    const array_layout layout = build_layout(ula_spec(16));
    const double far = 100.0 * layout.rayleigh_m;
    const focus_point focus = {0.2, 1.2, far};
    CHECK(gain_exact(layout, focus, {0.2, 1.2, 1.73 * far}) > 0.99);
    CHECK(gain_exact(layout, focus, {0.7, 1.2, far}) < 0.1);
}

TEST_CASE("linear-array element distance matches the law of cosines") {
    const array_layout layout = build_layout(ula_spec(5));
    const focus_point obs = {0.3, kHalfPi, 2.0};
    for (std::size_t i = 0; i < layout.count(); ++i) {
        const double y = layout.positions[i].y;
        const double expected =
            std::sqrt(obs.range_m * obs.range_m + y * y -
                      2.0 * obs.range_m * y * std::sin(obs.azimuth_rad));
        CHECK(element_distance(layout, obs, i) == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("excess distance is stable at extreme ranges") {
    const array_layout layout = build_layout(ula_spec(4));
    for (const double scale : {10.0, 1e9}) {
        const double r = scale * layout.aperture_m;
        const vec3 p = cartesian({0.4, kHalfPi, r});
        for (std::size_t i = 0; i < layout.count(); ++i) {
            const vec3& e = layout.positions[i];
            const long double dx = static_cast<long double>(p.x) - e.x;
            const long double dy = static_cast<long double>(p.y) - e.y;
            const long double dz = static_cast<long double>(p.z) - e.z;
            const long double naive = std::sqrt(dx * dx + dy * dy + dz * dz) -
                                      static_cast<long double>(r);
            const double delta = element_distance_delta(layout, p, r, i);
            CHECK(delta == doctest::Approx(static_cast<double>(naive)).epsilon(1e-8));
        }
    }
}

TEST_CASE("axial trace uses the reciprocal-range grid and default window") {
    const array_layout layout = build_layout(ula_spec(64));
    const focus_point focus = {0.0, kHalfPi, 2.0};
    range_grid grid;
    grid.points = 2001;
    const pattern_trace trace = trace_axial(layout, focus, grid);
    REQUIRE(trace.coordinate.size() == 2001);
    CHECK(trace.axis == sweep_axis::range);
    CHECK(trace.coordinate.front() ==
          doctest::Approx(2.0 * layout.aperture_m).epsilon(1e-14));
    CHECK(trace.coordinate.back() == doctest::Approx(layout.rayleigh_m).epsilon(1e-14));
    // Uniform steps in 1/r.
    const double step0 = 1.0 / trace.coordinate[1] - 1.0 / trace.coordinate[0];
    for (std::size_t i = 1; i + 1 < trace.coordinate.size(); ++i) {
        CHECK(trace.coordinate[i] > trace.coordinate[i - 1]);
        const double step = 1.0 / trace.coordinate[i + 1] - 1.0 / trace.coordinate[i];
        CHECK(step == doctest::Approx(step0).epsilon(1e-9));
    }
    // The trace peaks at the sample nearest the focus range, essentially at 1.
    std::size_t peak = 0;
    for (std::size_t i = 1; i < trace.gain.size(); ++i) {
        if (trace.gain[i] > trace.gain[peak]) {
            peak = i;
        }
    }
    CHECK(trace.gain[peak] > 0.999);
    CHECK(std::abs(trace.coordinate[peak] - focus.range_m) <
          trace.coordinate[peak + 1] - trace.coordinate[peak - 1]);
}

TEST_CASE("axial window validation") {
    const array_layout layout = build_layout(ula_spec(64));
    const focus_point focus = {0.0, kHalfPi, 2.0};
    range_grid below;
    below.r_lo_m = 0.5 * layout.aperture_m;
    below.points = 11;
    CHECK_THROWS_WITH_AS(trace_axial(layout, focus, below),
                         doctest::Contains("allow_below_2d"), config_error);
    below.allow_below_2d = true;
    const pattern_trace trace = trace_axial(layout, focus, below);
    CHECK(trace.coordinate.front() == doctest::Approx(below.r_lo_m).epsilon(1e-14));

    range_grid inverted;
    inverted.r_lo_m = 5.0;
    inverted.r_hi_m = 4.0;
    CHECK_THROWS_AS(trace_axial(layout, focus, inverted), config_error);
    range_grid sparse;
    sparse.points = 2;
    CHECK_THROWS_AS(trace_axial(layout, focus, sparse), config_error);
}

TEST_CASE("lateral traces sweep one angle and hold the focus range") {
    const array_layout layout = build_layout(ula_spec(32));
    const focus_point focus = {0.0, kHalfPi, 2.0};
    angle_grid grid;
    grid.points = 801;
    const pattern_trace az = trace_lateral(layout, focus, sweep_axis::azimuth, grid);
    CHECK(az.axis == sweep_axis::azimuth);
    CHECK(az.coordinate.front() == -kHalfPi);
    CHECK(az.coordinate.back() == kHalfPi);
    // Symmetric layout, boresight focus: the pattern mirrors about zero.
    const std::size_t n = az.gain.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(az.gain[i] == doctest::Approx(az.gain[n - 1 - i]).epsilon(1e-10));
    }
    CHECK(az.gain[n / 2] > 0.999999);

    CHECK_THROWS_AS(trace_lateral(layout, focus, sweep_axis::range, grid), config_error);
    angle_grid bad;
    bad.lo_rad = 1.0;
    bad.hi_rad = -1.0;
    CHECK_THROWS_AS(trace_lateral(layout, focus, sweep_axis::azimuth, bad), config_error);
}

TEST_CASE("elevation sweep mirrors for a ring layout with even rings") {
    const array_layout layout = build_layout(ucca_spec(2, 8));
    const focus_point focus = reference_focus(layout, 4.0);
    CHECK(focus.elevation_rad == 0.0);
    angle_grid grid;
    grid.points = 801;
    const pattern_trace el = trace_lateral(layout, focus, sweep_axis::elevation, grid);
    const std::size_t n = el.gain.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(el.gain[i] == doctest::Approx(el.gain[n - 1 - i]).epsilon(1e-10));
    }
}

TEST_CASE("thread count never changes trace values") {
    const array_layout layout = build_layout(ula_spec(16));
    const focus_point focus = {0.0, kHalfPi, 1.0};
    range_grid grid;
    grid.points = 301;
    const pattern_trace one = trace_axial(layout, focus, grid, 1);
    const pattern_trace three = trace_axial(layout, focus, grid, 3);
    for (std::size_t i = 0; i < one.gain.size(); ++i) {
        CHECK(one.gain[i] == three.gain[i]);
    }
    angle_grid agrid;
    agrid.points = 257;
    const pattern_trace lat1 = trace_lateral(layout, focus, sweep_axis::azimuth, agrid, 1);
    const pattern_trace lat4 = trace_lateral(layout, focus, sweep_axis::azimuth, agrid, 4);
    for (std::size_t i = 0; i < lat1.gain.size(); ++i) {
        CHECK(lat1.gain[i] == lat4.gain[i]);
    }
}

TEST_CASE("reference focus for the four reference layouts") {
    const array_layout ula = build_layout(ula_spec(128));
    const focus_point f_ula = reference_focus(ula);
    CHECK(f_ula.azimuth_rad == 0.0);
    CHECK(f_ula.elevation_rad == doctest::Approx(kHalfPi).epsilon(1e-15));
    CHECK(f_ula.range_m == doctest::Approx(4.029460462568332).epsilon(1e-12));

    const array_layout ura = build_layout(ura_spec(85, 85));
    CHECK(reference_focus(ura).range_m == doctest::Approx(3.525559306079999).epsilon(1e-12));

    const array_layout uca = build_layout(uca_spec(400));
    const focus_point f_uca = reference_focus(uca);
    CHECK(f_uca.elevation_rad == doctest::Approx(kHalfPi).epsilon(1e-15));
    CHECK(f_uca.range_m == doctest::Approx(4.050043558880780).epsilon(1e-12));

    const array_layout ucca = build_layout(ucca_spec(40, 400));
    const focus_point f_ucca = reference_focus(ucca);
    CHECK(f_ucca.elevation_rad == 0.0);
    CHECK(f_ucca.range_m == doctest::Approx(4.050043558880780).epsilon(1e-12));

    CHECK(reference_focus(uca, 20.0).range_m ==
          doctest::Approx(uca.rayleigh_m / 20.0).epsilon(1e-15));
    CHECK_THROWS_AS(reference_focus(uca, 0.0), config_error);
}
