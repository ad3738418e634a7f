#include "nfbeam/response.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nfbeam/errors.hpp"
#include "nfbeam/numeric.hpp"

namespace nfbeam {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform grid matching the endpoint-exact construction start + i*step with
// the final sample pinned to stop.
std::vector<double> linear_grid(double start, double stop, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (int i = 0; i < points - 1; ++i) {
        grid[static_cast<std::size_t>(i)] = start + step * static_cast<double>(i);
    }
    grid[static_cast<std::size_t>(points - 1)] = stop;
    return grid;
}

// Ranges spaced uniformly in 1/r between r_lo and r_hi, ascending in r.
std::vector<double> reciprocal_grid(double r_lo, double r_hi, int points) {
    std::vector<double> grid = linear_grid(1.0 / r_lo, 1.0 / r_hi, points);
    for (double& u : grid) {
        u = 1.0 / u;
    }
    return grid;
}

// Phase of each steering entry at the given observation point, times -1/nu:
// the per-element excess distance (distance to element minus point range).
std::vector<double> delta_distances(const array_layout& layout, const vec3& point, double range_m) {
    std::vector<double> deltas(layout.count());
    for (std::size_t i = 0; i < layout.count(); ++i) {
        deltas[i] = element_distance_delta(layout, point, range_m, i);
    }
    return deltas;
}

double correlation_gain(const array_layout& layout, const std::vector<double>& focus_phase,
                        const vec3& point, double range_m) {
    const double nu = 2.0 * kPi / layout.wavelength_m;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < layout.count(); ++i) {
        const double arg = focus_phase[i] - nu * element_distance_delta(layout, point, range_m, i);
        re += std::cos(arg);
        im += std::sin(arg);
    }
    const double n = static_cast<double>(layout.count());
    re /= n;
    im /= n;
    return re * re + im * im;
}

std::vector<double> focus_phases(const array_layout& layout, const focus_point& focus) {
    const double nu = 2.0 * kPi / layout.wavelength_m;
    const vec3 point = cartesian(focus);
    std::vector<double> phases = delta_distances(layout, point, focus.range_m);
    for (double& p : phases) {
        p *= nu;
    }
    return phases;
}

void validate_focus(const focus_point& focus) {
    if (!(focus.range_m > 0.0)) {
        throw config_error("focus range must be positive, got " + std::to_string(focus.range_m));
    }
}

}  // namespace

vec3 cartesian(const focus_point& p) {
    const double se = std::sin(p.elevation_rad);
    return {p.range_m * se * std::cos(p.azimuth_rad), p.range_m * se * std::sin(p.azimuth_rad),
            p.range_m * std::cos(p.elevation_rad)};
}

focus_point from_cartesian(const vec3& v) {
    focus_point p;
    p.range_m = norm(v);
    if (p.range_m > 0.0) {
        p.elevation_rad = std::acos(std::clamp(v.z / p.range_m, -1.0, 1.0));
    }
    p.azimuth_rad = (v.x == 0.0 && v.y == 0.0) ? 0.0 : std::atan2(v.y, v.x);
    return p;
}

double element_distance_delta(const array_layout& layout, const vec3& point, double range_m,
                              std::size_t index) {
    const vec3& e = layout.positions[index];
    const double q = dot(e, e) - 2.0 * dot(e, point);
    const double dist = std::sqrt(std::max(range_m * range_m + q, 0.0));
    return q / (dist + range_m);
}

double element_distance(const array_layout& layout, const focus_point& point, std::size_t index) {
    return point.range_m + element_distance_delta(layout, cartesian(point), point.range_m, index);
}

steering_vector make_steering_vector(const array_layout& layout, const focus_point& focus) {
    validate_focus(focus);
    const std::vector<double> phases = focus_phases(layout, focus);
    steering_vector sv;
    sv.focus = focus;
    sv.entries.resize(layout.count());
    const double scale = 1.0 / std::sqrt(static_cast<double>(layout.count()));
    for (std::size_t i = 0; i < layout.count(); ++i) {
        sv.entries[i] = std::polar(scale, -phases[i]);
    }
    return sv;
}

double gain_exact(const array_layout& layout, const focus_point& focus, const focus_point& observe) {
    validate_focus(focus);
    validate_focus(observe);
    const std::vector<double> phases = focus_phases(layout, focus);
    return correlation_gain(layout, phases, cartesian(observe), observe.range_m);
}

pattern_trace trace_axial(const array_layout& layout, const focus_point& focus,
                          const range_grid& grid, int threads) {
    validate_focus(focus);
    if (grid.points < 3) {
        throw config_error("range grid needs at least 3 points");
    }
    double r_lo = grid.r_lo_m;
    double r_hi = grid.r_hi_m;
    if (r_lo == 0.0) {
        r_lo = 2.0 * layout.aperture_m;
    }
    if (r_hi == 0.0) {
        r_hi = layout.rayleigh_m;
    }
    if (!(r_lo > 0.0) || !(r_hi > r_lo)) {
        throw config_error("range window must satisfy 0 < r_lo < r_hi");
    }
    if (r_lo < 2.0 * layout.aperture_m && !grid.allow_below_2d) {
        throw config_error("range window starts below twice the aperture; enable allow_below_2d");
    }

    pattern_trace trace;
    trace.axis = sweep_axis::range;
    trace.focus = focus;
    trace.coordinate = reciprocal_grid(r_lo, r_hi, grid.points);
    trace.gain.resize(trace.coordinate.size());

    const std::vector<double> phases = focus_phases(layout, focus);
    const vec3 direction = cartesian({focus.azimuth_rad, focus.elevation_rad, 1.0});
    parallel_for_index(trace.coordinate.size(), threads, [&](std::size_t i) {
        const double r = trace.coordinate[i];
        const vec3 point{direction.x * r, direction.y * r, direction.z * r};
        trace.gain[i] = correlation_gain(layout, phases, point, r);
    });
    return trace;
}

pattern_trace trace_lateral(const array_layout& layout, const focus_point& focus, sweep_axis axis,
                            const angle_grid& grid, int threads) {
    validate_focus(focus);
    if (axis == sweep_axis::range) {
        throw config_error("lateral trace axis must be azimuth or elevation");
    }
    if (grid.points < 3) {
        throw config_error("angle grid needs at least 3 points");
    }
    if (!(grid.hi_rad > grid.lo_rad)) {
        throw config_error("angle window must satisfy lo < hi");
    }

    pattern_trace trace;
    trace.axis = axis;
    trace.focus = focus;
    trace.coordinate = linear_grid(grid.lo_rad, grid.hi_rad, grid.points);
    trace.gain.resize(trace.coordinate.size());

    const std::vector<double> phases = focus_phases(layout, focus);
    const double r = focus.range_m;
    parallel_for_index(trace.coordinate.size(), threads, [&](std::size_t i) {
        const double a = trace.coordinate[i];
        focus_point observe;
        observe.range_m = r;
        if (axis == sweep_axis::azimuth) {
            observe.azimuth_rad = a;
            observe.elevation_rad = focus.elevation_rad;
        } else {
            observe.azimuth_rad = focus.azimuth_rad;
            observe.elevation_rad = a;
        }
        trace.gain[i] = correlation_gain(layout, phases, cartesian(observe), r);
    });
    return trace;
}

focus_point reference_focus(const array_layout& layout, double range_divisor) {
    if (!(range_divisor > 0.0)) {
        throw config_error("range divisor must be positive");
    }
    focus_point focus = from_cartesian(layout.reference_direction);
    focus.range_m = layout.rayleigh_m / range_divisor;
    return focus;
}

}  // namespace nfbeam
