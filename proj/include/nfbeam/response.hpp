#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "nfbeam/geometry.hpp"

namespace nfbeam {

// Spherical convention: position = r * (sin(el)cos(az), sin(el)sin(az), cos(el)).
struct focus_point {
    double azimuth_rad = 0.0;
    double elevation_rad = 0.0;
    double range_m = 0.0;
};

vec3 cartesian(const focus_point& p);
focus_point from_cartesian(const vec3& v);

struct steering_vector {
    std::vector<std::complex<double>> entries;  // each of magnitude 1/sqrt(N)
    focus_point focus;
};

enum class sweep_axis { range, azimuth, elevation };

struct pattern_trace {
    sweep_axis axis = sweep_axis::range;
    std::vector<double> coordinate;  // meters (range) or radians (angles), strictly increasing
    std::vector<double> gain;        // normalized power gain in [0, 1]
    focus_point focus;
};

// Sampling for range sweeps. Points are spaced uniformly in reciprocal
// distance 1/r, which resolves the focal region evenly on both sides of the
// focus. r_lo_m/r_hi_m of 0 select the defaults [2D, R_D]; observation below
// 2D requires allow_below_2d.
struct range_grid {
    double r_lo_m = 0.0;
    double r_hi_m = 0.0;
    int points = 20001;
    bool allow_below_2d = false;
};

struct angle_grid {
    double lo_rad = -1.5707963267948966;
    double hi_rad = 1.5707963267948966;
    int points = 20001;
};

double element_distance(const array_layout& layout, const focus_point& point, std::size_t index);

// Distance from `point` to element `index`, minus the point's own range,
// computed without cancellation for ranges far exceeding the aperture.
double element_distance_delta(const array_layout& layout, const vec3& point, double range_m, std::size_t index);

steering_vector make_steering_vector(const array_layout& layout, const focus_point& focus);

double gain_exact(const array_layout& layout, const focus_point& focus, const focus_point& observe);

pattern_trace trace_axial(const array_layout& layout, const focus_point& focus, const range_grid& grid,
                          int threads = 1);

// Sweeps azimuth at the focus elevation, or elevation at the focus azimuth,
// holding the observation range at the focus range.
pattern_trace trace_lateral(const array_layout& layout, const focus_point& focus, sweep_axis axis,
                            const angle_grid& grid, int threads = 1);

// Reference focus used throughout: range R_D / 40 along the layout's
// reference direction (boresight, or the in-plane direction for a ring
// array focused within its own plane).
focus_point reference_focus(const array_layout& layout, double range_divisor = 40.0);

}  // namespace nfbeam
