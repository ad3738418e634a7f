#pragma once

#include <cstddef>
#include <vector>

#include "nfbeam/response.hpp"

namespace nfbeam {

enum class lobe_side { forelobe, aftlobe };

struct lobe {
    double peak_coordinate = 0.0;
    double peak_gain_db = 0.0;
    lobe_side side = lobe_side::forelobe;
};

struct mainlobe_segmentation {
    std::size_t peak_index = 0;
    std::size_t low_index = 0;   // first local minimum below the peak (grid index)
    std::size_t high_index = 0;  // first local minimum above the peak
    bool clamped_low = false;    // no null found; interval clamped to the trace edge
    bool clamped_high = false;
    double low_coordinate = 0.0;
    double high_coordinate = 0.0;
    double r3db_low = 0.0;   // half-power crossings, linear interpolation in the
    double r3db_high = 0.0;  // trace coordinate; 0 when the crossing is absent
    bool has_r3db = false;
};

struct sidelobe_report {
    mainlobe_segmentation segmentation;
    double psll_db = 0.0;
    double isll_db = 0.0;
    std::vector<lobe> lobes;
};

// Mainlobe bounded by the first local minima on each side of the global
// peak; half-power points interpolated where the gain crosses 0.5.
mainlobe_segmentation segment_mainlobe(const pattern_trace& trace);

// Peak sidelobe level: largest sidelobe-region gain (grid samples plus
// quadratically refined local-maximum peaks) over the mainlobe peak gain.
double psll(const pattern_trace& trace);

// Integrated sidelobe level: trapezoidal integral of gain over the sidelobe
// region divided by the same integral over the mainlobe. Range traces are
// integrated against log-range; angle traces against the angle itself.
double isll(const pattern_trace& trace);

// Every sidelobe-region local maximum, classified by side of the mainlobe,
// with quadratically refined peak coordinates and heights.
std::vector<lobe> lobe_inventory(const pattern_trace& trace);

// Full report computed with a single segmentation pass.
sidelobe_report analyze(const pattern_trace& trace);

// Quadratic (three-point Newton form) refinement of a local maximum at grid
// index i; falls back to the sample itself at edges or non-concave triples.
void refine_peak(const std::vector<double>& coordinate, const std::vector<double>& gain,
                 std::size_t i, double& peak_coordinate, double& peak_gain);

}  // namespace nfbeam
