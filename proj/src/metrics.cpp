#include "nfbeam/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nfbeam/errors.hpp"

namespace nfbeam {

namespace {

constexpr double kDbFloor = 1e-12;  // linear floor applied before any dB conversion

double to_db(double linear) {
    return 10.0 * std::log10(std::max(linear, kDbFloor));
}

// Trapezoidal integral of gain over grid indices [first, last].
double trapezoid(const std::vector<double>& coordinate, const std::vector<double>& gain,
                 std::size_t first, std::size_t last) {
    double sum = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        sum += 0.5 * (gain[i] + gain[i + 1]) * (coordinate[i + 1] - coordinate[i]);
    }
    return sum;
}

// Range traces integrate against log-range so that the fore and aft sides of
// the focus carry comparable weight; angle traces use the angle itself.
std::vector<double> integration_coordinate(const pattern_trace& trace) {
    if (trace.axis != sweep_axis::range) {
        return trace.coordinate;
    }
    std::vector<double> lnr(trace.coordinate.size());
    for (std::size_t i = 0; i < lnr.size(); ++i) {
        lnr[i] = std::log(trace.coordinate[i]);
    }
    return lnr;
}

void validate(const pattern_trace& trace) {
    if (trace.coordinate.size() != trace.gain.size() || trace.coordinate.size() < 3) {
        throw config_error("trace needs at least 3 aligned coordinate/gain samples");
    }
}

// Half-power crossing between the peak and one mainlobe bound, linearly
// interpolated in the trace coordinate; NaN when the gain never drops
// through half of full scale on that side.
double half_power_crossing(const std::vector<double>& coordinate, const std::vector<double>& gain,
                           std::size_t peak, std::size_t bound) {
    const std::ptrdiff_t step = bound > peak ? 1 : -1;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(peak);
    const auto lo = static_cast<std::ptrdiff_t>(std::min(peak, bound));
    const auto hi = static_cast<std::ptrdiff_t>(std::max(peak, bound));
    while (i + step >= lo && i + step <= hi) {
        const std::ptrdiff_t j = i + step;
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        if (gain[uj] < 0.5 && 0.5 <= gain[ui]) {
            const double t = (0.5 - gain[ui]) / (gain[uj] - gain[ui]);
            return coordinate[ui] + t * (coordinate[uj] - coordinate[ui]);
        }
        i = j;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

void refine_peak(const std::vector<double>& coordinate, const std::vector<double>& gain,
                 std::size_t i, double& peak_coordinate, double& peak_gain) {
    peak_coordinate = coordinate[i];
    peak_gain = gain[i];
    if (i == 0 || i + 1 == gain.size()) {
        return;
    }
    const double x1 = coordinate[i - 1];
    const double x2 = coordinate[i];
    const double x3 = coordinate[i + 1];
    const double y1 = gain[i - 1];
    const double y2 = gain[i];
    const double y3 = gain[i + 1];
    const double d1 = (y2 - y1) / (x2 - x1);
    const double d2 = (y3 - y2) / (x3 - x2);
    const double a = (d2 - d1) / (x3 - x1);
    if (a >= 0.0) {
        return;  // not concave at this triple; keep the raw sample
    }
    const double xv = 0.5 * (x1 + x2 - d1 / a);
    peak_coordinate = xv;
    peak_gain = y1 + d1 * (xv - x1) + a * (xv - x1) * (xv - x2);
}

mainlobe_segmentation segment_mainlobe(const pattern_trace& trace) {
    validate(trace);
    const std::vector<double>& g = trace.gain;
    const std::size_t n = g.size();

    mainlobe_segmentation seg;
    seg.peak_index = static_cast<std::size_t>(
        std::distance(g.begin(), std::max_element(g.begin(), g.end())));

    seg.low_index = 0;
    seg.clamped_low = true;
    for (std::size_t i = seg.peak_index; i-- > 1;) {
        if (g[i] <= g[i - 1] && g[i] <= g[i + 1]) {
            seg.low_index = i;
            seg.clamped_low = false;
            break;
        }
    }
    seg.high_index = n - 1;
    seg.clamped_high = true;
    for (std::size_t i = seg.peak_index + 1; i + 1 < n; ++i) {
        if (g[i] <= g[i - 1] && g[i] <= g[i + 1]) {
            seg.high_index = i;
            seg.clamped_high = false;
            break;
        }
    }
    seg.low_coordinate = trace.coordinate[seg.low_index];
    seg.high_coordinate = trace.coordinate[seg.high_index];

    const double lo_cross =
        half_power_crossing(trace.coordinate, g, seg.peak_index, seg.low_index);
    const double hi_cross =
        half_power_crossing(trace.coordinate, g, seg.peak_index, seg.high_index);
    seg.has_r3db = !std::isnan(lo_cross) && !std::isnan(hi_cross);
    seg.r3db_low = std::isnan(lo_cross) ? 0.0 : lo_cross;
    seg.r3db_high = std::isnan(hi_cross) ? 0.0 : hi_cross;
    return seg;
}

std::vector<lobe> lobe_inventory(const pattern_trace& trace) {
    return analyze(trace).lobes;
}

double psll(const pattern_trace& trace) {
    return analyze(trace).psll_db;
}

double isll(const pattern_trace& trace) {
    return analyze(trace).isll_db;
}

sidelobe_report analyze(const pattern_trace& trace) {
    sidelobe_report report;
    report.segmentation = segment_mainlobe(trace);
    const mainlobe_segmentation& seg = report.segmentation;
    const std::vector<double>& g = trace.gain;
    const std::size_t n = g.size();

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (i >= seg.low_index && i <= seg.high_index) {
            continue;
        }
        if (g[i] >= g[i - 1] && g[i] > g[i + 1]) {
            double x = 0.0;
            double y = 0.0;
            refine_peak(trace.coordinate, g, i, x, y);
            report.lobes.push_back(
                {x, to_db(y), i < seg.low_index ? lobe_side::forelobe : lobe_side::aftlobe});
        }
    }

    double side_max = 0.0;
    if (seg.low_index > 0) {
        side_max = *std::max_element(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(seg.low_index));
    }
    if (seg.high_index + 1 < n) {
        side_max = std::max(
            side_max,
            *std::max_element(g.begin() + static_cast<std::ptrdiff_t>(seg.high_index) + 1, g.end()));
    }
    for (const lobe& lb : report.lobes) {
        side_max = std::max(side_max, std::pow(10.0, lb.peak_gain_db / 10.0));
    }
    report.psll_db = to_db(side_max / g[seg.peak_index]);

    const std::vector<double> c = integration_coordinate(trace);
    const double mainlobe_power = trapezoid(c, g, seg.low_index, seg.high_index);
    double sidelobe_power = trapezoid(c, g, 0, seg.low_index);
    sidelobe_power += trapezoid(c, g, seg.high_index, n - 1);
    report.isll_db = to_db(sidelobe_power / mainlobe_power);
    return report;
}

}  // namespace nfbeam
