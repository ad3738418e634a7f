#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfbeam/response.hpp"

namespace nfbeam {

struct user_set {
    std::vector<focus_point> users;
};

struct sinr_breakdown {
    double signal_gain = 0.0;                 // gamma * N
    std::vector<double> interference_sq;      // squared correlation per interferer
    double sinr = 0.0;
    double rate_bits = 0.0;
};

// Normalized channel correlation (1/N)|h_a^H h_b|; equals the square root of
// the exact pattern gain between the two points.
double interference(const array_layout& layout, const focus_point& a, const focus_point& b);

// Per-user rate under maximum-ratio transmission with unit-modulus channels:
// sinr = gamma N / (1 + gamma N sum_j I_kj^2). snr_gamma is the per-antenna
// transmit SNR gamma.
sinr_breakdown user_rate(const array_layout& layout, const user_set& users, std::size_t k,
                         double snr_gamma);

// Where drawn users point. `reference` places every user on the layout's
// reference direction (purely range-domain multiplexing); `hemisphere` draws
// directions uniformly by solid angle over the front hemisphere centered on
// the reference direction.
enum class angle_policy { reference, hemisphere };

// Meaning of the SNR grid values: `array` fixes gamma N = 10^(snr/10) so the
// x-axis is the fully beamformed SNR; `element` fixes the per-antenna gamma
// = 10^(snr/10), so curves include the array gain N.
enum class snr_axis { array, element };

std::string to_string(angle_policy policy);
std::string to_string(snr_axis axis);
angle_policy angle_policy_from_string(const std::string& name);
snr_axis snr_axis_from_string(const std::string& name);

struct sumrate_config {
    int users = 5;
    double r_lo_m = 0.0;  // 0 selects 2D
    double r_hi_m = 0.0;  // 0 selects R_D
    angle_policy policy = angle_policy::reference;
    snr_axis axis = snr_axis::array;
    std::vector<double> snr_grid_db = {0.0, 5.0, 10.0, 15.0, 20.0};
    int trials = 1000;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct sumrate_curve {
    std::vector<double> snr_grid_db;
    std::vector<double> mean_sumrate;    // bits/s/Hz, averaged over trials
    std::vector<double> stderr_sumrate;  // standard error of the mean
    int trials = 0;
    std::uint64_t seed = 0;
};

// User constellation for one trial. Consumes exactly three uniform draws per
// user (range, direction cosine, direction angle) whatever the policy, so a
// given (seed, trial) yields paired constellations across geometries and
// policies.
user_set draw_users(const array_layout& layout, const sumrate_config& config, std::uint64_t trial_index);

// Mean sumrate over Monte-Carlo user placements. Users are held fixed across
// the SNR grid within a trial. Per-trial sums are accumulated with pairwise
// summation in trial order, so results are bit-identical for any thread
// count.
sumrate_curve monte_carlo_sumrate(const array_layout& layout, const sumrate_config& config);

}  // namespace nfbeam
