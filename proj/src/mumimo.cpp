#include "nfbeam/mumimo.hpp"

#include <cmath>
#include <numbers>

#include "nfbeam/errors.hpp"
#include "nfbeam/numeric.hpp"
#include "nfbeam/rng.hpp"

namespace nfbeam {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct resolved_window {
    double r_lo = 0.0;
    double r_hi = 0.0;
};

resolved_window resolve_window(const array_layout& layout, const sumrate_config& config) {
    resolved_window w;
    w.r_lo = config.r_lo_m == 0.0 ? 2.0 * layout.aperture_m : config.r_lo_m;
    w.r_hi = config.r_hi_m == 0.0 ? layout.rayleigh_m : config.r_hi_m;
    if (!(w.r_lo > 0.0) || !(w.r_hi > w.r_lo)) {
        throw config_error("user range window must satisfy 0 < r_lo < r_hi");
    }
    return w;
}

void validate(const sumrate_config& config) {
    if (config.users < 1) {
        throw config_error("sumrate needs at least one user");
    }
    if (config.trials < 1) {
        throw config_error("sumrate needs at least one trial");
    }
    if (config.snr_grid_db.empty()) {
        throw config_error("sumrate needs a non-empty snr grid");
    }
    if (config.threads < 1) {
        throw config_error("thread count must be >= 1");
    }
}

// Phase profile nu * (per-element distance minus user range); pairwise
// correlations need only phase differences.
std::vector<double> phase_profile(const array_layout& layout, const focus_point& user) {
    const double nu = kTwoPi / layout.wavelength_m;
    const vec3 point = cartesian(user);
    std::vector<double> phases(layout.count());
    for (std::size_t i = 0; i < layout.count(); ++i) {
        phases[i] = nu * element_distance_delta(layout, point, user.range_m, i);
    }
    return phases;
}

double correlation_from_phases(const std::vector<double>& a, const std::vector<double>& b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double arg = a[i] - b[i];
        re += std::cos(arg);
        im += std::sin(arg);
    }
    const double n = static_cast<double>(a.size());
    return std::sqrt(re * re + im * im) / n;
}

// Squared-correlation matrix between all user pairs (diagonal is 1).
std::vector<double> correlation_sq_matrix(const array_layout& layout, const user_set& users) {
    const std::size_t k = users.users.size();
    std::vector<std::vector<double>> phases(k);
    for (std::size_t i = 0; i < k; ++i) {
        phases[i] = phase_profile(layout, users.users[i]);
    }
    std::vector<double> corr_sq(k * k, 1.0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            const double c = correlation_from_phases(phases[a], phases[b]);
            corr_sq[a * k + b] = c * c;
            corr_sq[b * k + a] = c * c;
        }
    }
    return corr_sq;
}

double sumrate_from_matrix(const std::vector<double>& corr_sq, std::size_t k, double gamma_n) {
    double sum = 0.0;
    for (std::size_t u = 0; u < k; ++u) {
        double interference_sq = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (j != u) {
                interference_sq += corr_sq[u * k + j];
            }
        }
        const double sinr = gamma_n / (1.0 + gamma_n * interference_sq);
        sum += std::log2(1.0 + sinr);
    }
    return sum;
}

}  // namespace

std::string to_string(angle_policy policy) {
    return policy == angle_policy::reference ? "reference" : "hemisphere";
}

std::string to_string(snr_axis axis) {
    return axis == snr_axis::array ? "array" : "element";
}

angle_policy angle_policy_from_string(const std::string& name) {
    if (name == "reference") return angle_policy::reference;
    if (name == "hemisphere") return angle_policy::hemisphere;
    throw config_error("unknown angle policy: '" + name + "' (expected reference or hemisphere)");
}

snr_axis snr_axis_from_string(const std::string& name) {
    if (name == "array") return snr_axis::array;
    if (name == "element") return snr_axis::element;
    throw config_error("unknown snr axis: '" + name + "' (expected array or element)");
}

double interference(const array_layout& layout, const focus_point& a, const focus_point& b) {
    return std::sqrt(gain_exact(layout, a, b));
}

sinr_breakdown user_rate(const array_layout& layout, const user_set& users, std::size_t k,
                         double snr_gamma) {
    if (k >= users.users.size()) {
        throw config_error("user index out of range");
    }
    sinr_breakdown out;
    out.signal_gain = snr_gamma * static_cast<double>(layout.count());
    double interference_sq = 0.0;
    for (std::size_t j = 0; j < users.users.size(); ++j) {
        if (j == k) {
            continue;
        }
        const double c = interference(layout, users.users[k], users.users[j]);
        out.interference_sq.push_back(c * c);
        interference_sq += c * c;
    }
    out.sinr = out.signal_gain / (1.0 + out.signal_gain * interference_sq);
    out.rate_bits = std::log2(1.0 + out.sinr);
    return out;
}

user_set draw_users(const array_layout& layout, const sumrate_config& config,
                    std::uint64_t trial_index) {
    validate(config);
    const resolved_window window = resolve_window(layout, config);
    const focus_point reference = from_cartesian(layout.reference_direction);
    const bool reference_along_z = layout.reference_direction.z > 0.5;

    splitmix64 stream = trial_stream(config.seed, trial_index);
    user_set set;
    set.users.reserve(static_cast<std::size_t>(config.users));
    for (int u = 0; u < config.users; ++u) {
        const double u_range = stream.next_u01();
        const double u_cos = stream.next_u01();
        const double u_angle = stream.next_u01();
        const double r = window.r_lo + u_range * (window.r_hi - window.r_lo);

        focus_point user;
        if (config.policy == angle_policy::reference) {
            user.azimuth_rad = reference.azimuth_rad;
            user.elevation_rad = reference.elevation_rad;
            user.range_m = r;
        } else {
            // Solid-angle uniform direction on the hemisphere around local +z.
            const double sin_theta = std::sqrt(std::max(0.0, 1.0 - u_cos * u_cos));
            const double phi = kTwoPi * u_angle;
            vec3 dir{sin_theta * std::cos(phi), sin_theta * std::sin(phi), u_cos};
            if (!reference_along_z) {
                dir = {dir.z, dir.y, -dir.x};  // rotate local +z onto global +x
            }
            user = from_cartesian({dir.x * r, dir.y * r, dir.z * r});
        }
        set.users.push_back(user);
    }
    return set;
}

sumrate_curve monte_carlo_sumrate(const array_layout& layout, const sumrate_config& config) {
    validate(config);
    resolve_window(layout, config);  // fail fast on a bad window

    const std::size_t trials = static_cast<std::size_t>(config.trials);
    const std::size_t n_snr = config.snr_grid_db.size();
    const std::size_t k = static_cast<std::size_t>(config.users);

    std::vector<double> gamma_n(n_snr);
    for (std::size_t s = 0; s < n_snr; ++s) {
        const double gamma = std::pow(10.0, config.snr_grid_db[s] / 10.0);
        gamma_n[s] =
            config.axis == snr_axis::element ? gamma * static_cast<double>(layout.count()) : gamma;
    }

    // Per-trial sumrates in fixed slots: the reduction below is independent
    // of how trials were scheduled across threads.
    std::vector<double> slots(trials * n_snr);
    parallel_for_index(trials, config.threads, [&](std::size_t t) {
        const user_set users = draw_users(layout, config, t);
        const std::vector<double> corr_sq = correlation_sq_matrix(layout, users);
        for (std::size_t s = 0; s < n_snr; ++s) {
            slots[t * n_snr + s] = sumrate_from_matrix(corr_sq, k, gamma_n[s]);
        }
    });

    sumrate_curve curve;
    curve.snr_grid_db = config.snr_grid_db;
    curve.trials = config.trials;
    curve.seed = config.seed;
    curve.mean_sumrate.resize(n_snr);
    curve.stderr_sumrate.resize(n_snr);
    std::vector<double> column(trials);
    for (std::size_t s = 0; s < n_snr; ++s) {
        for (std::size_t t = 0; t < trials; ++t) {
            column[t] = slots[t * n_snr + s];
        }
        const double mean = pairwise_sum(column) / static_cast<double>(trials);
        curve.mean_sumrate[s] = mean;
        if (trials > 1) {
            std::vector<double> dev_sq(trials);
            for (std::size_t t = 0; t < trials; ++t) {
                const double d = column[t] - mean;
                dev_sq[t] = d * d;
            }
            const double variance = pairwise_sum(dev_sq) / static_cast<double>(trials - 1);
            curve.stderr_sumrate[s] = std::sqrt(variance / static_cast<double>(trials));
        } else {
            curve.stderr_sumrate[s] = 0.0;
        }
    }
    return curve;
}

}  // namespace nfbeam
