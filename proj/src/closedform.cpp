#include "nfbeam/closedform.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "nfbeam/geometry.hpp"

namespace nfbeam {

namespace {

constexpr double kPi = std::numbers::pi;

double square(double x) {
    return x * x;
}

// Central-difference derivative used for locating sidelobe peaks.
template <typename F>
double derivative(const F& f, double x) {
    constexpr double h = 1e-6;
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// First sidelobe peak of a gain curve that starts at 1 and decays: march
// until the derivative turns positive (first null / local minimum), then
// bracket the next sign change back to negative and bisect it.
template <typename F>
peak_location first_sidelobe_peak(const F& f, double start, double step, double limit) {
    double x = start;
    double d = derivative(f, x);
    // Pass the falling mainlobe edge.
    while (d <= 0.0 && x < limit) {
        x += step;
        d = derivative(f, x);
    }
    // Now climbing the first sidelobe; find where the derivative turns back.
    double lo = x;
    while (d > 0.0 && x < limit) {
        lo = x;
        x += step;
        d = derivative(f, x);
    }
    double hi = x;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-15 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (derivative(f, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double peak = 0.5 * (lo + hi);
    return {peak, f(peak)};
}

}  // namespace

double r_eff_linear(double r_m, double rf_m) {
    return std::abs(r_m - rf_m) / (2.0 * r_m * rf_m);
}

double r_eff_radial(double r_m, double rf_m) {
    return std::abs(r_m - rf_m) / (r_m * rf_m);
}

double gamma_linear(int count, double spacing_m, double wavelength_m, double r_m, double rf_m,
                    double azimuth_rad) {
    const double nd_cos = static_cast<double>(count) * spacing_m * std::cos(azimuth_rad);
    return std::sqrt(nd_cos * nd_cos * r_eff_linear(r_m, rf_m) / wavelength_m);
}

double gamma_planar(int count_axis, double spacing_m, double wavelength_m, double beta_axis,
                    double r_m, double rf_m) {
    const double nd = static_cast<double>(count_axis) * spacing_m;
    return std::sqrt(nd * nd * beta_axis * r_eff_radial(r_m, rf_m) / (2.0 * wavelength_m));
}

double zeta_ring(double rayleigh_m, double r_m, double rf_m, double sin_elevation) {
    return kPi * rayleigh_m / 16.0 * r_eff_radial(r_m, rf_m) * square(sin_elevation);
}

double xi_rings(double rayleigh_m, double r_m, double rf_m) {
    return kPi * rayleigh_m / 8.0 * r_eff_radial(r_m, rf_m);
}

double gain_ula_closed(double gamma) {
    if (gamma == 0.0) {
        return 1.0;  // removable singularity: C(g)^2 + S(g)^2 ~ g^2 as g -> 0
    }
    const fresnel_pair fp = fresnel(gamma);
    return (fp.c * fp.c + fp.s * fp.s) / (gamma * gamma);
}

double gain_ura_closed(double gamma1, double gamma2) {
    return gain_ula_closed(gamma1) * gain_ula_closed(gamma2);
}

double gain_uca_closed(double zeta) {
    return square(bessel_j0(zeta));
}

double gain_ucca_closed(double xi) {
    if (xi == 0.0) {
        return 1.0;
    }
    const double half = 0.5 * xi;
    return square(std::sin(half) / half);
}

double gain_ucca_ringsum(int rings, int outer_count, double outer_radius_m, double wavelength_m,
                         double r_m, double rf_m, double elevation_rad) {
    const double reff = r_eff_radial(r_m, rf_m);
    const double sin_el = std::sin(elevation_rad);
    double re = 0.0;
    double im = 0.0;
    double total = 0.0;
    for (int m = 1; m <= rings; ++m) {
        const double n_m = static_cast<double>(ring_count(m, rings, outer_count));
        const double radius = static_cast<double>(m) / rings * outer_radius_m;
        const double radial_phase = kPi * radius * radius * reff / wavelength_m;
        const double zeta = 0.5 * radial_phase * square(sin_el);
        const double phi = radial_phase - zeta;
        const double amplitude = n_m * bessel_j0(zeta);
        re += amplitude * std::cos(phi);
        im += amplitude * std::sin(phi);
        total += n_m;
    }
    return (re * re + im * im) / (total * total);
}

peak_location psll_location_ula() {
    return first_sidelobe_peak([](double g) { return gain_ula_closed(g); }, 0.05, 1e-3, 20.0);
}

peak_location psll_location_uca() {
    return first_sidelobe_peak([](double z) { return gain_uca_closed(z); }, 0.05, 1e-3, 20.0);
}

peak_location psll_location_ucca() {
    return first_sidelobe_peak([](double x) { return gain_ucca_closed(x); }, 0.05, 1e-3, 20.0);
}

std::vector<eta_psll_point> psll_vs_eta_sweep(const std::vector<double>& eta_grid) {
    constexpr int kPoints = 200001;
    constexpr double kGammaMax = 40.0;

    // Dense sweep of the first-axis argument, with the focus sample itself
    // (gamma = 0, gain 1) prepended.
    std::vector<double> gamma(kPoints + 1);
    gamma[0] = 0.0;
    const double start = kGammaMax / kPoints;
    const double step = (kGammaMax - start) / static_cast<double>(kPoints - 1);
    for (int i = 0; i < kPoints - 1; ++i) {
        gamma[static_cast<std::size_t>(i) + 1] = start + step * static_cast<double>(i);
    }
    gamma[kPoints] = kGammaMax;

    std::vector<double> ratio1(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        ratio1[i] = gain_ula_closed(gamma[i]);
    }

    std::vector<eta_psll_point> out;
    out.reserve(eta_grid.size());
    std::vector<double> g(gamma.size());
    for (const double eta_hat : eta_grid) {
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            g[i] = ratio1[i] * gain_ula_closed(eta_hat * gamma[i]);
        }
        // Mainlobe ends at the first local minimum after the global peak.
        std::size_t peak = 0;
        for (std::size_t i = 1; i < g.size(); ++i) {
            if (g[i] > g[peak]) {
                peak = i;
            }
        }
        std::size_t hi = g.size() - 1;
        for (std::size_t i = peak + 1; i + 1 < g.size(); ++i) {
            if (g[i] <= g[i - 1] && g[i] <= g[i + 1]) {
                hi = i;
                break;
            }
        }
        double best = 0.0;
        for (std::size_t i = hi + 1; i + 1 < g.size(); ++i) {
            if (g[i] >= g[i - 1] && g[i] > g[i + 1]) {
                best = std::max(best, g[i]);
            }
        }
        out.push_back({eta_hat, 10.0 * std::log10(std::max(best, 1e-12))});
    }
    return out;
}

}  // namespace nfbeam
