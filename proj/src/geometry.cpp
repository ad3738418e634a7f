#include "nfbeam/geometry.hpp"

#include <cmath>
#include <numbers>

#include "nfbeam/errors.hpp"

namespace nfbeam {

double norm(const vec3& a) { return std::sqrt(dot(a, a)); }

std::string to_string(array_kind kind) {
    switch (kind) {
        case array_kind::ula: return "ula";
        case array_kind::ura: return "ura";
        case array_kind::uca: return "uca";
        case array_kind::ucca: return "ucca";
    }
    return "unknown";
}

array_kind array_kind_from_string(const std::string& name) {
    if (name == "ula") return array_kind::ula;
    if (name == "ura" || name == "usa") return array_kind::ura;
    if (name == "uca") return array_kind::uca;
    if (name == "ucca") return array_kind::ucca;
    throw config_error("unknown array kind: '" + name + "' (expected ula, ura, uca, or ucca)");
}

int ring_count(int ring_index, int rings, int outer_count) {
    const double exact = static_cast<double>(ring_index) / rings * outer_count;
    return static_cast<int>(std::lround(exact));
}

double rayleigh_distance(double aperture_m, double wavelength_m) {
    return 2.0 * aperture_m * aperture_m / wavelength_m;
}

double max_pairwise_distance(const std::vector<vec3>& positions) {
    double best_sq = 0.0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
            const vec3 d = positions[i] - positions[j];
            best_sq = std::max(best_sq, dot(d, d));
        }
    }
    return std::sqrt(best_sq);
}

namespace {

void append_ring(std::vector<vec3>& positions, double radius_m, int count) {
    for (int k = 0; k < count; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / count;
        positions.push_back({radius_m * std::cos(angle), radius_m * std::sin(angle), 0.0});
    }
}

}  // namespace

array_layout build_layout(const geometry_spec& spec) {
    if (spec.carrier_frequency_hz <= 0.0) {
        throw config_error("carrier_frequency_hz must be positive");
    }
    const double wavelength = speed_of_light_m_s / spec.carrier_frequency_hz;
    const double d = spec.spacing_m > 0.0 ? spec.spacing_m : wavelength / 2.0;
    if (spec.spacing_m < 0.0) {
        throw config_error("spacing_m must be positive");
    }

    array_layout layout;
    layout.kind = spec.kind;
    layout.wavelength_m = wavelength;
    layout.spacing_m = d;

    switch (spec.kind) {
        case array_kind::ula: {
            const int n = spec.count;
            if (n < 1) throw config_error("ula element count must be >= 1");
            layout.positions.reserve(n);
            for (int i = 0; i < n; ++i) {
                layout.positions.push_back({0.0, (i - (n - 1) / 2.0) * d, 0.0});
            }
            layout.aperture_m = (n - 1) * d;
            layout.boresight = {1.0, 0.0, 0.0};
            layout.reference_direction = {1.0, 0.0, 0.0};
            break;
        }
        case array_kind::ura: {
            const int n1 = spec.count1;
            const int n2 = spec.count2;
            if (n1 < 1 || n2 < 1) throw config_error("ura element counts must be >= 1");
            layout.positions.reserve(static_cast<std::size_t>(n1) * n2);
            for (int i = 0; i < n1; ++i) {
                for (int j = 0; j < n2; ++j) {
                    layout.positions.push_back(
                        {0.0, (i - (n1 - 1) / 2.0) * d, (j - (n2 - 1) / 2.0) * d});
                }
            }
            layout.aperture_m = d * std::hypot(n1 - 1.0, n2 - 1.0);
            layout.boresight = {1.0, 0.0, 0.0};
            layout.reference_direction = {1.0, 0.0, 0.0};
            break;
        }
        case array_kind::uca: {
            const int n = spec.count;
            if (n < 1) throw config_error("uca element count must be >= 1");
            const double radius = n * d / (2.0 * std::numbers::pi);
            layout.positions.reserve(n);
            append_ring(layout.positions, radius, n);
            // For odd counts the farthest chord falls short of the diameter.
            layout.aperture_m = max_pairwise_distance(layout.positions);
            layout.boresight = {0.0, 0.0, 1.0};
            // A ring focuses in its own plane; boresight offers no range
            // discrimination, so presets point along +x.
            layout.reference_direction = {1.0, 0.0, 0.0};
            break;
        }
        case array_kind::ucca: {
            const int m = spec.rings;
            const int n_outer = spec.outer_count;
            if (m < 1 || n_outer < 1) {
                throw config_error("ucca ring and outer-ring counts must be >= 1");
            }
            const double outer_radius = n_outer * d / (2.0 * std::numbers::pi);
            std::size_t total = 0;
            for (int ring = 1; ring <= m; ++ring) {
                const int nm = ring_count(ring, m, n_outer);
                if (nm < 1) {
                    throw config_error("ucca ring " + std::to_string(ring) +
                                       " rounds to zero elements");
                }
                total += static_cast<std::size_t>(nm);
            }
            layout.positions.reserve(total);
            for (int ring = 1; ring <= m; ++ring) {
                append_ring(layout.positions, static_cast<double>(ring) / m * outer_radius,
                            ring_count(ring, m, n_outer));
            }
            layout.aperture_m = max_pairwise_distance(layout.positions);
            layout.boresight = {0.0, 0.0, 1.0};
            layout.reference_direction = {0.0, 0.0, 1.0};
            break;
        }
    }

    layout.rayleigh_m = rayleigh_distance(layout.aperture_m, wavelength);
    return layout;
}

}  // namespace nfbeam
