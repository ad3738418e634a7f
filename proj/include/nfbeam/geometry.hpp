#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nfbeam {

inline constexpr double speed_of_light_m_s = 299792458.0;

struct vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline vec3 operator-(const vec3& a, const vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline double dot(const vec3& a, const vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const vec3& a);

enum class array_kind { ula, ura, uca, ucca };

std::string to_string(array_kind kind);
array_kind array_kind_from_string(const std::string& name);

// Element-count fields are interpreted per kind: ULA/UCA use `count`;
// URA uses `count1` (width) x `count2` (height); UCCA uses `rings` concentric
// rings with `outer_count` elements on the outermost ring.
struct geometry_spec {
    array_kind kind = array_kind::ula;
    double carrier_frequency_hz = 15e9;
    double spacing_m = 0.0;  // 0 selects the half-wavelength default
    int count = 0;
    int count1 = 0;
    int count2 = 0;
    int rings = 0;
    int outer_count = 0;
};

struct array_layout {
    array_kind kind = array_kind::ula;
    std::vector<vec3> positions;
    double wavelength_m = 0.0;
    double spacing_m = 0.0;
    double aperture_m = 0.0;   // maximum pairwise element distance
    double rayleigh_m = 0.0;   // 2 * aperture^2 / wavelength
    vec3 boresight;            // normal to the array plane (or axis-orthogonal for a line)
    vec3 reference_direction;  // canonical focusing direction used by presets
    std::size_t count() const { return positions.size(); }
};

// Number of elements on ring m (1-based) of a concentric-ring array whose
// outermost ring m = rings carries outer_count elements.
int ring_count(int ring_index, int rings, int outer_count);

array_layout build_layout(const geometry_spec& spec);

double rayleigh_distance(double aperture_m, double wavelength_m);

// Brute-force maximum pairwise distance, the aperture definition used for
// every layout.
double max_pairwise_distance(const std::vector<vec3>& positions);

}  // namespace nfbeam
