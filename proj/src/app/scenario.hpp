#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nfbeam/geometry.hpp"
#include "nfbeam/mumimo.hpp"
#include "nfbeam/response.hpp"

namespace nfbeam::app {

// Sweep of the closed-form planar sidelobe level against the argument ratio.
// An explicit value list overrides the uniform lo/hi/points grid.
struct eta_grid_spec {
    double lo = 0.01;
    double hi = 1.0;
    int points = 100;
    std::vector<double> values;
};

enum class sweep_kind { axial, lateral, eta, sumrate };

std::string to_string(sweep_kind kind);
sweep_kind sweep_kind_from_string(const std::string& name);

// One experiment description: geometry, focus, sweep choice, sampling, and
// run controls. Parsed from a JSON file where unknown keys are hard errors.
struct scenario {
    bool has_geometry = false;
    geometry_spec geometry;

    // Focus defaults to the named preset: range R_D / `range_divisor` along
    // the layout's reference direction.
    bool focus_is_preset = true;
    std::string focus_preset = "boresight_over40";
    double range_divisor = 40.0;
    focus_point focus;

    sweep_kind sweep = sweep_kind::axial;
    range_grid axial_grid;
    angle_grid lateral_grid;
    std::string lateral_axis;  // "", "azimuth", or "elevation" (default by geometry)
    eta_grid_spec eta;
    sumrate_config sumrate;

    std::string output;
    std::string format = "csv";
};

scenario parse_scenario(const nlohmann::json& j);
scenario load_scenario_file(const std::string& path);

// Layout for the scenario's geometry; throws config_error when absent.
array_layout scenario_layout(const scenario& s);

// Focus actually used for a run (preset resolved against the layout).
focus_point resolve_focus(const scenario& s, const array_layout& layout);

// Sweep axis for lateral runs: explicit setting, else azimuth for layouts
// referenced in the ring/array plane (+x) and elevation for boresight (+z)
// references where the azimuth cut is degenerate.
sweep_axis resolve_lateral_axis(const scenario& s, const array_layout& layout);

std::vector<double> resolve_eta_grid(const eta_grid_spec& spec);

// Full resolved configuration (defaults filled in, derived quantities
// included) embedded into every output file.
nlohmann::ordered_json resolved_config(const scenario& s);

}  // namespace nfbeam::app
