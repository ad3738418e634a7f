#include "scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <string>

#include "nfbeam/errors.hpp"

namespace nfbeam::app {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_known_keys(const json& obj, const std::string& context,
                        std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw config_error("unknown key '" + item.key() + "' in " + context);
        }
    }
}

template <typename T>
void read_field(const json& obj, const char* key, T& out) {
    if (obj.contains(key)) {
        try {
            out = obj.at(key).get<T>();
        } catch (const json::exception&) {
            throw config_error(std::string("field '") + key + "' has the wrong type");
        }
    }
}

geometry_spec parse_geometry(const json& j) {
    require_known_keys(j, "geometry",
                       {"kind", "count", "count1", "count2", "rings", "outer_count",
                        "carrier_frequency_hz", "spacing_m"});
    if (!j.contains("kind")) {
        throw config_error("geometry.kind is required");
    }
    geometry_spec spec;
    std::string kind;
    read_field(j, "kind", kind);
    spec.kind = array_kind_from_string(kind);
    read_field(j, "count", spec.count);
    read_field(j, "count1", spec.count1);
    read_field(j, "count2", spec.count2);
    read_field(j, "rings", spec.rings);
    read_field(j, "outer_count", spec.outer_count);
    read_field(j, "carrier_frequency_hz", spec.carrier_frequency_hz);
    read_field(j, "spacing_m", spec.spacing_m);
    return spec;
}

void parse_focus(const json& j, scenario& s) {
    if (j.is_string()) {
        const std::string preset = j.get<std::string>();
        if (preset != "boresight_over40" && preset != "reference_over40") {
            throw config_error("unknown focus preset '" + preset + "'");
        }
        s.focus_is_preset = true;
        s.focus_preset = "boresight_over40";
        s.range_divisor = 40.0;
        return;
    }
    require_known_keys(j, "focus", {"azimuth_rad", "elevation_rad", "range_m"});
    if (!j.contains("range_m")) {
        throw config_error("focus.range_m is required for an explicit focus");
    }
    s.focus_is_preset = false;
    s.focus_preset.clear();
    read_field(j, "azimuth_rad", s.focus.azimuth_rad);
    read_field(j, "elevation_rad", s.focus.elevation_rad);
    read_field(j, "range_m", s.focus.range_m);
}

void parse_grid(const json& j, scenario& s) {
    switch (s.sweep) {
        case sweep_kind::axial:
            require_known_keys(j, "grid", {"r_lo_m", "r_hi_m", "points", "allow_below_2d"});
            read_field(j, "r_lo_m", s.axial_grid.r_lo_m);
            read_field(j, "r_hi_m", s.axial_grid.r_hi_m);
            read_field(j, "points", s.axial_grid.points);
            read_field(j, "allow_below_2d", s.axial_grid.allow_below_2d);
            if (s.axial_grid.points < 3) {
                throw config_error("grid.points must be >= 3");
            }
            break;
        case sweep_kind::lateral:
            require_known_keys(j, "grid", {"lo_rad", "hi_rad", "points"});
            read_field(j, "lo_rad", s.lateral_grid.lo_rad);
            read_field(j, "hi_rad", s.lateral_grid.hi_rad);
            read_field(j, "points", s.lateral_grid.points);
            if (s.lateral_grid.points < 3) {
                throw config_error("grid.points must be >= 3");
            }
            break;
        case sweep_kind::eta:
            require_known_keys(j, "grid", {"lo", "hi", "points", "values"});
            if (j.contains("values")) {
                if (j.contains("lo") || j.contains("hi") || j.contains("points")) {
                    throw config_error("grid.values excludes lo/hi/points");
                }
                read_field(j, "values", s.eta.values);
                if (s.eta.values.empty()) {
                    throw config_error("grid.values must not be empty");
                }
            } else {
                read_field(j, "lo", s.eta.lo);
                read_field(j, "hi", s.eta.hi);
                read_field(j, "points", s.eta.points);
                if (s.eta.points < 1) {
                    throw config_error("grid.points must be >= 1");
                }
                if (!(s.eta.lo > 0.0) || !(s.eta.hi >= s.eta.lo) || s.eta.hi > 1.0) {
                    throw config_error("grid must satisfy 0 < lo <= hi <= 1");
                }
            }
            break;
        case sweep_kind::sumrate:
            require_known_keys(j, "grid", {"r_lo_m", "r_hi_m"});
            read_field(j, "r_lo_m", s.sumrate.r_lo_m);
            read_field(j, "r_hi_m", s.sumrate.r_hi_m);
            break;
    }
}

}  // namespace

std::string to_string(sweep_kind kind) {
    switch (kind) {
        case sweep_kind::axial: return "axial";
        case sweep_kind::lateral: return "lateral";
        case sweep_kind::eta: return "eta";
        case sweep_kind::sumrate: return "sumrate";
    }
    return "unknown";
}

sweep_kind sweep_kind_from_string(const std::string& name) {
    if (name == "axial") return sweep_kind::axial;
    if (name == "lateral") return sweep_kind::lateral;
    if (name == "eta") return sweep_kind::eta;
    if (name == "sumrate") return sweep_kind::sumrate;
    throw config_error("unknown sweep '" + name + "' (expected axial, lateral, eta, or sumrate)");
}

scenario parse_scenario(const json& j) {
    if (!j.is_object()) {
        throw config_error("scenario must be a JSON object");
    }
    require_known_keys(j, "scenario",
                       {"geometry", "focus", "sweep", "grid", "lateral_axis", "users",
                        "angle_policy", "snr_axis", "snr_grid_db", "trials", "seed", "threads",
                        "output", "format"});
    scenario s;
    if (j.contains("sweep")) {
        std::string sweep;
        read_field(j, "sweep", sweep);
        s.sweep = sweep_kind_from_string(sweep);
    }
    if (j.contains("geometry")) {
        s.geometry = parse_geometry(j.at("geometry"));
        s.has_geometry = true;
    }
    if (j.contains("focus")) {
        parse_focus(j.at("focus"), s);
    }
    if (j.contains("grid")) {
        parse_grid(j.at("grid"), s);
    }
    if (j.contains("lateral_axis")) {
        read_field(j, "lateral_axis", s.lateral_axis);
        if (s.lateral_axis != "azimuth" && s.lateral_axis != "elevation") {
            throw config_error("lateral_axis must be 'azimuth' or 'elevation'");
        }
    }
    read_field(j, "users", s.sumrate.users);
    if (j.contains("angle_policy")) {
        std::string policy;
        read_field(j, "angle_policy", policy);
        s.sumrate.policy = angle_policy_from_string(policy);
    }
    if (j.contains("snr_axis")) {
        std::string axis;
        read_field(j, "snr_axis", axis);
        s.sumrate.axis = snr_axis_from_string(axis);
    }
    if (j.contains("snr_grid_db")) {
        read_field(j, "snr_grid_db", s.sumrate.snr_grid_db);
        if (s.sumrate.snr_grid_db.empty()) {
            throw config_error("snr_grid_db must not be empty");
        }
    }
    read_field(j, "trials", s.sumrate.trials);
    read_field(j, "seed", s.sumrate.seed);
    read_field(j, "threads", s.sumrate.threads);
    read_field(j, "output", s.output);
    read_field(j, "format", s.format);
    if (s.format != "csv" && s.format != "json") {
        throw config_error("format must be 'csv' or 'json'");
    }
    if (s.sumrate.trials < 1) {
        throw config_error("trials must be >= 1");
    }
    if (s.sumrate.users < 1) {
        throw config_error("users must be >= 1");
    }
    if (s.sumrate.threads < 1) {
        throw config_error("threads must be >= 1");
    }
    return s;
}

scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_scenario(j);
}

array_layout scenario_layout(const scenario& s) {
    if (!s.has_geometry) {
        throw config_error("this subcommand needs a geometry; add a 'geometry' block to the config");
    }
    return build_layout(s.geometry);
}

focus_point resolve_focus(const scenario& s, const array_layout& layout) {
    if (s.focus_is_preset) {
        return reference_focus(layout, s.range_divisor);
    }
    return s.focus;
}

sweep_axis resolve_lateral_axis(const scenario& s, const array_layout& layout) {
    if (s.lateral_axis == "azimuth") {
        return sweep_axis::azimuth;
    }
    if (s.lateral_axis == "elevation") {
        return sweep_axis::elevation;
    }
    // The azimuth cut degenerates when the reference direction is the pole
    // of the spherical convention; sweep elevation there instead.
    return layout.reference_direction.z > 0.5 ? sweep_axis::elevation : sweep_axis::azimuth;
}

std::vector<double> resolve_eta_grid(const eta_grid_spec& spec) {
    if (!spec.values.empty()) {
        return spec.values;
    }
    std::vector<double> grid(static_cast<std::size_t>(spec.points));
    if (spec.points == 1) {
        grid[0] = spec.hi;
        return grid;
    }
    const double step = (spec.hi - spec.lo) / static_cast<double>(spec.points - 1);
    for (int i = 0; i < spec.points - 1; ++i) {
        grid[static_cast<std::size_t>(i)] = spec.lo + step * static_cast<double>(i);
    }
    grid[static_cast<std::size_t>(spec.points - 1)] = spec.hi;
    return grid;
}

nlohmann::ordered_json resolved_config(const scenario& s) {
    ordered_json out;
    out["sweep"] = to_string(s.sweep);
    if (s.has_geometry) {
        const array_layout layout = build_layout(s.geometry);
        ordered_json g;
        g["kind"] = to_string(s.geometry.kind);
        switch (s.geometry.kind) {
            case array_kind::ula:
            case array_kind::uca:
                g["count"] = s.geometry.count;
                break;
            case array_kind::ura:
                g["count1"] = s.geometry.count1;
                g["count2"] = s.geometry.count2;
                break;
            case array_kind::ucca:
                g["rings"] = s.geometry.rings;
                g["outer_count"] = s.geometry.outer_count;
                break;
        }
        g["carrier_frequency_hz"] = s.geometry.carrier_frequency_hz;
        g["spacing_m"] = layout.spacing_m;
        g["elements"] = layout.count();
        g["wavelength_m"] = layout.wavelength_m;
        g["aperture_m"] = layout.aperture_m;
        g["rayleigh_m"] = layout.rayleigh_m;
        out["geometry"] = g;

        ordered_json f;
        if (s.focus_is_preset) {
            f["preset"] = s.focus_preset;
            f["range_divisor"] = s.range_divisor;
        }
        const focus_point focus = resolve_focus(s, layout);
        f["azimuth_rad"] = focus.azimuth_rad;
        f["elevation_rad"] = focus.elevation_rad;
        f["range_m"] = focus.range_m;
        out["focus"] = f;

        if (s.sweep == sweep_kind::axial) {
            ordered_json grid;
            grid["r_lo_m"] =
                s.axial_grid.r_lo_m == 0.0 ? 2.0 * layout.aperture_m : s.axial_grid.r_lo_m;
            grid["r_hi_m"] = s.axial_grid.r_hi_m == 0.0 ? layout.rayleigh_m : s.axial_grid.r_hi_m;
            grid["points"] = s.axial_grid.points;
            grid["allow_below_2d"] = s.axial_grid.allow_below_2d;
            grid["spacing"] = "reciprocal";
            out["grid"] = grid;
        } else if (s.sweep == sweep_kind::lateral) {
            ordered_json grid;
            grid["lo_rad"] = s.lateral_grid.lo_rad;
            grid["hi_rad"] = s.lateral_grid.hi_rad;
            grid["points"] = s.lateral_grid.points;
            grid["spacing"] = "linear";
            out["grid"] = grid;
            out["lateral_axis"] =
                resolve_lateral_axis(s, layout) == sweep_axis::azimuth ? "azimuth" : "elevation";
        } else if (s.sweep == sweep_kind::sumrate) {
            ordered_json grid;
            grid["r_lo_m"] = s.sumrate.r_lo_m == 0.0 ? 2.0 * layout.aperture_m : s.sumrate.r_lo_m;
            grid["r_hi_m"] = s.sumrate.r_hi_m == 0.0 ? layout.rayleigh_m : s.sumrate.r_hi_m;
            out["grid"] = grid;
        }
    }
    if (s.sweep == sweep_kind::eta) {
        ordered_json grid;
        if (!s.eta.values.empty()) {
            grid["values"] = s.eta.values;
        } else {
            grid["lo"] = s.eta.lo;
            grid["hi"] = s.eta.hi;
            grid["points"] = s.eta.points;
        }
        out["grid"] = grid;
    }
    if (s.sweep == sweep_kind::sumrate) {
        out["users"] = s.sumrate.users;
        out["angle_policy"] = to_string(s.sumrate.policy);
        out["snr_axis"] = to_string(s.sumrate.axis);
        out["snr_grid_db"] = s.sumrate.snr_grid_db;
        out["trials"] = s.sumrate.trials;
        out["seed"] = s.sumrate.seed;
    }
    out["threads"] = s.sumrate.threads;
    out["format"] = s.format;
    return out;
}

}  // namespace nfbeam::app
