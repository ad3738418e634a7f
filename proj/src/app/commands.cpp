#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "io.hpp"
#include "nfbeam/closedform.hpp"
#include "nfbeam/errors.hpp"
#include "nfbeam/metrics.hpp"

namespace nfbeam::app {

namespace {

using nlohmann::ordered_json;

constexpr char kSchema[] = "nf-beamscope/1";

std::string effective_output(scenario& s, const std::string& default_stem) {
    if (s.output.empty()) {
        s.output = default_stem + (s.format == "csv" ? ".csv" : ".json");
    }
    return s.output;
}

double gain_to_db(double gain) {
    return 10.0 * std::log10(gain);
}

void check_finite(const std::vector<double>& values, const char* what) {
    for (const double v : values) {
        if (!std::isfinite(v)) {
            throw numeric_error(std::string(what) + " contains a non-finite value");
        }
    }
}

ordered_json report_to_json(const sidelobe_report& report) {
    ordered_json main;
    main["peak_index"] = report.segmentation.peak_index;
    main["low_index"] = report.segmentation.low_index;
    main["high_index"] = report.segmentation.high_index;
    main["clamped_low"] = report.segmentation.clamped_low;
    main["clamped_high"] = report.segmentation.clamped_high;
    main["low_coordinate"] = report.segmentation.low_coordinate;
    main["high_coordinate"] = report.segmentation.high_coordinate;
    main["has_half_power_width"] = report.segmentation.has_r3db;
    if (report.segmentation.has_r3db) {
        main["half_power_low"] = report.segmentation.r3db_low;
        main["half_power_high"] = report.segmentation.r3db_high;
    }

    ordered_json lobes = ordered_json::array();
    std::size_t fore = 0;
    for (const lobe& lb : report.lobes) {
        ordered_json l;
        l["peak_coordinate"] = lb.peak_coordinate;
        l["peak_gain_db"] = lb.peak_gain_db;
        l["side"] = lb.side == lobe_side::forelobe ? "fore" : "aft";
        lobes.push_back(l);
        if (lb.side == lobe_side::forelobe) {
            ++fore;
        }
    }

    ordered_json out;
    out["psll_db"] = report.psll_db;
    out["isll_db"] = report.isll_db;
    out["mainlobe"] = main;
    out["forelobe_count"] = fore;
    out["aftlobe_count"] = report.lobes.size() - fore;
    out["lobes"] = lobes;
    return out;
}

ordered_json trace_to_json(const pattern_trace& trace, const std::vector<double>& gain_db) {
    ordered_json out;
    switch (trace.axis) {
        case sweep_axis::range: out["axis"] = "range"; break;
        case sweep_axis::azimuth: out["axis"] = "azimuth"; break;
        case sweep_axis::elevation: out["axis"] = "elevation"; break;
    }
    out["coordinate"] = trace.coordinate;
    out["gain_db"] = gain_db;
    return out;
}

struct table_entry {
    const char* geometry;
    geometry_spec spec;
};

std::vector<table_entry> reference_geometries() {
    std::vector<table_entry> entries;
    geometry_spec uca;
    uca.kind = array_kind::uca;
    uca.count = 400;
    entries.push_back({"uca", uca});
    geometry_spec ula;
    ula.kind = array_kind::ula;
    ula.count = 128;
    entries.push_back({"ula", ula});
    geometry_spec ucca;
    ucca.kind = array_kind::ucca;
    ucca.rings = 40;
    ucca.outer_count = 400;
    entries.push_back({"ucca", ucca});
    geometry_spec usa;
    usa.kind = array_kind::ura;
    usa.count1 = 85;
    usa.count2 = 85;
    entries.push_back({"usa", usa});
    return entries;
}

}  // namespace

void run_pattern(scenario s) {
    if (s.sweep != sweep_kind::axial && s.sweep != sweep_kind::lateral) {
        throw config_error("pattern needs sweep 'axial' or 'lateral', got '" + to_string(s.sweep) +
                           "'");
    }
    const array_layout layout = scenario_layout(s);
    const focus_point focus = resolve_focus(s, layout);
    const std::string out_path = effective_output(s, "pattern");

    pattern_trace trace;
    if (s.sweep == sweep_kind::axial) {
        trace = trace_axial(layout, focus, s.axial_grid, s.sumrate.threads);
    } else {
        trace = trace_lateral(layout, focus, resolve_lateral_axis(s, layout), s.lateral_grid,
                              s.sumrate.threads);
    }
    check_finite(trace.gain, "pattern trace");
    const sidelobe_report report = analyze(trace);

    std::vector<double> gain_db(trace.gain.size());
    for (std::size_t i = 0; i < trace.gain.size(); ++i) {
        gain_db[i] = gain_to_db(trace.gain[i]);
    }

    const ordered_json config = resolved_config(s);
    std::string report_path;
    if (s.format == "csv") {
        csv_document doc;
        doc.config = config;
        doc.header = {"coordinate", "gain_db"};
        doc.rows.reserve(trace.coordinate.size());
        for (std::size_t i = 0; i < trace.coordinate.size(); ++i) {
            doc.rows.push_back({trace.coordinate[i], gain_db[i]});
        }
        write_text_file(out_path, render_csv(doc));

        ordered_json rj;
        rj["schema"] = kSchema;
        rj["kind"] = "sidelobe_report";
        rj["config"] = config;
        rj["report"] = report_to_json(report);
        report_path = out_path + ".report.json";
        write_text_file(report_path, render_json(rj));
    } else {
        ordered_json j;
        j["schema"] = kSchema;
        j["kind"] = "pattern";
        j["config"] = config;
        j["trace"] = trace_to_json(trace, gain_db);
        j["report"] = report_to_json(report);
        write_text_file(out_path, render_json(j));
    }

    std::size_t fore = 0;
    for (const lobe& lb : report.lobes) {
        fore += lb.side == lobe_side::forelobe ? 1 : 0;
    }
    std::printf("pattern %s: psll_db=%.4f isll_db=%.4f forelobes=%zu aftlobes=%zu\n",
                to_string(s.sweep).c_str(), report.psll_db, report.isll_db, fore,
                report.lobes.size() - fore);
    std::printf("wrote %s%s%s\n", out_path.c_str(), report_path.empty() ? "" : " and ",
                report_path.c_str());
}

void run_eta_sweep(scenario s) {
    if (s.sweep != sweep_kind::eta) {
        throw config_error("eta-sweep needs sweep 'eta', got '" + to_string(s.sweep) + "'");
    }
    const std::string out_path = effective_output(s, "eta_sweep");
    const std::vector<double> grid = resolve_eta_grid(s.eta);
    const std::vector<eta_psll_point> points = psll_vs_eta_sweep(grid);

    const ordered_json config = resolved_config(s);
    if (s.format == "csv") {
        csv_document doc;
        doc.config = config;
        doc.header = {"eta_hat", "psll_db"};
        for (const eta_psll_point& p : points) {
            doc.rows.push_back({p.eta_hat, p.psll_db});
        }
        write_text_file(out_path, render_csv(doc));
    } else {
        ordered_json j;
        j["schema"] = kSchema;
        j["kind"] = "eta_sweep";
        j["config"] = config;
        std::vector<double> eta(points.size());
        std::vector<double> psll_db(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            eta[i] = points[i].eta_hat;
            psll_db[i] = points[i].psll_db;
        }
        j["eta_hat"] = eta;
        j["psll_db"] = psll_db;
        write_text_file(out_path, render_json(j));
    }
    std::printf("eta-sweep: %zu points, psll_db %.4f at eta_hat=%s .. %.4f at eta_hat=%s\n",
                points.size(), points.front().psll_db,
                format_double(points.front().eta_hat).c_str(), points.back().psll_db,
                format_double(points.back().eta_hat).c_str());
    std::printf("wrote %s\n", out_path.c_str());
}

void run_sumrate(scenario s) {
    if (s.sweep != sweep_kind::sumrate) {
        throw config_error("sumrate needs sweep 'sumrate', got '" + to_string(s.sweep) + "'");
    }
    const array_layout layout = scenario_layout(s);
    const std::string out_path = effective_output(s, "sumrate");
    const sumrate_curve curve = monte_carlo_sumrate(layout, s.sumrate);
    check_finite(curve.mean_sumrate, "sumrate curve");

    const ordered_json config = resolved_config(s);
    const std::string config_hash = fnv1a_hex(config.dump());
    std::string meta_path;
    if (s.format == "csv") {
        csv_document doc;
        doc.config = config;
        doc.header = {"snr_db", "mean_sumrate", "stderr"};
        for (std::size_t i = 0; i < curve.snr_grid_db.size(); ++i) {
            doc.rows.push_back(
                {curve.snr_grid_db[i], curve.mean_sumrate[i], curve.stderr_sumrate[i]});
        }
        write_text_file(out_path, render_csv(doc));

        ordered_json meta;
        meta["schema"] = kSchema;
        meta["kind"] = "sumrate_meta";
        meta["seed"] = curve.seed;
        meta["trials"] = curve.trials;
        meta["config_hash"] = config_hash;
        meta["config"] = config;
        meta_path = out_path + ".meta.json";
        write_text_file(meta_path, render_json(meta));
    } else {
        ordered_json j;
        j["schema"] = kSchema;
        j["kind"] = "sumrate";
        j["seed"] = curve.seed;
        j["trials"] = curve.trials;
        j["config_hash"] = config_hash;
        j["config"] = config;
        j["snr_db"] = curve.snr_grid_db;
        j["mean_sumrate"] = curve.mean_sumrate;
        j["stderr"] = curve.stderr_sumrate;
        write_text_file(out_path, render_json(j));
    }

    for (std::size_t i = 0; i < curve.snr_grid_db.size(); ++i) {
        std::printf("snr_db=%s mean_sumrate=%.4f stderr=%.4f\n",
                    format_double(curve.snr_grid_db[i]).c_str(), curve.mean_sumrate[i],
                    curve.stderr_sumrate[i]);
    }
    std::printf("wrote %s%s%s\n", out_path.c_str(), meta_path.empty() ? "" : " and ",
                meta_path.c_str());
}

void run_table1(scenario s) {
    if (s.format != "json") {
        throw config_error("table1 output is json; pass --format json or omit --format");
    }
    const std::string out_path = effective_output(s, "table1");

    // Reference sidelobe levels (dB) and the tolerances the test suite uses.
    const double ref_range_psll[] = {-7.9, -8.7, -13.4, -17.6};
    const double ref_angle_psll[] = {-7.9, -13.3, -17.6, -13.3};
    const double ref_range_isll[] = {-0.4, -1.3, -7.2, -12.1};
    const double ref_angle_isll[] = {1.9, -9.6, -10.4, -9.6};
    constexpr double kPsllTolerance = 0.3;
    constexpr double kIsllTolerance = 1.0;
    constexpr int kPoints = 20001;

    const std::vector<table_entry> entries = reference_geometries();
    ordered_json cells = ordered_json::array();
    std::printf("%-6s %14s %14s %14s %14s\n", "", "range psll_db", "angle psll_db",
                "range isll_db", "angle isll_db");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const array_layout layout = build_layout(entries[i].spec);
        const focus_point focus = reference_focus(layout);

        range_grid rgrid;
        rgrid.r_lo_m = layout.aperture_m;
        rgrid.points = kPoints;
        rgrid.allow_below_2d = true;
        const pattern_trace axial = trace_axial(layout, focus, rgrid, s.sumrate.threads);
        const sidelobe_report range_report = analyze(axial);

        angle_grid agrid;
        agrid.points = kPoints;
        const sweep_axis lateral_axis =
            layout.reference_direction.z > 0.5 ? sweep_axis::elevation : sweep_axis::azimuth;
        const pattern_trace lateral =
            trace_lateral(layout, focus, lateral_axis, agrid, s.sumrate.threads);
        const sidelobe_report angle_report = analyze(lateral);

        const struct {
            const char* domain;
            const char* metric;
            double value;
            double reference;
            double tolerance;
        } rows[] = {
            {"range", "psll", range_report.psll_db, ref_range_psll[i], kPsllTolerance},
            {"angle", "psll", angle_report.psll_db, ref_angle_psll[i], kPsllTolerance},
            {"range", "isll", range_report.isll_db, ref_range_isll[i], kIsllTolerance},
            {"angle", "isll", angle_report.isll_db, ref_angle_isll[i], kIsllTolerance},
        };
        for (const auto& row : rows) {
            ordered_json cell;
            cell["geometry"] = entries[i].geometry;
            cell["domain"] = row.domain;
            cell["metric"] = row.metric;
            cell["value_db"] = row.value;
            cell["reference_db"] = row.reference;
            cell["tolerance_db"] = row.tolerance;
            cell["within_tolerance"] = std::abs(row.value - row.reference) <= row.tolerance;
            cells.push_back(cell);
        }
        std::printf("%-6s %14.4f %14.4f %14.4f %14.4f\n", entries[i].geometry,
                    range_report.psll_db, angle_report.psll_db, range_report.isll_db,
                    angle_report.isll_db);
    }

    ordered_json config;
    config["focus"] = "reference direction at rayleigh_m / 40";
    config["axial_window"] = "[aperture_m, rayleigh_m], reciprocal spacing";
    config["lateral_window"] = "[-pi/2, pi/2], linear spacing";
    config["points"] = kPoints;
    config["isll_coordinate"] = "log-range (axial) / angle (lateral)";
    config["psll_tolerance_db"] = kPsllTolerance;
    config["isll_tolerance_db"] = kIsllTolerance;
    config["threads"] = s.sumrate.threads;

    ordered_json j;
    j["schema"] = kSchema;
    j["kind"] = "reference_table";
    j["config"] = config;
    j["cells"] = cells;
    write_text_file(out_path, render_json(j));
    std::printf("wrote %s\n", out_path.c_str());
}

}  // namespace nfbeam::app
