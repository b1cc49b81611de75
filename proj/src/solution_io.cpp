#include "sqgsteady/solution_io.hpp"
#include "sqgsteady/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace sqgsteady {

namespace {

using json = nlohmann::ordered_json;

json series_to_json(const SineSeries& s) {
    json arr = json::array();
    for (double a : s.coeffs) arr.push_back(a);
    return arr;
}

SineSeries series_from_json(const json& arr, const char* key) {
    if (!arr.is_array()) throw config_error(std::string("solution field ") + key +
                                            " must be an array");
    SineSeries s(static_cast<int>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) throw config_error(std::string("non-numeric entry in ") + key);
        s.coeffs[i] = arr[i].get<double>();
    }
    return s;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw config_error("failed writing " + path);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_solution(const SolutionBundle& b, const std::string& path) {
    json j;
    j["family"] = family_name(b.family);
    j["m"] = b.m;
    j["alpha"] = b.alpha;
    j["modes"] = b.modes;
    j["grid"] = b.grid;
    j["coeffs_v"] = series_to_json(b.coeffs_v);
    j["lambda"] = b.lambda;
    j["gamma"] = b.gamma;
    j["coeffs_g"] = series_to_json(b.coeffs_g);
    j["coeffs_f"] = series_to_json(b.coeffs_f);
    j["diagnostics"] = {
        {"iterations", b.diagnostics.iterations},
        {"update_norm", b.diagnostics.update_norm},
        {"residual", b.diagnostics.fixed_point_residual},
        {"clamped_mass", b.diagnostics.clamped_mass},
        {"sup_v", b.diagnostics.sup_v},
    };
    write_text(path, j.dump(2) + "\n");
}

SolutionBundle read_solution(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open solution file " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("malformed solution file " + path + ": " + e.what());
    }
    for (const char* key : {"family", "m", "alpha", "modes", "grid", "coeffs_v", "lambda",
                            "gamma", "coeffs_g", "coeffs_f", "diagnostics"})
        if (!j.contains(key))
            throw config_error("solution file " + path + " is missing field '" + key + "'");

    SolutionBundle b;
    b.family = family_from_name(j["family"].get<std::string>());
    b.m = j["m"].get<int>();
    b.alpha = j["alpha"].get<double>();
    b.modes = j["modes"].get<int>();
    b.grid = j["grid"].get<int>();
    b.coeffs_v = series_from_json(j["coeffs_v"], "coeffs_v");
    b.lambda = j["lambda"].get<double>();
    b.gamma = j["gamma"].get<double>();
    b.coeffs_g = series_from_json(j["coeffs_g"], "coeffs_g");
    b.coeffs_f = series_from_json(j["coeffs_f"], "coeffs_f");
    const json& d = j["diagnostics"];
    for (const char* key : {"iterations", "update_norm", "residual", "clamped_mass", "sup_v"})
        if (!d.contains(key))
            throw config_error("solution diagnostics missing field '" + std::string(key) + "'");
    b.diagnostics.iterations = d["iterations"].get<int>();
    b.diagnostics.update_norm = d["update_norm"].get<double>();
    b.diagnostics.fixed_point_residual = d["residual"].get<double>();
    b.diagnostics.clamped_mass = d["clamped_mass"].get<double>();
    b.diagnostics.sup_v = d["sup_v"].get<double>();
    b.diagnostics.converged = true; // persisted bundles come from finished runs

    if (b.modes != b.coeffs_v.modes() || b.modes != b.coeffs_g.modes())
        throw config_error("solution file mode count disagrees with coefficient arrays");
    return b;
}

void write_report(const VerificationReport& report, const std::string& path) {
    json j;
    j["suite"] = report.suite;
    j["overall"] = report.overall();
    json records = json::array();
    for (const auto& r : report.records)
        records.push_back({{"name", r.name},
                           {"measured", r.measured},
                           {"threshold", r.threshold},
                           {"pass", r.pass},
                           {"basis", r.basis}});
    j["records"] = records;
    write_text(path, j.dump(2) + "\n");
}

void export_profile_csv(const SolutionBundle& b, int grid_size, const std::string& path) {
    if (grid_size < 2) throw config_error("profile export needs at least 2 samples");
    std::string out = "x,v,g,f\n";
    for (int i = 0; i <= grid_size; ++i) {
        const double x = 2.0 * std::numbers::pi * i / grid_size;
        out += fmt17(x);
        out += ',';
        out += fmt17(b.coeffs_v.eval(x));
        out += ',';
        out += fmt17(b.coeffs_g.eval(x));
        out += ',';
        out += fmt17(b.coeffs_f.eval(x));
        out += '\n';
    }
    write_text(path, out);
}

void export_theta_csv(const SolutionBundle& b, int grid_size, const std::string& path) {
    if (grid_size < 2) throw config_error("theta export needs at least 2 samples per axis");
    std::string out = "x1,x2,theta\n";
    for (int i = 0; i <= grid_size; ++i) {
        const double x1 = -1.0 + 2.0 * i / grid_size;
        for (int j = 0; j <= grid_size; ++j) {
            const double x2 = -1.0 + 2.0 * j / grid_size;
            const double r = std::hypot(x1, x2);
            const double angle = std::atan2(x2, x1);
            const double theta = r == 0.0 ? 0.0 : r * b.coeffs_f.eval(angle);
            out += fmt17(x1);
            out += ',';
            out += fmt17(x2);
            out += ',';
            out += fmt17(theta);
            out += '\n';
        }
    }
    write_text(path, out);
}

void export_drift_csv(const std::vector<EvolutionSample>& history, const std::string& path) {
    std::string out = "t,drift,sup_norm\n";
    for (const auto& s : history) {
        out += fmt17(s.time);
        out += ',';
        out += fmt17(s.drift);
        out += ',';
        out += fmt17(s.sup_norm);
        out += '\n';
    }
    write_text(path, out);
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
    json j;
    j["command"] = manifest.command;
    try {
        j["config"] = json::parse(manifest.config_json);
    } catch (const std::exception&) {
        j["config"] = manifest.config_json;
    }
    j["version"] = manifest.version;
    j["duration_seconds"] = manifest.duration_seconds;
    j["outputs"] = manifest.outputs;
    write_text(path, j.dump(2) + "\n");
}

} // namespace sqgsteady
