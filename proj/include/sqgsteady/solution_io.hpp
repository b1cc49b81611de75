#pragma once

#include "sqgsteady/dynamics.hpp"
#include "sqgsteady/solver.hpp"
#include "sqgsteady/verification.hpp"

#include <string>
#include <vector>

#define SQGSTEADY_VERSION "0.1.0"

namespace sqgsteady {

// Bundle <-> JSON. Doubles are written in shortest round-trip form, so a
// write/read cycle reproduces every coefficient bit-for-bit. Only the five
// scalar diagnostics are persisted (not the update history).
void write_solution(const SolutionBundle& bundle, const std::string& path);
SolutionBundle read_solution(const std::string& path);

void write_report(const VerificationReport& report, const std::string& path);

// CSV columns x,v,g,f sampled from the stored series on [0, 2 pi].
void export_profile_csv(const SolutionBundle& bundle, int grid_size, const std::string& path);

// CSV columns x1,x2,theta on a square lattice over [-1, 1]^2 with
// theta(x1, x2) = r * f(angle).
void export_theta_csv(const SolutionBundle& bundle, int grid_size, const std::string& path);

// CSV columns t,drift,sup_norm, one row per accepted step.
void export_drift_csv(const std::vector<EvolutionSample>& history, const std::string& path);

struct RunManifest {
    std::string command;
    std::string config_json; // resolved configuration, serialized
    std::string version = SQGSTEADY_VERSION;
    double duration_seconds = 0.0;
    std::vector<std::string> outputs; // every file the run wrote
};

// Written alongside primary outputs as <path>.manifest.json.
void write_manifest(const RunManifest& manifest, const std::string& path);

} // namespace sqgsteady
