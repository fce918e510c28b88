#pragma once

#include "gk/geometry.hpp"
#include "gk/novikov.hpp"
#include "gk/report.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gk::cli {

inline constexpr int kJobVersion = 1;

enum ExitCode { exit_pass = 0, exit_check_failure = 1, exit_input_error = 2 };

/// All check names a job may request.
const std::vector<std::string>& known_checks();

struct JobSpec {
    int version = kJobVersion;
    /// {"builtin": NAME} | {"file": PATH} | {"inline": {...}}, optionally with
    /// "bundles": [[per-ray coefficients]] replacing the bundle of a toric geometry.
    nlohmann::json geometry;
    /// Directory against which relative paths inside the job resolve.
    std::string base_dir = ".";
    std::vector<std::string> checks;
    /// {"nu": int, "d": int | [ints]}
    nlohmann::json box;
    /// Base classes for the no-fiber check; by default every box class meeting its precondition.
    std::optional<std::vector<std::vector<int>>> no_fiber_classes;
    std::optional<std::string> output_path;
    std::string format = "json";
};

/// Throws InputError naming the offending field.
JobSpec parse_job(const nlohmann::json& j, const std::string& base_dir);
JobSpec load_job(const std::string& path);

/// Box from "nu", "nu,d" (d broadcast) or "nu;d1,...,dk".
Box parse_box(const std::string& text, std::size_t k);
Box box_from_json(const nlohmann::json& j, std::size_t k);

/// GK_COEFF_CAP, default 100000.
std::size_t coefficient_cap();
/// Throws InputError when the box exceeds the coefficient cap.
void enforce_cap(const Box& box);

Geometry load_job_geometry(const JobSpec& spec);

struct JobResult {
    int exit_code = exit_pass;
    nlohmann::json report; ///< canonical: no timestamps, checks sorted by name
};

/// Runs the requested checks concurrently. Input problems (parse errors,
/// invalid geometry, box over the cap) throw InputError.
JobResult run_job(const JobSpec& spec);

/// Canonical bundle {version, geometry, box, status, checks:[...]} for already computed reports.
JobResult assemble(const std::string& geometry, const nlohmann::json& box, std::vector<Report> reports);

/// Byte-stable rendering in "json" or "text".
std::string render(const nlohmann::json& report, const std::string& format);

/// Writes the rendered report and a sidecar "<path>.meta.json" with timing.
void write_report(const std::string& path, const std::string& rendered, double wall_seconds);

} // namespace gk::cli
