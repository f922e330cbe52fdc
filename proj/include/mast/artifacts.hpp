#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mast/dynamics.hpp"
#include "mast/linalg.hpp"
#include "mast/synthesis.hpp"

namespace mast {

struct ArtifactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One row per recorded sample, header
//   t, mode, topology, x0_1..x0_n, x1_1..x1_n, ..., xhat1_*, ..., e1_*, ...,
//   psi1_*, ..., u1_*, ..., V
// floating point printed with 17 significant digits so a reload is bit-faithful.
void write_trace_csv(const std::string& path, const SimulationTrace& trace);

// Inverse of write_trace_csv; dimensions are inferred from the header row.
SimulationTrace read_trace_csv(const std::string& path);

struct SweepRow {
    double delta = 0.0;
    bool converged = false;
    std::optional<double> time_to_tolerance;
    double threshold = 0.0;
};

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

nlohmann::json matrix_json(const Mat& m);
nlohmann::json vector_json(const Vec& v);

void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::json& doc);

// ---- SVG line charts (no plotting dependency) ----

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Background shading for schedule modes: level 2 = listen, 1 = partial,
// 0 = silent (silent stays unshaded).
struct ModeBand {
    double t0 = 0.0;
    double t1 = 0.0;
    int level = 0;
};

struct PlotOptions {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool log_y = false;
    std::vector<ModeBand> bands;
    int width = 960;
    int height = 540;
    std::size_t max_points = 2000;  // per-series polyline budget
};

void write_line_chart(const std::string& path, const std::vector<PlotSeries>& series,
                      const PlotOptions& options);

// Standard plot set for a finished run: per-state tracking errors, observer
// error norms, V(t) with the decay envelope when rates are available, and the
// mode/topology timeline.
void write_run_plots(const std::string& dir, const SimulationTrace& trace,
                     const std::optional<RateReport>& rates);

std::vector<ModeBand> mode_bands(const SimulationTrace& trace);

}  // namespace mast
