#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mast/analysis.hpp"
#include "mast/config.hpp"
#include "mast/coupling.hpp"
#include "mast/dynamics.hpp"
#include "mast/graph.hpp"
#include "mast/synthesis.hpp"

namespace mast {

inline constexpr const char* kToolName = "mast";
inline constexpr const char* kToolVersion = "0.1.0";

// Everything the pipeline derives from a validated config before simulating.
struct ScenarioArtifacts {
    std::vector<DirectedTopology> topologies;
    std::vector<Mat> gamma;
    std::vector<CouplingWeights> weights;
    double beta_bound_value = 0.0;  // 0.99 min over topologies of lambda_min(Lambda)
    SynthesisReport synthesis;
    std::optional<RateReport> rates;  // absent when the certificates are not PD
    SimulationScenario scenario;
    std::vector<std::string> notes;
};

// graph -> coupling -> gains (search or fixture audit) -> rates -> scenario.
// Throws TopologyError / CouplingError / SynthesisError / ConfigError on
// structural problems; synthesis infeasibility is reported, not thrown.
ScenarioArtifacts prepare_scenario(const ScenarioConfig& cfg);

nlohmann::json run_manifest(const ScenarioConfig& cfg, const ScenarioArtifacts& artifacts,
                            const SimulationTrace* trace, const ConvergenceReport* convergence);

}  // namespace mast
