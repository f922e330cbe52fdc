#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mast/dynamics.hpp"
#include "mast/graph.hpp"
#include "mast/linalg.hpp"

namespace mast {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses the block/key-value scenario grammar into JSON. Input whose first
// significant character is '{' is treated as plain JSON instead.
nlohmann::json parse_config_text(const std::string& text);

struct ScenarioConfig {
    // plant
    Mat A, B, C;
    std::string nonlinearity = "zero";
    double amplitude = 0.0;
    long long sine_target = 0;  // 1-based state index receiving the sine term
    long long sine_source = 0;  // 1-based state index inside the sine
    double lipschitz = 0.0;

    // topologies + switching
    std::vector<Mat> adjacency;
    std::vector<Vec> leader_links;
    SwitchingSchedule switching;

    // schedule
    CommSchedule comm;

    // synthesis
    double beta = 0.0;
    double l = 0.0;
    double rho = 0.0;
    int max_iterations = 5000;
    double observer_weight = 10.0;
    bool require_certified = false;
    bool has_fixture = false;
    Mat fixture_p1, fixture_p2, fixture_k, fixture_g_obs;

    // simulation
    double step = 1e-3;
    double horizon = 0.0;
    std::uint64_t seed = 0;
    Vec leader_initial;
    std::string follower_init_mode = "random";  // "random" or "explicit"
    std::vector<Vec> follower_initial;
    std::string estimate_init_mode = "zero";  // "zero" or "explicit"
    std::vector<Vec> estimate_initial;
    int record_stride = 1;

    // control signs
    double leader_term_sign = 1.0;
    double neighbor_term_sign = 1.0;

    // analysis
    double tolerance = 1e-2;
    double envelope_slack = 0.05;
    double t_hat = 0.0;

    // output
    std::string out_dir = "out";
    bool plots = true;

    nlohmann::json echo;  // the validated document, for the run manifest
};

ScenarioConfig scenario_from_json(const nlohmann::json& doc);
ScenarioConfig load_scenario_config(const std::string& path);

// Follower initial states for "random" mode: uniform [-1,1]^n per follower,
// drawn agent-by-agent then component-by-component from the documented
// generator seeded with `seed`.
std::vector<Vec> draw_follower_initials(std::uint64_t seed, Eigen::Index followers,
                                        Eigen::Index n);

}  // namespace mast
