#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mast/coupling.hpp"
#include "mast/graph.hpp"
#include "mast/linalg.hpp"
#include "mast/synthesis.hpp"

namespace mast {

struct DynamicsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlantModel {
    Mat A;  // n x n
    Mat B;  // n x m
    Mat C;  // z x n
    std::function<Vec(const Vec&)> f;  // pure state-dependent drift
    double lipschitz = 0.0;            // bound on the drift increment ratio

    Eigen::Index state_dim() const { return A.rows(); }
    Eigen::Index input_dim() const { return B.cols(); }
    Eigen::Index output_dim() const { return C.rows(); }
};

// Registry entries for the config-selectable nonlinearity.
std::function<Vec(const Vec&)> zero_nonlinearity();
// amplitude * sin(x[source]) written into component target (0-based indices).
std::function<Vec(const Vec&)> sine_channel_nonlinearity(Eigen::Index n, Eigen::Index target,
                                                         Eigen::Index source, double amplitude);

// Periodic communication pattern. Lists longer than one entry vary per period
// and repeat cyclically; a single entry is constant.
struct CommSchedule {
    double w = 0.0;
    std::vector<double> delta;
    std::vector<double> h;  // empty selects the two-mode schedule

    bool three_mode() const { return !h.empty(); }
    double delta_at(std::size_t period) const { return delta[period % delta.size()]; }
    double h_at(std::size_t period) const { return h[period % h.size()]; }
    void validate() const;
};

enum class CommMode { listen, partial, silent };

const char* comm_mode_name(CommMode mode);  // "Tm", "Tq", "Tn"

// Mode at continuous time t, left-closed right-open intervals. Queries within
// 1e-9 w of a boundary resolve to the interval that starts there.
CommMode comm_mode(const CommSchedule& schedule, double t);

struct SystemState {
    Vec leader_state;
    std::vector<Vec> follower_states;
    std::vector<Vec> estimates;
    double t = 0.0;
};

// Protocol weights applied to the communicated estimate differences. The
// verbatim protocol uses +1 for both terms; the convergent closed loop under a
// stabilizing feedback gain needs the neighbor difference flipped, which the
// scenario configs record explicitly.
struct ProtocolSigns {
    double leader = 1.0;
    double neighbor = 1.0;
};

Vec control_input(Eigen::Index i, const SystemState& state, const GainSet& gains,
                  const DirectedTopology& topology, const Mat& gamma, CommMode mode,
                  const ProtocolSigns& signs = {});

// Leader drift plus follower drifts; inputs has one column per follower.
void plant_derivative(const SystemState& state, const Mat& inputs, const PlantModel& plant,
                      Vec& leader_dot, std::vector<Vec>& follower_dots);

// Observer drifts; the correction term runs in every mode.
void observer_derivative(const SystemState& state, const Mat& inputs, const PlantModel& plant,
                         const Mat& G_obs, std::vector<Vec>& estimate_dots);

struct SimulationScenario {
    PlantModel plant;
    std::vector<DirectedTopology> topologies;
    std::vector<Mat> gamma;  // one coupling gain matrix per topology
    std::vector<CouplingWeights> weights;
    SwitchingSchedule switching;
    CommSchedule comm;
    GainSet gains;
    Vec leader_initial;
    std::vector<Vec> follower_initial;
    std::vector<Vec> estimate_initial;
    double step = 1e-3;
    double horizon = 0.0;
    ProtocolSigns signs;
    double divergence_threshold = 1e9;
    int record_stride = 1;  // every k-th grid point lands in the trace; the final point always does
};

struct SimulationTrace {
    Eigen::Index n = 0;
    Eigen::Index m = 0;
    Eigen::Index follower_count = 0;
    std::vector<double> t;
    std::vector<CommMode> mode;
    std::vector<int> topology;  // 1-based schedule indices
    Mat leader;                 // rows = samples
    std::vector<Mat> followers;
    std::vector<Mat> estimates;
    std::vector<Mat> errors;           // e_i = x_i - x0
    std::vector<Mat> observer_errors;  // psi_i = xhat_i - x_i
    std::vector<Mat> inputs;           // u_i held from the sample instant
    std::vector<double> lyapunov;
    bool diverged = false;
    std::string diagnostic;

    std::size_t samples() const { return t.size(); }
};

// Fixed-step classical RK4 over the stacked leader/follower/observer state.
// Mode and topology are frozen over each step; the feedback law is evaluated
// at every internal stage. All switching instants must lie on the step grid.
SimulationTrace simulate(const SimulationScenario& scenario);

}  // namespace mast
