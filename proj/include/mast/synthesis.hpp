#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mast/coupling.hpp"
#include "mast/linalg.hpp"

namespace mast {

struct SynthesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verdict for one assembled symmetric LMI block.
struct LmiReport {
    Mat block;          // symmetrized stacked block
    double lambda_max;  // top eigenvalue
    bool feasible;      // lambda_max < 0
};

// feasibility of [[A P1 + P1 A' + rho^2 I + beta P1 - beta(1 - l/2) B B', P1],
//                 [P1, -I]]
LmiReport check_lmi_q1(const Mat& P1, const Mat& B, const Mat& A, double beta, double l,
                       double rho);

// feasibility of [[A P2 + P2 A' + rho^2 I + Qbar + Qbar' + beta P2, P2, M'],
//                 [P2, -I, 0],
//                 [M, 0, -2 l/beta I]]
LmiReport check_lmi_q2(const Mat& P2, const Mat& M, const Mat& Qbar, const Mat& A, double beta,
                       double l, double rho);

struct Q34 {
    Mat q3;  // A P1 + P1 A' + rho^2 I + P1' P1
    Mat q4;  // A P2 + P2 A' + rho^2 I + Qbar + Qbar' + P2' P2
};

Q34 q3_q4(const Mat& P1, const Mat& P2, const Mat& Qbar, const Mat& A, double rho);

// K = -B' P1^{-1}
Mat feedback_gain(const Mat& P1, const Mat& B);

// Gain certificates for one synthesis problem. M and Qbar are the coupled
// auxiliary matrices M = K P2, Qbar = G_obs C P2.
struct GainSet {
    Mat K;      // m x n feedback gain
    Mat G_obs;  // n x z observer output-injection gain
    Mat P1;     // n x n symmetric positive definite
    Mat P2;     // n x n symmetric positive definite
    Mat M;
    Mat Qbar;
    double beta = 0.0;
    double l = 0.0;
    double rho = 0.0;
    std::vector<Mat> gamma_per_topology;
};

struct SynthesisOptions {
    int max_iterations = 5000;
    double tolerance = -1e-6;  // accept when block lambda_max falls below this
    bool warm_starts = true;   // seed the first-order search from quadratic-equation solutions
    double observer_weight = 10.0;  // noise weight of the stabilizing fallback observer design
    double condition_cap = 1e6;     // eigenvalue spread cap for projected iterates
};

struct SynthesisReport {
    GainSet gains;
    bool q1_feasible = false;
    bool q2_feasible = false;
    double q1_lambda_max = 0.0;  // best block top-eigenvalue reached
    double q2_lambda_max = 0.0;
    int q1_iterations = 0;
    int q2_iterations = 0;
    bool observer_fallback = false;  // G_obs from the stabilizing design, not a certificate
    bool stabilizable = true;        // eigenvector rank test on unstable modes
    std::string notes;

    bool certified() const { return q1_feasible && q2_feasible; }
};

// First-order certificate search. Never throws on infeasibility: the report
// carries the best lambda_max found for each block.
SynthesisReport synthesize_gains(const Mat& A, const Mat& B, const Mat& C, double beta, double l,
                                 double rho, const SynthesisOptions& options = {});

// Checks provided certificates without searching, assembling the same report.
// Missing M / Qbar are derived from K, G_obs, C, P2.
SynthesisReport check_gain_set(const Mat& A, const Mat& B, const Mat& C, const GainSet& gains);

// Blocks of the extended three-mode protocol. m1/m2 mirror q1/q2 in the primed
// certificates; m3 = m5 - beta(1 - l/2) B B'; m4 = m6; m5/m6 mirror q3/q4.
struct MBlockReport {
    Mat m1, m2, m3, m4, m5, m6;
    double m1_lambda_max = 0.0;
    double m2_lambda_max = 0.0;
    bool feasible = false;   // m1 and m2 both negative definite
    double l_hat_prime = 0.0;  // lambda_max(m3,m4) * lambda_max(P1^{-1},P2^{-1})
    double chi_hat = 0.0;      // lambda_max(m5,m6) * lambda_max(P1^{-1},P2^{-1})
};

MBlockReport check_lmi_m_blocks(const Mat& P1p, const Mat& P2p, const Mat& Qbarp, const Mat& Mp,
                                const Mat& A, const Mat& B, double beta, double l, double rho);

// Communication pattern of the periodic schedule. delta[j] is the listening
// window in period j; h[j] (three-mode only) is the offset where even
// follower-to-follower links drop. Single-entry vectors repeat every period.
struct CommPattern {
    double w = 0.0;
    std::vector<double> delta;
    std::vector<double> h;  // empty selects the two-mode analysis
    double t_hat = 0.0;     // right-hand threshold of the three-mode duration condition
};

struct RateReport {
    double gamma_hat_min = 0.0;
    double gamma_hat_max = 0.0;
    double l_hat = 0.0;
    std::optional<double> chi_hat;  // three-mode only
    double delta_threshold_max = 0.0;  // lower bound required of sup_j delta_j
    double delta_threshold_min = 0.0;  // lower bound required of inf_j delta_j
    double eta_min = 0.0;
    double eta_max = 0.0;
    double omega0 = 0.0;  // envelope prefactor, stated per unit V(0)
    double omega1 = 0.0;  // envelope decay rate
    std::vector<double> upsilon;  // per-period exponents
    bool duration_condition_holds = false;
};

RateReport rate_quantities(const Mat& A, const Mat& B, const GainSet& gains,
                           const std::vector<CouplingWeights>& weights,
                           const CommPattern& pattern);

}  // namespace mast
