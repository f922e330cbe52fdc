#pragma once

#include <optional>
#include <vector>

#include "mast/coupling.hpp"
#include "mast/dynamics.hpp"
#include "mast/linalg.hpp"
#include "mast/synthesis.hpp"

namespace mast {

struct ConvergenceReport {
    double final_tracking_error = 0.0;  // max_i ||e_i(T)||
    double final_observer_error = 0.0;  // max_i ||psi_i(T)||
    std::optional<double> time_to_tolerance;
    int envelope_violations = 0;
    std::vector<double> per_period_V;  // V(kw) samples present in the trace
    bool per_period_recursion_holds = true;
};

// V = sum_i (PiXi)_ii (e_i' P1^{-1} e_i + psi_i' P2^{-1} psi_i), accumulated
// block-wise instead of materializing the Kronecker form.
double lyapunov_value(const std::vector<Vec>& e, const std::vector<Vec>& psi,
                      const CouplingWeights& weights, const Mat& P1, const Mat& P2);

// Hot-loop variant with the inverses and the diagonal weight precomputed.
double lyapunov_value_inv(const std::vector<Vec>& e, const std::vector<Vec>& psi,
                          const Vec& pixi_diag, const Mat& P1inv, const Mat& P2inv);

// Counts V(t) > omega0 V(0) e^{-omega1 t} (1+slack) over the trace and checks the
// per-period contraction V((k+1)w) <= V(0) exp(-sum_j upsilon_j). Report-only.
ConvergenceReport envelope_check(const SimulationTrace& trace, const RateReport& rates, double w,
                                 double slack = 0.05);

ConvergenceReport consensus_metrics(const SimulationTrace& trace, double tol);

}  // namespace mast
