#pragma once

#include <stdexcept>
#include <vector>

#include "mast/graph.hpp"
#include "mast/linalg.hpp"

namespace mast {

struct CouplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-topology weight chain. gamma solves (L+D)gamma = I, xi and pi are
// positive diagonal, phi = pi xi Lhat + Lhatᵀ pi xi with Lhat = (L+D)gamma,
// lambda = Xibar⁻¹ phi Xibar⁻¹ with Xibar = sqrt(pi xi).
struct CouplingWeights {
    Mat gamma;
    Mat xi;
    Mat pi;
    Mat phi;
    Mat lambda;
    double beta = 0.0;  // 0.99 * lambda_min(lambda) for this topology
};

// gamma = pinned⁻¹, the minimal solution of (L+D)gamma = I.
Mat coupling_gains(const DirectedTopology& topology);

CouplingWeights weight_chain(const DirectedTopology& topology, const Mat& gamma);

// 0.99 * min over topologies of lambda_min(lambda).
double beta_bound(const std::vector<CouplingWeights>& weights);

}  // namespace mast
