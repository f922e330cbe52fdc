#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mast/linalg.hpp"

namespace mast {

struct TopologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed interaction topology over N followers plus one leader.
// adjacency(i,j) = 1 means agent i receives information from agent j.
// leader_links(i) = 1 means agent i receives the leader state directly.
struct DirectedTopology {
    Mat adjacency;     // N x N, {0,1}, zero diagonal
    Vec leader_links;  // N, {0,1}
    Mat laplacian;     // diag(in-degree) - adjacency
    Mat pinned;        // laplacian + diag(leader_links)

    Eigen::Index agent_count() const { return adjacency.rows(); }
};

DirectedTopology build_topology(const Mat& adjacency, const Vec& leader_links);

// True iff every follower is reachable from the leader in the augmented
// digraph. Traversal based; the eigenvalue criterion (all eigenvalues of the
// pinned matrix in the open right half-plane) is kept in tests as an oracle.
bool has_directed_spanning_tree(const DirectedTopology& topology);

// Eigenvalue form of the reachability test, exposed for cross-checking.
// Threshold is relative to the matrix norm to absorb floating-point noise.
bool pinned_eigenvalues_positive(const Mat& pinned);

// Nonsingular M-matrix test: nonpositive off-diagonals required on input,
// verdict is "all eigenvalues have positive real part".
bool is_nonsingular_m_matrix(const Mat& m);

// Piecewise-constant topology switching signal. Dwell intervals are
// left-closed right-open; the sequence repeats cyclically.
struct SwitchingSchedule {
    std::vector<int> sequence;       // topology indices, 1-based
    std::vector<double> dwells;      // same length, each > 0

    double cycle_length() const;
};

int active_topology(const SwitchingSchedule& schedule, double t);

}  // namespace mast
