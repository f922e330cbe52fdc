#pragma once

#include <Eigen/Dense>
#include <optional>

namespace mast {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline Mat sym(const Mat& x) { return 0.5 * (x + x.transpose()); }

// Largest eigenvalue of a symmetric matrix. Input is symmetrized first so a
// few ulps of assembly noise cannot push the solver off the selfadjoint path.
inline double lambda_max(const Mat& x) {
    Eigen::SelfAdjointEigenSolver<Mat> es(sym(x), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

inline double lambda_min(const Mat& x) {
    Eigen::SelfAdjointEigenSolver<Mat> es(sym(x), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

inline bool is_positive_definite(const Mat& x, double tol = 0.0) {
    return lambda_min(x) > tol;
}

inline bool is_symmetric(const Mat& x, double tol = 1e-12) {
    if (x.rows() != x.cols()) return false;
    return (x - x.transpose()).cwiseAbs().maxCoeff() <= tol;
}

// Sylvester test: a symmetric matrix is positive definite iff every leading
// principal minor is positive. Slower than the eigenvalue route but names the
// first failing minor, which is what certificate audits want.
inline bool leading_minors_positive(const Mat& x, Eigen::Index* first_failing = nullptr) {
    for (Eigen::Index k = 1; k <= x.rows(); ++k) {
        if (x.topLeftCorner(k, k).determinant() <= 0.0) {
            if (first_failing) *first_failing = k;
            return false;
        }
    }
    if (first_failing) *first_failing = 0;
    return true;
}

// Moore-Penrose pseudoinverse with singular values below cutoff truncated.
inline Mat pinv(const Mat& x, double sv_cutoff = 1e-10) {
    Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    Vec inv = Vec::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > sv_cutoff) inv(i) = 1.0 / sv(i);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

// Project a symmetric matrix onto {P : P = P', eigenvalues >= floor} and,
// when cond_cap > 0, additionally clip eigenvalues below lambda_max/cond_cap.
// The conditioning clip keeps first-order LMI iterates away from the
// near-singular corners where recovered gains blow up.
inline Mat project_pd(const Mat& x, double floor_ev = 1e-10, double cond_cap = 0.0) {
    Eigen::SelfAdjointEigenSolver<Mat> es(sym(x));
    Vec ev = es.eigenvalues();
    double lo = floor_ev;
    if (cond_cap > 0.0) lo = std::max(lo, ev.maxCoeff() / cond_cap);
    for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::max(ev(i), lo);
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

// Stabilizing solution of X*Abar + Abar'*X + X*R*X + Q = 0 via the stable
// invariant subspace of the Hamiltonian [[Abar, R], [-Q, -Abar']].
// Returns nothing when the Hamiltonian has eigenvalues on the imaginary axis
// or the subspace basis is rank-deficient (no stabilizing solution).
std::optional<Mat> solve_quadratic_matrix_eq(const Mat& Abar, const Mat& R, const Mat& Q);

// Solve A*P + P*A' = -Q for symmetric P (small dense Kronecker formulation).
Mat solve_lyapunov(const Mat& A, const Mat& Q);

}  // namespace mast
