#pragma once

// Test-only reference computations. Nothing here calls the Jacobi solver or
// the derived-graph constructors; spectra and |A| come from Eigen's
// self-adjoint solver.

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"

namespace vel::testing {

inline Eigen::MatrixXd to_eigen(const Matrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

inline Eigen::MatrixXd adjacency_from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [i, j] : edges) a(i, j) = a(j, i) = 1.0;
    return a;
}

inline std::vector<double> reference_eigenvalues(const Eigen::MatrixXd& a) {
    if (a.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& v = solver.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

/// diag(V |L| V^T) from Eigen's self-adjoint solver.
inline std::vector<double> reference_vertex_energies(const Eigen::MatrixXd& a) {
    if (a.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    const Eigen::MatrixXd& v = solver.eigenvectors();
    const Eigen::MatrixXd abs_a = v * solver.eigenvalues().cwiseAbs().asDiagonal() * v.transpose();
    std::vector<double> out(a.rows());
    for (Eigen::Index k = 0; k < a.rows(); ++k) out[k] = abs_a(k, k);
    return out;
}

inline Eigen::MatrixXd kronecker(const Eigen::MatrixXd& left, const Eigen::MatrixXd& right) {
    Eigen::MatrixXd out(left.rows() * right.rows(), left.cols() * right.cols());
    for (Eigen::Index i = 0; i < left.rows(); ++i)
        for (Eigen::Index j = 0; j < left.cols(); ++j)
            out.block(i * right.rows(), j * right.cols(), right.rows(), right.cols()) = left(i, j) * right;
    return out;
}

/// [[A, 1_{1xm} (x) A], [1_{mx1} (x) A, 0]].
inline Eigen::MatrixXd splitting_block_matrix(const Eigen::MatrixXd& a, std::size_t m) {
    const Eigen::Index n = a.rows();
    const auto mi = static_cast<Eigen::Index>(m);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero((mi + 1) * n, (mi + 1) * n);
    b.topLeftCorner(n, n) = a;
    b.topRightCorner(n, mi * n) = kronecker(Eigen::MatrixXd::Ones(1, mi), a);
    b.bottomLeftCorner(mi * n, n) = kronecker(Eigen::MatrixXd::Ones(mi, 1), a);
    return b;
}

/// J_m (x) A.
inline Eigen::MatrixXd shadow_kronecker_matrix(const Eigen::MatrixXd& a, std::size_t m) {
    const auto mi = static_cast<Eigen::Index>(m);
    return kronecker(Eigen::MatrixXd::Ones(mi, mi), a);
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double max_abs_difference(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = a.size() == b.size() ? 0.0 : INFINITY;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

}  // namespace vel::testing
