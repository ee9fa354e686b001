#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace vel {

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;
/// Energies in [-kEnergyClamp, 0) are solver noise and are reported as 0.
inline constexpr double kEnergyClamp = 1e-12;

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvalues in ascending order; column i of `eigenvectors` is the unit
/// eigenvector belonging to eigenvalues[i].
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;

    std::size_t dim() const noexcept { return eigenvalues.size(); }
};

struct VertexEnergyVector {
    std::vector<double> values;

    double sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }
    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t k) const { return values[k]; }

    friend bool operator==(const VertexEnergyVector&, const VertexEnergyVector&) = default;
};

/// Cyclic Jacobi eigensolver. Sweeps every off-diagonal pair in row order
/// until the off-diagonal Frobenius norm is at most tol times the Frobenius
/// norm of `a`. Throws ConvergenceError after kMaxJacobiSweeps sweeps and
/// std::invalid_argument for tol <= 0.
Spectrum eigendecompose_symmetric(const SymmetricMatrix& a, double tol = kDefaultEigenTolerance);

/// values[k] = sum_i |lambda_i| * U(k, i)^2.
VertexEnergyVector vertex_energies(const Spectrum& s);

/// Sum of absolute eigenvalues.
double graph_energy(const Spectrum& s);

/// Diagonal of |A| = sum_i |lambda_i| u_i u_i^T, assembled as a full matrix
/// from outer products. Shares no code with vertex_energies() and serves as
/// its basis-invariant cross-check.
VertexEnergyVector matrix_abs_diagonal(const Spectrum& s);

}  // namespace vel
