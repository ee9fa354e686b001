#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vel {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (double x : a.data()) sum += x * x;
    return std::sqrt(sum);
}

// Annihilates work(p, q) with the rotation J = [[c, s], [-s, c]] applied as
// J^T * work * J, and accumulates vectors <- vectors * J.
void rotate(Matrix& work, Matrix& vectors, std::size_t p, std::size_t q) {
    const double apq = work(p, q);
    if (apq == 0.0) return;

    const double theta = (work(q, q) - work(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t dim = work.rows();
    for (std::size_t k = 0; k < dim; ++k) {
        const double akp = work(k, p);
        const double akq = work(k, q);
        work(k, p) = c * akp - s * akq;
        work(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < dim; ++k) {
        const double apk = work(p, k);
        const double aqk = work(q, k);
        work(p, k) = c * apk - s * aqk;
        work(q, k) = s * apk + c * aqk;
    }
    work(p, q) = 0.0;
    work(q, p) = 0.0;

    for (std::size_t k = 0; k < dim; ++k) {
        const double vkp = vectors(k, p);
        const double vkq = vectors(k, q);
        vectors(k, p) = c * vkp - s * vkq;
        vectors(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

Spectrum eigendecompose_symmetric(const SymmetricMatrix& a, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("eigensolver tolerance must be positive");

    const std::size_t dim = a.dim();
    Matrix work = a.dense();
    Matrix vectors = Matrix::identity(dim);
    const double threshold = tol * frobenius_norm(work);

    int sweep = 0;
    while (off_diagonal_norm(work) > threshold) {
        if (sweep == kMaxJacobiSweeps) {
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(kMaxJacobiSweeps) +
                                   " sweeps (dim " + std::to_string(dim) + ")");
        }
        for (std::size_t p = 0; p + 1 < dim; ++p)
            for (std::size_t q = p + 1; q < dim; ++q) rotate(work, vectors, p, q);
        ++sweep;
    }

    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&work](std::size_t x, std::size_t y) { return work(x, x) < work(y, y); });

    Spectrum out;
    out.eigenvalues.resize(dim);
    out.eigenvectors = Matrix(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        out.eigenvalues[col] = work(order[col], order[col]);
        for (std::size_t row = 0; row < dim; ++row) out.eigenvectors(row, col) = vectors(row, order[col]);
    }
    return out;
}

VertexEnergyVector vertex_energies(const Spectrum& s) {
    const std::size_t dim = s.dim();
    VertexEnergyVector out{std::vector<double>(dim, 0.0)};
    for (std::size_t k = 0; k < dim; ++k) {
        double energy = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double u = s.eigenvectors(k, i);
            energy += std::abs(s.eigenvalues[i]) * u * u;
        }
        if (energy < 0.0 && energy >= -kEnergyClamp) energy = 0.0;
        out.values[k] = energy;
    }
    return out;
}

double graph_energy(const Spectrum& s) {
    double total = 0.0;
    for (double lambda : s.eigenvalues) total += std::abs(lambda);
    return total;
}

VertexEnergyVector matrix_abs_diagonal(const Spectrum& s) {
    const std::size_t dim = s.dim();
    Matrix abs_a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double weight = std::abs(s.eigenvalues[i]);
        for (std::size_t r = 0; r < dim; ++r) {
            const double ur = weight * s.eigenvectors(r, i);
            for (std::size_t c = 0; c < dim; ++c) abs_a(r, c) += ur * s.eigenvectors(c, i);
        }
    }
    VertexEnergyVector out{std::vector<double>(dim, 0.0)};
    for (std::size_t k = 0; k < dim; ++k) {
        double d = abs_a(k, k);
        if (d < 0.0 && d >= -kEnergyClamp) d = 0.0;
        out.values[k] = d;
    }
    return out;
}

}  // namespace vel
