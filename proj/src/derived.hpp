#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graph.hpp"
#include "spectral.hpp"

namespace vel {

/// Closed-form constants of the m-splitting graph. alpha_plus/alpha_minus are
/// the roots of a^2 - a - m = 0; each base eigenvalue lambda produces the two
/// derived eigenvalues lambda * alpha_plus and lambda * alpha_minus.
struct SplittingFactors {
    std::size_t m = 1;
    double original_factor = 0.0;  // (2m+1) / sqrt(4m+1)
    double copy_factor = 0.0;      // 2 / sqrt(4m+1)
    double alpha_plus = 0.0;       // (1 + sqrt(1+4m)) / 2
    double alpha_minus = 0.0;      // (1 - sqrt(1+4m)) / 2

    static SplittingFactors for_m(std::size_t m);
};

// Both constructions use the copy-major flat order: vertex (copy c, base i)
// sits at index c * n + i. For m_splitting copy 0 is the original graph and
// copies 1..m are the added vertices; for m_shadow copies are 0..m-1.

/// Spl_m(G): m extra copies of every vertex, each adjacent to the original
/// neighbours of its base vertex only. Throws std::invalid_argument for m < 1.
Graph m_splitting(const Graph& g, std::size_t m);

/// S'(G), the same as m_splitting(g, 1).
Graph splitting_graph(const Graph& g);

/// D_m(G): m copies of G with v_{r,i} ~ v_{s,j} for every edge {i, j} and all
/// copies r, s (adjacency J_m (x) A). Throws std::invalid_argument for m < 1.
Graph m_shadow(const Graph& g, std::size_t m);

VertexLabel vertex_label(std::size_t flat_index, std::size_t base_vertex_count);
std::size_t flat_index(VertexLabel label, std::size_t base_vertex_count);

/// Labels of all vertices of a derived graph with `copies` blocks of n.
std::vector<VertexLabel> vertex_labels(std::size_t base_vertex_count, std::size_t copies);

/// {lambda * alpha_plus, lambda * alpha_minus} for each base eigenvalue, plus
/// (m-1)n zeros. Sorted ascending.
std::vector<double> predicted_splitting_spectrum(std::span<const double> base_eigenvalues, std::size_t m);

/// {m * lambda} plus (m-1)n zeros. Sorted ascending.
std::vector<double> predicted_shadow_spectrum(std::span<const double> base_eigenvalues, std::size_t m);

VertexEnergyVector predicted_splitting_vertex_energies(const VertexEnergyVector& base, std::size_t m);

/// m concatenated copies of `base`.
VertexEnergyVector predicted_shadow_vertex_energies(const VertexEnergyVector& base, std::size_t m);

}  // namespace vel
