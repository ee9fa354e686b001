#include "derived.hpp"

#include <algorithm>
#include <cmath>

namespace vel {

namespace {

void require_copies(std::size_t m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
}

}  // namespace

SplittingFactors SplittingFactors::for_m(std::size_t m) {
    require_copies(m);
    const double md = static_cast<double>(m);
    const double root = std::sqrt(1.0 + 4.0 * md);
    SplittingFactors f;
    f.m = m;
    f.original_factor = (2.0 * md + 1.0) / root;
    f.copy_factor = 2.0 / root;
    f.alpha_plus = (1.0 + root) / 2.0;
    f.alpha_minus = (1.0 - root) / 2.0;
    return f;
}

Graph m_splitting(const Graph& g, std::size_t m) {
    require_copies(m);
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    edges.reserve((2 * m + 1) * g.edge_count());
    for (std::size_t c = 1; c <= m; ++c) {
        for (auto [i, j] : g.edges()) {
            edges.emplace_back(c * n + i, j);
            edges.emplace_back(c * n + j, i);
        }
    }
    return graph_from_edge_list((m + 1) * n, edges);
}

Graph splitting_graph(const Graph& g) { return m_splitting(g, 1); }

Graph m_shadow(const Graph& g, std::size_t m) {
    require_copies(m);
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(m * m * g.edge_count());
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = r; s < m; ++s) {
            for (auto [i, j] : g.edges()) {
                edges.emplace_back(r * n + i, s * n + j);
                if (r != s) edges.emplace_back(s * n + i, r * n + j);
            }
        }
    }
    return graph_from_edge_list(m * n, edges);
}

VertexLabel vertex_label(std::size_t flat, std::size_t n) {
    if (n == 0) throw std::invalid_argument("base graph has no vertices");
    return {flat / n, flat % n};
}

std::size_t flat_index(VertexLabel label, std::size_t n) {
    if (label.base_index >= n) throw std::invalid_argument("base index out of range");
    return label.copy_index * n + label.base_index;
}

std::vector<VertexLabel> vertex_labels(std::size_t n, std::size_t copies) {
    std::vector<VertexLabel> out;
    out.reserve(n * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < n; ++i) out.push_back({c, i});
    return out;
}

std::vector<double> predicted_splitting_spectrum(std::span<const double> base, std::size_t m) {
    const auto f = SplittingFactors::for_m(m);
    std::vector<double> out;
    out.reserve((m + 1) * base.size());
    for (double lambda : base) {
        out.push_back(lambda * f.alpha_plus);
        out.push_back(lambda * f.alpha_minus);
    }
    out.insert(out.end(), (m - 1) * base.size(), 0.0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> predicted_shadow_spectrum(std::span<const double> base, std::size_t m) {
    require_copies(m);
    const double md = static_cast<double>(m);
    std::vector<double> out;
    out.reserve(m * base.size());
    for (double lambda : base) out.push_back(md * lambda);
    out.insert(out.end(), (m - 1) * base.size(), 0.0);
    std::sort(out.begin(), out.end());
    return out;
}

VertexEnergyVector predicted_splitting_vertex_energies(const VertexEnergyVector& base, std::size_t m) {
    const auto f = SplittingFactors::for_m(m);
    VertexEnergyVector out;
    out.values.reserve((m + 1) * base.size());
    for (double e : base.values) out.values.push_back(f.original_factor * e);
    for (std::size_t c = 1; c <= m; ++c)
        for (double e : base.values) out.values.push_back(f.copy_factor * e);
    return out;
}

VertexEnergyVector predicted_shadow_vertex_energies(const VertexEnergyVector& base, std::size_t m) {
    require_copies(m);
    VertexEnergyVector out;
    out.values.reserve(m * base.size());
    for (std::size_t r = 0; r < m; ++r) out.values.insert(out.values.end(), base.values.begin(), base.values.end());
    return out;
}

}  // namespace vel
