#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace vel {

using Edge = std::pair<std::size_t, std::size_t>;

/// Raised by the text readers (edge list, graph6). Carries the 1-based line
/// and byte position of the offending input where one is known (0 otherwise).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t byte)
        : std::runtime_error(what), line_(line), byte_(byte) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t byte() const noexcept { return byte_; }

private:
    std::size_t line_;
    std::size_t byte_;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored once each as
/// (i, j) with i < j, sorted lexicographically. Immutable after construction.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(std::size_t i, std::size_t j) const;
    std::size_t degree(std::size_t v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph graph_from_edge_list(std::size_t n, const std::vector<Edge>& edges);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Position of a derived-graph vertex: copy 0 is the base (original) copy.
struct VertexLabel {
    std::size_t copy_index = 0;
    std::size_t base_index = 0;

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Canonicalizes the pair list: both orientations and repeats collapse into
/// one edge. Throws std::invalid_argument on self-loops or endpoints >= n.
Graph graph_from_edge_list(std::size_t n, const std::vector<Edge>& edges);

SymmetricMatrix adjacency_matrix(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads the "n m" header followed by m "i j" lines. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

enum class Family { path, cycle, complete, star, complete_bipartite };

/// `a` is the vertex count for path/cycle/complete, the number of leaves for
/// star, and the first side for complete_bipartite (`b` is the second side).
Graph named_graph(Family family, std::size_t a, std::size_t b = 0);

/// Vertex-disjoint union; vertices of `right` are shifted by left.vertex_count().
Graph disjoint_union(const Graph& left, const Graph& right);

}  // namespace vel
